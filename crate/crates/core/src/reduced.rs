//! Reduced resultants and reduced discriminants of truncated systems,
//! computed from the lowest piece of the resultant in the Zariski grading.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::discriminant::discriminant_value;
use crate::error::{ElimError, Result};
use crate::interp::{interpolate, interpolate_dense, sample_at_integer_nodes};
use crate::linalg::{primitive_integer_vector, reduce_vector, to_rational_matrix};
use crate::poly::{monomials_of_degree, ExponentVector, LinearPoint, Polynomial};
use crate::random::{random_form_where, random_int, seeded_rng};
use crate::rational::{exact_root, int};
use crate::resultant::{
    macaulay_resultant, parametric_resultant, sylvester_resultant_with_degrees, FormSystem,
};
use crate::Rational;

/// Truncation of a degree `d` form at order `d - s` in the variable `x_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TruncationSpec {
    pub d: u32,
    pub s: u32,
    pub k: usize,
}

impl TruncationSpec {
    pub fn new(d: u32, s: u32) -> Result<Self> {
        Self::with_variable(d, s, 0)
    }

    pub fn with_variable(d: u32, s: u32, k: usize) -> Result<Self> {
        if s == 0 || s > d {
            return Err(ElimError::InvalidInput(format!(
                "truncation order must satisfy 1 <= s <= d, got s={s}, d={d}"
            )));
        }
        Ok(TruncationSpec { d, s, k })
    }

    /// Zariski weight `max(0, α_k - d + s)` of a coefficient slot.
    pub fn weight(&self, alpha: &ExponentVector) -> u32 {
        (alpha.get(self.k) + self.s).saturating_sub(self.d)
    }

    pub fn is_strict(&self) -> bool {
        self.s < self.d
    }
}

/// Truncated forms `h_j` with their truncation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSystem {
    truncations: Vec<Polynomial>,
    specs: Vec<TruncationSpec>,
}

impl TruncatedSystem {
    pub fn new(truncations: Vec<Polynomial>, specs: Vec<TruncationSpec>) -> Result<Self> {
        let n = truncations.len();
        if specs.len() != n || n < 2 {
            return Err(ElimError::InvalidInput(
                "need one truncation spec per form and at least two forms".into(),
            ));
        }
        let k = specs[0].k;
        if specs.iter().any(|s| s.k != k) || k >= n {
            return Err(ElimError::InvalidInput(
                "all truncations must share a valid distinguished variable".into(),
            ));
        }
        for (h, spec) in truncations.iter().zip(&specs) {
            if h.nvars() != n {
                return Err(ElimError::NvarsMismatch {
                    expected: n,
                    found: h.nvars(),
                });
            }
            if !h.is_zero() && h.homogeneous_total_degree() != Some(spec.d) {
                return Err(ElimError::NotHomogeneous(format!(
                    "{h} (expected degree {})",
                    spec.d
                )));
            }
            if h.terms().any(|(e, _)| spec.weight(e) > 0) {
                return Err(ElimError::InvalidInput(format!(
                    "{h} has terms of order below {} at the base point",
                    spec.s
                )));
            }
        }
        Ok(TruncatedSystem { truncations, specs })
    }

    pub fn truncations(&self) -> &[Polynomial] {
        &self.truncations
    }

    pub fn specs(&self) -> &[TruncationSpec] {
        &self.specs
    }

    fn degrees(&self) -> Vec<u32> {
        self.specs.iter().map(|s| s.d).collect()
    }

    fn orders(&self) -> Vec<u32> {
        self.specs.iter().map(|s| s.s).collect()
    }

    fn strict_indices(&self) -> Vec<usize> {
        (0..self.specs.len())
            .filter(|&j| self.specs[j].is_strict())
            .collect()
    }
}

/// Value returned by the reduced-resultant algorithm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedValue {
    /// `Red(h)^exponent`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    pub exponent: u32,
    /// Exact `exponent`-th root of `value`, when it exists. For even
    /// exponents the non-negative root is given.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub root: Option<Rational>,
    /// All coefficients below `s_1 ... s_{n+1}` vanish.
    pub lower_terms_zero: bool,
    pub valuation_degree: u64,
    /// `Res(g)` of the filler system; zero when `Res(g)` vanishes for every
    /// draw and the value was obtained by deforming `h`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub res_g: Rational,
    /// With a single strict truncation `j`: the resultant of the other
    /// truncations, taken in the variables other than `x_k`.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub single_strict_clause: Option<Rational>,
}

impl ReducedValue {
    /// The reduced resultant itself; fails if the root is not rational.
    pub fn reduced(&self) -> Result<Rational> {
        self.root.clone().ok_or_else(|| ElimError::InexactRoot {
            value: crate::rational::format_rational(&self.value),
            exponent: self.exponent,
        })
    }
}

const REDRAW_LIMIT: usize = 10;
const FILLER_BOUND: i64 = 9;

/// One term with positive Zariski weight, with its random coefficient.
struct Filler {
    form: usize,
    weight: u32,
    alpha: ExponentVector,
    coeff: Rational,
}

fn draw_fillers(system: &TruncatedSystem, rng: &mut impl rand::Rng) -> Vec<Filler> {
    let n = system.truncations.len();
    let mut out = Vec::new();
    for (j, spec) in system.specs.iter().enumerate() {
        for alpha in monomials_of_degree(n, spec.d) {
            let w = spec.weight(&alpha);
            if w > 0 {
                out.push(Filler {
                    form: j,
                    weight: w,
                    alpha,
                    coeff: int(random_int(rng, FILLER_BOUND)),
                });
            }
        }
    }
    out
}

/// The degree-`s_j` forms `g_j`: the slots of order at most `s_j`, divided by
/// `x_k^{d_j - s_j}`.
fn lowered_forms(system: &TruncatedSystem, fillers: &[Filler]) -> Vec<Polynomial> {
    let n = system.truncations.len();
    system
        .specs
        .iter()
        .enumerate()
        .map(|(j, spec)| {
            let mut shift = vec![0; n];
            shift[spec.k] = spec.d - spec.s;
            let shift = ExponentVector::new(shift);
            let mut g = Polynomial::zero(n);
            for (e, c) in system.truncations[j].terms() {
                if let Some(low) = e.checked_sub(&shift) {
                    g.add_term(low, c.clone());
                }
            }
            for f in fillers.iter().filter(|f| f.form == j) {
                g.add_term(f.alpha.checked_sub(&shift).expect("positive weight slot"), f.coeff.clone());
            }
            g
        })
        .collect()
}

/// Lowest Zariski-graded coefficient of the resultant divided by `Res(g)`,
/// or `None` when `Res(g)` vanished for every filler draw.
fn graded_value(system: &TruncatedSystem, seed: u64) -> Result<Option<(Rational, Rational)>> {
    let degrees = system.degrees();
    let orders = system.orders();
    let n = degrees.len();
    let mut rng = seeded_rng(seed, 0x7ed5);
    let mut found = None;
    for _ in 0..REDRAW_LIMIT {
        let fillers = draw_fillers(system, &mut rng);
        let g = lowered_forms(system, &fillers);
        let res_g = macaulay_resultant(&FormSystem::with_degrees(g, orders.clone())?)?;
        if !res_g.is_zero() {
            found = Some((fillers, res_g));
            break;
        }
    }
    let Some((fillers, res_g)) = found else {
        return Ok(None);
    };

    let bound: u64 = (0..n)
        .map(|k| {
            orders[k] as u64
                * (0..n)
                    .filter(|&j| j != k)
                    .map(|j| degrees[j] as u64)
                    .product::<u64>()
        })
        .sum();
    let valuation_degree = product(&orders);

    let pv = parametric_resultant(bound as usize, |t| {
        let mut forms = system.truncations.clone();
        for f in &fillers {
            let c = &f.coeff * num_traits::pow(t.clone(), f.weight as usize);
            forms[f.form].add_term(f.alpha.clone(), c);
        }
        FormSystem::with_degrees(forms, degrees.clone())
    })?;
    if let Some(i) = (0..valuation_degree as usize).find(|&i| !pv.coeff(i).is_zero()) {
        return Err(ElimError::Internal(format!(
            "resultant has a nonzero term of degree {i} below {valuation_degree}"
        )));
    }
    Ok(Some((pv.coeff(valuation_degree as usize) / &res_g, res_g)))
}

/// `Red(h)^e` through the line `h + εk` with a random truncated system `k`:
/// a polynomial in `ε` of degree at most `e · Σ deg_i Red`, sampled where
/// `Res(g)` does not vanish and evaluated at `ε = 0`.
fn deformed_value(system: &TruncatedSystem, exponent: u32, seed: u64) -> Result<Rational> {
    let degrees = system.degrees();
    let orders = system.orders();
    let n = degrees.len();
    let bound = exponent as u64
        * (0..n)
            .map(|i| redres_degree(i, &degrees, &orders))
            .sum::<Result<u64>>()?;
    let mut rng = seeded_rng(seed, 0xdef0);
    let direction: Vec<Polynomial> = system
        .specs
        .iter()
        .map(|spec| random_form_where(&mut rng, n, spec.d, FILLER_BOUND, |e| spec.weight(e) == 0))
        .collect();
    let samples = sample_at_integer_nodes(bound as usize + 2, 1, 4 * bound as usize + 8, |eps| {
        let forms = system
            .truncations
            .iter()
            .zip(&direction)
            .map(|(h, k)| h + &k.scale(eps))
            .collect();
        let moved = TruncatedSystem::new(forms, system.specs.clone())?;
        Ok(graded_value(&moved, seed)?.map(|(v, _)| v))
    })?;
    let p = interpolate(&samples)?;
    if p.degree().is_some_and(|d| d as u64 > bound) {
        return Err(ElimError::InterpolationFailed(format!(
            "deformation has degree above the bound {bound}"
        )));
    }
    Ok(p.coeff(0))
}

/// Reduced resultant of a specialized truncated system.
pub fn reduced_resultant(system: &TruncatedSystem, seed: u64) -> Result<ReducedValue> {
    let strict = system.strict_indices();
    if strict.is_empty() {
        return Err(ElimError::InvalidInput(
            "at least one truncation must be strict".into(),
        ));
    }
    let (exponent, single_strict_clause) = if strict.len() == 1 {
        let j = strict[0];
        let spec = system.specs[j];
        (spec.d - spec.s, Some(single_strict_resultant(system, j)?))
    } else {
        (1, None)
    };
    let (value, res_g) = match graded_value(system, seed)? {
        Some(found) => found,
        None => (deformed_value(system, exponent, seed)?, Rational::zero()),
    };
    let root = exact_root(&value, exponent);
    Ok(ReducedValue {
        value,
        exponent,
        root,
        lower_terms_zero: true,
        valuation_degree: product(&system.orders()),
        res_g,
        single_strict_clause,
    })
}

/// Resultant of the truncations other than `j`, as forms in the variables
/// other than `x_k`.
fn single_strict_resultant(system: &TruncatedSystem, j: usize) -> Result<Rational> {
    let k = system.specs[0].k;
    let mut forms = Vec::new();
    let mut degrees = Vec::new();
    for (i, (h, spec)) in system.truncations.iter().zip(&system.specs).enumerate() {
        if i == j {
            continue;
        }
        forms.push(h.specialize_var(k, &Rational::zero())?);
        degrees.push(spec.d);
    }
    macaulay_resultant(&FormSystem::with_degrees(forms, degrees)?)
}

/// Reduced discriminant `rRes(∂h, h) / (Disc(f_d) · Disc(f_s))` of a form of
/// order `s` at the base point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedDiscriminant {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    pub reduced_resultant: ReducedValue,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_top: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_tangent_cone: Rational,
}

pub fn reduced_discriminant(h: &Polynomial, spec: TruncationSpec, seed: u64) -> Result<ReducedDiscriminant> {
    let n = h.nvars();
    if n < 2 {
        return Err(ElimError::InvalidInput("need at least two variables".into()));
    }
    if spec.s < 2 || spec.s + 1 > spec.d {
        return Err(ElimError::InvalidInput(format!(
            "reduced discriminant needs 2 <= s <= d-1, got s={}, d={}",
            spec.s, spec.d
        )));
    }
    let k = spec.k;
    let mut forms = Vec::with_capacity(n);
    let mut specs = Vec::with_capacity(n);
    for i in (0..n).filter(|&i| i != k) {
        forms.push(h.partial_derivative(i)?);
        specs.push(TruncationSpec::with_variable(spec.d - 1, spec.s - 1, k)?);
    }
    forms.push(h.clone());
    specs.push(spec);
    let system = TruncatedSystem::new(forms, specs)?;

    let top = h.specialize_var(k, &Rational::zero())?;
    let cone = h.slice_in(k, spec.d - spec.s)?;
    let disc_top = if top.is_zero() {
        Rational::zero()
    } else {
        discriminant_value(&top)?
    };
    let disc_cone = if cone.is_zero() {
        Rational::zero()
    } else {
        discriminant_value(&cone)?
    };
    if disc_top.is_zero() || disc_cone.is_zero() {
        return Err(ElimError::DegenerateBoundary(format!(
            "Disc(f_d) = {disc_top}, Disc(f_s) = {disc_cone}"
        )));
    }
    let rres = reduced_resultant(&system, seed)?;
    let value = &rres.value / (&disc_top * &disc_cone);
    Ok(ReducedDiscriminant {
        value,
        reduced_resultant: rres,
        disc_top,
        disc_tangent_cone: disc_cone,
    })
}

fn product(v: &[u32]) -> u64 {
    v.iter().map(|&x| x as u64).product()
}

/// Degree of the reduced resultant in the coefficients of `h_i`.
pub fn redres_degree(i: usize, degrees: &[u32], orders: &[u32]) -> Result<u64> {
    check_orders(degrees, orders)?;
    if i >= degrees.len() {
        return Err(ElimError::InvalidInput(format!("index {i} out of range")));
    }
    let strict: Vec<usize> = (0..degrees.len()).filter(|&j| orders[j] < degrees[j]).collect();
    match strict.len() {
        0 => Err(ElimError::InvalidInput("no strict truncation".into())),
        1 => {
            let j = strict[0];
            if i == j {
                return Ok(0);
            }
            Ok((0..degrees.len())
                .filter(|&l| l != i && l != j)
                .map(|l| degrees[l] as u64)
                .product())
        }
        _ => Ok(product(degrees) / degrees[i] as u64 - product(orders) / orders[i] as u64),
    }
}

/// Degree of the reduced resultant under the co-weight grading.
pub fn redres_weighted_degree(degrees: &[u32], orders: &[u32]) -> Result<u64> {
    check_orders(degrees, orders)?;
    let n = degrees.len() as u64 - 1;
    let strict: Vec<usize> = (0..degrees.len()).filter(|&j| orders[j] < degrees[j]).collect();
    Ok(match strict.len() {
        0 => 0,
        1 => n * product(degrees) / degrees[strict[0]] as u64,
        _ => n * (product(degrees) - product(orders)),
    })
}

fn check_orders(degrees: &[u32], orders: &[u32]) -> Result<()> {
    if degrees.len() != orders.len() || degrees.is_empty() {
        return Err(ElimError::InvalidInput("degree and order lists differ".into()));
    }
    if orders.iter().zip(degrees).any(|(&s, &d)| s == 0 || s > d) {
        return Err(ElimError::InvalidInput("orders must satisfy 1 <= s <= d".into()));
    }
    Ok(())
}

fn check_rdisc_range(d: u32, s: u32) -> Result<()> {
    if s < 2 || s + 1 > d {
        return Err(ElimError::InvalidInput(format!(
            "need 2 <= s <= d-1, got s={s}, d={d}"
        )));
    }
    Ok(())
}

/// Standard degree `(n+1)[(d-1)^n - (s-1)^n] - 2n(s-1)^{n-1}`.
pub fn rdisc_degree(n: u32, d: u32, s: u32) -> Result<i64> {
    check_rdisc_range(d, s)?;
    let (n, d, s) = (n as i64, d as i64, s as i64);
    let p = n as u32;
    Ok((n + 1) * ((d - 1).pow(p) - (s - 1).pow(p)) - 2 * n * (s - 1).pow(p.saturating_sub(1)))
}

/// Co-weight degree `n[d(d-1)^n - s(s+1)(s-1)^{n-1}]`.
pub fn rdisc_weighted_degree(n: u32, d: u32, s: u32) -> Result<i64> {
    check_rdisc_range(d, s)?;
    let (nn, d, s) = (n as i64, d as i64, s as i64);
    Ok(nn * (d * (d - 1).pow(n) - s * (s + 1) * (s - 1).pow(n.saturating_sub(1))))
}

/// Moves `p` to `(1:0:...:0)` by an integer unimodular change, returning the
/// matrix `A` (rows) with `f(A x)` the moved form.
pub fn unimodular_frame(p: &LinearPoint) -> Result<Vec<Vec<Rational>>> {
    let v = primitive_integer_vector(&p.coords).ok_or_else(|| {
        ElimError::InvalidInput("the zero vector is not a projective point".into())
    })?;
    let r = reduce_vector(&v).expect("nonzero vector");
    let mut a = r.u_inv;
    if r.g < num_bigint::BigInt::zero() {
        for row in a.iter_mut() {
            row[0] = -row[0].clone();
        }
    }
    Ok(to_rational_matrix(&a))
}

/// Order of vanishing of a form at `(1:0:...:0)`.
fn order_at_base(f: &Polynomial, d: u32) -> u32 {
    f.terms().map(|(e, _)| d - e.get(0)).min().unwrap_or(d)
}

/// Projection from `p0` of the complete intersection `V(f, g)`: the
/// resultant in `x_0` of the truncations after moving `p0` to
/// `(1:0:...:0)`. The result is a form of degree `ab - a'b'` in
/// `x_1, ..., x_n` (with `x_0` absent), where `a'`, `b'` are the
/// multiplicities of `p0` on each hypersurface.
pub fn project_complete_intersection(
    f: &Polynomial,
    g: &Polynomial,
    p0: &LinearPoint,
    multiplicities: Option<(u32, u32)>,
) -> Result<Polynomial> {
    let nv = f.nvars();
    if g.nvars() != nv || p0.len() != nv || nv < 2 {
        return Err(ElimError::NvarsMismatch {
            expected: nv,
            found: g.nvars().min(p0.len()),
        });
    }
    let a = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    let b = g
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(g.to_string()))?;
    let frame = unimodular_frame(p0)?;
    let f1 = f.linear_change(&frame)?;
    let g1 = g.linear_change(&frame)?;
    let (va, vb) = (order_at_base(&f1, a), order_at_base(&g1, b));
    let (ap, bp) = match multiplicities {
        Some((ap, bp)) => {
            if (ap > 0 && va == 0) || (bp > 0 && vb == 0) {
                return Err(ElimError::PointNotOnHypersurface);
            }
            if ap > va || bp > vb {
                return Err(ElimError::InvalidInput(format!(
                    "declared multiplicities ({ap},{bp}) exceed the actual ({va},{vb})"
                )));
            }
            (ap, bp)
        }
        None => (va, vb),
    };
    let target = a * b - ap * bp;
    // ♭f(t, s) = Σ_{i ≥ a'} f_i(x) t^{a-i} s^{i-a'}, with f_i the slice of
    // x_0-degree a - i.
    let slices = |p: &Polynomial, deg: u32, low: u32| -> Result<Vec<Polynomial>> {
        (low..=deg).map(|i| p.slice_in(0, deg - i)).collect()
    };
    let fs = slices(&f1, a, ap)?;
    let gs = slices(&g1, b, bp)?;
    let binary_at = |parts: &[Polynomial], deg: u32, low: u32, x: &[Rational]| -> Result<Polynomial> {
        let mut out = Polynomial::zero(2);
        for (idx, part) in parts.iter().enumerate() {
            let i = low + idx as u32;
            let c = part.eval(x)?;
            out.add_term(ExponentVector::new(vec![deg - i, i - low]), c);
        }
        Ok(out)
    };
    let value_at = |x: &[Rational]| -> Result<Rational> {
        let bf = binary_at(&fs, a, ap, x)?;
        let bg = binary_at(&gs, b, bp, x)?;
        sylvester_resultant_with_degrees(&bf, a - ap, &bg, b - bp)
    };
    let m = nv - 1;
    let mut out = Polynomial::zero(nv);
    if m == 1 {
        let c = value_at(&[Rational::one()])?;
        out.add_term(ExponentVector::new(vec![0, target]), c);
        return Ok(out);
    }
    // Dehomogenize at x_1 = 1 and interpolate in x_2..x_n.
    let affine = interpolate_dense(m - 1, target, &|pt: &[Rational]| {
        let mut x = Vec::with_capacity(m);
        x.push(Rational::one());
        x.extend_from_slice(pt);
        value_at(&x)
    })?;
    for (e, c) in affine.terms() {
        let used = e.total_degree();
        if used > target {
            return Err(ElimError::Internal("projection exceeds its degree".into()));
        }
        let mut exps = vec![0, target - used];
        exps.extend_from_slice(e.as_slice());
        out.add_term(ExponentVector::new(exps), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use num_traits::Signed;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn binary_system(h1: &str, h2: &str, d: [u32; 2], s: [u32; 2]) -> TruncatedSystem {
        TruncatedSystem::new(
            vec![p(h1, 2), p(h2, 2)],
            vec![TruncationSpec::new(d[0], s[0]).unwrap(), TruncationSpec::new(d[1], s[1]).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn common_principal_tangent_goes_through_deformation() {
        // Every tangent cone is a multiple of x1, so Res(g) vanishes for all
        // fillers.
        let forms = vec![
            p("x0*x1 + x1^2 + 3*x2^2", 3),
            p("2*x0*x1 + x1*x2 - x2^2", 3),
            p("-x0*x1 + x1^2 + x1*x2 + 5*x2^2", 3),
        ];
        let specs = vec![TruncationSpec::new(2, 1).unwrap(); 3];
        let r = reduced_resultant(&TruncatedSystem::new(forms, specs).unwrap(), 0).unwrap();
        assert!(r.res_g.is_zero());
        assert!(r.value.is_zero());
    }

    #[test]
    fn binary_examples() {
        let r = reduced_resultant(&binary_system("x0*x1 + x1^2", "x0*x1 + 2*x1^2", [2, 2], [1, 1]), 0).unwrap();
        assert!(r.lower_terms_zero);
        assert_eq!(r.valuation_degree, 1);
        assert_eq!(r.value.abs(), int(1));
        let r = reduced_resultant(&binary_system("x0*x1 + x1^2", "x0*x1 + x1^2", [2, 2], [1, 1]), 0).unwrap();
        assert_eq!(r.value, int(0));
        let r = reduced_resultant(&binary_system("x0*x1", "x1^2", [2, 2], [1, 1]), 0).unwrap();
        assert_eq!(r.value.abs(), int(1));
    }

    #[test]
    fn seed_independence() {
        let sys = binary_system("2*x0^2*x1 - x0*x1^2 + 3*x1^3", "x0*x1 - 4*x1^2", [3, 2], [1, 1]);
        let a = reduced_resultant(&sys, 1).unwrap();
        let b = reduced_resultant(&sys, 2).unwrap();
        assert_eq!(a.value, b.value);
        assert_ne!(a.res_g, b.res_g);
    }

    #[test]
    fn single_strict_clause() {
        // h2 has s = d, so the reduced resultant is a power of Res(h1 restricted).
        let sys = binary_system("x0*x1^2 + 3*x1^3", "5*x1^2", [3, 2], [2, 2]);
        let r = reduced_resultant(&sys, 0).unwrap();
        assert_eq!(r.exponent, 1);
        assert_eq!(r.single_strict_clause, Some(int(5)));
        assert_eq!(r.value, int(5));
    }

    #[test]
    fn truncation_is_validated() {
        let bad = TruncatedSystem::new(
            vec![p("x0^2", 2), p("x1^2", 2)],
            vec![TruncationSpec::new(2, 1).unwrap(), TruncationSpec::new(2, 1).unwrap()],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn reduced_discriminant_binary_examples() {
        let spec = TruncationSpec::new(4, 2).unwrap();
        let r = reduced_discriminant(&p("x0^2*x1^2 + x1^4", 2), spec, 0).unwrap();
        assert_eq!(r.value.abs(), int(4));
        let r = reduced_discriminant(&p("x0*x1^3", 2), spec, 0);
        assert!(matches!(r, Err(ElimError::DegenerateBoundary(_))));
    }

    #[test]
    fn degree_formulas() {
        assert_eq!(redres_degree(0, &[2, 2], &[1, 1]).unwrap(), 1);
        assert_eq!(redres_degree(1, &[3, 3, 3], &[2, 2, 2]).unwrap(), 5);
        assert_eq!(redres_degree(0, &[3, 2], &[1, 2]).unwrap(), 0);
        assert_eq!(redres_degree(1, &[3, 2], &[1, 2]).unwrap(), 1);
        assert_eq!(redres_weighted_degree(&[2, 3], &[1, 1]).unwrap(), 5);
        assert_eq!(redres_weighted_degree(&[2, 2], &[1, 1]).unwrap(), 3);
        assert_eq!(redres_weighted_degree(&[3, 3], &[3, 3]).unwrap(), 0);
        assert_eq!(rdisc_degree(1, 4, 2).unwrap(), 2);
        assert_eq!(rdisc_weighted_degree(1, 4, 2).unwrap(), 6);
        assert_eq!(rdisc_degree(2, 3, 2).unwrap(), 5);
        assert!(rdisc_degree(2, 3, 3).is_err());
    }

    #[test]
    fn projection_of_conics() {
        let f = p("x0*x1 + x1^2 - x2^2", 3);
        let g = p("x0*x2 + x1*x2 + 2*x1^2", 3);
        let base = LinearPoint::from_ints(&[1, 0, 0]);
        let proj = project_complete_intersection(&f, &g, &base, None).unwrap();
        assert_eq!(proj.homogeneous_total_degree(), Some(3));
        let generic = p("x0^2 + x1^2 - x2^2", 3);
        let other = p("x0^2 - 2*x1^2 + x0*x2 + x2^2", 3);
        let proj = project_complete_intersection(&generic, &other, &base, None).unwrap();
        assert_eq!(proj.homogeneous_total_degree(), Some(4));
        assert!(project_complete_intersection(&f, &f, &base, None).unwrap().is_zero());
        assert_eq!(
            project_complete_intersection(&generic, &other, &base, Some((1, 1))),
            Err(ElimError::PointNotOnHypersurface)
        );
    }
}
