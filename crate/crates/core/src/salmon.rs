//! Normal forms at a smooth point, the Salmon expansion of the discriminant
//! in the tangent coefficient `T`, and related geometric determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::discriminant::{discriminant_value, parametric_discriminant};
use crate::error::{ElimError, Result};
use crate::linalg::{det_rational, primitive_integer_vector, reduce_vector, to_rational_matrix};
use crate::poly::{polar_power, restrict_to_line, ExponentVector, LinearPoint, Polynomial};
use crate::random::{random_int, seeded_rng};
use crate::rational::int;
use crate::reduced::{reduced_discriminant, unimodular_frame, TruncationSpec};
use crate::resultant::{macaulay_resultant, FormSystem};
use crate::Rational;

/// `f = T x_0^{d-1} x_n + Σ_{k≥2} x_0^{d-k} f_k(x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormHypersurface {
    pub n: usize,
    pub d: u32,
    pub t: Rational,
    /// `f_2, ..., f_d`, forms in the `n` variables `x_1, ..., x_n`.
    pub slices: Vec<Polynomial>,
    /// Integer unimodular matrix `M` with `f(M x)` in normal form.
    pub transform: Vec<Vec<Rational>>,
}

impl NormalFormHypersurface {
    pub fn from_parts(n: usize, d: u32, t: Rational, slices: Vec<Polynomial>) -> Result<Self> {
        if n < 2 || d < 3 {
            return Err(ElimError::InvalidInput(format!(
                "normal forms need n >= 2 and d >= 3, got n={n}, d={d}"
            )));
        }
        if slices.len() != d as usize - 1 {
            return Err(ElimError::InvalidInput(format!(
                "expected {} slices, got {}",
                d - 1,
                slices.len()
            )));
        }
        for (k, f) in (2..=d).zip(&slices) {
            if f.nvars() != n {
                return Err(ElimError::NvarsMismatch {
                    expected: n,
                    found: f.nvars(),
                });
            }
            if !f.is_zero() && f.homogeneous_total_degree() != Some(k) {
                return Err(ElimError::NotHomogeneous(format!("{f} (expected degree {k})")));
            }
        }
        let transform = (0..=n)
            .map(|i| (0..=n).map(|j| if i == j { int(1) } else { int(0) }).collect())
            .collect();
        Ok(NormalFormHypersurface {
            n,
            d,
            t,
            slices,
            transform,
        })
    }

    /// `f_k` for `2 ≤ k ≤ d`.
    pub fn slice(&self, k: u32) -> &Polynomial {
        &self.slices[k as usize - 2]
    }

    fn lift(&self, f: &Polynomial, x0_power: u32) -> Polynomial {
        let mapping: Vec<usize> = (1..=self.n).collect();
        let lifted = f.embed(self.n + 1, &mapping).expect("slice variable count");
        let mut e = vec![0; self.n + 1];
        e[0] = x0_power;
        lifted.mul_monomial(&ExponentVector::new(e))
    }

    /// The truncation `h = Σ_{k≥2} x_0^{d-k} f_k`.
    pub fn truncation(&self) -> Polynomial {
        let mut h = Polynomial::zero(self.n + 1);
        for k in 2..=self.d {
            h.add_in_place(&self.lift(self.slice(k), self.d - k));
        }
        h
    }

    /// The full form with tangent coefficient `t`.
    pub fn assemble_with(&self, t: &Rational) -> Polynomial {
        let mut f = self.truncation();
        let mut e = vec![0; self.n + 1];
        e[0] = self.d - 1;
        e[self.n] = 1;
        f.add_term(ExponentVector::new(e), t.clone());
        f
    }

    pub fn assemble(&self) -> Polynomial {
        self.assemble_with(&self.t)
    }

    /// `f̄_2 = f_2(x_1, ..., x_{n-1}, 0)`.
    pub fn restricted_quadric(&self) -> Result<Polynomial> {
        self.slice(2).specialize_var(self.n - 1, &Rational::zero())
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect()
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

/// Moves a smooth point of `V(f)` to `(1:0:...:0)` with tangent hyperplane
/// `x_n = 0`, using integer unimodular changes of coordinates.
pub fn normal_form_at_point(f: &Polynomial, p: &LinearPoint) -> Result<NormalFormHypersurface> {
    let nv = f.nvars();
    if p.len() != nv {
        return Err(ElimError::NvarsMismatch {
            expected: nv,
            found: p.len(),
        });
    }
    let d = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    let n = nv - 1;
    if n < 2 || d < 3 {
        return Err(ElimError::InvalidInput(format!(
            "normal forms need n >= 2 and d >= 3, got n={n}, d={d}"
        )));
    }
    if !f.eval(&p.coords)?.is_zero() {
        return Err(ElimError::PointNotOnHypersurface);
    }
    let a = unimodular_frame(p)?;
    let f1 = f.linear_change(&a)?;
    let grad: Vec<Rational> = (1..=n)
        .map(|i| {
            let mut e = vec![0; nv];
            e[0] = d - 1;
            e[i] = 1;
            f1.coeff_of(&e)
        })
        .collect();
    let w = primitive_integer_vector(&grad).ok_or(ElimError::SingularPoint)?;
    let r = reduce_vector(&w).expect("nonzero gradient");
    // C = Uᵀ P with P swapping the first and last coordinates, so that
    // Cᵀ w is a multiple of the last basis vector.
    let mut c = identity_matrix(n);
    for i in 0..n {
        for j in 0..n {
            let src = if j == 0 {
                n - 1
            } else if j == n - 1 {
                0
            } else {
                j
            };
            c[i][j] = r.u[src][i].clone();
        }
    }
    let mut b = identity_matrix(nv);
    for i in 0..n {
        for j in 0..n {
            b[i + 1][j + 1] = c[i][j].clone();
        }
    }
    let transform = mat_mul(&a, &to_rational_matrix(&b));
    let g = f.linear_change(&transform)?;
    let mut t_exp = vec![0; nv];
    t_exp[0] = d - 1;
    t_exp[n] = 1;
    let t = g.coeff_of(&t_exp);
    let linear = g.slice_in(0, d - 1)?;
    let mut expected = Polynomial::zero(n);
    expected.add_term(ExponentVector::unit(n, n - 1), t.clone());
    if linear != expected || t.is_zero() {
        return Err(ElimError::Internal("tangent hyperplane not normalized".into()));
    }
    let slices = (2..=d)
        .map(|k| g.slice_in(0, d - k))
        .collect::<Result<Vec<_>>>()?;
    Ok(NormalFormHypersurface {
        n,
        d,
        t,
        slices,
        transform,
    })
}

/// Lowest terms in `T` of `Disc(f)` compared with the product of boundary
/// discriminants and the reduced discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalmonReport {
    /// `None` when the discriminant vanishes identically in `T`.
    pub valuation_in_t: Option<usize>,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub t2_coefficient: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_restricted_quadric: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_quadric: Rational,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub reduced_discriminant: Option<Rational>,
    /// `Disc(T x_0 x_n + f_2)` at `T = 1`; equals `-Disc(f̄_2)`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_tangent_quadric: Rational,
    /// `Disc(T x_0 x_n + f_2)|_{T=1} · Disc(f_2)^2 · rDisc(h)`.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub predicted_t2: Option<Rational>,
    /// `None` for degenerate slices, with the reason recorded.
    pub identity_holds: Option<bool>,
    pub degenerate: Option<String>,
}

/// Degree bound of `Disc(f)` in `T`: the coordinate weight `d(d-1)^n` of
/// the discriminant divided by the weight `d-1` of the `T` slot, capped by
/// the standard degree.
pub fn t_degree_bound(n: usize, d: u32) -> usize {
    let standard = (n + 1) * (d as usize - 1).pow(n as u32);
    let weighted = d as usize * (d as usize - 1).pow(n as u32 - 1);
    standard.min(weighted)
}

pub fn salmon_expansion(nf: &NormalFormHypersurface, seed: u64) -> Result<SalmonReport> {
    let nv = nf.n + 1;
    let pv = parametric_discriminant(nv, nf.d, t_degree_bound(nf.n, nf.d), |t| {
        Ok(nf.assemble_with(t))
    })?;
    let valuation = pv.valuation();
    if valuation.is_some_and(|v| v < 2) {
        return Err(ElimError::Internal(format!(
            "discriminant has valuation {valuation:?} in T"
        )));
    }
    let t2 = pv.coeff(2);
    let f2 = nf.slice(2).clone();
    let fbar2 = nf.restricted_quadric()?;
    let disc_fbar2 = if fbar2.is_zero() {
        Rational::zero()
    } else {
        discriminant_value(&fbar2)?
    };
    let disc_f2 = if f2.is_zero() {
        Rational::zero()
    } else {
        discriminant_value(&f2)?
    };
    let tangent_quadric = {
        let mut q = nf.lift(&f2, 0);
        let mut e = vec![0; nv];
        e[0] = 1;
        e[nf.n] = 1;
        q.add_term(ExponentVector::new(e), Rational::one());
        q
    };
    let disc_tangent_quadric = discriminant_value(&tangent_quadric)?;
    let mut report = SalmonReport {
        valuation_in_t: valuation,
        t2_coefficient: t2,
        disc_restricted_quadric: disc_fbar2.clone(),
        disc_quadric: disc_f2.clone(),
        reduced_discriminant: None,
        disc_tangent_quadric: disc_tangent_quadric.clone(),
        predicted_t2: None,
        identity_holds: None,
        degenerate: None,
    };
    if disc_f2.is_zero() || disc_fbar2.is_zero() {
        report.degenerate = Some(format!(
            "Disc(f2) = {disc_f2}, Disc(restricted f2) = {disc_fbar2}"
        ));
        return Ok(report);
    }
    let spec = TruncationSpec::new(nf.d, 2)?;
    let rdisc = match reduced_discriminant(&nf.truncation(), spec, seed) {
        Ok(r) => r.value,
        Err(ElimError::DegenerateBoundary(reason)) => {
            report.degenerate = Some(reason);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let predicted = &disc_tangent_quadric * &disc_f2 * &disc_f2 * &rdisc;
    report.identity_holds = Some(
        valuation.is_some_and(|v| v >= 2)
            && predicted == report.t2_coefficient
            && disc_tangent_quadric == -disc_fbar2,
    );
    report.reduced_discriminant = Some(rdisc);
    report.predicted_t2 = Some(predicted);
    Ok(report)
}

/// Plane-curve coefficients with `f_2 = ½(A x_1² + 2B x_1 x_2 + C x_2²)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlaneSalmon {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub a: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub b: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub c: Rational,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub t: Rational,
    /// `Disc(T x_0 x_2 + f_2)`, which should equal `-A T² / 2`.
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc_tangent_quadric: Rational,
    pub check: bool,
    /// `φ = rDisc(h)` when the boundary discriminants do not vanish.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub phi: Option<Rational>,
    /// `T² A (B² - AC)² φ`, zero when `A = 0` or `B² = AC`.
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub lowest_product: Option<Rational>,
}

pub fn plane_salmon_coefficients(nf: &NormalFormHypersurface, seed: u64) -> Result<PlaneSalmon> {
    if nf.n != 2 {
        return Err(ElimError::InvalidInput(format!(
            "plane coefficients need n = 2, got {}",
            nf.n
        )));
    }
    let f2 = nf.slice(2);
    let a = f2.coeff_of(&[2, 0]) * int(2);
    let b = f2.coeff_of(&[1, 1]);
    let c = f2.coeff_of(&[0, 2]) * int(2);
    let t = nf.t.clone();
    let mut q = nf.lift(f2, 0);
    q.add_term(ExponentVector::new(vec![1, 0, 1]), t.clone());
    let disc_tangent_quadric = discriminant_value(&q)?;
    let check = disc_tangent_quadric == -(&a * &t * &t) / int(2);
    let parabolic = &b * &b - &a * &c;
    let phi = match reduced_discriminant(&nf.truncation(), TruncationSpec::new(nf.d, 2)?, seed) {
        Ok(r) => Some(r.value),
        Err(ElimError::DegenerateBoundary(_)) => None,
        Err(e) => return Err(e),
    };
    let lowest_product = if a.is_zero() || parabolic.is_zero() {
        Some(Rational::zero())
    } else {
        phi.as_ref()
            .map(|phi| &t * &t * &a * &parabolic * &parabolic * phi)
    };
    Ok(PlaneSalmon {
        a,
        b,
        c,
        t,
        disc_tangent_quadric,
        check,
        phi,
        lowest_product,
    })
}

/// `det(⟨a_i, p_j⟩)`; for two points each this is
/// `⟨a',p'⟩⟨a'',p''⟩ - ⟨a',p''⟩⟨a'',p'⟩`.
pub fn pencil_intersection_det_general(a: &[LinearPoint], p: &[LinearPoint]) -> Result<Rational> {
    if a.len() != p.len() {
        return Err(ElimError::InvalidInput("need as many forms as points".into()));
    }
    let dim = a.first().map_or(0, LinearPoint::len);
    if a.iter().chain(p).any(|x| x.len() != dim) {
        return Err(ElimError::NvarsMismatch {
            expected: dim,
            found: a.iter().chain(p).map(LinearPoint::len).find(|&l| l != dim).unwrap_or(dim),
        });
    }
    let m: Vec<Vec<Rational>> = a
        .iter()
        .map(|ai| p.iter().map(|pj| ai.pairing(pj)).collect())
        .collect();
    Ok(det_rational(&m))
}

pub fn pencil_intersection_det(
    a1: &LinearPoint,
    a2: &LinearPoint,
    p1: &LinearPoint,
    p2: &LinearPoint,
) -> Result<Rational> {
    pencil_intersection_det_general(&[a1.clone(), a2.clone()], &[p1.clone(), p2.clone()])
}

/// The residual binary form on a tangent line and its discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BitangentLineForm {
    pub flat: String,
    pub degree: u32,
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub disc: Rational,
    #[serde(skip)]
    pub flat_form: Polynomial,
}

/// Restricts `f` to the tangent line `⟨p', p''⟩`, strips `β²` and returns the
/// residual form with its discriminant. Residual forms of degree below 2
/// have no repeated root; their discriminant is reported as 1.
pub fn bitangent_line_form(f: &Polynomial, p1: &LinearPoint, p2: &LinearPoint) -> Result<BitangentLineForm> {
    let d = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    if !f.eval(&p1.coords)?.is_zero() {
        return Err(ElimError::PointNotOnHypersurface);
    }
    let r = restrict_to_line(f, p1, p2)?;
    if r.is_zero() {
        return Err(ElimError::InvalidInput(
            "the line lies in the hypersurface".into(),
        ));
    }
    let v = r.valuation_in(1).unwrap_or(0);
    if v < 2 {
        return Err(ElimError::InvalidInput(format!(
            "the line is not tangent (contact {v})"
        )));
    }
    let flat_form = r
        .div_monomial(&ExponentVector::new(vec![0, 2]))
        .expect("valuation at least 2");
    let degree = d - 2;
    let disc = if degree < 2 {
        Rational::one()
    } else {
        discriminant_value(&flat_form)?
    };
    Ok(BitangentLineForm {
        flat: flat_form.to_string(),
        degree,
        disc,
        flat_form,
    })
}

/// Result of the elimination with an auxiliary linear form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SalmonElim {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub r: Rational,
    pub multiplicity: u64,
}

/// `R = Res(ℓ, f_q, g_q, h_q) / ℓ(q)^{λλ'λ''}` for a random linear form `ℓ`,
/// checked against a second independent draw.
pub fn salmon_elim_r(forms: [&Polynomial; 3], q: &LinearPoint, seed: u64) -> Result<SalmonElim> {
    let nv = q.len();
    if nv != 4 || forms.iter().any(|f| f.nvars() != nv) {
        return Err(ElimError::InvalidInput(
            "elimination needs three forms on P^3 and a point of P^3".into(),
        ));
    }
    let mut degrees = vec![1u32];
    for f in forms {
        if f.is_zero() {
            return Err(ElimError::ZeroPolynomial);
        }
        degrees.push(
            f.homogeneous_total_degree()
                .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?,
        );
        if !f.eval(&q.coords)?.is_zero() {
            return Err(ElimError::PointNotOnHypersurface);
        }
    }
    let multiplicity: u64 = degrees.iter().map(|&d| d as u64).product();
    let mut rng = seeded_rng(seed, 0x1e11);
    let mut draw = || -> Result<Rational> {
        for _ in 0..32 {
            let coeffs: Vec<i64> = (0..nv).map(|_| random_int(&mut rng, 9)).collect();
            let ell = LinearPoint::from_ints(&coeffs);
            let at_q = ell.pairing(q);
            if at_q.is_zero() {
                continue;
            }
            let mut l = Polynomial::zero(nv);
            for (i, &c) in coeffs.iter().enumerate() {
                l.add_term(ExponentVector::unit(nv, i), int(c));
            }
            let mut system = vec![l];
            system.extend(forms.iter().map(|f| (*f).clone()));
            let res = macaulay_resultant(&FormSystem::with_degrees(system, degrees.clone())?)?;
            return Ok(res / num_traits::pow(at_q, multiplicity as usize));
        }
        Err(ElimError::ResultantFailed("no linear form avoids q".into()))
    };
    let first = draw()?;
    let second = draw()?;
    if first != second {
        return Err(ElimError::InvalidInput(
            "R depends on the auxiliary linear form; q is not the only common point".into(),
        ));
    }
    Ok(SalmonElim {
        r: first,
        multiplicity,
    })
}

/// The polars `D_q^{d-1} f`, `D_q^{d-2} f`, `D_q^{d-3} f` of degrees 1, 2, 3.
pub fn polar_triple(f: &Polynomial, q: &LinearPoint) -> Result<[Polynomial; 3]> {
    let d = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    if d < 3 {
        return Err(ElimError::DegreeTooSmall(format!("degree {d}")));
    }
    Ok([
        polar_power(f, q, d - 1)?,
        polar_power(f, q, d - 2)?,
        polar_power(f, q, d - 3)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::random::random_form;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn normal_form_reads_already_normal_input() {
        let f = p("x0^2*x2 - x1^3", 3);
        let nf = normal_form_at_point(&f, &LinearPoint::from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(nf.t, int(1));
        assert!(nf.slice(2).is_zero());
        assert_eq!(nf.slice(3), &p("-x0^3", 2));
        assert_eq!(nf.assemble(), f);
    }

    #[test]
    fn normal_form_at_fermat_point() {
        let f = p("x0^3 + x1^3 + x2^3", 3);
        let pt = LinearPoint::from_ints(&[1, 0, -1]);
        let nf = normal_form_at_point(&f, &pt).unwrap();
        assert!(!nf.t.is_zero());
        assert_eq!(f.linear_change(&nf.transform).unwrap(), nf.assemble());
        let det = det_rational(&nf.transform);
        assert!(det == int(1) || det == int(-1));
        assert_eq!(
            normal_form_at_point(&f, &LinearPoint::from_ints(&[1, 1, 0])),
            Err(ElimError::PointNotOnHypersurface)
        );
        assert_eq!(
            normal_form_at_point(&p("x0*x1*x2", 3), &LinearPoint::from_ints(&[1, 0, 0])),
            Err(ElimError::SingularPoint)
        );
    }

    fn random_plane_normal_form(seed: u64, d: u32) -> NormalFormHypersurface {
        let mut rng = seeded_rng(seed, 3);
        let slices = (2..=d).map(|k| random_form(&mut rng, 2, k, 4)).collect();
        NormalFormHypersurface::from_parts(2, d, int(1), slices).unwrap()
    }

    #[test]
    fn plane_cubic_expansion() {
        let mut checked = 0;
        for seed in 0..6 {
            let nf = random_plane_normal_form(seed, 3);
            let rep = salmon_expansion(&nf, seed).unwrap();
            if rep.degenerate.is_some() {
                continue;
            }
            checked += 1;
            assert_eq!(rep.valuation_in_t, Some(2), "{rep:?}");
            assert_eq!(rep.identity_holds, Some(true), "{rep:?}");
            let plane = plane_salmon_coefficients(&nf, seed).unwrap();
            assert!(plane.check);
        }
        assert!(checked >= 3);
    }

    #[test]
    fn parabolic_slice_raises_valuation() {
        let slices = vec![p("x0^2 + 2*x0*x1 + x1^2", 2), p("x0^3 - 2*x0*x1^2 + 3*x1^3", 2)];
        let nf = NormalFormHypersurface::from_parts(2, 3, int(1), slices).unwrap();
        let rep = salmon_expansion(&nf, 0).unwrap();
        assert!(rep.valuation_in_t.map_or(true, |v| v > 2));
        assert!(rep.degenerate.is_some());
        let plane = plane_salmon_coefficients(&nf, 0).unwrap();
        assert_eq!(plane.lowest_product, Some(int(0)));
    }

    #[test]
    fn pencil_examples() {
        let e = |v: &[i64]| LinearPoint::from_ints(v);
        let d = pencil_intersection_det(&e(&[1, 0, 0, 0]), &e(&[0, 1, 0, 0]), &e(&[0, 0, 1, 0]), &e(&[0, 0, 0, 1])).unwrap();
        assert_eq!(d, int(0));
        let d = pencil_intersection_det(&e(&[1, 0, 0, 0]), &e(&[0, 1, 0, 0]), &e(&[1, 1, 0, 0]), &e(&[0, 0, 1, 1])).unwrap();
        assert_eq!(d, int(0));
        let d = pencil_intersection_det(&e(&[1, 0, 0, 0]), &e(&[0, 1, 0, 0]), &e(&[1, 0, 1, 0]), &e(&[0, 1, 0, 1])).unwrap();
        assert_eq!(d, int(1));
    }

    #[test]
    fn bitangent_on_quadric_is_trivial() {
        let f = p("x0*x3 - x1*x2", 4);
        let a = LinearPoint::from_ints(&[1, 0, 0, 0]);
        let b = LinearPoint::from_ints(&[0, 1, 0, 0]);
        let r = bitangent_line_form(&f, &a, &b);
        assert!(r.is_err(), "the line x2 = x3 = 0 lies on the quadric");
        let b = LinearPoint::from_ints(&[0, 1, 1, 0]);
        let r = bitangent_line_form(&f, &a, &b).unwrap();
        assert_eq!(r.degree, 0);
        assert!(!r.disc.is_zero());
    }

    #[test]
    fn planted_bitangent_line() {
        // x1^2 (x0 - x1)^2 vanishes doubly at both (1:0) and (1:1) on the line.
        let f = p("x0^2*x1^2 - 2*x0*x1^3 + x1^4 + x2*x0^3 + x3*x1^3 + x2^2*x3^2 + x3^4", 4);
        let a = LinearPoint::from_ints(&[1, 0, 0, 0]);
        let b = LinearPoint::from_ints(&[0, 1, 0, 0]);
        let r = bitangent_line_form(&f, &a, &b).unwrap();
        assert_eq!(r.disc, int(0));
    }

    #[test]
    fn elimination_through_polars() {
        // A cubic surface through q = (1:0:0:0).
        let f = p("x0^2*x3 + x0*x1*x2 + x1^3 - x2^3 + 2*x3^3 + x0*x2^2 - x1*x3^2", 4);
        let q = LinearPoint::from_ints(&[1, 0, 0, 0]);
        let [a, b, c] = polar_triple(&f, &q).unwrap();
        let r = salmon_elim_r([&a, &b, &c], &q, 0).unwrap();
        assert_eq!(r.multiplicity, 6);
        assert!(!r.r.is_zero());
        // Containing the line x2 = x3 = 0 through q.
        let g = p("x2*x0^2 + x3*x1^2 + x2^2*x1 - x3^3 + x0*x1*x3", 4);
        let [a, b, c] = polar_triple(&g, &q).unwrap();
        assert_eq!(salmon_elim_r([&a, &b, &c], &q, 0).unwrap().r, int(0));
    }
}
