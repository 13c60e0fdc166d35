//! Resultants of `n+1` homogeneous forms in `n+1` variables.
//!
//! The main entry point is [`macaulay_resultant`], normalized so that
//! `Res(x0^d0, ..., xn^dn) = 1`. Binary forms also have a Sylvester
//! determinant, [`sylvester_resultant`], used as an independent check.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{ElimError, Result};
use crate::interp::{interpolate, sample_at_integer_nodes, UniPoly};
use crate::linalg::{clear_denominators, det_bigint, det_rational};
use crate::poly::{monomials_of_degree, ExponentVector, Polynomial};
use crate::random::{random_special_unimodular, seeded_rng};
use crate::rational::int;
use crate::Rational;

/// `n+1` homogeneous forms in `n+1` variables with declared degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSystem {
    forms: Vec<Polynomial>,
    degrees: Vec<u32>,
}

impl FormSystem {
    /// Degrees are read off the forms, which must be nonzero.
    pub fn new(forms: Vec<Polynomial>) -> Result<Self> {
        let degrees = forms
            .iter()
            .map(|f| {
                if f.is_zero() {
                    return Err(ElimError::InvalidInput(
                        "a zero form needs an explicit degree".into(),
                    ));
                }
                f.homogeneous_total_degree()
                    .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_degrees(forms, degrees)
    }

    pub fn with_degrees(forms: Vec<Polynomial>, degrees: Vec<u32>) -> Result<Self> {
        if forms.len() != degrees.len() {
            return Err(ElimError::InvalidInput(format!(
                "{} forms but {} degrees",
                forms.len(),
                degrees.len()
            )));
        }
        if forms.is_empty() {
            return Err(ElimError::InvalidInput("empty system".into()));
        }
        for f in &forms {
            if f.nvars() != forms.len() {
                return Err(ElimError::NvarsMismatch {
                    expected: forms.len(),
                    found: f.nvars(),
                });
            }
        }
        for (f, &d) in forms.iter().zip(&degrees) {
            if d == 0 {
                return Err(ElimError::DegreeTooSmall(format!("form {f} has degree 0")));
            }
            if !f.is_zero() && f.homogeneous_total_degree() != Some(d) {
                return Err(ElimError::NotHomogeneous(format!("{f} (expected degree {d})")));
            }
        }
        Ok(FormSystem { forms, degrees })
    }

    pub fn forms(&self) -> &[Polynomial] {
        &self.forms
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn nvars(&self) -> usize {
        self.forms.len()
    }

    pub fn into_forms(self) -> Vec<Polynomial> {
        self.forms
    }
}

/// `∏_{j≠k} d_j`: the degree of the resultant in the coefficients of form `k`.
pub fn resultant_scaling_degree(system: &FormSystem, k: usize) -> Result<u64> {
    scaling_degree(system.degrees(), k)
}

pub fn scaling_degree(degrees: &[u32], k: usize) -> Result<u64> {
    if k >= degrees.len() {
        return Err(ElimError::InvalidInput(format!(
            "form index {k} out of range for {} forms",
            degrees.len()
        )));
    }
    Ok(degrees
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, &d)| d as u64)
        .product())
}

/// Total degree of the resultant in all coefficients, `Σ_k ∏_{j≠k} d_j`.
pub fn total_coefficient_degree(degrees: &[u32]) -> u64 {
    (0..degrees.len())
        .map(|k| scaling_degree(degrees, k).unwrap_or(0))
        .sum()
}

/// Coefficients of a binary form of degree `d`, ordered by decreasing power
/// of `x0`.
fn binary_coefficients(f: &Polynomial, d: u32) -> Vec<Rational> {
    (0..=d).map(|i| f.coeff_of(&[d - i, i])).collect()
}

/// Sylvester resultant of binary forms with declared degrees. Degree zero is
/// allowed and gives `Res(c, g) = c^deg(g)`.
pub fn sylvester_resultant_with_degrees(
    f: &Polynomial,
    m: u32,
    g: &Polynomial,
    n: u32,
) -> Result<Rational> {
    for (p, d) in [(f, m), (g, n)] {
        if p.nvars() != 2 {
            return Err(ElimError::NvarsMismatch {
                expected: 2,
                found: p.nvars(),
            });
        }
        if !p.is_zero() && p.homogeneous_total_degree() != Some(d) {
            return Err(ElimError::NotHomogeneous(p.to_string()));
        }
    }
    let a = binary_coefficients(f, m);
    let b = binary_coefficients(g, n);
    let size = (m + n) as usize;
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for r in 0..n as usize {
        for (i, c) in a.iter().enumerate() {
            rows[r][r + i] = c.clone();
        }
    }
    for r in 0..m as usize {
        for (i, c) in b.iter().enumerate() {
            rows[n as usize + r][r + i] = c.clone();
        }
    }
    Ok(det_rational(&rows))
}

/// Sylvester resultant of two nonzero homogeneous binary forms.
pub fn sylvester_resultant(f: &Polynomial, g: &Polynomial) -> Result<Rational> {
    let m = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    let n = g
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(g.to_string()))?;
    if f.is_zero() || g.is_zero() {
        return Err(ElimError::ZeroPolynomial);
    }
    sylvester_resultant_with_degrees(f, m, g, n)
}

/// Row and column indexing of the Macaulay matrix at the critical degree.
struct MacaulayLayout {
    monomials: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
    /// For each row: the form used and the monomial multiplier.
    rows: Vec<(usize, ExponentVector)>,
    /// Rows (equivalently columns) divisible by two or more `x_i^{d_i}`.
    nonreduced: Vec<usize>,
}

impl MacaulayLayout {
    fn new(degrees: &[u32]) -> Self {
        let nvars = degrees.len();
        let t: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
        let monomials = monomials_of_degree(nvars, t);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rows = Vec::with_capacity(monomials.len());
        let mut nonreduced = Vec::new();
        for (r, m) in monomials.iter().enumerate() {
            let hits: Vec<usize> = (0..nvars).filter(|&j| m.get(j) >= degrees[j]).collect();
            let j = hits[0];
            let mut shift = m.as_slice().to_vec();
            shift[j] -= degrees[j];
            rows.push((j, ExponentVector::new(shift)));
            if hits.len() > 1 {
                nonreduced.push(r);
            }
        }
        MacaulayLayout {
            monomials,
            index,
            rows,
            nonreduced,
        }
    }

    fn matrix(&self, forms: &[Polynomial]) -> Vec<Vec<Rational>> {
        let n = self.monomials.len();
        self.rows
            .iter()
            .map(|(j, shift)| {
                let mut row = vec![Rational::zero(); n];
                for (e, c) in forms[*j].terms() {
                    row[self.index[&e.add(shift)]] = c.clone();
                }
                row
            })
            .collect()
    }

    fn submatrix(&self, m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
        self.nonreduced
            .iter()
            .map(|&r| self.nonreduced.iter().map(|&c| m[r][c].clone()).collect())
            .collect()
    }
}

/// How a Macaulay evaluation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MacaulayMethod {
    Direct,
    CoordinateChange,
    Perturbation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayOutcome {
    pub value: Rational,
    pub method: MacaulayMethod,
    pub matrix_size: usize,
}

/// Macaulay quotient `det M / det M'`, or `None` when `det M' = 0`.
fn macaulay_quotient(layout: &MacaulayLayout, forms: &[Polynomial]) -> Option<Rational> {
    let m = layout.matrix(forms);
    let sub = layout.submatrix(&m);
    let den = det_rational(&sub);
    if den.is_zero() {
        return None;
    }
    Some(det_rational(&m) / den)
}

const COORDINATE_CHANGE_ATTEMPTS: u64 = 3;

/// Resultant of a form system with the fallback chain for a singular
/// Macaulay minor, reporting which stage produced the value.
pub fn macaulay_resultant_detailed(system: &FormSystem) -> Result<MacaulayOutcome> {
    let degrees = system.degrees();
    let layout = MacaulayLayout::new(degrees);
    let matrix_size = layout.monomials.len();
    if let Some(value) = macaulay_quotient(&layout, system.forms()) {
        return Ok(MacaulayOutcome {
            value,
            method: MacaulayMethod::Direct,
            matrix_size,
        });
    }
    let n = system.nvars();
    if n > 1 {
        for attempt in 0..COORDINATE_CHANGE_ATTEMPTS {
            let mut rng = seeded_rng(attempt, 0x5eed_c0de);
            let a = random_special_unimodular(&mut rng, n, 2);
            let a: Vec<Vec<Rational>> = a
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect();
            let moved = system
                .forms()
                .iter()
                .map(|f| f.linear_change(&a))
                .collect::<Result<Vec<_>>>()?;
            if let Some(value) = macaulay_quotient(&layout, &moved) {
                return Ok(MacaulayOutcome {
                    value,
                    method: MacaulayMethod::CoordinateChange,
                    matrix_size,
                });
            }
        }
    }
    let value = perturbed_resultant(&layout, system)?;
    Ok(MacaulayOutcome {
        value,
        method: MacaulayMethod::Perturbation,
        matrix_size,
    })
}

/// `Res(f_j + u x_j^{d_j})` interpolated in `u` and evaluated at `u = 0`.
/// With the row convention of the layout the perturbation adds `u` to the
/// diagonal of both matrices.
fn perturbed_resultant(layout: &MacaulayLayout, system: &FormSystem) -> Result<Rational> {
    let m = layout.matrix(system.forms());
    let sub = layout.submatrix(&m);
    let (m_int, m_scale) = clear_denominators(&m);
    let (sub_int, sub_scale) = clear_denominators(&sub);
    let row_scales = |mat: &[Vec<Rational>]| -> Vec<num_bigint::BigInt> {
        mat.iter()
            .map(|r| crate::rational::lcm_denominators(r.iter()))
            .collect()
    };
    let m_rows = row_scales(&m);
    let sub_rows = row_scales(&sub);
    let shifted = |base: &[Vec<num_bigint::BigInt>], scales: &[num_bigint::BigInt], u: &Rational| {
        let u = u.numer();
        let mut a = base.to_vec();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] += &scales[i] * u;
        }
        a
    };
    let bound = total_coefficient_degree(system.degrees()) as usize;
    let samples = sample_at_integer_nodes(bound + 1, 1, sub.len() + 1, |u| {
        let den = det_bigint(shifted(&sub_int, &sub_rows, u));
        if den.is_zero() {
            return Ok(None);
        }
        let num = det_bigint(shifted(&m_int, &m_rows, u));
        Ok(Some(
            Rational::new(num, m_scale.clone()) / Rational::new(den, sub_scale.clone()),
        ))
    })?;
    Ok(interpolate(&samples)?.coeff(0))
}

/// The resultant `Res(f_1, ..., f_{n+1})`.
pub fn macaulay_resultant(system: &FormSystem) -> Result<Rational> {
    macaulay_resultant_detailed(system).map(|o| o.value)
}

/// A resultant as an exact polynomial in one parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricValue {
    pub samples: Vec<(Rational, Rational)>,
    pub recovered: UniPoly,
    pub degree_bound: usize,
}

impl ParametricValue {
    /// The recovered polynomial in one variable.
    pub fn polynomial(&self) -> Polynomial {
        self.recovered.to_polynomial()
    }

    pub fn valuation(&self) -> Option<usize> {
        self.recovered.valuation()
    }

    pub fn degree(&self) -> Option<usize> {
        self.recovered.degree()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.recovered.coeff(k)
    }
}

/// Resultant of a family of systems depending on one rational parameter.
/// `build` specializes the parameter. One sample beyond `degree_bound + 1`
/// is taken so an undersized bound is detected instead of trusted.
pub fn parametric_resultant<F>(degree_bound: usize, build: F) -> Result<ParametricValue>
where
    F: Fn(&Rational) -> Result<FormSystem> + Sync,
{
    let samples = sample_at_integer_nodes(degree_bound + 2, 0, 16, |u| {
        let system = build(u)?;
        match macaulay_resultant(&system) {
            Ok(v) => Ok(Some(v)),
            Err(ElimError::ResultantFailed(_)) => Ok(None),
            Err(e) => Err(e),
        }
    })?;
    let recovered = interpolate(&samples)?;
    if recovered.degree().is_some_and(|d| d > degree_bound) {
        return Err(ElimError::InterpolationFailed(format!(
            "parameter degree exceeds the bound {degree_bound}"
        )));
    }
    Ok(ParametricValue {
        samples,
        recovered,
        degree_bound,
    })
}

/// Forms whose coefficients are polynomials in a parameter, stored as forms in
/// `n+2` variables with the parameter at index `param`.
#[derive(Clone, Debug)]
pub struct ParametricSystem {
    pub forms: Vec<Polynomial>,
    pub param: usize,
    pub degrees: Vec<u32>,
}

impl ParametricSystem {
    pub fn specialize(&self, u: &Rational) -> Result<FormSystem> {
        let forms = self
            .forms
            .iter()
            .map(|f| f.specialize_var(self.param, u))
            .collect::<Result<Vec<_>>>()?;
        FormSystem::with_degrees(forms, self.degrees.clone())
    }

    pub fn resultant(&self, degree_bound: usize) -> Result<ParametricValue> {
        parametric_resultant(degree_bound, |u| self.specialize(u))
    }
}

/// Outcome of a divisibility check between two systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub divisor: Rational,
    pub dividend: Rational,
    /// `dividend / divisor` when the divisor is nonzero.
    pub quotient: Option<Rational>,
    pub holds: bool,
}

/// Given `members[i] = Σ_j cofactors[i][j] · generators[j]`, checks that
/// `Res(generators)` divides `Res(members)`. The certificate is verified
/// first.
pub fn divisibility_check(
    generators: &FormSystem,
    members: &FormSystem,
    cofactors: &[Vec<Polynomial>],
) -> Result<DivisibilityReport> {
    let n = generators.nvars();
    if members.nvars() != n || cofactors.len() != n {
        return Err(ElimError::InvalidInput("system sizes differ".into()));
    }
    for (i, row) in cofactors.iter().enumerate() {
        if row.len() != n {
            return Err(ElimError::CertificateMismatch(i));
        }
        let mut acc = Polynomial::zero(n);
        for (c, f) in row.iter().zip(generators.forms()) {
            acc.add_in_place(&c.try_mul(f)?);
        }
        if acc != members.forms()[i] {
            return Err(ElimError::CertificateMismatch(i));
        }
    }
    let divisor = macaulay_resultant(generators)?;
    let dividend = macaulay_resultant(members)?;
    let (quotient, holds) = if divisor.is_zero() {
        (None, dividend.is_zero())
    } else {
        (Some(&dividend / &divisor), true)
    };
    Ok(DivisibilityReport {
        divisor,
        dividend,
        quotient,
        holds,
    })
}

/// `Res` of the coordinate forms `x_i^{d_i}`; one by normalization.
pub fn normalization_value(degrees: &[u32]) -> Result<Rational> {
    let n = degrees.len();
    let forms = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut e = vec![0; n];
            e[i] = d;
            Polynomial::monomial(Rational::one(), ExponentVector::new(e))
        })
        .collect();
    macaulay_resultant(&FormSystem::with_degrees(forms, degrees.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::random::random_form;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    fn sys(forms: &[&str]) -> FormSystem {
        let n = forms.len();
        FormSystem::new(forms.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    #[test]
    fn sylvester_examples() {
        assert_eq!(sylvester_resultant(&p("x0^2", 2), &p("x1^3", 2)).unwrap(), int(1));
        assert_eq!(sylvester_resultant(&p("x0 - x1", 2), &p("x0 + x1", 2)).unwrap(), int(2));
        assert_eq!(sylvester_resultant(&p("x0^2 - x1^2", 2), &p("x0 - x1", 2)).unwrap(), int(0));
    }

    #[test]
    fn macaulay_examples() {
        assert_eq!(macaulay_resultant(&sys(&["x0^2", "x1^3", "x2^4"])).unwrap(), int(1));
        assert_eq!(macaulay_resultant(&sys(&["x0", "x1", "x2"])).unwrap(), int(1));
        assert_eq!(macaulay_resultant(&sys(&["x0", "x1", "x0 + x1 + x2"])).unwrap(), int(1));
        assert_eq!(macaulay_resultant(&sys(&["x0", "x1", "x0 + x1"])).unwrap(), int(0));
        assert_eq!(macaulay_resultant(&sys(&["5*x0^3"])).unwrap(), int(5));
    }

    #[test]
    fn macaulay_matches_sylvester_on_binary_forms() {
        let mut rng = seeded_rng(11, 0);
        for d1 in 1..=4 {
            for d2 in 1..=4 {
                let f = random_form(&mut rng, 2, d1, 5);
                let g = random_form(&mut rng, 2, d2, 5);
                let s = FormSystem::with_degrees(vec![f.clone(), g.clone()], vec![d1, d2]).unwrap();
                assert_eq!(
                    macaulay_resultant(&s).unwrap(),
                    sylvester_resultant_with_degrees(&f, d1, &g, d2).unwrap()
                );
            }
        }
    }

    #[test]
    fn singular_minor_falls_back() {
        let s = sys(&["x0*x1 + x2^2", "x1*x2 - x0^2", "x0*x2 + 2*x1^2"]);
        let out = macaulay_resultant_detailed(&s).unwrap();
        assert_eq!(out.method, MacaulayMethod::CoordinateChange);
        assert_eq!(out.value, int(2));
        let planted = sys(&["x0*x1", "x1*x2", "x0*x2 + x1^2"]);
        assert_eq!(macaulay_resultant(&planted).unwrap(), int(0));
    }

    #[test]
    fn perturbation_stage_agrees() {
        let s = sys(&["x0*x1 + x2^2", "x1*x2 - x0^2", "x0*x2 + 2*x1^2"]);
        let layout = MacaulayLayout::new(s.degrees());
        let via_perturbation = perturbed_resultant(&layout, &s).unwrap();
        assert_eq!(via_perturbation, macaulay_resultant(&s).unwrap());
    }

    #[test]
    fn scaling_degrees() {
        assert_eq!(scaling_degree(&[1, 1, 1], 1).unwrap(), 1);
        assert_eq!(scaling_degree(&[2, 3, 4], 2).unwrap(), 6);
        assert_eq!(scaling_degree(&[2, 3, 4], 1).unwrap(), 8);
        assert_eq!(scaling_degree(&[7], 0).unwrap(), 1);
    }

    #[test]
    fn parametric_examples() {
        let pv = parametric_resultant(1, |t| {
            let f = Polynomial::var(2, 0).try_sub(&Polynomial::var(2, 1).scale(t))?;
            FormSystem::new(vec![f, p("x0 + x1", 2)])
        })
        .unwrap();
        assert_eq!(pv.recovered.coeffs, vec![int(1), int(1)]);
        let c = parametric_resultant(0, |_| Ok(sys(&["x0 - x1", "x0 + x1"]))).unwrap();
        assert_eq!(c.recovered.coeffs, vec![int(2)]);
    }

    #[test]
    fn undersized_bound_is_detected() {
        let r = parametric_resultant(0, |t| {
            let f = Polynomial::var(2, 0).try_sub(&Polynomial::var(2, 1).scale(t))?;
            FormSystem::new(vec![f, p("x0 + x1", 2)])
        });
        assert!(matches!(r, Err(ElimError::InterpolationFailed(_))));
    }

    #[test]
    fn divisibility_examples() {
        let f = sys(&["x0 - x1", "x0 + 2*x1"]);
        let id = vec![
            vec![Polynomial::one(2), Polynomial::zero(2)],
            vec![Polynomial::zero(2), Polynomial::one(2)],
        ];
        let r = divisibility_check(&f, &f, &id).unwrap();
        assert_eq!(r.quotient, Some(int(1)));
        let g = FormSystem::new(vec![
            p("x0^2 - x0*x1", 2),
            p("x0 + 2*x1", 2),
        ])
        .unwrap();
        let cof = vec![
            vec![p("x0", 2), Polynomial::zero(2)],
            vec![Polynomial::zero(2), Polynomial::one(2)],
        ];
        let r = divisibility_check(&f, &g, &cof).unwrap();
        assert!(r.holds);
        let bad = vec![
            vec![p("x1", 2), Polynomial::zero(2)],
            vec![Polynomial::zero(2), Polynomial::one(2)],
        ];
        assert_eq!(divisibility_check(&f, &g, &bad), Err(ElimError::CertificateMismatch(0)));
    }

    #[test]
    fn normalization_small_tuples() {
        for d in [[1, 2, 3], [2, 2, 2], [3, 1, 2]] {
            assert_eq!(normalization_value(&d).unwrap(), int(1));
        }
    }
}
