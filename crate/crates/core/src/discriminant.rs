//! Discriminants of homogeneous forms, normalized by `d^{a(n,d)}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{ElimError, Result};
use crate::interp::UniPoly;
use crate::poly::Polynomial;
use crate::resultant::{macaulay_resultant, parametric_resultant, FormSystem, ParametricValue};
use crate::Rational;

/// `a(n,d) = ((d-1)^{n+1} - (-1)^{n+1}) / d`.
pub fn a_constant(n: u32, d: u32) -> Result<BigInt> {
    if d == 0 {
        return Err(ElimError::DegreeTooSmall("degree 0".into()));
    }
    let top = num_traits::pow(BigInt::from(d as i64 - 1), n as usize + 1);
    let sign = if (n + 1).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let (q, r) = (top - sign).div_rem(&BigInt::from(d));
    if !r.is_zero() {
        return Err(ElimError::Internal(format!("a({n},{d}) is not integral")));
    }
    Ok(q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantResult {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub value: Rational,
    pub degree_d: u32,
    pub nvars: usize,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub divisor_constant: BigInt,
}

fn form_degree(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(ElimError::ZeroPolynomial);
    }
    let d = f
        .homogeneous_total_degree()
        .ok_or_else(|| ElimError::NotHomogeneous(f.to_string()))?;
    if d < 2 {
        return Err(ElimError::DegreeTooSmall(format!(
            "discriminant needs degree at least 2, got {d}"
        )));
    }
    Ok(d)
}

/// The partial derivatives of `f` as a form system of degree `d-1`.
pub fn partials_system(f: &Polynomial, d: u32) -> Result<FormSystem> {
    let partials = (0..f.nvars())
        .map(|i| f.partial_derivative(i))
        .collect::<Result<Vec<_>>>()?;
    FormSystem::with_degrees(partials, vec![d - 1; f.nvars()])
}

fn divisor_constant(nvars: usize, d: u32) -> Result<BigInt> {
    let a = a_constant(nvars as u32 - 1, d)?;
    let a: usize = a
        .try_into()
        .map_err(|_| ElimError::Internal("a(n,d) too large".into()))?;
    Ok(num_traits::pow(BigInt::from(d), a))
}

/// `Disc(f) = Res(∂_0 f, ..., ∂_n f) / d^{a(n,d)}`.
pub fn discriminant(f: &Polynomial) -> Result<DiscriminantResult> {
    let d = form_degree(f)?;
    let res = macaulay_resultant(&partials_system(f, d)?)?;
    let divisor_constant = divisor_constant(f.nvars(), d)?;
    if f.has_integer_coefficients() && res.is_integer() && !(res.numer() % &divisor_constant).is_zero() {
        return Err(ElimError::Internal(format!(
            "resultant of partials {res} not divisible by {divisor_constant}"
        )));
    }
    Ok(DiscriminantResult {
        value: res / Rational::from_integer(divisor_constant.clone()),
        degree_d: d,
        nvars: f.nvars(),
        divisor_constant,
    })
}

pub fn discriminant_value(f: &Polynomial) -> Result<Rational> {
    discriminant(f).map(|r| r.value)
}

/// Smooth iff the discriminant does not vanish.
pub fn smoothness_test(f: &Polynomial) -> Result<bool> {
    Ok(!discriminant_value(f)?.is_zero())
}

/// Discriminant of a family of forms of fixed degree `d` in `nvars`
/// variables, as a polynomial in the parameter.
pub fn parametric_discriminant<F>(
    nvars: usize,
    d: u32,
    degree_bound: usize,
    build: F,
) -> Result<ParametricValue>
where
    F: Fn(&Rational) -> Result<Polynomial> + Sync,
{
    if d < 2 {
        return Err(ElimError::DegreeTooSmall(format!("degree {d}")));
    }
    let c = Rational::from_integer(divisor_constant(nvars, d)?);
    let pv = parametric_resultant(degree_bound, |u| {
        let f = build(u)?;
        if f.nvars() != nvars {
            return Err(ElimError::NvarsMismatch {
                expected: nvars,
                found: f.nvars(),
            });
        }
        partials_system(&f, d)
    })?;
    Ok(ParametricValue {
        samples: pv
            .samples
            .into_iter()
            .map(|(u, v)| (u, v / &c))
            .collect(),
        recovered: UniPoly::new(pv.recovered.coeffs.iter().map(|v| v / &c).collect()),
        degree_bound: pv.degree_bound,
    })
}

/// Both sides of `Res(∂_1 f, ..., ∂_n f, f) = Disc(f) · Disc(f̄)`, where
/// `f̄ = f(0, x_1, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub disc_f: Option<Rational>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub disc_slice: Option<Rational>,
    /// `None` when the check was skipped.
    pub holds: Option<bool>,
    pub skipped: Option<String>,
}

pub fn euler_factorization_check(f: &Polynomial) -> Result<EulerReport> {
    let d = form_degree(f)?;
    if f.nvars() < 2 {
        return Err(ElimError::InvalidInput(
            "the identity needs at least two variables".into(),
        ));
    }
    let slice = f.specialize_var(0, &Rational::zero())?;
    if slice.is_zero() {
        return Ok(EulerReport {
            lhs: None,
            disc_f: None,
            disc_slice: None,
            holds: None,
            skipped: Some("degenerate slice".into()),
        });
    }
    let n = f.nvars();
    let mut forms = (1..n)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<Vec<_>>>()?;
    forms.push(f.clone());
    let mut degrees = vec![d - 1; n - 1];
    degrees.push(d);
    let lhs = macaulay_resultant(&FormSystem::with_degrees(forms, degrees)?)?;
    let disc_f = discriminant_value(f)?;
    let disc_slice = discriminant_value(&slice)?;
    Ok(EulerReport {
        holds: Some(lhs == &disc_f * &disc_slice),
        lhs: Some(lhs),
        disc_f: Some(disc_f),
        disc_slice: Some(disc_slice),
        skipped: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightRule {
    CoordinateWeight,
    CoWeight,
}

/// Weighted degree of the discriminant: `d(d-1)^n`, times `n` for co-weight.
pub fn disc_weight_degree(n: u32, d: u32, rule: WeightRule) -> u64 {
    let base = d as u64 * (d as u64 - 1).pow(n);
    match rule {
        WeightRule::CoordinateWeight => base,
        WeightRule::CoWeight => n as u64 * base,
    }
}

/// Standard degree `(n+1)(d-1)^n`.
pub fn disc_standard_degree(n: u32, d: u32) -> u64 {
    (n as u64 + 1) * (d as u64 - 1).pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rational::int;

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn a_constant_examples() {
        assert_eq!(a_constant(1, 2).unwrap(), BigInt::from(0));
        assert_eq!(a_constant(2, 2).unwrap(), BigInt::from(1));
        assert_eq!(a_constant(2, 3).unwrap(), BigInt::from(3));
        for n in 0..6 {
            for d in 1..8 {
                assert!(a_constant(n, d).is_ok());
            }
        }
    }

    #[test]
    fn binary_quadric() {
        assert_eq!(discriminant_value(&p("x0^2 + x1^2", 2)).unwrap(), int(4));
        let (a, b, c) = (3, -5, 7);
        let f = Polynomial::from_int_terms(2, &[(&[2, 0], a), (&[1, 1], b), (&[0, 2], c)]);
        assert_eq!(discriminant_value(&f).unwrap(), int(4 * a * c - b * b));
    }

    #[test]
    fn examples() {
        assert_eq!(discriminant_value(&p("x0^2*x1", 2)).unwrap(), int(0));
        let r = discriminant(&p("x0^2 + x1^2 + x2^2", 3)).unwrap();
        assert_eq!(r.value, int(4));
        assert_eq!(r.divisor_constant, BigInt::from(2));
        assert!(smoothness_test(&p("x0^3 + x1^3 + x2^3", 3)).unwrap());
        assert!(!smoothness_test(&p("x0*x1*x2", 3)).unwrap());
        assert!(!smoothness_test(&p("x0^2", 2)).unwrap());
        assert!(matches!(discriminant(&p("x0 + x1", 2)), Err(ElimError::DegreeTooSmall(_))));
    }

    #[test]
    fn one_variable_form() {
        assert_eq!(discriminant_value(&p("-3*x0^4", 1)).unwrap(), int(-3));
    }

    #[test]
    fn euler_identity_instances() {
        let r = euler_factorization_check(&p("x0^2 + x1^2", 2)).unwrap();
        assert_eq!(r.lhs, Some(int(4)));
        assert_eq!(r.holds, Some(true));
        let r = euler_factorization_check(&p("x0^3 - 2*x0*x1*x2 + x1^3 + 3*x2^3 + x1*x2^2", 3)).unwrap();
        assert_eq!(r.holds, Some(true));
        let r = euler_factorization_check(&p("x0*x1 + x0^2", 2)).unwrap();
        assert_eq!(r.skipped.as_deref(), Some("degenerate slice"));
    }

    #[test]
    fn weight_degrees() {
        assert_eq!(disc_weight_degree(2, 3, WeightRule::CoordinateWeight), 12);
        assert_eq!(disc_weight_degree(1, 2, WeightRule::CoordinateWeight), 2);
        assert_eq!(disc_weight_degree(2, 2, WeightRule::CoWeight), 4);
        assert_eq!(disc_standard_degree(2, 3), 12);
    }

    #[test]
    fn parametric_binary_quadric() {
        let pv = parametric_discriminant(2, 2, 2, |t| {
            Ok(p("x0^2 + x0*x1", 2).try_add(&p("x1^2", 2).scale(t))?)
        })
        .unwrap();
        assert_eq!(pv.recovered.coeffs, vec![int(-1), int(4)]);
    }
}
