use serde::Serialize;

use super::{ExponentVector, Polynomial};
use crate::error::{ElimError, Result};

/// Which weight rule a grading uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GradingKind {
    Standard,
    /// weight `α_k`
    CoordinateWeight { k: usize },
    /// weight `d - α_k`
    CoWeight { k: usize },
    /// weight `max(0, α_k - d + s)`
    Zariski { s: u32, k: usize },
}

/// A weight assignment to the monomials of forms of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradingSpec {
    pub kind: GradingKind,
    pub d: u32,
}

/// Outcome of [`GradingSpec::homogeneous_degree`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(u32),
    NotHomogeneous,
}

impl GradingSpec {
    pub fn standard() -> Self {
        GradingSpec {
            kind: GradingKind::Standard,
            d: 0,
        }
    }

    pub fn coordinate_weight(k: usize) -> Self {
        GradingSpec {
            kind: GradingKind::CoordinateWeight { k },
            d: 0,
        }
    }

    pub fn co_weight(k: usize, d: u32) -> Self {
        GradingSpec {
            kind: GradingKind::CoWeight { k },
            d,
        }
    }

    pub fn zariski(s: u32, k: usize, d: u32) -> Self {
        GradingSpec {
            kind: GradingKind::Zariski { s, k },
            d,
        }
    }

    /// Weight of the monomial `x^α` as a term of a polynomial. The standard
    /// grading gives the total degree.
    pub fn term_weight(&self, exps: &ExponentVector) -> u32 {
        match self.kind {
            GradingKind::Standard => exps.total_degree(),
            _ => self.slot_weight(exps),
        }
    }

    /// Weight of the coefficient slot `u_α` of a generic form of degree `d`.
    /// The standard grading gives every slot weight one.
    pub fn slot_weight(&self, exps: &ExponentVector) -> u32 {
        match self.kind {
            GradingKind::Standard => 1,
            GradingKind::CoordinateWeight { k } => exps.get(k),
            GradingKind::CoWeight { k } => self.d.saturating_sub(exps.get(k)),
            GradingKind::Zariski { s, k } => (exps.get(k) + s).saturating_sub(self.d),
        }
    }

    /// Common term weight of `f`, if there is one.
    pub fn homogeneous_degree(&self, f: &Polynomial) -> Result<Homogeneity> {
        let mut weights = f.terms().map(|(e, _)| self.term_weight(e));
        let first = weights.next().ok_or(ElimError::ZeroPolynomial)?;
        Ok(if weights.all(|w| w == first) {
            Homogeneity::Homogeneous(first)
        } else {
            Homogeneity::NotHomogeneous
        })
    }

    /// Smallest term weight.
    pub fn weighted_valuation(&self, f: &Polynomial) -> Result<u32> {
        f.terms()
            .map(|(e, _)| self.term_weight(e))
            .min()
            .ok_or(ElimError::ZeroPolynomial)
    }

    /// Largest term weight.
    pub fn weighted_top(&self, f: &Polynomial) -> Result<u32> {
        f.terms()
            .map(|(e, _)| self.term_weight(e))
            .max()
            .ok_or(ElimError::ZeroPolynomial)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{monomials_of_degree, parse_polynomial};

    #[test]
    fn standard_homogeneity() {
        let g = GradingSpec::standard();
        let f = parse_polynomial("x0^2 + x0*x1", 2).unwrap();
        assert_eq!(g.homogeneous_degree(&f).unwrap(), Homogeneity::Homogeneous(2));
        let f = parse_polynomial("x0^2 + x1", 2).unwrap();
        assert_eq!(g.homogeneous_degree(&f).unwrap(), Homogeneity::NotHomogeneous);
        assert_eq!(
            g.homogeneous_degree(&Polynomial::zero(2)),
            Err(ElimError::ZeroPolynomial)
        );
    }

    #[test]
    fn zariski_slot_of_cubic() {
        let z = GradingSpec::zariski(2, 0, 3);
        assert_eq!(z.slot_weight(&ExponentVector::new(vec![2, 1])), 1);
        assert_eq!(z.slot_weight(&ExponentVector::new(vec![0, 3])), 0);
        assert_eq!(z.slot_weight(&ExponentVector::new(vec![3, 0])), 2);
    }

    #[test]
    fn coordinate_and_co_weights() {
        let f = parse_polynomial("x0^2*x1 + x1^3", 2).unwrap();
        let c = GradingSpec::coordinate_weight(0);
        assert_eq!(c.weighted_valuation(&f).unwrap(), 0);
        assert_eq!(c.weighted_top(&f).unwrap(), 2);
        let co = GradingSpec::co_weight(0, 3);
        assert_eq!(co.weighted_valuation(&f).unwrap(), 1);
        assert_eq!(co.weighted_top(&f).unwrap(), 3);
    }

    #[test]
    fn zariski_weight_zero_exactly_on_truncation() {
        for d in 1..=5u32 {
            for s in 1..=d {
                let z = GradingSpec::zariski(s, 0, d);
                for m in monomials_of_degree(3, d) {
                    let in_truncation = m.get(0) <= d - s;
                    assert_eq!(z.slot_weight(&m) == 0, in_truncation);
                    assert!(z.slot_weight(&m) <= s);
                }
            }
        }
    }
}
