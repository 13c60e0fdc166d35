//! Exact interpolation at integer nodes.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{ElimError, Result};
use crate::poly::{ExponentVector, Polynomial};
use crate::rational::int;
use crate::Rational;

/// Dense univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    pub coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// As a polynomial in one variable.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero(1);
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(ExponentVector::new(vec![k as u32]), c.clone());
        }
        p
    }
}

/// Newton interpolation through distinct nodes.
pub fn interpolate(samples: &[(Rational, Rational)]) -> Result<UniPoly> {
    let n = samples.len();
    for i in 0..n {
        for j in 0..i {
            if samples[i].0 == samples[j].0 {
                return Err(ElimError::InterpolationFailed("repeated node".into()));
            }
        }
    }
    let xs: Vec<&Rational> = samples.iter().map(|s| &s.0).collect();
    let mut dd: Vec<Rational> = samples.iter().map(|s| s.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner on the Newton basis.
    let mut coeffs: Vec<Rational> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    Ok(UniPoly::new(coeffs))
}

/// Evaluates `eval` at the integer nodes `0, 1, 2, ...`, skipping nodes where
/// it reports `None`, until `count` samples are collected. Evaluations run in
/// parallel batches; samples are returned in node order.
pub fn sample_at_integer_nodes<F>(
    count: usize,
    start: i64,
    max_skips: usize,
    eval: F,
) -> Result<Vec<(Rational, Rational)>>
where
    F: Fn(&Rational) -> Result<Option<Rational>> + Sync,
{
    let mut samples = Vec::with_capacity(count);
    let mut skips = 0usize;
    let mut next = start;
    while samples.len() < count {
        let want = count - samples.len();
        let batch: Vec<i64> = (next..next + want as i64).collect();
        next += want as i64;
        let results: Vec<Result<Option<Rational>>> = batch
            .par_iter()
            .map(|&u| eval(&int(u)))
            .collect();
        for (u, r) in batch.into_iter().zip(results) {
            match r? {
                Some(v) => samples.push((int(u), v)),
                None => {
                    skips += 1;
                    if skips > max_skips {
                        return Err(ElimError::InterpolationFailed(format!(
                            "too many failed nodes ({skips})"
                        )));
                    }
                }
            }
        }
    }
    Ok(samples)
}

/// Recovers a polynomial in `nvars` variables of degree at most `bound` in
/// each variable from its values on the grid `{0..=bound}^nvars`.
pub fn interpolate_dense<F>(nvars: usize, bound: u32, eval: &F) -> Result<Polynomial>
where
    F: Fn(&[Rational]) -> Result<Rational> + Sync,
{
    fn rec<F>(nvars: usize, bound: u32, fixed: &mut Vec<Rational>, eval: &F) -> Result<Polynomial>
    where
        F: Fn(&[Rational]) -> Result<Rational> + Sync,
    {
        let left = nvars - fixed.len();
        if left == 0 {
            return Ok(Polynomial::constant(0, eval(fixed)?));
        }
        let mut slices = Vec::with_capacity(bound as usize + 1);
        for v in 0..=bound {
            fixed.push(int(v as i64));
            slices.push(rec(nvars, bound, fixed, eval)?);
            fixed.pop();
        }
        let mut keys: Vec<ExponentVector> = slices
            .iter()
            .flat_map(|p| p.terms().map(|(e, _)| e.clone()))
            .collect();
        keys.sort();
        keys.dedup();
        let mut out = Polynomial::zero(left);
        for e in keys {
            let samples: Vec<(Rational, Rational)> = slices
                .iter()
                .enumerate()
                .map(|(v, p)| (int(v as i64), p.coeff(&e)))
                .collect();
            let uni = interpolate(&samples)?;
            for (k, c) in uni.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut exps = vec![k as u32];
                exps.extend_from_slice(e.as_slice());
                out.add_term(ExponentVector::new(exps), c.clone());
            }
        }
        Ok(out)
    }
    rec(nvars, bound, &mut Vec::new(), eval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::rational::frac;

    #[test]
    fn newton_recovers_cubic() {
        let f = |x: i64| int(3 * x * x * x - 2 * x + 7);
        let samples: Vec<_> = (0..6).map(|x| (int(x), f(x))).collect();
        let p = interpolate(&samples).unwrap();
        assert_eq!(p.coeffs, vec![int(7), int(-2), int(0), int(3)]);
        assert_eq!(p.valuation(), Some(0));
        assert_eq!(p.eval(&frac(1, 2)), int(7) - int(1) + frac(3, 8));
    }

    #[test]
    fn skipping_nodes_keeps_order() {
        let s = sample_at_integer_nodes(3, 0, 5, |u| {
            Ok(if *u == int(1) { None } else { Some(u * u) })
        })
        .unwrap();
        let xs: Vec<_> = s.iter().map(|p| p.0.clone()).collect();
        assert_eq!(xs, vec![int(0), int(2), int(3)]);
    }

    #[test]
    fn dense_multivariate() {
        let f = parse_polynomial("x0^2*x1 - 3*x1^2 + 1/2*x0 + 5", 2).unwrap();
        let g = interpolate_dense(2, 3, &|pt: &[Rational]| f.eval(pt)).unwrap();
        assert_eq!(g, f);
    }
}
