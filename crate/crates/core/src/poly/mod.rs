//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`ExponentVector`], whose ordering
//! is graded lexicographic with `x0 > x1 > ... > xn`. Iteration through
//! [`Polynomial::terms`] yields the leading term first, which is also the
//! printing order.

mod grading;
mod parse;
mod polar;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{ElimError, Result};
use crate::Rational;

pub use grading::{GradingKind, GradingSpec, Homogeneity};
pub use parse::parse_polynomial;
pub use polar::{
    hessian, line_intersection_multiplicity, polar, polar_criterion_holds, polar_power,
    restrict_to_line, LineContact, LinearPoint,
};

/// Multi-index of a monomial, one exponent per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    /// `x_i` as an exponent vector.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `degree` in `nvars` variables,
/// in decreasing graded-lex order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<ExponentVector> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i + 1 == nvars {
            cur[i] = left;
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if degree == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0; nvars];
    rec(nvars, 0, degree, &mut cur, &mut out);
    out
}

/// Degree of a polynomial; the zero polynomial has its own marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Zero => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(c, ExponentVector::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        Self::monomial(Rational::one(), ExponentVector::unit(nvars, i))
    }

    pub fn monomial(coeff: Rational, exps: ExponentVector) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Polynomial { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(ElimError::NvarsMismatch {
                    expected: nvars,
                    found: e.len(),
                });
            }
            p.add_term(ExponentVector(e), c);
        }
        Ok(p)
    }

    /// Convenience constructor for integer coefficients.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (e.to_vec(), Rational::from_integer(BigInt::from(*c)))),
        )
        .expect("exponent length matches nvars")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &ExponentVector) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> Rational {
        self.coeff(&ExponentVector(exps.to_vec()))
    }

    pub fn add_term(&mut self, exps: ExponentVector, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    /// `self += other`; panics on a variable-count mismatch.
    pub fn add_in_place(&mut self, other: &Polynomial) {
        assert_eq!(self.nvars, other.nvars, "polynomial variable counts differ");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn check_nvars(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(ElimError::NvarsMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_nvars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(ExponentVector::total_degree)
            .max()
            .map_or(Degree::Zero, Degree::Finite)
    }

    /// Degree of a homogeneous polynomial, `None` for the zero polynomial
    /// or a non-homogeneous one.
    pub fn homogeneous_total_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(ExponentVector::total_degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_total_degree().is_some()
    }

    /// Largest exponent of `x_i` appearing.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(i)).max()
    }

    /// Smallest exponent of `x_i` appearing.
    pub fn valuation_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(i)).min()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.nvars {
            return Err(ElimError::VariableOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        Ok(())
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(i);
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne.0[i] -= 1;
            out.add_term(ne, c * Rational::from_integer(BigInt::from(k)));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(ElimError::NvarsMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; self.nvars];
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[k as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes `x_i ↦ value`, keeping the variable count.
    pub fn substitute_variable(&self, i: usize, value: &Polynomial) -> Result<Polynomial> {
        self.check_index(i)?;
        self.check_nvars(value)?;
        let mut powers = vec![Polynomial::one(self.nvars)];
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(i) as usize;
            while powers.len() <= k {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest.0[i] = 0;
            let head = Polynomial::monomial(c.clone(), rest);
            out.add_in_place(&(&head * &powers[k]));
        }
        Ok(out)
    }

    /// Composition `f(images[0], ..., images[n])`; all images share a
    /// variable count, which becomes the variable count of the result.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(ElimError::NvarsMismatch {
                expected: self.nvars,
                found: images.len(),
            });
        }
        let target = images.first().map_or(0, Polynomial::nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(ElimError::NvarsMismatch {
                expected: target,
                found: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(target)]; self.nvars];
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                t = &t * &pw[k as usize];
            }
            out.add_in_place(&t);
        }
        Ok(out)
    }

    /// Linear change of coordinates `f(M x)`, with `M` given by rows.
    pub fn linear_change(&self, matrix: &[Vec<Rational>]) -> Result<Polynomial> {
        let n = self.nvars;
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(ElimError::InvalidInput(format!(
                "coordinate change must be {n}x{n}"
            )));
        }
        let images: Vec<Polynomial> = matrix
            .iter()
            .map(|row| {
                let mut p = Polynomial::zero(n);
                for (j, a) in row.iter().enumerate() {
                    p.add_term(ExponentVector::unit(n, j), a.clone());
                }
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Sets `x_i = value` and removes the variable, giving a polynomial in
    /// one fewer variable.
    pub fn specialize_var(&self, i: usize, value: &Rational) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let k = e.get(i);
            let mut ne = e.0.clone();
            ne.remove(i);
            let factor = if k == 0 {
                Rational::one()
            } else {
                num_traits::pow(value.clone(), k as usize)
            };
            out.add_term(ExponentVector(ne), c * factor);
        }
        Ok(out)
    }

    /// Terms whose `x_i` exponent equals `k`, with `x_i` removed.
    pub fn slice_in(&self, i: usize, k: u32) -> Result<Polynomial> {
        self.check_index(i)?;
        let mut out = Polynomial::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            if e.get(i) == k {
                let mut ne = e.0.clone();
                ne.remove(i);
                out.add_term(ExponentVector(ne), c.clone());
            }
        }
        Ok(out)
    }

    /// Re-embeds the polynomial into `nvars` variables, sending variable
    /// `j` to `mapping[j]`.
    pub fn embed(&self, nvars: usize, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.nvars {
            return Err(ElimError::NvarsMismatch {
                expected: self.nvars,
                found: mapping.len(),
            });
        }
        if let Some(&bad) = mapping.iter().find(|&&m| m >= nvars) {
            return Err(ElimError::VariableOutOfRange { index: bad, nvars });
        }
        let mut out = Polynomial::zero(nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; nvars];
            for (j, &k) in e.0.iter().enumerate() {
                ne[mapping[j]] += k;
            }
            out.add_term(ExponentVector(ne), c.clone());
        }
        Ok(out)
    }

    /// Keeps only terms accepted by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&ExponentVector) -> bool) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divides every term by the monomial `divisor`, failing if some term is
    /// not divisible.
    pub fn div_monomial(&self, divisor: &ExponentVector) -> Option<Polynomial> {
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.checked_sub(divisor)?, c.clone());
        }
        Some(out)
    }

    /// Multiplies by the monomial `x^m`.
    pub fn mul_monomial(&self, m: &ExponentVector) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(m), c.clone()))
                .collect(),
        }
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn max_abs_coefficient(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.total_degree() == 0;
            let mut wrote = false;
            if is_const || !abs.is_one() {
                write!(f, "{}", crate::rational::format_rational(&abs))?;
                wrote = true;
            }
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "x{i}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}
