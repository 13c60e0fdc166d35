//! Reference computations written independently of the library's
//! elimination code: a dense Macaulay quotient with its own monomial
//! order and determinant, Sylvester matrices, Newton interpolation and
//! classical discriminant formulas. Only polynomial storage and evaluation
//! come from the library.

#![allow(dead_code)]

use std::collections::HashMap;

use elimkit_core::{ExponentVector, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Determinant by fraction-free elimination, pivoting on the first
/// nonzero entry of each column.
pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a rational matrix: each row is scaled to integers.
pub fn det(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    Rational::new(bareiss(rows), scale)
}

/// All exponent vectors of total degree `t` in `n` variables.
fn exponents(n: usize, t: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![t]];
    }
    let mut out = Vec::new();
    for first in (0..=t).rev() {
        for mut rest in exponents(n - 1, t - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn degree(f: &Polynomial) -> u32 {
    f.homogeneous_total_degree().expect("nonzero homogeneous form")
}

/// `det M / det M'` for the Macaulay matrix, or `None` when `det M' = 0`.
fn macaulay_ratio(forms: &[Polynomial], degrees: &[u32]) -> Option<Rational> {
    let n = forms.len();
    let t: u32 = degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
    let monos = exponents(n, t);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let size = monos.len();
    let mut m = vec![vec![Rational::zero(); size]; size];
    let mut extraneous = Vec::new();
    for (r, mono) in monos.iter().enumerate() {
        let divisible: Vec<usize> = (0..n).filter(|&i| mono[i] >= degrees[i]).collect();
        if divisible.len() >= 2 {
            extraneous.push(r);
        }
        let i = divisible[0];
        let mut shift = mono.clone();
        shift[i] -= degrees[i];
        for (e, c) in forms[i].terms() {
            let col: Vec<u32> = e.as_slice().iter().zip(&shift).map(|(a, b)| a + b).collect();
            m[r][index[&col]] += c;
        }
    }
    let minor: Vec<Vec<Rational>> = extraneous
        .iter()
        .map(|&r| extraneous.iter().map(|&c| m[r][c].clone()).collect())
        .collect();
    let den = det(&minor);
    if den.is_zero() {
        return None;
    }
    Some(det(&m) / den)
}

/// Resultant of `n` forms in `n` variables, normalized so that
/// `Res(x_0^{d_0}, ..., x_{n-1}^{d_{n-1}}) = 1`. A vanishing extraneous
/// minor is avoided by random changes of coordinates `A`, undone with
/// `Res(f∘A) = det(A)^{∏d} Res(f)`.
pub fn resultant_with_degrees(forms: &[Polynomial], degrees: &[u32]) -> Rational {
    if let Some(v) = macaulay_ratio(forms, degrees) {
        return v;
    }
    let n = forms.len();
    let total: u32 = degrees.iter().product();
    let mut rng = ChaCha20Rng::seed_from_u64(0x0_4ac1e);
    for _ in 0..40 {
        let a: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| q(rng.gen_range(-2..=2))).collect())
            .collect();
        let da = det(&a);
        if da.is_zero() {
            continue;
        }
        let moved: Vec<Polynomial> = forms.iter().map(|f| f.linear_change(&a).unwrap()).collect();
        if let Some(v) = macaulay_ratio(&moved, degrees) {
            return v / num_traits::pow(da, total as usize);
        }
    }
    panic!("oracle could not find a regular Macaulay minor");
}

pub fn resultant(forms: &[Polynomial]) -> Rational {
    let degrees: Vec<u32> = forms.iter().map(degree).collect();
    resultant_with_degrees(forms, &degrees)
}

/// Sylvester determinant of two binary forms; coefficients are listed by
/// decreasing power of `x_0`.
pub fn sylvester(f: &Polynomial, m: u32, g: &Polynomial, n: u32) -> Rational {
    let coeffs = |p: &Polynomial, d: u32| -> Vec<Rational> {
        (0..=d).map(|i| p.coeff_of(&[d - i, i])).collect()
    };
    let (a, b) = (coeffs(f, m), coeffs(g, n));
    let size = (m + n) as usize;
    let mut s = vec![vec![Rational::zero(); size]; size];
    for r in 0..n as usize {
        for (i, c) in a.iter().enumerate() {
            s[r][r + i] = c.clone();
        }
    }
    for r in 0..m as usize {
        for (i, c) in b.iter().enumerate() {
            s[n as usize + r][r + i] = c.clone();
        }
    }
    det(&s)
}

/// `a(n, d) = ((d-1)^{n+1} - (-1)^{n+1}) / d` for a form in `n+1` variables.
pub fn a_exponent(nvars: usize, d: u32) -> u32 {
    let top = (d as i64 - 1).pow(nvars as u32);
    let sign = if nvars.is_multiple_of(2) { 1 } else { -1 };
    ((top - sign) / d as i64) as u32
}

/// `Res(∂_0 f, ..., ∂_n f) / d^{a(n,d)}`; a one-variable form `c x^d` has
/// discriminant `c`.
pub fn discriminant(f: &Polynomial) -> Rational {
    let d = degree(f);
    let n = f.nvars();
    let partials: Vec<Polynomial> = (0..n).map(|i| f.partial_derivative(i).unwrap()).collect();
    let r = resultant_with_degrees(&partials, &vec![d - 1; n]);
    r / num_traits::pow(q(d as i64), a_exponent(n, d) as usize)
}

/// Classical formulas in the library's normalization: `4ac - b²` for binary
/// quadratics, minus the classical discriminant for binary cubics,
/// `4 det S` for ternary quadrics `x^T S x`.
pub fn classical_discriminant(f: &Polynomial) -> Rational {
    let d = degree(f);
    let c = |e: &[u32]| f.coeff_of(e);
    match (f.nvars(), d) {
        (1, _) => c(&[d]),
        (2, 2) => {
            let (a, b, cc) = (c(&[2, 0]), c(&[1, 1]), c(&[0, 2]));
            q(4) * a * cc - &b * &b
        }
        (2, 3) => {
            let (a, b, cc, dd) = (c(&[3, 0]), c(&[2, 1]), c(&[1, 2]), c(&[0, 3]));
            let delta = &b * &b * &cc * &cc - q(4) * &a * &cc * &cc * &cc - q(4) * &b * &b * &b * &dd
                - q(27) * &a * &a * &dd * &dd
                + q(18) * &a * &b * &cc * &dd;
            -delta
        }
        (3, 2) => {
            let half = Rational::new(BigInt::one(), BigInt::from(2));
            let mut s = vec![vec![Rational::zero(); 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    let mut e = [0u32; 3];
                    e[i] += 1;
                    e[j] += 1;
                    s[i][j] = if i == j { c(&e) } else { c(&e) * &half };
                }
            }
            q(4) * det(&s)
        }
        other => panic!("no classical formula for {other:?}"),
    }
}

/// Coefficients (lowest first) of the polynomial through the samples.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut coeffs = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![Rational::zero(); n];
        for i in 0..n {
            if i + 1 < n {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

pub fn valuation(coeffs: &[Rational]) -> Option<usize> {
    coeffs.iter().position(|c| !c.is_zero())
}

/// `e_i` as a point.
pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()
}

pub fn monomial(n: usize, exps: &[u32], c: Rational) -> Polynomial {
    assert_eq!(exps.len(), n);
    Polynomial::monomial(c, ExponentVector::new(exps.to_vec()))
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
