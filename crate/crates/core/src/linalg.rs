//! Exact linear algebra: fraction-free determinants, ranks, and integer
//! unimodular transformations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::lcm_denominators;
use crate::Rational;

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let trivial_scale = pivot == &prev;
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            if factor.is_zero() {
                if trivial_scale {
                    continue;
                }
                for x in row[k + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * pivot / &prev;
                    }
                }
                continue;
            }
            for (x, pk) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                let mut v = if x.is_zero() { BigInt::zero() } else { &*x * pivot };
                if !pk.is_zero() {
                    v -= &factor * pk;
                }
                *x = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Clears denominators row by row, returning the integer matrix and the
/// product of the row multipliers.
pub fn clear_denominators(m: &[Vec<Rational>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let l = lcm_denominators(row.iter());
            let out = row
                .iter()
                .map(|v| v.numer() * (&l / v.denom()))
                .collect::<Vec<_>>();
            scale *= &l;
            out
        })
        .collect();
    (rows, scale)
}

/// Determinant over the rationals: denominators are cleared per row and the
/// integer determinant is taken by Bareiss elimination.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let (ints, scale) = clear_denominators(m);
    Rational::new(det_bigint(ints), scale)
}

/// Rank over the rationals.
pub fn rank_rational(m: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &pivot;
                for j in c..cols {
                    let v = &f * &a[rank][j];
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Some solution of `m x = rhs`, if the system is consistent.
pub fn solve_rational(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut r = r.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for v in a[rank].iter_mut() {
            *v = &*v / &pivot;
        }
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in c..=cols {
                    let v = &f * &a[rank][j];
                    a[r][j] -= v;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if a[rank..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = a[r][cols].clone();
    }
    Some(x)
}

/// Integer unimodular transformation reducing a vector to a multiple of the
/// first basis vector.
#[derive(Clone, Debug)]
pub struct UnimodularReduction {
    /// `u · v = g · e_0`
    pub u: Vec<Vec<BigInt>>,
    /// The inverse of `u`; its first column is `v / g`.
    pub u_inv: Vec<Vec<BigInt>>,
    pub g: BigInt,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

/// Euclidean reduction of an integer vector by elementary row operations.
/// Returns `None` for the zero vector.
pub fn reduce_vector(v: &[BigInt]) -> Option<UnimodularReduction> {
    let n = v.len();
    let mut w = v.to_vec();
    let mut u = identity(n);
    let mut u_inv = identity(n);
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !w[i].is_zero()).collect();
        let &p = nonzero.iter().min_by_key(|&&i| w[i].abs())?;
        if nonzero.len() == 1 {
            if p != 0 {
                w.swap(0, p);
                u.swap(0, p);
                for row in u_inv.iter_mut() {
                    row.swap(0, p);
                }
            }
            return Some(UnimodularReduction {
                u,
                u_inv,
                g: w[0].clone(),
            });
        }
        for &i in &nonzero {
            if i == p {
                continue;
            }
            let q = w[i].div_floor(&w[p]);
            let t = &q * &w[p];
            w[i] -= t;
            // row_i -= q row_p on u; col_p += q col_i on u_inv
            let rp = u[p].clone();
            for (x, y) in u[i].iter_mut().zip(&rp) {
                *x -= &q * y;
            }
            for row in u_inv.iter_mut() {
                let t = &q * &row[i];
                row[p] += t;
            }
        }
    }
}

/// Integer determinant helper for small unimodular matrices.
pub fn det_int_small(m: &[Vec<BigInt>]) -> BigInt {
    det_bigint(m.to_vec())
}

/// Converts an integer matrix to rationals.
pub fn to_rational_matrix(m: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
        .collect()
}

/// Primitive integer vector spanning the same line as `coords`.
pub fn primitive_integer_vector(coords: &[Rational]) -> Option<Vec<BigInt>> {
    if coords.iter().all(Zero::is_zero) {
        return None;
    }
    let l = lcm_denominators(coords.iter());
    let ints: Vec<BigInt> = coords.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}
