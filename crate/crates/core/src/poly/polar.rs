//! Polar operators, restriction of forms to lines, and the Hessian.

use num_traits::Zero;
use serde::Serialize;

use super::{ExponentVector, Polynomial};
use crate::error::{ElimError, Result};
use crate::Rational;

/// A lift `p̂ ∈ Q^{n+1}` of a projective point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearPoint {
    pub coords: Vec<Rational>,
}

impl LinearPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        LinearPoint { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LinearPoint {
            coords: coords.iter().map(|&c| crate::rational::int(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Whether the two lifts span the same projective point (or either is
    /// the origin).
    pub fn projectively_equal(&self, other: &LinearPoint) -> bool {
        let n = self.coords.len();
        for i in 0..n {
            for j in i + 1..n {
                let minor = &self.coords[i] * &other.coords[j] - &self.coords[j] * &other.coords[i];
                if !minor.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Euclidean pairing `Σ a_i b_i`, used to apply a linear form to a point.
    pub fn pairing(&self, other: &LinearPoint) -> Rational {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }
}

/// Contact order of a line with a hypersurface at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LineContact {
    Finite(u32),
    /// The line lies in the hypersurface.
    Contained,
}

impl LineContact {
    pub fn at_least(&self, m: u32) -> bool {
        match self {
            LineContact::Finite(k) => *k >= m,
            LineContact::Contained => true,
        }
    }
}

fn check_point(f: &Polynomial, a: &LinearPoint) -> Result<()> {
    if a.len() != f.nvars() {
        return Err(ElimError::NvarsMismatch {
            expected: f.nvars(),
            found: a.len(),
        });
    }
    Ok(())
}

/// `D_a f = Σ a_i ∂_i f`.
pub fn polar(f: &Polynomial, a: &LinearPoint) -> Result<Polynomial> {
    check_point(f, a)?;
    let mut out = Polynomial::zero(f.nvars());
    for (i, ai) in a.coords.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        out.add_in_place(&f.partial_derivative(i)?.scale(ai));
    }
    Ok(out)
}

/// `D_a^k f`, the polar operator applied `k` times.
pub fn polar_power(f: &Polynomial, a: &LinearPoint, k: u32) -> Result<Polynomial> {
    check_point(f, a)?;
    let d = f.degree().finite().unwrap_or(0);
    if !f.is_zero() && k > d {
        return Err(ElimError::DegreeTooSmall(format!(
            "polar power {k} exceeds degree {d}"
        )));
    }
    let mut g = f.clone();
    for _ in 0..k {
        g = polar(&g, a)?;
    }
    Ok(g)
}

/// The binary form `f(α·a + β·b)` in the variables `(α, β)`.
pub fn restrict_to_line(f: &Polynomial, a: &LinearPoint, b: &LinearPoint) -> Result<Polynomial> {
    check_point(f, a)?;
    check_point(f, b)?;
    if a.projectively_equal(b) {
        return Err(ElimError::EqualPoints);
    }
    let images: Vec<Polynomial> = a
        .coords
        .iter()
        .zip(&b.coords)
        .map(|(ai, bi)| {
            let mut p = Polynomial::zero(2);
            p.add_term(ExponentVector::new(vec![1, 0]), ai.clone());
            p.add_term(ExponentVector::new(vec![0, 1]), bi.clone());
            p
        })
        .collect();
    f.compose(&images)
}

/// Intersection multiplicity at `a` of `V(f)` with the line `⟨a, b⟩`.
pub fn line_intersection_multiplicity(
    f: &Polynomial,
    a: &LinearPoint,
    b: &LinearPoint,
) -> Result<LineContact> {
    check_point(f, a)?;
    if !f.eval(&a.coords)?.is_zero() {
        return Err(ElimError::PointNotOnHypersurface);
    }
    let r = restrict_to_line(f, a, b)?;
    Ok(match r.valuation_in(1) {
        None => LineContact::Contained,
        Some(v) => LineContact::Finite(v),
    })
}

/// Whether `a ∈ V(D_b^k f)` for every `k ≤ s`, the polar side of the contact
/// criterion for lines.
pub fn polar_criterion_holds(f: &Polynomial, a: &LinearPoint, b: &LinearPoint, s: u32) -> Result<bool> {
    check_point(f, a)?;
    check_point(f, b)?;
    let d = f.degree().finite().unwrap_or(0);
    let mut g = f.clone();
    for k in 0..=s.min(d) {
        if k > 0 {
            g = polar(&g, b)?;
        }
        if !g.eval(&a.coords)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Determinant of the matrix of second partial derivatives.
pub fn hessian(f: &Polynomial) -> Result<Polynomial> {
    let d = f.homogeneous_total_degree().ok_or_else(|| {
        if f.is_zero() {
            ElimError::ZeroPolynomial
        } else {
            ElimError::NotHomogeneous(f.to_string())
        }
    })?;
    if d < 2 {
        return Err(ElimError::DegreeTooSmall(format!(
            "the Hessian needs degree >= 2, got {d}"
        )));
    }
    let n = f.nvars();
    let first: Vec<Polynomial> = (0..n)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;
    let mut matrix = vec![Vec::with_capacity(n); n];
    for (i, row) in matrix.iter_mut().enumerate() {
        for j in 0..n {
            row.push(first[i].partial_derivative(j)?);
        }
    }
    Ok(polynomial_determinant(&matrix, n))
}

/// Laplace expansion along the first row; intended for the small matrices
/// that come up as Hessians.
pub(crate) fn polynomial_determinant(matrix: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    fn rec(matrix: &[Vec<Polynomial>], rows: &[usize], cols: &[usize], nvars: usize) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one(nvars);
        }
        let r = rows[0];
        let mut acc = Polynomial::zero(nvars);
        for (idx, &c) in cols.iter().enumerate() {
            let entry = &matrix[r][c];
            if entry.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = rec(matrix, &rows[1..], &sub_cols, nvars);
            let term = entry * &minor;
            if idx % 2 == 0 {
                acc.add_in_place(&term);
            } else {
                acc.add_in_place(&-&term);
            }
        }
        acc
    }
    let idx: Vec<usize> = (0..matrix.len()).collect();
    rec(matrix, &idx, &idx, nvars)
}
