//! Seeded random instances shared by the verification suites, benches and
//! tests.

use rand::Rng;

use crate::error::Result;
use crate::linalg::solve_rational;
use crate::poly::{ExponentVector, LinearPoint, Polynomial};
use crate::random::{random_form, random_form_where, random_int, random_point};
use crate::rational::int;
use crate::reduced::{TruncatedSystem, TruncationSpec};
use crate::salmon::NormalFormHypersurface;
use crate::Rational;

/// Random truncation of order `s` at `(1:0:...:0)`.
pub fn random_truncation(rng: &mut impl Rng, nvars: usize, d: u32, s: u32, bound: i64) -> Polynomial {
    random_form_where(rng, nvars, d, bound, |e| e.get(0) + s <= d)
}

pub fn random_truncated_system(
    rng: &mut impl Rng,
    degrees: &[u32],
    orders: &[u32],
    bound: i64,
) -> Result<TruncatedSystem> {
    let n = degrees.len();
    let forms = degrees
        .iter()
        .zip(orders)
        .map(|(&d, &s)| random_truncation(rng, n, d, s, bound))
        .collect();
    let specs = degrees
        .iter()
        .zip(orders)
        .map(|(&d, &s)| TruncationSpec::new(d, s))
        .collect::<Result<Vec<_>>>()?;
    TruncatedSystem::new(forms, specs)
}

/// Random normal form with `T = 1` and slices `f_2, ..., f_d`.
pub fn random_normal_form(rng: &mut impl Rng, n: usize, d: u32, bound: i64) -> Result<NormalFormHypersurface> {
    let slices = (2..=d).map(|k| random_form(rng, n, k, bound)).collect();
    NormalFormHypersurface::from_parts(n, d, int(1), slices)
}

fn linear_form(coeffs: &[Rational]) -> Polynomial {
    let n = coeffs.len();
    let mut p = Polynomial::zero(n);
    for (i, c) in coeffs.iter().enumerate() {
        p.add_term(ExponentVector::unit(n, i), c.clone());
    }
    p
}

/// Linear forms `λ`, `μ` with `λ(a) = 1, λ(b) = 0, μ(a) = 0, μ(b) = 1`, or
/// `None` when `a` and `b` are proportional.
pub fn dual_pair(a: &LinearPoint, b: &LinearPoint) -> Option<(Polynomial, Polynomial)> {
    let m = vec![a.coords.clone(), b.coords.clone()];
    let lambda = solve_rational(&m, &[int(1), int(0)])?;
    let mu = solve_rational(&m, &[int(0), int(1)])?;
    Some((linear_form(&lambda), linear_form(&mu)))
}

/// A form whose restriction to the line `⟨a, b⟩` is
/// `Σ_{k ≥ contact} c_k α^{d-k} β^k`, plus random terms vanishing on the
/// line. `contact > d` plants the line inside the hypersurface.
#[derive(Clone, Debug)]
pub struct PlantedContact {
    pub f: Polynomial,
    pub a: LinearPoint,
    pub b: LinearPoint,
    pub contact: u32,
}

pub fn planted_contact(rng: &mut impl Rng, nvars: usize, d: u32, contact: u32) -> PlantedContact {
    loop {
        let a = LinearPoint::from_ints(&random_point(rng, nvars, 3));
        let b = LinearPoint::from_ints(&random_point(rng, nvars, 3));
        let Some((lambda, mu)) = dual_pair(&a, &b) else {
            continue;
        };
        let mut f = Polynomial::zero(nvars);
        for k in contact..=d {
            let c = if k == contact {
                loop {
                    let v = random_int(rng, 5);
                    if v != 0 {
                        break v;
                    }
                }
            } else {
                random_int(rng, 5)
            };
            f.add_in_place(&(&lambda.pow(d - k) * &mu.pow(k)).scale(&int(c)));
        }
        // Terms vanishing on the line: ν · g with ν(a) = ν(b) = 0.
        if nvars > 2 {
            let extra: Vec<i64> = (0..nvars).map(|_| random_int(rng, 3)).collect();
            let mut rhs_row: Vec<Rational> = extra.iter().map(|&x| int(x)).collect();
            // Project a random vector onto the orthogonal complement of a, b.
            let pa = LinearPoint::new(rhs_row.clone()).pairing(&a);
            let pb = LinearPoint::new(rhs_row.clone()).pairing(&b);
            if let Some(sol) = solve_rational(&gram(&a, &b), &[pa, pb]) {
                for (i, r) in rhs_row.iter_mut().enumerate() {
                    *r -= &sol[0] * &a.coords[i] + &sol[1] * &b.coords[i];
                }
                let nu = linear_form(&rhs_row);
                if !nu.is_zero() {
                    let g = random_form(rng, nvars, d - 1, 3);
                    f.add_in_place(&(&nu * &g));
                }
            }
        }
        if f.is_zero() {
            continue;
        }
        return PlantedContact { f, a, b, contact };
    }
}

fn gram(a: &LinearPoint, b: &LinearPoint) -> Vec<Vec<Rational>> {
    vec![
        vec![a.pairing(a), b.pairing(a)],
        vec![a.pairing(b), b.pairing(b)],
    ]
}
