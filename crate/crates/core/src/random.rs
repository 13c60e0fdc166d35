//! Seeded generators for random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{monomials_of_degree, ExponentVector, Polynomial};
use crate::rational::int;

/// Deterministic generator for a seed and a stream label, so that different
/// consumers of the same seed draw independent sequences.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn random_int(rng: &mut impl Rng, bound: i64) -> i64 {
    rng.gen_range(-bound..=bound)
}

pub fn random_nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let v = random_int(rng, bound);
        if v != 0 {
            return v;
        }
    }
}

/// Dense form of the given degree with integer coefficients in
/// `[-bound, bound]`.
pub fn random_form(rng: &mut impl Rng, nvars: usize, degree: u32, bound: i64) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for m in monomials_of_degree(nvars, degree) {
        p.add_term(m, int(random_int(rng, bound)));
    }
    p
}

/// Random form whose monomials all satisfy `keep`.
pub fn random_form_where(
    rng: &mut impl Rng,
    nvars: usize,
    degree: u32,
    bound: i64,
    mut keep: impl FnMut(&ExponentVector) -> bool,
) -> Polynomial {
    let mut p = Polynomial::zero(nvars);
    for m in monomials_of_degree(nvars, degree) {
        if keep(&m) {
            p.add_term(m, int(random_int(rng, bound)));
        }
    }
    p
}

/// Random integer point with entries in `[-bound, bound]`, not the origin.
pub fn random_point(rng: &mut impl Rng, nvars: usize, bound: i64) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..nvars).map(|_| random_int(rng, bound)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// Random integer matrix of determinant one, as a product of unit lower and
/// unit upper triangular factors.
pub fn random_special_unimodular(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut lower = vec![vec![0i64; n]; n];
    let mut upper = vec![vec![0i64; n]; n];
    for i in 0..n {
        lower[i][i] = 1;
        upper[i][i] = 1;
        for j in 0..i {
            lower[i][j] = random_int(rng, bound);
        }
        for j in i + 1..n {
            upper[i][j] = random_int(rng, bound);
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| lower[i][k] * upper[k][j]).sum())
                .collect()
        })
        .collect()
}
