//! Seeded random pools shared by the integration suites.
//!
//! Everything derives from one fixed seed, so a failing case reproduces
//! bit-for-bit on every run.  The pools are built once per test binary and
//! shared across tests through a `OnceLock`.

use apolar::exact::{rat, Subspace};
use apolar::kunte::EncodingMatrix;
use apolar::poly::{Monomial, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

const SEED: u64 = 0x0a90_1a2d_5eed;

/// Shared randomized inputs.
pub struct Pools {
    /// Pairs of subspaces of a common ambient space `Q^n`, `n <= 10`.
    pub subspace_pairs: Vec<(Subspace, Subspace)>,
    /// Symmetric encoding matrices: at most 3x3, at most 3 variables,
    /// entries of total degree at most 4.
    pub symmetric: Vec<EncodingMatrix>,
    /// Non-square or asymmetric encoding matrices with the same bounds.
    pub crooked: Vec<EncodingMatrix>,
}

pub fn pools() -> &'static Pools {
    static POOLS: OnceLock<Pools> = OnceLock::new();
    POOLS.get_or_init(build)
}

fn build() -> Pools {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);

    let mut subspace_pairs = Vec::with_capacity(110);
    for _ in 0..110 {
        let ambient = rng.gen_range(1..=10);
        let k = random_subspace(&mut rng, ambient);
        let l = random_subspace(&mut rng, ambient);
        subspace_pairs.push((k, l));
    }

    let symmetric = (0..110).map(|_| random_symmetric(&mut rng)).collect();
    let crooked = (0..110).map(|i| random_crooked(&mut rng, i)).collect();

    Pools {
        subspace_pairs,
        symmetric,
        crooked,
    }
}

fn random_subspace(rng: &mut ChaCha8Rng, ambient: usize) -> Subspace {
    let count = rng.gen_range(0..=ambient);
    let mut vectors = Vec::with_capacity(count);
    for _ in 0..count {
        let mut v = Vec::with_capacity(ambient);
        for _ in 0..ambient {
            v.push(rat(rng.gen_range(-3..=3)));
        }
        vectors.push(v);
    }
    Subspace::from_spanning(ambient, vectors).expect("vectors have the ambient length")
}

/// A sparse polynomial with at most two terms of total degree at most 4.
fn random_polynomial(rng: &mut ChaCha8Rng, num_vars: usize) -> Polynomial {
    let num_terms = rng.gen_range(0..=2);
    let mut terms = Vec::with_capacity(num_terms);
    for _ in 0..num_terms {
        let degree = rng.gen_range(0..=4u32);
        let mut exponents = vec![0u32; num_vars];
        for _ in 0..degree {
            let var = rng.gen_range(0..num_vars);
            exponents[var] += 1;
        }
        let coeff = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
        terms.push((Monomial::from_exponents(exponents), rat(coeff)));
    }
    Polynomial::from_terms(num_vars, terms)
}

fn random_entries(
    rng: &mut ChaCha8Rng,
    num_vars: usize,
    rows: usize,
    cols: usize,
) -> Vec<Vec<Polynomial>> {
    let mut entries = Vec::with_capacity(rows);
    for _ in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for _ in 0..cols {
            row.push(random_polynomial(rng, num_vars));
        }
        entries.push(row);
    }
    entries
}

fn all_zero(entries: &[Vec<Polynomial>]) -> bool {
    entries.iter().flatten().all(Polynomial::is_zero)
}

fn random_symmetric(rng: &mut ChaCha8Rng) -> EncodingMatrix {
    let size = rng.gen_range(1..=3);
    let num_vars = rng.gen_range(1..=3);
    let mut entries = vec![vec![Polynomial::zero(num_vars); size]; size];
    for i in 0..size {
        for j in i..size {
            let p = random_polynomial(rng, num_vars);
            entries[i][j] = p.clone();
            entries[j][i] = p;
        }
    }
    if all_zero(&entries) {
        entries[0][0] = Polynomial::monomial(Monomial::one(num_vars));
    }
    EncodingMatrix::new(num_vars, entries).expect("rectangular entries in one variable set")
}

/// Alternates between non-square shapes and square-but-asymmetric fills.
fn random_crooked(rng: &mut ChaCha8Rng, index: usize) -> EncodingMatrix {
    if index % 2 == 0 {
        let shapes = [(1usize, 2usize), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1)];
        let (rows, cols) = shapes[rng.gen_range(0..shapes.len())];
        let num_vars = rng.gen_range(1..=3);
        let mut entries = random_entries(rng, num_vars, rows, cols);
        if all_zero(&entries) {
            entries[0][0] = Polynomial::monomial(Monomial::one(num_vars));
        }
        EncodingMatrix::new(num_vars, entries).expect("rectangular entries in one variable set")
    } else {
        loop {
            let size = rng.gen_range(2..=3);
            let num_vars = rng.gen_range(1..=3);
            let entries = random_entries(rng, num_vars, size, size);
            if all_zero(&entries) {
                continue;
            }
            let asymmetric =
                (0..size).any(|i| (0..i).any(|j| entries[i][j] != entries[j][i]));
            if !asymmetric {
                continue;
            }
            return EncodingMatrix::new(num_vars, entries)
                .expect("rectangular entries in one variable set");
        }
    }
}
