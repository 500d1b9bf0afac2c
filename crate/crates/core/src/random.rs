//! Seeded sampling of small-integer tensors and maps for property tests and
//! the `op suite` command. Same seed, same stream, on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Vector};
use crate::scalar::{frac, int, Rational};
use crate::tensor::Tensor2;
use crate::ybe::{invariant_symmetric_basis, unit_tensor, NhacybeInstance};

pub struct Sampler {
    rng: ChaCha8Rng,
    /// Coefficients are drawn uniformly from `−range..=range`.
    pub range: i64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), range: 2 }
    }

    pub fn coefficient(&mut self) -> Rational {
        int(self.rng.gen_range(-self.range..=self.range))
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn vector(&mut self, len: usize) -> Vector {
        (0..len).map(|_| self.coefficient()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self.coefficient();
            }
        }
        m
    }

    /// A dense tensor; roughly half the entries are forced to zero so that
    /// sparse tensors show up too.
    pub fn tensor(&mut self, dim: usize) -> Tensor2 {
        let mut r = Tensor2::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                if self.rng.gen_bool(0.5) {
                    r[(i, j)] = self.coefficient();
                }
            }
        }
        r
    }

    pub fn skew_tensor(&mut self, dim: usize) -> Tensor2 {
        let mut r = Tensor2::zeros(dim);
        for i in 0..dim {
            for j in (i + 1)..dim {
                let c = self.coefficient();
                r[(j, i)] = -c.clone();
                r[(i, j)] = c;
            }
        }
        r
    }

    /// `r = k + ½(s + μ 1⊗1)` with `k` skew and `s` a random element of the
    /// symmetric invariant tensors, so `s̄ = s` is invariant by construction.
    pub fn invariant_symmetrizer_tensor(&mut self, inst: &NhacybeInstance, basis: &[Tensor2]) -> Tensor2 {
        let n = inst.dim();
        let mut s = Tensor2::zeros(n);
        for b in basis {
            s = s.add(&b.scale(&self.coefficient()));
        }
        let half = frac(1, 2);
        let shift = s.add(&unit_tensor(&inst.algebra).scale(&inst.mu)).scale(&half);
        self.skew_tensor(n).add(&shift)
    }

    /// Either a member of `pool`, a small perturbation of one, or a fresh
    /// random tensor. Keeps both verdicts represented in a sample.
    pub fn mixed(&mut self, pool: &[Tensor2], dim: usize) -> Tensor2 {
        match (pool.choose(&mut self.rng).cloned(), self.rng.gen_range(0..3)) {
            (Some(r), 0) => r,
            (Some(mut r), 1) => {
                let (i, j) = (self.index(dim), self.index(dim));
                r[(i, j)] += int(1);
                r
            }
            _ => self.tensor(dim),
        }
    }
}

/// `count` tensors drawn by [`Sampler::mixed`] from a fixed seed.
pub fn sample_tensors(seed: u64, pool: &[Tensor2], dim: usize, count: usize) -> Vec<Tensor2> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| s.mixed(pool, dim)).collect()
}

/// `count` tensors whose extended symmetrizer is invariant: members of
/// `pool` (assumed symmetrized invariant), members shifted by a skew tensor,
/// and fresh tensors built from the invariant basis.
pub fn sample_invariant_tensors(seed: u64, inst: &NhacybeInstance, pool: &[Tensor2], count: usize) -> Vec<Tensor2> {
    let basis = invariant_symmetric_basis(&inst.algebra);
    let n = inst.dim();
    let mut s = Sampler::new(seed);
    (0..count)
        .map(|_| match (pool.choose(&mut s.rng).cloned(), s.rng.gen_range(0..3)) {
            (Some(r), 0) => r,
            (Some(r), 1) => r.add(&s.skew_tensor(n)),
            _ => s.invariant_symmetrizer_tensor(inst, &basis),
        })
        .collect()
}
