//! Dense tensors in `A⊗A` and `A⊗A⊗A`.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::scalar::{self, Rational};

/// An element of `A⊗A`; `coeff[(i, j)]` is the coefficient of `e_i⊗e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    pub coeff: Matrix,
}

impl Tensor2 {
    pub fn zeros(dim: usize) -> Self {
        Tensor2 {
            coeff: Matrix::zeros(dim, dim),
        }
    }

    /// Wraps a square coefficient matrix; panics if it is not square.
    pub fn from_matrix(coeff: Matrix) -> Self {
        assert!(coeff.is_square(), "tensor coefficients must be square");
        Tensor2 { coeff }
    }

    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        Self::from_matrix(Matrix::from_ints(rows))
    }

    /// `e_i⊗e_j`.
    pub fn basis(dim: usize, i: usize, j: usize) -> Self {
        let mut t = Self::zeros(dim);
        t[(i, j)] = scalar::one();
        t
    }

    /// `u⊗v`.
    pub fn outer(u: &[Rational], v: &[Rational]) -> Self {
        assert_eq!(u.len(), v.len());
        let mut t = Self::zeros(u.len());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                t[(i, j)] = a * b;
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.coeff.rows()
    }

    /// The flip `σ`: swaps tensor factors.
    pub fn flip(&self) -> Self {
        Tensor2 {
            coeff: self.coeff.transpose(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeff == self.coeff.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.add(&other.coeff),
        }
    }

    pub fn sub(&self, other: &Tensor2) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.sub(&other.coeff),
        }
    }

    pub fn scale(&self, c: &Rational) -> Tensor2 {
        Tensor2 {
            coeff: self.coeff.scale(c),
        }
    }

    /// Nonzero terms as `(i, j, coefficient)`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let c = &self[(i, j)];
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    /// `c` with `self = c * other`, if such a scalar exists and `other ≠ 0`.
    pub fn ratio_to(&self, other: &Tensor2) -> Option<Rational> {
        let (i, j, c) = other.terms().into_iter().next()?;
        let ratio = &self[(i, j)] / &c;
        (other.scale(&ratio) == *self).then_some(ratio)
    }
}

impl Index<(usize, usize)> for Tensor2 {
    type Output = Rational;
    fn index(&self, idx: (usize, usize)) -> &Rational {
        &self.coeff[idx]
    }
}

impl IndexMut<(usize, usize)> for Tensor2 {
    fn index_mut(&mut self, idx: (usize, usize)) -> &mut Rational {
        &mut self.coeff[idx]
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|(i, j, c)| format!("{}·e{}⊗e{}", scalar::format(c), i + 1, j + 1))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of `A⊗A⊗A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Rational>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// `a⊗b⊗c`.
    pub fn outer(a: &[Rational], b: &[Rational], c: &[Rational]) -> Self {
        let n = a.len();
        let mut t = Self::zeros(n);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, z) in c.iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    t[(i, j, k)] = &xy * z;
                }
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, other.dim);
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Tensor3 {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Tensor3) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// Nonzero entries as `((i, j, k), coefficient)` in lexicographic order.
    pub fn terms(&self) -> Vec<((usize, usize, usize), Rational)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(idx, c)| ((idx / (n * n), (idx / n) % n, idx % n), c.clone()))
            .collect()
    }

    pub fn first_nonzero(&self) -> Option<((usize, usize, usize), Rational)> {
        self.terms().into_iter().next()
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Rational;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &Rational {
        &self.data[(i * self.dim + j) * self.dim + k]
    }
}

impl IndexMut<(usize, usize, usize)> for Tensor3 {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut Rational {
        &mut self.data[(i * self.dim + j) * self.dim + k]
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = terms
            .iter()
            .map(|((i, j, k), c)| {
                format!("{}·e{}⊗e{}⊗e{}", scalar::format(c), i + 1, j + 1, k + 1)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
