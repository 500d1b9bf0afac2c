//! Finite-dimensional algebras by structure constants, bimodules over them,
//! bilinear forms, augmentations, and the standard constructions
//! (adjoint and dual bimodules, semi-direct products, unitization).

use num_traits::{One, Zero};

use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{add_vectors, dot, scale_vector, unit_vector, zero_vector, Matrix, Vector};
use crate::report::{format_vector, CheckReport, Witness};
use crate::scalar::{self, Rational};

/// Multiplication table `e_i·e_j = Σ_k c[i][j][k] e_k`, not necessarily unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    c: Vec<Rational>,
}

impl StructureConstants {
    pub fn zeros(dim: usize) -> Self {
        StructureConstants {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    /// From a dense `n×n×n` nested array.
    pub fn from_nested(table: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = table.len();
        let mut sc = Self::zeros(n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(dim_mismatch("structure constants must be n×n×n"));
            }
            for (j, prod) in row.into_iter().enumerate() {
                if prod.len() != n {
                    return Err(dim_mismatch("structure constants must be n×n×n"));
                }
                sc.set(i, j, prod);
            }
        }
        Ok(sc)
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.basis_mul(i, j).to_vec()).collect())
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set(&mut self, i: usize, j: usize, product: Vector) {
        assert_eq!(product.len(), self.dim);
        let start = (i * self.dim + j) * self.dim;
        self.c[start..start + self.dim].clone_from_slice(&product);
    }

    /// Sets `e_i·e_j = coeff·e_k` (overwriting that one coordinate).
    pub fn set_term(&mut self, i: usize, j: usize, k: usize, coeff: Rational) {
        self.c[(i * self.dim + j) * self.dim + k] = coeff;
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.dim + j) * self.dim;
        &self.c[start..start + self.dim]
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_mul(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// First basis triple violating associativity, with both sides.
    pub fn associativity_defect(&self) -> Option<((usize, usize, usize), Vector, Vector)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_mul(i, j).to_vec();
                for k in 0..n {
                    let lhs = self.mul(&ij, &unit_vector(n, k));
                    let rhs = self.mul(&unit_vector(n, i), self.basis_mul(j, k));
                    if lhs != rhs {
                        return Some(((i, j, k), lhs, rhs));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_defect().is_none()
    }
}

/// A finite-dimensional algebra with a distinguished unit vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub basis: Vec<String>,
    pub sc: StructureConstants,
    pub unit: Vector,
}

pub fn default_basis_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl Algebra {
    pub fn new(basis: Vec<String>, sc: StructureConstants, unit: Vector) -> Result<Self> {
        let n = sc.dim();
        if n == 0 {
            return Err(dim_mismatch("an algebra needs dimension at least 1"));
        }
        if basis.len() != n || unit.len() != n {
            return Err(dim_mismatch(format!(
                "structure constants have dimension {n} but {} basis names and a unit of length {}",
                basis.len(),
                unit.len()
            )));
        }
        Ok(Algebra { basis, sc, unit })
    }

    pub fn with_default_names(sc: StructureConstants, unit: Vector) -> Result<Self> {
        Self::new(default_basis_names(sc.dim()), sc, unit)
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.sc.mul(x, y)
    }

    pub fn basis_mul(&self, i: usize, j: usize) -> &[Rational] {
        self.sc.basis_mul(i, j)
    }

    pub fn e(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    /// Matrix of left multiplication `L(x)`.
    pub fn left_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &self.e(j))).collect();
        Matrix::from_columns(&cols, n).expect("square")
    }

    /// Matrix of right multiplication `R(x)`.
    pub fn right_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.e(j), x)).collect();
        Matrix::from_columns(&cols, n).expect("square")
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_mul(i, j) == self.basis_mul(j, i)))
    }

    /// Whether the stored unit vector is a two-sided identity.
    pub fn is_unital(&self) -> bool {
        (0..self.dim()).all(|i| {
            let x = self.e(i);
            self.mul(&self.unit, &x) == x && self.mul(&x, &self.unit) == x
        })
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }
}

pub fn check_algebra(a: &Algebra) -> CheckReport {
    let n = a.dim();
    let assoc = match a.sc.associativity_defect() {
        Some(((i, j, k), lhs, rhs)) => CheckReport::fail(
            "associativity",
            Witness {
                identity: "(x·y)·z = x·(y·z)".into(),
                at: format!("({}, {}, {})", a.label(i), a.label(j), a.label(k)),
                lhs: format_vector(&lhs),
                rhs: format_vector(&rhs),
            },
        ),
        None => CheckReport::pass("associativity"),
    };
    let mut unit_witness = None;
    for i in 0..n {
        let x = a.e(i);
        let left = a.mul(&a.unit, &x);
        let right = a.mul(&x, &a.unit);
        if left != x || right != x {
            let (side, value) = if left != x { ("1·x", left) } else { ("x·1", right) };
            unit_witness = Some(Witness {
                identity: format!("{side} = x"),
                at: a.label(i).to_string(),
                lhs: format_vector(&value),
                rhs: format_vector(&x),
            });
            break;
        }
    }
    let unit = CheckReport::from_witness("unit", unit_witness);
    CheckReport::all("algebra", vec![assoc, unit])
}

/// An `A`-bimodule `(V, ℓ, r)` with actions stored per basis element of `A`.
///
/// `left[i]` is the matrix of `v ↦ ℓ(e_i)v` and `right[i]` the matrix of
/// `v ↦ v r(e_i)`, both acting on column vectors of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub algebra: Algebra,
    pub space_dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(algebra: Algebra, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if left.len() != n || right.len() != n {
            return Err(dim_mismatch("one action matrix per algebra basis element"));
        }
        let m = left.first().map_or(0, Matrix::rows);
        if left.iter().chain(&right).any(|x| x.rows() != m || x.cols() != m) {
            return Err(dim_mismatch("action matrices must all be m×m"));
        }
        Ok(Bimodule {
            algebra,
            space_dim: m,
            left,
            right,
        })
    }

    fn combine(&self, mats: &[Matrix], x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (c, m) in x.iter().zip(mats) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Matrix of `ℓ(x)`.
    pub fn left_of(&self, x: &[Rational]) -> Matrix {
        self.combine(&self.left, x)
    }

    /// Matrix of `r(x)`.
    pub fn right_of(&self, x: &[Rational]) -> Matrix {
        self.combine(&self.right, x)
    }

    /// `ℓ(x)v`.
    pub fn act_left(&self, x: &[Rational], v: &[Rational]) -> Vector {
        let mut out = zero_vector(self.space_dim);
        for (c, m) in x.iter().zip(&self.left) {
            if !c.is_zero() {
                out = add_vectors(&out, &scale_vector(c, &m.apply(v)));
            }
        }
        out
    }

    /// `v r(x)`.
    pub fn act_right(&self, v: &[Rational], x: &[Rational]) -> Vector {
        let mut out = zero_vector(self.space_dim);
        for (c, m) in x.iter().zip(&self.right) {
            if !c.is_zero() {
                out = add_vectors(&out, &scale_vector(c, &m.apply(v)));
            }
        }
        out
    }
}

/// The adjoint bimodule `(A, L, R)`.
pub fn left_right_ops(a: &Algebra) -> Bimodule {
    let n = a.dim();
    let left = (0..n).map(|i| a.left_matrix(&a.e(i))).collect();
    let right = (0..n).map(|i| a.right_matrix(&a.e(i))).collect();
    Bimodule::new(a.clone(), left, right).expect("adjoint actions are square")
}

/// The dual bimodule `(V*, r*, ℓ*)`.
pub fn dual_bimodule(v: &Bimodule) -> Bimodule {
    Bimodule {
        algebra: v.algebra.clone(),
        space_dim: v.space_dim,
        left: v.right.iter().map(Matrix::transpose).collect(),
        right: v.left.iter().map(Matrix::transpose).collect(),
    }
}

/// Checks `ℓ(xy) = ℓ(x)ℓ(y)`, `r(xy) = r(y)r(x)`, `ℓ(x)r(y) = r(y)ℓ(x)` on
/// basis pairs, and, when `A` is unital, that the unit acts as the identity.
pub fn check_bimodule(v: &Bimodule) -> CheckReport {
    let a = &v.algebra;
    let n = a.dim();
    let mut left_w = None;
    let mut right_w = None;
    let mut mixed_w = None;
    for i in 0..n {
        for j in 0..n {
            let xy = a.basis_mul(i, j);
            let at = format!("({}, {})", a.label(i), a.label(j));
            if left_w.is_none() {
                let lhs = v.left_of(xy);
                let rhs = v.left[i].dot(&v.left[j]);
                if lhs != rhs {
                    left_w = Some(Witness {
                        identity: "ℓ(x·y) = ℓ(x)ℓ(y)".into(),
                        at: at.clone(),
                        lhs: format!("{lhs:?}"),
                        rhs: format!("{rhs:?}"),
                    });
                }
            }
            if right_w.is_none() {
                let lhs = v.right_of(xy);
                let rhs = v.right[j].dot(&v.right[i]);
                if lhs != rhs {
                    right_w = Some(Witness {
                        identity: "(v r(x)) r(y) = v r(x·y)".into(),
                        at: at.clone(),
                        lhs: format!("{lhs:?}"),
                        rhs: format!("{rhs:?}"),
                    });
                }
            }
            if mixed_w.is_none() {
                let lhs = v.right[j].dot(&v.left[i]);
                let rhs = v.left[i].dot(&v.right[j]);
                if lhs != rhs {
                    mixed_w = Some(Witness {
                        identity: "(ℓ(x)v) r(y) = ℓ(x)(v r(y))".into(),
                        at,
                        lhs: format!("{lhs:?}"),
                        rhs: format!("{rhs:?}"),
                    });
                }
            }
        }
    }
    let id = Matrix::identity(v.space_dim);
    let unit_l = v.left_of(&a.unit);
    let unit_r = v.right_of(&a.unit);
    let unit_w = if !a.is_unital() {
        None
    } else if unit_l != id || unit_r != id {
        let (identity, value) = if unit_l != id {
            ("ℓ(1) = id", unit_l)
        } else {
            ("r(1) = id", unit_r)
        };
        Some(Witness {
            identity: identity.into(),
            at: "1".into(),
            lhs: format!("{value:?}"),
            rhs: format!("{id:?}"),
        })
    } else {
        None
    };
    let mut unital = CheckReport::from_witness("unital actions", unit_w);
    if !a.is_unital() {
        unital = unital.with_note("the algebra has no unit; nothing to check");
    }
    CheckReport::all(
        "bimodule",
        vec![
            CheckReport::from_witness("left action", left_w),
            CheckReport::from_witness("right action", right_w),
            CheckReport::from_witness("commuting actions", mixed_w),
            unital,
        ],
    )
}

/// `A ⋉ V` on `A ⊕ V` with basis `A` first, then `V`, and unit `(1, 0)`.
pub fn semidirect_product(v: &Bimodule) -> Algebra {
    let a = &v.algebra;
    let n = a.dim();
    let m = v.space_dim;
    let total = n + m;
    let mut sc = StructureConstants::zeros(total);
    for i in 0..n {
        for j in 0..n {
            let mut p = a.basis_mul(i, j).to_vec();
            p.resize(total, Rational::zero());
            sc.set(i, j, p);
        }
        for b in 0..m {
            let mut lp = zero_vector(n);
            lp.extend(v.left[i].column(b));
            sc.set(i, n + b, lp);
            let mut rp = zero_vector(n);
            rp.extend(v.right[i].column(b));
            sc.set(n + b, i, rp);
        }
    }
    let mut basis = a.basis.clone();
    basis.extend((1..=m).map(|b| format!("v{b}")));
    let mut unit = a.unit.clone();
    unit.resize(total, Rational::zero());
    Algebra::new(basis, sc, unit).expect("consistent dimensions")
}

/// A bilinear form with `B(e_i, e_j) = gram[(i, j)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_square() {
            return Err(dim_mismatch("gram matrix must be square"));
        }
        Ok(BilinearForm { gram })
    }

    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        dot(x, &self.gram.apply(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.gram == self.gram.transpose()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.rank() == self.gram.rows()
    }

    /// First basis triple with `B(xy, z) ≠ B(x, yz)`.
    pub fn invariance_defect(&self, a: &Algebra) -> Option<((usize, usize, usize), Rational, Rational)> {
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs = self.eval(a.basis_mul(i, j), &a.e(k));
                    let rhs = self.eval(&a.e(i), a.basis_mul(j, k));
                    if lhs != rhs {
                        return Some(((i, j, k), lhs, rhs));
                    }
                }
            }
        }
        None
    }
}

/// Values `ε(e_i)` of a linear functional intended as an augmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    pub eps: Vector,
}

impl Augmentation {
    pub fn new(eps: Vector) -> Self {
        Augmentation { eps }
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.eps, x)
    }
}

pub fn check_augmentation(a: &Algebra, eps: &Augmentation) -> CheckReport {
    let n = a.dim();
    if eps.eps.len() != n {
        return CheckReport::fail(
            "augmentation",
            Witness {
                identity: "dim ε = dim A".into(),
                at: "-".into(),
                lhs: eps.eps.len().to_string(),
                rhs: n.to_string(),
            },
        );
    }
    let mut hom_w = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = eps.eval(a.basis_mul(i, j));
            let rhs = &eps.eps[i] * &eps.eps[j];
            if lhs != rhs {
                hom_w = Some(Witness {
                    identity: "ε(x·y) = ε(x)ε(y)".into(),
                    at: format!("({}, {})", a.label(i), a.label(j)),
                    lhs: scalar::format(&lhs),
                    rhs: scalar::format(&rhs),
                });
                break 'outer;
            }
        }
    }
    let e1 = eps.eval(&a.unit);
    let unit_w = (!e1.is_one()).then(|| Witness {
        identity: "ε(1) = 1".into(),
        at: "1".into(),
        lhs: scalar::format(&e1),
        rhs: "1".into(),
    });
    let mut cyc_w = None;
    'cyc: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = eps.eval(&a.mul(a.basis_mul(i, j), &a.e(k)));
                let rhs = eps.eval(&a.mul(a.basis_mul(j, k), &a.e(i)));
                if lhs != rhs {
                    cyc_w = Some(Witness {
                        identity: "ε(x·y·z) = ε(y·z·x)".into(),
                        at: format!("({}, {}, {})", a.label(i), a.label(j), a.label(k)),
                        lhs: scalar::format(&lhs),
                        rhs: scalar::format(&rhs),
                    });
                    break 'cyc;
                }
            }
        }
    }
    CheckReport::all(
        "augmentation",
        vec![
            CheckReport::from_witness("multiplicative", hom_w),
            CheckReport::from_witness("unital", unit_w),
            CheckReport::from_witness("cyclic", cyc_w),
        ],
    )
}

/// Adjoins a unit to an associative, possibly non-unital algebra. The unit
/// becomes basis vector 0 and the augmentation is projection onto it.
pub fn unitization(sc: &StructureConstants) -> Result<(Algebra, Augmentation)> {
    if let Some(((i, j, k), _, _)) = sc.associativity_defect() {
        return Err(Error::NotAssociative(format!(
            "basis triple ({}, {}, {})",
            i + 1,
            j + 1,
            k + 1
        )));
    }
    let m = sc.dim();
    let n = m + 1;
    let mut out = StructureConstants::zeros(n);
    for x in 0..n {
        out.set(0, x, unit_vector(n, x));
        out.set(x, 0, unit_vector(n, x));
    }
    for i in 0..m {
        for j in 0..m {
            let mut p = vec![Rational::zero()];
            p.extend_from_slice(sc.basis_mul(i, j));
            out.set(i + 1, j + 1, p);
        }
    }
    let mut names = vec!["1".to_string()];
    names.extend((1..=m).map(|i| format!("a{i}")));
    let alg = Algebra::new(names, out, unit_vector(n, 0))?;
    Ok((alg, Augmentation::new(unit_vector(n, 0))))
}

/// `M_n(k)` with matrix units `E_ij` in row-major order.
pub fn matrix_algebra(n: usize) -> Algebra {
    let dim = n * n;
    let mut sc = StructureConstants::zeros(dim);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                sc.set_term(i * n + j, j * n + l, i * n + l, Rational::one());
            }
        }
    }
    let basis = (0..dim)
        .map(|idx| format!("E{}{}", idx / n + 1, idx % n + 1))
        .collect();
    let mut unit = zero_vector(dim);
    for i in 0..n {
        unit[i * n + i] = Rational::one();
    }
    Algebra::new(basis, sc, unit).expect("consistent dimensions")
}
