//! Dendriform algebras, their unital extensions, and solutions built from
//! the identity O-operator on `(A, L_≻, R_≺)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Bimodule, StructureConstants};
use crate::constructions::{thm_cons_build, Construction};
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{add_vectors, zero_vector, LinearMap, Matrix, Vector};
use crate::report::{format_vector, CheckReport, Witness};
use crate::scalar::{self, Rational};

/// Two products `≺`, `≻` on a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dendriform {
    pub prec: StructureConstants,
    pub succ: StructureConstants,
}

impl Dendriform {
    pub fn new(prec: StructureConstants, succ: StructureConstants) -> Result<Self> {
        if prec.dim() != succ.dim() {
            return Err(dim_mismatch("≺ and ≻ must share a dimension"));
        }
        Ok(Dendriform { prec, succ })
    }

    pub fn zero(dim: usize) -> Self {
        Dendriform {
            prec: StructureConstants::zeros(dim),
            succ: StructureConstants::zeros(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.prec.dim()
    }

    pub fn star(&self, x: &[Rational], y: &[Rational]) -> Vector {
        add_vectors(&self.prec.mul(x, y), &self.succ.mul(x, y))
    }
}

/// Checks the three splitting axioms on basis triples.
pub fn check_dendriform(d: &Dendriform) -> CheckReport {
    let m = d.dim();
    let e = |i: usize| {
        let mut v = zero_vector(m);
        v[i] = Rational::from_integer(1.into());
        v
    };
    let prec = |x: &[Rational], y: &[Rational]| d.prec.mul(x, y);
    let succ = |x: &[Rational], y: &[Rational]| d.succ.mul(x, y);
    let mut found: [Option<Witness>; 3] = [None, None, None];
    let names = [
        "(a≺b)≺c = a≺(b⋆c)",
        "(a≻b)≺c = a≻(b≺c)",
        "(a⋆b)≻c = a≻(b≻c)",
    ];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let (a, b, c) = (e(i), e(j), e(k));
                let sides = [
                    (prec(&prec(&a, &b), &c), prec(&a, &d.star(&b, &c))),
                    (prec(&succ(&a, &b), &c), succ(&a, &prec(&b, &c))),
                    (succ(&d.star(&a, &b), &c), succ(&a, &succ(&b, &c))),
                ];
                for (slot, (lhs, rhs)) in sides.into_iter().enumerate() {
                    if found[slot].is_none() && lhs != rhs {
                        found[slot] = Some(Witness {
                            identity: names[slot].into(),
                            at: format!("(a{}, a{}, a{})", i + 1, j + 1, k + 1),
                            lhs: format_vector(&lhs),
                            rhs: format_vector(&rhs),
                        });
                    }
                }
            }
        }
    }
    let [w1, w2, w3] = found;
    CheckReport::all(
        "dendriform",
        vec![
            CheckReport::from_witness("left splitting", w1),
            CheckReport::from_witness("middle splitting", w2),
            CheckReport::from_witness("right splitting", w3),
        ],
    )
}

fn require_dendriform(d: &Dendriform) -> Result<()> {
    let report = check_dendriform(d);
    match report.children.iter().find_map(|c| c.witness.as_ref()) {
        None => Ok(()),
        Some(w) => Err(Error::NotDendriform(format!("{} fails at {}", w.identity, w.at))),
    }
}

/// `a⋆b = a≺b + a≻b`.
pub fn associated_algebra(d: &Dendriform) -> Result<StructureConstants> {
    require_dendriform(d)?;
    let m = d.dim();
    let mut sc = StructureConstants::zeros(m);
    for i in 0..m {
        for j in 0..m {
            sc.set(i, j, add_vectors(d.prec.basis_mul(i, j), d.succ.basis_mul(i, j)));
        }
    }
    Ok(sc)
}

/// `(A, L_≻, R_≺)` over `(A, ⋆)`. The associated algebra has no unit, so its
/// unit vector is zero.
pub fn succ_prec_bimodule(d: &Dendriform) -> Result<Bimodule> {
    let sc = associated_algebra(d)?;
    let m = d.dim();
    let names = (1..=m).map(|i| format!("a{i}")).collect();
    let algebra = Algebra::new(names, sc, zero_vector(m))?;
    let left = (0..m).map(|i| action(m, |b| d.succ.basis_mul(i, b).to_vec())).collect();
    let right = (0..m).map(|i| action(m, |b| d.prec.basis_mul(b, i).to_vec())).collect();
    Bimodule::new(algebra, left, right)
}

fn action(m: usize, column: impl Fn(usize) -> Vector) -> Matrix {
    let cols: Vec<Vector> = (0..m).map(column).collect();
    Matrix::from_columns(&cols, m).expect("square action")
}

/// `k1 ⊕ A⁺` with `x≺1 = 1≻x = x` and `x≻1 = 1≺x = 0` for `x ∈ A⁺`.
/// Coordinate 0 is the unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalDendriform {
    pub plus: Dendriform,
}

/// The value given to the undefined products `1≺1` and `1≻1` when the
/// actions `L_≻`, `R_≺` are needed on all of `k1 ⊕ A⁺`. Their sum must be
/// `1⋆1 = 1`, and only these two choices give a bimodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitConvention {
    /// `1≺1 = 1`, `1≻1 = 0`.
    PrecUnit,
    /// `1≺1 = 0`, `1≻1 = 1`.
    SuccUnit,
}

impl UnitalDendriform {
    pub fn total_dim(&self) -> usize {
        self.plus.dim() + 1
    }

    fn split(&self, x: &[Rational]) -> (Rational, Vector) {
        (x[0].clone(), x[1..].to_vec())
    }

    fn join(&self, c: Rational, plus: Vector) -> Vector {
        let mut v = vec![c];
        v.extend(plus);
        v
    }

    fn extended(&self, x: &[Rational], y: &[Rational], prec: bool) -> Result<Vector> {
        if x.len() != self.total_dim() || y.len() != self.total_dim() {
            return Err(dim_mismatch("operands must live in k1 ⊕ A⁺"));
        }
        let (cx, px) = self.split(x);
        let (cy, py) = self.split(y);
        if !cx.is_zero() && !cy.is_zero() {
            return Err(Error::UndefinedUnitProduct);
        }
        let core = if prec {
            self.plus.prec.mul(&px, &py)
        } else {
            self.plus.succ.mul(&px, &py)
        };
        // x≺1 = x and 1≻y = y; the other unit products vanish.
        let extra = if prec {
            px.iter().map(|v| v * &cy).collect::<Vector>()
        } else {
            py.iter().map(|v| v * &cx).collect::<Vector>()
        };
        Ok(self.join(Rational::zero(), add_vectors(&core, &extra)))
    }

    pub fn prec(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.extended(x, y, true)
    }

    pub fn succ(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.extended(x, y, false)
    }

    /// `(A, L_≻, R_≺)` over the unital algebra `(A, ⋆, 1)`, with `1≺1` and
    /// `1≻1` fixed by `convention`.
    pub fn succ_prec_bimodule(&self, algebra: &Algebra, convention: UnitConvention) -> Result<Bimodule> {
        let n = self.total_dim();
        if algebra.dim() != n {
            return Err(dim_mismatch("algebra must be the unital extension"));
        }
        let unit_part = |succ: bool| {
            let one = match (convention, succ) {
                (UnitConvention::SuccUnit, true) | (UnitConvention::PrecUnit, false) => 1,
                _ => 0,
            };
            let mut v = zero_vector(n);
            v[0] = scalar::int(one);
            v
        };
        let succ_of = |i: usize, b: usize| {
            if i == 0 && b == 0 {
                Ok(unit_part(true))
            } else {
                self.succ(&algebra.e(i), &algebra.e(b))
            }
        };
        let prec_of = |b: usize, i: usize| {
            if i == 0 && b == 0 {
                Ok(unit_part(false))
            } else {
                self.prec(&algebra.e(b), &algebra.e(i))
            }
        };
        let mut left = Vec::with_capacity(n);
        let mut right = Vec::with_capacity(n);
        for i in 0..n {
            let lc: Vec<Vector> = (0..n).map(|b| succ_of(i, b)).collect::<Result<_>>()?;
            let rc: Vec<Vector> = (0..n).map(|b| prec_of(b, i)).collect::<Result<_>>()?;
            left.push(Matrix::from_columns(&lc, n)?);
            right.push(Matrix::from_columns(&rc, n)?);
        }
        Bimodule::new(algebra.clone(), left, right)
    }
}

/// The unital algebra `(k1 ⊕ A⁺, ⋆, 1)` with basis `1, a1, ..., am`.
pub fn unital_extension(d: &Dendriform) -> Result<(Algebra, UnitalDendriform)> {
    let plus_sc = associated_algebra(d)?;
    let m = d.dim();
    let n = m + 1;
    let mut sc = StructureConstants::zeros(n);
    let one = scalar::int(1);
    sc.set_term(0, 0, 0, one.clone());
    for i in 1..n {
        sc.set_term(0, i, i, one.clone());
        sc.set_term(i, 0, i, one.clone());
        for j in 1..n {
            let mut p = vec![Rational::zero()];
            p.extend(plus_sc.basis_mul(i - 1, j - 1).iter().cloned());
            sc.set(i, j, p);
        }
    }
    let mut names = vec!["1".to_string()];
    names.extend((1..=m).map(|i| format!("a{i}")));
    let mut unit = zero_vector(n);
    unit[0] = one;
    let algebra = Algebra::new(names, sc, unit)?;
    Ok((algebra, UnitalDendriform { plus: d.clone() }))
}

/// `r₁♯ = β̃♯ îd*`, `r₂♯ = îd β̃♯` in `A ⋉_{L_≻,R_≺} A`.
pub fn dendriform_solution_build(
    u: &UnitalDendriform,
    beta: &LinearMap,
    lambda: &Rational,
    mu: &Rational,
    convention: UnitConvention,
) -> Result<Construction> {
    let (algebra, _) = unital_extension(&u.plus)?;
    let v = u.succ_prec_bimodule(&algebra, convention)?;
    let n = algebra.dim();
    thm_cons_build(&v, &LinearMap::identity(n), beta, lambda, mu)
}
