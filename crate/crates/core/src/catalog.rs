//! Reference data for the unital algebras of dimension two and three, the
//! 2×2 matrix algebra, their symmetrized invariant solution families and
//! the normalized Rota-Baxter tables, with a one-shot verifier.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Augmentation, BilinearForm, StructureConstants};
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_bridge_suite, frobenius_from_form, p_r, trace_form, FrobeniusStructure};
use crate::linalg::{LinearMap, Matrix, Vector};
use crate::operators::check_rota_baxter;
use crate::report::{CheckReport, Witness};
use crate::scalar::{self, int, Rational};
use crate::tensor::Tensor2;
use crate::ybe::{
    check_nhacybe, extended_symmetrizer, grid_enumerate, invariant_symmetric_basis, is_symmetrized_invariant,
    NhacybeInstance,
};

pub const NAMES: [&str; 8] = ["A1", "A2", "B1", "B2", "B3", "B4", "B5", "M2"];

/// A nondegenerate symmetric invariant form and its tensor `φ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedForm {
    pub name: String,
    pub form: BilinearForm,
    pub phi: Tensor2,
}

/// A family `r(μ) = μ·base` of symmetrized invariant solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSolution {
    pub name: String,
    pub base: Tensor2,
    /// `s̄ = sbar_sign·μ·φ` for the form `forms[form]`.
    pub form: usize,
    pub sbar_sign: i8,
    /// `μQ` is Rota-Baxter of weight `weight_sign·μ`.
    pub weight_sign: i8,
    pub q: Matrix,
}

impl CatalogSolution {
    pub fn at(&self, mu: &Rational) -> Tensor2 {
        self.base.scale(mu)
    }
}

/// What enumeration over the grid `{0, μ}` should find.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridExpectation {
    /// The symmetrized invariant solutions found are exactly the stored families.
    InvariantEqualsStored,
    /// The only nonzero solution is `μ e1⊗e1`, and it is not symmetrized invariant.
    OnlyUnitSquare,
    /// No nonzero solution is symmetrized invariant.
    NoInvariant,
    /// Nothing is asserted; counts are reported.
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: Algebra,
    pub augmentations: Vec<Augmentation>,
    pub inv_basis_expected: Vec<Tensor2>,
    /// Forms live on the unital subalgebra spanned by the first `form_dim`
    /// basis vectors; `φ` is padded by zeros to the whole algebra.
    pub form_dim: usize,
    pub frobenius_forms: Vec<NamedForm>,
    pub solutions: Vec<CatalogSolution>,
    pub grid: GridExpectation,
    /// Number of nonzero solutions in the classification this entry mirrors.
    pub classified_nonzero: Option<usize>,
    pub notes: Vec<String>,
}

impl CatalogEntry {
    /// The subalgebra carrying the forms.
    pub fn form_algebra(&self) -> Result<Algebra> {
        restrict(&self.algebra, self.form_dim)
    }

    pub fn frobenius(&self, form: usize) -> Result<FrobeniusStructure> {
        frobenius_from_form(&self.form_algebra()?, &self.frobenius_forms[form].form)
    }

    /// `φ` of a form, as a tensor on the whole algebra.
    pub fn phi(&self, form: usize) -> Tensor2 {
        pad_tensor(&self.frobenius_forms[form].phi, self.algebra.dim())
    }
}

/// The span of the first `k` basis vectors, which must be a unital
/// subalgebra containing the unit.
pub fn restrict(a: &Algebra, k: usize) -> Result<Algebra> {
    let n = a.dim();
    if k == n {
        return Ok(a.clone());
    }
    let outside = |v: &[Rational]| v[k..].iter().any(|c| !c.is_zero());
    if outside(&a.unit) {
        return Err(Error::PreconditionViolated("the unit leaves the subspace".into()));
    }
    let mut sc = StructureConstants::zeros(k);
    for i in 0..k {
        for j in 0..k {
            let p = a.basis_mul(i, j);
            if outside(p) {
                return Err(Error::PreconditionViolated(format!(
                    "{}·{} leaves the subspace",
                    a.label(i),
                    a.label(j)
                )));
            }
            sc.set(i, j, p[..k].to_vec());
        }
    }
    Algebra::new(a.basis[..k].to_vec(), sc, a.unit[..k].to_vec())
}

fn pad_tensor(t: &Tensor2, n: usize) -> Tensor2 {
    let mut out = Tensor2::zeros(n);
    for (i, j, c) in t.terms() {
        out[(i, j)] = c;
    }
    out
}

fn truncate_tensor(t: &Tensor2, k: usize) -> Option<Tensor2> {
    let mut out = Tensor2::zeros(k);
    for (i, j, c) in t.terms() {
        if i >= k || j >= k {
            return None;
        }
        out[(i, j)] = c;
    }
    Some(out)
}

fn pad_matrix(m: &Matrix, n: usize) -> Matrix {
    let mut out = Matrix::zeros(n, n);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out[(i, j)] = m[(i, j)].clone();
        }
    }
    out
}

fn algebra(n: usize, products: &[(usize, usize, usize)], unit: &[i64]) -> Algebra {
    let mut sc = StructureConstants::zeros(n);
    for &(i, j, k) in products {
        sc.set_term(i - 1, j - 1, k - 1, int(1));
    }
    Algebra::with_default_names(sc, unit.iter().map(|&c| int(c)).collect()).expect("catalog data")
}

fn vector(v: &[i64]) -> Vector {
    v.iter().map(|&c| int(c)).collect()
}

fn tensor(n: usize, terms: &[(usize, usize)]) -> Tensor2 {
    let mut t = Tensor2::zeros(n);
    for &(i, j) in terms {
        t[(i - 1, j - 1)] += int(1);
    }
    t
}

fn diag_tensor(d: &[i64]) -> Tensor2 {
    Tensor2::from_matrix(Matrix::diagonal(&vector(d)))
}

/// Table given by the images of the basis vectors.
fn images<const C: usize>(cols: &[[i64; C]]) -> Matrix {
    let cols: Vec<Vector> = cols.iter().map(|c| vector(c)).collect();
    Matrix::from_columns(&cols, C).expect("square table")
}

fn diag_form(name: &str, d: &[i64]) -> NamedForm {
    let gram = Matrix::diagonal(&vector(d));
    NamedForm {
        name: name.into(),
        phi: Tensor2::from_matrix(gram.invert().expect("nonsingular")),
        form: BilinearForm::new(gram).expect("square"),
    }
}

fn augmentations(list: &[&[i64]]) -> Vec<Augmentation> {
    list.iter().map(|e| Augmentation::new(vector(e))).collect()
}

fn a2_solutions() -> Vec<CatalogSolution> {
    // (terms, form, s̄ sign, table)
    let data: [(&[(usize, usize)], usize, i8, [[i64; 2]; 2]); 8] = [
        (&[(1, 1), (2, 2), (1, 2)], 0, 1, [[1, 1], [0, 1]]),
        (&[(1, 1), (2, 2), (2, 1)], 0, 1, [[1, 0], [1, 1]]),
        (&[(1, 2)], 0, -1, [[0, 1], [0, 0]]),
        (&[(2, 1)], 0, -1, [[0, 0], [1, 0]]),
        (&[(1, 1), (1, 2)], 1, 1, [[1, 1], [0, 0]]),
        (&[(1, 1), (2, 1)], 1, 1, [[1, 0], [-1, 0]]),
        (&[(2, 2), (1, 2)], 1, -1, [[0, 1], [0, -1]]),
        (&[(2, 2), (2, 1)], 1, -1, [[0, 0], [-1, -1]]),
    ];
    data.iter()
        .enumerate()
        .map(|(i, (terms, form, sign, q))| CatalogSolution {
            name: format!("r{}", i + 1),
            base: tensor(2, terms),
            form: *form,
            sbar_sign: *sign,
            weight_sign: -*sign,
            q: images(q),
        })
        .collect()
}

fn b1_solutions() -> Vec<CatalogSolution> {
    let bases: [&[(usize, usize)]; 6] = [
        &[(2, 1), (3, 1), (3, 2)],
        &[(1, 2), (1, 3), (2, 3)],
        &[(2, 1), (2, 3), (3, 1)],
        &[(1, 2), (3, 2), (1, 3)],
        &[(1, 3), (2, 1), (2, 3)],
        &[(3, 1), (1, 2), (3, 2)],
    ];
    // (diagonal offset, form, s̄ sign) per group of six
    let groups: [([i64; 3], usize, i8); 8] = [
        ([0, 0, 0], 0, -1),
        ([1, 1, 1], 0, 1),
        ([0, 0, 1], 1, -1),
        ([1, 1, 0], 1, 1),
        ([0, 1, 0], 2, -1),
        ([1, 0, 1], 2, 1),
        ([1, 0, 0], 3, -1),
        ([0, 1, 1], 3, 1),
    ];
    let tables: [[[i64; 3]; 3]; 48] = [
        [[0, 0, 0], [1, 0, 0], [1, 1, 0]],
        [[0, 1, 1], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 0], [1, 0, 1], [1, 0, 0]],
        [[0, 1, 1], [0, 0, 0], [0, 1, 0]],
        [[0, 0, 1], [1, 0, 1], [0, 0, 0]],
        [[0, 1, 0], [0, 0, 0], [1, 1, 0]],
        [[1, 0, 0], [1, 1, 0], [1, 1, 1]],
        [[1, 1, 1], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 0], [1, 1, 1], [1, 0, 1]],
        [[1, 1, 1], [0, 1, 0], [0, 1, 1]],
        [[1, 0, 1], [1, 1, 1], [0, 0, 1]],
        [[1, 1, 0], [0, 1, 0], [1, 1, 1]],
        [[0, 0, 0], [1, 0, 0], [-1, -1, -1]],
        [[0, 1, 1], [0, 0, 1], [0, 0, -1]],
        [[0, 0, 0], [1, 0, 1], [-1, 0, -1]],
        [[0, 1, 1], [0, 0, 0], [0, -1, -1]],
        [[0, 0, 1], [1, 0, 1], [0, 0, -1]],
        [[0, 1, 0], [0, 0, 0], [-1, -1, -1]],
        [[1, 0, 0], [1, 1, 0], [-1, -1, 0]],
        [[1, 1, 1], [0, 1, 1], [0, 0, 0]],
        [[1, 0, 0], [1, 1, 1], [-1, 0, 0]],
        [[1, 1, 1], [0, 1, 0], [0, -1, 0]],
        [[1, 0, 1], [1, 1, 1], [0, 0, 0]],
        [[1, 1, 0], [0, 1, 0], [-1, -1, 0]],
        [[0, 0, 0], [-1, -1, 0], [1, 1, 0]],
        [[0, 1, 1], [0, -1, -1], [0, 0, 0]],
        [[0, 0, 0], [-1, -1, -1], [1, 0, 0]],
        [[0, 1, 1], [0, -1, 0], [0, 1, 0]],
        [[0, 0, 1], [-1, -1, -1], [0, 0, 0]],
        [[0, 1, 0], [0, -1, 0], [1, 1, 0]],
        [[1, 0, 0], [-1, 0, 0], [1, 1, 1]],
        [[1, 1, 1], [0, 0, -1], [0, 0, 1]],
        [[1, 0, 0], [-1, 0, -1], [1, 0, 1]],
        [[1, 1, 1], [0, 0, 0], [0, 1, 1]],
        [[1, 0, 1], [-1, 0, -1], [0, 0, 1]],
        [[1, 1, 0], [0, 0, 0], [1, 1, 1]],
        [[-1, 0, 0], [1, 0, 0], [1, 1, 0]],
        // printed with the label P_{r26} on its last entry
        [[-1, -1, -1], [0, 0, 1], [0, 0, 0]],
        [[-1, 0, 0], [1, 0, 1], [1, 0, 0]],
        [[-1, -1, -1], [0, 0, 0], [0, 1, 0]],
        [[-1, 0, -1], [1, 0, 1], [0, 0, 0]],
        [[-1, -1, 0], [0, 0, 0], [1, 1, 0]],
        [[0, 0, 0], [1, 1, 0], [1, 1, 1]],
        [[0, -1, -1], [0, 1, 1], [0, 0, 1]],
        [[0, 0, 0], [1, 1, 1], [1, 0, 1]],
        [[0, -1, -1], [0, 1, 0], [0, 1, 1]],
        [[0, 0, -1], [1, 1, 1], [0, 0, 1]],
        [[0, -1, 0], [0, 1, 0], [1, 1, 1]],
    ];
    let mut out = Vec::with_capacity(48);
    for (g, (offset, form, sign)) in groups.iter().enumerate() {
        for (b, base) in bases.iter().enumerate() {
            let idx = 6 * g + b;
            out.push(CatalogSolution {
                name: format!("r{}", idx + 1),
                base: tensor(3, base).add(&diag_tensor(offset)),
                form: *form,
                sbar_sign: *sign,
                weight_sign: -*sign,
                q: images(&tables[idx]),
            });
        }
    }
    out
}

fn a2_forms() -> Vec<NamedForm> {
    vec![diag_form("B1", &[1, 1]), diag_form("B2", &[1, -1])]
}

pub fn catalog_algebra(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "A1" => CatalogEntry {
            name: name.into(),
            algebra: algebra(2, &[(1, 1, 1), (1, 2, 2), (2, 1, 2)], &[1, 0]),
            augmentations: augmentations(&[&[1, 0]]),
            inv_basis_expected: vec![tensor(2, &[(1, 2), (2, 1)]), tensor(2, &[(2, 2)])],
            form_dim: 2,
            frobenius_forms: Vec::new(),
            solutions: Vec::new(),
            grid: GridExpectation::OnlyUnitSquare,
            classified_nonzero: Some(1),
            notes: Vec::new(),
        },
        "A2" => CatalogEntry {
            name: name.into(),
            algebra: algebra(2, &[(1, 1, 1), (2, 2, 2)], &[1, 1]),
            augmentations: augmentations(&[&[1, 0], &[0, 1]]),
            inv_basis_expected: vec![tensor(2, &[(1, 1)]), tensor(2, &[(2, 2)])],
            form_dim: 2,
            frobenius_forms: a2_forms(),
            solutions: a2_solutions(),
            grid: GridExpectation::InvariantEqualsStored,
            classified_nonzero: Some(9),
            notes: Vec::new(),
        },
        "B1" => CatalogEntry {
            name: name.into(),
            algebra: algebra(3, &[(1, 1, 1), (2, 2, 2), (3, 3, 3)], &[1, 1, 1]),
            augmentations: augmentations(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            inv_basis_expected: vec![tensor(3, &[(1, 1)]), tensor(3, &[(2, 2)]), tensor(3, &[(3, 3)])],
            form_dim: 3,
            frobenius_forms: vec![
                diag_form("φ1", &[1, 1, 1]),
                diag_form("φ2", &[1, 1, -1]),
                diag_form("φ3", &[1, -1, 1]),
                diag_form("φ4", &[-1, 1, 1]),
            ],
            solutions: b1_solutions(),
            grid: GridExpectation::InvariantEqualsStored,
            classified_nonzero: Some(73),
            notes: vec!["the table of r38 carries the label P_{r26} on its value at e3".into()],
        },
        "B2" => {
            let solutions = a2_solutions()
                .into_iter()
                .map(|s| CatalogSolution {
                    base: pad_tensor(&s.base, 3),
                    q: pad_matrix(&s.q, 3),
                    ..s
                })
                .collect();
            CatalogEntry {
                name: name.into(),
                algebra: algebra(3, &[(1, 1, 1), (2, 2, 2), (3, 2, 3), (2, 3, 3)], &[1, 1, 0]),
                augmentations: augmentations(&[&[1, 0, 0], &[0, 1, 0]]),
                inv_basis_expected: vec![
                    tensor(3, &[(1, 1)]),
                    tensor(3, &[(2, 3), (3, 2)]),
                    tensor(3, &[(3, 3)]),
                ],
                form_dim: 2,
                frobenius_forms: a2_forms(),
                solutions,
                grid: GridExpectation::InvariantEqualsStored,
                classified_nonzero: None,
                notes: vec!["solutions and forms live on the unital subalgebra span{e1, e2}".into()],
            }
        }
        "B3" => CatalogEntry {
            name: name.into(),
            algebra: algebra(
                3,
                &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (1, 3, 3), (3, 1, 3), (2, 2, 3)],
                &[1, 0, 0],
            ),
            augmentations: augmentations(&[&[1, 0, 0]]),
            inv_basis_expected: vec![
                tensor(3, &[(1, 3), (3, 1), (2, 2)]),
                tensor(3, &[(2, 3), (3, 2)]),
                tensor(3, &[(3, 3)]),
            ],
            form_dim: 3,
            frobenius_forms: Vec::new(),
            solutions: Vec::new(),
            grid: GridExpectation::OnlyUnitSquare,
            classified_nonzero: Some(1),
            notes: Vec::new(),
        },
        "B4" => CatalogEntry {
            name: name.into(),
            algebra: algebra(
                3,
                &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (1, 3, 3), (3, 1, 3), (3, 2, 2), (3, 3, 3)],
                &[1, 0, 0],
            ),
            augmentations: augmentations(&[&[1, 0, 0], &[1, 0, 1]]),
            inv_basis_expected: Vec::new(),
            form_dim: 3,
            frobenius_forms: Vec::new(),
            solutions: Vec::new(),
            grid: GridExpectation::NoInvariant,
            classified_nonzero: None,
            notes: Vec::new(),
        },
        "B5" => CatalogEntry {
            name: name.into(),
            algebra: algebra(3, &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (1, 3, 3), (3, 1, 3)], &[1, 0, 0]),
            augmentations: augmentations(&[&[1, 0, 0]]),
            inv_basis_expected: vec![
                tensor(3, &[(2, 2)]),
                tensor(3, &[(2, 3), (3, 2)]),
                tensor(3, &[(3, 3)]),
            ],
            form_dim: 3,
            frobenius_forms: Vec::new(),
            solutions: Vec::new(),
            grid: GridExpectation::OnlyUnitSquare,
            classified_nonzero: Some(1),
            notes: Vec::new(),
        },
        "M2" => {
            let (algebra, f) = trace_form(2);
            // E11⊗E22 − E12⊗E21, so that r(−1) = E12⊗E21 − E11⊗E22
            let mut base = Tensor2::zeros(4);
            base[(0, 3)] = int(1);
            base[(1, 2)] = int(-1);
            let q = images(&[[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]]);
            CatalogEntry {
                name: name.into(),
                algebra,
                augmentations: Vec::new(),
                inv_basis_expected: vec![f.phi.clone()],
                form_dim: 4,
                frobenius_forms: vec![NamedForm {
                    name: "trace".into(),
                    form: f.form.clone(),
                    phi: f.phi.clone(),
                }],
                solutions: vec![CatalogSolution {
                    name: "r".into(),
                    base,
                    form: 0,
                    sbar_sign: -1,
                    weight_sign: 1,
                    q,
                }],
                grid: GridExpectation::ReportOnly,
                classified_nonzero: None,
                notes: Vec::new(),
            }
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(entry)
}

/// The stored symmetrized invariant families at `μ`.
pub fn catalog_solutions(name: &str, mu: &Rational) -> Result<Vec<Tensor2>> {
    let entry = catalog_algebra(name)?;
    if mu.is_zero() {
        return Err(Error::ZeroMu);
    }
    Ok(entry.solutions.iter().map(|s| s.at(mu)).collect())
}

/// Normalized tables `Q` with the sign `w` such that `μQ` has weight `wμ`.
pub fn catalog_rb_tables(name: &str) -> Result<Vec<(String, LinearMap, i8)>> {
    let entry = catalog_algebra(name)?;
    Ok(entry
        .solutions
        .iter()
        .map(|s| (s.name.clone(), LinearMap::primal(s.q.clone()), s.weight_sign))
        .collect())
}

fn span_rank(ts: &[Tensor2]) -> usize {
    if ts.is_empty() {
        return 0;
    }
    let rows: Vec<Vector> = ts
        .iter()
        .map(|t| t.coeff.to_rows().into_iter().flatten().collect())
        .collect();
    Matrix::from_rows(rows).expect("equal lengths").rank()
}

/// Whether two lists of tensors span the same subspace.
pub fn same_span(a: &[Tensor2], b: &[Tensor2]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let both: Vec<Tensor2> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&both) == ra
}

fn mismatch(identity: &str, at: &str, lhs: String, rhs: String) -> Witness {
    Witness {
        identity: identity.into(),
        at: at.into(),
        lhs,
        rhs,
    }
}

/// The six checks for one stored family at one `μ`.
pub fn verify_solution(entry: &CatalogEntry, sol: &CatalogSolution, mu: &Rational) -> Result<CheckReport> {
    let a = &entry.algebra;
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    let r = sol.at(mu);
    let at = format!("{} at μ = {}", sol.name, scalar::format(mu));

    let solves = check_nhacybe(&inst, &r)?;

    let sbar = extended_symmetrizer(&inst, &r);
    let expected = entry.phi(sol.form).scale(&(mu * int(sol.sbar_sign.into())));
    let symmetrizer = CheckReport::from_witness(
        "symmetrizer",
        (sbar != expected).then(|| mismatch("s̄ = ±μφ", &at, format!("{sbar:?}"), format!("{expected:?}"))),
    );

    let invariant = is_symmetrized_invariant(&inst, &r);

    let f = entry.frobenius(sol.form)?;
    let r_sub = truncate_tensor(&r, entry.form_dim)
        .ok_or_else(|| Error::PreconditionViolated(format!("{} leaves the form subalgebra", sol.name)))?;
    let (p, _) = p_r(&f, &r_sub)?;
    let p_full = pad_matrix(&p.matrix, a.dim());
    let mu_q = sol.q.scale(mu);
    let table = CheckReport::from_witness(
        "P_r = μQ",
        (p_full != mu_q).then(|| mismatch("P_r = μQ", &at, format!("{p_full:?}"), format!("{mu_q:?}"))),
    );

    let weight = mu * int(sol.weight_sign.into());
    let mut rb = check_rota_baxter(a, &mu_q, &weight);
    rb.name = format!("μQ Rota-Baxter of weight {}", scalar::format(&weight));

    let lambda = -(mu * int(sol.sbar_sign.into()));
    let bridge_report = frobenius_bridge_suite(&f, mu, &lambda, &r_sub)?;
    let bridge = if bridge_report.verdict == Some(true) {
        CheckReport::pass("Frobenius bridge")
    } else {
        CheckReport::fail(
            "Frobenius bridge",
            mismatch("all three statements hold", &at, format!("{:?}", bridge_report.verdict_vector()), "all true".into()),
        )
    };

    Ok(CheckReport::all(
        at,
        vec![solves, symmetrizer, invariant, table, rb, bridge],
    ))
}

/// Dimension and span of `Inv(A)` against the stored basis.
pub fn verify_inv(entry: &CatalogEntry) -> CheckReport {
    let computed = invariant_symmetric_basis(&entry.algebra);
    let ok = same_span(&computed, &entry.inv_basis_expected);
    let witness = (!ok).then(|| {
        mismatch(
            "span Inv(A) = stored basis",
            &entry.name,
            format!("dim {}", computed.len()),
            format!("dim {}", entry.inv_basis_expected.len()),
        )
    });
    CheckReport::from_witness("Inv(A)", witness).with_note(format!("dim Inv = {}", computed.len()))
}

/// Outcome of enumerating the grid `{0, μ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSummary {
    pub nonzero: Vec<Tensor2>,
    pub invariant: Vec<Tensor2>,
}

pub fn grid_summary(entry: &CatalogEntry, mu: &Rational) -> Result<GridSummary> {
    let inst = NhacybeInstance::new(entry.algebra.clone(), mu.clone());
    let nonzero: Vec<Tensor2> = grid_enumerate(&inst, &[Rational::zero(), mu.clone()])?
        .into_iter()
        .filter(|t| !t.is_zero())
        .collect();
    let invariant = nonzero
        .iter()
        .filter(|t| is_symmetrized_invariant(&inst, t).passed())
        .cloned()
        .collect();
    Ok(GridSummary { nonzero, invariant })
}

fn same_set(a: &[Tensor2], b: &[Tensor2]) -> bool {
    a.len() == b.len() && a.iter().all(|t| b.contains(t)) && b.iter().all(|t| a.contains(t))
}

pub fn verify_grid(entry: &CatalogEntry, mu: &Rational) -> Result<CheckReport> {
    let g = grid_summary(entry, mu)?;
    let at = format!("{} at μ = {}", entry.name, scalar::format(mu));
    let counts = format!(
        "{} nonzero solutions, {} symmetrized invariant",
        g.nonzero.len(),
        g.invariant.len()
    );
    let witness = match entry.grid {
        GridExpectation::InvariantEqualsStored => {
            let stored: Vec<Tensor2> = entry.solutions.iter().map(|s| s.at(mu)).collect();
            (!same_set(&g.invariant, &stored)).then(|| {
                mismatch(
                    "symmetrized invariant grid solutions = stored families",
                    &at,
                    format!("{} found", g.invariant.len()),
                    format!("{} stored", stored.len()),
                )
            })
        }
        GridExpectation::OnlyUnitSquare => {
            let expected = Tensor2::basis(entry.algebra.dim(), 0, 0).scale(mu);
            (g.nonzero != [expected] || !g.invariant.is_empty()).then(|| {
                mismatch(
                    "nonzero grid solutions = {μ e1⊗e1}, not symmetrized invariant",
                    &at,
                    format!("{:?}", g.nonzero),
                    "[μ·e1⊗e1]".into(),
                )
            })
        }
        GridExpectation::NoInvariant => (!g.invariant.is_empty()).then(|| {
            mismatch(
                "no symmetrized invariant grid solution",
                &at,
                format!("{:?}", g.invariant),
                "[]".into(),
            )
        }),
        GridExpectation::ReportOnly => None,
    };
    let mut report = CheckReport::from_witness("grid {0, μ}", witness).with_note(counts);
    if let Some(total) = entry.classified_nonzero {
        report = report.with_note(format!("classification lists {total} nonzero solutions"));
    }
    Ok(report)
}

/// Every stored claim for `name` at every sample `μ`: the six per-family
/// checks, `Inv(A)`, and the grid cross-check.
pub fn verify_catalog(name: &str, mu_samples: &[Rational]) -> Result<CheckReport> {
    let entry = catalog_algebra(name)?;
    if mu_samples.iter().any(Zero::is_zero) {
        return Err(Error::ZeroMu);
    }
    let pairs: Vec<(&CatalogSolution, &Rational)> = mu_samples
        .iter()
        .flat_map(|mu| entry.solutions.iter().map(move |s| (s, mu)))
        .collect();
    let per_solution: Vec<CheckReport> = pairs
        .par_iter()
        .map(|(s, mu)| verify_solution(&entry, s, mu))
        .collect::<Result<_>>()?;
    let grids: Vec<CheckReport> = mu_samples
        .par_iter()
        .map(|mu| verify_grid(&entry, mu))
        .collect::<Result<_>>()?;
    let mut children = vec![verify_inv(&entry)];
    children.push(CheckReport::all("families", per_solution));
    children.push(CheckReport::all("grid", grids));
    let mut report = CheckReport::all(format!("catalog {name}"), children);
    for note in &entry.notes {
        report = report.with_note(note.clone());
    }
    Ok(report)
}
