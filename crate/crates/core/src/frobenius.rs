//! Frobenius structures: nondegenerate invariant forms, the tensor `φ` they
//! determine, and the operators `P_r`, `P_r^t` that move solutions of the
//! tensor equation to Rota-Baxter type operators on `A` itself.

use num_traits::Zero;

use crate::algebra::{check_augmentation, left_right_ops, matrix_algebra, Algebra, Augmentation, BilinearForm};
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{add_vectors, invert, scale_vector, sub_vectors, LinearMap, Matrix, Vector};
use crate::operators::{check_rb_system, check_rota_baxter, o_operator_residual, WeightOp};
use crate::report::{CheckReport, PairTable};
use crate::scalar::{self, Rational};
use crate::tensor::Tensor2;
use crate::ybe::{check_nhacybe, extended_symmetrizer, is_invariant, NhacybeInstance};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusStructure {
    pub algebra: Algebra,
    pub form: BilinearForm,
    /// `φ♯: A* → A`, inverse of `x ↦ B(x, ·)`.
    pub phi_sharp: LinearMap,
    pub phi: Tensor2,
}

impl FrobeniusStructure {
    /// Matrix of `(φ♯)⁻¹: A → A*`.
    pub fn phi_sharp_inverse(&self) -> Matrix {
        self.form.gram.transpose()
    }
}

/// The tensor `φ` attached to a nondegenerate gram matrix.
pub fn phi_from_gram(gram: &Matrix) -> Result<Tensor2> {
    invert(gram).map(Tensor2::from_matrix).map_err(|_| Error::Degenerate)
}

pub fn frobenius_from_form(a: &Algebra, b: &BilinearForm) -> Result<FrobeniusStructure> {
    if b.gram.rows() != a.dim() {
        return Err(dim_mismatch("gram matrix and algebra dimensions differ"));
    }
    if !b.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    if let Some(((i, j, k), _, _)) = b.invariance_defect(a) {
        return Err(Error::NotInvariantForm(format!(
            "B({}{}, {}) ≠ B({}, {}{})",
            a.label(i),
            a.label(j),
            a.label(k),
            a.label(i),
            a.label(j),
            a.label(k)
        )));
    }
    if !b.is_symmetric() {
        return Err(Error::NotSymmetricForm);
    }
    let phi_sharp = LinearMap::dual(invert(&b.gram.transpose())?);
    let phi = Tensor2::from_matrix(phi_sharp.matrix.transpose());
    Ok(FrobeniusStructure {
        algebra: a.clone(),
        form: b.clone(),
        phi_sharp,
        phi,
    })
}

/// `M_n(k)` with `B(x, y) = Tr(xy)`.
pub fn trace_form(n: usize) -> (Algebra, FrobeniusStructure) {
    let a = matrix_algebra(n);
    let dim = n * n;
    let mut gram = Matrix::zeros(dim, dim);
    for i in 0..n {
        for j in 0..n {
            // Tr(E_ij E_ji) = 1, all other pairs vanish
            gram[(i * n + j, j * n + i)] = scalar::one();
        }
    }
    let form = BilinearForm::new(gram).expect("square");
    let f = frobenius_from_form(&a, &form).expect("the trace form is Frobenius");
    (a, f)
}

/// `(P_r, P_r^t) = (r♯(φ♯)⁻¹, r^{t♯}(φ♯)⁻¹)`.
pub fn p_r(f: &FrobeniusStructure, r: &Tensor2) -> Result<(LinearMap, LinearMap)> {
    if r.dim() != f.algebra.dim() {
        return Err(dim_mismatch("tensor and algebra dimensions differ"));
    }
    let inv = f.phi_sharp_inverse();
    Ok((
        LinearMap::primal(r.coeff.transpose().dot(&inv)),
        LinearMap::primal(r.coeff.dot(&inv)),
    ))
}

/// `T = s̄♯(φ♯)⁻¹`.
fn twist_map(f: &FrobeniusStructure, sbar: &Tensor2) -> Matrix {
    sbar.coeff.transpose().dot(&f.phi_sharp_inverse())
}

fn rsharp1_residual(f: &FrobeniusStructure, mu: &Rational, p: &Matrix, pt: &Matrix) -> (PairTable, PairTable) {
    let a = &f.algebra;
    let n = a.dim();
    let pc: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let ptc: Vec<Vector> = (0..n).map(|i| pt.column(i)).collect();
    let b1: Vec<Rational> = (0..n).map(|y| f.form.eval(&a.unit, &a.e(y))).collect();
    // P(x)P(y) − P(P(x)y) + P(xP^t(y)) − μB(1,y)P(x)
    let forward = PairTable::build(n, |x, y| {
        let lhs = a.mul(&pc[x], &pc[y]);
        let inner = sub_vectors(&a.mul(&pc[x], &a.e(y)), &a.mul(&a.e(x), &ptc[y]));
        let out = sub_vectors(&lhs, &p.apply(&inner));
        sub_vectors(&out, &scale_vector(&(mu * &b1[y]), &pc[x]))
    });
    // P^t(x)P^t(y) + P^t(P(x)y) − P^t(xP^t(y)) − μB(1,x)P^t(y)
    let transposed = PairTable::build(n, |x, y| {
        let lhs = a.mul(&ptc[x], &ptc[y]);
        let inner = sub_vectors(&a.mul(&pc[x], &a.e(y)), &a.mul(&a.e(x), &ptc[y]));
        let out = add_vectors(&lhs, &pt.apply(&inner));
        sub_vectors(&out, &scale_vector(&(mu * &b1[x]), &ptc[y]))
    });
    (forward, transposed)
}

/// The five equivalent statements on a symmetric Frobenius algebra: the
/// equation, the two operator identities for `P_r` and `P_r^t`, and the
/// right/left twisted Rota-Baxter identities with twist `−s̄♯(φ♯)⁻¹`.
pub fn rbsystem_suite(f: &FrobeniusStructure, mu: &Rational, r: &Tensor2) -> Result<CheckReport> {
    let a = &f.algebra;
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    let (p, pt) = p_r(f, r)?;
    let (forward, transposed) = rsharp1_residual(f, mu, &p.matrix, &pt.matrix);
    let twist = twist_map(f, &extended_symmetrizer(&inst, r)).neg();
    let adj = left_right_ops(a);
    let right = o_operator_residual(&adj, &p, &WeightOp::RightTwist(twist.clone()))?;
    let left = o_operator_residual(&adj, &pt, &WeightOp::LeftTwist(twist))?;
    Ok(CheckReport::agreement(
        "Frobenius operator forms",
        vec![
            check_nhacybe(&inst, r)?,
            forward.report("P_r identity", "P(x)P(y) = P(P(x)y) − P(xP^t(y)) + μB(1,y)P(x)"),
            transposed.report("P_r^t identity", "P^t(x)P^t(y) = −P^t(P(x)y) + P^t(xP^t(y)) + μB(1,x)P^t(y)"),
            right.report("P_r right-twisted Rota-Baxter", "twist −s̄♯(φ♯)⁻¹"),
            left.report("P_r^t left-twisted Rota-Baxter", "twist −s̄♯(φ♯)⁻¹"),
        ],
    ))
}

/// For the associative equation (`μ = 0`): `r` solves it iff
/// `(P_r, −P_r^t)` is a Rota-Baxter system.
pub fn rb_system_suite(f: &FrobeniusStructure, r: &Tensor2) -> Result<CheckReport> {
    let inst = NhacybeInstance::new(f.algebra.clone(), Rational::zero());
    let (p, pt) = p_r(f, r)?;
    Ok(CheckReport::agreement(
        "Rota-Baxter system form",
        vec![
            check_nhacybe(&inst, r)?,
            check_rb_system(&f.algebra, &p.matrix, &pt.matrix.neg()),
        ],
    ))
}

/// `λ` with `s̄ = −λφ`, if the extended symmetrizer is proportional to `φ`.
pub fn derive_lambda(f: &FrobeniusStructure, mu: &Rational, r: &Tensor2) -> Option<Rational> {
    let inst = NhacybeInstance::new(f.algebra.clone(), mu.clone());
    let sbar = extended_symmetrizer(&inst, r);
    if sbar.is_zero() {
        return Some(Rational::zero());
    }
    sbar.ratio_to(&f.phi).map(|c| -c)
}

/// Under `s̄ = −λφ`: the equation holds iff `P_r` is Rota-Baxter of weight
/// `λ` iff `P_r^t` is.
pub fn frobenius_bridge_suite(
    f: &FrobeniusStructure,
    mu: &Rational,
    lambda: &Rational,
    r: &Tensor2,
) -> Result<CheckReport> {
    let a = &f.algebra;
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    let defect = extended_symmetrizer(&inst, r).add(&f.phi.scale(lambda));
    if !defect.is_zero() {
        return Err(Error::PreconditionViolated(format!(
            "s̄ + λφ = {defect:?} is not zero"
        )));
    }
    let (p, pt) = p_r(f, r)?;
    let rb = |m: &Matrix, name: &str| {
        let mut c = check_rota_baxter(a, m, lambda);
        c.name = name.to_string();
        c
    };
    Ok(CheckReport::agreement(
        "Frobenius bridge",
        vec![
            check_nhacybe(&inst, r)?,
            rb(&p.matrix, "P_r Rota-Baxter"),
            rb(&pt.matrix, "P_r^t Rota-Baxter"),
        ],
    )
    .with_note(format!("weight {}", scalar::format(lambda))))
}

/// `B(x, y) = ε(x)ε(y)`.
pub fn aug_form(a: &Algebra, eps: &Augmentation) -> Result<BilinearForm> {
    let check = check_augmentation(a, eps);
    if let Some(w) = check.children.iter().find_map(|c| c.witness.clone()) {
        return Err(Error::InvalidAugmentation(format!("{} at {}", w.identity, w.at)));
    }
    let e = Matrix::from_columns(&[eps.eps.clone()], a.dim())?;
    BilinearForm::new(e.dot(&e.transpose()))
}

/// Whether `B` is symmetric and invariant, and whether `φ` is; the two
/// verdicts must agree for nondegenerate `B`.
pub fn form_and_tensor_verdicts(a: &Algebra, b: &BilinearForm) -> Result<(bool, bool)> {
    let phi = phi_from_gram(&b.gram)?;
    let form_ok = b.is_symmetric() && b.invariance_defect(a).is_none();
    let tensor_ok = phi.is_symmetric() && is_invariant(a, &phi).passed();
    Ok((form_ok, tensor_ok))
}
