//! Building solutions out of Rota-Baxter and O-operators, and pulling
//! Rota-Baxter operators back out of solutions in augmented algebras.

use num_traits::{One, Zero};

use crate::algebra::{check_augmentation, dual_bimodule, semidirect_product, Algebra, Augmentation, Bimodule};
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{add_vectors, scale_vector, sub_vectors, unit_vector, LinearMap, Matrix, Vector};
use crate::operators::{check_rota_baxter, o_operator_residual, rota_baxter_residual, WeightOp};
use crate::report::{format_vector, CheckReport, PairTable, Witness};
use crate::scalar::{self, Rational};
use crate::tensor::Tensor2;
use crate::ybe::{extended_symmetrizer, is_invariant, is_solution, unit_tensor, NhacybeInstance};

fn violated(what: impl Into<String>) -> Error {
    Error::PreconditionViolated(what.into())
}

/// `uuᵀ` for the unit `u`: the matrix of `a* ↦ ⟨a*, 1⟩1`.
fn unit_projector(a: &Algebra) -> Matrix {
    unit_tensor(a).coeff
}

fn require_symmetric_invariant(a: &Algebra, s: &Tensor2) -> Result<()> {
    if s.dim() != a.dim() {
        return Err(dim_mismatch("s must live in A⊗A"));
    }
    if !s.is_symmetric() {
        return Err(violated("s is not symmetric"));
    }
    if !is_invariant(a, s).passed() {
        return Err(violated("s is not invariant"));
    }
    Ok(())
}

/// `r₁ = Σ P(aᵢ)⊗bᵢ` and `r₂ = Σ aᵢ⊗P(bᵢ)` for `s = Σ aᵢ⊗bᵢ`.
///
/// Requires `s` symmetric invariant, `P` Rota-Baxter of weight `λ` and
/// `s♯P* + Ps♯ = −λs♯ + μ⟨·,1⟩1`.
pub fn r_from_rb(
    a: &Algebra,
    s: &Tensor2,
    p: &LinearMap,
    lambda: &Rational,
    mu: &Rational,
) -> Result<(Tensor2, Tensor2)> {
    let n = a.dim();
    if p.domain_dim() != n || p.codomain_dim() != n {
        return Err(dim_mismatch("P must be an endomorphism of A"));
    }
    require_symmetric_invariant(a, s)?;
    let pm = &p.matrix;
    if !rota_baxter_residual(a, pm, lambda).is_zero() {
        return Err(violated(format!(
            "P is not a Rota-Baxter operator of weight {}",
            scalar::format(lambda)
        )));
    }
    let s_sharp = s.coeff.transpose();
    let compat = s_sharp
        .dot(&pm.transpose())
        .add(&pm.dot(&s_sharp))
        .add(&s_sharp.scale(lambda))
        .sub(&unit_projector(a).scale(mu));
    if !compat.is_zero() {
        return Err(violated("s♯P* + Ps♯ = −λs♯ + μ⟨·,1⟩1 fails"));
    }
    let r1 = Tensor2::from_matrix(pm.dot(&s.coeff));
    let r2 = Tensor2::from_matrix(s.coeff.dot(&pm.transpose()));
    Ok((r1, r2))
}

/// `P_r = r♯(s♯)⁻¹` and `P_r^t = r^{t♯}(s♯)⁻¹`.
pub fn rb_from_r(
    a: &Algebra,
    s: &Tensor2,
    r: &Tensor2,
    lambda: &Rational,
    mu: &Rational,
) -> Result<(LinearMap, LinearMap)> {
    if r.dim() != a.dim() {
        return Err(dim_mismatch("r must live in A⊗A"));
    }
    require_symmetric_invariant(a, s)?;
    let s_inv = s.coeff.transpose().invert().map_err(|_| Error::Degenerate)?;
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    let expected = s.scale(&-lambda.clone());
    if extended_symmetrizer(&inst, r) != expected {
        return Err(violated("r + σ(r) = −λs + μ(1⊗1) fails"));
    }
    if !is_solution(&inst, r) {
        return Err(violated("r does not solve the equation"));
    }
    let p = r.coeff.transpose().dot(&s_inv);
    let pt = r.coeff.dot(&s_inv);
    Ok((LinearMap::primal(p), LinearMap::primal(pt)))
}

/// `α̂(x, u) = (α(u), −λu)` on `A⋉V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedOperator {
    pub hat_alpha: LinearMap,
    pub source_alpha: LinearMap,
    pub lambda: Rational,
    pub semidirect: Algebra,
}

pub fn lift_o_operator(v: &Bimodule, alpha: &LinearMap, lambda: &Rational) -> Result<LiftedOperator> {
    let n = v.algebra.dim();
    let m = v.space_dim;
    if alpha.domain_dim() != m || alpha.codomain_dim() != n {
        return Err(dim_mismatch("α must map the module to the algebra"));
    }
    let total = n + m;
    let mut hat = Matrix::zeros(total, total);
    for b in 0..m {
        for i in 0..n {
            hat[(i, n + b)] = alpha.matrix[(i, b)].clone();
        }
        hat[(n + b, n + b)] = -lambda.clone();
    }
    Ok(LiftedOperator {
        hat_alpha: LinearMap::primal(hat),
        source_alpha: alpha.clone(),
        lambda: lambda.clone(),
        semidirect: semidirect_product(v),
    })
}

impl LiftedOperator {
    pub fn check_rota_baxter(&self) -> CheckReport {
        check_rota_baxter(&self.semidirect, &self.hat_alpha.matrix, &self.lambda)
    }
}

/// Both sides of the lifting equivalence: `α` is a weight-zero O-operator
/// and `α̂` is Rota-Baxter of weight `λ`. Passes when the verdicts agree.
pub fn lift_equivalence(v: &Bimodule, alpha: &LinearMap, lambda: &Rational) -> Result<CheckReport> {
    let lifted = lift_o_operator(v, alpha, lambda)?;
    let o_op = o_operator_residual(v, alpha, &WeightOp::Zero)?.report(
        "α is an O-operator of weight zero",
        "α(u)α(v) = α(ℓ(α(u))v + u r(α(v)))",
    );
    let mut rb = lifted.check_rota_baxter();
    rb.name = format!("α̂ is Rota-Baxter of weight {}", scalar::format(lambda));
    Ok(CheckReport::agreement("lifting equivalence", vec![o_op, rb]))
}

fn first_defect(
    rows: usize,
    cols: usize,
    identity: &str,
    label: impl Fn(usize, usize) -> String,
    defect: impl Fn(usize, usize) -> (Vector, Vector),
) -> Option<Witness> {
    for i in 0..rows {
        for j in 0..cols {
            let (lhs, rhs) = defect(i, j);
            if lhs != rhs {
                return Some(Witness {
                    identity: identity.to_string(),
                    at: label(i, j),
                    lhs: format_vector(&lhs),
                    rhs: format_vector(&rhs),
                });
            }
        }
    }
    None
}

/// Checks `β(ℓ(x)u) = xβ(u)`, `β(u r(x)) = β(u)x` and `ℓ(β(u))v = u r(β(v))`.
pub fn check_balanced_hom(v: &Bimodule, beta: &LinearMap) -> Result<CheckReport> {
    let a = &v.algebra;
    let n = a.dim();
    let m = v.space_dim;
    if beta.domain_dim() != m || beta.codomain_dim() != n {
        return Err(dim_mismatch("β must map the module to the algebra"));
    }
    let images: Vec<Vector> = (0..m).map(|u| beta.image_of_basis(u)).collect();
    let xu = |x: usize, u: usize| format!("({}, u{})", a.label(x), u + 1);
    let left = first_defect(n, m, "β(ℓ(x)u) = xβ(u)", xu, |x, u| {
        let lhs = beta.apply(&v.left[x].column(u));
        (lhs, a.mul(&a.e(x), &images[u]))
    });
    let right = first_defect(n, m, "β(u r(x)) = β(u)x", xu, |x, u| {
        let lhs = beta.apply(&v.right[x].column(u));
        (lhs, a.mul(&images[u], &a.e(x)))
    });
    let uv = |u: usize, w: usize| format!("(u{}, u{})", u + 1, w + 1);
    let balanced = first_defect(m, m, "ℓ(β(u))v = u r(β(v))", uv, |u, w| {
        let lhs = v.act_left(&images[u], &unit_vector(m, w));
        let rhs = v.act_right(&unit_vector(m, u), &images[w]);
        (lhs, rhs)
    });
    Ok(CheckReport::all(
        "balanced bimodule homomorphism",
        vec![
            CheckReport::from_witness("left module map", left),
            CheckReport::from_witness("right module map", right),
            CheckReport::from_witness("balanced", balanced),
        ],
    ))
}

/// A basis of the space of balanced bimodule homomorphisms `V → A`; the
/// three defining identities are linear in `β`.
pub fn balanced_hom_basis(v: &Bimodule) -> Vec<LinearMap> {
    let a = &v.algebra;
    let n = a.dim();
    let m = v.space_dim;
    let var = |i: usize, b: usize| i * m + b;
    let mut rows: Vec<Vector> = Vec::new();
    let mut push = |row: Vector| {
        if !row.iter().all(Zero::is_zero) {
            rows.push(row);
        }
    };
    for x in 0..n {
        for u in 0..m {
            for k in 0..n {
                let mut left = vec![Rational::zero(); n * m];
                let mut right = vec![Rational::zero(); n * m];
                for b in 0..m {
                    left[var(k, b)] += &v.left[x][(b, u)];
                    right[var(k, b)] += &v.right[x][(b, u)];
                }
                for i in 0..n {
                    left[var(i, u)] -= a.sc.get(x, i, k);
                    right[var(i, u)] -= a.sc.get(i, x, k);
                }
                push(left);
                push(right);
            }
        }
    }
    for u in 0..m {
        for w in 0..m {
            for c in 0..m {
                let mut row = vec![Rational::zero(); n * m];
                for i in 0..n {
                    row[var(i, u)] += &v.left[i][(c, w)];
                    row[var(i, w)] -= &v.right[i][(c, u)];
                }
                push(row);
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![Rational::zero(); n * m]);
    }
    let system = Matrix::from_rows(rows).expect("rows share a length");
    system
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut b = Matrix::zeros(n, m);
            for i in 0..n {
                for j in 0..m {
                    b[(i, j)] = k[var(i, j)].clone();
                }
            }
            LinearMap::primal(b)
        })
        .collect()
}

/// `β̃ = β + σ(β)` in `(A⋉V*)⊗(A⋉V*)`, where `β ↦ Σ β(vₐ)⊗vₐ*`.
pub fn beta_tilde(v: &Bimodule, beta: &LinearMap) -> Result<Tensor2> {
    let n = v.algebra.dim();
    let m = v.space_dim;
    if beta.domain_dim() != m || beta.codomain_dim() != n {
        return Err(dim_mismatch("β must map the module to the algebra"));
    }
    let mut t = Tensor2::zeros(n + m);
    for i in 0..n {
        for b in 0..m {
            let c = beta.matrix[(i, b)].clone();
            t[(i, n + b)] = c.clone();
            t[(n + b, i)] = c;
        }
    }
    Ok(t)
}

/// The algebra `A⋉V*` in which [`beta_tilde`] lives.
pub fn beta_tilde_algebra(v: &Bimodule) -> Algebra {
    semidirect_product(&dual_bimodule(v))
}

/// Output of a construction: two solutions in `algebra` with common
/// symmetric invariant part `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub algebra: Algebra,
    pub s: Tensor2,
    pub r1: Tensor2,
    pub r2: Tensor2,
}

/// `r₁♯ = β̃♯α̂*`, `r₂♯ = α̂β̃♯` in `Â = A⋉V`, for a weight-zero O-operator
/// `α: V → A` and a balanced `β: V* → A` with `βα* + αβ* = μ⟨·,1⟩1`.
pub fn thm_cons_build(
    v: &Bimodule,
    alpha: &LinearMap,
    beta: &LinearMap,
    lambda: &Rational,
    mu: &Rational,
) -> Result<Construction> {
    let a = &v.algebra;
    let n = a.dim();
    let m = v.space_dim;
    if beta.domain_dim() != m || beta.codomain_dim() != n {
        return Err(dim_mismatch("β must map V* to the algebra"));
    }
    if !o_operator_residual(v, alpha, &WeightOp::Zero)?.is_zero() {
        return Err(violated("α is not an O-operator of weight zero"));
    }
    let dual = dual_bimodule(v);
    if !check_balanced_hom(&dual, beta)?.passed() {
        return Err(violated("β is not a balanced bimodule homomorphism"));
    }
    let compat = beta
        .matrix
        .dot(&alpha.matrix.transpose())
        .add(&alpha.matrix.dot(&beta.matrix.transpose()))
        .sub(&unit_projector(a).scale(mu));
    if !compat.is_zero() {
        return Err(violated("βα* + αβ* = μ⟨·,1⟩1 fails"));
    }
    let lifted = lift_o_operator(v, alpha, lambda)?;
    let s = beta_tilde(&dual, beta)?;
    let hat = &lifted.hat_alpha.matrix;
    let r1 = Tensor2::from_matrix(hat.dot(&s.coeff));
    let r2 = Tensor2::from_matrix(s.coeff.dot(&hat.transpose()));
    Ok(Construction {
        algebra: lifted.semidirect,
        s,
        r1,
        r2,
    })
}

/// `E[(p, j)] = ε(e_p e_j)`.
fn eps_products(a: &Algebra, eps: &Augmentation) -> Matrix {
    let n = a.dim();
    let mut e = Matrix::zeros(n, n);
    for p in 0..n {
        for j in 0..n {
            e[(p, j)] = eps.eval(a.basis_mul(p, j));
        }
    }
    e
}

/// `P(x) = Σ ε(aᵢx)bᵢ`, `P′(x) = Σ ε(bᵢx)aᵢ` for `r = Σ aᵢ⊗bᵢ`.
pub fn unitization_rb_extract(a: &Algebra, eps: &Augmentation, r: &Tensor2) -> Result<(LinearMap, LinearMap)> {
    if r.dim() != a.dim() || eps.eps.len() != a.dim() {
        return Err(dim_mismatch("r and ε must match the algebra"));
    }
    let e = eps_products(a, eps);
    let p = r.coeff.transpose().dot(&e);
    let pp = r.coeff.dot(&e);
    Ok((LinearMap::primal(p), LinearMap::primal(pp)))
}

/// Checks `Σ ε(aᵢx)bᵢ = x` on basis vectors, for `s̄ = Σ aᵢ⊗bᵢ`.
pub fn sequation_check(a: &Algebra, eps: &Augmentation, sbar: &Tensor2) -> CheckReport {
    let n = a.dim();
    let map = sbar.coeff.transpose().dot(&eps_products(a, eps));
    let witness = (0..n).find_map(|j| {
        let got = map.column(j);
        let want = a.e(j);
        (got != want).then(|| Witness {
            identity: "Σ ε(aᵢx)bᵢ = x".into(),
            at: a.label(j).to_string(),
            lhs: format_vector(&got),
            rhs: format_vector(&want),
        })
    });
    CheckReport::from_witness("s̄ recovers x through ε", witness)
}

/// `P(x)P(y) + P(xP′(y)) − P(P(x)y) − μ ε(y)P(x)` on basis pairs.
pub fn intermediate_identity_residual(
    a: &Algebra,
    eps: &Augmentation,
    r: &Tensor2,
    mu: &Rational,
) -> Result<PairTable> {
    let (p, pp) = unitization_rb_extract(a, eps, r)?;
    let n = a.dim();
    let px: Vec<Vector> = (0..n).map(|i| p.image_of_basis(i)).collect();
    let ppx: Vec<Vector> = (0..n).map(|i| pp.image_of_basis(i)).collect();
    Ok(PairTable::build(n, |i, j| {
        let mut d = a.mul(&px[i], &px[j]);
        d = add_vectors(&d, &p.apply(&a.mul(&a.e(i), &ppx[j])));
        d = sub_vectors(&d, &p.apply(&a.mul(&px[i], &a.e(j))));
        let c = mu.clone() * eps.eval(&a.e(j));
        sub_vectors(&d, &scale_vector(&c, &px[i]))
    }))
}

/// Which conclusion about the extracted maps applies to a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitizationBranch {
    /// `s̄ = 0`: both maps are Rota-Baxter of weight zero.
    WeightZero,
    /// `s̄ ≠ 0` and `s̄` recovers `x` through `ε`: weight `−1`.
    WeightMinusOne,
    /// Neither hypothesis holds; nothing is claimed.
    Vacuous,
}

/// Selects the branch for a solution `r` and checks its conclusion.
pub fn unitization_branch(
    a: &Algebra,
    eps: &Augmentation,
    r: &Tensor2,
    mu: &Rational,
) -> Result<(UnitizationBranch, CheckReport)> {
    if !check_augmentation(a, eps).passed() {
        return Err(Error::InvalidAugmentation("ε fails the augmentation axioms".into()));
    }
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    if !is_solution(&inst, r) {
        return Err(violated("r does not solve the equation"));
    }
    let sbar = extended_symmetrizer(&inst, r);
    let (branch, weight) = if sbar.is_zero() {
        (UnitizationBranch::WeightZero, Rational::zero())
    } else if sequation_check(a, eps, &sbar).passed() {
        (UnitizationBranch::WeightMinusOne, -Rational::one())
    } else {
        let report = CheckReport::pass("extracted Rota-Baxter operators")
            .with_note("vacuous: s̄ ≠ 0 and s̄ does not recover x through ε");
        return Ok((UnitizationBranch::Vacuous, report));
    };
    let (p, pp) = unitization_rb_extract(a, eps, r)?;
    let mut rp = check_rota_baxter(a, &p.matrix, &weight);
    rp.name = format!("P is Rota-Baxter of weight {}", scalar::format(&weight));
    let mut rpp = check_rota_baxter(a, &pp.matrix, &weight);
    rpp.name = format!("P′ is Rota-Baxter of weight {}", scalar::format(&weight));
    Ok((branch, CheckReport::all("extracted Rota-Baxter operators", vec![rp, rpp])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{left_right_ops, StructureConstants};
    use crate::scalar::int;

    fn a2() -> Algebra {
        let mut sc = StructureConstants::zeros(2);
        sc.set_term(0, 0, 0, int(1));
        sc.set_term(1, 1, 1, int(1));
        Algebra::with_default_names(sc, vec![int(1), int(1)]).unwrap()
    }

    #[test]
    fn a2_first_family_from_its_operator() {
        let a = a2();
        let s = Tensor2::from_ints(&[[1, 0], [0, 1]]);
        let p = LinearMap::primal(Matrix::from_ints(&[[1, 0], [1, 1]]));
        let (r1, r2) = r_from_rb(&a, &s, &p, &int(-1), &int(1)).unwrap();
        assert_eq!(r2, Tensor2::from_ints(&[[1, 1], [0, 1]]));
        assert_eq!(r1, r2.flip());
        let (back, _) = rb_from_r(&a, &s, &r2, &int(-1), &int(1)).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn compatibility_failure_is_named() {
        let a = a2();
        let s = Tensor2::from_ints(&[[1, 0], [0, 1]]);
        let p = LinearMap::primal(Matrix::from_ints(&[[1, 0], [1, 1]]));
        let err = r_from_rb(&a, &s, &p, &int(-1), &int(2)).unwrap_err();
        assert!(matches!(err, Error::PreconditionViolated(m) if m.contains("s♯P*")));
    }

    #[test]
    fn zero_lift_is_rota_baxter() {
        let v = left_right_ops(&a2());
        let report = lift_equivalence(&v, &LinearMap::zero(2, 2), &int(3)).unwrap();
        assert_eq!(report.verdict, Some(true));
    }

    #[test]
    fn extraction_on_r3() {
        let a = a2();
        let eps = Augmentation::new(vec![int(1), int(0)]);
        let r = Tensor2::from_ints(&[[0, 1], [0, 0]]);
        let (p, pp) = unitization_rb_extract(&a, &eps, &r).unwrap();
        assert_eq!(p.matrix, Matrix::from_ints(&[[0, 0], [1, 0]]));
        assert!(pp.matrix.is_zero());
        assert!(intermediate_identity_residual(&a, &eps, &r, &int(1)).unwrap().is_zero());
    }

    #[test]
    fn balanced_space_of_adjoint_a2() {
        // β(x) = xβ(1) = β(1)x, and ℓ(β(u))v = u r(β(v)) forces β(1) central.
        let v = left_right_ops(&a2());
        let basis = balanced_hom_basis(&v);
        assert_eq!(basis.len(), 2);
        for b in &basis {
            assert!(check_balanced_hom(&v, b).unwrap().passed());
        }
    }

    #[test]
    fn sequation_on_phi() {
        let a = a2();
        let eps = Augmentation::new(vec![int(1), int(0)]);
        assert!(!sequation_check(&a, &eps, &Tensor2::from_ints(&[[1, 0], [0, 1]])).passed());
        assert!(!sequation_check(&a, &eps, &Tensor2::zeros(2)).passed());
    }
}
