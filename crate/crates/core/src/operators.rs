//! The operator side: the maps `r♯`, `r^{t♯}`, O-operators with every kind
//! of weight, Rota-Baxter operators and systems, the product `∘` attached
//! to a symmetric invariant tensor, and the equivalence suites linking them
//! to the tensor equation.

use crate::algebra::{check_bimodule, dual_bimodule, left_right_ops, Algebra, Bimodule, StructureConstants};
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{add_vectors, scale_vector, sub_vectors, unit_vector, zero_vector, LinearMap, Matrix, Vector};
use crate::report::{format_vector, CheckReport, PairTable, Witness};
use crate::scalar::{self, Rational};
use crate::tensor::Tensor2;
use crate::ybe::{check_nhacybe, extended_symmetrizer, is_invariant, is_symmetrized_invariant, NhacybeInstance};

/// `r♯: A* → A`, `⟨r♯(a*), b*⟩ = ⟨r, a*⊗b*⟩`.
pub fn sharp(r: &Tensor2) -> LinearMap {
    LinearMap::dual(r.coeff.transpose())
}

/// `r^{t♯}: A* → A`, `⟨r^{t♯}(a*), b*⟩ = ⟨r, b*⊗a*⟩`.
pub fn tsharp(r: &Tensor2) -> LinearMap {
    LinearMap::dual(r.coeff.clone())
}

/// The tensor `r` with `r♯ = p`.
pub fn tensor_from_sharp(p: &Matrix) -> Tensor2 {
    Tensor2::from_matrix(p.transpose())
}

/// The tensor `r` with `r^{t♯} = p`.
pub fn tensor_from_tsharp(p: &Matrix) -> Tensor2 {
    Tensor2::from_matrix(p.clone())
}

/// The third term of an O-operator identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightOp {
    Zero,
    /// `λ α(u ⋆ v)` for a product `⋆` on the module.
    Scalar { lambda: Rational, product: StructureConstants },
    /// `α(u ∘ v)` for an arbitrary bilinear product `∘` on the module.
    Product(StructureConstants),
    /// `α(u r(s(v)))` with `s: V → A`.
    RightTwist(Matrix),
    /// `α(ℓ(s(u)) v)` with `s: V → A`.
    LeftTwist(Matrix),
}

impl WeightOp {
    /// The element of `V` fed to `α` in the weight term, for basis `u`, `v`.
    fn module_term(&self, v: &Bimodule, iu: usize, iv: usize) -> Vector {
        let m = v.space_dim;
        match self {
            WeightOp::Zero => zero_vector(m),
            WeightOp::Scalar { lambda, product } => scale_vector(lambda, product.basis_mul(iu, iv)),
            WeightOp::Product(product) => product.basis_mul(iu, iv).to_vec(),
            WeightOp::RightTwist(s) => v.act_right(&unit_vector(m, iu), &s.column(iv)),
            WeightOp::LeftTwist(s) => v.act_left(&s.column(iu), &unit_vector(m, iv)),
        }
    }

    fn check_shape(&self, v: &Bimodule) -> Result<()> {
        let m = v.space_dim;
        let n = v.algebra.dim();
        match self {
            WeightOp::Zero => Ok(()),
            WeightOp::Scalar { product, .. } | WeightOp::Product(product) => {
                if product.dim() == m {
                    Ok(())
                } else {
                    Err(dim_mismatch("weight product must live on the module"))
                }
            }
            WeightOp::RightTwist(s) | WeightOp::LeftTwist(s) => {
                if s.rows() == n && s.cols() == m {
                    Ok(())
                } else {
                    Err(dim_mismatch("twist map must send the module to the algebra"))
                }
            }
        }
    }
}

/// `α(u)α(v) − α(ℓ(α(u))v) − α(u r(α(v))) − α(weight term)` on basis pairs.
pub fn o_operator_residual(v: &Bimodule, alpha: &LinearMap, w: &WeightOp) -> Result<PairTable> {
    let a = &v.algebra;
    let m = v.space_dim;
    if alpha.domain_dim() != m || alpha.codomain_dim() != a.dim() {
        return Err(dim_mismatch("α must map the module to the algebra"));
    }
    w.check_shape(v)?;
    let images: Vec<Vector> = (0..m).map(|u| alpha.image_of_basis(u)).collect();
    Ok(PairTable::build(m, |iu, iv| {
        let eu = unit_vector(m, iu);
        let ev = unit_vector(m, iv);
        let lhs = a.mul(&images[iu], &images[iv]);
        let mut inner = v.act_left(&images[iu], &ev);
        inner = add_vectors(&inner, &v.act_right(&eu, &images[iv]));
        inner = add_vectors(&inner, &w.module_term(v, iu, iv));
        sub_vectors(&lhs, &alpha.apply(&inner))
    }))
}

pub fn check_o_operator(v: &Bimodule, alpha: &LinearMap, w: &WeightOp) -> Result<CheckReport> {
    Ok(o_operator_residual(v, alpha, w)?.report(
        "O-operator",
        "α(u)α(v) = α(ℓ(α(u))v) + α(u r(α(v))) + α(u∘v)",
    ))
}

/// `P(x)P(y) − P(P(x)y) − P(xP(y)) − λP(xy)` on basis pairs.
pub fn rota_baxter_residual(a: &Algebra, p: &Matrix, lambda: &Rational) -> PairTable {
    assert_eq!((p.rows(), p.cols()), (a.dim(), a.dim()), "P must be an endomorphism");
    let n = a.dim();
    let images: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    PairTable::build(n, |i, j| {
        let lhs = a.mul(&images[i], &images[j]);
        let mut inner = a.mul(&images[i], &a.e(j));
        inner = add_vectors(&inner, &a.mul(&a.e(i), &images[j]));
        inner = add_vectors(&inner, &scale_vector(lambda, a.basis_mul(i, j)));
        sub_vectors(&lhs, &p.apply(&inner))
    })
}

pub fn check_rota_baxter(a: &Algebra, p: &Matrix, lambda: &Rational) -> CheckReport {
    rota_baxter_residual(a, p, lambda).report(
        &format!("Rota-Baxter of weight {}", scalar::format(lambda)),
        "P(x)P(y) = P(P(x)y) + P(xP(y)) + λP(xy)",
    )
}

/// The scalar weight on the adjoint bimodule algebra.
pub fn rota_baxter_weight(a: &Algebra, lambda: &Rational) -> WeightOp {
    WeightOp::Scalar {
        lambda: lambda.clone(),
        product: a.sc.clone(),
    }
}

/// Defects of `P(x)P(y) = P(P(x)y + xS(y))` and `S(x)S(y) = S(P(x)y + xS(y))`.
pub fn rb_system_residual(a: &Algebra, p: &Matrix, s: &Matrix) -> (PairTable, PairTable) {
    let n = a.dim();
    let pi: Vec<Vector> = (0..n).map(|i| p.column(i)).collect();
    let si: Vec<Vector> = (0..n).map(|i| s.column(i)).collect();
    let inner = |i: usize, j: usize| add_vectors(&a.mul(&pi[i], &a.e(j)), &a.mul(&a.e(i), &si[j]));
    let first = PairTable::build(n, |i, j| sub_vectors(&a.mul(&pi[i], &pi[j]), &p.apply(&inner(i, j))));
    let second = PairTable::build(n, |i, j| sub_vectors(&a.mul(&si[i], &si[j]), &s.apply(&inner(i, j))));
    (first, second)
}

pub fn check_rb_system(a: &Algebra, p: &Matrix, s: &Matrix) -> CheckReport {
    let (first, second) = rb_system_residual(a, p, s);
    CheckReport::all(
        "Rota-Baxter system",
        vec![
            first.report("first", "P(x)P(y) = P(P(x)y + xS(y))"),
            second.report("second", "S(x)S(y) = S(P(x)y + xS(y))"),
        ],
    )
}

/// A bimodule together with a product on the module space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleAlgebra {
    pub bimodule: Bimodule,
    pub product: StructureConstants,
}

impl BimoduleAlgebra {
    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.product.mul(u, v)
    }
}

/// `(A, ·, L, R)`.
pub fn adjoint_bimodule_algebra(a: &Algebra) -> BimoduleAlgebra {
    BimoduleAlgebra {
        bimodule: left_right_ops(a),
        product: a.sc.clone(),
    }
}

/// Checks the bimodule axioms, associativity of the module product, and
/// `ℓ(x)(v∘w) = (ℓ(x)v)∘w`, `(v∘w)r(x) = v∘(w r(x))`, `(v r(x))∘w = v∘(ℓ(x)w)`.
pub fn check_bimodule_algebra(b: &BimoduleAlgebra) -> CheckReport {
    let v = &b.bimodule;
    let a = &v.algebra;
    let m = v.space_dim;
    let module = check_bimodule(v);
    let assoc = match b.product.associativity_defect() {
        Some(((i, j, k), lhs, rhs)) => CheckReport::fail(
            "module product associative",
            Witness {
                identity: "(u∘v)∘w = u∘(v∘w)".into(),
                at: format!("(v{}, v{}, v{})", i + 1, j + 1, k + 1),
                lhs: format_vector(&lhs),
                rhs: format_vector(&rhs),
            },
        ),
        None => CheckReport::pass("module product associative"),
    };
    let mut witness = None;
    'outer: for x in 0..a.dim() {
        let ex = a.e(x);
        for i in 0..m {
            let ei = unit_vector(m, i);
            for j in 0..m {
                let ej = unit_vector(m, j);
                let vw = b.product.basis_mul(i, j);
                let cases = [
                    (
                        "ℓ(x)(v∘w) = (ℓ(x)v)∘w",
                        v.act_left(&ex, vw),
                        b.mul(&v.act_left(&ex, &ei), &ej),
                    ),
                    (
                        "(v∘w)r(x) = v∘(w r(x))",
                        v.act_right(vw, &ex),
                        b.mul(&ei, &v.act_right(&ej, &ex)),
                    ),
                    (
                        "(v r(x))∘w = v∘(ℓ(x)w)",
                        b.mul(&v.act_right(&ei, &ex), &ej),
                        b.mul(&ei, &v.act_left(&ex, &ej)),
                    ),
                ];
                for (identity, lhs, rhs) in cases {
                    if lhs != rhs {
                        witness = Some(Witness {
                            identity: identity.into(),
                            at: format!("(x = {}, v{}, v{})", a.label(x), i + 1, j + 1),
                            lhs: format_vector(&lhs),
                            rhs: format_vector(&rhs),
                        });
                        break 'outer;
                    }
                }
            }
        }
    }
    CheckReport::all(
        "bimodule algebra",
        vec![module, assoc, CheckReport::from_witness("compatibility", witness)],
    )
}

/// `(A*, R*, L*)`.
pub fn coadjoint_bimodule(a: &Algebra) -> Bimodule {
    dual_bimodule(&left_right_ops(a))
}

/// `a*∘b* = a* L*(s♯(b*))` on `A*`, without checking hypotheses on `s`.
pub fn circ_product(a: &Algebra, s: &Tensor2) -> StructureConstants {
    let n = a.dim();
    let ssharp = sharp(s).matrix;
    let lts: Vec<Matrix> = (0..n)
        .map(|b| a.left_matrix(&ssharp.column(b)).transpose())
        .collect();
    let mut sc = StructureConstants::zeros(n);
    for i in 0..n {
        for (j, lt) in lts.iter().enumerate() {
            sc.set(i, j, lt.column(i));
        }
    }
    sc
}

/// The bimodule algebra `(A*, ∘, R*, L*)` from a symmetric invariant `s`.
pub fn circ_from_s(a: &Algebra, s: &Tensor2) -> Result<BimoduleAlgebra> {
    if s.dim() != a.dim() {
        return Err(dim_mismatch("tensor and algebra dimensions differ"));
    }
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let inv = is_invariant(a, s);
    if let Some(w) = inv.witness {
        return Err(Error::NotInvariant(format!("{} at {}", w.identity, w.at)));
    }
    Ok(BimoduleAlgebra {
        bimodule: coadjoint_bimodule(a),
        product: circ_product(a, s),
    })
}

/// `⟨s♯(a*), b*⟩ = ⟨b*∘a*, 1⟩`.
pub fn s_from_circ(a: &Algebra, b: &BimoduleAlgebra) -> Tensor2 {
    let n = a.dim();
    let mut s = Tensor2::zeros(n);
    for i in 0..n {
        for j in 0..n {
            s[(i, j)] = crate::linalg::dot(b.product.basis_mul(j, i), &a.unit);
        }
    }
    s
}

/// `⟨a*∘b*, 1⟩ = ⟨b*∘a*, 1⟩`.
pub fn check_ss1(a: &Algebra, b: &BimoduleAlgebra) -> CheckReport {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = crate::linalg::dot(b.product.basis_mul(i, j), &a.unit);
            let rhs = crate::linalg::dot(b.product.basis_mul(j, i), &a.unit);
            if lhs != rhs {
                return CheckReport::fail(
                    "symmetric trace",
                    Witness {
                        identity: "⟨a*∘b*, 1⟩ = ⟨b*∘a*, 1⟩".into(),
                        at: format!("(e{}*, e{}*)", i + 1, j + 1),
                        lhs: scalar::format(&lhs),
                        rhs: scalar::format(&rhs),
                    },
                );
            }
        }
    }
    CheckReport::pass("symmetric trace")
}

/// `⟨s♯(a*)·x, b*⟩ = ⟨b*∘a*, x⟩`.
pub fn check_sss(a: &Algebra, b: &BimoduleAlgebra, s: &Tensor2) -> CheckReport {
    let n = a.dim();
    let ssharp = sharp(s).matrix;
    for ia in 0..n {
        let sa = ssharp.column(ia);
        for x in 0..n {
            let prod = a.mul(&sa, &a.e(x));
            for ib in 0..n {
                let lhs = prod[ib].clone();
                let rhs = b.product.basis_mul(ib, ia)[x].clone();
                if lhs != rhs {
                    return CheckReport::fail(
                        "s compatible with product",
                        Witness {
                            identity: "⟨s♯(a*)·x, b*⟩ = ⟨b*∘a*, x⟩".into(),
                            at: format!("(a* = e{}*, x = {}, b* = e{}*)", ia + 1, a.label(x), ib + 1),
                            lhs: scalar::format(&lhs),
                            rhs: scalar::format(&rhs),
                        },
                    );
                }
            }
        }
    }
    CheckReport::pass("s compatible with product")
}

/// For symmetric `s`: `R*(s♯(a*))b* = a*L*(s♯(b*))` on dual-basis pairs.
pub fn check_dual_invariance(a: &Algebra, s: &Tensor2) -> CheckReport {
    let n = a.dim();
    let ssharp = sharp(s).matrix;
    for i in 0..n {
        let ri = a.right_matrix(&ssharp.column(i)).transpose();
        for j in 0..n {
            let lhs = ri.column(j);
            let rhs = a.left_matrix(&ssharp.column(j)).transpose().column(i);
            if lhs != rhs {
                return CheckReport::fail(
                    "dual invariance",
                    Witness {
                        identity: "R*(s♯(a*))b* = a*L*(s♯(b*))".into(),
                        at: format!("(e{}*, e{}*)", i + 1, j + 1),
                        lhs: format_vector(&lhs),
                        rhs: format_vector(&rhs),
                    },
                );
            }
        }
    }
    CheckReport::pass("dual invariance")
}

/// The two dual-basis identities equivalent to the tensor equation.
fn sharp_identities(inst: &NhacybeInstance, r: &Tensor2) -> (PairTable, PairTable) {
    let a = &inst.algebra;
    let n = a.dim();
    let rs = sharp(r).matrix;
    let rt = tsharp(r).matrix;
    let rs_cols: Vec<Vector> = (0..n).map(|i| rs.column(i)).collect();
    let rt_cols: Vec<Vector> = (0..n).map(|i| rt.column(i)).collect();
    // L*(x) acting on the right of a*, R*(x) acting on the left of b*
    let l_star = |x: &[Rational], ia: usize| a.left_matrix(x).transpose().column(ia);
    let r_star = |x: &[Rational], ib: usize| a.right_matrix(x).transpose().column(ib);
    let mu = &inst.mu;
    let forward = PairTable::build(n, |ia, ib| {
        let t1 = a.mul(&rs_cols[ia], &rs_cols[ib]);
        let t2 = rs.apply(&l_star(&rt_cols[ib], ia));
        let t3 = rs.apply(&r_star(&rs_cols[ia], ib));
        let t4 = scale_vector(&(mu * &a.unit[ib]), &rs_cols[ia]);
        sub_vectors(&sub_vectors(&add_vectors(&t1, &t2), &t3), &t4)
    });
    let transposed = PairTable::build(n, |ia, ib| {
        let t1 = a.mul(&rt_cols[ia], &rt_cols[ib]);
        let t2 = rt.apply(&l_star(&rt_cols[ib], ia));
        let t3 = rt.apply(&r_star(&rs_cols[ia], ib));
        let t4 = scale_vector(&(mu * &a.unit[ia]), &rt_cols[ib]);
        sub_vectors(&add_vectors(&sub_vectors(&t1, &t2), &t3), &t4)
    });
    (forward, transposed)
}

/// Evaluates the five equivalent statements: the equation itself, the two
/// dual-basis identities, and `r♯` / `r^{t♯}` as O-operators on
/// `(A*, R*, L*)` twisted on the right / left by `−s̄♯`.
pub fn pro_iff_suite(inst: &NhacybeInstance, r: &Tensor2) -> Result<CheckReport> {
    let a = &inst.algebra;
    let eq = check_nhacybe(inst, r)?;
    let (forward, transposed) = sharp_identities(inst, r);
    let coadj = coadjoint_bimodule(a);
    let twist = sharp(&extended_symmetrizer(inst, r)).matrix.neg();
    let right = o_operator_residual(&coadj, &sharp(r), &WeightOp::RightTwist(twist.clone()))?;
    let left = o_operator_residual(&coadj, &tsharp(r), &WeightOp::LeftTwist(twist))?;
    Ok(CheckReport::agreement(
        "operator forms of the equation",
        vec![
            eq,
            forward.report(
                "r♯ identity",
                "r♯(a*)r♯(b*) + r♯(a*L*(r^{t♯}(b*))) − r♯(R*(r♯(a*))b*) − μ⟨1,b*⟩r♯(a*) = 0",
            ),
            right.report("r♯ right-twisted O-operator", "twist −s̄♯ on (A*, R*, L*)"),
            transposed.report(
                "r^{t♯} identity",
                "r^{t♯}(a*)r^{t♯}(b*) − r^{t♯}(a*L*(r^{t♯}(b*))) + r^{t♯}(R*(r♯(a*))b*) − μ⟨1,a*⟩r^{t♯}(b*) = 0",
            ),
            left.report("r^{t♯} left-twisted O-operator", "twist −s̄♯ on (A*, R*, L*)"),
        ],
    ))
}

/// For `r` with invariant extended symmetrizer: the equation, and `r♯`,
/// `r^{t♯}` as O-operators of weight zero (when `s̄ = 0`) or of weight −1 on
/// `(A*, ∘, R*, L*)` with `∘` built from `s̄`.
pub fn thm_key_suite(inst: &NhacybeInstance, r: &Tensor2) -> Result<CheckReport> {
    let a = &inst.algebra;
    let sbar = extended_symmetrizer(inst, r);
    let inv = is_symmetrized_invariant(inst, r);
    if let Some(w) = inv.witness {
        return Err(Error::PreconditionViolated(format!(
            "extended symmetrizer is not invariant: {} at {}",
            w.identity, w.at
        )));
    }
    let coadj = coadjoint_bimodule(a);
    let (weight, branch) = if sbar.is_zero() {
        (WeightOp::Zero, "weight 0")
    } else {
        (
            WeightOp::Scalar {
                lambda: scalar::int(-1),
                product: circ_product(a, &sbar),
            },
            "weight -1",
        )
    };
    let eq = check_nhacybe(inst, r)?;
    let rs = check_o_operator(&coadj, &sharp(r), &weight)?;
    let rt = check_o_operator(&coadj, &tsharp(r), &weight)?;
    Ok(CheckReport::agreement(
        "symmetrized invariant operator forms",
        vec![
            eq,
            CheckReport { name: format!("r♯ O-operator ({branch})"), ..rs },
            CheckReport { name: format!("r^{{t♯}} O-operator ({branch})"), ..rt },
        ],
    )
    .with_note(format!("branch: {branch}")))
}

/// Given `(A*, ∘, R*, L*)` and `P: A* → A` with `P + P* = s♯ + μ⟨·,1⟩1`,
/// compares: `P` and `P*` as O-operators (weight 0 if `s = 0`, else −1 on
/// `∘`), and the tensors with `r♯ = P` and `r^{t♯} = P` as symmetrized
/// invariant solutions.
pub fn converse_suite(a: &Algebra, b: &BimoduleAlgebra, p: &Matrix, mu: &Rational) -> Result<CheckReport> {
    let n = a.dim();
    if b.bimodule.space_dim != n || p.rows() != n || p.cols() != n {
        return Err(dim_mismatch("module, map and algebra dimensions must agree"));
    }
    let hyp = check_bimodule_algebra(b);
    if !hyp.passed() {
        return Err(Error::PreconditionViolated("not a bimodule algebra".into()));
    }
    let ss1 = check_ss1(a, b);
    if !ss1.passed() {
        return Err(Error::PreconditionViolated("⟨a*∘b*, 1⟩ = ⟨b*∘a*, 1⟩ fails".into()));
    }
    let s = s_from_circ(a, b);
    if !check_sss(a, b, &s).passed() {
        return Err(Error::PreconditionViolated("⟨s♯(a*)·x, b*⟩ = ⟨b*∘a*, x⟩ fails".into()));
    }
    let u = Matrix::from_columns(&[a.unit.clone()], n)?;
    let rhs = sharp(&s).matrix.add(&u.dot(&u.transpose()).scale(mu));
    if p.add(&p.transpose()) != rhs {
        return Err(Error::PreconditionViolated("P + P* = s♯ + μ⟨·,1⟩1 fails".into()));
    }
    let weight = if s.is_zero() {
        WeightOp::Zero
    } else {
        WeightOp::Scalar {
            lambda: scalar::int(-1),
            product: b.product.clone(),
        }
    };
    let v = &b.bimodule;
    let p_map = LinearMap::dual(p.clone());
    let p_dual = LinearMap::dual(p.transpose());
    let inst = NhacybeInstance::new(a.clone(), mu.clone());
    let solution = |r: Tensor2, name: &str| -> Result<CheckReport> {
        Ok(CheckReport::all(
            name,
            vec![check_nhacybe(&inst, &r)?, is_symmetrized_invariant(&inst, &r)],
        ))
    };
    Ok(CheckReport::agreement(
        "converse",
        vec![
            CheckReport { name: "P O-operator".into(), ..check_o_operator(v, &p_map, &weight)? },
            CheckReport { name: "P* O-operator".into(), ..check_o_operator(v, &p_dual, &weight)? },
            solution(tensor_from_sharp(p), "r with r♯ = P")?,
            solution(tensor_from_tsharp(p), "r with r^{t♯} = P")?,
        ],
    ))
}

/// Whether `r♯` is invertible.
pub fn is_nondegenerate(r: &Tensor2) -> bool {
    r.coeff.rank() == r.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use num_traits::Zero;

    fn a2() -> Algebra {
        let mut sc = StructureConstants::zeros(2);
        sc.set_term(0, 0, 0, int(1));
        sc.set_term(1, 1, 1, int(1));
        Algebra::with_default_names(sc, vec![int(1), int(1)]).unwrap()
    }

    #[test]
    fn sharp_of_pure_tensor() {
        let r = Tensor2::basis(2, 0, 1);
        let m = sharp(&r);
        assert_eq!(m.apply(&[int(1), int(0)]), vec![int(0), int(1)]);
        assert_eq!(m.apply(&[int(0), int(1)]), vec![int(0), int(0)]);
        assert_eq!(sharp(&r.flip()).matrix, tsharp(&r).matrix);
        assert_eq!(tensor_from_sharp(&m.matrix), r);
    }

    #[test]
    fn circ_in_a2() {
        let a = a2();
        let b = circ_from_s(&a, &Tensor2::basis(2, 0, 0)).unwrap();
        assert_eq!(b.product.basis_mul(0, 0), &[int(1), int(0)]);
        for (i, j) in [(0, 1), (1, 0), (1, 1)] {
            assert!(b.product.basis_mul(i, j).iter().all(Zero::is_zero));
        }
        assert!(check_bimodule_algebra(&b).passed());
        assert_eq!(s_from_circ(&a, &b), Tensor2::basis(2, 0, 0));
        assert_eq!(
            circ_from_s(&a, &Tensor2::basis(2, 0, 1)),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn rota_baxter_basics() {
        let a = a2();
        let q3 = Matrix::from_ints(&[[0, 0], [1, 0]]);
        assert!(rota_baxter_residual(&a, &q3, &int(1)).is_zero());
        assert!(rota_baxter_residual(&a, &Matrix::zeros(2, 2), &int(5)).is_zero());
        let lambda = int(3);
        let p = Matrix::identity(2).scale(&-lambda.clone());
        assert!(rota_baxter_residual(&a, &p, &lambda).is_zero());
        assert!(!rota_baxter_residual(&a, &Matrix::identity(2), &int(0)).is_zero());
    }

    #[test]
    fn rota_baxter_matches_adjoint_o_operator() {
        let a = a2();
        let q = Matrix::from_ints(&[[1, 0], [1, 1]]);
        for l in [-1, 0, 1] {
            let lambda = int(l);
            let rb = rota_baxter_residual(&a, &q, &lambda);
            let op = o_operator_residual(
                &left_right_ops(&a),
                &LinearMap::primal(q.clone()),
                &rota_baxter_weight(&a, &lambda),
            )
            .unwrap();
            assert_eq!(rb, op);
        }
    }

    #[test]
    fn adjoint_is_bimodule_algebra() {
        assert!(check_bimodule_algebra(&adjoint_bimodule_algebra(&a2())).passed());
        let mut bad = adjoint_bimodule_algebra(&a2());
        bad.product.set_term(0, 1, 0, int(1));
        assert!(!check_bimodule_algebra(&bad).passed());
    }

    #[test]
    fn pro_iff_on_small_cases() {
        let inst = NhacybeInstance::new(a2(), int(1));
        let r3 = Tensor2::basis(2, 0, 1);
        let report = pro_iff_suite(&inst, &r3).unwrap();
        assert!(report.passed());
        assert_eq!(report.verdict, Some(true));
        let bad = pro_iff_suite(&inst, &Tensor2::basis(2, 0, 0)).unwrap();
        assert!(bad.passed());
        assert_eq!(bad.verdict, Some(false));
        assert_eq!(pro_iff_suite(&inst, &Tensor2::zeros(2)).unwrap().verdict, Some(true));
    }
}
