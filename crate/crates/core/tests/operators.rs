use nhybe_core::algebra::{left_right_ops, matrix_algebra, Algebra, StructureConstants};
use nhybe_core::catalog::{catalog_algebra, catalog_solutions};
use nhybe_core::dendriform::{succ_prec_bimodule, Dendriform};
use nhybe_core::frobenius::{p_r, trace_form};
use nhybe_core::linalg::{invert, LinearMap, Matrix};
use nhybe_core::operators::{
    adjoint_bimodule_algebra, check_bimodule_algebra, check_o_operator, check_rota_baxter, circ_from_s,
    circ_product, coadjoint_bimodule, converse_suite, is_nondegenerate, o_operator_residual, pro_iff_suite,
    rb_system_residual, rota_baxter_residual, rota_baxter_weight, s_from_circ, sharp, check_ss1, check_sss,
    thm_key_suite, tsharp, BimoduleAlgebra, WeightOp,
};
use nhybe_core::random::{sample_invariant_tensors, sample_tensors, Sampler};
use nhybe_core::scalar::{frac, int, Rational};
use nhybe_core::tensor::Tensor2;
use nhybe_core::ybe::{
    extended_symmetrizer, grid_enumerate, invariant_symmetric_basis, is_solution, is_symmetrized_invariant,
    NhacybeInstance,
};
use nhybe_core::Error;

const NAMES: [&str; 8] = ["A1", "A2", "B1", "B2", "B3", "B4", "B5", "M2"];

fn alg(name: &str) -> Algebra {
    catalog_algebra(name).unwrap().algebra
}

fn named_solution(name: &str, label: &str, mu: &Rational) -> Tensor2 {
    let entry = catalog_algebra(name).unwrap();
    entry.solutions.iter().find(|s| s.name == label).unwrap().at(mu)
}

fn all_pass(report: &nhybe_core::report::CheckReport) -> bool {
    report.passed() && report.verdict == Some(true)
}

fn all_fail(report: &nhybe_core::report::CheckReport) -> bool {
    report.passed() && report.verdict == Some(false)
}

#[test]
fn sharp_examples() {
    let r = Tensor2::basis(2, 0, 1);
    let s = sharp(&r);
    assert_eq!(s.image_of_basis(0), vec![int(0), int(1)]);
    assert_eq!(s.image_of_basis(1), vec![int(0), int(0)]);
    let mut g = Sampler::new(30);
    for _ in 0..30 {
        let r = g.tensor(3);
        assert_eq!(sharp(&r.flip()), tsharp(&r));
        assert_eq!(is_nondegenerate(&r), invert(&sharp(&r).matrix).is_ok());
    }
}

#[test]
fn circ_examples() {
    let a2 = alg("A2");
    let zero = circ_from_s(&a2, &Tensor2::zeros(2)).unwrap();
    assert_eq!(zero.product, StructureConstants::zeros(2));

    let b = circ_from_s(&a2, &Tensor2::basis(2, 0, 0)).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            let expected = if (i, j) == (0, 0) { vec![int(1), int(0)] } else { vec![int(0), int(0)] };
            assert_eq!(b.product.basis_mul(i, j), expected.as_slice());
        }
    }
    assert!(check_bimodule_algebra(&b).passed());

    assert!(matches!(circ_from_s(&a2, &Tensor2::basis(2, 0, 1)), Err(Error::NotSymmetric)));
    assert!(matches!(
        circ_from_s(&a2, &Tensor2::from_ints(&[[1, 1], [1, 1]])),
        Err(Error::NotInvariant(_))
    ));
}

#[test]
fn circ_round_trip_on_invariant_bases() {
    let mut g = Sampler::new(31);
    for name in NAMES {
        let a = alg(name);
        let basis = invariant_symmetric_basis(&a);
        for _ in 0..5 {
            let mut s = Tensor2::zeros(a.dim());
            for b in &basis {
                s = s.add(&b.scale(&g.coefficient()));
            }
            let b = circ_from_s(&a, &s).unwrap();
            assert!(check_bimodule_algebra(&b).passed(), "{name}");
            assert_eq!(s_from_circ(&a, &b), s, "{name}");
            assert!(check_ss1(&a, &b).passed(), "{name}");
            assert!(check_sss(&a, &b, &s).passed(), "{name}");
        }
    }
}

#[test]
fn bimodule_algebra_examples() {
    for name in NAMES {
        assert!(check_bimodule_algebra(&adjoint_bimodule_algebra(&alg(name))).passed(), "{name}");
    }
    let mut b = adjoint_bimodule_algebra(&alg("A2"));
    b.product.set_term(0, 1, 0, int(1));
    assert!(!check_bimodule_algebra(&b).passed());
}

#[test]
fn o_operator_examples() {
    let a2 = alg("A2");
    let adj = left_right_ops(&a2);
    let zero = LinearMap::zero(2, 2);
    for w in [WeightOp::Zero, rota_baxter_weight(&a2, &int(3)), WeightOp::RightTwist(Matrix::identity(2))] {
        assert!(o_operator_residual(&adj, &zero, &w).unwrap().is_zero());
    }

    let mut prec = StructureConstants::zeros(1);
    prec.set_term(0, 0, 0, int(1));
    let d = Dendriform::new(prec, StructureConstants::zeros(1)).unwrap();
    let v = succ_prec_bimodule(&d).unwrap();
    assert!(check_o_operator(&v, &LinearMap::identity(1), &WeightOp::Zero).unwrap().passed());

    let inst = NhacybeInstance::new(a2.clone(), int(1));
    let r3 = Tensor2::basis(2, 0, 1);
    let twist = sharp(&extended_symmetrizer(&inst, &r3)).matrix.neg();
    let coadj = coadjoint_bimodule(&a2);
    assert!(o_operator_residual(&coadj, &sharp(&r3), &WeightOp::RightTwist(twist)).unwrap().is_zero());

    let bad = LinearMap::zero(3, 2);
    assert!(matches!(o_operator_residual(&adj, &bad, &WeightOp::Zero), Err(Error::DimensionMismatch(_))));
    let bad_twist = WeightOp::LeftTwist(Matrix::zeros(3, 2));
    assert!(matches!(o_operator_residual(&adj, &zero, &bad_twist), Err(Error::DimensionMismatch(_))));
}

#[test]
fn rota_baxter_examples() {
    let a2 = alg("A2");
    let q3 = Matrix::from_ints(&[[0, 0], [1, 0]]);
    assert!(rota_baxter_residual(&a2, &q3, &int(1)).is_zero());
    let mut g = Sampler::new(32);
    for name in NAMES {
        let a = alg(name);
        let n = a.dim();
        for _ in 0..3 {
            let lambda = g.coefficient();
            assert!(rota_baxter_residual(&a, &Matrix::zeros(n, n), &lambda).is_zero());
            assert!(rota_baxter_residual(&a, &Matrix::identity(n).scale(&-lambda.clone()), &lambda).is_zero());
        }
    }
}

#[test]
fn rota_baxter_is_the_scalar_weight_o_operator() {
    let mut g = Sampler::new(33);
    for name in NAMES {
        let a = alg(name);
        let n = a.dim();
        let adj = left_right_ops(&a);
        for k in 0..30 {
            let lambda = if k % 3 == 0 { int(0) } else { g.coefficient() };
            let p = match k % 5 {
                0 => Matrix::identity(n).scale(&-lambda.clone()),
                1 => Matrix::zeros(n, n),
                _ => g.matrix(n, n),
            };
            let rb = check_rota_baxter(&a, &p, &lambda).passed();
            let o = check_o_operator(&adj, &LinearMap::primal(p), &rota_baxter_weight(&a, &lambda)).unwrap();
            assert_eq!(rb, o.passed(), "{name}");
        }
    }
}

fn skew_aybe_solutions_m2() -> Vec<Tensor2> {
    let inst = NhacybeInstance::new(matrix_algebra(2), int(0));
    let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut out = Vec::new();
    for code in 0..3i64.pow(6) {
        let mut r = Tensor2::zeros(4);
        let mut c = code;
        for &(i, j) in &pairs {
            let x = int(c % 3 - 1);
            c /= 3;
            r[(i, j)] = x.clone();
            r[(j, i)] = -x;
        }
        if !r.is_zero() && is_solution(&inst, &r) {
            out.push(r);
        }
    }
    out
}

#[test]
fn rota_baxter_system_examples() {
    let a2 = alg("A2");
    let z = Matrix::zeros(2, 2);
    let (x, y) = rb_system_residual(&a2, &z, &z);
    assert!(x.is_zero() && y.is_zero());
    let m2 = matrix_algebra(2);
    let l = m2.left_matrix(&m2.e(1));
    assert!(rota_baxter_residual(&m2, &l, &int(0)).is_zero());
    let (x, y) = rb_system_residual(&m2, &l, &l);
    assert!(x.is_zero() && y.is_zero());

    let (_, f) = trace_form(2);
    let solutions = skew_aybe_solutions_m2();
    assert!(!solutions.is_empty());
    for r in solutions {
        let (p, pt) = p_r(&f, &r).unwrap();
        let (x, y) = rb_system_residual(&f.algebra, &p.matrix, &pt.matrix.neg());
        assert!(x.is_zero() && y.is_zero());
    }
}

#[test]
fn pro_iff_examples() {
    let mu = int(1);
    let inst = NhacybeInstance::new(alg("A2"), mu.clone());
    let r1 = named_solution("A2", "r1", &mu);
    let report = pro_iff_suite(&inst, &r1).unwrap();
    assert!(all_pass(&report));
    assert_eq!(report.verdict_vector().len(), 5);
    assert!(all_fail(&pro_iff_suite(&inst, &Tensor2::basis(2, 0, 0)).unwrap()));
    assert!(all_pass(&pro_iff_suite(&inst, &Tensor2::zeros(2)).unwrap()));
}

#[test]
fn pro_iff_verdicts_are_constant() {
    for name in NAMES {
        for mu in [int(0), int(1), int(-1), int(2), frac(1, 2)] {
            let inst = NhacybeInstance::new(alg(name), mu.clone());
            let pool = catalog_solutions(name, &mu).unwrap_or_default();
            for r in sample_tensors(34, &pool, inst.dim(), 40) {
                let report = pro_iff_suite(&inst, &r).unwrap();
                assert!(report.passed(), "{name} {:?}", report.verdict_vector());
            }
        }
    }
}

#[test]
fn thm_key_examples() {
    let mu = int(1);
    let inst = NhacybeInstance::new(alg("A2"), mu.clone());
    let r1 = named_solution("A2", "r1", &mu);
    let report = thm_key_suite(&inst, &r1).unwrap();
    assert!(all_pass(&report));
    assert!(report.notes.iter().any(|n| n.contains("weight -1")));

    let bumped = r1.add(&Tensor2::basis(2, 0, 0));
    assert!(is_symmetrized_invariant(&inst, &bumped).passed());
    assert!(all_fail(&thm_key_suite(&inst, &bumped).unwrap()));

    let zero = NhacybeInstance::new(matrix_algebra(2), int(0));
    for r in skew_aybe_solutions_m2().into_iter().take(5) {
        let report = thm_key_suite(&zero, &r).unwrap();
        assert!(all_pass(&report));
        assert!(report.notes.iter().any(|n| n.contains("weight 0")));
    }

    let u = inst.algebra.unit.clone();
    let not_inv = Tensor2::outer(&u, &u);
    assert!(matches!(thm_key_suite(&inst, &not_inv), Err(Error::PreconditionViolated(_))));
}

#[test]
fn thm_key_verdicts_agree_on_invariant_samples() {
    for name in NAMES {
        for mu in [int(0), int(1), frac(-2, 3)] {
            let inst = NhacybeInstance::new(alg(name), mu.clone());
            let values = [int(0), if mu == int(0) { int(1) } else { mu.clone() }];
            let pool: Vec<Tensor2> = if inst.dim() <= 3 { grid_enumerate(&inst, &values).unwrap() } else { Vec::new() }
                .into_iter()
                .filter(|r| is_symmetrized_invariant(&inst, r).passed())
                .collect();
            for r in sample_invariant_tensors(35, &inst, &pool, 40) {
                assert!(thm_key_suite(&inst, &r).unwrap().passed(), "{name}");
            }
        }
    }
}

#[test]
fn converse_examples() {
    let a2 = alg("A2");
    let mu = int(1);
    let inst = NhacybeInstance::new(a2.clone(), mu.clone());
    let r1 = named_solution("A2", "r1", &mu);
    let b = circ_from_s(&a2, &extended_symmetrizer(&inst, &r1)).unwrap();
    assert!(all_pass(&converse_suite(&a2, &b, &sharp(&r1).matrix, &mu).unwrap()));

    let zero = circ_from_s(&a2, &Tensor2::zeros(2)).unwrap();
    assert!(all_pass(&converse_suite(&a2, &zero, &Matrix::zeros(2, 2), &int(0)).unwrap()));

    let violated = converse_suite(&a2, &zero, &Matrix::identity(2), &int(0));
    assert!(matches!(violated, Err(Error::PreconditionViolated(m)) if m.contains("P + P*")));
}

#[test]
fn converse_on_catalog_solutions() {
    for name in ["A2", "B1", "B3"] {
        for mu in [int(1), frac(-3, 5)] {
            let a = alg(name);
            let inst = NhacybeInstance::new(a.clone(), mu.clone());
            for r in catalog_solutions(name, &mu).unwrap() {
                let s = extended_symmetrizer(&inst, &r);
                let b = BimoduleAlgebra {
                    bimodule: coadjoint_bimodule(&a),
                    product: circ_product(&a, &s),
                };
                assert!(all_pass(&converse_suite(&a, &b, &sharp(&r).matrix, &mu).unwrap()), "{name}");
            }
        }
    }
}
