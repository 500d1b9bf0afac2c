use nhybe_core::algebra::{matrix_algebra, Algebra};
use nhybe_core::catalog::{catalog_algebra, catalog_solutions};
use nhybe_core::operators::check_dual_invariance;
use nhybe_core::random::{sample_invariant_tensors, sample_tensors, Sampler};
use nhybe_core::scalar::{frac, int, Rational};
use nhybe_core::tensor::{Tensor2, Tensor3};
use nhybe_core::ybe::{
    aybp_residual, check_aybp, embed, extended_symmetrizer, grid_enumerate, grid_enumerate_with_budget,
    invariant_symmetric_basis, is_invariant, is_solution, is_symmetrized_invariant, nhacybe_residual,
    nhacybe_residual_dense, opposite_residual, triple_mul, unit_tensor, NhacybeInstance, Slots,
};
use nhybe_core::Error;

const NAMES: [&str; 8] = ["A1", "A2", "B1", "B2", "B3", "B4", "B5", "M2"];

fn alg(name: &str) -> Algebra {
    catalog_algebra(name).unwrap().algebra
}

fn inst(name: &str, mu: Rational) -> NhacybeInstance {
    NhacybeInstance::new(alg(name), mu)
}

fn v(x: &[i64]) -> Vec<Rational> {
    x.iter().map(|&c| int(c)).collect()
}

#[test]
fn embeddings_in_a2() {
    let a2 = alg("A2");
    let r = Tensor2::basis(2, 0, 1);
    let (e1, e2, one) = (v(&[1, 0]), v(&[0, 1]), v(&[1, 1]));
    assert_eq!(embed(&r, Slots::S12, &a2).unwrap(), Tensor3::outer(&e1, &e2, &one));
    assert_eq!(embed(&r, Slots::S13, &a2).unwrap(), Tensor3::outer(&e1, &one, &e2));
    for slots in [Slots::S12, Slots::S13, Slots::S23] {
        assert!(embed(&Tensor2::zeros(2), slots, &a2).unwrap().is_zero());
    }
    assert!(matches!(embed(&Tensor2::zeros(3), Slots::S12, &a2), Err(Error::DimensionMismatch(_))));
}

#[test]
fn triple_products() {
    let a2 = alg("A2");
    let one = v(&[1, 1]);
    let mut s = Sampler::new(4);
    for _ in 0..5 {
        let t = Tensor3::outer(&s.vector(2), &s.vector(2), &s.vector(2));
        assert_eq!(triple_mul(&Tensor3::outer(&one, &one, &one), &t, &a2).unwrap(), t);
    }
    let (e1, e2) = (v(&[1, 0]), v(&[0, 1]));
    let p = triple_mul(&Tensor3::outer(&e1, &e1, &e1), &Tensor3::outer(&e2, &e2, &e2), &a2).unwrap();
    assert!(p.is_zero());

    let m2 = matrix_algebra(2);
    let u = m2.unit.clone();
    let lhs = triple_mul(&Tensor3::outer(&m2.e(1), &u, &u), &Tensor3::outer(&m2.e(2), &u, &u), &m2).unwrap();
    assert_eq!(lhs, Tensor3::outer(&m2.e(0), &u, &u));
}

#[test]
fn residual_examples() {
    assert!(nhacybe_residual(&inst("A2", int(1)), &Tensor2::basis(2, 0, 1)).unwrap().is_zero());
    for name in NAMES {
        for mu in [int(0), int(1), frac(-3, 5)] {
            let i = inst(name, mu.clone());
            let n = i.dim();
            assert!(is_solution(&i, &Tensor2::zeros(n)), "{name}");
            assert!(is_solution(&i, &unit_tensor(&i.algebra).scale(&mu)), "{name}");
        }
    }
    assert!(!is_solution(&inst("A2", int(1)), &Tensor2::basis(2, 0, 0).scale(&int(2))));
}

#[test]
fn sparse_and_dense_residuals_agree() {
    for name in NAMES {
        let i = inst(name, int(2));
        for r in sample_tensors(9, &[], i.dim(), 20) {
            assert_eq!(nhacybe_residual(&i, &r).unwrap(), nhacybe_residual_dense(&i, &r).unwrap(), "{name}");
        }
    }
}

#[test]
fn opposite_examples() {
    let i = inst("A2", int(1));
    assert!(opposite_residual(&i, &Tensor2::basis(2, 1, 0)).unwrap().is_zero());
    assert!(opposite_residual(&i, &Tensor2::zeros(2)).unwrap().is_zero());
    for name in ["A2", "B1", "B2"] {
        for mu in [int(1), int(-2), frac(1, 2)] {
            let i = inst(name, mu.clone());
            for r in catalog_solutions(name, &mu).unwrap() {
                assert!(is_solution(&i, &r), "{name}");
                assert!(opposite_residual(&i, &r).unwrap().is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn opposite_of_flip_matches_the_equation() {
    for name in NAMES {
        for mu in [int(0), int(1)] {
            let i = inst(name, mu.clone());
            let values = [int(0), if mu == int(0) { int(1) } else { mu.clone() }];
            let pool = if i.dim() <= 3 { grid_enumerate(&i, &values).unwrap() } else { Vec::new() };
            for r in sample_tensors(21, &pool, i.dim(), 200) {
                assert_eq!(is_solution(&i, &r), opposite_residual(&i, &r.flip()).unwrap().is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn symmetrizer_examples() {
    let mu = frac(3, 7);
    let i = inst("A2", mu.clone());
    let r1 = Tensor2::from_ints(&[[1, 1], [0, 1]]).scale(&mu);
    assert_eq!(extended_symmetrizer(&i, &r1), Tensor2::from_ints(&[[1, 0], [0, 1]]).scale(&mu));
    let zero = inst("B1", int(0));
    let skew = Sampler::new(2).skew_tensor(3);
    assert!(extended_symmetrizer(&zero, &skew).is_zero());
    let one = inst("A2", int(1));
    let u = unit_tensor(&one.algebra);
    assert_eq!(extended_symmetrizer(&one, &u), u);
}

#[test]
fn symmetrizer_is_always_symmetric() {
    let mut s = Sampler::new(5);
    for name in NAMES {
        let i = inst(name, s.coefficient());
        for _ in 0..20 {
            assert!(extended_symmetrizer(&i, &s.tensor(i.dim())).is_symmetric());
        }
    }
}

#[test]
fn invariance_examples() {
    let a2 = alg("A2");
    assert!(is_invariant(&a2, &Tensor2::basis(2, 0, 0)).passed());
    for name in NAMES {
        let a = alg(name);
        assert!(is_invariant(&a, &Tensor2::zeros(a.dim())).passed());
        if a.dim() >= 2 {
            assert!(!is_invariant(&a, &unit_tensor(&a)).passed(), "{name}");
        }
    }
}

#[test]
fn invariant_bases() {
    let dims = [("A2", 2), ("B4", 0), ("B1", 3)];
    for (name, d) in dims {
        let a = alg(name);
        let basis = invariant_symmetric_basis(&a);
        assert_eq!(basis.len(), d, "{name}");
        for b in &basis {
            assert!(b.is_symmetric());
            assert!(is_invariant(&a, b).passed());
        }
    }
    for name in NAMES {
        let a = alg(name);
        for b in invariant_symmetric_basis(&a) {
            assert!(b.is_symmetric() && is_invariant(&a, &b).passed(), "{name}");
        }
    }
}

#[test]
fn symmetrized_invariance_examples() {
    for mu in [int(1), frac(-1, 3)] {
        let i = inst("A2", mu.clone());
        let r1 = Tensor2::from_ints(&[[1, 1], [0, 1]]).scale(&mu);
        assert!(is_symmetrized_invariant(&i, &r1).passed());
        for name in NAMES {
            let i = inst(name, mu.clone());
            if i.dim() >= 2 {
                let u = unit_tensor(&i.algebra).scale(&mu);
                assert!(!is_symmetrized_invariant(&i, &u).passed(), "{name}");
            }
        }
    }
    let zero = inst("M2", int(0));
    assert!(is_symmetrized_invariant(&zero, &Sampler::new(8).skew_tensor(4)).passed());
}

#[test]
fn invariance_matches_its_dual_form() {
    let mut s = Sampler::new(6);
    for name in NAMES {
        let a = alg(name);
        let n = a.dim();
        let basis = invariant_symmetric_basis(&a);
        for k in 0..40 {
            let mut t = Tensor2::zeros(n);
            if k % 2 == 0 {
                for b in &basis {
                    t = t.add(&b.scale(&s.coefficient()));
                }
            }
            if k % 4 != 0 {
                let x = s.tensor(n);
                t = t.add(&x).add(&x.flip());
            }
            assert_eq!(is_invariant(&a, &t).passed(), check_dual_invariance(&a, &t).passed(), "{name}");
        }
    }
}

#[test]
fn flip_equivalence_for_invariant_symmetrizers() {
    for name in NAMES {
        for mu in [int(1), int(-1)] {
            let i = inst(name, mu.clone());
            let pool: Vec<Tensor2> = catalog_solutions(name, &mu)
                .unwrap_or_default()
                .into_iter()
                .filter(|r| is_symmetrized_invariant(&i, r).passed())
                .collect();
            for r in sample_invariant_tensors(3, &i, &pool, 100) {
                assert!(is_symmetrized_invariant(&i, &r).passed());
                assert_eq!(is_solution(&i, &r), opposite_residual(&i, &r).unwrap().is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn yang_baxter_pairs() {
    let (first, second) = aybp_residual(&alg("A2"), &Tensor2::zeros(2), &Tensor2::zeros(2)).unwrap();
    assert!(first.is_zero() && second.is_zero());

    for name in ["A1", "A2", "B1"] {
        let a = alg(name);
        let i = NhacybeInstance::new(a.clone(), int(1));
        let one = unit_tensor(&a);
        let pool = grid_enumerate(&i, &[int(0), int(1)]).unwrap();
        for r in sample_tensors(12, &pool, a.dim(), 100) {
            let pair = check_aybp(&a, &r, &r.sub(&one)).unwrap().passed();
            assert_eq!(pair, is_solution(&i, &r), "{name}");
        }
    }

    let mut s = Sampler::new(13);
    for name in ["A2", "B1", "M2"] {
        let a = alg(name);
        for mu in [int(1), int(-1), int(2)] {
            let i = NhacybeInstance::new(a.clone(), mu.clone());
            for _ in 0..50 {
                let r = s.skew_tensor(a.dim()).add(&unit_tensor(&a).scale(&(&mu / int(2))));
                let pair = check_aybp(&a, &r, &r.flip().scale(&int(-1))).unwrap().passed();
                assert_eq!(pair, is_solution(&i, &r), "{name}");
            }
        }
    }
}

fn coefficients(r: &Tensor2) -> Vec<Rational> {
    let n = r.dim();
    (0..n * n).map(|p| r[(p / n, p % n)].clone()).collect()
}

#[test]
fn grid_examples() {
    let i = inst("A2", int(1));
    let all = grid_enumerate(&i, &[int(0), int(1)]).unwrap();
    assert_eq!(all.len(), 10);
    assert!(all[0].is_zero());
    assert!(all.contains(&unit_tensor(&i.algebra)));
    let keys: Vec<_> = all.iter().map(coefficients).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for r in catalog_solutions("A2", &int(1)).unwrap() {
        assert!(all.contains(&r));
    }

    let b3 = grid_enumerate(&inst("B3", int(1)), &[int(0), int(1)]).unwrap();
    let nonzero: Vec<_> = b3.into_iter().filter(|r| !r.is_zero()).collect();
    assert_eq!(nonzero, vec![Tensor2::basis(3, 0, 0)]);

    let b1 = grid_enumerate(&inst("B1", int(1)), &[int(0), int(1)]).unwrap();
    for r in catalog_solutions("B1", &int(1)).unwrap() {
        assert!(b1.contains(&r));
    }
}

#[test]
fn grid_is_deterministic_and_budgeted() {
    let i = inst("B1", frac(-3, 5));
    let values = [int(0), frac(-3, 5)];
    assert_eq!(grid_enumerate(&i, &values).unwrap(), grid_enumerate(&i, &values).unwrap());
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let parallel = pool.install(|| grid_enumerate(&i, &values).unwrap());
    assert_eq!(parallel, grid_enumerate(&i, &values).unwrap());
    assert!(matches!(
        grid_enumerate_with_budget(&i, &values, 100),
        Err(Error::BudgetExceeded { candidates: 512, budget: 100 })
    ));
}
