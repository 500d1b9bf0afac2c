//! The tensor side: slot embeddings, the nonhomogeneous associative
//! Yang-Baxter equation and its opposite, extended symmetrizers, invariance,
//! Yang-Baxter pairs, and exhaustive grid enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{kernel_basis, Matrix};
use crate::report::{CheckReport, Witness};
use crate::scalar::{self, Rational};
use crate::tensor::{Tensor2, Tensor3};

/// Default cap on the number of grid candidates.
pub const DEFAULT_BUDGET: u128 = 1 << 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NhacybeInstance {
    pub algebra: Algebra,
    pub mu: Rational,
}

impl NhacybeInstance {
    pub fn new(algebra: Algebra, mu: Rational) -> Self {
        NhacybeInstance { algebra, mu }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Which pair of tensor factors a two-tensor occupies inside `A⊗A⊗A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slots {
    S12,
    S13,
    S23,
}

impl Slots {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "12" => Ok(Slots::S12),
            "13" => Ok(Slots::S13),
            "23" => Ok(Slots::S23),
            _ => Err(Error::Parse(format!("unknown slot pair `{text}`"))),
        }
    }
}

fn check_dim(a: &Algebra, r: &Tensor2) -> Result<()> {
    if r.dim() != a.dim() {
        return Err(dim_mismatch(format!(
            "tensor of dimension {} in an algebra of dimension {}",
            r.dim(),
            a.dim()
        )));
    }
    Ok(())
}

pub fn unit_tensor(a: &Algebra) -> Tensor2 {
    Tensor2::outer(&a.unit, &a.unit)
}

pub fn embed(r: &Tensor2, slots: Slots, a: &Algebra) -> Result<Tensor3> {
    check_dim(a, r)?;
    let n = a.dim();
    let one = &a.unit;
    let mut out = Tensor3::zeros(n);
    for (p, q, c) in r.terms() {
        for (k, u) in one.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
            let idx = match slots {
                Slots::S12 => (p, q, k),
                Slots::S13 => (p, k, q),
                Slots::S23 => (k, p, q),
            };
            out[idx] += &c * u;
        }
    }
    Ok(out)
}

/// Factorwise product in `A⊗A⊗A`.
pub fn triple_mul(x: &Tensor3, y: &Tensor3, a: &Algebra) -> Result<Tensor3> {
    let n = a.dim();
    if x.dim() != n || y.dim() != n {
        return Err(dim_mismatch("three-tensor dimension"));
    }
    let mut out = Tensor3::zeros(n);
    let yt = y.terms();
    for ((i, j, k), c) in x.terms() {
        for ((i2, j2, k2), c2) in &yt {
            let coeff = &c * c2;
            add_outer(
                &mut out,
                &coeff,
                a.basis_mul(i, *i2),
                a.basis_mul(j, *j2),
                a.basis_mul(k, *k2),
            );
        }
    }
    Ok(out)
}

fn add_outer(t: &mut Tensor3, c: &Rational, x: &[Rational], y: &[Rational], z: &[Rational]) {
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        let ca = c * a;
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let cab = &ca * b;
            for (k, d) in z.iter().enumerate().filter(|(_, d)| !d.is_zero()) {
                t[(i, j, k)] += &cab * d;
            }
        }
    }
}

/// A factor of an embedded pure tensor: a basis vector or the unit.
#[derive(Clone, Copy)]
enum Factor {
    Basis(usize),
    One,
}

/// Precomputed products of basis vectors with the unit.
struct UnitProducts {
    left: Vec<Vec<Rational>>,
    right: Vec<Vec<Rational>>,
    both: Vec<Rational>,
}

impl UnitProducts {
    fn new(a: &Algebra) -> Self {
        let n = a.dim();
        UnitProducts {
            left: (0..n).map(|i| a.mul(&a.unit, &a.e(i))).collect(),
            right: (0..n).map(|i| a.mul(&a.e(i), &a.unit)).collect(),
            both: a.mul(&a.unit, &a.unit),
        }
    }

    fn product<'a>(&'a self, a: &'a Algebra, x: Factor, y: Factor) -> &'a [Rational] {
        match (x, y) {
            (Factor::Basis(i), Factor::Basis(j)) => a.basis_mul(i, j),
            (Factor::Basis(i), Factor::One) => &self.right[i],
            (Factor::One, Factor::Basis(j)) => &self.left[j],
            (Factor::One, Factor::One) => &self.both,
        }
    }
}

fn factors(slots: Slots, p: usize, q: usize) -> [Factor; 3] {
    match slots {
        Slots::S12 => [Factor::Basis(p), Factor::Basis(q), Factor::One],
        Slots::S13 => [Factor::Basis(p), Factor::One, Factor::Basis(q)],
        Slots::S23 => [Factor::One, Factor::Basis(p), Factor::Basis(q)],
    }
}

/// `x_{ab}·y_{cd}` in `A⊗A⊗A`, expanded term by term without forming the
/// dense embeddings.
pub fn slot_product(a: &Algebra, x: &Tensor2, sx: Slots, y: &Tensor2, sy: Slots) -> Tensor3 {
    let units = UnitProducts::new(a);
    let mut out = Tensor3::zeros(a.dim());
    slot_product_into(a, &units, &mut out, &Rational::from_integer(1.into()), x, sx, y, sy);
    out
}

#[allow(clippy::too_many_arguments)]
fn slot_product_into(
    a: &Algebra,
    units: &UnitProducts,
    out: &mut Tensor3,
    scale: &Rational,
    x: &Tensor2,
    sx: Slots,
    y: &Tensor2,
    sy: Slots,
) {
    let yt = y.terms();
    for (p, q, c) in x.terms() {
        let fx = factors(sx, p, q);
        let sc = scale * &c;
        for (p2, q2, c2) in &yt {
            let fy = factors(sy, *p2, *q2);
            add_outer(
                out,
                &(&sc * c2),
                units.product(a, fx[0], fy[0]),
                units.product(a, fx[1], fy[1]),
                units.product(a, fx[2], fy[2]),
            );
        }
    }
}

fn signed_sum(a: &Algebra, terms: &[(i64, &Tensor2, Slots, &Tensor2, Slots)]) -> Tensor3 {
    let units = UnitProducts::new(a);
    let mut out = Tensor3::zeros(a.dim());
    for (sign, x, sx, y, sy) in terms {
        slot_product_into(a, &units, &mut out, &scalar::int(*sign), x, *sx, y, *sy);
    }
    out
}

/// `r12 r13 + r13 r23 − r23 r12 − μ r13`.
pub fn nhacybe_residual(inst: &NhacybeInstance, r: &Tensor2) -> Result<Tensor3> {
    let a = &inst.algebra;
    check_dim(a, r)?;
    let mut out = signed_sum(
        a,
        &[
            (1, r, Slots::S12, r, Slots::S13),
            (1, r, Slots::S13, r, Slots::S23),
            (-1, r, Slots::S23, r, Slots::S12),
        ],
    );
    out.add_scaled(&-inst.mu.clone(), &embed(r, Slots::S13, a)?);
    Ok(out)
}

/// The same residual computed from dense embeddings and factorwise products.
pub fn nhacybe_residual_dense(inst: &NhacybeInstance, r: &Tensor2) -> Result<Tensor3> {
    let a = &inst.algebra;
    let r12 = embed(r, Slots::S12, a)?;
    let r13 = embed(r, Slots::S13, a)?;
    let r23 = embed(r, Slots::S23, a)?;
    let lhs = triple_mul(&r12, &r13, a)?
        .add(&triple_mul(&r13, &r23, a)?)
        .sub(&triple_mul(&r23, &r12, a)?);
    Ok(lhs.sub(&r13.scale(&inst.mu)))
}

/// `r13 r12 + r23 r13 − r12 r23 − μ r13`.
pub fn opposite_residual(inst: &NhacybeInstance, r: &Tensor2) -> Result<Tensor3> {
    let a = &inst.algebra;
    check_dim(a, r)?;
    let mut out = signed_sum(
        a,
        &[
            (1, r, Slots::S13, r, Slots::S12),
            (1, r, Slots::S23, r, Slots::S13),
            (-1, r, Slots::S12, r, Slots::S23),
        ],
    );
    out.add_scaled(&-inst.mu.clone(), &embed(r, Slots::S13, a)?);
    Ok(out)
}

pub fn is_solution(inst: &NhacybeInstance, r: &Tensor2) -> bool {
    nhacybe_residual(inst, r).map(|t| t.is_zero()).unwrap_or(false)
}

/// Pass/fail report for a residual that must vanish.
pub fn residual_report(name: &str, identity: &str, residual: &Tensor3) -> CheckReport {
    let witness = residual.first_nonzero().map(|((i, j, k), c)| Witness {
        identity: identity.to_string(),
        at: format!("coefficient of e{}⊗e{}⊗e{}", i + 1, j + 1, k + 1),
        lhs: scalar::format(&c),
        rhs: "0".into(),
    });
    CheckReport::from_witness(name, witness)
}

pub fn check_nhacybe(inst: &NhacybeInstance, r: &Tensor2) -> Result<CheckReport> {
    Ok(residual_report(
        "nhacybe",
        "r12 r13 + r13 r23 − r23 r12 = μ r13",
        &nhacybe_residual(inst, r)?,
    ))
}

/// `s̄ = r + σ(r) − μ(1⊗1)`.
pub fn extended_symmetrizer(inst: &NhacybeInstance, r: &Tensor2) -> Tensor2 {
    r.add(&r.flip()).sub(&unit_tensor(&inst.algebra).scale(&inst.mu))
}

/// `(id⊗L(x) − R(x)⊗id) s` as a coefficient matrix.
pub fn invariance_defect(a: &Algebra, s: &Tensor2, x: &[Rational]) -> Matrix {
    let lx = a.left_matrix(x);
    let rx = a.right_matrix(x);
    s.coeff.dot(&lx.transpose()).sub(&rx.dot(&s.coeff))
}

pub fn is_invariant(a: &Algebra, s: &Tensor2) -> CheckReport {
    if s.dim() != a.dim() {
        return CheckReport::fail(
            "invariant",
            Witness {
                identity: "dim s = dim A".into(),
                at: "-".into(),
                lhs: s.dim().to_string(),
                rhs: a.dim().to_string(),
            },
        );
    }
    for x in 0..a.dim() {
        let d = invariance_defect(a, s, &a.e(x));
        if !d.is_zero() {
            return CheckReport::fail(
                "invariant",
                Witness {
                    identity: "(id⊗L(x) − R(x)⊗id) s = 0".into(),
                    at: format!("x = {}", a.label(x)),
                    lhs: format!("{:?}", Tensor2::from_matrix(d)),
                    rhs: "0".into(),
                },
            );
        }
    }
    CheckReport::pass("invariant")
}

/// A basis of the symmetric invariant tensors, from the kernel of the
/// stacked invariance conditions on the upper-triangular unknowns.
pub fn invariant_symmetric_basis(a: &Algebra) -> Vec<Tensor2> {
    let n = a.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|p| (p..n).map(move |q| (p, q))).collect();
    let unknown_tensors: Vec<Tensor2> = pairs
        .iter()
        .map(|&(p, q)| {
            let mut t = Tensor2::basis(n, p, q);
            if p != q {
                t[(q, p)] = scalar::one();
            }
            t
        })
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let defects: Vec<Vec<Matrix>> = unknown_tensors
        .iter()
        .map(|t| (0..n).map(|x| invariance_defect(a, t, &a.e(x))).collect())
        .collect();
    for x in 0..n {
        for i in 0..n {
            for j in 0..n {
                rows.push(defects.iter().map(|d| d[x][(i, j)].clone()).collect());
            }
        }
    }
    let system = Matrix::from_rows(rows).expect("rectangular");
    kernel_basis(&system)
        .into_iter()
        .map(|coords| {
            let mut s = Tensor2::zeros(n);
            for (c, t) in coords.iter().zip(&unknown_tensors) {
                if !c.is_zero() {
                    s = s.add(&t.scale(c));
                }
            }
            s
        })
        .collect()
}

pub fn is_symmetrized_invariant(inst: &NhacybeInstance, r: &Tensor2) -> CheckReport {
    let mut report = is_invariant(&inst.algebra, &extended_symmetrizer(inst, r));
    report.name = "symmetrized invariant".into();
    report
}

/// Residuals of `r12 r13 − r23 r12 + r13 s23 = 0` and
/// `r12 s13 − s23 s12 + s13 s23 = 0`.
pub fn aybp_residual(a: &Algebra, r: &Tensor2, s: &Tensor2) -> Result<(Tensor3, Tensor3)> {
    check_dim(a, r)?;
    check_dim(a, s)?;
    let first = signed_sum(
        a,
        &[
            (1, r, Slots::S12, r, Slots::S13),
            (-1, r, Slots::S23, r, Slots::S12),
            (1, r, Slots::S13, s, Slots::S23),
        ],
    );
    let second = signed_sum(
        a,
        &[
            (1, r, Slots::S12, s, Slots::S13),
            (-1, s, Slots::S23, s, Slots::S12),
            (1, s, Slots::S13, s, Slots::S23),
        ],
    );
    Ok((first, second))
}

pub fn check_aybp(a: &Algebra, r: &Tensor2, s: &Tensor2) -> Result<CheckReport> {
    let (first, second) = aybp_residual(a, r, s)?;
    Ok(CheckReport::all(
        "Yang-Baxter pair",
        vec![
            residual_report("first", "r12 r13 − r23 r12 + r13 s23 = 0", &first),
            residual_report("second", "r12 s13 − s23 s12 + s13 s23 = 0", &second),
        ],
    ))
}

/// Sorted, deduplicated grid values.
pub fn normalize_grid(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Number of assignments of `values` to `positions` slots.
pub fn grid_size(values: usize, positions: usize) -> u128 {
    (values as u128).checked_pow(positions as u32).unwrap_or(u128::MAX)
}

/// Visits every assignment of `values` (sorted, deduplicated) to `positions`
/// slots in lexicographic order, keeping the outputs of `keep`. Work is split
/// across the rayon pool; results come back in lexicographic order.
pub fn grid_search<T, F>(positions: usize, values: &[Rational], budget: u128, keep: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&[Rational]) -> Option<T> + Sync,
{
    let values = normalize_grid(values);
    let total = grid_size(values.len(), positions);
    if total > budget {
        return Err(Error::BudgetExceeded {
            candidates: total,
            budget,
        });
    }
    if values.is_empty() {
        return Ok(Vec::new());
    }
    let base = values.len() as u64;
    let out = (0..total as u64)
        .into_par_iter()
        .filter_map(|mut index| {
            let mut digits = vec![0usize; positions];
            for d in digits.iter_mut().rev() {
                *d = (index % base) as usize;
                index /= base;
            }
            let candidate: Vec<Rational> = digits.iter().map(|&d| values[d].clone()).collect();
            keep(&candidate)
        })
        .collect();
    Ok(out)
}

/// All tensors with coefficients in `values` solving the equation, in
/// lexicographic order of their row-major coefficient sequences.
pub fn grid_enumerate(inst: &NhacybeInstance, values: &[Rational]) -> Result<Vec<Tensor2>> {
    grid_enumerate_with_budget(inst, values, DEFAULT_BUDGET)
}

pub fn grid_enumerate_with_budget(
    inst: &NhacybeInstance,
    values: &[Rational],
    budget: u128,
) -> Result<Vec<Tensor2>> {
    let n = inst.dim();
    let form = CompiledResidual::new(inst);
    grid_search(n * n, values, budget, |coeffs| {
        if form.as_ref().and_then(|f| f.vanishes(coeffs)) == Some(false) {
            return None;
        }
        let rows = coeffs.chunks(n).map(<[Rational]>::to_vec).collect();
        let r = Tensor2::from_matrix(Matrix::from_rows(rows).expect("square"));
        is_solution(inst, &r).then_some(r)
    })
}

/// The residual as a quadratic form in the row-major coefficients of `r`,
/// with every coefficient scaled to a machine integer.
pub struct CompiledResidual {
    positions: usize,
    /// `quad[a * positions + b]`: output index and numerator of `r_a r_b`.
    quad: Vec<Vec<(usize, i64)>>,
    /// Output index and numerator of `r_a` in `r13`.
    lin: Vec<Vec<(usize, i64)>>,
    mu_num: i128,
    mu_den: i128,
}

fn small(x: &BigInt) -> Option<i64> {
    x.to_i64()
}

impl CompiledResidual {
    /// `None` when some scaled coefficient does not fit in an `i64`.
    pub fn new(inst: &NhacybeInstance) -> Option<Self> {
        let a = &inst.algebra;
        let n = a.dim();
        let positions = n * n;
        let basis: Vec<Tensor2> = (0..positions).map(|p| Tensor2::basis(n, p / n, p % n)).collect();
        let mut quad_raw = Vec::with_capacity(positions * positions);
        for x in &basis {
            for y in &basis {
                let t = signed_sum(
                    a,
                    &[(1, x, Slots::S12, y, Slots::S13), (1, x, Slots::S13, y, Slots::S23), (-1, x, Slots::S23, y, Slots::S12)],
                );
                quad_raw.push(t.terms());
            }
        }
        let lin_raw: Vec<_> = basis.iter().map(|x| embed(x, Slots::S13, a).map(|t| t.terms())).collect::<Result<_>>().ok()?;
        let mut den = BigInt::one();
        for (_, c) in quad_raw.iter().chain(&lin_raw).flatten() {
            den = den.lcm(c.denom());
        }
        let index = |(i, j, k): (usize, usize, usize)| (i * n + j) * n + k;
        let scale = |terms: &[((usize, usize, usize), Rational)]| -> Option<Vec<(usize, i64)>> {
            terms.iter().map(|(at, c)| small(&(c * &den).to_integer()).map(|v| (index(*at), v))).collect()
        };
        let quad = quad_raw.iter().map(|t| scale(t)).collect::<Option<_>>()?;
        let lin = lin_raw.iter().map(|t| scale(t)).collect::<Option<_>>()?;
        Some(CompiledResidual {
            positions,
            quad,
            lin,
            mu_num: small(inst.mu.numer())?.into(),
            mu_den: small(inst.mu.denom())?.into(),
        })
    }

    /// Whether the residual vanishes at the row-major coefficients `coeffs`.
    /// `None` if the integer arithmetic would overflow.
    pub fn vanishes(&self, coeffs: &[Rational]) -> Option<bool> {
        if coeffs.len() != self.positions {
            return None;
        }
        let mut den = BigInt::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            den = den.lcm(c.denom());
        }
        let d: i128 = small(&den)?.into();
        let mut nz = Vec::new();
        for (p, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            nz.push((p, i128::from(small(&(c * &den).to_integer())?)));
        }
        // den² μ_den · residual, times the common coefficient denominator.
        let n3 = self.positions * self.positions.isqrt();
        let mut acc = vec![0i128; n3];
        for &(p, vp) in &nz {
            for &(q, vq) in &nz {
                let w = vp.checked_mul(vq)?.checked_mul(self.mu_den)?;
                for &(o, c) in &self.quad[p * self.positions + q] {
                    acc[o] = acc[o].checked_add(w.checked_mul(c.into())?)?;
                }
            }
            let w = vp.checked_mul(d)?.checked_mul(self.mu_num)?;
            for &(o, c) in &self.lin[p] {
                acc[o] = acc[o].checked_sub(w.checked_mul(c.into())?)?;
            }
        }
        Some(acc.iter().all(|v| *v == 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_algebra, StructureConstants};
    use crate::scalar::int;

    fn a2() -> Algebra {
        let mut sc = StructureConstants::zeros(2);
        sc.set_term(0, 0, 0, int(1));
        sc.set_term(1, 1, 1, int(1));
        Algebra::with_default_names(sc, vec![int(1), int(1)]).unwrap()
    }

    #[test]
    fn embeddings_place_the_unit() {
        let a = a2();
        let r = Tensor2::basis(2, 0, 1);
        let one = vec![int(1), int(1)];
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        assert_eq!(embed(&r, Slots::S12, &a).unwrap(), Tensor3::outer(&e1, &e2, &one));
        assert_eq!(embed(&r, Slots::S13, &a).unwrap(), Tensor3::outer(&e1, &one, &e2));
        assert!(embed(&Tensor2::zeros(2), Slots::S23, &a).unwrap().is_zero());
        assert!(embed(&Tensor2::zeros(3), Slots::S23, &a).is_err());
    }

    #[test]
    fn triple_products() {
        let a = a2();
        let one = vec![int(1), int(1)];
        let e1 = vec![int(1), int(0)];
        let e2 = vec![int(0), int(1)];
        let t = Tensor3::outer(&e1, &e2, &e2);
        assert_eq!(triple_mul(&Tensor3::outer(&one, &one, &one), &t, &a).unwrap(), t);
        let p = triple_mul(&Tensor3::outer(&e1, &e1, &e1), &Tensor3::outer(&e2, &e2, &e2), &a).unwrap();
        assert!(p.is_zero());

        let m = matrix_algebra(2);
        let u = m.unit.clone();
        let e = |i| m.e(i);
        let lhs = triple_mul(&Tensor3::outer(&e(1), &u, &u), &Tensor3::outer(&e(2), &u, &u), &m).unwrap();
        assert_eq!(lhs, Tensor3::outer(&e(0), &u, &u));
    }

    #[test]
    fn compiled_residual_agrees() {
        let mut s = crate::random::Sampler::new(5);
        for mu in [int(0), int(1), crate::scalar::frac(-3, 5)] {
            let inst = NhacybeInstance::new(matrix_algebra(2), mu);
            let form = CompiledResidual::new(&inst).unwrap();
            let r0 = Tensor2::from_ints(&[[0, 0, 0, -1], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
            let pool = [r0.scale(&-inst.mu.clone())];
            let mut hits = 0;
            for _ in 0..200 {
                let r = s.mixed(&pool, 4);
                let coeffs: Vec<Rational> = (0..16).map(|p| r[(p / 4, p % 4)].clone()).collect();
                assert_eq!(form.vanishes(&coeffs), Some(is_solution(&inst, &r)));
                hits += usize::from(is_solution(&inst, &r));
            }
            assert!(hits > 0);
        }
    }

    #[test]
    fn small_solutions() {
        let inst = NhacybeInstance::new(a2(), int(1));
        assert!(nhacybe_residual(&inst, &Tensor2::basis(2, 0, 1)).unwrap().is_zero());
        assert!(nhacybe_residual(&inst, &Tensor2::zeros(2)).unwrap().is_zero());
        assert!(opposite_residual(&inst, &Tensor2::basis(2, 1, 0)).unwrap().is_zero());
        let one = unit_tensor(&inst.algebra);
        assert!(nhacybe_residual(&inst, &one).unwrap().is_zero());
        assert!(!nhacybe_residual(&inst, &Tensor2::basis(2, 0, 0)).unwrap().is_zero());
    }

    #[test]
    fn symmetrizer_of_unit_tensor() {
        let inst = NhacybeInstance::new(a2(), int(1));
        let one = unit_tensor(&inst.algebra);
        assert_eq!(extended_symmetrizer(&inst, &one), one);
    }

    #[test]
    fn invariance_in_a2() {
        let a = a2();
        assert!(is_invariant(&a, &Tensor2::basis(2, 0, 0)).passed());
        assert!(!is_invariant(&a, &unit_tensor(&a)).passed());
        assert!(is_invariant(&a, &Tensor2::zeros(2)).passed());
        assert_eq!(invariant_symmetric_basis(&a).len(), 2);
    }

    #[test]
    fn grid_order_is_lexicographic() {
        let found = grid_search(2, &[int(1), int(0)], 100, |c| Some(c.to_vec())).unwrap();
        assert_eq!(
            found,
            vec![
                vec![int(0), int(0)],
                vec![int(0), int(1)],
                vec![int(1), int(0)],
                vec![int(1), int(1)]
            ]
        );
        assert!(matches!(
            grid_search(30, &[int(0), int(1)], DEFAULT_BUDGET, |_| Some(())),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
