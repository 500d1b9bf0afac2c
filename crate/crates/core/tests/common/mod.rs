//! Independent reference arithmetic for the integration tests. Nothing here
//! calls into the library except the conversions at the bottom.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use nhybe_core::algebra::Algebra;
use nhybe_core::linalg::Matrix;
use nhybe_core::tensor::Tensor2;

pub type Q = BigRational;
pub type Mat = Vec<Vec<Q>>;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Algebra given by products of basis vectors, `e_i e_j = Σ c e_k`.
#[derive(Clone, Debug)]
pub struct Alg {
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
    pub unit: Vec<Q>,
}

impl Alg {
    /// `rules` lists `(i, j, k, c)` with 1-based indices: `e_i e_j ∋ c e_k`.
    pub fn new(n: usize, unit: &[i64], rules: &[(usize, usize, usize, i64)]) -> Self {
        let mut c = vec![vec![vec![Q::zero(); n]; n]; n];
        for &(i, j, k, v) in rules {
            c[i - 1][j - 1][k - 1] += q(v);
        }
        Alg { n, c, unit: unit.iter().map(|&u| q(u)).collect() }
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..self.n {
                    if !self.c[i][j][k].is_zero() {
                        out[k] += &xy * &self.c[i][j][k];
                    }
                }
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n];
        v[i] = Q::one();
        v
    }
}

pub fn a1() -> Alg {
    Alg::new(2, &[1, 0], &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1)])
}

pub fn a2() -> Alg {
    Alg::new(2, &[1, 1], &[(1, 1, 1, 1), (2, 2, 2, 1)])
}

pub fn b1() -> Alg {
    Alg::new(3, &[1, 1, 1], &[(1, 1, 1, 1), (2, 2, 2, 1), (3, 3, 3, 1)])
}

pub fn b2() -> Alg {
    Alg::new(3, &[1, 1, 0], &[(1, 1, 1, 1), (2, 2, 2, 1), (3, 2, 3, 1), (2, 3, 3, 1)])
}

pub fn b3() -> Alg {
    Alg::new(
        3,
        &[1, 0, 0],
        &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1), (1, 3, 3, 1), (3, 1, 3, 1), (2, 2, 3, 1)],
    )
}

pub fn b4() -> Alg {
    Alg::new(
        3,
        &[1, 0, 0],
        &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1), (1, 3, 3, 1), (3, 1, 3, 1), (3, 2, 2, 1), (3, 3, 3, 1)],
    )
}

pub fn b5() -> Alg {
    Alg::new(3, &[1, 0, 0], &[(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 2, 1), (1, 3, 3, 1), (3, 1, 3, 1)])
}

/// 2×2 matrices in the basis E11, E12, E21, E22.
pub fn m2() -> Alg {
    let idx = |i: usize, j: usize| 2 * (i - 1) + j;
    let mut rules = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for l in 1..=2 {
                rules.push((idx(i, j), idx(j, l), idx(i, l), 1));
            }
        }
    }
    Alg::new(4, &[1, 0, 0, 1], &rules)
}

pub fn zeros(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

/// `Σ c e_i⊗e_j` from 1-based `(i, j, c)`.
pub fn t2(n: usize, terms: &[(usize, usize, i64)]) -> Mat {
    let mut t = zeros(n);
    for &(i, j, c) in terms {
        t[i - 1][j - 1] += q(c);
    }
    t
}

pub fn scale(c: &Q, t: &Mat) -> Mat {
    t.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn flip(t: &Mat) -> Mat {
    let n = t.len();
    (0..n).map(|i| (0..n).map(|j| t[j][i].clone()).collect()).collect()
}

pub fn is_zero(t: &Mat) -> bool {
    t.iter().all(|r| r.iter().all(Zero::is_zero))
}

pub fn outer(u: &[Q], v: &[Q]) -> Mat {
    u.iter().map(|a| v.iter().map(|b| a * b).collect()).collect()
}

/// Sparse element of `A⊗A⊗A`.
type T3 = Vec<((usize, usize, usize), Q)>;

#[derive(Clone, Copy)]
pub enum Slot {
    S12,
    S13,
    S23,
}

fn embed(t: &Mat, slot: Slot, unit: &[Q]) -> T3 {
    let n = t.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if t[i][j].is_zero() {
                continue;
            }
            for (m, u) in unit.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let key = match slot {
                    Slot::S12 => (i, j, m),
                    Slot::S13 => (i, m, j),
                    Slot::S23 => (m, i, j),
                };
                out.push((key, &t[i][j] * u));
            }
        }
    }
    out
}

fn mul3(a: &Alg, x: &T3, y: &T3, sign: &Q, acc: &mut [Q]) {
    let n = a.n;
    for ((i1, i2, i3), cx) in x {
        for ((j1, j2, j3), cy) in y {
            let c = cx * cy * sign;
            let p1 = &a.c[*i1][*j1];
            let p2 = &a.c[*i2][*j2];
            let p3 = &a.c[*i3][*j3];
            for (k1, c1) in p1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                let cc1 = &c * c1;
                for (k2, c2) in p2.iter().enumerate() {
                    if c2.is_zero() {
                        continue;
                    }
                    let cc2 = &cc1 * c2;
                    for (k3, c3) in p3.iter().enumerate() {
                        if c3.is_zero() {
                            continue;
                        }
                        acc[(k1 * n + k2) * n + k3] += &cc2 * c3;
                    }
                }
            }
        }
    }
}

/// `Σ sign · X_{slot} Y_{slot}` as a dense `n³` array.
pub fn combo(a: &Alg, terms: &[(i64, &Mat, Slot, &Mat, Slot)]) -> Vec<Q> {
    let mut acc = vec![Q::zero(); a.n * a.n * a.n];
    for (sign, x, sx, y, sy) in terms {
        mul3(a, &embed(x, *sx, &a.unit), &embed(y, *sy, &a.unit), &q(*sign), &mut acc);
    }
    acc
}

fn minus_embedded(a: &Alg, acc: &mut [Q], c: &Q, t: &Mat, slot: Slot) {
    let n = a.n;
    for ((i, j, k), v) in embed(t, slot, &a.unit) {
        acc[(i * n + j) * n + k] -= c * v;
    }
}

/// `r12 r13 + r13 r23 − r23 r12 − μ r13`.
pub fn ybe_residual(a: &Alg, r: &Mat, mu: &Q) -> Vec<Q> {
    use Slot::*;
    let mut acc = combo(a, &[(1, r, S12, r, S13), (1, r, S13, r, S23), (-1, r, S23, r, S12)]);
    minus_embedded(a, &mut acc, mu, r, S13);
    acc
}

pub fn solves(a: &Alg, r: &Mat, mu: &Q) -> bool {
    ybe_residual(a, r, mu).iter().all(Zero::is_zero)
}

/// `r13 r12 + r23 r13 − r12 r23 − μ r13`.
pub fn solves_opposite(a: &Alg, r: &Mat, mu: &Q) -> bool {
    use Slot::*;
    let mut acc = combo(a, &[(1, r, S13, r, S12), (1, r, S23, r, S13), (-1, r, S12, r, S23)]);
    minus_embedded(a, &mut acc, mu, r, S13);
    acc.iter().all(Zero::is_zero)
}

/// Both equations of an associative Yang-Baxter pair.
pub fn is_aybp(a: &Alg, r: &Mat, s: &Mat) -> bool {
    use Slot::*;
    let first = combo(a, &[(1, r, S12, r, S13), (-1, r, S23, r, S12), (1, r, S13, s, S23)]);
    let second = combo(a, &[(1, r, S12, s, S13), (-1, s, S23, s, S12), (1, s, S13, s, S23)]);
    first.iter().chain(&second).all(Zero::is_zero)
}

/// `r + σ(r) − μ 1⊗1`.
pub fn symmetrizer(a: &Alg, r: &Mat, mu: &Q) -> Mat {
    sub(&add(r, &flip(r)), &scale(mu, &outer(&a.unit, &a.unit)))
}

/// `(id⊗L(x) − R(x)⊗id)s = 0` for every basis `x`.
pub fn invariant(a: &Alg, s: &Mat) -> bool {
    let n = a.n;
    for x in 0..n {
        let mut d = zeros(n);
        for i in 0..n {
            for j in 0..n {
                if s[i][j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    d[i][k] += &s[i][j] * &a.c[x][j][k];
                    d[k][j] -= &s[i][j] * &a.c[i][x][k];
                }
            }
        }
        if !is_zero(&d) {
            return false;
        }
    }
    true
}

/// `P(x) = Σ r_ij B(x, e_i) e_j`, as a matrix with column `x` = `P(e_x)`.
pub fn p_r(gram: &Mat, r: &Mat) -> Mat {
    let n = r.len();
    let mut p = zeros(n);
    for x in 0..n {
        for i in 0..n {
            for j in 0..n {
                p[j][x] += &r[i][j] * &gram[x][i];
            }
        }
    }
    p
}

pub fn apply(m: &Mat, v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn column(m: &Mat, j: usize) -> Vec<Q> {
    m.iter().map(|r| r[j].clone()).collect()
}

fn vadd(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vscale(c: &Q, a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

/// `P(x)P(y) = P(P(x)y + xP(y) + λxy)` on basis pairs.
pub fn is_rota_baxter(a: &Alg, p: &Mat, lambda: &Q) -> bool {
    (0..a.n).all(|x| {
        (0..a.n).all(|y| {
            let (px, py) = (column(p, x), column(p, y));
            let (ex, ey) = (a.e(x), a.e(y));
            let lhs = a.mul(&px, &py);
            let inner = vadd(&vadd(&a.mul(&px, &ey), &a.mul(&ex, &py)), &vscale(lambda, &a.mul(&ex, &ey)));
            lhs == apply(p, &inner)
        })
    })
}

/// `P(x)P(y) = P(P(x)y + xS(y))`, `S(x)S(y) = S(P(x)y + xS(y))`.
pub fn is_rb_system(a: &Alg, p: &Mat, s: &Mat) -> bool {
    (0..a.n).all(|x| {
        (0..a.n).all(|y| {
            let (px, sy) = (column(p, x), column(s, y));
            let inner = vadd(&a.mul(&px, &a.e(y)), &a.mul(&a.e(x), &sy));
            a.mul(&px, &column(p, y)) == apply(p, &inner) && a.mul(&column(s, x), &sy) == apply(s, &inner)
        })
    })
}

/// `P(x)P(y) + P(xP′(y)) − P(P(x)y) − μ ε(y)P(x)` vanishes on basis pairs,
/// with `P(x) = Σ ε(aᵢx)bᵢ` and `P′(x) = Σ ε(bᵢx)aᵢ`.
pub fn intermediate_identity_holds(a: &Alg, eps: &[Q], r: &Mat, mu: &Q) -> bool {
    let n = a.n;
    let ev = |v: &[Q]| -> Q { v.iter().zip(eps).map(|(x, e)| x * e).sum() };
    let mut p = zeros(n);
    let mut pp = zeros(n);
    for x in 0..n {
        for i in 0..n {
            for j in 0..n {
                p[j][x] += &r[i][j] * ev(&a.mul(&a.e(i), &a.e(x)));
                pp[i][x] += &r[i][j] * ev(&a.mul(&a.e(j), &a.e(x)));
            }
        }
    }
    (0..n).all(|x| {
        (0..n).all(|y| {
            let px = column(&p, x);
            let lhs = vadd(&a.mul(&px, &column(&p, y)), &apply(&p, &a.mul(&a.e(x), &column(&pp, y))));
            let rhs = vadd(&apply(&p, &a.mul(&px, &a.e(y))), &vscale(&(mu * &eps[y]), &px));
            vsub(&lhs, &rhs).iter().all(Zero::is_zero)
        })
    })
}

/// Every `n×n` tensor with entries in `values` that solves the equation, in
/// row-major lexicographic order of value indices.
pub fn brute_force_solutions(a: &Alg, mu: &Q, values: &[Q]) -> Vec<Mat> {
    let n = a.n;
    let cells = n * n;
    let mut idx = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        let mut r = zeros(n);
        for (c, &v) in idx.iter().enumerate() {
            r[c / n][c % n] = values[v].clone();
        }
        if solves(a, &r, mu) {
            out.push(r);
        }
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < values.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

pub fn from_tensor(t: &Tensor2) -> Mat {
    t.coeff.to_rows()
}

pub fn to_tensor(m: &Mat) -> Tensor2 {
    Tensor2::from_matrix(Matrix::from_rows(m.clone()).unwrap())
}

pub fn from_matrix(m: &Matrix) -> Mat {
    m.to_rows()
}

pub fn to_matrix(m: &Mat) -> Matrix {
    Matrix::from_rows(m.clone()).unwrap()
}

/// Whether a library algebra has the same products and unit as `a`.
pub fn same_algebra(lib: &Algebra, a: &Alg) -> bool {
    lib.dim() == a.n && lib.unit == a.unit && lib.sc.to_nested() == a.c
}

/// Actions of `A` on a space of dimension `m`; `left[x]`, `right[x]` are
/// the matrices of `ℓ(e_x)` and `r(e_x)` on column vectors.
#[derive(Clone, Debug)]
pub struct Bimod {
    pub a: Alg,
    pub m: usize,
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
}

pub fn transpose(m: &Mat) -> Mat {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len()).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn adjoint(a: &Alg) -> Bimod {
    let n = a.n;
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in 0..n {
        let mut l = zeros(n);
        let mut r = zeros(n);
        for j in 0..n {
            for k in 0..n {
                l[k][j] = a.c[x][j][k].clone();
                r[k][j] = a.c[j][x][k].clone();
            }
        }
        left.push(l);
        right.push(r);
    }
    Bimod { a: a.clone(), m: n, left, right }
}

/// `⟨x·f, v⟩ = ⟨f, v·x⟩` and `⟨f·x, v⟩ = ⟨f, x·v⟩`.
pub fn dual(v: &Bimod) -> Bimod {
    Bimod {
        a: v.a.clone(),
        m: v.m,
        left: v.right.iter().map(transpose).collect(),
        right: v.left.iter().map(transpose).collect(),
    }
}

fn act(ms: &[Mat], x: &[Q], v: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); v.len()];
    for (c, m) in x.iter().zip(ms) {
        if !c.is_zero() {
            out = vadd(&out, &vscale(c, &apply(m, v)));
        }
    }
    out
}

/// `α(u)α(v) = α(ℓ(α(u))v + u r(α(v)))` for `α: V → A` given as an `n×m`
/// matrix.
pub fn is_o_operator(v: &Bimod, alpha: &Mat) -> bool {
    let unit_m = |i: usize| -> Vec<Q> { (0..v.m).map(|k| if k == i { Q::one() } else { Q::zero() }).collect() };
    (0..v.m).all(|u| {
        (0..v.m).all(|w| {
            let (au, aw) = (column(alpha, u), column(alpha, w));
            let inner = vadd(&act(&v.left, &au, &unit_m(w)), &act(&v.right, &aw, &unit_m(u)));
            v.a.mul(&au, &aw) == apply(alpha, &inner)
        })
    })
}

/// `A ⋉ V` with `(a, u)(b, w) = (ab, ℓ(a)w + u r(b))`.
pub fn semidirect(v: &Bimod) -> Alg {
    let (n, m) = (v.a.n, v.m);
    let t = n + m;
    let mut c = vec![vec![vec![Q::zero(); t]; t]; t];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[i][j][k] = v.a.c[i][j][k].clone();
            }
        }
        for b in 0..m {
            for k in 0..m {
                c[i][n + b][n + k] = v.left[i][k][b].clone();
                c[n + b][i][n + k] = v.right[i][k][b].clone();
            }
        }
    }
    let mut unit = v.a.unit.clone();
    unit.extend((0..m).map(|_| Q::zero()));
    Alg { n: t, c, unit }
}

/// `α̂(x, u) = (α(u), −λu)`.
pub fn lift(alpha: &Mat, n: usize, m: usize, lambda: &Q) -> Mat {
    let mut h = zeros(n + m);
    for b in 0..m {
        for i in 0..n {
            h[i][n + b] = alpha[i][b].clone();
        }
        h[n + b][n + b] = -lambda.clone();
    }
    h
}
