//! The 2×2×2 hypermatrix and its hyperdeterminant.
//!
//! A relabeling with four sign flips turns the hyperdeterminant of a 2×2×2
//! array into the eight-variable quadruple polynomial `p4h`, and that
//! correspondence organizes everything here: face determinants play the role
//! of the pairwise products-plus-one, completing the square in one entry
//! solves the completion problem with a discriminant that factors into three
//! faces, and a trilinear SL(2)×SL(2)×SL(2) action scales the
//! hyperdeterminant by squared determinants. Pairwise rotations act on the
//! split `x`/`y` form and transport square-root witnesses exactly.
//!
//! The [`param`] submodule builds rank-degenerate hypermatrices from free
//! parameters, in both an asymmetric and a symmetric flavor.

pub mod param;

pub use param::{
    parameterize_asymmetric, parameterize_symmetric, AsymmetricInputs, ParamError, SymParam,
    SymmetricSolution,
};

use crate::arith::{rational_sqrt_exact, Rational};
use crate::jsonio::{obj_field, rat_array, rat_to_value, JsonError};
use crate::poly::{Monomial, Poly, Var};
use crate::quadruple::p4_of;
use crate::report::IdentityReport;
use crate::ring::{ring_int, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// 2×2×2 array of rationals. Entry `(i,j,k)` lives at flat index
/// `4i + 2j + k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermatrix222 {
    entries: [Rational; 8],
}

pub(crate) fn idx(i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < 2 && j < 2 && k < 2);
    4 * i + 2 * j + k
}

impl Hypermatrix222 {
    pub fn new(entries: [Rational; 8]) -> Hypermatrix222 {
        Hypermatrix222 { entries }
    }

    pub fn zero() -> Hypermatrix222 {
        Hypermatrix222 {
            entries: std::array::from_fn(|_| Rational::from_i64(0)),
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        self.entries[idx(i, j, k)] = value;
    }

    pub(crate) fn raw(&self) -> &[Rational; 8] {
        &self.entries
    }

    /// Parses `{"a": [[["a000","a001"],["a010","a011"]], [["a100",…]…]]}`,
    /// a 2×2×2 nested array in index order `(i,j,k)`.
    pub fn from_json(v: &Value) -> Result<Hypermatrix222, JsonError> {
        let a = obj_field(v, "a", "hypermatrix")?;
        let outer = a
            .as_array()
            .filter(|arr| arr.len() == 2)
            .ok_or_else(|| JsonError::new("a: expected an array of 2 planes"))?;
        let mut m = Hypermatrix222::zero();
        for (i, plane) in outer.iter().enumerate() {
            let rows = plane
                .as_array()
                .filter(|arr| arr.len() == 2)
                .ok_or_else(|| JsonError::new(format!("a[{i}]: expected an array of 2 rows")))?;
            for (j, row) in rows.iter().enumerate() {
                let pair: [Rational; 2] = rat_array(row, &format!("a[{i}][{j}]"))?;
                let [first, second] = pair;
                m.set(i, j, 0, first);
                m.set(i, j, 1, second);
            }
        }
        Ok(m)
    }

    pub fn to_json(&self) -> Value {
        let plane = |i: usize| {
            (0..2)
                .map(|j| {
                    (0..2)
                        .map(|k| rat_to_value(self.get(i, j, k)))
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        };
        json!({ "a": [plane(0), plane(1)] })
    }
}

/// Sign-flipping relabeling from split variables to hypermatrix entries:
/// `a000 = -x1, a110 = x2, a101 = x3, a011 = x4` and
/// `a111 = -y1, a001 = y2, a010 = y3, a100 = y4`.
pub(crate) fn from_xy_of<T: Ring>(x: &[T; 4], y: &[T; 4]) -> [T; 8] {
    let mut a: [T; 8] = std::array::from_fn(|_| T::zero());
    a[idx(0, 0, 0)] = x[0].clone().neg();
    a[idx(1, 1, 0)] = x[1].clone();
    a[idx(1, 0, 1)] = x[2].clone();
    a[idx(0, 1, 1)] = x[3].clone();
    a[idx(1, 1, 1)] = y[0].clone().neg();
    a[idx(0, 0, 1)] = y[1].clone();
    a[idx(0, 1, 0)] = y[2].clone();
    a[idx(1, 0, 0)] = y[3].clone();
    a
}

pub(crate) fn to_xy_of<T: Ring>(a: &[T; 8]) -> ([T; 4], [T; 4]) {
    (
        [
            a[idx(0, 0, 0)].clone().neg(),
            a[idx(1, 1, 0)].clone(),
            a[idx(1, 0, 1)].clone(),
            a[idx(0, 1, 1)].clone(),
        ],
        [
            a[idx(1, 1, 1)].clone().neg(),
            a[idx(0, 0, 1)].clone(),
            a[idx(0, 1, 0)].clone(),
            a[idx(1, 0, 0)].clone(),
        ],
    )
}

pub fn from_xy(x: &[Rational; 4], y: &[Rational; 4]) -> Hypermatrix222 {
    Hypermatrix222::new(from_xy_of(x, y))
}

pub fn to_xy(a: &Hypermatrix222) -> ([Rational; 4], [Rational; 4]) {
    to_xy_of(a.raw())
}

/// Eight-variable quadruple polynomial over any commutative ring:
/// `Σ xᵢ²yᵢ² − 4·Πx − 4·Πy − 2·Σ_{i<j} xᵢyᵢxⱼyⱼ`. At unit `y` it is the
/// quadruple regularity polynomial.
pub(crate) fn p4h_of<T: Ring>(x: &[T; 4], y: &[T; 4]) -> T {
    let two = ring_int::<T>(2);
    let four = ring_int::<T>(4);
    let w: Vec<T> = (0..4).map(|i| x[i].clone() * y[i].clone()).collect();
    let mut acc = T::zero();
    for wi in &w {
        acc = acc + wi.clone() * wi.clone();
    }
    let mut cross = T::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            cross = cross + w[i].clone() * w[j].clone();
        }
    }
    let px = x.iter().fold(T::one(), |acc, t| acc * t.clone());
    let py = y.iter().fold(T::one(), |acc, t| acc * t.clone());
    acc - four.clone() * px - four * py - two * cross
}

pub fn p4h(x: &[Rational; 4], y: &[Rational; 4]) -> Rational {
    p4h_of(x, y)
}

/// Hyperdeterminant as its canonical 12-monomial expansion. The identity
/// suite proves this equals the sign-flipping relabeling of [`p4h_of`],
/// which is the defining property.
pub(crate) fn hyperdet_of<T: Ring>(a: &[T; 8]) -> T {
    let e = |i: usize, j: usize, k: usize| a[idx(i, j, k)].clone();
    let two = ring_int::<T>(2);
    let four = ring_int::<T>(4);
    let sq = |t: T| t.clone() * t;

    let squares = sq(e(0, 0, 0) * e(1, 1, 1))
        + sq(e(0, 0, 1) * e(1, 1, 0))
        + sq(e(0, 1, 0) * e(1, 0, 1))
        + sq(e(0, 1, 1) * e(1, 0, 0));
    let diagonals = e(0, 0, 0) * e(0, 1, 1) * e(1, 0, 1) * e(1, 1, 0)
        + e(0, 0, 1) * e(0, 1, 0) * e(1, 0, 0) * e(1, 1, 1);
    let w = [
        e(0, 0, 0) * e(1, 1, 1),
        e(1, 1, 0) * e(0, 0, 1),
        e(1, 0, 1) * e(0, 1, 0),
        e(0, 1, 1) * e(1, 0, 0),
    ];
    let mut cross = T::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            cross = cross + w[i].clone() * w[j].clone();
        }
    }
    squares + four * diagonals - two * cross
}

pub fn hyperdet(a: &Hypermatrix222) -> Rational {
    hyperdet_of(a.raw())
}

/// The hyperdeterminant as a polynomial in entry variables `a000`…`a111`.
pub fn hyperdet_poly() -> Poly {
    hyperdet_of(&entry_vars())
}

pub(crate) fn entry_vars() -> [Poly; 8] {
    std::array::from_fn(|n| Poly::var(&format!("a{}{}{}", n >> 2, (n >> 1) & 1, n & 1)))
}

/// Labels for the six faces in storage order; face `pq` pairs split
/// variables `x_p x_q` with the complementary `y` product.
pub const FACE_LABELS: [&str; 6] = ["12", "13", "14", "23", "24", "34"];

const FACE_PAIRS: [([usize; 2], [usize; 2]); 6] = [
    ([0, 1], [2, 3]),
    ([0, 2], [1, 3]),
    ([0, 3], [1, 2]),
    ([1, 2], [0, 3]),
    ([1, 3], [0, 2]),
    ([2, 3], [0, 1]),
];

pub(crate) fn face_of_xy<T: Ring>(x: &[T; 4], y: &[T; 4], face: usize) -> T {
    let ([a, b], [c, d]) = FACE_PAIRS[face];
    x[a].clone() * x[b].clone() + y[c].clone() * y[d].clone()
}

pub(crate) fn face_of_entries<T: Ring>(a: &[T; 8], face: usize) -> T {
    let e = |i: usize, j: usize, k: usize| a[idx(i, j, k)].clone();
    match face {
        0 => e(0, 1, 0) * e(1, 0, 0) - e(0, 0, 0) * e(1, 1, 0),
        1 => e(0, 0, 1) * e(1, 0, 0) - e(0, 0, 0) * e(1, 0, 1),
        2 => e(0, 0, 1) * e(0, 1, 0) - e(0, 0, 0) * e(0, 1, 1),
        3 => e(1, 1, 0) * e(1, 0, 1) - e(1, 1, 1) * e(1, 0, 0),
        4 => e(1, 1, 0) * e(0, 1, 1) - e(1, 1, 1) * e(0, 1, 0),
        5 => e(1, 0, 1) * e(0, 1, 1) - e(1, 1, 1) * e(0, 0, 1),
        _ => unreachable!("face index out of range"),
    }
}

/// The six 2×2 face determinants in storage order
/// `[F12, F13, F14, F23, F24, F34]`.
pub fn face_determinants(a: &Hypermatrix222) -> [Rational; 6] {
    std::array::from_fn(|f| face_of_entries(a.raw(), f))
}

/// Index of the face obtained by fixing one coordinate of the cube: the
/// first slot to `i`, the second to `j`, or the third to `k`.
fn face_fixing(slot: usize, value: usize) -> usize {
    match (slot, value) {
        (0, 0) => 2,
        (0, 1) => 3,
        (1, 0) => 1,
        (1, 1) => 4,
        (2, 0) => 0,
        (2, 1) => 5,
        _ => unreachable!("slot/value out of range"),
    }
}

/// One of the three tensor index slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    First,
    Second,
    Third,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::First, Axis::Second, Axis::Third];

    pub fn from_index(n: usize) -> Option<Axis> {
        match n {
            1 => Some(Axis::First),
            2 => Some(Axis::Second),
            3 => Some(Axis::Third),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Axis::First => 1,
            Axis::Second => 2,
            Axis::Third => 3,
        }
    }
}

/// Contracts a 2×2 matrix over one index slot:
/// the entry at position `v` along the axis becomes `Σ_w m[v][w]·a[…w…]`.
pub(crate) fn apply_sl2_of<T: Ring>(a: &[T; 8], axis: Axis, m: &[[T; 2]; 2]) -> [T; 8] {
    std::array::from_fn(|n| {
        let (i, j, k) = (n >> 2, (n >> 1) & 1, n & 1);
        let v = match axis {
            Axis::First => i,
            Axis::Second => j,
            Axis::Third => k,
        };
        let at = |w: usize| match axis {
            Axis::First => a[idx(w, j, k)].clone(),
            Axis::Second => a[idx(i, w, k)].clone(),
            Axis::Third => a[idx(i, j, w)].clone(),
        };
        m[v][0].clone() * at(0) + m[v][1].clone() * at(1)
    })
}

pub fn apply_sl2(a: &Hypermatrix222, axis: Axis, m: &[[Rational; 2]; 2]) -> Hypermatrix222 {
    Hypermatrix222::new(apply_sl2_of(a.raw(), axis, m))
}

pub(crate) fn det2_of<T: Ring>(m: &[[T; 2]; 2]) -> T {
    m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone()
}

/// The two parallel 2×2 slices perpendicular to an axis, remaining indices
/// kept in cube order.
pub(crate) fn slices_of<T: Ring>(a: &[T; 8], axis: Axis) -> ([[T; 2]; 2], [[T; 2]; 2]) {
    let slice = |v: usize| -> [[T; 2]; 2] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| match axis {
                Axis::First => a[idx(v, r, c)].clone(),
                Axis::Second => a[idx(r, v, c)].clone(),
                Axis::Third => a[idx(r, c, v)].clone(),
            })
        })
    };
    (slice(0), slice(1))
}

pub fn pencil_slices(a: &Hypermatrix222, axis: Axis) -> ([[Rational; 2]; 2], [[Rational; 2]; 2]) {
    slices_of(a.raw(), axis)
}

fn mat_add<T: Ring>(a: &[[T; 2]; 2], b: &[[T; 2]; 2]) -> [[T; 2]; 2] {
    std::array::from_fn(|r| std::array::from_fn(|c| a[r][c].clone() + b[r][c].clone()))
}

/// Bilinear term of the slice pencil: `det(S0+S1) − det(S0) − det(S1)`.
/// Its square minus `4·det(S0)·det(S1)` is the hyperdeterminant, for every
/// axis.
pub(crate) fn pencil_mixed_of<T: Ring>(s0: &[[T; 2]; 2], s1: &[[T; 2]; 2]) -> T {
    det2_of(&mat_add(s0, s1)) - det2_of(s0) - det2_of(s1)
}

/// Completion can fail to constrain anything.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompletionError {
    #[error("the hyperdeterminant does not depend on the missing entry; every value completes it")]
    Indeterminate,
}

/// Treats one entry as unknown and returns the rational values making the
/// hyperdeterminant vanish, in descending order. Two values for a quadratic
/// with a positive square discriminant, one for a degenerate-linear
/// equation or a double root, none when the discriminant is not a rational
/// square (or the equation is unsatisfiable); an identically-zero equation
/// is an error. The current value at the missing position is ignored.
pub fn complete(
    a: &Hypermatrix222,
    missing: (usize, usize, usize),
) -> Result<Vec<Rational>, CompletionError> {
    let (i, j, k) = missing;
    let eval_at = |t: i64| {
        let mut m = a.clone();
        m.set(i, j, k, Rational::from_i64(t));
        hyperdet(&m)
    };
    let f0 = eval_at(0);
    let f1 = eval_at(1);
    let fm1 = eval_at(-1);
    let half = Rational::new(1.into(), 2.into()).expect("nonzero denominator");
    let gamma = f0.clone();
    let alpha = &(&(&f1 + &fm1) * &half) - &f0;
    let beta = &(&f1 - &fm1) * &half;

    if alpha.is_zero() {
        return if beta.is_zero() {
            if gamma.is_zero() {
                Err(CompletionError::Indeterminate)
            } else {
                Ok(Vec::new())
            }
        } else {
            Ok(vec![-(&gamma / &beta)])
        };
    }
    let disc = &beta.square() - &(&alpha * &gamma) * Rational::from_i64(4);
    match rational_sqrt_exact(&disc) {
        None => Ok(Vec::new()),
        Some(root) => {
            let scale = (&alpha * Rational::from_i64(2)).recip().expect("alpha nonzero");
            if root.is_zero() {
                Ok(vec![&(-&beta) * &scale])
            } else {
                let mut roots = vec![
                    &(&(-&beta) + &root) * &scale,
                    &(&(-&beta) - &root) * &scale,
                ];
                roots.sort_by(|p, q| q.cmp(p));
                Ok(roots)
            }
        }
    }
}

/// Triple of 2-vectors annihilating a hypermatrix in every contraction of
/// two slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelVectors {
    pub p: [Rational; 2],
    pub q: [Rational; 2],
    pub r: [Rational; 2],
}

impl KernelVectors {
    pub fn to_json(&self) -> Value {
        let pair = |v: &[Rational; 2]| vec![rat_to_value(&v[0]), rat_to_value(&v[1])];
        json!({ "p": pair(&self.p), "q": pair(&self.q), "r": pair(&self.r) })
    }
}

/// True iff all six scalar contraction equations vanish: for each value of
/// the free slot, `Σ a·p·q`, `Σ a·p·r`, and `Σ a·q·r` are zero.
pub fn kernel_check(a: &Hypermatrix222, kv: &KernelVectors) -> bool {
    let e = |i: usize, j: usize, k: usize| a.get(i, j, k);
    for k in 0..2 {
        let mut acc = Rational::from_i64(0);
        for i in 0..2 {
            for j in 0..2 {
                acc = &acc + &(&(e(i, j, k) * &kv.p[i]) * &kv.q[j]);
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    for j in 0..2 {
        let mut acc = Rational::from_i64(0);
        for i in 0..2 {
            for k in 0..2 {
                acc = &acc + &(&(e(i, j, k) * &kv.p[i]) * &kv.r[k]);
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    for i in 0..2 {
        let mut acc = Rational::from_i64(0);
        for j in 0..2 {
            for k in 0..2 {
                acc = &acc + &(&(e(i, j, k) * &kv.q[j]) * &kv.r[k]);
            }
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Kernel vectors require a vanishing hyperdeterminant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("kernel vectors exist only where the hyperdeterminant vanishes; here it is {value}")]
    NonzeroHyperdeterminant { value: Rational },
}

/// Clears denominators, divides by the content, and makes the first nonzero
/// component positive; the zero vector passes through.
fn normalize_pair(v: [Rational; 2]) -> [Rational; 2] {
    if v[0].is_zero() && v[1].is_zero() {
        return v;
    }
    let scale = Rational::from_integer(v[0].denom().lcm(v[1].denom()));
    let n0 = (&v[0] * &scale).numer().clone();
    let n1 = (&v[1] * &scale).numer().clone();
    let g = n0.gcd(&n1);
    let mut n0 = n0 / &g;
    let mut n1 = n1 / &g;
    let leading = if n0.is_zero() { &n1 } else { &n0 };
    if leading.is_negative() {
        n0 = -n0;
        n1 = -n1;
    }
    [Rational::from_integer(n0), Rational::from_integer(n1)]
}

fn first_nonzero_pair(candidates: [[Rational; 2]; 2]) -> [Rational; 2] {
    for c in candidates {
        if !c[0].is_zero() || !c[1].is_zero() {
            return c;
        }
    }
    [Rational::from_i64(1), Rational::from_i64(0)]
}

/// Solves for kernel vectors on the hyperdeterminant's zero locus. The
/// ratio `p0:p1` comes from the double root of the slice-pencil quadratic
/// (the pencil discriminant *is* the hyperdeterminant); `q` and `r` are
/// left and right null vectors of the singular pencil matrix. Degenerate
/// strata fall back to a fixed candidate list, every answer is validated by
/// [`kernel_check`], and `None` means no rational kernel was found there.
pub fn kernel_solve(a: &Hypermatrix222) -> Result<Option<KernelVectors>, KernelError> {
    let det = hyperdet(a);
    if !det.is_zero() {
        return Err(KernelError::NonzeroHyperdeterminant { value: det });
    }
    let (s0, s1) = pencil_slices(a, Axis::First);
    let c0 = det2_of(&s0);
    let c1 = det2_of(&s1);
    let mixed = pencil_mixed_of(&s0, &s1);

    let mut candidates: Vec<[Rational; 2]> = Vec::new();
    if !c1.is_zero() {
        let t = -(&mixed / &(&c1 * Rational::from_i64(2)));
        candidates.push(normalize_pair([Rational::from_i64(1), t]));
    } else if !c0.is_zero() {
        candidates.push([Rational::from_i64(0), Rational::from_i64(1)]);
    }
    for (u, v) in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)] {
        candidates.push([Rational::from_i64(u), Rational::from_i64(v)]);
    }

    for p in candidates {
        let m: [[Rational; 2]; 2] = std::array::from_fn(|r| {
            std::array::from_fn(|c| &(&p[0] * &s0[r][c]) + &(&p[1] * &s1[r][c]))
        });
        let q = normalize_pair(first_nonzero_pair([
            [m[1][0].clone(), -&m[0][0]],
            [m[1][1].clone(), -&m[0][1]],
        ]));
        let r = normalize_pair(first_nonzero_pair([
            [m[1][1].clone(), -&m[1][0]],
            [-&m[0][1], m[0][0].clone()],
        ]));
        let kv = KernelVectors { p: p.clone(), q, r };
        if kernel_check(a, &kv) {
            return Ok(Some(kv));
        }
    }
    Ok(None)
}

/// Split-variable solution of the generalized pair-square problem: six face
/// quantities `x_i x_j + y_k y_l` with optional square-root witnesses in
/// storage order. Witness signs are unrestricted; squares must match the
/// faces exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenQuadruple {
    pub x: [Rational; 4],
    pub y: [Rational; 4],
    pub z: Option<[Rational; 6]>,
}

impl GenQuadruple {
    pub fn face_values(&self) -> [Rational; 6] {
        std::array::from_fn(|f| face_of_xy(&self.x, &self.y, f))
    }

    pub fn from_json(v: &Value) -> Result<GenQuadruple, JsonError> {
        let x = rat_array(obj_field(v, "x", "solution")?, "x")?;
        let y = rat_array(obj_field(v, "y", "solution")?, "y")?;
        let z = match v.as_object().and_then(|o| o.get("z")) {
            None => None,
            Some(zv) => Some(rat_array::<6>(zv, "z")?),
        };
        let out = GenQuadruple { x, y, z };
        if let Some(z) = &out.z {
            let faces = out.face_values();
            for (f, zf) in z.iter().enumerate() {
                if zf.square() != faces[f] {
                    return Err(JsonError::new(format!(
                        "z[{f}]: {zf} does not square to face {} = {}",
                        FACE_LABELS[f], faces[f]
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let arr = |v: &[Rational]| v.iter().map(rat_to_value).collect::<Vec<_>>();
        let mut obj = json!({ "x": arr(&self.x), "y": arr(&self.y) });
        if let Some(z) = &self.z {
            obj["z"] = Value::Array(arr(z));
        }
        obj
    }
}

/// One face of a generalized solution: its value and exact square root when
/// that exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceCheck {
    pub label: &'static str,
    pub value: Rational,
    pub witness: Option<Rational>,
}

/// Square/regularity report for a generalized solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSolutionReport {
    pub faces: Vec<FaceCheck>,
    pub all_square: bool,
    pub regular: bool,
    pub polynomial_value: Rational,
}

impl GenSolutionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "faces": self.faces.iter().map(|f| {
                let mut obj = json!({ "face": f.label, "value": rat_to_value(&f.value) });
                if let Some(z) = &f.witness {
                    obj["witness"] = rat_to_value(z);
                }
                obj
            }).collect::<Vec<_>>(),
            "all_square": self.all_square,
            "regular": self.regular,
            "polynomial_value": rat_to_value(&self.polynomial_value),
        })
    }
}

/// Checks which faces are rational squares (computing canonical
/// nonnegative witnesses) and whether the solution is regular, meaning the
/// eight-variable polynomial vanishes.
pub fn check_generalized_solution(s: &GenQuadruple) -> GenSolutionReport {
    let values = s.face_values();
    let faces: Vec<FaceCheck> = values
        .into_iter()
        .enumerate()
        .map(|(f, value)| {
            let witness = rational_sqrt_exact(&value);
            FaceCheck {
                label: FACE_LABELS[f],
                value,
                witness,
            }
        })
        .collect();
    let all_square = faces.iter().all(|f| f.witness.is_some());
    let polynomial_value = p4h(&s.x, &s.y);
    GenSolutionReport {
        all_square,
        regular: polynomial_value.is_zero(),
        polynomial_value,
        faces,
    }
}

/// 2×2 rotation coefficients. Unit norm (`c² + s² = 1`) keeps the
/// eight-variable polynomial invariant; other norms scale it by the norm
/// squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub c: Rational,
    pub s: Rational,
}

impl Rotation {
    pub fn norm(&self) -> Rational {
        &self.c.square() + &self.s.square()
    }
}

/// The three ways to pair each `x_i` with a `y` under a common rotation;
/// each mixes one opposite pair of faces and rescales the other four.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationVariant {
    A,
    B,
    C,
}

impl RotationVariant {
    pub const ALL: [RotationVariant; 3] = [RotationVariant::A, RotationVariant::B, RotationVariant::C];

    /// `x_i` rotates against `y_{σ(i)}`; σ is an involution.
    pub fn sigma(self) -> [usize; 4] {
        match self {
            RotationVariant::A => [1, 0, 3, 2],
            RotationVariant::B => [3, 2, 1, 0],
            RotationVariant::C => [2, 3, 0, 1],
        }
    }

    /// Storage indices of the two mixed faces, in transport order.
    pub(crate) fn affected(self) -> (usize, usize) {
        match self {
            RotationVariant::A => (0, 5),
            RotationVariant::B => (2, 3),
            RotationVariant::C => (1, 4),
        }
    }
}

/// Signed pair sum mediating the face mixture for a variant; for variant A
/// it is `x1y1 + x2y2 − x3y3 − x4y4`, and its square equals four times the
/// product of the two affected faces exactly on regular solutions.
pub(crate) fn mixed_pair_sum_of<T: Ring>(x: &[T; 4], y: &[T; 4], variant: RotationVariant) -> T {
    let w: Vec<T> = (0..4).map(|i| x[i].clone() * y[i].clone()).collect();
    let signs = match variant {
        RotationVariant::A => [1, 1, -1, -1],
        RotationVariant::B => [1, -1, -1, 1],
        RotationVariant::C => [1, -1, 1, -1],
    };
    let mut acc = T::zero();
    for i in 0..4 {
        acc = if signs[i] > 0 {
            acc + w[i].clone()
        } else {
            acc - w[i].clone()
        };
    }
    acc
}

pub(crate) fn rotate_xy_of<T: Ring>(
    x: &[T; 4],
    y: &[T; 4],
    sigma: [usize; 4],
    c: &T,
    s: &T,
) -> ([T; 4], [T; 4]) {
    let mut xo: [T; 4] = std::array::from_fn(|_| T::zero());
    let mut yo: [T; 4] = std::array::from_fn(|_| T::zero());
    for i in 0..4 {
        xo[i] = c.clone() * x[i].clone() + s.clone() * y[sigma[i]].clone();
        yo[sigma[i]] = c.clone() * y[sigma[i]].clone() - s.clone() * x[i].clone();
    }
    (xo, yo)
}

/// Witness transport puts conditions on the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RotateError {
    #[error("witness transport needs c² + s² = 1; this rotation has norm {norm}")]
    NonUnitNorm { norm: Rational },
    #[error(
        "witness transport needs a regular solution: pair sum {mixed} is not ±2·({za})·({zb})"
    )]
    NonRegularWitnesses {
        mixed: Rational,
        za: Rational,
        zb: Rational,
    },
}

/// Rotates the paired split variables. Without witnesses any coefficients
/// are allowed. With witnesses the rotation must have unit norm; the two
/// witnesses on the mixed faces transport through the same 2×2 rotation
/// after the second one's sign is aligned with the pair sum, and the other
/// four are untouched. Transport exists exactly on regular solutions.
pub fn rotate(
    s: &GenQuadruple,
    variant: RotationVariant,
    rot: &Rotation,
) -> Result<GenQuadruple, RotateError> {
    let (x, y) = rotate_xy_of(&s.x, &s.y, variant.sigma(), &rot.c, &rot.s);
    let z = match &s.z {
        None => None,
        Some(z) => {
            let norm = rot.norm();
            if norm != Rational::from_i64(1) {
                return Err(RotateError::NonUnitNorm { norm });
            }
            let (fa, fb) = variant.affected();
            let mixed = mixed_pair_sum_of(&s.x, &s.y, variant);
            let za = z[fa].clone();
            let zb = z[fb].clone();
            let twice = &(&za * &zb) * Rational::from_i64(2);
            let zeta_b = if mixed == twice {
                zb
            } else if mixed == -&twice {
                -&zb
            } else {
                return Err(RotateError::NonRegularWitnesses { mixed, za, zb });
            };
            let mut out = z.clone();
            out[fa] = &(&rot.c * &za) + &(&rot.s * &zeta_b);
            out[fb] = &(&rot.c * &zeta_b) - &(&rot.s * &za);
            Some(out)
        }
    };
    let rotated = GenQuadruple { x, y, z };
    if let Some(z) = &rotated.z {
        let faces = rotated.face_values();
        for f in 0..6 {
            assert_eq!(
                z[f].square(),
                faces[f],
                "transported witness {} must square to its face",
                FACE_LABELS[f]
            );
        }
    }
    Ok(rotated)
}

fn xy_vars() -> ([Poly; 4], [Poly; 4]) {
    (
        std::array::from_fn(|i| Poly::var(&format!("x{}", i + 1))),
        std::array::from_fn(|i| Poly::var(&format!("y{}", i + 1))),
    )
}

/// Symbolically proves the hypermatrix identity corpus: the relabeling that
/// equates the hyperdeterminant with the eight-variable quadruple
/// polynomial, the canonical monomial expansion, face-pair splits, the
/// single-variable root form, multiplicativity under each SL(2) factor,
/// the completion discriminant's face factorization, the pencil
/// discriminants, the rotation transformation laws, and the soundness of
/// both parameterizations.
pub fn verify_hypermatrix_identities() -> IdentityReport {
    let mut r = IdentityReport::new("hypermatrix");
    let (x, y) = xy_vars();
    let a = entry_vars();
    let four = |p: Poly| p.scaled(&4.into());

    r.poly_identity(
        "hyperdet-matches-quadruple-form",
        &hyperdet_of(&from_xy_of(&x, &y)),
        &p4h_of(&x, &y),
    );

    let term = |c: i64, names: &[&str]| {
        let mut m = Monomial::one();
        for n in names {
            m = m.mul(&Monomial::var(n, 1));
        }
        Poly::monomial(m, c.into())
    };
    let expansion = [
        term(1, &["a000", "a000", "a111", "a111"]),
        term(1, &["a001", "a001", "a110", "a110"]),
        term(1, &["a010", "a010", "a101", "a101"]),
        term(1, &["a011", "a011", "a100", "a100"]),
        term(4, &["a000", "a011", "a101", "a110"]),
        term(4, &["a001", "a010", "a100", "a111"]),
        term(-2, &["a000", "a001", "a110", "a111"]),
        term(-2, &["a000", "a010", "a101", "a111"]),
        term(-2, &["a000", "a011", "a100", "a111"]),
        term(-2, &["a001", "a010", "a101", "a110"]),
        term(-2, &["a001", "a011", "a100", "a110"]),
        term(-2, &["a010", "a011", "a100", "a101"]),
    ]
    .into_iter()
    .fold(Poly::default(), |acc, t| acc + t);
    r.poly_identity("hyperdet-monomial-expansion", &hyperdet_of(&a), &expansion);
    let printed = &(&expansion
        + &term(4, &["a000", "a010", "a101", "a110"]))
        + &(&term(4, &["a001", "a010", "a101", "a111"])
            - &(&term(4, &["a000", "a011", "a101", "a110"])
                + &term(4, &["a001", "a010", "a100", "a111"])));
    let delta = &printed - &hyperdet_of(&a);
    r.finding(
        "hyperdet-printed-expansion-typos",
        format!(
            "a widely printed expansion writes the two +4 monomials as \
             a000·a010·a101·a110 and a001·a010·a101·a111; the expansion \
             consistent with the relabeling needs a000·a011·a101·a110 and \
             a001·a010·a100·a111 (difference {})",
            delta.display_truncated(8)
        ),
    );

    let ones: [Poly; 4] = std::array::from_fn(|_| Poly::int(1));
    r.poly_identity("p4h-at-unit-y-reduces-to-p4", &p4h_of(&x, &ones), &{
        let mut sub = std::collections::BTreeMap::new();
        for (i, n) in ["a", "b", "c", "d"].iter().enumerate() {
            sub.insert(Var::new(*n), x[i].clone());
        }
        p4_of(&[
            Poly::var("a"),
            Poly::var("b"),
            Poly::var("c"),
            Poly::var("d"),
        ])
        .substitute(&sub)
    });

    let p4h_xy = p4h_of(&x, &y);
    for (variant, name) in [
        (RotationVariant::A, "p4h-face-split-12-34"),
        (RotationVariant::C, "p4h-face-split-13-24"),
        (RotationVariant::B, "p4h-face-split-14-23"),
    ] {
        let (fa, fb) = variant.affected();
        let split = &mixed_pair_sum_of(&x, &y, variant).pow(2)
            - &four(&face_of_xy(&x, &y, fa) * &face_of_xy(&x, &y, fb));
        r.poly_identity(name, &p4h_xy, &split);
    }

    {
        let y1sq = y[0].pow(2);
        let head = &(&(&(&x[0] * &y1sq) - &(&(&x[1] * &y[1]) * &y[0]))
            - &(&(&x[2] * &y[2]) * &y[0]))
            - &(&(&x[3] * &y[3]) * &y[0]);
        let base = &head - &(&(&x[1] * &x[2]) * &x[3]).scaled(&2.into());
        let rhs = &base.pow(2)
            - &four(
                &(&face_of_xy(&x, &y, 3) * &face_of_xy(&x, &y, 4)) * &face_of_xy(&x, &y, 5),
            );
        r.poly_identity("p4h-root-form-x1", &(&y1sq * &p4h_xy), &rhs);
    }

    let m: [[Poly; 2]; 2] =
        std::array::from_fn(|r| std::array::from_fn(|c| Poly::var(&format!("m{r}{c}"))));
    let det_a = hyperdet_of(&a);
    for (axis, name) in [
        (Axis::First, "hyperdet-multiplicative-axis-1"),
        (Axis::Second, "hyperdet-multiplicative-axis-2"),
        (Axis::Third, "hyperdet-multiplicative-axis-3"),
    ] {
        r.poly_identity(
            name,
            &hyperdet_of(&apply_sl2_of(&a, axis, &m)),
            &(&det2_of(&m).pow(2) * &det_a),
        );
    }

    {
        let mut components: Vec<(String, Poly, Poly)> = Vec::new();
        for n in 0..8 {
            let (i, j, k) = (n >> 2, (n >> 1) & 1, n & 1);
            let mut with_t = a.clone();
            with_t[idx(i, j, k)] = Poly::var("t");
            let coeffs = hyperdet_of(&with_t).coefficients_in(&Var::new("t"));
            assert_eq!(coeffs.len(), 3, "every entry appears quadratically");
            let half_linear = Poly::from_terms(coeffs[1].terms().map(|(m, c)| {
                let (q, rem) = c.div_rem(&BigInt::from(2));
                assert!(rem.is_zero(), "the linear coefficient is always even");
                (m.clone(), q)
            }));
            let reduced_disc = &half_linear.pow(2) - &(&coeffs[2] * &coeffs[0]);
            let faces = &(&face_of_entries(&a, face_fixing(0, 1 - i))
                * &face_of_entries(&a, face_fixing(1, 1 - j)))
                * &face_of_entries(&a, face_fixing(2, 1 - k));
            components.push((format!("missing a{i}{j}{k}"), reduced_disc, four(faces)));
        }
        r.poly_identity_components(
            "completion-discriminant-face-product",
            components.iter().map(|(l, p, q)| (l.clone(), p, q)),
        );
    }

    for (axis, name) in [
        (Axis::First, "pencil-discriminant-axis-1"),
        (Axis::Second, "pencil-discriminant-axis-2"),
        (Axis::Third, "pencil-discriminant-axis-3"),
    ] {
        let (s0, s1) = slices_of(&a, axis);
        let disc = &pencil_mixed_of(&s0, &s1).pow(2) - &four(&det2_of(&s0) * &det2_of(&s1));
        r.poly_identity(name, &disc, &det_a);
    }

    let c = Poly::var("c");
    let s = Poly::var("s");
    let norm = &c.pow(2) + &s.pow(2);
    for (variant, mix_name, scale_name) in [
        (RotationVariant::A, "rotation-face-mixing-a", "rotation-hyperdet-scaling-a"),
        (RotationVariant::B, "rotation-face-mixing-b", "rotation-hyperdet-scaling-b"),
        (RotationVariant::C, "rotation-face-mixing-c", "rotation-hyperdet-scaling-c"),
    ] {
        let (xr, yr) = rotate_xy_of(&x, &y, variant.sigma(), &c, &s);
        let (fa, fb) = variant.affected();
        let face_a = face_of_xy(&x, &y, fa);
        let face_b = face_of_xy(&x, &y, fb);
        let mixed = mixed_pair_sum_of(&x, &y, variant);
        let mut components = vec![
            (
                format!("face {} gains the pair sum", FACE_LABELS[fa]),
                face_of_xy(&xr, &yr, fa),
                &(&(&c.pow(2) * &face_a) + &(&(&c * &s) * &mixed)) + &(&s.pow(2) * &face_b),
            ),
            (
                format!("face {} loses the pair sum", FACE_LABELS[fb]),
                face_of_xy(&xr, &yr, fb),
                &(&(&s.pow(2) * &face_a) - &(&(&c * &s) * &mixed)) + &(&c.pow(2) * &face_b),
            ),
        ];
        for f in 0..6 {
            if f != fa && f != fb {
                components.push((
                    format!("face {} rescales", FACE_LABELS[f]),
                    face_of_xy(&xr, &yr, f),
                    &norm * &face_of_xy(&x, &y, f),
                ));
            }
        }
        r.poly_identity_components(mix_name, components.iter().map(|(l, p, q)| (l.clone(), p, q)));
        r.poly_identity(scale_name, &p4h_of(&xr, &yr), &(&norm.pow(2) * &p4h_xy));
    }

    {
        let (u1, u2) = (Poly::var("x1"), Poly::var("x2"));
        let (v1, v2) = (Poly::var("y1"), Poly::var("y2"));
        let ur = |u: &Poly, v: &Poly| &(&c * u) + &(&s * v);
        let vr = |u: &Poly, v: &Poly| &(&c * v) - &(&s * u);
        let lhs = &(&ur(&u1, &v1) * &ur(&u2, &v2)) + &(&vr(&u1, &v1) * &vr(&u2, &v2));
        let rhs = &norm * &(&(&u1 * &u2) + &(&v1 * &v2));
        r.poly_identity("rotation-pair-sum-scaling", &lhs, &rhs);
    }

    param::append_asymmetric_identities(&mut r);
    param::append_symmetric_identities(&mut r);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::str::FromStr;

    fn r(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn rat4(vals: [i64; 4]) -> [Rational; 4] {
        vals.map(Rational::from_i64)
    }

    fn classical() -> GenQuadruple {
        GenQuadruple {
            x: rat4([1, 3, 8, 120]),
            y: rat4([1, 1, 1, 1]),
            z: Some([r("2"), r("3"), r("11"), r("5"), r("19"), r("31")]),
        }
    }

    #[test]
    fn hyperdeterminant_values_at_known_points() {
        let mut unit = Hypermatrix222::zero();
        unit.set(0, 0, 0, r("1"));
        unit.set(1, 1, 1, r("1"));
        assert_eq!(hyperdet(&unit), r("1"));
        assert_eq!(hyperdet(&Hypermatrix222::zero()), r("0"));
        let a = from_xy(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        assert!(hyperdet(&a).is_zero());
    }

    #[test]
    fn split_variable_polynomial_matches_and_symmetrizes() {
        assert!(p4h(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1])).is_zero());
        assert_eq!(p4h(&rat4([1, 1, 1, 1]), &rat4([1, 1, 1, 1])), r("-16"));
        let mut rng = StdRng::seed_from_u64(0xface);
        for _ in 0..50 {
            let x: [Rational; 4] =
                std::array::from_fn(|_| Rational::from_i64(rng.gen_range(-9i64..=9)));
            let y: [Rational; 4] =
                std::array::from_fn(|_| Rational::from_i64(rng.gen_range(-9i64..=9)));
            assert_eq!(p4h(&x, &y), p4h(&y, &x));
            assert_eq!(hyperdet(&from_xy(&x, &y)), p4h(&x, &y));
        }
    }

    #[test]
    fn relabeling_round_trips_and_exposes_faces() {
        let x = rat4([1, 3, 8, 120]);
        let y = rat4([1, 1, 1, 1]);
        let a = from_xy(&x, &y);
        assert_eq!(to_xy(&a), (x.clone(), y.clone()));
        assert_eq!(*a.get(0, 0, 0), r("-1"));
        assert_eq!(*a.get(1, 1, 1), r("-1"));
        assert_eq!(
            face_determinants(&a),
            [r("4"), r("9"), r("121"), r("25"), r("361"), r("961")]
        );
        assert_eq!(face_determinants(&Hypermatrix222::zero()), [r("0"), r("0"), r("0"), r("0"), r("0"), r("0")]);

        let (px, py) = xy_vars();
        let mapped = from_xy_of(&px, &py);
        for f in 0..6 {
            assert_eq!(face_of_entries(&mapped, f), face_of_xy(&px, &py, f));
        }
    }

    #[test]
    fn hypermatrix_json_round_trips() {
        let a = from_xy(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        let v = a.to_json();
        assert_eq!(v["a"][0][0][0], "-1");
        assert_eq!(v["a"][1][1][0], "3");
        assert_eq!(Hypermatrix222::from_json(&v).unwrap(), a);
        assert!(Hypermatrix222::from_json(&json!({ "a": [[["1"]]] })).is_err());
    }

    #[test]
    fn sl2_action_preserves_unimodular_hyperdeterminants() {
        let mut rng = StdRng::seed_from_u64(0x51a2);
        for _ in 0..200 {
            let a = Hypermatrix222::new(std::array::from_fn(|_| {
                Rational::from_i64(rng.gen_range(-6i64..=6))
            }));
            let before = hyperdet(&a);
            let axis = Axis::ALL[rng.gen_range(0..3)];
            let (p, q, n) = (
                rng.gen_range(-5i64..=5),
                rng.gen_range(-5i64..=5),
                rng.gen_range(1i64..=4),
            );
            let m = [
                [r(&n.to_string()), r(&p.to_string())],
                [r(&q.to_string()), r(&format!("{}/{}", 1 + p * q, n))],
            ];
            assert_eq!(det2_of(&m), r("1"));
            assert_eq!(hyperdet(&apply_sl2(&a, axis, &m)), before);
        }

        let a = from_xy(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        let identity = [[r("1"), r("0")], [r("0"), r("1")]];
        assert_eq!(apply_sl2(&a, Axis::Second, &identity), a);
        let diag = [[r("2"), r("0")], [r("0"), r("1/2")]];
        assert_eq!(hyperdet(&apply_sl2(&a, Axis::Third, &diag)), hyperdet(&a));
    }

    #[test]
    fn pencil_slices_match_hand_expansion() {
        let a = from_xy(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        let (s0, s1) = pencil_slices(&a, Axis::First);
        assert_eq!(s0, [[r("-1"), r("1")], [r("1"), r("120")]]);
        assert_eq!(s1, [[r("1"), r("8")], [r("3"), r("-1")]]);
        assert_eq!(det2_of(&s0), r("-121"));
        assert_eq!(det2_of(&s1), r("-25"));
        assert_eq!(pencil_mixed_of(&s0, &s1), r("110"));

        let mut rng = StdRng::seed_from_u64(0x9e11);
        for _ in 0..50 {
            let a = Hypermatrix222::new(std::array::from_fn(|_| {
                Rational::from_i64(rng.gen_range(-9i64..=9))
            }));
            for axis in Axis::ALL {
                let (s0, s1) = pencil_slices(&a, axis);
                let disc = &pencil_mixed_of(&s0, &s1).square()
                    - &(&(&det2_of(&s0) * &det2_of(&s1)) * Rational::from_i64(4));
                assert_eq!(disc, hyperdet(&a));
            }
        }
    }

    #[test]
    fn completion_recovers_both_roots_in_descending_order() {
        let a = from_xy(&rat4([0, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        assert_eq!(complete(&a, (0, 0, 0)).unwrap(), vec![r("-1"), r("-11781")]);

        let unit_y_missing = from_xy(&rat4([0, 3, 8, 120]), &rat4([0, 1, 1, 1]));
        let roots = complete(&unit_y_missing, (0, 0, 0)).unwrap();
        assert_eq!(roots.len(), 1);
        let mut filled = unit_y_missing.clone();
        filled.set(0, 0, 0, roots[0].clone());
        assert!(hyperdet(&filled).is_zero());

        let mut skew = Hypermatrix222::zero();
        skew.set(0, 0, 1, r("1"));
        skew.set(0, 1, 0, r("1"));
        skew.set(1, 0, 0, r("1"));
        skew.set(1, 1, 1, r("1"));
        assert_eq!(complete(&skew, (0, 0, 0)).unwrap(), Vec::<Rational>::new());

        assert_eq!(
            complete(&Hypermatrix222::zero(), (0, 0, 0)),
            Err(CompletionError::Indeterminate)
        );
    }

    #[test]
    fn kernel_solver_finds_validated_vectors() {
        let a = from_xy(&rat4([1, 3, 8, 120]), &rat4([1, 1, 1, 1]));
        let kv = kernel_solve(&a).unwrap().unwrap();
        assert!(kernel_check(&a, &kv));
        assert_eq!(kv.p, [r("5"), r("11")]);
        assert_eq!(kv.q, [r("19"), r("-3")]);
        assert_eq!(kv.r, [r("31"), r("-2")]);

        let mut corner = Hypermatrix222::zero();
        corner.set(0, 0, 0, r("1"));
        let kv = kernel_solve(&corner).unwrap().unwrap();
        assert!(kernel_check(&corner, &kv));

        let kv = kernel_solve(&Hypermatrix222::zero()).unwrap().unwrap();
        assert!(kernel_check(&Hypermatrix222::zero(), &kv));

        let mut unit = Hypermatrix222::zero();
        unit.set(0, 0, 0, r("1"));
        unit.set(1, 1, 1, r("1"));
        assert_eq!(
            kernel_solve(&unit),
            Err(KernelError::NonzeroHyperdeterminant { value: r("1") })
        );
    }

    #[test]
    fn generalized_solution_checks_square_faces_and_regularity() {
        let report = check_generalized_solution(&classical());
        assert!(report.all_square && report.regular);
        let witnesses: Vec<String> = report
            .faces
            .iter()
            .map(|f| f.witness.clone().unwrap().to_string())
            .collect();
        assert_eq!(witnesses, ["2", "3", "11", "5", "19", "31"]);

        let flat = GenQuadruple {
            x: rat4([1, 1, 1, 1]),
            y: rat4([1, 1, 1, 1]),
            z: None,
        };
        let report = check_generalized_solution(&flat);
        assert!(!report.all_square && !report.regular);
        assert_eq!(report.polynomial_value, r("-16"));
        assert!(report.faces.iter().all(|f| f.value == r("2")));

        let squares_only = GenQuadruple {
            x: rat4([0, 0, 0, 0]),
            y: rat4([1, 4, 9, 16]),
            z: None,
        };
        let report = check_generalized_solution(&squares_only);
        assert!(report.all_square && !report.regular);
    }

    #[test]
    fn genquad_json_validates_witness_squares() {
        let v = classical().to_json();
        assert_eq!(GenQuadruple::from_json(&v).unwrap(), classical());
        let mut bad = v.clone();
        bad["z"][0] = json!("3");
        let err = GenQuadruple::from_json(&bad).unwrap_err();
        assert!(err.to_string().contains("face 12"));
    }

    #[test]
    fn rotation_transports_witnesses_with_aligned_signs() {
        let rot = Rotation { c: r("3/5"), s: r("4/5") };
        let out = rotate(&classical(), RotationVariant::A, &rot).unwrap();
        assert_eq!(out.x, [r("7/5"), r("13/5"), r("28/5"), r("364/5")]);
        assert_eq!(out.y, [r("-9/5"), r("-1/5"), r("-477/5"), r("-29/5")]);
        let z = out.z.clone().unwrap();
        assert_eq!(z[0], r("-118/5"));
        assert_eq!(z[5], r("-101/5"));
        assert_eq!(&z[1..5], &[r("3"), r("11"), r("5"), r("19")]);
        assert!(p4h(&out.x, &out.y).is_zero());
        assert!(check_generalized_solution(&out).regular);
    }

    #[test]
    fn rotation_without_witnesses_scales_freely() {
        let mut s = classical();
        s.z = None;
        let rot = Rotation { c: r("1"), s: r("1") };
        let out = rotate(&s, RotationVariant::B, &rot).unwrap();
        assert_eq!(p4h(&out.x, &out.y), &p4h(&s.x, &s.y) * Rational::from_i64(4));

        let with_z = classical();
        assert_eq!(
            rotate(&with_z, RotationVariant::B, &rot),
            Err(RotateError::NonUnitNorm { norm: r("2") })
        );
    }

    #[test]
    fn rotation_rejects_irregular_witness_structure() {
        let s = GenQuadruple {
            x: rat4([0, 0, 0, 0]),
            y: rat4([1, 4, 9, 16]),
            z: Some([r("12"), r("8"), r("6"), r("4"), r("3"), r("2")]),
        };
        let rot = Rotation { c: r("3/5"), s: r("4/5") };
        let err = rotate(&s, RotationVariant::A, &rot).unwrap_err();
        assert_eq!(
            err,
            RotateError::NonRegularWitnesses {
                mixed: r("0"),
                za: r("12"),
                zb: r("2"),
            }
        );
    }

    #[test]
    fn random_regular_solutions_survive_rotation() {
        use crate::quadruple::{ahs_extend, diophantine_triples, is_diophantine, MTuple};
        let mut rng = StdRng::seed_from_u64(0x0707);
        let mut count = 0;
        for [a, b, c] in diophantine_triples(25) {
            let (d, _) = ahs_extend(&a, &b, &c).unwrap();
            let t = MTuple::new(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
            let report = is_diophantine(&t);
            assert!(report.pass);
            let w = report.witnesses();
            let z: [Rational; 6] = [
                w[&(0, 1)].clone(),
                w[&(0, 2)].clone(),
                w[&(0, 3)].clone(),
                w[&(1, 2)].clone(),
                w[&(1, 3)].clone(),
                w[&(2, 3)].clone(),
            ];
            let s = GenQuadruple {
                x: [a, b, c, d],
                y: rat4([1, 1, 1, 1]),
                z: Some(z),
            };
            for variant in RotationVariant::ALL {
                let t = Rational::from_i64(rng.gen_range(1i64..=12));
                let denom = &t.square() + Rational::from_i64(1);
                let rot = Rotation {
                    c: &(&t.square() - Rational::from_i64(1)) / &denom,
                    s: &(&t * Rational::from_i64(2)) / &denom,
                };
                assert_eq!(rot.norm(), r("1"));
                let out = rotate(&s, variant, &rot).unwrap();
                let check = check_generalized_solution(&out);
                assert!(check.regular && check.all_square);
                count += 1;
            }
        }
        assert_eq!(count, 75);
    }

    #[test]
    fn identity_suite_passes() {
        let report = verify_hypermatrix_identities();
        assert!(report.all_pass(), "{}", report.render());
    }
}
