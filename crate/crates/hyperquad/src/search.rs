//! Desk-scale integer searches and the rank-2 matrix generalization.
//!
//! The enumeration walks all strictly increasing positive-integer tuples
//! whose pairwise products are each one less than a perfect square, up to a
//! bound on the largest element. Machine integers carry the inner loops and
//! every emitted tuple is re-verified in exact arithmetic. A shard option
//! partitions the outermost loop so independent processes can split a
//! survey and merge the results.
//!
//! The rank-2 reduction transforms a symmetric matrix of rationals whose
//! off-diagonal entries are squares into the normal form `k·x_i·x_j + m`,
//! the shape that turns matrix instances into shifted multiplicative
//! problems.

use crate::arith::{rational_sqrt_exact, Rational};
use crate::hypermatrix::Rotation;
use crate::jsonio::{obj_field, rat_from_value, rat_to_value, JsonError};
use crate::quadruple::{is_diophantine, p4, MTuple};
use crate::quintuple::p5;
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

/// Scope of one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest element allowed in a tuple.
    pub bound: u64,
    /// Tuple length, 2 through 4.
    pub arity: usize,
    /// Insist on strictly increasing tuples; with repeats allowed the
    /// enumeration is nondecreasing instead.
    pub require_distinct: bool,
    /// `(index, count)`: keep only first elements `a` with
    /// `(a-1) % count == index`.
    pub shard: Option<(usize, usize)>,
}

impl SearchConfig {
    pub fn new(bound: u64, arity: usize) -> SearchConfig {
        SearchConfig {
            bound,
            arity,
            require_distinct: true,
            shard: None,
        }
    }
}

/// All `b` in `[min_b, bound]` with `a·b + 1` a perfect square, ascending.
fn square_partners(a: u64, bound: u64, min_b: u64) -> Vec<u64> {
    let limit = a as u128 * bound as u128;
    let mut out = Vec::new();
    let mut root: u128 = 1;
    loop {
        let product = root * root - 1;
        if product > limit {
            return out;
        }
        if product % a as u128 == 0 {
            let b = (product / a as u128) as u64;
            if b >= min_b {
                out.push(b);
            }
        }
        root += 1;
    }
}

fn intersect_sorted(xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(xs[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn emit(elements: &[u64]) -> MTuple {
    let tuple = MTuple::new(
        elements
            .iter()
            .map(|&e| Rational::from_integer(BigInt::from(e)))
            .collect(),
    );
    assert!(
        is_diophantine(&tuple).pass,
        "enumerated tuple failed exact re-verification"
    );
    tuple
}

/// Enumerates Diophantine tuples of the configured arity in lexicographic
/// order. Every pairwise product plus one is confirmed a perfect square in
/// machine arithmetic first and in exact arithmetic on emission.
pub fn enumerate_diophantine(cfg: &SearchConfig) -> Vec<MTuple> {
    assert!(
        (2..=4).contains(&cfg.arity),
        "enumeration covers arities 2 through 4"
    );
    assert!(cfg.bound >= 1, "bound must be positive");
    if let Some((index, count)) = cfg.shard {
        assert!(index < count, "shard index must be below the shard count");
    }
    let in_shard = |a: u64| match cfg.shard {
        None => true,
        Some((index, count)) => (a - 1) % count as u64 == index as u64,
    };
    let next_min = |prev: u64| {
        if cfg.require_distinct {
            prev + 1
        } else {
            prev
        }
    };

    let mut out = Vec::new();
    for a in 1..=cfg.bound {
        if !in_shard(a) {
            continue;
        }
        let partners_a = square_partners(a, cfg.bound, next_min(a));
        if cfg.arity == 2 {
            out.extend(partners_a.iter().map(|&b| emit(&[a, b])));
            continue;
        }
        for &b in &partners_a {
            let partners_b = square_partners(b, cfg.bound, next_min(b));
            let candidates_c = intersect_sorted(&partners_a, &partners_b);
            if cfg.arity == 3 {
                out.extend(candidates_c.iter().map(|&c| emit(&[a, b, c])));
                continue;
            }
            for &c in &candidates_c {
                let partners_c = square_partners(c, cfg.bound, next_min(c));
                for &d in &intersect_sorted(&candidates_c, &partners_c) {
                    if d >= next_min(c) {
                        out.push(emit(&[a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

/// Flattens shard outputs into the order a single unsharded run produces.
pub fn merge_shards(shards: Vec<Vec<MTuple>>) -> Vec<MTuple> {
    let mut all: Vec<MTuple> = shards.into_iter().flatten().collect();
    all.sort_by(|p, q| p.elements.cmp(&q.elements));
    all
}

/// Whether a quadruple or quintuple is regular, meaning its regularity
/// polynomial vanishes.
pub fn classify_regular(t: &MTuple) -> bool {
    let e = &t.elements;
    match e.len() {
        4 => p4(&e[0], &e[1], &e[2], &e[3]).is_zero(),
        5 => p5(&e[0], &e[1], &e[2], &e[3], &e[4]).is_zero(),
        n => panic!("regularity classification covers arities 4 and 5, not {n}"),
    }
}

/// CSV emission can fail on output or on a tuple that is not Diophantine.
#[derive(Debug, thiserror::Error)]
pub enum CsvError {
    #[error(transparent)]
    Output(#[from] csv::Error),
    #[error("tuple {index} is not Diophantine; witness columns are undefined")]
    NotDiophantine { index: usize },
}

/// Writes tuples as CSV with one column per element, one per pairwise
/// witness, and a final regularity column (filled for arities 4 and 5,
/// empty otherwise). All tuples must share one arity.
pub fn write_csv<W: std::io::Write>(tuples: &[MTuple], out: W) -> Result<(), CsvError> {
    let mut w = csv::Writer::from_writer(out);
    let Some(first) = tuples.first() else {
        w.flush().map_err(csv::Error::from)?;
        return Ok(());
    };
    let arity = first.arity();
    let mut header: Vec<String> = (1..=arity).map(|i| format!("e{i}")).collect();
    for i in 1..=arity {
        for j in i + 1..=arity {
            header.push(format!("z{i}{j}"));
        }
    }
    header.push("regular".to_string());
    w.write_record(&header)?;

    for (index, tuple) in tuples.iter().enumerate() {
        assert_eq!(tuple.arity(), arity, "mixed arities in one CSV");
        let report = is_diophantine(tuple);
        if !report.pass {
            return Err(CsvError::NotDiophantine { index });
        }
        let mut record: Vec<String> = tuple.elements.iter().map(|e| e.to_string()).collect();
        for (_, z) in report.witnesses() {
            record.push(z.to_string());
        }
        record.push(match arity {
            4 | 5 => classify_regular(tuple).to_string(),
            _ => String::new(),
        });
        w.write_record(&record)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Symmetric matrix of rationals, the instance format of the rank-2
/// generalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrixInstance {
    entries: Vec<Vec<Rational>>,
}

impl SymmetricMatrixInstance {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<SymmetricMatrixInstance, JsonError> {
        let n = entries.len();
        if n < 2 {
            return Err(JsonError::new("need at least a 2×2 matrix"));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(JsonError::new(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(JsonError::new(format!(
                        "not symmetric: entry ({i},{j}) differs from ({j},{i})"
                    )));
                }
            }
        }
        Ok(SymmetricMatrixInstance { entries })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    /// Parses `{"entries": [["…", …], …]}`, a square symmetric array of
    /// rational strings.
    pub fn from_json(v: &Value) -> Result<SymmetricMatrixInstance, JsonError> {
        let rows = obj_field(v, "entries", "matrix")?
            .as_array()
            .ok_or_else(|| JsonError::new("entries: expected an array of rows"))?;
        let mut entries = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let cells = row
                .as_array()
                .ok_or_else(|| JsonError::new(format!("entries[{i}]: expected an array")))?;
            let mut parsed = Vec::with_capacity(cells.len());
            for (j, cell) in cells.iter().enumerate() {
                parsed.push(rat_from_value(cell, &format!("entries[{i}][{j}]"))?);
            }
            entries.push(parsed);
        }
        SymmetricMatrixInstance::new(entries)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "entries": self
                .entries
                .iter()
                .map(|row| row.iter().map(rat_to_value).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
    }
}

/// Normal form of a rank-2 symmetric matrix: after scaling row and column
/// `i` by `scalings[i]`, every entry outside the first row and column is
/// `k·x_i·x_j + m` (with `x` indexed from the second row). Squareness of
/// off-diagonal entries is preserved because every scaling is a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedProblem {
    pub k: Rational,
    pub m: Rational,
    pub x: Vec<Rational>,
    pub scalings: Vec<Rational>,
}

impl ReducedProblem {
    /// Rebuilds the matrix this normal form came from.
    pub fn reconstruct(&self) -> SymmetricMatrixInstance {
        let n = self.x.len() + 1;
        let mut entries = vec![vec![Rational::from_i64(0); n]; n];
        entries[0][0] = self.m.recip().expect("m is nonzero by construction");
        for j in 1..n {
            let e = self.scalings[j].recip().expect("scalings are nonzero");
            entries[0][j] = e.clone();
            entries[j][0] = e;
        }
        for i in 1..n {
            for j in 1..n {
                let core = &(&(&self.k * &self.x[i - 1]) * &self.x[j - 1]) + &self.m;
                entries[i][j] = &core / &(&self.scalings[i] * &self.scalings[j]);
            }
        }
        SymmetricMatrixInstance::new(entries).expect("reconstruction is symmetric")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": rat_to_value(&self.k),
            "m": rat_to_value(&self.m),
            "x": self.x.iter().map(rat_to_value).collect::<Vec<_>>(),
            "scalings": self.scalings.iter().map(rat_to_value).collect::<Vec<_>>(),
        })
    }
}

/// Ways the rank-2 reduction can fail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("entry (1,{col}) is zero; the first-row normalization divides by it")]
    ZeroPairEntry { col: usize },
    #[error(
        "entry (1,{col}) = {value} is not a rational square; row scalings must be \
         squares to preserve which entries are squares"
    )]
    NonSquarePairEntry { col: usize, value: Rational },
    #[error("entry (1,1) is zero; the shift normalization divides by it")]
    ZeroCorner,
    #[error("residual block vanishes: the matrix has rank below 2")]
    ResidualZero,
    #[error("residual block is not rank 1 (first mismatch at ({row},{col})): the matrix has rank above 2")]
    ResidualNotRankOne { row: usize, col: usize },
}

/// Reduces a rank-2 symmetric matrix with square first-row entries to
/// `k·x_i·x_j + m` normal form. Three steps: scale row and column `i` by
/// the square `1/e_1i` so the first row becomes ones, read the shift `m`
/// off the corner, and factor the shifted residual as a rank-1 product.
/// Entries are 1-indexed in errors to match the matrix notation.
pub fn reduce_rank2(instance: &SymmetricMatrixInstance) -> Result<ReducedProblem, ReduceError> {
    let n = instance.dimension();

    let mut scalings = Vec::with_capacity(n);
    scalings.push(Rational::from_i64(1));
    for j in 1..n {
        let e = instance.get(0, j);
        if e.is_zero() {
            return Err(ReduceError::ZeroPairEntry { col: j + 1 });
        }
        if rational_sqrt_exact(e).is_none() {
            return Err(ReduceError::NonSquarePairEntry {
                col: j + 1,
                value: e.clone(),
            });
        }
        scalings.push(e.recip().expect("checked nonzero"));
    }

    let corner = instance.get(0, 0);
    if corner.is_zero() {
        return Err(ReduceError::ZeroCorner);
    }
    let m = corner.recip().expect("checked nonzero");

    let scaled = |i: usize, j: usize| &(&scalings[i] * &scalings[j]) * instance.get(i, j);
    let residual = |i: usize, j: usize| &scaled(i, j) - &m;

    let pivot = (1..n).find(|&i| (1..n).any(|j| !residual(i, j).is_zero()));
    let Some(p) = pivot else {
        return Err(ReduceError::ResidualZero);
    };
    let pivot_diag = residual(p, p);
    if pivot_diag.is_zero() {
        return Err(ReduceError::ResidualNotRankOne { row: p, col: p });
    }
    let k = pivot_diag.recip().expect("checked nonzero");
    let x: Vec<Rational> = (1..n).map(|i| residual(i, p)).collect();

    for i in 1..n {
        for j in 1..n {
            let product = &(&k * &x[i - 1]) * &x[j - 1];
            if residual(i, j) != product {
                return Err(ReduceError::ResidualNotRankOne { row: i, col: j });
            }
        }
    }

    let reduced = ReducedProblem { k, m, x, scalings };
    debug_assert_eq!(&reduced.reconstruct(), instance);
    Ok(reduced)
}

/// Componentwise lengths must agree.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("componentwise rotation needs equal lengths; got {xs} and {ys}")]
pub struct LengthMismatch {
    pub xs: usize,
    pub ys: usize,
}

/// Rotates two equal-length lists componentwise. Every pair sum
/// `x_i·x_j + y_i·y_j` scales by `c² + s²`, so a unit-norm rotation
/// preserves all of them at once.
pub fn pythagorean_rotate(
    xs: &[Rational],
    ys: &[Rational],
    rot: &Rotation,
) -> Result<(Vec<Rational>, Vec<Rational>), LengthMismatch> {
    if xs.len() != ys.len() {
        return Err(LengthMismatch {
            xs: xs.len(),
            ys: ys.len(),
        });
    }
    let mut xo = Vec::with_capacity(xs.len());
    let mut yo = Vec::with_capacity(ys.len());
    for (x, y) in xs.iter().zip(ys) {
        xo.push(&(&rot.c * x) + &(&rot.s * y));
        yo.push(&(&rot.c * y) - &(&rot.s * x));
    }
    Ok((xo, yo))
}
