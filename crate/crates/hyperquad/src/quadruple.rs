//! Regular Diophantine quadruples.
//!
//! A tuple is Diophantine when the product of any two distinct elements is
//! one less than a rational square. Quadruples come with a symmetric quartic
//! regularity polynomial whose zeros are the *regular* quadruples; solving
//! it for one variable extends any Diophantine triple by two rational roots.
//! This module carries the polynomial, its factored forms, the pairwise
//! square checker, and the triple extension, all in exact arithmetic.

use crate::arith::{rational_sqrt_exact, Rational};
use crate::jsonio::{obj_field, rat_from_value, rat_to_value, rat_vec, JsonError};
use crate::poly::Poly;
use crate::report::IdentityReport;
use crate::ring::{ring_int, ring_product, ring_sum, Ring};
use num_traits::Zero;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

/// Ordered tuple of rationals with optional pairwise square-root witnesses,
/// keyed by index pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MTuple {
    pub elements: Vec<Rational>,
    pub witnesses: BTreeMap<(usize, usize), Rational>,
}

impl MTuple {
    pub fn new(elements: Vec<Rational>) -> MTuple {
        MTuple {
            elements,
            witnesses: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.elements.len()
    }

    pub fn with_witnesses(mut self, witnesses: BTreeMap<(usize, usize), Rational>) -> MTuple {
        self.witnesses = witnesses;
        self
    }

    /// Parses `{"elements": ["1","3"], "witnesses": {"0,1": "2"}}`. Witnesses
    /// are optional; present ones must be nonnegative and square to
    /// element-product plus one, exactly.
    pub fn from_json(v: &Value) -> Result<MTuple, JsonError> {
        let elements = rat_vec(obj_field(v, "elements", "tuple")?, "elements")?;
        if !(2..=6).contains(&elements.len()) {
            return Err(JsonError::new(format!(
                "elements: expected between 2 and 6 entries, found {}",
                elements.len()
            )));
        }
        let mut witnesses = BTreeMap::new();
        if let Some(w) = v.as_object().and_then(|o| o.get("witnesses")) {
            let map = w
                .as_object()
                .ok_or_else(|| JsonError::new("witnesses: expected an object"))?;
            for (key, val) in map {
                let (i, j) = parse_pair_key(key, elements.len())?;
                let z = rat_from_value(val, &format!("witnesses[\"{key}\"]"))?;
                let expected = &(&elements[i] * &elements[j]) + Rational::from_i64(1);
                if z.is_negative() || z.square() != expected {
                    return Err(JsonError::new(format!(
                        "witnesses[\"{key}\"]: {z} is not the nonnegative square root of {expected}"
                    )));
                }
                witnesses.insert((i, j), z);
            }
        }
        Ok(MTuple {
            elements,
            witnesses,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert(
            "elements".to_owned(),
            Value::Array(self.elements.iter().map(rat_to_value).collect()),
        );
        if !self.witnesses.is_empty() {
            let mut w = Map::new();
            for ((i, j), z) in &self.witnesses {
                w.insert(format!("{i},{j}"), rat_to_value(z));
            }
            obj.insert("witnesses".to_owned(), Value::Object(w));
        }
        Value::Object(obj)
    }
}

fn parse_pair_key(key: &str, len: usize) -> Result<(usize, usize), JsonError> {
    let bad = || JsonError::new(format!("witnesses: key \"{key}\" is not \"i,j\" with i < j < {len}"));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let i: usize = a.parse().map_err(|_| bad())?;
    let j: usize = b.parse().map_err(|_| bad())?;
    if i < j && j < len {
        Ok((i, j))
    } else {
        Err(bad())
    }
}

/// Outcome for one pair: the product plus one and its exact square root,
/// when that root exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    pub product_plus_one: Rational,
    pub witness: Option<Rational>,
}

/// Per-pair report from [`is_diophantine`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineReport {
    pub pass: bool,
    pub pairs: Vec<PairCheck>,
}

impl DiophantineReport {
    /// Witness map for the passing pairs, keyed like [`MTuple::witnesses`].
    pub fn witnesses(&self) -> BTreeMap<(usize, usize), Rational> {
        self.pairs
            .iter()
            .filter_map(|p| p.witness.clone().map(|z| ((p.i, p.j), z)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.pass,
            "pairs": self.pairs.iter().map(|p| {
                let mut obj = json!({
                    "i": p.i,
                    "j": p.j,
                    "product_plus_one": rat_to_value(&p.product_plus_one),
                });
                if let Some(z) = &p.witness {
                    obj["witness"] = rat_to_value(z);
                }
                obj
            }).collect::<Vec<_>>(),
        })
    }
}

/// Checks every pair of distinct elements for the square condition and
/// computes canonical (nonnegative) witnesses where it holds.
pub fn is_diophantine(t: &MTuple) -> DiophantineReport {
    let mut pairs = Vec::new();
    let mut pass = true;
    for i in 0..t.elements.len() {
        for j in i + 1..t.elements.len() {
            let product_plus_one =
                &(&t.elements[i] * &t.elements[j]) + Rational::from_i64(1);
            let witness = rational_sqrt_exact(&product_plus_one);
            pass &= witness.is_some();
            pairs.push(PairCheck {
                i,
                j,
                product_plus_one,
                witness,
            });
        }
    }
    DiophantineReport { pass, pairs }
}

/// Regularity polynomial of a quadruple over any commutative ring:
/// the sum of squares minus twice the pairwise products, minus four times
/// the full product, minus four.
pub(crate) fn p4_of<T: Ring>(v: &[T; 4]) -> T {
    let two = ring_int::<T>(2);
    let four = ring_int::<T>(4);
    let sum_sq = ring_sum(v.iter().map(|t| t.clone() * t.clone()));
    let mut pair_sum = T::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            pair_sum = pair_sum + v[i].clone() * v[j].clone();
        }
    }
    let product = ring_product(v.iter().cloned());
    sum_sq - two * pair_sum - four.clone() * product - four
}

/// Exact value of the quadruple regularity polynomial; zero exactly on
/// regular quadruples. Symmetric in all four arguments.
pub fn p4(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Rational {
    p4_of(&[a.clone(), b.clone(), c.clone(), d.clone()])
}

pub fn is_regular_quadruple(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> bool {
    p4(a, b, c, d).is_zero()
}

/// The regularity polynomial as a canonical polynomial in `a,b,c,d`.
pub fn p4_poly() -> Poly {
    p4_of(&[
        Poly::var("a"),
        Poly::var("b"),
        Poly::var("c"),
        Poly::var("d"),
    ])
}

/// Errors from the extension operations, which require square pairwise
/// products and a nondegenerate quadratic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtensionError {
    #[error("product {x}·{y} + 1 = {value} is not a rational square")]
    NonSquarePair {
        x: Rational,
        y: Rational,
        value: Rational,
    },
    #[error("element product is 1, so the extension quadratic degenerates")]
    DegenerateProduct,
}

fn pair_witness(x: &Rational, y: &Rational) -> Result<Rational, ExtensionError> {
    let value = &(x * y) + Rational::from_i64(1);
    rational_sqrt_exact(&value).ok_or(ExtensionError::NonSquarePair {
        x: x.clone(),
        y: y.clone(),
        value,
    })
}

/// Extends a Diophantine triple to the two rational roots of the regularity
/// quadratic, larger root first. Every returned root keeps the Diophantine
/// property with each of `a,b,c`; zero and negative roots are returned as-is
/// for callers to filter.
pub fn ahs_extend(
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<(Rational, Rational), ExtensionError> {
    let zab = pair_witness(a, b)?;
    let zac = pair_witness(a, c)?;
    let zbc = pair_witness(b, c)?;
    let base = &(&(a + b) + c) + &(a * b * c) * Rational::from_i64(2);
    let radical = &(&zab * &zac) * &zbc * Rational::from_i64(2);
    Ok((&base + &radical, &base - &radical))
}

fn pair_form(v: &[Poly; 4], i: usize, j: usize, k: usize, l: usize) -> Poly {
    let lhs = (&(&v[k] + &v[l]) - &(&v[i] + &v[j])).pow(2);
    let fi = &(&v[i] * &v[j]) + Poly::int(1);
    let fk = &(&v[k] * &v[l]) + Poly::int(1);
    &lhs - &(&fi * &fk).scaled(&4.into())
}

fn root_form(v: &[Poly; 4], m: usize) -> Poly {
    let o: Vec<&Poly> = (0..4).filter(|&i| i != m).map(|i| &v[i]).collect();
    let head = &(&(&v[m] - o[0]) - o[1]) - o[2];
    let lhs = (&head - &(o[0] * o[1] * o[2]).scaled(&2.into())).pow(2);
    let f01 = &(o[0] * o[1]) + Poly::int(1);
    let f02 = &(o[0] * o[2]) + Poly::int(1);
    let f12 = &(o[1] * o[2]) + Poly::int(1);
    &lhs - &(&(&f01 * &f02) * &f12).scaled(&4.into())
}

fn scaled_root_form(v: &[Poly; 4], m: usize) -> Poly {
    let o: Vec<&Poly> = (0..4).filter(|&i| i != m).map(|i| &v[i]).collect();
    let vm_sq = v[m].pow(2);
    let head = &(&(&vm_sq - &(o[0] * &v[m])) - &(o[1] * &v[m])) - &(o[2] * &v[m]);
    let lhs = (&head - Poly::int(2)).pow(2);
    let f0 = &(o[0] * &v[m]) + Poly::int(1);
    let f1 = &(o[1] * &v[m]) + Poly::int(1);
    let f2 = &(o[2] * &v[m]) + Poly::int(1);
    &lhs - &(&(&f0 * &f1) * &f2).scaled(&4.into())
}

/// Symbolically proves the factored forms of the regularity polynomial:
/// the three pair-grouped forms, the four completed squares in one
/// variable, the four squared-variable-scaled forms, and the canonical
/// termwise expansion.
pub fn verify_quadruple_identities() -> IdentityReport {
    let mut r = IdentityReport::new("quadruple");
    let v = [
        Poly::var("a"),
        Poly::var("b"),
        Poly::var("c"),
        Poly::var("d"),
    ];
    let p4 = p4_of(&v);

    r.poly_identity("p4-pair-form-ab-cd", &p4, &pair_form(&v, 0, 1, 2, 3));
    r.poly_identity("p4-pair-form-ac-bd", &p4, &pair_form(&v, 1, 3, 2, 0));
    r.poly_identity("p4-pair-form-ad-bc", &p4, &pair_form(&v, 0, 3, 2, 1));

    for (m, name) in [
        (0, "p4-root-form-a"),
        (1, "p4-root-form-b"),
        (2, "p4-root-form-c"),
        (3, "p4-root-form-d"),
    ] {
        r.poly_identity(name, &p4, &root_form(&v, m));
    }

    for (m, name) in [
        (0, "p4-scaled-root-form-a"),
        (1, "p4-scaled-root-form-b"),
        (2, "p4-scaled-root-form-c"),
        (3, "p4-scaled-root-form-d"),
    ] {
        r.poly_identity(name, &(&v[m].pow(2) * &p4), &scaled_root_form(&v, m));
    }

    let mut expanded = Poly::int(-4);
    for t in &v {
        expanded = &expanded + &t.pow(2);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            expanded = &expanded - &(&v[i] * &v[j]).scaled(&2.into());
        }
    }
    expanded = &expanded - &(&(&v[0] * &v[1]) * &(&v[2] * &v[3])).scaled(&4.into());
    r.poly_identity("p4-expanded-form", &p4, &expanded);

    r
}

/// Deterministic corpus of integer Diophantine triples for property tests:
/// pairs with a square product-plus-one extended by the element that turns
/// the pair's witness arithmetic into two more exact squares.
#[cfg(test)]
pub(crate) fn diophantine_triples(count: usize) -> Vec<[Rational; 3]> {
    use crate::arith::integer_sqrt_exact;
    use num_bigint::BigInt;

    let mut out = Vec::new();
    for a in 1i64..=60 {
        for b in a + 1..=240 {
            if let Some(z) = integer_sqrt_exact(&BigInt::from(a * b + 1)) {
                let z: i64 = (&z).try_into().unwrap();
                let c = a + b + 2 * z;
                out.push([
                    Rational::from_i64(a),
                    Rational::from_i64(b),
                    Rational::from_i64(c),
                ]);
                if out.len() == count {
                    return out;
                }
            }
        }
    }
    out
}
