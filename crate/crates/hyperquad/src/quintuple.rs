//! Regular Diophantine quintuples.
//!
//! The quintuple story parallels the quadruple one: a symmetric quintic
//! regularity polynomial, factored forms that complete the square in one
//! variable, and an extension taking any Diophantine quadruple to two
//! rational roots. A ten-variable generalization splits each element into an
//! `x`/`y` pair; it reduces to the five-variable polynomial at unit `y` and,
//! unlike every other polynomial here, is not symmetric under swapping the
//! two halves.

use crate::arith::Rational;
use crate::jsonio::{obj_field, rat_array, rat_to_value, JsonError};
use crate::poly::{Poly, Var};
use crate::quadruple::{p4_of, ExtensionError};
use crate::report::IdentityReport;
use crate::ring::{ring_int, ring_product, ring_sum, Ring};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Split-variable input for the ten-variable quintuple polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuintupleVars {
    pub x: [Rational; 5],
    pub y: [Rational; 5],
}

impl QuintupleVars {
    pub fn from_json(v: &Value) -> Result<QuintupleVars, JsonError> {
        Ok(QuintupleVars {
            x: rat_array(obj_field(v, "x", "quintuple variables")?, "x")?,
            y: rat_array(obj_field(v, "y", "quintuple variables")?, "y")?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "x": self.x.iter().map(rat_to_value).collect::<Vec<_>>(),
            "y": self.y.iter().map(rat_to_value).collect::<Vec<_>>(),
        })
    }
}

fn product_omitting<T: Ring>(v: &[T], skip: usize) -> T {
    ring_product(
        v.iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, t)| t.clone()),
    )
}

/// Regularity polynomial of a quintuple over any commutative ring.
pub(crate) fn p5_of<T: Ring>(v: &[T; 5]) -> T {
    let two = ring_int::<T>(2);
    let four = ring_int::<T>(4);
    let product = ring_product(v.iter().cloned());
    let sum = ring_sum(v.iter().cloned());
    let sum_sq = ring_sum(v.iter().map(|t| t.clone() * t.clone()));
    let mut pair_sum = T::zero();
    for i in 0..5 {
        for j in i + 1..5 {
            pair_sum = pair_sum + v[i].clone() * v[j].clone();
        }
    }
    let quad_sum = ring_sum((0..5).map(|i| product_omitting(v, i)));
    product.clone() * product.clone() - two.clone() * product * sum + sum_sq
        - two * pair_sum
        - four.clone() * quad_sum
        - four
}

/// Exact value of the quintuple regularity polynomial; zero exactly on
/// regular quintuples. Symmetric in all five arguments, and equal to the
/// quadruple polynomial when the last argument is zero.
pub fn p5(a: &Rational, b: &Rational, c: &Rational, d: &Rational, e: &Rational) -> Rational {
    p5_of(&[a.clone(), b.clone(), c.clone(), d.clone(), e.clone()])
}

pub fn is_regular_quintuple(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
) -> bool {
    p5(a, b, c, d, e).is_zero()
}

/// The quintuple regularity polynomial in `a,b,c,d,e`.
pub fn p5_poly() -> Poly {
    p5_of(&[
        Poly::var("a"),
        Poly::var("b"),
        Poly::var("c"),
        Poly::var("d"),
        Poly::var("e"),
    ])
}

/// Extends a Diophantine quadruple to the two rational roots of the
/// regularity quintic, larger root first. Requires the element product to
/// differ from 1 (the quadratic degenerates there) and all six pairwise
/// products plus one to be rational squares.
pub fn dujella_extend(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    d: &Rational,
) -> Result<(Rational, Rational), ExtensionError> {
    let v = [a.clone(), b.clone(), c.clone(), d.clone()];
    let product = ring_product(v.iter().cloned());
    if product == Rational::from_i64(1) {
        return Err(ExtensionError::DegenerateProduct);
    }
    let mut radical = Rational::from_i64(2);
    for i in 0..4 {
        for j in i + 1..4 {
            radical = radical * pair_witness(&v[i], &v[j])?;
        }
    }
    let sum = ring_sum(v.iter().cloned());
    let triple_sum: Rational = ring_sum((0..4).map(|i| product_omitting(&v, i)));
    let numerator =
        &(&product * &sum) + &(&triple_sum * Rational::from_i64(2) + sum.clone());
    let denom = (&product - Rational::from_i64(1)).square();
    let scale = denom.recip().expect("nonzero square");
    Ok((
        &(&numerator + &radical) * &scale,
        &(&numerator - &radical) * &scale,
    ))
}

fn pair_witness(x: &Rational, y: &Rational) -> Result<Rational, ExtensionError> {
    let value = &(x * y) + Rational::from_i64(1);
    crate::arith::rational_sqrt_exact(&value).ok_or(ExtensionError::NonSquarePair {
        x: x.clone(),
        y: y.clone(),
        value,
    })
}

/// Ten-variable quintuple polynomial over any commutative ring. The inverse
/// weights of the classical presentation are cleared: each would-be
/// `X·Y²/w_i` term is the genuine monomial product over the complementary
/// indices, so no division occurs.
pub(crate) fn p5_general_of<T: Ring>(x: &[T; 5], y: &[T; 5]) -> T {
    let two = ring_int::<T>(2);
    let four = ring_int::<T>(4);
    let big_x = ring_product(x.iter().cloned());
    let big_y = ring_product(y.iter().cloned());
    let w: Vec<T> = (0..5).map(|i| x[i].clone() * y[i].clone()).collect();
    let y_sq = big_y.clone() * big_y.clone();

    let sum_w_sq = ring_sum(w.iter().map(|t| t.clone() * t.clone()));
    let hat_sum = ring_sum((0..5).map(|i| product_omitting(x, i) * product_omitting(y, i)));
    let mut pair_sum = T::zero();
    for i in 0..5 {
        for j in i + 1..5 {
            pair_sum = pair_sum + w[i].clone() * w[j].clone();
        }
    }
    let sum_w = ring_sum(w.iter().cloned());

    y_sq.clone() * sum_w_sq - four.clone() * big_y.clone() * hat_sum
        - two.clone() * y_sq * pair_sum
        - two * big_x.clone() * big_y.clone() * sum_w
        - four * big_y.clone() * big_y.clone() * big_y
        + big_x.clone() * big_x
}

/// Exact value of the ten-variable polynomial.
pub fn p5_general(v: &QuintupleVars) -> Rational {
    p5_general_of(&v.x, &v.y)
}

fn poly_vars<const N: usize>(prefix: &str) -> [Poly; N] {
    std::array::from_fn(|i| Poly::var(&format!("{prefix}{}", i + 1)))
}

fn general_square_base(x: &[Poly; 5], y: &[Poly; 5], w4_sign: i64) -> Poly {
    let big_x = ring_product(x.iter().cloned());
    let big_y: Poly = ring_product(y.iter().cloned());
    let w: Vec<Poly> = (0..5).map(|i| &x[i] * &y[i]).collect();
    let weighted = &(&(&w[0] + &w[1]) + &w[2]) + &(&w[3].scaled(&w4_sign.into()) - &w[4]);
    &(&big_x + &(&(&w[0] * &w[1]) * &w[2]).scaled(&2.into())) + &(&big_y * &weighted)
}

fn general_square_product(x: &[Poly; 5], y: &[Poly; 5]) -> Poly {
    let face = |i: usize, j: usize| {
        let y_rest = ring_product(
            (0..5)
                .filter(|k| *k != i && *k != j)
                .map(|k| y[k].clone()),
        );
        &(&x[i] * &x[j]) + &y_rest
    };
    let head = (&(&y[0] * &y[1]) * &y[2]).scaled(&4.into());
    &(&head * &(&face(0, 1) * &face(0, 2))) * &(&face(1, 2) * &face(3, 4))
}

/// Symbolically proves the quintuple identity corpus: the completed-square
/// and scaled-root factorizations, the quadruple-extension root form, the
/// specializations down to the quadruple polynomial, the ten-variable square
/// form, and the deliberate x/y asymmetry of the ten-variable polynomial.
pub fn verify_quintuple_identities() -> IdentityReport {
    let mut r = IdentityReport::new("quintuple");
    let v: [Poly; 5] = [
        Poly::var("a"),
        Poly::var("b"),
        Poly::var("c"),
        Poly::var("d"),
        Poly::var("e"),
    ];
    let [a, b, c, d, e] = &v;
    let p5 = p5_of(&v);
    let one = Poly::int(1);
    let f = |s: &Poly, t: &Poly| &(s * t) + &one;

    let abc = &(a * b) * c;
    let base7 = &(&(&ring_product(v.iter().cloned()) + &abc.scaled(&2.into()))
        + &(&(a + b) + c))
        - &(d + e);
    let rhs7 = &base7.pow(2)
        - &(&(&(&f(a, b) * &f(a, c)) * &f(b, c)) * &f(d, e)).scaled(&4.into());
    r.poly_identity("p5-completed-square-form", &p5, &rhs7);

    let e_sq = e.pow(2);
    let base8 = &(&(&(&(&(&e_sq - &(a * e)) - &(b * e)) - &(c * e)) - &(d * e))
        - &Poly::int(2))
        + &(&(&abc * d) * &e_sq);
    let rhs8 = &base8.pow(2)
        - &(&(&f(a, e) * &f(b, e)) * &(&f(c, e) * &f(d, e))).scaled(&4.into());
    r.poly_identity("p5-scaled-root-form-e", &(&e_sq * &p5), &rhs8);

    let quad = [a.clone(), b.clone(), c.clone(), d.clone()];
    let qprod = ring_product(quad.iter().cloned());
    let qsum = ring_sum(quad.iter().cloned());
    let tsum: Poly = ring_sum((0..4).map(|i| product_omitting(&quad, i)));
    let denom = &qprod - &one;
    let base9 = &(&(e * &denom.pow(2)) - &(&(&qprod * &qsum) + &tsum.scaled(&2.into()))) - &qsum;
    let mut six = Poly::int(1);
    for i in 0..4 {
        for j in i + 1..4 {
            six = &six * &f(&quad[i], &quad[j]);
        }
    }
    let rhs9 = &base9.pow(2) - &six.scaled(&4.into());
    r.poly_identity("p5-extension-root-form", &(&denom.pow(2) * &p5), &rhs9);

    let mut at_zero = BTreeMap::new();
    at_zero.insert(Var::new("e"), Poly::default());
    r.poly_identity("p5-at-zero-reduces-to-p4", &p5.substitute(&at_zero), &p4_of(&quad));

    let x: [Poly; 5] = poly_vars("x");
    let y: [Poly; 5] = poly_vars("y");
    let general = p5_general_of(&x, &y);

    let mut unit_y = BTreeMap::new();
    for i in 1..=5 {
        unit_y.insert(Var::new(&format!("y{i}")), Poly::int(1));
    }
    r.poly_identity(
        "p5-general-at-unit-y-reduces-to-p5",
        &general.substitute(&unit_y),
        &p5_of(&x),
    );

    let rhs39 = &general_square_base(&x, &y, -1).pow(2) - &general_square_product(&x, &y);
    r.poly_identity("p5-general-square-form", &general, &rhs39);

    let printed = &general_square_base(&x, &y, 1).pow(2) - &general_square_product(&x, &y);
    let printed_diff = &printed - &general;
    r.finding(
        "p5-general-square-form-printed-sign",
        format!(
            "the square-form base needs the fourth weighted term negated \
             (… + Y·w3 - Y·w4 - Y·w5); with + Y·w4 the square form misses the \
             ten-variable polynomial by {} terms, starting {}",
            printed_diff.term_count(),
            printed_diff.display_truncated(4)
        ),
    );

    let ones: [Rational; 5] = std::array::from_fn(|_| Rational::from_i64(1));
    let ramp: [Rational; 5] = std::array::from_fn(|i| Rational::from_i64(i as i64 + 1));
    let straight = p5_general_of(&ramp, &ones);
    let swapped = p5_general_of(&ones, &ramp);
    r.entry(
        "p5-general-x-y-asymmetry",
        straight != swapped,
        Some(format!(
            "witness point x=(1,2,3,4,5), y=(1,1,1,1,1): {straight} direct, {swapped} swapped"
        )),
    );

    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadruple::{ahs_extend, diophantine_triples, is_diophantine, MTuple};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use std::str::FromStr;

    fn r(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    #[test]
    fn quintic_values_at_known_points() {
        let zero = Rational::from_i64(0);
        assert_eq!(p5(&zero, &zero, &zero, &zero, &zero), r("-4"));
        let (hi, lo) = dujella_extend(&r("1"), &r("3"), &r("8"), &r("120")).unwrap();
        assert_eq!(hi, r("777480/8288641"));
        assert_eq!(lo, r("0"));
        assert!(is_regular_quintuple(&r("1"), &r("3"), &r("8"), &r("120"), &hi));
    }

    #[test]
    fn extension_rejects_degenerate_and_non_square_inputs() {
        assert_eq!(
            dujella_extend(&r("1"), &r("1"), &r("1"), &r("1")),
            Err(ExtensionError::DegenerateProduct)
        );
        assert_eq!(
            dujella_extend(&r("1/2"), &r("2"), &r("1"), &r("1")),
            Err(ExtensionError::DegenerateProduct)
        );
        assert_eq!(
            dujella_extend(&r("1"), &r("2"), &r("3"), &r("4")),
            Err(ExtensionError::NonSquarePair {
                x: r("1"),
                y: r("2"),
                value: r("3"),
            })
        );
    }

    #[test]
    fn quintic_is_symmetric_on_random_permutations() {
        let mut rng = StdRng::seed_from_u64(0x51b5);
        for _ in 0..20 {
            let v: Vec<Rational> = (0..5)
                .map(|_| {
                    let n = rng.gen_range(-20i64..=20);
                    let d = rng.gen_range(1i64..=9);
                    Rational::new(n.into(), d.into()).unwrap()
                })
                .collect();
            let reference = p5(&v[0], &v[1], &v[2], &v[3], &v[4]);
            let mut idx = [0usize, 1, 2, 3, 4];
            for _ in 0..20 {
                idx.shuffle(&mut rng);
                assert_eq!(
                    p5(&v[idx[0]], &v[idx[1]], &v[idx[2]], &v[idx[3]], &v[idx[4]]),
                    reference
                );
            }
        }
    }

    #[test]
    fn quadruples_from_the_triple_corpus_extend_to_quintuples() {
        for [a, b, c] in diophantine_triples(40) {
            let (d, _) = ahs_extend(&a, &b, &c).unwrap();
            let (e, _) = dujella_extend(&a, &b, &c, &d).unwrap();
            assert!(p5(&a, &b, &c, &d, &e).is_zero());
            let t = MTuple::new(vec![a, b, c, d, e]);
            assert!(is_diophantine(&t).pass);
        }
    }

    #[test]
    fn ten_variable_polynomial_specializes_and_breaks_symmetry() {
        let ones: [Rational; 5] = std::array::from_fn(|_| Rational::from_i64(1));
        let ramp: [Rational; 5] = std::array::from_fn(|i| Rational::from_i64(i as i64 + 1));
        assert_eq!(p5_general_of(&ramp, &ones), r("9585"));
        assert_eq!(
            p5_general_of(&ramp, &ones),
            p5(&ramp[0], &ramp[1], &ramp[2], &ramp[3], &ramp[4])
        );
        assert_eq!(p5_general_of(&ones, &ramp), r("-8703119"));

        let mut rng = StdRng::seed_from_u64(0x105e);
        for _ in 0..20 {
            let y: [Rational; 5] = std::array::from_fn(|_| {
                Rational::from_i64(rng.gen_range(-9i64..=9))
            });
            let zero: [Rational; 5] = std::array::from_fn(|_| Rational::from_i64(0));
            let y_product = y.iter().fold(Rational::from_i64(1), |acc, t| &acc * t);
            let expected = -(y_product.pow(3) * Rational::from_i64(4));
            assert_eq!(p5_general_of(&zero, &y), expected);
        }
    }

    #[test]
    fn identity_suite_passes() {
        let report = verify_quintuple_identities();
        assert!(report.all_pass(), "{}", report.render());
        assert_eq!(report.entries.len(), 7);
        assert_eq!(report.findings.len(), 1);
    }

    #[test]
    fn vars_json_round_trips() {
        let v = QuintupleVars {
            x: std::array::from_fn(|i| Rational::from_i64(i as i64 + 1)),
            y: std::array::from_fn(|_| Rational::from_i64(1)),
        };
        let j = v.to_json();
        assert_eq!(j["x"][4], "5");
        assert_eq!(QuintupleVars::from_json(&j).unwrap(), v);
        let bad = serde_json::json!({ "x": ["1","2","3","4"], "y": ["1","1","1","1","1"] });
        assert!(QuintupleVars::from_json(&bad).is_err());
    }
}
