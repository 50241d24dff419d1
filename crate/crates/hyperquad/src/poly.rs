//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The canonical form is unique: terms are kept in a graded-lexicographic
//! order with no zero coefficients and no zero exponents, so structural
//! equality decides polynomial identity. Every identity this crate certifies
//! reduces to expanding both sides into [`Poly`] values and comparing them.
//! Coefficients are integers rather than rationals; identities with rational
//! prefactors are stated in cleared form by their callers.

use crate::arith::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Opaque interned variable name. Names order as byte strings, which fixes
/// the lexicographic part of the term order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(String);

impl Var {
    pub fn new(name: impl Into<String>) -> Var {
        Var(name.into())
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Product of variables with positive integer exponents; the empty product
/// is the constant monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<Var, u32>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(name: &str, exp: u32) -> Monomial {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(Var::new(name), exp);
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| u64::from(e)).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = (&Var, u32)> {
        self.exps.iter().map(|(v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (v, &e) in &other.exps {
            *exps.entry(v.clone()).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Splits off one variable: its exponent here, and the monomial with
    /// that variable removed.
    pub fn split_var(&self, v: &Var) -> (u32, Monomial) {
        let mut exps = self.exps.clone();
        let e = exps.remove(v).unwrap_or(0);
        (e, Monomial { exps })
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: higher total degree first; ties broken by the
    /// earliest variable (ascending name order) with the larger exponent.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut lhs = self.exps.iter().peekable();
        let mut rhs = other.exps.iter().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, &ea)), Some(&(vb, &eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        lhs.next();
                        rhs.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            write!(f, "{v}^{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Error raised by [`Poly::eval`] when a variable has no assigned value.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unbound variable {0} during polynomial evaluation")]
pub struct EvalError(pub String);

/// Sparse multivariate polynomial with integer coefficients in canonical
/// form. Structural equality is polynomial identity.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn int(n: i64) -> Poly {
        Poly::integer(BigInt::from(n))
    }

    pub fn integer(n: BigInt) -> Poly {
        Poly::monomial(Monomial::one(), n)
    }

    pub fn var(name: &str) -> Poly {
        Poly::monomial(Monomial::var(name, 1), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(m, coeff);
        }
        Poly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, BigInt)>) -> Poly {
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in iter {
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Largest total degree among terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn scaled(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution of variables by polynomials; unbound
    /// variables pass through unchanged.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly>) -> Poly {
        let mut pow_cache: BTreeMap<(Var, u32), Poly> = BTreeMap::new();
        let mut acc = Poly::default();
        for (m, c) in &self.terms {
            let mut term = Poly::integer(c.clone());
            for (v, e) in m.vars() {
                let factor = match bindings.get(v) {
                    Some(rep) => pow_cache
                        .entry((v.clone(), e))
                        .or_insert_with(|| rep.pow(e))
                        .clone(),
                    None => Poly::monomial(Monomial::var(v.name(), e), BigInt::one()),
                };
                term = &term * &factor;
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Exact evaluation; every variable of the polynomial must be bound.
    pub fn eval(&self, assignment: &BTreeMap<Var, Rational>) -> Result<Rational, EvalError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = Rational::from_integer(c.clone());
            for (v, e) in m.vars() {
                let val = assignment
                    .get(v)
                    .ok_or_else(|| EvalError(v.name().to_owned()))?;
                term = term * val.pow(e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Views the polynomial as a univariate polynomial in `v`: entry `e` of
    /// the result is the coefficient polynomial of `v^e`. The zero
    /// polynomial yields an empty vector.
    pub fn coefficients_in(&self, v: &Var) -> Vec<Poly> {
        let mut buckets: Vec<Poly> = Vec::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_var(v);
            let e = e as usize;
            while buckets.len() <= e {
                buckets.push(Poly::default());
            }
            buckets[e] = &buckets[e] + &Poly::monomial(rest, c.clone());
        }
        buckets
    }

    /// Canonical rendering capped at `max_terms` terms, for report details
    /// about large difference polynomials.
    pub fn display_truncated(&self, max_terms: usize) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (shown, (m, c)) in self.terms.iter().rev().enumerate() {
            if shown == max_terms {
                out.push_str(&format!(" ... ({} more terms)", self.terms.len() - shown));
                break;
            }
            if shown > 0 {
                out.push(' ');
            }
            push_term(&mut out, m, c);
        }
        out
    }
}

fn push_term(out: &mut String, m: &Monomial, c: &BigInt) {
    out.push(if c.is_negative() { '-' } else { '+' });
    let mag = c.abs();
    if m.is_one() {
        out.push_str(&mag.to_string());
    } else {
        out.push_str(&format!("{mag}·{m}"));
    }
}

impl fmt::Display for Poly {
    /// Terms in descending graded-lex order, each as `±c·v^e*w^e…`; the zero
    /// polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_truncated(usize::MAX))
    }
}

fn add_ref(lhs: &Poly, rhs: &Poly) -> Poly {
    let mut terms = lhs.terms.clone();
    for (m, c) in &rhs.terms {
        let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry += c;
    }
    terms.retain(|_, c| !c.is_zero());
    Poly { terms }
}

fn sub_ref(lhs: &Poly, rhs: &Poly) -> Poly {
    let mut terms = lhs.terms.clone();
    for (m, c) in &rhs.terms {
        let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
        *entry -= c;
    }
    terms.retain(|_, c| !c.is_zero());
    Poly { terms }
}

fn mul_ref(lhs: &Poly, rhs: &Poly) -> Poly {
    let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
    for (ma, ca) in &lhs.terms {
        for (mb, cb) in &rhs.terms {
            let m = ma.mul(mb);
            let entry = terms.entry(m).or_insert_with(BigInt::zero);
            *entry += ca * cb;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Poly { terms }
}

macro_rules! impl_poly_binop {
    ($trait:ident, $method:ident, $core:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $core(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $core(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $core(self, &rhs)
            }
        }
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $core(self, rhs)
            }
        }
    };
}

impl_poly_binop!(Add, add, add_ref);
impl_poly_binop!(Sub, sub, sub_ref);
impl_poly_binop!(Mul, mul, mul_ref);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scaled(&BigInt::from(-1))
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scaled(&BigInt::from(-1))
    }
}

impl Zero for Poly {
    fn zero() -> Poly {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Poly {
        Poly::int(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::str::FromStr;

    fn v(name: &str) -> Poly {
        Poly::var(name)
    }

    #[test]
    fn addition_cancels_and_merges() {
        let x = v("x");
        assert!((&x + &(-&x)).is_zero());
        assert_eq!(&(&x + Poly::int(1)) + &(&x - Poly::int(1)), x.scaled(&2.into()));
        assert_eq!(&x * &v("y"), &v("y") * &x);
        assert_eq!(&(&x * &v("y")) + &(&v("y") * &x), (&x * &v("y")).scaled(&2.into()));
    }

    #[test]
    fn multiplication_expands() {
        let (x, y) = (v("x"), v("y"));
        assert_eq!(&(&x + &y) * &(&x - &y), &(&x * &x) - &(&y * &y));
        assert!((&x * &Poly::default()).is_zero());
        let sq = (&x + Poly::one()).pow(2);
        assert_eq!(sq, &(&x * &x) + &(x.scaled(&2.into()) + Poly::one()));
    }

    #[test]
    fn substitution_examples() {
        let p = &(&v("x") * &v("x")) + &v("y");
        let mut b = BTreeMap::new();
        b.insert(Var::new("y"), Poly::one());
        assert_eq!(p.substitute(&b), &(&v("x") * &v("x")) + &Poly::one());

        let xy = &v("x") * &v("y");
        let mut b2 = BTreeMap::new();
        b2.insert(Var::new("x"), v("y"));
        assert_eq!(xy.substitute(&b2), &v("y") * &v("y"));
    }

    #[test]
    fn evaluation_is_exact_and_names_unbound_variables() {
        let p = &(&v("x") * &v("x")) + &v("y");
        let mut asgn = BTreeMap::new();
        asgn.insert(Var::new("x"), Rational::from_i64(2));
        asgn.insert(Var::new("y"), Rational::from_i64(-4));
        assert_eq!(p.eval(&asgn), Ok(Rational::zero()));
        asgn.remove(&Var::new("y"));
        assert_eq!(p.eval(&asgn), Err(EvalError("y".to_owned())));
    }

    #[test]
    fn display_is_canonical_graded_lex() {
        let p = (&v("x") + Poly::one()).pow(2);
        assert_eq!(p.to_string(), "+1·x^2 +2·x^1 +1");
        let q = &(&v("a") * &v("b")).scaled(&(-4).into()) + &v("b").scaled(&3.into());
        assert_eq!(q.to_string(), "-4·a^1*b^1 +3·b^1");
        assert_eq!(Poly::default().to_string(), "0");
        assert_eq!(
            q.display_truncated(1),
            "-4·a^1*b^1 ... (1 more terms)"
        );
    }

    #[test]
    fn graded_lex_orders_by_degree_then_lex() {
        let m = |s: &str, e: u32| Monomial::var(s, e);
        assert!(m("x", 2) > m("x", 1));
        assert!(m("x", 1) > m("y", 1));
        assert!(m("y", 3) > m("x", 2));
        assert!(m("x", 2) > m("x", 1).mul(&m("y", 1)));
        assert!(m("x", 1).mul(&m("y", 2)) > m("y", 3));
        assert_eq!(m("x", 0), Monomial::one());
    }

    #[test]
    fn coefficient_extraction_views_one_variable() {
        let p = &(&(&v("x") * &v("x")) * &v("y")) + &(&v("x").scaled(&3.into()) - &v("z"));
        let coeffs = p.coefficients_in(&Var::new("x"));
        assert_eq!(coeffs.len(), 3);
        assert_eq!(coeffs[0], -v("z"));
        assert_eq!(coeffs[1], Poly::int(3));
        assert_eq!(coeffs[2], v("y"));
        assert!(Poly::default().coefficients_in(&Var::new("x")).is_empty());
    }

    #[test]
    fn round_trips_between_eval_and_substitute() {
        let p = &(&v("x") * &v("y")) + &(&v("x") + Poly::int(3));
        let q = &(&v("y") * &v("y")) - &Poly::int(2);
        let mut bind = BTreeMap::new();
        bind.insert(Var::new("x"), q.clone());
        let composed = p.substitute(&bind);

        let mut asgn = BTreeMap::new();
        asgn.insert(Var::new("y"), Rational::from_str("7/3").unwrap());
        let qv = q.eval(&asgn).unwrap();
        let mut asgn2 = asgn.clone();
        asgn2.insert(Var::new("x"), qv);
        assert_eq!(composed.eval(&asgn).unwrap(), p.eval(&asgn2).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let term = (
            prop::collection::vec(0u32..=3, 3),
            -5i64..=5,
        );
        prop::collection::vec(term, 0..6).prop_map(|terms| {
            Poly::from_terms(terms.into_iter().map(|(exps, c)| {
                let m = Monomial::var("a", exps[0])
                    .mul(&Monomial::var("b", exps[1]))
                    .mul(&Monomial::var("c", exps[2]));
                (m, BigInt::from(c))
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn degree_of_product_adds(p in arb_poly(), q in arb_poly()) {
            if let (Some(dp), Some(dq)) = (p.total_degree(), q.total_degree()) {
                prop_assert_eq!((&p * &q).total_degree(), Some(dp + dq));
            } else {
                prop_assert!((&p * &q).is_zero());
            }
        }
    }
}
