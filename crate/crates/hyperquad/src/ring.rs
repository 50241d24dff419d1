//! Scalar abstraction shared by the numeric and symbolic layers.
//!
//! Every closed formula in this crate (regularity quartic and quintic,
//! hyperdeterminant, face determinants, tensor contractions) is written once
//! against the [`Ring`] bound and instantiated twice: at [`crate::Rational`]
//! for computation and at [`crate::Poly`] for the symbolic identity proofs.
//! Keeping a single source for each formula means the thing the proofs certify
//! is literally the code that runs.

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Exact commutative ring scalar with by-value arithmetic.
pub trait Ring:
    Clone
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Small nonnegative integer constant lifted into an arbitrary ring.
pub fn ring_int<T: Ring>(n: u32) -> T {
    let mut acc = T::zero();
    let mut bit = T::one();
    let mut rest = n;
    while rest > 0 {
        if rest & 1 == 1 {
            acc = acc + bit.clone();
        }
        bit = bit.clone() + bit;
        rest >>= 1;
    }
    acc
}

/// Sum of an iterator of ring values.
pub fn ring_sum<T: Ring>(it: impl IntoIterator<Item = T>) -> T {
    it.into_iter().fold(T::zero(), |acc, v| acc + v)
}

/// Product of an iterator of ring values.
pub fn ring_product<T: Ring>(it: impl IntoIterator<Item = T>) -> T {
    it.into_iter().fold(T::one(), |acc, v| acc * v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn ring_int_builds_small_constants() {
        for n in 0..40u32 {
            assert_eq!(ring_int::<Rational>(n), Rational::from_i64(i64::from(n)));
        }
    }

    #[test]
    fn sums_and_products_fold_exactly() {
        let vals: Vec<Rational> = (1..=5).map(Rational::from_i64).collect();
        assert_eq!(ring_sum(vals.clone()), Rational::from_i64(15));
        assert_eq!(ring_product(vals), Rational::from_i64(120));
    }
}
