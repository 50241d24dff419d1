//! The covariant calculus on a concrete hypermatrix: quadratic covariants,
//! invariants, the cubic covariant, and where the square identity lives.
//!
//! All contractions use the 2x2 alternating tensor. On the embedded
//! classical quadruple the invariant vanishes (the hypermatrix is
//! singular) and the diagonal square identity closes to zero exactly.
//!
//! Run with `cargo run --example covariant_calculus`.

use hyperquad::covariants::{covariant_set, invariant, square_identity_components};
use hyperquad::hypermatrix::{from_xy, hyperdet};
use hyperquad::Rational;
use num_traits::Zero;

fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn main() {
    let x = [int(1), int(3), int(8), int(120)];
    let y = [int(1), int(1), int(1), int(1)];
    let a = from_xy(&x, &y);
    let cov = covariant_set(&a);

    println!("quadratic covariants of the embedded classical quadruple:");
    println!("  s = [[{}, {}], [{}, {}]]", cov.s[0][0], cov.s[0][1], cov.s[1][0], cov.s[1][1]);
    println!("  t = [[{}, {}], [{}, {}]]", cov.t[0][0], cov.t[0][1], cov.t[1][0], cov.t[1][1]);
    println!("  u = [[{}, {}], [{}, {}]]", cov.u[0][0], cov.u[0][1], cov.u[1][0], cov.u[1][1]);

    for which in 1..=4 {
        println!("  I{which} = {}", invariant(&a, which));
    }
    assert!(invariant(&a, 2).is_zero());
    println!("(I2 = -2 hyperdet, and this hypermatrix is singular)");

    let b111 = cov.b.get(1, 1, 1);
    let (u11, t11, s11) = (&cov.u[1][1], &cov.t[1][1], &cov.s[1][1]);
    println!("\ndiagonal square identity at (1,1,1):");
    println!("  b111 = {b111}, u11 = {u11}, t11 = {t11}, s11 = {s11}");
    let two = int(2);
    let closure = &(&two * &b111.square()) + &(&(u11 * t11) * s11);
    println!("  2 b111^2 + u11 t11 s11 = {closure}");
    assert!(closure.is_zero());
    assert!(hyperdet(&a).is_zero());
    println!("matching 2 H a111^2 with H = hyperdet = 0");

    let components = square_identity_components();
    let holding = components
        .iter()
        .filter(|(_, lhs, rhs, _)| lhs == rhs)
        .count();
    let in_domain = components.iter().filter(|(_, _, _, near)| *near).count();
    println!(
        "\nsymbolically, the square identity 2H a a = 2 b b + u t s holds on \
         {holding} of {} ordered components;",
        components.len()
    );
    println!(
        "exactly the {in_domain} whose two index vectors differ in at most one slot \
         (the diagonal and near-diagonal)."
    );
}
