//! The 2x2x2 hyperdeterminant and its six face determinants, computed on
//! the hypermatrix that encodes Fermat's quadruple.
//!
//! A quadruple with elements x and unit second factors y embeds as eight
//! entries a_ijk; the hyperdeterminant of that hypermatrix is exactly the
//! regularity polynomial of the solution, and the face determinants are
//! the six pairwise products the square conditions talk about.
//!
//! Run with `cargo run --example hyperdeterminant_basics`.

use hyperquad::hypermatrix::{
    face_determinants, from_xy, hyperdet, p4h, pencil_slices, to_xy, Axis, FACE_LABELS,
};
use hyperquad::{rational_sqrt_exact, Rational};

fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn main() {
    let x = [int(1), int(3), int(8), int(120)];
    let y = [int(1), int(1), int(1), int(1)];
    let a = from_xy(&x, &y);

    println!("entries a_ijk of the embedded quadruple:");
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                print!("  a{i}{j}{k} = {}", a.get(i, j, k));
            }
        }
    }
    println!();

    println!("\nhyperdet = {}", hyperdet(&a));
    assert_eq!(hyperdet(&a), p4h(&x, &y));
    println!("which equals the eight-variable polynomial of (x, y): regular");

    println!("\nface determinants (all perfect squares for this solution):");
    for (label, face) in FACE_LABELS.iter().zip(face_determinants(&a)) {
        let root = rational_sqrt_exact(&face).expect("squares");
        println!("  F{label} = {face} = {root}^2");
    }

    let (round_x, round_y) = to_xy(&a);
    assert_eq!(round_x, x);
    assert_eq!(round_y, y);

    println!("\npencil view along each axis: det(S0 + t S1) is a quadratic in t");
    println!("whose discriminant is the hyperdeterminant; here it vanishes, so");
    println!("the two slice determinants multiply to a square of the mixed term:");
    for axis in Axis::ALL {
        let (s0, s1) = pencil_slices(&a, axis);
        let det = |m: &[[Rational; 2]; 2]| &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        println!(
            "  axis {}: det S0 = {}, det S1 = {}",
            axis.index() + 1,
            det(&s0),
            det(&s1)
        );
    }
}
