//! Reduce a rank-2 symmetric matrix with square pair entries to the
//! normal form k*x_i*x_j + m.
//!
//! The first row is normalized to ones by square scalings (so which
//! entries are squares is preserved), the corner fixes the shift m, and
//! the shifted residual factors as a rank-1 product. Squareness questions
//! about the matrix become squareness questions about k*x_i*x_j + m.
//!
//! Run with `cargo run --example rank2_reduction`.

use hyperquad::search::{reduce_rank2, SymmetricMatrixInstance};
use hyperquad::{rational_sqrt_exact, Rational};
use std::str::FromStr;

fn r(s: &str) -> Rational {
    Rational::from_str(s).unwrap()
}

fn main() {
    let matrix = SymmetricMatrixInstance::new(vec![
        vec![r("2"), r("4"), r("9")],
        vec![r("4"), r("10"), r("25")],
        vec![r("9"), r("25"), r("65")],
    ])
    .unwrap();

    let reduced = reduce_rank2(&matrix).expect("rank 2 with square pair entries");
    println!("normal form of the 3x3 instance:");
    println!("  k = {}", reduced.k);
    println!("  m = {}", reduced.m);
    println!(
        "  x = ({}, {})",
        reduced.x[0], reduced.x[1]
    );
    println!(
        "  row scalings = ({}, {}, {})",
        reduced.scalings[0], reduced.scalings[1], reduced.scalings[2]
    );
    assert_eq!(reduced.reconstruct(), matrix);
    println!("  reconstruction matches the input exactly");

    let shifted = &(&(&reduced.k * &reduced.x[0]) * &reduced.x[1]) + &reduced.m;
    let root = rational_sqrt_exact(&shifted).expect("this product lands on a square");
    println!("\nk x1 x2 + m = {shifted} = ({root})^2,");
    println!("the normal-form image of the square entry e23 = 25 = 5^2");

    println!("\nobstructions are reported, not guessed around:");
    for entries in [
        vec![vec![r("1"), r("2")], vec![r("2"), r("1")]],
        vec![
            vec![r("1"), r("1"), r("1")],
            vec![r("1"), r("2"), r("1")],
            vec![r("1"), r("1"), r("3")],
        ],
    ] {
        let instance = SymmetricMatrixInstance::new(entries).unwrap();
        println!("  {}", reduce_rank2(&instance).unwrap_err());
    }
}
