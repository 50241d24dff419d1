//! Fermat's quadruple from scratch: extend the triple {1, 3, 8} to a
//! quadruple, certify every pairwise square condition, and push on to a
//! rational quintuple.
//!
//! Run with `cargo run --example fermat_sequence`.

use hyperquad::quadruple::{ahs_extend, is_diophantine, is_regular_quadruple, MTuple};
use hyperquad::quintuple::{dujella_extend, p5};
use hyperquad::Rational;
use num_traits::Zero;

fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn main() {
    let (a, b, c) = (int(1), int(3), int(8));
    let (d, other) = ahs_extend(&a, &b, &c).expect("{1,3,8} is a Diophantine triple");
    println!("extending {{1, 3, 8}}: the quadratic has roots {d} and {other}");

    let quadruple = MTuple::new(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
    let report = is_diophantine(&quadruple);
    println!("\npairwise products, each one less than a square:");
    for pair in &report.pairs {
        let z = pair.witness.as_ref().expect("all pairs certified");
        println!(
            "  e{} * e{} + 1 = {} = {z}^2",
            pair.i + 1,
            pair.j + 1,
            pair.product_plus_one
        );
    }
    assert!(is_regular_quadruple(&a, &b, &c, &d));
    println!("\n{{1, 3, 8, 120}} is regular: the quadruple polynomial vanishes");

    let (e, at_zero) = dujella_extend(&a, &b, &c, &d).expect("product is not 1");
    println!("\nextending the quadruple: roots {e} and {at_zero}");
    println!("(the zero root is forced by regularity)");
    assert!(p5(&a, &b, &c, &d, &e).is_zero());

    let quintuple = MTuple::new(vec![a, b, c, d, e]);
    let report = is_diophantine(&quintuple);
    assert!(report.pass);
    println!("\nall ten pairs of the quintuple certify; the new witnesses:");
    for pair in report.pairs.iter().filter(|p| p.j == 4) {
        println!(
            "  e{} * e5 + 1 = ({})^2",
            pair.i + 1,
            pair.witness.as_ref().unwrap()
        );
    }
}
