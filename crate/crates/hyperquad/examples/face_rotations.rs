//! Rotate a solution of the generalized system without leaving it.
//!
//! Each of the three rotation families mixes one opposite pair of face
//! determinants and fixes the other four; with a unit-norm rational
//! rotation (c, s) the square-root witnesses transport exactly, so a
//! regular solution with certified faces stays regular and certified.
//!
//! Run with `cargo run --example face_rotations`.

use hyperquad::hypermatrix::{
    p4h, rotate, GenQuadruple, Rotation, RotationVariant, FACE_LABELS,
};
use hyperquad::Rational;
use num_traits::Zero;
use std::str::FromStr;

fn r(s: &str) -> Rational {
    Rational::from_str(s).unwrap()
}

fn main() {
    let classical = GenQuadruple {
        x: [r("1"), r("3"), r("8"), r("120")],
        y: [r("1"), r("1"), r("1"), r("1")],
        z: Some([r("2"), r("3"), r("11"), r("5"), r("19"), r("31")]),
    };
    let rot = Rotation {
        c: r("3/5"),
        s: r("4/5"),
    };
    println!("rotating the classical solution by (c, s) = (3/5, 4/5):\n");

    for variant in RotationVariant::ALL {
        let rotated = rotate(&classical, variant, &rot).expect("unit norm, regular");
        assert!(p4h(&rotated.x, &rotated.y).is_zero());

        println!("variant {variant:?}:");
        println!(
            "  x = ({}, {}, {}, {})",
            rotated.x[0], rotated.x[1], rotated.x[2], rotated.x[3]
        );
        println!(
            "  y = ({}, {}, {}, {})",
            rotated.y[0], rotated.y[1], rotated.y[2], rotated.y[3]
        );
        let faces = rotated.face_values();
        let witnesses = rotated.z.as_ref().expect("witnesses transported");
        for (f, label) in FACE_LABELS.iter().enumerate() {
            assert_eq!(witnesses[f].square(), faces[f]);
            println!("  F{label} = {} = ({})^2", faces[f], witnesses[f]);
        }
        println!();
    }

    let stretched = Rotation {
        c: r("1"),
        s: r("1"),
    };
    let refused = rotate(&classical, RotationVariant::A, &stretched);
    println!(
        "a non-unit rotation is refused when witnesses ride along:\n  {}",
        refused.unwrap_err()
    );
}
