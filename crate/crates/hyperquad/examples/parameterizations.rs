//! Two ways to manufacture solutions of the generalized system.
//!
//! Asymmetric mode: pick y1 and six more values freely; the construction
//! completes them to a regular solution with witnesses on all six faces.
//! Symmetric mode: build the eight entries from three kernel vectors and
//! four coefficients; the hyperdeterminant vanishes identically and every
//! face is a literal square.
//!
//! Run with `cargo run --example parameterizations`.

use hyperquad::hypermatrix::{
    check_generalized_solution, face_determinants, hyperdet, kernel_check, parameterize_asymmetric,
    parameterize_symmetric, AsymmetricInputs, SymParam, FACE_LABELS,
};
use hyperquad::Rational;
use num_traits::Zero;
use std::str::FromStr;

fn r(s: &str) -> Rational {
    Rational::from_str(s).unwrap()
}

fn main() {
    let inputs = AsymmetricInputs {
        y1: r("1"),
        x2: r("3"),
        x3: r("8"),
        x4: r("120"),
        z23: r("5"),
        z24: r("19"),
        z34: r("31"),
    };
    let solution = parameterize_asymmetric(&inputs).expect("y1 is nonzero");
    println!("asymmetric mode with the classical seeds (y1 = 1, x = 3, 8, 120):");
    println!("  x1 = {}", solution.x[0]);
    println!(
        "  y = ({}, {}, {}, {})",
        solution.y[0], solution.y[1], solution.y[2], solution.y[3]
    );
    let report = check_generalized_solution(&solution);
    assert!(report.regular && report.all_square);
    let witnesses = solution.z.as_ref().unwrap();
    for (f, label) in FACE_LABELS.iter().enumerate() {
        println!("  z{label} = {}", witnesses[f]);
    }
    println!(
        "\nflipping the sign of z34 lands on the other completion: x1 = {}",
        parameterize_asymmetric(&AsymmetricInputs {
            z34: r("-31"),
            ..inputs
        })
        .unwrap()
        .x[0]
    );

    let params = SymParam::new(
        [r("1"), r("2")],
        [r("3"), r("1")],
        [r("1"), r("1")],
        r("1"),
        r("2"),
        r("1"),
        r("3"),
        r("1"),
    )
    .expect("kernel vectors are nonzero");
    let built = parameterize_symmetric(&params);
    println!("\nsymmetric mode from kernel vectors p=(1,2), q=(3,1), r=(1,1):");
    assert!(hyperdet(&built.hypermatrix).is_zero());
    println!("  hyperdet = 0 by construction");
    assert!(kernel_check(&built.hypermatrix, &built.kernel));
    println!(
        "  kernel check passes for p, q, r = ({}, {}), ({}, {}), ({}, {})",
        built.kernel.p[0],
        built.kernel.p[1],
        built.kernel.q[0],
        built.kernel.q[1],
        built.kernel.r[0],
        built.kernel.r[1]
    );
    for (label, (face, witness)) in FACE_LABELS
        .iter()
        .zip(face_determinants(&built.hypermatrix).iter().zip(&built.witnesses))
    {
        assert_eq!(&witness.square(), face);
        println!("  F{label} = {face} = ({witness})^2");
    }
}
