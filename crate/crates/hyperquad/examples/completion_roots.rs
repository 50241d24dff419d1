//! Hypermatrix completion: recover the two ways to finish a quadruple
//! whose first element went missing.
//!
//! Embed {?, 3, 8, 120} with unit second factors, leave a000 blank, and
//! solve hyperdet = 0 for it. The constraint is quadratic; its two roots
//! give the classical first element 1 and the large companion 11781, and
//! both completions are regular with all six faces perfect squares. The
//! completed hypermatrix is singular, so it also carries kernel vectors.
//!
//! Run with `cargo run --example completion_roots`.

use hyperquad::hypermatrix::{
    check_generalized_solution, complete, from_xy, hyperdet, kernel_solve, to_xy, GenQuadruple,
};
use hyperquad::Rational;
use num_traits::Zero;

fn int(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn main() {
    let x = [int(0), int(3), int(8), int(120)];
    let y = [int(1), int(1), int(1), int(1)];
    let embedded = from_xy(&x, &y);

    let roots = complete(&embedded, (0, 0, 0)).expect("quadratic in a000");
    println!("hyperdet = 0 solved for a000 has roots:");
    for root in &roots {
        println!("  a000 = {root}  (first element x1 = {})", -root);
    }

    for root in &roots {
        let mut completed = embedded.clone();
        completed.set(0, 0, 0, root.clone());
        assert!(hyperdet(&completed).is_zero());

        let (cx, cy) = to_xy(&completed);
        let solution = GenQuadruple {
            x: cx,
            y: cy,
            z: None,
        };
        let report = check_generalized_solution(&solution);
        println!(
            "\ncompletion x1 = {}: regular = {}, all faces square = {}",
            -root, report.regular, report.all_square
        );
        for face in &report.faces {
            let witness = face.witness.as_ref().expect("squares");
            println!("  F{} = {} = {witness}^2", face.label, face.value);
        }

        let kernel = kernel_solve(&completed)
            .expect("singular hypermatrix")
            .expect("nonzero hypermatrix");
        println!(
            "  kernel vectors: p = ({}, {}), q = ({}, {}), r = ({}, {})",
            kernel.p[0], kernel.p[1], kernel.q[0], kernel.q[1], kernel.r[0], kernel.r[1]
        );
    }
}
