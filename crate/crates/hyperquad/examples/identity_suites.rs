//! Prove the whole identity corpus symbolically and print the report.
//!
//! Each suite expands both sides of its identities as sparse integer
//! polynomials and compares them structurally, so a PASS is a proof, not a
//! spot check. FINDING lines record places where the implemented form
//! deliberately differs from a commonly printed one.
//!
//! Run with `cargo run --example identity_suites`.

use hyperquad::covariants::verify_covariant_identities;
use hyperquad::hypermatrix::verify_hypermatrix_identities;
use hyperquad::quadruple::verify_quadruple_identities;
use hyperquad::quintuple::verify_quintuple_identities;

fn main() {
    let mut all_pass = true;
    for report in [
        verify_quadruple_identities(),
        verify_quintuple_identities(),
        verify_hypermatrix_identities(),
        verify_covariant_identities(),
    ] {
        println!("{}", report.render());
        all_pass &= report.all_pass();
    }
    if !all_pass {
        std::process::exit(1);
    }
}
