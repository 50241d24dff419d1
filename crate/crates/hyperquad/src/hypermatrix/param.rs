//! Parameterized families of regular solutions.
//!
//! Two constructions produce points on the hyperdeterminant's zero locus
//! from free rational parameters. The asymmetric one fixes seven split
//! variables and solves for the remaining five, clearing one denominator
//! `y1`. The symmetric one assembles the hypermatrix from three 2-vectors
//! and four coefficients so that the vectors form a kernel triple by
//! construction, and a further substitution turns every face determinant
//! into a literal square.

use super::{
    face_determinants, face_of_entries, hyperdet, hyperdet_of, idx, kernel_check, p4h, p4h_of,
    GenQuadruple, Hypermatrix222, KernelVectors,
};
use crate::arith::Rational;
use crate::jsonio::{obj_field, rat_array, rat_from_value, rat_to_value, JsonError};
use crate::poly::Poly;
use crate::report::IdentityReport;
use crate::ring::Ring;
use num_traits::Zero;
use serde_json::{json, Value};

/// Parameter values a construction cannot use.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("the asymmetric parameterization divides by y1, which must be nonzero")]
    ZeroY1,
    #[error("the symmetric parameterization needs nonzero squared norms; |{name}|² = 0")]
    ZeroNorm { name: &'static str },
}

/// Free inputs of the asymmetric construction: one `y`, three `x`, and the
/// three witnesses among those `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymmetricInputs {
    pub y1: Rational,
    pub x2: Rational,
    pub x3: Rational,
    pub x4: Rational,
    pub z23: Rational,
    pub z24: Rational,
    pub z34: Rational,
}

impl AsymmetricInputs {
    pub fn from_json(v: &Value) -> Result<AsymmetricInputs, JsonError> {
        let field = |name: &str| -> Result<Rational, JsonError> {
            rat_from_value(obj_field(v, name, "asymmetric inputs")?, name)
        };
        Ok(AsymmetricInputs {
            y1: field("y1")?,
            x2: field("x2")?,
            x3: field("x3")?,
            x4: field("x4")?,
            z23: field("z23")?,
            z24: field("z24")?,
            z34: field("z34")?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "y1": rat_to_value(&self.y1),
            "x2": rat_to_value(&self.x2),
            "x3": rat_to_value(&self.x3),
            "x4": rat_to_value(&self.x4),
            "z23": rat_to_value(&self.z23),
            "z24": rat_to_value(&self.z24),
            "z34": rat_to_value(&self.z34),
        })
    }
}

/// Completes seven free values to a full regular solution with witnesses on
/// all six faces. The three given witnesses determine `y2, y3, y4` by the
/// definitional face equations, `x1` by regularity, and the remaining three
/// witnesses by bilinear products; everything is exact, so the output
/// always passes [`super::check_generalized_solution`].
pub fn parameterize_asymmetric(inp: &AsymmetricInputs) -> Result<GenQuadruple, ParamError> {
    if inp.y1.is_zero() {
        return Err(ParamError::ZeroY1);
    }
    let y1 = &inp.y1;
    let y2 = &(&inp.z34.square() - &(&inp.x3 * &inp.x4)) / y1;
    let y3 = &(&inp.z24.square() - &(&inp.x2 * &inp.x4)) / y1;
    let y4 = &(&inp.z23.square() - &(&inp.x2 * &inp.x3)) / y1;
    let triple = &(&inp.x2 * &inp.x3) * &inp.x4;
    let witness_product = &(&(&inp.z23 * &inp.z24) * &inp.z34) * Rational::from_i64(2);
    let x1_numer = &(&(&(&(&inp.x2 * &inp.z34.square()) + &(&inp.x3 * &inp.z24.square()))
        + &(&inp.x4 * &inp.z23.square()))
        - &triple)
        + &witness_product;
    let x1 = &x1_numer / &y1.square();
    let z12 = &(&(&inp.z24 * &inp.z23) + &(&inp.z34 * &inp.x2)) / y1;
    let z13 = &(&(&inp.z34 * &inp.z23) + &(&inp.z24 * &inp.x3)) / y1;
    let z14 = &(&(&inp.z24 * &inp.z34) + &(&inp.z23 * &inp.x4)) / y1;
    let out = GenQuadruple {
        x: [x1, inp.x2.clone(), inp.x3.clone(), inp.x4.clone()],
        y: [y1.clone(), y2, y3, y4],
        z: Some([z12, z13, z14, inp.z23.clone(), inp.z24.clone(), inp.z34.clone()]),
    };
    debug_assert!(p4h(&out.x, &out.y).is_zero());
    debug_assert!({
        let faces = out.face_values();
        let z = out.z.as_ref().expect("constructed with witnesses");
        (0..6).all(|f| z[f].square() == faces[f])
    });
    Ok(out)
}

fn lowered<T: Ring>(v: &[T; 2]) -> [T; 2] {
    [v[1].clone(), v[0].clone().neg()]
}

/// Entries of the symmetric family: `b0` weighs the fully lowered
/// rank-one block and each of `b[1..=3]` restores one vector in one slot.
fn symmetric_entries_of<T: Ring>(p: &[T; 2], q: &[T; 2], r: &[T; 2], b: &[T; 4]) -> [T; 8] {
    let pl = lowered(p);
    let ql = lowered(q);
    let rl = lowered(r);
    std::array::from_fn(|n| {
        let (i, j, k) = (n >> 2, (n >> 1) & 1, n & 1);
        b[0].clone() * pl[i].clone() * ql[j].clone() * rl[k].clone()
            + b[1].clone() * p[i].clone() * ql[j].clone() * rl[k].clone()
            + b[2].clone() * pl[i].clone() * q[j].clone() * rl[k].clone()
            + b[3].clone() * pl[i].clone() * ql[j].clone() * r[k].clone()
    })
}

fn dot(v: &[Rational; 2]) -> Rational {
    &v[0].square() + &v[1].square()
}

/// Parameters of the symmetric construction: three kernel vectors, a free
/// base coefficient, and the square-producing weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymParam {
    pub p: [Rational; 2],
    pub q: [Rational; 2],
    pub r: [Rational; 2],
    pub b0: Rational,
    pub g: Rational,
    pub h1: Rational,
    pub h2: Rational,
    pub h3: Rational,
}

impl SymParam {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        p: [Rational; 2],
        q: [Rational; 2],
        r: [Rational; 2],
        b0: Rational,
        g: Rational,
        h1: Rational,
        h2: Rational,
        h3: Rational,
    ) -> Result<SymParam, ParamError> {
        for (v, name) in [(&p, "p"), (&q, "q"), (&r, "r")] {
            if dot(v).is_zero() {
                return Err(ParamError::ZeroNorm { name });
            }
        }
        Ok(SymParam {
            p,
            q,
            r,
            b0,
            g,
            h1,
            h2,
            h3,
        })
    }

    pub fn from_json(v: &Value) -> Result<SymParam, JsonError> {
        let vec2 = |name: &str| -> Result<[Rational; 2], JsonError> {
            rat_array(obj_field(v, name, "symmetric parameters")?, name)
        };
        let field = |name: &str| -> Result<Rational, JsonError> {
            rat_from_value(obj_field(v, name, "symmetric parameters")?, name)
        };
        SymParam::new(
            vec2("p")?,
            vec2("q")?,
            vec2("r")?,
            field("b0")?,
            field("g")?,
            field("h1")?,
            field("h2")?,
            field("h3")?,
        )
        .map_err(|e| JsonError::new(e.to_string()))
    }

    pub fn to_json(&self) -> Value {
        let pair = |v: &[Rational; 2]| vec![rat_to_value(&v[0]), rat_to_value(&v[1])];
        json!({
            "p": pair(&self.p),
            "q": pair(&self.q),
            "r": pair(&self.r),
            "b0": rat_to_value(&self.b0),
            "g": rat_to_value(&self.g),
            "h1": rat_to_value(&self.h1),
            "h2": rat_to_value(&self.h2),
            "h3": rat_to_value(&self.h3),
        })
    }

    /// The slot-restoring coefficients `g·h²/|v|²` that make every face a
    /// literal square.
    pub fn secondary_coefficients(&self) -> [Rational; 3] {
        [
            &(&self.g * &self.h1.square()) / &dot(&self.p),
            &(&self.g * &self.h2.square()) / &dot(&self.q),
            &(&self.g * &self.h3.square()) / &dot(&self.r),
        ]
    }
}

/// Output of the symmetric construction: the hypermatrix, its kernel
/// triple, and the six face witnesses in storage order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricSolution {
    pub hypermatrix: Hypermatrix222,
    pub kernel: KernelVectors,
    pub witnesses: [Rational; 6],
}

impl SymmetricSolution {
    pub fn to_json(&self) -> Value {
        json!({
            "hypermatrix": self.hypermatrix.to_json(),
            "kernel": self.kernel.to_json(),
            "witnesses": self.witnesses.iter().map(rat_to_value).collect::<Vec<_>>(),
        })
    }
}

/// Builds a hypermatrix whose hyperdeterminant vanishes identically, with
/// `(p, q, r)` as kernel vectors and every face determinant the square of
/// an explicit witness.
pub fn parameterize_symmetric(params: &SymParam) -> SymmetricSolution {
    let [b1, b2, b3] = params.secondary_coefficients();
    let b = [params.b0.clone(), b1, b2, b3];
    let entries = symmetric_entries_of(&params.p, &params.q, &params.r, &b);
    let hypermatrix = Hypermatrix222::new(entries);
    let kernel = KernelVectors {
        p: params.p.clone(),
        q: params.q.clone(),
        r: params.r.clone(),
    };
    let pl = lowered(&params.p);
    let ql = lowered(&params.q);
    let rl = lowered(&params.r);
    let scale = |h_a: &Rational, h_b: &Rational, v: &Rational| &(&params.g * &(h_a * h_b)) * v;
    let witnesses = [
        scale(&params.h1, &params.h2, &rl[0]),
        scale(&params.h1, &params.h3, &ql[0]),
        scale(&params.h2, &params.h3, &pl[0]),
        scale(&params.h2, &params.h3, &pl[1]),
        scale(&params.h1, &params.h3, &ql[1]),
        scale(&params.h1, &params.h2, &rl[1]),
    ];
    debug_assert!(hyperdet(&hypermatrix).is_zero());
    debug_assert!(kernel_check(&hypermatrix, &kernel));
    debug_assert!({
        let faces = face_determinants(&hypermatrix);
        (0..6).all(|f| witnesses[f].square() == faces[f])
    });
    SymmetricSolution {
        hypermatrix,
        kernel,
        witnesses,
    }
}

pub(crate) fn append_asymmetric_identities(rep: &mut IdentityReport) {
    let v = Poly::var;
    let (x2, x3, x4) = (v("x2"), v("x3"), v("x4"));
    let (z23, z24, z34) = (v("z23"), v("z24"), v("z34"));

    let y2n = &z34.pow(2) - &(&x3 * &x4);
    let y3n = &z24.pow(2) - &(&x2 * &x4);
    let y4n = &z23.pow(2) - &(&x2 * &x3);
    let x1n = &(&(&(&(&x2 * &z34.pow(2)) + &(&x3 * &z24.pow(2))) + &(&x4 * &z23.pow(2)))
        - &(&(&x2 * &x3) * &x4))
        + &(&(&z23 * &z24) * &z34).scaled(&2.into());
    let z12n = &(&z24 * &z23) + &(&z34 * &x2);
    let z13n = &(&z34 * &z23) + &(&z24 * &x3);
    let z14n = &(&z24 * &z34) + &(&z23 * &x4);

    let components = [
        (
            "face 12 (cleared by y1²)".to_string(),
            &(&x1n * &x2) + &(&y3n * &y4n),
            z12n.pow(2),
        ),
        (
            "face 13 (cleared by y1²)".to_string(),
            &(&x1n * &x3) + &(&y2n * &y4n),
            z13n.pow(2),
        ),
        (
            "face 14 (cleared by y1²)".to_string(),
            &(&x1n * &x4) + &(&y2n * &y3n),
            z14n.pow(2),
        ),
        (
            "face 23 (definitional)".to_string(),
            &(&x2 * &x3) + &y4n,
            z23.pow(2),
        ),
        (
            "face 24 (definitional)".to_string(),
            &(&x2 * &x4) + &y3n,
            z24.pow(2),
        ),
        (
            "face 34 (definitional)".to_string(),
            &(&x3 * &x4) + &y2n,
            z34.pow(2),
        ),
    ];
    rep.poly_identity_components(
        "asymmetric-param-faces",
        components.iter().map(|(l, p, q)| (l.clone(), p, q)),
    );

    let one = Poly::int(1);
    rep.poly_zero(
        "asymmetric-param-regularity",
        &p4h_of(
            &[x1n.clone(), x2.clone(), x3.clone(), x4.clone()],
            &[one, y2n.clone(), y3n.clone(), y4n.clone()],
        ),
    );

    let z14_printed = &z34.pow(2) + &(&z23 * &x4);
    let printed_gap = &z14_printed.pow(2) - &(&(&x1n * &x4) + &(&y2n * &y3n));
    rep.finding(
        "asymmetric-param-printed-z14",
        format!(
            "a circulating form writes the third derived witness as \
             (z34·z34 + z23·x4)/y1, which breaks face 14 by {}; the face \
             equation forces (z24·z34 + z23·x4)/y1",
            printed_gap.display_truncated(8)
        ),
    );
}

pub(crate) fn append_symmetric_identities(rep: &mut IdentityReport) {
    let v = Poly::var;
    let pv = [v("p0"), v("p1")];
    let qv = [v("q0"), v("q1")];
    let rv = [v("r0"), v("r1")];
    let b = [v("b0"), v("b1"), v("b2"), v("b3")];
    let a = symmetric_entries_of(&pv, &qv, &rv, &b);

    let mut kernel_components: Vec<(String, Poly, Poly)> = Vec::new();
    for k in 0..2 {
        let mut acc = Poly::default();
        for i in 0..2 {
            for j in 0..2 {
                acc = &acc + &(&(&a[idx(i, j, k)] * &pv[i]) * &qv[j]);
            }
        }
        kernel_components.push((format!("p·q contraction at k={k}"), acc, Poly::default()));
    }
    for j in 0..2 {
        let mut acc = Poly::default();
        for i in 0..2 {
            for k in 0..2 {
                acc = &acc + &(&(&a[idx(i, j, k)] * &pv[i]) * &rv[k]);
            }
        }
        kernel_components.push((format!("p·r contraction at j={j}"), acc, Poly::default()));
    }
    for i in 0..2 {
        let mut acc = Poly::default();
        for j in 0..2 {
            for k in 0..2 {
                acc = &acc + &(&(&a[idx(i, j, k)] * &qv[j]) * &rv[k]);
            }
        }
        kernel_components.push((format!("q·r contraction at i={i}"), acc, Poly::default()));
    }
    rep.poly_identity_components(
        "symmetric-param-kernel",
        kernel_components.iter().map(|(l, p, q)| (l.clone(), p, q)),
    );

    rep.poly_zero("symmetric-param-hyperdet-vanishes", &hyperdet_of(&a));

    let np = &pv[0].pow(2) + &pv[1].pow(2);
    let nq = &qv[0].pow(2) + &qv[1].pow(2);
    let nr = &rv[0].pow(2) + &rv[1].pow(2);
    let pl = lowered(&pv);
    let ql = lowered(&qv);
    let rl = lowered(&rv);
    let pair = |b_a: &Poly, b_b: &Poly, n_a: &Poly, n_b: &Poly, lv: &Poly| {
        &(&(b_a * b_b) * &(n_a * n_b)) * &lv.pow(2)
    };
    let mut face_components = vec![
        (
            "face 12 from secondary coefficients".to_string(),
            face_of_entries(&a, 0),
            pair(&b[1], &b[2], &np, &nq, &rl[0]),
        ),
        (
            "face 13 from secondary coefficients".to_string(),
            face_of_entries(&a, 1),
            pair(&b[1], &b[3], &np, &nr, &ql[0]),
        ),
        (
            "face 14 from secondary coefficients".to_string(),
            face_of_entries(&a, 2),
            pair(&b[2], &b[3], &nq, &nr, &pl[0]),
        ),
        (
            "face 23 from secondary coefficients".to_string(),
            face_of_entries(&a, 3),
            pair(&b[2], &b[3], &nq, &nr, &pl[1]),
        ),
        (
            "face 24 from secondary coefficients".to_string(),
            face_of_entries(&a, 4),
            pair(&b[1], &b[3], &np, &nr, &ql[1]),
        ),
        (
            "face 34 from secondary coefficients".to_string(),
            face_of_entries(&a, 5),
            pair(&b[1], &b[2], &np, &nq, &rl[1]),
        ),
    ];

    let (g, h1, h2, h3) = (v("g"), v("h1"), v("h2"), v("h3"));
    let cleared = [
        &(&b[0] * &np) * &(&nq * &nr),
        &(&g * &h1.pow(2)) * &(&nq * &nr),
        &(&g * &h2.pow(2)) * &(&np * &nr),
        &(&g * &h3.pow(2)) * &(&np * &nq),
    ];
    let ac = symmetric_entries_of(&pv, &qv, &rv, &cleared);
    let norms = &(&np * &nq) * &nr;
    let square = |h_a: &Poly, h_b: &Poly, lv: &Poly| {
        (&(&(&norms * &g) * &(h_a * h_b)) * lv).pow(2)
    };
    let literal = [
        ("12", 0, square(&h1, &h2, &rl[0])),
        ("13", 1, square(&h1, &h3, &ql[0])),
        ("14", 2, square(&h2, &h3, &pl[0])),
        ("23", 3, square(&h2, &h3, &pl[1])),
        ("24", 4, square(&h1, &h3, &ql[1])),
        ("34", 5, square(&h1, &h2, &rl[1])),
    ];
    for (label, f, expected) in literal {
        face_components.push((
            format!("face {label} literal square (cleared by norms)"),
            face_of_entries(&ac, f),
            expected,
        ));
    }
    rep.poly_identity_components(
        "symmetric-param-face-structure",
        face_components.iter().map(|(l, p, q)| (l.clone(), p, q)),
    );

    rep.finding(
        "symmetric-param-index-conventions",
        "circulating notes write the base coefficient both as b and as b0 and \
         leave the slot pairing implicit; here the order is fixed as \
         (first, second, third) ↔ (p, q, r), with each lowered vector (v1, -v0)",
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermatrix::{check_generalized_solution, kernel_solve};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::str::FromStr;

    fn r(s: &str) -> Rational {
        Rational::from_str(s).unwrap()
    }

    fn classical_inputs(z34: &str) -> AsymmetricInputs {
        AsymmetricInputs {
            y1: r("1"),
            x2: r("3"),
            x3: r("8"),
            x4: r("120"),
            z23: r("5"),
            z24: r("19"),
            z34: r(z34),
        }
    }

    #[test]
    fn asymmetric_construction_completes_the_classical_quadruple() {
        let out = parameterize_asymmetric(&classical_inputs("31")).unwrap();
        assert_eq!(out.x, [r("11781"), r("3"), r("8"), r("120")]);
        assert_eq!(out.y, [r("1"), r("1"), r("1"), r("1")]);
        assert_eq!(
            out.z.clone().unwrap(),
            [r("188"), r("307"), r("1189"), r("5"), r("19"), r("31")]
        );

        let flipped = parameterize_asymmetric(&classical_inputs("-31")).unwrap();
        assert_eq!(flipped.x[0], r("1"));
        assert_eq!(
            flipped.z.clone().unwrap(),
            [r("2"), r("-3"), r("11"), r("5"), r("19"), r("-31")]
        );
    }

    #[test]
    fn asymmetric_construction_needs_nonzero_y1() {
        let mut inp = classical_inputs("31");
        inp.y1 = r("0");
        assert_eq!(parameterize_asymmetric(&inp), Err(ParamError::ZeroY1));
    }

    #[test]
    fn asymmetric_outputs_are_regular_with_square_faces() {
        let mut rng = StdRng::seed_from_u64(0xa57e);
        for _ in 0..200 {
            let y1 = loop {
                let c = Rational::from_i64(rng.gen_range(-9i64..=9));
                if !c.is_zero() {
                    break c;
                }
            };
            let mut small = || Rational::from_i64(rng.gen_range(-9i64..=9));
            let inp = AsymmetricInputs {
                y1,
                x2: small(),
                x3: small(),
                x4: small(),
                z23: small(),
                z24: small(),
                z34: small(),
            };
            let out = parameterize_asymmetric(&inp).unwrap();
            let report = check_generalized_solution(&out);
            assert!(report.regular && report.all_square);
            assert_eq!(GenQuadruple::from_json(&out.to_json()).unwrap(), out);
        }
    }

    #[test]
    fn asymmetric_inputs_json_round_trips() {
        let inp = classical_inputs("31");
        assert_eq!(AsymmetricInputs::from_json(&inp.to_json()).unwrap(), inp);
        assert!(AsymmetricInputs::from_json(&json!({ "y1": "1" })).is_err());
    }

    fn sample_params() -> SymParam {
        SymParam::new(
            [r("1"), r("2")],
            [r("3"), r("1")],
            [r("1"), r("1")],
            r("1"),
            r("2"),
            r("1"),
            r("3"),
            r("1"),
        )
        .unwrap()
    }

    #[test]
    fn symmetric_construction_produces_kernel_and_square_faces() {
        let sol = parameterize_symmetric(&sample_params());
        assert!(hyperdet(&sol.hypermatrix).is_zero());
        assert!(kernel_check(&sol.hypermatrix, &sol.kernel));
        let faces = face_determinants(&sol.hypermatrix);
        for f in 0..6 {
            assert_eq!(sol.witnesses[f].square(), faces[f]);
        }
        let solved = kernel_solve(&sol.hypermatrix).unwrap().unwrap();
        assert!(kernel_check(&sol.hypermatrix, &solved));
    }

    #[test]
    fn symmetric_construction_over_random_parameters() {
        let mut rng = StdRng::seed_from_u64(0x5b3a);
        for _ in 0..200 {
            let mut nonzero_vec = || loop {
                let v = [
                    Rational::from_i64(rng.gen_range(-5i64..=5)),
                    Rational::from_i64(rng.gen_range(-5i64..=5)),
                ];
                if !(v[0].is_zero() && v[1].is_zero()) {
                    break v;
                }
            };
            let (p, q, rr) = (nonzero_vec(), nonzero_vec(), nonzero_vec());
            let mut small = || Rational::from_i64(rng.gen_range(-4i64..=4));
            let params =
                SymParam::new(p, q, rr, small(), small(), small(), small(), small()).unwrap();
            let sol = parameterize_symmetric(&params);
            assert!(hyperdet(&sol.hypermatrix).is_zero());
            assert!(kernel_check(&sol.hypermatrix, &sol.kernel));
            let faces = face_determinants(&sol.hypermatrix);
            for f in 0..6 {
                assert_eq!(sol.witnesses[f].square(), faces[f]);
            }
            if let Some(solved) = kernel_solve(&sol.hypermatrix).unwrap() {
                assert!(kernel_check(&sol.hypermatrix, &solved));
            }
        }
    }

    #[test]
    fn symmetric_construction_rejects_zero_norms() {
        let err = SymParam::new(
            [r("0"), r("0")],
            [r("1"), r("0")],
            [r("1"), r("0")],
            r("1"),
            r("1"),
            r("1"),
            r("1"),
            r("1"),
        )
        .unwrap_err();
        assert_eq!(err, ParamError::ZeroNorm { name: "p" });
    }

    #[test]
    fn symmetric_params_json_round_trips() {
        let params = sample_params();
        assert_eq!(SymParam::from_json(&params.to_json()).unwrap(), params);
        let sol = parameterize_symmetric(&params);
        let v = sol.to_json();
        assert_eq!(v["witnesses"].as_array().unwrap().len(), 6);
    }
}
