//! Universal central extension: existence over the perfect family, the
//! frozen quotient table at mu = 2, the perfectness gate on the non-perfect
//! example, the kernel/homology comparison, and universality against a
//! sweep of central extensions.

use hla_core::algebra::builtins::{exe02, k3};
use hla_core::algebra::GradedBasis;
use hla_core::cocycle::{CoeffSpace, Cocycle2};
use hla_core::extensions::central_extension_from_cocycle;
use hla_core::matrix::Matrix;
use hla_core::report::CheckStatus;
use hla_core::scalar::{int, rat, Scalar};
use hla_core::uce::{
    build_uce, kernel_vs_h2, perfectness_defect, universality_morphism, UceError,
};
use hla_core::HomLieAntialgebra;
use num_traits::Zero;

#[test]
fn uce_exists_and_is_certified_for_the_perfect_family() {
    for mu in [int(1), int(2), int(3)] {
        let a = k3(&mu).unwrap();
        let res = build_uce(&a, false).unwrap();
        assert!(!res.forced);

        let uce = &res.uce_algebra;
        assert!(uce.verify_axioms().passed(), "uce identities fail at mu = {mu}");
        assert!(uce.is_multiplicative());

        // the covering map is a surjective homomorphism
        assert!(res.u.is_homomorphism(uce, &a).unwrap().passed());
        assert!(res.u.is_surjective(&a));

        // the kernel vanishes here, and the quotient is again perfect
        assert_eq!(res.kernel_of_u.dims(), (0, 0));
        assert!(perfectness_defect(uce).is_none());

        let rep = kernel_vs_h2(&a, &res).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        let names: Vec<&str> = rep.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "dimension_match",
                "representatives_in_kernel",
                "representatives_independent",
                "kernel_central",
            ]
        );
        assert_eq!(rep.dimensions["h2"], 0);
    }
}

#[test]
fn frozen_uce_table_at_mu_two() {
    let a = k3(&int(2)).unwrap();
    let res = build_uce(&a, false).unwrap();
    let t = &res.uce_algebra;

    assert_eq!(t.basis().even_names(), &["p0".to_string()]);
    assert_eq!(t.basis().odd_names(), &["q0".to_string(), "q1".to_string()]);

    // p0.p0 = -1/2 p0; p0.q0 = -1/2 q0; p0.q1 = -1/8 q1; [q0,q1] = -1/4 p0
    assert_eq!(t.c00(0, 0, 0), &rat(-1, 2));
    assert_eq!(t.c01(0, 0, 0), &rat(-1, 2));
    assert_eq!(t.c01(0, 0, 1), &Scalar::zero());
    assert_eq!(t.c01(0, 1, 1), &rat(-1, 8));
    assert_eq!(t.c11(0, 1, 0), &rat(-1, 4));

    assert_eq!(t.alpha(), &Matrix::identity(1));
    let mut beta = Matrix::zero(2, 2);
    beta.set(0, 0, int(2));
    beta.set(1, 1, rat(1, 2));
    assert_eq!(t.beta(), &beta);
}

#[test]
fn non_perfect_base_is_rejected_with_the_failing_spans() {
    let a = exe02(&int(2)).unwrap();
    match build_uce(&a, false) {
        Err(UceError::NotPerfect { missing }) => {
            assert!(missing.contains("even products span dimension 0 of 1"), "{missing}");
            assert!(missing.contains("mixed products span dimension 0 of 2"), "{missing}");
        }
        other => panic!("expected the perfectness gate, got {other:?}"),
    }
}

#[test]
fn forced_build_bypasses_the_gate_without_claims() {
    let a = exe02(&int(2)).unwrap();
    let res = build_uce(&a, true).unwrap();
    assert!(res.forced);
    // the quotient still satisfies the defining identities
    assert!(res.uce_algebra.verify_axioms().passed());
    // but the covering map cannot be surjective here
    assert!(!res.u.is_surjective(&a));
}

/// Trivial kernel: the identity-like extension of the base by nothing.
fn trivial_extension(a: &HomLieAntialgebra) -> (CoeffSpace, Cocycle2) {
    let basis = GradedBasis::new(vec![], vec![]).unwrap();
    let v = CoeffSpace::new(basis, Matrix::zero(0, 0), Matrix::zero(0, 0)).unwrap();
    let w = Cocycle2::zero(a, &v);
    (v, w)
}

/// One even kernel line with identity twist and zero cocycle.
fn even_line(a: &HomLieAntialgebra) -> (CoeffSpace, Cocycle2) {
    let basis = GradedBasis::new(vec!["u".into()], vec![]).unwrap();
    let v = CoeffSpace::new(basis, Matrix::identity(1), Matrix::zero(0, 0)).unwrap();
    let w = Cocycle2::zero(a, &v);
    (v, w)
}

/// One odd kernel line with twist matching the base parameter and the mixed
/// cochain w1(eps, a) = z.
fn odd_line(a: &HomLieAntialgebra, kernel_twist: &Scalar) -> (CoeffSpace, Cocycle2) {
    let basis = GradedBasis::new(vec![], vec!["z".into()]).unwrap();
    let mut beta = Matrix::zero(1, 1);
    beta.set(0, 0, kernel_twist.clone());
    let v = CoeffSpace::new(basis, Matrix::zero(0, 0), beta).unwrap();
    let mut w1 = vec![Scalar::zero(); a.dim_even() * a.dim_odd()];
    w1[0] = int(1);
    let w = Cocycle2::new(a, &v, vec![], w1, vec![]).unwrap();
    (v, w)
}

#[test]
fn universality_over_three_central_extensions() {
    let a = k3(&int(2)).unwrap();
    let res = build_uce(&a, false).unwrap();
    let cases = [
        ("trivial kernel", trivial_extension(&a)),
        ("even line", even_line(&a)),
        ("odd line", odd_line(&a, &int(2))),
    ];
    for (name, (v, w)) in cases {
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        let cert = universality_morphism(&res, &e).unwrap();
        assert!(cert.commutes, "projection . phi != u for {name}");
        assert!(cert.unique, "two sections disagree for {name}");
        assert!(cert.homomorphism, "phi is not a homomorphism for {name}");
        assert!(cert.valid());

        // the commuting triangle as an explicit matrix identity
        let composed = e.projection.compose(&cert.phi);
        assert_eq!(composed.f0, res.u.f0, "{name}");
        assert_eq!(composed.f1, res.u.f1, "{name}");
    }
}

/// With a mismatched kernel twist the triangle still commutes and the map is
/// unique, but it cannot intertwine the twists: the certificate records the
/// failure honestly.
#[test]
fn mismatched_kernel_twist_breaks_only_the_homomorphism_leg() {
    let a = k3(&int(2)).unwrap();
    let res = build_uce(&a, false).unwrap();
    let (v, w) = odd_line(&a, &int(1));
    let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
    let cert = universality_morphism(&res, &e).unwrap();
    assert!(cert.commutes);
    assert!(cert.unique);
    assert!(!cert.homomorphism);
    assert!(!cert.valid());
}

#[test]
fn kernel_vs_h2_check_names_and_dims() {
    let a = k3(&int(3)).unwrap();
    let res = build_uce(&a, false).unwrap();
    let rep = kernel_vs_h2(&a, &res).unwrap();
    assert_eq!(rep.dimensions["kernel_even"], 0);
    assert_eq!(rep.dimensions["kernel_odd"], 0);
    assert_eq!(rep.dimensions["h2"], 0);
    assert_eq!(rep.status, CheckStatus::Pass);
}
