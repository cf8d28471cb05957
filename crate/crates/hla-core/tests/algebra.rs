//! Axiom suite over the built-in examples and their perturbations.
//!
//! The 3-dimensional family passes the defining identities for a sweep of
//! parameter values, and every single structure-constant perturbation of the
//! mu = 2 member either fails construction (structural symmetry) or fails
//! the identity sweep with an explicit witness. Exact arithmetic, zero
//! tolerance.

use hla_core::algebra::builtins::{exe02, k3, ParamError};
use hla_core::algebra::{zero_algebra, HomLieAntialgebra};
use hla_core::matrix::Matrix;
use hla_core::morphism::GradedMorphism;
use hla_core::scalar::{int, rat, Scalar};
use hla_core::structure::is_subalgebra;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn mu_sweep() -> Vec<Scalar> {
    vec![int(1), int(2), int(3), int(-1), rat(1, 2)]
}

#[test]
fn k3_family_passes_axioms_and_multiplicativity() {
    for mu in mu_sweep() {
        let a = k3(&mu).unwrap();
        let axioms = a.verify_axioms();
        assert!(axioms.passed(), "axioms failed at mu = {mu}: {:?}", axioms.violations);
        assert!(a.is_multiplicative(), "multiplicativity failed at mu = {mu}");
    }
}

#[test]
fn exe02_family_passes_axioms_and_multiplicativity() {
    for mu in mu_sweep() {
        let a = exe02(&mu).unwrap();
        assert!(a.verify_axioms().passed());
        assert!(a.is_multiplicative());
    }
}

#[test]
fn zero_parameter_is_rejected() {
    assert_eq!(k3(&int(0)).unwrap_err(), ParamError::ZeroMu);
    assert_eq!(exe02(&int(0)).unwrap_err(), ParamError::ZeroMu);
}

/// Flat copies of the five structure tables of an algebra.
struct Tables {
    c00: Vec<Scalar>,
    c01: Vec<Scalar>,
    c11: Vec<Scalar>,
    alpha: Matrix,
    beta: Matrix,
}

fn tables_of(a: &HomLieAntialgebra) -> Tables {
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let mut c00 = Vec::new();
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                c00.push(a.c00(i, j, k).clone());
            }
        }
    }
    let mut c01 = Vec::new();
    for i in 0..d0 {
        for j in 0..d1 {
            for k in 0..d1 {
                c01.push(a.c01(i, j, k).clone());
            }
        }
    }
    let mut c11 = Vec::new();
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d0 {
                c11.push(a.c11(i, j, k).clone());
            }
        }
    }
    Tables { c00, c01, c11, alpha: a.alpha().clone(), beta: a.beta().clone() }
}

/// All single-entry +1 perturbations of the five tables, one per entry.
fn perturbations(a: &HomLieAntialgebra) -> Vec<(String, Result<HomLieAntialgebra, String>)> {
    let t = tables_of(a);
    let basis = a.basis().clone();
    let build = |c00: Vec<Scalar>, c01: Vec<Scalar>, c11: Vec<Scalar>, alpha: Matrix, beta: Matrix| {
        HomLieAntialgebra::new(basis.clone(), c00, c01, c11, alpha, beta)
            .map_err(|e| e.to_string())
    };
    let mut out = Vec::new();
    for idx in 0..t.c00.len() {
        let mut c = t.c00.clone();
        c[idx] = &c[idx] + &int(1);
        out.push((format!("c00[{idx}]"), build(c, t.c01.clone(), t.c11.clone(), t.alpha.clone(), t.beta.clone())));
    }
    for idx in 0..t.c01.len() {
        let mut c = t.c01.clone();
        c[idx] = &c[idx] + &int(1);
        out.push((format!("c01[{idx}]"), build(t.c00.clone(), c, t.c11.clone(), t.alpha.clone(), t.beta.clone())));
    }
    for idx in 0..t.c11.len() {
        let mut c = t.c11.clone();
        c[idx] = &c[idx] + &int(1);
        out.push((format!("c11[{idx}]"), build(t.c00.clone(), t.c01.clone(), c, t.alpha.clone(), t.beta.clone())));
    }
    for r in 0..t.alpha.rows() {
        for c in 0..t.alpha.cols() {
            let mut m = t.alpha.clone();
            m.set(r, c, m.get(r, c) + &int(1));
            out.push((format!("alpha[{r},{c}]"), build(t.c00.clone(), t.c01.clone(), t.c11.clone(), m, t.beta.clone())));
        }
    }
    for r in 0..t.beta.rows() {
        for c in 0..t.beta.cols() {
            let mut m = t.beta.clone();
            m.set(r, c, m.get(r, c) + &int(1));
            out.push((format!("beta[{r},{c}]"), build(t.c00.clone(), t.c01.clone(), t.c11.clone(), t.alpha.clone(), m)));
        }
    }
    out
}

#[test]
fn every_single_entry_perturbation_of_k3_fails() {
    let a = k3(&int(2)).unwrap();
    let all = perturbations(&a);
    // one entry per table slot: 1 + 4 + 4 + 1 + 4
    assert_eq!(all.len(), 14);
    let mut rejected = 0usize;
    let mut failed = 0usize;
    let mut identities = BTreeSet::new();
    for (entry, built) in all {
        match built {
            Err(_) => rejected += 1,
            Ok(b) => {
                let report = b.verify_axioms();
                assert!(
                    !report.passed(),
                    "perturbation {entry} unexpectedly passed the identity sweep"
                );
                assert!(!report.violations.is_empty());
                for w in &report.violations {
                    identities.insert(w.identity.clone());
                }
                failed += 1;
            }
        }
    }
    // the odd-bracket entries break antisymmetry at construction time
    assert_eq!(rejected, 4);
    assert_eq!(failed, 10);
    assert!(identities.contains("mixed_assoc"), "saw identities: {identities:?}");
}

#[test]
fn rebuilding_k3_from_its_own_tables_is_identity() {
    let a = k3(&int(2)).unwrap();
    let t = tables_of(&a);
    let b = HomLieAntialgebra::new(a.basis().clone(), t.c00, t.c01, t.c11, t.alpha, t.beta)
        .unwrap();
    assert_eq!(a, b);
    assert!(b.verify_axioms().passed());
}

#[test]
fn direct_sums_of_examples_pass_axioms() {
    let a = k3(&int(2)).unwrap();
    let b = exe02(&int(3)).unwrap();
    let s = a.direct_sum(&b);
    assert_eq!(s.dim_even(), 2);
    assert_eq!(s.dim_odd(), 4);
    assert!(s.verify_axioms().passed());
    assert!(s.is_multiplicative());

    let both = a.direct_sum(&a);
    assert!(both.verify_axioms().passed());
}

#[test]
fn zero_algebra_passes_axioms() {
    let a = zero_algebra(
        vec!["x0".into(), "x1".into()],
        vec!["y0".into(), "y1".into(), "y2".into()],
    );
    assert!(a.verify_axioms().passed());
    assert!(a.is_multiplicative());
}

/// Every grade-preserving linear map agrees with the graph criterion: the map
/// intertwines the five structure maps exactly when its graph is closed under
/// the direct-sum products and twists.
#[test]
fn homomorphism_agrees_with_graph_subalgebra_criterion() {
    let a = k3(&int(2)).unwrap();
    let sum = a.direct_sum(&a);
    let entries = [int(-1), int(0), int(1)];
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b9);
    let mut agreements = 0usize;
    let mut homs_seen = 0usize;
    for _ in 0..150 {
        let mut f0 = Matrix::zero(1, 1);
        f0.set(0, 0, entries.choose(&mut rng).unwrap().clone());
        let mut f1 = Matrix::zero(2, 2);
        for r in 0..2 {
            for c in 0..2 {
                f1.set(r, c, entries.choose(&mut rng).unwrap().clone());
            }
        }
        let f = GradedMorphism::new(f0, f1);
        let is_hom = f.is_homomorphism(&a, &a).unwrap().passed();
        let graph_closed = is_subalgebra(&sum, &f.graph(&a, &a));
        assert_eq!(
            is_hom, graph_closed,
            "disagreement for f0 = {:?}, f1 = {:?}",
            f.f0, f.f1
        );
        agreements += 1;
        if is_hom {
            homs_seen += 1;
        }
    }
    assert_eq!(agreements, 150);
    // the sweep must actually exercise both outcomes
    assert!(homs_seen > 0, "no homomorphism in the sweep");
    assert!(homs_seen < 150, "every sampled map was a homomorphism");
}

#[test]
fn identity_and_zero_are_homomorphisms() {
    let a = k3(&rat(1, 2)).unwrap();
    assert!(GradedMorphism::identity(&a).is_homomorphism(&a, &a).unwrap().passed());
    let z = GradedMorphism::new(Matrix::zero(1, 1), Matrix::zero(2, 2));
    assert!(z.is_homomorphism(&a, &a).unwrap().passed());
}

#[test]
fn negating_odd_part_is_a_homomorphism_of_k3() {
    // products are quadratic in the odd part, so (id, -id) intertwines them
    let a = k3(&int(2)).unwrap();
    let mut f1 = Matrix::zero(2, 2);
    f1.set(0, 0, int(-1));
    f1.set(1, 1, int(-1));
    let f = GradedMorphism::new(Matrix::identity(1), f1);
    assert!(f.is_homomorphism(&a, &a).unwrap().passed());
}
