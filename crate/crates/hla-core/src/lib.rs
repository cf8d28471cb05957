//! Exact-arithmetic engine for finite-dimensional Hom-Lie antialgebras.
//!
//! A Hom-Lie antialgebra is a Z2-graded vector space `a = a0 (+) a1` with a
//! symmetric product on the even part, a symmetric mixed product `a0 x a1 -> a1`,
//! an antisymmetric bracket `a1 x a1 -> a0`, and a pair of grade-preserving
//! twisting maps `(alpha, beta)` subject to four defining identities. Everything
//! here runs over arbitrary-precision rationals, so every answer (rank, kernel,
//! homology dimension, certificate) is exact.
//!
//! Module map:
//! - [`scalar`], [`matrix`], [`subspace`]: dense exact linear algebra (RREF,
//!   kernels, images, quotient spaces with deterministic coset representatives).
//! - [`algebra`]: structure-constant representation, identity checker,
//!   multiplicativity, direct sums, built-in examples.
//! - [`morphism`], [`structure`]: graded morphisms, graph criterion,
//!   subalgebras/ideals, center, product spans, perfectness, derived ideal.
//! - [`homology`], [`cocycle`]: low-degree chain/cochain complexes, H2 in both
//!   directions, 2-cocycles with coefficients and coboundary solving.
//! - [`extensions`]: central extensions from cocycles, actions, semidirect
//!   products, crossed modules.
//! - [`uce`]: universal central extensions of perfect algebras, universality
//!   morphisms, and the kernel-vs-H2 certificate.
//! - [`k1`]: windowed relation checker for the infinite-dimensional family
//!   with basis `eps_n`, `a_i` over an exact quadratic extension of Q.
//! - [`doc`], [`report`]: declarative document formats and deterministic
//!   machine-readable reports.

pub mod algebra;
pub mod cocycle;
pub mod doc;
pub mod extensions;
pub mod homology;
pub mod k1;
pub mod matrix;
pub mod morphism;
pub mod report;
pub mod scalar;
pub mod structure;
pub mod subspace;
pub mod uce;


pub use algebra::{AxiomReport, GradedBasis, HomLieAntialgebra, StructureError};
pub use matrix::Matrix;
pub use report::{Report, Witness};
pub use scalar::Scalar;
pub use subspace::{QuotientSpace, Subspace};
