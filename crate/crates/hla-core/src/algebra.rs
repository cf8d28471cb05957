//! Hom-Lie antialgebras as structure-constant tables.
//!
//! An algebra is a graded basis plus three structure tensors and two twist
//! matrices:
//! - `c00[i][j][k]`: coefficient of `e_k` in `e_i * e_j` (symmetric in i, j),
//! - `c01[i][j][k]`: coefficient of `o_k` in `e_i * o_j`,
//! - `c11[i][j][k]`: coefficient of `e_k` in `[o_i, o_j]` (antisymmetric),
//! - `alpha`: even twist (column convention), `beta`: odd twist.
//!
//! Supercommutativity is enforced at construction; the four defining
//! identities are checked, never assumed. By multilinearity, checking them on
//! basis triples is complete.

use crate::matrix::Matrix;
use crate::report::Witness;
use crate::scalar::{format_combination, Scalar};
use num_traits::{One, Zero};
use std::collections::BTreeSet;

/// Names of the four defining identities, in checking order.
///
/// - `even_assoc`: alpha(x1)*(x2*x3) = (x1*x2)*alpha(x3)
/// - `mixed_assoc`: alpha(x1)*(x2*y1) = 1/2 (x1*x2)*beta(y1)
/// - `bracket_leibniz`: alpha(x1)*[y1,y2] = [x1*y1, beta(y2)] + [beta(y1), x1*y2]
/// - `odd_jacobi`: beta(y1)*[y2,y3] + beta(y2)*[y3,y1] + beta(y3)*[y1,y2] = 0
pub const IDENTITY_NAMES: [&str; 4] =
    ["even_assoc", "mixed_assoc", "bracket_leibniz", "odd_jacobi"];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedBasis {
    even: Vec<String>,
    odd: Vec<String>,
}

impl GradedBasis {
    /// The empty basis is allowed: zero-dimensional spaces appear as the
    /// kernels of trivial central extensions.
    pub fn new(even: Vec<String>, odd: Vec<String>) -> Result<Self, StructureError> {
        let mut seen = BTreeSet::new();
        for name in even.iter().chain(&odd) {
            if name.is_empty() || name.contains(',') {
                return Err(StructureError::BadName { name: name.clone() });
            }
            if !seen.insert(name.clone()) {
                return Err(StructureError::DuplicateName { name: name.clone() });
            }
        }
        Ok(GradedBasis { even, odd })
    }

    pub fn dim_even(&self) -> usize {
        self.even.len()
    }

    pub fn dim_odd(&self) -> usize {
        self.odd.len()
    }

    pub fn even_names(&self) -> &[String] {
        &self.even
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd
    }

    pub fn even_name(&self, i: usize) -> &str {
        &self.even[i]
    }

    pub fn odd_name(&self, j: usize) -> &str {
        &self.odd[j]
    }
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum StructureError {
    #[error("bad basis name {name:?}: names are nonempty and comma-free")]
    BadName { name: String },
    #[error("duplicate basis name {name:?}")]
    DuplicateName { name: String },
    #[error("structure tensor {tensor} has wrong length {got}, expected {expected}")]
    BadTensorShape { tensor: &'static str, got: usize, expected: usize },
    #[error("twist matrix {matrix} is {got_rows}x{got_cols}, expected {expected}x{expected}")]
    BadTwistShape { matrix: &'static str, got_rows: usize, got_cols: usize, expected: usize },
    #[error(
        "even product is not symmetric at ({i}, {j}): coefficient of {target} is {lhs} one way and {rhs} the other"
    )]
    EvenSymmetry { i: String, j: String, target: String, lhs: String, rhs: String },
    #[error(
        "odd bracket is not antisymmetric at ({i}, {j}): coefficient of {target} is {lhs} versus mirrored {rhs}"
    )]
    OddAntisymmetry { i: String, j: String, target: String, lhs: String, rhs: String },
}

/// Report of an identity sweep: every violated instance with its basis tuple
/// and both evaluated sides.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub instances_checked: usize,
    pub violations: Vec<Witness>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomLieAntialgebra {
    basis: GradedBasis,
    c00: Vec<Scalar>,
    c01: Vec<Scalar>,
    c11: Vec<Scalar>,
    alpha: Matrix,
    beta: Matrix,
}

impl HomLieAntialgebra {
    /// Validates tensor shapes and the structural symmetries (even product
    /// symmetric, odd bracket antisymmetric with zero diagonal).
    pub fn new(
        basis: GradedBasis,
        c00: Vec<Scalar>,
        c01: Vec<Scalar>,
        c11: Vec<Scalar>,
        alpha: Matrix,
        beta: Matrix,
    ) -> Result<Self, StructureError> {
        let d0 = basis.dim_even();
        let d1 = basis.dim_odd();
        let shapes = [
            ("even_product", c00.len(), d0 * d0 * d0),
            ("mixed_product", c01.len(), d0 * d1 * d1),
            ("odd_bracket", c11.len(), d1 * d1 * d0),
        ];
        for (tensor, got, expected) in shapes {
            if got != expected {
                return Err(StructureError::BadTensorShape { tensor, got, expected });
            }
        }
        if alpha.rows() != d0 || alpha.cols() != d0 {
            return Err(StructureError::BadTwistShape {
                matrix: "alpha",
                got_rows: alpha.rows(),
                got_cols: alpha.cols(),
                expected: d0,
            });
        }
        if beta.rows() != d1 || beta.cols() != d1 {
            return Err(StructureError::BadTwistShape {
                matrix: "beta",
                got_rows: beta.rows(),
                got_cols: beta.cols(),
                expected: d1,
            });
        }
        let a = HomLieAntialgebra { basis, c00, c01, c11, alpha, beta };
        for i in 0..d0 {
            for j in 0..d0 {
                for k in 0..d0 {
                    let lhs = a.c00(i, j, k);
                    let rhs = a.c00(j, i, k);
                    if lhs != rhs {
                        return Err(StructureError::EvenSymmetry {
                            i: a.basis.even_name(i).into(),
                            j: a.basis.even_name(j).into(),
                            target: a.basis.even_name(k).into(),
                            lhs: crate::scalar::format_rational(lhs),
                            rhs: crate::scalar::format_rational(rhs),
                        });
                    }
                }
            }
        }
        for i in 0..d1 {
            for j in 0..d1 {
                for k in 0..d0 {
                    let lhs = a.c11(i, j, k).clone();
                    let rhs = -a.c11(j, i, k).clone();
                    if lhs != rhs {
                        return Err(StructureError::OddAntisymmetry {
                            i: a.basis.odd_name(i).into(),
                            j: a.basis.odd_name(j).into(),
                            target: a.basis.even_name(k).into(),
                            lhs: crate::scalar::format_rational(&lhs),
                            rhs: crate::scalar::format_rational(&rhs),
                        });
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn basis(&self) -> &GradedBasis {
        &self.basis
    }

    pub fn dim_even(&self) -> usize {
        self.basis.dim_even()
    }

    pub fn dim_odd(&self) -> usize {
        self.basis.dim_odd()
    }

    pub fn dim(&self) -> usize {
        self.dim_even() + self.dim_odd()
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn c00(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c00[(i * self.dim_even() + j) * self.dim_even() + k]
    }

    pub fn c01(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c01[(i * self.dim_odd() + j) * self.dim_odd() + k]
    }

    pub fn c11(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c11[(i * self.dim_odd() + j) * self.dim_even() + k]
    }

    /// `e_i * e_j` as even coordinates.
    pub fn basis_mul_ee(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim_even()).map(|k| self.c00(i, j, k).clone()).collect()
    }

    /// `e_i * o_j` as odd coordinates.
    pub fn basis_mul_eo(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim_odd()).map(|k| self.c01(i, j, k).clone()).collect()
    }

    /// `[o_i, o_j]` as even coordinates.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim_even()).map(|k| self.c11(i, j, k).clone()).collect()
    }

    /// Product of even elements (even coordinates in, even out).
    pub fn mul_ee(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let d0 = self.dim_even();
        let mut out = vec![Scalar::zero(); d0];
        for i in 0..d0 {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d0 {
                if v[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for k in 0..d0 {
                    let c = self.c00(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    /// Product of an even and an odd element (odd coordinates out).
    pub fn mul_eo(&self, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let (d0, d1) = (self.dim_even(), self.dim_odd());
        let mut out = vec![Scalar::zero(); d1];
        for i in 0..d0 {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d1 {
                if w[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &w[j];
                for k in 0..d1 {
                    let c = self.c01(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    /// Bracket of odd elements (even coordinates out).
    pub fn bracket(&self, w1: &[Scalar], w2: &[Scalar]) -> Vec<Scalar> {
        let (d0, d1) = (self.dim_even(), self.dim_odd());
        let mut out = vec![Scalar::zero(); d0];
        for i in 0..d1 {
            if w1[i].is_zero() {
                continue;
            }
            for j in 0..d1 {
                if w2[j].is_zero() {
                    continue;
                }
                let f = &w1[i] * &w2[j];
                for k in 0..d0 {
                    let c = self.c11(i, j, k);
                    if !c.is_zero() {
                        out[k] += c * &f;
                    }
                }
            }
        }
        out
    }

    pub fn alpha_apply(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.alpha.mul_vec(u)
    }

    pub fn beta_apply(&self, w: &[Scalar]) -> Vec<Scalar> {
        self.beta.mul_vec(w)
    }

    pub fn even_unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim_even()];
        v[i] = Scalar::one();
        v
    }

    pub fn odd_unit(&self, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim_odd()];
        v[j] = Scalar::one();
        v
    }

    pub fn format_even(&self, coords: &[Scalar]) -> String {
        format_combination(coords, self.basis.even_names())
    }

    pub fn format_odd(&self, coords: &[Scalar]) -> String {
        format_combination(coords, self.basis.odd_names())
    }

    /// Check the four defining identities on every basis triple.
    pub fn verify_axioms(&self) -> AxiomReport {
        let (d0, d1) = (self.dim_even(), self.dim_odd());
        let mut report = AxiomReport { instances_checked: 0, violations: Vec::new() };

        // alpha(x1)*(x2*x3) = (x1*x2)*alpha(x3)
        for i in 0..d0 {
            for j in 0..d0 {
                for k in 0..d0 {
                    let lhs =
                        self.mul_ee(&self.alpha.col_vec(i), &self.basis_mul_ee(j, k));
                    let rhs =
                        self.mul_ee(&self.basis_mul_ee(i, j), &self.alpha.col_vec(k));
                    report.instances_checked += 1;
                    if lhs != rhs {
                        report.violations.push(Witness {
                            identity: "even_assoc".into(),
                            tuple: vec![
                                self.basis.even_name(i).into(),
                                self.basis.even_name(j).into(),
                                self.basis.even_name(k).into(),
                            ],
                            lhs: self.format_even(&lhs),
                            rhs: self.format_even(&rhs),
                        });
                    }
                }
            }
        }

        // alpha(x1)*(x2*y1) = 1/2 (x1*x2)*beta(y1)
        let half = crate::scalar::rat(1, 2);
        for i in 0..d0 {
            for j in 0..d0 {
                for k in 0..d1 {
                    let lhs =
                        self.mul_eo(&self.alpha.col_vec(i), &self.basis_mul_eo(j, k));
                    let mut rhs =
                        self.mul_eo(&self.basis_mul_ee(i, j), &self.beta.col_vec(k));
                    for x in &mut rhs {
                        *x *= &half;
                    }
                    report.instances_checked += 1;
                    if lhs != rhs {
                        report.violations.push(Witness {
                            identity: "mixed_assoc".into(),
                            tuple: vec![
                                self.basis.even_name(i).into(),
                                self.basis.even_name(j).into(),
                                self.basis.odd_name(k).into(),
                            ],
                            lhs: self.format_odd(&lhs),
                            rhs: self.format_odd(&rhs),
                        });
                    }
                }
            }
        }

        // alpha(x1)*[y1,y2] = [x1*y1, beta(y2)] + [beta(y1), x1*y2]
        for i in 0..d0 {
            let x = self.even_unit(i);
            for j in 0..d1 {
                for k in 0..d1 {
                    let lhs =
                        self.mul_ee(&self.alpha.col_vec(i), &self.basis_bracket(j, k));
                    let t1 = self.bracket(&self.basis_mul_eo(i, j), &self.beta.col_vec(k));
                    let t2 = self.bracket(&self.beta.col_vec(j), &self.mul_eo(&x, &self.odd_unit(k)));
                    let rhs: Vec<Scalar> =
                        t1.iter().zip(&t2).map(|(a, b)| a + b).collect();
                    report.instances_checked += 1;
                    if lhs != rhs {
                        report.violations.push(Witness {
                            identity: "bracket_leibniz".into(),
                            tuple: vec![
                                self.basis.even_name(i).into(),
                                self.basis.odd_name(j).into(),
                                self.basis.odd_name(k).into(),
                            ],
                            lhs: self.format_even(&lhs),
                            rhs: self.format_even(&rhs),
                        });
                    }
                }
            }
        }

        // beta(y1)*[y2,y3] + beta(y2)*[y3,y1] + beta(y3)*[y1,y2] = 0
        for i in 0..d1 {
            for j in 0..d1 {
                for k in 0..d1 {
                    let term = |p: usize, q: usize, r: usize| {
                        self.mul_eo(&self.basis_bracket(q, r), &self.beta.col_vec(p))
                    };
                    let (t1, t2, t3) = (term(i, j, k), term(j, k, i), term(k, i, j));
                    let sum: Vec<Scalar> = t1
                        .iter()
                        .zip(&t2)
                        .zip(&t3)
                        .map(|((a, b), c)| a + b + c)
                        .collect();
                    report.instances_checked += 1;
                    if sum.iter().any(|v| !v.is_zero()) {
                        report.violations.push(Witness {
                            identity: "odd_jacobi".into(),
                            tuple: vec![
                                self.basis.odd_name(i).into(),
                                self.basis.odd_name(j).into(),
                                self.basis.odd_name(k).into(),
                            ],
                            lhs: self.format_odd(&sum),
                            rhs: "0".into(),
                        });
                    }
                }
            }
        }

        report
    }

    /// Whether alpha and beta are morphisms for all three products.
    pub fn is_multiplicative(&self) -> bool {
        self.multiplicativity_report().passed()
    }

    /// Per-condition report: alpha on even products, beta on mixed products,
    /// alpha on brackets.
    pub fn multiplicativity_report(&self) -> AxiomReport {
        let (d0, d1) = (self.dim_even(), self.dim_odd());
        let mut report = AxiomReport { instances_checked: 0, violations: Vec::new() };
        for i in 0..d0 {
            for j in 0..d0 {
                let lhs = self.alpha_apply(&self.basis_mul_ee(i, j));
                let rhs = self.mul_ee(&self.alpha.col_vec(i), &self.alpha.col_vec(j));
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "alpha_even_product".into(),
                        tuple: vec![
                            self.basis.even_name(i).into(),
                            self.basis.even_name(j).into(),
                        ],
                        lhs: self.format_even(&lhs),
                        rhs: self.format_even(&rhs),
                    });
                }
            }
        }
        for i in 0..d0 {
            for j in 0..d1 {
                let lhs = self.beta_apply(&self.basis_mul_eo(i, j));
                let rhs = self.mul_eo(&self.alpha.col_vec(i), &self.beta.col_vec(j));
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "beta_mixed_product".into(),
                        tuple: vec![
                            self.basis.even_name(i).into(),
                            self.basis.odd_name(j).into(),
                        ],
                        lhs: self.format_odd(&lhs),
                        rhs: self.format_odd(&rhs),
                    });
                }
            }
        }
        for i in 0..d1 {
            for j in 0..d1 {
                let lhs = self.alpha_apply(&self.basis_bracket(i, j));
                let rhs = self.bracket(&self.beta.col_vec(i), &self.beta.col_vec(j));
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "alpha_bracket".into(),
                        tuple: vec![
                            self.basis.odd_name(i).into(),
                            self.basis.odd_name(j).into(),
                        ],
                        lhs: self.format_even(&lhs),
                        rhs: self.format_even(&rhs),
                    });
                }
            }
        }
        report
    }

    /// Componentwise direct sum. Basis names are kept when already disjoint,
    /// otherwise suffixed with `.1` / `.2`.
    pub fn direct_sum(&self, other: &HomLieAntialgebra) -> HomLieAntialgebra {
        let (even, odd) = merge_names(
            self.basis.even_names(),
            self.basis.odd_names(),
            other.basis.even_names(),
            other.basis.odd_names(),
        );
        let basis = GradedBasis::new(even, odd).expect("merged names are unique");
        let (a0, a1) = (self.dim_even(), self.dim_odd());
        let (b0, b1) = (other.dim_even(), other.dim_odd());
        let (d0, d1) = (a0 + b0, a1 + b1);
        let mut c00 = vec![Scalar::zero(); d0 * d0 * d0];
        let mut c01 = vec![Scalar::zero(); d0 * d1 * d1];
        let mut c11 = vec![Scalar::zero(); d1 * d1 * d0];
        for i in 0..a0 {
            for j in 0..a0 {
                for k in 0..a0 {
                    c00[(i * d0 + j) * d0 + k] = self.c00(i, j, k).clone();
                }
            }
        }
        for i in 0..b0 {
            for j in 0..b0 {
                for k in 0..b0 {
                    c00[((a0 + i) * d0 + a0 + j) * d0 + a0 + k] = other.c00(i, j, k).clone();
                }
            }
        }
        for i in 0..a0 {
            for j in 0..a1 {
                for k in 0..a1 {
                    c01[(i * d1 + j) * d1 + k] = self.c01(i, j, k).clone();
                }
            }
        }
        for i in 0..b0 {
            for j in 0..b1 {
                for k in 0..b1 {
                    c01[((a0 + i) * d1 + a1 + j) * d1 + a1 + k] = other.c01(i, j, k).clone();
                }
            }
        }
        for i in 0..a1 {
            for j in 0..a1 {
                for k in 0..a0 {
                    c11[(i * d1 + j) * d0 + k] = self.c11(i, j, k).clone();
                }
            }
        }
        for i in 0..b1 {
            for j in 0..b1 {
                for k in 0..b0 {
                    c11[((a1 + i) * d1 + a1 + j) * d0 + a0 + k] = other.c11(i, j, k).clone();
                }
            }
        }
        let alpha = self.alpha.block_diag(&other.alpha);
        let beta = self.beta.block_diag(&other.beta);
        HomLieAntialgebra::new(basis, c00, c01, c11, alpha, beta)
            .expect("componentwise sum preserves structural symmetry")
    }
}

/// Merge two graded name lists, suffixing with `.1` / `.2` on any collision.
pub(crate) fn merge_names(
    left_even: &[String],
    left_odd: &[String],
    right_even: &[String],
    right_odd: &[String],
) -> (Vec<String>, Vec<String>) {
    let left: BTreeSet<&String> = left_even.iter().chain(left_odd).collect();
    let clash = right_even.iter().chain(right_odd).any(|n| left.contains(n));
    let tag = |names: &[String], suffix: &str| -> Vec<String> {
        names
            .iter()
            .map(|n| if clash { format!("{n}.{suffix}") } else { n.clone() })
            .collect()
    };
    let mut even = tag(left_even, "1");
    even.extend(tag(right_even, "2"));
    let mut odd = tag(left_odd, "1");
    odd.extend(tag(right_odd, "2"));
    (even, odd)
}

/// Zero-products algebra on the given basis with identity twists.
pub fn zero_algebra(even: Vec<String>, odd: Vec<String>) -> HomLieAntialgebra {
    let basis = GradedBasis::new(even, odd).expect("valid basis");
    let (d0, d1) = (basis.dim_even(), basis.dim_odd());
    HomLieAntialgebra::new(
        basis,
        vec![Scalar::zero(); d0 * d0 * d0],
        vec![Scalar::zero(); d0 * d1 * d1],
        vec![Scalar::zero(); d1 * d1 * d0],
        Matrix::identity(d0),
        Matrix::identity(d1),
    )
    .expect("zero tables are symmetric")
}

pub mod builtins {
    //! The built-in examples used across tests and the CLI.

    use super::*;
    use crate::scalar::rat;

    #[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
    pub enum ParamError {
        #[error("parameter mu must be nonzero")]
        ZeroMu,
        #[error("parameter q must differ from 0 and 1")]
        BadQ,
        #[error("window radius n must be at least 1")]
        BadWindow,
    }

    /// Three-dimensional algebra on `{eps; a, b}` with
    /// `eps*eps = eps`, `eps*a = (mu/2) a`, `eps*b = (1/(2mu)) b`,
    /// `[a, b] = (1/2) eps`, `alpha = id`, `beta = diag(mu, 1/mu)`.
    pub fn k3(mu: &Scalar) -> Result<HomLieAntialgebra, ParamError> {
        if mu.is_zero() {
            return Err(ParamError::ZeroMu);
        }
        let basis = GradedBasis::new(
            vec!["eps".into()],
            vec!["a".into(), "b".into()],
        )
        .expect("fixed names");
        let half = rat(1, 2);
        let mu_inv = mu.clone().recip();
        let c00 = vec![Scalar::one()];
        // c01[(0, a) -> a] = mu/2, c01[(0, b) -> b] = 1/(2 mu)
        let mut c01 = vec![Scalar::zero(); 4];
        c01[0] = &half * mu;
        c01[3] = &half * &mu_inv;
        // c11[(a, b) -> eps] = 1/2
        let mut c11 = vec![Scalar::zero(); 4];
        c11[1] = half.clone();
        c11[2] = -half;
        let alpha = Matrix::identity(1);
        let mut beta = Matrix::zero(2, 2);
        beta.set(0, 0, mu.clone());
        beta.set(1, 1, mu_inv);
        Ok(HomLieAntialgebra::new(basis, c00, c01, c11, alpha, beta)
            .expect("structural symmetry holds"))
    }

    /// Three-dimensional algebra on `{eps; a1, a2}` whose only nonzero
    /// product is `[a1, a2] = eps`; `alpha = id`, `beta = diag(mu, 1/mu)`.
    pub fn exe02(mu: &Scalar) -> Result<HomLieAntialgebra, ParamError> {
        if mu.is_zero() {
            return Err(ParamError::ZeroMu);
        }
        let basis = GradedBasis::new(
            vec!["eps".into()],
            vec!["a1".into(), "a2".into()],
        )
        .expect("fixed names");
        let c00 = vec![Scalar::zero()];
        let c01 = vec![Scalar::zero(); 4];
        let mut c11 = vec![Scalar::zero(); 4];
        c11[1] = Scalar::one();
        c11[2] = -Scalar::one();
        let alpha = Matrix::identity(1);
        let mut beta = Matrix::zero(2, 2);
        beta.set(0, 0, mu.clone());
        beta.set(1, 1, mu.clone().recip());
        Ok(HomLieAntialgebra::new(basis, c00, c01, c11, alpha, beta)
            .expect("structural symmetry holds"))
    }
}
