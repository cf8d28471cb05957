//! Representations, semidirect products, central extensions, and crossed
//! modules.
//!
//! An [`Action`] of an algebra on a second algebra is a family of operators
//! subject to seven compatibility conditions; validity is certified
//! operationally as well, by building the semidirect product and sweeping its
//! defining identities. A 2-cocycle valued in a space with zero products
//! yields a [`CentralExtension`]; every central extension induces a
//! [`CrossedModule`] whose boundary is the projection.

use crate::algebra::{merge_names, AxiomReport, GradedBasis, HomLieAntialgebra};
use num_traits::Zero;
use crate::cocycle::{is_cocycle, Cocycle2, CocycleError, CoeffSpace};
use crate::matrix::Matrix;
use crate::morphism::GradedMorphism;
use crate::report::{CheckStatus, Report, Witness};
use crate::scalar::{rat, Scalar};
use crate::structure::{center, GradedSubspacePair};

fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn halve(mut v: Vec<Scalar>) -> Vec<Scalar> {
    let half = rat(1, 2);
    for x in &mut v {
        *x *= &half;
    }
    v
}

/// An action of one algebra on another, given by one operator per basis
/// element of the acting algebra. Matrices use the column convention: the
/// operator for basis element `g` sends the coordinate vector `u` to
/// `matrix * u`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Action {
    /// Per even basis element: operator on the even part of the space.
    pub rho0_even: Vec<Matrix>,
    /// Per even basis element: operator on the odd part of the space.
    pub rho0_odd: Vec<Matrix>,
    /// Per odd basis element: operator sending the even part to the odd part.
    pub rho1_even_to_odd: Vec<Matrix>,
    /// Per odd basis element: operator sending the odd part to the even part.
    pub rho1_odd_to_even: Vec<Matrix>,
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum ActionError {
    #[error("action block {block} has {got} operator(s), expected {expected}")]
    BlockCount { block: &'static str, got: usize, expected: usize },
    #[error(
        "action operator {block}[{index}] is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}"
    )]
    OperatorShape {
        block: &'static str,
        index: usize,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
}

impl Action {
    /// The zero action of `a` on `v`.
    pub fn zero(a: &HomLieAntialgebra, v: &HomLieAntialgebra) -> Self {
        let (d0, d1) = (a.dim_even(), a.dim_odd());
        let (p0, p1) = (v.dim_even(), v.dim_odd());
        Action {
            rho0_even: vec![Matrix::zero(p0, p0); d0],
            rho0_odd: vec![Matrix::zero(p1, p1); d0],
            rho1_even_to_odd: vec![Matrix::zero(p1, p0); d1],
            rho1_odd_to_even: vec![Matrix::zero(p0, p1); d1],
        }
    }

    /// Validate operator counts and shapes against the two algebras.
    pub fn check_shapes(
        &self,
        a: &HomLieAntialgebra,
        v: &HomLieAntialgebra,
    ) -> Result<(), ActionError> {
        let (d0, d1) = (a.dim_even(), a.dim_odd());
        let (p0, p1) = (v.dim_even(), v.dim_odd());
        let blocks: [(&'static str, &[Matrix], usize, usize, usize); 4] = [
            ("rho0_even", &self.rho0_even, d0, p0, p0),
            ("rho0_odd", &self.rho0_odd, d0, p1, p1),
            ("rho1_even_to_odd", &self.rho1_even_to_odd, d1, p1, p0),
            ("rho1_odd_to_even", &self.rho1_odd_to_even, d1, p0, p1),
        ];
        for (block, mats, count, rows, cols) in blocks {
            if mats.len() != count {
                return Err(ActionError::BlockCount { block, got: mats.len(), expected: count });
            }
            for (index, m) in mats.iter().enumerate() {
                if m.rows() != rows || m.cols() != cols {
                    return Err(ActionError::OperatorShape {
                        block,
                        index,
                        got_rows: m.rows(),
                        got_cols: m.cols(),
                        want_rows: rows,
                        want_cols: cols,
                    });
                }
            }
        }
        Ok(())
    }

    /// Apply the even action of the combination `x` to even coordinates `u`.
    pub fn apply0_even(&self, x: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        let p0 = self.rho0_even.first().map_or(0, |m| m.rows());
        let mut out = vec![Scalar::zero(); p0];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let img = self.rho0_even[i].mul_vec(u);
            for (o, t) in out.iter_mut().zip(&img) {
                *o += &(xi * t);
            }
        }
        out
    }

    /// Apply the even action of the combination `x` to odd coordinates `w`.
    pub fn apply0_odd(&self, x: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let p1 = self.rho0_odd.first().map_or(0, |m| m.rows());
        let mut out = vec![Scalar::zero(); p1];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let img = self.rho0_odd[i].mul_vec(w);
            for (o, t) in out.iter_mut().zip(&img) {
                *o += &(xi * t);
            }
        }
        out
    }

    /// Apply the odd action of the combination `y` to even coordinates `u`,
    /// landing in the odd part.
    pub fn apply1_even_to_odd(&self, y: &[Scalar], u: &[Scalar]) -> Vec<Scalar> {
        let p1 = self.rho1_even_to_odd.first().map_or(0, |m| m.rows());
        let mut out = vec![Scalar::zero(); p1];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let img = self.rho1_even_to_odd[j].mul_vec(u);
            for (o, t) in out.iter_mut().zip(&img) {
                *o += &(yj * t);
            }
        }
        out
    }

    /// Apply the odd action of the combination `y` to odd coordinates `w`,
    /// landing in the even part.
    pub fn apply1_odd_to_even(&self, y: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let p0 = self.rho1_odd_to_even.first().map_or(0, |m| m.rows());
        let mut out = vec![Scalar::zero(); p0];
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let img = self.rho1_odd_to_even[j].mul_vec(w);
            for (o, t) in out.iter_mut().zip(&img) {
                *o += &(yj * t);
            }
        }
        out
    }
}

/// The action of an algebra on itself: even elements act by the products,
/// odd elements act by the mixed product on the even part and by the bracket
/// on the odd part.
pub fn adjoint_action(a: &HomLieAntialgebra) -> Action {
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let col_matrix = |rows: usize, cols: Vec<Vec<Scalar>>| -> Matrix {
        let mut m = Matrix::zero(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        m
    };
    let rho0_even = (0..d0)
        .map(|i| col_matrix(d0, (0..d0).map(|p| a.basis_mul_ee(i, p)).collect()))
        .collect();
    let rho0_odd = (0..d0)
        .map(|i| col_matrix(d1, (0..d1).map(|q| a.basis_mul_eo(i, q)).collect()))
        .collect();
    let rho1_even_to_odd = (0..d1)
        .map(|j| col_matrix(d1, (0..d0).map(|p| a.basis_mul_eo(p, j)).collect()))
        .collect();
    let rho1_odd_to_even = (0..d1)
        .map(|j| col_matrix(d0, (0..d1).map(|q| a.basis_bracket(j, q)).collect()))
        .collect();
    Action { rho0_even, rho0_odd, rho1_even_to_odd, rho1_odd_to_even }
}

/// Check the seven action conditions on all basis tuples, then build the
/// semidirect product and sweep its defining identities as an operational
/// completeness check; those witnesses are reported with a `semidirect_`
/// prefix on the identity name.
pub fn verify_action(
    a: &HomLieAntialgebra,
    v: &HomLieAntialgebra,
    rho: &Action,
) -> Result<AxiomReport, ActionError> {
    rho.check_shapes(a, v)?;
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (v.dim_even(), v.dim_odd());
    let mut report = AxiomReport { instances_checked: 0, violations: Vec::new() };
    let witness = |report: &mut AxiomReport,
                       identity: &str,
                       tuple: Vec<String>,
                       lhs: String,
                       rhs: String| {
        report.violations.push(Witness { identity: identity.into(), tuple, lhs, rhs });
    };

    // rho0(alpha(x))(u1*u2) = rho0(x)(u1)*alpha_V(u2)
    for i in 0..d0 {
        for p in 0..p0 {
            for q in 0..p0 {
                let lhs = rho.apply0_even(&a.alpha().col_vec(i), &v.basis_mul_ee(p, q));
                let rhs = v.mul_ee(&rho.rho0_even[i].col_vec(p), &v.alpha().col_vec(q));
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho0_even_product",
                        vec![
                            a.basis().even_name(i).into(),
                            v.basis().even_name(p).into(),
                            v.basis().even_name(q).into(),
                        ],
                        v.format_even(&lhs),
                        v.format_even(&rhs),
                    );
                }
            }
        }
    }

    // rho0(alpha(x))(u*w) = 1/2 rho0(x)(u)*beta_V(w)
    for i in 0..d0 {
        for p in 0..p0 {
            for q in 0..p1 {
                let lhs = rho.apply0_odd(&a.alpha().col_vec(i), &v.basis_mul_eo(p, q));
                let rhs =
                    halve(v.mul_eo(&rho.rho0_even[i].col_vec(p), &v.beta().col_vec(q)));
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho0_mixed_product",
                        vec![
                            a.basis().even_name(i).into(),
                            v.basis().even_name(p).into(),
                            v.basis().odd_name(q).into(),
                        ],
                        v.format_odd(&lhs),
                        v.format_odd(&rhs),
                    );
                }
            }
        }
    }

    // rho1(y)(u2)*alpha_V(u1) = 1/2 rho1(beta(y))(u1*u2)
    for j in 0..d1 {
        for p in 0..p0 {
            for q in 0..p0 {
                let lhs = v.mul_eo(&v.alpha().col_vec(p), &rho.rho1_even_to_odd[j].col_vec(q));
                let rhs =
                    halve(rho.apply1_even_to_odd(&a.beta().col_vec(j), &v.basis_mul_ee(p, q)));
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho1_even_pair",
                        vec![
                            a.basis().odd_name(j).into(),
                            v.basis().even_name(p).into(),
                            v.basis().even_name(q).into(),
                        ],
                        v.format_odd(&lhs),
                        v.format_odd(&rhs),
                    );
                }
            }
        }
    }

    // rho0(x)(w)*alpha_V(u) = 1/2 rho0(x)(u)*beta_V(w)
    for i in 0..d0 {
        for p in 0..p0 {
            for q in 0..p1 {
                let lhs = v.mul_eo(&v.alpha().col_vec(p), &rho.rho0_odd[i].col_vec(q));
                let rhs =
                    halve(v.mul_eo(&rho.rho0_even[i].col_vec(p), &v.beta().col_vec(q)));
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho0_mixed_swap",
                        vec![
                            a.basis().even_name(i).into(),
                            v.basis().even_name(p).into(),
                            v.basis().odd_name(q).into(),
                        ],
                        v.format_odd(&lhs),
                        v.format_odd(&rhs),
                    );
                }
            }
        }
    }

    // rho0(alpha(x))([w1,w2]) = [rho0(x)(w1), beta_V(w2)] + [beta_V(w1), rho0(x)(w2)]
    for i in 0..d0 {
        for p in 0..p1 {
            for q in 0..p1 {
                let lhs = rho.apply0_even(&a.alpha().col_vec(i), &v.basis_bracket(p, q));
                let t1 = v.bracket(&rho.rho0_odd[i].col_vec(p), &v.beta().col_vec(q));
                let t2 = v.bracket(&v.beta().col_vec(p), &rho.rho0_odd[i].col_vec(q));
                let rhs = vec_add(&t1, &t2);
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho0_bracket",
                        vec![
                            a.basis().even_name(i).into(),
                            v.basis().odd_name(p).into(),
                            v.basis().odd_name(q).into(),
                        ],
                        v.format_even(&lhs),
                        v.format_even(&rhs),
                    );
                }
            }
        }
    }

    // rho1(beta(y))(u*w) = alpha_V(u)*rho1(y)(w) - [rho1(y)(u), beta_V(w)]
    for j in 0..d1 {
        for p in 0..p0 {
            for q in 0..p1 {
                let lhs =
                    rho.apply1_odd_to_even(&a.beta().col_vec(j), &v.basis_mul_eo(p, q));
                let t1 =
                    v.mul_ee(&v.alpha().col_vec(p), &rho.rho1_odd_to_even[j].col_vec(q));
                let t2 =
                    v.bracket(&rho.rho1_even_to_odd[j].col_vec(p), &v.beta().col_vec(q));
                let rhs = vec_sub(&t1, &t2);
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho1_mixed_product",
                        vec![
                            a.basis().odd_name(j).into(),
                            v.basis().even_name(p).into(),
                            v.basis().odd_name(q).into(),
                        ],
                        v.format_even(&lhs),
                        v.format_even(&rhs),
                    );
                }
            }
        }
    }

    // rho1(beta(y))([w1,w2]) = beta_V(w1)*rho1(y)(w2) - beta_V(w2)*rho1(y)(w1)
    for j in 0..d1 {
        for p in 0..p1 {
            for q in 0..p1 {
                let lhs =
                    rho.apply1_even_to_odd(&a.beta().col_vec(j), &v.basis_bracket(p, q));
                let t1 =
                    v.mul_eo(&rho.rho1_odd_to_even[j].col_vec(q), &v.beta().col_vec(p));
                let t2 =
                    v.mul_eo(&rho.rho1_odd_to_even[j].col_vec(p), &v.beta().col_vec(q));
                let rhs = vec_sub(&t1, &t2);
                report.instances_checked += 1;
                if lhs != rhs {
                    witness(
                        &mut report,
                        "rho1_bracket",
                        vec![
                            a.basis().odd_name(j).into(),
                            v.basis().odd_name(p).into(),
                            v.basis().odd_name(q).into(),
                        ],
                        v.format_odd(&lhs),
                        v.format_odd(&rhs),
                    );
                }
            }
        }
    }

    let s = semidirect_unchecked(a, v, rho);
    let srep = s.verify_axioms();
    report.instances_checked += srep.instances_checked;
    for w in srep.violations {
        report.violations.push(Witness {
            identity: format!("semidirect_{}", w.identity),
            tuple: w.tuple,
            lhs: w.lhs,
            rhs: w.rhs,
        });
    }
    Ok(report)
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum SemidirectError {
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error("the operators do not define an action; first violation: {first}")]
    NotAction { violations: Vec<Witness>, first: String },
}

/// Build the semidirect product table without validating the action.
pub(crate) fn semidirect_unchecked(
    a: &HomLieAntialgebra,
    v: &HomLieAntialgebra,
    rho: &Action,
) -> HomLieAntialgebra {
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (v.dim_even(), v.dim_odd());
    let (n0, n1) = (d0 + p0, d1 + p1);
    let mut c00 = vec![Scalar::zero(); n0 * n0 * n0];
    let mut c01 = vec![Scalar::zero(); n0 * n1 * n1];
    let mut c11 = vec![Scalar::zero(); n1 * n1 * n0];

    // (x1,u1)*(x2,u2) = (x1*x2, rho0(x1)(u2) + rho0(x2)(u1) + u1*u2)
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                c00[(i * n0 + j) * n0 + k] = a.c00(i, j, k).clone();
            }
        }
        for p in 0..p0 {
            for s in 0..p0 {
                let x = rho.rho0_even[i].get(s, p).clone();
                c00[(i * n0 + (d0 + p)) * n0 + (d0 + s)] = x.clone();
                c00[((d0 + p) * n0 + i) * n0 + (d0 + s)] = x;
            }
        }
    }
    for p in 0..p0 {
        for q in 0..p0 {
            for s in 0..p0 {
                c00[((d0 + p) * n0 + (d0 + q)) * n0 + (d0 + s)] = v.c00(p, q, s).clone();
            }
        }
    }

    // (x1,u1)*(y1,w1) = (x1*y1, rho0(x1)(w1) + rho1(y1)(u1) + u1*w1)
    for i in 0..d0 {
        for j in 0..d1 {
            for k in 0..d1 {
                c01[(i * n1 + j) * n1 + k] = a.c01(i, j, k).clone();
            }
        }
        for q in 0..p1 {
            for t in 0..p1 {
                c01[(i * n1 + (d1 + q)) * n1 + (d1 + t)] = rho.rho0_odd[i].get(t, q).clone();
            }
        }
    }
    for p in 0..p0 {
        for j in 0..d1 {
            for t in 0..p1 {
                c01[((d0 + p) * n1 + j) * n1 + (d1 + t)] =
                    rho.rho1_even_to_odd[j].get(t, p).clone();
            }
        }
        for q in 0..p1 {
            for t in 0..p1 {
                c01[((d0 + p) * n1 + (d1 + q)) * n1 + (d1 + t)] = v.c01(p, q, t).clone();
            }
        }
    }

    // [(y1,w1),(y2,w2)] = ([y1,y2], rho1(y1)(w2) - rho1(y2)(w1) + [w1,w2])
    for j in 0..d1 {
        for k in 0..d1 {
            for s in 0..d0 {
                c11[(j * n1 + k) * n0 + s] = a.c11(j, k, s).clone();
            }
        }
        for q in 0..p1 {
            for s in 0..p0 {
                let x = rho.rho1_odd_to_even[j].get(s, q).clone();
                c11[(j * n1 + (d1 + q)) * n0 + (d0 + s)] = x.clone();
                c11[((d1 + q) * n1 + j) * n0 + (d0 + s)] = -x;
            }
        }
    }
    for p in 0..p1 {
        for q in 0..p1 {
            for s in 0..p0 {
                c11[((d1 + p) * n1 + (d1 + q)) * n0 + (d0 + s)] = v.c11(p, q, s).clone();
            }
        }
    }

    let (even, odd) = merge_names(
        a.basis().even_names(),
        a.basis().odd_names(),
        v.basis().even_names(),
        v.basis().odd_names(),
    );
    let basis = GradedBasis::new(even, odd).expect("merged names are valid");
    let alpha = a.alpha().block_diag(v.alpha());
    let beta = a.beta().block_diag(v.beta());
    HomLieAntialgebra::new(basis, c00, c01, c11, alpha, beta)
        .expect("semidirect tables are symmetric by construction")
}

/// Semidirect product of `a` acting on `v`; rejects operator families that
/// fail [`verify_action`].
pub fn semidirect(
    a: &HomLieAntialgebra,
    v: &HomLieAntialgebra,
    rho: &Action,
) -> Result<HomLieAntialgebra, SemidirectError> {
    let report = verify_action(a, v, rho)?;
    if !report.passed() {
        let first = report.violations[0].render();
        return Err(SemidirectError::NotAction { violations: report.violations, first });
    }
    Ok(semidirect_unchecked(a, v, rho))
}

/// A central extension `0 -> V -> total -> base -> 0` built from a 2-cocycle.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: HomLieAntialgebra,
    pub kernel: CoeffSpace,
    pub cocycle: Cocycle2,
    pub total: HomLieAntialgebra,
    /// Canonical embedding of the kernel into the total space.
    pub inclusion: GradedMorphism,
    /// Canonical projection of the total space onto the base.
    pub projection: GradedMorphism,
}

#[derive(thiserror::Error, Clone, Debug)]
pub enum ExtensionError {
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error("the 2-cochain is not a cocycle; first violation: {first}")]
    NotCocycle { violations: Vec<Witness>, first: String },
}

/// Build the total-space table of `base + kernel` twisted by `w`, without
/// checking the cocycle conditions. The result satisfies the defining
/// identities exactly when `w` is a cocycle, so this is the raw material for
/// testing that equivalence; use [`central_extension_from_cocycle`] to build
/// a checked extension.
pub fn extension_total(
    a: &HomLieAntialgebra,
    v: &CoeffSpace,
    w: &Cocycle2,
) -> HomLieAntialgebra {
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (v.dim_even(), v.dim_odd());
    let (n0, n1) = (d0 + p0, d1 + p1);
    let mut c00 = vec![Scalar::zero(); n0 * n0 * n0];
    let mut c01 = vec![Scalar::zero(); n0 * n1 * n1];
    let mut c11 = vec![Scalar::zero(); n1 * n1 * n0];

    // (x1,u1)*(x2,u2) = (x1*x2, w0(x1,x2)); kernel coordinates multiply to zero.
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                c00[(i * n0 + j) * n0 + k] = a.c00(i, j, k).clone();
            }
            for (s, x) in w.w0(i, j).iter().enumerate() {
                c00[(i * n0 + j) * n0 + (d0 + s)] = x.clone();
            }
        }
    }
    for i in 0..d0 {
        for j in 0..d1 {
            for k in 0..d1 {
                c01[(i * n1 + j) * n1 + k] = a.c01(i, j, k).clone();
            }
            for (t, x) in w.w1(i, j).iter().enumerate() {
                c01[(i * n1 + j) * n1 + (d1 + t)] = x.clone();
            }
        }
    }
    for j in 0..d1 {
        for k in 0..d1 {
            for s in 0..d0 {
                c11[(j * n1 + k) * n0 + s] = a.c11(j, k, s).clone();
            }
            for (s, x) in w.w2(j, k).iter().enumerate() {
                c11[(j * n1 + k) * n0 + (d0 + s)] = x.clone();
            }
        }
    }

    let (even, odd) = merge_names(
        a.basis().even_names(),
        a.basis().odd_names(),
        v.basis().even_names(),
        v.basis().odd_names(),
    );
    let basis = GradedBasis::new(even, odd).expect("merged names are valid");
    let alpha = a.alpha().block_diag(v.alpha());
    let beta = a.beta().block_diag(v.beta());
    HomLieAntialgebra::new(basis, c00, c01, c11, alpha, beta)
        .expect("extension tables inherit symmetry from the base and the cocycle")
}

/// Build the central extension of `a` by `v` along the 2-cocycle `w`.
/// Non-cocycles are rejected with the violated condition.
pub fn central_extension_from_cocycle(
    a: &HomLieAntialgebra,
    v: &CoeffSpace,
    w: &Cocycle2,
) -> Result<CentralExtension, ExtensionError> {
    let report = is_cocycle(a, v, w)?;
    if !report.passed() {
        let first = report.violations[0].render();
        return Err(ExtensionError::NotCocycle { violations: report.violations, first });
    }
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (v.dim_even(), v.dim_odd());
    let total = extension_total(a, v, w);
    let inclusion = GradedMorphism::new(
        Matrix::zero(d0, p0).vstack(&Matrix::identity(p0)),
        Matrix::zero(d1, p1).vstack(&Matrix::identity(p1)),
    );
    let projection = GradedMorphism::new(
        Matrix::identity(d0).hstack(&Matrix::zero(d0, p0)),
        Matrix::identity(d1).hstack(&Matrix::zero(d1, p1)),
    );
    Ok(CentralExtension {
        base: a.clone(),
        kernel: v.clone(),
        cocycle: w.clone(),
        total,
        inclusion,
        projection,
    })
}

/// Certify a central extension: both ends satisfy the defining identities,
/// the inclusion and the projection are homomorphisms, the sequence is exact,
/// and the image of the kernel is central in the total space.
pub fn verify_central_extension(e: &CentralExtension) -> Report {
    let mut r = Report::new("verify_central_extension");
    r.record_dim("base_even", e.base.dim_even());
    r.record_dim("base_odd", e.base.dim_odd());
    r.record_dim("kernel_even", e.kernel.dim_even());
    r.record_dim("kernel_odd", e.kernel.dim_odd());
    r.record_dim("total_even", e.total.dim_even());
    r.record_dim("total_odd", e.total.dim_odd());

    let axioms = |r: &mut Report, name: &str, rep: AxiomReport| {
        if rep.passed() {
            r.pass(name);
        } else {
            r.fail(
                name,
                &format!("{} of {} instances violated", rep.violations.len(), rep.instances_checked),
                rep.violations,
            );
        }
    };
    axioms(&mut r, "base_identities", e.base.verify_axioms());
    axioms(&mut r, "total_identities", e.total.verify_axioms());

    let kernel_alg = e.kernel.zero_products_algebra();
    let hom = |r: &mut Report, name: &str, m: &GradedMorphism, s: &HomLieAntialgebra, t: &HomLieAntialgebra| {
        match m.is_homomorphism(s, t) {
            Ok(rep) if rep.violations.is_empty() => r.pass(name),
            Ok(rep) => r.fail(name, "structure maps are not intertwined", rep.violations),
            Err(err) => r.fail(name, &err.to_string(), Vec::new()),
        }
    };
    hom(&mut r, "inclusion_homomorphism", &e.inclusion, &kernel_alg, &e.total);
    hom(&mut r, "projection_homomorphism", &e.projection, &e.total, &e.base);

    if e.inclusion.is_injective() {
        r.pass("inclusion_injective");
    } else {
        r.fail("inclusion_injective", "inclusion has a nonzero kernel", Vec::new());
    }
    if e.projection.is_surjective(&e.base) {
        r.pass("projection_surjective");
    } else {
        r.fail("projection_surjective", "projection does not cover the base", Vec::new());
    }

    let composite = e.projection.compose(&e.inclusion);
    if composite.f0.is_zero() && composite.f1.is_zero() {
        r.pass("composite_zero");
    } else {
        r.fail("composite_zero", "projection after inclusion is nonzero", Vec::new());
    }

    let image = GradedSubspacePair {
        even: e.inclusion.f0.image_basis(),
        odd: e.inclusion.f1.image_basis(),
    };
    let ker_even = e.projection.f0.kernel_basis();
    let ker_odd = e.projection.f1.kernel_basis();
    if image.even.equal(&ker_even) {
        r.pass("exactness_even");
    } else {
        r.fail(
            "exactness_even",
            &format!("image dim {} vs kernel dim {}", image.even.dim(), ker_even.dim()),
            Vec::new(),
        );
    }
    if image.odd.equal(&ker_odd) {
        r.pass("exactness_odd");
    } else {
        r.fail(
            "exactness_odd",
            &format!("image dim {} vs kernel dim {}", image.odd.dim(), ker_odd.dim()),
            Vec::new(),
        );
    }

    let z = center(&e.total);
    if image.even.is_subspace_of(&z.even) && image.odd.is_subspace_of(&z.odd) {
        r.pass("kernel_central");
    } else {
        r.fail(
            "kernel_central",
            &format!(
                "center has dims ({}, {}); kernel image has dims ({}, {})",
                z.even.dim(),
                z.odd.dim(),
                image.even.dim(),
                image.odd.dim()
            ),
            Vec::new(),
        );
    }
    r
}

/// A crossed module: a boundary map from one algebra to another together
/// with an action of the target on the source.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    /// The algebra being acted upon; the boundary map leaves from here.
    pub source: HomLieAntialgebra,
    /// The acting algebra; the boundary map lands here.
    pub base: HomLieAntialgebra,
    pub action: Action,
    pub boundary: GradedMorphism,
}

/// The crossed module induced by a central extension: the base acts on the
/// total space through the products of lifts, whose kernel components are the
/// cocycle values, and the boundary is the projection.
pub fn crossed_module_from_central_extension(e: &CentralExtension) -> CrossedModule {
    let a = &e.base;
    let w = &e.cocycle;
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (e.kernel.dim_even(), e.kernel.dim_odd());
    let (n0, n1) = (d0 + p0, d1 + p1);

    let stack_col = |base_part: Vec<Scalar>, kernel_part: &[Scalar]| -> Vec<Scalar> {
        let mut col = base_part;
        col.extend_from_slice(kernel_part);
        col
    };
    let col_matrix = |rows: usize, cols: Vec<Vec<Scalar>>, total_cols: usize| -> Matrix {
        let mut m = Matrix::zero(rows, total_cols);
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    m.set(r, c, x.clone());
                }
            }
        }
        m
    };

    // rho0(x)(x2,u2) = (x*x2, w0(x,x2)); kernel columns act as zero.
    let rho0_even = (0..d0)
        .map(|i| {
            let cols =
                (0..d0).map(|j| stack_col(a.basis_mul_ee(i, j), w.w0(i, j))).collect();
            col_matrix(n0, cols, n0)
        })
        .collect();
    // rho0(x)(y,v) = (x*y, w1(x,y))
    let rho0_odd = (0..d0)
        .map(|i| {
            let cols =
                (0..d1).map(|j| stack_col(a.basis_mul_eo(i, j), w.w1(i, j))).collect();
            col_matrix(n1, cols, n1)
        })
        .collect();
    // rho1(y)(x2,u2) = (x2*y, w1(x2,y))
    let rho1_even_to_odd = (0..d1)
        .map(|j| {
            let cols =
                (0..d0).map(|i| stack_col(a.basis_mul_eo(i, j), w.w1(i, j))).collect();
            col_matrix(n1, cols, n0)
        })
        .collect();
    // rho1(y)(y2,v2) = ([y,y2], w2(y,y2))
    let rho1_odd_to_even = (0..d1)
        .map(|j| {
            let cols =
                (0..d1).map(|k| stack_col(a.basis_bracket(j, k), w.w2(j, k))).collect();
            col_matrix(n0, cols, n1)
        })
        .collect();

    CrossedModule {
        source: e.total.clone(),
        base: e.base.clone(),
        action: Action { rho0_even, rho0_odd, rho1_even_to_odd, rho1_odd_to_even },
        boundary: e.projection.clone(),
    }
}

/// Certify a crossed module: both algebras satisfy the defining identities,
/// the boundary is a homomorphism, the action is valid, the boundary
/// intertwines the action with the products of the base, and the self-action
/// pulled back along the boundary recovers the products of the source.
pub fn verify_crossed_module(cm: &CrossedModule) -> Report {
    let mut r = Report::new("verify_crossed_module");
    let a = &cm.base;
    let s = &cm.source;
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let (p0, p1) = (s.dim_even(), s.dim_odd());
    r.record_dim("base_even", d0);
    r.record_dim("base_odd", d1);
    r.record_dim("source_even", p0);
    r.record_dim("source_odd", p1);

    let axioms = |r: &mut Report, name: &str, rep: AxiomReport| {
        if rep.passed() {
            r.pass(name);
        } else {
            r.fail(
                name,
                &format!("{} of {} instances violated", rep.violations.len(), rep.instances_checked),
                rep.violations,
            );
        }
    };
    axioms(&mut r, "base_identities", a.verify_axioms());
    axioms(&mut r, "source_identities", s.verify_axioms());

    match cm.boundary.is_homomorphism(s, a) {
        Ok(rep) if rep.violations.is_empty() => r.pass("boundary_homomorphism"),
        Ok(rep) => r.fail("boundary_homomorphism", "structure maps are not intertwined", rep.violations),
        Err(err) => {
            r.fail("boundary_homomorphism", &err.to_string(), Vec::new());
            return r;
        }
    }

    match verify_action(a, s, &cm.action) {
        Ok(rep) => axioms(&mut r, "action", rep),
        Err(err) => {
            r.fail("action", &err.to_string(), Vec::new());
            return r;
        }
    }

    let rho = &cm.action;
    let bd = &cm.boundary;
    let mut checks: Vec<(&str, Vec<Witness>)> = Vec::new();

    // boundary(rho0(x)(u)) = x * boundary(u)
    let mut ws = Vec::new();
    for i in 0..d0 {
        for p in 0..p0 {
            let lhs = bd.apply_even(&rho.rho0_even[i].col_vec(p));
            let rhs = a.mul_ee(&a.even_unit(i), &bd.f0.col_vec(p));
            if lhs != rhs {
                ws.push(Witness {
                    identity: "boundary_rho0_even".into(),
                    tuple: vec![a.basis().even_name(i).into(), s.basis().even_name(p).into()],
                    lhs: a.format_even(&lhs),
                    rhs: a.format_even(&rhs),
                });
            }
        }
    }
    checks.push(("boundary_rho0_even", ws));

    // boundary(rho0(x)(v)) = x * boundary(v)
    let mut ws = Vec::new();
    for i in 0..d0 {
        for q in 0..p1 {
            let lhs = bd.apply_odd(&rho.rho0_odd[i].col_vec(q));
            let rhs = a.mul_eo(&a.even_unit(i), &bd.f1.col_vec(q));
            if lhs != rhs {
                ws.push(Witness {
                    identity: "boundary_rho0_odd".into(),
                    tuple: vec![a.basis().even_name(i).into(), s.basis().odd_name(q).into()],
                    lhs: a.format_odd(&lhs),
                    rhs: a.format_odd(&rhs),
                });
            }
        }
    }
    checks.push(("boundary_rho0_odd", ws));

    // boundary(rho1(y)(u)) = y * boundary(u)
    let mut ws = Vec::new();
    for j in 0..d1 {
        for p in 0..p0 {
            let lhs = bd.apply_odd(&rho.rho1_even_to_odd[j].col_vec(p));
            let rhs = a.mul_eo(&bd.f0.col_vec(p), &a.odd_unit(j));
            if lhs != rhs {
                ws.push(Witness {
                    identity: "boundary_rho1_even".into(),
                    tuple: vec![a.basis().odd_name(j).into(), s.basis().even_name(p).into()],
                    lhs: a.format_odd(&lhs),
                    rhs: a.format_odd(&rhs),
                });
            }
        }
    }
    checks.push(("boundary_rho1_even", ws));

    // boundary(rho1(y)(v)) = [y, boundary(v)]
    let mut ws = Vec::new();
    for j in 0..d1 {
        for q in 0..p1 {
            let lhs = bd.apply_even(&rho.rho1_odd_to_even[j].col_vec(q));
            let rhs = a.bracket(&a.odd_unit(j), &bd.f1.col_vec(q));
            if lhs != rhs {
                ws.push(Witness {
                    identity: "boundary_rho1_odd".into(),
                    tuple: vec![a.basis().odd_name(j).into(), s.basis().odd_name(q).into()],
                    lhs: a.format_even(&lhs),
                    rhs: a.format_even(&rhs),
                });
            }
        }
    }
    checks.push(("boundary_rho1_odd", ws));

    // rho0(boundary(u1))(u2) = u1 * u2
    let mut ws = Vec::new();
    for p in 0..p0 {
        for q in 0..p0 {
            let lhs = rho.apply0_even(&bd.f0.col_vec(p), &s.even_unit(q));
            let rhs = s.basis_mul_ee(p, q);
            if lhs != rhs {
                ws.push(Witness {
                    identity: "peiffer_even_even".into(),
                    tuple: vec![s.basis().even_name(p).into(), s.basis().even_name(q).into()],
                    lhs: s.format_even(&lhs),
                    rhs: s.format_even(&rhs),
                });
            }
        }
    }
    checks.push(("peiffer_even_even", ws));

    // rho1(boundary(v1))(v2) = [v1, v2]
    let mut ws = Vec::new();
    for p in 0..p1 {
        for q in 0..p1 {
            let lhs = rho.apply1_odd_to_even(&bd.f1.col_vec(p), &s.odd_unit(q));
            let rhs = s.basis_bracket(p, q);
            if lhs != rhs {
                ws.push(Witness {
                    identity: "peiffer_odd_odd".into(),
                    tuple: vec![s.basis().odd_name(p).into(), s.basis().odd_name(q).into()],
                    lhs: s.format_even(&lhs),
                    rhs: s.format_even(&rhs),
                });
            }
        }
    }
    checks.push(("peiffer_odd_odd", ws));

    // rho0(boundary(u))(v) = u * v
    let mut ws = Vec::new();
    for p in 0..p0 {
        for q in 0..p1 {
            let lhs = rho.apply0_odd(&bd.f0.col_vec(p), &s.odd_unit(q));
            let rhs = s.basis_mul_eo(p, q);
            if lhs != rhs {
                ws.push(Witness {
                    identity: "peiffer_mixed_even".into(),
                    tuple: vec![s.basis().even_name(p).into(), s.basis().odd_name(q).into()],
                    lhs: s.format_odd(&lhs),
                    rhs: s.format_odd(&rhs),
                });
            }
        }
    }
    checks.push(("peiffer_mixed_even", ws));

    // rho1(boundary(v))(u) = u * v
    let mut ws = Vec::new();
    for p in 0..p0 {
        for q in 0..p1 {
            let lhs = rho.apply1_even_to_odd(&bd.f1.col_vec(q), &s.even_unit(p));
            let rhs = s.basis_mul_eo(p, q);
            if lhs != rhs {
                ws.push(Witness {
                    identity: "peiffer_mixed_odd".into(),
                    tuple: vec![s.basis().even_name(p).into(), s.basis().odd_name(q).into()],
                    lhs: s.format_odd(&lhs),
                    rhs: s.format_odd(&rhs),
                });
            }
        }
    }
    checks.push(("peiffer_mixed_odd", ws));

    for (name, ws) in checks {
        if ws.is_empty() {
            r.push(name, CheckStatus::Pass, None, Vec::new());
        } else {
            let detail = format!("{} basis instance(s) violated", ws.len());
            r.push(name, CheckStatus::Fail, Some(detail), ws);
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::{exe02, k3};
    use crate::algebra::zero_algebra;
    use crate::cocycle::exe02_kernel_and_cocycle;
    use crate::scalar::int;
    use crate::structure::pair_contains;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn adjoint_action_of_k3_is_an_action() {
        for mu in [int(1), int(2), rat(1, 2), int(-1)] {
            let a = k3(&mu).unwrap();
            let rho = adjoint_action(&a);
            let rep = verify_action(&a, &a, &rho).unwrap();
            assert!(rep.passed(), "mu = {mu}: {:?}", rep.violations.first());
        }
    }

    #[test]
    fn adjoint_semidirect_doubles_dimensions() {
        let a = k3(&int(2)).unwrap();
        let s = semidirect(&a, &a, &adjoint_action(&a)).unwrap();
        assert_eq!(s.dim_even(), 2);
        assert_eq!(s.dim_odd(), 4);
        assert!(s.verify_axioms().passed());
        // Names collide, so both copies are suffixed.
        assert_eq!(s.basis().even_name(0), "eps.1");
        assert_eq!(s.basis().even_name(1), "eps.2");
        assert_eq!(s.basis().odd_name(2), "a.2");
    }

    #[test]
    fn zero_action_semidirect_is_the_direct_sum() {
        let a = k3(&int(2)).unwrap();
        let v = zero_algebra(names(&["u"]), names(&["w"]));
        let rho = Action::zero(&a, &v);
        let rep = verify_action(&a, &v, &rho).unwrap();
        assert!(rep.passed());
        let s = semidirect(&a, &v, &rho).unwrap();
        assert_eq!(s, a.direct_sum(&v));
    }

    #[test]
    fn perturbed_adjoint_action_fails_with_witness() {
        let a = k3(&int(2)).unwrap();
        let mut rho = adjoint_action(&a);
        // Corrupt the action of a on b: send b to 2*eps instead of 1/2*eps.
        rho.rho1_odd_to_even[0].set(0, 1, int(2));
        let rep = verify_action(&a, &a, &rho).unwrap();
        assert!(!rep.passed());
        let first = &rep.violations[0];
        assert_eq!(first.identity, "rho1_mixed_product");
        assert_eq!(first.tuple, vec!["a", "eps", "b"]);
        assert_eq!(first.lhs, "eps");
        assert_eq!(first.rhs, "7/4*eps");
    }

    #[test]
    fn action_shape_errors_are_reported() {
        let a = k3(&int(2)).unwrap();
        let v = zero_algebra(names(&["u"]), names(&["w"]));
        let mut rho = Action::zero(&a, &v);
        rho.rho0_even.pop();
        assert_eq!(
            verify_action(&a, &v, &rho).err(),
            Some(ActionError::BlockCount { block: "rho0_even", got: 0, expected: 1 })
        );
        let mut rho = Action::zero(&a, &v);
        rho.rho1_even_to_odd[1] = Matrix::zero(2, 2);
        assert!(matches!(
            semidirect(&a, &v, &rho),
            Err(SemidirectError::Action(ActionError::OperatorShape {
                block: "rho1_even_to_odd",
                index: 1,
                ..
            }))
        ));
    }

    #[test]
    fn exe02_extension_matches_the_known_four_dimensional_algebra() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        let (v, w) = exe02_kernel_and_cocycle(&a, &mu);
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();

        assert_eq!(e.total.dim_even(), 1);
        assert_eq!(e.total.dim_odd(), 3);
        assert_eq!(e.total.basis().odd_names(), &names(&["a1", "a2", "z"])[..]);
        // eps * a1 = mu z, [a1, a2] = eps, and the twist extends by beta(z) = mu z.
        assert_eq!(e.total.format_odd(&e.total.basis_mul_eo(0, 0)), "2*z");
        assert_eq!(e.total.format_even(&e.total.basis_bracket(0, 1)), "eps");
        assert_eq!(e.total.beta().get(2, 2), &int(2));
        assert!(e.total.verify_axioms().passed());

        let report = verify_central_extension(&e);
        assert!(report.passed(), "{}", report.to_text());

        // z is central in the total algebra.
        let z = center(&e.total);
        assert!(pair_contains(&z, &[], &[int(0), int(0), int(1)]));
    }

    #[test]
    fn trivial_cocycle_extension_is_the_direct_sum_with_zero_products() {
        let a = k3(&int(2)).unwrap();
        let v = CoeffSpace::new(
            GradedBasis::new(names(&["u"]), names(&[])).unwrap(),
            Matrix::identity(1),
            Matrix::identity(0),
        )
        .unwrap();
        let w = Cocycle2::zero(&a, &v);
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        assert_eq!(e.total, a.direct_sum(&v.zero_products_algebra()));
        assert!(verify_central_extension(&e).passed());
    }

    #[test]
    fn zero_dimensional_kernel_gives_back_the_base() {
        let a = k3(&int(2)).unwrap();
        let v = CoeffSpace::new(
            GradedBasis::new(vec![], vec![]).unwrap(),
            Matrix::identity(0),
            Matrix::identity(0),
        )
        .unwrap();
        let w = Cocycle2::zero(&a, &v);
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        assert_eq!(e.total, a);
        assert!(verify_central_extension(&e).passed());
    }

    #[test]
    fn non_cocycle_is_rejected_with_the_violated_condition() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        let v = CoeffSpace::new(
            GradedBasis::new(names(&["w"]), names(&["z"])).unwrap(),
            Matrix::identity(1),
            Matrix::from_rows(vec![vec![mu.clone()]]),
        )
        .unwrap();
        // w0(eps,eps) = w is symmetric but fails the cocycle sweep.
        let w = Cocycle2::new(&a, &v, vec![int(1)], vec![int(0); 2], vec![int(0); 4]).unwrap();
        match central_extension_from_cocycle(&a, &v, &w) {
            Err(ExtensionError::NotCocycle { violations, first }) => {
                assert_eq!(violations[0].identity, "cocycle_bracket_leibniz");
                assert!(first.contains("cocycle_bracket_leibniz"), "{first}");
            }
            other => panic!("expected a cocycle rejection, got {other:?}"),
        }
    }

    #[test]
    fn total_table_satisfies_identities_exactly_when_the_cochain_is_a_cocycle() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        // Kernel with one even and one odd direction so that every cochain
        // block is inhabited; beta_V(z) = mu z as in the known extension.
        let v = CoeffSpace::new(
            GradedBasis::new(names(&["w"]), names(&["z"])).unwrap(),
            Matrix::identity(1),
            Matrix::from_rows(vec![vec![mu.clone()]]),
        )
        .unwrap();
        let build = |w0: Vec<Scalar>, w1: Vec<Scalar>, w2: Vec<Scalar>| {
            Cocycle2::new(&a, &v, w0, w1, w2).unwrap()
        };
        let zero0 = || vec![int(0); 1];
        let zero1 = || vec![int(0); 2];
        let zero2 = || vec![int(0); 4];
        let cochains = vec![
            build(zero0(), zero1(), zero2()),
            // The known cocycle w1(eps, a1) = mu z and a rescaling of it.
            build(zero0(), vec![mu.clone(), int(0)], zero2()),
            build(zero0(), vec![int(1), int(0)], zero2()),
            // Structurally admissible perturbations of the other blocks.
            build(vec![int(1)], zero1(), zero2()),
            build(zero0(), vec![int(0), int(1)], zero2()),
            build(zero0(), zero1(), vec![int(0), int(1), int(-1), int(0)]),
        ];
        let mut both = [0usize, 0];
        for w in cochains {
            let direct = is_cocycle(&a, &v, &w).unwrap().passed();
            let operational = extension_total(&a, &v, &w).verify_axioms().passed();
            assert_eq!(direct, operational);
            both[usize::from(direct)] += 1;
        }
        // The sweep exercises both outcomes.
        assert!(both[0] > 0 && both[1] > 0, "{both:?}");
    }

    #[test]
    fn corrupted_total_space_fails_centrality_and_projection() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        let (v, w) = exe02_kernel_and_cocycle(&a, &mu);
        let mut e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        // Make z act on the base: eps * z = a1 in the corrupted table.
        let basis = e.total.basis().clone();
        let mut c01 = vec![Scalar::zero(); 1 * 3 * 3];
        for j in 0..3 {
            for k in 0..3 {
                c01[j * 3 + k] = e.total.c01(0, j, k).clone();
            }
        }
        c01[2 * 3 + 0] = int(1);
        let mut c00 = Vec::new();
        let mut c11 = Vec::new();
        for i in 0..1 {
            for j in 0..1 {
                for k in 0..1 {
                    c00.push(e.total.c00(i, j, k).clone());
                }
            }
        }
        for j in 0..3 {
            for k in 0..3 {
                c11.push(e.total.c11(j, k, 0).clone());
            }
        }
        e.total = HomLieAntialgebra::new(
            basis,
            c00,
            c01,
            c11,
            e.total.alpha().clone(),
            e.total.beta().clone(),
        )
        .unwrap();
        let report = verify_central_extension(&e);
        assert!(!report.passed());
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.as_str())
            .collect();
        assert!(failed.contains(&"kernel_central"), "{failed:?}");
        assert!(failed.contains(&"projection_homomorphism"), "{failed:?}");
    }

    #[test]
    fn exe02_crossed_module_is_certified() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        let (v, w) = exe02_kernel_and_cocycle(&a, &mu);
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        let cm = crossed_module_from_central_extension(&e);
        assert_eq!(cm.source.dim_odd(), 3);
        let report = verify_crossed_module(&cm);
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn identity_crossed_module_with_adjoint_action_is_certified() {
        let a = k3(&int(2)).unwrap();
        let cm = CrossedModule {
            source: a.clone(),
            base: a.clone(),
            action: adjoint_action(&a),
            boundary: GradedMorphism::identity(&a),
        };
        let report = verify_crossed_module(&cm);
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn redirecting_the_boundary_breaks_the_crossed_module() {
        let mu = int(2);
        let a = exe02(&mu).unwrap();
        let (v, w) = exe02_kernel_and_cocycle(&a, &mu);
        let e = central_extension_from_cocycle(&a, &v, &w).unwrap();
        let mut cm = crossed_module_from_central_extension(&e);
        // Send z to a1 instead of 0.
        cm.boundary.f1.set(0, 2, int(1));
        let report = verify_crossed_module(&cm);
        assert!(!report.passed());
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.as_str())
            .collect();
        assert!(failed.contains(&"boundary_homomorphism"), "{failed:?}");
    }

    #[test]
    fn crossed_module_with_wrong_action_fails_a_peiffer_condition() {
        let a = k3(&int(2)).unwrap();
        let mut cm = CrossedModule {
            source: a.clone(),
            base: a.clone(),
            action: adjoint_action(&a),
            boundary: GradedMorphism::identity(&a),
        };
        // Zero out the even action on the odd part; products of lifts no
        // longer match the source products.
        cm.action.rho0_odd[0] = Matrix::zero(2, 2);
        let report = verify_crossed_module(&cm);
        assert!(!report.passed());
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.as_str())
            .collect();
        assert!(failed.contains(&"peiffer_mixed_even"), "{failed:?}");
    }
}
