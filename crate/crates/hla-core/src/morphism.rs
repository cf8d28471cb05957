//! Grade-preserving linear maps between algebras and the homomorphism check.

use crate::algebra::HomLieAntialgebra;
use crate::matrix::Matrix;
use crate::report::Witness;
use crate::structure::GradedSubspacePair;
use crate::subspace::Subspace;

/// A grade-preserving linear map: `f0` on even parts, `f1` on odd parts,
/// both in column convention (columns are images of source basis vectors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedMorphism {
    pub f0: Matrix,
    pub f1: Matrix,
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum MorphismError {
    #[error("block {block} is {got_rows}x{got_cols} but the algebras need {want_rows}x{want_cols}")]
    Shape { block: &'static str, got_rows: usize, got_cols: usize, want_rows: usize, want_cols: usize },
}

/// Report of the five homomorphism conditions with violating instances.
#[derive(Clone, Debug)]
pub struct MorphismReport {
    pub violations: Vec<Witness>,
}

impl MorphismReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl GradedMorphism {
    pub fn new(f0: Matrix, f1: Matrix) -> Self {
        GradedMorphism { f0, f1 }
    }

    pub fn identity(a: &HomLieAntialgebra) -> Self {
        GradedMorphism {
            f0: Matrix::identity(a.dim_even()),
            f1: Matrix::identity(a.dim_odd()),
        }
    }

    pub fn zero(source: &HomLieAntialgebra, target: &HomLieAntialgebra) -> Self {
        GradedMorphism {
            f0: Matrix::zero(target.dim_even(), source.dim_even()),
            f1: Matrix::zero(target.dim_odd(), source.dim_odd()),
        }
    }

    pub fn apply_even(&self, u: &[crate::scalar::Scalar]) -> Vec<crate::scalar::Scalar> {
        self.f0.mul_vec(u)
    }

    pub fn apply_odd(&self, w: &[crate::scalar::Scalar]) -> Vec<crate::scalar::Scalar> {
        self.f1.mul_vec(w)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &GradedMorphism) -> GradedMorphism {
        GradedMorphism { f0: self.f0.mul(&first.f0), f1: self.f1.mul(&first.f1) }
    }

    pub fn check_shapes(
        &self,
        source: &HomLieAntialgebra,
        target: &HomLieAntialgebra,
    ) -> Result<(), MorphismError> {
        if self.f0.rows() != target.dim_even() || self.f0.cols() != source.dim_even() {
            return Err(MorphismError::Shape {
                block: "f0",
                got_rows: self.f0.rows(),
                got_cols: self.f0.cols(),
                want_rows: target.dim_even(),
                want_cols: source.dim_even(),
            });
        }
        if self.f1.rows() != target.dim_odd() || self.f1.cols() != source.dim_odd() {
            return Err(MorphismError::Shape {
                block: "f1",
                got_rows: self.f1.rows(),
                got_cols: self.f1.cols(),
                want_rows: target.dim_odd(),
                want_cols: source.dim_odd(),
            });
        }
        Ok(())
    }

    /// The five homomorphism conditions, checked on all basis pairs:
    /// twist compatibility for both grades, then compatibility with the even
    /// product, the mixed product, and the odd bracket.
    pub fn is_homomorphism(
        &self,
        source: &HomLieAntialgebra,
        target: &HomLieAntialgebra,
    ) -> Result<MorphismReport, MorphismError> {
        self.check_shapes(source, target)?;
        let mut violations = Vec::new();
        let (d0, d1) = (source.dim_even(), source.dim_odd());

        let lhs0 = self.f0.mul(source.alpha());
        let rhs0 = target.alpha().mul(&self.f0);
        for i in 0..d0 {
            if lhs0.col_vec(i) != rhs0.col_vec(i) {
                violations.push(Witness {
                    identity: "even_twist_compat".into(),
                    tuple: vec![source.basis().even_name(i).into()],
                    lhs: target.format_even(&lhs0.col_vec(i)),
                    rhs: target.format_even(&rhs0.col_vec(i)),
                });
            }
        }
        let lhs1 = self.f1.mul(source.beta());
        let rhs1 = target.beta().mul(&self.f1);
        for j in 0..d1 {
            if lhs1.col_vec(j) != rhs1.col_vec(j) {
                violations.push(Witness {
                    identity: "odd_twist_compat".into(),
                    tuple: vec![source.basis().odd_name(j).into()],
                    lhs: target.format_odd(&lhs1.col_vec(j)),
                    rhs: target.format_odd(&rhs1.col_vec(j)),
                });
            }
        }

        for i in 0..d0 {
            for j in 0..d0 {
                let lhs = self.apply_even(&source.basis_mul_ee(i, j));
                let rhs = target.mul_ee(&self.f0.col_vec(i), &self.f0.col_vec(j));
                if lhs != rhs {
                    violations.push(Witness {
                        identity: "even_product_compat".into(),
                        tuple: vec![
                            source.basis().even_name(i).into(),
                            source.basis().even_name(j).into(),
                        ],
                        lhs: target.format_even(&lhs),
                        rhs: target.format_even(&rhs),
                    });
                }
            }
        }
        for i in 0..d0 {
            for j in 0..d1 {
                let lhs = self.apply_odd(&source.basis_mul_eo(i, j));
                let rhs = target.mul_eo(&self.f0.col_vec(i), &self.f1.col_vec(j));
                if lhs != rhs {
                    violations.push(Witness {
                        identity: "mixed_product_compat".into(),
                        tuple: vec![
                            source.basis().even_name(i).into(),
                            source.basis().odd_name(j).into(),
                        ],
                        lhs: target.format_odd(&lhs),
                        rhs: target.format_odd(&rhs),
                    });
                }
            }
        }
        for i in 0..d1 {
            for j in 0..d1 {
                let lhs = self.apply_even(&source.basis_bracket(i, j));
                let rhs = target.bracket(&self.f1.col_vec(i), &self.f1.col_vec(j));
                if lhs != rhs {
                    violations.push(Witness {
                        identity: "bracket_compat".into(),
                        tuple: vec![
                            source.basis().odd_name(i).into(),
                            source.basis().odd_name(j).into(),
                        ],
                        lhs: target.format_even(&lhs),
                        rhs: target.format_even(&rhs),
                    });
                }
            }
        }

        Ok(MorphismReport { violations })
    }

    pub fn is_surjective(&self, target: &HomLieAntialgebra) -> bool {
        self.f0.rank() == target.dim_even() && self.f1.rank() == target.dim_odd()
    }

    pub fn is_injective(&self) -> bool {
        self.f0.rank() == self.f0.cols() && self.f1.rank() == self.f1.cols()
    }

    /// The graph `{(x, f(x))}` as a graded pair inside the direct sum of
    /// source and target (source coordinates first).
    pub fn graph(
        &self,
        source: &HomLieAntialgebra,
        target: &HomLieAntialgebra,
    ) -> GradedSubspacePair {
        let mut even_rows = Vec::new();
        for i in 0..source.dim_even() {
            let mut row = source.even_unit(i);
            row.extend(self.f0.col_vec(i));
            even_rows.push(row);
        }
        let mut odd_rows = Vec::new();
        for j in 0..source.dim_odd() {
            let mut row = source.odd_unit(j);
            row.extend(self.f1.col_vec(j));
            odd_rows.push(row);
        }
        GradedSubspacePair {
            even: Subspace::from_spanning(
                source.dim_even() + target.dim_even(),
                &even_rows,
            ),
            odd: Subspace::from_spanning(source.dim_odd() + target.dim_odd(), &odd_rows),
        }
    }
}
