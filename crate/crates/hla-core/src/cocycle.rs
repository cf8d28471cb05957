//! 2-cocycles with coefficients in a graded space carrying its own twists.

use crate::algebra::{AxiomReport, GradedBasis, HomLieAntialgebra};
use crate::homology::{d1_matrix, CochainDims};
use crate::matrix::Matrix;
use crate::report::Witness;
use crate::scalar::{format_combination, format_rational, Scalar};
use num_traits::Zero;

/// A graded coefficient space `V = V0 (+) V1` with twists. Unlike an
/// algebra it carries no products; as the kernel of a central extension it
/// is implicitly given the zero products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffSpace {
    basis: GradedBasis,
    alpha: Matrix,
    beta: Matrix,
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum CocycleError {
    #[error("coefficient twist {matrix} is {got_rows}x{got_cols}, expected {expected}x{expected}")]
    TwistShape { matrix: &'static str, got_rows: usize, got_cols: usize, expected: usize },
    #[error("cocycle block {block} has length {got}, expected {expected}")]
    BlockShape { block: &'static str, got: usize, expected: usize },
    #[error("cocycle block w0 is not symmetric at ({i}, {j}), coordinate {coord}: {lhs} vs {rhs}")]
    EvenSymmetry { i: usize, j: usize, coord: usize, lhs: String, rhs: String },
    #[error("cocycle block w2 is not antisymmetric at ({i}, {j}), coordinate {coord}: {lhs} vs {rhs}")]
    OddAntisymmetry { i: usize, j: usize, coord: usize, lhs: String, rhs: String },
    #[error("cocycle dimensions {got:?} do not match algebra/coefficients {expected:?}")]
    DimensionMismatch { got: (usize, usize, usize, usize), expected: (usize, usize, usize, usize) },
}

impl CoeffSpace {
    pub fn new(basis: GradedBasis, alpha: Matrix, beta: Matrix) -> Result<Self, CocycleError> {
        if alpha.rows() != basis.dim_even() || alpha.cols() != basis.dim_even() {
            return Err(CocycleError::TwistShape {
                matrix: "alpha",
                got_rows: alpha.rows(),
                got_cols: alpha.cols(),
                expected: basis.dim_even(),
            });
        }
        if beta.rows() != basis.dim_odd() || beta.cols() != basis.dim_odd() {
            return Err(CocycleError::TwistShape {
                matrix: "beta",
                got_rows: beta.rows(),
                got_cols: beta.cols(),
                expected: basis.dim_odd(),
            });
        }
        Ok(CoeffSpace { basis, alpha, beta })
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

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn format_even(&self, coords: &[Scalar]) -> String {
        format_combination(coords, self.basis.even_names())
    }

    pub fn format_odd(&self, coords: &[Scalar]) -> String {
        format_combination(coords, self.basis.odd_names())
    }

    /// The space regarded as an algebra with all-zero products; this is the
    /// structure a central-extension kernel carries.
    pub fn zero_products_algebra(&self) -> HomLieAntialgebra {
        let (p0, p1) = (self.dim_even(), self.dim_odd());
        HomLieAntialgebra::new(
            self.basis.clone(),
            vec![Scalar::zero(); p0 * p0 * p0],
            vec![Scalar::zero(); p0 * p1 * p1],
            vec![Scalar::zero(); p1 * p1 * p0],
            self.alpha.clone(),
            self.beta.clone(),
        )
        .expect("zero tables are symmetric")
    }
}

/// A `V`-valued 2-cochain with symmetric `w0`, unrestricted `w1`, and
/// antisymmetric `w2`; flat blocks indexed `(i*d + j)*p + coord`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cocycle2 {
    d0: usize,
    d1: usize,
    p0: usize,
    p1: usize,
    w0: Vec<Scalar>,
    w1: Vec<Scalar>,
    w2: Vec<Scalar>,
}

impl Cocycle2 {
    pub fn new(
        a: &HomLieAntialgebra,
        v: &CoeffSpace,
        w0: Vec<Scalar>,
        w1: Vec<Scalar>,
        w2: Vec<Scalar>,
    ) -> Result<Self, CocycleError> {
        let (d0, d1) = (a.dim_even(), a.dim_odd());
        let (p0, p1) = (v.dim_even(), v.dim_odd());
        let shapes = [
            ("w0", w0.len(), d0 * d0 * p0),
            ("w1", w1.len(), d0 * d1 * p1),
            ("w2", w2.len(), d1 * d1 * p0),
        ];
        for (block, got, expected) in shapes {
            if got != expected {
                return Err(CocycleError::BlockShape { block, got, expected });
            }
        }
        let c = Cocycle2 { d0, d1, p0, p1, w0, w1, w2 };
        for i in 0..d0 {
            for j in 0..d0 {
                for s in 0..p0 {
                    let lhs = &c.w0[(i * d0 + j) * p0 + s];
                    let rhs = &c.w0[(j * d0 + i) * p0 + s];
                    if lhs != rhs {
                        return Err(CocycleError::EvenSymmetry {
                            i,
                            j,
                            coord: s,
                            lhs: format_rational(lhs),
                            rhs: format_rational(rhs),
                        });
                    }
                }
            }
        }
        for i in 0..d1 {
            for j in 0..d1 {
                for s in 0..p0 {
                    let lhs = c.w2[(i * d1 + j) * p0 + s].clone();
                    let rhs = -c.w2[(j * d1 + i) * p0 + s].clone();
                    if lhs != rhs {
                        return Err(CocycleError::OddAntisymmetry {
                            i,
                            j,
                            coord: s,
                            lhs: format_rational(&lhs),
                            rhs: format_rational(&rhs),
                        });
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn zero(a: &HomLieAntialgebra, v: &CoeffSpace) -> Self {
        let (d0, d1) = (a.dim_even(), a.dim_odd());
        let (p0, p1) = (v.dim_even(), v.dim_odd());
        Cocycle2 {
            d0,
            d1,
            p0,
            p1,
            w0: vec![Scalar::zero(); d0 * d0 * p0],
            w1: vec![Scalar::zero(); d0 * d1 * p1],
            w2: vec![Scalar::zero(); d1 * d1 * p0],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize, usize) {
        (self.d0, self.d1, self.p0, self.p1)
    }

    pub fn matches(&self, a: &HomLieAntialgebra, v: &CoeffSpace) -> Result<(), CocycleError> {
        let expected = (a.dim_even(), a.dim_odd(), v.dim_even(), v.dim_odd());
        if self.dims() != expected {
            return Err(CocycleError::DimensionMismatch { got: self.dims(), expected });
        }
        Ok(())
    }

    pub fn w0(&self, i: usize, j: usize) -> &[Scalar] {
        &self.w0[(i * self.d0 + j) * self.p0..(i * self.d0 + j + 1) * self.p0]
    }

    pub fn w1(&self, i: usize, j: usize) -> &[Scalar] {
        &self.w1[(i * self.d1 + j) * self.p1..(i * self.d1 + j + 1) * self.p1]
    }

    pub fn w2(&self, i: usize, j: usize) -> &[Scalar] {
        &self.w2[(i * self.d1 + j) * self.p0..(i * self.d1 + j + 1) * self.p0]
    }

    /// Bilinear evaluation of `w0` on even coordinate vectors.
    pub fn w0_eval(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.p0];
        for i in 0..self.d0 {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.d0 {
                if v[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &v[j];
                for (s, val) in self.w0(i, j).iter().enumerate() {
                    out[s] += val * &f;
                }
            }
        }
        out
    }

    pub fn w1_eval(&self, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.p1];
        for i in 0..self.d0 {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.d1 {
                if w[j].is_zero() {
                    continue;
                }
                let f = &u[i] * &w[j];
                for (t, val) in self.w1(i, j).iter().enumerate() {
                    out[t] += val * &f;
                }
            }
        }
        out
    }

    pub fn w2_eval(&self, w1: &[Scalar], w2: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.p0];
        for i in 0..self.d1 {
            if w1[i].is_zero() {
                continue;
            }
            for j in 0..self.d1 {
                if w2[j].is_zero() {
                    continue;
                }
                let f = &w1[i] * &w2[j];
                for (s, val) in self.w2(i, j).iter().enumerate() {
                    out[s] += val * &f;
                }
            }
        }
        out
    }

    /// Flat layout `[w0 | w1 | w2]` matching the cochain coordinate system.
    pub fn to_flat(&self) -> Vec<Scalar> {
        let mut flat = self.w0.clone();
        flat.extend(self.w1.iter().cloned());
        flat.extend(self.w2.iter().cloned());
        flat
    }

    pub fn from_flat(
        a: &HomLieAntialgebra,
        v: &CoeffSpace,
        flat: &[Scalar],
    ) -> Result<Self, CocycleError> {
        let dims = CochainDims::new(a, v.dim_even(), v.dim_odd());
        if flat.len() != dims.c2_dim() {
            return Err(CocycleError::BlockShape {
                block: "flat",
                got: flat.len(),
                expected: dims.c2_dim(),
            });
        }
        let w0 = flat[..dims.w0_len()].to_vec();
        let w1 = flat[dims.w0_len()..dims.w0_len() + dims.w1_len()].to_vec();
        let w2 = flat[dims.w0_len() + dims.w1_len()..].to_vec();
        Cocycle2::new(a, v, w0, w1, w2)
    }

    pub fn is_zero(&self) -> bool {
        self.w0.iter().chain(&self.w1).chain(&self.w2).all(|x| x.is_zero())
    }
}

/// A `V`-valued 1-cochain: `v0[k*p0+s]` is the `s`-coordinate of the image
/// of the `k`-th even basis vector, likewise `v1` on the odd part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain1 {
    pub v0: Vec<Scalar>,
    pub v1: Vec<Scalar>,
}

impl Cochain1 {
    pub fn zero(a: &HomLieAntialgebra, v: &CoeffSpace) -> Self {
        Cochain1 {
            v0: vec![Scalar::zero(); a.dim_even() * v.dim_even()],
            v1: vec![Scalar::zero(); a.dim_odd() * v.dim_odd()],
        }
    }

    pub fn to_flat(&self) -> Vec<Scalar> {
        let mut flat = self.v0.clone();
        flat.extend(self.v1.iter().cloned());
        flat
    }
}

/// Apply the first differential to a 1-cochain: the result's components are
/// the cochain evaluated on products.
pub fn d1_apply(a: &HomLieAntialgebra, v: &CoeffSpace, u: &Cochain1) -> Cocycle2 {
    let dims = CochainDims::new(a, v.dim_even(), v.dim_odd());
    let image = d1_matrix(a, dims.p0, dims.p1).mul_vec(&u.to_flat());
    Cocycle2::from_flat(a, v, &image).expect("differential images are structurally symmetric")
}

/// Check the four cocycle conditions on all basis triples. The coefficient
/// twists never enter; only the algebra's products and twists do.
pub fn is_cocycle(
    a: &HomLieAntialgebra,
    v: &CoeffSpace,
    w: &Cocycle2,
) -> Result<AxiomReport, CocycleError> {
    w.matches(a, v)?;
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let alpha = a.alpha();
    let beta = a.beta();
    let half = crate::scalar::rat(1, 2);
    let mut report = AxiomReport { instances_checked: 0, violations: Vec::new() };

    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let lhs = w.w0_eval(&alpha.col_vec(i), &a.basis_mul_ee(j, k));
                let rhs = w.w0_eval(&a.basis_mul_ee(i, j), &alpha.col_vec(k));
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "cocycle_even_assoc".into(),
                        tuple: vec![
                            a.basis().even_name(i).into(),
                            a.basis().even_name(j).into(),
                            a.basis().even_name(k).into(),
                        ],
                        lhs: v.format_even(&lhs),
                        rhs: v.format_even(&rhs),
                    });
                }
            }
            for m in 0..d1 {
                let lhs = w.w1_eval(&alpha.col_vec(i), &a.basis_mul_eo(j, m));
                let mut rhs = w.w1_eval(&a.basis_mul_ee(i, j), &beta.col_vec(m));
                for x in &mut rhs {
                    *x *= &half;
                }
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "cocycle_mixed_assoc".into(),
                        tuple: vec![
                            a.basis().even_name(i).into(),
                            a.basis().even_name(j).into(),
                            a.basis().odd_name(m).into(),
                        ],
                        lhs: v.format_odd(&lhs),
                        rhs: v.format_odd(&rhs),
                    });
                }
            }
        }
        for m in 0..d1 {
            for n in 0..d1 {
                let t1 = w.w0_eval(&alpha.col_vec(i), &a.basis_bracket(m, n));
                let t2 = w.w2_eval(&a.basis_mul_eo(i, m), &beta.col_vec(n));
                let t3 =
                    w.w2_eval(&beta.col_vec(m), &a.mul_eo(&a.even_unit(i), &a.odd_unit(n)));
                let lhs = t1;
                let rhs: Vec<Scalar> = t2.iter().zip(&t3).map(|(x, y)| x + y).collect();
                report.instances_checked += 1;
                if lhs != rhs {
                    report.violations.push(Witness {
                        identity: "cocycle_bracket_leibniz".into(),
                        tuple: vec![
                            a.basis().even_name(i).into(),
                            a.basis().odd_name(m).into(),
                            a.basis().odd_name(n).into(),
                        ],
                        lhs: v.format_even(&lhs),
                        rhs: v.format_even(&rhs),
                    });
                }
            }
        }
    }
    for m in 0..d1 {
        for n in 0..d1 {
            for l in 0..d1 {
                let term = |y1: usize, y2: usize, y3: usize| {
                    w.w1_eval(&a.basis_bracket(y2, y3), &beta.col_vec(y1))
                };
                let (t1, t2, t3) = (term(m, n, l), term(n, l, m), term(l, m, n));
                let sum: Vec<Scalar> = t1
                    .iter()
                    .zip(&t2)
                    .zip(&t3)
                    .map(|((x, y), z)| x + y + z)
                    .collect();
                report.instances_checked += 1;
                if sum.iter().any(|x| !x.is_zero()) {
                    report.violations.push(Witness {
                        identity: "cocycle_odd_jacobi".into(),
                        tuple: vec![
                            a.basis().odd_name(m).into(),
                            a.basis().odd_name(n).into(),
                            a.basis().odd_name(l).into(),
                        ],
                        lhs: v.format_odd(&sum),
                        rhs: "0".into(),
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Solve `d1 u = w`; returns a 1-cochain with that image if one exists.
/// Free variables are fixed to zero, so the answer is deterministic.
pub fn is_coboundary(
    a: &HomLieAntialgebra,
    v: &CoeffSpace,
    w: &Cocycle2,
) -> Option<Cochain1> {
    let dims = CochainDims::new(a, v.dim_even(), v.dim_odd());
    let solution = d1_matrix(a, dims.p0, dims.p1).solve(&w.to_flat())?;
    let split = a.dim_even() * dims.p0;
    Some(Cochain1 { v0: solution[..split].to_vec(), v1: solution[split..].to_vec() })
}

/// The coefficient space and nontrivial cocycle of the built-in
/// 3-dimensional example: odd kernel `{z}` with twist `mu`, and
/// `w1(eps, a1) = mu z`.
pub fn exe02_kernel_and_cocycle(
    a: &HomLieAntialgebra,
    mu: &Scalar,
) -> (CoeffSpace, Cocycle2) {
    let basis = GradedBasis::new(vec![], vec!["z".into()]).expect("fixed names");
    let mut beta = Matrix::zero(1, 1);
    beta.set(0, 0, mu.clone());
    let v = CoeffSpace::new(basis, Matrix::zero(0, 0), beta).expect("shapes match");
    let mut w1 = vec![Scalar::zero(); a.dim_even() * a.dim_odd()];
    w1[0] = mu.clone();
    let w = Cocycle2::new(a, &v, vec![], w1, vec![]).expect("shapes match");
    (v, w)
}
