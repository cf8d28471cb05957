//! Low-degree (co)chain complexes and second (co)homology.
//!
//! Cochain side (coefficients in a graded space of dimensions `(p0, p1)`,
//! trivial coefficients being `(1, 1)`):
//! - `C1 = Hom(a0, V0) (+) Hom(a1, V1)`,
//! - `C2 = [w0 | w1 | w2]` with `w0: a0 x a0 -> V0`, `w1: a0 x a1 -> V1`,
//!   `w2: a1 x a1 -> V0` as full (unsymmetrized) coefficient blocks,
//! - `d1` precomposes with the products, `d2` implements the four
//!   grade-signature formulas; `d2 * d1 = 0` whenever the algebra's
//!   identities hold.
//!
//! Chain side: `C2 = a (x) a` in block order `[EE | OO | EO | OE]` (both
//! even-even blocks first so reduced quotient representatives stay grade
//! pure), `C3` the full tensor cube over the even-first global basis.
//! `d2` is the multiplication map, `d3` carries the four displayed
//! signatures; every other signature maps to zero. The relation subspace
//! combines the graded symmetrizers with the image of `d3`, and the second
//! homology is `ker d2` modulo that subspace.

use crate::algebra::HomLieAntialgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::{QuotientSpace, Subspace};
use num_traits::Zero;

/// Coordinate layout of the graded 2-tensor space, blocks `[EE|OO|EO|OE]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TensorIndex {
    pub d0: usize,
    pub d1: usize,
}

impl TensorIndex {
    pub fn of(a: &HomLieAntialgebra) -> Self {
        TensorIndex { d0: a.dim_even(), d1: a.dim_odd() }
    }

    pub fn n2(&self) -> usize {
        self.d0 * self.d0 + self.d1 * self.d1 + 2 * self.d0 * self.d1
    }

    pub fn ee(&self, i: usize, j: usize) -> usize {
        i * self.d0 + j
    }

    pub fn oo(&self, i: usize, j: usize) -> usize {
        self.d0 * self.d0 + i * self.d1 + j
    }

    pub fn eo(&self, i: usize, j: usize) -> usize {
        self.d0 * self.d0 + self.d1 * self.d1 + i * self.d1 + j
    }

    /// Odd-first pair `o_i (x) e_j`.
    pub fn oe(&self, i: usize, j: usize) -> usize {
        self.d0 * self.d0 + self.d1 * self.d1 + self.d0 * self.d1 + i * self.d0 + j
    }

    /// Total dimension of the ungraded space.
    pub fn n(&self) -> usize {
        self.d0 + self.d1
    }

    /// Flat index into the tensor cube over the even-first global basis.
    pub fn cube(&self, g1: usize, g2: usize, g3: usize) -> usize {
        (g1 * self.n() + g2) * self.n() + g3
    }

    /// Map a global index to the graded pair coordinate of `g1 (x) g2`.
    pub fn pair(&self, g1: usize, g2: usize) -> usize {
        match (g1 < self.d0, g2 < self.d0) {
            (true, true) => self.ee(g1, g2),
            (false, false) => self.oo(g1 - self.d0, g2 - self.d0),
            (true, false) => self.eo(g1, g2 - self.d0),
            (false, true) => self.oe(g1 - self.d0, g2),
        }
    }

    /// Human-readable pair name for a flat 2-tensor coordinate.
    pub fn describe(&self, a: &HomLieAntialgebra, idx: usize) -> String {
        let (d0, d1) = (self.d0, self.d1);
        if idx < d0 * d0 {
            let (i, j) = (idx / d0, idx % d0);
            return format!("{}(x){}", a.basis().even_name(i), a.basis().even_name(j));
        }
        let idx = idx - d0 * d0;
        if idx < d1 * d1 {
            let (i, j) = (idx / d1, idx % d1);
            return format!("{}(x){}", a.basis().odd_name(i), a.basis().odd_name(j));
        }
        let idx = idx - d1 * d1;
        if idx < d0 * d1 {
            let (i, j) = (idx / d1, idx % d1);
            return format!("{}(x){}", a.basis().even_name(i), a.basis().odd_name(j));
        }
        let idx = idx - d0 * d1;
        let (i, j) = (idx / d0, idx % d0);
        format!("{}(x){}", a.basis().odd_name(i), a.basis().even_name(j))
    }
}

/// Coordinate layout of the cochain spaces for coefficient dims `(p0, p1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CochainDims {
    pub d0: usize,
    pub d1: usize,
    pub p0: usize,
    pub p1: usize,
}

impl CochainDims {
    pub fn new(a: &HomLieAntialgebra, p0: usize, p1: usize) -> Self {
        CochainDims { d0: a.dim_even(), d1: a.dim_odd(), p0, p1 }
    }

    pub fn c1_dim(&self) -> usize {
        self.d0 * self.p0 + self.d1 * self.p1
    }

    pub fn c2_dim(&self) -> usize {
        self.w0_len() + self.w1_len() + self.w2_len()
    }

    pub fn w0_len(&self) -> usize {
        self.d0 * self.d0 * self.p0
    }

    pub fn w1_len(&self) -> usize {
        self.d0 * self.d1 * self.p1
    }

    pub fn w2_len(&self) -> usize {
        self.d1 * self.d1 * self.p0
    }

    pub fn v0_col(&self, k: usize, s: usize) -> usize {
        k * self.p0 + s
    }

    pub fn v1_col(&self, k: usize, t: usize) -> usize {
        self.d0 * self.p0 + k * self.p1 + t
    }

    pub fn w0_col(&self, i: usize, j: usize, s: usize) -> usize {
        (i * self.d0 + j) * self.p0 + s
    }

    pub fn w1_col(&self, i: usize, j: usize, t: usize) -> usize {
        self.w0_len() + (i * self.d1 + j) * self.p1 + t
    }

    pub fn w2_col(&self, i: usize, j: usize, s: usize) -> usize {
        self.w0_len() + self.w1_len() + (i * self.d1 + j) * self.p0 + s
    }

    pub fn c3_dim(&self) -> usize {
        let CochainDims { d0, d1, p0, p1 } = *self;
        d0 * d0 * d0 * p0 + d0 * d0 * d1 * p1 + d0 * d1 * d1 * p0 + d1 * d1 * d1 * p1
    }

    fn xxx_row(&self, i: usize, j: usize, k: usize, s: usize) -> usize {
        ((i * self.d0 + j) * self.d0 + k) * self.p0 + s
    }

    fn xxy_row(&self, i: usize, j: usize, m: usize, t: usize) -> usize {
        self.d0 * self.d0 * self.d0 * self.p0
            + ((i * self.d0 + j) * self.d1 + m) * self.p1
            + t
    }

    fn xyy_row(&self, i: usize, m: usize, n: usize, s: usize) -> usize {
        self.d0 * self.d0 * self.d0 * self.p0
            + self.d0 * self.d0 * self.d1 * self.p1
            + ((i * self.d1 + m) * self.d1 + n) * self.p0
            + s
    }

    fn yyy_row(&self, m: usize, n: usize, l: usize, t: usize) -> usize {
        self.d0 * self.d0 * self.d0 * self.p0
            + self.d0 * self.d0 * self.d1 * self.p1
            + self.d0 * self.d1 * self.d1 * self.p0
            + ((m * self.d1 + n) * self.d1 + l) * self.p1
            + t
    }
}

/// First differential on `V`-valued cochains: precomposition of a 1-cochain
/// with the three products. Rows index `C2`, columns `C1`.
pub fn d1_matrix(a: &HomLieAntialgebra, p0: usize, p1: usize) -> Matrix {
    let dims = CochainDims::new(a, p0, p1);
    let mut m = Matrix::zero(dims.c2_dim(), dims.c1_dim());
    for i in 0..dims.d0 {
        for j in 0..dims.d0 {
            for k in 0..dims.d0 {
                let c = a.c00(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for s in 0..p0 {
                    m.add_at(dims.w0_col(i, j, s), dims.v0_col(k, s), c);
                }
            }
        }
        for j in 0..dims.d1 {
            for k in 0..dims.d1 {
                let c = a.c01(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for t in 0..p1 {
                    m.add_at(dims.w1_col(i, j, t), dims.v1_col(k, t), c);
                }
            }
        }
    }
    for i in 0..dims.d1 {
        for j in 0..dims.d1 {
            for k in 0..dims.d0 {
                let c = a.c11(i, j, k);
                if c.is_zero() {
                    continue;
                }
                for s in 0..p0 {
                    m.add_at(dims.w2_col(i, j, s), dims.v0_col(k, s), c);
                }
            }
        }
    }
    m
}

/// Second differential on `V`-valued 2-cochains, one row block per argument
/// grade signature. The odd-first writing of `w1` in the all-odd signature is
/// evaluated with the even product argument first.
pub fn d2_matrix(a: &HomLieAntialgebra, p0: usize, p1: usize) -> Matrix {
    let dims = CochainDims::new(a, p0, p1);
    let (d0, d1) = (dims.d0, dims.d1);
    let alpha = a.alpha();
    let beta = a.beta();
    let half = crate::scalar::rat(1, 2);
    let mut m = Matrix::zero(dims.c3_dim(), dims.c2_dim());

    // w0(alpha(x1), x2*x3) - w0(x1*x2, alpha(x3))
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                for p in 0..d0 {
                    for q in 0..d0 {
                        let t1 = alpha.get(p, i) * a.c00(j, k, q);
                        let t2 = a.c00(i, j, p) * alpha.get(q, k);
                        if t1.is_zero() && t2.is_zero() {
                            continue;
                        }
                        let v = t1 - t2;
                        for s in 0..p0 {
                            m.add_at(dims.xxx_row(i, j, k, s), dims.w0_col(p, q, s), &v);
                        }
                    }
                }
            }
        }
    }

    // w1(alpha(x1), x2*y1) - 1/2 w1(x1*x2, beta(y1))
    for i in 0..d0 {
        for j in 0..d0 {
            for mm in 0..d1 {
                for p in 0..d0 {
                    for q in 0..d1 {
                        let t1 = alpha.get(p, i) * a.c01(j, mm, q);
                        let t2 = &half * &(a.c00(i, j, p) * beta.get(q, mm));
                        if t1.is_zero() && t2.is_zero() {
                            continue;
                        }
                        let v = t1 - t2;
                        for t in 0..p1 {
                            m.add_at(dims.xxy_row(i, j, mm, t), dims.w1_col(p, q, t), &v);
                        }
                    }
                }
            }
        }
    }

    // w0(alpha(x1), [y1,y2]) - w2(x1*y1, beta(y2)) - w2(beta(y1), x1*y2)
    for i in 0..d0 {
        for mm in 0..d1 {
            for nn in 0..d1 {
                for p in 0..d0 {
                    for q in 0..d0 {
                        let t = alpha.get(p, i) * a.c11(mm, nn, q);
                        if !t.is_zero() {
                            for s in 0..p0 {
                                m.add_at(
                                    dims.xyy_row(i, mm, nn, s),
                                    dims.w0_col(p, q, s),
                                    &t,
                                );
                            }
                        }
                    }
                }
                for p in 0..d1 {
                    for q in 0..d1 {
                        let t2 = a.c01(i, mm, p) * beta.get(q, nn);
                        let t3 = beta.get(p, mm) * a.c01(i, nn, q);
                        if t2.is_zero() && t3.is_zero() {
                            continue;
                        }
                        let v = -(t2 + t3);
                        for s in 0..p0 {
                            m.add_at(dims.xyy_row(i, mm, nn, s), dims.w2_col(p, q, s), &v);
                        }
                    }
                }
            }
        }
    }

    // cyclic sum of w1([y2,y3], beta(y1)) over the three odd arguments
    for mm in 0..d1 {
        for nn in 0..d1 {
            for ll in 0..d1 {
                let cyc = |y1: usize, y2: usize, y3: usize, m: &mut Matrix| {
                    for q in 0..d0 {
                        for p in 0..d1 {
                            let v = a.c11(y2, y3, q) * beta.get(p, y1);
                            if v.is_zero() {
                                continue;
                            }
                            for t in 0..p1 {
                                m.add_at(
                                    dims.yyy_row(mm, nn, ll, t),
                                    dims.w1_col(q, p, t),
                                    &v,
                                );
                            }
                        }
                    }
                };
                cyc(mm, nn, ll, &mut m);
                cyc(nn, ll, mm, &mut m);
                cyc(ll, mm, nn, &mut m);
            }
        }
    }

    m
}

/// Multiplication map `a (x) a -> a` on graded pair coordinates; the
/// odd-first mixed block uses the symmetric product value.
pub fn d2_chain_matrix(a: &HomLieAntialgebra) -> Matrix {
    let t = TensorIndex::of(a);
    let (d0, d1) = (t.d0, t.d1);
    let mut m = Matrix::zero(d0 + d1, t.n2());
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                m.add_at(k, t.ee(i, j), a.c00(i, j, k));
            }
        }
        for j in 0..d1 {
            for k in 0..d1 {
                m.add_at(d0 + k, t.eo(i, j), a.c01(i, j, k));
                m.add_at(d0 + k, t.oe(j, i), a.c01(i, j, k));
            }
        }
    }
    for i in 0..d1 {
        for j in 0..d1 {
            for k in 0..d0 {
                m.add_at(k, t.oo(i, j), a.c11(i, j, k));
            }
        }
    }
    m
}

/// Third chain differential on the full tensor cube. Only the four displayed
/// grade signatures (even-even-even, even-even-odd, even-odd-odd,
/// odd-odd-odd) are nonzero; all remaining signatures map to zero.
pub fn d3_chain_matrix(a: &HomLieAntialgebra) -> Matrix {
    let t = TensorIndex::of(a);
    let (d0, d1) = (t.d0, t.d1);
    let n = t.n();
    let alpha = a.alpha();
    let beta = a.beta();
    let half = crate::scalar::rat(1, 2);
    let mut m = Matrix::zero(t.n2(), n * n * n);

    // alpha(x1) (x) x2*x3 - x1*x2 (x) alpha(x3)
    for i in 0..d0 {
        for j in 0..d0 {
            for k in 0..d0 {
                let col = t.cube(i, j, k);
                for p in 0..d0 {
                    for q in 0..d0 {
                        let v = alpha.get(p, i) * a.c00(j, k, q)
                            - a.c00(i, j, p) * alpha.get(q, k);
                        if !v.is_zero() {
                            m.add_at(t.ee(p, q), col, &v);
                        }
                    }
                }
            }
        }
    }

    // alpha(x1) (x) x2*y1 - 1/2 x1*x2 (x) beta(y1)
    for i in 0..d0 {
        for j in 0..d0 {
            for mm in 0..d1 {
                let col = t.cube(i, j, d0 + mm);
                for p in 0..d0 {
                    for q in 0..d1 {
                        let v = alpha.get(p, i) * a.c01(j, mm, q)
                            - &half * &(a.c00(i, j, p) * beta.get(q, mm));
                        if !v.is_zero() {
                            m.add_at(t.eo(p, q), col, &v);
                        }
                    }
                }
            }
        }
    }

    // alpha(x1) (x) [y1,y2] - x1*y1 (x) beta(y2) - beta(y1) (x) x1*y2
    for i in 0..d0 {
        for mm in 0..d1 {
            for nn in 0..d1 {
                let col = t.cube(i, d0 + mm, d0 + nn);
                for p in 0..d0 {
                    for q in 0..d0 {
                        let v = alpha.get(p, i) * a.c11(mm, nn, q);
                        if !v.is_zero() {
                            m.add_at(t.ee(p, q), col, &v);
                        }
                    }
                }
                for p in 0..d1 {
                    for q in 0..d1 {
                        let v = a.c01(i, mm, p) * beta.get(q, nn)
                            + beta.get(p, mm) * a.c01(i, nn, q);
                        if !v.is_zero() {
                            m.add_at(t.oo(p, q), col, &-v);
                        }
                    }
                }
            }
        }
    }

    // cyclic sum of beta(y1) (x) [y2,y3]
    for mm in 0..d1 {
        for nn in 0..d1 {
            for ll in 0..d1 {
                let col = t.cube(d0 + mm, d0 + nn, d0 + ll);
                let cyc = |y1: usize, y2: usize, y3: usize, m: &mut Matrix| {
                    for p in 0..d1 {
                        for q in 0..d0 {
                            let v = beta.get(p, y1) * a.c11(y2, y3, q);
                            if !v.is_zero() {
                                m.add_at(t.oe(p, q), col, &v);
                            }
                        }
                    }
                };
                cyc(mm, nn, ll, &mut m);
                cyc(nn, ll, mm, &mut m);
                cyc(ll, mm, nn, &mut m);
            }
        }
    }

    m
}

/// Graded symmetrizer generators: `x(x)x' - x'(x)x`, `x(x)y - y(x)x`, and
/// `y(x)y' + y'(x)y` (diagonal included). All lie in `ker d2` by the
/// structural symmetry of the products.
pub fn symmetrizer_generators(a: &HomLieAntialgebra) -> Vec<Vec<Scalar>> {
    let t = TensorIndex::of(a);
    let (d0, d1) = (t.d0, t.d1);
    let one = crate::scalar::int(1);
    let mut gens = Vec::new();
    for i in 0..d0 {
        for j in (i + 1)..d0 {
            let mut v = vec![Scalar::zero(); t.n2()];
            v[t.ee(i, j)] = one.clone();
            v[t.ee(j, i)] = -one.clone();
            gens.push(v);
        }
    }
    for i in 0..d0 {
        for j in 0..d1 {
            let mut v = vec![Scalar::zero(); t.n2()];
            v[t.eo(i, j)] = one.clone();
            v[t.oe(j, i)] = -one.clone();
            gens.push(v);
        }
    }
    for i in 0..d1 {
        for j in i..d1 {
            let mut v = vec![Scalar::zero(); t.n2()];
            v[t.oo(i, j)] = &v[t.oo(i, j)] + &one;
            v[t.oo(j, i)] = &v[t.oo(j, i)] + &one;
            gens.push(v);
        }
    }
    gens
}

#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
pub enum HomologyError {
    #[error(
        "relation generator {which} is not killed by the multiplication map; the defining identities fail on this algebra"
    )]
    RelationEscapesKernel { which: String },
}

/// The relation subspace: symmetrizers plus the image of the third chain
/// differential. Errors if any generator escapes `ker d2`, which happens
/// exactly when the defining identities fail.
pub fn ia_subspace(a: &HomLieAntialgebra) -> Result<Subspace, HomologyError> {
    let t = TensorIndex::of(a);
    let d2 = d2_chain_matrix(a);
    let mut gens = symmetrizer_generators(a);
    let sym_count = gens.len();
    let d3 = d3_chain_matrix(a);
    for c in 0..d3.cols() {
        let col = d3.col_vec(c);
        if col.iter().any(|v| !v.is_zero()) {
            gens.push(col);
        }
    }
    for (idx, g) in gens.iter().enumerate() {
        if d2.mul_vec(g).iter().any(|v| !v.is_zero()) {
            let which = if idx < sym_count {
                format!("symmetrizer {idx}")
            } else {
                "a third-differential image".to_string()
            };
            return Err(HomologyError::RelationEscapesKernel { which });
        }
    }
    Ok(Subspace::from_spanning(t.n2(), &gens))
}

/// Express each row as coordinates in the subspace's RREF basis. Panics if a
/// row is not contained in the subspace; callers check containment first.
pub fn in_basis_coords(space: &Subspace, rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let transposed = space.basis_matrix().transpose();
    rows.iter()
        .map(|r| transposed.solve(r).expect("row lies in the subspace"))
        .collect()
}

/// Second cohomology with trivial coefficients: ranks, dimension, and coset
/// representatives (as flat 2-cochains) of `ker d2 / im d1`.
#[derive(Clone, Debug)]
pub struct H2Cohomology {
    pub c1_dim: usize,
    pub c2_dim: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

pub fn h2_cohomology_trivial(a: &HomLieAntialgebra) -> H2Cohomology {
    h2_cohomology(a, 1, 1)
}

/// Second cohomology with `(p0, p1)`-dimensional coefficients. The cochain
/// conditions do not involve the coefficient twists, so dimensions suffice.
pub fn h2_cohomology(a: &HomLieAntialgebra, p0: usize, p1: usize) -> H2Cohomology {
    let d1 = d1_matrix(a, p0, p1);
    let d2 = d2_matrix(a, p0, p1);
    let kernel = d2.kernel_basis();
    let image_rows: Vec<Vec<Scalar>> =
        (0..d1.cols()).map(|c| d1.col_vec(c)).collect();
    let image = Subspace::from_spanning(d1.rows(), &image_rows);
    let killed = in_basis_coords(&kernel, &image.basis_rows());
    let quotient = QuotientSpace::new(
        kernel.dim(),
        Subspace::from_spanning(kernel.dim(), &killed),
    );
    let representatives = quotient
        .rep_indices()
        .iter()
        .map(|&r| kernel.basis_matrix().row_vec(r))
        .collect();
    H2Cohomology {
        c1_dim: d1.cols(),
        c2_dim: d1.rows(),
        rank_d1: image.dim(),
        rank_d2: d2.rank(),
        dim: quotient.dim(),
        representatives,
    }
}

/// Second homology: `ker d2` modulo the relation subspace, with the plain
/// `ker d2 / im d3` dimension reported alongside.
#[derive(Clone, Debug)]
pub struct H2Homology {
    pub kernel: Subspace,
    pub relations_in_kernel: Subspace,
    pub quotient: QuotientSpace,
    pub dim: usize,
    pub variant_dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

pub fn h2_homology(a: &HomLieAntialgebra) -> Result<H2Homology, HomologyError> {
    let relations = ia_subspace(a)?;
    let d2 = d2_chain_matrix(a);
    let kernel = d2.kernel_basis();
    let relations_in_kernel = Subspace::from_spanning(
        kernel.dim(),
        &in_basis_coords(&kernel, &relations.basis_rows()),
    );
    let quotient = QuotientSpace::new(kernel.dim(), relations_in_kernel.clone());
    let d3 = d3_chain_matrix(a);
    let image_rows: Vec<Vec<Scalar>> =
        (0..d3.cols()).map(|c| d3.col_vec(c)).collect();
    let variant_dim = kernel.dim() - Subspace::from_spanning(d3.rows(), &image_rows).dim();
    let representatives = quotient
        .rep_indices()
        .iter()
        .map(|&r| kernel.basis_matrix().row_vec(r))
        .collect();
    Ok(H2Homology {
        dim: quotient.dim(),
        kernel,
        relations_in_kernel,
        quotient,
        variant_dim,
        representatives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builtins::{exe02, k3};
    use crate::algebra::zero_algebra;
    use crate::scalar::{int, rat};

    #[test]
    fn d1_entries_on_k3() {
        // (d1 v)(eps,eps) = v0(eps); (d1 v)(a,b) = 1/2 v0(eps)
        let a = k3(&int(2)).unwrap();
        let d1 = d1_matrix(&a, 1, 1);
        let dims = CochainDims::new(&a, 1, 1);
        assert_eq!(d1.get(dims.w0_col(0, 0, 0), dims.v0_col(0, 0)), &int(1));
        assert_eq!(d1.get(dims.w2_col(0, 1, 0), dims.v0_col(0, 0)), &rat(1, 2));
    }

    #[test]
    fn d2_after_d1_vanishes() {
        for mu in [int(1), int(2), int(3), int(-1), rat(1, 2)] {
            let a = k3(&mu).unwrap();
            let product = d2_matrix(&a, 1, 1).mul(&d1_matrix(&a, 1, 1));
            assert!(product.is_zero(), "mu={mu}");
        }
        let e = exe02(&int(2)).unwrap();
        assert!(d2_matrix(&e, 1, 1).mul(&d1_matrix(&e, 1, 1)).is_zero());
    }

    #[test]
    fn d2_coefficient_cancellation_on_k3() {
        // In d2 w at (eps,eps,a) the w1(eps,a) coefficient is
        // mu/2 - mu/2 = 0 for every mu.
        for mu in [int(2), int(5), rat(1, 3)] {
            let a = k3(&mu).unwrap();
            let d2 = d2_matrix(&a, 1, 1);
            let dims = CochainDims::new(&a, 1, 1);
            let row = dims.xxy_row(0, 0, 0, 0);
            assert_eq!(d2.get(row, dims.w1_col(0, 0, 0)), &int(0));
        }
    }

    #[test]
    fn h2_cohomology_of_k3_vanishes() {
        let a = k3(&int(2)).unwrap();
        let h = h2_cohomology_trivial(&a);
        assert_eq!(h.c2_dim, 7);
        assert_eq!(h.c1_dim, 3);
        assert_eq!(h.rank_d1, 3);
        assert_eq!(h.rank_d2, 4);
        assert_eq!(h.dim, 0);
    }

    #[test]
    fn h2_cohomology_of_exe02_base() {
        let a = exe02(&int(2)).unwrap();
        let h = h2_cohomology_trivial(&a);
        assert_eq!(h.rank_d1, 1);
        assert_eq!(h.rank_d2, 1);
        assert_eq!(h.dim, 5);
        assert_eq!(h.representatives.len(), 5);
    }

    #[test]
    fn h2_cohomology_of_zero_products() {
        let a = zero_algebra(vec!["x".into()], vec!["y".into()]);
        let h = h2_cohomology_trivial(&a);
        // both differentials vanish: H2 = all of C2
        assert_eq!(h.rank_d1, 0);
        assert_eq!(h.rank_d2, 0);
        assert_eq!(h.dim, h.c2_dim);
    }

    #[test]
    fn chain_d2_values_on_k3() {
        let a = k3(&int(2)).unwrap();
        let t = TensorIndex::of(&a);
        let d2 = d2_chain_matrix(&a);
        // a(x)b -> 1/2 eps
        assert_eq!(d2.get(0, t.oo(0, 1)), &rat(1, 2));
        // eps(x)a -> a at mu=2
        assert_eq!(d2.get(1, t.eo(0, 0)), &int(1));
        // a(x)eps -> a as well (symmetric product)
        assert_eq!(d2.get(1, t.oe(0, 0)), &int(1));
    }

    #[test]
    fn chain_d3_frozen_column_on_k3() {
        // d3(eps(x)a(x)a) = -mu^2 (a(x)a) at any mu; check mu=2 -> -4.
        let a = k3(&int(2)).unwrap();
        let t = TensorIndex::of(&a);
        let d3 = d3_chain_matrix(&a);
        let col = d3.col_vec(t.cube(0, 1, 1));
        let mut expected = vec![int(0); t.n2()];
        expected[t.oo(0, 0)] = int(-4);
        assert_eq!(col, expected);
    }

    #[test]
    fn chain_d2_after_d3_vanishes_exactly_for_valid_algebras() {
        for mu in [int(1), int(2), rat(1, 2)] {
            let a = k3(&mu).unwrap();
            assert!(d2_chain_matrix(&a).mul(&d3_chain_matrix(&a)).is_zero());
        }
        let e = exe02(&int(3)).unwrap();
        assert!(d2_chain_matrix(&e).mul(&d3_chain_matrix(&e)).is_zero());
    }

    #[test]
    fn chain_d2_after_d3_detects_broken_identities() {
        // eps*a = mu*a instead of (mu/2)*a violates the identities, and the
        // composite picks it up.
        let good = k3(&int(2)).unwrap();
        let mut c01: Vec<Scalar> = (0..4)
            .map(|n| good.c01(0, n / 2, n % 2).clone())
            .collect();
        c01[0] = int(2);
        let bad = HomLieAntialgebra::new(
            good.basis().clone(),
            vec![good.c00(0, 0, 0).clone()],
            c01,
            (0..4).map(|n| good.c11(n / 2, n % 2, 0).clone()).collect(),
            good.alpha().clone(),
            good.beta().clone(),
        )
        .unwrap();
        assert!(!bad.verify_axioms().passed());
        assert!(!d2_chain_matrix(&bad).mul(&d3_chain_matrix(&bad)).is_zero());
        assert!(matches!(
            ia_subspace(&bad),
            Err(HomologyError::RelationEscapesKernel { .. })
        ));
    }

    use crate::algebra::HomLieAntialgebra;

    #[test]
    fn h2_homology_of_k3_is_zero_with_variant_two() {
        let a = k3(&int(2)).unwrap();
        let h = h2_homology(&a).unwrap();
        assert_eq!(h.kernel.dim(), 6);
        assert_eq!(h.relations_in_kernel.dim(), 6);
        assert_eq!(h.dim, 0);
        assert_eq!(h.variant_dim, 2);
    }

    #[test]
    fn h2_homology_of_exe02_base() {
        let a = exe02(&int(2)).unwrap();
        let h = h2_homology(&a).unwrap();
        assert_eq!(h.kernel.dim(), 8);
        assert_eq!(h.relations_in_kernel.dim(), 6);
        assert_eq!(h.dim, 2);
        assert_eq!(h.variant_dim, 7);
    }

    #[test]
    fn h2_homology_of_zero_products() {
        // d2 = d3 = 0: kernel is all of C2, relations are the symmetrizers.
        let a = zero_algebra(vec!["x".into()], vec!["y".into()]);
        let h = h2_homology(&a).unwrap();
        let t = TensorIndex { d0: 1, d1: 1 };
        assert_eq!(h.kernel.dim(), t.n2());
        // symmetrizers: none (ee), one (eo-oe), one (oo diagonal)
        assert_eq!(h.relations_in_kernel.dim(), 2);
        assert_eq!(h.dim, 2);
        assert_eq!(h.variant_dim, 4);
    }

    #[test]
    fn pair_indexing_is_consistent() {
        let t = TensorIndex { d0: 2, d1: 3 };
        assert_eq!(t.pair(0, 1), t.ee(0, 1));
        assert_eq!(t.pair(2, 3), t.oo(0, 1));
        assert_eq!(t.pair(1, 4), t.eo(1, 2));
        assert_eq!(t.pair(4, 1), t.oe(2, 1));
        assert_eq!(t.n2(), 4 + 9 + 6 + 6);
    }
}
