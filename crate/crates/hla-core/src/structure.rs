//! Graded subspaces of an algebra: subalgebra/ideal tests, center,
//! product spans, perfectness, and the derived ideal.

use crate::algebra::HomLieAntialgebra;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use num_traits::Zero;

/// A pair of subspaces, one per grade, in an algebra's coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSubspacePair {
    pub even: Subspace,
    pub odd: Subspace,
}

impl GradedSubspacePair {
    pub fn zero(a: &HomLieAntialgebra) -> Self {
        GradedSubspacePair {
            even: Subspace::zero(a.dim_even()),
            odd: Subspace::zero(a.dim_odd()),
        }
    }

    pub fn full(a: &HomLieAntialgebra) -> Self {
        GradedSubspacePair {
            even: Subspace::full(a.dim_even()),
            odd: Subspace::full(a.dim_odd()),
        }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even.dim(), self.odd.dim())
    }

    pub fn equal(&self, other: &GradedSubspacePair) -> bool {
        self.even.equal(&other.even) && self.odd.equal(&other.odd)
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

/// Closure of the pair under the three products among its own vectors and
/// under both twists.
pub fn is_subalgebra(a: &HomLieAntialgebra, s: &GradedSubspacePair) -> bool {
    assert_eq!(s.even.ambient_dim(), a.dim_even(), "even ambient mismatch");
    assert_eq!(s.odd.ambient_dim(), a.dim_odd(), "odd ambient mismatch");
    let even = s.even.basis_rows();
    let odd = s.odd.basis_rows();
    for u in &even {
        for v in &even {
            if !s.even.contains(&a.mul_ee(u, v)) {
                return false;
            }
        }
        for w in &odd {
            if !s.odd.contains(&a.mul_eo(u, w)) {
                return false;
            }
        }
        if !s.even.contains(&a.alpha_apply(u)) {
            return false;
        }
    }
    for w1 in &odd {
        for w2 in &odd {
            if !s.even.contains(&a.bracket(w1, w2)) {
                return false;
            }
        }
        if !s.odd.contains(&a.beta_apply(w1)) {
            return false;
        }
    }
    true
}

/// Subalgebra whose products with the whole algebra stay inside the pair.
pub fn is_ideal(a: &HomLieAntialgebra, s: &GradedSubspacePair) -> bool {
    if !is_subalgebra(a, s) {
        return false;
    }
    let even = s.even.basis_rows();
    let odd = s.odd.basis_rows();
    for u in &even {
        for i in 0..a.dim_even() {
            if !s.even.contains(&a.mul_ee(u, &a.even_unit(i))) {
                return false;
            }
        }
        for j in 0..a.dim_odd() {
            if !s.odd.contains(&a.mul_eo(u, &a.odd_unit(j))) {
                return false;
            }
        }
    }
    for w in &odd {
        for i in 0..a.dim_even() {
            if !s.odd.contains(&a.mul_eo(&a.even_unit(i), w)) {
                return false;
            }
        }
        for j in 0..a.dim_odd() {
            if !s.even.contains(&a.bracket(w, &a.odd_unit(j))) {
                return false;
            }
        }
    }
    true
}

/// Largest pair annihilating everything: even vectors killing all even and
/// odd basis products, odd vectors killed by every even multiplication and
/// bracketing. Computed as the kernel of stacked multiplication operators.
pub fn center(a: &HomLieAntialgebra) -> GradedSubspacePair {
    let (d0, d1) = (a.dim_even(), a.dim_odd());

    // u even central: u * e_j = 0 for all j, u * o_j = 0 for all j.
    let mut even_blocks: Vec<Matrix> = Vec::new();
    for j in 0..d0 {
        let mut m = Matrix::zero(d0, d0);
        for i in 0..d0 {
            for k in 0..d0 {
                m.set(k, i, a.c00(i, j, k).clone());
            }
        }
        even_blocks.push(m);
    }
    for j in 0..d1 {
        let mut m = Matrix::zero(d1, d0);
        for i in 0..d0 {
            for k in 0..d1 {
                m.set(k, i, a.c01(i, j, k).clone());
            }
        }
        even_blocks.push(m);
    }
    let even = stack_kernel(even_blocks, d0);

    // v odd central: e_i * v = 0 for all i, [v, o_j] = 0 for all j.
    let mut odd_blocks: Vec<Matrix> = Vec::new();
    for i in 0..d0 {
        let mut m = Matrix::zero(d1, d1);
        for j in 0..d1 {
            for k in 0..d1 {
                m.set(k, j, a.c01(i, j, k).clone());
            }
        }
        odd_blocks.push(m);
    }
    for j in 0..d1 {
        let mut m = Matrix::zero(d0, d1);
        for i in 0..d1 {
            for k in 0..d0 {
                m.set(k, i, a.c11(i, j, k).clone());
            }
        }
        odd_blocks.push(m);
    }
    let odd = stack_kernel(odd_blocks, d1);

    GradedSubspacePair { even, odd }
}

fn stack_kernel(blocks: Vec<Matrix>, ambient: usize) -> Subspace {
    let mut stacked = Matrix::zero(0, ambient);
    for b in blocks {
        stacked = stacked.vstack(&b);
    }
    stacked.kernel_basis()
}

/// Spans of the three kinds of products over basis pairs:
/// even*even, odd bracket (both inside the even part), even*odd (odd part).
pub fn product_spans(a: &HomLieAntialgebra) -> (Subspace, Subspace, Subspace) {
    let (d0, d1) = (a.dim_even(), a.dim_odd());
    let mut ee = Vec::new();
    for i in 0..d0 {
        for j in 0..d0 {
            ee.push(a.basis_mul_ee(i, j));
        }
    }
    let mut bb = Vec::new();
    for i in 0..d1 {
        for j in 0..d1 {
            bb.push(a.basis_bracket(i, j));
        }
    }
    let mut eo = Vec::new();
    for i in 0..d0 {
        for j in 0..d1 {
            eo.push(a.basis_mul_eo(i, j));
        }
    }
    (
        Subspace::from_spanning(d0, &ee),
        Subspace::from_spanning(d0, &bb),
        Subspace::from_spanning(d1, &eo),
    )
}

/// Perfect: even part equals both the even-product span and the bracket
/// span, and the odd part equals the mixed-product span.
pub fn is_perfect(a: &HomLieAntialgebra) -> bool {
    let (ee, bb, eo) = product_spans(a);
    ee.dim() == a.dim_even() && bb.dim() == a.dim_even() && eo.dim() == a.dim_odd()
}

/// Smallest ideal containing every product of basis vectors: start from the
/// product spans, then close under multiplication by the whole algebra and
/// under the twists until dimensions stabilize.
pub fn derived_ideal(a: &HomLieAntialgebra) -> GradedSubspacePair {
    let (ee, bb, eo) = product_spans(a);
    let mut even = ee.sum(&bb);
    let mut odd = eo;
    loop {
        let mut even_rows: Vec<Vec<Scalar>> = even.basis_rows();
        let mut odd_rows: Vec<Vec<Scalar>> = odd.basis_rows();
        for u in even.basis_rows() {
            for i in 0..a.dim_even() {
                even_rows.push(a.mul_ee(&u, &a.even_unit(i)));
            }
            for j in 0..a.dim_odd() {
                odd_rows.push(a.mul_eo(&u, &a.odd_unit(j)));
            }
            even_rows.push(a.alpha_apply(&u));
        }
        for w in odd.basis_rows() {
            for i in 0..a.dim_even() {
                odd_rows.push(a.mul_eo(&a.even_unit(i), &w));
            }
            for j in 0..a.dim_odd() {
                even_rows.push(a.bracket(&w, &a.odd_unit(j)));
            }
            odd_rows.push(a.beta_apply(&w));
        }
        let next_even = Subspace::from_spanning(a.dim_even(), &even_rows);
        let next_odd = Subspace::from_spanning(a.dim_odd(), &odd_rows);
        if next_even.dim() == even.dim() && next_odd.dim() == odd.dim() {
            return GradedSubspacePair { even: next_even, odd: next_odd };
        }
        even = next_even;
        odd = next_odd;
    }
}

/// Does the pair contain the given graded vector, each part in its grade?
pub fn pair_contains(s: &GradedSubspacePair, even: &[Scalar], odd: &[Scalar]) -> bool {
    let even_ok = even.iter().all(|x| x.is_zero()) || s.even.contains(even);
    let odd_ok = odd.iter().all(|x| x.is_zero()) || s.odd.contains(odd);
    even_ok && odd_ok
}
