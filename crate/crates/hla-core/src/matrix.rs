//! Dense matrices over exact rationals.
//!
//! Row-major storage; the sizes in play are small (the largest chain matrix
//! for a dimension-n algebra is n^2 x n^3), so no sparsity is needed. The
//! canonical reduced row echelon form computed here is the normal form behind
//! every subspace/quotient answer in the crate.

use crate::scalar::Scalar;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Build from explicit rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix { rows: nrows, cols: ncols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Accumulate into an entry; used by the differential assemblers where
    /// several terms can land on the same coordinate.
    pub fn add_at(&mut self, r: usize, c: usize, v: &Scalar) {
        self.data[r * self.cols + c] += v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c) + a * b;
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let mut out = vec![Scalar::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = Scalar::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    acc += a * &v[c];
                }
            }
            out[r] = acc;
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Concatenate columns of `self` and `other`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zero(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Block-diagonal matrix of `self` and `other`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Kronecker product: entry (i*r2+k, j*c2+l) is self(i,j)*other(k,l),
    /// acting on pair coordinates flattened first-factor-major.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Canonical reduced row echelon form plus the pivot column list.
    /// Idempotent; the row space is preserved.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            if next_row == m.rows {
                break;
            }
            let Some(pivot_row) = (next_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(next_row, pivot_row);
            let inv = {
                let p = m.get(next_row, col).clone();
                p.recip()
            };
            m.scale_row(next_row, &inv);
            for r in 0..m.rows {
                if r != next_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.row_sub_scaled(r, next_row, &factor);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` as a subspace of the column space.
    pub fn kernel_basis(&self) -> crate::subspace::Subspace {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut s = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                s[col] = Some(row);
            }
            s
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (col, &slot) in pivot_set.iter().enumerate() {
                if let Some(row) = slot {
                    v[col] = -r.get(row, free).clone();
                }
            }
            basis.push(v);
        }
        crate::subspace::Subspace::from_spanning(self.cols, &basis)
    }

    /// Basis of the column space, as a subspace of the row-index space.
    pub fn image_basis(&self) -> crate::subspace::Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.cols).map(|c| self.col_vec(c)).collect();
        crate::subspace::Subspace::from_spanning(self.rows, &cols)
    }

    /// One exact solution of `self * x = rhs` with every free variable set
    /// to zero, or None when inconsistent. Deterministic.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, rhs.len());
        let b = Matrix::from_rows(rhs.iter().map(|x| vec![x.clone()]).collect());
        let b = if self.rows == 0 { Matrix::zero(0, 1) } else { b };
        let (r, pivots) = self.hstack(&b).rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * factor;
            self.set(r, c, v);
        }
    }

    /// row[r] -= factor * row[src]
    fn row_sub_scaled(&mut self, r: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) - &(self.get(src, c) * factor);
            self.set(r, c, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn kronecker_matches_hand_expansion() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kronecker(&b);
        assert_eq!(
            k,
            m(&[
                &[0, 5, 0, 10],
                &[6, 7, 12, 14],
                &[0, 15, 0, 20],
                &[18, 21, 24, 28],
            ])
        );
        // Mixed product rule: (A (x) B)(u (x) v) = Au (x) Bv.
        let u = vec![int(1), int(-1)];
        let v = vec![int(2), int(3)];
        let uv: Vec<Scalar> =
            u.iter().flat_map(|x| v.iter().map(move |y| x * y)).collect();
        let lhs = k.mul_vec(&uv);
        let au = a.mul_vec(&u);
        let bv = b.mul_vec(&v);
        let rhs: Vec<Scalar> =
            au.iter().flat_map(|x| bv.iter().map(move |y| x * y)).collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, p) = Matrix::identity(3).rref();
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = Matrix::zero(2, 2).rref();
        assert_eq!(r, Matrix::zero(2, 2));
        assert!(p.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let (r, p) = m(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rref_idempotent() {
        let a = m(&[&[2, 4, 1], &[0, 3, 5], &[2, 7, 6]]);
        let (r1, _) = a.rref();
        let (r2, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn kernel_of_identity_is_zero_and_of_zero_is_full() {
        assert_eq!(Matrix::identity(4).kernel_basis().dim(), 0);
        assert_eq!(Matrix::zero(3, 5).kernel_basis().dim(), 5);
    }

    #[test]
    fn kernel_single_equation() {
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[int(1), int(-1)]));
        assert!(!k.contains(&[int(1), int(1)]));
    }

    #[test]
    fn image_basics() {
        assert_eq!(Matrix::identity(3).image_basis().dim(), 3);
        assert_eq!(Matrix::zero(3, 2).image_basis().dim(), 0);
        let im = m(&[&[1], &[2]]).image_basis();
        assert_eq!(im.dim(), 1);
        assert!(im.contains(&[int(2), int(4)]));
        assert!(!im.contains(&[int(1), int(1)]));
    }

    #[test]
    fn rank_nullity_small() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank() + a.kernel_basis().dim(), a.cols());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = a.solve(&[int(3), int(6)]).unwrap();
        // free variable zeroed: x = (3, 0)
        assert_eq!(x, vec![int(3), int(0)]);
        assert!(a.solve(&[int(3), int(7)]).is_none());
    }

    #[test]
    fn solve_rational_pivot() {
        let a = Matrix::from_rows(vec![vec![rat(2, 3)]]);
        assert_eq!(a.solve(&[int(1)]).unwrap(), vec![rat(3, 2)]);
    }

    #[test]
    fn empty_shapes_are_fine() {
        let a = Matrix::zero(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.kernel_basis().dim(), 3);
        let b = Matrix::zero(3, 0);
        assert_eq!(b.rank(), 0);
        assert_eq!(b.kernel_basis().dim(), 0);
        assert_eq!(b.solve(&[int(0), int(0), int(0)]), Some(vec![]));
        assert!(b.solve(&[int(0), int(1), int(0)]).is_none());
    }

    #[test]
    fn product_shapes() {
        let a = m(&[&[1, 0], &[1, 1], &[0, 2]]);
        let b = m(&[&[1, 2, 0], &[0, 1, 1]]);
        let ab = a.mul(&b);
        assert_eq!(ab, m(&[&[1, 2, 0], &[1, 3, 1], &[0, 2, 2]]));
        assert_eq!(ab.mul_vec(&[int(1), int(0), int(-1)]), vec![int(1), int(0), int(-2)]);
    }
}
