//! Subspaces and quotient spaces of Q^n.
//!
//! A subspace is stored as its canonical RREF basis (rows), so equality is
//! plain matrix equality and membership is reduction to zero. A quotient
//! space fixes the killed subspace and uses the non-pivot standard basis
//! vectors as deterministic coset representatives.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Rows are a canonical RREF basis; no zero rows.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(0, ambient), pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "spanning vector of wrong length");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        let rows: Vec<Vec<Scalar>> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        let basis =
            if rows.is_empty() { Matrix::zero(0, ambient) } else { Matrix::from_rows(rows) };
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|i| self.basis.row_vec(i)).collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after subtracting its pivot components; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let factor = w[p].clone();
            for c in 0..self.ambient {
                let delta = self.basis.get(row, c) * &factor;
                w[c] -= delta;
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        self.basis_rows().iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_spanning(self.ambient, &rows)
    }

    /// Canonical equality: RREF bases are unique per subspace.
    pub fn equal(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

#[derive(Clone, Debug)]
pub struct QuotientSpace {
    ambient: usize,
    killed: Subspace,
    /// Non-pivot coordinates of `killed`, in increasing order; the classes of
    /// these standard basis vectors form the quotient basis.
    rep_indices: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(ambient: usize, killed: Subspace) -> Self {
        assert_eq!(killed.ambient_dim(), ambient, "ambient dimension mismatch");
        let rep_indices =
            (0..ambient).filter(|i| !killed.pivots().contains(i)).collect();
        QuotientSpace { ambient, killed, rep_indices }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rep_indices.len()
    }

    pub fn killed(&self) -> &Subspace {
        &self.killed
    }

    pub fn rep_indices(&self) -> &[usize] {
        &self.rep_indices
    }

    /// Quotient coordinates of the class of `v`.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.killed.reduce(v);
        self.rep_indices.iter().map(|&i| reduced[i].clone()).collect()
    }

    /// The canonical ambient representative of quotient coordinates `q`.
    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim(), "quotient coordinate mismatch");
        let mut v = vec![Scalar::zero(); self.ambient];
        for (c, &i) in q.iter().zip(&self.rep_indices) {
            v[i] = c.clone();
        }
        v
    }

    /// Matrix of `project` acting on ambient column vectors.
    pub fn projection_matrix(&self) -> Matrix {
        let mut m = Matrix::zero(self.dim(), self.ambient);
        for c in 0..self.ambient {
            let mut e = vec![Scalar::zero(); self.ambient];
            e[c] = Scalar::one();
            for (r, value) in self.project(&e).into_iter().enumerate() {
                m.set(r, c, value);
            }
        }
        m
    }
}
