//! Subspaces of `F^n` in canonical reduced row-echelon form.

use serde::Serialize;

use crate::error::LinalgError;
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// A subspace of `field^ambient_dim`.
///
/// The basis is stored as the nonzero rows of the reduced row-echelon form of
/// any spanning set, so two subspaces are equal exactly when their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    dim: usize,
    basis: Matrix,
    #[serde(skip)]
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of `vectors`.
    ///
    /// # Panics
    ///
    /// Panics if a vector does not have length `ambient_dim`. Use
    /// [`Subspace::try_span`] for unchecked input.
    pub fn span<I>(field: Field, ambient_dim: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        Subspace::from_spanning_matrix(&Matrix::from_rows(field, ambient_dim, vectors))
    }

    pub fn try_span<I>(field: Field, ambient_dim: usize, vectors: I) -> Result<Subspace, LinalgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let vectors: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        for v in &vectors {
            if v.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            if let Some(s) = v.iter().find(|s| s.field() != field) {
                return Err(LinalgError::FieldMismatch {
                    left: field,
                    right: s.field(),
                });
            }
        }
        Ok(Subspace::span(field, ambient_dim, vectors))
    }

    /// The row space of `m`.
    pub fn from_spanning_matrix(m: &Matrix) -> Subspace {
        let r = m.rref();
        let basis = Matrix::from_rows(m.field(), m.cols(), (0..r.rank).map(|i| r.matrix.row(i).to_vec()));
        Subspace {
            field: m.field(),
            ambient_dim: m.cols(),
            dim: r.rank,
            basis,
            pivots: r.pivots,
        }
    }

    pub fn zero(field: Field, ambient_dim: usize) -> Subspace {
        Subspace::span(field, ambient_dim, std::iter::empty())
    }

    pub fn full(field: Field, ambient_dim: usize) -> Subspace {
        Subspace::from_spanning_matrix(&Matrix::identity(field, ambient_dim))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Basis vectors as the rows of an RREF matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace. Because the basis is in RREF, the coordinate on the
    /// `i`-th basis vector is simply `v[pivot_i]`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (c, row) in coords.iter().zip(self.basis.row_vecs()) {
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                *r = &*r - &(c * b);
            }
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `{m·u : u in self}` for a `rows × ambient_dim` matrix `m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim, "matrix does not act on this space");
        Subspace::span(self.field, m.rows(), self.vectors().map(|v| m.mul_vec(v)))
    }

    /// `{x : <x, u> = 0 for all u in self}` under the standard bilinear form.
    pub fn annihilator(&self) -> Subspace {
        if self.dim == 0 {
            return Subspace::full(self.field, self.ambient_dim);
        }
        self.basis.kernel()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        Ok(self.vectors().all(|v| other.contains(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        Ok(Subspace::from_spanning_matrix(&self.basis.vstack(&other.basis)))
    }

    /// `U ∩ W`, computed as the annihilator of `ann(U) + ann(W)`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Whether the ambient space is the internal direct sum of `self` and `other`.
    pub fn is_direct_sum(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_compatible(other)?;
        Ok(self.dim + other.dim == self.ambient_dim && self.intersect(other)?.is_zero())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vecs(field: Field, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect()
    }

    #[test]
    fn intersect_with_self() {
        let q = Field::Rationals;
        let u = Subspace::span(q, 3, vecs(q, &[&[1, 2, 3], &[0, 1, 1]]));
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let q = Field::Rationals;
        let x = Subspace::span(q, 2, vecs(q, &[&[1, 0]]));
        let y = Subspace::span(q, 2, vecs(q, &[&[0, 1]]));
        assert!(x.intersect(&y).unwrap().is_zero());
    }

    #[test]
    fn planes_in_q3_meet_in_a_line() {
        let q = Field::Rationals;
        let u = Subspace::span(q, 3, vecs(q, &[&[1, 0, 0], &[0, 1, 0]]));
        let w = Subspace::span(q, 3, vecs(q, &[&[0, 1, 0], &[0, 0, 1]]));
        let meet = u.intersect(&w).unwrap();
        assert_eq!(meet, Subspace::span(q, 3, vecs(q, &[&[0, 1, 0]])));
        let join = u.sum(&w).unwrap();
        assert_eq!(u.dim() + w.dim(), join.dim() + meet.dim());
    }

    #[test]
    fn direct_sum_cases() {
        let q = Field::Rationals;
        let full = Subspace::full(q, 2);
        let zero = Subspace::zero(q, 2);
        assert!(full.is_direct_sum(&zero).unwrap());
        let line = Subspace::span(q, 2, vecs(q, &[&[1, 1]]));
        assert!(!line.is_direct_sum(&line).unwrap());
        let anti = Subspace::span(q, 2, vecs(q, &[&[1, -1]]));
        assert!(line.is_direct_sum(&anti).unwrap());
        // Over GF(2) the same two vectors coincide.
        let f = Field::Prime(2);
        let a = Subspace::span(f, 2, vecs(f, &[&[1, 1]]));
        let b = Subspace::span(f, 2, vecs(f, &[&[1, -1]]));
        assert_eq!(a, b);
        assert!(!a.is_direct_sum(&b).unwrap());
    }

    #[test]
    fn mismatches_are_errors() {
        let q = Field::Rationals;
        let a = Subspace::full(q, 2);
        let b = Subspace::full(q, 3);
        assert!(matches!(a.intersect(&b), Err(LinalgError::AmbientMismatch { .. })));
        let c = Subspace::full(Field::Prime(3), 2);
        assert!(matches!(a.is_direct_sum(&c), Err(LinalgError::FieldMismatch { .. })));
        assert!(matches!(
            Subspace::try_span(q, 2, vecs(q, &[&[1, 2, 3]])),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn coordinates_follow_pivots() {
        let q = Field::Rationals;
        let u = Subspace::span(q, 3, vecs(q, &[&[2, 0, 4], &[0, 3, 3]]));
        let v = vecs(q, &[&[1, 1, 3]]).remove(0);
        let c = u.coordinates(&v).unwrap();
        assert_eq!(c, vec![q.one(), q.one()]);
        assert!(u.coordinates(&vecs(q, &[&[0, 0, 1]])[0]).is_none());
    }
}
