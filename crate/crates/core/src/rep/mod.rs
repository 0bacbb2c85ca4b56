//! Linear representations of finite gyrogroups over exact fields.

mod decompose;
mod intertwine;
mod projection;
mod search;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::RepError;
use crate::field::{Field, Scalar};
use crate::gyro::GyroTable;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

pub use decompose::{DecompositionResult, SearchLogEntry, Summand};
pub use intertwine::EquivalenceSearch;
pub use projection::coordinate_projection;
pub use search::{projective_point_count, projective_points, InvariantSearch, Irreducibility, ProperInvariant};

/// Default cap on the number of vectors an exhaustive search may enumerate.
pub const DEFAULT_SEARCH_BOUND: u128 = 1 << 24;

/// An assignment of a `degree × degree` matrix to every element of a
/// gyrogroup, acting on column vectors.
///
/// Construction only checks shapes; call [`Representation::verify`] to check
/// the homomorphism property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representation {
    #[serde(skip)]
    gyro: Arc<GyroTable>,
    field: Field,
    degree: usize,
    matrices: Vec<Matrix>,
}

/// The first way in which a candidate representation fails to be one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum RepViolation {
    NotInvertible { element: usize },
    IdentityNotMappedToIdentity,
    NotHomomorphic { a: usize, b: usize },
    InverseMismatch { element: usize },
}

impl fmt::Display for RepViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepViolation::NotInvertible { element } => write!(f, "matrix of element {element} is singular"),
            RepViolation::IdentityNotMappedToIdentity => write!(f, "the identity element does not act as the identity matrix"),
            RepViolation::NotHomomorphic { a, b } => write!(f, "φ({a}⊕{b}) ≠ φ({a})φ({b})"),
            RepViolation::InverseMismatch { element } => write!(f, "φ(⊖{element}) ≠ φ({element})⁻¹"),
        }
    }
}

impl Representation {
    pub fn new(gyro: Arc<GyroTable>, field: Field, degree: usize, matrices: Vec<Matrix>) -> Result<Representation, RepError> {
        if matrices.len() != gyro.order() {
            return Err(RepError::WrongMatrixCount {
                expected: gyro.order(),
                found: matrices.len(),
            });
        }
        for (element, m) in matrices.iter().enumerate() {
            if m.rows() != degree || m.cols() != degree {
                return Err(RepError::WrongMatrixShape {
                    element,
                    rows: m.rows(),
                    cols: m.cols(),
                    degree,
                });
            }
            if m.field() != field {
                return Err(crate::error::LinalgError::FieldMismatch {
                    left: field,
                    right: m.field(),
                }
                .into());
            }
        }
        Ok(Representation { gyro, field, degree, matrices })
    }

    /// Every element acts as the identity.
    pub fn trivial(gyro: Arc<GyroTable>, field: Field, degree: usize) -> Representation {
        let matrices = vec![Matrix::identity(field, degree); gyro.order()];
        Representation { gyro, field, degree, matrices }
    }

    pub fn gyro(&self) -> &GyroTable {
        &self.gyro
    }

    pub fn gyro_arc(&self) -> &Arc<GyroTable> {
        &self.gyro
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self, a: usize) -> &Matrix {
        &self.matrices[a]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Checks, exhaustively, that every matrix is invertible, that
    /// `φ(e) = I`, `φ(a⊕b) = φ(a)φ(b)` and `φ(⊖a) = φ(a)⁻¹`.
    pub fn verify(&self) -> Result<(), RepViolation> {
        let g = &*self.gyro;
        let mut inverses = Vec::with_capacity(g.order());
        for (element, m) in self.matrices.iter().enumerate() {
            inverses.push(m.inverse().ok_or(RepViolation::NotInvertible { element })?);
        }
        if !self.matrices[g.identity()].is_identity() {
            return Err(RepViolation::IdentityNotMappedToIdentity);
        }
        for a in g.elements() {
            for b in g.elements() {
                if self.matrices[g.op(a, b)] != &self.matrices[a] * &self.matrices[b] {
                    return Err(RepViolation::NotHomomorphic { a, b });
                }
            }
        }
        if let Some(element) = g.elements().find(|&a| self.matrices[g.inverse(a)] != inverses[a]) {
            return Err(RepViolation::InverseMismatch { element });
        }
        Ok(())
    }

    pub(crate) fn check_subspace(&self, u: &Subspace) -> Result<(), RepError> {
        if u.ambient_dim() != self.degree {
            return Err(RepError::DegreeMismatch {
                degree: self.degree,
                found: u.ambient_dim(),
            });
        }
        if u.field() != self.field {
            return Err(crate::error::LinalgError::FieldMismatch {
                left: self.field,
                right: u.field(),
            }
            .into());
        }
        Ok(())
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<(), RepError> {
        if v.len() != self.degree {
            return Err(crate::error::LinalgError::DimensionMismatch {
                expected: self.degree,
                found: v.len(),
            }
            .into());
        }
        if let Some(s) = v.iter().find(|s| s.field() != self.field) {
            return Err(crate::error::LinalgError::FieldMismatch {
                left: self.field,
                right: s.field(),
            }
            .into());
        }
        Ok(())
    }

    /// The first element whose matrix moves some basis vector of `u` out of `u`.
    pub fn invariance_witness(&self, u: &Subspace) -> Result<Option<usize>, RepError> {
        self.check_subspace(u)?;
        Ok(self
            .gyro
            .elements()
            .find(|&a| u.vectors().any(|v| !u.contains(&self.matrices[a].mul_vec(v)))))
    }

    pub fn is_invariant(&self, u: &Subspace) -> Result<bool, RepError> {
        Ok(self.invariance_witness(u)?.is_none())
    }

    /// The subrepresentation on an invariant subspace `u`, written in `u`'s
    /// canonical basis: column `j` of the new matrix for `a` holds the
    /// coordinates of `φ(a) b_j`.
    pub fn restrict(&self, u: &Subspace) -> Result<Representation, RepError> {
        self.check_subspace(u)?;
        let k = u.dim();
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for (element, m) in self.matrices.iter().enumerate() {
            let mut columns = Vec::with_capacity(k);
            for b in u.vectors() {
                let coords = u
                    .coordinates(&m.mul_vec(b))
                    .ok_or(RepError::NotInvariant { element })?;
                columns.push(coords);
            }
            matrices.push(Matrix::from_fn(self.field, k, k, |i, j| columns[j][i].clone()));
        }
        Ok(Representation {
            gyro: self.gyro.clone(),
            field: self.field,
            degree: k,
            matrices,
        })
    }

    /// The equivalent representation `a ↦ P φ(a) P⁻¹`, for which `P` is an
    /// equivalence from `self`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation, RepError> {
        if p.rows() != self.degree || p.field() != self.field {
            return Err(RepError::Invalid("conjugating matrix has the wrong shape or field".into()));
        }
        let p_inv = p
            .inverse()
            .ok_or_else(|| RepError::Invalid("conjugating matrix is singular".into()))?;
        Ok(Representation {
            gyro: self.gyro.clone(),
            field: self.field,
            degree: self.degree,
            matrices: self.matrices.iter().map(|m| &(p * m) * &p_inv).collect(),
        })
    }

    fn check_invertible_order(&self) -> Result<(), RepError> {
        let order = self.gyro.order();
        if self.field.divides(order as u64) {
            return Err(RepError::CharacteristicDividesOrder {
                characteristic: self.field.characteristic(),
                order,
            });
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::gyro::builtin;

    /// The regular representation of Z_2 on `field^2`: 1 acts by swapping.
    pub fn z2_regular(field: Field) -> Representation {
        let g = Arc::new(builtin("cyclic:2").unwrap());
        let swap = Matrix::from_i64(field, &[&[0, 1], &[1, 0]]);
        Representation::new(g, field, 2, vec![Matrix::identity(field, 2), swap]).unwrap()
    }

    pub fn z2_sign(field: Field) -> Representation {
        let g = Arc::new(builtin("cyclic:2").unwrap());
        Representation::new(g, field, 1, vec![Matrix::identity(field, 1), Matrix::from_i64(field, &[&[-1]])]).unwrap()
    }

    pub fn line(field: Field, v: &[i64]) -> Subspace {
        Subspace::span(field, v.len(), [v.iter().map(|&x| field.from_i64(x)).collect()])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::gyro::builtin;

    #[test]
    fn trivial_rep_is_valid() {
        for name in ["g8", "klein", "cyclic:3"] {
            let g = Arc::new(builtin(name).unwrap());
            for d in 0..3 {
                assert_eq!(Representation::trivial(g.clone(), Field::Prime(5), d).verify(), Ok(()));
            }
        }
    }

    #[test]
    fn mutated_rep_is_rejected() {
        let q = Field::Rationals;
        let r = z2_regular(q);
        let mut bad = r.matrices().to_vec();
        bad[1][(0, 0)] = q.from_i64(1);
        let bad = Representation::new(r.gyro_arc().clone(), q, 2, bad).unwrap();
        assert!(bad.verify().is_err());

        let mut singular = r.matrices().to_vec();
        singular[1] = Matrix::zeros(q, 2, 2);
        let singular = Representation::new(r.gyro_arc().clone(), q, 2, singular).unwrap();
        assert_eq!(singular.verify(), Err(RepViolation::NotInvertible { element: 1 }));
    }

    #[test]
    fn shape_errors() {
        let q = Field::Rationals;
        let g = Arc::new(builtin("cyclic:2").unwrap());
        assert!(matches!(
            Representation::new(g.clone(), q, 2, vec![Matrix::identity(q, 2)]),
            Err(RepError::WrongMatrixCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            Representation::new(g, q, 2, vec![Matrix::identity(q, 2), Matrix::identity(q, 3)]),
            Err(RepError::WrongMatrixShape { element: 1, .. })
        ));
    }

    #[test]
    fn invariance_of_z2_lines() {
        let q = Field::Rationals;
        let r = z2_regular(q);
        assert!(r.is_invariant(&Subspace::zero(q, 2)).unwrap());
        assert!(r.is_invariant(&Subspace::full(q, 2)).unwrap());
        assert!(r.is_invariant(&line(q, &[1, 1])).unwrap());
        assert!(!r.is_invariant(&line(q, &[1, 0])).unwrap());
        assert!(matches!(r.is_invariant(&Subspace::full(q, 3)), Err(RepError::DegreeMismatch { .. })));
    }

    #[test]
    fn restriction_to_z2_lines() {
        let q = Field::Rationals;
        let r = z2_regular(q);
        let plus = r.restrict(&line(q, &[1, 1])).unwrap();
        assert_eq!(plus.matrix(1), &Matrix::from_i64(q, &[&[1]]));
        let minus = r.restrict(&line(q, &[1, -1])).unwrap();
        assert_eq!(minus.matrix(1), &Matrix::from_i64(q, &[&[-1]]));
        assert_eq!(minus.verify(), Ok(()));
        let full = r.restrict(&Subspace::full(q, 2)).unwrap();
        assert_eq!(full, r);
        assert!(matches!(r.restrict(&line(q, &[1, 0])), Err(RepError::NotInvariant { element: 1 })));
    }
}
