use serde::Serialize;

use crate::error::{LinalgError, RepError};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::rep::search::projective_points;
use crate::rep::Representation;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "matrix", rename_all = "snake_case")]
pub enum EquivalenceSearch {
    Found(Matrix),
    NoneExists,
    Unknown,
}

/// Reads a flattened `rows × cols` vector (row-major) back into a matrix.
pub(crate) fn unflatten(field: Field, rows: usize, cols: usize, v: &[Scalar]) -> Matrix {
    Matrix::from_fn(field, rows, cols, |i, j| v[i * cols + j].clone())
}

impl Representation {
    /// All `Φ` (`other.degree × self.degree`, flattened row-major) with
    /// `Φ φ(a) = ψ(a) Φ` for every `a`, where `φ = self` and `ψ = other`.
    pub fn intertwiner_space(&self, other: &Representation) -> Result<Subspace, RepError> {
        if self.gyro() != other.gyro() {
            return Err(RepError::GyrogroupMismatch);
        }
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch {
                left: self.field(),
                right: other.field(),
            }
            .into());
        }
        let f = self.field();
        let (d, m) = (self.degree(), other.degree());
        let unknowns = m * d;
        let mut rows = Vec::new();
        for a in self.gyro().elements() {
            let (phi, psi) = (self.matrix(a), other.matrix(a));
            if phi.is_identity() && psi.is_identity() {
                continue;
            }
            for i in 0..m {
                for k in 0..d {
                    let mut row = vec![f.zero(); unknowns];
                    for j in 0..d {
                        row[i * d + j] = &row[i * d + j] + &phi[(j, k)];
                    }
                    for l in 0..m {
                        row[l * d + k] = &row[l * d + k] - &psi[(i, l)];
                    }
                    rows.push(row);
                }
            }
        }
        if rows.is_empty() {
            return Ok(Subspace::full(f, unknowns));
        }
        Ok(Matrix::from_rows(f, unknowns, rows).kernel())
    }

    /// Looks for an invertible intertwiner from `self` to `other`.
    ///
    /// Over GF(p) all nonzero combinations of the intertwiner basis (up to
    /// scaling) are tried when there are at most `bound` of them, so a
    /// `NoneExists` answer is a proof. Over ℚ the basis elements and their
    /// {0, ±1} combinations are tried and the answer may be `Unknown`.
    pub fn find_equivalence(&self, other: &Representation, bound: u128) -> Result<EquivalenceSearch, RepError> {
        let space = self.intertwiner_space(other)?;
        let (d, m) = (self.degree(), other.degree());
        if d != m {
            return Ok(EquivalenceSearch::NoneExists);
        }
        let f = self.field();
        if d == 0 {
            return Ok(EquivalenceSearch::Found(Matrix::zeros(f, 0, 0)));
        }
        let k = space.dim();
        if k == 0 {
            return Ok(EquivalenceSearch::NoneExists);
        }
        let combine = |coeffs: &[Scalar]| {
            let mut v = vec![f.zero(); d * d];
            for (c, b) in coeffs.iter().zip(space.vectors()) {
                if c.is_zero() {
                    continue;
                }
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = &*vi + &(c * bi);
                }
            }
            unflatten(f, d, d, &v)
        };
        let (candidates, exhaustive): (Vec<Vec<Scalar>>, bool) = match f {
            Field::Prime(p) => {
                let points = (0..k).fold(1u128, |acc, _| acc.saturating_mul(p as u128));
                if points > bound {
                    return Err(RepError::SearchSpaceTooLarge { points, bound });
                }
                (projective_points(f, k).expect("prime field").collect(), true)
            }
            Field::Rationals => {
                let three = (0..k).fold(1u128, |acc, _| acc.saturating_mul(3));
                let digits = [0i64, 1, -1];
                let mut out = Vec::new();
                if three <= bound {
                    for mut index in 1..three {
                        let mut c = vec![f.zero(); k];
                        for slot in (0..k).rev() {
                            c[slot] = f.from_i64(digits[(index % 3) as usize]);
                            index /= 3;
                        }
                        out.push(c);
                    }
                } else {
                    for i in 0..k {
                        let mut c = vec![f.zero(); k];
                        c[i] = f.one();
                        out.push(c);
                    }
                }
                (out, false)
            }
        };
        for c in candidates {
            let phi = combine(&c);
            if phi.is_invertible() {
                return Ok(EquivalenceSearch::Found(phi));
            }
        }
        Ok(if exhaustive { EquivalenceSearch::NoneExists } else { EquivalenceSearch::Unknown })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::fixtures::*;
    use crate::rep::DEFAULT_SEARCH_BOUND;

    #[test]
    fn self_intertwiners_contain_identity() {
        let q = Field::Rationals;
        let r = z2_regular(q);
        let space = r.intertwiner_space(&r).unwrap();
        let id: Vec<Scalar> = (0..4).map(|i| if i == 0 || i == 3 { q.one() } else { q.zero() }).collect();
        assert!(space.contains(&id));
        // Commutant of the swap: span of I and the swap itself.
        assert_eq!(space.dim(), 2);
        let swap: Vec<Scalar> = [0, 1, 1, 0].iter().map(|&x| q.from_i64(x)).collect();
        assert!(space.contains(&swap));
    }

    #[test]
    fn trivial_and_sign_are_inequivalent() {
        let q = Field::Rationals;
        let sign = z2_sign(q);
        let trivial = Representation::trivial(sign.gyro_arc().clone(), q, 1);
        assert!(trivial.intertwiner_space(&sign).unwrap().is_zero());
        assert_eq!(trivial.find_equivalence(&sign, DEFAULT_SEARCH_BOUND).unwrap(), EquivalenceSearch::NoneExists);
    }

    #[test]
    fn conjugates_are_equivalent() {
        let f = Field::Prime(5);
        let r = z2_regular(f);
        let p = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let s = r.conjugate(&p).unwrap();
        assert_eq!(s.verify(), Ok(()));
        let flat: Vec<Scalar> = (0..4).map(|i| p[(i / 2, i % 2)].clone()).collect();
        assert!(r.intertwiner_space(&s).unwrap().contains(&flat));
        match r.find_equivalence(&s, DEFAULT_SEARCH_BOUND).unwrap() {
            EquivalenceSearch::Found(phi) => {
                for a in 0..2 {
                    assert_eq!(&phi * r.matrix(a), s.matrix(a) * &phi);
                }
            }
            other => panic!("expected an equivalence, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_gyrogroups() {
        let q = Field::Rationals;
        let r = z2_regular(q);
        let other = Representation::trivial(std::sync::Arc::new(crate::gyro::builtin("klein").unwrap()), q, 2);
        assert_eq!(r.intertwiner_space(&other), Err(RepError::GyrogroupMismatch));
    }
}
