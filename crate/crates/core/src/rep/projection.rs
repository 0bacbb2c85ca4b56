use crate::error::RepError;
use crate::matrix::Matrix;
use crate::rep::Representation;
use crate::subspace::Subspace;

/// The projection onto `u` along the span of the standard basis vectors
/// `e_j` whose index `j` is not a pivot column of `u`'s canonical basis.
///
/// Since `u`'s basis is in reduced row-echelon form, the coordinate of
/// `v` on the `i`-th basis vector is `v[pivot_i]`, so column `pivot_i` of the
/// projection is the `i`-th basis vector and every other column is zero.
pub fn coordinate_projection(u: &Subspace) -> Matrix {
    let d = u.ambient_dim();
    let mut p = Matrix::zeros(u.field(), d, d);
    for (row, &pivot) in u.vectors().zip(u.pivots()) {
        for (r, x) in row.iter().enumerate() {
            p[(r, pivot)] = x.clone();
        }
    }
    p
}

impl Representation {
    /// The averaged projection `π = (1/|G|) Σ_a φ(a) π₀ φ(⊖a)` onto the
    /// invariant subspace `u`, with `π₀` from [`coordinate_projection`].
    ///
    /// `π` is idempotent, fixes `u` pointwise, has image `u`, and commutes with
    /// every `φ(b)`.
    pub fn averaging_projection(&self, u: &Subspace) -> Result<Matrix, RepError> {
        self.check_subspace(u)?;
        self.check_invertible_order()?;
        if let Some(element) = self.invariance_witness(u)? {
            return Err(RepError::NotInvariant { element });
        }
        let g = self.gyro();
        let p0 = coordinate_projection(u);
        let mut sum = Matrix::zeros(self.field(), self.degree(), self.degree());
        for a in g.elements() {
            let term = &(self.matrix(a) * &p0) * self.matrix(g.inverse(a));
            sum = &sum + &term;
        }
        let n_inv = self
            .field()
            .from_u64(g.order() as u64)
            .inv()
            .expect("order is invertible once the characteristic check passed");
        Ok(sum.scale(&n_inv))
    }

    /// An invariant complement of `u`: the kernel of the averaging projection.
    pub fn maschke_complement(&self, u: &Subspace) -> Result<Subspace, RepError> {
        Ok(self.averaging_projection(u)?.kernel())
    }
}
