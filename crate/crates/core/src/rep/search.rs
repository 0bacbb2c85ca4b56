//! Spinning vectors and searching for invariant subspaces.

use serde::Serialize;

use crate::error::RepError;
use crate::field::{Field, Scalar};
use crate::rep::Representation;
use crate::subspace::Subspace;

/// Result of looking for a nonzero proper invariant subspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", content = "subspace", rename_all = "snake_case")]
pub enum ProperInvariant {
    Found(Subspace),
    /// The search was exhaustive and found nothing: the representation is
    /// irreducible.
    NoneExists,
    /// The heuristic candidate set (over ℚ) was exhausted without a hit.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantSearch {
    pub result: ProperInvariant,
    pub candidates_spun: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    Yes,
    No,
    Unknown,
}

/// `(p^dim − 1)/(p − 1)`, saturating.
pub fn projective_point_count(p: u64, dim: usize) -> u128 {
    let total = saturating_pow(p as u128, dim);
    if total == u128::MAX {
        return u128::MAX;
    }
    (total - 1) / (p as u128 - 1)
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// All nonzero vectors of `GF(p)^dim` whose first nonzero coordinate is 1, in
/// lexicographic order (coordinate 0 most significant). `None` over ℚ.
pub fn projective_points(field: Field, dim: usize) -> Option<impl Iterator<Item = Vec<Scalar>>> {
    let Field::Prime(p) = field else {
        return None;
    };
    let iter = (0..dim).rev().flat_map(move |lead| {
        let tail = dim - lead - 1;
        let count = saturating_pow(p as u128, tail);
        (0..count).map(move |mut index| {
            let mut v = vec![field.zero(); dim];
            v[lead] = field.one();
            for slot in (lead + 1..dim).rev() {
                v[slot] = field.from_u64((index % p as u128) as u64);
                index /= p as u128;
            }
            v
        })
    });
    Some(iter)
}

/// Rational candidates: the standard basis vectors, then nonzero vectors with
/// entries in {0, 1, −1} normalised to a leading 1 (entries ordered
/// 0 < 1 < −1), or, when there are more than `bound` of those, the pairwise
/// combinations `e_i ± e_j`.
fn rational_candidates(dim: usize, bound: u128) -> Vec<Vec<Scalar>> {
    let q = Field::Rationals;
    let unit = |i: usize| {
        let mut v = vec![q.zero(); dim];
        v[i] = q.one();
        v
    };
    let mut out: Vec<Vec<Scalar>> = (0..dim).map(unit).collect();
    if saturating_pow(3, dim) <= bound {
        let digits = [0, 1, -1];
        for lead in (0..dim).rev() {
            let tail = dim - lead - 1;
            for mut index in 0..saturating_pow(3, tail) {
                let mut v = vec![q.zero(); dim];
                v[lead] = q.one();
                for slot in (lead + 1..dim).rev() {
                    v[slot] = q.from_i64(digits[(index % 3) as usize]);
                    index /= 3;
                }
                if v.iter().filter(|x| !x.is_zero()).count() > 1 {
                    out.push(v);
                }
            }
        }
    } else {
        for i in 0..dim {
            for j in i + 1..dim {
                for sign in [1, -1] {
                    let mut v = unit(i);
                    v[j] = q.from_i64(sign);
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Incrementally maintained reduced echelon basis.
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    /// Adds `v` if it is not already in the span; returns whether it was new.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut x = v.to_vec();
        for (p, row) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let c = x[*p].clone();
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi = &*xi - &(&c * ri);
            }
        }
        let Some(q) = x.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = x[q].inv().expect("nonzero");
        for xi in x.iter_mut() {
            *xi = &*xi * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let c = row[q].clone();
            for (ri, xi) in row.iter_mut().zip(&x) {
                *ri = &*ri - &(&c * xi);
            }
        }
        self.rows.push((q, x));
        true
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

impl Representation {
    /// The smallest invariant subspace containing `v`.
    pub fn spin(&self, v: &[Scalar]) -> Result<Subspace, RepError> {
        self.check_vector(v)?;
        let mut generators: Vec<_> = Vec::new();
        for m in self.matrices() {
            if !m.is_identity() && !generators.contains(&m) {
                generators.push(m);
            }
        }
        let mut span = Echelon::new();
        let mut found = Vec::new();
        let mut queue = Vec::new();
        if span.insert(v) {
            found.push(v.to_vec());
            queue.push(v.to_vec());
        }
        while let Some(w) = queue.pop() {
            if span.len() == self.degree() {
                break;
            }
            for m in &generators {
                let image = m.mul_vec(&w);
                if span.insert(&image) {
                    found.push(image.clone());
                    queue.push(image);
                }
            }
        }
        Ok(Subspace::span(self.field(), self.degree(), found))
    }

    /// Looks for a nonzero proper invariant subspace.
    ///
    /// Over GF(p) every projective point is spun, in lexicographic order; the
    /// first proper result is returned, and exhausting the points proves
    /// irreducibility. This fails with `SearchSpaceTooLarge` when `p^degree`
    /// exceeds `bound`. Over ℚ a fixed set of small-integer candidates is
    /// spun and the outcome is `Found` or `Unknown`. Degrees 0 and 1 have no
    /// nonzero proper subspaces at all.
    pub fn find_proper_invariant(&self, bound: u128) -> Result<InvariantSearch, RepError> {
        let d = self.degree();
        if d <= 1 {
            return Ok(InvariantSearch {
                result: ProperInvariant::NoneExists,
                candidates_spun: 0,
            });
        }
        let (candidates, exhaustive): (Box<dyn Iterator<Item = Vec<Scalar>>>, bool) = match self.field() {
            Field::Prime(p) => {
                let points = saturating_pow(p as u128, d);
                if points > bound {
                    return Err(RepError::SearchSpaceTooLarge { points, bound });
                }
                (Box::new(projective_points(self.field(), d).expect("prime field")), true)
            }
            Field::Rationals => (Box::new(rational_candidates(d, bound).into_iter()), false),
        };
        let mut spun = 0;
        for v in candidates {
            spun += 1;
            let s = self.spin(&v)?;
            if s.dim() < d {
                return Ok(InvariantSearch {
                    result: ProperInvariant::Found(s),
                    candidates_spun: spun,
                });
            }
        }
        Ok(InvariantSearch {
            result: if exhaustive { ProperInvariant::NoneExists } else { ProperInvariant::Unknown },
            candidates_spun: spun,
        })
    }

    /// `Yes` when no proper invariant subspace exists (certified only over
    /// GF(p) or in degree ≤ 1), `No` when one was found.
    pub fn irreducibility(&self, bound: u128) -> Result<Irreducibility, RepError> {
        Ok(match self.find_proper_invariant(bound)?.result {
            ProperInvariant::Found(_) => Irreducibility::No,
            ProperInvariant::NoneExists => Irreducibility::Yes,
            ProperInvariant::Unknown => Irreducibility::Unknown,
        })
    }
}
