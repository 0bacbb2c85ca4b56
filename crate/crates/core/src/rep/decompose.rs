use serde::Serialize;

use crate::error::RepError;
use crate::matrix::Matrix;
use crate::rep::search::{Irreducibility, ProperInvariant};
use crate::rep::Representation;
use crate::subspace::Subspace;

/// One irreducible (or undecided) piece of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    /// The summand as a subspace of the original representation space.
    pub subspace: Subspace,
    /// The restriction, in `subspace`'s canonical basis.
    pub rep: Representation,
    pub irreducible: Irreducibility,
}

/// One invariant-subspace search performed while decomposing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchLogEntry {
    pub depth: usize,
    pub degree: usize,
    pub candidates_spun: usize,
    /// Dimension of the invariant subspace found, if any.
    pub found_dim: Option<usize>,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionResult {
    pub summands: Vec<Summand>,
    pub log: Vec<SearchLogEntry>,
    /// The summands are independent and span the whole space.
    pub direct_sum: bool,
}

impl DecompositionResult {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.subspace.dim()).collect()
    }
}

fn embed(outer: &Subspace, inner: &Subspace) -> Subspace {
    Subspace::from_spanning_matrix(&(inner.basis() * outer.basis()))
}

impl Representation {
    /// Splits the representation into invariant summands with no proper
    /// invariant subspaces found: search for a proper invariant `U`, take its
    /// Maschke complement `W`, and recurse into `U` then `W`.
    pub fn decompose(&self, bound: u128) -> Result<DecompositionResult, RepError> {
        self.check_invertible_order()?;
        let mut summands = Vec::new();
        let mut log = Vec::new();
        if self.degree() > 0 {
            self.split(Subspace::full(self.field(), self.degree()), 0, bound, &mut summands, &mut log)?;
        }
        let direct_sum = summands.iter().map(|s| s.subspace.dim()).sum::<usize>() == self.degree()
            && summands
                .iter()
                .fold(Matrix::zeros(self.field(), 0, self.degree()), |acc, s| acc.vstack(s.subspace.basis()))
                .rank()
                == self.degree();
        Ok(DecompositionResult { summands, log, direct_sum })
    }

    fn split(
        &self,
        space: Subspace,
        depth: usize,
        bound: u128,
        summands: &mut Vec<Summand>,
        log: &mut Vec<SearchLogEntry>,
    ) -> Result<(), RepError> {
        let local = self.restrict(&space)?;
        let search = local.find_proper_invariant(bound)?;
        log.push(SearchLogEntry {
            depth,
            degree: local.degree(),
            candidates_spun: search.candidates_spun,
            found_dim: match &search.result {
                ProperInvariant::Found(u) => Some(u.dim()),
                _ => None,
            },
            exhaustive: !matches!(search.result, ProperInvariant::Unknown),
        });
        let irreducible = match search.result {
            ProperInvariant::Found(u) => {
                let w = local.maschke_complement(&u)?;
                self.split(embed(&space, &u), depth + 1, bound, summands, log)?;
                return self.split(embed(&space, &w), depth + 1, bound, summands, log);
            }
            ProperInvariant::NoneExists => Irreducibility::Yes,
            ProperInvariant::Unknown => Irreducibility::Unknown,
        };
        summands.push(Summand {
            subspace: space,
            rep: local,
            irreducible,
        });
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::rep::fixtures::*;
    use crate::rep::DEFAULT_SEARCH_BOUND;

    #[test]
    fn degree_one_is_a_single_summand() {
        let q = Field::Rationals;
        let d = z2_sign(q).decompose(DEFAULT_SEARCH_BOUND).unwrap();
        assert_eq!(d.dims(), vec![1]);
        assert_eq!(d.summands[0].irreducible, Irreducibility::Yes);
        assert!(d.direct_sum);
    }

    #[test]
    fn z2_over_q_splits_into_plus_and_minus() {
        let q = Field::Rationals;
        let d = z2_regular(q).decompose(DEFAULT_SEARCH_BOUND).unwrap();
        let spaces: Vec<_> = d.summands.iter().map(|s| s.subspace.clone()).collect();
        assert_eq!(spaces.len(), 2);
        assert!(spaces.contains(&line(q, &[1, 1])));
        assert!(spaces.contains(&line(q, &[1, -1])));
        assert!(d.direct_sum);
        assert!(d.summands.iter().all(|s| s.irreducible == Irreducibility::Yes));
    }

    #[test]
    fn modular_characteristic_is_rejected() {
        let f = Field::Prime(2);
        assert!(matches!(
            z2_regular(f).decompose(DEFAULT_SEARCH_BOUND),
            Err(RepError::CharacteristicDividesOrder { .. })
        ));
    }
}
