//! Finite gyrogroups given by Cayley tables.
//!
//! A [`GyroTable`] is only ever constructed through validation: the table must
//! have bijective left and right translations, a left identity, left inverses,
//! and its derived gyrations must be automorphisms satisfying the left
//! gyroassociative law and the left loop property. Checks are exhaustive, so
//! construction costs O(n³); orders up to 64 are comfortable.

mod builtin;
mod mobius;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::GyroError;

pub use builtin::builtin;
pub use mobius::{mobius_sample_check, MobiusPoint, MobiusReport, MOBIUS_MODULUS_CAP};

/// A permutation of the elements of a gyrogroup that preserves ⊕.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GyroAutomorphism(Vec<usize>);

impl GyroAutomorphism {
    pub fn identity(order: usize) -> GyroAutomorphism {
        GyroAutomorphism((0..order).collect())
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> GyroAutomorphism {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        GyroAutomorphism(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GyroAutomorphism) -> GyroAutomorphism {
        GyroAutomorphism(other.0.iter().map(|&x| self.0[x]).collect())
    }
}

impl fmt::Display for GyroAutomorphism {
    /// Cycle notation, fixed points omitted; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            let parts: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A validated finite gyrogroup on the elements `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GyroTable {
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    /// `left_div[a*n + y]` is the unique `x` with `a ⊕ x = y`.
    left_div: Vec<usize>,
    gyr_index: Vec<usize>,
    /// Distinct gyroautomorphisms; index 0 is always the identity, the rest
    /// follow first appearance in a row-major scan over `(a, b)`.
    gyr_perms: Vec<GyroAutomorphism>,
}

fn is_permutation(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in values {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl GyroTable {
    /// Validates `rows` as the Cayley table of a gyrogroup, row `a` column
    /// `b` holding `a ⊕ b`.
    ///
    /// `gyr[a,b]c` is recovered as the unique `w` with
    /// `(a ⊕ b) ⊕ w = a ⊕ (b ⊕ c)`, which exists because left translations
    /// are bijective.
    pub fn from_cayley(rows: Vec<Vec<usize>>) -> Result<GyroTable, GyroError> {
        let n = rows.len();
        if n == 0 {
            return Err(GyroError::Empty);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GyroError::NotSquare { row, len: r.len(), order: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GyroError::NotClosed { row, col, value, order: n });
            }
        }
        let cayley: Vec<usize> = rows.into_iter().flatten().collect();
        let op = |a: usize, b: usize| cayley[a * n + b];

        if let Some(a) = (0..n).find(|&a| !is_permutation((0..n).map(|b| op(a, b)), n)) {
            return Err(GyroError::RowNotPermutation(a));
        }
        if let Some(b) = (0..n).find(|&b| !is_permutation((0..n).map(|a| op(a, b)), n)) {
            return Err(GyroError::ColumnNotPermutation(b));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| op(e, a) == a))
            .ok_or(GyroError::NoLeftIdentity)?;
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| op(b, a) == identity).ok_or(GyroError::MissingInverse(a)))
            .collect::<Result<Vec<_>, _>>()?;

        let mut left_div = vec![0; n * n];
        for a in 0..n {
            for x in 0..n {
                left_div[a * n + op(a, x)] = x;
            }
        }

        let mut gyr_perms = vec![GyroAutomorphism::identity(n)];
        let mut lookup: HashMap<GyroAutomorphism, usize> = HashMap::new();
        lookup.insert(gyr_perms[0].clone(), 0);
        let mut gyr_index = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let ab = op(a, b);
                let perm = GyroAutomorphism((0..n).map(|c| left_div[ab * n + op(a, op(b, c))]).collect());
                let next = gyr_perms.len();
                let idx = *lookup.entry(perm.clone()).or_insert(next);
                if idx == next {
                    let preserves = (0..n).all(|x| (0..n).all(|y| perm.apply(op(x, y)) == op(perm.apply(x), perm.apply(y))));
                    if !preserves {
                        return Err(GyroError::GyrNotAutomorphism(a, b));
                    }
                    gyr_perms.push(perm);
                }
                gyr_index[a * n + b] = idx;
            }
        }

        let table = GyroTable {
            order: n,
            cayley,
            identity,
            inverse,
            left_div,
            gyr_index,
            gyr_perms,
        };
        if let Some((a, b, c)) = table.first_left_gyroassociativity_failure() {
            return Err(GyroError::LeftGyroassociativityFails(a, b, c));
        }
        if let Some((a, b)) = table.first_left_loop_failure() {
            return Err(GyroError::LeftLoopFails(a, b));
        }
        Ok(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// `a ⊕ b`.
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    /// `⊖a`.
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// The unique `x` with `a ⊕ x = y`, i.e. `⊖a ⊕ y`.
    pub fn left_solve(&self, a: usize, y: usize) -> usize {
        self.left_div[a * self.order + y]
    }

    pub fn gyr(&self, a: usize, b: usize) -> &GyroAutomorphism {
        &self.gyr_perms[self.gyr_index(a, b)]
    }

    /// Index of `gyr[a,b]` in [`GyroTable::gyr_perms`].
    pub fn gyr_index(&self, a: usize, b: usize) -> usize {
        self.gyr_index[a * self.order + b]
    }

    /// The distinct gyroautomorphisms, identity first.
    pub fn gyr_perms(&self) -> &[GyroAutomorphism] {
        &self.gyr_perms
    }

    /// The gyroautomorphism `c ↦ gyr[a,b]c`, with bounds checking.
    pub fn derive_gyr(&self, a: usize, b: usize) -> Result<GyroAutomorphism, GyroError> {
        for index in [a, b] {
            if index >= self.order {
                return Err(GyroError::IndexOutOfRange { index, order: self.order });
            }
        }
        Ok(self.gyr(a, b).clone())
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// Left gyrotranslation `x ↦ a ⊕ x`.
    pub fn left_translation(&self, a: usize) -> &[usize] {
        &self.cayley[a * self.order..(a + 1) * self.order]
    }

    /// A gyrogroup with only trivial gyrations is a group.
    pub fn is_group(&self) -> bool {
        self.gyr_perms.len() == 1
    }

    /// `a ⊕ b = gyr[a,b](b ⊕ a)` for all `a, b`.
    pub fn is_gyrocommutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.gyr(a, b).apply(self.op(b, a))))
    }

    pub fn predicates(&self) -> GyroPredicates {
        GyroPredicates {
            is_group: self.is_group(),
            is_gyrocommutative: self.is_gyrocommutative(),
        }
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order;
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
    }

    fn first_left_gyroassociativity_failure(&self) -> Option<(usize, usize, usize)> {
        self.triples()
            .find(|&(a, b, c)| self.op(a, self.op(b, c)) != self.op(self.op(a, b), self.gyr(a, b).apply(c)))
    }

    fn first_left_loop_failure(&self) -> Option<(usize, usize)> {
        self.pairs()
            .find(|&(a, b)| self.gyr_index(self.op(a, b), b) != self.gyr_index(a, b))
    }

    /// Exhaustively re-checks the axioms and the standard consequences of
    /// them. On a validated table every check passes; a failure would point
    /// at a bug, so the report records counterexamples rather than panicking.
    pub fn verify_identities(&self) -> IdentityReport {
        let n = self.order;
        let e = self.identity;
        let op = |a, b| self.op(a, b);
        let mut checks = Vec::new();
        let mut push = |name: &'static str, kind: CheckKind, counterexample: Option<Vec<usize>>| {
            checks.push(IdentityCheck {
                name,
                kind,
                passed: counterexample.is_none(),
                counterexample,
            })
        };

        push(
            "left identity",
            CheckKind::Axiom,
            (0..n).find(|&a| op(e, a) != a).map(|a| vec![a]),
        );
        push(
            "left inverse",
            CheckKind::Axiom,
            (0..n).find(|&a| op(self.inverse(a), a) != e).map(|a| vec![a]),
        );
        let not_auto = self.pairs().find(|&(a, b)| {
            let g = self.gyr(a, b);
            self.pairs().any(|(x, y)| g.apply(op(x, y)) != op(g.apply(x), g.apply(y)))
        });
        let g3 = not_auto
            .map(|(a, b)| vec![a, b])
            .or_else(|| self.first_left_gyroassociativity_failure().map(|(a, b, c)| vec![a, b, c]));
        push("left gyroassociative law", CheckKind::Axiom, g3);
        push(
            "left loop property",
            CheckKind::Axiom,
            self.first_left_loop_failure().map(|(a, b)| vec![a, b]),
        );

        push(
            "right gyroassociative law",
            CheckKind::Derived,
            self.triples()
                .find(|&(a, b, c)| op(op(a, b), c) != op(a, op(b, self.gyr(b, a).apply(c))))
                .map(|(a, b, c)| vec![a, b, c]),
        );
        push(
            "right loop property",
            CheckKind::Derived,
            self.pairs()
                .find(|&(a, b)| self.gyr_index(a, op(b, a)) != self.gyr_index(a, b))
                .map(|(a, b)| vec![a, b]),
        );
        push(
            "inversive symmetry gyr[a,b]^-1 = gyr[b,a]",
            CheckKind::Derived,
            self.pairs()
                .find(|&(a, b)| self.gyr(a, b).inverse() != *self.gyr(b, a))
                .map(|(a, b)| vec![a, b]),
        );
        push(
            "gyrosum inversion ⊖(a⊕b) = gyr[a,b](⊖b⊖a)",
            CheckKind::Derived,
            self.pairs()
                .find(|&(a, b)| {
                    let rhs = self.gyr(a, b).apply(op(self.inverse(b), self.inverse(a)));
                    self.inverse(op(a, b)) != rhs
                })
                .map(|(a, b)| vec![a, b]),
        );
        let identity_failure = (0..n)
            .find(|&a| op(a, e) != a)
            .map(|a| vec![a])
            .or_else(|| {
                (0..n)
                    .find(|&f| f != e && ((0..n).all(|a| op(f, a) == a) || (0..n).all(|a| op(a, f) == a)))
                    .map(|f| vec![f])
            })
            .or_else(|| {
                (0..n)
                    .find(|&a| {
                        op(a, self.inverse(a)) != e
                            || (0..n).filter(|&b| op(b, a) == e).count() != 1
                            || (0..n).filter(|&b| op(a, b) == e).count() != 1
                    })
                    .map(|a| vec![a])
            });
        push("unique two-sided identity and inverses", CheckKind::Derived, identity_failure);

        IdentityReport { checks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GyroPredicates {
    pub is_group: bool,
    pub is_gyrocommutative: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Axiom,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub kind: CheckKind,
    pub passed: bool,
    pub counterexample: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G8_TAU: [usize; 8] = [0, 1, 2, 3, 6, 7, 4, 5];

    fn g8() -> GyroTable {
        builtin("g8").unwrap()
    }

    #[test]
    fn trivial_gyrogroup() {
        let g = GyroTable::from_cayley(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert!(g.is_group());
    }

    #[test]
    fn g8_gyr_1_4_is_tau() {
        let g = g8();
        assert_eq!(g.derive_gyr(1, 4).unwrap().as_slice(), &G8_TAU);
        assert!(g.derive_gyr(3, 5).unwrap().is_identity());
        assert!(g.derive_gyr(8, 0).is_err());
    }

    #[test]
    fn gyr_with_identity_is_trivial() {
        let g = g8();
        for b in g.elements() {
            assert!(g.gyr(g.identity(), b).is_identity());
        }
    }

    #[test]
    fn g8_tau_is_an_involution() {
        let g = g8();
        assert_eq!(g.gyr(4, 1).inverse(), *g.gyr(1, 4));
        assert_eq!(g.gyr(1, 4).compose(g.gyr(1, 4)), GyroAutomorphism::identity(8));
    }

    #[test]
    fn mutated_g8_is_rejected() {
        let mut rows = g8().cayley_rows();
        rows[1][1] = 1;
        assert_eq!(GyroTable::from_cayley(rows), Err(GyroError::RowNotPermutation(1)));
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(GyroTable::from_cayley(vec![]), Err(GyroError::Empty));
        assert!(matches!(
            GyroTable::from_cayley(vec![vec![0, 1], vec![1]]),
            Err(GyroError::NotSquare { row: 1, .. })
        ));
        assert!(matches!(
            GyroTable::from_cayley(vec![vec![0, 2], vec![1, 0]]),
            Err(GyroError::NotClosed { row: 0, col: 1, value: 2, .. })
        ));
        // Latin square with no left identity.
        assert_eq!(
            GyroTable::from_cayley(vec![vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]]),
            Err(GyroError::NoLeftIdentity)
        );
        assert_eq!(
            GyroTable::from_cayley(vec![vec![0, 1], vec![0, 1]]),
            Err(GyroError::ColumnNotPermutation(0))
        );
    }

    #[test]
    fn non_associative_loop_without_automorphic_gyrations_is_rejected() {
        // The smallest non-associative loop (order 5); its left inner maps
        // are not automorphisms.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = GyroTable::from_cayley(rows).unwrap_err();
        assert!(matches!(err, GyroError::GyrNotAutomorphism(..) | GyroError::LeftLoopFails(..)), "{err:?}");
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(g8().gyr(1, 4).to_string(), "(4 6)(5 7)");
        assert_eq!(GyroAutomorphism::identity(3).to_string(), "()");
    }
}
