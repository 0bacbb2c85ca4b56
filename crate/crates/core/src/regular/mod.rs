//! The left regular representation of a gyrogroup.
//!
//! `L(G)` is the space of all functions `G → F`, with basis the point masses
//! `δ_a`. A gyrogroup in general does not act on all of `L(G)` through
//! `(a·f)(x) = f(⊖a ⊕ x)`, because ⊕ is not associative. It does act on
//!
//! ```text
//! L^gyr(G) = { f ∈ L(G) : f(a ⊕ gyr[x,y]z) = f(a ⊕ z) for all a, x, y, z }.
//! ```
//!
//! Every defining constraint equates two values of `f`, so `L^gyr(G)` is the
//! span of the indicator functions of the classes of the finest partition of
//! `G` that merges `a ⊕ ρ(z)` with `a ⊕ z` for every gyroautomorphism `ρ`.
//! [`lgyr_partition`] computes that partition with union-find, and
//! [`lgyr_constraint_kernel`] solves the defining linear system directly so the
//! two can be compared. Everything else here works in the class-indicator
//! basis.
//!
//! The augmentation functional `σ(f) = Σ_a f(a)` sends the indicator of a
//! class `C` to `|C|·1`. Its kernel meets `L^gyr(G)` in an invariant subspace
//! `U` that either is all of `L^gyr(G)` or has codimension one, depending on
//! whether every class size vanishes in the field.

mod converse;

use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::RegularError;
use crate::field::{Field, Scalar};
use crate::gyro::GyroTable;
use crate::matrix::Matrix;
use crate::rep::Representation;
use crate::subspace::Subspace;

pub use converse::{converse_maschke, converse_maschke_bounded, inclusion_chain, CandidateLog, ChainReport, ConverseBranch, ConverseReport, Inclusion};

/// The partition of `G` whose class indicators span `L^gyr(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GyroClassPartition {
    /// Classes in order of smallest member, members ascending.
    pub classes: Vec<Vec<usize>>,
    #[serde(skip)]
    pub class_of: Vec<usize>,
}

impl GyroClassPartition {
    /// Number of classes, i.e. `dim L^gyr(G)`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    /// The indicator of class `c` as a vector in the `δ` basis of `L(G)`.
    pub fn indicator(&self, field: Field, c: usize) -> Vec<Scalar> {
        self.class_of
            .iter()
            .map(|&k| if k == c { field.one() } else { field.zero() })
            .collect()
    }

    /// Expands class-basis coordinates to the function `G → F` they describe.
    pub fn to_function(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.class_of.iter().map(|&k| coords[k].clone()).collect()
    }

    /// `L^gyr(G)` as a subspace of `L(G)` in the `δ` basis.
    pub fn lgyr_subspace(&self, field: Field) -> Subspace {
        Subspace::span(field, self.class_of.len(), (0..self.len()).map(|c| self.indicator(field, c)))
    }

    /// Maps a subspace given in class coordinates into `L(G)`.
    pub fn embed(&self, u: &Subspace) -> Subspace {
        Subspace::span(u.field(), self.class_of.len(), u.vectors().map(|v| self.to_function(v)))
    }
}

/// The classes of `L^gyr(G)`: union-find over `G`, merging `a ⊕ ρ(z)` with
/// `a ⊕ z` for every distinct gyroautomorphism `ρ` and all `a, z`.
pub fn lgyr_partition(g: &GyroTable) -> GyroClassPartition {
    let n = g.order();
    let mut uf = UnionFind::<usize>::new(n);
    for rho in g.gyr_perms().iter().filter(|r| !r.is_identity()) {
        for a in g.elements() {
            for z in g.elements() {
                uf.union(g.op(a, rho.apply(z)), g.op(a, z));
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    let mut root_class = vec![usize::MAX; n];
    for (x, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(x);
        if root_class[root] == usize::MAX {
            root_class[root] = classes.len();
            classes.push(Vec::new());
        }
        *slot = root_class[root];
        classes[root_class[root]].push(x);
    }
    GyroClassPartition { classes, class_of }
}

/// `L^gyr(G)` solved directly: the kernel of the system
/// `f(a ⊕ gyr[x,y]z) − f(a ⊕ z) = 0` over all `a, x, y, z`, in the `δ` basis.
/// Costs O(n⁴); kept as an independent check of [`lgyr_partition`].
pub fn lgyr_constraint_kernel(g: &GyroTable, field: Field) -> Subspace {
    let n = g.order();
    let mut seen = std::collections::HashSet::new();
    let mut rows = Vec::new();
    for a in g.elements() {
        for x in g.elements() {
            for y in g.elements() {
                let gyr = g.gyr(x, y);
                for z in g.elements() {
                    let (i, j) = (g.op(a, gyr.apply(z)), g.op(a, z));
                    if i != j && seen.insert((i, j)) {
                        let mut row = vec![field.zero(); n];
                        row[i] = field.one();
                        row[j] = field.from_i64(-1);
                        rows.push(row);
                    }
                }
            }
        }
    }
    Matrix::from_rows(field, n, rows).kernel()
}

/// The left regular representation on `L^gyr(G)` in the class-indicator basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularRep {
    partition: GyroClassPartition,
    rep: Representation,
}

impl RegularRep {
    /// Builds `λ(a)` from `(a·f)(x) = f(⊖a ⊕ x)` applied to each class
    /// indicator, and checks that the result stays in the indicator span and
    /// forms a representation.
    pub fn new(g: &GyroTable, field: Field) -> Result<RegularRep, RegularError> {
        let partition = lgyr_partition(g);
        let k = partition.len();
        let mut matrices = Vec::with_capacity(g.order());
        for a in g.elements() {
            let inv = g.inverse(a);
            let mut m = Matrix::zeros(field, k, k);
            for c in 0..k {
                let moved: Vec<bool> = g.elements().map(|x| partition.class_of[g.op(inv, x)] == c).collect();
                for (d, class) in partition.classes.iter().enumerate() {
                    let value = moved[class[0]];
                    if class.iter().any(|&x| moved[x] != value) {
                        return Err(RegularError::InternalInconsistency(format!(
                            "λ({a}) maps the indicator of class {c} outside L^gyr"
                        )));
                    }
                    if value {
                        m[(d, c)] = field.one();
                    }
                }
            }
            matrices.push(m);
        }
        let rep = Representation::new(Arc::new(g.clone()), field, k, matrices)?;
        if let Err(v) = rep.verify() {
            return Err(RegularError::InternalInconsistency(format!("regular action is not a representation: {v}")));
        }
        Ok(RegularRep { partition, rep })
    }

    pub fn partition(&self) -> &GyroClassPartition {
        &self.partition
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn field(&self) -> Field {
        self.rep.field()
    }

    /// `σ` restricted to `L^gyr(G)`, as a row over the class basis: `|C|·1`.
    pub fn sigma_row(&self) -> Vec<Scalar> {
        let f = self.field();
        self.partition.classes.iter().map(|c| f.from_u64(c.len() as u64)).collect()
    }

    /// `σ(f)` for `f` in class coordinates.
    pub fn sigma(&self, coords: &[Scalar]) -> Scalar {
        self.sigma_row()
            .iter()
            .zip(coords)
            .fold(self.field().zero(), |acc, (s, c)| acc + s * c)
    }

    /// `U = L^gyr(G) ∩ ker σ` in class coordinates.
    pub fn sigma_kernel(&self) -> Subspace {
        Matrix::from_rows(self.field(), self.partition.len(), [self.sigma_row()]).kernel()
    }

    /// The constant functions: the span of the all-ones vector, confirmed to
    /// be exactly the common fixed space of all `λ(a)`.
    pub fn fix_subspace(&self) -> Result<Subspace, RegularError> {
        let f = self.field();
        let k = self.partition.len();
        let ones = Subspace::span(f, k, [vec![f.one(); k]]);
        let id = Matrix::identity(f, k);
        let stacked = self
            .rep
            .matrices()
            .iter()
            .fold(Matrix::zeros(f, 0, k), |acc, m| acc.vstack(&(m - &id)));
        let fixed = stacked.kernel();
        if fixed != ones {
            return Err(RegularError::InternalInconsistency(format!(
                "fixed space has dimension {} and is not the constants",
                fixed.dim()
            )));
        }
        Ok(ones)
    }

    /// Pairs `(a, b)` with `a ≠ b` and `λ(a) = λ(b)`.
    pub fn coincidences(&self) -> Vec<(usize, usize)> {
        let m = self.rep.matrices();
        let mut out = Vec::new();
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if m[a] == m[b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// Facts about `σ` on `L(G)` and `L^gyr(G)` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub field: Field,
    pub dim_lg: usize,
    pub dim_ker_sigma_in_lg: usize,
    pub dim_lgyr: usize,
    pub class_sizes: Vec<usize>,
    pub class_sizes_in_field: Vec<Scalar>,
    pub lgyr_subset_ker_sigma: bool,
    pub dim_u: usize,
    pub u_invariant: bool,
    /// `σ(λ(a)f) = σ(f)` for every `a` and every class indicator `f`.
    pub sigma_translation_invariant: bool,
    pub u: Subspace,
}

impl SigmaReport {
    /// `dim U` is `dim L^gyr` when `L^gyr ⊆ ker σ`, one less otherwise.
    pub fn dichotomy_holds(&self) -> bool {
        if self.lgyr_subset_ker_sigma {
            self.dim_u == self.dim_lgyr
        } else {
            self.dim_u + 1 == self.dim_lgyr
        }
    }
}

pub fn sigma_analysis(g: &GyroTable, field: Field) -> Result<SigmaReport, RegularError> {
    let reg = RegularRep::new(g, field)?;
    Ok(reg.sigma_report())
}

impl RegularRep {
    pub fn sigma_report(&self) -> SigmaReport {
        let f = self.field();
        let n = self.rep.gyro().order();
        let ker_in_lg = Matrix::from_rows(f, n, [vec![f.one(); n]]).kernel();
        let u = self.sigma_kernel();
        let row = self.sigma_row();
        let k = self.partition.len();
        let translation_invariant = self.rep.matrices().iter().all(|m| {
            (0..k).all(|c| {
                let e: Vec<Scalar> = (0..k).map(|i| if i == c { f.one() } else { f.zero() }).collect();
                self.sigma(&m.mul_vec(&e)) == self.sigma(&e)
            })
        });
        SigmaReport {
            field: f,
            dim_lg: n,
            dim_ker_sigma_in_lg: ker_in_lg.dim(),
            dim_lgyr: k,
            class_sizes: self.partition.class_sizes(),
            lgyr_subset_ker_sigma: row.iter().all(Scalar::is_zero),
            class_sizes_in_field: row,
            dim_u: u.dim(),
            u_invariant: self.rep.is_invariant(&u).unwrap_or(false),
            sigma_translation_invariant: translation_invariant,
            u,
        }
    }
}

/// The constant functions in `L^gyr(G)`, class coordinates.
pub fn fix_subspace(g: &GyroTable, field: Field) -> Result<Subspace, RegularError> {
    RegularRep::new(g, field)?.fix_subspace()
}
