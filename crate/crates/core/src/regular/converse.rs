//! Modular characteristic: the inclusion chain and the converse certificate.

use serde::Serialize;

use crate::error::{RegularError, RepError};
use crate::field::{Field, Scalar};
use crate::gyro::GyroTable;
use crate::regular::RegularRep;
use crate::rep::{projective_points, DEFAULT_SEARCH_BOUND};
use crate::subspace::Subspace;

fn modular_field(g: &GyroTable, prime: u64) -> Result<Field, RegularError> {
    let field = Field::prime(prime)?;
    if !(g.order() as u64).is_multiple_of(prime) {
        return Err(RegularError::PrimeDoesNotDivideOrder { prime, order: g.order() });
    }
    Ok(field)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Inclusion {
    pub smaller: &'static str,
    pub larger: &'static str,
    pub holds: bool,
    pub strict: bool,
}

/// `{0} ⊆ Fix ⊆ U ⊆ L^gyr(G) ⊆ L(G)` over GF(p), with `U = L^gyr ∩ ker σ`,
/// all compared inside `L(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub prime: u64,
    pub order: usize,
    pub dim_fix: usize,
    pub dim_u: usize,
    pub dim_lgyr: usize,
    pub dim_lg: usize,
    pub inclusions: Vec<Inclusion>,
    pub is_group: bool,
    /// The first inclusion is always strict.
    pub first_strict: bool,
    /// The last inclusion is strict exactly when `G` is not a group.
    pub last_strict_iff_not_group: bool,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        self.inclusions.iter().all(|i| i.holds) && self.first_strict && self.last_strict_iff_not_group
    }

    /// `{0} ⊊ Fix = U ⊊ …` rendering with dimensions.
    pub fn render(&self) -> String {
        let mut s = String::from("{0}");
        for inc in &self.inclusions {
            let sym = match (inc.holds, inc.strict) {
                (false, _) => "⊄",
                (true, true) => "⊊",
                (true, false) => "=",
            };
            s.push_str(&format!(" {sym} {}", inc.larger));
        }
        s.push_str(&format!(
            "  (dims 0, {}, {}, {}, {})",
            self.dim_fix, self.dim_u, self.dim_lgyr, self.dim_lg
        ));
        s
    }
}

pub fn inclusion_chain(g: &GyroTable, prime: u64) -> Result<ChainReport, RegularError> {
    let field = modular_field(g, prime)?;
    let reg = RegularRep::new(g, field)?;
    let p = reg.partition();
    let zero = Subspace::zero(field, g.order());
    let fix = p.embed(&reg.fix_subspace()?);
    let u = p.embed(&reg.sigma_kernel());
    let lgyr = p.lgyr_subspace(field);
    let lg = Subspace::full(field, g.order());
    let chain = [("{0}", &zero), ("Fix", &fix), ("U", &u), ("L^gyr", &lgyr), ("L(G)", &lg)];
    let inclusions: Vec<Inclusion> = chain
        .windows(2)
        .map(|w| {
            let holds = w[0].1.is_subspace_of(w[1].1).expect("same ambient space");
            Inclusion {
                smaller: w[0].0,
                larger: w[1].0,
                holds,
                strict: holds && w[0].1.dim() < w[1].1.dim(),
            }
        })
        .collect();
    let is_group = g.is_group();
    Ok(ChainReport {
        prime,
        order: g.order(),
        dim_fix: fix.dim(),
        dim_u: u.dim(),
        dim_lgyr: lgyr.dim(),
        dim_lg: lg.dim(),
        first_strict: inclusions[0].strict,
        last_strict_iff_not_group: inclusions[3].strict == !is_group,
        is_group,
        inclusions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConverseBranch {
    /// Some `f ∈ L^gyr` has `σ(f) ≠ 0`, and every candidate complement of `U`
    /// was checked and rejected.
    NoInvariantComplement,
    /// Every class size vanishes mod p, so `L^gyr ⊆ ker σ`; the hypothesis
    /// fails and `U = L^gyr` has the trivial complement `{0}`.
    HypothesisFails,
    /// An invariant complement was found despite the hypothesis holding.
    /// This contradicts the theorem and indicates a bug.
    ComplementFound,
}

/// One candidate line `span{b}` with `b ∉ U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateLog {
    pub vector: Vec<Scalar>,
    /// An element `h` with `λ(h)b ∉ span{b}`, if any.
    pub moved_by: Option<usize>,
    pub invariant: bool,
    pub direct_sum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConverseReport {
    pub prime: u64,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub hypothesis_holds: bool,
    pub dim_lgyr: usize,
    pub dim_u: usize,
    pub candidates_checked: usize,
    pub candidates: Vec<CandidateLog>,
    pub complement_found: Option<Subspace>,
    pub branch: ConverseBranch,
    pub narrative: String,
}

/// Certifies over GF(p), `p | |G|`, that `U = L^gyr(G) ∩ ker σ` has no
/// invariant complement in `L^gyr(G)` whenever some class size is nonzero
/// mod p.
///
/// Under that hypothesis `dim U = dim L^gyr − 1`, so any complement is a line
/// `span{b}` with `b ∉ U`. Every such line (one per projective point) is
/// tested for invariance; the log of rejections is the certificate.
pub fn converse_maschke(g: &GyroTable, prime: u64) -> Result<ConverseReport, RegularError> {
    converse_maschke_bounded(g, prime, DEFAULT_SEARCH_BOUND)
}

pub fn converse_maschke_bounded(g: &GyroTable, prime: u64, bound: u128) -> Result<ConverseReport, RegularError> {
    let field = modular_field(g, prime)?;
    let reg = RegularRep::new(g, field)?;
    let class_sizes = reg.partition().class_sizes();
    let hypothesis_holds = reg.sigma_row().iter().any(|s| !s.is_zero());
    let u = reg.sigma_kernel();
    let k = reg.partition().len();
    let mut report = ConverseReport {
        prime,
        order: g.order(),
        class_sizes,
        hypothesis_holds,
        dim_lgyr: k,
        dim_u: u.dim(),
        candidates_checked: 0,
        candidates: Vec::new(),
        complement_found: None,
        branch: ConverseBranch::HypothesisFails,
        narrative: String::new(),
    };
    if !hypothesis_holds {
        report.narrative = format!(
            "every class size is 0 mod {prime}, so L^gyr ⊆ ker σ; the converse theorem is inapplicable; U = L^gyr has complement {{0}}"
        );
        return Ok(report);
    }
    if u.dim() + 1 != k {
        return Err(RegularError::InternalInconsistency(format!(
            "σ is nonzero on L^gyr but dim U = {} with dim L^gyr = {k}",
            u.dim()
        )));
    }
    let points = (0..k).fold(1u128, |acc, _| acc.saturating_mul(prime as u128));
    if points > bound {
        return Err(RepError::SearchSpaceTooLarge { points, bound }.into());
    }
    let rep = reg.rep();
    for b in projective_points(field, k).expect("prime field") {
        if u.contains(&b) {
            continue;
        }
        let line = Subspace::span(field, k, [b.clone()]);
        let moved_by = g.elements().find(|&h| !line.contains(&rep.matrix(h).mul_vec(&b)));
        let direct_sum = u.is_direct_sum(&line)?;
        let invariant = moved_by.is_none();
        if invariant && direct_sum && report.complement_found.is_none() {
            report.complement_found = Some(line);
        }
        report.candidates.push(CandidateLog {
            vector: b,
            moved_by,
            invariant,
            direct_sum,
        });
    }
    report.candidates_checked = report.candidates.len();
    if report.complement_found.is_some() {
        report.branch = ConverseBranch::ComplementFound;
        report.narrative = "an invariant complement of U exists although σ is nonzero on L^gyr".into();
    } else {
        report.branch = ConverseBranch::NoInvariantComplement;
        report.narrative = format!(
            "σ is nonzero on L^gyr; all {} lines outside U = L^gyr ∩ ker σ were checked and none is invariant, so U has no invariant complement",
            report.candidates_checked
        );
    }
    Ok(report)
}
