//! A truncated-filter model of ultraproducts.
//!
//! A nonprincipal ultrafilter cannot be constructed, so "for almost all
//! indices" is modeled on a finite truncation `1..=N` with a designated
//! tail `s >= tail_start`: a property [`Verdict`] is `HoldsOnTail` when
//! it holds at every tail index (or, in density mode, on a fraction of
//! the tail at least θ), `FailsOnTail` symmetrically, and `Mixed`
//! otherwise. Mixed verdicts are first-class and never coerced: a finite
//! truncation can disagree with the true filter, and reports must
//! surface this.
//!
//! Everything downstream of a verdict carries [`TRUNCATION_DISCLAIMER`].

mod demos;
pub mod family;
mod shadows;
mod transfer;

pub use demos::{
    artin_schreier_demo, dirichlet_report, mae_tower_report, ramification_correspondence,
    zhat_tower_demo, ArtinSchreierReport, DirichletReport, MaeIndexReport, MaeReport,
    RamificationReport, TransferConclusion, TransferRule, WitnessOutcome, ZhatLevel,
    ZhatTowerReport,
};
pub use family::{
    constant_family, dirichlet_family, primes_family, table_family, ElementFamily, FamilyKind,
    PerIndexPrime, SpecMode, UltraFieldFamily, UltraPolyFamily,
};
pub use family::{diagonal_membership, frobenius_fixed_check, lift_prime, DiagonalMembership};
pub use shadows::{
    shadow_build, shadow_galois_audit, GroupDescriptor, ShadowAudit, ShadowFamily, ShadowIndex,
    ShadowKind,
};
pub use transfer::{
    irreducibility_transfer_report, los_check, LosEntry, LosReport, Predicate, TransferEntry,
    TransferReport,
};

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::{Error, Result};

/// Carried verbatim in every report header: a tail verdict is evidence,
/// not proof.
pub const TRUNCATION_DISCLAIMER: &str = "Verdicts are computed on a finite truncation of the \
index family; HoldsOnTail is evidence for, not a proof of, the corresponding statement over a \
nonprincipal ultrafilter, which no finite computation can certify.";

/// Outcome of evaluating a property on the tail of a truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum Verdict {
    HoldsOnTail,
    FailsOnTail,
    Mixed,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::HoldsOnTail
    }

    /// Complement on the tail: holds and fails swap, mixed stays mixed.
    pub fn complement(self) -> Verdict {
        match self {
            Verdict::HoldsOnTail => Verdict::FailsOnTail,
            Verdict::FailsOnTail => Verdict::HoldsOnTail,
            Verdict::Mixed => Verdict::Mixed,
        }
    }

    /// Conjunction: finitely many tail-holding properties hold jointly.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::HoldsOnTail, Verdict::HoldsOnTail) => Verdict::HoldsOnTail,
            (Verdict::FailsOnTail, _) | (_, Verdict::FailsOnTail) => Verdict::FailsOnTail,
            _ => Verdict::Mixed,
        }
    }
}

/// How tail-largeness is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum FilterMode {
    /// Every tail index must agree.
    Strict,
    /// A fraction of tail indices at least `num/den` must agree.
    Density { num: u32, den: u32 },
}

/// The finite filter model: indices `1..=len` with tail `s >= tail_start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct Truncation {
    len: usize,
    tail_start: usize,
    mode: FilterMode,
}

impl Truncation {
    pub fn new(len: usize, tail_start: usize) -> Result<Truncation> {
        if len == 0 || tail_start == 0 || tail_start > len {
            return Err(Error::PreconditionFailed(
                "truncation requires 1 <= tail_start <= len".into(),
            ));
        }
        Ok(Truncation {
            len,
            tail_start,
            mode: FilterMode::Strict,
        })
    }

    pub fn with_mode(self, mode: FilterMode) -> Result<Truncation> {
        if let FilterMode::Density { num, den } = mode {
            if den == 0 || num > den {
                return Err(Error::PreconditionFailed(
                    "density threshold must be a fraction in [0, 1]".into(),
                ));
            }
        }
        Ok(Truncation { mode, ..self })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tail_start(&self) -> usize {
        self.tail_start
    }

    pub fn mode(&self) -> FilterMode {
        self.mode
    }

    /// 1-based indices.
    pub fn indices(&self) -> impl Iterator<Item = usize> {
        1..=self.len
    }

    pub fn tail(&self) -> impl Iterator<Item = usize> {
        self.tail_start..=self.len
    }

    pub fn tail_len(&self) -> usize {
        self.len - self.tail_start + 1
    }

    /// Verdict for per-index booleans (`values[s-1]` is index `s`).
    pub fn verdict(&self, values: &[bool]) -> Result<Verdict> {
        if values.len() != self.len {
            return Err(Error::PreconditionFailed(
                "verdict input length differs from truncation".into(),
            ));
        }
        let tail: Vec<bool> = self.tail().map(|s| values[s - 1]).collect();
        Ok(self.verdict_of_tail(&tail))
    }

    fn verdict_of_tail(&self, tail: &[bool]) -> Verdict {
        let trues = tail.iter().filter(|&&b| b).count();
        let falses = tail.len() - trues;
        match self.mode {
            FilterMode::Strict => {
                if falses == 0 {
                    Verdict::HoldsOnTail
                } else if trues == 0 {
                    Verdict::FailsOnTail
                } else {
                    Verdict::Mixed
                }
            }
            FilterMode::Density { num, den } => {
                let reaches = |count: usize| count as u64 * den as u64 >= num as u64 * tail.len() as u64;
                if reaches(trues) && trues > 0 || (falses == 0 && !tail.is_empty()) {
                    Verdict::HoldsOnTail
                } else if reaches(falses) {
                    Verdict::FailsOnTail
                } else {
                    Verdict::Mixed
                }
            }
        }
    }

    /// Verdict restricted to tail indices `s >= max(tail_start, from)`;
    /// used by audits whose property only stabilizes from a known index.
    pub fn verdict_from(&self, from: usize, values: &[bool]) -> Result<Verdict> {
        if values.len() != self.len {
            return Err(Error::PreconditionFailed(
                "verdict input length differs from truncation".into(),
            ));
        }
        let start = self.tail_start.max(from);
        if start > self.len {
            return Err(Error::PreconditionFailed(
                "adjusted tail start exceeds the truncation".into(),
            ));
        }
        let tail: Vec<bool> = (start..=self.len).map(|s| values[s - 1]).collect();
        Ok(self.verdict_of_tail(&tail))
    }
}

/// An integer sequence over a truncation; ring operations are
/// componentwise and comparisons are evaluated on the tail.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct Hyperinteger {
    trunc: Truncation,
    vals: Vec<i64>,
}

impl Hyperinteger {
    pub fn new(trunc: Truncation, vals: Vec<i64>) -> Result<Hyperinteger> {
        if vals.len() != trunc.len() {
            return Err(Error::PreconditionFailed(
                "hyperinteger length differs from truncation".into(),
            ));
        }
        Ok(Hyperinteger { trunc, vals })
    }

    pub fn constant(trunc: Truncation, v: i64) -> Hyperinteger {
        Hyperinteger {
            trunc,
            vals: alloc::vec![v; trunc.len()],
        }
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn values(&self) -> &[i64] {
        &self.vals
    }

    fn zip(&self, other: &Hyperinteger, f: impl Fn(i64, i64) -> i64) -> Result<Hyperinteger> {
        if self.trunc != other.trunc {
            return Err(Error::PreconditionFailed(
                "hyperintegers live over different truncations".into(),
            ));
        }
        Ok(Hyperinteger {
            trunc: self.trunc,
            vals: self
                .vals
                .iter()
                .zip(&other.vals)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Hyperinteger) -> Result<Hyperinteger> {
        self.zip(other, |a, b| a.wrapping_add(b))
    }

    pub fn sub(&self, other: &Hyperinteger) -> Result<Hyperinteger> {
        self.zip(other, |a, b| a.wrapping_sub(b))
    }

    pub fn mul(&self, other: &Hyperinteger) -> Result<Hyperinteger> {
        self.zip(other, |a, b| a.wrapping_mul(b))
    }

    /// Componentwise equality on the tail.
    pub fn eq_on_tail(&self, other: &Hyperinteger) -> Result<Verdict> {
        if self.trunc != other.trunc {
            return Err(Error::PreconditionFailed(
                "hyperintegers live over different truncations".into(),
            ));
        }
        let values: Vec<bool> = self
            .vals
            .iter()
            .zip(&other.vals)
            .map(|(&a, &b)| a == b)
            .collect();
        self.trunc.verdict(&values)
    }

    /// Whether a hyperinteger divides this one on the tail, i.e. the
    /// quotient sequence exists componentwise there.
    pub fn divisible_by(&self, other: &Hyperinteger) -> Result<Verdict> {
        if self.trunc != other.trunc {
            return Err(Error::PreconditionFailed(
                "hyperintegers live over different truncations".into(),
            ));
        }
        let values: Vec<bool> = self
            .vals
            .iter()
            .zip(&other.vals)
            .map(|(&a, &b)| b != 0 && a % b == 0)
            .collect();
        self.trunc.verdict(&values)
    }

    /// The set of integers `1..=max` dividing this hyperinteger (verdict
    /// `HoldsOnTail`).
    pub fn divisor_set(&self, max: i64) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        for m in 1..=max {
            if hyper_divides(m, self)?.holds() {
                out.push(m);
            }
        }
        Ok(out)
    }
}

/// Whether the integer `m >= 1` divides a hyperinteger: componentwise
/// divisibility on the tail.
pub fn hyper_divides(m: i64, h: &Hyperinteger) -> Result<Verdict> {
    if m < 1 {
        return Err(Error::PreconditionFailed("divisor must be >= 1".into()));
    }
    let values: Vec<bool> = h.vals.iter().map(|&v| v % m == 0).collect();
    h.trunc.verdict(&values)
}

/// Outcome of locating a tail-large part inside a finite cover.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct UnionMemberOutcome {
    /// `HoldsOnTail` when the chosen part is tail-large under the
    /// truncation's mode; `Mixed` when no part qualifies (a finite
    /// truncation artifact, reported rather than fatal).
    pub verdict: Verdict,
    /// 1-based index of the chosen part: the one of largest tail
    /// density, ties to the smallest index.
    pub chosen: usize,
    /// Tail density of each part as (hits, tail length).
    pub densities: Vec<(usize, usize)>,
}

/// Given a tail-large set `A` covered by finitely many parts, find a
/// part that is itself tail-large. On a finite truncation the cover may
/// split the tail evenly, in which case the verdict is `Mixed` and the
/// densest part is still reported.
pub fn union_member_lemma(
    trunc: &Truncation,
    covered: &[usize],
    parts: &[Vec<usize>],
) -> Result<UnionMemberOutcome> {
    if parts.is_empty() {
        return Err(Error::PreconditionFailed("empty cover".into()));
    }
    for s in covered {
        if *s < 1 || *s > trunc.len() {
            return Err(Error::PreconditionFailed("index outside truncation".into()));
        }
        if !parts.iter().any(|p| p.contains(s)) {
            return Err(Error::PreconditionFailed(
                "parts do not cover the given set".into(),
            ));
        }
    }
    // A must be tail-large.
    let member: Vec<bool> = trunc.indices().map(|s| covered.contains(&s)).collect();
    if !trunc.verdict(&member)?.holds() {
        return Err(Error::PreconditionFailed("the covered set is not tail-large".into()));
    }
    let tail_len = trunc.tail_len();
    let mut densities = Vec::with_capacity(parts.len());
    for part in parts {
        let hits = trunc.tail().filter(|s| part.contains(s)).count();
        densities.push((hits, tail_len));
    }
    let mut best = 0usize;
    for (i, d) in densities.iter().enumerate() {
        if d.0 > densities[best].0 {
            best = i;
        }
    }
    let qualifies = match trunc.mode() {
        FilterMode::Strict => densities[best].0 == tail_len,
        FilterMode::Density { num, den } => {
            densities[best].0 as u64 * den as u64 >= num as u64 * tail_len as u64
        }
    };
    Ok(UnionMemberOutcome {
        verdict: if qualifies {
            Verdict::HoldsOnTail
        } else {
            Verdict::Mixed
        },
        chosen: best + 1,
        densities,
    })
}
