//! First-order transfer checks: evaluate a named predicate at every
//! index of a polynomial family and aggregate the tail verdict. A
//! `HoldsOnTail` verdict is the desk-scale proxy for the ultraproduct
//! satisfying the predicate.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::bivar::{certify_irreducible, verify_factor_bound, FactorBoundReport, IrreducibilityOutcome};
use crate::ultra::family::{FamilyKind, UltraPolyFamily};
use crate::ultra::{Truncation, Verdict, TRUNCATION_DISCLAIMER};
use crate::{Error, Result};

/// The named first-order predicates supported by [`los_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum Predicate {
    IsIrreducible,
    HasRootInBase,
    DegreeEquals(usize),
    IsSeparable,
    IsPrimitive,
}

impl Predicate {
    pub fn parse(name: &str) -> Result<Predicate> {
        if let Some(rest) = name.strip_prefix("degree_equals(") {
            let inner = rest.strip_suffix(')').ok_or(Error::UnknownPredicate)?;
            let d: usize = inner.parse().map_err(|_| Error::UnknownPredicate)?;
            return Ok(Predicate::DegreeEquals(d));
        }
        match name {
            "is_irreducible" => Ok(Predicate::IsIrreducible),
            "has_root_in_base" => Ok(Predicate::HasRootInBase),
            "is_separable" => Ok(Predicate::IsSeparable),
            "is_primitive" => Ok(Predicate::IsPrimitive),
            _ => Err(Error::UnknownPredicate),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Predicate::IsIrreducible => "is_irreducible".into(),
            Predicate::HasRootInBase => "has_root_in_base".into(),
            Predicate::DegreeEquals(d) => alloc::format!("degree_equals({d})"),
            Predicate::IsSeparable => "is_separable".into(),
            Predicate::IsPrimitive => "is_primitive".into(),
        }
    }
}

/// One row of a [`LosReport`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct LosEntry {
    pub index: usize,
    pub q: u64,
    pub poly: String,
    /// `None` when no supported certificate decides the predicate at
    /// this index.
    pub value: Option<bool>,
}

/// Per-index table plus tail verdict for a predicate.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct LosReport {
    pub predicate: String,
    pub per_index: Vec<LosEntry>,
    pub verdict: Verdict,
    pub disclaimer: &'static str,
}

/// Evaluate the predicate at every index. Undecidable entries (only
/// possible for bivariate irreducibility without a certificate) are
/// reported as `None` and force a `Mixed` verdict when they land on the
/// tail.
pub fn los_check(predicate: Predicate, fam: &UltraPolyFamily) -> Result<LosReport> {
    let mut per_index = Vec::new();
    match fam.kind() {
        FamilyKind::Uni(polys) => {
            for (s, p) in polys.iter().enumerate() {
                let value = match predicate {
                    Predicate::IsIrreducible => {
                        Some(p.deg().map_or(false, |d| d >= 1) && p.is_irreducible().unwrap_or(false))
                    }
                    Predicate::HasRootInBase => Some(!p.is_zero() && !p.roots()?.is_empty()),
                    Predicate::DegreeEquals(d) => Some(p.deg() == Some(d)),
                    Predicate::IsSeparable => Some(match p.deg() {
                        Some(d) if d >= 1 => {
                            let deriv = p.derivative();
                            !deriv.is_zero() && p.gcd(&deriv)?.is_constant()
                        }
                        _ => false,
                    }),
                    // Univariate polynomials over a field always have unit
                    // content.
                    Predicate::IsPrimitive => Some(!p.is_zero()),
                };
                per_index.push(LosEntry {
                    index: s + 1,
                    q: fam.fields()[s].order() as u64,
                    poly: alloc::format!("{p}"),
                    value,
                });
            }
        }
        FamilyKind::Biv(polys) => {
            for (s, p) in polys.iter().enumerate() {
                let value = match predicate {
                    Predicate::IsIrreducible => match certify_irreducible(p, 0) {
                        Ok((outcome, _)) => outcome.verdict(),
                        Err(Error::NotPrimitive) => Some(false),
                        Err(e) => return Err(e),
                    },
                    Predicate::HasRootInBase => match certify_irreducible(p, 0) {
                        Ok((IrreducibilityOutcome::Reducible { .. }, Some((fa, _))))
                            if fa.xdeg() == Some(1) =>
                        {
                            Some(true)
                        }
                        Ok((outcome, _)) => match outcome.verdict() {
                            Some(true) => Some(p.xdeg() == Some(1)),
                            _ => None,
                        },
                        Err(_) => None,
                    },
                    Predicate::DegreeEquals(d) => Some(p.xdeg() == Some(d)),
                    Predicate::IsSeparable => Some(p.is_separable_x().unwrap_or(false)),
                    Predicate::IsPrimitive => Some(p.primitive_check()?.0),
                };
                per_index.push(LosEntry {
                    index: s + 1,
                    q: fam.fields()[s].order() as u64,
                    poly: alloc::format!("{p}"),
                    value,
                });
            }
        }
    }
    let verdict = verdict_with_unknowns(fam.truncation(), &per_index)?;
    Ok(LosReport {
        predicate: predicate.name(),
        per_index,
        verdict,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

fn verdict_with_unknowns(trunc: &Truncation, entries: &[LosEntry]) -> Result<Verdict> {
    if trunc.tail().any(|s| entries[s - 1].value.is_none()) {
        return Ok(Verdict::Mixed);
    }
    let values: Vec<bool> = entries.iter().map(|e| e.value.unwrap_or(false)).collect();
    trunc.verdict(&values)
}

/// One row of an irreducibility transfer report.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct TransferEntry {
    pub index: usize,
    pub q: u64,
    pub poly: String,
    /// `Some(true)` certified irreducible, `Some(false)` an explicit
    /// factorization was found, `None` uncertifiable.
    pub irreducible: Option<bool>,
    pub certificate: String,
    /// When a factorization was found, the coefficient-degree audit of
    /// that factorization.
    pub bound_audit: Option<FactorBoundReport>,
}

/// Per-index irreducibility verdicts over `F_(q_s)(t)` with supported
/// certificates, coefficient-bound audits for any factorization found,
/// and the tail verdict.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct TransferReport {
    pub per_index: Vec<TransferEntry>,
    pub verdict: Verdict,
    pub disclaimer: &'static str,
}

/// Run the certificate stack on an integer-specified polynomial in
/// `A[x]` at every index. Primitivity is checked per index first.
pub fn irreducibility_transfer_report(fam: &UltraPolyFamily) -> Result<TransferReport> {
    let polys = match fam.kind() {
        FamilyKind::Biv(ps) => ps,
        FamilyKind::Uni(_) => {
            return Err(Error::PreconditionFailed(
                "transfer report expects a family in A[x]".into(),
            ))
        }
    };
    let mut per_index = Vec::new();
    for (s, p) in polys.iter().enumerate() {
        let (primitive, content) = p.primitive_check()?;
        if !primitive {
            return Err(Error::PreconditionFailed(alloc::format!(
                "family member at index {} has content {content}",
                s + 1
            )));
        }
        let (outcome, witness) = certify_irreducible(p, s as u64)?;
        let bound_audit = match (&outcome, &witness) {
            (IrreducibilityOutcome::Reducible { .. }, Some((fa, fb))) => {
                Some(verify_factor_bound(p, fa, fb)?)
            }
            _ => None,
        };
        let certificate = match &outcome {
            IrreducibilityOutcome::IrreducibleLinear => "linear".into(),
            IrreducibilityOutcome::IrreducibleEisenstein { at } => {
                alloc::format!("eisenstein at {at}")
            }
            IrreducibilityOutcome::IrreducibleNoRationalRoot => "no rational root".into(),
            IrreducibilityOutcome::Reducible { factor_a, factor_b } => {
                alloc::format!("explicit factors ({factor_a})({factor_b})")
            }
            IrreducibilityOutcome::Unknown => "none applicable".into(),
        };
        per_index.push(TransferEntry {
            index: s + 1,
            q: fam.fields()[s].order() as u64,
            poly: alloc::format!("{p}"),
            irreducible: outcome.verdict(),
            certificate,
            bound_audit,
        });
    }
    let trunc = fam.truncation();
    let verdict = if trunc.tail().any(|s| per_index[s - 1].irreducible.is_none()) {
        Verdict::Mixed
    } else {
        let values: Vec<bool> = per_index
            .iter()
            .map(|e| e.irreducible.unwrap_or(false))
            .collect();
        trunc.verdict(&values)?
    };
    Ok(TransferReport {
        per_index,
        verdict,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}
