//! Worked example families and correspondence audits: the factorial
//! prime family, the compatible tower of cyclic Kummer subfields, the
//! prime-degree extension family with trivial algebraic part, the
//! ramification correspondence between shadows and the diagonal
//! extension, and the abelian-tower degree report.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::arith::{factorial, gcd_u64, smallest_prime_one_mod};
use crate::carlitz::{epsilon_sign, infinity_twist_rn_degree, kummer_witness, unit_group, KummerWitnessReport};
use crate::poly::Poly;
use crate::splitting::{kummer_splitting, split_in_cyclotomic, PrimeOfA, SplittingData};
use crate::ultra::family::{UltraFieldFamily, UltraPolyFamily};
use crate::ultra::shadows::{shadow_build, shadow_galois_audit, GroupDescriptor, ShadowFamily, ShadowKind};
use crate::ultra::{union_member_lemma, Hyperinteger, Verdict, TRUNCATION_DISCLAIMER};
use crate::{Error, Result};

/// The factorial prime family with its divisibility invariant checks.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct DirichletReport {
    /// `(s, s!, p_s, r_s)` with `p_s = s!·r_s + 1` the smallest such prime.
    pub entries: Vec<(usize, u64, u64, u64)>,
    /// For each `n <= len`: verdict of `n | q_s - 1` on the tail
    /// `s >= max(tail_start, n)`.
    pub divisibility: Vec<(usize, Verdict)>,
    pub disclaimer: &'static str,
}

pub fn dirichlet_report(len: usize, tail_start: usize) -> Result<DirichletReport> {
    let fam = super::family::dirichlet_family(len, tail_start)?;
    let trunc = *fam.truncation();
    let mut entries = Vec::with_capacity(len);
    for s in 1..=len {
        let fact = factorial(s as u64);
        let p = smallest_prime_one_mod(fact);
        entries.push((s, fact, p, (p - 1) / fact));
    }
    let mut divisibility = Vec::new();
    for n in 1..=len {
        let values: Vec<bool> = entries.iter().map(|(_, _, p, _)| (p - 1) % n as u64 == 0).collect();
        divisibility.push((n, trunc.verdict_from(n, &values)?));
    }
    Ok(DirichletReport {
        entries,
        divisibility,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

/// Per-index row of an [`ArtinSchreierReport`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ArtinSchreierIndex {
    pub index: usize,
    pub characteristic: u64,
    /// The defining equation `x^p - x - a_s` rendered per index.
    pub equation: String,
    pub separable: bool,
}

/// Outcome of the prime-degree extension family audit: when the
/// characteristics are pairwise distinct on the tail, the only integer
/// dividing the hyperinteger `(p_s)` is 1, so the algebraic part of the
/// family over the diagonal field is trivial.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ArtinSchreierReport {
    pub per_index: Vec<ArtinSchreierIndex>,
    pub characteristics_distinct_on_tail: bool,
    /// Integers `m <= len` dividing the hyperinteger `(p_s)` on the tail.
    pub divisor_set: Vec<i64>,
    pub conclusion_drawn: bool,
    pub conclusion: String,
    pub reasoning: Vec<String>,
    pub disclaimer: &'static str,
}

/// Build per-index degree-`p_s` extensions `x^(p_s) - x = a_s` and audit
/// the divisor set of the degree hyperinteger. The degenerate control
/// case (repeated characteristic) is reported with the conclusion
/// explicitly not drawn rather than erroring.
pub fn artin_schreier_demo(fam: &UltraFieldFamily, a_coeffs: &[i64]) -> Result<ArtinSchreierReport> {
    let fields = fam.fields()?;
    let trunc = fam.truncation();
    let mut per_index = Vec::with_capacity(fields.len());
    let mut chars = Vec::with_capacity(fields.len());
    for (s, field) in fields.iter().enumerate() {
        let p = field.characteristic();
        chars.push(p as i64);
        let a = Poly::from_ivalues(field, a_coeffs);
        // x^p - x - a has derivative -1, so it is separable always.
        per_index.push(ArtinSchreierIndex {
            index: s + 1,
            characteristic: p,
            equation: alloc::format!("x^{p} - x - ({a})"),
            separable: true,
        });
    }
    let tail_chars: Vec<i64> = trunc.tail().map(|s| chars[s - 1]).collect();
    let mut sorted = tail_chars.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let distinct = sorted.len() == tail_chars.len();
    let degrees = Hyperinteger::new(*trunc, chars)?;
    let divisor_set = degrees.divisor_set(trunc.len() as i64)?;
    let conclusion_drawn = distinct && divisor_set == alloc::vec![1];
    let conclusion = if conclusion_drawn {
        "algebraic part trivial: the diagonal field admits no proper subextension of the family"
            .into()
    } else {
        "conclusion not drawn: the divisor-set argument needs pairwise distinct characteristics \
         on the tail"
            .into()
    };
    Ok(ArtinSchreierReport {
        per_index,
        characteristics_distinct_on_tail: distinct,
        divisor_set,
        conclusion_drawn,
        conclusion,
        reasoning: alloc::vec![
            "each index carries a cyclic extension of prime degree p_s (the equation x^p - x = a \
             is separable with F_p-stable root set)"
                .into(),
            "any finite subextension of the diagonal field inside the family has a degree that \
             divides p_s at almost every index, i.e. divides the hyperinteger (p_s)"
                .into(),
            "pairwise distinct primes admit no common divisor above 1, so the divisor set of \
             (p_s) is exactly {1}"
                .into(),
            "a degree-1 extension is trivial, so the algebraic part is the diagonal field itself"
                .into(),
        ],
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

/// One witness row of a [`ZhatLevel`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum WitnessOutcome {
    Run(KummerWitnessReport),
    Skipped { reason: String },
}

/// One level `n` of the compatible tower.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ZhatLevel {
    pub n: u64,
    /// Verdict of `n | q_s - 1` on the tail `s >= max(tail_start, n)`.
    pub divisibility: Verdict,
    /// The shadow minimal polynomial `x^n - ε(d)P`.
    pub shadow_minpoly: String,
    /// Galois audit against the cyclic group of order `n`, on the same
    /// adjusted tail.
    pub shadow_audit: Verdict,
    /// Per-index cyclotomic cross-checks where `Φ(P_s)` fits the cap.
    pub witnesses: Vec<(usize, WitnessOutcome)>,
    /// Audit and every executed witness agree on the cyclic degree-n
    /// subfield.
    pub agree: bool,
}

/// The tower report: one compatible cyclic level per `n <= nmax`,
/// presenting the system of finite quotients as evidence for the
/// procyclic limit statement.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ZhatTowerReport {
    pub prime: String,
    pub levels: Vec<ZhatLevel>,
    pub all_levels_hold: bool,
    pub disclaimer: &'static str,
}

/// For each `n <= nmax` over the factorial prime family: check the
/// divisibility `n | q_s - 1` on its tail, build the Kummer shadows
/// `x^n - ε(d)P`, audit them against the cyclic group of order `n`, and
/// cross-check against the cyclotomic resolvent witness at indices
/// whose `Φ(P_s) = q_s^d - 1` fits under the cap.
pub fn zhat_tower_demo(
    fam: &UltraFieldFamily,
    p_coeffs: &[i64],
    nmax: u64,
    cap: u64,
) -> Result<ZhatTowerReport> {
    let fields = fam.fields()?;
    let trunc = fam.truncation();
    if nmax as usize > trunc.len() {
        return Err(Error::PreconditionFailed(
            "nmax exceeds the truncation length".into(),
        ));
    }
    let d = p_coeffs
        .iter()
        .rposition(|&c| c != 0)
        .ok_or(Error::ZeroInput)?;
    let eps = epsilon_sign(d);
    let mut levels = Vec::new();
    for n in 1..=nmax {
        // n | q_s - 1 on the tail s >= n.
        let div_values: Vec<bool> = fields
            .iter()
            .map(|f| (f.order() - 1) % n as u128 == 0)
            .collect();
        let divisibility = trunc.verdict_from(n as usize, &div_values)?;
        // Shadow minpoly x^n - ε(d)·P as an integer specification.
        let mut coeffs: Vec<Vec<i64>> = alloc::vec![Vec::new(); n as usize + 1];
        coeffs[0] = p_coeffs.iter().map(|&c| -eps * c).collect();
        coeffs[n as usize] = alloc::vec![1];
        let family = UltraPolyFamily::lift_int_bivar(fam, &coeffs)?;
        let shadows = shadow_build(&family, cap)?;
        let shadow_minpoly = shadows.per_index[0].minpoly.clone();
        let audit = shadow_galois_audit(&shadows, &GroupDescriptor::cyclic(n), n as usize)?;
        // Cross-checks on the adjusted tail.
        let mut witnesses = Vec::new();
        let mut witnesses_agree = true;
        for s in trunc.tail() {
            if s < n as usize {
                continue;
            }
            let field = &fields[s - 1];
            let phi = field.order().checked_pow(d as u32).map(|x| x - 1);
            match phi {
                Some(phi) if phi <= cap as u128 => {
                    let p_s = Poly::from_ivalues(field, p_coeffs);
                    let report = kummer_witness(&p_s, n, cap)?;
                    witnesses_agree &= report.ratio_in_units;
                    witnesses.push((s, WitnessOutcome::Run(report)));
                }
                _ => {
                    witnesses.push((
                        s,
                        WitnessOutcome::Skipped {
                            reason: alloc::format!(
                                "unit group order q^{d} - 1 exceeds the cap {cap}"
                            ),
                        },
                    ));
                }
            }
        }
        let agree = audit.verdict.holds() && witnesses_agree;
        levels.push(ZhatLevel {
            n,
            divisibility,
            shadow_minpoly,
            shadow_audit: audit.verdict,
            witnesses,
            agree,
        });
    }
    let all = levels
        .iter()
        .all(|l| l.divisibility.holds() && l.shadow_audit.holds() && l.agree);
    Ok(ZhatTowerReport {
        prime: alloc::format!("{:?}", p_coeffs),
        levels,
        all_levels_hold: all,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

/// Which transfer statement a stabilized splitting pattern licenses,
/// and in which direction the implication runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum TransferRule {
    /// Unramified transfers in both directions.
    UnramifiedTwoSided,
    /// Ramified transfers in both directions.
    RamifiedTwoSided,
    /// Totally split transfers in both directions.
    TotallySplitTwoSided,
    /// Totally ramified transfers from the componentwise side to the
    /// diagonal side.
    TotallyRamifiedComponentwiseToDiagonal,
    /// Inertness transfers only from the diagonal side to the
    /// componentwise side, so an inert tail licenses no diagonal
    /// inertness conclusion.
    InertDiagonalToComponentwiseOnly,
}

impl TransferRule {
    pub fn describe(&self) -> &'static str {
        match self {
            TransferRule::UnramifiedTwoSided => {
                "componentwise unramified on the tail <=> unramified in the diagonal extension"
            }
            TransferRule::RamifiedTwoSided => {
                "componentwise ramified on the tail <=> ramified in the diagonal extension"
            }
            TransferRule::TotallySplitTwoSided => {
                "componentwise totally split on the tail <=> totally split in the diagonal extension"
            }
            TransferRule::TotallyRamifiedComponentwiseToDiagonal => {
                "componentwise totally ramified on the tail => totally ramified in the diagonal \
                 extension (componentwise-to-diagonal direction)"
            }
            TransferRule::InertDiagonalToComponentwiseOnly => {
                "inert in the diagonal extension => componentwise inert on the tail; the \
                 converse is not licensed, so no diagonal inertness is concluded"
            }
        }
    }
}

/// A licensed diagonal-side conclusion.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct TransferConclusion {
    pub statement: String,
    pub rule: TransferRule,
    pub direction_used: String,
}

/// Per-index splitting data for a prime in a shadow family, the
/// stabilized tail triple, and the licensed diagonal conclusions.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct RamificationReport {
    pub prime: String,
    pub per_index: Vec<(usize, Option<SplittingData>)>,
    /// The tail-stabilized `(e, f, g)` triple, when one part of the
    /// cover by observed triples is tail-large.
    pub stabilized: Option<SplittingData>,
    pub stabilization_verdict: Verdict,
    pub classification: String,
    pub conclusions: Vec<TransferConclusion>,
    pub notes: Vec<String>,
    pub disclaimer: &'static str,
}

/// Compute `(e_s, f_s, g_s)` of a prime at every index of a shadow
/// family (tame Kummer or cyclotomic presentations), stabilize the
/// triple over the tail via the finite-cover argument, classify it, and
/// state only the theorem-licensed diagonal conclusions.
pub fn ramification_correspondence(
    sh: &ShadowFamily,
    p_coeffs: &[i64],
    cap: u64,
) -> Result<RamificationReport> {
    let trunc = sh.trunc;
    let mut per_index: Vec<(usize, Option<SplittingData>)> = Vec::new();
    for e in &sh.per_index {
        let field = e.presentation.field().clone();
        let p_s = Poly::from_ivalues(&field, p_coeffs);
        let data = match (&e.kind, PrimeOfA::new(p_s)) {
            (ShadowKind::PureKummer { n, .. }, Ok(prime)) => {
                let radicand = e
                    .radicand_poly
                    .clone()
                    .ok_or_else(|| Error::Internal("pure Kummer shadow lost its radicand".into()))?;
                match kummer_splitting(&prime, *n, &radicand, cap) {
                    Ok(d) => Some(d),
                    Err(Error::WildOrInseparableCase) => None,
                    Err(err) => return Err(err),
                }
            }
            (ShadowKind::Cyclotomic { .. }, Ok(prime)) => {
                let modulus = e
                    .radicand_poly
                    .clone()
                    .ok_or_else(|| Error::Internal("cyclotomic shadow lost its modulus".into()))?;
                match split_in_cyclotomic(&prime, &modulus, cap) {
                    Ok(d) => Some(d),
                    Err(Error::TooLarge) => None,
                    Err(err) => return Err(err),
                }
            }
            (ShadowKind::Generic, _) | (_, Err(_)) => None,
        };
        per_index.push((e.index, data));
    }
    // Stabilization over the tail: cover the computable indices by the
    // distinct observed triples and locate a tail-large part.
    let computable: Vec<usize> = per_index
        .iter()
        .filter_map(|(s, d)| d.map(|_| *s))
        .collect();
    let mut triples: Vec<SplittingData> = Vec::new();
    for (_, d) in &per_index {
        if let Some(d) = d {
            if !triples.contains(d) {
                triples.push(*d);
            }
        }
    }
    let (stabilized, stabilization_verdict) = if triples.is_empty() {
        (None, Verdict::Mixed)
    } else {
        let parts: Vec<Vec<usize>> = triples
            .iter()
            .map(|t| {
                per_index
                    .iter()
                    .filter_map(|(s, d)| (d.as_ref() == Some(t)).then_some(*s))
                    .collect()
            })
            .collect();
        match union_member_lemma(&trunc, &computable, &parts) {
            Ok(outcome) => {
                let chosen = triples[outcome.chosen - 1];
                let stab = outcome.verdict.holds().then_some(chosen);
                (stab, outcome.verdict)
            }
            Err(Error::PreconditionFailed(_)) => (None, Verdict::Mixed),
            Err(e) => return Err(e),
        }
    };
    let (classification, conclusions, notes) = classify(stabilized);
    Ok(RamificationReport {
        prime: render_int_poly(p_coeffs),
        per_index,
        stabilized,
        stabilization_verdict,
        classification,
        conclusions,
        notes,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

fn classify(
    stabilized: Option<SplittingData>,
) -> (String, Vec<TransferConclusion>, Vec<String>) {
    let mut conclusions = Vec::new();
    let mut notes = Vec::new();
    let classification = match stabilized {
        None => {
            notes.push(
                "no single (e, f, g) triple is tail-large; the finite truncation leaves the \
                 transfer undecided"
                    .into(),
            );
            "unstabilized".into()
        }
        Some(d) if d.m == 1 => {
            notes.push("degree-1 shadows: every prime is trivially split".into());
            "trivial extension".into()
        }
        Some(d) if d.is_totally_ramified() => {
            conclusions.push(TransferConclusion {
                statement: "the prime is totally ramified in the diagonal extension".into(),
                rule: TransferRule::TotallyRamifiedComponentwiseToDiagonal,
                direction_used: "componentwise-to-diagonal".into(),
            });
            conclusions.push(TransferConclusion {
                statement: "the prime is ramified in the diagonal extension".into(),
                rule: TransferRule::RamifiedTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            alloc::format!("totally ramified on the tail (e = m = {})", d.m)
        }
        Some(d) if d.is_totally_split() => {
            conclusions.push(TransferConclusion {
                statement: "the prime is totally split in the diagonal extension".into(),
                rule: TransferRule::TotallySplitTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            conclusions.push(TransferConclusion {
                statement: "the prime is unramified in the diagonal extension".into(),
                rule: TransferRule::UnramifiedTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            alloc::format!("totally split on the tail (g = m = {})", d.m)
        }
        Some(d) if d.is_inert() => {
            conclusions.push(TransferConclusion {
                statement: "the prime is unramified in the diagonal extension".into(),
                rule: TransferRule::UnramifiedTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            notes.push(TransferRule::InertDiagonalToComponentwiseOnly.describe().into());
            alloc::format!("inert on the tail (f = m = {})", d.m)
        }
        Some(d) if d.is_unramified() => {
            conclusions.push(TransferConclusion {
                statement: "the prime is unramified in the diagonal extension".into(),
                rule: TransferRule::UnramifiedTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            alloc::format!("unramified on the tail (e = 1, f = {}, g = {})", d.f, d.g)
        }
        Some(d) => {
            conclusions.push(TransferConclusion {
                statement: "the prime is ramified in the diagonal extension".into(),
                rule: TransferRule::RamifiedTwoSided,
                direction_used: "componentwise-to-diagonal (two-sided rule)".into(),
            });
            alloc::format!("partially ramified on the tail (e = {} < m = {})", d.e, d.m)
        }
    };
    (classification, conclusions, notes)
}

fn render_int_poly(coeffs: &[i64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let term = match i {
            0 => alloc::format!("{c}"),
            1 if c == 1 => "t".into(),
            1 => alloc::format!("{c}*t"),
            _ if c == 1 => alloc::format!("t^{i}"),
            _ => alloc::format!("{c}*t^{i}"),
        };
        parts.push(term);
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

/// One ingredient of the abelian tower at one index.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct MaeIngredient {
    pub label: String,
    pub degree: u64,
}

/// Pairwise compositum bookkeeping between two ingredients.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct MaePairNote {
    pub a: String,
    pub b: String,
    pub degree_gcd: u64,
    /// Product of the degrees: the compositum degree for linearly
    /// disjoint ingredients (constants vs. geometric towers, and the
    /// two towers ramified at different places).
    pub compositum_degree: u64,
}

/// The abelian tower at one index: constant-field extensions, the
/// torsion tower at `t`, and the twisted tower at `1/t`.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct MaeIndexReport {
    pub index: usize,
    pub q: u64,
    pub constants: Vec<MaeIngredient>,
    pub torsion_tower: Vec<MaeIngredient>,
    pub twisted_tower: Vec<MaeIngredient>,
    pub pairwise: Vec<MaePairNote>,
    pub skipped: Vec<String>,
}

/// The tower report; at depth 2 the report nests one depth-1 report per
/// outer index.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum MaeReport {
    Depth1 {
        bound: usize,
        per_index: Vec<MaeIndexReport>,
        disclaimer: &'static str,
    },
    Depth2 {
        bound: usize,
        members: Vec<MaeReport>,
        disclaimer: &'static str,
    },
}

/// Enumerate the abelian tower up to degree bound `B` at every index:
/// constant extensions of degree `m <= B`, torsion fields at `t^j` for
/// `j <= B` (degree `Φ(t^j) = q^(j-1)(q-1)`), and twisted layers of
/// degree `q^n` for `n <= B`, with pairwise compositum bookkeeping.
pub fn mae_tower_report(fam: &UltraFieldFamily, bound: usize, cap: u64) -> Result<MaeReport> {
    match fam {
        UltraFieldFamily::Depth2 { families, .. } => {
            let mut members = Vec::with_capacity(families.len());
            for member in families {
                members.push(mae_tower_report(member, bound, cap)?);
            }
            Ok(MaeReport::Depth2 {
                bound,
                members,
                disclaimer: TRUNCATION_DISCLAIMER,
            })
        }
        UltraFieldFamily::Depth1 { fields, .. } => {
            let mut per_index = Vec::with_capacity(fields.len());
            for (s, field) in fields.iter().enumerate() {
                let q = field.order() as u64;
                let mut skipped = Vec::new();
                let mut constants = Vec::new();
                for m in 1..=bound {
                    constants.push(MaeIngredient {
                        label: alloc::format!("constants m={m}"),
                        degree: m as u64,
                    });
                }
                let mut torsion_tower = Vec::new();
                for j in 1..=bound {
                    // Φ(t^j), enumerated under the cap, by formula above it.
                    let phi = if (field.order()).checked_pow(j as u32).map_or(false, |c| c <= 4 * cap as u128)
                    {
                        let mut modulus = Poly::one(field);
                        for _ in 0..j {
                            modulus = modulus.mul(&Poly::var(field))?;
                        }
                        Some(unit_group(&modulus, cap).map(|g| g.order()).unwrap_or(0))
                            .filter(|&v| v > 0)
                    } else {
                        q.checked_pow(j as u32 - 1).and_then(|x| x.checked_mul(q - 1))
                    };
                    match phi {
                        Some(phi) => torsion_tower.push(MaeIngredient {
                            label: alloc::format!("torsion t^{j}"),
                            degree: phi,
                        }),
                        None => skipped.push(alloc::format!(
                            "torsion t^{j}: degree overflows the bookkeeping range"
                        )),
                    }
                }
                let mut twisted_tower = Vec::new();
                for n in 1..=bound {
                    match infinity_twist_rn_degree(field, n as u32, cap) {
                        Ok(deg) => twisted_tower.push(MaeIngredient {
                            label: alloc::format!("twisted layer n={n}"),
                            degree: deg,
                        }),
                        Err(Error::TooLarge) => skipped.push(alloc::format!(
                            "twisted layer n={n}: degree overflows the bookkeeping range"
                        )),
                        Err(e) => return Err(e),
                    }
                }
                let mut pairwise = Vec::new();
                let families = [&constants, &torsion_tower, &twisted_tower];
                for i in 0..families.len() {
                    for j in i + 1..families.len() {
                        if let (Some(a), Some(b)) = (families[i].last(), families[j].last()) {
                            pairwise.push(MaePairNote {
                                a: a.label.clone(),
                                b: b.label.clone(),
                                degree_gcd: gcd_u64(a.degree, b.degree),
                                compositum_degree: a.degree.saturating_mul(b.degree),
                            });
                        }
                    }
                }
                per_index.push(MaeIndexReport {
                    index: s + 1,
                    q,
                    constants,
                    torsion_tower,
                    twisted_tower,
                    pairwise,
                    skipped,
                });
            }
            Ok(MaeReport::Depth1 {
                bound,
                per_index,
                disclaimer: TRUNCATION_DISCLAIMER,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::ultra::Truncation;
    use crate::ultra::family::{constant_family, dirichlet_family, primes_family, UltraPolyFamily};

    #[test]
    fn dirichlet_report_values() {
        let report = dirichlet_report(6, 3).unwrap();
        let ps: Vec<u64> = report.entries.iter().map(|e| e.2).collect();
        assert_eq!(&ps[..4], &[2, 3, 7, 73]);
        assert!(report.divisibility.iter().all(|(_, v)| v.holds()));
    }

    #[test]
    fn artin_schreier_trivial_part() {
        let fam = dirichlet_family(8, 3).unwrap();
        let report = artin_schreier_demo(&fam, &[0, 1]).unwrap();
        assert!(report.characteristics_distinct_on_tail);
        assert_eq!(report.divisor_set, alloc::vec![1]);
        assert!(report.conclusion_drawn);

        // First-primes family: also distinct.
        let fam = primes_family(8, 2).unwrap();
        let report = artin_schreier_demo(&fam, &[0, 1]).unwrap();
        assert_eq!(report.divisor_set, alloc::vec![1]);
        assert!(report.conclusion_drawn);

        // Constant family: divisor set {1, p}; conclusion not drawn.
        let fam = constant_family(3, 6, 2).unwrap();
        let report = artin_schreier_demo(&fam, &[0, 1]).unwrap();
        assert!(!report.characteristics_distinct_on_tail);
        assert_eq!(report.divisor_set, alloc::vec![1, 3]);
        assert!(!report.conclusion_drawn);
    }

    #[test]
    fn zhat_tower_holds() {
        let fam = dirichlet_family(8, 3).unwrap();
        let report = zhat_tower_demo(&fam, &[0, 1], 4, 512).unwrap();
        assert_eq!(report.levels.len(), 4);
        for level in &report.levels {
            assert!(level.divisibility.holds(), "n={}", level.n);
            assert!(level.shadow_audit.holds(), "n={}", level.n);
            assert!(level.agree, "n={}", level.n);
        }
        assert!(report.all_levels_hold);
        // ε(1) = -1: the shadow radicand is -P, so the minpoly reads
        // x^n + t for P = t.
        assert_eq!(report.levels[1].shadow_minpoly, "x^2 + (t)");
        // Some cross-checks actually ran.
        let ran = report
            .levels
            .iter()
            .flat_map(|l| &l.witnesses)
            .filter(|(_, w)| matches!(w, WitnessOutcome::Run(_)))
            .count();
        assert!(ran > 0);
    }

    #[test]
    fn ramification_cases() {
        let fam = dirichlet_family(8, 3).unwrap();
        // x^2 + t shadows: P = t is totally ramified, (2, 1, 1).
        let family = UltraPolyFamily::lift_int_bivar(&fam, &[vec![0, 1], vec![], vec![1]]).unwrap();
        let shadows = shadow_build(&family, 512).unwrap();
        let report = ramification_correspondence(&shadows, &[0, 1], 512).unwrap();
        assert_eq!(
            report.stabilized,
            Some(SplittingData { e: 2, f: 1, g: 1, m: 2 })
        );
        assert!(report.stabilization_verdict.holds());
        assert!(report.classification.starts_with("totally ramified"));
        assert_eq!(
            report.conclusions[0].rule,
            TransferRule::TotallyRamifiedComponentwiseToDiagonal
        );

        // P = t + 1 in the same shadows: e_s = 1 on the tail.
        let report = ramification_correspondence(&shadows, &[1, 1], 512).unwrap();
        let stab = report.stabilized.unwrap();
        assert_eq!(stab.e, 1);
        assert!(report
            .conclusions
            .iter()
            .any(|c| c.rule == TransferRule::UnramifiedTwoSided));

        // Trivial shadows x - t: (1, 1, 1).
        let family = UltraPolyFamily::lift_int_bivar(&fam, &[vec![0, -1], vec![1]]).unwrap();
        let shadows = shadow_build(&family, 512).unwrap();
        let report = ramification_correspondence(&shadows, &[0, 1], 512).unwrap();
        assert_eq!(
            report.stabilized,
            Some(SplittingData { e: 1, f: 1, g: 1, m: 1 })
        );
    }

    #[test]
    fn stabilized_triple_satisfies_group_law() {
        let fam = dirichlet_family(10, 3).unwrap();
        for coeffs in [vec![vec![0i64, 1], vec![], vec![1]], vec![vec![0, -1], vec![], vec![], vec![1]]] {
            let family = UltraPolyFamily::lift_int_bivar(&fam, &coeffs).unwrap();
            let shadows = shadow_build(&family, 512).unwrap();
            for p in [vec![0i64, 1], vec![1, 1], vec![2, 1]] {
                let report = ramification_correspondence(&shadows, &p, 512).unwrap();
                if let Some(d) = report.stabilized {
                    assert_eq!(d.e * d.f * d.g, d.m);
                }
            }
        }
    }

    #[test]
    fn mae_constant_family() {
        let fam = constant_family(3, 2, 1).unwrap();
        let report = mae_tower_report(&fam, 2, 512).unwrap();
        let per_index = match &report {
            MaeReport::Depth1 { per_index, .. } => per_index,
            _ => unreachable!(),
        };
        let first = &per_index[0];
        assert_eq!(first.torsion_tower[0].degree, 2); // Φ(t) = 2
        assert_eq!(first.torsion_tower[1].degree, 6); // Φ(t^2) = 6
        assert_eq!(first.twisted_tower[0].degree, 3); // q^1
        assert_eq!(first.constants[1].degree, 2);

        // B = 0: empty tower, trivially valid.
        let report = mae_tower_report(&fam, 0, 512).unwrap();
        let per_index = match &report {
            MaeReport::Depth1 { per_index, .. } => per_index,
            _ => unreachable!(),
        };
        assert!(per_index[0].torsion_tower.is_empty());
        assert!(per_index[0].skipped.is_empty());
    }

    #[test]
    fn mae_dirichlet_and_nested() {
        let fam = dirichlet_family(5, 2).unwrap();
        let report = mae_tower_report(&fam, 1, 512).unwrap();
        let per_index = match &report {
            MaeReport::Depth1 { per_index, .. } => per_index,
            _ => unreachable!(),
        };
        for e in per_index {
            assert_eq!(e.torsion_tower[0].degree, e.q - 1);
        }

        // Depth 2 nests per-index reports.
        let inner = constant_family(2, 2, 1).unwrap();
        let tr = Truncation::new(2, 1).unwrap();
        let nested =
            UltraFieldFamily::depth2(tr, alloc::vec![inner.clone(), inner]).unwrap();
        let report = mae_tower_report(&nested, 1, 512).unwrap();
        match report {
            MaeReport::Depth2 { members, .. } => assert_eq!(members.len(), 2),
            _ => panic!("expected nested report"),
        }
    }
}
