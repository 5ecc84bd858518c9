//! Shadow families: per-index presentations `H_s = F_s(t)[x]/(P_s)` of a
//! finite separable extension of the diagonal function field, with
//! irreducibility certificates and Galois descriptors where available.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::bivar::{certify_irreducible, BivarPoly};
use crate::carlitz::unit_group;
use crate::poly::Poly;
use crate::ultra::family::{FamilyKind, UltraPolyFamily};
use crate::ultra::{Truncation, Verdict, TRUNCATION_DISCLAIMER};
use crate::{Error, Result};

/// Shape of a finite abelian Galois group as far as the audits compare
/// it: order and cyclic/abelian flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct GroupDescriptor {
    pub order: u64,
    pub cyclic: bool,
    pub abelian: bool,
}

impl GroupDescriptor {
    pub fn cyclic(order: u64) -> GroupDescriptor {
        GroupDescriptor {
            order,
            cyclic: true,
            abelian: true,
        }
    }
}

/// How a shadow presentation was recognized.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum ShadowKind {
    /// `x^n - radicand` with `n | q_s - 1`: tame Kummer, cyclic of
    /// order `n`.
    PureKummer { n: u64, radicand: String },
    /// A Carlitz torsion presentation `ψ_(P^h)`; the group is the unit
    /// group mod `P^h`.
    Cyclotomic { modulus: String },
    /// No recognized structure: splitting data and Galois descriptors
    /// are unavailable.
    Generic,
}

/// One index of a shadow family.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ShadowIndex {
    pub index: usize,
    pub q: u64,
    pub minpoly: String,
    /// Certificate outcome: `Some(true)` irreducible, `Some(false)`
    /// reducible, `None` uncertified.
    pub irreducible: Option<bool>,
    pub degree: Option<usize>,
    /// Whether this index carries the tail property (irreducible of the
    /// shared degree).
    pub in_tail_property: bool,
    pub galois: Option<GroupDescriptor>,
    pub kind: ShadowKind,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub presentation: BivarPoly,
    #[cfg_attr(feature = "serde", serde(skip))]
    pub radicand_poly: Option<Poly>,
}

/// Per-index shadows `F_s(t)[x]/(P_s)` with a shared degree on the tail
/// (or an explicitly varying profile for per-index tables).
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ShadowFamily {
    pub trunc: Truncation,
    /// Shared x-degree on the tail; `None` when a per-index table has
    /// varying degrees (such a family does not present a single finite
    /// extension of the diagonal field, and audits degrade gracefully).
    pub degree: Option<usize>,
    pub per_index: Vec<ShadowIndex>,
    pub disclaimer: &'static str,
}

/// Build a shadow family from a polynomial family in `A[x]`.
///
/// Tail indices must be certifiably irreducible — a certified
/// factorization on the tail means no shadow exists ([`Error::NoShadow`]),
/// and an uncertifiable tail index is a precondition failure. Indices
/// before the tail are recorded with whatever the certificates say.
pub fn shadow_build(fam: &UltraPolyFamily, cap: u64) -> Result<ShadowFamily> {
    let polys = match fam.kind() {
        FamilyKind::Biv(ps) => ps,
        FamilyKind::Uni(_) => {
            return Err(Error::PreconditionFailed(
                "shadows are presented by polynomials in A[x]".into(),
            ))
        }
    };
    let trunc = *fam.truncation();
    let mut per_index = Vec::with_capacity(polys.len());
    for (s, p) in polys.iter().enumerate() {
        let index = s + 1;
        let field = &fam.fields()[s];
        let q = field.order() as u64;
        let (outcome, _) = certify_irreducible(p, s as u64)?;
        let irreducible = outcome.verdict();
        if index >= trunc.tail_start() {
            match irreducible {
                Some(true) => {}
                Some(false) => return Err(Error::NoShadow),
                None => {
                    return Err(Error::PreconditionFailed(alloc::format!(
                        "irreducibility uncertifiable at tail index {index}"
                    )))
                }
            }
        }
        let (kind, galois, radicand_poly) = recognize(p, q, cap)?;
        per_index.push(ShadowIndex {
            index,
            q,
            minpoly: alloc::format!("{p}"),
            irreducible,
            degree: p.xdeg(),
            in_tail_property: false,
            galois,
            kind,
            presentation: p.clone(),
            radicand_poly,
        });
    }
    // Shared degree on the tail, when there is one.
    let mut tail_degrees = trunc.tail().map(|s| per_index[s - 1].degree);
    let first = tail_degrees.next().unwrap_or(None);
    let degree = if tail_degrees.all(|d| d == first) {
        first
    } else {
        None
    };
    for e in per_index.iter_mut() {
        e.in_tail_property = e.irreducible == Some(true) && degree.is_some() && e.degree == degree;
    }
    Ok(ShadowFamily {
        trunc,
        degree,
        per_index,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}

/// Recognize the presentation: pure `x^n - c` Kummer data (Galois and
/// cyclic of order `n` exactly when `n | q - 1`), or a cyclotomic
/// torsion polynomial `ψ_(P^h)` (matched by reconstruction), otherwise
/// generic.
fn recognize(
    p: &BivarPoly,
    q: u64,
    cap: u64,
) -> Result<(ShadowKind, Option<GroupDescriptor>, Option<Poly>)> {
    let n = match p.xdeg() {
        Some(n) if n >= 1 => n,
        _ => return Ok((ShadowKind::Generic, None, None)),
    };
    let pure = p.is_monic_x() && (1..n).all(|i| p.coeff_x(i).is_zero()) && !p.coeff_x(0).is_zero();
    if pure {
        let radicand = p.coeff_x(0).neg();
        let galois = if (q - 1) % n as u64 == 0 {
            Some(GroupDescriptor::cyclic(n as u64))
        } else {
            None
        };
        return Ok((
            ShadowKind::PureKummer {
                n: n as u64,
                radicand: alloc::format!("{radicand}"),
            },
            galois,
            Some(radicand),
        ));
    }
    // Cyclotomic recognition: ψ_(P^h) for P^h recoverable from the
    // constant coefficient, which is ε·P up to the unit structure; try
    // the primes dividing the constant coefficient.
    if p.is_monic_x() {
        if let Ok((_, factors)) = p.coeff_x(0).factor(0) {
            for (prime, _) in &factors {
                for h in 1..=8u32 {
                    let phi = phi_of(prime, h, q);
                    match phi {
                        Some(phi) if phi == n as u64 => {
                            if let Ok(psi) = crate::carlitz::cyclo_poly(prime, h) {
                                if psi == *p {
                                    let mut modulus = Poly::one(prime.field());
                                    for _ in 0..h {
                                        modulus = modulus.mul(prime)?;
                                    }
                                    let descriptor = match unit_group(&modulus, cap) {
                                        Ok(g) => Some(GroupDescriptor {
                                            order: g.order(),
                                            cyclic: g.is_cyclic(),
                                            abelian: true,
                                        }),
                                        Err(Error::TooLarge) => Some(GroupDescriptor {
                                            order: n as u64,
                                            cyclic: h == 1,
                                            abelian: true,
                                        }),
                                        Err(e) => return Err(e),
                                    };
                                    return Ok((
                                        ShadowKind::Cyclotomic {
                                            modulus: alloc::format!("{modulus}"),
                                        },
                                        descriptor,
                                        Some(modulus),
                                    ));
                                }
                            }
                        }
                        Some(phi) if phi > n as u64 => break,
                        _ => {}
                    }
                }
            }
        }
    }
    Ok((ShadowKind::Generic, None, None))
}

fn phi_of(prime: &Poly, h: u32, q: u64) -> Option<u64> {
    let d = prime.deg()? as u32;
    let qd = q.checked_pow(d)?;
    qd.checked_pow(h.checked_sub(1)?)?.checked_mul(qd - 1)
}

/// Outcome of auditing a shadow family against an expected group.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct ShadowAudit {
    pub expected: GroupDescriptor,
    /// Per-index descriptor (or `None` when unavailable) and whether it
    /// matches the expectation.
    pub per_index: Vec<(usize, Option<GroupDescriptor>, Option<bool>)>,
    pub verdict: Verdict,
    pub disclaimer: &'static str,
}

/// Compare per-index Galois descriptors against an expected group on
/// the tail, optionally starting the tail later (for properties that
/// only stabilize from a known index).
pub fn shadow_galois_audit(
    shadows: &ShadowFamily,
    expected: &GroupDescriptor,
    tail_from: usize,
) -> Result<ShadowAudit> {
    let mut per_index = Vec::with_capacity(shadows.per_index.len());
    for e in &shadows.per_index {
        let matches = e.galois.map(|g| {
            g.order == expected.order && g.cyclic == expected.cyclic && g.abelian == expected.abelian
        });
        per_index.push((e.index, e.galois, matches));
    }
    let start = shadows.trunc.tail_start().max(tail_from);
    let verdict = if (start..=shadows.trunc.len()).any(|s| per_index[s - 1].2.is_none()) {
        Verdict::Mixed
    } else {
        let values: Vec<bool> = per_index
            .iter()
            .map(|(_, _, m)| m.unwrap_or(false))
            .collect();
        shadows.trunc.verdict_from(tail_from, &values)?
    };
    Ok(ShadowAudit {
        expected: *expected,
        per_index,
        verdict,
        disclaimer: TRUNCATION_DISCLAIMER,
    })
}
