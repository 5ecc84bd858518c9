//! Ultra-field and ultra-polynomial families over a truncation: the
//! per-index data that the transfer checks run on.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::arith::{factorial, smallest_prime_one_mod};
use crate::bivar::BivarPoly;
use crate::gf::{field_of_order, Field, FieldElement};
use crate::poly::Poly;
use crate::ultra::{Hyperinteger, Truncation, Verdict};
use crate::{Error, Result};

/// A family of finite fields per index (depth 1), or a family of depth-1
/// families over a second truncation (depth 2). Deeper nesting is
/// rejected: the induction is structurally identical at every level, so
/// two levels demonstrate the mechanism.
#[derive(Clone, Debug)]
pub enum UltraFieldFamily {
    Depth1 {
        trunc: Truncation,
        fields: Vec<Field>,
    },
    Depth2 {
        trunc: Truncation,
        families: Vec<UltraFieldFamily>,
    },
}

impl UltraFieldFamily {
    pub fn depth1(trunc: Truncation, fields: Vec<Field>) -> Result<UltraFieldFamily> {
        if fields.len() != trunc.len() {
            return Err(Error::PreconditionFailed(
                "field count differs from truncation".into(),
            ));
        }
        Ok(UltraFieldFamily::Depth1 { trunc, fields })
    }

    /// Second-level family: every member must itself be depth 1.
    pub fn depth2(trunc: Truncation, families: Vec<UltraFieldFamily>) -> Result<UltraFieldFamily> {
        if families.len() != trunc.len() {
            return Err(Error::PreconditionFailed(
                "member count differs from truncation".into(),
            ));
        }
        if families.iter().any(|f| f.depth() != 1) {
            return Err(Error::NestingTooDeep);
        }
        Ok(UltraFieldFamily::Depth2 { trunc, families })
    }

    pub fn depth(&self) -> u8 {
        match self {
            UltraFieldFamily::Depth1 { .. } => 1,
            UltraFieldFamily::Depth2 { .. } => 2,
        }
    }

    pub fn truncation(&self) -> &Truncation {
        match self {
            UltraFieldFamily::Depth1 { trunc, .. } => trunc,
            UltraFieldFamily::Depth2 { trunc, .. } => trunc,
        }
    }

    pub fn fields(&self) -> Result<&[Field]> {
        match self {
            UltraFieldFamily::Depth1 { fields, .. } => Ok(fields),
            UltraFieldFamily::Depth2 { .. } => Err(Error::PreconditionFailed(
                "depth-2 family has no flat field list".into(),
            )),
        }
    }

    pub fn members(&self) -> Result<&[UltraFieldFamily]> {
        match self {
            UltraFieldFamily::Depth2 { families, .. } => Ok(families),
            UltraFieldFamily::Depth1 { .. } => Err(Error::PreconditionFailed(
                "depth-1 family has no members".into(),
            )),
        }
    }

    /// Internal cardinality at depth 1: the sequence of field orders.
    /// (At depth 2 the cardinality is a sequence of depth-1
    /// cardinalities; see [`UltraFieldFamily::internal_cardinality_nested`].)
    pub fn internal_cardinality(&self) -> Result<Hyperinteger> {
        match self {
            UltraFieldFamily::Depth1 { trunc, fields } => {
                let vals: Result<Vec<i64>> = fields
                    .iter()
                    .map(|f| {
                        i64::try_from(f.order())
                            .map_err(|_| Error::TooLarge)
                    })
                    .collect();
                Hyperinteger::new(*trunc, vals?)
            }
            UltraFieldFamily::Depth2 { .. } => Err(Error::PreconditionFailed(
                "depth-2 cardinality is a nested sequence".into(),
            )),
        }
    }

    /// Internal cardinality at depth 2: per outer index, the depth-1
    /// cardinality of that member.
    pub fn internal_cardinality_nested(&self) -> Result<Vec<Hyperinteger>> {
        match self {
            UltraFieldFamily::Depth2 { families, .. } => families
                .iter()
                .map(|f| f.internal_cardinality())
                .collect(),
            UltraFieldFamily::Depth1 { .. } => Err(Error::PreconditionFailed(
                "depth-1 cardinality is a flat sequence".into(),
            )),
        }
    }
}

/// The family `p_s = smallest prime ≡ 1 (mod s!)`, as prime fields.
/// For every `n`, `n` divides `p_s - 1` for all `s >= n`.
pub fn dirichlet_family(len: usize, tail_start: usize) -> Result<UltraFieldFamily> {
    if len > 12 {
        // s! overflows the modulus search beyond this.
        return Err(Error::TooLarge);
    }
    let trunc = Truncation::new(len, tail_start)?;
    let mut fields = Vec::with_capacity(len);
    for s in 1..=len {
        let p = smallest_prime_one_mod(factorial(s as u64));
        fields.push(field_of_order(p)?);
    }
    UltraFieldFamily::depth1(trunc, fields)
}

/// The first `len` rational primes, as prime fields.
pub fn primes_family(len: usize, tail_start: usize) -> Result<UltraFieldFamily> {
    let trunc = Truncation::new(len, tail_start)?;
    let mut fields = Vec::with_capacity(len);
    let mut p = 2u64;
    for _ in 0..len {
        fields.push(field_of_order(p)?);
        p = (p + 1..).find(|&c| crate::arith::is_prime_u64(c)).unwrap();
    }
    UltraFieldFamily::depth1(trunc, fields)
}

/// The constant family `F_q` at every index.
pub fn constant_family(q: u64, len: usize, tail_start: usize) -> Result<UltraFieldFamily> {
    let trunc = Truncation::new(len, tail_start)?;
    let field = field_of_order(q)?;
    UltraFieldFamily::depth1(trunc, alloc::vec![field; len])
}

/// An explicit table of field orders.
pub fn table_family(qs: &[u64], tail_start: usize) -> Result<UltraFieldFamily> {
    let trunc = Truncation::new(qs.len(), tail_start)?;
    let fields: Result<Vec<Field>> = qs.iter().map(|&q| field_of_order(q)).collect();
    UltraFieldFamily::depth1(trunc, fields?)
}

/// Per-index elements matching a family's shape.
#[derive(Clone, Debug)]
pub enum ElementFamily {
    Depth1(Vec<FieldElement>),
    Depth2(Vec<Vec<FieldElement>>),
}

/// Check `a_s^(q_s) = a_s` at every index, using each field's own
/// internal cardinality as the exponent. At depth 2 the depth-1 check
/// runs inside each outer index and the outer verdict aggregates those.
pub fn frobenius_fixed_check(fam: &UltraFieldFamily, elems: &ElementFamily) -> Result<Verdict> {
    match (fam, elems) {
        (UltraFieldFamily::Depth1 { trunc, fields }, ElementFamily::Depth1(es)) => {
            let exps: Result<Vec<i64>> = fields
                .iter()
                .map(|f| i64::try_from(f.order()).map_err(|_| Error::TooLarge))
                .collect();
            let exps = Hyperinteger::new(*trunc, exps?)?;
            frobenius_fixed_check_with_exponent(fam, es, &exps)
        }
        (UltraFieldFamily::Depth2 { trunc, families }, ElementFamily::Depth2(ess)) => {
            if ess.len() != families.len() {
                return Err(Error::PreconditionFailed(
                    "element family shape differs from field family".into(),
                ));
            }
            let mut inner_holds = Vec::with_capacity(families.len());
            for (f, es) in families.iter().zip(ess) {
                let v = frobenius_fixed_check(f, &ElementFamily::Depth1(es.clone()))?;
                inner_holds.push(v.holds());
            }
            trunc.verdict(&inner_holds)
        }
        _ => Err(Error::PreconditionFailed(
            "element family shape differs from field family".into(),
        )),
    }
}

/// The same check with an explicit exponent sequence; corrupting the
/// exponent (e.g. `q_s + 1`) demonstrates how the verdict fails.
pub fn frobenius_fixed_check_with_exponent(
    fam: &UltraFieldFamily,
    elems: &[FieldElement],
    exps: &Hyperinteger,
) -> Result<Verdict> {
    let fields = fam.fields()?;
    let trunc = fam.truncation();
    if elems.len() != fields.len() {
        return Err(Error::PreconditionFailed(
            "element count differs from family".into(),
        ));
    }
    let mut values = Vec::with_capacity(fields.len());
    for ((field, e), &exp) in fields.iter().zip(elems).zip(exps.values()) {
        if **e.owner() != **field {
            return Err(Error::OwnerMismatch);
        }
        if exp < 0 {
            return Err(Error::PreconditionFailed("negative exponent".into()));
        }
        values.push(e.pow(exp as u128) == *e);
    }
    trunc.verdict(&values)
}

/// How a polynomial family was specified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum SpecMode {
    /// Integer coefficients reduced mod `p_s` per index; all indices
    /// share the formal degree.
    IntegerSpec,
    /// Explicit per-index coefficients; degrees may vary, and diagonal
    /// membership is a checked property rather than an assumption.
    TableSpec,
}

/// Per-index payload of a polynomial family.
#[derive(Clone, Debug)]
pub enum FamilyKind {
    /// Polynomials in `t` over `F_(q_s)`.
    Uni(Vec<Poly>),
    /// Polynomials in `A_s[x]`.
    Biv(Vec<BivarPoly>),
}

/// A per-index polynomial family over an ultra-field family.
#[derive(Clone, Debug)]
pub struct UltraPolyFamily {
    trunc: Truncation,
    fields: Vec<Field>,
    kind: FamilyKind,
    mode: SpecMode,
}

impl UltraPolyFamily {
    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn fields(&self) -> &[Field] {
        &self.fields
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    pub fn mode(&self) -> SpecMode {
        self.mode
    }

    /// Reduce integer coefficients of a polynomial in `t` per index.
    pub fn lift_int_poly(fam: &UltraFieldFamily, coeffs: &[i64]) -> Result<UltraPolyFamily> {
        let fields = fam.fields()?.to_vec();
        let polys: Vec<Poly> = fields
            .iter()
            .map(|f| Poly::from_ivalues(f, coeffs))
            .collect();
        Ok(UltraPolyFamily {
            trunc: *fam.truncation(),
            fields,
            kind: FamilyKind::Uni(polys),
            mode: SpecMode::IntegerSpec,
        })
    }

    /// Reduce integer coefficients of a polynomial in `A[x]` per index:
    /// `coeffs[i]` holds the integer t-coefficients at `x^i`.
    pub fn lift_int_bivar(fam: &UltraFieldFamily, coeffs: &[Vec<i64>]) -> Result<UltraPolyFamily> {
        let fields = fam.fields()?.to_vec();
        let polys: Vec<BivarPoly> = fields
            .iter()
            .map(|f| BivarPoly::from_ivalues(f, coeffs))
            .collect();
        Ok(UltraPolyFamily {
            trunc: *fam.truncation(),
            fields,
            kind: FamilyKind::Biv(polys),
            mode: SpecMode::IntegerSpec,
        })
    }

    /// Explicit per-index table of polynomials in `t`.
    pub fn table_uni(fam: &UltraFieldFamily, polys: Vec<Poly>) -> Result<UltraPolyFamily> {
        let fields = fam.fields()?.to_vec();
        if polys.len() != fields.len() {
            return Err(Error::PreconditionFailed(
                "table length differs from family".into(),
            ));
        }
        for (p, f) in polys.iter().zip(&fields) {
            if **p.field() != **f {
                return Err(Error::OwnerMismatch);
            }
        }
        Ok(UltraPolyFamily {
            trunc: *fam.truncation(),
            fields,
            kind: FamilyKind::Uni(polys),
            mode: SpecMode::TableSpec,
        })
    }

    /// Explicit per-index table of polynomials in `A[x]`.
    pub fn table_biv(fam: &UltraFieldFamily, polys: Vec<BivarPoly>) -> Result<UltraPolyFamily> {
        let fields = fam.fields()?.to_vec();
        if polys.len() != fields.len() {
            return Err(Error::PreconditionFailed(
                "table length differs from family".into(),
            ));
        }
        for (p, f) in polys.iter().zip(&fields) {
            if **p.field() != **f {
                return Err(Error::OwnerMismatch);
            }
        }
        Ok(UltraPolyFamily {
            trunc: *fam.truncation(),
            fields,
            kind: FamilyKind::Biv(polys),
            mode: SpecMode::TableSpec,
        })
    }

    /// Per-index degree (t-degree for `Uni`, x-degree for `Biv`); `None`
    /// for the zero polynomial.
    pub fn degrees(&self) -> Vec<Option<usize>> {
        match &self.kind {
            FamilyKind::Uni(ps) => ps.iter().map(|p| p.deg()).collect(),
            FamilyKind::Biv(ps) => ps.iter().map(|p| p.xdeg()).collect(),
        }
    }
}

/// Verdict plus the violating indices for the bounded-degree check.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct DiagonalMembership {
    pub verdict: Verdict,
    /// Tail indices whose degree exceeds the bound.
    pub violations: Vec<usize>,
}

/// Bounded-degree check: the family represents an element of the
/// diagonal polynomial ring exactly when the per-index degrees are
/// bounded on the tail. A single tail violation refutes the bound, so
/// the verdict is binary here (`Mixed` never arises).
pub fn diagonal_membership(fam: &UltraPolyFamily, bound: usize) -> Result<DiagonalMembership> {
    let degs = fam.degrees();
    let violations: Vec<usize> = fam
        .trunc
        .tail()
        .filter(|&s| degs[s - 1].map_or(false, |d| d > bound))
        .collect();
    Ok(DiagonalMembership {
        verdict: if violations.is_empty() {
            Verdict::HoldsOnTail
        } else {
            Verdict::FailsOnTail
        },
        violations,
    })
}

/// Per-index outcome of lifting an integer prime.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct PerIndexPrime {
    pub index: usize,
    pub q: u64,
    pub irreducible: bool,
    pub degree_preserved: bool,
}

/// Reduce an integer polynomial per index and check that it stays a
/// prime of the formal degree on the tail.
pub fn lift_prime(
    fam: &UltraFieldFamily,
    coeffs: &[i64],
) -> Result<(UltraPolyFamily, Verdict, Vec<PerIndexPrime>)> {
    let formal_degree = coeffs
        .iter()
        .rposition(|&c| c != 0)
        .ok_or(Error::ZeroInput)?;
    if formal_degree == 0 {
        return Err(Error::DegreeTooSmall);
    }
    let family = UltraPolyFamily::lift_int_poly(fam, coeffs)?;
    let fields = fam.fields()?;
    let polys = match &family.kind {
        FamilyKind::Uni(ps) => ps,
        FamilyKind::Biv(_) => unreachable!(),
    };
    // The leading coefficient must survive reduction at every index.
    for p in polys {
        if p.deg() != Some(formal_degree) {
            return Err(Error::DegeneratedLeadingCoefficient);
        }
    }
    let mut per_index = Vec::with_capacity(polys.len());
    let mut values = Vec::with_capacity(polys.len());
    for (s, (p, f)) in polys.iter().zip(fields).enumerate() {
        let irreducible = p.is_irreducible()?;
        let degree_preserved = p.deg() == Some(formal_degree);
        per_index.push(PerIndexPrime {
            index: s + 1,
            q: f.order() as u64,
            irreducible,
            degree_preserved,
        });
        values.push(irreducible && degree_preserved);
    }
    let verdict = fam.truncation().verdict(&values)?;
    Ok((family, verdict, per_index))
}
