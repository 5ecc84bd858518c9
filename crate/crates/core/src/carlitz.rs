//! The twisted polynomial ring `F_q(t)<τ>` (with `τ·a = a^q·τ`), the
//! Carlitz module `a ↦ C_a`, torsion polynomials, cyclotomic function
//! fields `Q_a = F_q(t)[x]/(ψ_a)` with their explicit Galois action
//! tables, fixed-field resolvents, Kummer witnesses, and the `1/t`
//! twisted degree bookkeeping.
//!
//! All elements of `Q_a` are x-power-basis residues with coefficients in
//! `A = F_q[t]` or its fraction field; there is no floating point.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::arith;
use crate::bivar::BivarPoly;
use crate::gf::{Field, FieldElement, FieldExt};
use crate::poly::{cmp_poly, Poly};
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

/// Default cap on unit-group enumerations.
pub const DEFAULT_ENUM_CAP: u64 = 512;

/// Entries of `F_q(t)<τ>`: `sum c_i τ^i` with rational-function
/// coefficients and the twisted product `τ·a = a^q·τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPoly {
    field: Field,
    coeffs: Vec<RatFunc>,
}

impl TwistedPoly {
    pub fn zero(field: &Field) -> TwistedPoly {
        TwistedPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: &RatFunc) -> TwistedPoly {
        let mut p = TwistedPoly {
            field: c.field().clone(),
            coeffs: alloc::vec![c.clone()],
        };
        p.trim();
        p
    }

    /// `τ` itself.
    pub fn tau(field: &Field) -> TwistedPoly {
        TwistedPoly {
            field: field.clone(),
            coeffs: alloc::vec![RatFunc::zero(field), RatFunc::one(field)],
        }
    }

    /// `C_t = t + τ`.
    pub fn carlitz_t(field: &Field) -> TwistedPoly {
        TwistedPoly {
            field: field.clone(),
            coeffs: alloc::vec![
                RatFunc::from_poly(&Poly::var(field)),
                RatFunc::one(field)
            ],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn tau_degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn add(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = RatFunc::zero(&self.field);
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = other.coeffs.get(i).unwrap_or(&zero);
            coeffs.push(a.add(b)?);
        }
        let mut p = TwistedPoly {
            field: self.field.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    /// Twisted product: `(a τ^i)(b τ^j) = a b^(q^i) τ^(i+j)`.
    pub fn mul(&self, other: &TwistedPoly) -> Result<TwistedPoly> {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Ok(TwistedPoly::zero(&self.field));
        }
        let q = self.field.order();
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = alloc::vec![RatFunc::zero(&self.field); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let twisted = frobenius_power_rat(b, q, i)?;
                coeffs[i + j] = coeffs[i + j].add(&a.mul(&twisted)?)?;
            }
        }
        let mut p = TwistedPoly {
            field: self.field.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    pub fn scale(&self, c: &RatFunc) -> Result<TwistedPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(c)?);
        }
        let mut p = TwistedPoly {
            field: self.field.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }
}

/// `b^(q^i)` for `b` in `F_q(t)`, via `b(t)^q = b(t^q)` (coefficients of
/// `b` are fixed by the `q`-power map).
fn frobenius_power_rat(b: &RatFunc, q: u128, i: usize) -> Result<RatFunc> {
    if i == 0 || b.is_zero() {
        return Ok(b.clone());
    }
    let mut stride: u128 = 1;
    for _ in 0..i {
        stride = stride
            .checked_mul(q)
            .ok_or_else(|| Error::Internal("Frobenius stride overflow".into()))?;
    }
    if stride > 1 << 20 {
        return Err(Error::TooLarge);
    }
    let num = substitute_power(b.num(), stride as usize)?;
    let den = substitute_power(b.den(), stride as usize)?;
    RatFunc::from_parts(&num, &den)
}

/// `b(t^stride)`.
fn substitute_power(b: &Poly, stride: usize) -> Result<Poly> {
    let field = b.field().clone();
    let d = match b.deg() {
        None => return Ok(b.clone()),
        Some(d) => d,
    };
    let mut elems = alloc::vec![field.zero(); d * stride + 1];
    for i in 0..=d {
        elems[i * stride] = b.coeff(i);
    }
    Poly::from_elements(&elems)
}

/// The image `C_a` of `a ∈ A` under the Carlitz module, with both its
/// twisted-polynomial and q-polynomial forms.
#[derive(Clone, Debug)]
pub struct CarlitzImage {
    source: Poly,
    twisted: TwistedPoly,
}

impl CarlitzImage {
    pub fn source(&self) -> &Poly {
        &self.source
    }

    pub fn twisted(&self) -> &TwistedPoly {
        &self.twisted
    }

    /// Coefficients `c_i` of `C_a = sum c_i τ^i`; integral for `a ∈ A`.
    pub fn tau_coeffs(&self) -> Result<Vec<Poly>> {
        self.twisted
            .coeffs()
            .iter()
            .map(|c| {
                c.as_poly()
                    .cloned()
                    .ok_or_else(|| Error::Internal("Carlitz coefficient not integral".into()))
            })
            .collect()
    }

    /// The q-polynomial `C_a(x) = sum c_i x^(q^i)` as an element of
    /// `A[x]`.
    pub fn q_polynomial(&self) -> Result<BivarPoly> {
        let field = self.source.field().clone();
        let q = field.order();
        let coeffs = self.tau_coeffs()?;
        let top = (q as u128).checked_pow((coeffs.len() - 1) as u32);
        let top = top.ok_or(Error::TooLarge)?;
        if top > 1 << 20 {
            return Err(Error::TooLarge);
        }
        let mut out = alloc::vec![Poly::zero(&field); top as usize + 1];
        let mut power = 1usize;
        for (i, c) in coeffs.iter().enumerate() {
            out[power] = c.clone();
            if i + 1 < coeffs.len() {
                power *= q as usize;
            }
        }
        BivarPoly::from_coeffs(&field, out)
    }
}

/// Compute `C_a` by the homomorphism property: Horner in the twisted
/// ring, `C_(f*t + c) = C_f · C_t + c`.
pub fn carlitz_of(a: &Poly) -> Result<CarlitzImage> {
    if a.is_zero() {
        return Err(Error::ZeroInput);
    }
    let field = a.field().clone();
    let d = a.deg().unwrap();
    let ct = TwistedPoly::carlitz_t(&field);
    let mut acc = TwistedPoly::constant(&RatFunc::from_poly(&Poly::constant(&a.coeff(d))));
    for i in (0..d).rev() {
        acc = acc.mul(&ct)?;
        let c = a.coeff(i);
        if !c.is_zero() {
            acc = acc.add(&TwistedPoly::constant(&RatFunc::from_poly(&Poly::constant(
                &c,
            ))))?;
        }
    }
    Ok(CarlitzImage {
        source: a.clone(),
        twisted: acc,
    })
}

/// Evaluate the Carlitz action `a · β = C_a(β)` at a rational function.
pub fn carlitz_eval_rat(a: &Poly, beta: &RatFunc) -> Result<RatFunc> {
    if **a.field() != **beta.field() {
        return Err(Error::OwnerMismatch);
    }
    let image = carlitz_of(a)?;
    let q = a.field().order();
    let mut acc = RatFunc::zero(beta.field());
    for (i, c) in image.twisted.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut exp: u128 = 1;
        for _ in 0..i {
            exp = exp.checked_mul(q).ok_or(Error::TooLarge)?;
        }
        let term = c.mul(&beta.pow(exp)?)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// `ψ_(P^h) = C_(P^h)(x) / C_(P^(h-1))(x)`, the minimal polynomial of a
/// generator of the `P^h`-torsion; monic in `x`, Eisenstein at `P`.
pub fn cyclo_poly(p: &Poly, h: u32) -> Result<BivarPoly> {
    if h == 0 {
        return Err(Error::DegreeTooSmall);
    }
    if !p.is_irreducible()? || !p.is_monic() {
        return Err(Error::NotPrime);
    }
    let field = p.field().clone();
    let mut ph = Poly::one(&field);
    for _ in 0..h - 1 {
        ph = ph.mul(p)?;
    }
    let lower = if h == 1 {
        BivarPoly::var_x(&field)
    } else {
        carlitz_of(&ph)?.q_polynomial()?
    };
    let upper = carlitz_of(&ph.mul(p)?)?.q_polynomial()?;
    let (quot, rem) = upper.divmod_x(&lower)?;
    if !rem.is_zero() {
        return Err(Error::Internal("torsion polynomial division not exact".into()));
    }
    Ok(quot)
}

/// The unit group `(A/aA)^×`, explicitly enumerated.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    modulus: Poly,
    units: Vec<Poly>,
    order: u64,
    generator: Option<Poly>,
}

impl UnitGroup {
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Canonical representatives (degree below `deg a`), sorted.
    pub fn units(&self) -> &[Poly] {
        &self.units
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.generator.is_some()
    }

    pub fn generator(&self) -> Option<&Poly> {
        self.generator.as_ref()
    }

    /// Canonical representative of `b` mod `a`.
    pub fn reduce(&self, b: &Poly) -> Result<Poly> {
        b.rem(&self.modulus)
    }

    /// Multiplicative order of the class of `b`.
    pub fn order_of(&self, b: &Poly) -> Result<u64> {
        let b = self.reduce(b)?;
        if b.gcd(&self.modulus)?.deg() != Some(0) {
            return Err(Error::NotPrime);
        }
        let mut order = self.order;
        for (&prime, &mult) in &arith::factor_u64(self.order) {
            for _ in 0..mult {
                let candidate = order / prime;
                let powed = pow_mod_poly(&b, candidate, &self.modulus)?;
                if powed.deg() == Some(0) && powed.coeff(0).is_one() {
                    order = candidate;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }
}

pub(crate) fn pow_mod_poly(b: &Poly, e: u64, modulus: &Poly) -> Result<Poly> {
    let mut acc = Poly::one(b.field()).rem(modulus)?;
    let mut base = b.rem(modulus)?;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base)?.rem(modulus)?;
        }
        base = base.mul(&base)?.rem(modulus)?;
        e >>= 1;
    }
    Ok(acc)
}

/// Enumerate `(A/aA)^×` for monic `a` of positive degree. The search for
/// a cyclic generator scans the units in canonical order, so the result
/// is deterministic.
pub fn unit_group(a: &Poly, cap: u64) -> Result<UnitGroup> {
    if !a.is_monic() || a.deg().map_or(true, |d| d == 0) {
        return Err(Error::PreconditionFailed(
            "modulus must be monic nonconstant".into(),
        ));
    }
    let field = a.field().clone();
    let q = field.order();
    let d = a.deg().unwrap();
    let residue_count = (q as u128).checked_pow(d as u32).ok_or(Error::TooLarge)?;
    if residue_count > 4 * cap as u128 {
        return Err(Error::TooLarge);
    }
    let mut units = Vec::new();
    for idx in 0..residue_count {
        let residue = residue_from_index(&field, idx, d)?;
        if residue.is_zero() {
            continue;
        }
        if residue.gcd(a)?.deg() == Some(0) {
            units.push(residue);
        }
    }
    let order = units.len() as u64;
    if order > cap {
        return Err(Error::TooLarge);
    }
    units.sort_by(cmp_poly);
    let group = UnitGroup {
        modulus: a.clone(),
        units,
        order,
        generator: None,
    };
    let mut generator = None;
    for u in &group.units {
        if group.order_of(u)? == order {
            generator = Some(u.clone());
            break;
        }
    }
    Ok(UnitGroup { generator, ..group })
}

/// Residue polynomial of degree `< d` with coefficient values given by
/// the base-q digits of `idx`.
fn residue_from_index(field: &Field, idx: u128, d: usize) -> Result<Poly> {
    let q = field.order();
    let mut elems = Vec::with_capacity(d);
    let mut v = idx;
    for _ in 0..d {
        elems.push(field.elt_from_value(v % q)?);
        v /= q;
    }
    Poly::from_elements(&elems)
}

/// `Φ(a) = |(A/aA)^×|` by the multiplicative formula from the prime
/// factorization of `a`.
pub fn phi_formula(a: &Poly) -> Result<u64> {
    let q = a.field().order() as u64;
    let (_, factors) = a.factor(0)?;
    let mut phi: u64 = 1;
    for (p, h) in &factors {
        let d = p.deg().unwrap() as u32;
        let qd = q.checked_pow(d).ok_or(Error::TooLarge)?;
        let part = qd
            .checked_pow(h - 1)
            .and_then(|x| x.checked_mul(qd - 1))
            .ok_or(Error::TooLarge)?;
        phi = phi.checked_mul(part).ok_or(Error::TooLarge)?;
    }
    Ok(phi)
}

/// The cyclotomic function field `Q_a` for a prime power `a = P^h`,
/// presented as `F_q(t)[x]/(ψ_a)` with its Galois action table.
///
/// Elements are residues in `A[x]` of x-degree below `Φ(a)`; the table
/// maps every unit class `b` to `C_b(λ)` where `λ = x mod ψ_a`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    field: Field,
    prime: Poly,
    exponent: u32,
    modulus: Poly,
    psi: BivarPoly,
    phi: u64,
    units: UnitGroup,
    table: Vec<(Poly, BivarPoly)>,
}

/// Table entries are fully re-verified as roots of `ψ_a` up to this
/// order; beyond it only the identity and generator entries are
/// re-checked (construction is identical either way).
const FULL_VERIFY_CAP: u64 = 32;

impl CyclotomicField {
    pub fn base_field(&self) -> &Field {
        &self.field
    }

    pub fn prime(&self) -> &Poly {
        &self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn psi(&self) -> &BivarPoly {
        &self.psi
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn unit_group(&self) -> &UnitGroup {
        &self.units
    }

    /// The Galois table as (unit class, image of λ) pairs in canonical
    /// unit order.
    pub fn galois_table(&self) -> &[(Poly, BivarPoly)] {
        &self.table
    }

    pub fn lambda(&self) -> BivarPoly {
        BivarPoly::var_x(&self.field)
    }

    pub fn galois_image(&self, b: &Poly) -> Result<&BivarPoly> {
        let reduced = self.units.reduce(b)?;
        self.table
            .iter()
            .find(|(u, _)| *u == reduced)
            .map(|(_, img)| img)
            .ok_or(Error::NotPrime)
    }

    /// Multiplication of residues mod `ψ_a`.
    pub fn mul_mod(&self, a: &BivarPoly, b: &BivarPoly) -> Result<BivarPoly> {
        Ok(a.mul(b)?.divmod_x(&self.psi)?.1)
    }

    pub fn pow_mod(&self, a: &BivarPoly, e: u128) -> Result<BivarPoly> {
        let mut acc = BivarPoly::one(&self.field);
        let mut base = a.divmod_x(&self.psi)?.1;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(&acc, &base)?;
            }
            base = self.mul_mod(&base, &base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Apply `C_b` to a residue: `sum c_i v^(q^i) mod ψ_a`.
    pub fn apply_carlitz(&self, b: &Poly, v: &BivarPoly) -> Result<BivarPoly> {
        let coeffs = carlitz_of(b)?.tau_coeffs()?;
        let q = self.field.order();
        let mut acc = BivarPoly::zero(&self.field);
        let mut power = v.divmod_x(&self.psi)?.1;
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = power.scale_poly(c)?.divmod_x(&self.psi)?.1;
                acc = acc.add(&term)?;
            }
            if i + 1 < coeffs.len() {
                power = self.pow_mod(&power, q)?;
            }
        }
        Ok(acc)
    }

    /// Evaluate `ψ_a` at a residue (Horner mod `ψ_a`).
    pub fn psi_eval(&self, v: &BivarPoly) -> Result<BivarPoly> {
        let mut acc = BivarPoly::zero(&self.field);
        let n = self.psi.xdeg().unwrap();
        for i in (0..=n).rev() {
            acc = self.mul_mod(&acc, v)?;
            acc = acc.add(&BivarPoly::constant(&self.psi.coeff_x(i)))?;
        }
        Ok(acc)
    }

    /// Serializable summary with text renderings; table images are
    /// λ-power-basis coefficient vectors (entries in `A`, constant
    /// power first).
    pub fn summary(&self) -> CyclotomicSummary {
        CyclotomicSummary {
            base_field: alloc::format!("{}", self.field),
            modulus: alloc::format!("{}", self.modulus),
            prime: alloc::format!("{}", self.prime),
            exponent: self.exponent,
            psi: alloc::format!("{}", self.psi),
            phi: self.phi,
            cyclic: self.units.is_cyclic(),
            generator: self.units.generator().map(|g| alloc::format!("{g}")),
            table: self
                .table
                .iter()
                .map(|(u, img)| {
                    let coords = (0..self.phi as usize)
                        .map(|i| alloc::format!("{}", img.coeff_x(i)))
                        .collect();
                    (alloc::format!("{u}"), coords)
                })
                .collect(),
        }
    }
}

/// JSON-ready rendering of a [`CyclotomicField`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct CyclotomicSummary {
    pub base_field: String,
    pub modulus: String,
    pub prime: String,
    pub exponent: u32,
    pub psi: String,
    pub phi: u64,
    pub cyclic: bool,
    pub generator: Option<String>,
    /// Unit class -> coefficients of its λ-image on the power basis.
    pub table: Vec<(String, Vec<String>)>,
}

/// Build `Q_a` for a prime power `a = P^h` with its full Galois table.
/// Composite moduli are rejected with [`Error::UseCompositum`]; use
/// [`compositum_record`] for those.
pub fn build_cyclotomic(a: &Poly, cap: u64) -> Result<CyclotomicField> {
    if !a.is_monic() || a.deg().map_or(true, |d| d == 0) {
        return Err(Error::PreconditionFailed(
            "modulus must be monic nonconstant".into(),
        ));
    }
    let (_, factors) = a.factor(0)?;
    if factors.len() != 1 {
        return Err(Error::UseCompositum);
    }
    let (prime, exponent) = (factors[0].0.clone(), factors[0].1);
    let psi = cyclo_poly(&prime, exponent)?;
    let units = unit_group(a, cap)?;
    let phi = units.order();
    if psi.xdeg() != Some(phi as usize) {
        return Err(Error::Internal("psi degree differs from unit count".into()));
    }
    let field = a.field().clone();
    let q = field.order();
    // Precompute λ^(q^i) mod ψ for i up to deg a; every C_b with
    // deg b < deg a is a linear combination of these.
    let lambda = BivarPoly::var_x(&field);
    let temp = CyclotomicField {
        field: field.clone(),
        prime: prime.clone(),
        exponent,
        modulus: a.clone(),
        psi: psi.clone(),
        phi,
        units: units.clone(),
        table: Vec::new(),
    };
    let mut powers = alloc::vec![lambda.clone()];
    for _ in 0..a.deg().unwrap() {
        let prev = powers.last().unwrap();
        powers.push(temp.pow_mod(prev, q)?);
    }
    let mut table = Vec::with_capacity(units.units().len());
    for b in units.units() {
        let coeffs = carlitz_of(b)?.tau_coeffs()?;
        let mut img = BivarPoly::zero(&field);
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = powers[i].scale_poly(c)?.divmod_x(&psi)?.1;
            img = img.add(&term)?;
        }
        table.push((b.clone(), img));
    }
    let built = CyclotomicField { table, ..temp };
    // Verification: every table entry must be a root of ψ, i.e. a
    // torsion point of exact order P^h: C_(P^h) kills it but
    // C_(P^(h-1)) does not. (Both q-polynomials are separable and
    // C_(P^h) = ψ · C_(P^(h-1)), so this is equivalent to ψ = 0 and
    // much cheaper to evaluate.) Full check up to the cap; sampled
    // (identity + generator) beyond it.
    let verify_all = phi <= FULL_VERIFY_CAP;
    let sample: Vec<&Poly> = if verify_all {
        built.table.iter().map(|(u, _)| u).collect()
    } else {
        let mut s = alloc::vec![&built.table[0].0];
        if let Some(g) = built.units.generator() {
            s.push(g);
        }
        s
    };
    let a_lower = {
        let mut acc = Poly::one(&field);
        for _ in 0..exponent - 1 {
            acc = acc.mul(&prime)?;
        }
        acc
    };
    for b in sample {
        let img = built.galois_image(b)?;
        if !built.apply_carlitz(a, img)?.is_zero() {
            return Err(Error::Internal(
                "Galois table entry is not a root of psi".into(),
            ));
        }
        // C_(P^(h-1)) is the identity for h = 1, so this also rules out
        // the zero residue.
        if built.apply_carlitz(&a_lower, img)?.is_zero() {
            return Err(Error::Internal(
                "Galois table entry is a lower-order torsion point".into(),
            ));
        }
    }
    // Entries must be pairwise distinct (the action is faithful).
    let mut seen: Vec<&BivarPoly> = Vec::new();
    for (_, img) in &built.table {
        if seen.iter().any(|s| **s == *img) {
            return Err(Error::Internal("Galois table entries collide".into()));
        }
        seen.push(img);
    }
    Ok(built)
}

/// Compositum bookkeeping for composite moduli: the prime-power
/// components of `a` with their `Φ` values; the total degree is the
/// product (Galois groups multiply componentwise).
#[derive(Clone, Debug)]
pub struct CyclotomicCompositum {
    pub modulus: Poly,
    /// `(P, h, Φ(P^h))` per component, sorted by `P`.
    pub components: Vec<(Poly, u32, u64)>,
    pub degree: u64,
}

pub fn compositum_record(a: &Poly) -> Result<CyclotomicCompositum> {
    if !a.is_monic() || a.deg().map_or(true, |d| d == 0) {
        return Err(Error::PreconditionFailed(
            "modulus must be monic nonconstant".into(),
        ));
    }
    let q = a.field().order() as u64;
    let (_, factors) = a.factor(0)?;
    let mut components = Vec::new();
    let mut degree: u64 = 1;
    for (p, h) in &factors {
        let d = p.deg().unwrap() as u32;
        let qd = q.checked_pow(d).ok_or(Error::TooLarge)?;
        let phi = qd
            .checked_pow(h - 1)
            .and_then(|x| x.checked_mul(qd - 1))
            .ok_or(Error::TooLarge)?;
        degree = degree.checked_mul(phi).ok_or(Error::TooLarge)?;
        components.push((p.clone(), *h, phi));
    }
    Ok(CyclotomicCompositum {
        modulus: a.clone(),
        components,
        degree,
    })
}

/// Resolvent of a subgroup: `η = prod_{σ in H} σ(λ)` and its minimal
/// polynomial over `F_q(t)`.
#[derive(Clone, Debug)]
pub struct ResolventOutcome {
    /// The resolvent as a residue in `Q_a`.
    pub eta: BivarPoly,
    /// Minimal polynomial of `η` over `F_q(t)` (coefficients in `A`).
    pub minpoly: BivarPoly,
    /// `[G : H]`, the degree of the fixed field.
    pub fixed_degree: u64,
    /// Whether `deg minpoly = [G : H]`, i.e. `η` generates the fixed
    /// field; otherwise the degree is a proper divisor.
    pub generates: bool,
}

/// Compute the resolvent of a subgroup `H` of the unit group, checking
/// closure first.
pub fn resolvent_fixed_field(cyc: &CyclotomicField, subgroup: &[Poly]) -> Result<ResolventOutcome> {
    let reduced = check_subgroup(cyc.unit_group(), subgroup)?;
    let mut eta = BivarPoly::one(cyc.base_field());
    for b in &reduced {
        eta = cyc.mul_mod(&eta, cyc.galois_image(b)?)?;
    }
    let minpoly = minimal_polynomial(cyc, &eta)?;
    let fixed_degree = cyc.phi() / reduced.len() as u64;
    let generates = minpoly.xdeg() == Some(fixed_degree as usize);
    Ok(ResolventOutcome {
        eta,
        minpoly,
        fixed_degree,
        generates,
    })
}

fn check_subgroup(group: &UnitGroup, subgroup: &[Poly]) -> Result<Vec<Poly>> {
    let mut reduced: Vec<Poly> = Vec::new();
    for b in subgroup {
        let r = group.reduce(b)?;
        if r.gcd(group.modulus())?.deg() != Some(0) {
            return Err(Error::NotASubgroup);
        }
        if !reduced.contains(&r) {
            reduced.push(r);
        }
    }
    if reduced.is_empty() {
        return Err(Error::NotASubgroup);
    }
    let one = Poly::one(group.modulus().field());
    if !reduced.contains(&one) {
        return Err(Error::NotASubgroup);
    }
    for a in &reduced {
        for b in &reduced {
            let prod = a.mul(b)?.rem(group.modulus())?;
            if !reduced.contains(&prod) {
                return Err(Error::NotASubgroup);
            }
        }
    }
    Ok(reduced)
}

/// Minimal polynomial of a residue over `F_q(t)` by Gaussian elimination
/// on the power basis; the result has coefficients in `A` because the
/// residue is integral over `A`.
fn minimal_polynomial(cyc: &CyclotomicField, v: &BivarPoly) -> Result<BivarPoly> {
    let field = cyc.base_field().clone();
    let dim = cyc.phi() as usize;
    // Echelon rows: (pivot column, vector, combination over the powers).
    let mut pivots: Vec<(usize, Vec<RatFunc>, Vec<RatFunc>)> = Vec::new();
    let mut power = BivarPoly::one(&field);
    for j in 0..=dim {
        let mut vec: Vec<RatFunc> = (0..dim)
            .map(|i| RatFunc::from_poly(&power.coeff_x(i)))
            .collect();
        let mut combo = alloc::vec![RatFunc::zero(&field); j + 1];
        combo[j] = RatFunc::one(&field);
        for (pcol, pvec, pcombo) in &pivots {
            if vec[*pcol].is_zero() {
                continue;
            }
            let factor = vec[*pcol].div(&pvec[*pcol])?;
            for i in 0..dim {
                vec[i] = vec[i].sub(&factor.mul(&pvec[i])?)?;
            }
            for (i, pc) in pcombo.iter().enumerate() {
                combo[i] = combo[i].sub(&factor.mul(pc)?)?;
            }
        }
        match vec.iter().position(|c| !c.is_zero()) {
            Some(col) => {
                pivots.push((col, vec, combo));
            }
            None => {
                // sum combo_i η^i = 0 with combo_j = 1: monic minpoly.
                let mut coeffs = Vec::with_capacity(j + 1);
                for c in &combo {
                    let p = c.as_poly().cloned().ok_or_else(|| {
                        Error::Internal("minpoly coefficient not integral".into())
                    })?;
                    coeffs.push(p);
                }
                return BivarPoly::from_coeffs(&field, coeffs);
            }
        }
        if j < dim {
            power = cyc.mul_mod(&power, v)?;
        }
    }
    Err(Error::Internal(
        "no linear dependence among residue powers".into(),
    ))
}

/// `ε(d)`: `+1` when the prime degree `d` is even, `-1` when odd.
pub fn epsilon_sign(d: usize) -> i64 {
    if d % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Report of the Kummer-subfield witness computation for `(P, n)`.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct KummerWitnessReport {
    pub q: u64,
    pub prime: String,
    pub prime_degree: usize,
    pub n: u64,
    /// `+1` for even degree, `-1` for odd.
    pub epsilon: i64,
    /// Whether `η^n` lies in the base field `F_q(t)` (power-basis
    /// expansion concentrated on the constant coordinate).
    pub eta_pow_in_base: bool,
    /// Rendering of `η^n`.
    pub eta_pow: String,
    /// `η^n / (ε(d)·P)` when it is a unit of `F_q`.
    pub ratio_unit: Option<String>,
    /// Whether the ratio is a unit of `F_q^×`.
    pub ratio_in_units: bool,
    /// Whether that unit is an n-th power in `F_q^×`, which upgrades the
    /// witness to exact field equality.
    pub unit_is_nth_power: bool,
    /// `η^n = ε(d)·P` identically.
    pub exact_equality: bool,
    /// Set when the witness identity fails; the instance is flagged for
    /// manual review instead of being asserted.
    pub needs_manual_review: bool,
}

/// Witness computation for the degree-`n` Kummer subfield of `Q_P`:
/// take the unique index-`n` subgroup `H` of the cyclic unit group,
/// form the resolvent `η = prod_{σ in H} σ(λ)`, and report whether
/// `η^n` equals `ε(d)·P` up to an n-th-power unit.
pub fn kummer_witness(p: &Poly, n: u64, cap: u64) -> Result<KummerWitnessReport> {
    let field = p.field().clone();
    let q = field.order();
    if !p.is_irreducible()? || !p.is_monic() {
        return Err(Error::NotPrime);
    }
    let d = p.deg().unwrap();
    let qd_minus_1 = {
        let mut acc: u128 = 1;
        for _ in 0..d {
            acc = acc.checked_mul(q).ok_or(Error::TooLarge)?;
        }
        acc - 1
    };
    if n == 0 || qd_minus_1 % n as u128 != 0 {
        return Err(Error::NotADivisor);
    }
    let cyc = build_cyclotomic(p, cap)?;
    let group = cyc.unit_group();
    let generator = group.generator().ok_or(Error::NotASubgroup)?.clone();
    // Index-n subgroup of the cyclic group: generated by g^n.
    let gn = pow_mod_poly(&generator, n, group.modulus())?;
    let mut subgroup = alloc::vec![Poly::one(&field)];
    let mut cur = gn.clone();
    while !(cur.deg() == Some(0) && cur.coeff(0).is_one()) {
        subgroup.push(cur.clone());
        cur = cur.mul(&gn)?.rem(group.modulus())?;
    }
    let resolvent = resolvent_fixed_field(&cyc, &subgroup)?;
    let eta_pow = cyc.pow_mod(&resolvent.eta, n as u128)?;
    let epsilon = epsilon_sign(d);
    let eta_pow_in_base = eta_pow.xdeg().map_or(true, |x| x == 0);
    let mut ratio_unit = None;
    let mut ratio_in_units = false;
    let mut unit_is_nth_power = false;
    let mut exact_equality = false;
    if eta_pow_in_base {
        let value = eta_pow.coeff_x(0);
        let target = if epsilon == 1 { p.clone() } else { p.neg() };
        if let Ok(quot) = value.div_exact(&target) {
            if quot.deg() == Some(0) {
                let unit = quot.coeff(0);
                ratio_in_units = true;
                ratio_unit = Some(alloc::format!("{unit}"));
                unit_is_nth_power = is_nth_power_unit(&unit, n)?;
                exact_equality = unit.is_one();
            }
        }
    }
    Ok(KummerWitnessReport {
        q: q as u64,
        prime: alloc::format!("{p}"),
        prime_degree: d,
        n,
        epsilon,
        eta_pow_in_base,
        eta_pow: alloc::format!("{eta_pow}"),
        ratio_unit,
        ratio_in_units,
        unit_is_nth_power,
        exact_equality,
        needs_manual_review: !ratio_in_units,
    })
}

fn is_nth_power_unit(u: &FieldElement, n: u64) -> Result<bool> {
    let field = u.owner().clone();
    let q = field.order();
    for v in 1..q {
        let w = field.elt_from_value(v)?;
        if w.pow(n as u128) == *u {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Degree of the `n`-th layer of the `1/t`-twisted tower: the fixed
/// field of `F_q^×` inside the `u^(n+1)`-torsion field for `u = 1/t`
/// has degree `|(F_q[u]/(u^(n+1)))^×| / (q - 1)`, which must equal
/// `q^n`. The unit count is enumerated when it fits under the cap and
/// computed by the formula `q^n (q - 1)` otherwise.
pub fn infinity_twist_rn_degree(field: &Field, n: u32, cap: u64) -> Result<u64> {
    let q = field.order() as u64;
    let modulus = {
        let mut m = Poly::var(field);
        for _ in 0..n {
            m = m.mul(&Poly::var(field))?;
        }
        m
    };
    let unit_count = match unit_group(&modulus, cap) {
        Ok(g) => g.order(),
        Err(Error::TooLarge) => q
            .checked_pow(n)
            .and_then(|x| x.checked_mul(q - 1))
            .ok_or(Error::TooLarge)?,
        Err(e) => return Err(e),
    };
    let degree = unit_count / (q - 1);
    let expected = q.checked_pow(n).ok_or(Error::TooLarge)?;
    if degree != expected {
        return Err(Error::Internal(
            "twisted tower degree differs from q^n".into(),
        ));
    }
    Ok(degree)
}

/// All `q^(deg a)` torsion residues `{C_b(λ) : b mod a}` of a prime
/// power `a = P^h`, verified to be pairwise distinct roots of the
/// q-polynomial `C_a(x)` inside `Q_a`.
pub fn torsion_points_prime_power(p: &Poly, h: u32, cap: u64) -> Result<Vec<BivarPoly>> {
    let field = p.field().clone();
    let q = field.order();
    let mut a = Poly::one(&field);
    for _ in 0..h {
        a = a.mul(p)?;
    }
    let da = a.deg().unwrap();
    let count = (q as u128).checked_pow(da as u32).ok_or(Error::TooLarge)?;
    if count > cap as u128 {
        return Err(Error::TooLarge);
    }
    let cyc = build_cyclotomic(&a, cap)?;
    // λ^(q^i) mod ψ once; every C_b(λ) is a linear combination of these.
    let mut powers = alloc::vec![cyc.lambda()];
    for _ in 0..da {
        let prev = powers.last().unwrap();
        powers.push(cyc.pow_mod(prev, q)?);
    }
    let mut points = Vec::with_capacity(count as usize);
    for idx in 0..count {
        let b = residue_from_index(&field, idx, da)?;
        let img = if b.is_zero() {
            BivarPoly::zero(&field)
        } else {
            let coeffs = carlitz_of(&b)?.tau_coeffs()?;
            let mut acc = BivarPoly::zero(&field);
            for (i, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = powers[i].scale_poly(c)?.divmod_x(cyc.psi())?.1;
                acc = acc.add(&term)?;
            }
            acc
        };
        points.push(img);
    }
    // Pairwise distinct...
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                return Err(Error::Internal("torsion residues collide".into()));
            }
        }
    }
    // ...and every one a root of C_a(x).
    for pt in &points {
        if !cyc.apply_carlitz(&a, pt)?.is_zero() {
            return Err(Error::Internal("torsion residue is not a root".into()));
        }
    }
    Ok(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;
    use rand_core::{RngCore, SeedableRng};

    fn gf(q: u64) -> Field {
        field_of_order(q).unwrap()
    }

    fn t(field: &Field, s: &str) -> Poly {
        Poly::parse(field, s).unwrap()
    }

    fn b(field: &Field, s: &str) -> BivarPoly {
        BivarPoly::parse(field, s).unwrap()
    }

    #[test]
    fn carlitz_images() {
        // q = 3: C_t(x) = t*x + x^3.
        let f3 = gf(3);
        let ct = carlitz_of(&t(&f3, "t")).unwrap().q_polynomial().unwrap();
        assert_eq!(ct, b(&f3, "x^3 + (t)*x"));

        // C_1 = identity.
        let c1 = carlitz_of(&Poly::one(&f3)).unwrap().q_polynomial().unwrap();
        assert_eq!(c1, b(&f3, "x"));

        // q = 2: C_(t^2)(x) = t^2 x + (t^2+t) x^2 + x^4.
        let f2 = gf(2);
        let ct2 = carlitz_of(&t(&f2, "t^2")).unwrap().q_polynomial().unwrap();
        assert_eq!(ct2, b(&f2, "x^4 + (t^2+t)*x^2 + (t^2)*x"));

        assert_eq!(carlitz_of(&Poly::zero(&f3)).unwrap_err(), Error::ZeroInput);
    }

    #[test]
    fn twisted_ring_laws() {
        let f2 = gf(2);
        let ct = TwistedPoly::carlitz_t(&f2);
        let a = ct.mul(&ct).unwrap();
        let lhs = a.mul(&ct).unwrap().mul(&a).unwrap();
        let rhs = a.mul(&ct.mul(&a).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "associativity");
        // τ·a = a^q·τ: here τ·t = t^2·τ.
        let ta = TwistedPoly::tau(&f2)
            .mul(&TwistedPoly::constant(&RatFunc::from_poly(&t(&f2, "t"))))
            .unwrap();
        assert_eq!(ta.coeffs()[1], RatFunc::from_poly(&t(&f2, "t^2")));
        assert!(ta.coeffs()[0].is_zero());
    }

    #[test]
    fn carlitz_eval_rational() {
        let f3 = gf(3);
        // Linearity at zero.
        let zero = RatFunc::zero(&f3);
        assert!(carlitz_eval_rat(&t(&f3, "t^2+t"), &zero).unwrap().is_zero());

        // Homomorphism laws on random rational points.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..500 {
            let q = [2u64, 3][(rng.next_u64() % 2) as usize];
            let field = gf(q);
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, nonzero: bool| {
                let deg = (rng.next_u64() % 4) as usize;
                let mut vals: Vec<u64> = (0..=deg).map(|_| rng.next_u64() % q).collect();
                if nonzero && vals.iter().all(|&v| v == 0) {
                    vals[deg] = 1;
                }
                Poly::from_values(&field, &vals)
            };
            let a = rand_poly(&mut rng, true);
            let bb = rand_poly(&mut rng, true);
            let beta = RatFunc::from_parts(&rand_poly(&mut rng, false), &rand_poly(&mut rng, true))
                .unwrap();
            let sum = a.add(&bb).unwrap();
            if !sum.is_zero() {
                let lhs = carlitz_eval_rat(&sum, &beta).unwrap();
                let rhs = carlitz_eval_rat(&a, &beta)
                    .unwrap()
                    .add(&carlitz_eval_rat(&bb, &beta).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "additivity fails");
            }
            let prod = a.mul(&bb).unwrap();
            let lhs = carlitz_eval_rat(&prod, &beta).unwrap();
            let rhs = carlitz_eval_rat(&a, &carlitz_eval_rat(&bb, &beta).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "composition fails");
        }
    }

    #[test]
    fn cyclo_poly_examples() {
        let f3 = gf(3);
        assert_eq!(cyclo_poly(&t(&f3, "t"), 1).unwrap(), b(&f3, "x^2 + (t)"));
        let f2 = gf(2);
        assert_eq!(cyclo_poly(&t(&f2, "t"), 1).unwrap(), b(&f2, "x + (t)"));
        assert_eq!(
            cyclo_poly(&t(&f2, "t^2+t+1"), 1).unwrap(),
            b(&f2, "x^3 + (t^2+t+1)*x + (t^2+t+1)")
        );
        assert_eq!(
            cyclo_poly(&t(&f2, "t"), 2).unwrap(),
            b(&f2, "x^2 + (t)*x + (t)")
        );
        assert_eq!(cyclo_poly(&t(&f2, "t^2+1"), 1).unwrap_err(), Error::NotPrime);
    }

    #[test]
    fn carlitz_eval_in_cyclotomic_field() {
        // q = 3, Q_t = F[x]/(x^2 + t): C_t(λ) = tλ + λ^3 = 0.
        let f3 = gf(3);
        let cyc = build_cyclotomic(&t(&f3, "t"), 64).unwrap();
        let img = cyc.apply_carlitz(&t(&f3, "t"), &cyc.lambda()).unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn unit_group_examples() {
        let f3 = gf(3);
        let g = unit_group(&t(&f3, "t"), 64).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.generator().unwrap(), &t(&f3, "2"));

        let f2 = gf(2);
        let g = unit_group(&t(&f2, "t^2"), 64).unwrap();
        assert_eq!(g.order(), 2);
        let g = unit_group(&t(&f2, "t^2+t+1"), 64).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.generator().unwrap(), &t(&f2, "t"));
        assert_eq!(g.order_of(&t(&f2, "t")).unwrap(), 3);
    }

    #[test]
    fn phi_matches_enumeration() {
        for q in [2u64, 3] {
            let field = gf(q);
            for s in ["t", "t^2", "t^3", "t^2+t"] {
                let a = t(&field, s);
                let enumerated = unit_group(&a, 512).unwrap().order();
                assert_eq!(enumerated, phi_formula(&a).unwrap(), "a={s}, q={q}");
            }
        }
    }

    #[test]
    fn galois_tables() {
        // q = 3, a = t: table {1 -> λ, 2 -> 2λ}.
        let f3 = gf(3);
        let cyc = build_cyclotomic(&t(&f3, "t"), 64).unwrap();
        assert_eq!(cyc.phi(), 2);
        assert_eq!(cyc.galois_image(&t(&f3, "1")).unwrap(), &b(&f3, "x"));
        assert_eq!(cyc.galois_image(&t(&f3, "2")).unwrap(), &b(&f3, "(2)*x"));

        // q = 2, a = t^2+t+1: cyclic of order 3.
        let f2 = gf(2);
        let cyc = build_cyclotomic(&t(&f2, "t^2+t+1"), 64).unwrap();
        assert_eq!(cyc.phi(), 3);
        assert!(cyc.unit_group().is_cyclic());

        // q = 2, a = t^2: order-2 table on units {1, 1+t}.
        let cyc = build_cyclotomic(&t(&f2, "t^2"), 64).unwrap();
        assert_eq!(cyc.phi(), 2);
        assert_eq!(cyc.galois_image(&t(&f2, "t+1")).unwrap(), &b(&f2, "x + (t)"));

        // Composite modulus is a compositum record.
        assert_eq!(
            build_cyclotomic(&t(&f2, "t^2+t"), 64).unwrap_err(),
            Error::UseCompositum
        );
        let record = compositum_record(&t(&f2, "t^2+t")).unwrap();
        assert_eq!(record.degree, 1);
        assert_eq!(record.components.len(), 2);
    }

    #[test]
    fn galois_table_is_group_action() {
        // Exhaustive action law for Φ(a) <= 60.
        for (q, a_str) in [
            (3u64, "t"),
            (3, "t^2"),
            (2, "t^2+t+1"),
            (2, "t^3"),
            (3, "t^2+1"),
            (2, "t^3+t+1"),
        ] {
            let field = gf(q);
            let a = t(&field, a_str);
            let cyc = build_cyclotomic(&a, 64).unwrap();
            let units: Vec<Poly> = cyc.unit_group().units().to_vec();
            for b1 in &units {
                for b2 in &units {
                    let prod = b1.mul(b2).unwrap().rem(&a).unwrap();
                    let via_table = cyc.galois_image(&prod).unwrap().clone();
                    let composed = cyc.apply_carlitz(b1, cyc.galois_image(b2).unwrap()).unwrap();
                    assert_eq!(via_table, composed, "action law fails for a={a_str}");
                }
            }
        }
    }

    #[test]
    fn norm_identity() {
        // Product of all conjugates of λ is (-1)^Φ(P) · P for prime P.
        for (q, p_str) in [(3u64, "t"), (3, "t+1"), (2, "t^2+t+1"), (3, "t^2+1"), (5, "t")] {
            let field = gf(q);
            let p = t(&field, p_str);
            let cyc = build_cyclotomic(&p, 64).unwrap();
            let mut prod = BivarPoly::one(&field);
            for (_, img) in cyc.galois_table() {
                prod = cyc.mul_mod(&prod, img).unwrap();
            }
            let expected = if cyc.phi() % 2 == 0 { p.clone() } else { p.neg() };
            assert_eq!(prod, BivarPoly::constant(&expected));
        }
    }

    #[test]
    fn resolvent_examples() {
        let f3 = gf(3);
        let cyc = build_cyclotomic(&t(&f3, "t"), 64).unwrap();
        // Full group: η = Norm(λ) = t, minpoly linear.
        let full: Vec<Poly> = cyc.unit_group().units().to_vec();
        let out = resolvent_fixed_field(&cyc, &full).unwrap();
        assert_eq!(out.eta, BivarPoly::constant(&t(&f3, "t")));
        assert_eq!(out.minpoly.xdeg(), Some(1));
        assert!(out.generates);

        // Trivial subgroup: η = λ, minpoly = ψ_P.
        let trivial = alloc::vec![Poly::one(&f3)];
        let out = resolvent_fixed_field(&cyc, &trivial).unwrap();
        assert_eq!(out.eta, b(&f3, "x"));
        assert_eq!(out.minpoly, cyc.psi().clone());
        assert!(out.generates);
        // η^2 = -t.
        let sq = cyc.pow_mod(&out.eta, 2).unwrap();
        assert_eq!(sq, BivarPoly::constant(&t(&f3, "2*t")));

        // A non-subgroup is rejected.
        let bogus = alloc::vec![t(&f3, "2")];
        assert_eq!(
            resolvent_fixed_field(&cyc, &bogus).unwrap_err(),
            Error::NotASubgroup
        );
    }

    #[test]
    fn kummer_witness_examples() {
        // q=3, P=t, n=2: η = λ, η² = -t = ε(1)·t exactly.
        let f3 = gf(3);
        let report = kummer_witness(&t(&f3, "t"), 2, 64).unwrap();
        assert!(report.eta_pow_in_base);
        assert!(report.ratio_in_units);
        assert!(report.exact_equality);
        assert_eq!(report.epsilon, -1);

        // q=5, P=t, n=2 and n=4.
        let f5 = gf(5);
        for n in [2u64, 4] {
            let report = kummer_witness(&t(&f5, "t"), n, 64).unwrap();
            assert!(report.ratio_in_units, "n={n}");
            assert!(report.unit_is_nth_power, "n={n}");
        }

        // Non-divisor n is rejected.
        assert_eq!(
            kummer_witness(&t(&f3, "t"), 3, 64).unwrap_err(),
            Error::NotADivisor
        );
    }

    #[test]
    fn twisted_tower_degrees() {
        assert_eq!(infinity_twist_rn_degree(&gf(2), 1, 512).unwrap(), 2);
        assert_eq!(infinity_twist_rn_degree(&gf(3), 1, 512).unwrap(), 3);
        assert_eq!(infinity_twist_rn_degree(&gf(3), 2, 512).unwrap(), 9);
    }

    #[test]
    fn torsion_counts() {
        let f3 = gf(3);
        let pts = torsion_points_prime_power(&t(&f3, "t"), 1, 64).unwrap();
        assert_eq!(pts.len(), 3);
        let pts = torsion_points_prime_power(&t(&f3, "t"), 2, 64).unwrap();
        assert_eq!(pts.len(), 9);
        let f2 = gf(2);
        let pts = torsion_points_prime_power(&t(&f2, "t^2+t+1"), 1, 64).unwrap();
        assert_eq!(pts.len(), 4);
    }
}
