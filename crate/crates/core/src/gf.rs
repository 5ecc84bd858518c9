//! Finite fields `F_{p^k}` with explicit moduli, extension towers, and
//! multiplicative orders.
//!
//! A [`FieldSpec`] fixes a characteristic `p`, a degree `k`, and a monic
//! irreducible modulus of degree `k` over the prime field; all fields are
//! presented over their prime field as `F_p[z]/(modulus)`. Specs are
//! immutable and shared behind [`Field`] handles. Elements are dense
//! coefficient vectors of length `k` with entries reduced mod `p`, and
//! they carry their owner so that cross-field operations fail loudly.
//!
//! Modulus and embedding-root selection are deterministic: among the
//! candidates, the one whose coefficient vector encodes the smallest
//! base-`p` integer wins, so towers are stable across runs.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use smallvec::{smallvec, SmallVec};

use crate::arith::{self, mulmod};
use crate::{Error, Result};

/// Inline coefficient storage; degrees up to 4 stay on the stack.
pub type Coeffs = SmallVec<[u64; 4]>;

/// Shared handle to an immutable field description.
pub type Field = Arc<FieldSpec>;

/// Cap on attempts when scanning for a modulus, so a degenerate request
/// fails with [`Error::SearchExhausted`] instead of spinning.
const MODULUS_SEARCH_CAP: u64 = 2_000_000;

/// A finite field `F_{p^k} = F_p[z]/(modulus)`.
#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic, degree `k`, irreducible over `F_p`; constant term first.
    modulus: Vec<u64>,
    /// Tower bookkeeping: the base this field was constructed over and
    /// the chosen root of the base's modulus inside this field.
    base: Option<Embedding>,
}

/// Records how a base field embeds into an extension.
#[derive(Clone, Debug)]
pub struct Embedding {
    base: Field,
    /// Root of `base.modulus` inside the extension, as raw coefficients.
    root: Coeffs,
}

impl Embedding {
    pub fn base(&self) -> &Field {
        &self.base
    }

    /// The embedding root as an element of the extension field.
    pub fn root(&self, owner: &Field) -> FieldElement {
        FieldElement {
            owner: owner.clone(),
            coeffs: self.root.clone(),
        }
    }
}

/// Mathematical identity ignores tower provenance: two specs describe the
/// same field iff characteristic, degree, and modulus agree.
impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// The prime field `F_p`, presented as `F_p[z]/(z)`.
    pub fn prime(p: u64) -> Result<Field> {
        if !arith::is_prime_u64(p) {
            return Err(Error::NotPrime);
        }
        Ok(Arc::new(FieldSpec {
            p,
            k: 1,
            modulus: alloc::vec![0, 1],
            base: None,
        }))
    }

    /// `F_{p^k}` with a caller-supplied monic irreducible modulus
    /// (constant term first, length `k + 1`).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        let prime = FieldSpec::prime(p)?;
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::Parse(alloc::format!(
                "modulus must be monic of degree >= 1, got length {}",
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::Parse("modulus coefficient not reduced mod p".into()));
        }
        let k = modulus.len() - 1;
        if k == 1 {
            // Degree-1 modulus z + c: the field is F_p itself; normalize to z.
            return FieldSpec::prime(p);
        }
        let f = crate::poly::Poly::from_values(&prime, modulus);
        if !f.is_irreducible()? {
            return Err(Error::NotPrime);
        }
        Ok(Arc::new(FieldSpec {
            p,
            k,
            modulus: modulus.to_vec(),
            base: None,
        }))
    }

    /// `F_{p^k}` with the canonical modulus: the monic irreducible of
    /// degree `k` whose non-leading coefficients encode the smallest
    /// base-`p` integer.
    pub fn canonical(p: u64, k: usize) -> Result<Field> {
        let prime = FieldSpec::prime(p)?;
        if k == 1 {
            return Ok(prime);
        }
        let modulus = smallest_irreducible(&prime, k)?;
        Ok(Arc::new(FieldSpec {
            p,
            k,
            modulus,
            base: None,
        }))
    }

    /// The degree-`m` extension of `base`, with the embedding root
    /// recorded so the tower is reproducible.
    ///
    /// The result is presented over the prime field with degree `k * m`;
    /// the stored root realizes `base -> extension` as a ring
    /// homomorphism fixing the prime field.
    pub fn extension(base: &Field, m: usize) -> Result<Field> {
        if m == 0 {
            return Err(Error::DegreeTooSmall);
        }
        let k = base.k * m;
        let spec = if k == 1 {
            FieldSpec::prime(base.p)?
        } else {
            FieldSpec::canonical(base.p, k)?
        };
        // Root of the base modulus inside the extension, smallest first.
        let ext_owned = Arc::new(FieldSpec {
            base: None,
            ..(*spec).clone()
        });
        let base_mod = crate::poly::Poly::from_values(base, &base.modulus);
        let lifted = base_mod.lift_scalars(&ext_owned)?;
        let mut roots = lifted.roots()?;
        if roots.is_empty() {
            return Err(Error::SearchExhausted);
        }
        roots.sort_by_key(|r| r.value());
        let root = roots.remove(0).coeffs;
        Ok(Arc::new(FieldSpec {
            p: ext_owned.p,
            k: ext_owned.k,
            modulus: ext_owned.modulus.clone(),
            base: Some(Embedding {
                base: base.clone(),
                root,
            }),
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    /// Field order `p^k` (fits in `u128` for every field this crate
    /// constructs).
    pub fn order(&self) -> u128 {
        (0..self.k).fold(1u128, |acc, _| acc * self.p as u128)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.base.as_ref()
    }

    // ---- raw coefficient arithmetic (fixed width k, entries < p) ----

    fn width(&self) -> usize {
        self.k
    }

    pub(crate) fn raw_zero(&self) -> Coeffs {
        smallvec![0; self.width()]
    }

    pub(crate) fn raw_from_u64(&self, c: u64) -> Coeffs {
        let mut v = self.raw_zero();
        v[0] = c % self.p;
        v
    }

    pub(crate) fn raw_is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub(crate) fn raw_add(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.p;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect()
    }

    pub(crate) fn raw_sub(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.p;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect()
    }

    pub(crate) fn raw_neg(&self, a: &[u64]) -> Coeffs {
        let p = self.p;
        a.iter().map(|&x| if x == 0 { 0 } else { p - x }).collect()
    }

    pub(crate) fn raw_scale(&self, a: &[u64], c: u64) -> Coeffs {
        a.iter().map(|&x| mulmod(x, c, self.p)).collect()
    }

    pub(crate) fn raw_mul(&self, a: &[u64], b: &[u64]) -> Coeffs {
        let p = self.p;
        let k = self.width();
        if k == 1 {
            return smallvec![mulmod(a[0], b[0], p)];
        }
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod: SmallVec<[u64; 8]> = smallvec![0; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let cell = &mut prod[i + j];
                *cell = (*cell + mulmod(x, y, p)) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            // z^i = z^(i-k) * (z^k mod modulus); modulus is monic.
            for j in 0..k {
                let m = self.modulus[j];
                if m == 0 {
                    continue;
                }
                let idx = i - k + j;
                let sub = mulmod(c, m, p);
                prod[idx] = if prod[idx] >= sub {
                    prod[idx] - sub
                } else {
                    prod[idx] + p - sub
                };
            }
        }
        prod.truncate(k);
        prod.into_iter().collect()
    }

    pub(crate) fn raw_inv(&self, a: &[u64]) -> Result<Coeffs> {
        if self.raw_is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let p = self.p;
        if self.width() == 1 {
            return Ok(smallvec![arith::powmod(a[0], p - 2, p)]);
        }
        // Extended Euclid on the coefficient polynomial and the modulus,
        // over F_p.
        let mut r0: Vec<u64> = self.modulus.clone();
        let mut r1: Vec<u64> = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<u64> = alloc::vec![];
        let mut s1: Vec<u64> = alloc::vec![1];
        while !r1.is_empty() {
            let (q, r) = pf_divmod(&r0, &r1, p);
            let s = pf_sub(&s0, &pf_mul(&q, &s1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 = gcd (a unit, since the modulus is irreducible).
        debug_assert_eq!(r0.len(), 1);
        let scale = arith::powmod(r0[0], p - 2, p);
        let mut out = self.raw_zero();
        for (i, &c) in s0.iter().enumerate() {
            out[i] = mulmod(c, scale, p);
        }
        Ok(out)
    }

    pub(crate) fn raw_pow(&self, a: &[u64], mut e: u128) -> Coeffs {
        let mut acc = self.raw_from_u64(1);
        let mut base: Coeffs = a.iter().copied().collect();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.raw_mul(&acc, &base);
            }
            base = self.raw_mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn raw_value(&self, a: &[u64]) -> u128 {
        a.iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub(crate) fn raw_from_value(&self, mut v: u128) -> Coeffs {
        let mut out = self.raw_zero();
        for slot in out.iter_mut() {
            *slot = (v % self.p as u128) as u64;
            v /= self.p as u128;
        }
        debug_assert_eq!(v, 0);
        out
    }

    /// Apply the recorded embedding to raw coefficients of the base field.
    pub(crate) fn raw_embed(&self, base_coeffs: &[u64]) -> Coeffs {
        match &self.base {
            None => {
                // Prime fields and fields without tower info only embed
                // their own prime field.
                debug_assert!(base_coeffs.len() == 1 || base_coeffs.iter().skip(1).all(|&c| c == 0));
                self.raw_from_u64(base_coeffs[0])
            }
            Some(emb) => {
                // Horner at the recorded root.
                let mut acc = self.raw_zero();
                for &c in base_coeffs.iter().rev() {
                    acc = self.raw_mul(&acc, &emb.root);
                    let lift = self.raw_from_u64(c);
                    acc = self.raw_add(&acc, &lift);
                }
                acc
            }
        }
    }
}

// ---- element-level API ----

/// An element of a finite field, owned by its [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct FieldElement {
    owner: Field,
    coeffs: Coeffs,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        *self.owner == *other.owner && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

/// Owner-checked constructors and arithmetic.
pub trait FieldExt {
    fn zero(&self) -> FieldElement;
    fn one(&self) -> FieldElement;
    /// The residue class of `z`, the field generator.
    fn gen(&self) -> FieldElement;
    /// Lift an integer into the prime subfield.
    fn elt_from_u64(&self, c: u64) -> FieldElement;
    /// Element from raw coefficients (length <= k, entries < p).
    fn elt_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement>;
    /// Element with canonical integer value `v = sum c_i p^i`.
    fn elt_from_value(&self, v: u128) -> Result<FieldElement>;
    /// All field elements in canonical value order. Errors when the
    /// order exceeds `cap`.
    fn elements(&self, cap: u128) -> Result<Vec<FieldElement>>;
    /// Embed an element of the recorded base field into this field.
    fn embed(&self, e: &FieldElement) -> Result<FieldElement>;
}

impl FieldExt for Field {
    fn zero(&self) -> FieldElement {
        FieldElement {
            owner: self.clone(),
            coeffs: self.raw_zero(),
        }
    }

    fn one(&self) -> FieldElement {
        self.elt_from_u64(1)
    }

    fn gen(&self) -> FieldElement {
        let mut coeffs = self.raw_zero();
        if self.k > 1 {
            coeffs[1] = 1;
        }
        FieldElement {
            owner: self.clone(),
            coeffs,
        }
    }

    fn elt_from_u64(&self, c: u64) -> FieldElement {
        FieldElement {
            owner: self.clone(),
            coeffs: self.raw_from_u64(c),
        }
    }

    fn elt_from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.k {
            return Err(Error::Parse("too many coefficients for this field".into()));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::Parse("coefficient not reduced mod p".into()));
        }
        let mut full = self.raw_zero();
        full[..coeffs.len()].copy_from_slice(coeffs);
        Ok(FieldElement {
            owner: self.clone(),
            coeffs: full,
        })
    }

    fn elt_from_value(&self, v: u128) -> Result<FieldElement> {
        if v >= self.order() {
            return Err(Error::Parse("value out of range for this field".into()));
        }
        Ok(FieldElement {
            owner: self.clone(),
            coeffs: self.raw_from_value(v),
        })
    }

    fn elements(&self, cap: u128) -> Result<Vec<FieldElement>> {
        let q = self.order();
        if q > cap {
            return Err(Error::TooLarge);
        }
        Ok((0..q)
            .map(|v| FieldElement {
                owner: self.clone(),
                coeffs: self.raw_from_value(v),
            })
            .collect())
    }

    fn embed(&self, e: &FieldElement) -> Result<FieldElement> {
        let is_prime_constant =
            e.owner.p == self.p && e.coeffs.iter().skip(1).all(|&c| c == 0);
        match self.embedding() {
            Some(emb) if *emb.base == *e.owner => Ok(FieldElement {
                owner: self.clone(),
                coeffs: self.raw_embed(&e.coeffs),
            }),
            _ if **self == *e.owner => Ok(e.clone()),
            // Prime-subfield constants embed canonically into any field
            // of the same characteristic.
            _ if is_prime_constant => Ok(FieldElement {
                owner: self.clone(),
                coeffs: self.raw_from_u64(e.coeffs[0]),
            }),
            _ => Err(Error::OwnerMismatch),
        }
    }
}

impl FieldElement {
    pub fn owner(&self) -> &Field {
        &self.owner
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.owner.raw_is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs.iter().skip(1).all(|&c| c == 0)
    }

    /// Canonical integer value `sum c_i p^i`; fixes a deterministic
    /// ordering of field elements.
    pub fn value(&self) -> u128 {
        self.owner.raw_value(&self.coeffs)
    }

    fn check_owner(&self, other: &FieldElement) -> Result<()> {
        if *self.owner == *other.owner {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_owner(other)?;
        Ok(FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_add(&self.coeffs, &other.coeffs),
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_owner(other)?;
        Ok(FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_sub(&self.coeffs, &other.coeffs),
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_neg(&self.coeffs),
        }
    }

    /// Product reduced by the modulus.
    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_owner(other)?;
        Ok(FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_mul(&self.coeffs, &other.coeffs),
        })
    }

    /// Multiplicative inverse via extended Euclid on the coefficient
    /// polynomial and the modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_inv(&self.coeffs)?,
        })
    }

    pub fn pow(&self, e: u128) -> FieldElement {
        FieldElement {
            owner: self.owner.clone(),
            coeffs: self.owner.raw_pow(&self.coeffs, e),
        }
    }

    /// Frobenius `x -> x^p`.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.owner.p as u128)
    }

    /// Parse the `z^2+2*z+1` notation (a bare integer for prime fields).
    pub fn parse(field: &Field, input: &str) -> Result<FieldElement> {
        crate::textparse::parse_elem(field, input)
    }

    /// Smallest `n >= 1` with `self^n = 1`, computed by factoring
    /// `q - 1` and descending through prime cofactors.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let q = self.owner.order();
        if q - 1 > u64::MAX as u128 {
            return Err(Error::TooLarge);
        }
        let group = (q - 1) as u64;
        let mut order = group;
        for (&prime, &mult) in &arith::factor_u64(group) {
            for _ in 0..mult {
                if self.pow((order / prime) as u128).is_one() {
                    order /= prime;
                } else {
                    break;
                }
            }
        }
        debug_assert!(self.pow(order as u128).is_one());
        Ok(order)
    }
}

impl fmt::Display for FieldElement {
    /// Polynomial-in-generator notation, e.g. `z^2+2*z+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "z")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "z^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for FieldSpec {
    /// `GF(p)` for prime fields, `GF(p^k; modulus=...)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            return write!(f, "GF({})", self.p);
        }
        write!(f, "GF({}^{}; modulus=", self.p, self.k)?;
        let mut first = true;
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "z")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}*")?;
                    }
                    write!(f, "z^{i}")?;
                }
            }
        }
        write!(f, ")")
    }
}

// ---- helpers over the prime field (dense u64 vectors, trimmed) ----

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pf_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = alloc::vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = if x >= y { x - y } else { x + p - y };
    }
    trim(&mut out);
    out
}

fn pf_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return alloc::vec![];
    }
    let mut out = alloc::vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn pf_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = arith::powmod(b[db], p - 2, p);
    if rem.len() <= db {
        return (alloc::vec![], rem);
    }
    let mut quot = alloc::vec![0u64; rem.len() - db];
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = mulmod(rem[dr], lead_inv, p);
        quot[dr - db] = c;
        for (j, &bc) in b.iter().enumerate() {
            let idx = dr - db + j;
            let sub = mulmod(c, bc, p);
            rem[idx] = if rem[idx] >= sub {
                rem[idx] - sub
            } else {
                rem[idx] + p - sub
            };
        }
        trim(&mut rem);
    }
    (quot, rem)
}

/// Deterministic modulus search: the monic degree-`k` polynomial over
/// `F_p` whose non-leading coefficients encode the smallest base-`p`
/// integer among irreducibles.
fn smallest_irreducible(prime: &Field, k: usize) -> Result<Vec<u64>> {
    let p = prime.characteristic();
    let mut lower = 0u128;
    for attempt in 0..MODULUS_SEARCH_CAP {
        let _ = attempt;
        let mut coeffs = alloc::vec![0u64; k + 1];
        let mut v = lower;
        for slot in coeffs.iter_mut().take(k) {
            *slot = (v % p as u128) as u64;
            v /= p as u128;
        }
        if v > 0 {
            return Err(Error::SearchExhausted);
        }
        coeffs[k] = 1;
        let f = crate::poly::Poly::from_values(prime, &coeffs);
        if f.is_irreducible()? {
            return Ok(coeffs);
        }
        lower += 1;
    }
    Err(Error::SearchExhausted)
}

/// Factor a prime power `q = p^k`; errors when `q` is not a prime power.
pub fn prime_power_parts(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::NotPrime);
    }
    let factors = arith::factor_u64(q);
    if factors.len() != 1 {
        return Err(Error::NotPrime);
    }
    let (&p, &k) = factors.iter().next().unwrap();
    Ok((p, k as usize))
}

/// Canonical field of order `q = p^k`.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, k) = prime_power_parts(q)?;
    FieldSpec::canonical(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn gf(q: u64) -> Field {
        field_of_order(q).unwrap()
    }

    #[test]
    fn gf3_product_of_twos() {
        let f = gf(3);
        let two = f.elt_from_u64(2);
        assert!(two.mul(&two).unwrap().is_one());
    }

    #[test]
    fn gf4_generator_square() {
        // GF(4) = F_2[z]/(z^2+z+1): z*z = z+1.
        let f = gf(4);
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let z = f.gen();
        let sq = z.mul(&z).unwrap();
        assert_eq!(sq, f.elt_from_coeffs(&[1, 1]).unwrap());
    }

    #[test]
    fn one_is_identity() {
        for q in [2u64, 3, 4, 5, 8, 9, 27] {
            let f = gf(q);
            let one = f.one();
            for a in f.elements(64).unwrap() {
                assert_eq!(one.mul(&a).unwrap(), a);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        let f5 = gf(5);
        assert_eq!(f5.elt_from_u64(2).inv().unwrap(), f5.elt_from_u64(3));
        let f4 = gf(4);
        let z = f4.gen();
        // z(z+1) = z^2+z = 1 mod z^2+z+1.
        assert_eq!(z.inv().unwrap(), f4.elt_from_coeffs(&[1, 1]).unwrap());
        let f7 = gf(7);
        assert!(f7.one().inv().unwrap().is_one());
        assert_eq!(f7.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mult_order_examples() {
        let f5 = gf(5);
        // Brute-force oracle: successive powers of 2 are 2, 4, 3, 1.
        let two = f5.elt_from_u64(2);
        let mut acc = f5.one();
        let mut seen = Vec::new();
        for _ in 0..4 {
            acc = acc.mul(&two).unwrap();
            seen.push(acc.value());
        }
        assert_eq!(seen, [2, 4, 3, 1]);
        assert_eq!(two.mult_order().unwrap(), 4);

        let f7 = gf(7);
        let three = f7.elt_from_u64(3);
        let mut acc = f7.one();
        let mut n = 0;
        loop {
            acc = acc.mul(&three).unwrap();
            n += 1;
            if acc.is_one() {
                break;
            }
        }
        assert_eq!(n, 6);
        assert_eq!(three.mult_order().unwrap(), 6);
        assert_eq!(f7.one().mult_order().unwrap(), 1);
        assert_eq!(f7.zero().mult_order(), Err(Error::DivisionByZero));
    }

    #[test]
    fn owner_mismatch_fails_loudly() {
        let a = gf(5).one();
        let b = gf(7).one();
        assert_eq!(a.mul(&b), Err(Error::OwnerMismatch));
        assert_eq!(a.add(&b), Err(Error::OwnerMismatch));
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        // Associativity, distributivity, inverses by full enumeration.
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = gf(q);
            let elems = f.elements(64).unwrap();
            for a in &elems {
                if !a.is_zero() {
                    let ainv = a.inv().unwrap();
                    assert!(a.mul(&ainv).unwrap().is_one(), "inverse fails in GF({q})");
                }
                for b in &elems {
                    assert_eq!(a.mul(b).unwrap(), b.mul(a).unwrap());
                    for c in &elems {
                        let ab_c = a.mul(b).unwrap().mul(c).unwrap();
                        let a_bc = a.mul(&b.mul(c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc, "associativity fails in GF({q})");
                        let lhs = a.mul(&b.add(c).unwrap()).unwrap();
                        let rhs = a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs, "distributivity fails in GF({q})");
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_exactly_the_prime_field() {
        for q in [4u64, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = gf(q);
            let p = f.characteristic();
            let mut fixed = 0u64;
            for a in f.elements(64).unwrap() {
                // Frobenius is a ring homomorphism.
                let b = f.elt_from_value((a.value() + 1) % f.order()).unwrap();
                let sum_frob = a.add(&b).unwrap().frobenius();
                let frob_sum = a.frobenius().add(&b.frobenius()).unwrap();
                assert_eq!(sum_frob, frob_sum);
                let prod_frob = a.mul(&b).unwrap().frobenius();
                let frob_prod = a.frobenius().mul(&b.frobenius()).unwrap();
                assert_eq!(prod_frob, frob_prod);
                if a.frobenius() == a {
                    fixed += 1;
                    assert!(a.value() < p as u128, "fixed point outside prime field");
                }
            }
            assert_eq!(fixed, p, "fixed set of Frobenius in GF({q})");
        }
    }

    #[test]
    fn orders_divide_group_order() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = gf(q);
            for a in f.elements(64).unwrap() {
                if a.is_zero() {
                    continue;
                }
                let n = a.mult_order().unwrap();
                assert_eq!((q - 1) % n, 0, "order {n} does not divide {q}-1");
                assert!(a.pow(n as u128).is_one());
            }
        }
    }

    #[test]
    fn extension_of_prime_field_fixes_it() {
        let f2 = gf(2);
        let f4 = FieldSpec::extension(&f2, 2).unwrap();
        assert_eq!(f4.order(), 4);
        for c in [0u64, 1] {
            let up = f4.embed(&f2.elt_from_u64(c)).unwrap();
            assert_eq!(up.value(), c as u128);
        }
    }

    #[test]
    fn extension_preserves_orders() {
        let f3 = gf(3);
        let f9 = FieldSpec::extension(&f3, 2).unwrap();
        assert_eq!(f9.order(), 9);
        let two = f9.embed(&f3.elt_from_u64(2)).unwrap();
        assert_eq!(two.mult_order().unwrap(), 2);
        // Embedding is a ring homomorphism on the whole base field.
        for a in f3.elements(8).unwrap() {
            for b in f3.elements(8).unwrap() {
                let lhs = f9.embed(&a.mul(&b).unwrap()).unwrap();
                let rhs = f9.embed(&a).unwrap().mul(&f9.embed(&b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
                let lhs = f9.embed(&a.add(&b).unwrap()).unwrap();
                let rhs = f9.embed(&a).unwrap().add(&f9.embed(&b).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trivial_extension_is_identity() {
        let f4 = gf(4);
        let e = FieldSpec::extension(&f4, 1).unwrap();
        assert_eq!(*e, *f4);
        let z = f4.gen();
        assert_eq!(e.embed(&z).unwrap().value(), z.value());
    }

    #[test]
    fn splitting_count_in_extensions() {
        // x^(q^d) - x has exactly q^d roots in the degree-d extension:
        // every element is a root, and there is no room for more.
        for (q, dmax) in [(2u64, 6usize), (3, 4), (4, 3), (5, 2), (7, 2), (9, 2), (16, 1)] {
            let base = gf(q);
            for d in 1..=dmax {
                let ext = FieldSpec::extension(&base, d).unwrap();
                let qd = ext.order();
                let roots = ext
                    .elements(256)
                    .unwrap()
                    .into_iter()
                    .filter(|a| a.pow(qd) == *a)
                    .count();
                assert_eq!(roots as u128, qd, "GF({q}) extension degree {d}");
            }
        }
    }

    #[test]
    fn display_roundtrip_examples() {
        let f9 = gf(9);
        let e = f9.elt_from_coeffs(&[1, 2]).unwrap();
        assert_eq!(alloc::format!("{e}"), "2*z+1");
        assert_eq!(alloc::format!("{}", f9.zero()), "0");
        assert_eq!(alloc::format!("{}", gf(3)), "GF(3)");
        assert_eq!(alloc::format!("{f9}"), "GF(3^2; modulus=z^2+1)");
    }
}
