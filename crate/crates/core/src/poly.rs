//! Dense univariate polynomials over a finite field, with division,
//! extended Euclid, Rabin irreducibility, and full factorization
//! (squarefree split, distinct-degree, then randomized equal-degree
//! splitting). Polynomials in `t` over `F_q` double as elements of
//! `A = F_q[t]`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::gf::{Coeffs, Field, FieldElement, FieldExt};
use crate::{Error, Result};

/// Polynomial degree with the `-∞` convention for the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense polynomial, constant term first, no trailing zero coefficient.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Coeffs>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(&field.one())
    }

    pub fn constant(c: &FieldElement) -> Poly {
        let mut p = Poly {
            field: c.owner().clone(),
            coeffs: alloc::vec![c.coeffs().iter().copied().collect()],
        };
        p.trim();
        p
    }

    /// The variable `t`.
    pub fn var(field: &Field) -> Poly {
        Poly::monomial(&field.one(), 1)
    }

    pub fn monomial(c: &FieldElement, deg: usize) -> Poly {
        let field = c.owner().clone();
        if c.is_zero() {
            return Poly::zero(&field);
        }
        let mut coeffs = alloc::vec![field.raw_zero(); deg + 1];
        coeffs[deg] = c.coeffs().iter().copied().collect();
        Poly { field, coeffs }
    }

    /// Polynomial with prime-subfield coefficient values (reduced mod p).
    pub fn from_values(field: &Field, values: &[u64]) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            coeffs: values.iter().map(|&v| field.raw_from_u64(v)).collect(),
        };
        p.trim();
        p
    }

    /// Polynomial with signed prime-subfield coefficient values.
    pub fn from_ivalues(field: &Field, values: &[i64]) -> Poly {
        let p = field.characteristic() as i64;
        let reduced: Vec<u64> = values.iter().map(|&v| (v.rem_euclid(p)) as u64).collect();
        Poly::from_values(field, &reduced)
    }

    pub fn from_elements(elems: &[FieldElement]) -> Result<Poly> {
        let field = match elems.first() {
            Some(e) => e.owner().clone(),
            None => return Err(Error::ZeroInput),
        };
        if elems.iter().any(|e| **e.owner() != *field) {
            return Err(Error::OwnerMismatch);
        }
        let mut p = Poly {
            field,
            coeffs: elems.iter().map(|e| e.coeffs().iter().copied().collect()).collect(),
        };
        p.trim();
        Ok(p)
    }

    pub(crate) fn from_raw(field: &Field, coeffs: Vec<Coeffs>) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map_or(false, |c| self.field.raw_is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        match self.coeffs.get(i) {
            Some(c) => self
                .field
                .elt_from_coeffs(c)
                .expect("stored coefficient is valid"),
            None => self.field.zero(),
        }
    }

    pub(crate) fn coeff_raw(&self, i: usize) -> Coeffs {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.raw_zero())
    }

    pub fn leading_coeff(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|c| {
            self.field
                .elt_from_coeffs(c)
                .expect("stored coefficient is valid")
        })
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff_raw(i);
            let b = other.coeff_raw(i);
            coeffs.push(self.field.raw_add(&a, &b));
        }
        Ok(Poly::from_raw(&self.field, coeffs))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeff_raw(i);
            let b = other.coeff_raw(i);
            coeffs.push(self.field.raw_sub(&a, &b));
        }
        Ok(Poly::from_raw(&self.field, coeffs))
    }

    pub fn neg(&self) -> Poly {
        Poly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| self.field.raw_neg(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut coeffs = alloc::vec![self.field.raw_zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.field.raw_is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if self.field.raw_is_zero(b) {
                    continue;
                }
                let prod = self.field.raw_mul(a, b);
                coeffs[i + j] = self.field.raw_add(&coeffs[i + j], &prod);
            }
        }
        Ok(Poly::from_raw(&self.field, coeffs))
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Poly> {
        if **c.owner() != *self.field {
            return Err(Error::OwnerMismatch);
        }
        let raw: Coeffs = c.coeffs().iter().copied().collect();
        Ok(Poly::from_raw(
            &self.field,
            self.coeffs.iter().map(|a| self.field.raw_mul(a, &raw)).collect(),
        ))
    }

    /// Multiply by `t^n`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = alloc::vec![self.field.raw_zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::from_raw(&self.field, coeffs)
    }

    /// Quotient and remainder with `deg r < deg g`.
    pub fn divmod(&self, g: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let lead_inv = self.field.raw_inv(g.coeffs.last().unwrap())?;
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![self.field.raw_zero(); rem.len() - dg];
        while rem.len() > dg {
            let last = rem.last().unwrap().clone();
            if self.field.raw_is_zero(&last) {
                rem.pop();
                continue;
            }
            let dr = rem.len() - 1;
            let c = self.field.raw_mul(&last, &lead_inv);
            quot[dr - dg] = c.clone();
            for (j, bc) in g.coeffs.iter().enumerate() {
                if self.field.raw_is_zero(bc) {
                    continue;
                }
                let sub = self.field.raw_mul(&c, bc);
                let idx = dr - dg + j;
                rem[idx] = self.field.raw_sub(&rem[idx], &sub);
            }
            rem.pop();
        }
        Ok((
            Poly::from_raw(&self.field, quot),
            Poly::from_raw(&self.field, rem),
        ))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        Ok(self.divmod(g)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, g: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(g)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotAFactorization)
        }
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic associate and the leading unit that was divided out.
    pub fn monic(&self) -> Result<(Poly, FieldElement)> {
        let lead = self.leading_coeff().ok_or(Error::ZeroInput)?;
        let inv = lead.inv()?;
        Ok((self.scale(&inv)?, lead))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic()?.0)
    }

    /// Extended Euclid: returns `(d, u, v)` with `d = gcd` monic and
    /// `u*self + v*other = d`.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = Poly::one(&self.field);
        let mut s1 = Poly::zero(&self.field);
        let mut t0 = Poly::zero(&self.field);
        let mut t1 = Poly::one(&self.field);
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = s0.sub(&q.mul(&s1)?)?;
            let t = t0.sub(&q.mul(&t1)?)?;
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let (d, lead) = r0.monic()?;
        let lead_inv = lead.inv()?;
        Ok((d, s0.scale(&lead_inv)?, t0.scale(&lead_inv)?))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| self.field.raw_scale(c, (i as u64) % p))
            .collect();
        Poly::from_raw(&self.field, coeffs)
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if **x.owner() != *self.field {
            return Err(Error::OwnerMismatch);
        }
        let raw: Coeffs = x.coeffs().iter().copied().collect();
        let mut acc = self.field.raw_zero();
        for c in self.coeffs.iter().rev() {
            acc = self.field.raw_mul(&acc, &raw);
            acc = self.field.raw_add(&acc, c);
        }
        self.field.elt_from_coeffs(&acc)
    }

    /// Embed every coefficient into `ext` (which must be an extension of
    /// this polynomial's field, or share its prime field on constants).
    pub fn lift_scalars(&self, ext: &Field) -> Result<Poly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for i in 0..self.coeffs.len() {
            let e = ext.embed(&self.coeff(i))?;
            coeffs.push(e.coeffs().iter().copied().collect());
        }
        Ok(Poly::from_raw(ext, coeffs))
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.field).rem(m)?;
        let mut base = self.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            base = base.mul(&base)?.rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let d = self.derivative();
        if d.is_zero() {
            return Ok(self.is_constant());
        }
        Ok(self.gcd(&d)?.is_constant())
    }

    /// Rabin irreducibility test.
    ///
    /// `f` of degree `n` is irreducible over `F_q` iff `x^(q^n) ≡ x`
    /// mod `f` and `gcd(x^(q^(n/r)) - x, f) = 1` for every prime `r | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            Degree::Finite(n) if n >= 1 => n,
            _ => return Err(Error::DegreeTooSmall),
        };
        if n == 1 {
            return Ok(true);
        }
        let (f, _) = self.monic()?;
        let q = self.field.order();
        let x = Poly::var(&self.field);
        // Iterated Frobenius: frob[j] = x^(q^j) mod f.
        let mut frob = x.rem(&f)?;
        let mut exponents_checked = alloc::vec![0usize];
        let proper: Vec<usize> = crate::arith::factor_u64(n as u64)
            .keys()
            .map(|&r| n / r as usize)
            .collect();
        for j in 1..=n {
            frob = frob.pow_mod(q, &f)?;
            exponents_checked.push(j);
            if proper.contains(&j) {
                let g = frob.sub(&x)?.gcd(&f)?;
                if !g.is_constant() {
                    return Ok(false);
                }
            }
            if j == n {
                return Ok(frob.sub(&x)?.rem(&f)?.is_zero());
            }
        }
        unreachable!()
    }

    /// Roots in the coefficient field, sorted by canonical value.
    pub fn roots(&self) -> Result<Vec<FieldElement>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        // Restrict to the product of degree-1 factors first.
        let q = self.field.order();
        let x = Poly::var(&self.field);
        let xq = x.pow_mod(q, self)?;
        let linear_part = xq.sub(&x)?.gcd(self)?;
        let mut out = Vec::new();
        for (factor, _) in factor_monic(&linear_part, 0)? {
            if factor.deg() == Some(1) {
                let (monic_f, _) = factor.monic()?;
                out.push(monic_f.coeff(0).neg());
            }
        }
        out.sort_by_key(|r| r.value());
        out.dedup();
        Ok(out)
    }

    /// Full factorization into monic irreducibles with multiplicities,
    /// plus the leading unit. Equal-degree splitting is randomized but
    /// seeded, so the result is reproducible; the factor list is sorted.
    pub fn factor(&self, seed: u64) -> Result<(FieldElement, Vec<(Poly, u32)>)> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let (monic, unit) = self.monic()?;
        let mut factors = factor_monic(&monic, seed)?;
        factors.sort_by(|(a, _), (b, _)| cmp_poly(a, b));
        Ok((unit, factors))
    }
}

/// Deterministic polynomial ordering: by degree, then coefficient values
/// from the top down.
pub(crate) fn cmp_poly(a: &Poly, b: &Poly) -> core::cmp::Ordering {
    let da = a.coeffs.len();
    let db = b.coeffs.len();
    da.cmp(&db).then_with(|| {
        for i in (0..da).rev() {
            let va = a.field.raw_value(&a.coeff_raw(i));
            let vb = b.field.raw_value(&b.coeff_raw(i));
            match va.cmp(&vb) {
                core::cmp::Ordering::Equal => continue,
                other => return other,
            }
        }
        core::cmp::Ordering::Equal
    })
}

fn factor_monic(f: &Poly, seed: u64) -> Result<Vec<(Poly, u32)>> {
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let field = f.field().clone();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p): take the p-th root and multiply multiplicities.
        let root = pth_root(f)?;
        let inner = factor_monic(&root, seed)?;
        return Ok(inner
            .into_iter()
            .map(|(g, m)| (g, m * field.characteristic() as u32))
            .collect());
    }
    let w = f.gcd(&deriv)?;
    let squarefree = f.div_exact(&w)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x706f6c79);
    let distinct = ddf_cz(&squarefree, &mut rng)?;
    let mut out = Vec::new();
    let mut rest = f.clone();
    for g in distinct {
        let mut mult = 0u32;
        loop {
            let (q, r) = rest.divmod(&g)?;
            if r.is_zero() {
                rest = q;
                mult += 1;
            } else {
                break;
            }
        }
        debug_assert!(mult >= 1);
        out.push((g, mult));
    }
    if !rest.is_constant() {
        // Every remaining factor has multiplicity divisible by p.
        out.extend(factor_monic(&rest, seed.wrapping_add(1))?);
    }
    Ok(out)
}

/// p-th root of a polynomial with vanishing derivative: `f = g(x^p)`
/// with the coefficients de-Frobeniused.
fn pth_root(f: &Poly) -> Result<Poly> {
    let field = f.field();
    let p = field.characteristic() as usize;
    let k = field.degree() as u32;
    // a^(p^(k-1)) inverts Frobenius in F_{p^k}.
    let inv_frob_exp = (0..k.saturating_sub(1)).fold(1u128, |acc, _| acc * p as u128);
    let mut coeffs = Vec::new();
    let d = f.deg().ok_or(Error::ZeroInput)?;
    for i in (0..=d).step_by(p) {
        let c = f.coeff(i);
        coeffs.push(c.pow(inv_frob_exp));
    }
    Poly::from_elements(&coeffs)
}

/// Distinct-degree then equal-degree factorization of a squarefree monic
/// polynomial; returns the monic irreducible factors.
fn ddf_cz(f: &Poly, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let field = f.field().clone();
    let q = field.order();
    let mut rest = f.clone();
    let x = Poly::var(&field);
    let mut frob = x.rem(&rest)?;
    let mut out = Vec::new();
    let mut d = 0usize;
    while let Some(n) = rest.deg() {
        if n == 0 {
            break;
        }
        d += 1;
        if 2 * d > n {
            out.push(rest.clone());
            break;
        }
        frob = frob.pow_mod(q, &rest)?;
        let g = frob.sub(&x)?.gcd(&rest)?;
        if !g.is_constant() {
            split_equal_degree(&g, d, rng, &mut out)?;
            rest = rest.div_exact(&g)?;
            frob = frob.rem(&rest)?;
        }
    }
    Ok(out)
}

/// Cantor–Zassenhaus equal-degree splitting: every irreducible factor of
/// `g` has degree `d`.
fn split_equal_degree(
    g: &Poly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let n = g.deg().expect("nonzero by construction");
    if n == d {
        out.push(g.clone());
        return Ok(());
    }
    let field = g.field().clone();
    let q = field.order();
    let odd = field.characteristic() != 2;
    loop {
        let t = random_poly_below(&field, n, rng);
        if t.is_constant() {
            continue;
        }
        let candidate = if odd {
            // T^((q^d - 1)/2) - 1, with the exponent split as
            // (1 + q + ... + q^(d-1)) * (q - 1)/2 to keep exponents small.
            let mut s = t.rem(g)?;
            for _ in 1..d {
                s = s.pow_mod(q, g)?.mul(&t)?.rem(g)?;
            }
            let u = s.pow_mod((q - 1) / 2, g)?;
            u.sub(&Poly::one(&field))?
        } else {
            // Trace map sum_{i<d*e} T^(2^i) for q = 2^e.
            let e = q.trailing_zeros() as usize + (q.count_ones() as usize - 1) * 0; // q = 2^e exactly
            let bits = 127 - q.leading_zeros() as usize;
            let _ = e;
            let mut acc = t.rem(g)?;
            let mut cur = t.rem(g)?;
            for _ in 1..(d * bits) {
                cur = cur.mul(&cur)?.rem(g)?;
                acc = acc.add(&cur)?;
            }
            acc
        };
        let w = candidate.gcd(g)?;
        if let Some(dw) = w.deg() {
            if dw > 0 && dw < n {
                split_equal_degree(&w, d, rng, out)?;
                split_equal_degree(&g.div_exact(&w)?, d, rng, out)?;
                return Ok(());
            }
        }
    }
}

fn random_poly_below(field: &Field, deg_bound: usize, rng: &mut ChaCha8Rng) -> Poly {
    let q = field.order();
    let values: Vec<u64> = (0..deg_bound)
        .map(|_| ((rng.next_u64() as u128) % q) as u64)
        .collect();
    let elems: Vec<FieldElement> = values
        .iter()
        .map(|&v| {
            field
                .elt_from_value(v as u128)
                .expect("value below field order")
        })
        .collect();
    Poly::from_elements(&elems).unwrap_or_else(|_| Poly::zero(field))
}

impl fmt::Display for Poly {
    /// Text format `t^2+2*t+1`; extension-field coefficients are
    /// parenthesized, e.g. `(z+1)*t^2+z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, "t")
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly, var: &str) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let prime = p.field.degree() == 1;
    let mut first = true;
    for i in (0..p.coeffs.len()).rev() {
        let c = p.coeff(i);
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, "+")?;
        }
        first = false;
        let coeff_str = if prime {
            alloc::format!("{}", c.value())
        } else {
            alloc::format!("({c})")
        };
        match i {
            0 => write!(f, "{coeff_str}")?,
            1 => {
                if c.is_one() {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{coeff_str}*{var}")?;
                }
            }
            _ => {
                if c.is_one() {
                    write!(f, "{var}^{i}")?;
                } else {
                    write!(f, "{coeff_str}*{var}^{i}")?;
                }
            }
        }
    }
    Ok(())
}

/// Render with an alternative variable name (used for the `1/t` twist).
pub fn poly_to_string_with_var(p: &Poly, var: &str) -> String {
    struct WithVar<'a>(&'a Poly, &'a str);
    impl fmt::Display for WithVar<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_poly(f, self.0, self.1)
        }
    }
    alloc::format!("{}", WithVar(p, var))
}

impl Poly {
    /// Parse the `t^2+2*t+1` format. The generator `z` of a non-prime
    /// coefficient field may appear in parenthesized coefficients.
    pub fn parse(field: &Field, input: &str) -> Result<Poly> {
        crate::textparse::parse_poly(field, input, "t")
    }

    pub fn parse_with_var(field: &Field, input: &str, var: &str) -> Result<Poly> {
        crate::textparse::parse_poly(field, input, var)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    fn gf(q: u64) -> Field {
        field_of_order(q).unwrap()
    }

    fn p(field: &Field, s: &str) -> Poly {
        Poly::parse(field, s).unwrap()
    }

    #[test]
    fn divmod_examples() {
        let f3 = gf(3);
        let (q, r) = p(&f3, "t^2+t").divmod(&p(&f3, "t")).unwrap();
        assert_eq!(q, p(&f3, "t+1"));
        assert!(r.is_zero());

        let f2 = gf(2);
        let (q, r) = p(&f2, "t^3+1").divmod(&p(&f2, "t+1")).unwrap();
        assert_eq!(q, p(&f2, "t^2+t+1"));
        assert!(r.is_zero());

        let f = p(&f3, "2*t^4+t+1");
        let (q, r) = f.divmod(&Poly::one(&f3)).unwrap();
        assert_eq!(q, f);
        assert!(r.is_zero());

        assert_eq!(
            f.divmod(&Poly::zero(&f3)).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn xgcd_examples() {
        let f3 = gf(3);
        let (d, u, v) = p(&f3, "t").xgcd(&p(&f3, "t+1")).unwrap();
        assert!(d.is_one_poly());
        let lhs = u.mul(&p(&f3, "t")).unwrap().add(&v.mul(&p(&f3, "t+1")).unwrap()).unwrap();
        assert_eq!(lhs, d);

        // (f, 0) -> (monic f, lc^-1, 0).
        let f = p(&f3, "2*t^2+1");
        let (d, u, v) = f.xgcd(&Poly::zero(&f3)).unwrap();
        assert_eq!(d, p(&f3, "t^2+2"));
        assert!(v.is_zero());
        assert_eq!(u.mul(&f).unwrap(), d);

        // Over GF(2), gcd(t^2+1, t^2+1) = (t+1)^2.
        let f2 = gf(2);
        let g = p(&f2, "t^2+1");
        let (d, _, _) = g.xgcd(&g).unwrap();
        assert_eq!(d, p(&f2, "t^2+1"));
        assert_eq!(d, p(&f2, "t+1").mul(&p(&f2, "t+1")).unwrap());

        assert_eq!(
            Poly::zero(&f2).xgcd(&Poly::zero(&f2)).unwrap_err(),
            Error::UndefinedGcd
        );
    }

    impl Poly {
        fn is_one_poly(&self) -> bool {
            self.deg() == Some(0) && self.coeff(0).is_one()
        }
    }

    /// Trial-division irreducibility oracle for small degrees.
    fn irreducible_by_trial_division(f: &Poly) -> bool {
        let n = f.deg().unwrap();
        if n == 1 {
            return true;
        }
        let field = f.field().clone();
        let q = field.order() as u64;
        for d in 1..=n / 2 {
            // All monic polynomials of degree d.
            let count = (q as u128).pow(d as u32);
            for v in 0..count {
                let mut vals = alloc::vec![0u64; d + 1];
                let mut x = v;
                for slot in vals.iter_mut().take(d) {
                    *slot = (x % q as u128) as u64;
                    x /= q as u128;
                }
                vals[d] = 1;
                let g = Poly::from_values(&field, &vals);
                if g.divides(f).unwrap() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_examples() {
        let f2 = gf(2);
        assert!(p(&f2, "t^3+t+1").is_irreducible().unwrap());
        assert!(!p(&f2, "t^2+1").is_irreducible().unwrap());
        let f3 = gf(3);
        assert!(p(&f3, "t^2+1").is_irreducible().unwrap());
        assert_eq!(
            Poly::one(&f3).is_irreducible().unwrap_err(),
            Error::DegreeTooSmall
        );
    }

    #[test]
    fn irreducibility_agrees_with_trial_division() {
        for q in [2u64, 3] {
            let field = gf(q);
            for deg in 1..=4usize {
                let count = (q as u128).pow(deg as u32);
                for v in 0..count {
                    let mut vals = alloc::vec![0u64; deg + 1];
                    let mut x = v;
                    for slot in vals.iter_mut().take(deg) {
                        *slot = (x % q as u128) as u64;
                        x /= q as u128;
                    }
                    vals[deg] = 1;
                    let f = Poly::from_values(&field, &vals);
                    assert_eq!(
                        f.is_irreducible().unwrap(),
                        irreducible_by_trial_division(&f),
                        "disagreement at q={q}, f={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f3 = gf(3);
        // x^2 - 1 = (x+1)(x+2) over GF(3).
        let (unit, factors) = p(&f3, "t^2+2").factor(0).unwrap();
        assert!(unit.is_one());
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, p(&f3, "t+1"));
        assert_eq!(factors[1].0, p(&f3, "t+2"));

        let f2 = gf(2);
        let (_, factors) = p(&f2, "t^3+t+1").factor(0).unwrap();
        assert_eq!(factors, alloc::vec![(p(&f2, "t^3+t+1"), 1)]);

        let (_, factors) = p(&f2, "t^2").factor(0).unwrap();
        assert_eq!(factors, alloc::vec![(p(&f2, "t"), 2)]);
    }

    #[test]
    fn factor_reassembles_randomized() {
        use rand_core::{RngCore, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut tested = 0u32;
        while tested < 1000 {
            let q = [2u64, 3, 4, 5][(rng.next_u64() % 4) as usize];
            let field = gf(q);
            let deg = 1 + (rng.next_u64() % 12) as usize;
            let mut vals: Vec<u64> = (0..=deg).map(|_| rng.next_u64() % q).collect();
            if vals[deg] == 0 {
                vals[deg] = 1;
            }
            let f = Poly::from_values(&field, &vals);
            if f.is_zero() || f.is_constant() {
                continue;
            }
            tested += 1;
            let (unit, factors) = f.factor(tested as u64).unwrap();
            let mut back = Poly::constant(&unit);
            for (g, m) in &factors {
                assert!(g.is_monic());
                assert!(g.is_irreducible().unwrap(), "non-irreducible factor {g}");
                for _ in 0..*m {
                    back = back.mul(g).unwrap();
                }
            }
            assert_eq!(back, f, "reassembly failed for {f} over GF({q})");
        }
    }

    #[test]
    fn factor_over_extension_field() {
        // t^2+t+1 = (t+z)(t+z^2) over GF(4) since z, z^2 are the cube
        // roots of unity.
        let f4 = gf(4);
        let f = p(&f4, "t^2+t+1");
        let (_, factors) = f.factor(0).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(g, m)| g.deg() == Some(1) && *m == 1));
        let back = factors[0].0.mul(&factors[1].0).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn roots_sorted_and_complete() {
        let f5 = gf(5);
        // (t-1)(t-2)(t-3) = t^3 + 4t^2 + t + 4... compute directly.
        let f = p(&f5, "t+4").mul(&p(&f5, "t+3")).unwrap().mul(&p(&f5, "t+2")).unwrap();
        let roots = f.roots().unwrap();
        let values: Vec<u128> = roots.iter().map(|r| r.value()).collect();
        assert_eq!(values, alloc::vec![1, 2, 3]);
    }

    #[test]
    fn display_parse_roundtrip() {
        let f3 = gf(3);
        for s in ["t^2+2*t+1", "2*t^5+t^3+2", "t", "1", "0"] {
            let f = p(&f3, s);
            assert_eq!(alloc::format!("{f}"), s);
        }
        let f4 = gf(4);
        let f = p(&f4, "(z+1)*t^2+z");
        assert_eq!(alloc::format!("{f}"), "(z+1)*t^2+(z)");
        assert_eq!(p(&f4, "(z+1)*t^2+(z)"), f);
    }
}
