//! Polynomials in `x` with coefficients in `A = F_q[t]`, i.e. elements
//! of `A[x]`, together with the primitivity, Eisenstein, and
//! coefficient-degree bound utilities used to certify irreducibility
//! over `F_q(t)` and to audit factorizations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::gf::{Field, FieldExt};
use crate::poly::{cmp_poly, Degree, Poly};
use crate::ratfunc::RatFunc;
use crate::{Error, Result};

/// Dense polynomial in `x` over `A = F_q[t]`; `coeffs[i]` is the
/// t-polynomial coefficient of `x^i`, with no trailing zero.
#[derive(Clone, PartialEq, Eq)]
pub struct BivarPoly {
    field: Field,
    coeffs: Vec<Poly>,
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl BivarPoly {
    pub fn zero(field: &Field) -> BivarPoly {
        BivarPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> BivarPoly {
        BivarPoly::constant(&Poly::one(field))
    }

    pub fn constant(c: &Poly) -> BivarPoly {
        let mut p = BivarPoly {
            field: c.field().clone(),
            coeffs: alloc::vec![c.clone()],
        };
        p.trim();
        p
    }

    pub fn var_x(field: &Field) -> BivarPoly {
        BivarPoly {
            field: field.clone(),
            coeffs: alloc::vec![Poly::zero(field), Poly::one(field)],
        }
    }

    pub fn monomial(c: &Poly, xdeg: usize) -> BivarPoly {
        let field = c.field().clone();
        if c.is_zero() {
            return BivarPoly::zero(&field);
        }
        let mut coeffs = alloc::vec![Poly::zero(&field); xdeg + 1];
        coeffs[xdeg] = c.clone();
        BivarPoly { field, coeffs }
    }

    pub fn from_coeffs(field: &Field, coeffs: Vec<Poly>) -> Result<BivarPoly> {
        if coeffs.iter().any(|c| **c.field() != **field) {
            return Err(Error::OwnerMismatch);
        }
        let mut p = BivarPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        Ok(p)
    }

    /// Coefficients given as integer matrices: `values[i]` holds the
    /// signed prime-subfield coefficients of the t-polynomial at `x^i`.
    pub fn from_ivalues(field: &Field, values: &[Vec<i64>]) -> BivarPoly {
        let coeffs = values
            .iter()
            .map(|v| Poly::from_ivalues(field, v))
            .collect();
        let mut p = BivarPoly {
            field: field.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn xdegree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInfinity
        } else {
            Degree::Finite(self.coeffs.len() - 1)
        }
    }

    pub fn xdeg(&self) -> Option<usize> {
        self.xdegree().finite()
    }

    pub fn coeff_x(&self, i: usize) -> Poly {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.field))
    }

    pub fn coeffs_x(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn leading_x(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    /// Monic as a polynomial in `x`.
    pub fn is_monic_x(&self) -> bool {
        self.leading_x()
            .map_or(false, |c| c.deg() == Some(0) && c.coeff(0).is_one())
    }

    pub fn is_constant_x(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Max t-degree over the nonzero x-coefficients.
    pub fn max_coeff_tdeg(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.deg()).max()
    }

    fn check_field(&self, other: &BivarPoly) -> Result<()> {
        if *self.field == *other.field {
            Ok(())
        } else {
            Err(Error::OwnerMismatch)
        }
    }

    pub fn add(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff_x(i).add(&other.coeff_x(i))?);
        }
        BivarPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn sub(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff_x(i).sub(&other.coeff_x(i))?);
        }
        BivarPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn neg(&self) -> BivarPoly {
        BivarPoly {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(BivarPoly::zero(&self.field));
        }
        let mut coeffs = alloc::vec![Poly::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        BivarPoly::from_coeffs(&self.field, coeffs)
    }

    pub fn scale_poly(&self, c: &Poly) -> Result<BivarPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul(c)?);
        }
        BivarPoly::from_coeffs(&self.field, coeffs)
    }

    /// Quotient and remainder in `x`; requires the divisor's leading
    /// x-coefficient to be a unit of `A` (a nonzero constant), which is
    /// the case for every monic-in-`x` divisor this crate produces.
    pub fn divmod_x(&self, g: &BivarPoly) -> Result<(BivarPoly, BivarPoly)> {
        self.check_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lead = g.leading_x().unwrap();
        if lead.deg() != Some(0) {
            return Err(Error::PreconditionFailed(
                "divisor leading x-coefficient must be a unit of A".into(),
            ));
        }
        let lead_inv = Poly::constant(&lead.coeff(0).inv()?);
        let dg = g.coeffs.len() - 1;
        let mut rem: Vec<Poly> = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((BivarPoly::zero(&self.field), self.clone()));
        }
        let mut quot = alloc::vec![Poly::zero(&self.field); rem.len() - dg];
        while rem.len() > dg {
            if rem.last().unwrap().is_zero() {
                rem.pop();
                continue;
            }
            let dr = rem.len() - 1;
            let c = rem[dr].mul(&lead_inv)?;
            quot[dr - dg] = c.clone();
            for (j, bc) in g.coeffs.iter().enumerate() {
                if bc.is_zero() {
                    continue;
                }
                let idx = dr - dg + j;
                rem[idx] = rem[idx].sub(&c.mul(bc)?)?;
            }
            rem.pop();
        }
        Ok((
            BivarPoly::from_coeffs(&self.field, quot)?,
            BivarPoly::from_coeffs(&self.field, rem)?,
        ))
    }

    /// Exact division in `A[x]` for an arbitrary nonzero divisor: every
    /// elimination step must divide exactly in `A`, otherwise the
    /// division fails with [`Error::NotAFactorization`].
    pub fn div_exact_x(&self, g: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dg = g.coeffs.len() - 1;
        let lead = g.leading_x().unwrap();
        let mut rem: Vec<Poly> = self.coeffs.clone();
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        if rem.is_empty() {
            return Ok(BivarPoly::zero(&self.field));
        }
        if rem.len() <= dg {
            return Err(Error::NotAFactorization);
        }
        let mut quot = alloc::vec![Poly::zero(&self.field); rem.len() - dg];
        while rem.len() > dg {
            if rem.last().unwrap().is_zero() {
                rem.pop();
                continue;
            }
            let dr = rem.len() - 1;
            let c = rem[dr].div_exact(lead)?;
            quot[dr - dg] = c.clone();
            for (j, bc) in g.coeffs.iter().enumerate() {
                if bc.is_zero() {
                    continue;
                }
                let idx = dr - dg + j;
                rem[idx] = rem[idx].sub(&c.mul(bc)?)?;
            }
            rem.pop();
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotAFactorization);
        }
        BivarPoly::from_coeffs(&self.field, quot)
    }

    /// Derivative with respect to `x`.
    pub fn derivative_x(&self) -> BivarPoly {
        if self.coeffs.len() <= 1 {
            return BivarPoly::zero(&self.field);
        }
        let p = self.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                c.scale(&self.field.elt_from_u64((i as u64) % p))
                    .expect("same field")
            })
            .collect();
        BivarPoly {
            field: self.field.clone(),
            coeffs,
        }
        .trimmed()
    }

    fn trimmed(mut self) -> BivarPoly {
        self.trim();
        self
    }

    /// Substitute a rational function for `x`.
    pub fn eval_rat(&self, beta: &RatFunc) -> Result<RatFunc> {
        let mut acc = RatFunc::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(beta)?.add(&RatFunc::from_poly(c))?;
        }
        Ok(acc)
    }

    /// Substitute an element of `A` for `x`.
    pub fn eval_poly(&self, beta: &Poly) -> Result<Poly> {
        let mut acc = Poly::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(beta)?.add(c)?;
        }
        Ok(acc)
    }

    /// Content: the monic gcd over `A` of the x-coefficients.
    pub fn content(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let mut g = Poly::zero(&self.field);
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.clone() } else { g.gcd(c)? };
            if g.deg() == Some(0) {
                break;
            }
        }
        Ok(g.monic()?.0)
    }

    /// `(content == 1, content)`.
    pub fn primitive_check(&self) -> Result<(bool, Poly)> {
        let c = self.content()?;
        Ok((c.deg() == Some(0), c))
    }

    /// Eisenstein criterion at the prime `pi` of `A`: `pi` does not
    /// divide the leading x-coefficient, divides every other
    /// x-coefficient, and `pi^2` does not divide the constant one.
    pub fn eisenstein_check(&self, pi: &Poly) -> Result<bool> {
        if !pi.is_irreducible()? {
            return Err(Error::NotPrime);
        }
        let n = match self.xdeg() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::DegreeTooSmall),
        };
        if pi.divides(&self.coeff_x(n))? {
            return Ok(false);
        }
        for i in 0..n {
            if !pi.divides(&self.coeff_x(i))? {
                return Ok(false);
            }
        }
        let pi2 = pi.mul(pi)?;
        Ok(!pi2.divides(&self.coeff_x(0))?)
    }

    /// Embed the coefficient field into an extension.
    pub fn lift_scalars(&self, ext: &Field) -> Result<BivarPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.lift_scalars(ext)?);
        }
        BivarPoly::from_coeffs(ext, coeffs)
    }

    /// Primitive gcd in `F_q(t)[x]` via a primitive pseudo-remainder
    /// sequence; the result is primitive with monic leading t-poly.
    pub fn gcd_x(&self, other: &BivarPoly) -> Result<BivarPoly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let mut a = self.primitive_part()?;
        let mut b = other.primitive_part()?;
        if a.is_zero() {
            return Ok(b);
        }
        while !b.is_zero() {
            // A nonzero constant-in-x operand is a unit of F_q(t)[x].
            if b.is_constant_x() {
                return Ok(BivarPoly::one(&self.field));
            }
            let r = a.pseudo_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part()? };
        }
        a.primitive_part()
    }

    /// Divide out the content and normalize the leading x-coefficient to
    /// be monic in `t`.
    pub fn primitive_part(&self) -> Result<BivarPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let content = self.content()?;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.div_exact(&content)?);
        }
        let mut p = BivarPoly::from_coeffs(&self.field, out)?;
        let lead_unit = p.leading_x().unwrap().leading_coeff().unwrap();
        if !lead_unit.is_one() {
            let inv = Poly::constant(&lead_unit.inv()?);
            p = p.scale_poly(&inv)?;
        }
        Ok(p)
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) * f mod g` computed
    /// without leaving `A[x]`.
    fn pseudo_rem(&self, g: &BivarPoly) -> Result<BivarPoly> {
        let dg = g.xdeg().ok_or(Error::DivisionByZero)?;
        let lead = g.leading_x().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.xdeg() {
            if dr < dg {
                break;
            }
            let c = r.leading_x().unwrap().clone();
            // r <- lc(g) * r - c * x^(dr-dg) * g
            r = r.scale_poly(&lead)?;
            let sub = BivarPoly::monomial(&c, dr - dg).mul(g)?;
            r = r.sub(&sub)?;
            if r.xdeg() == Some(dr) {
                return Err(Error::Internal("pseudo-division failed to reduce degree".into()));
            }
        }
        Ok(r)
    }

    /// Separable as a polynomial in `x` over `F_q(t)`.
    pub fn is_separable_x(&self) -> Result<bool> {
        let n = match self.xdeg() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::DegreeTooSmall),
        };
        let _ = n;
        let d = self.derivative_x();
        if d.is_zero() {
            return Ok(false);
        }
        Ok(self.gcd_x(&d)?.is_constant_x())
    }

    pub fn parse(field: &Field, input: &str) -> Result<BivarPoly> {
        crate::textparse::parse_bivar(field, input)
    }
}

impl fmt::Display for BivarPoly {
    /// Text format `x^2 + (t)*x + (t+1)` with parenthesized
    /// t-coefficients; coefficient 1 on an x-power is omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_one = c.deg() == Some(0) && c.coeff(0).is_one();
            match i {
                0 => write!(f, "({c})")?,
                1 => {
                    if is_one {
                        write!(f, "x")?;
                    } else {
                        write!(f, "({c})*x")?;
                    }
                }
                _ => {
                    if is_one {
                        write!(f, "x^{i}")?;
                    } else {
                        write!(f, "({c})*x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Uniform degree bound for coefficients of any factor of a primitive
/// polynomial in `A[x]` of x-degree `n >= 2` whose coefficients have
/// t-degree at most `M`: `floor(M * (2n - 1) / n)`.
pub fn newton_factor_bound(m: usize, n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::DegreeTooSmall);
    }
    Ok(m * (2 * n - 1) / n)
}

/// One audited coefficient in a [`FactorBoundReport`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct FactorBoundEntry {
    /// Which factor the coefficient belongss to: "F" or "G".
    pub factor: &'static str,
    pub x_index: usize,
    /// t-degree of the coefficient; `None` for a zero coefficient.
    pub tdeg: Option<usize>,
    pub within_bound: bool,
}

/// Outcome of auditing a factorization `P = F * G` against the
/// coefficient-degree bound.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct FactorBoundReport {
    /// Max coefficient t-degree of `P`.
    pub coeff_degree_cap: usize,
    /// x-degree of `P`.
    pub x_degree: usize,
    /// The uniform bound `floor(M(2n-1)/n)`.
    pub bound: usize,
    pub entries: Vec<FactorBoundEntry>,
    pub pass: bool,
}

/// Check `P = F * G`, `P` primitive, and record whether every
/// coefficient t-degree of `F` and `G` obeys the uniform bound.
pub fn verify_factor_bound(
    p: &BivarPoly,
    f: &BivarPoly,
    g: &BivarPoly,
) -> Result<FactorBoundReport> {
    if f.mul(g)? != *p {
        return Err(Error::NotAFactorization);
    }
    let (primitive, _) = p.primitive_check()?;
    if !primitive {
        return Err(Error::NotPrimitive);
    }
    let n = p.xdeg().ok_or(Error::ZeroInput)?;
    let m = p.max_coeff_tdeg().ok_or(Error::ZeroInput)?;
    let bound = newton_factor_bound(m, n)?;
    let mut entries = Vec::new();
    let mut pass = true;
    for (name, poly) in [("F", f), ("G", g)] {
        for i in 0..=poly.xdeg().unwrap_or(0) {
            let tdeg = poly.coeff_x(i).deg();
            let within = tdeg.map_or(true, |d| d <= bound);
            pass &= within;
            entries.push(FactorBoundEntry {
                factor: name,
                x_index: i,
                tdeg,
                within_bound: within,
            });
        }
    }
    Ok(FactorBoundReport {
        coeff_degree_cap: m,
        x_degree: n,
        bound,
        entries,
        pass,
    })
}

/// How irreducibility over `F_q(t)` was certified (or refuted).
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub enum IrreducibilityOutcome {
    /// x-degree 1.
    IrreducibleLinear,
    /// Eisenstein at the recorded prime of `A`.
    IrreducibleEisenstein { at: String },
    /// x-degree 2 or 3 with no root in `F_q(t)`.
    IrreducibleNoRationalRoot,
    /// An explicit factorization was found; both factors rendered.
    Reducible { factor_a: String, factor_b: String },
    /// No supported certificate applies.
    Unknown,
}

impl IrreducibilityOutcome {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            IrreducibilityOutcome::IrreducibleLinear
            | IrreducibilityOutcome::IrreducibleEisenstein { .. }
            | IrreducibilityOutcome::IrreducibleNoRationalRoot => Some(true),
            IrreducibilityOutcome::Reducible { .. } => Some(false),
            IrreducibilityOutcome::Unknown => None,
        }
    }
}

/// Certificate-based irreducibility over `F_q(t)` for a primitive
/// polynomial: linear degree, Eisenstein at a prime dividing the lower
/// coefficients, or (for x-degree <= 3) the rational-root test over the
/// UFD `A`. Returns the explicit factors when reducibility is found.
pub fn certify_irreducible(p: &BivarPoly, seed: u64) -> Result<(IrreducibilityOutcome, Option<(BivarPoly, BivarPoly)>)> {
    let n = match p.xdeg() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::DegreeTooSmall),
    };
    let (primitive, _) = p.primitive_check()?;
    if !primitive {
        return Err(Error::NotPrimitive);
    }
    if n == 1 {
        return Ok((IrreducibilityOutcome::IrreducibleLinear, None));
    }
    // Root at zero: constant coefficient vanishes.
    if p.coeff_x(0).is_zero() {
        let x = BivarPoly::var_x(p.field());
        let cofactor = p.div_exact_x(&x)?;
        return Ok((
            IrreducibilityOutcome::Reducible {
                factor_a: alloc::format!("{x}"),
                factor_b: alloc::format!("{cofactor}"),
            },
            Some((x, cofactor)),
        ));
    }
    // Eisenstein candidates: prime factors of the gcd of the lower
    // x-coefficients.
    let mut lower_gcd = Poly::zero(p.field());
    for i in 0..n {
        let c = p.coeff_x(i);
        if c.is_zero() {
            continue;
        }
        lower_gcd = if lower_gcd.is_zero() { c } else { lower_gcd.gcd(&c)? };
    }
    if let Some(d) = lower_gcd.deg() {
        if d >= 1 {
            let (_, factors) = lower_gcd.factor(seed)?;
            for (pi, _) in &factors {
                if p.eisenstein_check(pi)? {
                    return Ok((
                        IrreducibilityOutcome::IrreducibleEisenstein {
                            at: alloc::format!("{pi}"),
                        },
                        None,
                    ));
                }
            }
        }
    }
    if n <= 3 {
        match rational_root(p, seed)? {
            Some(linear) => {
                let cofactor = p.div_exact_x(&linear)?;
                return Ok((
                    IrreducibilityOutcome::Reducible {
                        factor_a: alloc::format!("{linear}"),
                        factor_b: alloc::format!("{cofactor}"),
                    },
                    Some((linear, cofactor)),
                ));
            }
            None => return Ok((IrreducibilityOutcome::IrreducibleNoRationalRoot, None)),
        }
    }
    Ok((IrreducibilityOutcome::Unknown, None))
}

/// Search for a root `c*u/v` of a primitive `p` in `F_q(t)`, with `u`
/// a monic divisor of the constant coefficient, `v` a monic divisor of
/// the leading one, and `c` a unit. Returns the corresponding primitive
/// linear factor `v*x - c*u` when found.
fn rational_root(p: &BivarPoly, seed: u64) -> Result<Option<BivarPoly>> {
    let field = p.field().clone();
    let n = p.xdeg().ok_or(Error::ZeroInput)?;
    let a0 = p.coeff_x(0);
    let an = p.coeff_x(n);
    debug_assert!(!a0.is_zero());
    let divisors_u = monic_divisors(&a0, seed)?;
    let divisors_v = monic_divisors(&an, seed)?;
    let units: Vec<_> = (1..field.order().min(1 << 20))
        .map(|v| field.elt_from_value(v).expect("unit below order"))
        .collect();
    for u in &divisors_u {
        for v in &divisors_v {
            if u.gcd(v)?.deg() != Some(0) {
                continue;
            }
            for c in &units {
                // Root cu/v: check sum a_i (cu)^i v^(n-i) = 0.
                let cu = u.scale(c)?;
                let mut acc = Poly::zero(&field);
                let mut cu_pow = Poly::one(&field);
                let mut v_pows = alloc::vec![Poly::one(&field)];
                for _ in 0..n {
                    v_pows.push(v_pows.last().unwrap().mul(v)?);
                }
                for i in 0..=n {
                    let term = p.coeff_x(i).mul(&cu_pow)?.mul(&v_pows[n - i])?;
                    acc = acc.add(&term)?;
                    if i < n {
                        cu_pow = cu_pow.mul(&cu)?;
                    }
                }
                if acc.is_zero() {
                    let linear = BivarPoly::from_coeffs(
                        &field,
                        alloc::vec![cu.neg(), v.clone()],
                    )?;
                    return Ok(Some(linear));
                }
            }
        }
    }
    Ok(None)
}

/// All monic divisors of a nonzero polynomial, from its factorization.
fn monic_divisors(f: &Poly, seed: u64) -> Result<Vec<Poly>> {
    let (_, factors) = f.factor(seed)?;
    let field = f.field().clone();
    let mut divisors = alloc::vec![Poly::one(&field)];
    for (g, mult) in &factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*mult {
                acc = acc.mul(g)?;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by(cmp_poly);
    divisors.dedup();
    Ok(divisors)
}
