//! The fraction field `F_q(t)`: pairs of polynomials kept in lowest
//! terms with a monic denominator, so equality is coefficient equality.

use alloc::string::String;
use core::fmt;

use crate::gf::{Field, FieldElement};
use crate::poly::Poly;
use crate::{Error, Result};

/// An element of `F_q(t)` in canonical form: `gcd(num, den) = 1`, `den`
/// monic, and zero represented as `0/1`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl RatFunc {
    pub fn zero(field: &Field) -> RatFunc {
        RatFunc {
            num: Poly::zero(field),
            den: Poly::one(field),
        }
    }

    pub fn one(field: &Field) -> RatFunc {
        RatFunc {
            num: Poly::one(field),
            den: Poly::one(field),
        }
    }

    pub fn from_poly(p: &Poly) -> RatFunc {
        RatFunc {
            num: p.clone(),
            den: Poly::one(p.field()),
        }
    }

    pub fn from_parts(num: &Poly, den: &Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::reduced(num.clone(), den.clone())
    }

    fn reduced(num: Poly, den: Poly) -> Result<RatFunc> {
        if num.is_zero() {
            return Ok(RatFunc::zero(num.field()));
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let (den, lead) = den.monic()?;
        let num = num.scale(&lead.inv()?)?;
        Ok(RatFunc { num, den })
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one(self.num.field()) && self.den.is_constant()
    }

    /// True when the denominator is 1, i.e. the value lies in `A`.
    pub fn is_integral(&self) -> bool {
        self.den.deg() == Some(0)
    }

    /// The underlying polynomial when integral.
    pub fn as_poly(&self) -> Option<&Poly> {
        if self.is_integral() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// True when the value is a nonzero constant of `F_q`.
    pub fn constant_value(&self) -> Option<FieldElement> {
        if self.is_integral() && self.num.is_constant() && !self.num.is_zero() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc> {
        let a = self.num.mul(&other.den)?;
        let b = other.num.mul(&self.den)?;
        RatFunc::reduced(a.add(&b)?, self.den.mul(&other.den)?)
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc> {
        let a = self.num.mul(&other.den)?;
        let b = other.num.mul(&self.den)?;
        RatFunc::reduced(a.sub(&b)?, self.den.mul(&other.den)?)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::reduced(self.num.mul(&other.num)?, self.den.mul(&other.den)?)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::reduced(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, e: u128) -> Result<RatFunc> {
        let mut acc = RatFunc::one(self.field());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            if e > 1 {
                base = base.mul(&base)?;
            }
            e >>= 1;
        }
        Ok(acc)
    }

    /// Parse `p` or `p/q` with both sides in the polynomial format.
    pub fn parse(field: &Field, input: &str) -> Result<RatFunc> {
        match split_toplevel_slash(input) {
            Some((numer, denom)) => {
                let num = Poly::parse(field, numer)?;
                let den = Poly::parse(field, denom)?;
                RatFunc::from_parts(&num, &den)
            }
            None => Ok(RatFunc::from_poly(&Poly::parse(field, input)?)),
        }
    }
}

fn split_toplevel_slash(input: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in input.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => return Some((&input[..i], &input[i + 1..])),
            _ => {}
        }
    }
    None
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Render with an alternative variable name.
pub fn ratfunc_to_string_with_var(r: &RatFunc, var: &str) -> String {
    if r.is_integral() {
        crate::poly::poly_to_string_with_var(r.num(), var)
    } else {
        alloc::format!(
            "({})/({})",
            crate::poly::poly_to_string_with_var(r.num(), var),
            crate::poly::poly_to_string_with_var(r.den(), var)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    #[test]
    fn arithmetic_and_normalization() {
        let f3 = field_of_order(3).unwrap();
        let a = RatFunc::parse(&f3, "(t^2+2)/(t+1)").unwrap();
        // t^2 + 2 = t^2 - 1 = (t+1)(t+2) over GF(3), so this reduces.
        assert!(a.is_integral());
        assert_eq!(a.num(), &Poly::parse(&f3, "t+2").unwrap());

        let b = RatFunc::parse(&f3, "1/t").unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(alloc::format!("{sum}"), "(t^2+2*t+1)/(t)");
        let back = sum.sub(&b).unwrap();
        assert_eq!(back, a);

        let prod = b.mul(&b).unwrap();
        assert_eq!(alloc::format!("{prod}"), "(1)/(t^2)");
        assert!(prod.inv().unwrap().is_integral());
        assert!(RatFunc::zero(&f3).inv().is_err());
    }

    #[test]
    fn powers() {
        let f2 = field_of_order(2).unwrap();
        let t = RatFunc::parse(&f2, "t/(t+1)").unwrap();
        let t4 = t.pow(4).unwrap();
        assert_eq!(alloc::format!("{t4}"), "(t^4)/(t^4+1)");
        assert!(t.pow(0).unwrap().is_one());
    }
}
