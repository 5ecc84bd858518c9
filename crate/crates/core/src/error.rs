use alloc::string::String;
use core::fmt;

/// Errors raised by precondition violations across the crate.
///
/// Operations fail loudly rather than coercing: mixing elements of
/// different fields, inverting zero, or exceeding an enumeration cap all
/// surface as a dedicated variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Two elements do not share an owning field.
    OwnerMismatch,
    /// Division or inversion of zero, or an order of zero.
    DivisionByZero,
    /// An internal deterministic search ran past its attempt cap.
    SearchExhausted,
    /// gcd(0, 0) requested.
    UndefinedGcd,
    /// The input degree is below what the operation requires.
    DegreeTooSmall,
    /// A polynomial that must be irreducible is not.
    NotPrime,
    /// The claimed factorization does not multiply out to the product.
    NotAFactorization,
    /// The polynomial has nontrivial content in `A`.
    NotPrimitive,
    /// Zero input where a nonzero polynomial is required.
    ZeroInput,
    /// A composite modulus was passed where only prime powers are
    /// presented directly; build the compositum record instead.
    UseCompositum,
    /// An enumeration exceeds the configured cap.
    TooLarge,
    /// The given subset is not closed under the group operation.
    NotASubgroup,
    /// `n` does not divide the required group order.
    NotADivisor,
    /// The factor-pattern oracle does not apply to ramified primes.
    RamifiedCase,
    /// Wild or inseparable Kummer data; only the tame case is supported.
    WildOrInseparableCase,
    /// The leading coefficient of an integer-specified family vanished at
    /// some index.
    DegeneratedLeadingCoefficient,
    /// No shadow family exists: irreducibility fails on the tail.
    NoShadow,
    /// Unknown predicate name passed to a transfer check.
    UnknownPredicate,
    /// A documented precondition failed; the message names it.
    PreconditionFailed(String),
    /// Family nesting deeper than two levels is rejected.
    NestingTooDeep,
    /// Text input could not be parsed; the message says why.
    Parse(String),
    /// An invariant the code relies on was violated.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OwnerMismatch => write!(f, "elements belong to different fields"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::SearchExhausted => write!(f, "deterministic search exhausted its attempt cap"),
            Error::UndefinedGcd => write!(f, "gcd(0, 0) is undefined"),
            Error::DegreeTooSmall => write!(f, "input degree too small for this operation"),
            Error::NotPrime => write!(f, "polynomial is not irreducible"),
            Error::NotAFactorization => write!(f, "product of the claimed factors differs from the input"),
            Error::NotPrimitive => write!(f, "polynomial has nontrivial content"),
            Error::ZeroInput => write!(f, "zero input not allowed"),
            Error::UseCompositum => write!(f, "composite modulus: use the compositum record"),
            Error::TooLarge => write!(f, "enumeration exceeds the configured cap"),
            Error::NotASubgroup => write!(f, "set is not a subgroup"),
            Error::NotADivisor => write!(f, "integer does not divide the group order"),
            Error::RamifiedCase => write!(f, "factor-pattern oracle does not apply to ramified primes"),
            Error::WildOrInseparableCase => write!(f, "wild or inseparable case is out of scope"),
            Error::DegeneratedLeadingCoefficient => {
                write!(f, "leading coefficient vanished at some index")
            }
            Error::NoShadow => write!(f, "irreducibility fails on the tail: no shadow family"),
            Error::UnknownPredicate => write!(f, "unknown predicate name"),
            Error::PreconditionFailed(msg) => write!(f, "precondition failed: {msg}"),
            Error::NestingTooDeep => write!(f, "family nesting deeper than two levels is rejected"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
