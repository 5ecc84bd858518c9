//! Splitting data `(e, f, g)` of primes of `A = F_q[t]` in cyclotomic
//! and tame Kummer extensions, the independent factor-pattern oracle
//! (which only uses polynomial factorization over the residue field),
//! and geometric-extension checks under constant-field extension.

use alloc::string::String;
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::Serialize;

use crate::arith::lcm_u64;
use crate::bivar::BivarPoly;
use crate::carlitz::{compositum_record, cyclo_poly, unit_group};
use crate::gf::{Field, FieldElement, FieldExt, FieldSpec};
use crate::poly::Poly;
use crate::{Error, Result};

/// Ramification index, inertia degree, and number of primes above, for
/// a prime in a Galois extension of degree `m`; always `e·f·g = m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct SplittingData {
    pub e: u64,
    pub f: u64,
    pub g: u64,
    pub m: u64,
}

impl SplittingData {
    pub fn new(e: u64, f: u64, g: u64, m: u64) -> Result<SplittingData> {
        if e == 0 || f == 0 || g == 0 || e * f * g != m {
            return Err(Error::Internal(alloc::format!(
                "splitting data violates e*f*g = m: ({e},{f},{g};{m})"
            )));
        }
        Ok(SplittingData { e, f, g, m })
    }

    pub fn is_totally_ramified(&self) -> bool {
        self.e == self.m
    }

    pub fn is_unramified(&self) -> bool {
        self.e == 1
    }

    pub fn is_totally_split(&self) -> bool {
        self.g == self.m
    }

    pub fn is_inert(&self) -> bool {
        self.f == self.m
    }
}

/// A certified monic prime of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeOfA {
    poly: Poly,
}

impl PrimeOfA {
    pub fn new(p: Poly) -> Result<PrimeOfA> {
        if !p.is_monic() || !p.is_irreducible()? {
            return Err(Error::NotPrime);
        }
        Ok(PrimeOfA { poly: p })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.deg().unwrap()
    }
}

/// The residue field `A/Q ≅ F_(q^deg Q)` with its evaluation map
/// `t ↦ root`, the smallest root of `Q` in the extension.
#[derive(Clone, Debug)]
pub struct ResidueField {
    field: Field,
    root: FieldElement,
}

impl ResidueField {
    pub fn new(q_prime: &PrimeOfA) -> Result<ResidueField> {
        let base = q_prime.poly.field().clone();
        let ext = FieldSpec::extension(&base, q_prime.degree())?;
        let lifted = q_prime.poly.lift_scalars(&ext)?;
        let mut roots = lifted.roots()?;
        if roots.is_empty() {
            return Err(Error::Internal(
                "prime has no root in its residue field".into(),
            ));
        }
        roots.sort_by_key(|r| r.value());
        Ok(ResidueField {
            field: ext,
            root: roots.remove(0),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn root(&self) -> &FieldElement {
        &self.root
    }

    /// Image of `f ∈ A` in the residue field.
    pub fn reduce_scalar(&self, f: &Poly) -> Result<FieldElement> {
        let lifted = f.lift_scalars(&self.field)?;
        lifted.eval(&self.root)
    }

    /// Reduce an element of `A[x]` to a univariate polynomial over the
    /// residue field.
    pub fn reduce_bivar(&self, f: &BivarPoly) -> Result<Poly> {
        let mut elems = Vec::new();
        for i in 0..=f.xdeg().unwrap_or(0) {
            elems.push(self.reduce_scalar(&f.coeff_x(i))?);
        }
        Poly::from_elements(&elems)
    }
}

/// Splitting of a prime `Q` in the cyclotomic extension `Q_a`.
///
/// For `Q` coprime to `a`: `e = 1`, `f` is the multiplicative order of
/// the class of `Q` in `(A/aA)^×`, and `g = Φ(a)/f`. For `Q` equal to a
/// prime factor `P` of `a = P^h · rest`, that component is totally
/// ramified: `e = Φ(P^h)`, `f` is the order of `Q` modulo `rest`, and
/// `g = Φ(a)/(e·f)`. Composite moduli combine componentwise.
pub fn split_in_cyclotomic(q_prime: &PrimeOfA, a: &Poly, cap: u64) -> Result<SplittingData> {
    let record = compositum_record(a)?;
    let phi_total = record.degree;
    let q_poly = &q_prime.poly;
    let ramified = record
        .components
        .iter()
        .find(|(p, _, _)| p == q_poly)
        .cloned();
    match ramified {
        None => {
            let mut f: u64 = 1;
            for (p, h, _) in &record.components {
                let mut ph = Poly::one(a.field());
                for _ in 0..*h {
                    ph = ph.mul(p)?;
                }
                let group = unit_group(&ph, cap)?;
                f = lcm_u64(f, group.order_of(q_poly)?);
            }
            SplittingData::new(1, f, phi_total / f, phi_total)
        }
        Some((_, _, phi_component)) => {
            let e = phi_component;
            let mut f: u64 = 1;
            for (p, h, _) in &record.components {
                if p == q_poly {
                    continue;
                }
                let mut ph = Poly::one(a.field());
                for _ in 0..*h {
                    ph = ph.mul(p)?;
                }
                let group = unit_group(&ph, cap)?;
                f = lcm_u64(f, group.order_of(q_poly)?);
            }
            SplittingData::new(e, f, phi_total / (e * f), phi_total)
        }
    }
}

/// Independent oracle for the splitting pattern: reduce `ψ_a` modulo
/// `Q` and return the sorted multiset of irreducible-factor degrees
/// over the residue field. Only defined for `Q` coprime to `a` (the
/// reduction degenerates otherwise).
pub fn factor_pattern_oracle(q_prime: &PrimeOfA, a: &Poly, cap: u64) -> Result<Vec<usize>> {
    if q_prime.poly.divides(a)? {
        return Err(Error::RamifiedCase);
    }
    let record = compositum_record(a)?;
    if record.components.len() != 1 {
        return Err(Error::UseCompositum);
    }
    let (prime, h, phi) = record.components[0].clone();
    if phi > cap {
        return Err(Error::TooLarge);
    }
    let psi = cyclo_poly(&prime, h)?;
    let residue = ResidueField::new(q_prime)?;
    let reduced = residue.reduce_bivar(&psi)?;
    if reduced.deg() != Some(phi as usize) {
        return Err(Error::Internal(
            "reduction dropped the degree of psi".into(),
        ));
    }
    let (_, factors) = reduced.factor(0)?;
    let mut degrees = Vec::new();
    for (g, mult) in &factors {
        for _ in 0..*mult {
            degrees.push(g.deg().unwrap());
        }
    }
    degrees.sort_unstable();
    Ok(degrees)
}

/// Splitting of `Q` in the tame Kummer extension
/// `F_q(t)(radicand^(1/n))` with `n | q - 1` and `radicand = unit·P^k`,
/// `gcd(k, n) = 1`.
///
/// With `v = v_Q(radicand)` and `w = gcd(n, v)`: `e = n/w`; the residual
/// unit part `radicand/Q^v` reduces to `ū` in the residue field, and `f`
/// is the common degree of the irreducible factors of `x^w - ū` there;
/// `g = n/(e·f)`.
pub fn kummer_splitting(
    q_prime: &PrimeOfA,
    n: u64,
    radicand: &Poly,
    _cap: u64,
) -> Result<SplittingData> {
    let field = radicand.field().clone();
    let q = field.order();
    if n == 0 {
        return Err(Error::DegreeTooSmall);
    }
    if (q - 1) % n as u128 != 0 {
        return Err(Error::WildOrInseparableCase);
    }
    if radicand.is_zero() {
        return Err(Error::ZeroInput);
    }
    // Shape check: unit times a prime power, exponent coprime to n, so
    // that x^n - radicand is irreducible and the extension has degree n.
    let (_, factors) = radicand.factor(0)?;
    if factors.len() > 1 {
        return Err(Error::PreconditionFailed(
            "radicand must be a unit times a prime power".into(),
        ));
    }
    if let Some((_, k)) = factors.first() {
        if n > 1 && crate::arith::gcd_u64(n, *k as u64) != 1 {
            return Err(Error::PreconditionFailed(
                "radicand exponent must be coprime to n".into(),
            ));
        }
    }
    // v = v_Q(radicand).
    let mut v: u64 = 0;
    let mut unit_part = radicand.clone();
    loop {
        let (quot, rem) = unit_part.divmod(&q_prime.poly)?;
        if rem.is_zero() {
            unit_part = quot;
            v += 1;
        } else {
            break;
        }
    }
    let w = crate::arith::gcd_u64(n, v);
    let e = n / w;
    let residue = ResidueField::new(q_prime)?;
    let ubar = residue.reduce_scalar(&unit_part)?;
    debug_assert!(!ubar.is_zero());
    // Factor x^w - ū over the residue field.
    let kq = residue.field().clone();
    let mut coeffs = alloc::vec![kq.zero(); w as usize + 1];
    coeffs[0] = ubar.neg();
    coeffs[w as usize] = kq.one();
    let xw = Poly::from_elements(&coeffs)?;
    let (_, factors) = xw.factor(0)?;
    let degrees: Vec<usize> = factors
        .iter()
        .flat_map(|(g, m)| core::iter::repeat(g.deg().unwrap()).take(*m as usize))
        .collect();
    let f = degrees[0] as u64;
    if degrees.iter().any(|&d| d as u64 != f) {
        return Err(Error::Internal(
            "tame Kummer residual factors have unequal degrees".into(),
        ));
    }
    let g = degrees.len() as u64;
    SplittingData::new(e, f, g, n)
}

/// One factor's verdict in a [`GeometricReport`].
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct GeometricFactor {
    pub factor: String,
    pub eisenstein: bool,
}

/// Outcome of the constant-field extension check for `ψ_P`.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct GeometricReport {
    pub q: u64,
    pub prime: String,
    pub extension_degree: usize,
    pub extension_field: String,
    /// Factors of `P` over the extended constants, each with its
    /// Eisenstein verdict for the lifted `ψ_P`.
    pub factors: Vec<GeometricFactor>,
    /// All factors pass, so `ψ_P` stays irreducible over the extended
    /// rational function field and the degree `Φ(P)` is preserved.
    pub degree_preserved: bool,
    pub phi: u64,
}

/// Check that `Q_P` is geometric: factor `P` over `F_(q^m)` and verify
/// that `ψ_P` is Eisenstein at each factor, so the extension degree is
/// preserved under constant-field extension.
pub fn geometric_check(p_prime: &PrimeOfA, m: usize, cap: u64) -> Result<GeometricReport> {
    if m == 0 {
        return Err(Error::DegreeTooSmall);
    }
    let base = p_prime.poly.field().clone();
    let q = base.order() as u64;
    let phi = unit_group(&p_prime.poly, cap)?.order();
    let psi = cyclo_poly(&p_prime.poly, 1)?;
    let ext = FieldSpec::extension(&base, m)?;
    let lifted_p = p_prime.poly.lift_scalars(&ext)?;
    let lifted_psi = psi.lift_scalars(&ext)?;
    let (_, factors) = lifted_p.factor(0)?;
    let mut out = Vec::new();
    let mut all = true;
    for (pi, _) in &factors {
        let ok = lifted_psi.eisenstein_check(pi)?;
        all &= ok;
        out.push(GeometricFactor {
            factor: alloc::format!("{pi}"),
            eisenstein: ok,
        });
    }
    Ok(GeometricReport {
        q,
        prime: alloc::format!("{}", p_prime.poly),
        extension_degree: m,
        extension_field: alloc::format!("{ext}"),
        factors: out,
        degree_preserved: all,
        phi,
    })
}

/// One row of the splitting table emitted by the CLI.
#[derive(Clone, Debug)]
#[cfg_attr(feature = "serde", derive(Serialize))]
pub struct SplitRow {
    #[cfg_attr(feature = "serde", serde(rename = "Q"))]
    pub prime: String,
    #[cfg_attr(feature = "serde", serde(rename = "a"))]
    pub modulus: String,
    pub e: u64,
    pub f: u64,
    pub g: u64,
    pub m: u64,
    /// Sorted factor degrees from the oracle; `None` in the ramified
    /// case, where the oracle does not apply.
    pub oracle_degrees: Option<Vec<usize>>,
    pub agree: bool,
}

/// All monic primes of degree up to `max_deg`, in canonical order.
pub fn monic_primes_up_to(field: &Field, max_deg: usize) -> Result<Vec<PrimeOfA>> {
    let q = field.order();
    let mut out = Vec::new();
    for d in 1..=max_deg {
        let count = q.checked_pow(d as u32).ok_or(Error::TooLarge)?;
        if count > 1 << 20 {
            return Err(Error::TooLarge);
        }
        for idx in 0..count {
            let mut elems = Vec::with_capacity(d + 1);
            let mut v = idx;
            for _ in 0..d {
                elems.push(field.elt_from_value(v % q)?);
                v /= q;
            }
            elems.push(field.one());
            let candidate = Poly::from_elements(&elems)?;
            if candidate.is_irreducible()? {
                out.push(PrimeOfA { poly: candidate });
            }
        }
    }
    Ok(out)
}

/// Build the splitting table of all primes of degree `<= qmax_deg` in
/// `Q_a`, cross-checking the formula against the factor-pattern oracle
/// in every unramified row.
pub fn split_table(a: &Poly, qmax_deg: usize, cap: u64) -> Result<Vec<SplitRow>> {
    let field = a.field().clone();
    let mut rows = Vec::new();
    for q_prime in monic_primes_up_to(&field, qmax_deg)? {
        let data = split_in_cyclotomic(&q_prime, a, cap)?;
        let (oracle_degrees, agree) = if q_prime.poly.divides(a)? {
            (None, true)
        } else {
            let degrees = factor_pattern_oracle(&q_prime, a, cap)?;
            let agree =
                degrees.len() as u64 == data.g && degrees.iter().all(|&d| d as u64 == data.f);
            (Some(degrees), agree)
        };
        rows.push(SplitRow {
            prime: alloc::format!("{}", q_prime.poly),
            modulus: alloc::format!("{a}"),
            e: data.e,
            f: data.f,
            g: data.g,
            m: data.m,
            oracle_degrees,
            agree,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_of_order;

    fn gf(q: u64) -> Field {
        field_of_order(q).unwrap()
    }

    fn prime(field: &Field, s: &str) -> PrimeOfA {
        PrimeOfA::new(Poly::parse(field, s).unwrap()).unwrap()
    }

    fn t(field: &Field, s: &str) -> Poly {
        Poly::parse(field, s).unwrap()
    }

    #[test]
    fn cyclotomic_splitting_examples() {
        let f3 = gf(3);
        // q=3, a=t, Q=t: totally ramified.
        let d = split_in_cyclotomic(&prime(&f3, "t"), &t(&f3, "t"), 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (2, 1, 1));
        // q=3, a=t, Q=t+1: class 1, splits completely.
        let d = split_in_cyclotomic(&prime(&f3, "t+1"), &t(&f3, "t"), 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (1, 1, 2));
        // q=2, a=t^2+t+1, Q=t: order of t is 3.
        let f2 = gf(2);
        let d = split_in_cyclotomic(&prime(&f2, "t"), &t(&f2, "t^2+t+1"), 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (1, 3, 1));
        // Reducible Q is rejected at construction.
        assert_eq!(PrimeOfA::new(t(&f2, "t^2+1")).unwrap_err(), Error::NotPrime);
    }

    #[test]
    fn composite_modulus_splitting() {
        // a = t(t+1) over GF(3): Φ = 4; the class of t+2 has order 2
        // mod t and order 1 mod t+1, so f = 2 and g = 2.
        let f3 = gf(3);
        let d = split_in_cyclotomic(&prime(&f3, "t+2"), &t(&f3, "t^2+t"), 512).unwrap();
        assert_eq!(d.m, 4);
        assert_eq!(d.e, 1);
        assert_eq!((d.f, d.g), (2, 2));
        // Ramified component: Q = t.
        let d = split_in_cyclotomic(&prime(&f3, "t"), &t(&f3, "t^2+t"), 512).unwrap();
        assert_eq!(d.e, 2);
        assert_eq!(d.m, 4);
    }

    #[test]
    fn oracle_examples() {
        let f3 = gf(3);
        // ψ_t = x^2 + t mod (t+1) = x^2 - 1 -> degrees {1, 1}.
        let degrees = factor_pattern_oracle(&prime(&f3, "t+1"), &t(&f3, "t"), 512).unwrap();
        assert_eq!(degrees, alloc::vec![1, 1]);

        let f2 = gf(2);
        // ψ_P mod t = x^3 + x + 1, irreducible -> {3}.
        let degrees = factor_pattern_oracle(&prime(&f2, "t"), &t(&f2, "t^2+t+1"), 512).unwrap();
        assert_eq!(degrees, alloc::vec![3]);

        // ψ_t = x + t mod (t+1) = x + 1 -> {1}.
        let degrees = factor_pattern_oracle(&prime(&f2, "t+1"), &t(&f2, "t"), 512).unwrap();
        assert_eq!(degrees, alloc::vec![1]);

        // Ramified case is rejected.
        assert_eq!(
            factor_pattern_oracle(&prime(&f2, "t"), &t(&f2, "t^2"), 512).unwrap_err(),
            Error::RamifiedCase
        );
    }

    #[test]
    fn oracle_agrees_with_formula() {
        // The executable splitting law: oracle degrees all equal f,
        // count g, for a spread of (Q, a = P^h) pairs.
        for (q, a_str) in [
            (2u64, "t^2"),
            (2, "t^3"),
            (2, "t^2+t+1"),
            (3, "t"),
            (3, "t^2"),
            (3, "t^2+1"),
        ] {
            let field = gf(q);
            let a = t(&field, a_str);
            for q_prime in monic_primes_up_to(&field, 2).unwrap() {
                if q_prime.poly().divides(&a).unwrap() {
                    continue;
                }
                let data = split_in_cyclotomic(&q_prime, &a, 512).unwrap();
                let degrees = factor_pattern_oracle(&q_prime, &a, 512).unwrap();
                assert_eq!(degrees.len() as u64, data.g, "g mismatch at a={a_str}");
                assert!(
                    degrees.iter().all(|&d| d as u64 == data.f),
                    "f mismatch at a={a_str}, Q={}",
                    q_prime.poly()
                );
            }
        }
    }

    #[test]
    fn kummer_splitting_examples() {
        let f3 = gf(3);
        let minus_t = t(&f3, "2*t");
        // Q = t: v = 1, totally ramified.
        let d = kummer_splitting(&prime(&f3, "t"), 2, &minus_t, 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (2, 1, 1));
        // Q = t+1: -t = 1 there; x^2 - 1 splits.
        let d = kummer_splitting(&prime(&f3, "t+1"), 2, &minus_t, 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (1, 1, 2));
        // Q = t-1 = t+2: -t = -1 there; x^2 + 1 irreducible.
        let d = kummer_splitting(&prime(&f3, "t+2"), 2, &minus_t, 512).unwrap();
        assert_eq!((d.e, d.f, d.g), (1, 2, 1));
        // Wild case rejected: n must divide q - 1.
        assert_eq!(
            kummer_splitting(&prime(&f3, "t"), 3, &minus_t, 512).unwrap_err(),
            Error::WildOrInseparableCase
        );
    }

    #[test]
    fn kummer_matches_direct_factorization() {
        // For unramified Q the valuation formula must agree with
        // factoring x^n - radicand over the residue field directly.
        let f5 = gf(5);
        let radicand = t(&f5, "4*t");
        for q_str in ["t+1", "t+2", "t+3", "t+4", "t^2+2"] {
            let q_prime = prime(&f5, q_str);
            for n in [2u64, 4] {
                let d = kummer_splitting(&q_prime, n, &radicand, 512).unwrap();
                assert_eq!(d.e, 1);
                assert_eq!(d.e * d.f * d.g, n);
                let residue = ResidueField::new(&q_prime).unwrap();
                let ubar = residue.reduce_scalar(&radicand).unwrap();
                let kq = residue.field().clone();
                let mut coeffs = alloc::vec![kq.zero(); n as usize + 1];
                coeffs[0] = ubar.neg();
                coeffs[n as usize] = kq.one();
                let xn = Poly::from_elements(&coeffs).unwrap();
                let (_, factors) = xn.factor(0).unwrap();
                let count: u64 = factors.iter().map(|(_, m)| *m as u64).sum();
                assert_eq!(count, d.g, "Q={q_str}, n={n}");
                assert!(factors.iter().all(|(p, _)| p.deg().unwrap() as u64 == d.f));
            }
        }
    }

    #[test]
    fn geometric_examples() {
        let f3 = gf(3);
        let report = geometric_check(&prime(&f3, "t"), 2, 512).unwrap();
        assert_eq!(report.factors.len(), 1);
        assert!(report.degree_preserved);

        let f2 = gf(2);
        // t^2+t+1 splits into two linear factors over GF(4).
        let report = geometric_check(&prime(&f2, "t^2+t+1"), 2, 512).unwrap();
        assert_eq!(report.factors.len(), 2);
        assert!(report.degree_preserved);
        assert_eq!(report.phi, 3);

        // Trivial identity case.
        let report = geometric_check(&prime(&f2, "t"), 1, 512).unwrap();
        assert!(report.degree_preserved);
    }

    #[test]
    fn table_rows() {
        let f2 = gf(2);
        let rows = split_table(&t(&f2, "t^2+t+1"), 2, 512).unwrap();
        let row_t = rows.iter().find(|r| r.prime == "t").unwrap();
        assert_eq!((row_t.e, row_t.f, row_t.g), (1, 3, 1));
        assert!(row_t.agree);
        // The modulus itself appears as the ramified row.
        let ram = rows.iter().find(|r| r.prime == "t^2+t+1").unwrap();
        assert_eq!((ram.e, ram.f, ram.g), (3, 1, 1));
        assert!(ram.oracle_degrees.is_none());
        assert!(rows.iter().all(|r| r.agree));
    }
}
