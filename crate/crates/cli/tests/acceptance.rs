//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the quantities it verified (run with `--nocapture` to see them).
//! Everything is exact — no tolerances anywhere.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use carlitz_core::bivar::{newton_factor_bound, verify_factor_bound, BivarPoly};
use carlitz_core::carlitz::{
    carlitz_of, cyclo_poly, infinity_twist_rn_degree, kummer_witness, torsion_points_prime_power,
    unit_group,
};
use carlitz_core::gf::{field_of_order, Field};
use carlitz_core::poly::Poly;
use carlitz_core::splitting::{
    factor_pattern_oracle, geometric_check, monic_primes_up_to, split_in_cyclotomic, PrimeOfA,
};
use carlitz_core::ultra::{
    artin_schreier_demo, dirichlet_family, los_check, ramification_correspondence, shadow_build,
    shadow_galois_audit, FamilyKind, GroupDescriptor, Predicate, TransferRule, UltraPolyFamily,
};

const CAP: u64 = 512;

fn gf(q: u64) -> Field {
    field_of_order(q).unwrap()
}

fn t(field: &Field, s: &str) -> Poly {
    Poly::parse(field, s).unwrap()
}

/// All (q, P, h) with q in {2, 3} and Φ(P^h) <= 200.
fn prime_power_instances() -> Vec<(u64, Poly, u32, u64)> {
    let mut out = Vec::new();
    for q in [2u64, 3] {
        let field = gf(q);
        let max_d = if q == 2 { 7 } else { 4 };
        for prime in monic_primes_up_to(&field, max_d).unwrap() {
            let d = prime.degree() as u32;
            let qd = q.pow(d);
            for h in 1..=16u32 {
                let phi = match qd.checked_pow(h - 1).and_then(|x| x.checked_mul(qd - 1)) {
                    Some(phi) if phi <= 200 => phi,
                    _ => break,
                };
                out.push((q, prime.poly().clone(), h, phi));
            }
        }
    }
    out
}

/// Criterion 1 — torsion cardinality: for q in {2,3,4,5} and monic `a`
/// with q^(deg a) <= 64, the q-polynomial C_a(x) has x-degree q^(deg a)
/// and is separable, so its root count in a splitting field is exactly
/// q^(deg a); for prime powers the q^(deg a) torsion residues are
/// constructed explicitly in Q_a and verified as distinct roots.
#[test]
fn criterion_01_torsion_cardinality() {
    let mut checked = 0u32;
    let mut constructed = 0u32;
    for q in [2u64, 3, 4, 5] {
        let field = gf(q);
        let mut max_deg = 0usize;
        while q.pow(max_deg as u32 + 1) <= 64 {
            max_deg += 1;
        }
        for deg in 1..=max_deg {
            let count = q.pow(deg as u32) as u128;
            for idx in 0..count {
                let mut vals = vec![0u64; deg + 1];
                let mut v = idx;
                for slot in vals.iter_mut().take(deg) {
                    *slot = (v % q as u128) as u64;
                    v /= q as u128;
                }
                vals[deg] = 1;
                let a = Poly::from_values(&field, &vals);
                let image = carlitz_of(&a).unwrap().q_polynomial().unwrap();
                let expected = q.pow(deg as u32) as usize;
                assert_eq!(image.xdeg(), Some(expected), "degree of C_a for a={a}, q={q}");
                // Separability, computed honestly: the x-derivative is
                // the constant a, and gcd(C_a, a) in F_q(t)[x] must be 1.
                let deriv = image.derivative_x();
                assert!(!deriv.is_zero(), "C_a inseparable for a={a}, q={q}");
                let g = image.gcd_x(&deriv).unwrap();
                assert!(g.is_constant_x(), "C_a not squarefree for a={a}, q={q}");
                checked += 1;
            }
        }
        // Explicit construction witnesses: one prime per degree shape,
        // with the torsion module size capped at 32 points.
        let mut seen_degree = 0usize;
        for prime in monic_primes_up_to(&field, max_deg).unwrap() {
            let d = prime.degree();
            if d <= seen_degree {
                continue;
            }
            seen_degree = d;
            for h in 1..=max_deg as u32 {
                let total = d as u32 * h;
                if q.pow(total) > 32 {
                    break;
                }
                let points = torsion_points_prime_power(prime.poly(), h, 64).unwrap();
                assert_eq!(points.len() as u64, q.pow(total), "torsion count");
                constructed += 1;
            }
        }
    }
    println!(
        "criterion 01 PASS: torsion cardinality q^deg(a) exact for {checked} moduli, \
         {constructed} prime-power torsion modules constructed explicitly"
    );
}

/// Criterion 2 — Eisenstein / total ramification: ψ_(P^h) is Eisenstein
/// at P and the splitting of P in Q_(P^h) is (Φ, 1, 1), for every
/// instance with Φ(P^h) <= 200, q in {2, 3}.
#[test]
fn criterion_02_eisenstein_total_ramification() {
    let instances = prime_power_instances();
    assert!(!instances.is_empty());
    for (q, prime, h, phi) in &instances {
        let psi = cyclo_poly(prime, *h).unwrap();
        assert_eq!(psi.xdeg(), Some(*phi as usize), "psi degree q={q} P={prime} h={h}");
        assert!(
            psi.eisenstein_check(prime).unwrap(),
            "Eisenstein fails for q={q}, P={prime}, h={h}"
        );
        let mut a = Poly::one(prime.field());
        for _ in 0..*h {
            a = a.mul(prime).unwrap();
        }
        let data = split_in_cyclotomic(&PrimeOfA::new(prime.clone()).unwrap(), &a, CAP).unwrap();
        assert_eq!(
            (data.e, data.f, data.g),
            (*phi, 1, 1),
            "splitting of P in Q_(P^h) for q={q}, P={prime}, h={h}"
        );
    }
    println!(
        "criterion 02 PASS: Eisenstein certificate and (Φ,1,1) splitting on {} prime-power \
         instances",
        instances.len()
    );
}

/// Criterion 3 — Galois order: the enumerated unit group has order
/// q^(d(h-1))(q^d - 1) on the same instance list.
#[test]
fn criterion_03_galois_order() {
    let instances = prime_power_instances();
    for (q, prime, h, phi) in &instances {
        let d = prime.deg().unwrap() as u32;
        let mut a = Poly::one(prime.field());
        for _ in 0..*h {
            a = a.mul(prime).unwrap();
        }
        let enumerated = unit_group(&a, 200).unwrap().order();
        let formula = q.pow(d * (h - 1)) * (q.pow(d) - 1);
        assert_eq!(enumerated, formula, "unit order q={q}, P={prime}, h={h}");
        assert_eq!(enumerated, *phi);
    }
    println!(
        "criterion 03 PASS: enumerated unit-group order matches q^(d(h-1))(q^d-1) on {} instances",
        instances.len()
    );
}

/// Criterion 4 — splitting oracle equivalence: for >= 200 coprime pairs
/// (Q, a = P^h), every oracle factor degree equals the formula's f, the
/// count equals g, and e·f·g = Φ(a).
#[test]
fn criterion_04_splitting_oracle_equivalence() {
    let mut pairs = 0u32;
    // Every degree shape is covered; within a degree class of many
    // primes, four representatives bound the factoring budget.
    let mut per_class: std::collections::BTreeMap<(u64, usize), u32> =
        std::collections::BTreeMap::new();
    for (q, prime, h, phi) in prime_power_instances() {
        let class = per_class.entry((q, prime.deg().unwrap())).or_insert(0);
        if prime.deg().unwrap() >= 3 && h == 1 {
            *class += 1;
            if *class > 4 {
                continue;
            }
        }
        let field = gf(q);
        let mut a = Poly::one(&field);
        for _ in 0..h {
            a = a.mul(&prime).unwrap();
        }
        // Degree budget keeps residue-field factoring at desk scale:
        // degree-1 primes everywhere below Φ = 100 (and up to 200 over
        // the cheaper F_2), degree 2 below Φ = 60, degree 3 below 20.
        if phi > 100 && q == 3 {
            continue;
        }
        let max_q_deg = if phi <= 20 { 3 } else if phi <= 60 { 2 } else { 1 };
        for q_prime in monic_primes_up_to(&field, max_q_deg).unwrap() {
            if q_prime.poly().divides(&a).unwrap() {
                continue;
            }
            let data = split_in_cyclotomic(&q_prime, &a, CAP).unwrap();
            let degrees = factor_pattern_oracle(&q_prime, &a, CAP).unwrap();
            assert_eq!(
                degrees.len() as u64,
                data.g,
                "oracle count differs from g at q={q}, a={a}, Q={}",
                q_prime.poly()
            );
            assert!(
                degrees.iter().all(|&d| d as u64 == data.f),
                "oracle degree differs from f at q={q}, a={a}, Q={}",
                q_prime.poly()
            );
            assert_eq!(data.e * data.f * data.g, phi, "e*f*g = Φ(a)");
            pairs += 1;
        }
    }
    assert!(pairs >= 200, "only {pairs} pairs tested");
    println!(
        "criterion 04 PASS: oracle degrees = (f repeated g times) and e·f·g = Φ on {pairs} \
         coprime pairs, zero exceptions"
    );
}

/// Criterion 5 — coefficient bound: 500 randomized primitive products
/// in A[x] with x-degree 2..=5 and coefficient t-degree <= 3 produce no
/// violation of the floor(M(2n-1)/n) bound.
#[test]
fn criterion_05_newton_factor_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4e77);
    let mut done = 0u32;
    while done < 500 {
        let q = [2u64, 3, 5][(rng.next_u64() % 3) as usize];
        let field = gf(q);
        let rand_tpoly = |rng: &mut ChaCha8Rng, nonzero: bool| {
            let deg = (rng.next_u64() % 4) as usize;
            let mut vals: Vec<u64> = (0..=deg).map(|_| rng.next_u64() % q).collect();
            if nonzero && vals.iter().all(|&v| v == 0) {
                vals[deg] = 1 + (rng.next_u64() % (q - 1));
            }
            Poly::from_values(&field, &vals)
        };
        let df = 1 + (rng.next_u64() % 3) as usize;
        let dg = 1 + (rng.next_u64() % 2) as usize;
        let mut fc: Vec<Poly> = (0..df).map(|_| rand_tpoly(&mut rng, false)).collect();
        fc.push(rand_tpoly(&mut rng, true));
        let mut gc: Vec<Poly> = (0..dg).map(|_| rand_tpoly(&mut rng, false)).collect();
        gc.push(rand_tpoly(&mut rng, true));
        let f = BivarPoly::from_coeffs(&field, fc).unwrap();
        let g = BivarPoly::from_coeffs(&field, gc).unwrap();
        let p = f.mul(&g).unwrap();
        let n = match p.xdeg() {
            Some(n) if (2..=5).contains(&n) => n,
            _ => continue,
        };
        if !p.primitive_check().unwrap().0 {
            continue;
        }
        let m = p.max_coeff_tdeg().unwrap();
        let report = verify_factor_bound(&p, &f, &g).unwrap();
        assert_eq!(report.bound, newton_factor_bound(m, n).unwrap());
        assert!(report.pass, "bound violated: P={p} = ({f})({g})");
        done += 1;
    }
    println!("criterion 05 PASS: 500 randomized primitive products, zero bound violations");
}

/// Criterion 6 — Kummer witness: η^n / (ε(d)·P) must be a unit of F_q
/// for (q=3, P=t, n=2), (q=5, P=t, n=2), (q=5, P=t, n=4), and
/// (q=2, P=t^2+t+1, n=3), with exact equality η² = -t in the first
/// case.
///
/// The fourth case asks for a radical generator of the degree-3 torsion
/// field over F_2(t). That field is geometric (its constant field is
/// F_2) and Galois, while any cubic radical x^3 - c splits only after
/// adjoining a cube root of unity, which lives in F_4; a radical
/// generator would therefore force F_4 into the constants. The witness
/// accordingly reports η^3 outside the base field, and this criterion
/// records that instance as a genuine failure rather than weakening the
/// check.
#[test]
fn criterion_06_kummer_witness() {
    let mut failures: Vec<String> = Vec::new();

    let f3 = gf(3);
    let report = kummer_witness(&t(&f3, "t"), 2, CAP).unwrap();
    if !(report.ratio_in_units && report.exact_equality) {
        failures.push("(q=3, P=t, n=2)".into());
    } else {
        println!("criterion 06: (q=3, P=t, n=2) ratio = {:?}, exact equality", report.ratio_unit);
    }

    let f5 = gf(5);
    for n in [2u64, 4] {
        let report = kummer_witness(&t(&f5, "t"), n, CAP).unwrap();
        if !report.ratio_in_units {
            failures.push(format!("(q=5, P=t, n={n})"));
        } else {
            println!(
                "criterion 06: (q=5, P=t, n={n}) ratio = {:?}, nth power = {}",
                report.ratio_unit, report.unit_is_nth_power
            );
        }
    }

    let f2 = gf(2);
    let report = kummer_witness(&t(&f2, "t^2+t+1"), 3, CAP).unwrap();
    if !report.ratio_in_units {
        println!(
            "criterion 06: (q=2, P=t^2+t+1, n=3) η^3 = {} is NOT in the base field \
             (needs_manual_review = {})",
            report.eta_pow, report.needs_manual_review
        );
        failures.push(
            "(q=2, P=t^2+t+1, n=3): η^3 ∉ F_2(t); a cubic radical generator would force cube \
             roots of unity into the constant field of a geometric extension, so no element of \
             the degree-3 torsion field can satisfy η^3 = c·P"
                .into(),
        );
    }

    assert!(
        failures.is_empty(),
        "criterion 06 FAIL for {} of 4 cases: {}",
        failures.len(),
        failures.join("; ")
    );
    println!("criterion 06 PASS: all four witness cases in F_q^×");
}

/// Criterion 7 — transfer agreement: 200 seeded integer-specified
/// families over the factorial prime truncation N = 10, tail 3; the
/// per-index irreducibility verdicts are tail-constant in at least 95%
/// of instances (a property of the generator mix), and the
/// routed-two-ways guard shows zero disagreement everywhere.
#[test]
fn criterion_07_transfer_agreement() {
    let fam = dirichlet_family(10, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x105);
    let mut constant = 0u32;
    let mut disagreements = 0u32;
    let total = 200u32;
    for _ in 0..total {
        // Generator mix: half products (reducible at every index), most
        // of the rest linear (irreducible everywhere), a few wildcards
        // whose verdicts may vary with the index.
        let roll = rng.next_u64() % 100;
        let coeffs: Vec<i64> = if roll < 50 {
            let da = 1 + (rng.next_u64() % 2) as usize;
            let db = 1 + (rng.next_u64() % 2) as usize;
            let a = random_monic_int(&mut rng, da);
            let b = random_monic_int(&mut rng, db);
            int_mul(&a, &b)
        } else if roll < 95 {
            vec![(rng.next_u64() % 7) as i64 - 3, 1]
        } else {
            let d = 2 + (rng.next_u64() % 3) as usize;
            random_monic_int(&mut rng, d)
        };
        let family = UltraPolyFamily::lift_int_poly(&fam, &coeffs).unwrap();
        let report = los_check(Predicate::IsIrreducible, &family).unwrap();
        if report.verdict != carlitz_core::ultra::Verdict::Mixed {
            constant += 1;
        }
        // Routed two ways: the report entries against direct calls.
        let polys = match family.kind() {
            FamilyKind::Uni(ps) => ps,
            _ => unreachable!(),
        };
        for (entry, p) in report.per_index.iter().zip(polys) {
            let direct = p.deg().map_or(false, |d| d >= 1) && p.is_irreducible().unwrap();
            if entry.value != Some(direct) {
                disagreements += 1;
            }
        }
    }
    assert_eq!(disagreements, 0, "routed-two-ways guard found disagreements");
    assert!(
        constant * 100 >= total * 95,
        "only {constant}/{total} instances tail-constant"
    );
    println!(
        "criterion 07 PASS: {constant}/{total} instances tail-constant (>= 95%), zero \
         routed-two-ways disagreements"
    );
}

fn random_monic_int(rng: &mut ChaCha8Rng, deg: usize) -> Vec<i64> {
    let mut coeffs: Vec<i64> = (0..deg).map(|_| (rng.next_u64() % 7) as i64 - 3).collect();
    coeffs.push(1);
    coeffs
}

fn int_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Criterion 8 — shadow audit: x^2 + t and x^3 - t shadows over the
/// factorial prime family match the cyclic groups of orders 2 and 3 on
/// the tails s >= 2 and s >= 3.
#[test]
fn criterion_08_shadow_audit() {
    let fam = dirichlet_family(8, 2).unwrap();

    let x2t = UltraPolyFamily::lift_int_bivar(&fam, &[vec![0, 1], vec![], vec![1]]).unwrap();
    let shadows = shadow_build(&x2t, CAP).unwrap();
    assert_eq!(shadows.degree, Some(2));
    let audit = shadow_galois_audit(&shadows, &GroupDescriptor::cyclic(2), 2).unwrap();
    assert!(audit.verdict.holds(), "x^2 + t audit: {:?}", audit.verdict);

    let x3t = UltraPolyFamily::lift_int_bivar(&fam, &[vec![0, -1], vec![], vec![], vec![1]]).unwrap();
    let shadows = shadow_build(&x3t, CAP).unwrap();
    assert_eq!(shadows.degree, Some(3));
    let audit = shadow_galois_audit(&shadows, &GroupDescriptor::cyclic(3), 3).unwrap();
    assert!(audit.verdict.holds(), "x^3 - t audit: {:?}", audit.verdict);

    println!("criterion 08 PASS: Kummer shadows match Z/2 (s >= 2) and Z/3 (s >= 3) exactly");
}

/// Criterion 9 — trivial algebraic part: the divisor set of the
/// factorial prime hyperinteger is exactly {1}.
#[test]
fn criterion_09_artin_schreier_triviality() {
    let fam = dirichlet_family(10, 3).unwrap();
    let report = artin_schreier_demo(&fam, &[0, 1]).unwrap();
    assert!(report.characteristics_distinct_on_tail);
    assert_eq!(report.divisor_set, vec![1], "divisor set must be exactly {{1}}");
    assert!(report.conclusion_drawn);
    println!(
        "criterion 09 PASS: divisor set of the prime-degree hyperinteger is {{1}} for m <= 10"
    );
}

/// Criterion 10 — ramification correspondence: in the tower shadows
/// x^n + t with P = t the stabilized triple is (n, 1, 1) (totally
/// ramified), and at Q = t + 1 the tail has e_s = 1 (unramified), with
/// the report naming the licensed transfer direction.
#[test]
fn criterion_10_ramification_correspondence() {
    for (n, tail_start) in [(2u64, 3usize), (3, 3), (4, 4)] {
        let fam = dirichlet_family(8, tail_start).unwrap();
        let mut coeffs: Vec<Vec<i64>> = vec![Vec::new(); n as usize + 1];
        coeffs[0] = vec![0, 1]; // x^n + t = x^n - ε(1)·t with ε(1) = -1
        coeffs[n as usize] = vec![1];
        let family = UltraPolyFamily::lift_int_bivar(&fam, &coeffs).unwrap();
        let shadows = shadow_build(&family, CAP).unwrap();

        let at_t = ramification_correspondence(&shadows, &[0, 1], CAP).unwrap();
        let stab = at_t.stabilized.expect("triple must stabilize at Q = t");
        assert_eq!((stab.e, stab.f, stab.g), (n, 1, 1), "n={n}");
        assert!(at_t
            .conclusions
            .iter()
            .any(|c| c.rule == TransferRule::TotallyRamifiedComponentwiseToDiagonal
                && c.direction_used.contains("componentwise-to-diagonal")));

        let at_t1 = ramification_correspondence(&shadows, &[1, 1], CAP).unwrap();
        let stab = at_t1.stabilized.expect("triple must stabilize at Q = t+1");
        assert_eq!(stab.e, 1, "unramified at Q = t+1, n={n}");
        assert!(at_t1
            .conclusions
            .iter()
            .any(|c| c.rule == TransferRule::UnramifiedTwoSided));
    }
    println!(
        "criterion 10 PASS: stabilized (n,1,1) at Q=t and e=1 at Q=t+1 for n in {{2,3,4}}, with \
         licensed directions named"
    );
}

/// Criterion 11 — twisted tower degree: the enumerated layer degree
/// equals q^n for n <= 3, q in {2, 3}.
#[test]
fn criterion_11_twisted_tower_degree() {
    for q in [2u64, 3] {
        let field = gf(q);
        for n in 1..=3u32 {
            let degree = infinity_twist_rn_degree(&field, n, CAP).unwrap();
            assert_eq!(degree, q.pow(n), "q={q}, n={n}");
        }
    }
    println!("criterion 11 PASS: twisted layer degrees equal q^n for q in {{2,3}}, n <= 3");
}

/// Criterion 12 — geometric extension: the constant-field extension
/// check passes for P in {t (q=2,3), t^2+t+1 (q=2)} and m <= 3.
#[test]
fn criterion_12_geometric_extension() {
    let cases: [(u64, &str); 3] = [(2, "t"), (3, "t"), (2, "t^2+t+1")];
    for (q, p_str) in cases {
        let field = gf(q);
        let prime = PrimeOfA::new(t(&field, p_str)).unwrap();
        for m in 1..=3usize {
            let report = geometric_check(&prime, m, CAP).unwrap();
            assert!(report.degree_preserved, "q={q}, P={p_str}, m={m}");
            assert!(report.factors.iter().all(|f| f.eisenstein));
        }
    }
    println!("criterion 12 PASS: degree preserved under constant extension for all cases, m <= 3");
}

/// Criterion 13 — determinism: two runs of the CLI fixture suite with
/// identical seeds produce byte-identical outputs (and identical exit
/// codes).
#[test]
fn criterion_13_cli_determinism() {
    let bin = env!("CARGO_BIN_EXE_carlitz-lab");
    let fixtures: &[&[&str]] = &[
        &["field", "ops", "--q", "9", "--a", "z+1", "--b", "2*z"],
        &["poly", "factor", "--q", "3", "--f", "t^6+t^4+2*t^2+1"],
        &["poly", "irred", "--q", "2", "--f", "t^3+t+1"],
        &["carlitz", "eval", "--q", "3", "--a", "t^2+t", "--beta", "(t+1)/(t^2)"],
        &["carlitz", "cyclo", "--q", "3", "--P", "t"],
        &["carlitz", "cyclo", "--q", "2", "--P", "t^2+t+1"],
        &["carlitz", "galois", "--q", "2", "--a", "t^2"],
        &["carlitz", "galois", "--q", "2", "--a", "t^2+t"],
        &["carlitz", "rn", "--q", "3", "--n", "2"],
        &["split", "table", "--q", "2", "--a", "t^2+t+1", "--Qmaxdeg", "2"],
        &["split", "table", "--q", "3", "--a", "t^2", "--Qmaxdeg", "2", "--output", "tsv"],
        &["split", "oracle", "--q", "3", "--a", "t", "--prime", "t+1"],
        &["split", "geom", "--q", "2", "--P", "t^2+t+1", "--m", "2"],
        &["kummer", "verify", "--q", "5", "--P", "t", "--n", "4"],
        &["ultra", "dirichlet", "--N", "8"],
        &["ultra", "los", "--pred", "is_irreducible", "--poly", "t^2+1", "--N", "6"],
        &["ultra", "transfer", "--poly", "x^2 - t", "--N", "6"],
        &[
            "ultra", "shadow", "--minpoly", "x^2 + t", "--expect-order", "2", "--tail-from", "2",
            "--N", "6",
        ],
        &["ultra", "ramify", "--shadow", "x^2 + t", "--P", "t", "--N", "6"],
        &["ultra", "tower", "--family", "dirichlet", "--N", "8", "--P", "t", "--nmax", "4"],
        &["ultra", "mae", "--family", "constant:3", "--N", "2", "--tail-start", "1", "--B", "2"],
        &["ultra", "artin-schreier", "--a", "t", "--N", "8"],
        &["ultra", "mae", "--B", "1", "--output", "pretty", "--N", "4", "--tail-start", "2"],
    ];
    let mut all = Vec::new();
    for _ in 0..2 {
        let mut outputs = Vec::new();
        for argv in fixtures {
            let out = std::process::Command::new(bin)
                .args(*argv)
                .env_remove("CARLITZ_LAB_CONFIG")
                .output()
                .expect("fixture run");
            outputs.push((argv, out.status.code(), out.stdout.clone()));
        }
        all.push(outputs);
    }
    for (first, second) in all[0].iter().zip(&all[1]) {
        assert_eq!(first.1, second.1, "exit code differs for {:?}", first.0);
        assert_eq!(
            first.2, second.2,
            "stdout differs between runs for {:?}",
            first.0
        );
    }
    println!(
        "criterion 13 PASS: {} fixture commands byte-identical across two runs",
        fixtures.len()
    );
}
