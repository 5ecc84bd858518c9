//! Command-line surface for the function field laboratory: finite field
//! arithmetic, polynomial factorization, Carlitz module and cyclotomic
//! function field computations, splitting tables, Kummer witnesses, and
//! the truncated-ultraproduct transfer audits, all with reproducible
//! structured output.

mod config;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use carlitz_core::carlitz::{
    build_cyclotomic, carlitz_eval_rat, compositum_record, cyclo_poly, infinity_twist_rn_degree,
    kummer_witness,
};
use carlitz_core::gf::{field_of_order, prime_power_parts, Field, FieldSpec};
use carlitz_core::poly::Poly;
use carlitz_core::ratfunc::RatFunc;
use carlitz_core::splitting::{
    factor_pattern_oracle, geometric_check, split_in_cyclotomic, split_table, PrimeOfA,
};
use carlitz_core::textparse::{parse_int_bivar, parse_int_poly};
use carlitz_core::ultra::{
    artin_schreier_demo, dirichlet_report, irreducibility_transfer_report, los_check,
    mae_tower_report, ramification_correspondence, shadow_build, shadow_galois_audit, zhat_tower_demo,
    GroupDescriptor, Predicate, Truncation, UltraFieldFamily, UltraPolyFamily,
    TRUNCATION_DISCLAIMER,
};
use carlitz_core::Error as CoreError;

use config::{Config, DEFAULT_PHI_CAP};

const REPORT_SCHEMA: &str = "carlitz-lab/report/1";
const ERROR_SCHEMA: &str = "carlitz-lab/error/1";

#[derive(Parser)]
#[command(
    name = "carlitz-lab",
    about = "Computations in rational function fields over finite fields: Carlitz torsion, \
             cyclotomic function fields, prime splitting, and truncated ultraproduct audits",
    version
)]
struct Cli {
    /// Output mode.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Json)]
    output: OutputMode,
    /// Seed for the randomized equal-degree splitting; fixed by default
    /// so runs are reproducible.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Path to a key-value config file (also via CARLITZ_LAB_CONFIG).
    #[arg(long, global = true)]
    config: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field element operations.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Univariate polynomial factorization and irreducibility.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Carlitz module and cyclotomic function field computations.
    Carlitz {
        #[command(subcommand)]
        cmd: CarlitzCmd,
    },
    /// Prime splitting tables, the factor-pattern oracle, and geometric
    /// checks.
    Split {
        #[command(subcommand)]
        cmd: SplitCmd,
    },
    /// Kummer subfield witnesses.
    Kummer {
        #[command(subcommand)]
        cmd: KummerCmd,
    },
    /// Truncated ultraproduct families and transfer audits.
    Ultra {
        #[command(subcommand)]
        cmd: UltraCmd,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Product, inverse, and multiplicative order of field elements.
    Ops {
        /// Field order q = p^k.
        #[arg(long)]
        q: u64,
        /// Optional explicit modulus in z, e.g. "z^2+z+1".
        #[arg(long)]
        modulus: Option<String>,
        /// Element in generator notation, e.g. "z+1" (an integer for
        /// prime fields).
        #[arg(long)]
        a: String,
        /// Optional second element for the product.
        #[arg(long)]
        b: Option<String>,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Full factorization into monic irreducibles.
    Factor {
        #[arg(long)]
        q: u64,
        /// Polynomial in t, e.g. "t^3+t+1".
        #[arg(long)]
        f: String,
    },
    /// Rabin irreducibility verdict.
    Irred {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        f: String,
    },
}

#[derive(Subcommand)]
enum CarlitzCmd {
    /// Evaluate the module action a·β at a rational function β.
    Eval {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        /// Rational function, e.g. "t" or "(t+1)/(t^2)".
        #[arg(long)]
        beta: String,
    },
    /// The torsion polynomial ψ for a prime power.
    Cyclo {
        #[arg(long)]
        q: u64,
        /// Monic prime of A.
        #[arg(long = "P")]
        prime: String,
        #[arg(long, default_value_t = 1)]
        h: u32,
    },
    /// The cyclotomic field with its Galois table (compositum record
    /// for composite moduli).
    Galois {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
    /// Degree of the n-th layer of the 1/t-twisted tower.
    Rn {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
}

#[derive(Subcommand)]
enum SplitCmd {
    /// Splitting data of all primes up to a degree bound, with the
    /// factor-pattern oracle cross-check per row.
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        #[arg(long = "Qmaxdeg")]
        qmaxdeg: usize,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
    /// The factor-pattern oracle and the splitting formula for one
    /// prime.
    Oracle {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: String,
        /// The prime whose splitting is computed.
        #[arg(long)]
        prime: String,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
    /// Geometric (constant-field extension) check for ψ_P.
    Geom {
        #[arg(long)]
        q: u64,
        #[arg(long = "P")]
        prime: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
}

#[derive(Subcommand)]
enum KummerCmd {
    /// Resolvent witness for the degree-n Kummer subfield of Q_P.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long = "P")]
        prime: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_PHI_CAP)]
        phi_cap: u64,
    },
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family generator: dirichlet | primes | constant:<q> | table.
    #[arg(long)]
    family: Option<String>,
    /// Number of indices.
    #[arg(long = "N")]
    len: Option<usize>,
    /// First tail index.
    #[arg(long)]
    tail_start: Option<usize>,
    /// Field orders for the table family, comma separated.
    #[arg(long)]
    qs: Option<String>,
    /// Unit-group enumeration cap.
    #[arg(long)]
    phi_cap: Option<u64>,
    /// Density threshold (e.g. 0.8 or 4/5); strict tail semantics when
    /// absent.
    #[arg(long)]
    theta: Option<String>,
}

#[derive(Subcommand)]
enum UltraCmd {
    /// The factorial prime family and its divisibility invariants.
    Dirichlet {
        #[arg(long = "N", default_value_t = 8)]
        len: usize,
        #[arg(long, default_value_t = 3)]
        tail_start: usize,
    },
    /// Evaluate a named predicate per index and aggregate the tail
    /// verdict.
    Los {
        /// is_irreducible | has_root_in_base | degree_equals(d) |
        /// is_separable | is_primitive.
        #[arg(long)]
        pred: String,
        /// Integer-coefficient polynomial, e.g. "t^2+1" or "x^2 - t".
        #[arg(long)]
        poly: String,
        /// Interpret the polynomial in A[x] rather than in t.
        #[arg(long, default_value_t = false)]
        bivar: bool,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Per-index irreducibility certificates with bound audits.
    Transfer {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Build shadows from a minimal polynomial and audit their Galois
    /// descriptors.
    Shadow {
        /// Integer-coefficient minimal polynomial in A[x].
        #[arg(long)]
        minpoly: String,
        #[arg(long)]
        expect_order: u64,
        #[arg(long, default_value_t = true)]
        expect_cyclic: bool,
        /// Audit tail starts at max(tail_start, this).
        #[arg(long, default_value_t = 1)]
        tail_from: usize,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Splitting data of a prime across a shadow family, stabilized
    /// over the tail.
    Ramify {
        /// Integer-coefficient shadow minimal polynomial in A[x].
        #[arg(long)]
        shadow: String,
        /// Integer-coefficient prime of A.
        #[arg(long = "P")]
        prime: String,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// The compatible tower of cyclic Kummer levels over the factorial
    /// prime family.
    Tower {
        #[arg(long = "P")]
        prime: String,
        #[arg(long)]
        nmax: u64,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Abelian tower degrees per index (constants, torsion at t,
    /// twisted layers).
    Mae {
        #[arg(long = "B")]
        bound: usize,
        /// Wrap the family into a second-level family with this many
        /// copies.
        #[arg(long)]
        nested: Option<usize>,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Prime-degree extensions with pairwise distinct characteristics:
    /// the divisor-set audit.
    ArtinSchreier {
        /// Integer-coefficient element of A.
        #[arg(long)]
        a: String,
        #[command(flatten)]
        family: FamilyArgs,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(64)
                }
            };
        }
    };
    match run(cli) {
        Ok(emitted) => {
            println!("{}", emitted.text);
            if emitted.partial {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(failure) => {
            println!("{}", failure.payload);
            ExitCode::from(failure.code)
        }
    }
}

struct Emitted {
    text: String,
    partial: bool,
}

struct Failure {
    code: u8,
    payload: String,
}

fn failure_from(err: CoreError) -> Failure {
    let kind = error_kind(&err);
    let code = if matches!(err, CoreError::TooLarge) { 3 } else { 2 };
    let payload = serde_json::to_string(&json!({
        "schema": ERROR_SCHEMA,
        "error": { "kind": kind, "message": err.to_string() },
        "partial": code == 3,
    }))
    .expect("error object serializes");
    Failure { code, payload }
}

fn usage_failure(message: String) -> Failure {
    Failure {
        code: 2,
        payload: serde_json::to_string(&json!({
            "schema": ERROR_SCHEMA,
            "error": { "kind": "invalid-argument", "message": message },
            "partial": false,
        }))
        .expect("error object serializes"),
    }
}

fn error_kind(err: &CoreError) -> &'static str {
    match err {
        CoreError::OwnerMismatch => "owner-mismatch",
        CoreError::DivisionByZero => "division-by-zero",
        CoreError::SearchExhausted => "search-exhausted",
        CoreError::UndefinedGcd => "undefined-gcd",
        CoreError::DegreeTooSmall => "degree-too-small",
        CoreError::NotPrime => "not-prime",
        CoreError::NotAFactorization => "not-a-factorization",
        CoreError::NotPrimitive => "not-primitive",
        CoreError::ZeroInput => "zero-input",
        CoreError::UseCompositum => "use-compositum",
        CoreError::TooLarge => "cap-exceeded",
        CoreError::NotASubgroup => "not-a-subgroup",
        CoreError::NotADivisor => "not-a-divisor",
        CoreError::RamifiedCase => "ramified-case",
        CoreError::WildOrInseparableCase => "wild-or-inseparable",
        CoreError::DegeneratedLeadingCoefficient => "degenerated-leading-coefficient",
        CoreError::NoShadow => "no-shadow",
        CoreError::UnknownPredicate => "unknown-predicate",
        CoreError::PreconditionFailed(_) => "precondition-failed",
        CoreError::NestingTooDeep => "nesting-too-deep",
        CoreError::Parse(_) => "parse-error",
        CoreError::Internal(_) => "internal",
    }
}

#[derive(Serialize)]
struct Envelope<T: Serialize> {
    schema: &'static str,
    command: String,
    params: BTreeMap<String, Value>,
    seed: u64,
    partial: bool,
    disclaimers: Vec<String>,
    citations: Vec<String>,
    result: T,
}

struct Emitter {
    mode: OutputMode,
    seed: u64,
}

impl Emitter {
    fn emit<T: Serialize>(
        &self,
        command: &str,
        params: BTreeMap<String, Value>,
        disclaimers: Vec<String>,
        citations: Vec<String>,
        partial: bool,
        result: T,
    ) -> Result<Emitted, Failure> {
        let envelope = Envelope {
            schema: REPORT_SCHEMA,
            command: command.to_string(),
            params,
            seed: self.seed,
            partial,
            disclaimers,
            citations,
            result,
        };
        let text = match self.mode {
            OutputMode::Json => serde_json::to_string(&envelope),
            OutputMode::Pretty => serde_json::to_string_pretty(&envelope),
            OutputMode::Tsv => {
                let value = serde_json::to_value(&envelope)
                    .map_err(|e| usage_failure(format!("serialization failed: {e}")))?;
                return Ok(Emitted {
                    text: to_tsv(&value),
                    partial,
                });
            }
        }
        .map_err(|e| usage_failure(format!("serialization failed: {e}")))?;
        Ok(Emitted { text, partial })
    }
}

/// Flatten a JSON value into deterministic tab-separated `path<TAB>value`
/// lines; arrays of flat objects (tables) render as header + rows.
fn to_tsv(value: &Value) -> String {
    // Special case: the result is a table of flat objects.
    if let Some(rows) = value.pointer("/result").and_then(Value::as_array) {
        if !rows.is_empty() && rows.iter().all(|r| r.is_object()) {
            let flat = rows.iter().all(|r| {
                r.as_object()
                    .map(|o| o.values().all(|v| !v.is_object()))
                    .unwrap_or(false)
            });
            if flat {
                let mut out = String::new();
                let header: Vec<&str> = rows[0]
                    .as_object()
                    .unwrap()
                    .keys()
                    .map(String::as_str)
                    .collect();
                out.push_str(&header.join("\t"));
                out.push('\n');
                for row in rows {
                    let cells: Vec<String> = header
                        .iter()
                        .map(|k| scalar_to_tsv(row.get(*k).unwrap_or(&Value::Null)))
                        .collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
                out.pop();
                return out;
            }
        }
    }
    let mut lines = Vec::new();
    flatten(value, String::new(), &mut lines);
    lines.join("\n")
}

fn scalar_to_tsv(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(scalar_to_tsv)
            .collect::<Vec<_>>()
            .join(","),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn flatten(value: &Value, prefix: String, out: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(v, key, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, format!("{prefix}[{i}]"), out);
            }
        }
        scalar => out.push(format!("{prefix}\t{}", scalar_to_tsv(scalar))),
    }
}

fn load_config(cli_config: &Option<String>) -> Result<Config, Failure> {
    let mut cfg = Config::default();
    let path = cli_config
        .clone()
        .or_else(|| std::env::var("CARLITZ_LAB_CONFIG").ok());
    if let Some(path) = path {
        let text = std::fs::read_to_string(&path)
            .map_err(|e| usage_failure(format!("cannot read config '{path}': {e}")))?;
        cfg.apply_text(&text).map_err(usage_failure)?;
    }
    Ok(cfg)
}

fn merge_family_args(cfg: &mut Config, args: &FamilyArgs) -> Result<(), Failure> {
    if let Some(f) = &args.family {
        cfg.family = config::parse_family(f).map_err(usage_failure)?;
    }
    if let Some(n) = args.len {
        cfg.len = n;
    }
    if let Some(t) = args.tail_start {
        cfg.tail_start = t;
    }
    if let Some(qs) = &args.qs {
        cfg.qs = qs
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage_failure("bad qs list".into()))?;
    }
    if let Some(cap) = args.phi_cap {
        cfg.phi_cap = cap;
    }
    if let Some(theta) = &args.theta {
        cfg.theta = Some(config::parse_theta(theta).map_err(usage_failure)?);
    }
    Ok(())
}

fn family_params(cfg: &Config) -> BTreeMap<String, Value> {
    let mut params = BTreeMap::new();
    params.insert(
        "family".into(),
        json!(match &cfg.family {
            config::FamilyChoice::Dirichlet => "dirichlet".to_string(),
            config::FamilyChoice::Primes => "primes".to_string(),
            config::FamilyChoice::Constant(q) => format!("constant:{q}"),
            config::FamilyChoice::Table => "table".to_string(),
        }),
    );
    params.insert("N".into(), json!(cfg.len));
    params.insert("tail_start".into(), json!(cfg.tail_start));
    params.insert("phi_cap".into(), json!(cfg.phi_cap));
    if !cfg.qs.is_empty() {
        params.insert("qs".into(), json!(cfg.qs));
    }
    if let Some((num, den)) = cfg.theta {
        params.insert("theta".into(), json!(format!("{num}/{den}")));
    }
    params
}

fn field_for(q: u64, modulus: &Option<String>) -> Result<Field, CoreError> {
    match modulus {
        None => field_of_order(q),
        Some(text) => {
            let (p, k) = prime_power_parts(q)?;
            let prime = FieldSpec::prime(p)?;
            let parsed = Poly::parse_with_var(&prime, text, "z")?;
            let deg = parsed.deg().ok_or(CoreError::ZeroInput)?;
            if deg != k {
                return Err(CoreError::Parse(
                    "modulus degree does not match field order".into(),
                ));
            }
            let coeffs: Vec<u64> = (0..=deg).map(|i| parsed.coeff(i).value() as u64).collect();
            FieldSpec::with_modulus(p, &coeffs)
        }
    }
}

fn run(cli: Cli) -> Result<Emitted, Failure> {
    let mut cfg = load_config(&cli.config)?;
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    let emitter = Emitter {
        mode: cli.output,
        seed: cfg.seed,
    };
    match cli.command {
        Command::Field { cmd } => run_field(cmd, &emitter),
        Command::Poly { cmd } => run_poly(cmd, &emitter),
        Command::Carlitz { cmd } => run_carlitz(cmd, &emitter),
        Command::Split { cmd } => run_split(cmd, &emitter),
        Command::Kummer { cmd } => run_kummer(cmd, &emitter),
        Command::Ultra { cmd } => run_ultra(cmd, cfg, &emitter),
    }
}

fn run_field(cmd: FieldCmd, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        FieldCmd::Ops { q, modulus, a, b } => {
            let field = field_for(q, &modulus).map_err(failure_from)?;
            let a_el = carlitz_core::gf::FieldElement::parse(&field, &a).map_err(failure_from)?;
            let b_el = b
                .as_ref()
                .map(|s| carlitz_core::gf::FieldElement::parse(&field, s))
                .transpose()
                .map_err(failure_from)?;
            let product = b_el
                .as_ref()
                .map(|b_el| a_el.mul(b_el).map(|p| p.to_string()))
                .transpose()
                .map_err(failure_from)?;
            let (inverse, order) = if a_el.is_zero() {
                (None, None)
            } else {
                (
                    Some(a_el.inv().map_err(failure_from)?.to_string()),
                    Some(a_el.mult_order().map_err(failure_from)?),
                )
            };
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("a".into(), json!(a));
            if let Some(b) = &b {
                params.insert("b".into(), json!(b));
            }
            emitter.emit(
                "field ops",
                params,
                vec![],
                vec!["exhaustively tested field axioms back this arithmetic".into()],
                false,
                json!({
                    "field": field.to_string(),
                    "a": a_el.to_string(),
                    "b": b_el.map(|e| e.to_string()),
                    "product": product,
                    "inverse_of_a": inverse,
                    "order_of_a": order,
                }),
            )
        }
    }
}

fn run_poly(cmd: PolyCmd, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        PolyCmd::Factor { q, f } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let poly = Poly::parse(&field, &f).map_err(failure_from)?;
            let (unit, factors) = poly.factor(emitter.seed).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("f".into(), json!(f));
            emitter.emit(
                "poly factor",
                params,
                vec![],
                vec!["reassembly of the returned factors reproduces the input".into()],
                false,
                json!({
                    "unit": unit.to_string(),
                    "factors": factors
                        .iter()
                        .map(|(g, m)| json!({ "factor": g.to_string(), "multiplicity": m }))
                        .collect::<Vec<_>>(),
                }),
            )
        }
        PolyCmd::Irred { q, f } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let poly = Poly::parse(&field, &f).map_err(failure_from)?;
            let verdict = poly.is_irreducible().map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("f".into(), json!(f));
            emitter.emit(
                "poly irred",
                params,
                vec![],
                vec![],
                false,
                json!({ "irreducible": verdict }),
            )
        }
    }
}

fn run_carlitz(cmd: CarlitzCmd, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        CarlitzCmd::Eval { q, a, beta } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let a_poly = Poly::parse(&field, &a).map_err(failure_from)?;
            let beta_rf = RatFunc::parse(&field, &beta).map_err(failure_from)?;
            let value = carlitz_eval_rat(&a_poly, &beta_rf).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("a".into(), json!(a));
            params.insert("beta".into(), json!(beta));
            emitter.emit(
                "carlitz eval",
                params,
                vec![],
                vec![],
                false,
                json!({ "value": value.to_string() }),
            )
        }
        CarlitzCmd::Cyclo { q, prime, h } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let p = Poly::parse(&field, &prime).map_err(failure_from)?;
            let psi = cyclo_poly(&p, h).map_err(failure_from)?;
            let eisenstein = psi.eisenstein_check(&p).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("P".into(), json!(prime));
            params.insert("h".into(), json!(h));
            emitter.emit(
                "carlitz cyclo",
                params,
                vec![],
                vec!["the torsion polynomial is Eisenstein at P, certifying total ramification"
                    .into()],
                false,
                json!({
                    "psi": psi.to_string(),
                    "x_degree": psi.xdeg(),
                    "eisenstein_at_P": eisenstein,
                }),
            )
        }
        CarlitzCmd::Galois { q, a, phi_cap } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let a_poly = Poly::parse(&field, &a).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("a".into(), json!(a));
            params.insert("phi_cap".into(), json!(phi_cap));
            match build_cyclotomic(&a_poly, phi_cap) {
                Ok(cyc) => emitter.emit(
                    "carlitz galois",
                    params,
                    vec![],
                    vec!["table entries are verified roots of psi; the table is a group action"
                        .into()],
                    false,
                    json!({ "kind": "prime-power", "field": cyc.summary() }),
                ),
                Err(CoreError::UseCompositum) => {
                    let record = compositum_record(&a_poly).map_err(failure_from)?;
                    emitter.emit(
                        "carlitz galois",
                        params,
                        vec![],
                        vec!["composite moduli are presented as compositum records of their \
                              prime-power components"
                            .into()],
                        false,
                        json!({
                            "kind": "compositum",
                            "modulus": record.modulus.to_string(),
                            "components": record
                                .components
                                .iter()
                                .map(|(p, h, phi)| json!({
                                    "prime": p.to_string(),
                                    "exponent": h,
                                    "phi": phi,
                                }))
                                .collect::<Vec<_>>(),
                            "degree": record.degree,
                        }),
                    )
                }
                Err(e) => Err(failure_from(e)),
            }
        }
        CarlitzCmd::Rn { q, n, phi_cap } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let degree = infinity_twist_rn_degree(&field, n, phi_cap).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("n".into(), json!(n));
            emitter.emit(
                "carlitz rn",
                params,
                vec![],
                vec!["unit count of the twisted modulus divided by q-1".into()],
                false,
                json!({ "degree": degree, "equals_q_pow_n": true }),
            )
        }
    }
}

fn run_split(cmd: SplitCmd, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        SplitCmd::Table {
            q,
            a,
            qmaxdeg,
            phi_cap,
        } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let a_poly = Poly::parse(&field, &a).map_err(failure_from)?;
            let rows = split_table(&a_poly, qmaxdeg, phi_cap).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("a".into(), json!(a));
            params.insert("Qmaxdeg".into(), json!(qmaxdeg));
            emitter.emit(
                "split table",
                params,
                vec![],
                vec!["oracle column factors psi mod Q independently of the order formula".into()],
                false,
                rows,
            )
        }
        SplitCmd::Oracle {
            q,
            a,
            prime,
            phi_cap,
        } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let a_poly = Poly::parse(&field, &a).map_err(failure_from)?;
            let q_prime = PrimeOfA::new(Poly::parse(&field, &prime).map_err(failure_from)?)
                .map_err(failure_from)?;
            let data = split_in_cyclotomic(&q_prime, &a_poly, phi_cap).map_err(failure_from)?;
            let degrees = factor_pattern_oracle(&q_prime, &a_poly, phi_cap).map_err(failure_from)?;
            let agree = degrees.len() as u64 == data.g && degrees.iter().all(|&d| d as u64 == data.f);
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("a".into(), json!(a));
            params.insert("prime".into(), json!(prime));
            emitter.emit(
                "split oracle",
                params,
                vec![],
                vec!["factor degrees of psi mod Q, cross-checked against the order formula".into()],
                false,
                json!({ "splitting": data, "oracle_degrees": degrees, "agree": agree }),
            )
        }
        SplitCmd::Geom {
            q,
            prime,
            m,
            phi_cap,
        } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let p = PrimeOfA::new(Poly::parse(&field, &prime).map_err(failure_from)?)
                .map_err(failure_from)?;
            let report = geometric_check(&p, m, phi_cap).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("P".into(), json!(prime));
            params.insert("m".into(), json!(m));
            emitter.emit(
                "split geom",
                params,
                vec![],
                vec!["Eisenstein at each factor of P over the extended constants preserves the \
                      degree"
                    .into()],
                false,
                report,
            )
        }
    }
}

fn run_kummer(cmd: KummerCmd, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        KummerCmd::Verify {
            q,
            prime,
            n,
            phi_cap,
        } => {
            let field = field_of_order(q).map_err(failure_from)?;
            let p = Poly::parse(&field, &prime).map_err(failure_from)?;
            let report = kummer_witness(&p, n, phi_cap).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("q".into(), json!(q));
            params.insert("P".into(), json!(prime));
            params.insert("n".into(), json!(n));
            emitter.emit(
                "kummer verify",
                params,
                vec![],
                vec!["resolvent of the index-n subgroup, compared against the signed prime".into()],
                false,
                report,
            )
        }
    }
}

fn run_ultra(cmd: UltraCmd, mut cfg: Config, emitter: &Emitter) -> Result<Emitted, Failure> {
    match cmd {
        UltraCmd::Dirichlet { len, tail_start } => {
            let report = dirichlet_report(len, tail_start).map_err(failure_from)?;
            let mut params = BTreeMap::new();
            params.insert("N".into(), json!(len));
            params.insert("tail_start".into(), json!(tail_start));
            emitter.emit(
                "ultra dirichlet",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["smallest primes in the factorial progressions".into()],
                false,
                report,
            )
        }
        UltraCmd::Los {
            pred,
            poly,
            bivar,
            family,
        } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let predicate = Predicate::parse(&pred).map_err(failure_from)?;
            let poly_family = if bivar {
                let coeffs = parse_int_bivar(&poly).map_err(failure_from)?;
                UltraPolyFamily::lift_int_bivar(&fam, &coeffs).map_err(failure_from)?
            } else {
                let coeffs = parse_int_poly(&poly).map_err(failure_from)?;
                UltraPolyFamily::lift_int_poly(&fam, &coeffs).map_err(failure_from)?
            };
            let report = los_check(predicate, &poly_family).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("pred".into(), json!(pred));
            params.insert("poly".into(), json!(poly));
            params.insert("bivar".into(), json!(bivar));
            emitter.emit(
                "ultra los",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["per-index evaluation of a first-order predicate".into()],
                false,
                report,
            )
        }
        UltraCmd::Transfer { poly, family } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let coeffs = parse_int_bivar(&poly).map_err(failure_from)?;
            let poly_family =
                UltraPolyFamily::lift_int_bivar(&fam, &coeffs).map_err(failure_from)?;
            let report = irreducibility_transfer_report(&poly_family).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("poly".into(), json!(poly));
            emitter.emit(
                "ultra transfer",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["certificate stack: linear, Eisenstein, rational root; bound audits on \
                      explicit factorizations"
                    .into()],
                false,
                report,
            )
        }
        UltraCmd::Shadow {
            minpoly,
            expect_order,
            expect_cyclic,
            tail_from,
            family,
        } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let coeffs = parse_int_bivar(&minpoly).map_err(failure_from)?;
            let poly_family =
                UltraPolyFamily::lift_int_bivar(&fam, &coeffs).map_err(failure_from)?;
            let shadows = shadow_build(&poly_family, cfg.phi_cap).map_err(failure_from)?;
            let expected = GroupDescriptor {
                order: expect_order,
                cyclic: expect_cyclic,
                abelian: true,
            };
            let audit = shadow_galois_audit(&shadows, &expected, tail_from).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("minpoly".into(), json!(minpoly));
            params.insert("expect_order".into(), json!(expect_order));
            params.insert("expect_cyclic".into(), json!(expect_cyclic));
            params.insert("tail_from".into(), json!(tail_from));
            emitter.emit(
                "ultra shadow",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["per-index presentations with irreducibility certificates and Galois \
                      descriptors"
                    .into()],
                false,
                json!({ "shadows": shadows, "audit": audit }),
            )
        }
        UltraCmd::Ramify {
            shadow,
            prime,
            family,
        } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let coeffs = parse_int_bivar(&shadow).map_err(failure_from)?;
            let poly_family =
                UltraPolyFamily::lift_int_bivar(&fam, &coeffs).map_err(failure_from)?;
            let shadows = shadow_build(&poly_family, cfg.phi_cap).map_err(failure_from)?;
            let p_coeffs = parse_int_poly(&prime).map_err(failure_from)?;
            let report =
                ramification_correspondence(&shadows, &p_coeffs, cfg.phi_cap).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("shadow".into(), json!(shadow));
            params.insert("P".into(), json!(prime));
            emitter.emit(
                "ultra ramify",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec![report
                    .conclusions
                    .iter()
                    .map(|c| c.rule.describe().to_string())
                    .collect::<Vec<_>>()
                    .join("; ")],
                false,
                report,
            )
        }
        UltraCmd::Tower {
            prime,
            nmax,
            family,
        } => {
            merge_family_args(&mut cfg, &family)?;
            if cfg.family != config::FamilyChoice::Dirichlet {
                return Err(usage_failure(
                    "the tower audit runs over the dirichlet family".into(),
                ));
            }
            let fam = cfg.build_family().map_err(failure_from)?;
            let p_coeffs = parse_int_poly(&prime).map_err(failure_from)?;
            let report =
                zhat_tower_demo(&fam, &p_coeffs, nmax, cfg.phi_cap).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("P".into(), json!(prime));
            params.insert("nmax".into(), json!(nmax));
            let partial = report.levels.iter().any(|l| {
                l.witnesses
                    .iter()
                    .any(|(_, w)| matches!(w, carlitz_core::ultra::WitnessOutcome::Skipped { .. }))
            });
            emitter.emit(
                "ultra tower",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["compatible cyclic levels presented as finite-quotient evidence for the \
                      procyclic limit"
                    .into()],
                partial,
                report,
            )
        }
        UltraCmd::Mae {
            bound,
            nested,
            family,
        } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let fam = match nested {
                None => fam,
                Some(copies) => {
                    let tr = Truncation::new(copies, 1).map_err(failure_from)?;
                    UltraFieldFamily::depth2(tr, vec![fam; copies]).map_err(failure_from)?
                }
            };
            let report = mae_tower_report(&fam, bound, cfg.phi_cap).map_err(failure_from)?;
            let partial = report_has_skips(&report);
            let mut params = family_params(&cfg);
            params.insert("B".into(), json!(bound));
            if let Some(c) = nested {
                params.insert("nested".into(), json!(c));
            }
            emitter.emit(
                "ultra mae",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["abelian tower: constants, torsion at t, twisted layers at 1/t".into()],
                partial,
                report,
            )
        }
        UltraCmd::ArtinSchreier { a, family } => {
            merge_family_args(&mut cfg, &family)?;
            let fam = cfg.build_family().map_err(failure_from)?;
            let a_coeffs = parse_int_poly(&a).map_err(failure_from)?;
            let report = artin_schreier_demo(&fam, &a_coeffs).map_err(failure_from)?;
            let mut params = family_params(&cfg);
            params.insert("a".into(), json!(a));
            emitter.emit(
                "ultra artin-schreier",
                params,
                vec![TRUNCATION_DISCLAIMER.into()],
                vec!["divisor set of the degree hyperinteger".into()],
                false,
                report,
            )
        }
    }
}

fn report_has_skips(report: &carlitz_core::ultra::MaeReport) -> bool {
    match report {
        carlitz_core::ultra::MaeReport::Depth1 { per_index, .. } => {
            per_index.iter().any(|e| !e.skipped.is_empty())
        }
        carlitz_core::ultra::MaeReport::Depth2 { members, .. } => {
            members.iter().any(report_has_skips)
        }
    }
}
