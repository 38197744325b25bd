//! Command-line surface for the composition library.
//!
//! Every subcommand reads/writes JSON (or CSV where tabular), with exact
//! rationals encoded as strings.  Exit codes: 0 success, 1 domain error
//! (structured JSON on stderr), 2 usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use szego_core::serialize::{
    certificate_to_json, expform_from_json, expform_to_json, factors_from_cli, factors_to_json,
    mode_str, poly_from_json, poly_to_json, rational_value, report_to_json, signature_to_json,
    spec_from_json, spec_to_json, specs_to_csv, summary_to_csv,
};
use szego_core::{
    check_necessary, decompose_exp, decompose_poly, enumerate_cases, phi_eigen_check, phi_report,
    realize_all, realize_case, signature_pair, Error, Mode, Rational, RatPoly, SearchConfig,
};

#[derive(Parser)]
#[command(
    name = "szego",
    version,
    about = "Exact composition of polynomials and entire functions e^x·R: \
             compose, decompose, classify, and realize sign patterns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Polynomial,
    Exponential,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Polynomial => Mode::Polynomial,
            ModeArg::Exponential => Mode::Exponential,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct SearchArgs {
    /// RNG seed for the realization search (env SZEGO_SEED overrides the
    /// default; this flag overrides both).
    #[arg(long)]
    seed: Option<u64>,
    /// Maximum magnitude-halving rounds per spec.
    #[arg(long)]
    budget: Option<usize>,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        let mut cfg = SearchConfig::default();
        if let Ok(s) = std::env::var("SZEGO_SEED") {
            if let Ok(v) = s.parse::<u64>() {
                cfg.seed = v;
            }
        }
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(b) = self.budget {
            cfg.max_rounds = b;
        }
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compose a factor list into a polynomial (or e^x·R in exponential mode).
    Compose {
        /// Composition order n (the polynomial degree).
        #[arg(long)]
        n: usize,
        /// JSON array of factors: rational strings, "inf", or [re, im] pairs.
        #[arg(long)]
        factors: String,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
    },
    /// Recover the factor multiset from a composed polynomial.
    Decompose {
        #[arg(long)]
        n: usize,
        /// Polynomial JSON {"coeffs": [...]}; "-" reads stdin.
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
    },
    /// Exact sign signature (8-vector) of a composed polynomial.
    Signature {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
    },
    /// Check the necessary conditions on a composed polynomial.
    Check {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
    },
    /// Enumerate every admissible case-parameter tuple for order n.
    EnumerateCases {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Realize one case spec: search for a composition with the prescribed signature.
    Realize {
        /// Case spec JSON (as emitted by enumerate-cases --format json).
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Realize every supported spec for order n and emit certificates + summary.
    RealizeAll {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "polynomial")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Report the affine coefficient map: eigenvalues per order and mode.
    Phi {
        /// Smallest order.
        #[arg(long, default_value = "2")]
        n_min: usize,
        /// Largest order.
        #[arg(long)]
        n_max: usize,
    },
    /// Run the invariant suites at reduced scale.
    Selftest {
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// Resolve an inline JSON argument, reading stdin when the value is "-".
fn read_json_arg(arg: &str) -> Result<Value, Error> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        buf
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Unsupported(_) => "unsupported",
        Error::BudgetExhausted(_) => "budget_exhausted",
        Error::NonConvergence { .. } => "non_convergence",
        _ => "domain",
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Compose { n, factors, mode } => {
            let fm = factors_from_cli(&read_json_arg(&factors)?)?;
            let mode: Mode = mode.into();
            match mode {
                Mode::Polynomial => {
                    let p = fm.recompose_poly(n)?;
                    println!("{}", poly_to_json(&p));
                }
                Mode::Exponential => {
                    if fm.total_count() != n - 1 {
                        return Err(Error::InvalidArgument(format!(
                            "need n-1 = {} factors, got {}",
                            n - 1,
                            fm.total_count()
                        )));
                    }
                    let f = fm.recompose_exp()?;
                    println!("{}", expform_to_json(&f));
                }
            }
        }
        Command::Decompose { n, poly, mode } => {
            let fm = decompose_arg(n, &poly, mode.into())?;
            println!("{}", factors_to_json(&fm));
        }
        Command::Signature { n, poly, mode } => {
            let p = poly_arg(&poly, mode.into())?;
            let sig = signature_pair(&p, n, mode.into())?;
            println!("{}", signature_to_json(&sig));
        }
        Command::Check { n, poly, mode } => {
            let mode: Mode = mode.into();
            let p = poly_arg(&poly, mode)?;
            let fm = match mode {
                Mode::Polynomial => decompose_poly(&p, n)?,
                Mode::Exponential => decompose_exp(&p)?,
            };
            let sig = signature_pair(&p, n, mode)?;
            let report = check_necessary(&sig, &fm, n, mode)?;
            println!("{}", report_to_json(&report));
            if !report.passed() {
                return Err(Error::InvalidArgument(
                    "necessary conditions violated".into(),
                ));
            }
        }
        Command::EnumerateCases { n, format } => {
            let specs = enumerate_cases(n)?;
            match format {
                FormatArg::Csv => print!("{}", specs_to_csv(&specs)),
                FormatArg::Json => {
                    let rows: Vec<Value> = specs.iter().map(spec_to_json).collect();
                    println!("{}", Value::Array(rows));
                }
            }
        }
        Command::Realize { spec, mode, search } => {
            let spec = spec_from_json(&read_json_arg(&spec)?)?;
            let cert = realize_case(&spec, mode.into(), &search.config())?;
            println!("{}", certificate_to_json(&cert));
        }
        Command::RealizeAll {
            n,
            mode,
            format,
            search,
        } => {
            let summary = realize_all(n, mode.into(), &search.config())?;
            match format {
                FormatArg::Csv => print!("{}", summary_to_csv(&summary)),
                FormatArg::Json => {
                    println!(
                        "{}",
                        json!({
                            "n": n,
                            "mode": mode_str(mode.into()),
                            "realized": summary.certificates.len(),
                            "unsupported": summary
                                .unsupported
                                .iter()
                                .map(spec_to_json)
                                .collect::<Vec<_>>(),
                            "certificates": summary
                                .certificates
                                .iter()
                                .map(certificate_to_json)
                                .collect::<Vec<_>>(),
                        })
                    );
                }
            }
        }
        Command::Phi { n_min, n_max } => {
            let reports = phi_report(n_min, n_max)?;
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "mode": mode_str(r.mode),
                        "eigenvalues": r
                            .eigenvalues
                            .iter()
                            .map(|(v, m)| json!([rational_value(v), m]))
                            .collect::<Vec<_>>(),
                        "splits": r.splits,
                        "all_positive": r.all_positive,
                        "char_poly": poly_to_json(&r.char_poly),
                    })
                })
                .collect();
            println!("{}", Value::Array(rows));
        }
        Command::Selftest { search } => selftest(&search.config())?,
    }
    Ok(())
}

/// Parse a `--poly` argument in either mode.  Exponential mode accepts both
/// the wrapped {"exp_times": {...}} form and a bare coefficient object for R.
fn poly_arg(arg: &str, mode: Mode) -> Result<RatPoly, Error> {
    let v = read_json_arg(arg)?;
    match mode {
        Mode::Polynomial => poly_from_json(&v),
        Mode::Exponential => {
            if v.get("exp_times").is_some() {
                Ok(expform_from_json(&v)?.y)
            } else {
                poly_from_json(&v)
            }
        }
    }
}

fn decompose_arg(
    n: usize,
    arg: &str,
    mode: Mode,
) -> Result<szego_core::FactorMultiset, Error> {
    let p = poly_arg(arg, mode)?;
    match mode {
        Mode::Polynomial => decompose_poly(&p, n),
        Mode::Exponential => decompose_exp(&p),
    }
}

/// Reduced-scale invariant sweep: identity law, compose/decompose round
/// trips, full realization for small orders, and the affine-map eigenvalues.
fn rat_one() -> Rational {
    Rational::new(1.into(), 1.into())
}

/// Reduced-scale invariant sweep entry point.
fn selftest(cfg: &SearchConfig) -> Result<(), Error> {
    use szego_core::compose::compose_factor_values;
    use szego_core::GaussRational;

    let mut failures = 0usize;
    let mut report = |name: &str, ok: bool| {
        println!("{} {}", if ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            failures += 1;
        }
    };

    // Identity: composing with value 1 in every slot returns (x+1)^n, and
    // decomposition recovers the all-ones multiset.
    let mut ok = true;
    for n in 2..=6usize {
        let values = vec![GaussRational::one(); n - 1];
        let p = compose_factor_values(&values, 0, &rat_one(), n)?;
        let expect = RatPoly::linear(rat_one()).pow(n);
        ok &= p == expect;
        let fm = decompose_poly(&p, n)?;
        ok &= fm.rational_factors == vec![rat_one(); n - 1];
    }
    report("identity-law", ok);

    // Round trip for a mixed multiset in both modes.
    let values = vec![
        GaussRational::from_real(Rational::new(2.into(), 1.into())),
        GaussRational::new(
            Rational::new(1.into(), 2.into()),
            Rational::new(3.into(), 4.into()),
        ),
        GaussRational::new(
            Rational::new(1.into(), 2.into()),
            Rational::new((-3).into(), 4.into()),
        ),
        GaussRational::zero(),
    ];
    let n = 5;
    let p = compose_factor_values(&values, 0, &rat_one(), n)?;
    let fm = decompose_poly(&p, n)?;
    report(
        "round-trip-polynomial",
        fm.recompose_poly(n)? == p && fm.zeros == 1 && fm.complex_pairs.len() == 1,
    );
    let f = fm.recompose_exp()?;
    let fm2 = decompose_exp(&f.y)?;
    report("round-trip-exponential", fm2 == fm);

    // Full realization at small order, certificates independently re-checked.
    for mode in [Mode::Polynomial, Mode::Exponential] {
        let mut ok = true;
        for n in 2..=4usize {
            let summary = realize_all(n, mode, cfg)?;
            for cert in &summary.certificates {
                ok &= cert.reverify()?;
            }
            ok &= summary
                .unsupported
                .iter()
                .all(|s| s.construction_unsupported);
        }
        report(&format!("realize-all-{}", mode_str(mode)), ok);
    }

    // Affine-map eigenvalues rational and positive.
    let mut ok = true;
    for n in 2..=6usize {
        for mode in [Mode::Polynomial, Mode::Exponential] {
            let r = phi_eigen_check(n, mode)?;
            ok &= r.splits && r.all_positive;
        }
    }
    report("phi-eigenvalues", ok);

    drop(report);
    if failures > 0 {
        return Err(Error::InvalidArgument(format!(
            "selftest: {failures} suite(s) failed"
        )));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!(
                "{}",
                json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } })
            );
            ExitCode::from(1)
        }
    }
}
