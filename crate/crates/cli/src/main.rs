//! Command-line surface: expansion, evaluation, transition rows, dimension
//! ratios, tableau counts and batch identity-verification suites.
//!
//! Output is JSON on stdout (rationals as strings, stable key order) so
//! runs can be diffed; timing goes to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage or parse errors.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fschur::lambda::{coeffs_to_json, expand_in_schur};
use fschur::multischur::{self, s_multi, transition_row, Route};
use fschur::partition::{Partition, SkewShape, BRUTE_CAP};
use fschur::rat::Rat;
use fschur::shifted;
use fschur::superpoly::{diagram_point, eval_lambda, EvalPoint};
use fschur::tableaux;
use fschur::verify::{self, SuiteConfig};
use fschur::{Error, ParameterSequence};

#[derive(Parser)]
#[command(name = "fschur", version, about = "Exact multiparameter and Frobenius-Schur symmetric functions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Expand s_{mu;a} in the Schur or h-monomial basis.
    Expand {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        seq: String,
        /// "schur" or "h".
        #[arg(long, default_value = "schur")]
        basis: String,
    },
    /// The transition row expressing s_{mu;from} over {s_{nu;to}}.
    Transition {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Evaluate s_{mu;seq} at a diagram point or an explicit point.
    Eval {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        seq: String,
        /// Evaluate at the diagram point of this partition.
        #[arg(long, conflicts_with = "at")]
        at_diagram: Option<String>,
        /// Explicit coordinates "x=1,1/2;y=0,3".
        #[arg(long)]
        at: Option<String>,
    },
    /// Relative dimension ratio dim(mu,nu)/dim(nu) by several methods.
    DimRatio {
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
        /// Comma-separated subset of brute,shifted,fs (default: all).
        #[arg(long)]
        methods: Option<String>,
    },
    /// Tableau counts for a skew shape; optional bijection check.
    Tableaux {
        /// Skew shape "outer/inner", e.g. "4,2,2/1,1".
        #[arg(long)]
        shape: String,
        #[arg(long)]
        n: usize,
        /// "primed" or "diagonal" (default: both).
        #[arg(long)]
        count: Option<String>,
        /// Run the path/tableau bijection check for this shape.
        #[arg(long)]
        verify_bijection: bool,
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_size: Option<u32>,
        #[arg(long)]
        max_mu: Option<u32>,
        #[arg(long)]
        max_lambda: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        seq: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Expand { mu, seq, basis } => cmd_expand(&mu, &seq, &basis),
        Cmd::Transition { mu, from, to } => cmd_transition(&mu, &from, &to),
        Cmd::Eval { mu, seq, at_diagram, at } => cmd_eval(&mu, &seq, at_diagram, at),
        Cmd::DimRatio { mu, nu, methods } => cmd_dim_ratio(&mu, &nu, methods),
        Cmd::Tableaux { shape, n, count, verify_bijection, seq, seed } => {
            cmd_tableaux(&shape, n, count, verify_bijection, seq, seed)
        }
        Cmd::Verify { suite, max_size, max_mu, max_lambda, n, seq, seed } => {
            let cfg = SuiteConfig {
                max_size,
                max_mu,
                max_lambda,
                n,
                seq: seq.as_deref().map(ParameterSequence::parse).transpose()?,
                seed,
            };
            cmd_verify(&suite, &cfg)
        }
    }
}

/// Validates a table window large enough for every lookup the commands
/// below make on behalf of mu (and optionally a second diagram).
fn require_windows(
    seq: &ParameterSequence,
    mu: &Partition,
    other: Option<&Partition>,
) -> Result<(), Error> {
    let (mut lo, mut hi) = multischur::jt_window(mu);
    if let Some(other) = other {
        let (lo2, hi2) = multischur::jt_window(other);
        lo = lo.min(lo2);
        hi = hi.max(hi2);
    }
    seq.require_window(lo, hi)
}

fn cmd_expand(mu: &str, seq: &str, basis: &str) -> Result<ExitCode, Error> {
    let mu = Partition::parse(mu)?;
    let seq = ParameterSequence::parse(seq)?;
    require_windows(&seq, &mu, None)?;
    let f = s_multi(&mu, &seq, Route::JacobiTrudi);
    let json = match basis {
        "schur" => expand_in_schur(&f).to_json_string(),
        "h" => {
            let map: BTreeMap<Partition, Rat> =
                f.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
            coeffs_to_json(&map)
        }
        other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
    };
    println!("{json}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_transition(mu: &str, from: &str, to: &str) -> Result<ExitCode, Error> {
    let mu = Partition::parse(mu)?;
    let from = ParameterSequence::parse(from)?;
    let to = ParameterSequence::parse(to)?;
    let (lo, hi) = multischur::transition_window(&mu);
    from.require_window(lo, hi)?;
    to.require_window(lo, hi)?;
    let row = transition_row(&mu, &from, &to);
    println!("{}", coeffs_to_json(&row));
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(
    mu: &str,
    seq: &str,
    at_diagram: Option<String>,
    at: Option<String>,
) -> Result<ExitCode, Error> {
    let mu = Partition::parse(mu)?;
    let seq = ParameterSequence::parse(seq)?;
    let pt: EvalPoint = match (at_diagram, at) {
        (Some(lam), None) => {
            let lam = Partition::parse(&lam)?;
            require_windows(&seq, &mu, Some(&lam))?;
            diagram_point(&lam, &seq, lam.depth().max(mu.depth()).max(1))
        }
        (None, Some(coords)) => {
            require_windows(&seq, &mu, None)?;
            EvalPoint::parse(&coords)?
        }
        _ => {
            return Err(Error::Parse(
                "exactly one of --at-diagram and --at is required".into(),
            ))
        }
    };
    let value = eval_lambda(&s_multi(&mu, &seq, Route::JacobiTrudi), &pt);
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_dim_ratio(mu: &str, nu: &str, methods: Option<String>) -> Result<ExitCode, Error> {
    let mu = Partition::parse(mu)?;
    let nu = Partition::parse(nu)?;
    let methods: Vec<String> = methods
        .unwrap_or_else(|| "brute,shifted,fs".into())
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    let mut values: Vec<(String, Rat)> = Vec::new();
    for m in &methods {
        let v = match m.as_str() {
            "brute" => {
                if nu.size() > BRUTE_CAP {
                    return Err(Error::Parse(format!(
                        "brute-force dimension counting is capped at |nu| <= {BRUTE_CAP}"
                    )));
                }
                shifted::dim_ratio_brute(&mu, &nu)
            }
            "shifted" => shifted::dim_ratio_shifted(&mu, &nu),
            "fs" => shifted::dim_ratio_fs(&mu, &nu),
            other => return Err(Error::Parse(format!("unknown method {other:?}"))),
        };
        values.push((m.clone(), v));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let mut obj = serde_json::Map::new();
    obj.insert("mu".into(), serde_json::Value::String(mu.to_string()));
    obj.insert("nu".into(), serde_json::Value::String(nu.to_string()));
    let mut ratios = serde_json::Map::new();
    for (name, v) in &values {
        ratios.insert(name.clone(), serde_json::Value::String(v.to_string()));
    }
    obj.insert("ratios".into(), serde_json::Value::Object(ratios));
    obj.insert("agree".into(), serde_json::Value::Bool(agree));
    println!("{}", serde_json::Value::Object(obj));
    if agree {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("dimension-ratio methods disagree");
        Ok(ExitCode::from(1))
    }
}

fn cmd_tableaux(
    shape: &str,
    n: usize,
    count: Option<String>,
    verify_bijection: bool,
    seq: Option<String>,
    seed: Option<u64>,
) -> Result<ExitCode, Error> {
    let shape = SkewShape::parse(shape)?;
    let seq = match seq {
        Some(s) => ParameterSequence::parse(&s)?,
        None => ParameterSequence::fs(),
    };
    if let Some(c) = count.as_deref() {
        if c != "diagonal" && c != "primed" {
            return Err(Error::Parse(format!("unknown count kind {c:?}")));
        }
    }
    let mut obj = serde_json::Map::new();
    obj.insert("shape".into(), serde_json::Value::String(shape.to_string()));
    obj.insert("n".into(), serde_json::Value::Number(n.into()));
    let want = |name: &str| count.as_deref().map(|c| c == name).unwrap_or(true);
    if want("diagonal") {
        let k = tableaux::enumerate_diagonal_strict(&shape, n).len();
        obj.insert("diagonal".into(), serde_json::Value::Number(k.into()));
    }
    if want("primed") {
        let k = tableaux::enumerate_primed(&shape, n).len();
        obj.insert("primed".into(), serde_json::Value::Number(k.into()));
    }
    let mut failed = false;
    if verify_bijection {
        let seed = seed.unwrap_or(verify::DEFAULT_SEED);
        let (x, y) = verify::seeded_point(seed, n);
        let collections = tableaux::enumerate_paths(&shape, n);
        let mut brute = tableaux::enumerate_primed(&shape, n);
        let mut images = Vec::with_capacity(collections.len());
        let mut ok = collections.len() == brute.len();
        for l in &collections {
            let t = tableaux::collection_to_tableau(l);
            ok &= tableaux::is_valid_primed(&shape, t.entries());
            ok &= tableaux::tableau_to_collection(&t, &shape, n) == *l;
            ok &= tableaux::collection_weight(l, &seq, &x, &y) == t.weight(&seq, &x, &y);
            images.push(t);
        }
        images.sort();
        images.dedup();
        brute.sort();
        ok &= images == brute;
        obj.insert(
            "bijection".into(),
            serde_json::Value::String(if ok { "ok".into() } else { "failed".into() }),
        );
        failed = !ok;
    }
    println!("{}", serde_json::Value::Object(obj));
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_verify(suite: &str, cfg: &SuiteConfig) -> Result<ExitCode, Error> {
    let report = verify::run_suite(suite, cfg)?;
    println!("{}", report.to_json_string());
    eprintln!(
        "suite {}: {} cases, {} failures, {} ms",
        report.suite,
        report.cases_run,
        report.failures.len(),
        report.elapsed_ms
    );
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
