//! Command-line front end: exact Littlewood-Richardson coefficients, Jack
//! polynomial expansions, Jack structure constants, and exhaustive
//! verification scans.
//!
//! Exit status: 0 on success (including clean scans), 2 when a scan finds
//! counterexamples, 1 on any operational error (bad arguments, I/O, rank
//! violations, poles).

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use jacklr::scan::OrderedMap;
use jacklr::{
    lr, run_scan, BigRat, HermitianCase, JackBasis, Partition, ScanKind,
    ScanParams,
};

#[derive(Parser)]
#[command(
    name = "jacklr",
    version,
    about = "Exact Littlewood-Richardson and Jack polynomial calculator",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    /// Jack expansion cache directory (overrides the JACKLR_CACHE
    /// environment variable; default `./.jackcache`).
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Littlewood-Richardson coefficients c^nu_{lambda,mu}.
    ///
    /// With nu, prints the single coefficient; without, the full list of
    /// (nu, c) pairs, largest nu first.
    Lr {
        /// Partition literal, e.g. `2,1` (empty partition: `0`).
        lambda: String,
        mu: String,
        nu: Option<String>,
    },
    /// Monomial expansion of the Jack polynomial P_lambda(x; alpha).
    Jack {
        lambda: String,
        /// Number of variables (must be at least the length of lambda).
        nvars: usize,
        #[command(flatten)]
        at: At,
    },
    /// Jack structure constants f^nu_{lambda,mu}(alpha).
    Struct {
        lambda: String,
        mu: String,
        /// Keep only expansion terms nu with at most this many parts.
        #[arg(long, value_name = "R")]
        rank: Option<usize>,
        #[command(flatten)]
        at: At,
    },
    /// Exhaustive verification sweep; exits 2 if counterexamples appear.
    Scan {
        /// One of: stanley, corollary57, pieri, prop61, conjB, saturation,
        /// duality.
        kind: String,
        /// Upper bound on |lambda| + |mu| (on |lambda| for pieri).
        #[arg(long, value_name = "N", default_value_t = 4)]
        max_size: usize,
        /// Cap partition lengths at R.
        #[arg(long, value_name = "R")]
        rank: Option<usize>,
        /// Comma-separated case literals for prop61/conjB, e.g.
        /// `sp:2,su:2,2` (defaults are kind-specific).
        #[arg(long, value_name = "LIST")]
        cases: Option<String>,
        /// Evaluation points alpha = 2/m for corollary57.
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        m_values: Vec<u64>,
        /// Worker threads; never affects the report bytes.
        #[arg(long, value_name = "W", default_value_t = 1)]
        workers: usize,
        /// Also write the JSON report to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Allow --max-size beyond the hard cap of 8.  Symbolic
        /// Gram-Schmidt cost explodes with the degree; expect long runs.
        #[arg(long = "i-know-what-im-doing")]
        allow_large: bool,
    },
}

/// Shared `--at` flag: evaluate the symbolic answer at a rational alpha.
#[derive(Args)]
struct At {
    /// Evaluate at alpha = Q (a rational literal such as `1` or `2/3`).
    #[arg(long, value_name = "Q")]
    at: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return ExitCode::from(if ok { 0 } else { 1 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> jacklr::Result<ExitCode> {
    let cache_dir = cli
        .cache
        .or_else(|| std::env::var_os("JACKLR_CACHE").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("./.jackcache"));
    let json = cli.json;
    match cli.cmd {
        Cmd::Lr { lambda, mu, nu } => cmd_lr(&lambda, &mu, nu.as_deref(), json),
        Cmd::Jack { lambda, nvars, at } => {
            cmd_jack(&lambda, nvars, parse_at(&at)?, json, &cache_dir)
        }
        Cmd::Struct { lambda, mu, rank, at } => {
            cmd_struct(&lambda, &mu, rank, parse_at(&at)?, json, &cache_dir)
        }
        Cmd::Scan {
            kind,
            max_size,
            rank,
            cases,
            m_values,
            workers,
            out,
            allow_large,
        } => {
            let mut params = ScanParams::new(ScanKind::from_str(&kind)?);
            params.max_size = max_size;
            params.rank = rank;
            params.cases = match cases {
                Some(list) => parse_cases(&list)?,
                None => Vec::new(),
            };
            params.m_values = m_values;
            params.workers = workers;
            params.allow_large = allow_large;
            params.cache_dir = Some(cache_dir);
            let report = run_scan(&params)?;
            if let Some(path) = out {
                std::fs::write(&path, report.to_json())?;
            }
            if json {
                print!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            Ok(if report.counterexamples.is_empty() {
                ExitCode::from(0)
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn parse_at(at: &At) -> jacklr::Result<Option<BigRat>> {
    match &at.at {
        None => Ok(None),
        Some(s) => s.trim().parse().map(Some).map_err(|e| {
            jacklr::Error::Parse {
                pos: 0,
                msg: format!("bad rational {s:?}: {e}"),
            }
        }),
    }
}

/// Split a `--cases` list on commas, re-attaching purely numeric segments
/// to their predecessor so `sp:2,su:2,2` parses as two literals.
fn parse_cases(list: &str) -> jacklr::Result<Vec<HermitianCase>> {
    let mut literals: Vec<String> = Vec::new();
    for seg in list.split(',') {
        let seg = seg.trim();
        if seg.is_empty() {
            continue;
        }
        let numeric = seg.chars().all(|c| c.is_ascii_digit());
        match literals.last_mut() {
            Some(prev) if numeric => {
                prev.push(',');
                prev.push_str(seg);
            }
            _ => literals.push(seg.to_string()),
        }
    }
    literals.iter().map(|l| l.parse()).collect()
}

/// The `{"coeffs":{...}}` JSON envelope, entries in the given order.
fn coeffs_json<V: Serialize>(pairs: Vec<(String, V)>) -> String {
    #[derive(Serialize)]
    struct Out<V: Serialize> {
        coeffs: OrderedMap<V>,
    }
    serde_json::to_string(&Out { coeffs: OrderedMap(pairs) })
        .expect("coefficient tables serialize")
}

fn cmd_lr(
    lambda: &str,
    mu: &str,
    nu: Option<&str>,
    json: bool,
) -> jacklr::Result<ExitCode> {
    let lam: Partition = lambda.parse()?;
    let mu: Partition = mu.parse()?;
    if let Some(nu) = nu {
        let nu: Partition = nu.parse()?;
        let c = lr::lr_coeff(&lam, &mu, &nu);
        if json {
            #[derive(Serialize)]
            struct Out {
                coeff: u64,
            }
            println!(
                "{}",
                serde_json::to_string(&Out { coeff: c }).expect("serializes")
            );
        } else {
            println!("{c}");
        }
        return Ok(ExitCode::from(0));
    }
    let product = lr::schur_product(&lam, &mu)?;
    if json {
        let pairs = product
            .iter()
            .rev()
            .map(|(nu, c)| (nu.to_string(), *c))
            .collect();
        println!("{}", coeffs_json(pairs));
    } else {
        for (nu, c) in product.iter().rev() {
            println!("({nu}): {c}");
        }
    }
    Ok(ExitCode::from(0))
}

fn cmd_jack(
    lambda: &str,
    nvars: usize,
    at: Option<BigRat>,
    json: bool,
    cache_dir: &PathBuf,
) -> jacklr::Result<ExitCode> {
    let lam: Partition = lambda.parse()?;
    let basis = JackBasis::with_disk_cache(cache_dir);
    let exp = basis.expand(&lam, nvars)?;
    match at {
        Some(q) => {
            let value = exp.evaluate_at(&q)?;
            if json {
                let pairs = value
                    .keys_desc()
                    .into_iter()
                    .map(|mu| (mu.to_string(), value.coeff(mu).to_string()))
                    .collect();
                println!("{}", coeffs_json(pairs));
            } else {
                println!("{value}");
            }
        }
        None => {
            if json {
                let pairs = exp
                    .coeffs()
                    .iter()
                    .rev()
                    .map(|(mu, c)| (mu.to_string(), c.to_string()))
                    .collect();
                println!("{}", coeffs_json(pairs));
            } else {
                println!("{exp}");
            }
        }
    }
    Ok(ExitCode::from(0))
}

fn cmd_struct(
    lambda: &str,
    mu: &str,
    rank: Option<usize>,
    at: Option<BigRat>,
    json: bool,
    cache_dir: &PathBuf,
) -> jacklr::Result<ExitCode> {
    let lam: Partition = lambda.parse()?;
    let mu: Partition = mu.parse()?;
    // With no rank cap, |lambda| + |mu| variables see the full expansion.
    let nvars = rank.unwrap_or(lam.size() + mu.size()).max(1);
    let basis = JackBasis::with_disk_cache(cache_dir);
    let table = jacklr::structure_constants(&basis, &lam, &mu, nvars)?;
    let rendered: Vec<(String, String)> = table
        .entries()
        .iter()
        .rev()
        .map(|(nu, f)| {
            let text = match &at {
                Some(q) => f.evaluate(q)?.to_string(),
                None => f.to_string(),
            };
            Ok((nu.to_string(), text))
        })
        .collect::<jacklr::Result<_>>()?;
    if json {
        println!("{}", coeffs_json(rendered));
    } else {
        for (nu, f) in &rendered {
            println!("({nu}): {f}");
        }
    }
    Ok(ExitCode::from(0))
}
