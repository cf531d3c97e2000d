//! `grif`: the family table of root pairing sums, Griffiths reports, verification sweeps and
//! cocharacter predicates from the command line.

mod report;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use grif_core::cochar::{self, AutomorphismSet};
use grif_core::exact::{format_rational, parse_rational};
use grif_core::griffiths::proportionality;
use grif_core::par::{self, Execution};
use grif_core::repweights::{adjoint_weight_system, sum_weight_system, WeightSystem};
use grif_core::rootdata::{Coweight, Family, RootSystem, RootSystemSpec, Weight};
use grif_core::sweep::{run_check, SweepConfig};
use grif_core::{table1, Error};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "grif",
    version,
    about = "Griffiths characters of cocharacter data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the root pairing sums and Coxeter numbers per family.
    Table1 {
        #[arg(long, value_enum, default_value = "tsv")]
        format: TableFormat,
        /// Also print one line per instantiated rank.
        #[arg(long)]
        instances: bool,
    },
    /// Griffiths character of (G, mu, r).
    Grif {
        family: Family,
        rank: usize,
        /// Simple-root pairings of mu, e.g. `1,0` or `1/2,1`.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// `ad`, `hw:1,0`, or a sum such as `hw:1,0+hw:0,1`.
        #[arg(long, default_value = "ad")]
        rep: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the invariant suite over a grid of representations and cocharacters.
    Check {
        /// Comma-separated systems, e.g. `A1,A2,B2,G2`.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<RootSystemSpec>,
        #[arg(long, default_value_t = 1)]
        max_weight: u32,
        #[arg(long, default_value_t = 2)]
        max_mu: u32,
        #[arg(long)]
        include_adjoint: bool,
        #[arg(long)]
        rep_adjoint_only: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        weyl_samples: usize,
        /// Run on the current thread only.
        #[arg(long)]
        sequential: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Orbital p-closeness, quasi-constancy and minuscule test for mu.
    Pclose {
        family: Family,
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        p: Option<u64>,
        /// Verdicts for p = 2, 3, 5, 7.
        #[arg(long)]
        all: bool,
        /// Let the standard diagram involution act along with W.
        #[arg(long)]
        twisted: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn core_error(e: &Error) -> ExitCode {
    let debug = format!("{e:?}");
    let name: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    usage_error(format!("{name}: {e}"))
}

fn parse_mu(s: &str) -> Result<Coweight, String> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).ok_or_else(|| format!("bad mu coordinate {t:?}")))
        .collect::<Result<Vec<_>, _>>()
        .map(Coweight::new)
}

fn parse_rep(rs: &Arc<RootSystem>, s: &str) -> Result<Result<WeightSystem, Error>, String> {
    if s.trim() == "ad" {
        return Ok(Ok(adjoint_weight_system(rs)));
    }
    let mut lambdas = Vec::new();
    for part in s.split('+') {
        let coords = part
            .trim()
            .strip_prefix("hw:")
            .ok_or_else(|| format!("bad representation {part:?}; expected `ad` or `hw:coords`"))?;
        let v = coords
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad weight coordinate {t:?}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        lambdas.push(Weight::new(v));
    }
    Ok(sum_weight_system(rs, &lambdas))
}

fn system(family: Family, rank: usize) -> Result<Arc<RootSystem>, ExitCode> {
    RootSystemSpec::new(family, rank)
        .and_then(RootSystem::new)
        .map(Arc::new)
        .map_err(|e| core_error(&e))
}

fn cmd_table1(format: TableFormat, instances: bool) -> ExitCode {
    let rows = match table1::reproduce(Execution::Parallel) {
        Ok(r) => r,
        Err(e) => return core_error(&e),
    };
    match format {
        TableFormat::Tsv => print!("{}", report::table1_tsv(&rows, instances)),
        TableFormat::Json => println!("{}", report::to_json(&report::table1_json(&rows))),
    }
    let mut ok = true;
    for inst in rows.iter().flat_map(|r| r.instances.iter()) {
        for m in &inst.mismatches {
            eprintln!("mismatch: {m}");
            ok = false;
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_grif(family: Family, rank: usize, mu: &str, rep: &str, format: Format) -> ExitCode {
    let rs = match system(family, rank) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let mu = match parse_mu(mu) {
        Ok(m) => m,
        Err(e) => return usage_error(e),
    };
    let ws = match parse_rep(&rs, rep) {
        Ok(Ok(ws)) => ws,
        Ok(Err(e)) => return core_error(&e),
        Err(e) => return usage_error(e),
    };
    let r = match proportionality(&ws, &mu) {
        Ok(r) => r,
        Err(e) => return core_error(&e),
    };
    let out = report::GrifJson::new(&rs, &ws, &r);
    match format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Text => print!("{}", out.text()),
    }
    if r.ray_ok && r.direct_eq_closed && r.anti_dominant {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_check(config: SweepConfig, format: Format) -> ExitCode {
    let summary = match run_check(&config) {
        Ok(s) => s,
        Err(e) => return core_error(&e),
    };
    for w in &summary.warnings {
        eprintln!("warning: {w}");
    }
    let out = report::CheckJson::new(&summary);
    match format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Text => print!("{}", out.text()),
    }
    if summary.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn cmd_pclose(
    family: Family,
    rank: usize,
    mu: &str,
    p: Option<u64>,
    twisted: bool,
    format: Format,
) -> ExitCode {
    let rs = match system(family, rank) {
        Ok(rs) => rs,
        Err(code) => return code,
    };
    let mu = match parse_mu(mu) {
        Ok(m) => m,
        Err(e) => return usage_error(e),
    };
    if mu.rank() != rs.rank() {
        return core_error(&Error::DimensionMismatch {
            expected: rs.rank(),
            got: mu.rank(),
        });
    }
    let auts = if twisted {
        AutomorphismSet::standard_involution(&rs)
    } else {
        AutomorphismSet::split()
    };
    let primes = match p {
        Some(p) => vec![p],
        None => vec![2, 3, 5, 7],
    };
    let mut verdicts = Vec::new();
    for &p in &primes {
        match cochar::orbitally_p_close(&rs, &mu, p, &auts) {
            Ok(v) => verdicts.push((p, v)),
            Err(e) => return core_error(&e),
        }
    }
    if mu.is_central() {
        eprintln!("warning: mu is central; every predicate holds vacuously");
    }
    let out = report::PcloseJson {
        schema: report::PCLOSE_SCHEMA,
        system: rs.spec().to_string(),
        mu: mu.coords().iter().map(format_rational).collect(),
        twisted,
        verdicts: verdicts
            .into_iter()
            .map(|(p, close)| report::Verdict { p, close })
            .collect(),
        max_ratio: cochar::max_pairing_ratio(&rs, &mu, &auts).map(|r| format_rational(&r)),
        min_p: cochar::min_admissible_prime(&rs, &mu, &auts),
        quasi_constant: cochar::quasi_constant(&rs, &mu, &auts),
        minuscule: cochar::is_minuscule(&rs, &mu),
    };
    match format {
        Format::Json => println!("{}", report::to_json(&out)),
        Format::Text => print!("{}", out.text()),
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    if let Ok(v) = std::env::var("GRIF_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = par::configure_threads(n) {
                    return usage_error(format!("GRIF_THREADS: {e}"));
                }
            }
            _ => {
                return usage_error(format!(
                    "GRIF_THREADS must be a positive integer, got {v:?}"
                ))
            }
        }
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Table1 { format, instances } => cmd_table1(format, instances),
        Command::Grif {
            family,
            rank,
            mu,
            rep,
            format,
        } => cmd_grif(family, rank, &mu, &rep, format),
        Command::Check {
            families,
            max_weight,
            max_mu,
            include_adjoint,
            rep_adjoint_only,
            seed,
            weyl_samples,
            sequential,
            format,
        } => cmd_check(
            SweepConfig {
                families,
                max_weight_coord: max_weight,
                max_mu_coord: max_mu,
                include_adjoint,
                adjoint_only: rep_adjoint_only,
                seed,
                weyl_samples,
                execution: if sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                },
                ..SweepConfig::default()
            },
            format,
        ),
        Command::Pclose {
            family,
            rank,
            mu,
            p,
            all: _,
            twisted,
            format,
        } => cmd_pclose(family, rank, &mu, p, twisted, format),
    }
}
