//! Command-line interface and the parallel sweep runner.
//!
//! Exit codes: 0 success, 64 usage, 65 domain violation, 70 internal
//! consistency failure, 74 I/O failure. The sweep distributes independent
//! (p,q) computations over a worker pool and emits rows in ascending p
//! regardless of scheduling, so output bytes are identical for any --jobs.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::Error;
use crate::flat::LensSpace;
use crate::floer::{assemble_complex, boundary_element, grading};
use crate::invariants::{obstruction_report_from, theta_dirac_parity, ObstructionReport, Verdict};
use crate::lattice::count_lattice;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;
pub const EXIT_INTERNAL: i32 = 70;
pub const EXIT_IO: i32 = 74;

/// Environment variable capping p (default 1000000).
pub const MAX_P_ENV: &str = "LENSFLOER_MAX_P";
const DEFAULT_MAX_P: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "lensfloer",
    version,
    about = "Exact instanton Floer homology of lens spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Assemble the Floer complex of L(p,q) and print homology.
    Complex {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Floer grading of the class rho_l on L(p,q).
    Delta {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: u64,
        /// Print the bundle parameter, lattice counts and solution list.
        #[arg(long)]
        evidence: bool,
    },
    /// Boundary matrix element <d rho_l, rho_m> on L(p,q).
    Boundary {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        m: u64,
        /// Print every sign-choice candidate with counts and Dirac witnesses.
        #[arg(long)]
        evidence: bool,
    },
    /// Decomposition-obstruction verdict for L(p,2).
    Obstruct {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Homology/verdict sweep over odd p in [p-min, p-max] coprime to q.
    Sweep {
        #[arg(long)]
        p_min: u64,
        #[arg(long)]
        p_max: u64,
        #[arg(long, default_value_t = 2)]
        q: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
        /// Worker threads (defaults to the rayon global pool).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

/// CLI-level error carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Internal(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Internal(_) => EXIT_INTERNAL,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(m) | CliError::Internal(m) | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(m) => CliError::Domain(m),
            Error::Inconsistency(m) => CliError::Internal(m),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

fn max_p() -> u64 {
    std::env::var(MAX_P_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_P)
}

fn check_cap(p: u64) -> Result<(), CliError> {
    let cap = max_p();
    if p > cap {
        return Err(CliError::Domain(format!(
            "p = {p} exceeds the cap {cap} ({MAX_P_ENV})"
        )));
    }
    Ok(())
}

/// One row of the sweep CSV.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub p: u64,
    pub q: u64,
    pub homology: [usize; 4],
    pub i_theta_even: bool,
    pub verdict: Verdict,
}

impl SweepRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.p,
            self.q,
            self.homology[0],
            self.homology[1],
            self.homology[2],
            self.homology[3],
            self.i_theta_even,
            self.verdict
        )
    }
}

pub const SWEEP_HEADER: &str = "p,q,h0,h1,h2,h3,i_theta_even,verdict";

fn sweep_row(p: u64, q: u64) -> Result<SweepRow, CliError> {
    let y = LensSpace::new(p, q)?;
    let complex = assemble_complex(&y)?;
    if q == 2 {
        let report = obstruction_report_from(&complex)?;
        Ok(SweepRow {
            p,
            q,
            homology: complex.homology,
            i_theta_even: report.i_theta_even,
            verdict: report.verdict,
        })
    } else {
        // The obstruction verdict is only defined in the q = 2 configuration.
        let i_theta_even = if p % 8 == 1 {
            theta_dirac_parity(p)? == 0
        } else {
            false
        };
        Ok(SweepRow {
            p,
            q,
            homology: complex.homology,
            i_theta_even,
            verdict: Verdict::NotApplicable,
        })
    }
}

/// All sweep rows for odd p in [p_min, p_max] with gcd(p,q) = 1 and q < p,
/// ascending in p independent of worker scheduling.
pub fn sweep_rows(p_min: u64, p_max: u64, q: u64) -> Result<Vec<SweepRow>, CliError> {
    let ps: Vec<u64> = (p_min..=p_max)
        .filter(|&p| p % 2 == 1 && p >= 3 && q < p && crate::exact::gcd_u64(p, q) == 1)
        .collect();
    let mut rows = ps
        .into_par_iter()
        .map(|p| sweep_row(p, q))
        .collect::<Result<Vec<_>, CliError>>()?;
    rows.sort_by_key(|r| r.p);
    Ok(rows)
}

fn cmd_complex(p: u64, q: u64, format: Format) -> Result<(), CliError> {
    check_cap(p)?;
    let y = LensSpace::new(p, q)?;
    let complex = assemble_complex(&y)?;
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&complex).expect("serializable")
            );
        }
        Format::Text => {
            println!("{y}");
            for i in 0..4 {
                let names: Vec<String> = complex.generators[i]
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                println!(
                    "C_{i}: {}",
                    if names.is_empty() {
                        "-".into()
                    } else {
                        names.join(" ")
                    }
                );
            }
            for i in 0..4 {
                println!("d_{i} (C_{i} -> C_{}):", (i + 3) % 4);
                for row in complex.boundaries[i].bit_rows() {
                    println!("  {row}");
                }
            }
            let h = complex.homology;
            println!("I = ({},{},{},{})", h[0], h[1], h[2], h[3]);
        }
    }
    Ok(())
}

fn cmd_delta(p: u64, q: u64, l: u64, evidence: bool) -> Result<(), CliError> {
    check_cap(p)?;
    let y = LensSpace::new(p, q)?;
    let d = grading(l, &y)?;
    println!("{d}");
    if evidence {
        let k = crate::flat::grading_kpair(crate::flat::canonical_label(l as i64, p), &y)?;
        let c = count_lattice(&k, &y);
        println!("k = ({},{})", k.k1(), k.k2());
        println!("N1 = {}, N2 = {}, minimal = {}", c.n1, c.n2, c.minimal);
        println!(
            "solutions = {}",
            serde_json::to_string(&c.solutions).expect("serializable")
        );
    }
    Ok(())
}

fn cmd_boundary(p: u64, q: u64, l: u64, m: u64, evidence: bool) -> Result<(), CliError> {
    check_cap(p)?;
    let y = LensSpace::new(p, q)?;
    let (value, ev) = boundary_element(l, m, &y)?;
    println!("{value}");
    if evidence {
        for cand in &ev.candidates {
            let signs = format!("({:+},{:+})", cand.signs.0, cand.signs.1);
            match (&cand.kpair, &cand.counts) {
                (None, _) => println!("candidate {signs}: degenerate (zero residue)"),
                (Some((k1, k2)), Some(c)) => {
                    print!(
                        "candidate {signs}: k = ({k1},{k2}), N1 = {}, N2 = {}, minimal = {}",
                        c.n1, c.n2, c.minimal
                    );
                    match (&cand.dirac_count, &cand.dirac_witnesses) {
                        (Some(n), Some(w)) => println!(
                            ", dirac = {n}, witnesses = {}",
                            serde_json::to_string(w).expect("serializable")
                        ),
                        _ => println!(),
                    }
                    println!(
                        "  solutions = {}",
                        serde_json::to_string(&c.solutions).expect("serializable")
                    );
                }
                (Some(_), None) => unreachable!("non-degenerate candidates carry counts"),
            }
        }
        match ev.chosen {
            Some((k1, k2)) => println!("chosen k = ({k1},{k2})"),
            None => println!("no valid candidate; element is 0"),
        }
    }
    Ok(())
}

fn cmd_obstruct(p: u64, json: bool) -> Result<(), CliError> {
    check_cap(p)?;
    if p < 3 || p % 2 == 0 {
        return Err(CliError::Domain(format!(
            "obstruct needs odd p >= 3, got {p}"
        )));
    }
    let report: ObstructionReport = crate::invariants::obstruction_report(p)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializable")
        );
    } else {
        println!("p = {p}");
        println!("verdict: {}", report.verdict);
        for reason in &report.reasons {
            println!("{reason}");
        }
        match report.two_squares {
            Some((a, b)) => println!("two squares: {p} = {a}^2 + {b}^2"),
            None => println!("two squares: none (no decomposition can exist along L({p},q))"),
        }
    }
    Ok(())
}

fn cmd_sweep(
    p_min: u64,
    p_max: u64,
    q: u64,
    out: &PathBuf,
    jobs: Option<usize>,
) -> Result<(), CliError> {
    check_cap(p_max)?;
    let rows = match jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            pool.install(|| sweep_rows(p_min, p_max, q))?
        }
        None => sweep_rows(p_min, p_max, q)?,
    };
    let mut file = std::fs::File::create(out)?;
    writeln!(file, "{SWEEP_HEADER}")?;
    for row in &rows {
        writeln!(file, "{}", row.csv_line())?;
    }
    file.sync_all()?;
    Ok(())
}

/// Dispatch a parsed command line.
pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Complex { p, q, format } => cmd_complex(p, q, format),
        Command::Delta { p, q, l, evidence } => cmd_delta(p, q, l, evidence),
        Command::Boundary {
            p,
            q,
            l,
            m,
            evidence,
        } => cmd_boundary(p, q, l, m, evidence),
        Command::Obstruct { p, json } => cmd_obstruct(p, json),
        Command::Sweep {
            p_min,
            p_max,
            q,
            out,
            jobs,
        } => cmd_sweep(p_min, p_max, q, &out, jobs),
    }
}

/// Parse the process arguments and run; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
