//! The `lrcap` command-line surface.
//!
//! Five subcommands: `capacity` answers a single query as JSON, `curves`
//! emits a CSV capacity curve over a grid of channel parameters, `verify`
//! re-derives the closed forms from the exhaustive oracles and reports each
//! check, `simulate` fronts the Monte Carlo experiments, and `cosets`
//! prints coset weight tables. Exit codes: 0 success, 1 check or I/O
//! failure, 2 usage error.
//!
//! Every command is deterministic given its flags (plus `--seed` where one
//! applies); repeated invocations produce byte-identical output.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::blockstats::{
    bec_block_mi, bec_block_mi_bruteforce, bsc_block_mi, hamming_rho3_bsc_mi,
    local_code_bec_mi_exact, local_code_bsc_mi,
};
use crate::capacity::{
    cap_bec_lrc, cap_bec_rho_converse, cap_bsc_hamming_rho3_lower, cap_bsc_lrc_bounds,
    cap_bec_hamming_rho3_lower, cap_general_bounds,
};
use crate::codes::{
    coset_weight_table, hamming_code, random_linear_code, single_parity_code, LinearCode,
};
use crate::experiments::{estimate_l_i, rank_success_rate};
use crate::infofn::{binary_entropy, binary_entropy_inv, h_bits, Probability};
use crate::seeding;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

/// Parses `std::env::args`, runs one command, and returns the process exit
/// code. The thin binary wrapper passes this straight to
/// `std::process::exit`.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lrcap",
    version,
    about = "Capacity of locally recoverable codes on erasure and symmetric channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one capacity value or bound pair as JSON.
    Capacity(CapacityArgs),
    /// Write a capacity-vs-p curve as CSV.
    Curves(CurvesArgs),
    /// Check the closed forms against exhaustive oracles.
    Verify(VerifyArgs),
    /// Run a seeded Monte Carlo experiment, printing a JSON report.
    #[command(subcommand)]
    Simulate(SimulateCommand),
    /// Print the coset weight table of a local code.
    Cosets(CosetsArgs),
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Capacity(args) => cmd_capacity(&args),
        Command::Curves(args) => cmd_curves(&args),
        Command::Verify(args) => Ok(cmd_verify(&args)),
        Command::Simulate(args) => cmd_simulate(&args),
        Command::Cosets(args) => cmd_cosets(&args),
    }
}

// ---------------------------------------------------------------------------
// capacity
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChannelArg {
    Bec,
    Bsc,
    General,
}

#[derive(Args)]
struct CapacityArgs {
    #[arg(long, value_enum)]
    channel: ChannelArg,
    /// Erasure or flip probability (bec/bsc).
    #[arg(long)]
    p: Option<f64>,
    /// Shannon capacity of the channel (general).
    #[arg(long)]
    capw: Option<f64>,
    /// Locality: repair groups have r + 1 symbols.
    #[arg(long)]
    r: u32,
    /// Recoverability; 2 is plain locality.
    #[arg(long, default_value_t = 2)]
    rho: u32,
}

#[derive(Serialize)]
struct CapacityDoc {
    channel: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    capw: Option<f64>,
    r: u32,
    rho: u32,
    shannon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gap_upper: Option<f64>,
}

impl CapacityDoc {
    fn new(channel: &'static str, r: u32, rho: u32, shannon: f64) -> Self {
        CapacityDoc {
            channel,
            p: None,
            capw: None,
            r,
            rho,
            shannon,
            exact: None,
            lower: None,
            upper: None,
            gap: None,
            gap_lower: None,
            gap_upper: None,
        }
    }
}

fn parse_probability(p: f64) -> Result<Probability, CliError> {
    Probability::new(p).map_err(|e| usage(e.to_string()))
}

fn require_p(args: &CapacityArgs) -> Result<Probability, CliError> {
    if args.capw.is_some() {
        return Err(usage("--capw applies only to --channel general"));
    }
    args.p
        .ok_or_else(|| usage("--p is required for bec/bsc channels"))
        .and_then(parse_probability)
}

fn require_bsc_p(args: &CapacityArgs) -> Result<Probability, CliError> {
    let p = require_p(args)?;
    if p.get() > 0.5 {
        return Err(usage("BSC flip probability must lie in [0, 1/2]"));
    }
    Ok(p)
}

fn cmd_capacity(args: &CapacityArgs) -> Result<i32, CliError> {
    if args.r < 1 {
        return Err(usage("--r must be at least 1"));
    }
    if args.rho < 2 {
        return Err(usage("--rho must be at least 2"));
    }
    let doc = match args.channel {
        ChannelArg::Bec => {
            let p = require_p(args)?;
            let mut doc = CapacityDoc::new("bec", args.r, args.rho, 1.0 - p.get());
            doc.p = Some(p.get());
            if args.rho == 2 {
                let cap = cap_bec_lrc(p, args.r);
                doc.exact = Some(cap.value);
                doc.gap = Some(cap.gap());
            } else {
                let converse = cap_bec_rho_converse(p, args.rho, args.r);
                doc.upper = Some(converse.value);
                doc.gap_lower = Some(converse.gap());
                if args.rho == 3 {
                    let lower = cap_bec_hamming_rho3_lower(p, args.r)
                        .map_err(|e| usage(e.to_string()))?;
                    doc.lower = Some(lower.value);
                    doc.gap_upper = Some(lower.gap());
                }
            }
            doc
        }
        ChannelArg::Bsc => {
            let p = require_bsc_p(args)?;
            let mut doc = CapacityDoc::new("bsc", args.r, args.rho, 1.0 - h_bits(p.get()));
            doc.p = Some(p.get());
            match args.rho {
                2 => {
                    let (lower, upper) = cap_bsc_lrc_bounds(p, args.r);
                    doc.lower = Some(lower.value);
                    doc.upper = Some(upper.value);
                    doc.gap_lower = Some(upper.gap());
                    doc.gap_upper = Some(lower.gap());
                }
                3 => {
                    let lower = cap_bsc_hamming_rho3_lower(p, args.r)
                        .map_err(|e| usage(e.to_string()))?;
                    doc.lower = Some(lower.value);
                    doc.gap_upper = Some(lower.gap());
                }
                _ => return Err(usage("no BSC bound is available for rho > 3")),
            }
            doc
        }
        ChannelArg::General => {
            if args.p.is_some() {
                return Err(usage("--p applies only to bec/bsc; use --capw"));
            }
            if args.rho != 2 {
                return Err(usage("general-channel bounds exist only for rho = 2"));
            }
            let capw = args.capw.ok_or_else(|| usage("--capw is required for general"))?;
            if !(0.0..=1.0).contains(&capw) {
                return Err(usage(format!("--capw {capw} outside [0, 1]")));
            }
            let (lower, upper) = cap_general_bounds(capw, args.r);
            let mut doc = CapacityDoc::new("general", args.r, 2, capw);
            doc.capw = Some(capw);
            doc.lower = Some(lower.value);
            doc.upper = Some(upper.value);
            doc.gap_lower = Some(upper.gap());
            doc.gap_upper = Some(lower.gap());
            doc
        }
    };
    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    Ok(0)
}

// ---------------------------------------------------------------------------
// curves
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveChannel {
    Bec,
    Bsc,
}

/// One grid point of a capacity curve. BEC rows carry `lrc_exact`; BSC rows
/// carry the bound pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveRow {
    pub p: f64,
    pub shannon: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lrc_exact: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lrc_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lrc_upper: Option<f64>,
}

#[derive(Args)]
struct CurvesArgs {
    #[arg(long, value_enum)]
    channel: CurveChannel,
    #[arg(long)]
    r: u32,
    #[arg(long, default_value_t = 0.0)]
    p_min: f64,
    /// Defaults to the channel's full range (1 for bec, 0.5 for bsc).
    #[arg(long)]
    p_max: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    p_step: f64,
    #[arg(long)]
    out: PathBuf,
}

/// Evaluates the curve on the grid `p_min, p_min + p_step, ...` up to and
/// including `p_max` (the last point is snapped onto `p_max` when the step
/// overshoots by float error only).
pub fn curve_rows(
    channel: CurveChannel,
    r: u32,
    p_min: f64,
    p_max: f64,
    p_step: f64,
) -> Result<Vec<CurveRow>, CliError> {
    if r < 1 {
        return Err(usage("--r must be at least 1"));
    }
    let limit = match channel {
        CurveChannel::Bec => 1.0,
        CurveChannel::Bsc => 0.5,
    };
    if !(p_min.is_finite() && p_max.is_finite() && p_step.is_finite()) {
        return Err(usage("grid parameters must be finite"));
    }
    if !(0.0..=limit).contains(&p_min) || !(0.0..=limit).contains(&p_max) || p_min > p_max {
        return Err(usage(format!("grid must satisfy 0 <= p-min <= p-max <= {limit}")));
    }
    if p_step <= 0.0 {
        return Err(usage("--p-step must be positive"));
    }
    let points = ((p_max - p_min) / p_step + 1e-9).floor() as usize + 1;
    if points > 1_000_001 {
        return Err(usage(format!("grid has {points} points; limit is 1000001")));
    }
    let rows = (0..points)
        .map(|i| {
            let p = (p_min + i as f64 * p_step).min(p_max);
            let prob = Probability::new(p).expect("grid point in range");
            match channel {
                CurveChannel::Bec => CurveRow {
                    p,
                    shannon: 1.0 - p,
                    lrc_exact: Some(cap_bec_lrc(prob, r).value),
                    lrc_lower: None,
                    lrc_upper: None,
                },
                CurveChannel::Bsc => {
                    let (lower, upper) = cap_bsc_lrc_bounds(prob, r);
                    CurveRow {
                        p,
                        shannon: 1.0 - h_bits(p),
                        lrc_exact: None,
                        lrc_lower: Some(lower.value),
                        lrc_upper: Some(upper.value),
                    }
                }
            }
        })
        .collect();
    Ok(rows)
}

/// Writes the curve as CSV: UTF-8, LF line endings, header row, values with
/// six decimals. Rows must all match `channel`'s column set.
pub fn write_curve_csv<W: Write>(
    channel: CurveChannel,
    rows: &[CurveRow],
    mut out: W,
) -> io::Result<()> {
    match channel {
        CurveChannel::Bec => {
            out.write_all(b"p,shannon,lrc_exact\n")?;
            for row in rows {
                let exact = row.lrc_exact.expect("bec row");
                writeln!(out, "{:.6},{:.6},{:.6}", row.p, row.shannon, exact)?;
            }
        }
        CurveChannel::Bsc => {
            out.write_all(b"p,shannon,lrc_lower,lrc_upper\n")?;
            for row in rows {
                let lower = row.lrc_lower.expect("bsc row");
                let upper = row.lrc_upper.expect("bsc row");
                writeln!(out, "{:.6},{:.6},{:.6},{:.6}", row.p, row.shannon, lower, upper)?;
            }
        }
    }
    Ok(())
}

fn cmd_curves(args: &CurvesArgs) -> Result<i32, CliError> {
    let p_max = args.p_max.unwrap_or(match args.channel {
        CurveChannel::Bec => 1.0,
        CurveChannel::Bsc => 0.5,
    });
    let rows = curve_rows(args.channel, args.r, args.p_min, p_max, args.p_step)?;
    let file = File::create(&args.out)?;
    let mut writer = BufWriter::new(file);
    write_curve_csv(args.channel, &rows, &mut writer)?;
    writer.flush()?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Args)]
struct VerifyArgs {
    /// Largest locality to scan (enumeration caps may clip it per check).
    #[arg(long, default_value_t = 8)]
    max_r: u32,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

struct Check {
    name: String,
    deviation: f64,
}

fn grid(points: usize, limit: f64) -> impl Iterator<Item = f64> {
    (0..=points).map(move |i| i as f64 * limit / points as f64)
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let max_r = args.max_r.max(1);
    let mut checks: Vec<Check> = Vec::new();

    {
        let r_cap = max_r.min(12);
        let mut dev = 0.0f64;
        for r in 1..=r_cap {
            for p in grid(20, 1.0) {
                let p = Probability::new(p).unwrap();
                let diff = (bec_block_mi(p, r) - bec_block_mi_bruteforce(p, r).unwrap()).abs();
                dev = dev.max(diff);
            }
        }
        checks.push(Check {
            name: format!("erasure closed form vs exhaustive output sum (r <= {r_cap})"),
            deviation: dev,
        });
    }

    {
        let r_cap = max_r.min(19);
        let mut dev = 0.0f64;
        for r in 1..=r_cap {
            let code = single_parity_code(r);
            for p in grid(10, 0.5) {
                let p = Probability::new(p).unwrap();
                let diff = (bsc_block_mi(p, r) - local_code_bsc_mi(&code, p).unwrap()).abs();
                dev = dev.max(diff);
            }
        }
        checks.push(Check {
            name: format!("symmetric closed form vs coset enumerator (r <= {r_cap})"),
            deviation: dev,
        });
    }

    {
        let mut dev = 0.0f64;
        for (m, r) in [(2u32, 2u32), (3, 6), (4, 14)] {
            let code = hamming_code(m).unwrap();
            for p in grid(10, 0.5) {
                let p = Probability::new(p).unwrap();
                let diff =
                    (hamming_rho3_bsc_mi(p, r).unwrap() - local_code_bsc_mi(&code, p).unwrap())
                        .abs();
                dev = dev.max(diff);
            }
        }
        checks.push(Check {
            name: "Hamming-block closed form vs coset enumerator (m <= 4)".into(),
            deviation: dev,
        });
    }

    {
        let mut dev = 0.0f64;
        let mut codes: Vec<LinearCode> = (1..=10).map(single_parity_code).collect();
        for m in 2..=4 {
            codes.push(hamming_code(m).unwrap());
        }
        for i in 0..20u64 {
            let length = 4 + (i as usize * 5) % 9;
            let dimension = 1 + i as usize % (length - 1);
            let seed = seeding::derive(args.seed, &[seeding::RANDOM_CODE, i]);
            codes.push(random_linear_code(length, dimension, seed).unwrap());
        }
        for code in &codes {
            let table = coset_weight_table(code).unwrap();
            for p in grid(10, 0.5) {
                let sum: f64 = table.enumerator_distribution(p).iter().sum();
                dev = dev.max((sum - 1.0).abs());
            }
        }
        checks.push(Check {
            name: "coset enumerator values sum to 1".into(),
            deviation: dev,
        });
    }

    {
        let r_cap = max_r.min(10);
        let mut dev = 0.0f64;
        for r in 1..=r_cap {
            for p in grid(100, 0.5) {
                let p = Probability::new(p).unwrap();
                let (lower, upper) = cap_bsc_lrc_bounds(p, r);
                dev = dev.max(lower.value - upper.value);
                dev = dev.max(upper.value - upper.shannon_capacity());
            }
            for capw in grid(100, 1.0) {
                let (lower, upper) = cap_general_bounds(capw, r);
                dev = dev.max(lower.value - upper.value);
                dev = dev.max(upper.value - capw);
            }
        }
        checks.push(Check {
            name: format!("bound ordering and Shannon ceiling (r <= {r_cap})"),
            deviation: dev.max(0.0),
        });
    }

    {
        let mut dev = 0.0f64;
        for r in 1..=max_r {
            for p in grid(100, 1.0) {
                let upper = cap_general_bounds(1.0 - p, r).1.value;
                let exact = cap_bec_lrc(Probability::new(p).unwrap(), r).value;
                dev = dev.max((upper - exact).abs());
            }
        }
        checks.push(Check {
            name: "general upper bound reproduces the erasure capacity".into(),
            deviation: dev,
        });
    }

    {
        let mut dev = 0.0f64;
        for r in 1..=max_r {
            for p in grid(50, 0.5) {
                let p = Probability::new(p).unwrap();
                let general = cap_general_bounds(1.0 - h_bits(p.get()), r).0.value;
                let direct = cap_bsc_lrc_bounds(p, r).0.value;
                dev = dev.max((general - direct).abs());
            }
        }
        checks.push(Check {
            name: "general lower bound reproduces the symmetric lower bound".into(),
            deviation: dev,
        });
    }

    {
        let mut rng = seeding::substream(args.seed, &[seeding::UNIFORM_SAMPLES]);
        let mut dev = 0.0f64;
        for _ in 0..10_000 {
            let x: f64 = rand::Rng::gen_range(&mut rng, 0.0..=0.5);
            let y = binary_entropy(Probability::new(x).unwrap());
            let back = binary_entropy_inv(y).unwrap().get();
            dev = dev.max((back - x).abs());
        }
        checks.push(Check {
            name: "binary entropy inverse round trip (10^4 samples)".into(),
            deviation: dev,
        });
    }

    {
        let r_cap = max_r.min(10);
        let mut dev = 0.0f64;
        for r in 1..=r_cap {
            let code = single_parity_code(r);
            for p in grid(10, 1.0) {
                let p = Probability::new(p).unwrap();
                let diff = (local_code_bec_mi_exact(&code, p).unwrap() - bec_block_mi(p, r)).abs();
                dev = dev.max(diff);
            }
        }
        checks.push(Check {
            name: format!("erasure rank route vs closed form (r <= {r_cap})"),
            deviation: dev,
        });
    }

    let mut passed = 0;
    for check in &checks {
        let ok = check.deviation <= args.tol;
        if ok {
            passed += 1;
        }
        println!(
            "[{}] {}: max deviation {:.3e} (tol {:.1e})",
            if ok { "PASS" } else { "FAIL" },
            check.name,
            check.deviation,
            args.tol
        );
    }
    println!("verify: {passed} of {} checks passed", checks.len());
    if passed == checks.len() {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[derive(Subcommand)]
enum SimulateCommand {
    /// Fraction of coordinates recoverable from unerased data alone.
    #[command(name = "l-i")]
    LI(SimulateArgs),
    /// Full-rank probability of a random generator after column loss.
    Rank(SimulateArgs),
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    p: f64,
    /// Dimension under test (rank only).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn cmd_simulate(command: &SimulateCommand) -> Result<i32, CliError> {
    let (args, is_rank) = match command {
        SimulateCommand::LI(args) => (args, false),
        SimulateCommand::Rank(args) => (args, true),
    };
    let p = parse_probability(args.p)?;
    if args.trials < 1 {
        return Err(usage("--trials must be at least 1"));
    }
    let report = if is_rank {
        let k = args.k.ok_or_else(|| usage("--k is required for rank"))?;
        if k < 1 || k > args.n {
            return Err(usage(format!("--k must lie in 1..={}", args.n)));
        }
        rank_success_rate(args.n, k, args.r, p, args.trials, args.seed)
    } else {
        if args.k.is_some() {
            return Err(usage("--k applies only to rank"));
        }
        estimate_l_i(args.n, args.r, p, args.trials, args.seed)
    }
    .map_err(|e| usage(e.to_string()))?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    Ok(0)
}

// ---------------------------------------------------------------------------
// cosets
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CodeArg {
    Parity,
    Hamming,
}

#[derive(Args)]
struct CosetsArgs {
    #[arg(long, value_enum)]
    code: CodeArg,
    /// Locality of the parity code.
    #[arg(long)]
    r: Option<u32>,
    /// Order of the Hamming code (length 2^m - 1).
    #[arg(long)]
    m: Option<u32>,
    /// Also print enumerator values and mutual information at this flip
    /// probability.
    #[arg(long)]
    p: Option<f64>,
}

fn cmd_cosets(args: &CosetsArgs) -> Result<i32, CliError> {
    let (label, code) = match args.code {
        CodeArg::Parity => {
            if args.m.is_some() {
                return Err(usage("--m applies only to --code hamming"));
            }
            let r = args.r.ok_or_else(|| usage("--r is required for --code parity"))?;
            if r < 1 {
                return Err(usage("--r must be at least 1"));
            }
            if r > 19 {
                return Err(usage("--r above 19 exceeds the enumeration budget"));
            }
            (format!("parity r={r}"), single_parity_code(r))
        }
        CodeArg::Hamming => {
            if args.r.is_some() {
                return Err(usage("--r applies only to --code parity"));
            }
            let m = args.m.ok_or_else(|| usage("--m is required for --code hamming"))?;
            let code = hamming_code(m).map_err(|e| usage(e.to_string()))?;
            if code.length() > 20 {
                return Err(usage("--m above 4 exceeds the enumeration budget"));
            }
            (format!("hamming m={m}"), code)
        }
    };
    let table = coset_weight_table(&code).map_err(|e| usage(e.to_string()))?;
    println!(
        "local code {label} [{},{}]: {} cosets, weights 0..={}",
        code.length(),
        code.dimension(),
        table.num_cosets(),
        table.delta()
    );
    for i in 0..table.num_cosets() {
        let counts: Vec<String> = table.counts(i).iter().map(u64::to_string).collect();
        println!("coset {i}: {}", counts.join(" "));
    }
    if let Some(p) = args.p {
        let p = parse_probability(p)?;
        if p.get() > 0.5 {
            return Err(usage("flip probability must lie in [0, 1/2]"));
        }
        println!("enumerator values at p = {:.6}:", p.get());
        let values = table.enumerator_distribution(p.get());
        for (i, value) in values.iter().enumerate() {
            println!("coset {i}: {value:.6}");
        }
        let sum: f64 = values.iter().sum();
        println!("sum: {sum:.6}");
        let mi = local_code_bsc_mi(&code, p).map_err(|e| usage(e.to_string()))?;
        println!("per-symbol mutual information: {mi:.6}");
    }
    Ok(0)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_both_endpoints() {
        let rows = curve_rows(CurveChannel::Bec, 2, 0.0, 1.0, 0.01).unwrap();
        assert_eq!(rows.len(), 101);
        assert_eq!(rows[0].p, 0.0);
        assert_eq!(rows[100].p, 1.0);
        assert!(rows.iter().all(|row| (0.0..=1.0).contains(&row.p)));
    }

    #[test]
    fn grid_snaps_float_overshoot_onto_p_max() {
        // 0.07 * 5 lands just above 0.35 in floats; the row must not
        // escape the requested range.
        let rows = curve_rows(CurveChannel::Bsc, 1, 0.0, 0.35, 0.07).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[5].p, 0.35);
    }

    #[test]
    fn grid_validation() {
        assert!(curve_rows(CurveChannel::Bec, 2, 0.5, 0.4, 0.01).is_err());
        assert!(curve_rows(CurveChannel::Bec, 2, 0.0, 1.1, 0.01).is_err());
        assert!(curve_rows(CurveChannel::Bsc, 2, 0.0, 0.6, 0.01).is_err());
        assert!(curve_rows(CurveChannel::Bec, 2, 0.0, 1.0, 0.0).is_err());
        assert!(curve_rows(CurveChannel::Bec, 0, 0.0, 1.0, 0.1).is_err());
        assert!(curve_rows(CurveChannel::Bec, 2, 0.0, 1.0, 1e-9).is_err());
    }

    #[test]
    fn bec_rows_satisfy_row_invariants() {
        for row in curve_rows(CurveChannel::Bec, 2, 0.0, 1.0, 0.01).unwrap() {
            let exact = row.lrc_exact.unwrap();
            assert!((0.0..=1.0).contains(&exact));
            assert!(exact <= row.shannon + 1e-12);
            assert!(row.lrc_lower.is_none() && row.lrc_upper.is_none());
        }
    }

    #[test]
    fn bsc_rows_satisfy_row_invariants() {
        for row in curve_rows(CurveChannel::Bsc, 2, 0.0, 0.5, 0.005).unwrap() {
            let lower = row.lrc_lower.unwrap();
            let upper = row.lrc_upper.unwrap();
            assert!(lower <= upper + 1e-15);
            assert!(upper <= row.shannon + 1e-12);
            assert!(row.lrc_exact.is_none());
        }
    }

    #[test]
    fn csv_formatting_is_fixed_point() {
        let rows = curve_rows(CurveChannel::Bec, 2, 0.0, 0.02, 0.01).unwrap();
        let mut bytes = Vec::new();
        write_curve_csv(CurveChannel::Bec, &rows, &mut bytes).unwrap();
        let text = String::from_utf8(bytes).unwrap();
        assert_eq!(
            text,
            "p,shannon,lrc_exact\n\
             0.000000,1.000000,0.666667\n\
             0.010000,0.990000,0.666567\n\
             0.020000,0.980000,0.666269\n"
        );
    }

    #[test]
    fn max_bec_gap_sits_at_p_zero() {
        let rows = curve_rows(CurveChannel::Bec, 2, 0.0, 1.0, 0.01).unwrap();
        let (best, gap) = rows
            .iter()
            .enumerate()
            .map(|(i, row)| (i, row.shannon - row.lrc_exact.unwrap()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        assert_eq!(best, 0);
        assert!((gap - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn verify_passes_at_default_tolerance() {
        let code = cmd_verify(&VerifyArgs { max_r: 3, tol: 1e-9, seed: 7 });
        assert_eq!(code, 0);
    }

    #[test]
    fn verify_fails_below_float_noise() {
        let code = cmd_verify(&VerifyArgs { max_r: 3, tol: 1e-15, seed: 7 });
        assert_eq!(code, 1);
    }
}
