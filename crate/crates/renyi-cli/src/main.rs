//! Command-line front end for the entropy library.
//!
//! Five subcommands: `entropy` evaluates a vector, `bounds` and
//! `extrapolate` work from scalar entropy inputs, `sample` runs the Monte
//! Carlo deviation study, and `figure` emits the four figure datasets as
//! CSV plus JSON side by side.
//!
//! Structured results go to standard output (or to `PREFIX.csv` /
//! `PREFIX.json` files for the dataset commands). Errors print a one-line
//! JSON diagnostic to standard error; the exit code is 0 on success, 2 for
//! input validation failures, and 1 for internal failures such as
//! unwritable output paths.

use clap::{Args, Parser, Subcommand};
use renyi::{
    deviation_study, entropy_plane_boundary, estimate_023, estimate_star, estimate_star_prime,
    general_bounds, hartley, iso_entropy_contours, lower_extrap_bounds, lower_extrap_h2_h3,
    make_prob_vec, monotonicity_bound, profile_with_bounds, purity_stats, renyi_bounds_from_h2,
    renyi_profile, sample_fisher_rao, shannon, shannon_bounds_from_h2, shannon_bounds_from_h3,
    simple_upper, structural_entropy, structural_gap_upper, upper_extrap_bounds,
    upper_interp_h0_h2, BoundResult, DeviationStudy, Estimate, NormalizeMode, PlaneBoundary,
    ProbVec, RenyiOrder, RngHandle,
};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::{Read as _, Write as _};
use std::process::ExitCode;
use std::str::FromStr;

const LN_3: f64 = 1.0986122886681098;

#[derive(Parser)]
#[command(
    name = "renyi",
    version,
    about = "Entropies, entropy bounds, and figure datasets for discrete distributions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate entropies and purity statistics of a probability vector.
    Entropy(EntropyArgs),
    /// Rigorous Shannon-entropy windows from low-order entropies.
    Bounds(BoundsArgs),
    /// Heuristic Shannon estimates from low-order entropies.
    Extrapolate(ExtrapolateArgs),
    /// Monte Carlo study of the estimator deviations.
    Sample(SampleArgs),
    /// Emit one of the four figure datasets (CSV and JSON).
    Figure(FigureArgs),
}

#[derive(Args)]
struct EntropyArgs {
    /// Probability components given inline.
    #[arg(value_name = "VALUE", num_args = 0.., conflicts_with = "input")]
    values: Vec<f64>,
    /// Read the vector from a file instead ("-" reads standard input).
    /// Content starting with '[' parses as a JSON array; anything else as
    /// whitespace- or comma-separated numbers.
    #[arg(long)]
    input: Option<String>,
    /// Rescale the input to sum to one instead of requiring it.
    #[arg(long)]
    normalize: bool,
    /// Components at or below this threshold do not count toward the
    /// support entropy.
    #[arg(long, default_value_t = 0.0)]
    support_eps: f64,
    /// Comma-separated entropy orders to evaluate ("inf" allowed).
    #[arg(long, default_value = "0,0.5,1,2,3,inf")]
    q_grid: String,
}

#[derive(Args)]
struct BoundsArgs {
    /// Number of outcomes.
    #[arg(long)]
    n: usize,
    /// Entropy of order 2 (collision entropy), in nats.
    #[arg(long)]
    h2: Option<f64>,
    /// Entropy of order 3, in nats.
    #[arg(long)]
    h3: Option<f64>,
    /// Also window the entropy of this order (requires an input entropy).
    #[arg(long)]
    q: Option<f64>,
}

#[derive(Args)]
struct ExtrapolateArgs {
    /// Number of outcomes.
    #[arg(long)]
    n: usize,
    /// Entropy of order 2, in nats.
    #[arg(long)]
    h2: f64,
    /// Entropy of order 3, in nats.
    #[arg(long)]
    h3: f64,
    /// Support entropy (order 0), in nats; unlocks the estimates that
    /// consume it.
    #[arg(long)]
    h0: Option<f64>,
}

#[derive(Args)]
struct SampleArgs {
    /// Number of outcomes per sampled vector.
    #[arg(long)]
    n: usize,
    /// Number of Monte Carlo samples.
    #[arg(long)]
    count: usize,
    /// RNG seed; identical seeds give byte-identical outputs.
    #[arg(long)]
    seed: u64,
    /// Histogram bin count.
    #[arg(long, default_value_t = 60)]
    bins: usize,
    /// Output path prefix for the .csv and .json files.
    #[arg(long, default_value = "deviation")]
    out: String,
}

#[derive(Args)]
struct FigureArgs {
    /// Which dataset: 1 iso-entropy contours, 2 entropy-plane boundary,
    /// 3 profile with bounds, 4 estimator deviations.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    id: u8,
    /// Output path prefix (default figure<ID>).
    #[arg(long)]
    out: Option<String>,
    /// Figure 1: comma-separated entropy orders (default 0.25,1,2,8).
    #[arg(long)]
    q_list: Option<String>,
    /// Figure 1: comma-separated contour levels in nats (default eight
    /// levels evenly spaced inside (0, ln 3)).
    #[arg(long)]
    levels: Option<String>,
    /// Figure 1: sampling grid resolution per triangle edge (default 512).
    #[arg(long)]
    grid: Option<usize>,
    /// Figure 2: the order on the vertical axis (default 1).
    #[arg(long)]
    q: Option<f64>,
    /// Figure 2: comma-separated horizontal-axis orders (default 2,3,4).
    #[arg(long)]
    s_list: Option<String>,
    /// Figure 2: comma-separated outcome counts (default 3,5).
    #[arg(long)]
    n_list: Option<String>,
    /// Figure 2: points per boundary arc (default 256).
    #[arg(long)]
    samples_per_arc: Option<usize>,
    /// Figures 3 and 4: number of outcomes (default 15 / 10).
    #[arg(long)]
    n: Option<usize>,
    /// Figures 3 and 4: RNG seed (default 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Figure 3: top of the order grid (default 8).
    #[arg(long)]
    q_max: Option<f64>,
    /// Figure 3: order grid step (default 0.05).
    #[arg(long)]
    q_step: Option<f64>,
    /// Figure 4: number of Monte Carlo samples (default 10000).
    #[arg(long)]
    count: Option<usize>,
    /// Figure 4: histogram bin count (default 60).
    #[arg(long)]
    bins: Option<usize>,
}

/// A failure with the exit code it maps to.
enum Failure {
    /// Bad inputs: exit code 2.
    Validation(String),
    /// Environment problems (unwritable files, thread-pool setup): exit 1.
    Internal(String),
}

impl From<renyi::Error> for Failure {
    fn from(e: renyi::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Err(failure) = configure_threads() {
        return report(failure);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => report(failure),
    }
}

fn report(failure: Failure) -> ExitCode {
    let (kind, message, code) = match failure {
        Failure::Validation(m) => ("validation", m, 2),
        Failure::Internal(m) => ("internal", m, 1),
    };
    eprintln!("{}", json!({ "error": { "kind": kind, "message": message } }));
    ExitCode::from(code)
}

/// Honor ENTROPY_NUM_THREADS before any parallel work starts.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("ENTROPY_NUM_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t >= 1)
        .ok_or_else(|| {
            Failure::Validation(format!(
                "ENTROPY_NUM_THREADS must be a positive integer, got {raw:?}"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Entropy(args) => run_entropy(args),
        Command::Bounds(args) => run_bounds(args),
        Command::Extrapolate(args) => run_extrapolate(args),
        Command::Sample(args) => {
            let study = deviation_study(args.n, args.count, RngHandle::new(args.seed), args.bins)?;
            write_deviation_outputs(&study, &args.out)
        }
        Command::Figure(args) => run_figure(args),
    }
}

fn emit(value: &Value) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    let text = serde_json::to_string_pretty(value).expect("serializable");
    match writeln!(out, "{text}") {
        Ok(()) => Ok(()),
        // The consumer closed the pipe early (e.g. `renyi ... | head`);
        // by convention that is not an error worth reporting.
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(Failure::from(e)),
    }
}

/// Twelve significant digits, deterministic across platforms.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn parse_list<T: FromStr>(text: &str, what: &str) -> Result<Vec<T>, Failure> {
    let items: Result<Vec<T>, _> = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(T::from_str)
        .collect();
    match items {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(Failure::Validation(format!(
            "could not parse {what} from {text:?}"
        ))),
    }
}

fn read_vector(args: &EntropyArgs) -> Result<ProbVec, Failure> {
    let mode = if args.normalize {
        NormalizeMode::Renormalize
    } else {
        NormalizeMode::Strict
    };
    if let Some(source) = &args.input {
        let text = if source == "-" {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        } else {
            std::fs::read_to_string(source)
                .map_err(|e| Failure::Validation(format!("cannot read {source}: {e}")))?
        };
        let parsed = if text.trim_start().starts_with('[') {
            ProbVec::from_json_str(&text, mode)
        } else {
            ProbVec::from_text_tokens(&text, mode)
        };
        return Ok(parsed?);
    }
    if args.values.is_empty() {
        return Err(Failure::Validation(
            "no probability vector given: pass components inline or --input FILE".into(),
        ));
    }
    Ok(make_prob_vec(&args.values, mode)?)
}

fn run_entropy(args: EntropyArgs) -> Result<(), Failure> {
    let p = read_vector(&args)?;
    let grid: Vec<RenyiOrder> = parse_list::<RenyiOrder>(&args.q_grid, "--q-grid")?;
    let profile = renyi_profile(&p, &grid)?;
    let support = hartley(&p, args.support_eps);
    emit(&json!({
        "n": p.len(),
        "components": p,
        "shannon": shannon(&p).nats,
        "entropies": profile,
        "support_entropy": { "support_eps": args.support_eps, "nats": support.nats },
        "purity": purity_stats(&p),
        "structural_entropy": structural_entropy(&p),
    }))?;
    Ok(())
}

fn run_bounds(args: BoundsArgs) -> Result<(), Failure> {
    if args.h2.is_none() && args.h3.is_none() {
        return Err(Failure::Validation(
            "provide --h2, --h3, or both".into(),
        ));
    }
    let mut bounds: Vec<BoundResult> = Vec::new();
    if let Some(h2) = args.h2 {
        let (lo, hi) = shannon_bounds_from_h2(h2, args.n)?;
        bounds.extend([lo, hi, simple_upper(h2, args.n)?, monotonicity_bound(h2, 1.0, 2.0)?]);
    }
    if let Some(h3) = args.h3 {
        let (lo, hi) = shannon_bounds_from_h3(h3, args.n)?;
        bounds.extend([lo, hi, monotonicity_bound(h3, 1.0, 3.0)?]);
    }
    let tightest_lower = bounds
        .iter()
        .filter(|b| b.side == renyi::Side::Lower)
        .max_by(|a, b| a.value.total_cmp(&b.value))
        .expect("at least one lower bound");
    let tightest_upper = bounds
        .iter()
        .filter(|b| b.side == renyi::Side::Upper)
        .min_by(|a, b| a.value.total_cmp(&b.value))
        .expect("at least one upper bound");
    let renyi_window = match args.q {
        None => Value::Null,
        Some(q) => {
            let (lo, hi) = match (args.h2, args.h3) {
                (Some(h2), _) => renyi_bounds_from_h2(h2, args.n, q)?,
                (None, Some(h3)) => general_bounds(h3, 3.0, q, args.n)?,
                (None, None) => unreachable!("checked above"),
            };
            json!({ "q": q, "lower": lo, "upper": hi })
        }
    };
    emit(&json!({
        "n": args.n,
        "inputs": { "h2": args.h2, "h3": args.h3 },
        "bounds": bounds,
        "shannon_window": { "lower": tightest_lower, "upper": tightest_upper },
        "renyi_window": renyi_window,
    }))?;
    Ok(())
}

fn run_extrapolate(args: ExtrapolateArgs) -> Result<(), Failure> {
    let (n, h2, h3) = (args.n, args.h2, args.h3);
    let mut estimates: Vec<Estimate> = Vec::new();
    if let Some(h0) = args.h0 {
        estimates.push(upper_interp_h0_h2(h0, h2)?);
        estimates.push(structural_gap_upper(h0, h2)?);
    }
    estimates.push(lower_extrap_h2_h3(h2, h3)?);
    if let Some(h0) = args.h0 {
        estimates.push(estimate_023(h0, h2, h3)?);
    }
    estimates.push(upper_extrap_bounds(h2, h3, n)?);
    estimates.push(lower_extrap_bounds(h2, h3, n)?);
    estimates.push(estimate_star_prime(h2, h3, n)?);
    let star = estimate_star(h2, h3, n, args.h0)?;
    estimates.push(star);
    emit(&json!({
        "inputs": { "n": n, "h2": h2, "h3": h3, "h0": args.h0 },
        "H_star": star.value,
        "rigor": star.rigor,
        "estimates": estimates,
    }))?;
    Ok(())
}

/// CSV with the shared-edge histogram densities plus the full study as
/// JSON, side by side under one prefix. Output bytes depend only on the
/// study contents, never on the clock or the environment.
fn write_deviation_outputs(study: &DeviationStudy, prefix: &str) -> Result<(), Failure> {
    let mut csv = String::from("bin_left,bin_right,density_delta1,density_delta2\n");
    for i in 0..study.bins {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            sig12(study.edges[i]),
            sig12(study.edges[i + 1]),
            sig12(study.star.densities[i]),
            sig12(study.line_h2_h3.densities[i]),
        );
    }
    let json_text = serde_json::to_string_pretty(study).expect("serializable");
    std::fs::write(format!("{prefix}.csv"), csv)?;
    std::fs::write(format!("{prefix}.json"), json_text + "\n")?;
    eprintln!("wrote {prefix}.csv and {prefix}.json");
    Ok(())
}

fn run_figure(args: FigureArgs) -> Result<(), Failure> {
    let prefix = args
        .out
        .clone()
        .unwrap_or_else(|| format!("figure{}", args.id));
    match args.id {
        1 => figure_contours(&args, &prefix),
        2 => figure_plane(&args, &prefix),
        3 => figure_profile(&args, &prefix),
        4 => {
            let study = deviation_study(
                args.n.unwrap_or(10),
                args.count.unwrap_or(10_000),
                RngHandle::new(args.seed.unwrap_or(42)),
                args.bins.unwrap_or(60),
            )?;
            write_deviation_outputs(&study, &prefix)
        }
        _ => unreachable!("clap range check"),
    }
}

fn write_dataset(prefix: &str, csv: String, json_value: &Value) -> Result<(), Failure> {
    let json_text = serde_json::to_string_pretty(json_value).expect("serializable");
    std::fs::write(format!("{prefix}.csv"), csv)?;
    std::fs::write(format!("{prefix}.json"), json_text + "\n")?;
    eprintln!("wrote {prefix}.csv and {prefix}.json");
    Ok(())
}

fn figure_contours(args: &FigureArgs, prefix: &str) -> Result<(), Failure> {
    let orders: Vec<RenyiOrder> = match &args.q_list {
        Some(text) => parse_list::<RenyiOrder>(text, "--q-list")?,
        None => vec![
            RenyiOrder::General(0.25),
            RenyiOrder::Shannon,
            RenyiOrder::General(2.0),
            RenyiOrder::General(8.0),
        ],
    };
    let levels: Vec<f64> = match &args.levels {
        Some(text) => parse_list::<f64>(text, "--levels")?,
        None => (1..=8).map(|j| LN_3 * j as f64 / 9.0).collect(),
    };
    let grid = args.grid.unwrap_or(512);
    let mut csv = String::from("q,level,curve,x,y\n");
    let mut entries: Vec<Value> = Vec::new();
    for &q in &orders {
        for &level in &levels {
            let curves = iso_entropy_contours(q, &[level], grid)?;
            for (index, curve) in curves.iter().enumerate() {
                for point in &curve.points {
                    let _ = writeln!(
                        csv,
                        "{},{},{index},{},{}",
                        sig12(q.value()),
                        sig12(level),
                        sig12(point[0]),
                        sig12(point[1]),
                    );
                }
            }
            entries.push(json!({ "q": q, "level": level, "curves": curves }));
        }
    }
    write_dataset(
        prefix,
        csv,
        &json!({ "figure": 1, "grid": grid, "contours": entries }),
    )
}

fn plane_rows(csv: &mut String, s: f64, n: usize, boundary: &PlaneBoundary) {
    let mut push = |curve: &str, points: &[[f64; 2]]| {
        for point in points {
            let _ = writeln!(
                csv,
                "{},{n},{curve},{},{}",
                sig12(s),
                sig12(point[0]),
                sig12(point[1]),
            );
        }
    };
    push(&boundary.upper_arc.label, &boundary.upper_arc.points);
    for arc in &boundary.lower_cascade {
        push(&arc.label, &arc.points);
    }
    for reference in &boundary.reference_curves {
        push(&reference.label, &reference.points);
    }
    push("lattice", &boundary.lattice_points);
}

fn figure_plane(args: &FigureArgs, prefix: &str) -> Result<(), Failure> {
    let q = args.q.unwrap_or(1.0);
    let s_list: Vec<f64> = match &args.s_list {
        Some(text) => parse_list::<f64>(text, "--s-list")?,
        None => vec![2.0, 3.0, 4.0],
    };
    let n_list: Vec<usize> = match &args.n_list {
        Some(text) => parse_list::<usize>(text, "--n-list")?,
        None => vec![3, 5],
    };
    let samples = args.samples_per_arc.unwrap_or(256);
    let mut csv = String::from("s,n,curve,x,y\n");
    let mut panels: Vec<Value> = Vec::new();
    for &s in &s_list {
        for &n in &n_list {
            let boundary = entropy_plane_boundary(q, s, n, samples)?;
            plane_rows(&mut csv, s, n, &boundary);
            panels.push(json!({ "s": s, "n": n, "boundary": boundary }));
        }
    }
    write_dataset(
        prefix,
        csv,
        &json!({ "figure": 2, "q": q, "samples_per_arc": samples, "panels": panels }),
    )
}

fn figure_profile(args: &FigureArgs, prefix: &str) -> Result<(), Failure> {
    let n = args.n.unwrap_or(15);
    let seed = args.seed.unwrap_or(42);
    let q_max = args.q_max.unwrap_or(8.0);
    let q_step = args.q_step.unwrap_or(0.05);
    if !q_step.is_finite() || q_step <= 0.0 || !q_max.is_finite() || q_max < q_step {
        return Err(Failure::Validation(format!(
            "order grid needs 0 < --q-step <= --q-max; got step {q_step}, max {q_max}"
        )));
    }
    let steps = (q_max / q_step).round() as usize;
    let grid: Vec<f64> = (0..=steps).map(|i| i as f64 * q_step).collect();
    let mut rng = RngHandle::new(seed).stream(0);
    let p = sample_fisher_rao(n, &mut rng)?;
    let dataset = profile_with_bounds(&p, &grid)?;
    let mut csv = String::from("curve,q,value\n");
    let mut push = |curve: &str, points: &[[f64; 2]]| {
        for point in points {
            let _ = writeln!(csv, "{curve},{},{}", sig12(point[0]), sig12(point[1]));
        }
    };
    push(&dataset.profile.label, &dataset.profile.points);
    for polyline in [
        &dataset.h2_upper,
        &dataset.h2_lower,
        &dataset.h3_upper,
        &dataset.h3_lower,
        &dataset.lower_line,
        &dataset.upper_line,
    ] {
        push(&polyline.label, &polyline.points);
    }
    push("shannon-marker", &[dataset.shannon_marker]);
    push("star-marker", &[dataset.star_marker]);
    write_dataset(
        prefix,
        csv,
        &json!({ "figure": 3, "n": n, "seed": seed, "vector": p, "dataset": dataset }),
    )
}
