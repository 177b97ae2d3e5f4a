//! Command-line experiments.
//!
//! Every command turns an [`ExperimentSpec`] into one CSV document. The
//! document depends only on the spec, so identical invocations produce
//! identical bytes. Rows are ordered by combiner, then `rho`, then `K`.

mod csv;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

pub use self::csv::{fmt_float, CsvDocument};
use crate::analytic::{approx_factors, log_grid, SinrModel, TRANSMIT_ANTENNAS};
use crate::error::Error;
use crate::simulator::{simulate_sum_rates, CombinerKind, SystemConfig};
use crate::throughput::{asymptotic_throughput, exact_throughput, ThroughputEstimate, ThroughputMethod};

const RECEIVE: usize = crate::analytic::RECEIVE_ANTENNAS;

#[derive(Debug, Parser)]
#[command(name = "oppsched", version, about = "Opportunistic MIMO-SDMA scheduling experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monte Carlo average sum-rate.
    Simulate(ExperimentArgs),
    /// Closed-form CDF and PDF on a 400-point log grid.
    Cdf(ExperimentArgs),
    /// Gumbel normalizing factors, numeric and (at rho = 1) closed-form.
    Factors(ExperimentArgs),
    /// Sum-rate by the methods selected with --method.
    Throughput(ExperimentArgs),
    /// Sum-rate by every method side by side.
    Compare(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CombinerArg {
    Sc,
    Mrc,
    Oc,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Mc,
    Exact,
    Asymptotic,
    Approx,
    All,
}

#[derive(Debug, Clone, clap::Args)]
pub struct ExperimentArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub combiner: CombinerArg,
    /// A user count or a geometric range `start:stop:xF`.
    #[arg(long)]
    pub users: Option<UserRange>,
    /// Comma-separated linear SNR constants.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub rho: Vec<f64>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub method: MethodArg,
}

/// User counts given as `K` or `start:stop:xF` (multiply by `F` until `stop`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UserRange(pub Vec<u64>);

impl FromStr for UserRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let int = |p: &str| p.trim().parse::<u64>().map_err(|e| format!("bad user count {p:?}: {e}"));
        match parts.as_slice() {
            [k] => {
                let k = int(k)?;
                if k == 0 {
                    return Err("user count must be at least 1".into());
                }
                Ok(UserRange(vec![k]))
            }
            [start, stop, step] => {
                let (start, stop) = (int(start)?, int(stop)?);
                let factor = step
                    .strip_prefix('x')
                    .ok_or_else(|| format!("range step must look like x2, got {step:?}"))?;
                let factor = int(factor)?;
                if start == 0 || factor < 2 || stop < start {
                    return Err(format!("invalid range {s:?}: need 1 <= start <= stop and factor >= 2"));
                }
                let mut ks = Vec::new();
                let mut k = start;
                while k <= stop {
                    ks.push(k);
                    match k.checked_mul(factor) {
                        Some(next) => k = next,
                        None => break,
                    }
                }
                Ok(UserRange(ks))
            }
            _ => Err(format!("expected K or start:stop:xF, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Simulate,
    Cdf,
    Factors,
    Throughput,
    Compare,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Simulate => "simulate",
            CommandKind::Cdf => "cdf",
            CommandKind::Factors => "factors",
            CommandKind::Throughput => "throughput",
            CommandKind::Compare => "compare",
        }
    }
}

/// A fully resolved experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub command: CommandKind,
    pub combiners: Vec<CombinerKind>,
    pub users: Vec<u64>,
    pub rho: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    pub methods: Vec<ThroughputMethod>,
    pub out: Option<PathBuf>,
}

/// Why an experiment could not run.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag combinations; exit status 2.
    Usage(String),
    /// A numerical routine failed; exit status 1.
    Numeric { op: &'static str, source: Error },
    /// Writing the output failed; exit status 1.
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric { .. } | CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Numeric { op, source } => write!(f, "{op} failed: {source}"),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

fn numeric(op: &'static str) -> impl Fn(Error) -> CliError {
    move |source| CliError::Numeric { op, source }
}

impl ExperimentSpec {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, args) = match cli.command {
            Command::Simulate(a) => (CommandKind::Simulate, a),
            Command::Cdf(a) => (CommandKind::Cdf, a),
            Command::Factors(a) => (CommandKind::Factors, a),
            Command::Throughput(a) => (CommandKind::Throughput, a),
            Command::Compare(a) => (CommandKind::Compare, a),
        };
        let combiners = match args.combiner {
            CombinerArg::Sc => vec![CombinerKind::Sc],
            CombinerArg::Mrc => vec![CombinerKind::Mrc],
            CombinerArg::Oc => vec![CombinerKind::Oc],
            CombinerArg::All => CombinerKind::ALL.to_vec(),
        };
        let methods = match (command, args.method) {
            (CommandKind::Compare, _) | (_, MethodArg::All) => ThroughputMethod::ALL.to_vec(),
            (_, MethodArg::Mc) => vec![ThroughputMethod::MonteCarlo],
            (_, MethodArg::Exact) => vec![ThroughputMethod::ExactQuadrature],
            (_, MethodArg::Asymptotic) => vec![ThroughputMethod::AsymptoticNumeric],
            (_, MethodArg::Approx) => vec![ThroughputMethod::AsymptoticApprox],
        };
        let users = match (command, args.users) {
            (_, Some(UserRange(ks))) => ks,
            (CommandKind::Cdf, None) => Vec::new(),
            (_, None) => return Err(CliError::Usage(format!("{} requires --users", command.name()))),
        };
        let spec = ExperimentSpec {
            command,
            combiners,
            users,
            rho: args.rho,
            trials: args.trials,
            seed: args.seed,
            methods,
            out: args.out,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.command != CommandKind::Cdf && self.users.is_empty() {
            return Err(CliError::Usage("user range is empty".into()));
        }
        if self.users.contains(&0) {
            return Err(CliError::Usage("user counts must be at least 1".into()));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("--trials must be at least 1".into()));
        }
        if self.rho.is_empty() || self.rho.iter().any(|r| !(*r > 0.0 && r.is_finite())) {
            return Err(CliError::Usage("--rho values must be positive and finite".into()));
        }
        if self.command == CommandKind::Factors && self.users.contains(&1) {
            return Err(CliError::Usage("factors needs K >= 2".into()));
        }
        if let Some(out) = &self.out {
            let parent = match out.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => std::path::Path::new("."),
            };
            if !parent.is_dir() || out.is_dir() {
                return Err(CliError::Usage(format!("--out {} is not a writable file path", out.display())));
            }
        }
        Ok(())
    }

    /// The `#` comment line recording the spec.
    pub fn describe(&self) -> String {
        let join = |v: Vec<String>| v.join(";");
        format!(
            "oppsched {} combiner={} users={} rho={} trials={} seed={} method={}",
            self.command.name(),
            join(self.combiners.iter().map(|c| c.name().to_string()).collect()),
            join(self.users.iter().map(u64::to_string).collect()),
            join(self.rho.iter().map(|r| fmt_float(*r)).collect()),
            self.trials,
            self.seed,
            join(self.methods.iter().map(|m| m.name().to_string()).collect()),
        )
    }

    fn sorted_rho(&self) -> Vec<f64> {
        let mut rho = self.rho.clone();
        rho.sort_by(f64::total_cmp);
        rho.dedup();
        rho
    }

    fn sorted_users(&self) -> Vec<u64> {
        let mut users = self.users.clone();
        users.sort_unstable();
        users.dedup();
        users
    }

    fn sorted_combiners(&self) -> Vec<CombinerKind> {
        let mut c = self.combiners.clone();
        c.sort();
        c.dedup();
        c
    }
}

/// Produces the CSV document for `spec`.
pub fn render(spec: &ExperimentSpec) -> Result<CsvDocument, CliError> {
    match spec.command {
        CommandKind::Simulate => render_simulate(spec),
        CommandKind::Cdf => render_cdf(spec),
        CommandKind::Factors => render_factors(spec),
        CommandKind::Throughput | CommandKind::Compare => render_throughput(spec),
    }
}

fn system(k: u64, rho: f64) -> Result<SystemConfig, CliError> {
    SystemConfig::m4n2(k as usize, rho).map_err(numeric("SystemConfig::new"))
}

/// Monte Carlo for every combiner at one grid point, sharing the draws.
fn monte_carlo_point(
    spec: &ExperimentSpec,
    combiners: &[CombinerKind],
    k: u64,
    rho: f64,
) -> Result<Vec<ThroughputEstimate>, CliError> {
    simulate_sum_rates(&system(k, rho)?, combiners, spec.trials, spec.seed)
        .map_err(numeric("simulate_sum_rate"))
}

fn render_simulate(spec: &ExperimentSpec) -> Result<CsvDocument, CliError> {
    let combiners = spec.sorted_combiners();
    let (rhos, users) = (spec.sorted_rho(), spec.sorted_users());
    let mut results = Vec::new();
    for &rho in &rhos {
        for &k in &users {
            results.push((rho, k, monte_carlo_point(spec, &combiners, k, rho)?));
        }
    }
    let mut doc = CsvDocument::new(
        &spec.describe(),
        &["combiner", "M", "N", "K", "rho", "trials", "seed", "mean_sum_rate", "stderr"],
    );
    for (ci, c) in combiners.iter().enumerate() {
        for (rho, k, est) in &results {
            let e = est[ci];
            doc.push(&[
                c.name().into(),
                TRANSMIT_ANTENNAS.to_string(),
                RECEIVE.to_string(),
                k.to_string(),
                fmt_float(*rho),
                spec.trials.to_string(),
                spec.seed.to_string(),
                fmt_float(e.value),
                fmt_float(e.stderr),
            ]);
        }
    }
    Ok(doc)
}

fn render_cdf(spec: &ExperimentSpec) -> Result<CsvDocument, CliError> {
    let mut doc = CsvDocument::new(&spec.describe(), &["combiner", "rho", "x", "F", "f"]);
    for c in spec.sorted_combiners() {
        for rho in spec.sorted_rho() {
            let model = SinrModel::new(c, rho).map_err(numeric("SinrModel::new"))?;
            for x in log_grid(rho) {
                let f_cdf = model.cdf(x).map_err(numeric("cdf"))?;
                let f_pdf = model.pdf(x).map_err(numeric("pdf"))?;
                doc.push(&[c.name().into(), fmt_float(rho), fmt_float(x), fmt_float(f_cdf), fmt_float(f_pdf)]);
            }
        }
    }
    Ok(doc)
}

fn render_factors(spec: &ExperimentSpec) -> Result<CsvDocument, CliError> {
    let mut doc = CsvDocument::new(
        &spec.describe(),
        &["combiner", "rho", "K", "method", "a_K", "b_K", "residual"],
    );
    for c in spec.sorted_combiners() {
        for rho in spec.sorted_rho() {
            let model = SinrModel::new(c, rho).map_err(numeric("SinrModel::new"))?;
            for k in spec.sorted_users() {
                let mut rows = vec![model.solve_factors(k).map_err(numeric("solve_factors"))?];
                if rho == 1.0 {
                    if let Ok(f) = approx_factors(c, k) {
                        rows.push(f);
                    }
                }
                for f in rows {
                    doc.push(&[
                        c.name().into(),
                        fmt_float(rho),
                        k.to_string(),
                        f.method.name().into(),
                        fmt_float(f.a_k),
                        fmt_float(f.b_k),
                        fmt_float(f.location_residual(&model)),
                    ]);
                }
            }
        }
    }
    Ok(doc)
}

fn render_throughput(spec: &ExperimentSpec) -> Result<CsvDocument, CliError> {
    let combiners = spec.sorted_combiners();
    let (rhos, users) = (spec.sorted_rho(), spec.sorted_users());
    let want = |m: ThroughputMethod| spec.methods.contains(&m);

    let mut mc = Vec::new();
    if want(ThroughputMethod::MonteCarlo) {
        for &rho in &rhos {
            for &k in &users {
                mc.push(((rho.to_bits(), k), monte_carlo_point(spec, &combiners, k, rho)?));
            }
        }
    }

    let mut doc = CsvDocument::new(&spec.describe(), &["combiner", "rho", "K", "method", "value", "stderr"]);
    for (ci, &c) in combiners.iter().enumerate() {
        for &rho in &rhos {
            let model = SinrModel::new(c, rho).map_err(numeric("SinrModel::new"))?;
            for &k in &users {
                let mut row_estimates = Vec::new();
                if want(ThroughputMethod::MonteCarlo) {
                    let (_, est) = mc
                        .iter()
                        .find(|(key, _)| *key == (rho.to_bits(), k))
                        .expect("Monte Carlo point computed above");
                    row_estimates.push(est[ci]);
                }
                if want(ThroughputMethod::ExactQuadrature) {
                    row_estimates.push(
                        exact_throughput(&model, k, TRANSMIT_ANTENNAS).map_err(numeric("exact_throughput"))?,
                    );
                }
                if want(ThroughputMethod::AsymptoticNumeric) && k >= 2 {
                    let f = model.solve_factors(k).map_err(numeric("solve_factors"))?;
                    row_estimates.push(asymptotic_throughput(&f).map_err(numeric("asymptotic_throughput"))?);
                }
                if want(ThroughputMethod::AsymptoticApprox) && rho == 1.0 {
                    if let Ok(f) = approx_factors(c, k) {
                        row_estimates
                            .push(asymptotic_throughput(&f).map_err(numeric("asymptotic_throughput"))?);
                    }
                }
                for est in row_estimates {
                    doc.push(&[
                        c.name().into(),
                        fmt_float(rho),
                        k.to_string(),
                        est.method.name().into(),
                        fmt_float(est.value),
                        fmt_float(est.stderr),
                    ]);
                }
            }
        }
    }
    Ok(doc)
}

/// Renders `spec` and writes it to `--out` (or standard output).
/// Returns the one-line summary.
pub fn run(spec: &ExperimentSpec) -> Result<String, CliError> {
    let doc = render(spec)?;
    let rows = doc.rows();
    let text = doc.into_string();
    let target = match &spec.out {
        Some(path) => {
            std::fs::write(path, text.as_bytes()).map_err(CliError::Io)?;
            path.display().to_string()
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(CliError::Io)?;
            "<stdout>".to_string()
        }
    };
    Ok(format!("oppsched {}: {rows} rows written to {target}", spec.command.name()))
}
