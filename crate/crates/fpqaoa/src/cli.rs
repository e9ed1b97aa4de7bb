//! `fpqaoa` subcommands.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for runtime or
//! configuration errors.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use fpqaoa_core::encoding::{AngleSource, DepthRule};
use fpqaoa_core::metrics::brute_force_baseline;
use fpqaoa_core::qubo::{spins_of_index, EnsembleKind, EnsembleSpec};
use fpqaoa_core::spectrum::{compute_spectrum, feasible_set};
use fpqaoa_core::stats::{log_linear_fit, SummaryRow};
use fpqaoa_core::training::{Encoding, LossKind, MutationConfig, TrainConfig};
use fpqaoa_core::{rescale, tts_model, FourierParams, NormKind, ENUMERATION_LIMIT};
use serde_json::json;

use crate::format::{
    self, fingerprint, read_instance, read_params, record_echoes, summary_csv, write_instance,
    write_json, write_text, Manifest, ManifestEntry, RunConfigEcho, TrainConfigEcho,
    TrainResultFile,
};
use crate::suite::{
    ablation_suite, alpha_sweep, norm_comparison_suite, run_suite, Ablation, ArmOutput,
    ParamProvenance, RunConfig, SuiteOutput,
};
use crate::trainer::train_ensemble;
use crate::{Error, Pool};

/// Largest size accepted without `--force`.
pub const DESK_LIMIT: usize = 16;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Runtime(e)
    }
}

impl From<fpqaoa_core::Error> for CliError {
    fn from(e: fpqaoa_core::Error) -> Self {
        CliError::Runtime(e.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Runtime(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

type CliResult<T = ()> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "fpqaoa",
    version,
    about = "Fixed-parameter QAOA experiments on random QUBO ensembles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a random ensemble as instance files plus a manifest.
    Generate(GenerateArgs),
    /// Exact spectrum summary of one instance file.
    Spectrum(SpectrumArgs),
    /// Train fixed parameters on a random ensemble.
    Train(TrainArgs),
    /// STS percentiles of fixed parameters over a size range.
    Eval(EvalArgs),
    /// Re-run the suite with one modification removed.
    Ablate(AblateArgs),
    /// Suite at several approximation ratios on shared instances.
    SweepAlpha(SweepArgs),
    /// Suite under several rescaling strategies on shared instances.
    CompareNorms(CompareArgs),
}

fn parse_kind(s: &str) -> Result<EnsembleKind, String> {
    match EnsembleKind::parse(s) {
        Some(EnsembleKind::Custom) | None => Err(format!("expected normal or mixed, got {s:?}")),
        Some(k) => Ok(k),
    }
}

fn parse_norm(s: &str) -> Result<NormKind, String> {
    NormKind::parse(s)
        .ok_or_else(|| format!("expected frobenius, maxabs, wnorm or none, got {s:?}"))
}

fn parse_loss(s: &str) -> Result<LossKind, String> {
    LossKind::parse(s).ok_or_else(|| format!("expected min-palpha or ar-expect, got {s:?}"))
}

fn parse_which(s: &str) -> Result<Ablation, String> {
    Ablation::parse(s).ok_or_else(|| format!("expected no-m1, no-m2 or no-m3, got {s:?}"))
}

/// `n` or a positive integer.
pub fn parse_depth(s: &str) -> Result<DepthRule, String> {
    if s == "n" {
        return Ok(DepthRule::EqualN);
    }
    match s.parse::<usize>() {
        Ok(p) if p >= 1 => Ok(DepthRule::Fixed(p)),
        _ => Err(format!("expected n or a positive depth, got {s:?}")),
    }
}

/// `A..B` (inclusive) or a single `A`; both positive, `A <= B`.
pub fn parse_range(s: &str) -> Result<Vec<usize>, String> {
    let bad = || format!("expected A..B or A with positive integers, got {s:?}");
    let parse = |t: &str| -> Result<usize, String> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<usize>().ok().filter(|&v| v >= 1).ok_or_else(bad)
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![parse(s)?]),
    }
}

/// Problem sizes parsed from [`parse_range`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeRange(pub Vec<usize>);

fn parse_sizes(s: &str) -> Result<SizeRange, String> {
    parse_range(s).map(SizeRange)
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(a) if (0.0..=1.0).contains(&a) => Ok(a),
        _ => Err(format!(
            "expected an approximation ratio in [0, 1], got {s:?}"
        )),
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: EnsembleKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_parser = parse_norm, default_value = "none")]
    pub norm: NormKind,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_parser = parse_alpha, default_value = "0.95")]
    pub alpha: f64,
    #[arg(long, value_parser = parse_norm, default_value = "none")]
    pub norm: NormKind,
    /// Write the summary here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct OptimizerArgs {
    /// Mutations per restart; 0 only evaluates the initial point.
    #[arg(long, default_value_t = MutationConfig::default().budget)]
    pub budget: usize,
    #[arg(long, default_value_t = MutationConfig::default().restarts)]
    pub restarts: usize,
    #[arg(long, default_value_t = MutationConfig::default().sigma)]
    pub sigma: f64,
    #[arg(long, default_value_t = MutationConfig::default().shrink)]
    pub shrink: f64,
    #[arg(long, default_value_t = MutationConfig::default().patience)]
    pub patience: usize,
    #[arg(long, default_value_t = MutationConfig::default().bound)]
    pub bound: f64,
}

impl OptimizerArgs {
    fn config(&self) -> MutationConfig {
        MutationConfig {
            restarts: self.restarts,
            budget: self.budget,
            sigma: self.sigma,
            shrink: self.shrink,
            patience: self.patience,
            bound: self.bound,
        }
    }
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    #[arg(long, value_parser = parse_kind, default_value = "normal")]
    pub kind: EnsembleKind,
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, value_parser = parse_alpha, default_value = "0.95")]
    pub alpha: f64,
    #[arg(long, value_parser = parse_loss, default_value = "min-palpha")]
    pub loss: LossKind,
    /// Number of Fourier coefficient pairs; 1 is the sine-cosine schedule.
    #[arg(long, default_value_t = 1)]
    pub q: usize,
    #[arg(long, value_parser = parse_depth, default_value = "n")]
    pub depth: DepthRule,
    #[arg(long, value_parser = parse_norm, default_value = "frobenius")]
    pub norm: NormKind,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
    /// Initial u for the first restart (q = 1).
    #[arg(long, allow_negative_numbers = true, requires = "init_v")]
    pub init_u: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "init_u")]
    pub init_v: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ParamArgs {
    /// Parameter or training-result JSON file.
    #[arg(long, conflicts_with_all = ["u", "v"])]
    pub params: Option<PathBuf>,
    #[arg(long, allow_negative_numbers = true, requires = "v")]
    pub u: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires = "u")]
    pub v: Option<f64>,
}

impl ParamArgs {
    fn given(&self) -> bool {
        self.params.is_some() || self.u.is_some()
    }

    fn load(&self) -> CliResult<FourierParams> {
        match (&self.params, self.u, self.v) {
            (Some(path), _, _) => Ok(read_params(path)?),
            (None, Some(u), Some(v)) => Ok(FourierParams::sincos(u, v)),
            _ => Err(CliError::Usage(
                "give --params FILE or both --u and --v".into(),
            )),
        }
    }
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, value_parser = parse_alpha, default_value = "0.95")]
    pub alpha: f64,
    #[arg(long, value_parser = parse_kind, default_value = "normal")]
    pub kind: EnsembleKind,
    /// Size range `A..B` (inclusive) or a single size.
    #[arg(long, value_parser = parse_sizes, default_value = "5..16")]
    pub n: SizeRange,
    #[arg(long, default_value_t = 1000)]
    pub count: usize,
    #[arg(long, value_parser = parse_norm, default_value = "frobenius")]
    pub norm: NormKind,
    #[arg(long, value_parser = parse_depth, default_value = "n")]
    pub depth: DepthRule,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Allow sizes above the desk-scale limit (up to the enumeration limit).
    #[arg(long)]
    pub force: bool,
    /// Also write every per-instance record as JSON.
    #[arg(long)]
    pub full: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RetrainArgs {
    #[arg(long, default_value_t = 6)]
    pub train_n: usize,
    #[arg(long, default_value_t = 200)]
    pub train_count: usize,
    #[command(flatten)]
    pub optimizer: OptimizerArgs,
    /// Reuse the given parameters instead of re-training per arm.
    #[arg(long)]
    pub reuse_params: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").args(["params", "u"]).required(true)))]
pub struct EvalArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct AblateArgs {
    #[arg(long, value_parser = parse_which)]
    pub which: Ablation,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub retrain: RetrainArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").args(["params", "u"]).required(true)))]
pub struct SweepArgs {
    /// Comma-separated approximation ratios.
    #[arg(long, value_parser = parse_alpha, value_delimiter = ',', required = true)]
    pub alphas: Vec<f64>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_parser = parse_norm, value_delimiter = ',', default_value = "frobenius,maxabs,wnorm")]
    pub norms: Vec<NormKind>,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub run: RunArgs,
    #[command(flatten)]
    pub retrain: RetrainArgs,
}

fn check_size(n: usize, force: bool) -> CliResult {
    if n > ENUMERATION_LIMIT {
        return Err(Error::Config(format!(
            "n = {n} exceeds the enumeration limit {ENUMERATION_LIMIT}"
        ))
        .into());
    }
    if n > DESK_LIMIT && !force {
        return Err(Error::Config(format!(
            "n = {n} exceeds the desk-scale limit {DESK_LIMIT}; pass --force to run it"
        ))
        .into());
    }
    if n > DESK_LIMIT {
        let bytes = (1u64 << n) * 24;
        eprintln!(
            "note: n = {n} needs about {:.1} MiB per worker (state + cost table)",
            bytes as f64 / (1u64 << 20) as f64
        );
    }
    Ok(())
}

fn create_dir(path: &Path) -> CliResult {
    fs::create_dir_all(path).map_err(|e| Error::io(path, e))?;
    Ok(())
}

fn write_config_echo(dir: &Path, command: &str, body: serde_json::Value) -> CliResult {
    let mut echo = json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "argv": std::env::args().skip(1).collect::<Vec<_>>(),
    });
    if let (Some(obj), serde_json::Value::Object(extra)) = (echo.as_object_mut(), body) {
        obj.extend(extra);
    }
    write_json(&dir.join("config.json"), &echo)?;
    Ok(())
}

pub fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Generate(a) => cmd_generate(&a),
        Command::Spectrum(a) => cmd_spectrum(&a),
        Command::Train(a) => cmd_train(&a),
        Command::Eval(a) => cmd_eval(&a),
        Command::Ablate(a) => cmd_ablate(&a),
        Command::SweepAlpha(a) => cmd_sweep_alpha(&a),
        Command::CompareNorms(a) => cmd_compare_norms(&a),
    }
}

pub fn cmd_generate(a: &GenerateArgs) -> CliResult {
    check_size(a.n, a.force)?;
    let spec = EnsembleSpec {
        kind: a.kind,
        n: a.n,
        count: a.count,
        base_seed: a.seed,
        normalization: a.norm,
    };
    spec.validate()?;
    create_dir(&a.out)?;
    let width = (a.count.max(1) - 1).to_string().len().max(4);
    let mut files = Vec::with_capacity(a.count);
    let (mut zeros, mut slots) = (0usize, 0usize);
    for k in 0..a.count {
        let raw = spec.instance(k)?;
        let inst = match rescale(&raw, a.norm) {
            Ok(i) => i,
            Err(fpqaoa_core::Error::ZeroInstance) => raw,
            Err(e) => return Err(e.into()),
        };
        let name = format!("instance_{k:0width$}.json");
        write_instance(&a.out.join(&name), &inst)?;
        let nonzero = inst.entries().count();
        zeros += inst.slot_count() - nonzero;
        slots += inst.slot_count();
        files.push(ManifestEntry {
            file: name,
            seed: inst.seed,
            fingerprint: fingerprint(&inst),
            nonzero,
        });
    }
    let manifest = Manifest {
        kind: a.kind.as_str().into(),
        n: a.n,
        count: a.count,
        seed: a.seed,
        norm: a.norm.as_str().into(),
        zero_fraction: zeros as f64 / slots as f64,
        files,
    };
    write_json(&a.out.join("manifest.json"), &manifest)?;
    write_config_echo(
        &a.out,
        "generate",
        json!({"kind": a.kind.as_str(), "n": a.n, "count": a.count, "seed": a.seed, "norm": a.norm.as_str()}),
    )?;
    println!(
        "wrote {} instances to {} (zero fraction {:.4})",
        a.count,
        a.out.display(),
        manifest.zero_fraction
    );
    Ok(())
}

pub fn cmd_spectrum(a: &SpectrumArgs) -> CliResult {
    let raw = read_instance(&a.instance)?;
    check_size(raw.n(), a.force)?;
    let inst = rescale(&raw, a.norm)?;
    let spectrum = compute_spectrum(&inst)?;
    let fs = feasible_set(&spectrum, a.alpha)?;
    let argmin_spins: Vec<Vec<i8>> = spectrum
        .argmin()
        .iter()
        .map(|&z| spins_of_index(z as u64, inst.n()))
        .collect();
    let summary = json!({
        "n": inst.n(),
        "norm": a.norm.as_str(),
        "c_min": spectrum.c_min(),
        "c_max": spectrum.c_max(),
        "argmin": spectrum.argmin(),
        "argmin_spins": argmin_spins,
        "alpha": a.alpha,
        "threshold": fs.threshold_cost,
        "feasible_count": fs.len(),
        "brute_force_sts": brute_force_baseline(&spectrum, a.alpha)?,
    });
    match &a.out {
        Some(path) => write_json(path, &summary)?,
        None => println!("{}", serde_json::to_string_pretty(&summary).expect("json")),
    }
    Ok(())
}

pub fn cmd_train(a: &TrainArgs) -> CliResult {
    check_size(a.n, false)?;
    if a.q == 0 {
        return Err(CliError::Usage("--q must be at least 1".into()));
    }
    let initial = match (a.init_u, a.init_v) {
        (Some(u), Some(v)) if a.q == 1 => Some(FourierParams::sincos(u, v)),
        (Some(_), Some(_)) => return Err(CliError::Usage("--init-u/--init-v need --q 1".into())),
        _ => None,
    };
    let cfg = TrainConfig {
        kind: a.kind,
        train_n: a.n,
        train_count: a.count,
        alpha: a.alpha,
        loss: a.loss,
        encoding: if a.q == 1 {
            Encoding::SinCos
        } else {
            Encoding::Fourier(a.q)
        },
        depth: a.depth,
        norm: a.norm,
        optimizer: a.optimizer.config(),
        initial,
    };
    cfg.validate()?;
    create_dir(&a.out)?;
    let pool = Pool::new(a.jobs)?;
    let (result, _) = train_ensemble(&cfg, a.seed, &pool)?;
    let file = TrainResultFile::new(&result, &cfg, a.seed);
    write_json(&a.out.join("train_result.json"), &file)?;
    write_config_echo(
        &a.out,
        "train",
        json!({"train": TrainConfigEcho::new(&cfg, a.seed), "jobs": a.jobs}),
    )?;
    println!(
        "{} = {} after {} evaluations; u = {:?}, v = {:?}",
        cfg.loss.as_str(),
        result.achieved_loss,
        result.eval_count,
        result.params.u(),
        result.params.v()
    );
    Ok(())
}

fn run_config(run: &RunArgs, source: AngleSource) -> CliResult<RunConfig> {
    for &n in &run.n.0 {
        check_size(n, run.force)?;
    }
    let cfg = RunConfig {
        source,
        alpha: run.alpha,
        n_range: run.n.0.clone(),
        count: run.count,
        kind: run.kind,
        norm: run.norm,
        depth: run.depth,
        base_seed: run.seed,
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Training configuration mirroring a base run, for arms that re-train.
fn retrain_config(run: &RunArgs, r: &RetrainArgs) -> TrainConfig {
    TrainConfig {
        kind: run.kind,
        train_n: r.train_n,
        train_count: r.train_count,
        alpha: run.alpha,
        loss: LossKind::MinPAlpha,
        encoding: Encoding::SinCos,
        depth: run.depth,
        norm: run.norm,
        optimizer: r.optimizer.config(),
        initial: None,
    }
}

fn provenance(
    params: &ParamArgs,
    run: &RunArgs,
    r: &RetrainArgs,
) -> CliResult<(AngleSource, ParamProvenance)> {
    if r.reuse_params {
        let p = params.load()?;
        return Ok((AngleSource::Fourier(p), ParamProvenance::Reuse));
    }
    let placeholder = if params.given() {
        params.load()?
    } else {
        FourierParams::zeros(1)
    };
    Ok((
        AngleSource::Fourier(placeholder),
        ParamProvenance::Retrain {
            train: retrain_config(run, r),
            seed: run.seed,
        },
    ))
}

fn print_rows(label: &str, out: &SuiteOutput, depth: DepthRule) {
    println!("# {label} (alpha = {})", out.alpha);
    println!(
        "{:>3} {:>10} {:>10} {:>10} {:>10} {:>10} {:>5} {:>8} {:>8} {:>12}",
        "n", "median", "q1", "q3", "p01", "p99", "out", "ar", "mean_p", "median_tts"
    );
    for r in &out.rows {
        println!(
            "{:>3} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>5} {:>8.4} {:>8.4} {:>12.2}",
            r.n,
            r.median_sts,
            r.q1_sts,
            r.q3_sts,
            r.p01_sts,
            r.p99_sts,
            r.outlier_count,
            r.median_ar_expect,
            r.mean_p_alpha,
            tts_model(r.median_sts, r.n, depth.depth(r.n)),
        );
    }
    let pts: Vec<(f64, f64)> = out
        .rows
        .iter()
        .map(|r| (r.n as f64, r.median_sts))
        .collect();
    if let Some((a, b)) = log_linear_fit(&pts) {
        println!("# fit: median STS ~ {:.4} * exp({:.4} n)", a.exp(), b);
    }
}

fn write_suite(dir: &Path, stem: &str, out: &SuiteOutput, full: bool) -> CliResult {
    write_text(&dir.join(format!("{stem}.csv")), &summary_csv(&out.rows)?)?;
    let mut baseline = String::from("n,median_brute_force_sts\n");
    for (n, m) in out.brute_force_medians() {
        baseline.push_str(&format!("{n},{m}\n"));
    }
    let base_name = stem.replacen("summary", "baseline", 1);
    write_text(&dir.join(format!("{base_name}.csv")), &baseline)?;
    if full {
        let records_name = stem.replacen("summary", "records", 1);
        write_json(
            &dir.join(format!("{records_name}.json")),
            &record_echoes(&out.records),
        )?;
    }
    Ok(())
}

pub fn cmd_eval(a: &EvalArgs) -> CliResult {
    let cfg = run_config(&a.run, AngleSource::Fourier(a.params.load()?))?;
    create_dir(&a.run.out)?;
    let pool = Pool::new(a.run.jobs)?;
    let out = run_suite(&cfg, &pool)?;
    write_suite(&a.run.out, "summary", &out, a.run.full)?;
    write_config_echo(
        &a.run.out,
        "eval",
        json!({"run": RunConfigEcho::from(&cfg), "jobs": a.run.jobs}),
    )?;
    print_rows("eval", &out, cfg.depth);
    Ok(())
}

fn arm_echo(arm: &ArmOutput) -> serde_json::Value {
    json!({
        "run": RunConfigEcho::from(&arm.config),
        "train": arm.trained.as_ref().map(|(tc, res)| json!({
            "config": TrainConfigEcho::new(tc, arm.config.base_seed),
            "loss": res.achieved_loss,
        })),
    })
}

fn write_trained(dir: &Path, name: &str, arm: &ArmOutput) -> CliResult {
    if let Some((tc, res)) = &arm.trained {
        let file = TrainResultFile::new(res, tc, arm.config.base_seed);
        write_json(&dir.join(name), &file)?;
    }
    Ok(())
}

pub fn cmd_ablate(a: &AblateArgs) -> CliResult {
    let (source, prov) = provenance(&a.params, &a.run, &a.retrain)?;
    let base = run_config(&a.run, source)?;
    create_dir(&a.run.out)?;
    let pool = Pool::new(a.run.jobs)?;
    let arm = ablation_suite(&base, a.which, &prov, &pool)?;
    write_suite(&a.run.out, "summary", &arm.output, a.run.full)?;
    write_trained(&a.run.out, "train_result.json", &arm)?;
    let mut body = arm_echo(&arm);
    body["which"] = json!(a.which.as_str());
    body["reuse_params"] = json!(a.retrain.reuse_params);
    body["jobs"] = json!(a.run.jobs);
    write_config_echo(&a.run.out, "ablate", body)?;
    print_rows(a.which.as_str(), &arm.output, arm.config.depth);
    Ok(())
}

fn alpha_label(alpha: f64) -> String {
    format!("{alpha}")
}

pub fn cmd_sweep_alpha(a: &SweepArgs) -> CliResult {
    let cfg = run_config(&a.run, AngleSource::Fourier(a.params.load()?))?;
    create_dir(&a.run.out)?;
    let pool = Pool::new(a.run.jobs)?;
    let outs = alpha_sweep(&cfg, &a.alphas, &pool)?;
    for out in &outs {
        let stem = format!("summary_alpha_{}", alpha_label(out.alpha));
        write_suite(&a.run.out, &stem, out, a.run.full)?;
        print_rows(&stem, out, cfg.depth);
    }
    write_config_echo(
        &a.run.out,
        "sweep-alpha",
        json!({"run": RunConfigEcho::from(&cfg), "alphas": a.alphas, "jobs": a.run.jobs}),
    )?;
    Ok(())
}

pub fn cmd_compare_norms(a: &CompareArgs) -> CliResult {
    let (source, prov) = provenance(&a.params, &a.run, &a.retrain)?;
    let base = run_config(&a.run, source)?;
    create_dir(&a.run.out)?;
    let pool = Pool::new(a.run.jobs)?;
    let arms = norm_comparison_suite(&base, &a.norms, &prov, &pool)?;
    let mut echoes = serde_json::Map::new();
    for (kind, arm) in &arms {
        let stem = format!("summary_{}", kind.as_str());
        write_suite(&a.run.out, &stem, &arm.output, a.run.full)?;
        write_trained(
            &a.run.out,
            &format!("train_result_{}.json", kind.as_str()),
            arm,
        )?;
        echoes.insert(kind.as_str().into(), arm_echo(arm));
        print_rows(&stem, &arm.output, arm.config.depth);
    }
    write_config_echo(
        &a.run.out,
        "compare-norms",
        json!({"arms": echoes, "reuse_params": a.retrain.reuse_params, "jobs": a.run.jobs}),
    )?;
    Ok(())
}

/// Summary rows of a CSV written by any suite command.
pub fn read_summary(path: &Path) -> crate::Result<Vec<SummaryRow>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    format::parse_summary_csv(&text)
}
