//! On-disk formats.
//!
//! Instance file (indices 1-based, `i <= j`, omitted pairs are zero):
//!
//! ```json
//! {"n": 3, "entries": [[1, 1, 0.5], [1, 3, -1.2]], "ensemble": "normal", "seed": 7, "norm": "none"}
//! ```
//!
//! Parameter file: `{"q": 1, "u": [2.09], "v": [-0.477]}`. A training result
//! file, which nests the parameters under `"params"`, is accepted wherever a
//! parameter file is.
//!
//! Summary CSV header: `n,median_sts,q1,q3,p01,p99,outliers,median_ar_expect,mean_p_alpha`.
//! Floats are written in shortest round-trip form; infinite STS as `inf`.

use std::fs;
use std::io::Write;
use std::path::Path;

use fpqaoa_core::encoding::{AngleSchedule, AngleSource, DepthRule};
use fpqaoa_core::metrics::EvalRecord;
use fpqaoa_core::qubo::{EnsembleKind, QuboInstance};
use fpqaoa_core::stats::SummaryRow;
use fpqaoa_core::training::{Encoding, TrainConfig};
use fpqaoa_core::{FourierParams, NormKind, TrainResult};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::suite::RunConfig;
use crate::{Error, Result};

pub const SUMMARY_HEADER: [&str; 9] = [
    "n",
    "median_sts",
    "q1",
    "q3",
    "p01",
    "p99",
    "outliers",
    "median_ar_expect",
    "mean_p_alpha",
];

fn format_err(path: &Path, reason: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// Pretty JSON with a trailing newline.
pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub n: usize,
    pub entries: Vec<(usize, usize, f64)>,
    #[serde(default = "custom")]
    pub ensemble: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "none")]
    pub norm: String,
}

fn custom() -> String {
    "custom".into()
}

fn none() -> String {
    "none".into()
}

impl InstanceFile {
    pub fn from_instance(inst: &QuboInstance) -> Self {
        Self {
            n: inst.n(),
            entries: inst.entries().map(|(i, j, v)| (i + 1, j + 1, v)).collect(),
            ensemble: inst.ensemble.as_str().into(),
            seed: inst.seed,
            norm: inst.norm_applied.as_str().into(),
        }
    }

    pub fn to_instance(&self, path: &Path) -> Result<QuboInstance> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for &(i, j, v) in &self.entries {
            if i == 0 || j == 0 {
                return Err(format_err(path, format!("index ({i}, {j}) is not 1-based")));
            }
            if !v.is_finite() {
                return Err(format_err(
                    path,
                    format!("coefficient ({i}, {j}) is not finite"),
                ));
            }
            entries.push((i - 1, j - 1, v));
        }
        let mut inst = QuboInstance::from_entries(self.n, entries)
            .map_err(|e| format_err(path, e.to_string()))?;
        inst.ensemble = EnsembleKind::parse(&self.ensemble)
            .ok_or_else(|| format_err(path, format!("unknown ensemble {:?}", self.ensemble)))?;
        inst.norm_applied = NormKind::parse(&self.norm)
            .ok_or_else(|| format_err(path, format!("unknown norm {:?}", self.norm)))?;
        inst.seed = self.seed;
        Ok(inst)
    }
}

pub fn read_instance(path: &Path) -> Result<QuboInstance> {
    read_json::<InstanceFile>(path)?.to_instance(path)
}

pub fn write_instance(path: &Path, inst: &QuboInstance) -> Result<()> {
    write_json(path, &InstanceFile::from_instance(inst))
}

/// SHA-256 over `n` and the packed coefficients (little-endian), hex encoded.
pub fn fingerprint(inst: &QuboInstance) -> String {
    let mut h = Sha256::new();
    h.update((inst.n() as u64).to_le_bytes());
    for v in inst.coefficients() {
        h.update(v.to_le_bytes());
    }
    hex::encode(h.finalize())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsFile {
    pub q: usize,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

impl From<&FourierParams> for ParamsFile {
    fn from(p: &FourierParams) -> Self {
        Self {
            q: p.q(),
            u: p.u().to_vec(),
            v: p.v().to_vec(),
        }
    }
}

impl ParamsFile {
    pub fn to_params(&self, path: &Path) -> Result<FourierParams> {
        if self.u.len() != self.q || self.v.len() != self.q {
            return Err(format_err(path, "q does not match the length of u and v"));
        }
        FourierParams::new(self.u.clone(), self.v.clone())
            .map_err(|e| format_err(path, e.to_string()))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum ParamsOrResult {
    Result { params: ParamsFile },
    Params(ParamsFile),
}

/// Reads either a parameter file or a training result file.
pub fn read_params(path: &Path) -> Result<FourierParams> {
    match read_json::<ParamsOrResult>(path)? {
        ParamsOrResult::Result { params } | ParamsOrResult::Params(params) => {
            params.to_params(path)
        }
    }
}

pub fn depth_str(depth: DepthRule) -> String {
    match depth {
        DepthRule::EqualN => "n".into(),
        DepthRule::Fixed(p) => p.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfigEcho {
    pub kind: String,
    pub train_n: usize,
    pub train_count: usize,
    pub alpha: f64,
    pub loss: String,
    pub encoding: String,
    pub q: usize,
    pub depth: String,
    pub norm: String,
    pub restarts: usize,
    pub budget: usize,
    pub sigma: f64,
    pub shrink: f64,
    pub patience: usize,
    pub bound: f64,
    pub initial: Option<ParamsFile>,
    pub seed: u64,
}

impl TrainConfigEcho {
    pub fn new(cfg: &TrainConfig, seed: u64) -> Self {
        let o = &cfg.optimizer;
        Self {
            kind: cfg.kind.as_str().into(),
            train_n: cfg.train_n,
            train_count: cfg.train_count,
            alpha: cfg.alpha,
            loss: cfg.loss.as_str().into(),
            encoding: match cfg.encoding {
                Encoding::SinCos => "sincos".into(),
                Encoding::Fourier(_) => "fourier".into(),
            },
            q: cfg.encoding.q(),
            depth: depth_str(cfg.depth),
            norm: cfg.norm.as_str().into(),
            restarts: o.restarts,
            budget: o.budget,
            sigma: o.sigma,
            shrink: o.shrink,
            patience: o.patience,
            bound: o.bound,
            initial: cfg.initial.as_ref().map(ParamsFile::from),
            seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainResultFile {
    pub params: ParamsFile,
    pub loss: f64,
    pub loss_kind: String,
    pub eval_count: usize,
    pub config: TrainConfigEcho,
    pub trace: Vec<(usize, f64)>,
}

impl TrainResultFile {
    pub fn new(result: &TrainResult, cfg: &TrainConfig, seed: u64) -> Self {
        Self {
            params: ParamsFile::from(&result.params),
            loss: result.achieved_loss,
            loss_kind: cfg.loss.as_str().into(),
            eval_count: result.eval_count,
            config: TrainConfigEcho::new(cfg, seed),
            trace: result.trace.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SourceEcho {
    Fourier { q: usize, u: Vec<f64>, v: Vec<f64> },
    Explicit { gamma: Vec<f64>, beta: Vec<f64> },
}

impl From<&AngleSource> for SourceEcho {
    fn from(s: &AngleSource) -> Self {
        match s {
            AngleSource::Fourier(p) => SourceEcho::Fourier {
                q: p.q(),
                u: p.u().to_vec(),
                v: p.v().to_vec(),
            },
            AngleSource::Explicit(sch) => SourceEcho::Explicit {
                gamma: sch.gamma().to_vec(),
                beta: sch.beta().to_vec(),
            },
        }
    }
}

impl SourceEcho {
    pub fn to_source(&self) -> fpqaoa_core::Result<AngleSource> {
        Ok(match self {
            SourceEcho::Fourier { u, v, .. } => {
                AngleSource::Fourier(FourierParams::new(u.clone(), v.clone())?)
            }
            SourceEcho::Explicit { gamma, beta } => {
                AngleSource::Explicit(AngleSchedule::new(gamma.clone(), beta.clone())?)
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfigEcho {
    pub source: SourceEcho,
    pub alpha: f64,
    pub n_range: Vec<usize>,
    pub count: usize,
    pub kind: String,
    pub norm: String,
    pub depth: String,
    pub seed: u64,
}

impl From<&RunConfig> for RunConfigEcho {
    fn from(c: &RunConfig) -> Self {
        Self {
            source: SourceEcho::from(&c.source),
            alpha: c.alpha,
            n_range: c.n_range.clone(),
            count: c.count,
            kind: c.kind.as_str().into(),
            norm: c.norm.as_str().into(),
            depth: depth_str(c.depth),
            seed: c.base_seed,
        }
    }
}

/// One per-instance record; `sts` is `null` when infinite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordEcho {
    pub n: usize,
    pub index: usize,
    pub seed: u64,
    pub p: usize,
    pub alpha: f64,
    pub p_alpha: f64,
    pub sts: Option<f64>,
    pub energy: f64,
    pub ar_expect: f64,
    pub feasible_count: usize,
    pub degenerate: bool,
}

impl RecordEcho {
    pub fn new(index: usize, r: &EvalRecord) -> Self {
        Self {
            n: r.n,
            index,
            seed: r.seed,
            p: r.p,
            alpha: r.alpha,
            p_alpha: r.p_alpha,
            sts: r.sts.is_finite().then_some(r.sts),
            energy: r.energy,
            ar_expect: r.ar_expect,
            feasible_count: r.feasible_count,
            degenerate: r.degenerate,
        }
    }
}

pub fn record_echoes(records: &[Vec<EvalRecord>]) -> Vec<RecordEcho> {
    records
        .iter()
        .flat_map(|recs| recs.iter().enumerate().map(|(k, r)| RecordEcho::new(k, r)))
        .collect()
}

fn num(v: f64) -> String {
    if v == f64::INFINITY {
        "inf".into()
    } else {
        v.to_string()
    }
}

pub fn summary_csv(rows: &[SummaryRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SUMMARY_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            num(r.median_sts),
            num(r.q1_sts),
            num(r.q3_sts),
            num(r.p01_sts),
            num(r.p99_sts),
            r.outlier_count.to_string(),
            num(r.median_ar_expect),
            num(r.mean_p_alpha),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Config(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Inverse of [`summary_csv`] for the columns it writes.
pub fn parse_summary_csv(text: &str) -> Result<Vec<SummaryRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header != SUMMARY_HEADER {
        return Err(Error::Config(format!(
            "unexpected summary header {header:?}"
        )));
    }
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let f = |i: usize| -> Result<f64> {
            rec[i]
                .parse::<f64>()
                .map_err(|e| Error::Config(format!("column {}: {e}", SUMMARY_HEADER[i])))
        };
        let u = |i: usize| -> Result<usize> {
            rec[i]
                .parse::<usize>()
                .map_err(|e| Error::Config(format!("column {}: {e}", SUMMARY_HEADER[i])))
        };
        rows.push(SummaryRow {
            n: u(0)?,
            median_sts: f(1)?,
            q1_sts: f(2)?,
            q3_sts: f(3)?,
            p01_sts: f(4)?,
            p99_sts: f(5)?,
            outlier_count: u(6)?,
            median_ar_expect: f(7)?,
            mean_p_alpha: f(8)?,
        });
    }
    Ok(rows)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    f.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub file: String,
    pub seed: u64,
    pub fingerprint: String,
    pub nonzero: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub kind: String,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub norm: String,
    /// Fraction of stored slots that are exactly zero, pooled over all files.
    pub zero_fraction: f64,
    pub files: Vec<ManifestEntry>,
}
