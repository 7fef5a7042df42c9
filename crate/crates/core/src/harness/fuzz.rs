//! Randomized sweeps: generate, verify, tally per dimension.

use std::fmt;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{RadonError, Result};
use crate::harness::generate::generate;
use crate::harness::instance::InstanceFile;
use crate::harness::verify::{verify_point_set, Verdict, VerifyReport};
use crate::recursive::RecursiveOptions;

pub const MAX_FUZZ_DIM: usize = 8;
pub const DEFAULT_BOUND: u64 = 20;
pub const REPLAY_DIR_ENV: &str = "RADON_REPLAY_DIR";

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub dims: RangeInclusive<usize>,
    pub instances: usize,
    pub seed: u64,
    pub bound: u64,
    /// Where the first failing instance is written.
    pub replay_dir: PathBuf,
    /// Harness self-test: run the recursive algorithm with a flipped
    /// nearness comparison.
    pub inject_fault: bool,
}

impl FuzzConfig {
    pub fn new(dims: RangeInclusive<usize>, instances: usize, seed: u64) -> Self {
        let replay_dir = std::env::var_os(REPLAY_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("."));
        FuzzConfig { dims, instances, seed, bound: DEFAULT_BOUND, replay_dir, inject_fault: false }
    }
}

/// Seed of instance `index` in dimension `dim` of a sweep seeded with `seed`.
pub fn instance_seed(seed: u64, dim: usize, index: usize) -> u64 {
    seed.wrapping_add((dim as u64) << 32).wrapping_add(index as u64)
}

#[derive(Debug, Clone)]
pub struct InstanceResult {
    pub dim: usize,
    pub index: usize,
    pub seed: u64,
    pub verdict: Verdict,
    pub report: VerifyReport,
    pub file: InstanceFile,
}

#[derive(Debug, Clone)]
pub struct DimSummary {
    pub dim: usize,
    pub passed: usize,
    pub total: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct FuzzSummary {
    pub rows: Vec<DimSummary>,
    /// In `(dim, index)` order.
    pub results: Vec<InstanceResult>,
    pub replay_file: Option<PathBuf>,
    pub elapsed: Duration,
}

impl FuzzSummary {
    pub fn passed(&self) -> usize {
        self.rows.iter().map(|r| r.passed).sum()
    }

    pub fn total(&self) -> usize {
        self.rows.iter().map(|r| r.total).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.total()
    }

    /// Pass/fail pattern, for determinism checks.
    pub fn pattern(&self) -> Vec<bool> {
        self.results.iter().map(|r| r.verdict.is_pass()).collect()
    }
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>4}  {:>9}  {:>12}", "dim", "passed", "cumulative")?;
        let mut cumulative = Duration::ZERO;
        for r in &self.rows {
            cumulative += r.elapsed;
            writeln!(f, "{:>4}  {:>4}/{:<4}  {:>11.2}s", r.dim, r.passed, r.total, cumulative.as_secs_f64())?;
        }
        write!(f, "total {}/{} in {:.2}s", self.passed(), self.total(), self.elapsed.as_secs_f64())?;
        if let Some(first) = self.results.iter().find(|r| !r.verdict.is_pass()) {
            if let Verdict::Fail { reason } = &first.verdict {
                write!(f, "\nfirst failure: dim {} index {} (seed {}): {reason}", first.dim, first.index, first.seed)?;
            }
            if let Some(path) = &self.replay_file {
                write!(f, "\nreplay file: {}", path.display())?;
            }
        }
        Ok(())
    }
}

fn run_one(dim: usize, index: usize, cfg: &FuzzConfig, opts: &RecursiveOptions) -> Result<(InstanceResult, Duration)> {
    let start = Instant::now();
    let seed = instance_seed(cfg.seed, dim, index);
    let file = generate(dim, seed, cfg.bound)?;
    let ps = file.point_set()?;
    let report = verify_point_set(&ps, opts)?;
    let result = InstanceResult {
        dim,
        index,
        seed,
        verdict: report.verdict.clone(),
        report,
        file,
    };
    Ok((result, start.elapsed()))
}

fn dump(dir: &Path, r: &InstanceResult) -> Result<PathBuf> {
    let path = dir.join(format!("radon-fail-d{}-i{}-s{}.json", r.dim, r.index, r.seed));
    std::fs::create_dir_all(dir)
        .and_then(|_| std::fs::write(&path, r.file.to_json()))
        .map_err(|e| RadonError::InvalidInput(format!("cannot write replay file {}: {e}", path.display())))?;
    Ok(path)
}

/// Generates and verifies `instances` instances per dimension. Instances run
/// in parallel; results are reported in `(dim, index)` order.
pub fn fuzz(cfg: &FuzzConfig) -> Result<FuzzSummary> {
    if cfg.dims.is_empty() || *cfg.dims.start() < 1 || *cfg.dims.end() > MAX_FUZZ_DIM {
        return Err(RadonError::InvalidInput(format!(
            "dimensions {:?} must lie within 1..={MAX_FUZZ_DIM}",
            cfg.dims
        )));
    }
    let opts = RecursiveOptions { flip_nearness: cfg.inject_fault, ..Default::default() };
    let start = Instant::now();
    let jobs: Vec<(usize, usize)> = cfg.dims.clone().flat_map(|d| (0..cfg.instances).map(move |i| (d, i))).collect();
    let done: Vec<(InstanceResult, Duration)> =
        jobs.par_iter().map(|&(d, i)| run_one(d, i, cfg, &opts)).collect::<Result<_>>()?;

    let rows = cfg
        .dims
        .clone()
        .map(|dim| {
            let of_dim = done.iter().filter(|(r, _)| r.dim == dim);
            DimSummary {
                dim,
                passed: of_dim.clone().filter(|(r, _)| r.verdict.is_pass()).count(),
                total: of_dim.clone().count(),
                elapsed: of_dim.map(|(_, t)| *t).sum(),
            }
        })
        .collect();
    let results: Vec<InstanceResult> = done.into_iter().map(|(r, _)| r).collect();
    let replay_file = match results.iter().find(|r| !r.verdict.is_pass()) {
        Some(first) => Some(dump(&cfg.replay_dir, first)?),
        None => None,
    };
    Ok(FuzzSummary { rows, results, replay_file, elapsed: start.elapsed() })
}
