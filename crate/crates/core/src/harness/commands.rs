//! Entry points behind the `radon` binary. Each writes its output and
//! returns the process exit code.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::Path;

use serde_json::json;

use crate::algebraic::radon_algebraic;
use crate::error::RadonError;
use crate::geometry::PointSet;
use crate::harness::fuzz::{fuzz, FuzzConfig};
use crate::harness::generate::generate;
use crate::harness::instance::{CertificateJson, InstanceFile};
use crate::harness::verify::verify_point_set;
use crate::recursive::{radon_recursive, RecursiveOptions};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Recursive,
    Algebraic,
}

pub fn exit_code(e: &RadonError) -> u8 {
    match e {
        RadonError::Parse(_) | RadonError::InvalidInput(_) => EXIT_USAGE,
        RadonError::NotGeneralPosition { .. } | RadonError::Degenerate(_) => EXIT_DEGENERATE,
        RadonError::GeneratorFailure { .. } | RadonError::Invariant(_) => EXIT_FAIL,
    }
}

/// Parses `A..B`, `A..=B` or a single `A` (both ends inclusive).
pub fn parse_dims(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad dimension range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let a = num(s)?;
            Ok(a..=a)
        }
    }
}

fn load(path: &Path) -> Result<PointSet, RadonError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RadonError::Parse(format!("cannot read {}: {e}", path.display())))?;
    InstanceFile::parse(&text)?.point_set()
}

fn report_error(err: &mut impl Write, e: &RadonError) -> u8 {
    let _ = writeln!(err, "error: {e}");
    exit_code(e)
}

pub fn cmd_gen(dim: usize, seed: u64, bound: u64, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match generate(dim, seed, bound) {
        Ok(f) => {
            let _ = out.write_all(f.to_json().as_bytes());
            EXIT_PASS
        }
        Err(e) => report_error(err, &e),
    }
}

pub fn cmd_compute(path: &Path, algo: Algorithm, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let result = load(path).and_then(|ps| match algo {
        Algorithm::Recursive => radon_recursive(&ps),
        Algorithm::Algebraic => radon_algebraic(&ps),
    });
    match result {
        Ok(cert) => {
            let text = serde_json::to_string_pretty(&CertificateJson::from(&cert)).expect("certificate serializes");
            let _ = writeln!(out, "{text}");
            EXIT_PASS
        }
        Err(e) => {
            if let RadonError::NotGeneralPosition { subset } = &e {
                let _ = writeln!(out, "{}", json!({"error": "degenerate", "violating_subset": subset}));
            }
            report_error(err, &e)
        }
    }
}

pub fn cmd_verify(path: &Path, out: &mut impl Write, err: &mut impl Write) -> u8 {
    let report = load(path).and_then(|ps| verify_point_set(&ps, &RecursiveOptions::default()));
    match report {
        Ok(r) => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&r).expect("report serializes"));
            if r.verdict.is_pass() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => report_error(err, &e),
    }
}

pub fn cmd_fuzz(cfg: &FuzzConfig, out: &mut impl Write, err: &mut impl Write) -> u8 {
    match fuzz(cfg) {
        Ok(s) => {
            let _ = writeln!(out, "{s}");
            if s.all_passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => report_error(err, &e),
    }
}
