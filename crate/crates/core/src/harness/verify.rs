use serde::Serialize;

use crate::algebraic::radon_algebraic;
use crate::certificate::RadonCertificate;
use crate::error::Result;
use crate::geometry::{general_position_violation, PointSet};
use crate::harness::instance::{CertificateJson, InstanceFile};
use crate::oracle::{brute_force_radon, OracleReport};
use crate::rational;
use crate::recursive::{radon_recursive_with, RecursiveOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { reason: String },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RadonEntry {
    pub partition: [Vec<usize>; 2],
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSummary {
    pub candidates: usize,
    pub intersecting_partitions: usize,
    pub radon_partitions: Vec<RadonEntry>,
}

impl From<&OracleReport> for OracleSummary {
    fn from(r: &OracleReport) -> Self {
        OracleSummary {
            candidates: r.classified.len(),
            intersecting_partitions: r.intersecting_partitions,
            radon_partitions: r
                .radon_partitions
                .iter()
                .map(|(p, w)| RadonEntry {
                    partition: [p.side_i().to_vec(), p.side_j().to_vec()],
                    witness: w.coords().iter().map(rational::format).collect(),
                })
                .collect(),
        }
    }
}

/// Outcome of running both algorithms and the oracle on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub digest: String,
    pub dim: usize,
    pub violating_subset: Option<Vec<usize>>,
    pub algebraic: Option<CertificateJson>,
    pub recursive: Option<CertificateJson>,
    pub oracle: OracleSummary,
    /// Certificates that failed the exact convex-combination check.
    pub certificate_violations: usize,
    pub verdict: Verdict,
}

/// Runs everything on `ps`. Errors only when `ps` is not a `d + 2` point
/// instance; every other problem becomes a failing verdict.
pub fn verify_point_set(ps: &PointSet, opts: &RecursiveOptions) -> Result<VerifyReport> {
    ps.require_radon_size()?;
    let digest = InstanceFile::from_point_set(ps).digest();
    let violating_subset = general_position_violation(ps);
    let oracle = brute_force_radon(ps)?;

    let mut reasons: Vec<String> = Vec::new();
    let mut certificate_violations = 0;
    let (mut algebraic, mut recursive) = (None, None);

    if let Some(subset) = &violating_subset {
        reasons.push(format!("degenerate: points {subset:?} are affinely dependent"));
    } else {
        let mut check = |name: &str, cert: Result<RadonCertificate>| match cert {
            Ok(c) => {
                if let Err(e) = c.verify(ps) {
                    certificate_violations += 1;
                    reasons.push(format!("{name}: {e}"));
                }
                Some(c)
            }
            Err(e) => {
                reasons.push(format!("{name}: {e}"));
                None
            }
        };
        algebraic = check("algebraic", radon_algebraic(ps));
        recursive = check("recursive", radon_recursive_with(ps, opts).map(|o| o.certificate));

        match oracle.unique() {
            None => reasons.push(format!("oracle found {} radon partitions", oracle.radon_partitions.len())),
            Some((part, witness)) => {
                for (name, cert) in [("algebraic", &algebraic), ("recursive", &recursive)] {
                    let Some(c) = cert else { continue };
                    if &c.partition != part {
                        reasons.push(format!("{name} partition {} differs from oracle {part}", c.partition));
                    } else if &c.witness != witness {
                        reasons.push(format!("{name} witness {} differs from oracle {witness}", c.witness));
                    }
                }
            }
        }
    }

    let verdict = match reasons.into_iter().next() {
        None => Verdict::Pass,
        Some(reason) => Verdict::Fail { reason },
    };
    Ok(VerifyReport {
        digest,
        dim: ps.dim(),
        violating_subset,
        algebraic: algebraic.as_ref().map(CertificateJson::from),
        recursive: recursive.as_ref().map(CertificateJson::from),
        oracle: OracleSummary::from(&oracle),
        certificate_violations,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_passes() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let r = verify_point_set(&ps, &RecursiveOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.oracle.candidates, 7);
        assert_eq!(r.certificate_violations, 0);
    }

    #[test]
    fn degenerate_is_a_failing_verdict() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1]]).unwrap();
        let r = verify_point_set(&ps, &RecursiveOptions::default()).unwrap();
        match &r.verdict {
            Verdict::Fail { reason } => assert!(reason.starts_with("degenerate")),
            Verdict::Pass => panic!("degenerate instance passed"),
        }
        assert_eq!(r.violating_subset, Some(vec![1, 2, 3]));
        assert!(r.algebraic.is_none());
    }

    #[test]
    fn injected_fault_fails() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let opts = RecursiveOptions { flip_nearness: true, ..Default::default() };
        let r = verify_point_set(&ps, &opts).unwrap();
        assert!(!r.verdict.is_pass());
    }

    #[test]
    fn wrong_size_is_an_error() {
        let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert!(verify_point_set(&ps, &RecursiveOptions::default()).is_err());
    }

    #[test]
    fn report_is_reproducible() {
        let ps = PointSet::from_ints(3, &[&[0, 0, 0], &[3, 0, 1], &[0, 3, 1], &[1, 1, 3], &[4, 4, 4]]).unwrap();
        let a = serde_json::to_string(&verify_point_set(&ps, &RecursiveOptions::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_point_set(&ps, &RecursiveOptions::default()).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
