//! On-disk formats.
//!
//! Instance file:
//!
//! ```json
//! {
//!   "dim": 2,
//!   "points": [["0/1", "0/1"], ["1/1", "0/1"], ["0/1", "1/1"], ["1/1", "1/1"]],
//!   "meta": {"attempts": 1, "bound": 5, "prng": "splitmix64", "seed": 7}
//! }
//! ```
//!
//! Certificate:
//!
//! ```json
//! {"partition": [[1, 4], [2, 3]], "witness": ["1/2", "1/2"],
//!  "coeffs_I": ["1/2", "1/2"], "coeffs_J": ["1/2", "1/2"]}
//! ```
//!
//! Every rational is a string matching `-?[0-9]+/[1-9][0-9]*`; labels are
//! 1-based. `meta` is optional and free-form; keys are emitted sorted.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::certificate::{Partition, RadonCertificate};
use crate::error::{RadonError, Result};
use crate::geometry::{Point, PointSet};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub points: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Map<String, serde_json::Value>>,
}

impl InstanceFile {
    pub fn from_point_set(ps: &PointSet) -> Self {
        InstanceFile { dim: ps.dim(), points: ps.points().to_vec(), meta: None }
    }

    /// Parses JSON text. Rationals are reduced to canonical form on the way in.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| RadonError::Parse(e.to_string()))
    }

    /// Canonical text: pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }

    /// Validates into a point set (dimensions agree, points distinct).
    pub fn point_set(&self) -> Result<PointSet> {
        PointSet::new(self.dim, self.points.clone())
    }

    /// Hex SHA-256 of the canonical instance without metadata.
    pub fn digest(&self) -> String {
        let bare = InstanceFile { dim: self.dim, points: self.points.clone(), meta: None };
        let bytes = serde_json::to_vec(&bare).expect("instance serializes");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub partition: [Vec<usize>; 2],
    #[serde(with = "rational::serde_str::vec")]
    pub witness: Vec<Rational>,
    #[serde(rename = "coeffs_I", with = "rational::serde_str::vec")]
    pub coeffs_i: Vec<Rational>,
    #[serde(rename = "coeffs_J", with = "rational::serde_str::vec")]
    pub coeffs_j: Vec<Rational>,
}

impl From<&RadonCertificate> for CertificateJson {
    fn from(c: &RadonCertificate) -> Self {
        CertificateJson {
            partition: [c.partition.side_i().to_vec(), c.partition.side_j().to_vec()],
            witness: c.witness.coords().to_vec(),
            coeffs_i: c.coeffs_i.clone(),
            coeffs_j: c.coeffs_j.clone(),
        }
    }
}

impl CertificateJson {
    /// Rebuilds and checks the certificate against `ps`.
    pub fn into_certificate(self, ps: &PointSet) -> Result<RadonCertificate> {
        let [a, b] = self.partition;
        let partition = Partition::new(a.clone(), b, ps.len())?;
        if partition.side_i() != a.as_slice() {
            return Err(RadonError::Parse("partition is not in canonical order".into()));
        }
        let cert = RadonCertificate {
            partition,
            witness: Point::new(self.witness)?,
            coeffs_i: self.coeffs_i,
            coeffs_j: self.coeffs_j,
        };
        cert.verify(ps)?;
        Ok(cert)
    }
}
