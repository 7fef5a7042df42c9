//! Instance files, generation, cross-verification and fuzzing.

pub mod commands;
pub mod fuzz;
pub mod generate;
pub mod instance;
pub mod verify;

pub use fuzz::{fuzz, FuzzConfig, FuzzSummary};
pub use generate::generate;
pub use instance::{CertificateJson, InstanceFile};
pub use verify::{verify_point_set, Verdict, VerifyReport};
