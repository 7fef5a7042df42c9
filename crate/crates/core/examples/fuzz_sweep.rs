//! Randomised cross-check of both algorithms against the oracle.
//!
//! `cargo run --release --example fuzz_sweep -- [instances] [seed]`

use radon_core::harness::{fuzz, FuzzConfig};

fn main() -> radon_core::Result<()> {
    let mut args = std::env::args().skip(1);
    let instances = args.next().and_then(|s| s.parse().ok()).unwrap_or(50);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let replay_dir = std::env::temp_dir();
    let summary = fuzz(&FuzzConfig { replay_dir, ..FuzzConfig::new(1..=5, instances, seed) })?;
    println!("{summary}");
    if !summary.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
