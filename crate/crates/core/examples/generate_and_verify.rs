//! Seeded instance generation, JSON round trip, and a full verify report.

use radon_core::harness::{generate, verify_point_set, InstanceFile};
use radon_core::recursive::RecursiveOptions;

fn main() -> radon_core::Result<()> {
    let file = generate(2, 42, 10)?;
    let text = file.to_json();
    print!("{text}");
    let back = InstanceFile::parse(&text)?;
    assert_eq!(back, file);
    println!("digest {}", back.digest());

    let report = verify_point_set(&back.point_set()?, &RecursiveOptions::default())?;
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    Ok(())
}
