//! Classifies every bipartition of a planar instance by linear programming.

use radon_core::oracle::{brute_force_radon, HullIntersection};
use radon_core::PointSet;

fn main() -> radon_core::Result<()> {
    let ps = PointSet::from_ints(2, &[&[0, 0], &[4, 1], &[1, 3], &[2, 2]])?;
    let report = brute_force_radon(&ps)?;
    for (part, info) in &report.classified {
        let what = match info {
            HullIntersection::Empty => "disjoint".to_string(),
            HullIntersection::Single(p) => format!("meet exactly at {p}"),
            HullIntersection::Multi => "meet in more than one point".to_string(),
        };
        println!("{part:<16} {what}");
    }
    match report.unique() {
        Some((part, w)) => println!("unique Radon partition {part} at {w}"),
        None => println!("{} Radon partitions", report.radon_partitions.len()),
    }
    Ok(())
}
