//! Affine dependence of the unit square and the partition it induces.

use radon_core::algebraic::{affine_dependence, radon_from_dependence};
use radon_core::PointSet;

fn main() -> radon_core::Result<()> {
    let ps = PointSet::from_ints(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])?;
    let dep = affine_dependence(&ps)?;
    let lambda: Vec<String> = dep.coefficients().iter().map(ToString::to_string).collect();
    println!("lambda    {lambda:?}");

    let cert = radon_from_dependence(&ps, &dep)?;
    println!("partition {}", cert.partition);
    println!("witness   {}", cert.witness);
    cert.verify(&ps)?;
    println!("certificate verified");
    Ok(())
}
