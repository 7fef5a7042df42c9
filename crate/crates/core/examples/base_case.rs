//! Three points on a line: the middle one is the Radon point.

use radon_core::recursive::radon_recursive;
use radon_core::rational::frac;
use radon_core::{Point, PointSet};

fn main() -> radon_core::Result<()> {
    let ps = PointSet::new(1, vec![
        Point::new(vec![frac(7, 2)])?,
        Point::new(vec![frac(-1, 3)])?,
        Point::new(vec![frac(5, 4)])?,
    ])?;
    let cert = radon_recursive(&ps)?;
    println!("partition {}", cert.partition);
    println!("witness   {}", cert.witness);
    println!("coeffs I  {:?}", cert.coeffs_i.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}
