//! Walks through every level of the recursive construction on a 3-D
//! instance and checks the result against the algebraic route.

use radon_core::algebraic::radon_algebraic;
use radon_core::recursive::{radon_recursive_with, RecursiveOptions};
use radon_core::PointSet;

fn main() -> radon_core::Result<()> {
    let ps = PointSet::from_ints(3, &[&[0, 0, 0], &[3, 0, 1], &[0, 3, 1], &[1, 1, 3], &[4, 4, 4]])?;
    let out = radon_recursive_with(&ps, &RecursiveOptions::default())?;

    for (depth, step) in out.steps.iter().enumerate() {
        let p = &step.projection;
        let l = &step.lift;
        println!("level {depth} (d = {})", step.instance.dim());
        println!("  apex          {} = {}", p.apex, step.instance.point(p.apex));
        println!("  hyperplane    normal {:?}, offset {}",
            p.hyperplane.normal().iter().map(ToString::to_string).collect::<Vec<_>>(),
            p.hyperplane.offset());
        for (k, x) in p.lifted.iter().enumerate() {
            println!("  projected     {} -> {} (chart {})", p.label_map[k], x, p.projected.points()[k]);
        }
        println!("  sub-witness   {}", l.sub_witness);
        println!("  near hit      t = {} at {} in {:?}", l.t1, l.y1, l.near_labels);
        println!("  far hit       t = {} at {} in {:?}", l.t2, l.y2, l.far_labels);
    }

    let cert = out.certificate;
    println!("partition {}  witness {}", cert.partition, cert.witness);
    let alg = radon_algebraic(&ps)?;
    assert_eq!((&alg.partition, &alg.witness), (&cert.partition, &cert.witness));
    println!("matches the algebraic route");
    Ok(())
}
