//! One projection step: separate the apex, project the rest onto the
//! hyperplane, and read them in a (d-1)-dimensional chart.

use radon_core::geometry::is_general_position;
use radon_core::recursive::{choose_apex, project_through_apex};
use radon_core::PointSet;

fn main() -> radon_core::Result<()> {
    let ps = PointSet::from_ints(3, &[&[0, 0, 0], &[5, 1, 0], &[1, 4, 1], &[2, 2, 6], &[-1, 3, 2]])?;
    let apex = choose_apex(&ps);
    let rec = project_through_apex(&ps, apex)?;
    let h = &rec.hyperplane;
    println!("apex {apex} = {}", ps.point(apex));
    println!("hyperplane normal {:?} offset {}", h.normal().iter().map(ToString::to_string).collect::<Vec<_>>(), h.offset());
    println!("chart eliminates coordinate {}, origin {}", rec.chart.eliminated_coordinate(), rec.chart.origin());
    for (k, x) in rec.lifted.iter().enumerate() {
        let y = rec.chart.down(x)?;
        assert_eq!(rec.chart.up(&y), *x);
        println!("  {} = {} -> {} -> {}", rec.label_map[k], ps.point(rec.label_map[k]), x, y);
    }
    println!("projected set in general position: {}", is_general_position(&rec.projected));
    rec.check(&ps)?;
    Ok(())
}
