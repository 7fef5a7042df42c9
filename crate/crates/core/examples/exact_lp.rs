//! Exact rational simplex: feasibility, optimisation, unboundedness.

use radon_core::lp::{lp_feasible, lp_optimize, FeasibilitySystem, LpOutcome, Sense};
use radon_core::rational::{frac, int};

fn main() -> radon_core::Result<()> {
    // x + y + z = 1, x - 2y = 1/3, all nonnegative.
    let sys = FeasibilitySystem::from_rows(
        3,
        vec![vec![int(1), int(1), int(1)], vec![int(1), int(-2), int(0)]],
        vec![int(1), frac(1, 3)],
    )?;
    let x = lp_feasible(&sys).expect("feasible");
    println!("feasible point {:?}", x.iter().map(ToString::to_string).collect::<Vec<_>>());

    for sense in [Sense::Minimize, Sense::Maximize] {
        if let LpOutcome::Optimal { value, solution } = lp_optimize(&sys, &[int(0), int(1), int(0)], sense) {
            println!("{sense:?} y = {value} at {:?}", solution.iter().map(ToString::to_string).collect::<Vec<_>>());
        }
    }

    // Dropping the first row leaves y free to grow.
    let open = FeasibilitySystem::from_rows(3, vec![vec![int(1), int(-2), int(0)]], vec![frac(1, 3)])?;
    println!("maximize y without the simplex row: {:?}", lp_optimize(&open, &[int(0), int(1), int(0)], Sense::Maximize));
    Ok(())
}
