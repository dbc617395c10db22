// Bounded-length r-rainbow walks with the representative-family DP.
//
//     cargo run --example walk_dp

use locally_rainbow::walk::solve_walk_table;
use locally_rainbow::{ColoredDigraph, Query, SolveOptions};

pub fn run_example() -> Option<Vec<usize>> {
    // A triangle 0 -> 1 -> 2 -> 0 with an exit 1 -> 3. Reaching t in five
    // steps forces one lap around the triangle.
    let g = ColoredDigraph::new(
        4,
        [(0, 1), (1, 2), (2, 0), (1, 3)],
        vec![10, 20, 30, 40],
        0,
        3,
    )
    .expect("valid graph");

    for q in [
        Query::at_most(2, 5),
        Query::exactly(2, 5),
        Query::exactly(3, 5),
    ] {
        let (sol, table) = solve_walk_table(&g, q, &SolveOptions::default()).expect("solvable");
        println!(
            "r = {} ell = {} {}: {:?} (levels {}, largest cell {})",
            q.r,
            q.ell,
            q.mode,
            sol.witness.as_ref().map(|w| &w.vertices),
            table.levels.len(),
            sol.stats.max_family()
        );
    }
    let (sol, _) = solve_walk_table(&g, Query::exactly(2, 5), &SolveOptions::default()).ok()?;
    sol.witness.map(|w| w.vertices)
}

#[allow(dead_code)]
fn main() {
    run_example();
}
