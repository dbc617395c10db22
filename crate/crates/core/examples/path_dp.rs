// Bounded-length r-rainbow paths: the walk answer is not enough once a
// vertex would have to repeat.
//
//     cargo run --example path_dp

use locally_rainbow::{solve_path, solve_walk, ColoredDigraph, Query};

pub fn run_example() -> (bool, bool) {
    // Same triangle as walk_dp; an exact length of 5 needs a repeated vertex.
    let g = ColoredDigraph::new(
        4,
        [(0, 1), (1, 2), (2, 0), (1, 3)],
        vec![10, 20, 30, 40],
        0,
        3,
    )
    .expect("valid graph");
    let q = Query::exactly(2, 5);
    let walk = solve_walk(&g, q).expect("walk solver");
    let path = solve_path(&g, q).expect("path solver");
    println!("walk: {:?}", walk.as_ref().map(|w| &w.vertices));
    println!("path: {:?}", path.as_ref().map(|w| &w.vertices));

    let short = solve_path(&g, Query::at_most(2, 5)).expect("path solver");
    println!("path of length at most 5: {:?}", short.map(|w| w.vertices));
    (walk.is_some(), path.is_some())
}

#[allow(dead_code)]
fn main() {
    run_example();
}
