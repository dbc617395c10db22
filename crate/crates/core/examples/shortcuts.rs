// Polynomial special cases: r = 1, and r = 2 on symmetric graphs.
//
//     cargo run --example shortcuts

use locally_rainbow::instances::gen_random_symmetric;
use locally_rainbow::{solve_r1, solve_r2_symmetric, solve_walk, ColoredDigraph, Query};

pub fn run_example() -> usize {
    // The short route 0 -> 1 -> 3 starts with a monochromatic arc.
    let g = ColoredDigraph::new(
        5,
        [(0, 1), (1, 3), (0, 2), (2, 4), (4, 3)],
        vec![1, 1, 2, 3, 4],
        0,
        3,
    )
    .expect("valid graph");
    println!("r = 1: {:?}", solve_r1(&g, 5).map(|w| w.vertices));

    let mut agree = 0;
    for seed in 0..20 {
        let (g, q) = gen_random_symmetric(8, 0.4, 3, 2, 6, seed).expect("generator");
        let fast = solve_r2_symmetric(&g, q.ell).expect("symmetric, properly colored");
        let dp = solve_walk(&g, Query::at_most(2, q.ell)).expect("walk solver");
        agree += (fast.is_some() == dp.is_some()) as usize;
    }
    println!("r = 2 shortcut agrees with the walk DP on {agree}/20 random instances");
    agree
}

#[allow(dead_code)]
fn main() {
    run_example();
}
