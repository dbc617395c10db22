// Unbounded walks: a length cap versus search over (vertex, window) states.
//
//     cargo run --example any_length

use locally_rainbow::walk::any_length_cap;
use locally_rainbow::{solve_walk_any_length, AnyLengthBackend, ColoredDigraph};

pub fn run_example() -> Vec<(usize, bool, bool)> {
    // A 4-cycle colored 0, 1, 2, 0 with t hanging off vertex 2.
    let g = ColoredDigraph::new(
        5,
        [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)],
        vec![0, 1, 2, 0, 1],
        0,
        4,
    )
    .expect("valid graph");
    let mut rows = Vec::new();
    for r in 0..=3 {
        let cap = solve_walk_any_length(&g, r, AnyLengthBackend::Cap).expect("cap backend");
        let product =
            solve_walk_any_length(&g, r, AnyLengthBackend::Product).expect("product backend");
        println!(
            "r = {r}: cap {cap} product {product} (length cap {})",
            any_length_cap(5, r)
        );
        rows.push((r, cap, product));
    }
    rows
}

#[allow(dead_code)]
fn main() {
    run_example();
}
