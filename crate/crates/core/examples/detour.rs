// Paths slightly longer than a shortest path, solved by splitting at
// distance separators.
//
//     cargo run --example detour

use locally_rainbow::{dist_to_target, distance_separators, solve_detour, ColoredDigraph};

pub fn run_example() -> Vec<Option<usize>> {
    // The direct route 0 -> 1 -> 5 repeats color 0 within distance 2; the
    // detour 0 -> 2 -> 3 -> 5 is one step longer and rainbow.
    let g = ColoredDigraph::new(
        6,
        [(0, 1), (1, 5), (0, 2), (2, 3), (3, 5), (2, 4)],
        vec![0, 1, 2, 3, 4, 0],
        0,
        5,
    )
    .expect("valid graph");
    let d = dist_to_target(&g);
    let mut lengths = Vec::new();
    for k in 0..=2 {
        let w = solve_detour(&g, 2, k).expect("detour solver");
        match &w {
            Some(w) => println!(
                "k = {k}: {:?}, separators at {:?}",
                w.vertices,
                distance_separators(w, &d)
            ),
            None => println!("k = {k}: none"),
        }
        lengths.push(w.map(|w| w.len()));
    }
    lengths
}

#[allow(dead_code)]
fn main() {
    run_example();
}
