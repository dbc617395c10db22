// Permutation hitting set as a walk query, on the three-set example with
// k = 3.
//
//     cargo run --example phs_reduction

use locally_rainbow::instances::{
    decode_permutation, gen_phs_instance, permutation_walk, PhsInput, PhsLayout,
};
use locally_rainbow::oracle::oracle_phs;
use locally_rainbow::{solve_walk, verify_witness};

pub fn run_example() -> Option<Vec<usize>> {
    let input = PhsInput::new(
        3,
        vec![
            vec![(1, 2), (2, 2)],
            vec![(1, 1), (2, 2), (2, 3), (3, 3)],
            vec![(2, 1), (3, 1), (3, 2)],
        ],
    );
    let (g, q) = gen_phs_instance(&input).expect("valid input");
    let lay = PhsLayout { k: 3, m: 3 };
    println!(
        "{} vertices, r = {}, ell = {}",
        g.vertex_count(),
        q.r,
        q.ell
    );

    let w = solve_walk(&g, q).expect("walk solver")?;
    let phi = decode_permutation(&lay, &w);
    println!(
        "solver walk selects {phi:?}; brute force finds {:?}",
        oracle_phs(3, &input.sets)
    );

    let chosen = permutation_walk(&input, &[2, 1, 3])?;
    verify_witness(&g, q, &chosen, true).expect("hitting permutation gives a valid path");
    println!("walk for (2, 1, 3): {:?}", chosen.vertices);
    phi
}

#[allow(dead_code)]
fn main() {
    run_example();
}
