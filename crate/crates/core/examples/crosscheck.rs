// Solvers against brute force on random instances.
//
//     cargo run --example crosscheck

use locally_rainbow::instances::gen_random;
use locally_rainbow::oracle::{oracle_path, oracle_walk};
use locally_rainbow::{solve_path, solve_walk, Query};

pub fn run_example() -> usize {
    let mut mismatches = 0;
    let mut yes = 0;
    for seed in 0..100 {
        let (g, q) = gen_random(7, 0.3, 3, 2, 6, seed).expect("generator");
        for q in [q, Query::exactly(q.r, q.ell)] {
            let walk = solve_walk(&g, q).expect("walk solver").is_some();
            let path = solve_path(&g, q).expect("path solver").is_some();
            mismatches +=
                (walk != oracle_walk(&g, q).expect("small state space").is_some()) as usize;
            mismatches += (path != oracle_path(&g, q).is_some()) as usize;
            yes += walk as usize;
        }
    }
    println!("200 queries, {yes} walk yes-instances, {mismatches} mismatches");
    mismatches
}

#[allow(dead_code)]
fn main() {
    run_example();
}
