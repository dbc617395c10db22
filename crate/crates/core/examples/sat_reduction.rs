// 3-SAT as an r = 2 path query.
//
//     cargo run --example sat_reduction

use locally_rainbow::instances::{gen_3sat_instance, Cnf};
use locally_rainbow::oracle::oracle_3sat;
use locally_rainbow::solve_path;

pub fn run_example() -> bool {
    // Each variable occurs twice positively and twice negatively.
    let cnf = Cnf::new(3, vec![[1, 2, 3], [1, 2, -3], [-1, -2, 3], [-1, -2, -3]]);
    let (g, q) = gen_3sat_instance(&cnf).expect("compliant formula");
    println!(
        "{} vertices, r = {}, ell = {}",
        g.vertex_count(),
        q.r,
        q.ell
    );
    let path = solve_path(&g, q).expect("path solver");
    println!("path found: {}", path.is_some());
    println!("assignment by brute force: {:?}", oracle_3sat(&cnf));
    path.is_some()
}

#[allow(dead_code)]
fn main() {
    run_example();
}
