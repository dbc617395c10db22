// Writing, reading and verifying instances and witnesses.
//
//     cargo run --example instance_io

use locally_rainbow::instances::{
    format_witness, gen_random, parse_instance, parse_witness, write_instance,
};
use locally_rainbow::{solve_walk, verify_witness, Witness};

pub fn run_example() -> bool {
    let (g, q) = gen_random(7, 0.4, 3, 2, 6, 19).expect("generator");
    let text = write_instance(&g, &q);
    print!("{text}");
    let (g2, q2) = parse_instance(&text).expect("round trip");
    assert_eq!(write_instance(&g2, &q2), text);

    let w = solve_walk(&g2, q2).expect("walk solver");
    let line = format_witness(w.as_ref());
    println!("{line}");
    let replay = parse_witness(&line).expect("witness format");
    if let Some(w) = &replay {
        verify_witness(&g2, q2, w, false).expect("solver witnesses verify");
    }
    // Tampering is caught.
    let bogus = Witness::new(vec![g.target(), g.source()]);
    println!(
        "bogus witness: {:?}",
        verify_witness(&g2, q2, &bogus, false).err()
    );
    replay.is_some()
}

#[allow(dead_code)]
fn main() {
    run_example();
}
