// Representative families of sets and of color sequences, checked by brute
// force.
//
//     cargo run --example representatives

use locally_rainbow::repfam::check::{unserved_continuation, unserved_obstruction};
use locally_rainbow::repfam::{ordered_size_bound, unordered_size_bound};
use locally_rainbow::{
    ordered_representative, unordered_representative, Backend, ColorSeq, LabeledSetFamily,
    SeqFamily,
};

pub fn run_example() -> (usize, usize) {
    // All 2-subsets of {0..5}; a 1-representative keeps binom(3, 2) = 3.
    let mut f = LabeledSetFamily::new(6);
    let mut sets = Vec::new();
    for a in 0..6 {
        for b in a + 1..6 {
            sets.push(vec![a, b]);
            f.push(vec![a, b], format!("{{{a},{b}}}"))
                .expect("uniform family");
        }
    }
    let rep = unordered_representative(f, 1, Backend::Algebraic).expect("representative");
    let kept: Vec<Vec<usize>> = rep.sets().map(|s| s.to_vec()).collect();
    println!(
        "unordered: kept {:?} (bound {})",
        kept,
        unordered_size_bound(2, 1)
    );
    assert!(unserved_obstruction(&sets, &kept, 1).is_none());

    // Every rainbow pair over four colors, represented for r = 2.
    let mut w = SeqFamily::new(2);
    let mut seqs = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            if a != b {
                let s = ColorSeq::from(vec![a, b]);
                seqs.push(s.clone());
                w.push(s, ()).expect("rainbow sequence");
            }
        }
    }
    let rep = ordered_representative(w, Backend::Exhaustive).expect("representative");
    let kept_seqs: Vec<ColorSeq> = rep.sequences().cloned().collect();
    println!(
        "ordered: kept {} of {} (bound {:.1})",
        kept_seqs.len(),
        seqs.len(),
        ordered_size_bound(2)
    );
    assert!(unserved_continuation(&seqs, &kept_seqs, 2).is_none());
    (kept.len(), kept_seqs.len())
}

#[allow(dead_code)]
fn main() {
    run_example();
}
