use locally_rainbow::colors::{decode_pi, pi_flat, pi_prime_flat, pi_size};
use locally_rainbow::instances::gen_random;
use locally_rainbow::repfam::check::{is_subfamily, unserved_continuation, unserved_obstruction};
use locally_rainbow::repfam::{ordered_size_bound, unordered_size_bound};
use locally_rainbow::{
    is_locally_rainbow, ordered_representative, pi, r_compatible, solve_path, solve_walk,
    unordered_representative, verify_witness, Backend, Color, ColorSeq, LabeledSetFamily, Query,
    SeqFamily, SolveOptions,
};
use proptest::prelude::*;

const PALETTE: Color = 6;

/// An r-rainbow sequence: each entry avoids the previous `r` entries.
fn rainbow(r: usize, max_len: usize) -> impl Strategy<Value = Vec<Color>> {
    prop::collection::vec(0usize..1000, 0..=max_len).prop_map(move |choices| {
        let mut out: Vec<Color> = Vec::new();
        for c in choices {
            let recent = &out[out.len().saturating_sub(r)..];
            let allowed: Vec<Color> = (0..PALETTE).filter(|x| !recent.contains(x)).collect();
            out.push(allowed[c % allowed.len()]);
        }
        out
    })
}

fn seq_family(
    r: usize,
    len: usize,
    colors: Color,
    size: usize,
) -> impl Strategy<Value = Vec<ColorSeq>> {
    prop::collection::vec(prop::collection::vec(0..colors, len), 1..=size).prop_map(move |seqs| {
        seqs.into_iter()
            .filter(|s| is_locally_rainbow(s, r))
            .map(ColorSeq::from)
            .collect()
    })
}

fn to_family(r: usize, seqs: &[ColorSeq]) -> SeqFamily<usize> {
    let mut f = SeqFamily::new(r);
    for (i, s) in seqs.iter().enumerate() {
        f.push(s.clone(), i).unwrap();
    }
    f
}

fn kept(f: &SeqFamily<usize>) -> Vec<ColorSeq> {
    f.sequences().cloned().collect()
}

fn set_family(universe: usize, p: usize, size: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(
        prop::sample::subsequence((0..universe).collect::<Vec<_>>(), p),
        1..=size,
    )
}

fn to_sets(universe: usize, sets: &[Vec<usize>]) -> LabeledSetFamily<usize> {
    let mut f = LabeledSetFamily::new(universe);
    for (i, s) in sets.iter().enumerate() {
        f.push(s.clone(), i).unwrap();
    }
    f
}

fn backend() -> impl Strategy<Value = Backend> {
    prop_oneof![Just(Backend::Algebraic), Just(Backend::Exhaustive)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn compatibility_matches_disjoint_encodings(
        (r, sigma, rho) in (1usize..=4).prop_flat_map(|r| (Just(r), rainbow(r, 6), rainbow(r, 6)))
    ) {
        let left = pi_flat(&sigma, r);
        let right = pi_prime_flat(&rho, r);
        let disjoint = left.iter().all(|x| !right.contains(x));
        let joined: Vec<Color> = sigma.iter().chain(&rho).copied().collect();
        prop_assert_eq!(r_compatible(&sigma, &rho, r), disjoint);
        prop_assert_eq!(r_compatible(&sigma, &rho, r), is_locally_rainbow(&joined, r));
    }

    #[test]
    fn encoding_size_and_decoding(
        (r, sigma) in (1usize..=4).prop_flat_map(|r| (Just(r), rainbow(r, 6)))
    ) {
        let p = sigma.len();
        prop_assert_eq!(pi(&sigma, r).len(), pi_size(p, r));
        let window = &sigma[p.saturating_sub(r)..];
        let decoded = decode_pi(&pi(window, r), window.len(), r).unwrap();
        prop_assert_eq!(decoded.as_slice(), window);
    }

    #[test]
    fn ordered_representatives_represent(
        (r, seqs) in (1usize..=3, 0usize..=3).prop_flat_map(|(r, p)| (Just(r), seq_family(r, p, 4, 40))),
        backend in backend(),
    ) {
        let rep = ordered_representative(to_family(r, &seqs), backend).unwrap();
        let out = kept(&rep);
        prop_assert!(is_subfamily(&seqs, &out));
        prop_assert!(out.len() as f64 <= ordered_size_bound(r));
        prop_assert_eq!(unserved_continuation(&seqs, &out, r), None);
    }

    #[test]
    fn ordered_representatives_compose(
        (r, a, b) in (1usize..=3, 1usize..=3).prop_flat_map(|(r, p)| (Just(r), seq_family(r, p, 4, 25), seq_family(r, p, 4, 25))),
        backend in backend(),
    ) {
        // a representative of a representative, and a representative of a
        // union of representatives, still represent the originals
        let ra = kept(&ordered_representative(to_family(r, &a), backend).unwrap());
        let rb = kept(&ordered_representative(to_family(r, &b), backend).unwrap());
        let again = kept(&ordered_representative(to_family(r, &ra), backend).unwrap());
        prop_assert_eq!(unserved_continuation(&a, &again, r), None);
        let union: Vec<ColorSeq> = ra.iter().chain(&rb).cloned().collect();
        let merged = kept(&ordered_representative(to_family(r, &union), backend).unwrap());
        let all: Vec<ColorSeq> = a.iter().chain(&b).cloned().collect();
        prop_assert_eq!(unserved_continuation(&all, &merged, r), None);
    }

    #[test]
    fn unordered_representatives_represent(
        (universe, p, sets) in (3usize..=9, 1usize..=3).prop_flat_map(|(u, p)| (Just(u), Just(p), set_family(u, p.min(u), 40))),
        q in 0usize..=3,
        backend in backend(),
    ) {
        let rep = unordered_representative(to_sets(universe, &sets), q, backend).unwrap();
        let out: Vec<Vec<usize>> = rep.sets().map(|s| s.to_vec()).collect();
        prop_assert!(is_subfamily(&sets, &out));
        prop_assert!(out.len() as u128 <= unordered_size_bound(p.min(universe), q));
        prop_assert_eq!(unserved_obstruction(&sets, &out, q), None);
        let again = unordered_representative(to_sets(universe, &out), q, backend).unwrap();
        let again: Vec<Vec<usize>> = again.sets().map(|s| s.to_vec()).collect();
        prop_assert_eq!(unserved_obstruction(&sets, &again, q), None);
    }

    #[test]
    fn larger_r_is_harder(
        seed in any::<u64>(),
        n in 2usize..=8,
        ell in 0usize..=8,
        r in 0usize..=3,
    ) {
        let (g, _) = gen_random(n, 0.35, 4, r, ell, seed).unwrap();
        for q in [Query::at_most(r, ell), Query::exactly(r, ell)] {
            let stricter = Query { r: r + 1, ..q };
            if solve_walk(&g, stricter).unwrap().is_some() {
                prop_assert!(solve_walk(&g, q).unwrap().is_some());
            }
            if solve_path(&g, stricter).unwrap().is_some() {
                prop_assert!(solve_path(&g, q).unwrap().is_some());
            }
        }
        if solve_walk(&g, Query::at_most(r, ell)).unwrap().is_some() {
            prop_assert!(solve_walk(&g, Query::at_most(r, ell + 1)).unwrap().is_some());
        }
    }

    #[test]
    fn witnesses_verify_and_backends_agree(
        seed in any::<u64>(),
        n in 2usize..=8,
        ell in 0usize..=8,
        r in 1usize..=3,
        exact in any::<bool>(),
    ) {
        let (g, q) = gen_random(n, 0.35, 3, r, ell, seed).unwrap();
        let q = if exact { Query::exactly(r, ell) } else { q };
        let mut answers = Vec::new();
        for backend in [Backend::Algebraic, Backend::Exhaustive] {
            let opts = SolveOptions::with_backend(backend);
            let walk = locally_rainbow::walk::solve_walk_with(&g, q, &opts).unwrap().witness;
            let path = locally_rainbow::path::solve_path_with(&g, q, &opts).unwrap().witness;
            if let Some(w) = &walk {
                prop_assert!(verify_witness(&g, q, w, false).is_ok());
            }
            if let Some(w) = &path {
                prop_assert!(verify_witness(&g, q, w, true).is_ok());
            }
            answers.push((walk.is_some(), path.is_some()));
        }
        prop_assert_eq!(answers[0], answers[1]);
    }
}
