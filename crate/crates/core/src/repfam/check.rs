//! Brute-force checks of the representative definitions, written without
//! reference to either backend so they can referee both.

use crate::colors::{is_locally_rainbow, r_compatible, Color, ColorSeq};

/// An obstruction `Y` with `|Y| <= q` that some member of `full` avoids but
/// no member of `rep` does, if one exists. Only elements appearing in `full`
/// can matter, so `Y` ranges over subsets of their union.
pub fn unserved_obstruction(
    full: &[Vec<usize>],
    rep: &[Vec<usize>],
    q: usize,
) -> Option<Vec<usize>> {
    let mut union: Vec<usize> = full.iter().flatten().copied().collect();
    union.sort_unstable();
    union.dedup();
    let mut y = Vec::new();
    search_sets(&union, 0, q, &mut y, full, rep)
}

fn avoids(x: &[usize], y: &[usize]) -> bool {
    x.iter().all(|e| !y.contains(e))
}

fn search_sets(
    union: &[usize],
    from: usize,
    q: usize,
    y: &mut Vec<usize>,
    full: &[Vec<usize>],
    rep: &[Vec<usize>],
) -> Option<Vec<usize>> {
    if full.iter().any(|x| avoids(x, y)) && !rep.iter().any(|x| avoids(x, y)) {
        return Some(y.clone());
    }
    if y.len() == q {
        return None;
    }
    for i in from..union.len() {
        y.push(union[i]);
        let found = search_sets(union, i + 1, q, y, full, rep);
        y.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Whether every member of `rep` also occurs in `full`.
pub fn is_subfamily<S: PartialEq>(full: &[S], rep: &[S]) -> bool {
    rep.iter().all(|x| full.contains(x))
}

/// A continuation `rho` (r-rainbow, `|rho| <= r`) to which some member of
/// `full` is r-compatible but no member of `rep` is. Continuations use the
/// colors of `full` plus `r` colors that occur nowhere in it.
pub fn unserved_continuation(full: &[ColorSeq], rep: &[ColorSeq], r: usize) -> Option<ColorSeq> {
    let mut alphabet: Vec<Color> = full.iter().flat_map(|s| s.as_slice().to_vec()).collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    let base = alphabet.last().map_or(0, |c| c + 1);
    alphabet.extend((0..r as Color).map(|i| base + i));
    let mut rho = Vec::new();
    search_seqs(&alphabet, r, &mut rho, full, rep)
}

fn search_seqs(
    alphabet: &[Color],
    r: usize,
    rho: &mut Vec<Color>,
    full: &[ColorSeq],
    rep: &[ColorSeq],
) -> Option<ColorSeq> {
    if is_locally_rainbow(rho, r) {
        let served = |fam: &[ColorSeq]| fam.iter().any(|s| r_compatible(s.as_slice(), rho, r));
        if served(full) && !served(rep) {
            return Some(ColorSeq::from(rho.clone()));
        }
    } else {
        return None;
    }
    if rho.len() == r {
        return None;
    }
    for &c in alphabet {
        rho.push(c);
        let found = search_seqs(alphabet, r, rho, full, rep);
        rho.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
