//! Greedy obstruction enumeration.
//!
//! Obstructions are visited in a fixed order; whenever one is not yet served
//! by a kept member, the first member (in sorted order) that serves it is
//! kept. Each kept member then has an obstruction meeting every earlier kept
//! member, so the skew two-families bound applies to the result.

use crate::colors::{r_compatible, Color};
use crate::error::RepError;

use super::binom;

const OBSTRUCTION_LIMIT: u128 = 20_000_000;

pub(super) fn select_sets(sets: &[&[usize]], q: usize) -> Result<Vec<usize>, RepError> {
    let mut union: Vec<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
    union.sort_unstable();
    union.dedup();
    let u = union.len();
    let top = q.min(u);
    let count = (0..=top)
        .map(|s| binom(u, s))
        .fold(0u128, |a, b| a.saturating_add(b));
    if u > 64 || count > OBSTRUCTION_LIMIT {
        return Err(RepError::TooManyObstructions(count));
    }
    let masks: Vec<u64> = sets
        .iter()
        .map(|s| {
            s.iter().fold(0u64, |m, e| {
                let bit = union.binary_search(e).expect("element in union");
                m | (1u64 << bit)
            })
        })
        .collect();

    let mut kept: Vec<usize> = Vec::new();
    let mut visit = |y: u64| {
        if kept.iter().any(|&i| masks[i] & y == 0) {
            return;
        }
        if let Some(i) = masks.iter().position(|&m| m & y == 0) {
            kept.push(i);
        }
    };
    visit(0);
    for size in 1..=top {
        let mut y: u64 = if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        };
        loop {
            visit(y);
            if size == u {
                break;
            }
            let c = y & y.wrapping_neg();
            let r = y.wrapping_add(c);
            if r == 0 {
                break;
            }
            y = (((r ^ y) >> 2) / c) | r;
            if u < 64 && y >= (1u64 << u) {
                break;
            }
        }
    }
    kept.sort_unstable();
    Ok(kept)
}

/// Continuations are injective sequences of length `r` over the colors seen
/// in the family plus per-position fresh colors; shorter continuations are
/// served exactly when their fresh-padded extension is.
pub(super) fn select_sequences(seqs: &[&[Color]], r: usize) -> Result<Vec<usize>, RepError> {
    let mut alphabet: Vec<Color> = seqs.iter().flat_map(|s| s.iter().copied()).collect();
    alphabet.sort_unstable();
    alphabet.dedup();
    let a = alphabet.len();
    // injective length-r words over a + r symbols, counted loosely
    let mut count: u128 = 1;
    for i in 0..r {
        count = count.saturating_mul((a + r - i) as u128);
    }
    if count > OBSTRUCTION_LIMIT {
        return Err(RepError::TooManyObstructions(count));
    }
    let fresh_base = alphabet.last().copied().unwrap_or(0) + 1;

    let mut kept: Vec<usize> = Vec::new();
    let mut rho: Vec<Color> = Vec::with_capacity(r);
    extend(&alphabet, fresh_base, r, &mut rho, &mut |rho| {
        if kept.iter().any(|&i| r_compatible(seqs[i], rho, r)) {
            return;
        }
        if let Some(i) = seqs.iter().position(|s| r_compatible(s, rho, r)) {
            kept.push(i);
        }
    });
    kept.sort_unstable();
    Ok(kept)
}

fn extend(
    alphabet: &[Color],
    fresh_base: Color,
    r: usize,
    rho: &mut Vec<Color>,
    visit: &mut impl FnMut(&[Color]),
) {
    if rho.len() == r {
        visit(rho);
        return;
    }
    for &c in alphabet {
        if !rho.contains(&c) {
            rho.push(c);
            extend(alphabet, fresh_base, r, rho, visit);
            rho.pop();
        }
    }
    rho.push(fresh_base + rho.len() as Color);
    extend(alphabet, fresh_base, r, rho, visit);
    rho.pop();
}
