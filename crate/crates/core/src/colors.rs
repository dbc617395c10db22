//! Color sequences, local rainbowness and the set encoding that turns
//! r-compatibility into set disjointness.
//!
//! A sequence is *r-rainbow* when any two entries at distance at most `r`
//! differ, i.e. every run of `r + 1` consecutive entries (or the whole
//! sequence, when it is shorter) carries pairwise distinct colors.

use std::fmt;

/// Dense color id.
pub type Color = u32;

/// A bounded color sequence, typically the suffix window of a partial walk.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSeq(Vec<Color>);

impl ColorSeq {
    pub fn new(entries: Vec<Color>) -> Self {
        ColorSeq(entries)
    }

    pub fn empty() -> Self {
        ColorSeq(Vec::new())
    }

    pub fn single(c: Color) -> Self {
        ColorSeq(vec![c])
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Color> {
        self.0.last().copied()
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.contains(&c)
    }

    /// Appends `c` and keeps at most the last `window` entries.
    pub fn shifted(&self, c: Color, window: usize) -> ColorSeq {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(c);
        let drop = v.len().saturating_sub(window);
        v.drain(..drop);
        ColorSeq(v)
    }

    /// The last `len` entries (all of them if the sequence is shorter).
    pub fn suffix(&self, len: usize) -> ColorSeq {
        let start = self.0.len().saturating_sub(len);
        ColorSeq(self.0[start..].to_vec())
    }

    /// Everything but the last entry.
    pub fn without_last(&self) -> ColorSeq {
        let end = self.0.len().saturating_sub(1);
        ColorSeq(self.0[..end].to_vec())
    }

    pub fn concat(&self, other: &ColorSeq) -> ColorSeq {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ColorSeq(v)
    }

    pub fn into_vec(self) -> Vec<Color> {
        self.0
    }
}

impl From<Vec<Color>> for ColorSeq {
    fn from(v: Vec<Color>) -> Self {
        ColorSeq(v)
    }
}

impl From<&[Color]> for ColorSeq {
    fn from(v: &[Color]) -> Self {
        ColorSeq(v.to_vec())
    }
}

impl fmt::Display for ColorSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Whether every two entries at distance at most `r` have different colors.
pub fn is_locally_rainbow(colors: &[Color], r: usize) -> bool {
    first_window_violation(colors, r).is_none()
}

/// Index pair `(i, j)` of the first repeated color within distance `r`.
pub fn first_window_violation(colors: &[Color], r: usize) -> Option<(usize, usize)> {
    for j in 1..colors.len() {
        let lo = j.saturating_sub(r);
        for i in lo..j {
            if colors[i] == colors[j] {
                return Some((i, j));
            }
        }
    }
    None
}

/// `sigma` may be followed by `rho` without breaking r-rainbowness at the
/// junction: for every `j` in `1..=r` the last `j` entries of `sigma` avoid
/// the first `r - j + 1` entries of `rho`.
pub fn r_compatible(sigma: &[Color], rho: &[Color], r: usize) -> bool {
    let n = sigma.len();
    let m = rho.len();
    for j in 1..=r {
        let tail = &sigma[n.saturating_sub(j)..];
        let head = &rho[..(r - j + 1).min(m)];
        if tail.iter().any(|a| head.contains(a)) {
            return false;
        }
    }
    true
}

/// An element of the universe `C x [1, r]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EncodedPair {
    pub color: Color,
    /// 1-based position in `[1, r]`.
    pub position: usize,
}

impl EncodedPair {
    /// Integer id `color * r + (position - 1)`.
    pub fn flatten(self, r: usize) -> usize {
        debug_assert!(self.position >= 1 && self.position <= r);
        self.color as usize * r + (self.position - 1)
    }

    pub fn unflatten(id: usize, r: usize) -> EncodedPair {
        EncodedPair {
            color: (id / r) as Color,
            position: id % r + 1,
        }
    }
}

/// Encoding of a stored (left) sequence: `(a_j, i)` for every position
/// `i` in `[1, r]` and every `j` among the last `r - i + 1` entries.
pub fn pi(sigma: &[Color], r: usize) -> Vec<EncodedPair> {
    let p = sigma.len();
    let mut out = Vec::new();
    for i in 1..=r {
        let lo = (p + i).saturating_sub(r).max(1);
        for j in lo..=p {
            out.push(EncodedPair {
                color: sigma[j - 1],
                position: i,
            });
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Encoding of a continuation (right) sequence: `(b_i, i)` for `i` up to
/// `min(r, |rho|)`.
pub fn pi_prime(rho: &[Color], r: usize) -> Vec<EncodedPair> {
    let mut out: Vec<EncodedPair> = rho
        .iter()
        .take(r)
        .enumerate()
        .map(|(i, &c)| EncodedPair {
            color: c,
            position: i + 1,
        })
        .collect();
    out.sort();
    out
}

/// Flattened, sorted ids of [`pi`].
pub fn pi_flat(sigma: &[Color], r: usize) -> Vec<usize> {
    let mut v: Vec<usize> = pi(sigma, r).into_iter().map(|e| e.flatten(r)).collect();
    v.sort_unstable();
    v
}

/// Flattened, sorted ids of [`pi_prime`].
pub fn pi_prime_flat(rho: &[Color], r: usize) -> Vec<usize> {
    let mut v: Vec<usize> = pi_prime(rho, r).into_iter().map(|e| e.flatten(r)).collect();
    v.sort_unstable();
    v
}

/// Size of `pi(sigma, r)` for an r-rainbow `sigma` of length `p`.
pub fn pi_size(p: usize, r: usize) -> usize {
    r.saturating_sub(p) * p + (1..=p.min(r)).sum::<usize>()
}

/// Recovers a rainbow window of length `len` from its [`pi`] image.
///
/// Position `r` holds only the last entry, position `r - 1` the last two,
/// and so on, so the entries can be peeled off from the back.
pub fn decode_pi(encoded: &[EncodedPair], len: usize, r: usize) -> Option<ColorSeq> {
    if len == 0 {
        return encoded.is_empty().then(ColorSeq::empty);
    }
    if len > r {
        return None;
    }
    let mut back: Vec<Color> = Vec::with_capacity(len);
    for t in 1..=len {
        let pos = r + 1 - t;
        let at_pos: Vec<Color> = encoded
            .iter()
            .filter(|e| e.position == pos)
            .map(|e| e.color)
            .collect();
        if at_pos.len() != t {
            return None;
        }
        let fresh: Vec<Color> = at_pos.into_iter().filter(|c| !back.contains(c)).collect();
        if fresh.len() != 1 {
            return None;
        }
        back.push(fresh[0]);
    }
    back.reverse();
    let seq = ColorSeq(back);
    (pi(seq.as_slice(), r) == {
        let mut e = encoded.to_vec();
        e.sort();
        e
    })
    .then_some(seq)
}
