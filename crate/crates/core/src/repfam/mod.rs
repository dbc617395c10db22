//! Representative families: pruning a family of sets (or of color windows)
//! down to a bounded subfamily that still serves every small obstruction.
//!
//! Two backends are provided. [`Backend::Algebraic`] extracts a row basis of
//! exterior-power vectors over a prime field and is the default.
//! [`Backend::Exhaustive`] enumerates obstructions and keeps one serving
//! member per unserved obstruction; it is exponential in `q` and intended as
//! a cross-check at small scale.

mod algebraic;
pub mod check;
mod exhaustive;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::colors::{is_locally_rainbow, pi_flat, Color, ColorSeq};
use crate::error::RepError;

pub(crate) use algebraic::binom;

/// How representatives are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    #[default]
    Algebraic,
    Exhaustive,
}

impl Backend {
    pub fn as_str(self) -> &'static str {
        match self {
            Backend::Algebraic => "algebraic",
            Backend::Exhaustive => "exhaustive",
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "algebraic" => Ok(Backend::Algebraic),
            "exhaustive" => Ok(Backend::Exhaustive),
            other => Err(format!(
                "unknown backend '{other}' (expected algebraic or exhaustive)"
            )),
        }
    }
}

/// A uniform family of subsets of `[0, universe_size)`, each carrying a tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSetFamily<T> {
    universe_size: usize,
    sets: Vec<(Vec<usize>, T)>,
}

impl<T> LabeledSetFamily<T> {
    pub fn new(universe_size: usize) -> Self {
        LabeledSetFamily {
            universe_size,
            sets: Vec::new(),
        }
    }

    /// Adds a member. The set is sorted and deduplicated; elements outside
    /// the universe and members of a different size are rejected.
    pub fn push(&mut self, mut set: Vec<usize>, tag: T) -> Result<(), RepError> {
        set.sort_unstable();
        set.dedup();
        if let Some(&e) = set.iter().find(|&&e| e >= self.universe_size) {
            return Err(RepError::OutOfUniverse {
                element: e,
                universe: self.universe_size,
            });
        }
        if let Some((first, _)) = self.sets.first() {
            if first.len() != set.len() {
                return Err(RepError::NonUniform {
                    first: first.len(),
                    other: set.len(),
                });
            }
        }
        self.sets.push((set, tag));
        Ok(())
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Common member size, `None` for an empty family.
    pub fn set_size(&self) -> Option<usize> {
        self.sets.first().map(|(s, _)| s.len())
    }

    pub fn members(&self) -> &[(Vec<usize>, T)] {
        &self.sets
    }

    pub fn sets(&self) -> impl Iterator<Item = &[usize]> {
        self.sets.iter().map(|(s, _)| s.as_slice())
    }

    pub fn into_members(self) -> Vec<(Vec<usize>, T)> {
        self.sets
    }
}

/// A family of equal-length r-rainbow color windows, each carrying a tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqFamily<T> {
    r: usize,
    sequences: Vec<(ColorSeq, T)>,
}

impl<T> SeqFamily<T> {
    pub fn new(r: usize) -> Self {
        SeqFamily {
            r,
            sequences: Vec::new(),
        }
    }

    /// Adds a member, rejecting mixed lengths and non-rainbow sequences.
    pub fn push(&mut self, seq: ColorSeq, tag: T) -> Result<(), RepError> {
        if !is_locally_rainbow(seq.as_slice(), self.r) {
            return Err(RepError::NotRainbow(seq.to_string()));
        }
        if let Some((first, _)) = self.sequences.first() {
            if first.len() != seq.len() {
                return Err(RepError::MixedLengths {
                    first: first.len(),
                    other: seq.len(),
                });
            }
        }
        self.sequences.push((seq, tag));
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn members(&self) -> &[(ColorSeq, T)] {
        &self.sequences
    }

    pub fn sequences(&self) -> impl Iterator<Item = &ColorSeq> {
        self.sequences.iter().map(|(s, _)| s)
    }

    pub fn into_members(self) -> Vec<(ColorSeq, T)> {
        self.sequences
    }
}

/// Upper bound `(r e)^r` on ordered representatives (with `0^0 = 1`).
pub fn ordered_size_bound(r: usize) -> f64 {
    if r == 0 {
        1.0
    } else {
        (r as f64 * std::f64::consts::E).powi(r as i32)
    }
}

/// Upper bound `binom(p + q, p)` on unordered representatives.
pub fn unordered_size_bound(p: usize, q: usize) -> u128 {
    binom(p + q, p)
}

const DEFAULT_WORK_BUDGET: u128 = 4_000_000;
const CACHE_LIMIT: usize = 20_000_000;

/// Reusable representative computation with a per-engine wedge cache.
///
/// Solvers create one engine per run so that repeated sets across DP cells
/// are expanded only once.
pub struct RepresentativeEngine {
    backend: Backend,
    work_budget: u128,
    cache: HashMap<(usize, Vec<usize>), Vec<u32>>,
    cached_words: usize,
}

impl RepresentativeEngine {
    pub fn new(backend: Backend) -> Self {
        RepresentativeEngine {
            backend,
            work_budget: DEFAULT_WORK_BUDGET,
            cache: HashMap::new(),
            cached_words: 0,
        }
    }

    /// Work allowance for optional basis extraction. When a family already
    /// fits the size bound, the algebraic backend only thins it if the
    /// estimated cost stays within this budget.
    pub fn with_work_budget(mut self, budget: u128) -> Self {
        self.work_budget = budget;
        self
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// q-representative of a uniform family. Identical sets collapse to
    /// their first occurrence and the result is ordered by sorted set.
    pub fn unordered<T>(
        &mut self,
        f: LabeledSetFamily<T>,
        q: usize,
    ) -> Result<LabeledSetFamily<T>, RepError> {
        let universe_size = f.universe_size;
        let mut members = f.sets;
        members.sort_by(|a, b| a.0.cmp(&b.0));
        members.dedup_by(|later, earlier| later.0 == earlier.0);
        let sets: Vec<&[usize]> = members.iter().map(|(s, _)| s.as_slice()).collect();
        let keep = self.select_sets(&sets, universe_size, q)?;
        let mut flags = vec![false; members.len()];
        for i in keep {
            flags[i] = true;
        }
        let sets = members
            .into_iter()
            .zip(flags)
            .filter_map(|(m, k)| k.then_some(m))
            .collect();
        Ok(LabeledSetFamily {
            universe_size,
            sets,
        })
    }

    /// Ordered r-representative of a family of equal-length windows.
    pub fn ordered<T>(&mut self, w: SeqFamily<T>) -> Result<SeqFamily<T>, RepError> {
        let r = w.r;
        let members = w.sequences;
        if let Some((first, _)) = members.first() {
            let len = first.len();
            for (s, _) in &members {
                if s.len() != len {
                    return Err(RepError::MixedLengths {
                        first: len,
                        other: s.len(),
                    });
                }
                if !is_locally_rainbow(s.as_slice(), r) {
                    return Err(RepError::NotRainbow(s.to_string()));
                }
            }
        }
        if members.len() <= 1 {
            return Ok(SeqFamily {
                r,
                sequences: members,
            });
        }

        let keep: Vec<usize> = match self.backend {
            Backend::Algebraic => {
                let max_color = members
                    .iter()
                    .flat_map(|(s, _)| s.as_slice().iter().copied())
                    .max()
                    .unwrap_or(0) as usize;
                let universe = (max_color + 1) * r.max(1);
                let mut keyed: Vec<(Vec<usize>, usize)> = members
                    .iter()
                    .enumerate()
                    .map(|(i, (s, _))| (pi_flat(s.as_slice(), r), i))
                    .collect();
                keyed.sort();
                keyed.dedup_by(|later, earlier| later.0 == earlier.0);
                let sets: Vec<&[usize]> = keyed.iter().map(|(s, _)| s.as_slice()).collect();
                self.select_sets(&sets, universe, r)?
                    .into_iter()
                    .map(|i| keyed[i].1)
                    .collect()
            }
            Backend::Exhaustive => {
                let mut order: Vec<usize> = (0..members.len()).collect();
                order.sort_by(|&a, &b| members[a].0.cmp(&members[b].0));
                order.dedup_by(|later, earlier| members[*later].0 == members[*earlier].0);
                let seqs: Vec<&[Color]> = order.iter().map(|&i| members[i].0.as_slice()).collect();
                exhaustive::select_sequences(&seqs, r)?
                    .into_iter()
                    .map(|i| order[i])
                    .collect()
            }
        };

        let mut flags = vec![false; members.len()];
        for i in keep {
            flags[i] = true;
        }
        let sequences = members
            .into_iter()
            .zip(flags)
            .filter_map(|(m, k)| k.then_some(m))
            .collect();
        Ok(SeqFamily { r, sequences })
    }

    /// Indices (into `sets`, which is sorted and duplicate-free) of a
    /// q-representative.
    fn select_sets(
        &mut self,
        sets: &[&[usize]],
        universe_size: usize,
        q: usize,
    ) -> Result<Vec<usize>, RepError> {
        if sets.len() <= 1 || q == 0 {
            return Ok((0..sets.len().min(1)).collect());
        }
        let p = sets[0].len();
        for s in sets {
            if s.len() != p {
                return Err(RepError::NonUniform {
                    first: p,
                    other: s.len(),
                });
            }
        }
        if p == 0 {
            return Ok(vec![0]);
        }
        match self.backend {
            Backend::Exhaustive => exhaustive::select_sets(sets, q),
            Backend::Algebraic => self.algebraic_select(sets, universe_size, q),
        }
    }

    fn algebraic_select(
        &mut self,
        sets: &[&[usize]],
        universe_size: usize,
        q: usize,
    ) -> Result<Vec<usize>, RepError> {
        let p = sets[0].len();
        let rank = p + q;
        let dim = binom(rank, p);
        let len = sets.len() as u128;
        if len <= dim {
            // Already within the bound; thin only when affordable.
            if rank > 63 {
                return Ok((0..sets.len()).collect());
            }
            let fresh = sets
                .iter()
                .filter(|s| !self.cache.contains_key(&(rank, s.to_vec())))
                .count() as u128;
            let cost = algebraic::wedge_cost(rank, p)
                .saturating_mul(fresh)
                .saturating_add(len.saturating_mul(len).saturating_mul(dim));
            if cost > self.work_budget {
                return Ok((0..sets.len()).collect());
            }
        } else if rank > 63 {
            return Err(RepError::RankTooLarge(rank));
        }
        debug_assert!(sets.iter().all(|s| s.iter().all(|&e| e < universe_size)));

        let mut basis = algebraic::EchelonBasis::default();
        let mut keep = Vec::new();
        for (i, s) in sets.iter().enumerate() {
            let key = (rank, s.to_vec());
            if !self.cache.contains_key(&key) {
                let w = algebraic::wedge(s, rank);
                self.cached_words += w.len();
                if self.cached_words > CACHE_LIMIT {
                    self.cache.clear();
                    self.cached_words = w.len();
                }
                self.cache.insert(key.clone(), w);
            }
            if basis.insert(&self.cache[&key]) {
                keep.push(i);
                if basis.rank() as u128 == dim {
                    break;
                }
            }
        }
        Ok(keep)
    }
}

/// q-representative of a uniform set family: for every `Y` with `|Y| <= q`,
/// if some member avoids `Y` then some kept member does. At most
/// `binom(p + q, p)` members are kept and tags ride along.
pub fn unordered_representative<T>(
    f: LabeledSetFamily<T>,
    q: usize,
    backend: Backend,
) -> Result<LabeledSetFamily<T>, RepError> {
    RepresentativeEngine::new(backend).unordered(f, q)
}

/// Ordered r-representative: for every continuation `rho` with `|rho| <= r`,
/// if some member is r-compatible to `rho` then some kept member is.
pub fn ordered_representative<T>(
    w: SeqFamily<T>,
    backend: Backend,
) -> Result<SeqFamily<T>, RepError> {
    RepresentativeEngine::new(backend).ordered(w)
}

/// Representative against structured obstructions of total size at most
/// `size_budget`; any `size_budget`-representative qualifies.
pub fn partial_representative<T>(
    f: LabeledSetFamily<T>,
    size_budget: usize,
    backend: Backend,
) -> Result<LabeledSetFamily<T>, RepError> {
    unordered_representative(f, size_budget, backend)
}
