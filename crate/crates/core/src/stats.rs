//! Per-run bookkeeping shared by the solvers.

use serde::{Deserialize, Serialize};

use crate::graph::Witness;
use crate::repfam::Backend;

/// Family sizes at one DP level, after pruning.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStats {
    pub level: usize,
    pub max_family: usize,
    pub total_family: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub levels: Vec<LevelStats>,
    /// Representative budget used at each level (path DP only).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub budgets: Vec<usize>,
}

impl SolveStats {
    pub(crate) fn record(&mut self, level: usize, sizes: impl IntoIterator<Item = usize>) {
        let mut entry = LevelStats {
            level,
            ..LevelStats::default()
        };
        for s in sizes {
            entry.max_family = entry.max_family.max(s);
            entry.total_family += s;
        }
        self.levels.push(entry);
    }

    pub fn max_family(&self) -> usize {
        self.levels.iter().map(|l| l.max_family).max().unwrap_or(0)
    }
}

/// Answer of a solver run together with its statistics.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    pub witness: Option<Witness>,
    pub stats: SolveStats,
}

impl Solution {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

/// Knobs shared by the DP solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub backend: Backend,
    /// Largest any-length cap the cap backend accepts.
    pub cap_ceiling: u128,
    /// Largest product state space the product backend and oracle accept.
    pub state_ceiling: u128,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            backend: Backend::Algebraic,
            cap_ceiling: 10_000_000,
            state_ceiling: 10_000_000,
        }
    }
}

impl SolveOptions {
    pub fn with_backend(backend: Backend) -> Self {
        SolveOptions {
            backend,
            ..SolveOptions::default()
        }
    }
}
