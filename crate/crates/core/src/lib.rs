//! Solvers for locally rainbow s-t walks and paths in vertex-colored
//! digraphs.
//!
//! A walk is *r-rainbow* when any `r + 1` consecutive vertices carry
//! pairwise distinct colors. The crate decides, and produces witnesses for,
//! three problems:
//!
//! * walks of bounded (or any) length: [`walk::solve_walk`],
//! * paths of bounded length: [`path::solve_path`],
//! * paths of length `dist(s, t) + k` for small `k`: [`detour::solve_detour`],
//!
//! all built on representative families ([`repfam`]). Brute-force
//! references live in [`oracle`], instance generators and file formats in
//! [`instances`], and the command-line front end in [`cli`].

pub mod cli;
pub mod colors;
pub mod detour;
pub mod error;
pub mod graph;
pub mod instances;
pub mod oracle;
pub mod path;
pub mod repfam;
pub mod stats;
pub mod verify;
pub mod walk;

pub use colors::{is_locally_rainbow, pi, pi_prime, r_compatible, Color, ColorSeq, EncodedPair};
pub use detour::{build_band, distance_separators, solve_detour, Band, BandKind};
pub use error::{GeneratorError, GraphError, ParseError, RepError, SolveError};
pub use graph::{dist_to_target, ColoredDigraph, LengthMode, Query, Vertex, Witness};
pub use path::{compute_p_q_tau, solve_path, solve_r2_symmetric};
pub use repfam::{
    ordered_representative, partial_representative, unordered_representative, Backend,
    LabeledSetFamily, RepresentativeEngine, SeqFamily,
};
pub use stats::{Solution, SolveOptions, SolveStats};
pub use verify::{verify_witness, VerifyError};
pub use walk::{solve_r1, solve_walk, solve_walk_any_length, AnyLengthBackend};
