//! Independent replay of a claimed witness against an instance.

use thiserror::Error;

use crate::colors::first_window_violation;
use crate::graph::{ColoredDigraph, LengthMode, Query, Vertex, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("witness has no vertices")]
    Empty,
    #[error("vertex {vertex} at position {index} is out of range")]
    OutOfRange { index: usize, vertex: Vertex },
    #[error("witness starts at {found}, expected s = {expected}")]
    WrongStart { found: Vertex, expected: Vertex },
    #[error("witness ends at {found}, expected t = {expected}")]
    WrongEnd { found: Vertex, expected: Vertex },
    #[error("({u}, {v}) at position {index} is not an arc")]
    MissingArc { index: usize, u: Vertex, v: Vertex },
    #[error(
        "positions {i} and {j} (vertices {u} and {v}) share color {color} within distance {r}"
    )]
    Window {
        i: usize,
        j: usize,
        u: Vertex,
        v: Vertex,
        color: u64,
        r: usize,
    },
    #[error("vertex {vertex} repeats at positions {first} and {second}")]
    Repeated {
        vertex: Vertex,
        first: usize,
        second: usize,
    },
    #[error("length {len} violates the budget '{mode} {ell}'")]
    Length {
        len: usize,
        ell: usize,
        mode: LengthMode,
    },
}

/// Checks endpoints, arcs, r-rainbow windows, the length budget and, when
/// `require_path`, that no vertex repeats. Reports the first violation.
pub fn verify_witness(
    g: &ColoredDigraph,
    q: Query,
    w: &Witness,
    require_path: bool,
) -> Result<(), VerifyError> {
    let vs = &w.vertices;
    let (&first, &last) = match (vs.first(), vs.last()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(VerifyError::Empty),
    };
    if let Some((index, &vertex)) = vs.iter().enumerate().find(|(_, &v)| v >= g.vertex_count()) {
        return Err(VerifyError::OutOfRange { index, vertex });
    }
    if first != g.source() {
        return Err(VerifyError::WrongStart {
            found: first,
            expected: g.source(),
        });
    }
    if last != g.target() {
        return Err(VerifyError::WrongEnd {
            found: last,
            expected: g.target(),
        });
    }
    for (index, pair) in vs.windows(2).enumerate() {
        if !g.has_arc(pair[0], pair[1]) {
            return Err(VerifyError::MissingArc {
                index,
                u: pair[0],
                v: pair[1],
            });
        }
    }
    let colors = g.color_sequence(vs);
    if let Some((i, j)) = first_window_violation(colors.as_slice(), q.r) {
        return Err(VerifyError::Window {
            i,
            j,
            u: vs[i],
            v: vs[j],
            color: g.color_label(vs[i]),
            r: q.r,
        });
    }
    if !q.mode.admits(w.len(), q.ell) {
        return Err(VerifyError::Length {
            len: w.len(),
            ell: q.ell,
            mode: q.mode,
        });
    }
    if require_path {
        let mut seen = std::collections::HashMap::new();
        for (pos, &v) in vs.iter().enumerate() {
            if let Some(&first) = seen.get(&v) {
                return Err(VerifyError::Repeated {
                    vertex: v,
                    first,
                    second: pos,
                });
            }
            seen.insert(v, pos);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> ColoredDigraph {
        // 0 -> 1 -> 2 -> 1 -> 3 and 0 -> 2
        ColoredDigraph::new(
            4,
            [(0, 1), (1, 2), (2, 1), (1, 3), (0, 2)],
            vec![0, 1, 2, 3],
            0,
            3,
        )
        .unwrap()
    }

    #[test]
    fn accepts_valid() {
        assert!(verify_witness(
            &g(),
            Query::at_most(2, 2),
            &Witness::new(vec![0, 1, 3]),
            true
        )
        .is_ok());
    }

    #[test]
    fn swapped_vertex() {
        let e = verify_witness(
            &g(),
            Query::at_most(2, 2),
            &Witness::new(vec![0, 2, 3]),
            false,
        )
        .unwrap_err();
        assert!(matches!(e, VerifyError::MissingArc { index: 1, .. }));
    }

    #[test]
    fn repeated_vertex_in_path_mode() {
        let w = Witness::new(vec![0, 1, 2, 1, 3]);
        assert!(verify_witness(&g(), Query::exactly(1, 4), &w, false).is_ok());
        let e = verify_witness(&g(), Query::exactly(1, 4), &w, true).unwrap_err();
        assert!(matches!(
            e,
            VerifyError::Repeated {
                vertex: 1,
                first: 1,
                second: 3
            }
        ));
        let e = verify_witness(&g(), Query::exactly(2, 4), &w, false).unwrap_err();
        assert!(matches!(e, VerifyError::Window { i: 1, j: 3, .. }));
    }

    #[test]
    fn length_and_endpoints() {
        let w = Witness::new(vec![0, 1, 3]);
        assert!(matches!(
            verify_witness(&g(), Query::exactly(1, 3), &w, false),
            Err(VerifyError::Length { .. })
        ));
        assert!(matches!(
            verify_witness(&g(), Query::at_most(1, 3), &Witness::new(vec![1, 3]), false),
            Err(VerifyError::WrongStart { .. })
        ));
    }
}
