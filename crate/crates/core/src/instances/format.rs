//! Line-oriented text formats for instances, witnesses and set families.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{ColoredDigraph, LengthMode, Query, Vertex, Witness};

/// Non-blank lines with `#` comments removed, paired with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn numbers<T: std::str::FromStr>(
    line_no: usize,
    line: &str,
    what: &str,
) -> Result<Vec<T>, ParseError> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| ParseError::new(line_no, format!("bad {what} '{tok}'")))
        })
        .collect()
}

/// Parses
///
/// ```text
/// rainbow 1
/// n m
/// c_0 ... c_{n-1}
/// u v            (m lines)
/// s t r ell mode (mode: atmost | exact | any)
/// ```
pub fn parse_instance(text: &str) -> Result<(ColoredDigraph, Query), ParseError> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError::new(text.lines().count().max(1), format!("missing {what}")))
    };

    let (ln, header) = next("header")?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 2 || parts[0] != "rainbow" {
        return Err(ParseError::new(ln, "expected header 'rainbow 1'"));
    }
    if parts[1] != "1" {
        return Err(ParseError::new(
            ln,
            format!("unsupported format version {}", parts[1]),
        ));
    }

    let (ln, counts) = next("vertex and arc counts")?;
    let counts: Vec<usize> = numbers(ln, counts, "count")?;
    let [n, m] = counts[..] else {
        return Err(ParseError::new(ln, "expected 'n m'"));
    };

    let (ln, colors) = next("color line")?;
    let labels: Vec<u64> = numbers(ln, colors, "color")?;
    if labels.len() != n {
        return Err(ParseError::new(
            ln,
            format!("expected {n} colors, found {}", labels.len()),
        ));
    }

    let mut arcs = Vec::with_capacity(m);
    for i in 0..m {
        let (ln, line) = next(&format!("arc {} of {m}", i + 1))?;
        let ends: Vec<Vertex> = numbers(ln, line, "vertex")?;
        let [u, v] = ends[..] else {
            return Err(ParseError::new(ln, "expected an arc 'u v'"));
        };
        if u >= n || v >= n {
            return Err(ParseError::new(
                ln,
                format!("arc ({u}, {v}) leaves [0, {n})"),
            ));
        }
        if u == v {
            return Err(ParseError::new(ln, format!("self-loop at vertex {u}")));
        }
        arcs.push((u, v));
    }

    let (ln, last) = next("query line 's t r ell mode'")?;
    let parts: Vec<&str> = last.split_whitespace().collect();
    if parts.len() != 5 {
        return Err(ParseError::new(ln, "expected 's t r ell mode'"));
    }
    let nums: Vec<usize> = numbers(ln, &parts[..4].join(" "), "number")?;
    let (s, t, r, ell) = (nums[0], nums[1], nums[2], nums[3]);
    let mode = LengthMode::parse(parts[4]).ok_or_else(|| {
        ParseError::new(
            ln,
            format!("unknown mode '{}' (atmost, exact, any)", parts[4]),
        )
    })?;
    if s >= n || t >= n {
        return Err(ParseError::new(
            ln,
            format!("terminal out of range [0, {n})"),
        ));
    }
    if s == t {
        return Err(ParseError::new(ln, "s and t must differ"));
    }
    if let Some((extra, _)) = lines.next() {
        return Err(ParseError::new(
            extra,
            "unexpected content after the query line",
        ));
    }
    let g = ColoredDigraph::new(n, arcs, labels, s, t)
        .map_err(|e| ParseError::new(ln, e.to_string()))?;
    Ok((g, Query { r, ell, mode }))
}

/// Inverse of [`parse_instance`].
pub fn write_instance(g: &ColoredDigraph, q: &Query) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rainbow 1");
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.arc_count());
    let labels: Vec<String> = g.color_labels().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "{}", labels.join(" "));
    for &(u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    let _ = writeln!(
        out,
        "{} {} {} {} {}",
        g.source(),
        g.target(),
        q.r,
        q.ell,
        q.mode
    );
    out
}

/// `NO` or `YES L v0 ... vL`.
pub fn format_witness(w: Option<&Witness>) -> String {
    match w {
        Some(w) => w.to_string(),
        None => "NO".to_string(),
    }
}

/// Reads a witness file; `Ok(None)` for `NO`.
pub fn parse_witness(text: &str) -> Result<Option<Witness>, ParseError> {
    let (ln, line) = content_lines(text)
        .next()
        .ok_or_else(|| ParseError::new(1, "empty witness"))?;
    let mut toks = line.split_whitespace();
    match toks.next() {
        Some("NO") => Ok(None),
        Some("YES") => {
            let rest: Vec<usize> = numbers(ln, &toks.collect::<Vec<_>>().join(" "), "number")?;
            let Some((&len, verts)) = rest.split_first() else {
                return Err(ParseError::new(ln, "missing length"));
            };
            if verts.len() != len + 1 {
                return Err(ParseError::new(
                    ln,
                    format!(
                        "length {len} needs {} vertices, found {}",
                        len + 1,
                        verts.len()
                    ),
                ));
            }
            Ok(Some(Witness::new(verts.to_vec())))
        }
        _ => Err(ParseError::new(ln, "expected 'YES' or 'NO'")),
    }
}

/// One set per line, cells written `i,j` separated by spaces.
pub fn parse_phs_sets(text: &str) -> Result<Vec<Vec<(usize, usize)>>, ParseError> {
    content_lines(text)
        .map(|(ln, line)| {
            line.split_whitespace()
                .map(|tok| {
                    let (a, b) = tok.split_once(',').ok_or_else(|| {
                        ParseError::new(ln, format!("expected 'i,j', got '{tok}'"))
                    })?;
                    let i = a
                        .trim()
                        .parse()
                        .map_err(|_| ParseError::new(ln, format!("bad index '{a}'")))?;
                    let j = b
                        .trim()
                        .parse()
                        .map_err(|_| ParseError::new(ln, format!("bad index '{b}'")))?;
                    Ok((i, j))
                })
                .collect()
        })
        .collect()
}

pub fn write_phs_sets(sets: &[Vec<(usize, usize)>]) -> String {
    let mut out = String::new();
    for f in sets {
        let cells: Vec<String> = f.iter().map(|(i, j)| format!("{i},{j}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "rainbow 1\n2 1\n5 9\n0 1\n0 1 1 1 atmost\n";

    #[test]
    fn minimal_round_trip() {
        let (g, q) = parse_instance(MINIMAL).unwrap();
        assert_eq!(write_instance(&g, &q), MINIMAL);
        assert_eq!(parse_instance(&write_instance(&g, &q)).unwrap(), (g, q));
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# an instance\nrainbow 1\n\n2 1 # counts\n5 9\n0 1\n\n0 1 1 1 exact\n# end\n";
        let (g, q) = parse_instance(text).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(q.mode, LengthMode::Exactly);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_instance("rainbow 1\n2 1\n5 9\n1 1\n0 1 1 1 atmost\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_instance("rainbow 1\n2 1\n5 9\n0 7\n0 1 1 1 atmost\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_instance("rainbow 1\n2 1\n5\n0 1\n0 1 1 1 atmost\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_instance("rainbow 1\n2 1\n5 9\n0 1\n0 1 1 1 sometimes\n").unwrap_err();
        assert_eq!(e.line, 5);
        let e = parse_instance("rainbow 2\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let (g, _) = parse_instance("rainbow 1\n2 2\n5 9\n0 1\n0 1\n0 1 1 1 atmost\n").unwrap();
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn witness_formats() {
        let w = Witness::new(vec![0, 3, 1]);
        assert_eq!(format_witness(Some(&w)), "YES 2 0 3 1");
        assert_eq!(parse_witness("YES 2 0 3 1\n").unwrap(), Some(w));
        assert_eq!(parse_witness("NO\n").unwrap(), None);
        assert!(parse_witness("YES 3 0 1\n").is_err());
    }

    #[test]
    fn phs_sets_round_trip() {
        let sets = vec![vec![(1, 2), (2, 2)], vec![(3, 1)]];
        assert_eq!(parse_phs_sets(&write_phs_sets(&sets)).unwrap(), sets);
    }
}
