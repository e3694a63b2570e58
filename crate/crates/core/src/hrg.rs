//! The HRG text format for colored uniform hypergraphs.
//!
//! ```text
//! # comment
//! r N c [complete]
//! E
//! v1 v2 ... vr color
//! ```
//!
//! Vertices on a line are strictly increasing; colors lie in `1..=c`. With the
//! `complete` flag the file must list all `C(N, r)` hyperedges. The serializer
//! writes lines in lexicographic hyperedge order.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::hypergraph::{Coloring, Hypergraph};

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or(Error::Format {
        line: 1,
        msg: "missing header".into(),
    })?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let complete = match fields.len() {
        3 => false,
        4 if fields[3] == "complete" => true,
        _ => {
            return Err(Error::Format {
                line: ln,
                msg: "header must be `r N c [complete]`".into(),
            })
        }
    };
    let num = |s: &str, what: &str| -> Result<usize> {
        s.parse().map_err(|_| Error::Format {
            line: ln,
            msg: format!("bad {what} {s:?}"),
        })
    };
    let r = num(fields[0], "uniformity")?;
    let n = num(fields[1], "vertex count")?;
    let c = num(fields[2], "color count")?;
    if r < 2 {
        return Err(Error::Range {
            line: ln,
            msg: format!("uniformity {r} < 2"),
        });
    }
    if c == 0 || c > u8::MAX as usize {
        return Err(Error::Range {
            line: ln,
            msg: format!("color count {c} outside 1..=255"),
        });
    }

    let (ln, count_line) = lines.next().ok_or(Error::Format {
        line: ln + 1,
        msg: "missing hyperedge count".into(),
    })?;
    let declared: usize = count_line.parse().map_err(|_| Error::Format {
        line: ln,
        msg: format!("bad hyperedge count {count_line:?}"),
    })?;

    let mut rows: Vec<(Vec<usize>, u8, usize)> = Vec::with_capacity(declared);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != r + 1 {
            return Err(Error::Format {
                line: ln,
                msg: format!("expected {r} vertices and a color, got {} fields", toks.len()),
            });
        }
        let mut vs = Vec::with_capacity(r);
        for t in &toks[..r] {
            let v: usize = t.parse().map_err(|_| Error::Format {
                line: ln,
                msg: format!("bad vertex {t:?}"),
            })?;
            if v >= n {
                return Err(Error::Range {
                    line: ln,
                    msg: format!("vertex {v} outside 0..{n}"),
                });
            }
            vs.push(v);
        }
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Format {
                line: ln,
                msg: "vertices must be distinct and increasing".into(),
            });
        }
        let color: usize = toks[r].parse().map_err(|_| Error::Format {
            line: ln,
            msg: format!("bad color {:?}", toks[r]),
        })?;
        if color == 0 || color > c {
            return Err(Error::Range {
                line: ln,
                msg: format!("color {color} outside 1..={c}"),
            });
        }
        rows.push((vs, color as u8, ln));
    }

    rows.sort();
    for w in rows.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(Error::Duplicate {
                line: w[0].2.max(w[1].2),
                edge: w[1].0.clone(),
            });
        }
    }
    if rows.len() != declared {
        return Err(Error::Format {
            line: 2,
            msg: format!("declared {declared} hyperedges, found {}", rows.len()),
        });
    }
    if complete {
        let expected = binomial(n, r);
        if rows.len() as u64 != expected {
            return Err(Error::Incomplete {
                missing: (expected - rows.len() as u64) as usize,
                expected: expected as usize,
            });
        }
    }

    let (edges, colors): (Vec<Vec<usize>>, Vec<u8>) =
        rows.into_iter().map(|(e, col, _)| (e, col)).unzip();
    let base = Hypergraph::new(r, n, edges).map_err(|e| Error::Format {
        line: 0,
        msg: e.to_string(),
    })?;
    Coloring::new(base, c as u8, colors)
}

pub fn serialize_coloring(col: &Coloring) -> String {
    serialize_with_comments(col, &[])
}

/// Serializes with leading `# ...` comment lines (one per entry).
pub fn serialize_with_comments(col: &Coloring, comments: &[String]) -> String {
    let base = col.base();
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!(
        "{} {} {}{}\n{}\n",
        base.uniformity(),
        base.n_vertices(),
        col.n_colors(),
        if base.is_complete() { " complete" } else { "" },
        base.n_edges()
    ));
    for (e, &c) in base.edges().iter().zip(col.colors()) {
        for v in e {
            out.push_str(&v.to_string());
            out.push(' ');
        }
        out.push_str(&c.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::complete_hypergraph;
    use proptest::prelude::*;

    const K53: &str = "3 5 2 complete\n10\n\
        0 1 2 1\n0 1 3 2\n0 1 4 1\n0 2 3 1\n0 2 4 2\n\
        0 3 4 1\n1 2 3 1\n1 2 4 2\n1 3 4 1\n2 3 4 2\n";

    #[test]
    fn parses_header_and_rows() {
        let col = parse_coloring(K53).unwrap();
        assert_eq!(col.base().uniformity(), 3);
        assert_eq!(col.base().n_vertices(), 5);
        assert_eq!(col.n_colors(), 2);
        assert_eq!(col.color_of(&[0, 1, 3]), Some(2));
        assert_eq!(serialize_coloring(&col), K53);
    }

    #[test]
    fn comments_and_shuffled_lines() {
        let text = "# hello\n3 4 1\n2\n# mid\n1 2 3 1\n0 1 2 1\n";
        let col = parse_coloring(text).unwrap();
        assert_eq!(col.base().edges(), &[vec![0, 1, 2], vec![1, 2, 3]]);
        assert_eq!(serialize_coloring(&col), "3 4 1\n2\n0 1 2 1\n1 2 3 1\n");
    }

    #[test]
    fn missing_hyperedge_under_complete_flag() {
        let text = K53.replace("10\n", "9\n").replace("2 3 4 2\n", "");
        assert!(matches!(
            parse_coloring(&text),
            Err(Error::Incomplete { missing: 1, expected: 10 })
        ));
    }

    #[test]
    fn repeated_vertex_is_a_format_error() {
        let text = "3 5 2\n1\n0 1 1 2\n";
        assert!(matches!(parse_coloring(text), Err(Error::Format { line: 3, .. })));
    }

    #[test]
    fn wrong_arity_reports_line() {
        let text = "3 5 2\n2\n0 1 2 1\n0 1 2\n";
        assert!(matches!(parse_coloring(text), Err(Error::Format { line: 4, .. })));
    }

    #[test]
    fn color_out_of_range() {
        let text = "3 5 2\n1\n0 1 2 3\n";
        assert!(matches!(parse_coloring(text), Err(Error::Range { line: 3, .. })));
    }

    #[test]
    fn duplicate_hyperedge() {
        let text = "3 5 2\n2\n0 1 2 1\n0 1 2 2\n";
        assert!(matches!(parse_coloring(text), Err(Error::Duplicate { .. })));
    }

    #[test]
    fn count_mismatch() {
        assert!(parse_coloring("3 5 2\n2\n0 1 2 1\n").is_err());
    }

    proptest! {
        #[test]
        fn round_trip(n in 3usize..8, r in 2usize..4, c in 1u8..4, seed in any::<u64>()) {
            prop_assume!(r <= n);
            let h = complete_hypergraph(n, r).unwrap();
            let mut s = seed;
            let colors: Vec<u8> = (0..h.n_edges()).map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                1 + ((s >> 33) % c as u64) as u8
            }).collect();
            // drop every third hyperedge on odd seeds to cover the non-complete path
            let keep: Vec<bool> = (0..h.n_edges()).map(|i| seed % 2 == 0 || i % 3 != 0).collect();
            let edges: Vec<Vec<usize>> = h.edges().iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e.clone()).collect();
            let colors: Vec<u8> = colors.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(c, _)| c).collect();
            let col = Coloring::new(Hypergraph::new(r, n, edges).unwrap(), c, colors).unwrap();
            let text = serialize_coloring(&col);
            let back = parse_coloring(&text).unwrap();
            prop_assert_eq!(&back, &col);
            prop_assert_eq!(serialize_coloring(&back), text);
        }
    }
}
