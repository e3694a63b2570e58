use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hrg::{parse_coloring, serialize_coloring};
use crate::hypergraph::{BergeEmbedding, Coloring, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    AllContain,
    Counterexample(Coloring),
}

impl Verdict {
    pub fn is_all_contain(&self) -> bool {
        matches!(self, Verdict::AllContain)
    }

    pub fn counterexample(&self) -> Option<&Coloring> {
        match self {
            Verdict::Counterexample(c) => Some(c),
            Verdict::AllContain => None,
        }
    }
}

/// A monochromatic Berge copy written in host terms: each graph edge, as the
/// pair of host vertices it lands on, with the hyperedge carrying it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub color: u8,
    pub pairs: Vec<(VertexId, VertexId, Vec<VertexId>)>,
}

impl WitnessRecord {
    pub fn from_embedding(color: u8, g: &Graph, emb: &BergeEmbedding) -> Self {
        let pairs = g
            .edges()
            .iter()
            .zip(&emb.edge_map)
            .map(|(&(u, v), he)| {
                let (a, b) = (emb.vertex_map[u], emb.vertex_map[v]);
                (a.min(b), a.max(b), he.clone())
            })
            .collect();
        WitnessRecord { color, pairs }
    }

    /// Each hyperedge holds its pair; pairs and hyperedges are pairwise distinct.
    pub fn is_consistent(&self) -> bool {
        let mut pairs: Vec<(VertexId, VertexId)> = self.pairs.iter().map(|p| (p.0, p.1)).collect();
        let mut hes: Vec<&Vec<VertexId>> = self.pairs.iter().map(|p| &p.2).collect();
        pairs.sort_unstable();
        hes.sort_unstable();
        let distinct = pairs.windows(2).all(|w| w[0] != w[1]) && hes.windows(2).all(|w| w[0] != w[1]);
        distinct
            && self
                .pairs
                .iter()
                .all(|(u, v, he)| u != v && he.contains(u) && he.contains(v))
    }

    /// `witness <color> u-v:h1,h2,... ...`
    pub fn to_line(&self) -> String {
        let mut s = format!("witness {}", self.color);
        for (u, v, he) in &self.pairs {
            let vs: Vec<String> = he.iter().map(|x| x.to_string()).collect();
            let _ = write!(s, " {u}-{v}:{}", vs.join(","));
        }
        s
    }

    fn parse_line(line: &str, ln: usize) -> Result<Self> {
        let bad = |msg: &str| Error::Format {
            line: ln,
            msg: msg.to_string(),
        };
        let mut fields = line.split_whitespace();
        fields.next();
        let color: u8 = fields
            .next()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad("witness color"))?;
        let mut pairs = Vec::new();
        for item in fields {
            let (pair, he) = item.split_once(':').ok_or_else(|| bad("expected u-v:h1,h2,..."))?;
            let (u, v) = pair.split_once('-').ok_or_else(|| bad("expected u-v"))?;
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad("bad vertex"));
            let he = he.split(',').map(num).collect::<Result<Vec<_>>>()?;
            pairs.push((num(u)?, num(v)?, he));
        }
        Ok(WitnessRecord { color, pairs })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    pub verdict: Verdict,
    /// Full colorings reached by the enumeration.
    pub colorings_enumerated: u64,
    /// Orbits among the enumerated colorings; absent when the vertex count is
    /// above the canonicalization cap.
    pub canonical_classes: Option<u64>,
    /// Witnesses for the first few enumerated colorings (only under `AllContain`).
    pub witnesses: Vec<WitnessRecord>,
}

impl SearchCertificate {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = match self.verdict {
            Verdict::AllContain => "ALL_CONTAIN",
            Verdict::Counterexample(_) => "COUNTEREXAMPLE",
        };
        let classes = self
            .canonical_classes
            .map_or_else(|| "na".to_string(), |c| c.to_string());
        let _ = writeln!(out, "verdict {verdict}");
        let _ = writeln!(out, "enumerated {} classes {classes}", self.colorings_enumerated);
        if let Verdict::Counterexample(col) = &self.verdict {
            out.push_str(&serialize_coloring(col));
        }
        for w in &self.witnesses {
            out.push_str(&w.to_line());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<SearchCertificate> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let format = |line: usize, msg: &str| Error::Format {
            line,
            msg: msg.to_string(),
        };
        let (ln, first) = *lines.first().ok_or_else(|| format(1, "empty certificate"))?;
        let counterexample = match first {
            "verdict ALL_CONTAIN" => false,
            "verdict COUNTEREXAMPLE" => true,
            _ => return Err(format(ln, "expected `verdict ALL_CONTAIN|COUNTEREXAMPLE`")),
        };
        let (ln, second) = *lines.get(1).ok_or_else(|| format(ln + 1, "missing statistics"))?;
        let f: Vec<&str> = second.split_whitespace().collect();
        if f.len() != 4 || f[0] != "enumerated" || f[2] != "classes" {
            return Err(format(ln, "expected `enumerated <count> classes <count>`"));
        }
        let colorings_enumerated = f[1].parse().map_err(|_| format(ln, "bad count"))?;
        let canonical_classes = match f[3] {
            "na" => None,
            s => Some(s.parse().map_err(|_| format(ln, "bad class count"))?),
        };
        let body = &lines[2..];
        let split = body
            .iter()
            .position(|(_, l)| l.starts_with("witness"))
            .unwrap_or(body.len());
        let verdict = if counterexample {
            if split == 0 {
                return Err(format(ln + 1, "counterexample without an HRG block"));
            }
            let hrg: String = body[..split].iter().map(|(_, l)| format!("{l}\n")).collect();
            Verdict::Counterexample(parse_coloring(&hrg)?)
        } else {
            if split != 0 {
                return Err(format(body[0].0, "unexpected content after statistics"));
            }
            Verdict::AllContain
        };
        let witnesses = body[split..]
            .iter()
            .map(|&(ln, l)| WitnessRecord::parse_line(l, ln))
            .collect::<Result<Vec<_>>>()?;
        Ok(SearchCertificate {
            verdict,
            colorings_enumerated,
            canonical_classes,
            witnesses,
        })
    }
}
