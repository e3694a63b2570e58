//! The good-graph criterion.
//!
//! `g` is good (for ambient size `n` and uniformity `r`) if its vertices split
//! into `V1` with `|V1| = r - 2` and `V2` such that every `U ⊆ V2` has degree sum
//! at most `|U|(n - r + offset) - C(|U|, 2)`. Since the bound depends only on
//! `|U|`, it is enough to test, for each size `s`, the `s` largest degrees in `V2`.

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph, VertexId};

/// Default offset: bound `s(n - r + 1) - C(s, 2)`.
pub const DEFAULT_GOODNESS_OFFSET: i64 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessWitness {
    /// Graph vertices in `V1`; indices `>= g.n_vertices()` are padding by isolated ambient vertices.
    pub v1: Vec<VertexId>,
    pub v2: Vec<VertexId>,
    /// `margins[s - 1] = bound(s) - (sum of the s largest V2 degrees)`.
    pub margins: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goodness {
    Good(GoodnessWitness),
    /// Every choice of `V1` fails at some size `<= obstruction_size`.
    NotGood { obstruction_size: usize },
}

/// `s(n - r + offset) - C(s, 2)`.
pub fn goodness_bound(s: usize, n: usize, r: usize, offset: i64) -> i64 {
    let s = s as i64;
    s * (n as i64 - r as i64 + offset) - s * (s - 1) / 2
}

pub fn is_good(g: &Graph, n: usize, r: usize, offset: i64) -> Result<Option<GoodnessWitness>> {
    Ok(match goodness(g, n, r, offset)? {
        Goodness::Good(w) => Some(w),
        Goodness::NotGood { .. } => None,
    })
}

pub fn goodness(g: &Graph, n: usize, r: usize, offset: i64) -> Result<Goodness> {
    let nv = g.n_vertices();
    if nv > n {
        return Err(Error::InvalidParameters(format!(
            "graph has {nv} vertices, more than the ambient {n}"
        )));
    }
    if r < 2 {
        return Err(Error::InvalidParameters(format!("uniformity {r} < 2")));
    }
    let k = r - 2;
    let degrees = g.degrees();

    if k >= nv {
        // all graph vertices go to V1, padded with isolated ambient vertices
        if k > n {
            return Err(Error::InvalidParameters(format!(
                "|V1| = {k} exceeds the ambient {n} vertices"
            )));
        }
        return Ok(Goodness::Good(GoodnessWitness {
            v1: (0..k).collect(),
            v2: Vec::new(),
            margins: Vec::new(),
        }));
    }

    let mut by_degree: Vec<VertexId> = (0..nv).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
    let mut greedy = by_degree[..k].to_vec();
    greedy.sort_unstable();

    let mut worst_failure = 0;
    let candidates = std::iter::once(greedy.clone())
        .chain(combinations(nv, k).into_iter().filter(|c| *c != greedy));
    for v1 in candidates {
        match margins_for(&degrees, &v1, n, r, offset) {
            Ok(w) => return Ok(Goodness::Good(w)),
            Err(s) => worst_failure = worst_failure.max(s),
        }
    }
    Ok(Goodness::NotGood {
        obstruction_size: worst_failure,
    })
}

/// Witness for this `V1`, or the first failing size.
fn margins_for(
    degrees: &[usize],
    v1: &[VertexId],
    n: usize,
    r: usize,
    offset: i64,
) -> std::result::Result<GoodnessWitness, usize> {
    let v2: Vec<VertexId> = (0..degrees.len()).filter(|v| !v1.contains(v)).collect();
    let mut d: Vec<i64> = v2.iter().map(|&v| degrees[v] as i64).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let mut margins = Vec::with_capacity(d.len());
    let mut prefix = 0;
    for (i, x) in d.iter().enumerate() {
        prefix += x;
        let m = goodness_bound(i + 1, n, r, offset) - prefix;
        if m < 0 {
            return Err(i + 1);
        }
        margins.push(m);
    }
    Ok(GoodnessWitness {
        v1: v1.to_vec(),
        v2,
        margins,
    })
}
