//! Explicit lower-bound colorings of complete uniform hypergraphs. Distinguished
//! vertices always take the lowest indices.

use crate::constructions::erdos::{erdos_coloring, ErdosColoring};
use crate::error::{Error, Result};
use crate::hypergraph::{Coloring, Hypergraph, VertexId};

/// Attempts granted to each Erdős draw inside the recursive construction.
pub const PROP4_ERDOS_ATTEMPTS: usize = 100;

fn count_in(e: &[VertexId], lo: usize, hi: usize) -> usize {
    e.iter().filter(|&&v| v >= lo && v < hi).count()
}

/// `r = 2c`, distinguished pairs `(2i, 2i+1)` for `i < c - 1`. A hyperedge holding
/// every distinguished vertex gets color `c`; any other gets the first `i` whose
/// pair it does not contain.
pub fn construct_theorem2_lower(n: usize, c: u8) -> Result<Coloring> {
    if c < 2 {
        return Err(Error::InvalidParameters(format!("need c >= 2, got {c}")));
    }
    let r = 2 * c as usize;
    if n < r {
        return Err(Error::InvalidParameters(format!("need n >= r = {r}, got {n}")));
    }
    let core = r - 2;
    Coloring::from_fn(Hypergraph::complete_or_empty(n, r)?, c, |e| {
        (1..c)
            .find(|&i| count_in(e, 2 * (i as usize - 1), 2 * i as usize) <= 1)
            .unwrap_or_else(|| {
                debug_assert_eq!(count_in(e, 0, core), core);
                c
            })
    })
}

/// Part size `⌊(n-2)/(c-1)⌋` used by [`construct_theorem3i_lower`].
pub fn theorem3i_part_size(n: usize, c: u8) -> usize {
    n.saturating_sub(2) / (c as usize - 1)
}

/// `c` equal parts; each hyperedge takes the first part it meets at most once.
pub fn construct_theorem3i_lower(n: usize, c: u8, r: usize) -> Result<Coloring> {
    if r <= 2 || r >= 2 * c as usize {
        return Err(Error::InvalidParameters(format!(
            "need 2 < r < 2c, got r={r} c={c}"
        )));
    }
    let s = theorem3i_part_size(n, c);
    if s == 0 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} gives empty parts for c = {c}"
        )));
    }
    let big_n = c as usize * s;
    Coloring::from_fn(Hypergraph::complete_or_empty(big_n, r)?, c, |e| {
        (1..=c)
            .find(|&i| count_in(e, (i as usize - 1) * s, i as usize * s) <= 1)
            .expect("r < 2c leaves a part met at most once")
    })
}

/// Output of the recursive 3-uniform construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop4Coloring {
    pub coloring: Coloring,
    /// Pair colors `(u, v, color)` from every Erdős layer, in global vertex labels.
    pub pair_colors: Vec<(VertexId, VertexId, u8)>,
    /// Part count per recursion layer, innermost first.
    pub parts: Vec<usize>,
}

/// Recursive `c`-coloring of `𝒦_N^3` with no monochromatic Berge-`K_n`.
///
/// `c ≤ 2`: everything gets color 1 on `n - 1` vertices. Otherwise copies of the
/// `(c-2)`-coloring fill `⌊n / (2(c-2)⌊log₂ n⌋)⌋` parts; a hyperedge with exactly
/// two vertices in one part takes that pair's Erdős color shifted to `{c-1, c}`,
/// and one meeting three parts gets `c`.
pub fn construct_prop4(n: usize, c: u8, seed: u64) -> Result<Prop4Coloring> {
    if c == 0 {
        return Err(Error::InvalidParameters("need c >= 1".into()));
    }
    if n < 2 {
        return Err(Error::InvalidParameters(format!("need n >= 2, got {n}")));
    }
    if c <= 2 {
        let base = Hypergraph::complete_or_empty(n - 1, 3)?;
        return Ok(Prop4Coloring {
            coloring: Coloring::monochromatic(base, c, 1)?,
            pair_colors: Vec::new(),
            parts: Vec::new(),
        });
    }
    let inner = construct_prop4(n, c - 2, seed)?;
    let h = inner.coloring.base().n_vertices();
    let log = n.ilog2() as usize;
    let p = n / (2 * (c as usize - 2) * log);
    if p == 0 {
        return Err(Error::InvalidParameters(format!(
            "n = {n} yields no parts at c = {c}"
        )));
    }
    let total = p * h;
    if total > crate::hypergraph::MAX_HYPERGRAPH_VERTICES {
        return Err(Error::Unsupported(format!("{total} vertices")));
    }
    let erdos: ErdosColoring =
        erdos_coloring(h, seed.wrapping_add(c as u64), PROP4_ERDOS_ATTEMPTS)?;
    let shift = |x: u8| c - 2 + x;

    let coloring = Coloring::from_fn(Hypergraph::complete_or_empty(total, 3)?, c, |e| {
        let part: Vec<usize> = e.iter().map(|&v| v / h).collect();
        let local: Vec<usize> = e.iter().map(|&v| v % h).collect();
        match (part[0] == part[1], part[1] == part[2], part[0] == part[2]) {
            (true, true, _) => inner
                .coloring
                .color_of(&local)
                .expect("part-internal triple"),
            (true, false, _) => shift(erdos.color(local[0], local[1])),
            (false, true, _) => shift(erdos.color(local[1], local[2])),
            (false, false, true) => shift(erdos.color(local[0], local[2])),
            (false, false, false) => c,
        }
    })?;

    let mut pair_colors = Vec::new();
    for q in 0..p {
        let off = q * h;
        for &(u, v, col) in &inner.pair_colors {
            pair_colors.push((u + off, v + off, col));
        }
        for u in 0..h {
            for v in u + 1..h {
                pair_colors.push((u + off, v + off, shift(erdos.color(u, v))));
            }
        }
    }
    let mut parts = inner.parts;
    parts.push(p);
    Ok(Prop4Coloring {
        coloring,
        pair_colors,
        parts,
    })
}

/// 2-coloring of `𝒦_{n+m-4}^3` with `U = 0..m-2`: at least two vertices in `U`
/// makes a hyperedge red (2), otherwise blue (1).
pub fn construct_prop5_lower(n: usize, m: usize) -> Result<Coloring> {
    if !(n >= m && m > 1) {
        return Err(Error::InvalidParameters(format!(
            "need n >= m > 1, got n={n} m={m}"
        )));
    }
    let u = m - 2;
    Coloring::from_fn(Hypergraph::complete_or_empty(n + m - 4, 3)?, 2, |e| {
        if count_in(e, 0, u) >= 2 {
            2
        } else {
            1
        }
    })
}

/// 2-coloring of `𝒦_{2k-2}^3` with `A = 0..k-1`: at least two vertices in `A`
/// makes a hyperedge red (2), otherwise blue (1).
pub fn construct_prop7_lower(k: usize) -> Result<Coloring> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    Coloring::from_fn(Hypergraph::complete_or_empty(2 * k - 2, 3)?, 2, |e| {
        if count_in(e, 0, k - 1) >= 2 {
            2
        } else {
            1
        }
    })
}

/// `𝒦_5^3` with the five consecutive triples `{i, i+1, i+2} mod 5` blue (1), the rest red (2).
pub fn construct_s5_cyclic() -> Coloring {
    let base = Hypergraph::complete_or_empty(5, 3).expect("K_5^3");
    Coloring::from_fn(base, 2, |e| {
        let consecutive = (0..5).any(|i| {
            let mut t = [i, (i + 1) % 5, (i + 2) % 5];
            t.sort_unstable();
            t == e
        });
        if consecutive {
            1
        } else {
            2
        }
    })
    .expect("valid coloring")
}
