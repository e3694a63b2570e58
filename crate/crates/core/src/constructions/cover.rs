use crate::error::{Error, Result};
use crate::hypergraph::Graph;

pub const MAX_COVER_VERTICES: usize = 20;

/// Minimum vertex cover size, by branching on a maximum-degree vertex `v`:
/// either `v` is in the cover or all of its neighbours are.
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    let n = g.n_vertices();
    if n > MAX_COVER_VERTICES {
        return Err(Error::Unsupported(format!(
            "vertex cover capped at {MAX_COVER_VERTICES} vertices, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let alive = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut best = n;
    branch(&adj, alive, 0, &mut best);
    Ok(best)
}

fn branch(adj: &[u32], alive: u32, taken: usize, best: &mut usize) {
    let mut max_deg = 0;
    let mut pick = 0;
    let mut edges2 = 0;
    let mut rest = alive;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & alive).count_ones() as usize;
        edges2 += d;
        if d > max_deg {
            max_deg = d;
            pick = v;
        }
    }
    if max_deg == 0 {
        *best = (*best).min(taken);
        return;
    }
    // each cover vertex handles at most max_deg of the remaining edges
    let lower = (edges2 / 2).div_ceil(max_deg);
    if taken + lower >= *best {
        return;
    }
    branch(adj, alive & !(1 << pick), taken + 1, best);
    let nbrs = adj[pick] & alive;
    branch(
        adj,
        alive & !nbrs & !(1 << pick),
        taken + nbrs.count_ones() as usize,
        best,
    );
}
