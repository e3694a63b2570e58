use crate::hypergraph::{Coloring, Graph, Hypergraph, VertexId};

/// Pairs covered by at least `threshold` hyperedges, with exact cover counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowGraph {
    pub graph: Graph,
    pub threshold: usize,
    n: usize,
    multiplicity: Vec<u32>,
}

impl ShadowGraph {
    /// Number of hyperedges containing `{u, v}` (counted regardless of the threshold).
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> u32 {
        self.multiplicity[u * self.n + v]
    }
}

/// Threshold-`t` shadow of `h`. `t` is clamped to at least 1.
pub fn shadow(h: &Hypergraph, t: usize) -> ShadowGraph {
    let n = h.n_vertices();
    let mut multiplicity = vec![0u32; n * n];
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                multiplicity[u * n + v] += 1;
                multiplicity[v * n + u] += 1;
            }
        }
    }
    let t = t.max(1) as u32;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if multiplicity[u * n + v] >= t {
                edges.push((u, v));
            }
        }
    }
    ShadowGraph {
        graph: Graph::new(n, edges).expect("shadow edges are valid"),
        threshold: t as usize,
        n,
        multiplicity,
    }
}

/// Shadow of the color-`color` class of `col`.
pub fn shadow_colored(col: &Coloring, color: u8, t: usize) -> ShadowGraph {
    shadow(&col.class(color), t)
}
