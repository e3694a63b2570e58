//! Three-step embedding of a good graph into the hyperedges through a fixed
//! `(r-2)`-set `U1`.
//!
//! 1. Each edge inside `V2` goes to `{α(u), α(v)} ∪ U1`.
//! 2. Crossing edges (`V1`-`V2`) are matched into the remaining hyperedges.
//! 3. Edges inside `V1` lie in every hyperedge, so they take any leftover ones.

use crate::engine::gamma::{berge_matching, build_gamma, MatchOutcome};
use crate::error::{Error, Result};
use crate::hypergraph::{BergeEmbedding, Graph, Hypergraph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodEmbedding {
    Embedded(BergeEmbedding),
    /// Step 2 failed: these crossing edges (graph vertex pairs) have too few hyperedges.
    HallFailure { crossing_edges: Vec<(VertexId, VertexId)> },
    /// Step 3 failed: not enough unused hyperedges for the edges inside `V1`.
    Exhausted { needed: usize, available: usize },
}

impl GoodEmbedding {
    pub fn embedding(&self) -> Option<&BergeEmbedding> {
        match self {
            GoodEmbedding::Embedded(e) => Some(e),
            _ => None,
        }
    }
}

/// The identity-ordered α: sorted `v1` onto sorted `u1`, the other graph vertices
/// in increasing order onto the first vertices of `u2`.
pub fn default_alpha(g: &Graph, v1: &[VertexId], u1: &[VertexId], u2: &[VertexId]) -> Result<Vec<VertexId>> {
    if v1.len() != u1.len() {
        return Err(Error::InvalidParameters(format!(
            "|V1| = {} but |U1| = {}",
            v1.len(),
            u1.len()
        )));
    }
    let mut v1s = v1.to_vec();
    v1s.sort_unstable();
    let mut u1s = u1.to_vec();
    u1s.sort_unstable();
    let v2: Vec<VertexId> = (0..g.n_vertices()).filter(|v| !v1s.contains(v)).collect();
    if v2.len() > u2.len() {
        return Err(Error::InvalidParameters(format!(
            "|V2| = {} exceeds |U2| = {}",
            v2.len(),
            u2.len()
        )));
    }
    let mut alpha = vec![0; g.n_vertices()];
    for (v, u) in v1s.iter().zip(&u1s) {
        alpha[*v] = *u;
    }
    for (v, u) in v2.iter().zip(u2) {
        alpha[*v] = *u;
    }
    Ok(alpha)
}

/// Runs the three steps. `core` must consist of hyperedges that all contain
/// `U1 = α(V1)` with `|U1| = r - 2`.
pub fn embed_good_graph(
    core: &Hypergraph,
    g: &Graph,
    v1: &[VertexId],
    alpha: &[VertexId],
) -> Result<GoodEmbedding> {
    let r = core.uniformity();
    let n = g.n_vertices();
    if alpha.len() != n {
        return Err(Error::PreconditionViolated("α must map every graph vertex".into()));
    }
    let mut seen = vec![false; core.n_vertices()];
    for &x in alpha {
        if x >= core.n_vertices() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::PreconditionViolated("α is not injective".into()));
        }
    }
    if v1.len() + 2 != r {
        return Err(Error::PreconditionViolated(format!(
            "|V1| = {} but r - 2 = {}",
            v1.len(),
            r - 2
        )));
    }
    let mut in_v1 = vec![false; n];
    for &v in v1 {
        in_v1[v] = true;
    }
    let u1_mask = v1.iter().fold(0u64, |m, &v| m | (1u64 << alpha[v]));
    if core.masks().iter().any(|&h| h & u1_mask != u1_mask) {
        return Err(Error::PreconditionViolated(
            "every core hyperedge must contain U1".into(),
        ));
    }

    let mut edge_map: Vec<Option<Vec<VertexId>>> = vec![None; g.n_edges()];
    let mut used = vec![false; core.n_edges()];

    // step 1
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if in_v1[u] || in_v1[v] {
            continue;
        }
        let mask = u1_mask | (1u64 << alpha[u]) | (1u64 << alpha[v]);
        let idx = core
            .masks()
            .iter()
            .position(|&h| h == mask)
            .ok_or_else(|| {
                Error::PreconditionViolated(format!(
                    "core lacks the hyperedge U1 + {{{}, {}}}",
                    alpha[u], alpha[v]
                ))
            })?;
        used[idx] = true;
        edge_map[i] = Some(core.edge(idx).to_vec());
    }

    // step 2
    let rest: Vec<usize> = (0..core.n_edges()).filter(|&i| !used[i]).collect();
    let h_rest = Hypergraph::new(
        r,
        core.n_vertices(),
        rest.iter().map(|&i| core.edge(i).to_vec()).collect(),
    )?;
    let crossing: Vec<usize> = (0..g.n_edges())
        .filter(|&i| {
            let (u, v) = g.edges()[i];
            in_v1[u] != in_v1[v]
        })
        .collect();
    let images: Vec<(VertexId, VertexId)> = crossing
        .iter()
        .map(|&i| {
            let (u, v) = g.edges()[i];
            (alpha[u], alpha[v])
        })
        .collect();
    let gamma = build_gamma(&h_rest, &images);
    match berge_matching(&gamma) {
        MatchOutcome::Saturating(assign) => {
            for (k, &b) in assign.iter().enumerate() {
                let he = gamma.part_b[b].clone();
                let idx = core.index_of(&he).expect("hyperedge from core");
                used[idx] = true;
                edge_map[crossing[k]] = Some(he);
            }
        }
        MatchOutcome::Blocked(violator) => {
            return Ok(GoodEmbedding::HallFailure {
                crossing_edges: violator
                    .edges
                    .iter()
                    .map(|&k| g.edges()[crossing[k]])
                    .collect(),
            })
        }
    }

    // step 3
    let inner: Vec<usize> = (0..g.n_edges()).filter(|&i| edge_map[i].is_none()).collect();
    let mut leftover = (0..core.n_edges()).filter(|&i| !used[i]);
    let available = used.iter().filter(|&&u| !u).count();
    for &i in &inner {
        match leftover.next() {
            Some(idx) => edge_map[i] = Some(core.edge(idx).to_vec()),
            None => {
                return Ok(GoodEmbedding::Exhausted {
                    needed: inner.len(),
                    available,
                })
            }
        }
    }

    Ok(GoodEmbedding::Embedded(BergeEmbedding {
        vertex_map: alpha.to_vec(),
        edge_map: edge_map.into_iter().map(|e| e.expect("all edges placed")).collect(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::complete_hypergraph;

    fn core_through(n: usize, r: usize, u1: &[usize]) -> Hypergraph {
        let mask = u1.iter().fold(0u64, |m, &v| m | (1 << v));
        complete_hypergraph(n, r)
            .unwrap()
            .filter(|e| e.iter().fold(0u64, |m, &v| m | (1 << v)) & mask == mask)
    }

    #[test]
    fn edgeless_graph_embeds_trivially() {
        let core = core_through(8, 4, &[0, 1]);
        let g = Graph::edgeless(4);
        let alpha = default_alpha(&g, &[0, 1], &[0, 1], &[2, 3, 4, 5, 6, 7]).unwrap();
        let out = embed_good_graph(&core, &g, &[0, 1], &alpha).unwrap();
        assert_eq!(out.embedding().unwrap().edge_map.len(), 0);
    }

    #[test]
    fn star_with_center_in_v1() {
        let (n, r) = (12, 4);
        let core = core_through(n, r, &[0, 1]);
        let g = Graph::star(12);
        let u2: Vec<usize> = (2..n).collect();
        let alpha = default_alpha(&g, &[0, 1], &[0, 1], &u2).unwrap();
        let out = embed_good_graph(&core, &g, &[0, 1], &alpha).unwrap();
        let emb = out.embedding().expect("star embeds");
        emb.validate(&g, &core).unwrap();
    }

    #[test]
    fn full_degree_v2_vertex_blocks_step_two() {
        // n = 6, r = 4: vertex 2 of the star is adjacent to everything
        let core = core_through(6, 4, &[0, 1]);
        let g = Graph::new(6, (0..6).filter(|&v| v != 2).map(|v| (2, v))).unwrap();
        let alpha: Vec<usize> = (0..6).collect();
        match embed_good_graph(&core, &g, &[0, 1], &alpha).unwrap() {
            GoodEmbedding::HallFailure { crossing_edges } => {
                assert_eq!(crossing_edges, vec![(0, 2), (1, 2)]);
            }
            other => panic!("expected Hall failure, got {other:?}"),
        }
    }

    #[test]
    fn v1_internal_edges_can_exhaust() {
        // r = 5 leaves room for three V1-internal edges but U1 determines two of the five vertices
        let core = Hypergraph::new(5, 6, vec![vec![0, 1, 2, 3, 4]]).unwrap();
        let g = Graph::complete(3);
        let alpha = vec![0, 1, 2];
        match embed_good_graph(&core, &g, &[0, 1, 2], &alpha).unwrap() {
            GoodEmbedding::Exhausted { needed, available } => {
                assert_eq!((needed, available), (3, 1));
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn rejects_core_missing_u1() {
        let core = complete_hypergraph(6, 4).unwrap();
        let g = Graph::path(3);
        assert!(embed_good_graph(&core, &g, &[0, 1], &[0, 1, 2]).is_err());
    }
}
