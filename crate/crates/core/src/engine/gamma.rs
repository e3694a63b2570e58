//! The edge/hyperedge incidence bipartite graph and saturating matchings on it.

use std::collections::VecDeque;

use crate::hypergraph::{Coloring, Hypergraph, VertexId};

/// Bipartite graph between a set of graph edges (side A) and the hyperedges
/// containing at least one of them (side B).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxiliaryBipartite {
    pub part_a: Vec<(VertexId, VertexId)>,
    pub part_b: Vec<Vec<VertexId>>,
    /// `adjacency[a]` lists the B positions whose hyperedge contains edge `a`.
    pub adjacency: Vec<Vec<usize>>,
}

impl AuxiliaryBipartite {
    /// Degree of each B vertex.
    pub fn b_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.part_b.len()];
        for list in &self.adjacency {
            for &b in list {
                deg[b] += 1;
            }
        }
        deg
    }
}

/// Builds the incidence graph of `e0` against the hyperedges of `h`.
pub fn build_gamma(h: &Hypergraph, e0: &[(VertexId, VertexId)]) -> AuxiliaryBipartite {
    let pair_masks: Vec<u64> = e0.iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect();
    let mut part_b = Vec::new();
    let mut adjacency = vec![Vec::new(); e0.len()];
    for (idx, &hm) in h.masks().iter().enumerate() {
        let mut hit = false;
        for (a, &pm) in pair_masks.iter().enumerate() {
            if hm & pm == pm {
                adjacency[a].push(part_b.len());
                hit = true;
            }
        }
        if hit {
            part_b.push(h.edge(idx).to_vec());
        }
    }
    AuxiliaryBipartite {
        part_a: e0.to_vec(),
        part_b,
        adjacency,
    }
}

/// The same graph with side B restricted to hyperedges of color `color`.
pub fn build_gamma_colored(
    col: &Coloring,
    color: u8,
    e0: &[(VertexId, VertexId)],
) -> AuxiliaryBipartite {
    build_gamma(&col.class(color), e0)
}

/// A subset of side A whose neighbourhood is smaller than itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    /// Positions in `part_a`.
    pub edges: Vec<usize>,
    /// Positions in `part_b` forming `N(edges)`.
    pub neighbors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchOutcome {
    /// `assignment[a]` is the B position matched to A vertex `a`.
    Saturating(Vec<usize>),
    Blocked(HallViolator),
}

impl MatchOutcome {
    pub fn assignment(&self) -> Option<&[usize]> {
        match self {
            MatchOutcome::Saturating(m) => Some(m),
            MatchOutcome::Blocked(_) => None,
        }
    }
}

/// Maximum matching of `gamma`; saturating if side A can be covered, else a Hall violator.
pub fn berge_matching(gamma: &AuxiliaryBipartite) -> MatchOutcome {
    let n_b = gamma.part_b.len();
    let matching = hopcroft_karp(&gamma.adjacency, n_b);
    if matching.size == gamma.part_a.len() {
        return MatchOutcome::Saturating(
            matching.match_a.iter().map(|&b| b as usize).collect(),
        );
    }
    MatchOutcome::Blocked(hall_violator(&gamma.adjacency, n_b, &matching))
}

const FREE: u32 = u32::MAX;

pub(crate) struct Matching {
    pub(crate) match_a: Vec<u32>,
    pub(crate) match_b: Vec<u32>,
    pub(crate) size: usize,
}

/// Hopcroft-Karp on adjacency lists from side A into `0..n_b`.
pub(crate) fn hopcroft_karp(adj: &[Vec<usize>], n_b: usize) -> Matching {
    let n_a = adj.len();
    let mut match_a = vec![FREE; n_a];
    let mut match_b = vec![FREE; n_b];
    let mut dist = vec![u32::MAX; n_a];
    let mut size = 0;
    let mut queue = VecDeque::new();
    loop {
        // layered BFS from free A vertices
        queue.clear();
        for a in 0..n_a {
            if match_a[a] == FREE {
                dist[a] = 0;
                queue.push_back(a);
            } else {
                dist[a] = u32::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(a) = queue.pop_front() {
            for &b in &adj[a] {
                let next = match_b[b];
                if next == FREE {
                    reachable_free = true;
                } else if dist[next as usize] == u32::MAX {
                    dist[next as usize] = dist[a] + 1;
                    queue.push_back(next as usize);
                }
            }
        }
        if !reachable_free {
            break;
        }
        for a in 0..n_a {
            if match_a[a] == FREE && augment(a, adj, &mut match_a, &mut match_b, &mut dist) {
                size += 1;
            }
        }
    }
    Matching {
        match_a,
        match_b,
        size,
    }
}

fn augment(
    a: usize,
    adj: &[Vec<usize>],
    match_a: &mut [u32],
    match_b: &mut [u32],
    dist: &mut [u32],
) -> bool {
    let d = dist[a];
    for &b in &adj[a] {
        let next = match_b[b];
        let ok = next == FREE
            || (dist[next as usize] == d + 1
                && augment(next as usize, adj, match_a, match_b, dist));
        if ok {
            match_a[a] = b as u32;
            match_b[b] = a as u32;
            return true;
        }
    }
    dist[a] = u32::MAX;
    false
}

/// Alternating-path closure of the unmatched A vertices. After a maximum
/// matching every reached B vertex is matched, so `|N(A')| < |A'|`.
fn hall_violator(adj: &[Vec<usize>], n_b: usize, m: &Matching) -> HallViolator {
    let mut in_a = vec![false; adj.len()];
    let mut in_b = vec![false; n_b];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&a| m.match_a[a] == FREE).collect();
    for &a in &stack {
        in_a[a] = true;
    }
    while let Some(a) = stack.pop() {
        for &b in &adj[a] {
            if !in_b[b] {
                in_b[b] = true;
                let next = m.match_b[b];
                debug_assert_ne!(next, FREE, "augmenting path after maximum matching");
                if next != FREE && !in_a[next as usize] {
                    in_a[next as usize] = true;
                    stack.push(next as usize);
                }
            }
        }
    }
    HallViolator {
        edges: (0..adj.len()).filter(|&a| in_a[a]).collect(),
        neighbors: (0..n_b).filter(|&b| in_b[b]).collect(),
    }
}
