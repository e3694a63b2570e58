//! Deciding whether a hypergraph contains a Berge copy of a graph.
//!
//! A placement of the graph's vertices is found by backtracking over the
//! threshold-1 shadow; each complete placement is then tested with a saturating
//! matching between the placed edges and the hyperedges containing them.

use crate::combinatorics::combinations;
use crate::engine::gamma::hopcroft_karp;
use crate::engine::shadow::shadow;
use crate::error::{Error, Result};
use crate::hypergraph::{BergeEmbedding, Coloring, Graph, Hypergraph, VertexId};

const UNPLACED: usize = usize::MAX;

/// Berge copy of `g` with its vertices forced to `placement`.
pub fn contains_berge_fixed(
    h: &Hypergraph,
    g: &Graph,
    placement: &[VertexId],
) -> Result<Option<BergeEmbedding>> {
    check_placement(h, g, placement)?;
    let adj: Vec<Vec<usize>> = g
        .edges()
        .iter()
        .map(|&(u, v)| h.edges_containing_pair(placement[u], placement[v]).collect())
        .collect();
    Ok(match_placed(h, g, placement, &adj))
}

pub fn contains_berge_fixed_colored(
    col: &Coloring,
    color: u8,
    g: &Graph,
    placement: &[VertexId],
) -> Result<Option<BergeEmbedding>> {
    contains_berge_fixed(&col.class(color), g, placement)
}

fn check_placement(h: &Hypergraph, g: &Graph, placement: &[VertexId]) -> Result<()> {
    if placement.len() != g.n_vertices() {
        return Err(Error::InvalidInput(format!(
            "placement has {} entries for {} graph vertices",
            placement.len(),
            g.n_vertices()
        )));
    }
    let mut seen = vec![false; h.n_vertices()];
    for &x in placement {
        if x >= h.n_vertices() || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidInput(format!(
                "placement {placement:?} is not an injection into 0..{}",
                h.n_vertices()
            )));
        }
    }
    Ok(())
}

fn match_placed(
    h: &Hypergraph,
    g: &Graph,
    placement: &[VertexId],
    adj: &[Vec<usize>],
) -> Option<BergeEmbedding> {
    let m = hopcroft_karp(adj, h.n_edges());
    if m.size != g.n_edges() {
        return None;
    }
    Some(BergeEmbedding {
        vertex_map: placement.to_vec(),
        edge_map: m
            .match_a
            .iter()
            .map(|&b| h.edge(b as usize).to_vec())
            .collect(),
    })
}

/// Exact search for a Berge copy of `g` anywhere in `h`.
pub fn contains_berge(h: &Hypergraph, g: &Graph) -> Option<BergeEmbedding> {
    let n = h.n_vertices();
    if g.n_vertices() > n || g.n_edges() > h.n_edges() {
        return None;
    }
    let sh = shadow(h, 1);
    let host_adj = adjacency_masks(&sh.graph);
    let pair_edges = pair_index(h);
    let mut found = None;
    let mut search = PlacementSearch::new(g, n, &host_adj);
    search.run(&mut |placement| {
        let adj: Vec<Vec<usize>> = g
            .edges()
            .iter()
            .map(|&(u, v)| pair_edges[placement[u] * n + placement[v]].clone())
            .collect();
        match match_placed(h, g, placement, &adj) {
            Some(emb) => {
                found = Some(emb);
                true
            }
            None => false,
        }
    });
    found
}

pub fn contains_berge_colored(col: &Coloring, color: u8, g: &Graph) -> Option<BergeEmbedding> {
    contains_berge(&col.class(color), g)
}

/// Copy of `g` inside the threshold-`t` shadow of `h`, turned into a Berge copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma9Evidence {
    pub placement: Vec<VertexId>,
    pub embedding: BergeEmbedding,
}

/// Largest number of edges of `g` spanned by any `r` of its vertices.
pub fn max_edges_on_r_vertices(g: &Graph, r: usize) -> usize {
    let k = r.min(g.n_vertices());
    combinations(g.n_vertices(), k)
        .iter()
        .map(|s| {
            g.edges()
                .iter()
                .filter(|(u, v)| s.binary_search(u).is_ok() && s.binary_search(v).is_ok())
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// If every `r` vertices of `g` span at most `t` of its edges, a copy of `g` in the
/// threshold-`t` shadow certifies a Berge copy. `Ok(None)` only means the
/// shortcut did not apply, not that `h` is Berge-`g`-free.
pub fn lemma9_shortcut(h: &Hypergraph, g: &Graph, t: usize) -> Result<Option<Lemma9Evidence>> {
    let r = h.uniformity();
    let spanned = max_edges_on_r_vertices(g, r);
    if spanned > t {
        return Err(Error::PreconditionViolated(format!(
            "some {r} vertices span {spanned} > {t} edges"
        )));
    }
    if g.n_vertices() > h.n_vertices() {
        return Ok(None);
    }
    let sh = shadow(h, t);
    let host_adj = adjacency_masks(&sh.graph);
    let mut placement = None;
    PlacementSearch::new(g, h.n_vertices(), &host_adj).run(&mut |p| {
        placement = Some(p.to_vec());
        true
    });
    let Some(placement) = placement else {
        return Ok(None);
    };
    match contains_berge_fixed(h, g, &placement)? {
        Some(embedding) => Ok(Some(Lemma9Evidence {
            placement,
            embedding,
        })),
        None => Err(Error::Internal(format!(
            "threshold-{t} shadow copy at {placement:?} has no saturating matching"
        ))),
    }
}

pub fn lemma9_shortcut_colored(
    col: &Coloring,
    color: u8,
    g: &Graph,
    t: usize,
) -> Result<Option<Lemma9Evidence>> {
    lemma9_shortcut(&col.class(color), g, t)
}

pub(crate) fn adjacency_masks(g: &Graph) -> Vec<u64> {
    (0..g.n_vertices())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1u64 << w)))
        .collect()
}

/// `pair_index(h)[u * n + v]` lists the hyperedges containing `{u, v}`.
fn pair_index(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.n_vertices();
    let mut out = vec![Vec::new(); n * n];
    for (idx, e) in h.edges().iter().enumerate() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                out[u * n + v].push(idx);
                out[v * n + u].push(idx);
            }
        }
    }
    out
}

/// Backtracking injection of a pattern graph into a host graph given by adjacency
/// masks, calling `accept` on every complete placement until it returns true.
///
/// Pattern vertices are placed most-constrained first. Candidates must be
/// adjacent to the images of all placed neighbours and have enough host degree.
/// Twins (equal open or closed neighbourhoods) receive increasing images, which
/// only discards placements that differ by a pattern automorphism.
pub(crate) struct PlacementSearch<'a> {
    g: &'a Graph,
    n_host: usize,
    host_adj: &'a [u64],
    order: Vec<usize>,
    twin_class: Vec<usize>,
    deg_at_least: Vec<u64>,
    placement: Vec<usize>,
    used: u64,
}

impl<'a> PlacementSearch<'a> {
    pub(crate) fn new(g: &'a Graph, n_host: usize, host_adj: &'a [u64]) -> Self {
        let n = g.n_vertices();
        let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let host_deg: Vec<usize> = host_adj.iter().map(|m| m.count_ones() as usize).collect();
        let deg_at_least = (0..=max_deg)
            .map(|d| {
                (0..n_host)
                    .filter(|&x| host_deg[x] >= d)
                    .fold(0u64, |m, x| m | (1u64 << x))
            })
            .collect();
        PlacementSearch {
            g,
            n_host,
            host_adj,
            order: placement_order(g),
            twin_class: twin_classes(g),
            deg_at_least,
            placement: vec![UNPLACED; n],
            used: 0,
        }
    }

    pub(crate) fn run(&mut self, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.g.n_vertices() > self.n_host {
            return false;
        }
        self.step(0, accept)
    }

    fn step(&mut self, depth: usize, accept: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            return accept(&self.placement);
        }
        let u = self.order[depth];
        let mut cand = self.domain(u);
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if !self.twin_order_ok(u, x) {
                continue;
            }
            self.placement[u] = x;
            self.used |= 1u64 << x;
            if self.forward_ok(depth + 1) && self.step(depth + 1, accept) {
                return true;
            }
            self.used &= !(1u64 << x);
            self.placement[u] = UNPLACED;
        }
        false
    }

    fn domain(&self, u: usize) -> u64 {
        let all = if self.n_host == 64 {
            u64::MAX
        } else {
            (1u64 << self.n_host) - 1
        };
        let mut d = all & !self.used & self.deg_at_least[self.g.degree(u)];
        for &w in self.g.neighbors(u) {
            let img = self.placement[w];
            if img != UNPLACED {
                d &= self.host_adj[img];
            }
        }
        d
    }

    fn forward_ok(&self, from: usize) -> bool {
        self.order[from..].iter().all(|&y| self.domain(y) != 0)
    }

    fn twin_order_ok(&self, u: usize, x: usize) -> bool {
        let class = self.twin_class[u];
        (0..self.g.n_vertices()).all(|w| {
            let img = self.placement[w];
            w == u || img == UNPLACED || self.twin_class[w] != class || ((w < u) == (img < x))
        })
    }
}

fn placement_order(g: &Graph) -> Vec<usize> {
    let n = g.n_vertices();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (linked, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Class representative for each vertex: its smallest open or closed twin. A vertex
/// with an open twin cannot also have a closed twin, so each relation is an
/// equivalence on its own and the classes are disjoint.
fn twin_classes(g: &Graph) -> Vec<usize> {
    let closed = |v: usize| {
        let mut c = g.neighbors(v).to_vec();
        c.push(v);
        c.sort_unstable();
        c
    };
    (0..g.n_vertices())
        .map(|v| {
            (0..v)
                .find(|&w| g.neighbors(w) == g.neighbors(v) || closed(w) == closed(v))
                .unwrap_or(v)
        })
        .collect()
}
