//! Graphs, uniform hypergraphs, colorings and Berge embeddings.

use std::fmt;

use crate::combinatorics::{binomial, combinations, mask_of, permutations};
use crate::error::{Error, Result};

/// Dense zero-based vertex index.
pub type VertexId = usize;

/// Largest vertex count a [`Hypergraph`] may carry (hyperedges are kept as `u64` masks).
pub const MAX_HYPERGRAPH_VERTICES: usize = 64;

/// Default cap on the vertex count for exact canonicalization.
pub const CANONICAL_CAP: usize = 8;

/// A simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {u}-{v} outside 0..{n}"
                )));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    pub fn edgeless(n: usize) -> Self {
        Graph::new(n, []).expect("edgeless graph")
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = combinations(n, 2).into_iter().map(|p| (p[0], p[1]));
        Graph::new(n, edges).expect("complete graph")
    }

    /// `P_n`: the path `0-1-...-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    /// `S_n`: the star on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (0, i))).expect("star")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(keep.len(), edges).expect("induced subgraph")
    }

    /// Parses the edge-list format: vertex count on the first line, then one `u v` per line.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, first) = lines.next().ok_or(Error::Format {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Format {
            line: ln,
            msg: format!("bad vertex count {first:?}"),
        })?;
        let mut edges = Vec::new();
        for (ln, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            if parts.len() != 2 {
                return Err(Error::Format {
                    line: ln,
                    msg: "expected `u v`".into(),
                });
            }
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Format {
                    line: ln,
                    msg: format!("bad vertex {s:?}"),
                })
            };
            let (u, v) = (parse(parts[0])?, parse(parts[1])?);
            if u >= n || v >= n {
                return Err(Error::Range {
                    line: ln,
                    msg: format!("vertex outside 0..{n}"),
                });
            }
            if u == v {
                return Err(Error::Format {
                    line: ln,
                    msg: "loop".into(),
                });
            }
            edges.push((u, v));
        }
        Graph::new(n, edges).map_err(|e| Error::Format {
            line: 0,
            msg: e.to_string(),
        })
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// An `r`-uniform hypergraph on `0..n`. Hyperedges are sorted tuples kept in
/// lexicographic order; a hyperedge's position in that order is its index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<VertexId>>,
    masks: Vec<u64>,
}

impl Hypergraph {
    pub fn new(r: usize, n: usize, edges: Vec<Vec<VertexId>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidParameters(format!("uniformity {r} < 2")));
        }
        if n > MAX_HYPERGRAPH_VERTICES {
            return Err(Error::Unsupported(format!(
                "{n} vertices exceeds {MAX_HYPERGRAPH_VERTICES}"
            )));
        }
        let mut edges = edges;
        for e in &mut edges {
            e.sort_unstable();
            if e.len() != r {
                return Err(Error::InvalidInput(format!(
                    "hyperedge {e:?} does not have {r} vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidInput(format!("repeated vertex in {e:?}")));
            }
            if e[r - 1] >= n {
                return Err(Error::InvalidInput(format!("hyperedge {e:?} outside 0..{n}")));
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("duplicate hyperedge {:?}", w[0])));
        }
        let masks = edges.iter().map(|e| mask_of(e)).collect();
        Ok(Hypergraph { r, n, edges, masks })
    }

    /// Hypergraph with no hyperedges.
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Hypergraph::new(r, n, Vec::new())
    }

    /// All `r`-subsets of `0..n`, or the empty hypergraph when `n < r`.
    pub(crate) fn complete_or_empty(n: usize, r: usize) -> Result<Self> {
        Hypergraph::new(r, n, combinations(n, r))
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<VertexId>] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge(&self, idx: usize) -> &[VertexId] {
        &self.edges[idx]
    }

    pub fn mask(&self, idx: usize) -> u64 {
        self.masks[idx]
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn index_of(&self, edge: &[VertexId]) -> Option<usize> {
        let mut key = edge.to_vec();
        key.sort_unstable();
        self.edges.binary_search(&key).ok()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() as u64 == binomial(self.n, self.r)
    }

    /// Indices of the hyperedges containing both `u` and `v`.
    pub fn edges_containing_pair(&self, u: VertexId, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        let m = (1u64 << u) | (1u64 << v);
        self.masks
            .iter()
            .enumerate()
            .filter(move |(_, &h)| h & m == m)
            .map(|(i, _)| i)
    }

    /// Sub-hypergraph of the hyperedges passing `keep`.
    pub fn filter<F: Fn(&[VertexId]) -> bool>(&self, keep: F) -> Hypergraph {
        let edges = self.edges.iter().filter(|e| keep(e)).cloned().collect();
        Hypergraph::new(self.r, self.n, edges).expect("filtered hypergraph")
    }
}

/// `𝒦_n^r`: all `r`-subsets of `n` vertices.
pub fn complete_hypergraph(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || r > n {
        return Err(Error::InvalidParameters(format!(
            "complete hypergraph needs 2 <= r <= n, got n={n} r={r}"
        )));
    }
    Hypergraph::complete_or_empty(n, r)
}

/// A total coloring of a hypergraph's hyperedges with colors `1..=n_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    base: Hypergraph,
    n_colors: u8,
    colors: Vec<u8>,
}

impl Coloring {
    pub fn new(base: Hypergraph, n_colors: u8, colors: Vec<u8>) -> Result<Self> {
        if n_colors == 0 {
            return Err(Error::InvalidParameters("at least one color required".into()));
        }
        if colors.len() != base.n_edges() {
            return Err(Error::InvalidInput(format!(
                "{} colors for {} hyperedges",
                colors.len(),
                base.n_edges()
            )));
        }
        if let Some(bad) = colors.iter().find(|&&c| c == 0 || c > n_colors) {
            return Err(Error::InvalidInput(format!(
                "color {bad} outside 1..={n_colors}"
            )));
        }
        Ok(Coloring {
            base,
            n_colors,
            colors,
        })
    }

    /// Colors each hyperedge by `f`.
    pub fn from_fn<F>(base: Hypergraph, n_colors: u8, f: F) -> Result<Self>
    where
        F: Fn(&[VertexId]) -> u8,
    {
        let colors = base.edges().iter().map(|e| f(e)).collect();
        Coloring::new(base, n_colors, colors)
    }

    pub fn monochromatic(base: Hypergraph, n_colors: u8, color: u8) -> Result<Self> {
        let colors = vec![color; base.n_edges()];
        Coloring::new(base, n_colors, colors)
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn n_colors(&self) -> u8 {
        self.n_colors
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn color_at(&self, idx: usize) -> u8 {
        self.colors[idx]
    }

    pub fn color_of(&self, edge: &[VertexId]) -> Option<u8> {
        self.base.index_of(edge).map(|i| self.colors[i])
    }

    /// The hyperedges of color `color`.
    pub fn class(&self, color: u8) -> Hypergraph {
        let edges = self
            .base
            .edges()
            .iter()
            .zip(&self.colors)
            .filter(|(_, &c)| c == color)
            .map(|(e, _)| e.clone())
            .collect();
        Hypergraph::new(self.base.r, self.base.n, edges).expect("color class")
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Coloring {
        let mut pairs: Vec<(Vec<usize>, u8)> = self
            .base
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(e, &c)| {
                let mut img: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                img.sort_unstable();
                (img, c)
            })
            .collect();
        pairs.sort();
        let (edges, colors): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let base = Hypergraph::new(self.base.r, self.base.n, edges).expect("permuted base");
        Coloring {
            base,
            n_colors: self.n_colors,
            colors,
        }
    }
}

/// Total-order key of a coloring's orbit under vertex relabelling.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

/// Lexicographically least color vector over all `N!` relabellings. The vector runs
/// over every `r`-subset of `0..N` in lexicographic order, with 0 for subsets that
/// are not hyperedges of the base.
pub fn canonical_key(col: &Coloring) -> Result<CanonicalForm> {
    canonical_key_with_cap(col, CANONICAL_CAP)
}

pub fn canonical_key_with_cap(col: &Coloring, cap: usize) -> Result<CanonicalForm> {
    let n = col.base.n;
    let r = col.base.r;
    if n > cap {
        return Err(Error::Unsupported(format!(
            "exact canonicalization capped at {cap} vertices, got {n}"
        )));
    }
    let subsets = combinations(n, r);
    let index = SubsetIndex::new(n, &subsets);
    let mut full = vec![0u8; subsets.len()];
    for (e, &c) in col.base.edges().iter().zip(&col.colors) {
        full[index.get(mask_of(e))] = c;
    }
    let masks: Vec<u64> = subsets.iter().map(|s| mask_of(s)).collect();
    let mut best: Option<Vec<u8>> = None;
    let mut img = vec![0u8; full.len()];
    for perm in permutations(n) {
        // img[j] = color of the subset that perm sends onto subset j
        for (i, &m) in masks.iter().enumerate() {
            img[index.get(permute_mask(m, &perm))] = full[i];
        }
        if best.as_ref().is_none_or(|b| img < *b) {
            best = Some(img.clone());
        }
    }
    Ok(CanonicalForm(best.unwrap_or_default()))
}

pub(crate) fn permute_mask(mut m: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out |= 1u64 << perm[v];
        m &= m - 1;
    }
    out
}

/// Mask-to-position lookup for the `r`-subsets of a small vertex set.
pub(crate) struct SubsetIndex {
    table: Vec<u32>,
}

impl SubsetIndex {
    pub(crate) fn new(n: usize, subsets: &[Vec<usize>]) -> Self {
        assert!(n <= 16, "subset index table limited to 16 vertices");
        let mut table = vec![u32::MAX; 1usize << n];
        for (i, s) in subsets.iter().enumerate() {
            table[mask_of(s) as usize] = i as u32;
        }
        SubsetIndex { table }
    }

    pub(crate) fn get(&self, mask: u64) -> usize {
        self.table[mask as usize] as usize
    }
}

/// A Berge copy of a graph inside a hypergraph: graph vertex `u` sits at
/// `vertex_map[u]`, and graph edge `i` (in `Graph::edges` order) is carried by
/// hyperedge `edge_map[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeEmbedding {
    pub vertex_map: Vec<VertexId>,
    pub edge_map: Vec<Vec<VertexId>>,
}

impl BergeEmbedding {
    /// Re-checks every invariant against `g` and `h`.
    pub fn validate(&self, g: &Graph, h: &Hypergraph) -> std::result::Result<(), String> {
        if self.vertex_map.len() != g.n_vertices() {
            return Err("vertex map does not cover the graph".into());
        }
        let mut seen = vec![false; h.n_vertices()];
        for &x in &self.vertex_map {
            if x >= h.n_vertices() {
                return Err(format!("vertex image {x} outside host"));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(format!("vertex image {x} used twice"));
            }
        }
        if self.edge_map.len() != g.n_edges() {
            return Err("edge map does not cover the graph".into());
        }
        let mut used = std::collections::HashSet::new();
        for (&(u, v), he) in g.edges().iter().zip(&self.edge_map) {
            if h.index_of(he).is_none() {
                return Err(format!("{he:?} is not a hyperedge of the host"));
            }
            let (a, b) = (self.vertex_map[u], self.vertex_map[v]);
            if !he.contains(&a) || !he.contains(&b) {
                return Err(format!("{he:?} does not contain edge {a}-{b}"));
            }
            let mut key = he.clone();
            key.sort_unstable();
            if !used.insert(key) {
                return Err(format!("hyperedge {he:?} used twice"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for BergeEmbedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, he) in self.edge_map.iter().enumerate() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "e{i}:")?;
            let vs: Vec<String> = he.iter().map(|v| v.to_string()).collect();
            f.write_str(&vs.join(","))?;
        }
        Ok(())
    }
}
