//! Tree utilities: the rooted vertex-to-edge bijection, the three-way structural
//! classification of trees on at least six vertices, and isomorphism-free
//! generation of small free trees.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, VertexId};

/// Largest order accepted by [`generate_trees`].
pub const MAX_GENERATED_ORDER: usize = 8;

type Edge = (VertexId, VertexId);

fn edge(u: VertexId, v: VertexId) -> Edge {
    (u.min(v), u.max(v))
}

/// Bijection `V(t) \ {root} -> E(t)` with `u ∈ f(u)`.
///
/// Removing the root splits the tree into components, each holding one root
/// neighbour `w`; `w` takes the edge to the root and its component is handled
/// the same way with `w` as the new root.
pub fn tree_bijection(t: &Graph, root: VertexId) -> Result<BTreeMap<VertexId, Edge>> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("graph is not a tree".into()));
    }
    if root >= t.n_vertices() {
        return Err(Error::InvalidInput(format!("root {root} not in the tree")));
    }
    let mut f = BTreeMap::new();
    let mut stack = vec![(root, usize::MAX)];
    while let Some((v, parent)) = stack.pop() {
        for &w in t.neighbors(v) {
            if w != parent {
                f.insert(w, edge(v, w));
                stack.push((w, v));
            }
        }
    }
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialTree {
    Star,
    P6,
}

/// Which of the three structural cases a tree on `n >= 6` vertices falls into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeClass {
    /// `vertex` is a non-leaf whose only non-leaf neighbour is `hub`; deleting it
    /// with its leaf neighbours leaves `reduced` (a tree on the vertices `kept`,
    /// relabelled in that order).
    CaseI {
        vertex: VertexId,
        hub: VertexId,
        kept: Vec<VertexId>,
        reduced: Graph,
    },
    /// Two independent edges and two adjacent edges, each pair touching every other edge.
    CaseII {
        independent: (Edge, Edge),
        adjacent: (Edge, Edge),
    },
    CaseIII(SpecialTree),
}

/// Classifies `t`, preferring case (iii), then (ii), then (i).
pub fn classify_tree(t: &Graph) -> Result<TreeClass> {
    if !t.is_tree() {
        return Err(Error::InvalidInput("graph is not a tree".into()));
    }
    let n = t.n_vertices();
    if n < 6 {
        return Err(Error::OutOfRange(format!("tree on {n} < 6 vertices")));
    }
    if is_star(t) {
        return Ok(TreeClass::CaseIII(SpecialTree::Star));
    }
    if n == 6 && (0..n).all(|v| t.degree(v) <= 2) {
        return Ok(TreeClass::CaseIII(SpecialTree::P6));
    }
    if let Some((independent, adjacent)) = covering_pairs(t) {
        return Ok(TreeClass::CaseII {
            independent,
            adjacent,
        });
    }
    if let Some(class) = case_one(t) {
        return Ok(class);
    }
    Err(Error::Internal(format!(
        "tree {:?} fits none of the three cases",
        t.edges()
    )))
}

fn is_star(t: &Graph) -> bool {
    let n = t.n_vertices();
    n <= 2 || (0..n).any(|v| t.degree(v) == n - 1)
}

/// First independent and first adjacent edge pair whose vertices meet every other edge.
fn covering_pairs(t: &Graph) -> Option<((Edge, Edge), (Edge, Edge))> {
    let edges = t.edges();
    let covers = |a: Edge, b: Edge| {
        edges.iter().all(|&(x, y)| {
            [a.0, a.1, b.0, b.1].iter().any(|&c| c == x || c == y)
        })
    };
    let mut independent = None;
    let mut adjacent = None;
    for (i, &a) in edges.iter().enumerate() {
        for &b in &edges[i + 1..] {
            let shares = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
            let slot = if shares { &mut adjacent } else { &mut independent };
            if slot.is_none() && covers(a, b) {
                *slot = Some((a, b));
            }
        }
    }
    Some((independent?, adjacent?))
}

fn case_one(t: &Graph) -> Option<TreeClass> {
    let n = t.n_vertices();
    let leaf = |v: VertexId| t.degree(v) == 1;
    for v in 0..n {
        if leaf(v) {
            continue;
        }
        let inner: Vec<VertexId> = t.neighbors(v).iter().copied().filter(|&w| !leaf(w)).collect();
        if inner.len() != 1 {
            continue;
        }
        let kept: Vec<VertexId> = (0..n)
            .filter(|&w| w != v && !(leaf(w) && t.has_edge(v, w)))
            .collect();
        let reduced = t.induced(&kept);
        if kept.len() >= 6 || (kept.len() == 5 && !is_star(&reduced)) {
            return Some(TreeClass::CaseI {
                vertex: v,
                hub: inner[0],
                kept,
                reduced,
            });
        }
    }
    None
}

/// Exactly two vertices of degree at least two.
pub fn is_double_star(t: &Graph) -> bool {
    (0..t.n_vertices()).filter(|&v| t.degree(v) >= 2).count() == 2
}

/// `∏ nᵢ > ∑ nᵢ − c` for positive integers `n₁..n_c`.
pub fn product_exceeds_shifted_sum(ns: &[u64]) -> bool {
    let product = ns.iter().fold(1u128, |p, &x| p * x as u128);
    let sum: u128 = ns.iter().map(|&x| x as u128).sum();
    product + ns.len() as u128 > sum
}

/// One representative of every isomorphism class of trees on `n` vertices.
pub fn generate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::InvalidParameters("trees need at least one vertex".into()));
    }
    if n > MAX_GENERATED_ORDER {
        return Err(Error::Unsupported(format!(
            "tree generation capped at {MAX_GENERATED_ORDER} vertices"
        )));
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    level.insert(tree_code(&Graph::edgeless(1)), Graph::edgeless(1));
    for k in 1..n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..k {
                let edges = t.edges().iter().copied().chain([(v, k)]);
                let grown = Graph::new(k + 1, edges).expect("leaf extension");
                next.entry(tree_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Canonical string of a free tree: the smaller rooted encoding over its centres.
pub fn tree_code(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| rooted_code(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(t: &Graph, v: VertexId, parent: VertexId) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(t: &Graph) -> Vec<VertexId> {
    let n = t.n_vertices();
    let mut deg = t.degrees();
    let mut alive: BTreeSet<VertexId> = (0..n).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while alive.len() > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive.remove(&v);
            for &w in t.neighbors(v) {
                if alive.contains(&w) {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    alive.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_star(a: usize, b: usize) -> Graph {
        // centres 0 and 1, a leaves on 0 and b leaves on 1
        let mut edges = vec![(0, 1)];
        let mut next = 2;
        for _ in 0..a {
            edges.push((0, next));
            next += 1;
        }
        for _ in 0..b {
            edges.push((1, next));
            next += 1;
        }
        Graph::new(next, edges).unwrap()
    }

    #[test]
    fn bijection_examples() {
        assert!(tree_bijection(&Graph::edgeless(1), 0).unwrap().is_empty());
        let f = tree_bijection(&Graph::path(3), 1).unwrap();
        assert_eq!(f[&0], (0, 1));
        assert_eq!(f[&2], (1, 2));
        let f = tree_bijection(&Graph::star(4), 0).unwrap();
        for i in 1..4 {
            assert_eq!(f[&i], (0, i));
        }
        assert!(tree_bijection(&Graph::complete(3), 0).is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_tree(&Graph::star(7)).unwrap(),
            TreeClass::CaseIII(SpecialTree::Star)
        );
        assert_eq!(
            classify_tree(&Graph::path(6)).unwrap(),
            TreeClass::CaseIII(SpecialTree::P6)
        );
        for (a, b) in [(1, 3), (2, 2), (2, 3), (3, 3), (1, 5)] {
            assert!(matches!(
                classify_tree(&double_star(a, b)).unwrap(),
                TreeClass::CaseII { .. }
            ));
        }
        assert!(matches!(
            classify_tree(&Graph::path(8)).unwrap(),
            TreeClass::CaseI { .. }
        ));
        assert!(matches!(classify_tree(&Graph::path(5)), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn free_tree_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| generate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        assert!(matches!(generate_trees(9), Err(Error::Unsupported(_))));
    }

    #[test]
    fn double_star_predicate() {
        assert!(is_double_star(&Graph::path(4)));
        assert!(!is_double_star(&Graph::star(5)));
        assert!(!is_double_star(&Graph::path(6)));
        assert!(is_double_star(&double_star(2, 3)));
    }

    #[test]
    fn shifted_sum_small_cases() {
        assert!(product_exceeds_shifted_sum(&[1]));
        assert!(product_exceeds_shifted_sum(&[2, 2]));
        assert!(product_exceeds_shifted_sum(&[1, 1, 1]));
    }
}
