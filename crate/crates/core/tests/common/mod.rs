//! Brute-force oracles shared by the integration tests. None of them call into
//! the search or matching code they are checked against.

#![allow(dead_code)]

use berge_core::{Graph, Hypergraph};
use rand::Rng;

/// Every injective vertex map, then a plain backtracking edge assignment.
pub fn brute_contains_berge(h: &Hypergraph, g: &Graph) -> bool {
    let n = h.n_vertices();
    let k = g.n_vertices();
    if k > n {
        return false;
    }
    let mut map = vec![usize::MAX; k];
    let mut used = vec![false; n];
    place(h, g, 0, &mut map, &mut used)
}

fn place(h: &Hypergraph, g: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n_vertices() {
        let hosts: Vec<Vec<usize>> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                (0..h.n_edges())
                    .filter(|&i| h.edge(i).contains(&map[a]) && h.edge(i).contains(&map[b]))
                    .collect()
            })
            .collect();
        return brute_sdr(&hosts);
    }
    for x in 0..used.len() {
        if !used[x] {
            used[x] = true;
            map[v] = x;
            if place(h, g, v + 1, map, used) {
                return true;
            }
            used[x] = false;
        }
    }
    false
}

/// A system of distinct representatives exists, by exhaustive assignment.
pub fn brute_sdr(sets: &[Vec<usize>]) -> bool {
    fn go(sets: &[Vec<usize>], i: usize, taken: &mut Vec<usize>) -> bool {
        if i == sets.len() {
            return true;
        }
        for &x in &sets[i] {
            if !taken.contains(&x) {
                taken.push(x);
                if go(sets, i + 1, taken) {
                    return true;
                }
                taken.pop();
            }
        }
        false
    }
    go(sets, 0, &mut Vec::new())
}

/// Goodness straight from the definition: some `V1` of size `r - 2` with every
/// subset `U` of the rest meeting the degree-sum bound.
pub fn brute_is_good(g: &Graph, n: usize, r: usize, offset: i64) -> bool {
    let nv = g.n_vertices();
    let k = r - 2;
    if k >= nv {
        return k <= n;
    }
    let deg = g.degrees();
    (0u32..1 << nv)
        .filter(|s| s.count_ones() as usize == k)
        .any(|v1| {
            let rest = !v1 & ((1u32 << nv) - 1);
            let mut u = rest;
            loop {
                let size = u.count_ones() as i64;
                let sum: i64 = (0..nv).filter(|&v| u >> v & 1 == 1).map(|v| deg[v] as i64).sum();
                let bound = size * (n as i64 - r as i64 + offset) - size * (size - 1) / 2;
                if sum > bound {
                    return false;
                }
                if u == 0 {
                    return true;
                }
                u = (u - 1) & rest;
            }
        })
}

/// Clique number by Bron–Kerbosch with pivoting.
pub fn bron_kerbosch(adj: &[u64]) -> usize {
    fn go(adj: &[u64], size: usize, p: u64, x: u64, best: &mut usize) {
        if p == 0 {
            if x == 0 {
                *best = (*best).max(size);
            }
            return;
        }
        let pivot = (p | x).trailing_zeros() as usize;
        let mut cand = p & !adj[pivot];
        let (mut p, mut x) = (p, x);
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(adj, size + 1, p & adj[v], x & adj[v], best);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    go(adj, 0, all, 0, &mut best);
    best
}

/// Decodes a Prüfer sequence on `n >= 2` vertices.
pub fn prufer_tree(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).unwrap()
}

/// Lexicographically least relabelled edge list: equal iff isomorphic.
pub fn brute_graph_key(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n_vertices();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<(usize, usize)>> = None;
    loop {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap_or_default()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, r: usize, n: usize, p: f64) -> Hypergraph {
    let all: Vec<Vec<usize>> = itertools::Itertools::combinations(0..n, r).collect();
    let edges = all.into_iter().filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(r, n, edges).unwrap()
}

/// Facts of the three tree cases, evaluated directly.
pub fn tree_case_i(t: &Graph) -> bool {
    let n = t.n_vertices();
    let leaf = |v: usize| t.degree(v) == 1;
    (0..n).any(|v| {
        if leaf(v) || t.neighbors(v).iter().filter(|&&w| !leaf(w)).count() != 1 {
            return false;
        }
        let kept: Vec<usize> = (0..n).filter(|&w| w != v && !(leaf(w) && t.has_edge(v, w))).collect();
        let rest = t.induced(&kept);
        kept.len() >= 6 || (kept.len() == 5 && !is_star(&rest))
    })
}

pub fn tree_case_ii(t: &Graph) -> bool {
    let e = t.edges();
    let mut independent = false;
    let mut adjacent = false;
    for (i, a) in e.iter().enumerate() {
        for b in &e[i + 1..] {
            let vs = [a.0, a.1, b.0, b.1];
            if !e.iter().all(|f| vs.contains(&f.0) || vs.contains(&f.1)) {
                continue;
            }
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                adjacent = true;
            } else {
                independent = true;
            }
        }
    }
    independent && adjacent
}

pub fn tree_case_iii(t: &Graph) -> bool {
    is_star(t) || brute_graph_key(t) == brute_graph_key(&Graph::path(6))
}

pub fn is_star(t: &Graph) -> bool {
    let n = t.n_vertices();
    t.n_edges() + 1 == n && (n <= 2 || (0..n).any(|v| t.degree(v) == n - 1))
}
