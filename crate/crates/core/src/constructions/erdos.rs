//! Random edge 2-colorings of `K_n` certified free of large monochromatic cliques.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// `⌊2 log₂ n⌋`, computed exactly as `⌊log₂ n²⌋`.
pub fn clique_bound(n: usize) -> usize {
    let sq = (n as u128) * (n as u128);
    if sq == 0 {
        return 0;
    }
    (127 - sq.leading_zeros()) as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErdosColoring {
    pub n: usize,
    /// Colors in `{1, 2}` for the pairs of `0..n` in lexicographic order.
    pub pair_colors: Vec<u8>,
    /// Largest monochromatic clique, found by exact search.
    pub max_clique_found: usize,
    pub seed: u64,
    /// 1-based index of the successful draw.
    pub attempt: usize,
}

impl ErdosColoring {
    pub fn color(&self, u: usize, v: usize) -> u8 {
        let (a, b) = (u.min(v), u.max(v));
        // pairs (a, *) start after a rows of decreasing length
        let idx = a * self.n - a * (a + 1) / 2 + (b - a - 1);
        self.pair_colors[idx]
    }

    /// Adjacency masks of the color-`color` graph.
    pub fn class_masks(&self, color: u8) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.color(u, v) == color {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
        }
        adj
    }
}

/// Draws fair-coin colorings from `seed` until both classes have clique number
/// below `⌊2 log₂ n⌋`.
pub fn erdos_coloring(n: usize, seed: u64, max_attempts: usize) -> Result<ErdosColoring> {
    let bound = clique_bound(n);
    if bound < 3 {
        return Err(Error::PreconditionViolated(format!(
            "⌊2 log₂ {n}⌋ = {bound} < 3 cannot be met"
        )));
    }
    if n > 64 {
        return Err(Error::Unsupported(format!("{n} > 64 vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_pairs = n * (n - 1) / 2;
    let mut best = usize::MAX;
    for attempt in 1..=max_attempts {
        let pair_colors: Vec<u8> = (0..n_pairs).map(|_| if rng.gen::<bool>() { 1 } else { 2 }).collect();
        let mut col = ErdosColoring {
            n,
            pair_colors,
            max_clique_found: 0,
            seed,
            attempt,
        };
        let omega = max_clique(&col.class_masks(1)).max(max_clique(&col.class_masks(2)));
        best = best.min(omega);
        if omega < bound {
            col.max_clique_found = omega;
            return Ok(col);
        }
    }
    Err(Error::AttemptsExhausted {
        attempts: max_attempts,
        best_clique: if best == usize::MAX { 0 } else { best },
        bound,
    })
}

/// Clique number by branch and bound with a greedy coloring bound.
pub fn max_clique(adj: &[u64]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    expand(adj, 0, all, &mut best);
    best
}

fn expand(adj: &[u64], size: usize, candidates: u64, best: &mut usize) {
    let (order, colors) = greedy_color(adj, candidates);
    let mut remaining = candidates;
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best {
            return;
        }
        let v = order[i];
        let next = remaining & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(adj, size + 1, next, best);
        }
        remaining &= !(1u64 << v);
    }
}

/// Sequential coloring of `candidates`; `colors[i]` bounds the clique within `order[..=i]`.
fn greedy_color(adj: &[u64], candidates: u64) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut colors = Vec::with_capacity(order.capacity());
    let mut uncolored = candidates;
    let mut k = 0;
    while uncolored != 0 {
        k += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1u64 << v) & !adj[v];
            uncolored &= !(1u64 << v);
            order.push(v);
            colors.push(k);
        }
    }
    (order, colors)
}
