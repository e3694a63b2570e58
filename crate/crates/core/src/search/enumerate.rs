use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use lru::LruCache;

use crate::combinatorics::{binomial, combinations, mask_of, permutations};
use crate::engine::contains_berge;
use crate::error::{Error, Result};
use crate::hypergraph::{
    permute_mask, Coloring, Graph, Hypergraph, SubsetIndex, CANONICAL_CAP,
    MAX_HYPERGRAPH_VERTICES,
};
use crate::search::certificate::{SearchCertificate, Verdict, WitnessRecord};
use crate::search::target::TargetSpec;
use crate::search::verify_coloring;

/// Largest vertex count searched with symmetry breaking.
pub const SYMMETRY_VERTEX_CAP: usize = CANONICAL_CAP;
/// Largest hyperedge count searched without symmetry breaking.
pub const RAW_EDGE_CAP: usize = 40;
/// Raw enumeration is refused above `2^RAW_LOG2_CAP` color vectors.
pub const RAW_LOG2_CAP: f64 = 40.0;
/// A progress line is logged every this many leaves.
pub const CHECKPOINT_INTERVAL: u64 = 1 << 20;
pub const DEFAULT_CACHE_MB: usize = 64;
pub const DEFAULT_WITNESS_LIMIT: usize = 4;

// rough footprint of one memo entry including LRU bookkeeping
const CACHE_ENTRY_BYTES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub use_symmetry: bool,
    pub threads: usize,
    /// Prefix length at which the enumeration forks; chosen from `threads` when absent.
    pub fork_depth: Option<usize>,
    /// Memo cache budget in MiB; 0 disables the cache.
    pub cache_mb: usize,
    pub witness_limit: usize,
}

impl SearchConfig {
    pub fn new(use_symmetry: bool) -> Self {
        SearchConfig {
            use_symmetry,
            threads: 1,
            fork_depth: None,
            cache_mb: cache_mb_from_env(),
            witness_limit: DEFAULT_WITNESS_LIMIT,
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig::new(true)
    }
}

/// `BERGE_CACHE_MB`, falling back to [`DEFAULT_CACHE_MB`].
pub fn cache_mb_from_env() -> usize {
    std::env::var("BERGE_CACHE_MB")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_CACHE_MB)
}

/// Decides whether every `c`-coloring of `𝒦_N^r` has, for some color `i`, a
/// color-`i` Berge copy of a member of `targets[i]`.
pub fn all_colorings_contain(
    r: usize,
    c: u8,
    targets: &TargetSpec,
    n: usize,
    use_symmetry: bool,
) -> Result<SearchCertificate> {
    search_with(r, c, targets, n, &SearchConfig::new(use_symmetry))
}

/// [`all_colorings_contain`] with explicit thread, fork, cache and witness settings.
pub fn search_with(
    r: usize,
    c: u8,
    targets: &TargetSpec,
    n: usize,
    cfg: &SearchConfig,
) -> Result<SearchCertificate> {
    if r < 2 || c == 0 {
        return Err(Error::InvalidParameters(format!("need r >= 2 and c >= 1, got r={r} c={c}")));
    }
    if targets.n_colors() != c as usize {
        return Err(Error::InvalidParameters(format!(
            "{} targets for {c} colors",
            targets.n_colors()
        )));
    }
    if n > MAX_HYPERGRAPH_VERTICES {
        return Err(Error::Unsupported(format!("{n} vertices")));
    }
    let n_edges = binomial(n, r);
    if cfg.use_symmetry {
        if n > SYMMETRY_VERTEX_CAP {
            return Err(Error::Unsupported(format!(
                "symmetry breaking is capped at {SYMMETRY_VERTEX_CAP} vertices, got {n}"
            )));
        }
    } else if n_edges > RAW_EDGE_CAP as u64 || n_edges as f64 * (c as f64).log2() > RAW_LOG2_CAP {
        return Err(Error::Unsupported(format!(
            "raw enumeration of {c}^{n_edges} colorings exceeds the cap"
        )));
    }

    let ctx = Context::new(r, c, n, targets, cfg)?;
    let prefixes = ctx.prefixes(cfg);
    log::debug!(
        "search r={r} c={c} N={n} targets={targets}: {} hyperedges, {} symmetries, {} branches",
        ctx.n_edges,
        ctx.perms.len() + 1,
        prefixes.len()
    );
    let outcomes = ctx.run_branches(&prefixes, cfg.threads.max(1));

    let winner = ctx.stop.load(Ordering::SeqCst);
    let last = if winner == usize::MAX { prefixes.len().saturating_sub(1) } else { winner };
    let mut enumerated = 0;
    let mut classes = 0;
    let mut witnesses = Vec::new();
    let mut counterexample = None;
    for (b, outcome) in outcomes.into_iter().enumerate().take(last + 1) {
        let o = outcome.ok_or_else(|| Error::Internal(format!("branch {b} never ran")))?;
        if o.aborted {
            return Err(Error::Internal(format!("branch {b} aborted before the winner")));
        }
        if let Some(msg) = o.internal {
            return Err(Error::Internal(msg));
        }
        enumerated += o.leaves;
        classes += o.classes;
        witnesses.extend(o.witnesses);
        if o.counterexample.is_some() {
            counterexample = o.counterexample;
        }
    }
    witnesses.truncate(cfg.witness_limit);

    let verdict = match counterexample {
        None => Verdict::AllContain,
        Some(colors) => {
            let col = Coloring::new(ctx.base.clone(), c, colors)?;
            let report = verify_coloring(&col, targets)?;
            if report.iter().any(|rep| rep.witness.is_some()) {
                return Err(Error::Internal(
                    "counterexample failed re-verification".into(),
                ));
            }
            witnesses.clear();
            Verdict::Counterexample(col)
        }
    };
    Ok(SearchCertificate {
        verdict,
        colorings_enumerated: enumerated,
        canonical_classes: ctx.has_perms.then_some(classes),
        witnesses,
    })
}

/// A prefix of the color vector together with the symmetries it has not yet
/// separated from the identity.
#[derive(Clone, Debug)]
struct Node {
    colors: Vec<u8>,
    /// `(perm, j)`: the prefix agrees with its image under `perm` on positions `..j`.
    active: Vec<(u32, u8)>,
    canonical: bool,
}

#[derive(Default)]
struct BranchOutcome {
    leaves: u64,
    classes: u64,
    witnesses: Vec<WitnessRecord>,
    counterexample: Option<Vec<u8>>,
    aborted: bool,
    internal: Option<String>,
}

struct Context {
    c: u8,
    base: Hypergraph,
    n_edges: usize,
    members: Vec<Vec<Graph>>,
    /// `perms[p][j]`: index of the image of hyperedge `j` under the `p`-th
    /// non-identity vertex permutation.
    perms: Vec<Vec<u8>>,
    has_perms: bool,
    prune: bool,
    cache: Option<Mutex<LruCache<(u8, u128), bool>>>,
    witness_limit: usize,
    leaves_total: AtomicU64,
    /// Smallest branch index holding a counterexample.
    stop: AtomicUsize,
}

impl Context {
    fn new(r: usize, c: u8, n: usize, targets: &TargetSpec, cfg: &SearchConfig) -> Result<Self> {
        let subsets = combinations(n, r);
        let base = Hypergraph::new(r, n, subsets.clone())?;
        let has_perms = n <= SYMMETRY_VERTEX_CAP;
        let perms = if has_perms && !subsets.is_empty() {
            let index = SubsetIndex::new(n, &subsets);
            let masks: Vec<u64> = subsets.iter().map(|s| mask_of(s)).collect();
            permutations(n)
                .into_iter()
                .skip(1)
                .map(|perm| {
                    masks
                        .iter()
                        .map(|&m| index.get(permute_mask(m, &perm)) as u8)
                        .collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        let capacity = cfg.cache_mb.saturating_mul(1 << 20) / CACHE_ENTRY_BYTES;
        Ok(Context {
            c,
            n_edges: base.n_edges(),
            base,
            members: targets.expand()?,
            perms,
            has_perms,
            prune: cfg.use_symmetry,
            cache: NonZeroUsize::new(capacity).map(|cap| Mutex::new(LruCache::new(cap))),
            witness_limit: cfg.witness_limit,
            leaves_total: AtomicU64::new(0),
            stop: AtomicUsize::new(usize::MAX),
        })
    }

    fn root(&self) -> Node {
        Node {
            colors: Vec::with_capacity(self.n_edges),
            active: (0..self.perms.len() as u32).map(|p| (p, 0)).collect(),
            canonical: self.has_perms,
        }
    }

    /// Extends the comparison of the prefix with each active image. `None` when a
    /// strictly smaller image exists and symmetry breaking is on.
    fn refine(&self, colors: &[u8], active: &[(u32, u8)], canonical: bool) -> Option<(Vec<(u32, u8)>, bool)> {
        if !canonical {
            return Some((Vec::new(), false));
        }
        let k = colors.len();
        let mut out = Vec::with_capacity(active.len());
        'perm: for &(p, j0) in active {
            let map = &self.perms[p as usize];
            let mut j = j0 as usize;
            while j < k {
                let i = map[j] as usize;
                if i >= k {
                    break;
                }
                match colors[j].cmp(&colors[i]) {
                    std::cmp::Ordering::Equal => j += 1,
                    // the image is larger; this symmetry can never win
                    std::cmp::Ordering::Less => continue 'perm,
                    std::cmp::Ordering::Greater => {
                        if self.prune {
                            return None;
                        }
                        return Some((Vec::new(), false));
                    }
                }
            }
            out.push((p, j as u8));
        }
        Some((out, true))
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let mut out = Vec::new();
        for color in 1..=self.c {
            let mut colors = node.colors.clone();
            colors.push(color);
            if let Some((active, canonical)) = self.refine(&colors, &node.active, node.canonical) {
                out.push(Node {
                    colors,
                    active,
                    canonical,
                });
            }
        }
        out
    }

    fn prefixes(&self, cfg: &SearchConfig) -> Vec<Node> {
        let threads = cfg.threads.max(1);
        let mut level = vec![self.root()];
        let target = if threads == 1 { 1 } else { 8 * threads };
        let max_depth = cfg.fork_depth.unwrap_or(usize::MAX).min(self.n_edges);
        let mut depth = 0;
        while depth < max_depth && (cfg.fork_depth.is_some() || level.len() < target) {
            level = level.iter().flat_map(|nd| self.children(nd)).collect();
            depth += 1;
        }
        level
    }

    fn run_branches(&self, prefixes: &[Node], threads: usize) -> Vec<Option<BranchOutcome>> {
        let slots: Vec<Mutex<Option<BranchOutcome>>> = prefixes.iter().map(|_| Mutex::new(None)).collect();
        let next = AtomicUsize::new(0);
        let work = || loop {
            let b = next.fetch_add(1, Ordering::SeqCst);
            if b >= prefixes.len() {
                break;
            }
            if self.stop.load(Ordering::SeqCst) < b {
                continue;
            }
            let mut outcome = BranchOutcome::default();
            let mut node = prefixes[b].clone();
            self.walk(b, &mut node, &mut outcome);
            if outcome.counterexample.is_some() {
                self.stop.fetch_min(b, Ordering::SeqCst);
            }
            *slots[b].lock().expect("slot lock") = Some(outcome);
        };
        if threads <= 1 || prefixes.len() <= 1 {
            work();
        } else {
            std::thread::scope(|s| {
                for _ in 0..threads.min(prefixes.len()) {
                    s.spawn(work);
                }
            });
        }
        slots
            .into_iter()
            .map(|m| m.into_inner().expect("slot lock"))
            .collect()
    }

    /// Depth-first walk below `node`; true once the branch should stop.
    fn walk(&self, branch: usize, node: &mut Node, out: &mut BranchOutcome) -> bool {
        if self.stop.load(Ordering::Relaxed) < branch {
            out.aborted = true;
            return true;
        }
        if node.colors.len() == self.n_edges {
            return self.leaf(&node.colors, node.canonical, out);
        }
        for color in 1..=self.c {
            node.colors.push(color);
            let refined = self.refine(&node.colors, &node.active, node.canonical);
            let stop = match refined {
                None => false,
                Some((active, canonical)) => {
                    let mut child = Node {
                        colors: std::mem::take(&mut node.colors),
                        active,
                        canonical,
                    };
                    let stop = self.walk(branch, &mut child, out);
                    node.colors = child.colors;
                    stop
                }
            };
            node.colors.pop();
            if stop {
                return true;
            }
        }
        false
    }

    fn leaf(&self, colors: &[u8], canonical: bool, out: &mut BranchOutcome) -> bool {
        out.leaves += 1;
        out.classes += canonical as u64;
        let total = self.leaves_total.fetch_add(1, Ordering::Relaxed) + 1;
        if total.is_multiple_of(CHECKPOINT_INTERVAL) {
            log::info!("checkpoint: {total} colorings, current {colors:?}");
        }
        let want_witness = out.witnesses.len() < self.witness_limit;
        for color in 1..=self.c {
            let mask = colors
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == color)
                .fold(0u128, |m, (i, _)| m | 1 << i);
            if want_witness {
                let class = self.class(mask);
                let found = self.members[color as usize - 1]
                    .iter()
                    .find_map(|g| contains_berge(&class, g).map(|e| (g, e)));
                if let Some((g, emb)) = found {
                    if let Err(msg) = emb.validate(g, &class) {
                        out.internal = Some(format!("invalid witness: {msg}"));
                        return true;
                    }
                    out.witnesses.push(WitnessRecord::from_embedding(color, g, &emb));
                    return false;
                }
            } else if self.class_contains(color, mask) {
                return false;
            }
        }
        out.counterexample = Some(colors.to_vec());
        true
    }

    fn class(&self, mask: u128) -> Hypergraph {
        let edges = (0..self.n_edges)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.base.edge(i).to_vec())
            .collect();
        Hypergraph::new(self.base.uniformity(), self.base.n_vertices(), edges).expect("color class")
    }

    fn class_contains(&self, color: u8, mask: u128) -> bool {
        let key = (color, mask);
        if let Some(cache) = &self.cache {
            if let Some(&hit) = cache.lock().expect("cache lock").get(&key) {
                return hit;
            }
        }
        let class = self.class(mask);
        let hit = self.members[color as usize - 1]
            .iter()
            .any(|g| contains_berge(&class, g).is_some());
        if let Some(cache) = &self.cache {
            cache.lock().expect("cache lock").put(key, hit);
        }
        hit
    }
}
