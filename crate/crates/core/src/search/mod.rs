//! Exhaustive search over colorings of complete uniform hypergraphs.

mod certificate;
mod enumerate;
mod target;

pub use certificate::{SearchCertificate, Verdict, WitnessRecord};
pub use enumerate::{
    all_colorings_contain, cache_mb_from_env, search_with, SearchConfig, CHECKPOINT_INTERVAL,
    DEFAULT_CACHE_MB, DEFAULT_WITNESS_LIMIT, RAW_EDGE_CAP, RAW_LOG2_CAP, SYMMETRY_VERTEX_CAP,
};
pub use target::{Target, TargetSpec};

use std::time::{Duration, Instant};

use crate::engine::contains_berge;
use crate::error::{Error, Result};
use crate::hypergraph::{BergeEmbedding, Coloring, Graph};

/// Outcome of checking one color class against its target family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorReport {
    pub color: u8,
    /// The first member found and its embedding; `None` certifies absence of every member.
    pub witness: Option<(Graph, BergeEmbedding)>,
}

/// Checks each color class of `col` against its target.
pub fn verify_coloring(col: &Coloring, targets: &TargetSpec) -> Result<Vec<ColorReport>> {
    if targets.n_colors() != col.n_colors() as usize {
        return Err(Error::InvalidParameters(format!(
            "{} targets for {} colors",
            targets.n_colors(),
            col.n_colors()
        )));
    }
    let members = targets.expand()?;
    Ok((1..=col.n_colors())
        .map(|color| {
            let class = col.class(color);
            let witness = members[color as usize - 1]
                .iter()
                .find_map(|g| contains_berge(&class, g).map(|e| (g.clone(), e)));
            ColorReport { color, witness }
        })
        .collect())
}

/// The least `N` in range at which every coloring contains a target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyValue {
    pub value: usize,
    /// Avoiding coloring on `value - 1` vertices.
    pub lower: Coloring,
    pub upper: SearchCertificate,
    /// Verdict per scanned `N`, in scan order.
    pub scanned: Vec<(usize, bool)>,
}

/// Linear scan over `n_lo..=n_hi`. Each `N` is searched independently; when the
/// first `ALL_CONTAIN` is at `n_lo`, the scan also checks `n_lo - 1` for the
/// lower witness.
pub fn ramsey_value(
    r: usize,
    c: u8,
    targets: &TargetSpec,
    n_lo: usize,
    n_hi: usize,
    cfg: &SearchConfig,
) -> Result<RamseyValue> {
    ramsey_value_with(r, c, targets, n_lo, n_hi, cfg, &mut |_, _, _| {})
}

/// [`ramsey_value`], reporting each completed search with its wall time.
pub fn ramsey_value_with(
    r: usize,
    c: u8,
    targets: &TargetSpec,
    n_lo: usize,
    n_hi: usize,
    cfg: &SearchConfig,
    on_step: &mut dyn FnMut(usize, &SearchCertificate, Duration),
) -> Result<RamseyValue> {
    let mut timed = |n: usize| -> Result<SearchCertificate> {
        let start = Instant::now();
        let cert = search_with(r, c, targets, n, cfg)?;
        on_step(n, &cert, start.elapsed());
        Ok(cert)
    };
    if n_lo > n_hi {
        return Err(Error::InvalidParameters(format!("empty range {n_lo}..={n_hi}")));
    }
    let mut scanned = Vec::new();
    let mut previous: Option<Coloring> = None;
    for n in n_lo..=n_hi {
        let cert = timed(n)?;
        scanned.push((n, cert.verdict.is_all_contain()));
        match cert.verdict {
            Verdict::Counterexample(col) => previous = Some(col),
            Verdict::AllContain => {
                let lower = match previous {
                    Some(col) => col,
                    None if n == 0 => return Err(Error::NoThreshold { lo: n_lo, hi: n_hi }),
                    None => {
                        let below = timed(n - 1)?;
                        scanned.insert(0, (n - 1, below.verdict.is_all_contain()));
                        match below.verdict {
                            Verdict::Counterexample(col) => col,
                            Verdict::AllContain => {
                                return Err(Error::NoThreshold { lo: n_lo, hi: n_hi })
                            }
                        }
                    }
                };
                return Ok(RamseyValue {
                    value: n,
                    lower,
                    upper: cert,
                    scanned,
                });
            }
        }
    }
    Err(Error::NoThreshold { lo: n_lo, hi: n_hi })
}
