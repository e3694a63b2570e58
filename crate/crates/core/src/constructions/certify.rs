//! Checkable certificate properties of the constructed colorings.

use crate::constructions::cover::vertex_cover_number;
use crate::constructions::theorem3i_part_size;
use crate::engine::{contains_berge_colored, shadow_colored};
use crate::hypergraph::{Coloring, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
}

impl PropertyCheck {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        PropertyCheck {
            name: name.into(),
            passed,
        }
    }
}

fn total(col: &Coloring) -> PropertyCheck {
    PropertyCheck::new("total_over_complete_hypergraph", col.base().is_complete())
}

fn pair_avoided(col: &Coloring, color: u8, u: usize, v: usize) -> bool {
    col.base()
        .edges()
        .iter()
        .zip(col.colors())
        .all(|(e, &c)| c != color || !(e.contains(&u) && e.contains(&v)))
}

/// No color-`i` hyperedge contains both `u_i = 2(i-1)` and `v_i = 2i - 1`, for `i < c`.
pub fn theorem2_properties(col: &Coloring) -> Vec<PropertyCheck> {
    let c = col.n_colors();
    let mut out = vec![total(col)];
    for i in 1..c {
        let (u, v) = (2 * (i as usize - 1), 2 * i as usize - 1);
        out.push(PropertyCheck::new(
            format!("color_{i}_avoids_pair_{u}_{v}"),
            pair_avoided(col, i, u, v),
        ));
    }
    out
}

/// No color-`i` hyperedge contains two vertices of part `V_i`.
pub fn theorem3i_properties(col: &Coloring, n: usize) -> Vec<PropertyCheck> {
    let c = col.n_colors();
    let s = theorem3i_part_size(n, c);
    let mut out = vec![total(col)];
    for i in 1..=c {
        let lo = (i as usize - 1) * s;
        let ok = col
            .base()
            .edges()
            .iter()
            .zip(col.colors())
            .all(|(e, &k)| k != i || e.iter().filter(|&&v| v >= lo && v < lo + s).count() <= 1);
        out.push(PropertyCheck::new(format!("color_{i}_meets_part_{i}_at_most_once"), ok));
    }
    out
}

/// No blue hyperedge holds two vertices of `U = 0..m-2`, no red one two of `U'`.
pub fn prop5_properties(col: &Coloring, m: usize) -> Vec<PropertyCheck> {
    let u = m - 2;
    let inside = |e: &[usize], lo: usize, hi: usize| e.iter().filter(|&&v| v >= lo && v < hi).count();
    let n_v = col.base().n_vertices();
    let rows: Vec<(&Vec<usize>, u8)> = col.base().edges().iter().zip(col.colors().iter().copied()).collect();
    vec![
        total(col),
        PropertyCheck::new(
            "blue_avoids_pairs_in_U",
            rows.iter().all(|(e, c)| *c != 1 || inside(e, 0, u) < 2),
        ),
        PropertyCheck::new(
            "red_avoids_pairs_in_U_prime",
            rows.iter().all(|(e, c)| *c != 2 || inside(e, u, n_v) < 2),
        ),
    ]
}

/// Both threshold-1 color shadows have vertex cover number at most `k - 1`.
pub fn prop7_properties(col: &Coloring, k: usize) -> Vec<PropertyCheck> {
    let mut out = vec![total(col)];
    for (color, name) in [(2u8, "red"), (1u8, "blue")] {
        let sh = shadow_colored(col, color, 1);
        let ok = vertex_cover_number(&sh.graph).is_ok_and(|t| t < k);
        out.push(PropertyCheck::new(format!("{name}_shadow_cover_at_most_{}", k - 1), ok));
    }
    out
}

/// Three blue and three red hyperedges at each vertex; no monochromatic Berge-S5.
pub fn s5_cyclic_properties(col: &Coloring) -> Vec<PropertyCheck> {
    let degrees_ok = (0..col.base().n_vertices()).all(|v| {
        [1u8, 2].iter().all(|&color| {
            col.base()
                .edges()
                .iter()
                .zip(col.colors())
                .filter(|(e, &c)| c == color && e.contains(&v))
                .count()
                == 3
        })
    });
    let s5 = Graph::star(5);
    vec![
        total(col),
        PropertyCheck::new("three_blue_three_red_per_vertex", degrees_ok),
        PropertyCheck::new("no_blue_berge_s5", contains_berge_colored(col, 1, &s5).is_none()),
        PropertyCheck::new("no_red_berge_s5", contains_berge_colored(col, 2, &s5).is_none()),
    ]
}

/// Part-internal hyperedges use only the inner colors; Erdős layers respect their clique bound.
pub fn prop4_properties(p4: &crate::constructions::Prop4Coloring) -> Vec<PropertyCheck> {
    let col = &p4.coloring;
    let c = col.n_colors();
    let mut out = vec![total(col)];
    if let Some(&parts) = p4.parts.last() {
        let h = col.base().n_vertices() / parts;
        let ok = col
            .base()
            .edges()
            .iter()
            .zip(col.colors())
            .all(|(e, &k)| e[0] / h != e[2] / h || k <= c - 2);
        out.push(PropertyCheck::new("part_internal_hyperedges_use_inner_colors", ok));
    }
    out
}
