//! Berge-copy detection.

mod containment;
mod gamma;
mod good_embedding;
mod shadow;

pub use containment::{
    contains_berge, contains_berge_colored, contains_berge_fixed, contains_berge_fixed_colored,
    lemma9_shortcut, lemma9_shortcut_colored, max_edges_on_r_vertices, Lemma9Evidence,
};
pub use gamma::{
    berge_matching, build_gamma, build_gamma_colored, AuxiliaryBipartite, HallViolator,
    MatchOutcome,
};
pub use good_embedding::{default_alpha, embed_good_graph, GoodEmbedding};
pub use shadow::{shadow, shadow_colored, ShadowGraph};
