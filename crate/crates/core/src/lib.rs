//! Berge copies of graphs in uniform hypergraphs: detection by matching,
//! explicit extremal colorings, the good-graph criterion, and exhaustive
//! certification of small Berge Ramsey numbers.

pub mod combinatorics;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod hrg;
pub mod hypergraph;
pub mod search;
pub mod trees;

pub use error::{Error, Result};
pub use hypergraph::{
    canonical_key, complete_hypergraph, BergeEmbedding, CanonicalForm, Coloring, Graph,
    Hypergraph, VertexId,
};
