//! Lower-bound colorings, the Erdős pair coloring, vertex covers and the
//! good-graph criterion.

mod certify;
mod colorings;
mod cover;
mod erdos;
mod good;

pub use certify::{
    prop4_properties, prop5_properties, prop7_properties, s5_cyclic_properties,
    theorem2_properties, theorem3i_properties, PropertyCheck,
};
pub use colorings::{
    construct_prop4, construct_prop5_lower, construct_prop7_lower, construct_s5_cyclic,
    construct_theorem2_lower, construct_theorem3i_lower, theorem3i_part_size, Prop4Coloring,
    PROP4_ERDOS_ATTEMPTS,
};
pub use cover::{vertex_cover_number, MAX_COVER_VERTICES};
pub use erdos::{clique_bound, erdos_coloring, max_clique, ErdosColoring};
pub use good::{goodness, goodness_bound, is_good, Goodness, GoodnessWitness, DEFAULT_GOODNESS_OFFSET};
