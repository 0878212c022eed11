//! Partitions, Dyck and tall Schröder paths, indifference graphs, and
//! orientation statistics.
//!
//! Vertices are `1..=n`. An edge `{i, j}` always has `i < j`. The square in
//! row `i` and column `j` above the diagonal carries the label `{i, j}`.

mod graph;
mod orientation;
mod partition;
mod paths;

pub use graph::{
    gen_indifference, is_indifference, mobius_subgraph, parse_edge_list, union_graphs, EdgeSet,
    IndiffGraph, MAX_MOBIUS_EDGES, MAX_VERTICES,
};
pub use orientation::{orientations, Orientation, MAX_ORIENTATION_EDGES};
pub use partition::{gen_partitions, Partition, MAX_PARTITION_SIZE};
pub use paths::{
    area_inverse, gen_dyck, gen_tall_schroder, DyckPath, SchroderPath, Step, MAX_PATH_SIZE,
};

pub(crate) use orientation::type_from_up;
pub(crate) use partition::partitions_unguarded;
