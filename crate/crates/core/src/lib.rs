//! Three families of Fuss-Catalan objects of type A and the bijections
//! between them.
//!
//! The families, all counted by the same Fuss-Catalan number:
//!
//! * integer partitions fitting in an m-staircase shape ([`partitions`]),
//! * Shi tableaux encoding the dominant regions of the m-Catalan
//!   hyperplane arrangement ([`shi_tableaux`]),
//! * maximal m-dissections of a convex polygon, the facets of the
//!   generalized cluster complex ([`dissections`]).
//!
//! [`bijections`] holds the maps across families; every map carries the
//! snake/wall/touch-point correspondence: a dissection contains the i-th
//! negative simple root exactly when the i-th part of its partition is
//! maximal, exactly when the matching region is separated from the origin
//! by the i-th simple-root hyperplane at level m.
//!
//! [`oracles`] provides independent brute-force routes (naive filtering,
//! rational grid sampling, search inverses) used to cross-validate the
//! main implementations.

pub mod bijections;
pub mod dissections;
pub mod json;
pub mod oracles;
pub mod partitions;
pub mod shi_tableaux;

pub use bijections::{
    omega, omega_inverse, parabolic_components, psi, psi_inverse, psi_prime, refined_count,
    BijectionError, RefinedCountTable,
};
pub use dissections::{
    diagonal_to_colored_root, enumerate_dissections, ColoredRoot, Dissection, DissectionError,
    LabeledPolygon, Labeling,
};
pub use oracles::{
    exhaustive_psi_inverse, exhaustive_refined_counts, exhaustive_tableaux, grid_region_oracle,
    grid_region_oracle_stabilized, OracleError, Verdict, VerdictStatus,
};
pub use partitions::{
    count_partitions, count_positive, enumerate_partitions, CountingParameters, PartitionError,
    StaircasePartition, Step,
};
pub use shi_tableaux::{
    check_hook_conditions, check_shi_conditions, enumerate_regions, ShiTableau, ShiViolation,
    SubTableaux, TableauError, WallProfile,
};
