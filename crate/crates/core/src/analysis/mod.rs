//! Continuity, monotonicity, distance, the partition integral and the
//! Salem-type distribution function of the pseudo map.

mod continuity;
mod integral;
mod salem;
mod shape;

pub use continuity::{continuity_classify, jump_bound, Continuity};
pub use integral::{
    partition_integral, partition_integral_closed, partition_integral_exhaustive,
    EXHAUSTIVE_MAX_BITS,
};
pub use salem::{
    distribution, distribution_grid, distribution_of_word, f_d, f_d_grid, PositionProbabilities,
    ProbabilityVector,
};
pub use shape::{distance_counterexample, monotonicity_scan, Monotonicity, MonotonicityReport};
