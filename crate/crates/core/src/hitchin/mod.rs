//! Splitting-locus dimension theory over the projective line:
//! automorphism-group dimensions, expected-dimension formulas, the exact
//! differential of the Hitchin map, and seeded Monte Carlo
//! dominance/fiber-dimension experiments.

pub mod differential;
pub mod dims;
pub mod endo;
pub mod experiment;
pub mod sample;

pub use differential::{commutator_direction, endo_coordinates, hitchin_differential};
pub use dims::{
    aut_dim, base_dim, end_twist_dim, enumerate_splitting_types, expected_dims,
    has_forced_invariant_subbundle, DimensionReport,
};
pub use endo::{random_aut, random_endo};
pub use experiment::{run_rank_experiment, RankExperiment, SampleOutcome};
pub use sample::SplitMix64;
