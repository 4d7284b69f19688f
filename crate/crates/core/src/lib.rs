//! Exact-arithmetic workbench for spectral curves over the projective
//! line.
//!
//! The crate constructs spectral curves from polynomial data, realizes
//! line bundles as twisted-endomorphism matrices through the Hitchin
//! correspondence, measures splitting-locus dimensions by exact Monte
//! Carlo rank experiments over prime fields, and builds the section rings
//! of low-genus canonical covers, including the determinantal theta
//! characteristics of plane quartics.
//!
//! Everything is exact: prime fields with a runtime modulus (default
//! 1009) for randomized experiments, arbitrary-precision rationals for
//! fixtures. No floating point anywhere.
//!
//! The `examples/` directory is the front door — one runnable example per
//! capability (`cargo run --release --example splitting_dimensions`, …).
//! A thin CLI binary `swb` exposes the same operations to scripts and
//! appends reproducible experiment records to a JSONL log.

pub mod arith;
pub mod cli;
pub mod covers;
pub mod detquartic;
pub mod error;
pub mod hitchin;
pub mod json;
pub mod spectral;

pub use error::{Error, Result};
