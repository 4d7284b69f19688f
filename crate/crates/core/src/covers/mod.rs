//! Canonical covers at desk scale: Brill-Noether numerics, the gonality
//! lookup table, and the genus-2 section-ring machinery with Hilbert
//! functions and the degree-1-generation test.

pub mod gonality;
pub mod ring;

pub use gonality::{bn_number, gonality_prediction, GonalityPrediction, ThetaParity};
pub use ring::{Genus2ThetaRing, Monomial, RingElement, Rule};
