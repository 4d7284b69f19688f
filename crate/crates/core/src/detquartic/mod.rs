//! Determinantal theta characteristics on plane curves: symmetric
//! matrices of linear forms, the cofactor multiplication law, the
//! adjugate rank-one identity on the curve, and brute-force rank-drop
//! point search.

pub mod rankdrop;
pub mod smooth;
pub mod symmat;
pub mod ternary;

pub use rankdrop::rank_drop_points;
pub use smooth::{smooth_plane_curve_check, SmoothnessReport};
pub use symmat::{AugmentedMat, SymLinMat};
pub use ternary::{LinForm, TernaryForm};
