//! Exact coefficient arithmetic: prime fields and rationals, binary forms
//! with twist bookkeeping, dense matrices of forms, polynomials in the
//! spectral variable, and dual numbers for exact differentiation.

pub mod dual;
pub mod form;
pub(crate) mod fpx;
pub(crate) mod fq;
pub mod matrix;
pub mod parse;
pub mod scalar;
pub mod tpoly;

pub use dual::DualForm;
pub use form::{h0, BinaryForm};
pub use matrix::{FormMatrix, ScalarMat};
pub use parse::{parse_form, parse_form_with_twist, print_form};
pub use scalar::{Field, Scalar};
pub use tpoly::{form_resultant, TPoly};
