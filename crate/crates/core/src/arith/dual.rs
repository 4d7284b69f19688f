//! Dual numbers over binary forms: `value + epsilon * derivative` with
//! `epsilon^2 = 0`. Running the characteristic-polynomial expansion over
//! these computes exact directional derivatives of the Hitchin map; the
//! Leibniz rule `(a + eb)(c + ed) = ac + e(ad + bc)` does the work.

use crate::arith::form::BinaryForm;
use crate::arith::scalar::Field;
use crate::error::{Error, Result};

/// A binary form together with an exact first-order perturbation of the
/// same twist.
#[derive(Clone, Debug, PartialEq)]
pub struct DualForm {
    value: BinaryForm,
    derivative: BinaryForm,
}

impl DualForm {
    /// Pair a value with its perturbation. The parts must share a twist;
    /// an identically-zero part adopts the twist of the other.
    pub fn new(value: BinaryForm, derivative: BinaryForm) -> Result<DualForm> {
        if value.field() != derivative.field() {
            return Err(Error::FieldMismatch(
                value.field().to_string(),
                derivative.field().to_string(),
            ));
        }
        if value.twist() == derivative.twist() {
            return Ok(DualForm { value, derivative });
        }
        if derivative.is_zero() {
            let t = value.twist();
            let f = value.field();
            return Ok(DualForm {
                value,
                derivative: BinaryForm::zero(f, t),
            });
        }
        if value.is_zero() {
            let t = derivative.twist();
            let f = derivative.field();
            return Ok(DualForm {
                value: BinaryForm::zero(f, t),
                derivative,
            });
        }
        Err(Error::TwistMismatch {
            context: "dual form parts",
            expected: value.twist(),
            found: derivative.twist(),
        })
    }

    /// Lift a form with zero perturbation.
    pub fn from_form(value: BinaryForm) -> DualForm {
        let t = value.twist();
        let f = value.field();
        DualForm {
            value,
            derivative: BinaryForm::zero(f, t),
        }
    }

    pub fn value(&self) -> &BinaryForm {
        &self.value
    }

    pub fn derivative(&self) -> &BinaryForm {
        &self.derivative
    }

    pub fn twist(&self) -> i64 {
        self.value.twist()
    }

    pub fn field(&self) -> Field {
        self.value.field()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero() && self.derivative.is_zero()
    }

    pub fn add(&self, other: &DualForm) -> DualForm {
        DualForm::new(
            self.value.checked_add(&other.value).expect("dual addition"),
            self.derivative
                .checked_add(&other.derivative)
                .expect("dual addition"),
        )
        .expect("twists preserved by addition")
    }

    pub fn sub(&self, other: &DualForm) -> DualForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DualForm {
        DualForm {
            value: self.value.neg(),
            derivative: self.derivative.neg(),
        }
    }

    pub fn mul(&self, other: &DualForm) -> DualForm {
        let value = self.value.mul(&other.value);
        // Fast paths: a pure (derivative-free) factor halves the work, and
        // most factors in a determinant expansion are pure.
        let derivative = match (self.derivative.is_zero(), other.derivative.is_zero()) {
            (true, true) => BinaryForm::zero(value.field(), value.twist()),
            (true, false) => self.value.mul(&other.derivative),
            (false, true) => self.derivative.mul(&other.value),
            (false, false) => self
                .value
                .mul(&other.derivative)
                .checked_add(&self.derivative.mul(&other.value))
                .expect("equal twists"),
        };
        DualForm { value, derivative }
    }
}
