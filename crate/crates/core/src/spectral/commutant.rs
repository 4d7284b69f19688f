//! The commutant of a twisted endomorphism inside the endomorphism
//! algebra of the bundle.

use crate::arith::form::{h0, BinaryForm};
use crate::arith::matrix::ScalarMat;
use crate::arith::scalar::Scalar;
use crate::spectral::types::TwistedEndo;

/// Dimension of `{ rho in End(E) : (rho ⊗ id) phi = phi rho }`.
///
/// `End(E)` is block lower triangular in the increasing-twist basis:
/// the `(i, j)` slot holds a form of twist `e~_i - e~_j` when that is
/// nonnegative. The commutator condition is linear in the coefficients of
/// `rho`; the dimension is the kernel dimension of that exact linear
/// system. Always at least 1 (scalars commute); equal to 1 whenever the
/// characteristic polynomial is irreducible.
pub fn commutant_dim(phi: &TwistedEndo) -> u64 {
    let expanded = phi.splitting_type().expanded();
    let n = expanded.len();
    let k = phi.k();
    let field = phi.field();

    // Unknowns: one column per admissible monomial coefficient of rho.
    let mut unknowns = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let t = expanded[i] - expanded[j];
            if t < 0 {
                continue;
            }
            for a in 0..=t as usize {
                unknowns.push((i, j, a, t));
            }
        }
    }
    // Equations: the commutator entry (i, j) is a form of twist
    // e~_i - e~_j + k; one row per coefficient of each admissible slot.
    let mut row_offsets = Vec::with_capacity(n * n);
    let mut rows = 0usize;
    for i in 0..n {
        for j in 0..n {
            row_offsets.push(rows);
            rows += h0(expanded[i] - expanded[j] + k) as usize;
        }
    }

    let mut mat = ScalarMat::zero(field, rows, unknowns.len());
    for (col, &(i0, j0, a, t_rho)) in unknowns.iter().enumerate() {
        // rho = x^a E_{i0 j0} as a section of O(e~_{i0} - e~_{j0}).
        let mut rho_entry = vec![field.zero(); h0(t_rho) as usize];
        rho_entry[a] = field.one();
        let rho_entry =
            BinaryForm::new(field, t_rho, rho_entry).expect("monomial within twist bound");
        // commutator C = rho phi - phi rho has nonzero entries only in
        // row i0 and column j0.
        for j in 0..n {
            // (rho phi)_{i0, j} = x^a phi_{j0, j}
            let prod = rho_entry.mul(phi.entry(j0, j));
            write_coeffs(
                &mut mat,
                row_offsets[i0 * n + j],
                expanded[i0] - expanded[j] + k,
                &prod,
                col,
                false,
            );
        }
        for i in 0..n {
            // (phi rho)_{i, j0} = phi_{i, i0} x^a
            let prod = phi.entry(i, i0).mul(&rho_entry);
            write_coeffs(
                &mut mat,
                row_offsets[i * n + j0],
                expanded[i] - expanded[j0] + k,
                &prod,
                col,
                true,
            );
        }
    }
    unknowns.len() as u64 - mat.rank() as u64
}

fn write_coeffs(
    mat: &mut ScalarMat,
    row_base: usize,
    slot_twist: i64,
    value: &BinaryForm,
    col: usize,
    subtract: bool,
) {
    if slot_twist < 0 {
        debug_assert!(value.is_zero());
        return;
    }
    for a in 0..=slot_twist as usize {
        let c: Scalar = value.coeff(a);
        if c.is_zero() {
            continue;
        }
        let existing = mat.get(row_base + a, col).clone();
        let updated = if subtract {
            existing.try_sub(&c).expect("same field")
        } else {
            existing.try_add(&c).expect("same field")
        };
        mat.set(row_base + a, col, updated);
    }
}
