//! Seeded samplers for twisted endomorphisms and bundle automorphisms.

use crate::arith::form::{h0, BinaryForm};
use crate::arith::matrix::{FormMatrix, ScalarMat};
use crate::arith::scalar::{Field, Scalar};
use crate::error::Result;
use crate::hitchin::sample::SplitMix64;
use crate::spectral::types::{SplittingType, TwistedEndo};

/// A twisted endomorphism with independent uniform coefficients in every
/// admissible monomial slot, deterministic in the seed. Sampling order is
/// the canonical slot order (row-major, ascending monomial degree).
pub fn random_endo(st: &SplittingType, k: i64, p: u64, seed: u64) -> Result<TwistedEndo> {
    let field = Field::prime(p)?;
    let mut rng = SplitMix64::new(seed);
    let expanded = st.expanded();
    let n = expanded.len();
    let mat = FormMatrix::from_fn(n, n, |i, j| {
        let t = expanded[i] - expanded[j] + k;
        random_form(&mut rng, field, p, t)
    });
    TwistedEndo::new(st.clone(), k, mat)
}

/// A random automorphism of the split bundle: block lower triangular in
/// the increasing-twist basis, with each constant diagonal block resampled
/// until invertible and uniform form entries strictly below.
pub fn random_aut(st: &SplittingType, p: u64, seed: u64) -> Result<FormMatrix> {
    let field = Field::prime(p)?;
    let mut rng = SplitMix64::new(seed);
    let expanded = st.expanded();
    let n = expanded.len();
    let mut mat = FormMatrix::from_fn(n, n, |_, _| BinaryForm::zero(field, -1));
    // Strictly-lower slots (positive twist gap) and off-diagonal zero gap
    // slots within a block are all sampled; i < j slots stay zero.
    // Group indices by twist to locate diagonal blocks.
    let mut start = 0usize;
    while start < n {
        let mut end = start;
        while end < n && expanded[end] == expanded[start] {
            end += 1;
        }
        // diagonal block [start, end): resample until invertible
        loop {
            let block: Vec<Vec<Scalar>> = (start..end)
                .map(|_| {
                    (start..end)
                        .map(|_| field.from_int(rng.next_below(p) as i64))
                        .collect()
                })
                .collect();
            let sm = ScalarMat::from_rows(block.clone());
            if sm.rank() == end - start {
                for (bi, row) in block.iter().enumerate() {
                    for (bj, c) in row.iter().enumerate() {
                        let mut form = BinaryForm::zero(field, 0);
                        if !c.is_zero() {
                            form = BinaryForm::new(field, 0, vec![c.clone()]).unwrap();
                        }
                        mat.set(start + bi, start + bj, form);
                    }
                }
                break;
            }
        }
        start = end;
    }
    for i in 0..n {
        for j in 0..n {
            let t = expanded[i] - expanded[j];
            if t > 0 {
                mat.set(i, j, random_form(&mut rng, field, p, t));
            }
        }
    }
    Ok(mat)
}

fn random_form(rng: &mut SplitMix64, field: Field, p: u64, twist: i64) -> BinaryForm {
    if twist < 0 {
        return BinaryForm::zero(field, twist);
    }
    let coeffs: Vec<Scalar> = (0..h0(twist))
        .map(|_| field.from_int(rng.next_below(p) as i64))
        .collect();
    BinaryForm::new(field, twist, coeffs).expect("consistent construction")
}
