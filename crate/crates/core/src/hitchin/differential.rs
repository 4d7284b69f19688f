//! The exact differential of the Hitchin map at a twisted endomorphism.
//!
//! The column for a basis direction `delta` is the epsilon-linear part of
//! `char_poly(phi + eps delta)`, computed with dual-form arithmetic. Since
//! a basis direction perturbs a single matrix entry, the determinant is
//! expanded along that entry's row: the complementary minors are
//! perturbation-free and shared by every direction in the row, which keeps
//! the whole matrix cheap without leaving dual arithmetic.

use crate::arith::dual::DualForm;
use crate::arith::form::BinaryForm;
use crate::arith::matrix::{FormMatrix, ScalarMat};
use crate::arith::scalar::Scalar;
use crate::arith::tpoly::{det_laplace, TPoly};
use crate::error::Result;
use crate::spectral::types::TwistedEndo;

/// Matrix of the differential at `phi`: `base_dim` rows (coefficients of
/// `d s_1, ..., d s_n`) by `coordinate_dim` columns (the admissible slots
/// in canonical order).
pub fn hitchin_differential(phi: &TwistedEndo) -> ScalarMat {
    let n = phi.rank() as usize;
    let k = phi.k();
    let field = phi.field();
    let base_dim: usize = (1..=n as i64).map(|i| (i * k + 1) as usize).sum();
    let slots = phi.slots();
    let mut out = ScalarMat::zero(field, base_dim, slots.len());

    // T id - phi over plain forms, for the shared minors.
    let char_mat: Vec<Vec<TPoly<BinaryForm>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let neg = phi.entry(i, j).neg();
                    if i == j {
                        TPoly::new(vec![neg, BinaryForm::constant(field, 1)])
                    } else {
                        TPoly::new(vec![neg])
                    }
                })
                .collect()
        })
        .collect();

    let mut minor_cache: Vec<Option<Vec<TPoly<DualForm>>>> = vec![None; n];

    for (col, slot) in slots.iter().enumerate() {
        let row = slot.row;
        if minor_cache[row].is_none() {
            let minors = (0..n)
                .map(|j| {
                    let real = row_minor(&char_mat, row, j);
                    lift_tpoly(&real)
                })
                .collect();
            minor_cache[row] = Some(minors);
        }
        let minors = minor_cache[row].as_ref().unwrap();

        // Dual entries of row `row` of T id - (phi + eps x^a E_{row,col}).
        let unit = monomial(field, slot.twist, slot.monomial);
        let mut acc: Option<TPoly<DualForm>> = None;
        for j in 0..n {
            let value = phi.entry(row, j).neg();
            let derivative = if j == slot.col {
                unit.neg()
            } else {
                BinaryForm::zero(field, -1)
            };
            let entry_dual = DualForm::new(value, derivative).expect("aligned parts");
            let entry = if row == j {
                TPoly::new(vec![
                    entry_dual,
                    DualForm::from_form(BinaryForm::constant(field, 1)),
                ])
            } else {
                TPoly::new(vec![entry_dual])
            };
            let term = entry.mul(&minors[j]);
            let term = if (row + j) % 2 == 1 { term.neg() } else { term };
            acc = Some(match acc {
                Some(a) => a.add(&term),
                None => term,
            });
        }
        let chi_dual = acc.expect("n >= 1");

        // Flatten the derivative parts of d s_i into the base basis.
        let mut r = 0usize;
        for i in 1..=n {
            let twist = i as i64 * k;
            let ds = chi_dual.coeff(n - i).map(|c| c.derivative().clone());
            for a in 0..=twist as usize {
                if let Some(ds) = &ds {
                    let c: Scalar = ds.coeff(a);
                    if !c.is_zero() {
                        out.set(r, col, c);
                    }
                }
                r += 1;
            }
        }
    }
    out
}

/// Minor of the characteristic matrix with `row` and column `j` removed.
fn row_minor(mat: &[Vec<TPoly<BinaryForm>>], row: usize, j: usize) -> TPoly<BinaryForm> {
    let n = mat.len();
    if n == 1 {
        // Empty minor: the determinant convention is 1.
        let field = mat[0][0].coeffs().first().expect("nonzero entry").field();
        return TPoly::constant(BinaryForm::constant(field, 1));
    }
    let sub: Vec<Vec<TPoly<BinaryForm>>> = (0..n)
        .filter(|&r| r != row)
        .map(|r| {
            (0..n)
                .filter(|&c| c != j)
                .map(|c| mat[r][c].clone())
                .collect()
        })
        .collect();
    det_laplace(&sub).expect("nonempty minor")
}

fn lift_tpoly(p: &TPoly<BinaryForm>) -> TPoly<DualForm> {
    TPoly::new(
        p.coeffs()
            .iter()
            .map(|c| DualForm::from_form(c.clone()))
            .collect(),
    )
}

fn monomial(field: crate::arith::Field, twist: i64, a: usize) -> BinaryForm {
    let mut coeffs = vec![field.zero(); (twist + 1) as usize];
    coeffs[a] = field.one();
    BinaryForm::new(field, twist, coeffs).expect("monomial within twist")
}

/// Flattened coordinates of the commutator direction
/// `(rho ⊗ id) phi - phi rho` for an endomorphism matrix `rho`; these
/// directions span the tangent space of the conjugation orbit and lie in
/// the kernel of the differential.
pub fn commutator_direction(phi: &TwistedEndo, rho: &FormMatrix) -> Result<Vec<Scalar>> {
    let st = phi.splitting_type().clone();
    let commutator = rho.mul(phi.matrix()).sub(&phi.matrix().mul(rho));
    let as_endo = TwistedEndo::new(st, phi.k(), commutator)?;
    Ok(endo_coordinates(&as_endo))
}

/// Coefficients of a twisted endomorphism in the canonical slot order.
pub fn endo_coordinates(phi: &TwistedEndo) -> Vec<Scalar> {
    phi.slots()
        .iter()
        .map(|slot| phi.entry(slot.row, slot.col).coeff(slot.monomial))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Field;
    use crate::hitchin::endo::{random_aut, random_endo};
    use crate::hitchin::sample::SplitMix64;
    use crate::spectral::types::{SpectralData, SplittingType};
    use crate::spectral::{char_poly, char_poly_dual};

    fn f1009() -> Field {
        Field::prime(1009).unwrap()
    }

    #[test]
    fn rank_one_differential_is_identity() {
        let st = SplittingType::new(vec![0], vec![1]).unwrap();
        let k = 3i64;
        let phi = random_endo(&st, k, 1009, 5).unwrap();
        let d = hitchin_differential(&phi);
        assert_eq!(d.rows(), (k + 1) as usize);
        assert_eq!(d.cols(), (k + 1) as usize);
        let f = f1009();
        // s_1 = -phi_11, so the differential sends the unit direction in
        // slot a to -1 times the corresponding base coordinate.
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j { f.from_int(-1) } else { f.zero() };
                assert_eq!(d.get(i, j), &expect);
            }
        }
    }

    #[test]
    fn matches_naive_dual_char_poly() {
        let mut rng = SplitMix64::new(31);
        let f = f1009();
        let configs = [
            (SplittingType::new(vec![0, 1], vec![1, 2]).unwrap(), 2i64),
            // boundary type with a structurally zero slot
            (SplittingType::new(vec![0, 2], vec![1, 1]).unwrap(), 1),
            (SplittingType::new(vec![-1, 0, 1], vec![1, 2, 1]).unwrap(), 1),
        ];
        for (st, k) in configs.iter().cycle().take(6).cloned() {
            let phi = random_endo(&st, k, 1009, rng.next_u64()).unwrap();
            let d = hitchin_differential(&phi);
            let n = phi.rank() as usize;
            for (col, slot) in phi.slots().iter().enumerate() {
                // naive: full dual matrix with the unit perturbation
                let pert = FormMatrix::from_fn(n, n, |i, j| {
                    if (i, j) == (slot.row, slot.col) {
                        monomial(f, slot.twist, slot.monomial)
                    } else {
                        BinaryForm::zero(f, -1)
                    }
                });
                let chi = char_poly_dual(phi.matrix(), &pert, f);
                let mut r = 0usize;
                for i in 1..=n {
                    let twist = i as i64 * k;
                    let ds = chi.coeff(n - i).map(|c| c.derivative().clone());
                    for a in 0..=twist as usize {
                        let expect = ds
                            .as_ref()
                            .map(|form| form.coeff(a))
                            .unwrap_or_else(|| f.zero());
                        assert_eq!(d.get(r, col), &expect, "col {col} row {r}");
                        r += 1;
                    }
                }
            }
        }
    }

    #[test]
    fn finite_difference_oracle() {
        // Along a single-slot direction every char-poly coefficient is an
        // affine function of the increment, so the exact column equals
        // char_poly(phi + delta) - char_poly(phi); checked at two scaled
        // field points.
        let mut rng = SplitMix64::new(77);
        let f = f1009();
        let st = SplittingType::new(vec![0], vec![2]).unwrap();
        let k = 1;
        let phi = random_endo(&st, k, 1009, rng.next_u64()).unwrap();
        let d = hitchin_differential(&phi);
        let n = 2usize;
        for (col, slot) in phi.slots().iter().enumerate() {
            for t in [1i64, 7] {
                let mut mat = phi.matrix().clone();
                let bump = monomial(f, slot.twist, slot.monomial).scale(&f.from_int(t));
                let entry = mat.get(slot.row, slot.col).clone();
                mat.set(slot.row, slot.col, entry.checked_add(&bump).unwrap());
                let phi_t = TwistedEndo::new(phi.splitting_type().clone(), k, mat).unwrap();
                let chi_t = char_poly(&phi_t).unwrap();
                let chi_0 = char_poly(&phi).unwrap();
                let t_inv = f.from_int(t).inv().unwrap();
                let mut r = 0usize;
                for i in 1..=n {
                    let twist = i as i64 * k;
                    let diff = chi_t.s(i).checked_sub(chi_0.s(i)).unwrap();
                    for a in 0..=twist as usize {
                        let slope = diff.coeff(a).try_mul(&t_inv).unwrap();
                        assert_eq!(d.get(r, col), &slope);
                        r += 1;
                    }
                }
            }
        }
        let _ = SpectralData::random(1, 1, 7, 0);
    }

    #[test]
    fn commutator_directions_in_kernel() {
        let mut rng = SplitMix64::new(13);
        for _ in 0..5 {
            let st = SplittingType::new(vec![-1, 1], vec![1, 2]).unwrap();
            let k = 2;
            let phi = random_endo(&st, k, 1009, rng.next_u64()).unwrap();
            let d = hitchin_differential(&phi);
            // Random endomorphism rho (not necessarily invertible): use an
            // automorphism sample, which is a valid endomorphism matrix.
            let rho = random_aut(&st, 1009, rng.next_u64()).unwrap();
            let v = commutator_direction(&phi, &rho).unwrap();
            let image = d.mul_vec(&v);
            assert!(image.iter().all(|c| c.is_zero()));
        }
    }
}
