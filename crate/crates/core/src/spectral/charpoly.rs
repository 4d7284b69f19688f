//! Characteristic polynomials of twisted endomorphisms, the companion
//! normal form, and conjugation by bundle automorphisms.

#[cfg(test)]
use crate::arith::dual::DualForm;
use crate::arith::form::BinaryForm;
use crate::arith::matrix::{FormMatrix, ScalarMat};
use crate::arith::scalar::Field;
use crate::arith::tpoly::{det_bareiss, det_laplace, FormOps, TPoly};
use crate::error::{Error, Result};
use crate::spectral::types::{SpectralData, SplittingType, TwistedEndo};

/// Coefficients of `det(T id - phi) = T^n + s_1 T^(n-1) + ... + s_n`,
/// computed by exact expansion. `s_i` is a form of twist `i k`; the twist
/// bounds are asserted, never truncated.
///
/// Exact cofactor expansion is used up to rank 4, fraction-free
/// elimination beyond.
pub fn char_poly(phi: &TwistedEndo) -> Result<SpectralData> {
    let n = phi.rank() as usize;
    let field = phi.field();
    let mat = char_matrix(phi.matrix(), field, |f| f.clone());
    let chi = if n <= 4 {
        det_laplace(&mat).expect("nonempty matrix")
    } else {
        det_bareiss(&mat)?
    };
    extract_spectral_data(&chi, n, phi.k(), field)
}

/// The characteristic polynomial of a dual-form matrix: the value part is
/// `char_poly` of the values, the derivative part carries the exact
/// directional derivative along the perturbation. Cofactor expansion
/// throughout (dual numbers admit no fraction-free pivoting). This is the
/// reference implementation the optimized differential is tested against.
#[cfg(test)]
pub(crate) fn char_poly_dual(
    mat: &FormMatrix,
    perturbation: &FormMatrix,
    field: Field,
) -> TPoly<DualForm> {
    let n = mat.rows();
    let entries: Vec<Vec<TPoly<DualForm>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = DualForm::new(mat.get(i, j).clone(), perturbation.get(i, j).clone())
                        .expect("aligned perturbation");
                    let neg = e.neg();
                    if i == j {
                        TPoly::new(vec![
                            neg,
                            DualForm::from_form(BinaryForm::constant(field, 1)),
                        ])
                    } else {
                        TPoly::new(vec![neg])
                    }
                })
                .collect()
        })
        .collect();
    det_laplace(&entries).expect("nonempty matrix")
}

fn char_matrix<T: FormOps>(
    mat: &FormMatrix,
    field: Field,
    lift: impl Fn(&BinaryForm) -> T,
) -> Vec<Vec<TPoly<T>>> {
    let n = mat.rows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let neg = lift(mat.get(i, j)).neg();
                    if i == j {
                        TPoly::new(vec![neg, lift(&BinaryForm::constant(field, 1))])
                    } else {
                        TPoly::new(vec![neg])
                    }
                })
                .collect()
        })
        .collect()
}

fn extract_spectral_data(
    chi: &TPoly<BinaryForm>,
    n: usize,
    k: i64,
    field: Field,
) -> Result<SpectralData> {
    if chi.degree() != Some(n) {
        return Err(Error::invalid(
            "char_poly",
            "characteristic polynomial lost its leading term",
        ));
    }
    let lead = chi.coeff(n).unwrap();
    if !(lead.twist() == 0 && lead.coeff(0).is_one()) {
        return Err(Error::invalid("char_poly", "expected a monic polynomial"));
    }
    let mut s = Vec::with_capacity(n);
    for i in 1..=n {
        let want = i as i64 * k;
        let c = chi
            .coeff(n - i)
            .cloned()
            .unwrap_or_else(|| BinaryForm::zero(field, want));
        if c.is_zero() {
            s.push(BinaryForm::zero(field, want));
        } else if c.twist() != want {
            return Err(Error::TwistMismatch {
                context: "char_poly coefficient",
                expected: want,
                found: c.twist(),
            });
        } else {
            s.push(c);
        }
    }
    SpectralData::new(k, s)
}

/// The companion twisted endomorphism of spectral data, on the splitting
/// type `(a - (n-1)k, ..., a - k, a)` with all multiplicities one. In the
/// increasing-twist basis used throughout, the matrix has 1's on the
/// superdiagonal and first column `(-s_1, ..., -s_n)`; this is the
/// classical subdiagonal companion normal form written after reversing
/// the summand order, the unique arrangement whose entries respect the
/// twist profile. Round trip: `char_poly(companion(s, a)) == s`, exactly.
pub fn companion(s: &SpectralData, a: i64) -> TwistedEndo {
    let n = s.n() as usize;
    let k = s.k();
    let field = s.field();
    let e: Vec<i64> = (0..n).map(|i| a - (n - 1 - i) as i64 * k).collect();
    let st = SplittingType::new(e, vec![1; n]).expect("strictly increasing ladder");
    let mut mat = FormMatrix::from_fn(n, n, |_, _| BinaryForm::zero(field, -1));
    for i in 0..n {
        mat.set(i, 0, s.s(i + 1).neg());
        if i + 1 < n {
            mat.set(i, i + 1, BinaryForm::constant(field, 1));
        }
    }
    TwistedEndo::new(st, k, mat).expect("companion respects the twist profile")
}

/// Conjugate `phi` by a bundle automorphism `g`: the twisted endomorphism
/// `g phi g^{-1}`. `g` must be a valid endomorphism matrix of the bundle
/// (block lower triangular in the increasing-twist basis) with invertible
/// diagonal blocks.
pub fn conjugate(phi: &TwistedEndo, g: &FormMatrix) -> Result<TwistedEndo> {
    let st = phi.splitting_type().clone();
    let g_inv = invert_aut(&st, g)?;
    let conj = g.mul(&phi.matrix().mul(&g_inv));
    TwistedEndo::new(st, phi.k(), conj)
}

/// Invert a block-lower-triangular automorphism matrix by blockwise
/// forward substitution; entries of the inverse are again forms of twist
/// `e~_i - e~_j`.
pub fn invert_aut(st: &SplittingType, g: &FormMatrix) -> Result<FormMatrix> {
    let expanded = st.expanded();
    let n = expanded.len();
    if g.rows() != n || g.cols() != n {
        return Err(Error::invalid("automorphism", "dimension mismatch"));
    }
    {
        let mut g_check = g.clone();
        g_check.enforce_profile(|i, j| expanded[i] - expanded[j])?;
    }
    let field = g.field();
    // Group expanded indices by twist value: the diagonal blocks.
    let mut groups: Vec<(i64, Vec<usize>)> = Vec::new();
    for (idx, &t) in expanded.iter().enumerate() {
        match groups.last_mut() {
            Some((gt, v)) if *gt == t => v.push(idx),
            _ => groups.push((t, vec![idx])),
        }
    }
    let l = groups.len();
    // Invert each diagonal block as a scalar matrix.
    let mut diag_inv: Vec<ScalarMat> = Vec::with_capacity(l);
    for (_, idxs) in &groups {
        let m = ScalarMat::from_rows(
            idxs.iter()
                .map(|&i| idxs.iter().map(|&j| g.get(i, j).coeff(0)).collect())
                .collect(),
        );
        let inv = m
            .inverse()
            .ok_or_else(|| Error::invalid("automorphism", "singular diagonal block"))?;
        diag_inv.push(inv);
    }
    let scalar_to_form = |c: &crate::arith::Scalar| {
        let mut f = BinaryForm::zero(field, 0);
        if !c.is_zero() {
            f = BinaryForm::new(field, 0, vec![c.clone()]).unwrap();
        }
        f
    };
    let mut inv = FormMatrix::from_fn(n, n, |_, _| BinaryForm::zero(field, -1));
    // X_tt = A_tt^{-1}
    for (t, (_, idxs)) in groups.iter().enumerate() {
        for (bi, &i) in idxs.iter().enumerate() {
            for (bj, &j) in idxs.iter().enumerate() {
                inv.set(i, j, scalar_to_form(diag_inv[t].get(bi, bj)));
            }
        }
    }
    // X_ts = -A_tt^{-1} sum_{s <= u < t} G_tu X_us, strictly below the
    // diagonal, filled in order of increasing t - s.
    for t in 1..l {
        for s in (0..t).rev() {
            let (rows_t, cols_s) = (&groups[t].1, &groups[s].1);
            // acc = sum over u in s..t of G[t][u] * X[u][s]
            let mut acc: Vec<Vec<BinaryForm>> =
                vec![vec![BinaryForm::zero(field, -1); cols_s.len()]; rows_t.len()];
            for u in s..t {
                let mids = &groups[u].1;
                for (bi, &i) in rows_t.iter().enumerate() {
                    for (bj, &j) in cols_s.iter().enumerate() {
                        for &mid in mids {
                            let a = g.get(i, mid);
                            let b = inv.get(mid, j);
                            if a.is_zero() || b.is_zero() {
                                continue;
                            }
                            acc[bi][bj] = acc[bi][bj]
                                .checked_add(&a.mul(b))
                                .expect("twist-homogeneous accumulation");
                        }
                    }
                }
            }
            // multiply by -A_tt^{-1} on the left (scalar block times forms)
            for (bi, &i) in rows_t.iter().enumerate() {
                for (bj, &j) in cols_s.iter().enumerate() {
                    let mut entry = BinaryForm::zero(field, -1);
                    for (bk, _) in rows_t.iter().enumerate() {
                        let c = diag_inv[t].get(bi, bk);
                        if c.is_zero() || acc[bk][bj].is_zero() {
                            continue;
                        }
                        entry = entry
                            .checked_add(&acc[bk][bj].scale(c))
                            .expect("twist-homogeneous accumulation");
                    }
                    inv.set(i, j, entry.neg());
                }
            }
        }
    }
    Ok(inv)
}
