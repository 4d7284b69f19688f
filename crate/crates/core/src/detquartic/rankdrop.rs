//! Brute-force rank-drop point search for an augmented symmetric matrix
//! over a prime field.

use crate::arith::scalar::Field;
use crate::detquartic::symmat::AugmentedMat;
use crate::error::{Error, Result};

/// Enumerate all `p^2 + p + 1` points of the projective plane over `F_p`
/// and return those where the `d x (d+1)` matrix `[M(pt) | column]` has
/// rank below `d` (equivalently, where every `d x d` minor vanishes;
/// elimination with early exit decides the same condition).
///
/// Points are normalized (first nonzero coordinate 1) and returned in
/// lexicographic order of their coordinate triples.
pub fn rank_drop_points(a: &AugmentedMat) -> Result<Vec<[u64; 3]>> {
    let p = match a.base.field() {
        Field::Prime(p) => p,
        Field::Rational => return Err(Error::PrimeFieldRequired),
    };
    if p == 2 {
        return Err(Error::invalid("rank_drop_points", "p must be an odd prime"));
    }
    let d = a.base.size();
    // Pre-extract the linear forms and the column as residues.
    let coeffs: Vec<Vec<[u64; 3]>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let lf = a.base.entry(i, j);
                    [
                        lf.c[0].residue().expect("prime field"),
                        lf.c[1].residue().expect("prime field"),
                        lf.c[2].residue().expect("prime field"),
                    ]
                })
                .collect()
        })
        .collect();
    let column: Vec<u64> = a
        .column
        .iter()
        .map(|c| c.residue().expect("prime field"))
        .collect();

    let mut out = Vec::new();
    let mut consider = |pt: [u64; 3]| {
        if rank_drops(&coeffs, &column, pt, d, p) {
            out.push(pt);
        }
    };
    consider([0, 0, 1]);
    for b in 0..p {
        consider([0, 1, b]);
    }
    for x in 0..p {
        for b in 0..p {
            consider([1, x, b]);
        }
    }
    Ok(out)
}

fn rank_drops(coeffs: &[Vec<[u64; 3]>], column: &[u64], pt: [u64; 3], d: usize, p: u64) -> bool {
    // Evaluate the d x (d+1) matrix at the point.
    let mut m = vec![0u64; d * (d + 1)];
    let w = d + 1;
    for i in 0..d {
        for j in 0..d {
            let c = coeffs[i][j];
            let v = (c[0] as u128 * pt[0] as u128
                + c[1] as u128 * pt[1] as u128
                + c[2] as u128 * pt[2] as u128)
                % p as u128;
            m[i * w + j] = v as u64;
        }
        m[i * w + d] = column[i];
    }
    // Gaussian elimination; early exit once rank reaches d.
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..w {
        let pivot = (row..d).find(|&r| m[r * w + col] != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => continue,
        };
        if pivot != row {
            for j in 0..w {
                m.swap(row * w + j, pivot * w + j);
            }
        }
        let inv = inv_mod(m[row * w + col], p);
        for r in row + 1..d {
            let lead = m[r * w + col];
            if lead == 0 {
                continue;
            }
            let factor = mul_mod(lead, inv, p);
            for j in col..w {
                let t = mul_mod(factor, m[row * w + j], p);
                m[r * w + j] = sub_mod(m[r * w + j], t, p);
            }
        }
        rank += 1;
        if rank == d {
            return false;
        }
        row += 1;
    }
    rank < d
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::Scalar;
    use crate::detquartic::symmat::SymLinMat;
    use crate::detquartic::ternary::LinForm;

    fn diag(field: Field) -> SymLinMat {
        let zero = LinForm::from_ints(field, [0, 0, 0]);
        let mut entries = vec![vec![zero; 3]; 3];
        entries[0][0] = LinForm::from_ints(field, [1, 0, 0]);
        entries[1][1] = LinForm::from_ints(field, [0, 1, 0]);
        entries[2][2] = LinForm::from_ints(field, [0, 0, 1]);
        SymLinMat::from_entries(3, entries).unwrap()
    }

    #[test]
    fn zero_column_drops_on_the_curve() {
        // With a zero column the rank drops exactly on det M = 0, which
        // for diag(X0, X1, X2) is the union of the coordinate lines.
        let field = Field::prime(7).unwrap();
        let m = diag(field);
        let a = AugmentedMat::new(m, vec![field.zero(); 3]).unwrap();
        let pts = rank_drop_points(&a).unwrap();
        // Points with some coordinate zero: p^2 + p + 1 - p^2 + ... count:
        // points where X0 X1 X2 = 0. Complement: all coordinates nonzero:
        // (p-1)^2 points [1, a, b], a, b != 0. Total 57 - 36 = 21.
        assert_eq!(pts.len(), 21);
        for pt in pts {
            assert_eq!(pt[0].min(1) * pt[1].min(1) * pt[2].min(1), 0);
        }
    }

    #[test]
    fn column_rescaling_invariance() {
        let field = Field::prime(11).unwrap();
        let m = diag(field);
        let col: Vec<Scalar> = vec![field.from_int(1), field.from_int(2), field.from_int(3)];
        let a1 = AugmentedMat::new(m.clone(), col.clone()).unwrap();
        let scaled: Vec<Scalar> = col
            .iter()
            .map(|c| c.try_mul(&field.from_int(5)).unwrap())
            .collect();
        let a2 = AugmentedMat::new(m, scaled).unwrap();
        assert_eq!(
            rank_drop_points(&a1).unwrap(),
            rank_drop_points(&a2).unwrap()
        );
    }

    #[test]
    fn lexicographic_order() {
        let field = Field::prime(7).unwrap();
        let m = diag(field);
        let a = AugmentedMat::new(m, vec![field.zero(); 3]).unwrap();
        let pts = rank_drop_points(&a).unwrap();
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
    }
}
