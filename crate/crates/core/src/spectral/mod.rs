//! Spectral-curve side of the Hitchin correspondence: characteristic
//! polynomials of twisted endomorphisms, discriminants and branching
//! classification, genus and pushforward-degree formulas, companion
//! normal forms, commutants, and irreducibility certificates.

mod branching;
mod charpoly;
mod commutant;
mod irreducible;
pub mod types;

pub use branching::{classify_branching, discriminant, BranchPoint, BranchReport, BranchTag};
#[cfg(test)]
pub(crate) use charpoly::char_poly_dual;
pub use charpoly::{char_poly, companion, conjugate, invert_aut};
pub use commutant::commutant_dim;
pub use irreducible::is_irreducible;
pub use types::{EndoSlot, SpectralData, SplittingType, TwistedEndo};

use crate::error::{Error, Result};

/// Genus of a smooth spectral curve: `n (g - 1) + 1 + C(n, 2) deg N`.
/// Errors when the inputs are inconsistent (negative result).
pub fn genus(n: u64, deg_n: u64, g_base: u64) -> Result<u64> {
    let n_i = n as i64;
    let value = n_i * (g_base as i64 - 1) + 1 + binom2(n) as i64 * deg_n as i64;
    if value < 0 {
        Err(Error::NegativeGenus { n, deg_n, g_base })
    } else {
        Ok(value as u64)
    }
}

/// Degree of the pushforward of a line bundle of degree `deg L` along a
/// degree-`n` spectral cover: `deg L - C(n, 2) deg N`.
pub fn pushforward_degree(deg_l: i64, n: u64, deg_n: u64) -> i64 {
    deg_l - binom2(n) as i64 * deg_n as i64
}

pub(crate) fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: Riemann-Hurwitz for a degree-n cover of a
    /// genus-g base with branch divisor of degree n(n-1) deg N:
    /// 2 g~ - 2 = n (2g - 2) + deg(branch).
    fn riemann_hurwitz(n: u64, deg_n: u64, g_base: u64) -> i64 {
        let rhs = n as i64 * (2 * g_base as i64 - 2) + (n * (n - 1) * deg_n) as i64;
        // 2 g~ - 2 = rhs  =>  g~ = (rhs + 2) / 2
        (rhs + 2) / 2
    }

    #[test]
    fn genus_formula_against_riemann_hurwitz() {
        assert_eq!(genus(2, 1, 0).unwrap(), 0);
        assert_eq!(genus(3, 1, 0).unwrap(), 1);
        assert_eq!(genus(2, 1, 2).unwrap(), 4);
        for n in 1..=6 {
            for deg_n in 1..=4 {
                for g_base in 0..=3 {
                    let got = genus(n, deg_n, g_base).unwrap() as i64;
                    assert_eq!(got, riemann_hurwitz(n, deg_n, g_base));
                }
            }
        }
    }

    #[test]
    fn inconsistent_genus_data_rejected() {
        // deg N = 0 with n >= 2 drives the formula negative.
        assert!(matches!(
            genus(3, 0, 0),
            Err(Error::NegativeGenus { .. })
        ));
    }

    #[test]
    fn pushforward_degree_values() {
        assert_eq!(pushforward_degree(4, 2, 1), 3);
        // deg L = C(n,2) deg N gives zero
        assert_eq!(pushforward_degree(3, 3, 1), 0);
        // L = psi^* O(a): deg L = n a, pushforward splits as
        // sum of O(a - j k) whose degrees add to n a - C(n,2) k.
        for n in 1..=5i64 {
            for k in 1..=3i64 {
                for a in -4..=4i64 {
                    let direct: i64 = (0..n).map(|j| a - j * k).sum();
                    assert_eq!(pushforward_degree(n * a, n as u64, k as u64), direct);
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_consistency() {
        // sum_j chi(O(a - jk)) = deg psi^* O(a) + 1 - g(C~), with
        // chi(O(m)) = h0(m) - h0(-m - 2) and deg psi^* O(a) = n a on the
        // spectral curve. Exhaustive for n <= 5, k <= 3, |a| <= 10.
        use crate::arith::form::h0;
        for n in 1..=5u64 {
            for k in 1..=3i64 {
                for a in -10..=10i64 {
                    let lhs: i64 = (0..n as i64)
                        .map(|j| {
                            let m = a - j * k;
                            h0(m) as i64 - h0(-m - 2) as i64
                        })
                        .sum();
                    let g = genus(n, k as u64, 0).unwrap() as i64;
                    let rhs = n as i64 * a + 1 - g;
                    assert_eq!(lhs, rhs, "n={n} k={k} a={a}");
                }
            }
        }
    }
}
