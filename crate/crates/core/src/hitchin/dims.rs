//! Dimension bookkeeping for splitting loci: automorphism groups,
//! twisted-endomorphism spaces, and the expected-dimension formulas.

use serde::{Deserialize, Serialize};

use crate::arith::form::h0;
use crate::spectral::genus;
use crate::spectral::types::SplittingType;

/// Dimension of the automorphism group of the split bundle:
/// `sum_{i <= j} (e_j - e_i + 1) m_i m_j` (block lower triangular
/// matrices with invertible constant diagonal blocks).
pub fn aut_dim(st: &SplittingType) -> u64 {
    let e = st.twists();
    let m = st.multiplicities();
    let mut dim = 0i64;
    for i in 0..e.len() {
        for j in i..e.len() {
            dim += (e[j] - e[i] + 1) * (m[i] * m[j]) as i64;
        }
    }
    dim as u64
}

/// `h^0(End(E) ⊗ O(k)) = sum over ordered pairs of
/// h0(e_i - e_j + k) m_i m_j`.
pub fn end_twist_dim(st: &SplittingType, k: i64) -> u64 {
    let e = st.twists();
    let m = st.multiplicities();
    let mut dim = 0u64;
    for i in 0..e.len() {
        for j in 0..e.len() {
            dim += h0(e[i] - e[j] + k) * m[i] * m[j];
        }
    }
    dim
}

/// Dimension of the Hitchin base for rank `n` and twist `k`:
/// `sum_{i=1}^n h0(O(ik)) = n + k C(n+1, 2)`.
pub fn base_dim(n: u64, k: i64) -> u64 {
    (1..=n as i64).map(|i| h0(i * k)).sum()
}

/// Everything the dimension formulas say about one splitting type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub e: Vec<i64>,
    pub m: Vec<u64>,
    pub k: i64,
    /// `h^0(End(E) ⊗ O(k))`.
    pub end_twist_dim: u64,
    /// `dim Aut(E)`.
    pub aut_dim: u64,
    /// `sum_i h^0(O(ik)) = n + k C(n+1, 2)`.
    pub base_dim: u64,
    /// General upper bound: `end_twist_dim + 1 - aut_dim - base_dim`.
    pub expected_general: i64,
    /// Whether the balanced hypothesis `e_1 - e_l + k >= -1` holds.
    pub balanced_applicable: bool,
    /// Simplified formula `g - sum_{i<j} (e_j - e_i - 1) m_i m_j`, stated
    /// under the balanced hypothesis.
    pub expected_balanced: Option<i64>,
    /// The expected dimension over expanded twist pairs:
    /// `g - sum_{i<j} max(0, e~_j - e~_i - 1)`.
    pub rho_prime: i64,
    /// Genus of the associated smooth spectral curve.
    pub genus: u64,
}

/// Evaluate every dimension formula for a splitting type and twist.
pub fn expected_dims(st: &SplittingType, k: i64) -> DimensionReport {
    let n = st.rank();
    let e = st.twists();
    let m = st.multiplicities();
    let end = end_twist_dim(st, k);
    let aut = aut_dim(st);
    let base = base_dim(n, k);
    let g = genus(n, k as u64, 0).expect("nonnegative for n >= 1, k >= 1");
    let expected_general = end as i64 + 1 - aut as i64 - base as i64;
    let balanced_applicable = e[0] - e[e.len() - 1] + k >= -1;
    let gap_sum: i64 = {
        let mut acc = 0i64;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                acc += (e[j] - e[i] - 1) * (m[i] * m[j]) as i64;
            }
        }
        acc
    };
    let balanced_value = g as i64 - gap_sum;
    let expanded = st.expanded();
    let rho_prime = {
        let mut acc = 0i64;
        for i in 0..expanded.len() {
            for j in i + 1..expanded.len() {
                acc += 0.max(expanded[j] - expanded[i] - 1);
            }
        }
        g as i64 - acc
    };
    DimensionReport {
        e: e.to_vec(),
        m: m.to_vec(),
        k,
        end_twist_dim: end,
        aut_dim: aut,
        base_dim: base,
        expected_general,
        balanced_applicable,
        expected_balanced: balanced_applicable.then_some(balanced_value),
        rho_prime,
        genus: g,
    }
}

/// A consecutive twist gap larger than `k` forces the upper summands into
/// a phi-invariant subbundle for every twisted endomorphism of the type
/// (the connecting slots are structurally zero), so every characteristic
/// polynomial from the stratum factors. On an irreducible spectral curve
/// such a pushforward cannot occur: the stratum is empty and the Hitchin
/// map from it is never dominant, no matter the expected dimension.
pub fn has_forced_invariant_subbundle(st: &SplittingType, k: i64) -> bool {
    st.twists().windows(2).any(|w| w[1] - w[0] > k)
}

/// Enumerate every splitting type with rank at most `max_n` and twists in
/// `[-e_bound, e_bound]`, in a deterministic order.
pub fn enumerate_splitting_types(max_n: u64, e_bound: i64) -> Vec<SplittingType> {
    let mut out = Vec::new();
    let values: Vec<i64> = (-e_bound..=e_bound).collect();
    for n in 1..=max_n {
        for l in 1..=(n.min(values.len() as u64)) as usize {
            let mut subset = vec![0usize; l];
            enumerate_subsets(&values, l, 0, &mut subset, &mut |chosen| {
                let e: Vec<i64> = chosen.iter().map(|&i| values[i]).collect();
                for m in compositions(n, l as u64) {
                    out.push(SplittingType::new(e.clone(), m).unwrap());
                }
            });
        }
    }
    out
}

fn enumerate_subsets(
    values: &[i64],
    l: usize,
    depth: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if depth == l {
        f(chosen);
        return;
    }
    let start = if depth == 0 { 0 } else { chosen[depth - 1] + 1 };
    for i in start..values.len() {
        chosen[depth] = i;
        enumerate_subsets(values, l, depth + 1, chosen, f);
    }
}

/// Ordered compositions of `n` into exactly `parts` positive integers.
fn compositions(n: u64, parts: u64) -> Vec<Vec<u64>> {
    fn rec(n: u64, parts: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if parts == 1 {
            if n >= 1 {
                acc.push(n);
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for first in 1..=(n + 1 - parts) {
            acc.push(first);
            rec(n - first, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && n >= parts {
        rec(n, parts, &mut Vec::new(), &mut out);
    }
    out
}
