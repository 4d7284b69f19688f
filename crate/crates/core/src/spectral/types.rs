//! Domain types for the spectral side of the correspondence: splitting
//! types of vector bundles on the projective line, twisted endomorphisms,
//! and points of the Hitchin base.

use crate::arith::form::{h0, BinaryForm};
use crate::arith::matrix::FormMatrix;
use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};
use crate::hitchin::sample::SplitMix64;

/// The isomorphism class of a vector bundle on the projective line:
/// strictly increasing twists `e_1 < ... < e_l` with positive
/// multiplicities `m_1, ..., m_l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    e: Vec<i64>,
    m: Vec<u64>,
}

impl SplittingType {
    pub fn new(e: Vec<i64>, m: Vec<u64>) -> Result<SplittingType> {
        if e.is_empty() || e.len() != m.len() {
            return Err(Error::invalid(
                "splitting type",
                "twists and multiplicities must be nonempty lists of equal length",
            ));
        }
        if e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(
                "splitting type",
                "twists must be strictly increasing",
            ));
        }
        if m.iter().any(|&mi| mi == 0) {
            return Err(Error::invalid(
                "splitting type",
                "multiplicities must be positive",
            ));
        }
        Ok(SplittingType { e, m })
    }

    /// Compress a weakly increasing expanded twist vector into `(e, m)`.
    pub fn from_expanded(expanded: &[i64]) -> Result<SplittingType> {
        if expanded.is_empty() {
            return Err(Error::invalid("splitting type", "empty expanded vector"));
        }
        if expanded.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::invalid(
                "splitting type",
                "expanded twists must be weakly increasing",
            ));
        }
        let mut e = Vec::new();
        let mut m = Vec::new();
        for &t in expanded {
            if e.last() == Some(&t) {
                *m.last_mut().unwrap() += 1;
            } else {
                e.push(t);
                m.push(1);
            }
        }
        SplittingType::new(e, m)
    }

    pub fn twists(&self) -> &[i64] {
        &self.e
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.m
    }

    /// Number of distinct twists.
    pub fn blocks(&self) -> usize {
        self.e.len()
    }

    /// Rank of the bundle.
    pub fn rank(&self) -> u64 {
        self.m.iter().sum()
    }

    /// Degree of the bundle.
    pub fn degree(&self) -> i64 {
        self.e
            .iter()
            .zip(&self.m)
            .map(|(&e, &m)| e * m as i64)
            .sum()
    }

    /// The weakly increasing expanded twist vector, one entry per rank.
    pub fn expanded(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.rank() as usize);
        for (&e, &m) in self.e.iter().zip(&self.m) {
            out.extend(std::iter::repeat(e).take(m as usize));
        }
        out
    }
}

/// Coefficients of a spectral curve: `(s_1, ..., s_n)` with `s_i` a
/// section of `O(i k)`. A point of the Hitchin base.
///
/// The data is taken literally: the rescaling equivalence
/// `s_i -> lambda^i alpha^i s_i` is documented, never silently applied.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    n: u64,
    k: i64,
    field: Field,
    s: Vec<BinaryForm>,
}

impl SpectralData {
    pub fn new(k: i64, s: Vec<BinaryForm>) -> Result<SpectralData> {
        if s.is_empty() {
            return Err(Error::invalid("spectral data", "need n >= 1 coefficients"));
        }
        if k < 1 {
            return Err(Error::invalid("spectral data", "twist k must be positive"));
        }
        let field = s[0].field();
        let mut out = Vec::with_capacity(s.len());
        for (i, si) in s.into_iter().enumerate() {
            let want = (i as i64 + 1) * k;
            if si.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    si.field().to_string(),
                ));
            }
            if si.is_zero() {
                out.push(BinaryForm::zero(field, want));
            } else if si.twist() != want {
                return Err(Error::TwistMismatch {
                    context: "spectral coefficient s_i",
                    expected: want,
                    found: si.twist(),
                });
            } else {
                out.push(si);
            }
        }
        Ok(SpectralData {
            n: out.len() as u64,
            k,
            field,
            s: out,
        })
    }

    /// Uniform random data over `F_p`, deterministic in the seed.
    pub fn random(n: u64, k: i64, p: u64, seed: u64) -> Result<SpectralData> {
        let field = Field::prime(p)?;
        let mut rng = SplitMix64::new(seed);
        let s = (1..=n as i64)
            .map(|i| {
                let t = i * k;
                let coeffs: Vec<Scalar> = (0..h0(t))
                    .map(|_| field.from_int(rng.next_below(p) as i64))
                    .collect();
                BinaryForm::new(field, t, coeffs)
            })
            .collect::<Result<Vec<_>>>()?;
        SpectralData::new(k, s)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The coefficient `s_i`, 1-indexed as in the defining equation.
    pub fn s(&self, i: usize) -> &BinaryForm {
        &self.s[i - 1]
    }

    pub fn coefficients(&self) -> &[BinaryForm] {
        &self.s
    }

    /// Dimension of the Hitchin base this data lives in:
    /// `sum_i h0(O(ik))`.
    pub fn base_dim(&self) -> u64 {
        (1..=self.n as i64).map(|i| h0(i * self.k)).sum()
    }

    /// Flatten into the coefficient basis of the Hitchin base: the
    /// coefficients of `s_1`, then `s_2`, and so on.
    pub fn base_coordinates(&self) -> Vec<Scalar> {
        self.s.iter().flat_map(|f| f.coeffs().to_vec()).collect()
    }
}

/// A twisted endomorphism `phi: E -> E(k)` of the split bundle given by a
/// splitting type, stored as the full rank-by-rank matrix in the basis of
/// increasing twists. Entry `(i, j)` maps the summand `O(e~_j)` into
/// `O(e~_i + k)`, so it is a form of twist `e~_i - e~_j + k`, structurally
/// zero when that is negative.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedEndo {
    st: SplittingType,
    k: i64,
    field: Field,
    mat: FormMatrix,
}

impl TwistedEndo {
    pub fn new(st: SplittingType, k: i64, mat: FormMatrix) -> Result<TwistedEndo> {
        if k < 1 {
            return Err(Error::invalid("twisted endomorphism", "k must be positive"));
        }
        let n = st.rank() as usize;
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::invalid(
                "twisted endomorphism",
                format!("matrix must be {n}x{n}"),
            ));
        }
        let expanded = st.expanded();
        let mut mat = mat;
        mat.enforce_profile(|i, j| expanded[i] - expanded[j] + k)?;
        let field = mat.field();
        Ok(TwistedEndo { st, k, field, mat })
    }

    pub fn splitting_type(&self) -> &SplittingType {
        &self.st
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> u64 {
        self.st.rank()
    }

    pub fn matrix(&self) -> &FormMatrix {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &BinaryForm {
        self.mat.get(i, j)
    }

    /// Twist of the `(i, j)` slot.
    pub fn slot_twist(&self, i: usize, j: usize) -> i64 {
        let expanded = self.st.expanded();
        expanded[i] - expanded[j] + self.k
    }

    /// Total coordinate dimension: the number of free coefficients over
    /// all admissible slots, `sum_{i,j} h0(e~_i - e~_j + k)`.
    pub fn coordinate_dim(&self) -> u64 {
        let expanded = self.st.expanded();
        let n = expanded.len();
        let mut dim = 0;
        for i in 0..n {
            for j in 0..n {
                dim += h0(expanded[i] - expanded[j] + self.k);
            }
        }
        dim
    }

    /// Enumerate the admissible coefficient slots in the canonical order
    /// used by the differential and by samplers: row-major over `(i, j)`,
    /// ascending monomial degree within a slot.
    pub fn slots(&self) -> Vec<EndoSlot> {
        let expanded = self.st.expanded();
        let n = expanded.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let t = expanded[i] - expanded[j] + self.k;
                if t < 0 {
                    continue;
                }
                for a in 0..=t as usize {
                    out.push(EndoSlot {
                        row: i,
                        col: j,
                        monomial: a,
                        twist: t,
                    });
                }
            }
        }
        out
    }
}

/// One free coefficient of a twisted endomorphism: the coefficient of
/// `x^monomial` in the form at `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndoSlot {
    pub row: usize,
    pub col: usize,
    pub monomial: usize,
    pub twist: i64,
}
