//! Monte Carlo rank experiments on the Hitchin map.
//!
//! Each sample draws a uniform twisted endomorphism, measures the exact
//! rank of the differential and the dimension of its conjugation orbit,
//! and records whether its spectral polynomial is irreducible. Dominance
//! is declared from a single full-rank witness; its absence is only ever
//! reported as "no witness found", never as non-dominance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hitchin::differential::{commutator_direction, hitchin_differential};
use crate::hitchin::dims::{aut_dim, base_dim, end_twist_dim};
use crate::hitchin::endo::{random_aut, random_endo};
use crate::hitchin::sample::SplitMix64;
use crate::spectral::types::SplittingType;
use crate::spectral::{char_poly, commutant_dim, is_irreducible};

/// Per-sample measurements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleOutcome {
    /// Exact rank of the Hitchin differential at the sample.
    pub rank: u64,
    /// Dimension of the conjugation orbit through the sample:
    /// `dim End(E) - dim commutant`.
    pub orbit_dim: u64,
    /// Whether the sample's spectral polynomial is irreducible; `None`
    /// records an undecided sample (no squarefree specialization).
    pub irreducible: Option<bool>,
}

/// Aggregated rank experiment, reproducible from `(p, seed)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankExperiment {
    pub e: Vec<i64>,
    pub m: Vec<u64>,
    pub k: i64,
    pub p: u64,
    pub seed: u64,
    pub samples: u64,
    pub end_twist_dim: u64,
    pub aut_dim: u64,
    pub base_dim: u64,
    pub per_sample: Vec<SampleOutcome>,
    pub max_rank: u64,
    /// True when some sample's differential reached full base rank.
    pub dominant: bool,
    /// `end_twist_dim - (aut_dim - 1) - max_rank`.
    pub empirical_fiber_dim: i64,
}

/// Run `samples` independent draws. Sample `i` uses the generator derived
/// from `(seed, i)`, so the aggregate is independent of processing order.
pub fn run_rank_experiment(
    st: &SplittingType,
    k: i64,
    p: u64,
    seed: u64,
    samples: u64,
) -> Result<RankExperiment> {
    if samples < 1 {
        return Err(Error::invalid("samples", "need at least one sample"));
    }
    let end = end_twist_dim(st, k);
    let aut = aut_dim(st);
    let base = base_dim(st.rank(), k);
    let mut per_sample = Vec::with_capacity(samples as usize);
    let mut max_rank = 0u64;
    for i in 0..samples {
        let mut child = SplitMix64::derive(seed, i);
        let phi = random_endo(st, k, p, child.next_u64())?;
        let differential = hitchin_differential(&phi);
        let rank = differential.rank() as u64;
        debug_assert!(rank <= base.min(end));
        let commutant = commutant_dim(&phi);
        let orbit_dim = aut - commutant;
        // Orbit directions lie in the kernel of the differential; check a
        // sampled commutator direction exactly.
        let rho = random_aut(st, p, child.next_u64())?;
        let v = commutator_direction(&phi, &rho)?;
        if differential.mul_vec(&v).iter().any(|c| !c.is_zero()) {
            return Err(Error::invalid(
                "experiment",
                "commutator direction escaped the differential kernel",
            ));
        }
        if orbit_dim > end - rank {
            return Err(Error::invalid(
                "experiment",
                "orbit dimension exceeded the kernel dimension",
            ));
        }
        let irreducible = match char_poly(&phi).and_then(|chi| is_irreducible(&chi)) {
            Ok(b) => Some(b),
            Err(Error::NoSquarefreeSpecialization) => None,
            Err(e) => return Err(e),
        };
        max_rank = max_rank.max(rank);
        per_sample.push(SampleOutcome {
            rank,
            orbit_dim,
            irreducible,
        });
    }
    Ok(RankExperiment {
        e: st.twists().to_vec(),
        m: st.multiplicities().to_vec(),
        k,
        p,
        seed,
        samples,
        end_twist_dim: end,
        aut_dim: aut,
        base_dim: base,
        per_sample,
        max_rank,
        dominant: max_rank == base,
        empirical_fiber_dim: end as i64 - (aut as i64 - 1) - max_rank as i64,
    })
}
