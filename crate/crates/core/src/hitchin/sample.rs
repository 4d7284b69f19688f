//! Deterministic sampling. Every Monte Carlo experiment in the crate is a
//! pure function of `(p, seed)`: the master seed is split per sample with
//! [`SplitMix64::derive`], so samples are independent of processing order
//! and the experiment runner may process them concurrently without
//! changing any output.

/// SplitMix64 generator; tiny, fast, and stable across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// The seed-splitting contract: a child generator deterministic in
    /// `(master, index)`.
    pub fn derive(master: u64, index: u64) -> SplitMix64 {
        let mut g = SplitMix64::new(master ^ index.wrapping_mul(0x9e3779b97f4a7c15));
        g.next_u64();
        g
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `[0, bound)` by rejection sampling.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}
