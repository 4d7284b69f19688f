//! Arithmetic in small extension fields `F_{p^e}`, elements represented as
//! residues modulo a deterministically chosen irreducible polynomial.
//! Only what the brute-force singular-point search needs: ring ops,
//! inversion, iteration over all field elements, and univariate gcd/eval
//! over the extension.

use crate::arith::fpx::{self, Fp};

/// The field `F_{p^e}` with a fixed monic irreducible modulus.
#[derive(Clone, Debug)]
pub struct Fq {
    pub fp: Fp,
    pub e: u32,
    /// Monic irreducible of degree `e` over `F_p` (ascending coefficients).
    pub modulus: Vec<u64>,
}

/// An element: `e` residue coefficients, constant term first.
pub type FqElem = Vec<u64>;

impl Fq {
    /// Construct `F_{p^e}` with the lexicographically first monic
    /// irreducible modulus, so results are reproducible.
    pub fn new(p: u64, e: u32) -> Fq {
        let fp = Fp::new(p);
        assert!(e >= 1);
        if e == 1 {
            return Fq {
                fp,
                e,
                modulus: vec![0, 1],
            };
        }
        // Scan t^e + a_{e-1} t^{e-1} + ... + a_0 in lexicographic order of
        // (a_0, a_1, ...). Desk-scale degrees terminate immediately.
        let mut coeffs = vec![0u64; e as usize + 1];
        coeffs[e as usize] = 1;
        loop {
            if fpx::is_irreducible(fp, &coeffs) {
                return Fq {
                    fp,
                    e,
                    modulus: coeffs,
                };
            }
            // increment the a-vector in base p
            let mut i = 0usize;
            loop {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
                assert!(i < e as usize, "no irreducible of degree {e} found");
            }
        }
    }

    pub fn order(&self) -> u64 {
        self.fp.p.pow(self.e)
    }

    pub fn zero(&self) -> FqElem {
        vec![0; self.e as usize]
    }

    pub fn one(&self) -> FqElem {
        let mut v = self.zero();
        v[0] = 1 % self.fp.p;
        v
    }

    pub fn from_fp(&self, a: u64) -> FqElem {
        let mut v = self.zero();
        v[0] = a % self.fp.p;
        v
    }

    /// Element with index `i` in `[0, p^e)`: base-p digits of `i`.
    pub fn element(&self, mut i: u64) -> FqElem {
        let mut v = self.zero();
        for slot in v.iter_mut() {
            *slot = i % self.fp.p;
            i /= self.fp.p;
        }
        v
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter().zip(b).map(|(&x, &y)| self.fp.add(x, y)).collect()
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter().zip(b).map(|(&x, &y)| self.fp.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        a.iter().map(|&x| self.fp.neg(x)).collect()
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let prod = fpx::mul(self.fp, &a.to_vec(), &b.to_vec());
        let mut r = fpx::rem(self.fp, &prod, &self.modulus);
        r.resize(self.e as usize, 0);
        r
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "inverse of zero");
        // a^(q - 2)
        self.pow(a, self.order() - 2)
    }

    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Polynomials over `F_q`: dense ascending coefficients, trailing zeros
/// trimmed, zero = empty.
pub type FqPoly = Vec<FqElem>;

pub fn fq_trim(fq: &Fq, mut f: FqPoly) -> FqPoly {
    while f.last().map(|c| fq.is_zero(c)).unwrap_or(false) {
        f.pop();
    }
    f
}

pub fn fq_rem(fq: &Fq, f: &FqPoly, g: &FqPoly) -> FqPoly {
    let dg = g.len() - 1;
    let lead_inv = fq.inv(&g[dg]);
    let mut r = f.clone();
    while r.len() > dg {
        let top = r.last().unwrap().clone();
        if !fq.is_zero(&top) {
            let c = fq.mul(&top, &lead_inv);
            let shift = r.len() - 1 - dg;
            for (k, gc) in g.iter().enumerate() {
                let t = fq.mul(&c, gc);
                r[shift + k] = fq.sub(&r[shift + k], &t);
            }
        }
        r.pop();
        r = fq_trim(fq, r);
    }
    r
}

pub fn fq_gcd(fq: &Fq, f: &FqPoly, g: &FqPoly) -> FqPoly {
    let mut a = fq_trim(fq, f.clone());
    let mut b = fq_trim(fq, g.clone());
    while !b.is_empty() {
        let r = fq_rem(fq, &a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = a.len().checked_sub(1) {
        let inv = fq.inv(&a[d]);
        a = a.iter().map(|c| fq.mul(c, &inv)).collect();
    }
    a
}
