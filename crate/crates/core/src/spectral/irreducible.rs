//! Exact irreducibility of the spectral polynomial over the univariate
//! function field, decided by Hensel lifting.
//!
//! Any monic factor of `chi = T^n + s_1 T^(n-1) + ... + s_n` over
//! `F_p(x)` has coefficients in `F_p[x]` (Gauss), and the twist grading
//! bounds the x-degree of a degree-`g` factor's coefficients by `g k`:
//! the Newton polygon at infinity has all slopes at least `-k`, so every
//! sub-product of branches obeys the graded bound. The algorithm
//! specializes `x` at a point with squarefree fiber, factors the fiber,
//! lifts each sub-product factorization modulo powers of `(x - x0)` past
//! twice the coefficient degree bound, and trial-divides the truncated
//! candidates.

use crate::arith::form::BinaryForm;
use crate::arith::fpx::{self, Fp, Poly};
use crate::arith::scalar::Field;
use crate::arith::tpoly::TPoly;
use crate::error::{Error, Result};
use crate::spectral::branching::{chi_tpoly, to_fpx};
use crate::spectral::types::SpectralData;

/// True exactly when `chi` is irreducible as a polynomial in `T` over
/// `F_p(x)`. Requires prime-field coefficients and characteristic
/// exceeding `n`; errors with [`Error::NoSquarefreeSpecialization`] when
/// every fiber over the base field is non-squarefree (the caller should
/// pre-check the discriminant in that case).
pub fn is_irreducible(s: &SpectralData) -> Result<bool> {
    let p = match s.field() {
        Field::Prime(p) => p,
        Field::Rational => return Err(Error::PrimeFieldRequired),
    };
    let n = s.n();
    if p <= n {
        return Err(Error::CharacteristicTooSmall {
            p,
            bound: n as i64,
            context: "is_irreducible",
        });
    }
    if n == 1 {
        return Ok(true);
    }
    let fp = Fp::new(p);
    // chi as a vector of x-polynomials, ascending in T.
    let chi: Vec<Poly> = {
        let mut v: Vec<Poly> = Vec::with_capacity(n as usize + 1);
        for i in (1..=n as usize).rev() {
            v.push(to_fpx(s.s(i)));
        }
        v.push(vec![1]);
        v
    };

    // A specialization point with squarefree fiber.
    let (x0, fiber) = match (0..p).find_map(|x0| {
        let fiber = eval_chi(fp, &chi, x0);
        let deriv = fpx::derivative(fp, &fiber);
        let g = fpx::gcd(fp, &fiber, &deriv);
        if fpx::deg(&g) == Some(0) {
            Some((x0, fiber))
        } else {
            None
        }
    }) {
        Some(found) => found,
        None => return Err(Error::NoSquarefreeSpecialization),
    };

    let factors = fpx::factor_squarefree(fp, &fiber);
    if factors.len() == 1 {
        return Ok(true);
    }

    // Shift to u = x - x0 and lift each sub-product split, to precision
    // past twice the degree bound n k.
    let bound = (n as i64 * s.k()) as usize;
    let prec = 2 * bound + 2;
    let chi_shifted: Vec<Poly> = chi.iter().map(|c| fpx::shift(fp, c, x0)).collect();

    let r = factors.len();
    // Sub-products by bitmask: factor 0 always joins g0 and the mask picks
    // which of the others follow, so each split is covered once (the
    // all-ones mask leaves h0 constant and is skipped below).
    for mask in 0u32..(1 << (r - 1)) {
        let mut g0 = vec![1u64];
        let mut h0 = vec![1u64];
        for (idx, fac) in factors.iter().enumerate() {
            let in_g = idx == 0 || (mask >> (idx - 1)) & 1 == 1;
            if in_g {
                g0 = fpx::mul(fp, &g0, fac);
            } else {
                h0 = fpx::mul(fp, &h0, fac);
            }
        }
        if fpx::deg(&h0) == Some(0) {
            continue;
        }
        let lifted = hensel_lift(fp, &chi_shifted, &g0, &h0, prec);
        let deg_g = fpx::deg(&g0).unwrap();
        let cand_bound = deg_g * s.k() as usize;
        // Truncate the lifted candidate to the degree bound; a lifted
        // coefficient with honest terms above the bound rules the
        // candidate out without division.
        let mut candidate: Vec<Poly> = Vec::with_capacity(deg_g + 1);
        let mut plausible = true;
        for c in &lifted {
            if c.iter().skip(cand_bound + 1).any(|&v| v != 0) {
                plausible = false;
                break;
            }
            candidate.push(fpx::trim(c.clone()));
        }
        if !plausible {
            continue;
        }
        // Un-shift and trial divide chi by the candidate in F_p[x][T].
        let candidate: Vec<Poly> = candidate
            .iter()
            .map(|c| fpx::shift(fp, c, fp.neg(x0)))
            .collect();
        if divides_chi(s, &candidate) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn eval_chi(fp: Fp, chi: &[Poly], x0: u64) -> Poly {
    fpx::trim(chi.iter().map(|c| fpx::eval(fp, c, x0)).collect())
}

/// Hensel lifting in `F_p[[u]]`, order by order: given monic coprime
/// `g0 h0 = chi mod u`, produce `g = g0 + u g_1 + ...` with
/// `g h = chi mod u^prec` and `deg_T g_j < deg g0`.
///
/// At each order `j` the correction solves `g0 H + h0 G = c_j` for the
/// unique `(G, H)` with `deg G < deg g0`, `deg H < deg h0` (a bijection
/// because `g0, h0` are coprime and `chi` is monic, so `c_j` has
/// `T`-degree below `n`): `G = (b c_j) rem g0` from the Bezout relation
/// `a g0 + b h0 = 1`, then `H = (c_j - h0 G) / g0` exactly.
fn hensel_lift(fp: Fp, chi: &[Poly], g0: &Poly, h0: &Poly, prec: usize) -> Vec<Poly> {
    let (_a, b) = bezout(fp, g0, h0);
    let mut g: Vec<Poly> = g0
        .iter()
        .map(|&c| if c == 0 { Vec::new() } else { vec![c] })
        .collect();
    let mut h: Vec<Poly> = h0
        .iter()
        .map(|&c| if c == 0 { Vec::new() } else { vec![c] })
        .collect();
    for j in 1..prec {
        let gh = series_mul_t(fp, &g, &h, prec);
        let delta = series_sub_t(fp, chi, &gh, prec);
        // c_j: the u^j coefficient of delta, a polynomial in T.
        let c_j: Poly = fpx::trim(
            (0..delta.len())
                .map(|t| delta[t].get(j).copied().unwrap_or(0))
                .collect(),
        );
        if c_j.is_empty() {
            continue;
        }
        let bc = fpx::mul(fp, &b, &c_j);
        let g_j = fpx::rem(fp, &bc, g0);
        let (h_j, r) = fpx::divrem(fp, &fpx::sub(fp, &c_j, &fpx::mul(fp, h0, &g_j)), g0);
        debug_assert!(r.is_empty(), "Bezout correction failed to divide");
        add_order(fp, &mut g, &g_j, j);
        add_order(fp, &mut h, &h_j, j);
    }
    g
}

/// Add `u^j * corr(T)` into a series-coefficient polynomial.
fn add_order(fp: Fp, poly: &mut Vec<Poly>, corr: &Poly, j: usize) {
    for (t, &c) in corr.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if poly.len() <= t {
            poly.resize(t + 1, Vec::new());
        }
        if poly[t].len() <= j {
            poly[t].resize(j + 1, 0);
        }
        poly[t][j] = fp.add(poly[t][j], c);
        while poly[t].last() == Some(&0) {
            poly[t].pop();
        }
    }
}

fn bezout(fp: Fp, f: &Poly, g: &Poly) -> (Poly, Poly) {
    // extended Euclid over F_p[T]
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fpx::divrem(fp, &r0, &r1);
        let s = fpx::sub(fp, &s0, &fpx::mul(fp, &q, &s1));
        let t = fpx::sub(fp, &t0, &fpx::mul(fp, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    debug_assert_eq!(fpx::deg(&r0), Some(0));
    let inv = fp.inv(r0[0]);
    (fpx::scale(fp, &s0, inv), fpx::scale(fp, &t0, inv))
}

// --- series-coefficient polynomials in T -------------------------------
// Vec<Poly>: index = T-degree, entry = u-series truncated at prec.

fn trunc(fp: Fp, f: &Poly, prec: usize) -> Poly {
    let _ = fp;
    fpx::trim(f.iter().take(prec).copied().collect())
}

fn series_mul_t(fp: Fp, f: &[Poly], g: &[Poly], prec: usize) -> Vec<Poly> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Vec::new(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_empty() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            if b.is_empty() {
                continue;
            }
            let prod = trunc(fp, &fpx::mul(fp, a, b), prec);
            out[i + j] = fpx::add(fp, &out[i + j], &prod);
        }
    }
    trim_t(out)
}

fn series_sub_t(fp: Fp, f: &[Poly], g: &[Poly], prec: usize) -> Vec<Poly> {
    let n = f.len().max(g.len());
    let empty = Vec::new();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = f.get(i).unwrap_or(&empty);
        let b = g.get(i).unwrap_or(&empty);
        out.push(trunc(fp, &fpx::sub(fp, a, b), prec));
    }
    trim_t(out)
}

fn trim_t(mut v: Vec<Poly>) -> Vec<Poly> {
    while v.last().map(|c| c.is_empty()).unwrap_or(false) {
        v.pop();
    }
    v
}

/// Trial division: does the monic candidate (ascending `T`-coefficients of
/// x-polynomials) divide chi exactly in `F_p[x][T]`? The candidate is
/// viewed with the graded twists a spectral factor must carry: the
/// coefficient of `T^j` in a degree-`g` factor is a section of
/// `O((g - j) k)`.
fn divides_chi(s: &SpectralData, candidate: &[Poly]) -> bool {
    let field = s.field();
    let k = s.k();
    let chi = chi_tpoly(s);
    let g = candidate.len() - 1;
    let mut coeffs: Vec<BinaryForm> = Vec::with_capacity(candidate.len());
    for (j, c) in candidate.iter().enumerate() {
        let twist = (g - j) as i64 * k;
        if c.len() as i64 > twist + 1 {
            return false;
        }
        let scalars = (0..=twist as usize)
            .map(|i| field.from_int(c.get(i).copied().unwrap_or(0) as i64))
            .collect();
        coeffs.push(BinaryForm::new(field, twist, scalars).expect("within bound"));
    }
    let cand = TPoly::new(coeffs);
    if cand.degree() != Some(g) {
        return false;
    }
    chi.exact_div(&cand).is_ok()
}
