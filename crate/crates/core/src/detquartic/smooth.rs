//! Brute-force singular-point search for plane curves over prime fields
//! and their small extensions.
//!
//! The search for common zeros of `(f, df/dX0, df/dX1, df/dX2)` over
//! `F_{p^e}` is complete per field: the affine chart `X2 = 1` is swept by
//! brute force over the first coordinate with the fiber resolved exactly
//! (gcd of the four restrictions, roots via `y^q - y`), the line `X2 = 0`
//! reduces to a univariate sweep, and the remaining point is checked
//! directly. Exhausting all fields is explicitly *not* a smoothness proof
//! over the algebraic closure; the report states the bound that was
//! checked.

use serde::{Deserialize, Serialize};

use crate::arith::fpx::{self, Fp};
use crate::arith::fq::{fq_gcd, fq_trim, Fq, FqElem, FqPoly};
use crate::arith::scalar::Field;
use crate::detquartic::ternary::TernaryForm;
use crate::error::{Error, Result};

/// Outcome of the bounded-degree singular-point search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SmoothnessReport {
    /// No singular point with coordinates in `F_{p^e}` for any
    /// `e <= e_max`. Not a proof of smoothness over the closure.
    SmoothOverCheckedFields { p: u64, e_max: u32 },
    /// A common zero of the curve and its partials, over the extension of
    /// the stated degree (coordinates are residue vectors modulo the
    /// stated irreducible polynomial; for degree 1 they are plain
    /// residues).
    SingularPointFound {
        extension_degree: u32,
        modulus: Vec<u64>,
        point: [Vec<u64>; 3],
    },
    /// Nothing was checked (an extension bound of zero).
    Inconclusive { reason: String },
}

/// Search the projective plane over `F_{p^e}`, `e = 1, ..., e_max`, for a
/// singular point of `V(f)`.
pub fn smooth_plane_curve_check(f: &TernaryForm, p: u64, e_max: u32) -> Result<SmoothnessReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("smooth_plane_curve_check"));
    }
    if p == 2 {
        // root extraction over F_{2^e} would need the char-2 splitter
        return Err(Error::invalid(
            "smooth_plane_curve_check",
            "p must be an odd prime",
        ));
    }
    match f.field() {
        Field::Prime(fp) if fp == p => {}
        Field::Prime(other) => {
            return Err(Error::invalid(
                "smooth_plane_curve_check",
                format!("form lives over F_{other}, search requested over F_{p}"),
            ))
        }
        Field::Rational => return Err(Error::PrimeFieldRequired),
    }
    if e_max == 0 {
        return Ok(SmoothnessReport::Inconclusive {
            reason: "extension bound 0: no field was searched".into(),
        });
    }
    let system = [f.clone(), f.partial(0), f.partial(1), f.partial(2)];
    for e in 1..=e_max {
        let fq = Fq::new(p, e);
        if let Some(point) = search_field(&system, &fq) {
            return Ok(SmoothnessReport::SingularPointFound {
                extension_degree: e,
                modulus: fq.modulus.clone(),
                point,
            });
        }
    }
    Ok(SmoothnessReport::SmoothOverCheckedFields { p, e_max })
}

fn search_field(system: &[TernaryForm; 4], fq: &Fq) -> Option<[Vec<u64>; 3]> {
    let q = fq.order();
    // Chart X2 = 1. A singular point there has a first coordinate at
    // which the restrictions of d/dX0 and d/dX1 share a y-root, which
    // forces the resultant Res_y of those two restrictions to vanish: for
    // large fields only those x-candidates need their fibers resolved.
    // Small fields, and degenerate systems (an identically vanishing
    // resultant or partial), sweep every x instead; both routes are
    // complete over F_q.
    let charts: Vec<Vec<fpx::Poly>> = system.iter().map(chart_coeffs).collect();
    let interp_bound = resultant_degree_bound(&charts[1], &charts[2]);
    let sweep = q <= 20_000 || fq.fp.p <= interp_bound as u64;
    let mut candidates: Option<Vec<FqElem>> = None;
    if !sweep {
        if let Some(r) = resultant_in_y(fq.fp, &charts[1], &charts[2]) {
            if !r.is_empty() {
                let lifted: FqPoly = fq_trim(fq, r.iter().map(|&c| fq.from_fp(c)).collect());
                let mut roots = if lifted.len() >= 2 {
                    all_roots(fq, &lifted)
                } else {
                    Vec::new()
                };
                roots.sort();
                candidates = Some(roots);
            }
        }
    }
    let check_x = |x: &FqElem| -> Option<[Vec<u64>; 3]> {
        let mut gcd_poly: Option<FqPoly> = None;
        let mut all_zero = true;
        for coeffs in &charts {
            let restricted = restrict_at(fq, coeffs, x);
            if !restricted.is_empty() {
                all_zero = false;
            }
            gcd_poly = Some(match gcd_poly {
                None => restricted,
                Some(acc) => {
                    if acc.len() == 1 {
                        acc
                    } else if restricted.is_empty() {
                        acc
                    } else if acc.is_empty() {
                        restricted
                    } else {
                        fq_gcd(fq, &acc, &restricted)
                    }
                }
            });
            if gcd_poly.as_ref().map(|g| g.len() == 1).unwrap_or(false) {
                break;
            }
        }
        if all_zero {
            // the whole line {x} x A^1 is singular
            return Some([x.clone(), fq.zero(), fq.one()]);
        }
        let g = gcd_poly.unwrap();
        if g.len() <= 1 {
            return None; // nonzero constant: no common root over the closure
        }
        first_root(fq, &g).map(|y| [x.clone(), y, fq.one()])
    };
    match candidates {
        Some(roots) => {
            for x in &roots {
                if let Some(pt) = check_x(x) {
                    return Some(pt);
                }
            }
        }
        None => {
            for xi in 0..q {
                let x = fq.element(xi);
                if let Some(pt) = check_x(&x) {
                    return Some(pt);
                }
            }
        }
    }
    // Chart X2 = 0, X1 = 1: univariate in X0 over F_p; roots in F_q.
    let fp = fq.fp;
    let mut inf_gcd: Option<fpx::Poly> = None;
    let mut all_zero = true;
    for gform in system {
        let restricted = line_at_infinity(gform, fp);
        if !restricted.is_empty() {
            all_zero = false;
        }
        inf_gcd = Some(match inf_gcd {
            None => restricted,
            Some(acc) => fpx::gcd(fp, &acc, &restricted),
        });
    }
    if all_zero {
        return Some([fq.zero(), fq.one(), fq.zero()]);
    }
    let inf = inf_gcd.unwrap();
    if fpx::deg(&inf).map(|d| d >= 1).unwrap_or(false) {
        // lift to F_q and find a root there
        let lifted: FqPoly = inf.iter().map(|&c| fq.from_fp(c)).collect();
        let lifted = fq_trim(fq, lifted);
        if let Some(x) = first_root(fq, &lifted) {
            return Some([x, fq.one(), fq.zero()]);
        }
    }
    // The point [1, 0, 0].
    if system.iter().all(|g| g.coeff([g.degree(), 0, 0]).is_zero()) {
        return Some([fq.one(), fq.zero(), fq.zero()]);
    }
    None
}

/// Coefficients of `g(x, y, 1)` as polynomials in `x`, indexed by the
/// power of `y` (the chart sets `X2 = 1`).
fn chart_coeffs(g: &TernaryForm) -> Vec<fpx::Poly> {
    let p = match g.field() {
        Field::Prime(p) => p,
        Field::Rational => unreachable!("validated caller"),
    };
    let fp = Fp::new(p);
    let dy = g.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let dx = g.terms().map(|(e, _)| e[0]).max().unwrap_or(0) as usize;
    let mut grid = vec![vec![0u64; dx + 1]; dy + 1];
    for (e, c) in g.terms() {
        let xi = e[0] as usize;
        let yi = e[1] as usize;
        grid[yi][xi] = fp.add(grid[yi][xi], c.residue().expect("prime field"));
    }
    grid.into_iter().map(fpx::trim).collect()
}

/// Evaluate the x-coefficient polynomials at a point of `F_q`, producing
/// a y-polynomial over `F_q`.
fn restrict_at(fq: &Fq, coeffs: &[fpx::Poly], x: &FqElem) -> FqPoly {
    let out: FqPoly = coeffs
        .iter()
        .map(|poly| {
            // Horner with F_p coefficients over F_q.
            let mut acc = fq.zero();
            for &coeff in poly.iter().rev() {
                acc = fq.mul(&acc, x);
                acc = fq.add(&acc, &fq.from_fp(coeff));
            }
            acc
        })
        .collect();
    fq_trim(fq, out)
}

/// Restriction `g(x, 1, 0)` as a univariate over `F_p`.
fn line_at_infinity(g: &TernaryForm, fp: Fp) -> fpx::Poly {
    let dx = g.terms().map(|(e, _)| e[0]).max().unwrap_or(0) as usize;
    let mut out = vec![0u64; dx + 1];
    for (e, c) in g.terms() {
        if e[2] != 0 {
            continue;
        }
        let xi = e[0] as usize;
        out[xi] = fp.add(out[xi], c.residue().expect("prime field"));
    }
    fpx::trim(out)
}

/// Upper bound on the x-degree of `Res_y` of two chart restrictions, for
/// the interpolation node count.
fn resultant_degree_bound(f: &[fpx::Poly], g: &[fpx::Poly]) -> usize {
    let dx = |c: &[fpx::Poly]| {
        c.iter()
            .map(|p| p.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    };
    let dy = |c: &[fpx::Poly]| c.len().saturating_sub(1);
    dy(f) * dx(g) + dy(g) * dx(f) + 1
}

/// `Res_y` of two bivariate chart restrictions (vectors of x-polynomials
/// by y-power), by Sylvester-determinant evaluation at enough x-nodes and
/// Lagrange interpolation. `None` flags a degenerate system (a vanishing
/// input) that the caller sweeps instead.
fn resultant_in_y(fp: Fp, f: &[fpx::Poly], g: &[fpx::Poly]) -> Option<fpx::Poly> {
    let trim_top = |c: &[fpx::Poly]| -> Vec<fpx::Poly> {
        let mut v = c.to_vec();
        while v.last().map(|p| p.is_empty()).unwrap_or(false) {
            v.pop();
        }
        v
    };
    let f = trim_top(f);
    let g = trim_top(g);
    if f.is_empty() || g.is_empty() {
        return None;
    }
    let (nf, ng) = (f.len() - 1, g.len() - 1);
    if nf == 0 && ng == 0 {
        // both constant in y: common x-roots come from the gcd
        return Some(fpx::gcd(fp, &f[0], &g[0]));
    }
    if nf == 0 {
        return Some(f[0].clone());
    }
    if ng == 0 {
        return Some(g[0].clone());
    }
    let bound = resultant_degree_bound(&f, &g);
    debug_assert!((bound as u64) < fp.p);
    let size = nf + ng;
    let xs: Vec<u64> = (0..=bound as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&x0| {
            // Sylvester matrix of the specializations, in the fixed
            // global-degree layout.
            let fe: Vec<u64> = f.iter().map(|c| fpx::eval(fp, c, x0)).collect();
            let ge: Vec<u64> = g.iter().map(|c| fpx::eval(fp, c, x0)).collect();
            let mut m = vec![0u64; size * size];
            for r in 0..ng {
                for j in 0..=nf {
                    m[r * size + r + j] = fe[nf - j];
                }
            }
            for r in 0..nf {
                for j in 0..=ng {
                    m[(ng + r) * size + r + j] = ge[ng - j];
                }
            }
            det_mod_p(fp, &mut m, size)
        })
        .collect();
    Some(fpx::interpolate(fp, &xs, &ys))
}

fn det_mod_p(fp: Fp, m: &mut [u64], n: usize) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r * n + col] != 0);
        let pivot = match pivot {
            Some(p) => p,
            None => return 0,
        };
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            det = fp.neg(det);
        }
        det = fp.mul(det, m[col * n + col]);
        let inv = fp.inv(m[col * n + col]);
        for r in col + 1..n {
            if m[r * n + col] == 0 {
                continue;
            }
            let factor = fp.mul(m[r * n + col], inv);
            for j in col..n {
                let t = fp.mul(factor, m[col * n + j]);
                m[r * n + j] = fp.sub(m[r * n + j], t);
            }
        }
    }
    det
}

/// All roots of a nonzero polynomial over `F_q`, via `gcd(y^q - y, g)`
/// and deterministic equal-degree splitting.
fn all_roots(fq: &Fq, g: &FqPoly) -> Vec<FqElem> {
    debug_assert!(g.len() >= 2);
    let x_poly: FqPoly = vec![fq.zero(), fq.one()];
    let frob = fq_powmod(fq, &x_poly, fq.order(), g);
    let mut lin = fq_sub(fq, &frob, &x_poly);
    lin = fq_rem_safe(fq, &lin, g);
    let split = fq_gcd(fq, &fq_trim(fq, lin), g);
    let split = if split.is_empty() {
        // y^q - y = 0 mod g: g divides y^q - y, fully split
        g.clone()
    } else {
        split
    };
    if split.len() < 2 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    collect_roots(fq, &split, &mut roots);
    roots
}

/// Smallest root of a nonzero polynomial over `F_q` in element order;
/// `None` when no root lies in `F_q`.
fn first_root(fq: &Fq, g: &FqPoly) -> Option<FqElem> {
    let mut roots = all_roots(fq, g);
    roots.sort();
    roots.into_iter().next()
}

fn collect_roots(fq: &Fq, g: &FqPoly, out: &mut Vec<FqElem>) {
    if g.len() == 2 {
        // monic-ize: root = -c0 / c1
        let inv = fq.inv(&g[1]);
        out.push(fq.neg(&fq.mul(&g[0], &inv)));
        return;
    }
    if g.len() < 2 {
        return;
    }
    // split a fully-split polynomial by gcd with (y + t)^((q-1)/2) - 1 for
    // a deterministic sequence of shifts t.
    let exp = (fq.order() - 1) / 2;
    let mut t = 0u64;
    loop {
        let shift: FqPoly = vec![fq.element(t), fq.one()];
        let pw = fq_powmod(fq, &shift, exp, g);
        let minus_one = fq_sub(fq, &pw, &[fq.one()].to_vec());
        let h = fq_gcd(fq, &fq_trim(fq, minus_one), g);
        if h.len() >= 2 && h.len() < g.len() {
            collect_roots(fq, &h, out);
            let (quot, _) = fq_divrem(fq, g, &h);
            collect_roots(fq, &quot, out);
            return;
        }
        t += 1;
        if t > 8 * fq.order() {
            panic!("equal-degree root splitting failed");
        }
    }
}

fn fq_sub(fq: &Fq, a: &FqPoly, b: &FqPoly) -> FqPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let zero = fq.zero();
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        out.push(fq.sub(x, y));
    }
    fq_trim(fq, out)
}

fn fq_powmod(fq: &Fq, base: &FqPoly, mut e: u64, m: &FqPoly) -> FqPoly {
    let mut acc: FqPoly = vec![fq.one()];
    let mut b = fq_rem_safe(fq, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = fq_rem_safe(fq, &fq_mul(fq, &acc, &b), m);
        }
        b = fq_rem_safe(fq, &fq_mul(fq, &b, &b), m);
        e >>= 1;
    }
    acc
}

fn fq_mul(fq: &Fq, a: &FqPoly, b: &FqPoly) -> FqPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![fq.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if fq.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = fq.mul(x, y);
            out[i + j] = fq.add(&out[i + j], &t);
        }
    }
    fq_trim(fq, out)
}

fn fq_rem_safe(fq: &Fq, a: &FqPoly, m: &FqPoly) -> FqPoly {
    if a.len() < m.len() {
        return fq_trim(fq, a.clone());
    }
    crate::arith::fq::fq_rem(fq, a, m)
}

fn fq_divrem(fq: &Fq, a: &FqPoly, b: &FqPoly) -> (FqPoly, FqPoly) {
    let db = b.len() - 1;
    let lead_inv = fq.inv(&b[db]);
    let mut r = a.clone();
    let mut q = vec![fq.zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        if !fq.is_zero(&top) {
            let c = fq.mul(&top, &lead_inv);
            q[shift] = c.clone();
            for (k, bc) in b.iter().enumerate() {
                let t = fq.mul(&c, bc);
                r[shift + k] = fq.sub(&r[shift + k], &t);
            }
        }
        r.pop();
        r = fq_trim(fq, r);
    }
    (fq_trim(fq, q), r)
}
