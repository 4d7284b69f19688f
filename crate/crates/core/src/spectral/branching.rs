//! Discriminants of spectral data and classification of non-simple
//! branching: flexes, bitangents, and singular candidates.

use crate::arith::form::BinaryForm;
use crate::arith::fpx::{self, Fp};
use crate::arith::scalar::Field;
use crate::arith::tpoly::{form_resultant, TPoly};
use crate::error::{Error, Result};
use crate::spectral::types::SpectralData;

/// Where a branch point sits on the base line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchPoint {
    Affine(u64),
    Infinity,
}

/// Classification of a multiple discriminant root. Fiber factorization
/// stays over the base field; roots that escape it are reported
/// [`BranchTag::UnresolvedOverExtension`] rather than silently extending
/// the field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchTag {
    /// One ramification point of order 3 over the branch point.
    Flex,
    /// Two ramification points of order 2 over the branch point.
    Bitangent,
    /// A repeated fiber root at which the x-derivative of the defining
    /// polynomial also vanishes: a singular point of the spectral curve.
    SingularCandidate,
    /// The fiber's repeated-root structure leaves the base field.
    UnresolvedOverExtension,
}

/// Branching summary of a spectral cover: the discriminant, whether it is
/// squarefree as a section (both charts), and a classification at every
/// base-field multiple root, the point at infinity included.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchReport {
    pub discriminant: BinaryForm,
    pub squarefree: bool,
    pub classifications: Vec<(BranchPoint, BranchTag)>,
}

/// Discriminant of the spectral polynomial: a form of twist `n(n-1)k`
/// that vanishes exactly at the branch points of the cover. Convention:
/// `disc(chi) = (-1)^(n(n-1)/2) Res_T(chi, d chi/dT)` with `chi` monic.
pub fn discriminant(s: &SpectralData) -> Result<BinaryForm> {
    let n = s.n();
    let field = s.field();
    if let Some(p) = field.characteristic() {
        if p <= n {
            return Err(Error::CharacteristicTooSmall {
                p,
                bound: n as i64,
                context: "discriminant",
            });
        }
    }
    let chi = chi_tpoly(s);
    if n == 1 {
        return Ok(BinaryForm::constant(field, 1));
    }
    let dchi = t_derivative(&chi, field);
    let res = form_resultant(&chi, &dchi)?;
    let sign = (n * (n - 1) / 2) % 2 == 1;
    Ok(if sign { res.neg() } else { res })
}

/// `chi = T^n + s_1 T^(n-1) + ... + s_n` as a polynomial in `T`.
pub(crate) fn chi_tpoly(s: &SpectralData) -> TPoly<BinaryForm> {
    let n = s.n() as usize;
    let field = s.field();
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in (1..=n).rev() {
        coeffs.push(s.s(i).clone());
    }
    coeffs.push(BinaryForm::constant(field, 1));
    TPoly::new(coeffs)
}

fn t_derivative(chi: &TPoly<BinaryForm>, field: Field) -> TPoly<BinaryForm> {
    let coeffs: Vec<BinaryForm> = chi
        .coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| c.scale(&field.from_int(j as i64)))
        .collect();
    TPoly::new(coeffs)
}

/// Classify the branching of a spectral cover with nonzero discriminant
/// over a prime field.
///
/// The squarefree flag comes from the squarefree part of the discriminant
/// (covering both charts). At each base-field multiple root of the
/// discriminant the fiber is factored over the base field:
/// one root of multiplicity 3 tags `Flex`, two roots of multiplicity 2 tag
/// `Bitangent`, a repeated root where the x-derivative of chi also
/// vanishes tags `SingularCandidate`, anything else (in particular
/// repeated structure in an irreducible fiber factor) is
/// `UnresolvedOverExtension`.
pub fn classify_branching(s: &SpectralData) -> Result<BranchReport> {
    let field = s.field();
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => return Err(Error::PrimeFieldRequired),
    };
    let disc = discriminant(s)?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let (_, repeated) = disc.squarefree_part()?;
    let squarefree = !repeated;
    let mut classifications = Vec::new();
    if !squarefree {
        let fp = Fp::new(p);
        let disc_poly = to_fpx(&disc);
        let disc_deriv = fpx::derivative(fp, &disc_poly);
        // Affine multiple roots: disc(x0) = disc'(x0) = 0.
        for x0 in 0..p {
            if fpx::eval(fp, &disc_poly, x0) == 0 && fpx::eval(fp, &disc_deriv, x0) == 0 {
                let tag = classify_fiber_at(s, fp, Some(x0));
                classifications.push((BranchPoint::Affine(x0), tag));
            }
        }
        // Multiple root at infinity: vanishing order >= 2 there.
        if disc.order_at_infinity().map(|o| o >= 2).unwrap_or(false) {
            let tag = classify_fiber_at(s, fp, None);
            classifications.push((BranchPoint::Infinity, tag));
        }
    }
    Ok(BranchReport {
        discriminant: disc,
        squarefree,
        classifications,
    })
}

/// Fiber classification at an affine point (`Some(x0)`) or at infinity
/// (`None`, computed in the swapped chart).
fn classify_fiber_at(s: &SpectralData, fp: Fp, at: Option<u64>) -> BranchTag {
    let n = s.n() as usize;
    // chi(x0, T) and (d chi/dx)(x0, T) as univariate polynomials in T.
    let mut fiber = vec![0u64; n + 1];
    let mut dx_fiber = vec![0u64; n + 1];
    fiber[n] = 1;
    for i in 1..=n {
        let si = match at {
            Some(_) => s.s(i).clone(),
            None => s.s(i).chart_swap(),
        };
        let x0 = at.unwrap_or(0);
        fiber[n - i] = eval_fpx(&si, fp, x0);
        dx_fiber[n - i] = eval_fpx(&si.derivative(), fp, x0);
    }
    let fiber = fpx::trim(fiber);
    let dx_fiber = fpx::trim(dx_fiber);

    // Base-field roots with multiplicities.
    let mut repeated_roots: Vec<(u64, usize)> = Vec::new();
    let mut stripped = fiber.clone();
    for t in 0..fp.p {
        let m = fpx::root_multiplicity(fp, &fiber, t);
        if m >= 1 {
            for _ in 0..m {
                let (q, r) = fpx::divrem(fp, &stripped, &vec![fp.neg(t), 1]);
                debug_assert!(r.is_empty());
                stripped = q;
            }
            if m >= 2 {
                repeated_roots.push((t, m));
            }
        }
    }
    // Residual multiplicity structure outside the base field?
    let residual_squarefree = match fpx::deg(&stripped) {
        None | Some(0) => true,
        Some(_) => {
            let g = fpx::gcd(fp, &stripped, &fpx::derivative(fp, &stripped));
            fpx::deg(&g) == Some(0)
        }
    };

    if residual_squarefree {
        if repeated_roots.len() == 1 && repeated_roots[0].1 == 3 {
            return BranchTag::Flex;
        }
        if repeated_roots.len() == 2 && repeated_roots.iter().all(|&(_, m)| m == 2) {
            return BranchTag::Bitangent;
        }
    }
    for &(root, _) in &repeated_roots {
        if fpx::eval(fp, &dx_fiber, root) == 0 {
            return BranchTag::SingularCandidate;
        }
    }
    BranchTag::UnresolvedOverExtension
}

fn eval_fpx(f: &BinaryForm, fp: Fp, x0: u64) -> u64 {
    let field = Field::Prime(fp.p);
    let v = f.eval(&field.from_int(x0 as i64));
    v.residue().expect("prime-field value")
}

pub(crate) fn to_fpx(f: &BinaryForm) -> fpx::Poly {
    fpx::trim(
        f.coeffs()
            .iter()
            .map(|c| c.residue().expect("prime-field coefficient"))
            .collect(),
    )
}
