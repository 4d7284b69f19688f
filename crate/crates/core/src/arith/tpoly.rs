//! Polynomials in the spectral variable `T` with binary-form coefficients,
//! plus the exact determinant and resultant machinery built on them.
//!
//! Everything here stays in exact arithmetic: determinants of form
//! matrices use fraction-free (Bareiss) elimination whose divisions are
//! exact in the underlying polynomial ring, and small determinants expand
//! by cofactors.

use crate::arith::dual::DualForm;
use crate::arith::form::BinaryForm;
use crate::error::{Error, Result};

/// Shared surface of rings the determinant expansion runs over: binary
/// forms and their dual-number extension. The operations panic on twist or
/// field mismatches; callers validate their matrices before expanding.
pub trait FormOps: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
}

/// Rings supporting the exact divisions of fraction-free elimination.
pub trait ExactRing: FormOps {
    fn exact_div(&self, other: &Self) -> Result<Self>;
    fn one_like(&self) -> Self;
}

impl FormOps for BinaryForm {
    fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("form addition")
    }
    fn sub(&self, other: &Self) -> Self {
        self.checked_sub(other).expect("form subtraction")
    }
    fn mul(&self, other: &Self) -> Self {
        BinaryForm::mul(self, other)
    }
    fn neg(&self) -> Self {
        BinaryForm::neg(self)
    }
    fn is_zero(&self) -> bool {
        BinaryForm::is_zero(self)
    }
}

impl ExactRing for BinaryForm {
    fn exact_div(&self, other: &Self) -> Result<Self> {
        BinaryForm::exact_div(self, other)
    }
    fn one_like(&self) -> Self {
        BinaryForm::constant(self.field(), 1)
    }
}

impl FormOps for DualForm {
    fn add(&self, other: &Self) -> Self {
        DualForm::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        DualForm::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        DualForm::mul(self, other)
    }
    fn neg(&self) -> Self {
        DualForm::neg(self)
    }
    fn is_zero(&self) -> bool {
        DualForm::is_zero(self)
    }
}

/// A polynomial in `T` with coefficients in a form ring, ascending powers.
/// The zero polynomial is the empty list; leading zero coefficients are
/// trimmed on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct TPoly<T> {
    coeffs: Vec<T>,
}

impl<T: FormOps> TPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> TPoly<T> {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn zero() -> TPoly<T> {
        TPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> TPoly<T> {
        TPoly::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Option<&T> {
        self.coeffs.get(i)
    }

    pub fn add(&self, other: &TPoly<T>) -> TPoly<T> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        TPoly::new(out)
    }

    pub fn sub(&self, other: &TPoly<T>) -> TPoly<T> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TPoly<T> {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &TPoly<T>) -> TPoly<T> {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let da = self.coeffs.len();
        let db = other.coeffs.len();
        let mut out: Vec<Option<T>> = vec![None; da + db - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.mul(b);
                out[i + j] = Some(match out[i + j].take() {
                    Some(acc) => acc.add(&t),
                    None => t,
                });
            }
        }
        TPoly::new(out.into_iter().map(|c| c.unwrap()).collect())
    }
}

impl<T: ExactRing> TPoly<T> {
    /// Exact polynomial division in `T`: each leading-coefficient division
    /// must be exact in the coefficient ring and the remainder must vanish.
    pub fn exact_div(&self, other: &TPoly<T>) -> Result<TPoly<T>> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(TPoly::zero());
        }
        let dd = other.coeffs.len() - 1;
        let nd = self.coeffs.len() - 1;
        if nd < dd {
            return Err(Error::InexactDivision("divisor degree exceeds dividend"));
        }
        let mut rem = self.coeffs.clone();
        let lead = &other.coeffs[dd];
        let mut quot: Vec<Option<T>> = vec![None; nd - dd + 1];
        for qi in (0..=nd - dd).rev() {
            let top = rem[qi + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(lead)?;
            for (k, oc) in other.coeffs.iter().enumerate() {
                rem[qi + k] = rem[qi + k].sub(&c.mul(oc));
            }
            quot[qi] = Some(c);
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder in T-division"));
        }
        let zero_like = |model: &T| model.one_like().sub(&model.one_like());
        let model = self.coeffs[0].clone();
        Ok(TPoly::new(
            quot.into_iter()
                .map(|c| c.unwrap_or_else(|| zero_like(&model)))
                .collect(),
        ))
    }
}

impl ExactRing for TPoly<BinaryForm> {
    fn exact_div(&self, other: &Self) -> Result<Self> {
        TPoly::exact_div(self, other)
    }
    fn one_like(&self) -> Self {
        let model = self
            .coeffs
            .first()
            .expect("one_like of the zero polynomial");
        TPoly::constant(model.one_like())
    }
}

impl<T: FormOps> FormOps for TPoly<T> {
    fn add(&self, other: &Self) -> Self {
        TPoly::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        TPoly::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        TPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        TPoly::neg(self)
    }
    fn is_zero(&self) -> bool {
        TPoly::is_zero(self)
    }
}

/// Determinant by cofactor expansion along the first column. Exact over
/// any commutative coefficient ring; cost grows like `n!`, which is fine
/// for the small ranks this crate works at.
pub(crate) fn det_laplace<T: FormOps>(mat: &[Vec<T>]) -> Option<T> {
    let n = mat.len();
    if n == 0 {
        return None;
    }
    debug_assert!(mat.iter().all(|row| row.len() == n));
    if n == 1 {
        return Some(mat[0][0].clone());
    }
    let mut acc: Option<T> = None;
    for i in 0..n {
        if mat[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| mat[r][1..].to_vec())
            .collect();
        let sub = det_laplace(&minor).expect("nonempty minor");
        let term = mat[i][0].mul(&sub);
        let term = if i % 2 == 1 { term.neg() } else { term };
        acc = Some(match acc {
            Some(a) => a.add(&term),
            None => term,
        });
    }
    acc.or_else(|| {
        // Entire first column vanished: the determinant is zero; reuse any
        // entry to manufacture a zero of the right shape.
        Some(mat[0][0].sub(&mat[0][0]))
    })
}

/// Fraction-free (Bareiss) determinant with row pivoting. All divisions
/// are exact in the coefficient ring.
pub(crate) fn det_bareiss<T: ExactRing>(mat: &[Vec<T>]) -> Result<T> {
    let n = mat.len();
    assert!(n > 0 && mat.iter().all(|row| row.len() == n));
    let mut m: Vec<Vec<T>> = mat.to_vec();
    let mut sign_flip = false;
    let mut prev = m[0][0].one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => {
                    let z = m[0][0].sub(&m[0][0]);
                    return Ok(z);
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg() } else { det })
}

/// Resultant in `T` of two form-coefficient polynomials, computed as the
/// Sylvester-matrix determinant by fraction-free elimination.
///
/// The inputs' lengths fix the degrees, so callers provide leading
/// coefficients explicitly; an identically-zero leading coefficient (or a
/// zero polynomial) is rejected. For the result to be a section of a
/// single `O(t)` the coefficient twists must be graded: the coefficient of
/// `T^j` carries twist `lead_twist + step * (deg - j)` for one common
/// nonnegative step (the spectral variable's weight). The step is inferred
/// from the nonzero coefficients and must be consistent across both
/// inputs.
///
/// The result vanishes at a base point exactly when the two
/// specializations share a root over the algebraic closure, provided the
/// leading coefficients do not both vanish there. Sign convention: this is
/// the plain Sylvester determinant with the `f`-rows on top, so
/// `form_resultant(f, g) = (-1)^(deg f * deg g) * form_resultant(g, f)`.
pub fn form_resultant(f: &TPoly<BinaryForm>, g: &TPoly<BinaryForm>) -> Result<BinaryForm> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial("form_resultant")),
    };
    let field = f.coeffs()[0].field();
    if f.coeffs()[df].is_zero() || g.coeffs()[dg].is_zero() {
        return Err(Error::ZeroPolynomial("form_resultant leading coefficient"));
    }
    let step = infer_common_step(f, g)?;
    let alpha = f.coeffs()[df].twist();
    let beta = g.coeffs()[dg].twist();
    if df == 0 && dg == 0 {
        return Ok(BinaryForm::constant(field, 1));
    }
    if df == 0 {
        return Ok(pow_form(&f.coeffs()[0], dg));
    }
    if dg == 0 {
        return Ok(pow_form(&g.coeffs()[0], df));
    }
    let size = df + dg;
    let zero = BinaryForm::zero(field, -1);
    let mut syl = vec![vec![zero; size]; size];
    for r in 0..dg {
        for j in 0..=df {
            syl[r][r + j] = f.coeffs()[df - j].clone();
        }
    }
    for r in 0..df {
        for j in 0..=dg {
            syl[dg + r][r + j] = g.coeffs()[dg - j].clone();
        }
    }
    let det = det_bareiss(&syl)?;
    // The weight structure of the Sylvester matrix pins the twist of the
    // resultant; normalize an identically-zero determinant to it.
    let twist = dg as i64 * alpha + df as i64 * beta + step * (df as i64) * (dg as i64);
    if det.is_zero() {
        Ok(BinaryForm::zero(field, twist))
    } else {
        debug_assert_eq!(det.twist(), twist);
        Ok(det)
    }
}

/// Infer the common grading step of two `T`-polynomials; zero coefficients
/// impose no constraint.
fn infer_common_step(f: &TPoly<BinaryForm>, g: &TPoly<BinaryForm>) -> Result<i64> {
    let mut step: Option<i64> = None;
    for poly in [f, g] {
        let d = poly.degree().unwrap();
        let lead_twist = poly.coeffs()[d].twist();
        for (j, c) in poly.coeffs().iter().enumerate() {
            if j == d || c.is_zero() {
                continue;
            }
            let gap = (d - j) as i64;
            let diff = c.twist() - lead_twist;
            if diff < 0 || diff % gap != 0 {
                return Err(Error::invalid(
                    "form_resultant",
                    "coefficient twists are not graded in the spectral variable",
                ));
            }
            let s = diff / gap;
            match step {
                None => step = Some(s),
                Some(existing) if existing == s => {}
                Some(existing) => {
                    return Err(Error::invalid(
                        "form_resultant",
                        format!("inconsistent grading steps {existing} and {s}"),
                    ))
                }
            }
        }
    }
    Ok(step.unwrap_or(0))
}

fn pow_form(f: &BinaryForm, e: usize) -> BinaryForm {
    let mut acc = BinaryForm::constant(f.field(), 1);
    for _ in 0..e {
        acc = acc.mul(f);
    }
    acc
}
