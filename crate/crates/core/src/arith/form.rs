//! Binary forms: global sections of `O(m)` on the projective line.
//!
//! A section of `O(m)` is stored in one affine chart as a dense coefficient
//! list of length `m + 1` (coefficient of `x^a` at index `a`), with the
//! twist `m` kept as metadata. The second chart is obtained by reversing
//! the coefficient list ([`BinaryForm::chart_swap`]), which is how behavior
//! at infinity stays observable. A form of negative twist is identically
//! zero and stores no coefficients.
//!
//! Addition requires equal twists, with one deliberate relaxation: the zero
//! section lies in every `O(m)`, so an identically-zero summand is treated
//! as a twist-polymorphic additive identity. Nonzero forms of different
//! twists never combine.

use std::fmt;

use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Dimension of the space of global sections of `O(m)` on the projective
/// line: `max(0, m + 1)`.
pub fn h0(m: i64) -> u64 {
    if m >= 0 {
        (m + 1) as u64
    } else {
        0
    }
}

/// A global section of `O(twist)` in affine coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    field: Field,
    twist: i64,
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    /// Build a form of the given twist from affine coefficients
    /// (`coeffs[a]` is the coefficient of `x^a`). The list length must be
    /// `max(twist + 1, 0)` and all coefficients must share `field`.
    pub fn new(field: Field, twist: i64, coeffs: Vec<Scalar>) -> Result<BinaryForm> {
        let expected = h0(twist) as usize;
        if coeffs.len() != expected {
            return Err(Error::invalid(
                "coeffs",
                format!(
                    "twist {twist} demands {expected} coefficients, got {}",
                    coeffs.len()
                ),
            ));
        }
        for c in &coeffs {
            if c.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    c.field().to_string(),
                ));
            }
        }
        Ok(BinaryForm {
            field,
            twist,
            coeffs,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: Field, twist: i64, coeffs: &[i64]) -> Result<BinaryForm> {
        BinaryForm::new(
            field,
            twist,
            coeffs.iter().map(|&c| field.from_int(c)).collect(),
        )
    }

    /// The zero section of `O(twist)`.
    pub fn zero(field: Field, twist: i64) -> BinaryForm {
        BinaryForm {
            field,
            twist,
            coeffs: vec![field.zero(); h0(twist) as usize],
        }
    }

    /// The constant `c` as a twist-0 form (or any twist `m >= 0` via
    /// [`BinaryForm::constant_of_twist`]).
    pub fn constant(field: Field, c: i64) -> BinaryForm {
        BinaryForm::constant_of_twist(field, 0, c)
    }

    /// The constant `c` viewed as a section of `O(m)`, `m >= 0`.
    pub fn constant_of_twist(field: Field, twist: i64, c: i64) -> BinaryForm {
        assert!(twist >= 0, "constants need nonnegative twist");
        let mut f = BinaryForm::zero(field, twist);
        f.coeffs[0] = field.from_int(c);
        f
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `x^a`, zero beyond the stored range.
    pub fn coeff(&self, a: usize) -> Scalar {
        self.coeffs
            .get(a)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Degree of the affine representative; `None` for the zero form.
    pub fn affine_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Vanishing order at the point at infinity: `twist - affine_degree`.
    /// `None` for the zero form.
    pub fn order_at_infinity(&self) -> Option<i64> {
        self.affine_degree().map(|d| self.twist - d as i64)
    }

    fn assert_same_field(&self, other: &BinaryForm) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        Ok(())
    }

    /// Sum of two sections. Twists must agree unless one operand is
    /// identically zero, in which case the other is returned unchanged.
    pub fn checked_add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.assert_same_field(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.twist != other.twist {
            return Err(Error::TwistMismatch {
                context: "form addition",
                expected: self.twist,
                found: other.twist,
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(BinaryForm {
            field: self.field,
            twist: self.twist,
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> BinaryForm {
        BinaryForm {
            field: self.field,
            twist: self.twist,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Product of sections; twists add.
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        self.assert_same_field(other).expect("form multiplication");
        let twist = self.twist + other.twist;
        if self.is_zero() || other.is_zero() {
            return BinaryForm::zero(self.field, twist);
        }
        let mut coeffs = vec![self.field.zero(); h0(twist) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a.try_mul(b).expect("same field");
                coeffs[i + j] = coeffs[i + j].try_add(&t).expect("same field");
            }
        }
        BinaryForm {
            field: self.field,
            twist,
            coeffs,
        }
    }

    pub fn scale(&self, c: &Scalar) -> BinaryForm {
        BinaryForm {
            field: self.field,
            twist: self.twist,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.try_mul(c).expect("same field"))
                .collect(),
        }
    }

    /// Evaluate the affine representative at a point of the base field.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x).expect("same field");
            acc = acc.try_add(c).expect("same field");
        }
        acc
    }

    /// The chart-swap involution: coefficient reversal, exchanging the
    /// roles of zero and infinity. Self-inverse and multiplicative.
    pub fn chart_swap(&self) -> BinaryForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        BinaryForm {
            field: self.field,
            twist: self.twist,
            coeffs,
        }
    }

    /// Derivative of the affine representative, as a section of
    /// `O(twist - 1)`.
    pub fn derivative(&self) -> BinaryForm {
        if self.twist <= 0 {
            return BinaryForm::zero(self.field, self.twist - 1);
        }
        let mut coeffs = Vec::with_capacity(self.twist as usize);
        for a in 1..self.coeffs.len() {
            let factor = self.field.from_int(a as i64);
            coeffs.push(self.coeffs[a].try_mul(&factor).expect("same field"));
        }
        BinaryForm {
            field: self.field,
            twist: self.twist - 1,
            coeffs,
        }
    }

    /// Leading (affine) coefficient; `None` for the zero form.
    pub fn leading_coeff(&self) -> Option<Scalar> {
        self.affine_degree().map(|d| self.coeffs[d].clone())
    }

    /// Rescale so the affine leading coefficient is 1.
    pub fn monic(&self) -> BinaryForm {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact division of the affine representatives; the result has twist
    /// `self.twist - other.twist`. Errors if the division leaves a
    /// remainder or the divisor is zero.
    pub fn exact_div(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.assert_same_field(other)?;
        let twist = self.twist - other.twist;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(BinaryForm::zero(self.field, twist));
        }
        let dd = other.affine_degree().unwrap();
        let lc_inv = other.coeffs[dd].inv()?;
        let mut rem: Vec<Scalar> = self.coeffs.clone();
        let nd = match self.affine_degree() {
            Some(n) => n,
            None => unreachable!(),
        };
        if nd < dd || twist < 0 {
            return Err(Error::InexactDivision("degree of divisor exceeds dividend"));
        }
        let mut quot = vec![self.field.zero(); h0(twist) as usize];
        for qi in (0..=nd - dd).rev() {
            let c = rem[qi + dd].try_mul(&lc_inv)?;
            if !c.is_zero() {
                if qi >= quot.len() {
                    return Err(Error::InexactDivision("quotient exceeds twist bound"));
                }
                quot[qi] = c.clone();
                for (k, oc) in other.coeffs.iter().enumerate() {
                    let t = c.try_mul(oc)?;
                    rem[qi + k] = rem[qi + k].try_sub(&t)?;
                }
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder"));
        }
        BinaryForm::new(self.field, twist, quot)
    }

    /// Monic gcd of the affine representatives. This is a chart-local
    /// helper: the twist of the result equals its degree.
    pub fn affine_gcd(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.assert_same_field(other)?;
        let mut a: Vec<Scalar> = trim(&self.coeffs);
        let mut b: Vec<Scalar> = trim(&other.coeffs);
        while !b.is_empty() {
            let r = poly_rem(&a, &b, &self.field)?;
            a = b;
            b = r;
        }
        if a.is_empty() {
            return Ok(BinaryForm::zero(self.field, -1));
        }
        let lc_inv = a.last().unwrap().inv()?;
        let coeffs: Vec<Scalar> = a
            .iter()
            .map(|c| c.try_mul(&lc_inv))
            .collect::<Result<_>>()?;
        let deg = coeffs.len() as i64 - 1;
        BinaryForm::new(self.field, deg, coeffs)
    }

    /// Squarefree part of the section, with a flag reporting whether any
    /// repeated root was found — in the affine chart via `gcd(f, f')`, and
    /// at infinity via the twist gap (a vanishing order `>= 2` there is a
    /// repeated root the affine chart cannot see).
    ///
    /// The returned form is monic in the affine chart and carries each
    /// distinct root once, including a simple root at infinity when the
    /// input vanished there; its twist is the degree of that radical
    /// divisor. Over a prime field the characteristic must exceed the
    /// twist so that `gcd(f, f')` detects exactly the repeated factors.
    pub fn squarefree_part(&self) -> Result<(BinaryForm, bool)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree_part"));
        }
        if let Some(p) = self.field.characteristic() {
            if (p as i128) <= self.twist as i128 {
                return Err(Error::CharacteristicTooSmall {
                    p,
                    bound: self.twist,
                    context: "squarefree_part",
                });
            }
        }
        let d = self.affine_degree().unwrap();
        let g = self.affine_gcd(&self.derivative())?;
        let repeated_affine = g.affine_degree().map(|k| k >= 1).unwrap_or(false);
        let inf_mult = self.twist - d as i64;
        let repeated_inf = inf_mult >= 2;
        let radical_affine = if repeated_affine {
            self.exact_div(&g)?.monic()
        } else {
            // gcd is a nonzero constant: the affine part is already
            // squarefree.
            self.monic()
        };
        let rad_deg = radical_affine
            .affine_degree()
            .map(|k| k as i64)
            .unwrap_or(0);
        let twist = rad_deg + if inf_mult >= 1 { 1 } else { 0 };
        let mut coeffs = radical_affine.coeffs[..=rad_deg as usize].to_vec();
        coeffs.resize(h0(twist) as usize, self.field.zero());
        let radical = BinaryForm::new(self.field, twist, coeffs)?;
        Ok((radical, repeated_affine || repeated_inf))
    }
}

fn trim(coeffs: &[Scalar]) -> Vec<Scalar> {
    let n = coeffs.iter().rposition(|c| !c.is_zero());
    match n {
        Some(n) => coeffs[..=n].to_vec(),
        None => Vec::new(),
    }
}

fn poly_rem(a: &[Scalar], b: &[Scalar], field: &Field) -> Result<Vec<Scalar>> {
    let db = b.len() - 1;
    let lc_inv = b.last().unwrap().inv()?;
    let mut rem = a.to_vec();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if !top.is_zero() {
            let c = top.try_mul(&lc_inv)?;
            let shift = rem.len() - 1 - db;
            for (k, bc) in b.iter().enumerate() {
                let t = c.try_mul(bc)?;
                rem[shift + k] = rem[shift + k].try_sub(&t)?;
            }
        }
        rem.pop();
        while rem.last().map(|c| c.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        let _ = field;
    }
    Ok(trim(&rem))
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({}; twist={})", self, self.twist)
    }
}

impl fmt::Display for BinaryForm {
    /// Sparse monomial syntax, highest power first: `3*x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for a in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[a];
            if c.is_zero() {
                continue;
            }
            let (sep, shown) = if first {
                first = false;
                if c.is_negative() {
                    ("-", c.abs())
                } else {
                    ("", c.clone())
                }
            } else if c.is_negative() {
                (" - ", c.abs())
            } else {
                (" + ", c.clone())
            };
            write!(f, "{sep}")?;
            match a {
                0 => write!(f, "{shown}")?,
                1 => {
                    if shown.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{shown}*x")?
                    }
                }
                _ => {
                    if shown.is_one() {
                        write!(f, "x^{a}")?
                    } else {
                        write!(f, "{shown}*x^{a}")?
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f1009() -> Field {
        Field::prime(1009).unwrap()
    }

    #[test]
    fn h0_values() {
        assert_eq!(h0(0), 1);
        assert_eq!(h0(-3), 0);
        assert_eq!(h0(5), 6);
        // Serre duality sanity on the projective line.
        for m in -20..=20 {
            assert_eq!(h0(m) + h0(-m - 2), (m + 1).unsigned_abs());
        }
    }

    #[test]
    fn negative_twist_is_zero() {
        let z = BinaryForm::zero(f1009(), -2);
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert!(BinaryForm::from_ints(f1009(), -1, &[1]).is_err());
    }

    #[test]
    fn addition_twist_rules() {
        let f = f1009();
        let a = BinaryForm::from_ints(f, 2, &[1, 2, 3]).unwrap();
        let b = BinaryForm::from_ints(f, 1, &[5, 5]).unwrap();
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::TwistMismatch { .. })
        ));
        // The zero section is twist-polymorphic.
        let z = BinaryForm::zero(f, -4);
        assert_eq!(a.checked_add(&z).unwrap(), a);
    }

    #[test]
    fn multiplication_adds_twists() {
        let f = f1009();
        let a = BinaryForm::from_ints(f, 1, &[1, 1]).unwrap(); // 1 + x
        let b = BinaryForm::from_ints(f, 1, &[1008, 1]).unwrap(); // x - 1
        let p = a.mul(&b);
        assert_eq!(p.twist(), 2);
        assert_eq!(p, BinaryForm::from_ints(f, 2, &[1008, 0, 1]).unwrap());
    }

    #[test]
    fn chart_swap_involutive_and_multiplicative() {
        let f = f1009();
        let mut rng = crate::hitchin::sample::SplitMix64::new(7);
        for _ in 0..50 {
            let ta = (rng.next_below(5)) as i64;
            let tb = (rng.next_below(5)) as i64;
            let a = random_form(&mut rng, ta);
            let b = random_form(&mut rng, tb);
            assert_eq!(a.chart_swap().chart_swap(), a);
            assert_eq!(a.mul(&b).chart_swap(), a.chart_swap().mul(&b.chart_swap()));
        }
        let _ = f;
    }

    fn random_form(rng: &mut crate::hitchin::sample::SplitMix64, twist: i64) -> BinaryForm {
        let f = f1009();
        let coeffs: Vec<Scalar> = (0..h0(twist))
            .map(|_| f.from_int(rng.next_below(1009) as i64))
            .collect();
        BinaryForm::new(f, twist, coeffs).unwrap()
    }

    #[test]
    fn exact_division() {
        let f = f1009();
        let a = BinaryForm::from_ints(f, 2, &[1008, 0, 1]).unwrap(); // x^2 - 1
        let b = BinaryForm::from_ints(f, 1, &[1, 1]).unwrap(); // x + 1
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, BinaryForm::from_ints(f, 1, &[1008, 1]).unwrap());
        let c = BinaryForm::from_ints(f, 1, &[2, 1]).unwrap();
        assert!(a.exact_div(&c).is_err());
    }

    #[test]
    fn squarefree_distinct_roots() {
        // x(x-1)(x-2) over F_1009: squarefree, returned unchanged.
        let f = f1009();
        let x = BinaryForm::from_ints(f, 1, &[0, 1]).unwrap();
        let x1 = BinaryForm::from_ints(f, 1, &[1008, 1]).unwrap();
        let x2 = BinaryForm::from_ints(f, 1, &[1007, 1]).unwrap();
        let prod = x.mul(&x1).mul(&x2);
        let (rad, repeated) = prod.squarefree_part().unwrap();
        assert!(!repeated);
        assert_eq!(rad, prod.monic());
    }

    #[test]
    fn squarefree_double_root() {
        let f = f1009();
        let x2 = BinaryForm::from_ints(f, 2, &[0, 0, 1]).unwrap(); // x^2
        let (rad, repeated) = x2.squarefree_part().unwrap();
        assert!(repeated);
        assert_eq!(rad, BinaryForm::from_ints(f, 1, &[0, 1]).unwrap());
    }

    #[test]
    fn squarefree_chart_swap_cases() {
        let f = f1009();
        // x^2 (x-1)^2 at its natural twist 4: repeated in the affine chart.
        // Hand-check of the chart swap: the reversed coefficient list is
        // (x^2(x-1)^2 with coefficients [0,0,1,-2,1]) -> [1,-2,1,0,0],
        // i.e. the swapped form has the double root moved to x = 0.
        let sq = BinaryForm::from_ints(f, 4, &[0, 0, 1, 1007, 1]).unwrap();
        assert_eq!(
            sq.chart_swap(),
            BinaryForm::from_ints(f, 4, &[1, 1007, 1, 0, 0]).unwrap()
        );
        let (rad, repeated) = sq.squarefree_part().unwrap();
        assert!(repeated);
        assert_eq!(rad, BinaryForm::from_ints(f, 2, &[0, 1008, 1]).unwrap());

        // Same affine polynomial padded to twist 6: a double root at
        // infinity appears (deg f <= twist - 2) even though nothing changes
        // in math the affine chart sees beyond the padding.
        let padded = BinaryForm::from_ints(f, 6, &[0, 0, 1, 1007, 1, 0, 0]).unwrap();
        let (_, repeated) = padded.squarefree_part().unwrap();
        assert!(repeated);

        // Affine-squarefree with a double root at infinity only.
        let thin = BinaryForm::from_ints(f, 4, &[0, 1008, 1, 0, 0]).unwrap(); // x(x-1), twist 4
        let (rad, repeated) = thin.squarefree_part().unwrap();
        assert!(repeated);
        // Radical keeps one copy of the root at infinity: twist 3 with
        // affine part x(x-1).
        assert_eq!(rad, BinaryForm::from_ints(f, 3, &[0, 1008, 1, 0]).unwrap());
    }

    #[test]
    fn squarefree_characteristic_guard() {
        let f5 = Field::prime(5).unwrap();
        let g = BinaryForm::from_ints(f5, 6, &[1, 0, 0, 0, 0, 0, 1]).unwrap();
        assert!(matches!(
            g.squarefree_part(),
            Err(Error::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn display_style() {
        let f = f1009();
        let a = BinaryForm::from_ints(f, 2, &[1, 0, 3]).unwrap();
        assert_eq!(a.to_string(), "3*x^2 + 1");
        let q = Field::Rational;
        let b = BinaryForm::new(q, 1, vec![Scalar::rational(-1, 2).unwrap(), q.one()]).unwrap();
        assert_eq!(b.to_string(), "x - 1/2");
    }
}
