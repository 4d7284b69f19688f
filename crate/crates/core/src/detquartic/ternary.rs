//! Homogeneous polynomials in three variables `X0, X1, X2`, exact over a
//! scalar field, with the pseudo-division divisibility test the adjugate
//! identity needs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A linear form `c0 X0 + c1 X1 + c2 X2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm {
    pub c: [Scalar; 3],
}

impl LinForm {
    pub fn from_ints(field: Field, c: [i64; 3]) -> LinForm {
        LinForm {
            c: [
                field.from_int(c[0]),
                field.from_int(c[1]),
                field.from_int(c[2]),
            ],
        }
    }

    pub fn field(&self) -> Field {
        self.c[0].field()
    }

    pub fn to_form(&self) -> TernaryForm {
        let mut t = TernaryForm::zero(self.field(), 1);
        let exps = [[1u32, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, e) in exps.iter().enumerate() {
            if !self.c[i].is_zero() {
                t.terms.insert(*e, self.c[i].clone());
            }
        }
        t
    }

    /// Evaluate at a point given by residues (prime fields only).
    pub fn eval_residues(&self, x: [u64; 3], p: u64) -> u64 {
        let mut acc: u128 = 0;
        for i in 0..3 {
            let c = self.c[i].residue().expect("prime-field coefficient");
            acc += c as u128 * x[i] as u128;
        }
        (acc % p as u128) as u64
    }
}

/// A homogeneous ternary form of fixed degree; the zero form of any
/// degree has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryForm {
    field: Field,
    degree: u32,
    terms: BTreeMap<[u32; 3], Scalar>,
}

impl TernaryForm {
    pub fn zero(field: Field, degree: u32) -> TernaryForm {
        TernaryForm {
            field,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        field: Field,
        degree: u32,
        terms: impl IntoIterator<Item = ([u32; 3], Scalar)>,
    ) -> Result<TernaryForm> {
        let mut out = TernaryForm::zero(field, degree);
        for (e, c) in terms {
            if e[0] + e[1] + e[2] != degree {
                return Err(Error::invalid(
                    "ternary form",
                    format!("term {e:?} is not homogeneous of degree {degree}"),
                ));
            }
            if c.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    c.field().to_string(),
                ));
            }
            if !c.is_zero() {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, e: [u32; 3], c: Scalar) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().try_add(&c).expect("same field");
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Scalar {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, other.degree, "inhomogeneous sum");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TernaryForm) -> TernaryForm {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TernaryForm {
        TernaryForm {
            field: self.field,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &TernaryForm) -> TernaryForm {
        let mut out = TernaryForm::zero(self.field, self.degree + other.degree);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca.try_mul(cb).expect("same field"));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> TernaryForm {
        if c.is_zero() {
            return TernaryForm::zero(self.field, self.degree);
        }
        TernaryForm {
            field: self.field,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, t)| (*e, t.try_mul(c).expect("same field")))
                .collect(),
        }
    }

    /// Partial derivative with respect to `X_v`.
    pub fn partial(&self, v: usize) -> TernaryForm {
        let mut out = TernaryForm::zero(self.field, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[v] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[v] -= 1;
            let factor = self.field.from_int(e[v] as i64);
            let coeff = c.try_mul(&factor).expect("same field");
            if !coeff.is_zero() {
                out.add_term(ne, coeff);
            }
        }
        out
    }

    pub fn eval(&self, x: &[Scalar; 3]) -> Scalar {
        let mut acc = self.field.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in 0..3 {
                for _ in 0..e[v] {
                    term = term.try_mul(&x[v]).expect("same field");
                }
            }
            acc = acc.try_add(&term).expect("same field");
        }
        acc
    }

    /// Degree in the single variable `X_v`.
    pub fn degree_in(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[v]).max()
    }

    /// The coefficient of `X_v^k`, a form in the other two variables
    /// (represented with exponent 0 in position `v`).
    fn coeff_of_power(&self, v: usize, k: u32) -> TernaryForm {
        let mut out = TernaryForm::zero(self.field, self.degree.saturating_sub(k));
        for (e, c) in &self.terms {
            if e[v] == k {
                let mut ne = *e;
                ne[v] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        out
    }

    fn mul_power(&self, v: usize, k: u32) -> TernaryForm {
        let mut out = TernaryForm::zero(self.field, self.degree + k);
        for (e, c) in &self.terms {
            let mut ne = *e;
            ne[v] += k;
            out.terms.insert(ne, c.clone());
        }
        out
    }

    /// Remove rational content (over the rationals only): divide by the
    /// gcd of the numerators over the lcm of the denominators, keeping
    /// coefficients small during pseudo-division chains.
    fn remove_content(&self) -> TernaryForm {
        if self.terms.is_empty() {
            return self.clone();
        }
        match self.field {
            Field::Prime(_) => self.clone(),
            Field::Rational => {
                let mut num_gcd = BigInt::zero();
                let mut den_lcm = BigInt::one();
                for c in self.terms.values() {
                    if let Scalar::Rational(r) = c {
                        num_gcd = gcd_big(&num_gcd, &r.numer().abs());
                        den_lcm = lcm_big(&den_lcm, r.denom());
                    }
                }
                if num_gcd.is_zero() || (num_gcd.is_one() && den_lcm.is_one()) {
                    return self.clone();
                }
                let content = Scalar::Rational(num_rational::BigRational::new(num_gcd, den_lcm));
                let inv = content.inv().expect("nonzero content");
                self.scale(&inv)
            }
        }
    }

    /// Exact divisibility by pseudo-division along a principal variable
    /// (the one where the divisor has highest degree), with content
    /// removal over the rationals.
    ///
    /// A zero pseudo-remainder certifies `lc^t * self = q * divisor`; for
    /// an irreducible divisor of positive degree in the principal variable
    /// this is equivalent to plain divisibility, which is the contract the
    /// adjugate identity check relies on.
    pub fn divisible_by(&self, divisor: &TernaryForm) -> Result<bool> {
        if divisor.is_zero() {
            return Err(Error::ZeroDeterminant);
        }
        if self.is_zero() {
            return Ok(true);
        }
        let v = (0..3)
            .max_by_key(|&v| divisor.degree_in(v).unwrap_or(0))
            .unwrap();
        let dv = divisor.degree_in(v).unwrap_or(0);
        if dv == 0 {
            // constant in every variable means a nonzero scalar
            return Ok(true);
        }
        let lead = divisor.coeff_of_power(v, dv);
        let mut rem = self.remove_content();
        loop {
            let rv = match rem.degree_in(v) {
                None => return Ok(true),
                Some(rv) => rv,
            };
            if rv < dv {
                return Ok(rem.is_zero());
            }
            let rem_lead = rem.coeff_of_power(v, rv);
            // rem = lead * rem - rem_lead * X_v^(rv - dv) * divisor
            let scaled = rem.mul(&lead);
            let sub = divisor.mul(&rem_lead).mul_power(v, rv - dv);
            rem = scaled.sub(&sub).remove_content();
            if rem.is_zero() {
                return Ok(true);
            }
        }
    }
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    (a * b).abs() / gcd_big(a, b)
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest X0 power first reads naturally.
        for (e, c) in self.terms.iter().rev() {
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
            let mut wrote_var = false;
            let mono: String = (0..3)
                .filter(|&v| e[v] > 0)
                .map(|v| {
                    wrote_var = true;
                    if e[v] == 1 {
                        format!("X{v}")
                    } else {
                        format!("X{v}^{}", e[v])
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            if !wrote_var {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{shown}*{mono}")?;
            }
        }
        Ok(())
    }
}
