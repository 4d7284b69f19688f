//! Exact coefficient arithmetic: prime fields with a runtime modulus and
//! arbitrary-precision rationals.
//!
//! A [`Scalar`] is either a canonical representative in `[0, p)` of a prime
//! field `F_p` or a reduced rational with positive denominator. Arithmetic
//! between values of different fields is rejected, never coerced: the
//! checked operations return [`Error::FieldMismatch`], and the operator
//! impls panic with the same message. All boundary code (parsers, fixture
//! loaders, the CLI) validates field agreement before arithmetic runs.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Prime field with the given (checked) modulus.
    Prime(u64),
    /// Arbitrary-precision rationals.
    Rational,
}

impl Field {
    /// A prime field, verifying primality of the modulus.
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime_u64(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rational() -> Field {
        Field::Rational
    }

    pub fn zero(&self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            Field::Prime(p) => Scalar::Prime {
                value: reduce_i64(n, *p),
                modulus: *p,
            },
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Characteristic of the field: `p` for `F_p`, `None` for the rationals.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Field::Prime(p) => Some(*p),
            Field::Rational => None,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Prime { value: u64, modulus: u64 },
    Rational(BigRational),
}

fn reduce_i64(n: i64, p: u64) -> u64 {
    let m = n.rem_euclid(p as i64);
    m as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for `u64` via trial division; moduli stay at
/// desk scale (default 1009, at most ~10^6).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
            Scalar::Rational(_) => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Prime { value, .. } => *value == 1,
            Scalar::Rational(r) => r.is_one(),
        }
    }

    /// A rational from numerator and denominator, reduced with positive
    /// denominator.
    pub fn rational(num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        let (fa, fb) = (self.field(), other.field());
        if fa == fb {
            Ok(())
        } else {
            Err(Error::FieldMismatch(fa.to_string(), fb.to_string()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.clone().neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            exp >>= 1;
        }
        acc
    }

    /// The canonical prime-field representative, for `F_p` values.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Prime { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl Scalar {
    /// True when the rational value is negative (prime-field values are
    /// canonical nonnegative representatives).
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Prime { .. } => false,
            Scalar::Rational(r) => r.is_negative(),
        }
    }

    /// Negated absolute-value display helper for the form printer.
    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Prime { .. } => self.clone(),
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$checked(&rhs).expect("scalar arithmetic")
            }
        }
        impl<'a> $trait<&'a Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar arithmetic")
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if value == 0 { 0 } else { modulus - value },
                modulus,
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}
