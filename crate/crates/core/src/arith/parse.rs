//! Text format for binary forms: sparse monomial syntax with an explicit
//! twist attribute, e.g. `3*x^2 + 1; twist=4`. The printer emits a
//! canonical string (descending powers, canonical representatives) and the
//! parser round-trips it exactly.

use crate::arith::form::{h0, BinaryForm};
use crate::arith::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Canonical text for a form, including the twist attribute.
pub fn print_form(f: &BinaryForm) -> String {
    format!("{}; twist={}", f, f.twist())
}

/// Parse `poly; twist=m`. The coefficient field is supplied by the caller
/// (prime-field residues are reduced into canonical range, rationals may
/// be written `a/b`).
pub fn parse_form(text: &str, field: Field) -> Result<BinaryForm> {
    let (poly_part, twist) = split_twist(text)?;
    let twist = twist.ok_or_else(|| Error::parse("form", "missing `twist=` attribute"))?;
    parse_form_with_twist(poly_part, twist, field)
}

/// Parse the polynomial part against an externally supplied twist. If the
/// text carries its own `twist=` attribute it must agree.
pub fn parse_form_with_twist(text: &str, twist: i64, field: Field) -> Result<BinaryForm> {
    let (poly_part, attr) = split_twist(text)?;
    if let Some(t) = attr {
        if t != twist {
            return Err(Error::TwistMismatch {
                context: "form text attribute",
                expected: twist,
                found: t,
            });
        }
    }
    let terms = parse_poly(poly_part, field)?;
    let mut coeffs = vec![field.zero(); h0(twist) as usize];
    for (exp, c) in terms {
        if c.is_zero() {
            continue;
        }
        if exp >= coeffs.len() {
            return Err(Error::parse(
                "form",
                format!("term x^{exp} exceeds twist {twist}"),
            ));
        }
        coeffs[exp] = coeffs[exp].try_add(&c)?;
    }
    BinaryForm::new(field, twist, coeffs)
}

fn split_twist(text: &str) -> Result<(&str, Option<i64>)> {
    match text.split_once(';') {
        None => Ok((text, None)),
        Some((poly, attr)) => {
            let attr = attr.trim();
            let value = attr
                .strip_prefix("twist=")
                .ok_or_else(|| Error::parse("form", format!("unknown attribute `{attr}`")))?;
            let twist: i64 = value
                .trim()
                .parse()
                .map_err(|_| Error::parse("form", format!("invalid twist `{value}`")))?;
            Ok((poly, Some(twist)))
        }
    }
}

/// Parse a sparse polynomial into (exponent, coefficient) pairs.
fn parse_poly(text: &str, field: Field) -> Result<Vec<(usize, Scalar)>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("form", "empty polynomial"));
    }
    let mut out = Vec::new();
    let mut rest = text;
    let mut sign = 1i64;
    // leading sign
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r.trim_start();
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r.trim_start();
    }
    loop {
        let term_end = find_top_level_sign(rest);
        let (term, tail) = match term_end {
            Some(idx) => rest.split_at(idx),
            None => (rest, ""),
        };
        out.push(parse_term(term.trim(), sign, field)?);
        if tail.is_empty() {
            break;
        }
        let mut chars = tail.chars();
        sign = if chars.next() == Some('-') { -1 } else { 1 };
        rest = chars.as_str().trim_start();
    }
    Ok(out)
}

fn find_top_level_sign(s: &str) -> Option<usize> {
    // A '+' or '-' that is not part of `a/b` fractions or exponents; in
    // this grammar any interior +/- preceded by whitespace or a digit or
    // `x`/`^` suffix starts a new term. The grammar never produces interior
    // signs elsewhere, so scan past the first character.
    s.char_indices()
        .skip(1)
        .find(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
}

fn parse_term(term: &str, sign: i64, field: Field) -> Result<(usize, Scalar)> {
    if term.is_empty() {
        return Err(Error::parse("form", "dangling sign"));
    }
    let (coeff_text, exp) = match term.find('x') {
        None => (term, 0usize),
        Some(xi) => {
            let coeff = term[..xi].trim().trim_end_matches('*').trim();
            let after = &term[xi + 1..];
            let exp = if after.is_empty() {
                1
            } else {
                let e = after
                    .trim()
                    .strip_prefix('^')
                    .ok_or_else(|| Error::parse("form", format!("malformed term `{term}`")))?;
                e.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse("form", format!("invalid exponent in `{term}`")))?
            };
            (coeff, exp)
        }
    };
    let coeff = if coeff_text.is_empty() {
        field.one()
    } else {
        parse_scalar(coeff_text, field)?
    };
    let coeff = if sign < 0 { -coeff } else { coeff };
    Ok((exp, coeff))
}

pub(crate) fn parse_scalar(text: &str, field: Field) -> Result<Scalar> {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;

    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::parse("coefficient", format!("invalid integer `{t}`")))
    };
    let reduce = |n: &BigInt, p: u64| -> Scalar {
        let p_big = BigInt::from(p);
        let mut r = n % &p_big;
        if r < BigInt::zero() {
            r += &p_big;
        }
        let value: u64 = r.try_into().expect("residue fits in u64");
        Scalar::Prime { value, modulus: p }
    };
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            match field {
                Field::Rational => Ok(Scalar::Rational(BigRational::new(n, d))),
                Field::Prime(p) => reduce(&n, p).try_div(&reduce(&d, p)),
            }
        }
        None => {
            let n = parse_int(text)?;
            match field {
                Field::Rational => Ok(Scalar::Rational(BigRational::from_integer(n))),
                Field::Prime(p) => Ok(reduce(&n, p)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hitchin::sample::SplitMix64;

    #[test]
    fn parses_basic_syntax() {
        let f = Field::prime(1009).unwrap();
        let g = parse_form("3*x^2 + 1; twist=4", f).unwrap();
        assert_eq!(g.twist(), 4);
        assert_eq!(g.coeff(2), f.from_int(3));
        assert_eq!(g.coeff(0), f.from_int(1));
        assert_eq!(g.coeff(4), f.zero());
    }

    #[test]
    fn parses_signs_and_bare_x() {
        let f = Field::prime(7).unwrap();
        let g = parse_form_with_twist("-x^2 + x - 5", 2, f).unwrap();
        assert_eq!(g.coeff(2), f.from_int(-1));
        assert_eq!(g.coeff(1), f.from_int(1));
        assert_eq!(g.coeff(0), f.from_int(-5));
    }

    #[test]
    fn rational_coefficients() {
        let q = Field::Rational;
        let g = parse_form("x - 1/2; twist=1", q).unwrap();
        assert_eq!(g.coeff(0), Scalar::rational(-1, 2).unwrap());
        assert_eq!(print_form(&g), "x - 1/2; twist=1");
    }

    #[test]
    fn zero_form_round_trip() {
        let f = Field::prime(7).unwrap();
        let z = BinaryForm::zero(f, 3);
        let back = parse_form(&print_form(&z), f).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn round_trip_randomized() {
        let mut rng = SplitMix64::new(99);
        let fp = Field::prime(1009).unwrap();
        for _ in 0..200 {
            let twist = rng.next_below(7) as i64 - 1;
            let coeffs: Vec<Scalar> = (0..h0(twist))
                .map(|_| fp.from_int(rng.next_below(1009) as i64))
                .collect();
            let form = BinaryForm::new(fp, twist, coeffs).unwrap();
            let text = print_form(&form);
            let back = parse_form(&text, fp).unwrap();
            assert_eq!(back, form, "round trip failed on `{text}`");
        }
        // rational sweep
        let q = Field::Rational;
        for _ in 0..100 {
            let twist = rng.next_below(5) as i64;
            let coeffs: Vec<Scalar> = (0..h0(twist))
                .map(|_| {
                    let n = rng.next_below(19) as i64 - 9;
                    let d = 1 + rng.next_below(6) as i64;
                    Scalar::rational(n, d).unwrap()
                })
                .collect();
            let form = BinaryForm::new(q, twist, coeffs).unwrap();
            let text = print_form(&form);
            let back = parse_form(&text, q).unwrap();
            assert_eq!(back, form, "round trip failed on `{text}`");
        }
    }

    #[test]
    fn arbitrary_precision_coefficients() {
        let q = Field::Rational;
        let text = "123456789012345678901234567890/7*x - 1; twist=1";
        let f = parse_form(text, q).unwrap();
        let back = parse_form(&print_form(&f), q).unwrap();
        assert_eq!(back, f);
        // big literals reduce into canonical range over a prime field
        let fp = Field::prime(1009).unwrap();
        let g = parse_form("123456789012345678901234567890; twist=0", fp).unwrap();
        assert!(g.coeff(0).residue().unwrap() < 1009);
    }

    #[test]
    fn rejects_garbage() {
        let f = Field::prime(7).unwrap();
        assert!(parse_form("x^2 + 1", f).is_err()); // missing twist
        assert!(parse_form("y^2; twist=2", f).is_err());
        assert!(parse_form("x^9; twist=2", f).is_err());
        assert!(parse_form("x^2; twist=banana", f).is_err());
    }
}
