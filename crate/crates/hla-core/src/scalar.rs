//! Exact rational scalars.
//!
//! All arithmetic in this crate runs over `BigRational`, which keeps every
//! value in canonical reduced form (gcd(|num|, den) = 1, den >= 1) after each
//! operation. Zero is 0/1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Integer as a scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Fraction `num/den` as a scalar. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse a rational from the document grammar: optional sign, digits,
/// optionally followed by `/` and a positive integer.
pub fn parse_rational(text: &str) -> Result<Scalar, String> {
    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_int(num_part, true)
        .ok_or_else(|| format!("malformed rational {text:?}: bad integer part"))?;
    let den = match den_part {
        None => BigInt::one(),
        Some(d) => {
            let d = parse_int(d, false)
                .ok_or_else(|| format!("malformed rational {text:?}: bad denominator"))?;
            if d.is_zero() {
                return Err(format!("malformed rational {text:?}: zero denominator"));
            }
            d
        }
    };
    Ok(BigRational::new(num, den))
}

fn parse_int(text: &str, allow_sign: bool) -> Option<BigInt> {
    let digits = if allow_sign {
        text.strip_prefix(['+', '-']).unwrap_or(text)
    } else {
        text
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

/// Render a scalar in the document grammar (`-3/4`, `2`, `0`).
pub fn format_rational(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Render a linear combination over named basis vectors, e.g. `a + 1/2*b`.
/// The zero vector renders as `0`.
pub fn format_combination(coords: &[Scalar], names: &[String]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.abs();
        if a.is_one() {
            out.push_str(name);
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(name);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_document_grammar() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("+3").unwrap(), int(3));
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-10/4").unwrap(), rat(-5, 2));
        assert_eq!(parse_rational("0").unwrap(), int(0));
    }

    #[test]
    fn parse_rejects_junk() {
        for bad in ["", "1.5", "1/0", "1/-2", "a", "1/", "/2", "1//2", " 1", "0x2", "²"] {
            assert!(parse_rational(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn format_is_canonical() {
        assert_eq!(format_rational(&rat(-10, 4)), "-5/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn roundtrip_keeps_reduced_form() {
        let x = parse_rational("6/4").unwrap();
        assert_eq!(format_rational(&x), "3/2");
        assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn combination_rendering() {
        let names: Vec<String> = ["eps", "a", "b"].iter().map(|s| s.to_string()).collect();
        assert_eq!(
            format_combination(&[int(1), rat(-1, 2), int(0)], &names),
            "eps - 1/2*a"
        );
        assert_eq!(format_combination(&[int(0), int(0), int(0)], &names), "0");
        assert_eq!(format_combination(&[int(-2), int(0), int(1)], &names), "-2*eps + b");
    }
}
