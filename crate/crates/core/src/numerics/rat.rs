use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Shorthand for `num / den` as a [`Rat`].
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
///
/// Surrounding whitespace is ignored; signs are accepted on both parts.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let trimmed = text.trim();
    let malformed = || Error::MalformedRational(text.to_string());
    let (num, den) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (trimmed, None),
    };
    let num: BigInt = parse_int(num).ok_or_else(malformed)?;
    let den: BigInt = match den {
        Some(q) => parse_int(q).ok_or_else(malformed)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rat::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Formats a slice of rationals as `a, b, c`.
pub fn format_rat_list(values: &[Rat]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        assert_eq!(parse_rat("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rat("3/6").unwrap().to_string(), "1/2");
    }

    #[test]
    fn integers_and_zero() {
        let zero = parse_rat("0").unwrap();
        assert_eq!(zero, rat(0, 1));
        assert_eq!(*zero.denom(), BigInt::from(1));
        assert_eq!(parse_rat("7/3").unwrap(), rat(7, 3));
        assert_eq!(parse_rat(" -4/-6 ").unwrap(), rat(2, 3));
    }

    #[test]
    fn rejects_bad_text() {
        assert_eq!(
            parse_rat("1/0"),
            Err(Error::ZeroDenominator("1/0".to_string()))
        );
        for bad in ["", "/", "1/", "a/2", "1.5", "1/2/3", "--1", "+"] {
            assert!(
                matches!(parse_rat(bad), Err(Error::MalformedRational(_))),
                "{bad:?} parsed"
            );
        }
    }

    #[test]
    fn big_values_stay_exact() {
        let big =
            parse_rat("123456789012345678901234567890/987654321098765432109876543210").unwrap();
        let back = parse_rat(&big.to_string()).unwrap();
        assert_eq!(big, back);
    }
}
