use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator. `Display` prints `num/den`, or just `num` when `den = 1`.
pub type ExactRational = BigRational;

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `n` or `n/d` (optional leading sign, no spaces).
pub fn parse_rational(text: &str) -> Result<ExactRational> {
    let bad = || Error::Unsupported(format!("not a rational number: `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_omits_unit_denominator() {
        assert_eq!(rat(6, 3).to_string(), "2");
        assert_eq!(rat(-2, 4).to_string(), "-1/2");
        assert_eq!(rat(3, -9).to_string(), "-1/3");
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!(parse_rational("-7/21").unwrap(), rat(-1, 3));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
