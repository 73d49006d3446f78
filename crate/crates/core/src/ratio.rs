use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact proportion `count / total` of linear extensions.
///
/// The reduced fraction is kept next to the raw counts so reports can show
/// both (`8/11 (8 of 11)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    count: BigUint,
    total: BigUint,
    value: BigRational,
}

impl Ratio {
    /// # Panics
    /// If `total` is zero or `count > total`.
    pub fn new(count: BigUint, total: BigUint) -> Self {
        assert!(!total.is_zero(), "ratio over an empty set");
        assert!(count <= total, "count exceeds total");
        let value = BigRational::new(BigInt::from(count.clone()), BigInt::from(total.clone()));
        Ratio {
            count,
            total,
            value,
        }
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numerator(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.value.denom()
    }

    /// The ratio for the opposite event, `(total - count) / total`.
    pub fn complement(&self) -> Ratio {
        Ratio::new(&self.total - &self.count, self.total.clone())
    }

    /// `min(r, 1 - r)`: how close the pair is to an even split.
    pub fn balance(&self) -> BigRational {
        let other = BigRational::one() - &self.value;
        if other < self.value {
            other
        } else {
            self.value.clone()
        }
    }

    /// Reduced fraction as `num/den`.
    pub fn fraction(&self) -> String {
        fraction_string(&self.value)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} of {})", self.fraction(), self.count, self.total)
    }
}

/// `num/den`, always with an explicit denominator.
pub fn fraction_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `a/b` or an integer into an exact rational.
pub fn parse_fraction(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let syntax = |message: &str| Error::Syntax {
        line: 0,
        message: format!("{message}: {text:?}"),
    };
    let value = match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| syntax("bad numerator"))?;
            let d = BigInt::from_str(d.trim()).map_err(|_| syntax("bad denominator"))?;
            if d.is_zero() {
                return Err(syntax("zero denominator"));
            }
            BigRational::new(n, d)
        }
        None => {
            BigRational::from_integer(BigInt::from_str(text).map_err(|_| syntax("bad number"))?)
        }
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: u32, t: u32) -> Ratio {
        Ratio::new(c.into(), t.into())
    }

    #[test]
    fn reduces_and_keeps_raw_counts() {
        let x = r(4, 6);
        assert_eq!(x.fraction(), "2/3");
        assert_eq!(x.to_string(), "2/3 (4 of 6)");
        assert_eq!(x.complement().fraction(), "1/3");
        assert_eq!(x.balance(), parse_fraction("1/3").unwrap());
        assert_eq!(r(0, 5).fraction(), "0/1");
    }

    #[test]
    fn parses_fractions() {
        assert_eq!(
            parse_fraction(" 2/6 ").unwrap(),
            parse_fraction("1/3").unwrap()
        );
        assert_eq!(fraction_string(&parse_fraction("1").unwrap()), "1/1");
        assert!(parse_fraction("1/0").is_err());
        assert!(parse_fraction("x").is_err());
    }
}
