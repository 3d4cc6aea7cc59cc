//! Exact rational arithmetic for the discharging ledger.
//!
//! Charges are tiny fractions (denominators divide lcm(27, 5..12, 6*12)), so
//! a 64-bit numerator/denominator pair is more than enough. All operations go
//! through 128-bit intermediates and return an explicit overflow error rather
//! than silently promoting or panicking.

use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Overflow while reducing a rational back into 64 bits.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("rational overflow: {0}/{1} does not fit in 64 bits")]
pub struct Overflow(i128, i128);

/// An exact rational with 64-bit numerator and positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Rat {
    num: i64,
    den: i64,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    /// Zero.
    pub const ZERO: Rat = Rat { num: 0, den: 1 };

    /// Builds `num/den` in lowest terms; `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::reduce(num as i128, den as i128).expect("64-bit inputs reduce within 64 bits")
    }

    /// Builds an integer.
    pub fn int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    fn reduce(num: i128, den: i128) -> Result<Rat, Overflow> {
        debug_assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        let num = sign * num / g;
        let den = sign * den / g;
        if num < i64::MIN as i128 || num > i64::MAX as i128 || den > i64::MAX as i128 {
            return Err(Overflow(num, den));
        }
        Ok(Rat {
            num: num as i64,
            den: den as i64,
        })
    }

    /// Checked addition.
    pub fn add(self, other: Rat) -> Result<Rat, Overflow> {
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        Rat::reduce(num, self.den as i128 * other.den as i128)
    }

    /// Checked subtraction.
    pub fn sub(self, other: Rat) -> Result<Rat, Overflow> {
        self.add(other.neg())
    }

    /// Checked multiplication.
    pub fn mul(self, other: Rat) -> Result<Rat, Overflow> {
        Rat::reduce(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    /// Negation (never overflows: denominators are positive).
    pub fn neg(self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }

    /// Numerator (lowest terms, sign carried here).
    pub fn num(self) -> i64 {
        self.num
    }

    /// Denominator (always positive).
    pub fn den(self) -> i64 {
        self.den
    }

    /// Whether the value is negative / zero / positive.
    pub fn signum(self) -> i64 {
        self.num.signum()
    }

    /// Whether the value is exactly zero.
    pub fn is_zero(self) -> bool {
        self.num == 0
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_reduces() {
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 6);
        assert_eq!(a.add(b).unwrap(), Rat::new(1, 2));
        assert_eq!(a.sub(a).unwrap(), Rat::ZERO);
        assert_eq!(a.mul(Rat::int(6)).unwrap(), Rat::int(2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Rat::new(5, 9) < Rat::new(6, 10));
        assert!(Rat::new(-1, 3) < Rat::ZERO);
        assert_eq!(Rat::new(2, 6).cmp(&Rat::new(1, 3)), Ordering::Equal);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rat::new(i64::MAX, 1);
        assert!(big.add(big).is_err());
        assert!(Rat::new(i64::MAX, 2).mul(Rat::new(i64::MAX, 3)).is_err());
    }

    #[test]
    fn display_form() {
        assert_eq!(Rat::new(4, 3).to_string(), "4/3");
        assert_eq!(Rat::int(-2).to_string(), "-2");
    }
}
