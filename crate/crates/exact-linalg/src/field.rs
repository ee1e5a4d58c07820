use crate::error::LinalgError;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient field: a prime field F_p (p >= 5) or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Prime(u64),
    Rational,
}

impl FieldSpec {
    /// A validated prime field; rejects p < 5 and composite p.
    pub fn prime(p: u64) -> Result<FieldSpec, LinalgError> {
        if p < 5 {
            return Err(LinalgError::PrimeTooSmall(p));
        }
        if !is_prime_u64(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn rational() -> FieldSpec {
        FieldSpec::Rational
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Fp { p, value: 0 },
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Fp { p, value: 1 },
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
        }
    }

    /// Embeds an integer.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Prime(p) => Scalar::Fp {
                p,
                value: (n as i128).rem_euclid(p as i128) as u64,
            },
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    /// Parses a decimal integer (`"-12"`) or a fraction (`"3/4"`). In a prime
    /// field, fractions embed via modular inversion; denominators divisible
    /// by p are rejected.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, LinalgError> {
        let bad = || LinalgError::UnparsableScalar(s.to_string());
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: i64 = num_str.trim().parse().map_err(|_| bad())?;
        let den: i64 = match den_str {
            Some(d) => d.trim().parse().map_err(|_| bad())?,
            None => 1,
        };
        if den == 0 {
            return Err(bad());
        }
        let den_scalar = self.from_i64(den);
        if den_scalar.is_zero() {
            return Err(LinalgError::DenominatorVanishes(s.to_string()));
        }
        Ok(&self.from_i64(num) / &den_scalar)
    }

    /// Whether a scalar belongs to this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (FieldSpec::Rational, Scalar::Rational(_))
        ) || matches!((self, s), (FieldSpec::Prime(p), Scalar::Fp { p: q, .. }) if p == q)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

/// Deterministic Miller–Rabin over the witness set that decides primality
/// for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == small {
            return true;
        }
        if n % small == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_primes() {
        assert!(FieldSpec::prime(101).is_ok());
        assert!(FieldSpec::prime(5).is_ok());
        assert_eq!(FieldSpec::prime(4), Err(LinalgError::PrimeTooSmall(4)));
        assert_eq!(FieldSpec::prime(91), Err(LinalgError::NotPrime(91))); // 7 * 13
        assert_eq!(FieldSpec::prime(3), Err(LinalgError::PrimeTooSmall(3)));
    }

    #[test]
    fn primality_test_agrees_with_trial_division() {
        let slow = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..2000 {
            assert_eq!(is_prime_u64(n), slow(n), "n = {n}");
        }
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime_u64(2_147_483_649));
    }

    #[test]
    fn integer_embedding_reduces_mod_p() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.from_i64(10), Scalar::Fp { p: 7, value: 3 });
        assert_eq!(f.from_i64(-1), Scalar::Fp { p: 7, value: 6 });
    }

    #[test]
    fn parses_integers_and_fractions() {
        let q = FieldSpec::rational();
        assert_eq!(q.parse_scalar("-12").unwrap().to_string(), "-12");
        assert_eq!(q.parse_scalar("3/6").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("4/-2").unwrap().to_string(), "-2");
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("a").is_err());

        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.parse_scalar("3/2").unwrap(), Scalar::Fp { p: 7, value: 5 });
        assert!(f.parse_scalar("1/7").is_err());
    }
}
