use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field element: a residue mod p, or a rational in lowest terms
/// with positive denominator (both maintained by construction).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { p: u64, value: u64 },
    Rational(BigRational),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { value, .. } => *value == 0,
            Scalar::Rational(r) => r.is_zero(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Panics on zero: elimination only ever inverts chosen pivots.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Fp { p, value } => {
                assert!(*value != 0, "inverse of zero");
                Scalar::Fp {
                    p: *p,
                    value: powmod(*value, p - 2, *p),
                }
            }
            Scalar::Rational(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Rational(r.recip())
            }
        }
    }

    /// `self` raised to a small nonnegative power.
    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Fp { p, value } => {
                if exp == 0 {
                    Scalar::Fp { p: *p, value: 1 }
                } else {
                    Scalar::Fp {
                        p: *p,
                        value: powmod(*value, exp as u64, *p),
                    }
                }
            }
            Scalar::Rational(r) => Scalar::Rational(r.pow(exp as i32)),
        }
    }

    /// The rational payload, for callers that already dispatched on field.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    /// The residue payload.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Fp { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn same_p(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "mixed prime fields in scalar arithmetic");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                let p = same_p(*p, *q);
                Scalar::Fp {
                    p,
                    value: ((*a as u128 + *b as u128) % p as u128) as u64,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                let p = same_p(*p, *q);
                Scalar::Fp {
                    p,
                    value: ((*a as u128 + p as u128 - *b as u128) % p as u128) as u64,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                let p = same_p(*p, *q);
                Scalar::Fp {
                    p,
                    value: ((*a as u128 * *b as u128) % p as u128) as u64,
                }
            }
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
            Scalar::Rational(r) => Scalar::Rational(-r),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { value, .. } => write!(f, "{value}"),
            Scalar::Rational(r) => {
                if r.denom() == &BigInt::from(1) {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Scalars serialize as their display string, keeping reports exact and
/// byte-stable.
impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Helper used where rational matrices are cleared to integers: the signed
/// numerator after scaling by `mult` (which must cancel the denominator).
pub(crate) fn scaled_to_bigint(r: &BigRational, mult: &BigInt) -> BigInt {
    let scaled = r * BigRational::from_integer(mult.clone());
    debug_assert!(scaled.denom().abs() == BigInt::from(1));
    scaled.numer().clone()
}
