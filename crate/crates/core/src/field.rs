//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::LinalgError;

/// Largest prime modulus accepted. Keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

/// The field a scalar, matrix or subspace lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers, characteristic 0.
    Rationals,
    /// The prime field GF(p).
    Prime(u64),
}

impl Field {
    /// GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, LinalgError> {
        if p > MAX_PRIME {
            return Err(LinalgError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_u64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_u64(1)
    }

    /// The image of `n` under the canonical ring map from the integers.
    pub fn from_u64(&self, n: u64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n % p,
                modulus: *p,
            },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue {
                value: n.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
        }
    }

    /// Whether `n·1` is zero in this field.
    pub fn divides(&self, n: u64) -> bool {
        match self {
            Field::Rationals => n == 0,
            Field::Prime(p) => n.is_multiple_of(*p),
        }
    }

    /// Whether `s` is an element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    /// Parse a scalar: `a` or `a/b` over the rationals, a decimal integer
    /// (reduced modulo p) over GF(p).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, LinalgError> {
        let text = text.trim();
        let bad = |reason: &str| LinalgError::ParseScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        match self {
            Field::Rationals => BigRational::from_str(text)
                .map(Scalar::Rational)
                .map_err(|e| bad(&e.to_string())),
            Field::Prime(p) => {
                let n = BigInt::from_str(text).map_err(|e| bad(&e.to_string()))?;
                let r = ((n % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                Ok(Scalar::Residue {
                    value: r.to_u64().expect("residue below modulus"),
                    modulus: *p,
                })
            }
        }
    }

    /// Every element of a prime field, in residue order. `None` over the rationals.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar> + '_> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..*p).map(move |value| Scalar::Residue {
                value,
                modulus: *p,
            })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "f:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = LinalgError;

    /// `q` for the rationals, `f:<p>` for GF(p).
    fn from_str(s: &str) -> Result<Field, LinalgError> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        match s.strip_prefix("f:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| LinalgError::BadFieldSpec(s.to_string()))?;
                Field::prime(p)
            }
            None => Err(LinalgError::BadFieldSpec(s.to_string())),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form.
///
/// Rationals are kept in lowest terms with positive denominator; residues are
/// reduced into `[0, p)`. Arithmetic between scalars of different fields is a
/// programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// The residue of a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    fn binary(&self, rhs: &Scalar, q: impl Fn(&BigRational, &BigRational) -> BigRational, r: impl Fn(u64, u64, u64) -> u64) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(q(a, b)),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: p2 },
            ) if p == p2 => Scalar::Residue {
                value: r(*a, *b, *p),
                modulus: *p,
            },
            _ => panic!("scalar arithmetic across fields: {} and {}", self.field(), rhs.field()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.binary(rhs, |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{}", q.numer().abs(), q.denom())
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_spec_syntax() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("f:7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!(matches!("f:9".parse::<Field>(), Err(LinalgError::NotPrime(9))));
        assert!(matches!("f:1".parse::<Field>(), Err(LinalgError::NotPrime(1))));
        assert!("gf7".parse::<Field>().is_err());
        assert_eq!(Field::Prime(5).to_string(), "f:5");
    }

    #[test]
    fn rational_canonical_form() {
        let q = Field::Rationals;
        let a = q.parse_scalar("2/4").unwrap();
        let b = q.parse_scalar("-3/6").unwrap();
        assert_eq!(a.to_string(), "1/2");
        assert_eq!(b.to_string(), "-1/2");
        assert!((&a + &b).is_zero());
        assert_eq!((&a * &b).to_string(), "-1/4");
        assert_eq!(q.parse_scalar("6/3").unwrap().to_string(), "2");
        assert!(q.parse_scalar("1/0").is_err());
        assert!(q.parse_scalar("x").is_err());
    }

    #[test]
    fn residue_arithmetic() {
        let f = Field::Prime(7);
        let three = f.from_u64(3);
        let five = f.from_u64(5);
        assert_eq!((&three + &five).residue(), Some(1));
        assert_eq!((&three - &five).residue(), Some(5));
        assert_eq!((&three * &five).residue(), Some(1));
        assert_eq!(three.inv().unwrap(), five);
        assert_eq!((-&three).residue(), Some(4));
        assert_eq!(f.parse_scalar("-1").unwrap().residue(), Some(6));
        assert_eq!(f.from_i64(-8).residue(), Some(6));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn characteristic_divides() {
        assert!(Field::Prime(2).divides(8));
        assert!(!Field::Prime(3).divides(8));
        assert!(!Field::Rationals.divides(8));
    }

    #[test]
    #[should_panic(expected = "across fields")]
    fn mixed_fields_panic() {
        let _ = &Field::Prime(2).one() + &Field::Rationals.one();
    }
}
