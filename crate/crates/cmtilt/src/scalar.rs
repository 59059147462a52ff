//! Exact field arithmetic: rationals (arbitrary precision) and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use std::fmt;

use crate::{Error, Result};

/// The coefficient field all computations run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Field {
    #[serde(rename = "Q")]
    Rationals,
    Fp(u64),
}

impl Field {
    pub fn validate(&self) -> Result<()> {
        if let Field::Fp(p) = self {
            if *p < 2 || !is_prime(*p) {
                return Err(Error::BadInput(format!("{p} is not prime")));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p: *p, v: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: r }
            }
        }
    }

    /// Parse a coefficient literal: a decimal integer or `a/b`.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::BadInput(format!("cannot parse coefficient {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            let d: i64 = den.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::BadInput("coefficient denominator is zero".into()));
            }
            let dn = self.from_i64(d);
            if dn.is_zero() {
                return Err(Error::BadInput(format!(
                    "denominator of {s} vanishes in the chosen field"
                )));
            }
            Ok(self.from_i64(n).mul(&dn.inv()?))
        } else {
            let n: i64 = s.parse().map_err(|_| bad())?;
            Ok(self.from_i64(n))
        }
    }

    /// Deterministic "random" element for randomized checks; never huge.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Rationals => self.from_i64(rng.gen_range(-7..=7)),
            Field::Fp(p) => Scalar::Fp { p: *p, v: rng.gen_range(0..*p) },
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Fp(p) => write!(f, "F{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the active field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, v: (a + b) % p }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: (p - v) % p },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                let prod = (*a as u128 * *b as u128) % *p as u128;
                Scalar::Fp { p: *p, v: prod as u64 }
            }
            _ => panic!("mixed fields in scalar arithmetic"),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::Internal("inverse of zero".into()));
        }
        Ok(match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: mod_pow(*v, p - 2, *p) },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut bb = b as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % m as u128;
        }
        bb = bb * bb % m as u128;
        e >>= 1;
    }
    acc as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// True if the rational scalar has "small" height, used only in display heuristics.
pub fn is_small(s: &Scalar) -> bool {
    match s {
        Scalar::Rat(r) => r.numer().abs() < BigInt::from(1000) && r.denom() < &BigInt::from(1000),
        Scalar::Fp { .. } => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let f = Field::Rationals;
        let a = f.parse("2/3").unwrap();
        let b = f.parse("-5").unwrap();
        assert_eq!(a.mul(&b).to_string(), "-10/3");
        assert!(a.sub(&a).is_zero());
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Fp(7);
        let a = f.from_i64(-3); // = 4
        assert_eq!(a.to_string(), "4");
        assert!(a.mul(&a.inv().unwrap()).is_one());
        let half = f.parse("1/2").unwrap();
        assert_eq!(half.add(&half).to_string(), "1");
    }

    #[test]
    fn rejects_nonprime_modulus() {
        assert!(Field::Fp(6).validate().is_err());
        assert!(Field::Fp(7).validate().is_ok());
    }

    #[test]
    fn parse_rejects_vanishing_denominator() {
        assert!(Field::Fp(5).parse("1/5").is_err());
        assert!(Field::Rationals.parse("1/0").is_err());
    }
}
