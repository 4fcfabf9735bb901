//! Exact scalars: arbitrary-precision rationals or prime-field residues.
//!
//! A [`Coefficient`] carries its own field tag. Mixing the two fields in one
//! operation is a programming error and panics; every polynomial-level entry
//! point checks profiles before it gets here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Characteristic of the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn from_option(p: Option<u64>) -> Self {
        match p {
            None => Characteristic::Zero,
            Some(p) => Characteristic::Prime(p),
        }
    }

    pub fn prime(self) -> Option<u64> {
        match self {
            Characteristic::Zero => None,
            Characteristic::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => write!(f, "0"),
            Characteristic::Prime(p) => write!(f, "{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    Modular { value: u64, prime: u64 },
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn reduce_bigint(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

impl Coefficient {
    pub fn zero(ch: Characteristic) -> Self {
        Self::from_i64(ch, 0)
    }

    pub fn one(ch: Characteristic) -> Self {
        Self::from_i64(ch, 1)
    }

    pub fn from_i64(ch: Characteristic, v: i64) -> Self {
        match ch {
            Characteristic::Zero => Coefficient::Rational(BigRational::from_integer(v.into())),
            Characteristic::Prime(p) => Coefficient::Modular {
                value: (v.rem_euclid(p as i64)) as u64,
                prime: p,
            },
        }
    }

    pub fn from_rational(ch: Characteristic, q: &BigRational) -> Result<Self> {
        match ch {
            Characteristic::Zero => Ok(Coefficient::Rational(q.clone())),
            Characteristic::Prime(p) => {
                let den = reduce_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::Parse(format!("denominator of {q} vanishes mod {p}")));
                }
                let num = reduce_bigint(q.numer(), p);
                let inv = mod_pow(den, p - 2, p);
                Ok(Coefficient::Modular {
                    value: ((num as u128 * inv as u128) % p as u128) as u64,
                    prime: p,
                })
            }
        }
    }

    pub fn characteristic(&self) -> Characteristic {
        match self {
            Coefficient::Rational(_) => Characteristic::Zero,
            Coefficient::Modular { prime, .. } => Characteristic::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_zero(),
            Coefficient::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Rational(q) => q.is_one(),
            Coefficient::Modular { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Coefficient::Rational(q) => Coefficient::Rational(q.recip()),
            Coefficient::Modular { value, prime } => Coefficient::Modular {
                value: mod_pow(*value, prime - 2, *prime),
                prime: *prime,
            },
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        match self {
            Coefficient::Rational(q) => Coefficient::Rational(num_traits::pow(q.clone(), k as usize)),
            Coefficient::Modular { value, prime } => Coefficient::Modular {
                value: mod_pow(*value, k as u64, *prime),
                prime: *prime,
            },
        }
    }

    /// Size measure used for pivot selection: numerator plus denominator bits.
    pub fn bit_size(&self) -> u64 {
        match self {
            Coefficient::Rational(q) => q.numer().bits() + q.denom().bits(),
            Coefficient::Modular { .. } => 1,
        }
    }

    /// Canonical text form: `"a"` or `"a/b"` with reduced denominator.
    pub fn to_canonical_string(&self) -> String {
        match self {
            Coefficient::Rational(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Coefficient::Modular { value, .. } => value.to_string(),
        }
    }

    /// Parses `"a"` or `"a/b"` (optional sign on the numerator) into the given field.
    pub fn parse(ch: Characteristic, text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("bad coefficient {text:?}"));
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a, b),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() || den.is_negative() {
            return Err(bad());
        }
        Self::from_rational(ch, &BigRational::new(num, den))
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.characteristic(),
            other.characteristic(),
            "mixed-field coefficient arithmetic"
        );
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.check(rhs);
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a + b),
            (Coefficient::Modular { value: a, prime }, Coefficient::Modular { value: b, .. }) => {
                Coefficient::Modular {
                    value: ((*a as u128 + *b as u128) % *prime as u128) as u64,
                    prime: *prime,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.check(rhs);
        match (self, rhs) {
            (Coefficient::Rational(a), Coefficient::Rational(b)) => Coefficient::Rational(a * b),
            (Coefficient::Modular { value: a, prime }, Coefficient::Modular { value: b, .. }) => {
                Coefficient::Modular {
                    value: ((*a as u128 * *b as u128) % *prime as u128) as u64,
                    prime: *prime,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        match self {
            Coefficient::Rational(a) => Coefficient::Rational(-a),
            Coefficient::Modular { value, prime } => Coefficient::Modular {
                value: (prime - value) % prime,
                prime: *prime,
            },
        }
    }
}
