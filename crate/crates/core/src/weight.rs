//! Integer weights of the torus, `X(T) = Z^{m+n}`.
//!
//! A [`Weight`] doubles as the exponent vector of a Laurent monomial: the
//! first `m` entries are exponents of `x_1..x_m`, the last `n` those of
//! `y_1..y_n`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

/// Exponent vectors and weights are the same lattice.
pub type ExponentVector = Weight;

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    pub fn zero(len: usize) -> Self {
        Weight(vec![0; len])
    }

    /// The `i`-th unit vector (0-based).
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        Weight(v)
    }

    /// Concatenates an even block and an odd block.
    pub fn from_blocks(plus: &[i64], minus: &[i64]) -> Self {
        Weight(plus.iter().chain(minus).copied().collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `λ_+`, the first `m` entries.
    pub fn plus_part(&self, m: usize) -> &[i64] {
        &self.0[..m]
    }

    /// `λ_-`, the entries after the first `m`.
    pub fn minus_part(&self, m: usize) -> &[i64] {
        &self.0[m..]
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|e| e * k).collect())
    }

    /// Prefix sums `Σ_{i≤k} λ_i` for `k = 1..len`.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0i64, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                got: self.len(),
            });
        }
        Ok(())
    }

    /// Renders as `(a,b|c,d)` with the bar after position `m`.
    pub fn display_split(&self, m: usize) -> String {
        let join = |s: &[i64]| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        let m = m.min(self.len());
        format!("({}|{})", join(&self.0[..m]), join(&self.0[m..]))
    }

    pub fn swap(&self, a: usize, b: usize) -> Weight {
        let mut v = self.0.clone();
        v.swap(a, b);
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.0.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "[{s}]")
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

/// Accepts `1,0|0`, `(1,0|0)` or `[1,0,0]`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .map(|c| if matches!(c, '(' | ')' | '[' | ']') { ' ' } else { c })
            .collect();
        let entries = cleaned
            .split([',', '|'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight(entries))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|e| -e).collect())
    }
}
