use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_prime, Characteristic, Coefficient};

/// Shape of the ambient ring: `m` even variables `x`, `n` odd variables `y`,
/// and an optional prime characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Profile {
    m: usize,
    n: usize,
    p: Option<u64>,
}

impl Profile {
    pub fn new(m: usize, n: usize, p: Option<u64>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidProfile(format!("need m, n >= 1, got m={m}, n={n}")));
        }
        if let Some(p) = p {
            if !is_prime(p) {
                return Err(Error::InvalidProfile(format!("{p} is not prime")));
            }
            if p > u32::MAX as u64 {
                return Err(Error::InvalidProfile(format!("prime {p} too large")));
            }
        }
        Ok(Profile { m, n, p })
    }

    /// Characteristic-zero profile.
    pub fn char0(m: usize, n: usize) -> Result<Self> {
        Self::new(m, n, None)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> Option<u64> {
        self.p
    }

    /// Total number of variables `m + n`.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    pub fn characteristic(&self) -> Characteristic {
        Characteristic::from_option(self.p)
    }

    /// Same shape over another characteristic.
    pub fn with_p(&self, p: Option<u64>) -> Result<Self> {
        Self::new(self.m, self.n, p)
    }

    pub fn zero(&self) -> Coefficient {
        Coefficient::zero(self.characteristic())
    }

    pub fn one(&self) -> Coefficient {
        Coefficient::one(self.characteristic())
    }

    pub fn scalar(&self, v: i64) -> Coefficient {
        Coefficient::from_i64(self.characteristic(), v)
    }

    /// 0-based position is odd (a `y` variable).
    pub fn is_odd_position(&self, pos: usize) -> bool {
        pos >= self.m
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.p {
            None => write!(f, "GL({}|{}) char 0", self.m, self.n),
            Some(p) => write!(f, "GL({}|{}) char {}", self.m, self.n, p),
        }
    }
}
