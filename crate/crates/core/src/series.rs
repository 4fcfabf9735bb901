//! Polynomials in one auxiliary variable `t` over the Laurent ring.
//!
//! [`TPolynomial`] is the exact Laurent polynomial in `t` produced by
//! diagonal substitution. [`TruncatedSeries`] is a power series cut off at a
//! fixed degree; it drives the exterior/symmetric power generating functions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::{check_profiles, LaurentPolynomial};
use crate::profile::Profile;
use crate::scalar::Coefficient;
use crate::weight::Weight;

/// `Σ_k a_k t^k` with Laurent-polynomial coefficients; `k` may be negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPolynomial {
    profile: Profile,
    coeffs: BTreeMap<i64, LaurentPolynomial>,
}

impl TPolynomial {
    pub fn zero(profile: Profile) -> Self {
        TPolynomial {
            profile,
            coeffs: BTreeMap::new(),
        }
    }

    /// `t^k`.
    pub fn t_power(profile: Profile, k: i64) -> Self {
        let mut out = Self::zero(profile);
        out.coeffs.insert(k, LaurentPolynomial::one(profile));
        out
    }

    pub(crate) fn add_term(&mut self, t_degree: i64, w: Weight, c: Coefficient) {
        let entry = self
            .coeffs
            .entry(t_degree)
            .or_insert_with(|| LaurentPolynomial::zero(self.profile));
        entry.add_term(w, c);
        if entry.is_zero() {
            self.coeffs.remove(&t_degree);
        }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> LaurentPolynomial {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| LaurentPolynomial::zero(self.profile))
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &LaurentPolynomial)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Formal `d/dt`; the factor `k` lives in the coefficient field, so it
    /// vanishes when the characteristic divides `k`.
    pub fn derivative_t(&self) -> Self {
        let mut out = Self::zero(self.profile);
        for (&k, c) in &self.coeffs {
            let factor = self.profile.scalar(k);
            if factor.is_zero() {
                continue;
            }
            let scaled = c.scale(&factor);
            if !scaled.is_zero() {
                out.coeffs.insert(k - 1, scaled);
            }
        }
        out
    }
}

/// `Σ_{k≤cap} a_k t^k`, truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    profile: Profile,
    coeffs: Vec<LaurentPolynomial>,
}

impl TruncatedSeries {
    pub fn zero(profile: Profile, cap: usize) -> Self {
        TruncatedSeries {
            profile,
            coeffs: vec![LaurentPolynomial::zero(profile); cap + 1],
        }
    }

    pub fn one(profile: Profile, cap: usize) -> Self {
        let mut s = Self::zero(profile, cap);
        s.coeffs[0] = LaurentPolynomial::one(profile);
        s
    }

    /// Builds from explicit coefficients, padding with zeros up to `cap` and
    /// dropping anything above it.
    pub fn from_coeffs(profile: Profile, cap: usize, coeffs: Vec<LaurentPolynomial>) -> Result<Self> {
        let mut s = Self::zero(profile, cap);
        for (k, c) in coeffs.into_iter().enumerate() {
            check_profiles(&profile, c.profile())?;
            if k <= cap {
                s.coeffs[k] = c;
            }
        }
        Ok(s)
    }

    /// `1 + v·t`.
    pub fn linear(v: &LaurentPolynomial, cap: usize) -> Self {
        let profile = *v.profile();
        let mut s = Self::one(profile, cap);
        if cap >= 1 {
            s.coeffs[1] = v.clone();
        }
        s
    }

    /// `Σ_k v^k t^k = (1 - v·t)^{-1}` truncated at `cap`.
    pub fn geometric(v: &LaurentPolynomial, cap: usize) -> Self {
        let profile = *v.profile();
        let mut s = Self::zero(profile, cap);
        let mut power = LaurentPolynomial::one(profile);
        for k in 0..=cap {
            s.coeffs[k] = power.clone();
            if k < cap {
                power = &power * v;
            }
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn coeff(&self, k: usize) -> &LaurentPolynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPolynomial] {
        &self.coeffs
    }

    /// Cauchy product truncated at the common cap.
    pub fn series_mul(&self, other: &Self) -> Result<Self> {
        check_profiles(&self.profile, &other.profile)?;
        if self.cap() != other.cap() {
            return Err(Error::SeriesMismatch(format!(
                "caps {} and {}",
                self.cap(),
                other.cap()
            )));
        }
        let cap = self.cap();
        let mut out = Self::zero(self.profile, cap);
        for i in 0..=cap {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(cap - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &other.coeffs[j];
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        Ok(out)
    }

    /// Product of many factors sharing profile and cap; an empty product is 1.
    pub fn product<'a, I>(profile: Profile, cap: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a TruncatedSeries>,
    {
        let mut acc = Self::one(profile, cap);
        for f in factors {
            acc = acc.series_mul(f)?;
        }
        Ok(acc)
    }
}
