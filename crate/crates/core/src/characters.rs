//! Formal supercharacters of explicitly given supermodules.
//!
//! `χ(V) = Σ_λ (dim (V_λ)_0 - dim (V_λ)_1) x^{λ_+} y^{λ_-}`. Exterior and
//! symmetric powers are computed from their supertrace generating functions
//! over a basis: an even vector of weight `w` contributes `1 + x^w t` to
//! `Λ` and `(1 - x^w t)^{-1}` to `S`; an odd vector contributes
//! `(1 + x^w t)^{-1}` to `Λ` and `1 - x^w t` to `S`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::poset::leq;
use crate::profile::Profile;
use crate::scalar::Coefficient;
use crate::series::TruncatedSeries;
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

/// Weights and parities of a homogeneous basis of a torus-diagonal supermodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperBasis {
    profile: Profile,
    vectors: Vec<(Weight, Parity)>,
}

impl SuperBasis {
    pub fn new(profile: Profile, vectors: Vec<(Weight, Parity)>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::InvalidArgument("a super basis needs at least one vector".into()));
        }
        for (w, _) in &vectors {
            w.check_len(profile.rank())?;
        }
        Ok(SuperBasis { profile, vectors })
    }

    /// `e_1, …, e_{m+n}` with `e_i` of weight `ε_i`, odd exactly for `i > m`.
    pub fn standard(profile: Profile) -> Self {
        let vectors = (0..profile.rank())
            .map(|i| {
                let parity = if profile.is_odd_position(i) {
                    Parity::Odd
                } else {
                    Parity::Even
                };
                (Weight::unit(profile.rank(), i), parity)
            })
            .collect();
        SuperBasis { profile, vectors }
    }

    /// Weights negated, parities kept.
    pub fn dual(&self) -> Self {
        SuperBasis {
            profile: self.profile,
            vectors: self.vectors.iter().map(|(w, p)| (-w, *p)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        crate::laurent::check_profiles(&self.profile, &other.profile)?;
        let mut vectors = self.vectors.clone();
        vectors.extend(other.vectors.iter().cloned());
        Ok(SuperBasis {
            profile: self.profile,
            vectors,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn vectors(&self) -> &[(Weight, Parity)] {
        &self.vectors
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    fn signed_monomial(&self, w: &Weight, parity: Parity) -> LaurentPolynomial {
        let sign = if parity == Parity::Odd { -1 } else { 1 };
        LaurentPolynomial::monomial(self.profile, w.clone(), self.profile.scalar(sign))
            .expect("weights sized to profile")
    }

    pub fn supercharacter(&self) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero(self.profile);
        for (w, p) in &self.vectors {
            out = &out + &self.signed_monomial(w, *p);
        }
        out
    }

    fn power_series(&self, cap: usize, exterior: bool) -> TruncatedSeries {
        let factors: Vec<TruncatedSeries> = self
            .vectors
            .iter()
            .map(|(w, p)| {
                let mono = LaurentPolynomial::unit_monomial(self.profile, w.clone())
                    .expect("weights sized to profile");
                match (exterior, p) {
                    (true, Parity::Even) => TruncatedSeries::linear(&mono, cap),
                    (true, Parity::Odd) => TruncatedSeries::geometric(&-&mono, cap),
                    (false, Parity::Even) => TruncatedSeries::geometric(&mono, cap),
                    (false, Parity::Odd) => TruncatedSeries::linear(&-&mono, cap),
                }
            })
            .collect();
        TruncatedSeries::product(self.profile, cap, &factors).expect("shared profile and cap")
    }

    /// `χ(Λ^r V)`.
    pub fn exterior_power_char(&self, r: usize) -> LaurentPolynomial {
        self.power_series(r, true).coeff(r).clone()
    }

    /// `χ(S^r V)`.
    pub fn symmetric_power_char(&self, r: usize) -> LaurentPolynomial {
        self.power_series(r, false).coeff(r).clone()
    }

    /// `Σ_{k≤cap} χ(Λ^k V) t^k`.
    pub fn exterior_series(&self, cap: usize) -> TruncatedSeries {
        self.power_series(cap, true)
    }

    /// `Σ_{k≤cap} χ(S^k V) t^k`.
    pub fn symmetric_series(&self, cap: usize) -> TruncatedSeries {
        self.power_series(cap, false)
    }
}

/// Support weights of `f` that are maximal under dominance, with coefficients.
pub fn leading_summands(f: &LaurentPolynomial) -> Result<Vec<(Weight, Coefficient)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support: Vec<&Weight> = f.support().collect();
    let mut out = Vec::new();
    for w in &support {
        let mut maximal = true;
        for v in &support {
            if v != w && leq(w, v)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(((*w).clone(), f.coefficient(w)));
        }
    }
    Ok(out)
}

/// The unique leading weight, if there is exactly one.
pub fn unique_leading_weight(f: &LaurentPolynomial) -> Option<Weight> {
    let lead = leading_summands(f).ok()?;
    (lead.len() == 1).then(|| lead[0].0.clone())
}

/// Supercharacter of the simple `GL(1|1)`-module `L(i | r - i)`: the
/// monomial `x^i y^{r-i}` when the characteristic divides `r`, otherwise
/// `x^i y^{r-i} - x^{i-1} y^{r-i+1}`. Characteristic zero divides only `r = 0`.
pub fn gl11_simple_char(profile: &Profile, i: i64, r: i64) -> Result<LaurentPolynomial> {
    if profile.m() != 1 || profile.n() != 1 {
        return Err(Error::InvalidArgument(format!(
            "GL(1|1) simples need m = n = 1, got {profile}"
        )));
    }
    if r < 0 {
        return Err(Error::InvalidArgument(format!("degree r = {r} must be nonnegative")));
    }
    let divides = match profile.p() {
        Some(p) => r % p as i64 == 0,
        None => r == 0,
    };
    let low = if divides { 0 } else { 1 };
    if i < low || i > r {
        return Err(Error::IndexOutOfRange {
            what: "highest weight i",
            index: i,
            max: r,
        });
    }
    let top = LaurentPolynomial::unit_monomial(*profile, Weight::new(vec![i, r - i]))?;
    if divides {
        return Ok(top);
    }
    let second = LaurentPolynomial::unit_monomial(*profile, Weight::new(vec![i - 1, r - i + 1]))?;
    Ok(&top - &second)
}
