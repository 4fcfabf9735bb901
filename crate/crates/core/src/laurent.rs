//! Sparse Laurent polynomials in `x_1..x_m, y_1..y_n` with exact coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order is
//! lexicographic (x-block first, then y-block) and zero coefficients are never
//! stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::scalar::{Coefficient, Characteristic};
use crate::series::TPolynomial;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    profile: Profile,
    terms: BTreeMap<Weight, Coefficient>,
}

pub(crate) fn check_profiles(a: &Profile, b: &Profile) -> Result<()> {
    if a != b {
        return Err(Error::ProfileMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

impl LaurentPolynomial {
    pub fn zero(profile: Profile) -> Self {
        LaurentPolynomial {
            profile,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(profile: Profile) -> Self {
        Self::constant(profile, profile.one())
    }

    pub fn constant(profile: Profile, c: Coefficient) -> Self {
        let mut p = Self::zero(profile);
        p.add_term(Weight::zero(profile.rank()), c);
        p
    }

    /// `c · x^{e_+} y^{e_-}`.
    pub fn monomial(profile: Profile, exponents: Weight, c: Coefficient) -> Result<Self> {
        exponents.check_len(profile.rank())?;
        if c.characteristic() != profile.characteristic() {
            return Err(Error::ProfileMismatch(
                format!("coefficient field {}", c.characteristic()),
                profile.to_string(),
            ));
        }
        let mut p = Self::zero(profile);
        p.add_term(exponents, c);
        Ok(p)
    }

    /// Monomial with coefficient one.
    pub fn unit_monomial(profile: Profile, exponents: Weight) -> Result<Self> {
        Self::monomial(profile, exponents, profile.one())
    }

    /// The variable `x_i`, 1-based.
    pub fn x(profile: Profile, i: usize) -> Result<Self> {
        if i == 0 || i > profile.m() {
            return Err(Error::IndexOutOfRange {
                what: "x",
                index: i as i64,
                max: profile.m() as i64,
            });
        }
        Self::unit_monomial(profile, Weight::unit(profile.rank(), i - 1))
    }

    /// The variable `y_j`, 1-based.
    pub fn y(profile: Profile, j: usize) -> Result<Self> {
        if j == 0 || j > profile.n() {
            return Err(Error::IndexOutOfRange {
                what: "y",
                index: j as i64,
                max: profile.n() as i64,
            });
        }
        Self::unit_monomial(profile, Weight::unit(profile.rank(), profile.m() + j - 1))
    }

    /// Sums the given terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(profile: Profile, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, Coefficient)>,
    {
        let mut p = Self::zero(profile);
        for (w, c) in terms {
            w.check_len(profile.rank())?;
            if c.characteristic() != profile.characteristic() {
                return Err(Error::ProfileMismatch(
                    format!("coefficient field {}", c.characteristic()),
                    profile.to_string(),
                ));
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, w: Weight, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn characteristic(&self) -> Characteristic {
        self.profile.characteristic()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Coefficient)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Weight) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_else(|| self.profile.zero())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_profiles(&self.profile, &other.profile)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            profile: self.profile,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.profile);
        }
        LaurentPolynomial {
            profile: self.profile,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_profiles(&self.profile, &other.profile)?;
        let mut acc: BTreeMap<Weight, Coefficient> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa + wb;
                let c = ca * cb;
                match acc.get_mut(&w) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(w, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(LaurentPolynomial {
            profile: self.profile,
            terms: acc,
        })
    }

    /// `k`-fold product by repeated squaring; `pow(0) = 1`.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.profile);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power of a single monomial; negative exponents invert it.
    pub fn monomial_pow(&self, k: i64) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::InvalidArgument(
                "monomial_pow needs a single-term polynomial".into(),
            ));
        }
        let (w, c) = self.terms.iter().next().unwrap();
        let coeff = if k >= 0 {
            c.pow(k as u32)
        } else {
            c.inv().expect("nonzero term").pow((-k) as u32)
        };
        Self::monomial(self.profile, w.scale(k), coeff)
    }

    /// The summand of weight `λ` (zero if absent).
    pub fn homogeneous_component(&self, lambda: &Weight) -> Self {
        let mut out = Self::zero(self.profile);
        if let Some(c) = self.terms.get(lambda) {
            out.terms.insert(lambda.clone(), c.clone());
        }
        out
    }

    /// Common total degree of all terms, or `None` if the support mixes degrees.
    /// The zero polynomial reports `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Weight::total);
        let first = match it.next() {
            Some(d) => d,
            None => return Some(0),
        };
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// All exponents nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Weight::is_nonnegative)
    }

    /// Applies `f` to every exponent vector; coefficients of colliding images add.
    pub fn map_exponents<F>(&self, f: F) -> Self
    where
        F: Fn(&Weight) -> Weight,
    {
        let mut out = Self::zero(self.profile);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Substitutes `x_i ↦ x_i^{-1}`, `y_j ↦ y_j^{-1}` throughout.
    pub fn negate_exponents(&self) -> Self {
        self.map_exponents(|w| -w)
    }

    /// Exchanges the variables at 0-based positions `a` and `b`.
    pub fn swap_variables(&self, a: usize, b: usize) -> Self {
        self.map_exponents(|w| w.swap(a, b))
    }

    /// Reduction of a characteristic-zero polynomial into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        let target = self.profile.with_p(Some(p))?;
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let reduced = match c {
                Coefficient::Rational(q) => Coefficient::from_rational(target.characteristic(), q)?,
                Coefficient::Modular { .. } => {
                    return Err(Error::InvalidArgument(
                        "reduce_mod expects a characteristic-zero polynomial".into(),
                    ))
                }
            };
            out.add_term(w.clone(), reduced);
        }
        Ok(out)
    }

    /// Replaces `x_i` and `y_j` (1-based) by a fresh variable `t`; the other
    /// variables stay in the coefficients.
    pub fn substitute_diag(&self, i: usize, j: usize) -> Result<TPolynomial> {
        let (m, n) = (self.profile.m(), self.profile.n());
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                what: "x",
                index: i as i64,
                max: m as i64,
            });
        }
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange {
                what: "y",
                index: j as i64,
                max: n as i64,
            });
        }
        let (xi, yj) = (i - 1, m + j - 1);
        let mut out = TPolynomial::zero(self.profile);
        for (w, c) in &self.terms {
            let e = w.entries();
            let t_degree = e[xi] + e[yj];
            let mut rest = e.to_vec();
            rest[xi] = 0;
            rest[yj] = 0;
            out.add_term(t_degree, Weight::new(rest), c.clone());
        }
        Ok(out)
    }
}

fn format_monomial(profile: &Profile, w: &Weight) -> String {
    let mut parts = Vec::new();
    for (pos, &e) in w.entries().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if pos < profile.m() {
            format!("x{}", pos + 1)
        } else {
            format!("y{}", pos - profile.m() + 1)
        };
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let mono = format_monomial(&self.profile, w);
            let mut coeff = c.to_canonical_string();
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { "-" } else { "+" })?;
            }
            first = false;
            match (mono.is_empty(), coeff == "1") {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

// Operator forms panic on profile mismatch; the named methods return errors.

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::add(self, rhs).expect("profile mismatch in +")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::sub(self, rhs).expect("profile mismatch in -")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        LaurentPolynomial::mul(self, rhs).expect("profile mismatch in *")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::neg(self)
    }
}
