//! Multi-index sign combinatorics for tensor, exterior and symmetric powers of
//! the standard supermodule `E`.
//!
//! A word `x_{IJ} = (-1)^{s(I,J)} c_{IJ}` is a signed product of matrix-entry
//! symbols `c_{ij}` of parity `|i| + |j|`. Words are compared through a
//! canonical form: factors stably sorted with the Koszul sign of the sort
//! accumulated, and any repeated odd symbol collapsing the word to zero.
//!
//! The `∘` action belongs to the parity-shifted module `E^c`; the identity
//! `x_{I∘σ, J∘σ} = x_{IJ}` holds for words whose sign `s(I,J)` is taken with
//! the shifted parities, so words carry a [`Convention`].

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::profile::Profile;
use crate::weight::Weight;

/// Tuple `(i_1, …, i_r)` with `1 ≤ i_k ≤ m + n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<usize>,
    m: usize,
}

impl MultiIndex {
    pub fn new(profile: &Profile, entries: Vec<usize>) -> Result<Self> {
        let max = profile.rank();
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > max) {
            return Err(Error::IndexOutOfRange {
                what: "multi-index entry",
                index: bad as i64,
                max: max as i64,
            });
        }
        Ok(MultiIndex {
            entries,
            m: profile.m(),
        })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|i_k|`.
    pub fn parity_at(&self, k: usize) -> u8 {
        (self.entries[k] > self.m) as u8
    }

    /// `|I| = Σ |i_k| mod 2`.
    pub fn parity(&self) -> u8 {
        (0..self.len()).map(|k| self.parity_at(k)).sum::<u8>() % 2
    }

    /// `Iσ`, with `(Iσ)_k = i_{σ(k)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        check_size(self.len(), sigma)?;
        Ok(MultiIndex {
            entries: sigma.images().iter().map(|&k| self.entries[k]).collect(),
            m: self.m,
        })
    }

    fn parity_under(&self, k: usize, convention: Convention) -> u8 {
        match convention {
            Convention::Standard => self.parity_at(k),
            Convention::ParityShifted => 1 - self.parity_at(k),
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A permutation of `{0, …, r-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let set: BTreeSet<usize> = images.iter().copied().collect();
        if set.len() != images.len() || images.iter().any(|&i| i >= images.len()) {
            return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
        }
        Ok(Permutation(images))
    }

    pub fn identity(r: usize) -> Self {
        Permutation((0..r).collect())
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `στ` with `(στ)(k) = σ(τ(k))`, so that `(Iσ)τ = I(στ)`.
    pub fn compose(&self, tau: &Permutation) -> Result<Self> {
        if self.len() != tau.len() {
            return Err(Error::InvalidArgument("permutation sizes differ".into()));
        }
        Ok(Permutation(tau.0.iter().map(|&k| self.0[k]).collect()))
    }

    /// All permutations of `r` points in lexicographic order of image lists.
    pub fn all(r: usize) -> Vec<Permutation> {
        fn go(r: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if cur.len() == r {
                out.push(Permutation(cur.clone()));
                return;
            }
            for k in 0..r {
                if !used[k] {
                    used[k] = true;
                    cur.push(k);
                    go(r, used, cur, out);
                    cur.pop();
                    used[k] = false;
                }
            }
        }
        let mut out = Vec::new();
        go(r, &mut vec![false; r], &mut Vec::new(), &mut out);
        out
    }
}

fn check_size(r: usize, sigma: &Permutation) -> Result<()> {
    if sigma.len() != r {
        return Err(Error::InvalidArgument(format!(
            "permutation of {} points applied to a length-{r} index",
            sigma.len()
        )));
    }
    Ok(())
}

/// `s(I, J) = Σ_t |i_t| (Σ_{s<t} |i_s| + |j_s|) mod 2`.
pub fn sign_s(i: &MultiIndex, j: &MultiIndex) -> Result<u8> {
    sign_s_with(i, j, Convention::Standard)
}

fn sign_s_with(i: &MultiIndex, j: &MultiIndex, convention: Convention) -> Result<u8> {
    if i.len() != j.len() {
        return Err(Error::InvalidArgument(format!(
            "multi-indices {i} and {j} have different lengths"
        )));
    }
    let mut acc = 0u32;
    let mut before = 0u32;
    for t in 0..i.len() {
        acc += i.parity_under(t, convention) as u32 * before;
        before += (i.parity_under(t, convention) + j.parity_under(t, convention)) as u32;
    }
    Ok((acc % 2) as u8)
}

fn inversions_with_parity(i: &MultiIndex, sigma: &Permutation, parity: u8) -> Result<u8> {
    check_size(i.len(), sigma)?;
    let s = sigma.images();
    let mut count = 0u32;
    for k in 0..s.len() {
        for l in (k + 1)..s.len() {
            if s[k] > s[l] && i.parity_at(s[k]) == parity && i.parity_at(s[l]) == parity {
                count += 1;
            }
        }
    }
    Ok((count % 2) as u8)
}

/// `s(I, σ)`: inversions of `σ` between two odd positions, mod 2.
pub fn sign_s_perm(i: &MultiIndex, sigma: &Permutation) -> Result<u8> {
    inversions_with_parity(i, sigma, 1)
}

/// `s'(I, σ)`: inversions of `σ` between two even positions, mod 2.
pub fn sign_s_prime_perm(i: &MultiIndex, sigma: &Permutation) -> Result<u8> {
    inversions_with_parity(i, sigma, 0)
}

/// Whether `x_{IJ}` is built over `E` or over its parity shift `E^c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Standard,
    ParityShifted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Row,
    Col,
}

/// `sign · x_{row, col}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedMonomialWord {
    row: MultiIndex,
    col: MultiIndex,
    sign: i8,
    convention: Convention,
}

/// Expanded form `sign · Π c_{ij}` with factors sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalWord {
    pub factors: Vec<(usize, usize)>,
    pub sign: i8,
}

impl SignedMonomialWord {
    pub fn new(row: MultiIndex, col: MultiIndex, sign: i8, convention: Convention) -> Result<Self> {
        if row.len() != col.len() {
            return Err(Error::InvalidArgument(format!(
                "row {row} and column {col} have different lengths"
            )));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("sign must be ±1, got {sign}")));
        }
        Ok(SignedMonomialWord {
            row,
            col,
            sign,
            convention,
        })
    }

    /// `x_{IJ}` over `E`.
    pub fn x(row: MultiIndex, col: MultiIndex) -> Result<Self> {
        Self::new(row, col, 1, Convention::Standard)
    }

    pub fn row(&self) -> &MultiIndex {
        &self.row
    }

    pub fn col(&self) -> &MultiIndex {
        &self.col
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Expands into supercommuting `c_{ij}`; `None` when the product vanishes
    /// (an odd symbol occurs twice).
    pub fn canonical(&self) -> Option<CanonicalWord> {
        let s = sign_s_with(&self.row, &self.col, self.convention).expect("equal lengths");
        let factors: Vec<(usize, usize)> = self
            .row
            .entries()
            .iter()
            .zip(self.col.entries())
            .map(|(&i, &j)| (i, j))
            .collect();
        let odd: Vec<bool> = (0..factors.len())
            .map(|k| (self.row.parity_at(k) + self.col.parity_at(k)) % 2 == 1)
            .collect();
        let mut koszul = 0u32;
        for k in 0..factors.len() {
            for l in (k + 1)..factors.len() {
                if factors[k] > factors[l] && odd[k] && odd[l] {
                    koszul += 1;
                }
            }
        }
        let mut sorted: Vec<(usize, usize, bool)> = factors
            .iter()
            .zip(&odd)
            .map(|(&(i, j), &o)| (i, j, o))
            .collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1] && w[0].2) {
            return None;
        }
        let flips = (s as u32 + koszul) % 2;
        Some(CanonicalWord {
            factors: sorted.into_iter().map(|(i, j, _)| (i, j)).collect(),
            sign: if flips == 1 { -self.sign } else { self.sign },
        })
    }

    /// Equality as elements of the coordinate superalgebra.
    pub fn same_element(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Image under the torus restriction `c_{ij} ↦ δ_{ij} x_i` (or `y_{i-m}`);
    /// with `inverse` the dual coordinates map to inverse variables.
    pub fn restrict_to_torus(&self, profile: &Profile, inverse: bool) -> LaurentPolynomial {
        if self.row != self.col {
            return LaurentPolynomial::zero(*profile);
        }
        let mut exps = vec![0i64; profile.rank()];
        for &i in self.row.entries() {
            exps[i - 1] += if inverse { -1 } else { 1 };
        }
        let s = sign_s_with(&self.row, &self.col, self.convention).expect("equal lengths");
        let sign = if s == 1 { -self.sign } else { self.sign };
        LaurentPolynomial::monomial(*profile, Weight::new(exps), profile.scalar(sign as i64))
            .expect("exponents sized to profile")
    }

    fn act(&self, sigma: &Permutation, side: Side, parity: u8) -> Result<Self> {
        let target = match side {
            Side::Row => &self.row,
            Side::Col => &self.col,
        };
        let flip = inversions_with_parity(target, sigma, parity)?;
        let permuted = target.permute(sigma)?;
        let mut out = self.clone();
        match side {
            Side::Row => out.row = permuted,
            Side::Col => out.col = permuted,
        }
        if flip == 1 {
            out.sign = -out.sign;
        }
        Ok(out)
    }
}

impl fmt::Display for SignedMonomialWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}x[{}, {}]", self.row, self.col)
    }
}

/// `x_{I, J⋆σ} = (-1)^{s(J,σ)} x_{I, Jσ}` (or on the row side).
pub fn star_action(word: &SignedMonomialWord, sigma: &Permutation, side: Side) -> Result<SignedMonomialWord> {
    word.act(sigma, side, 1)
}

/// `x_{I, J∘σ} = (-1)^{s'(J,σ)} x_{I, Jσ}` (or on the row side).
pub fn circ_action(word: &SignedMonomialWord, sigma: &Permutation, side: Side) -> Result<SignedMonomialWord> {
    word.act(sigma, side, 0)
}

/// `LI(r)`: strictly increasing even entries followed by weakly increasing odd ones.
pub fn exterior_indices(profile: &Profile, r: usize) -> Vec<MultiIndex> {
    power_indices(profile, r, true)
}

/// `SI(r)`: weakly increasing even entries followed by strictly increasing odd ones.
pub fn symmetric_indices(profile: &Profile, r: usize) -> Vec<MultiIndex> {
    power_indices(profile, r, false)
}

fn power_indices(profile: &Profile, r: usize, exterior: bool) -> Vec<MultiIndex> {
    fn go(
        profile: &Profile,
        r: usize,
        exterior: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<MultiIndex>,
    ) {
        if cur.len() == r {
            out.push(MultiIndex::new(profile, cur.clone()).expect("entries in range"));
            return;
        }
        let m = profile.m();
        let start = match cur.last() {
            None => 1,
            Some(&last) => {
                let odd = last > m;
                // repeats are allowed on the even side for S^r, the odd side for Λ^r
                let strict = if exterior { !odd } else { odd };
                if strict {
                    last + 1
                } else {
                    last
                }
            }
        };
        for next in start..=profile.rank() {
            cur.push(next);
            go(profile, r, exterior, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(profile, r, exterior, &mut Vec::new(), &mut out);
    out
}

/// Largest `r` accepted by the coset enumeration (it is factorial in `r`).
pub const ENUMERATION_MAX_R: usize = 6;

/// `Σ_{I} (-1)^{|I|} Σ_{σ ∈ Stab(I)\S_r} x_{I•σ, I}` restricted to the torus,
/// where `•` is `∘` over `LI(r)` for exterior powers and `⋆` over `SI(r)` for
/// symmetric powers. With `dual` the module is `E^*`.
pub fn power_char_by_enumeration(
    profile: &Profile,
    r: usize,
    exterior: bool,
    dual: bool,
) -> Result<LaurentPolynomial> {
    if r > ENUMERATION_MAX_R {
        return Err(Error::InvalidArgument(format!(
            "coset enumeration limited to r <= {ENUMERATION_MAX_R}"
        )));
    }
    let perms = Permutation::all(r);
    let mut total = LaurentPolynomial::zero(*profile);
    for index in power_indices(profile, r, exterior) {
        let base = SignedMonomialWord::x(index.clone(), index.clone())?;
        let mut seen = BTreeSet::new();
        let mut inner = LaurentPolynomial::zero(*profile);
        for sigma in &perms {
            // one representative per right coset Stab(I)σ
            if !seen.insert(index.permute(sigma)?) {
                continue;
            }
            let word = if exterior {
                circ_action(&base, sigma, Side::Row)?
            } else {
                star_action(&base, sigma, Side::Row)?
            };
            inner = &inner + &word.restrict_to_torus(profile, dual);
        }
        if index.parity() == 1 {
            inner = -&inner;
        }
        total = &total + &inner;
    }
    Ok(total)
}
