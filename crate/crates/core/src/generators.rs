//! Named elements of the Laurent ring: symmetric polynomials, the
//! supersymmetric generators `c_r`, the images `d_r` of `Tr(S^r(E^*))`, the
//! Berezinian character and the companion invariants `f_λ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::characters::SuperBasis;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::poset::is_dominant;
use crate::profile::Profile;
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    X,
    Y,
}

impl Block {
    fn range(self, profile: &Profile) -> std::ops::Range<usize> {
        match self {
            Block::X => 0..profile.m(),
            Block::Y => profile.m()..profile.rank(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Block::X => "x",
            Block::Y => "y",
        }
    }
}

/// `σ_i` over one variable block; `σ_0 = 1`.
pub fn elementary_sym(profile: &Profile, block: Block, i: usize) -> Result<LaurentPolynomial> {
    let vars: Vec<usize> = block.range(profile).collect();
    if i > vars.len() {
        return Err(Error::IndexOutOfRange {
            what: "elementary symmetric degree",
            index: i as i64,
            max: vars.len() as i64,
        });
    }
    let mut out = LaurentPolynomial::zero(*profile);
    let mut chosen = Vec::with_capacity(i);
    subsets(&vars, i, 0, &mut chosen, &mut |set| {
        let mut e = vec![0i64; profile.rank()];
        for &v in set {
            e[v] = 1;
        }
        out.add_term(Weight::new(e), profile.one());
    });
    Ok(out)
}

fn subsets(vars: &[usize], k: usize, start: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for idx in start..vars.len() {
        chosen.push(vars[idx]);
        subsets(vars, k, idx + 1, chosen, f);
        chosen.pop();
    }
}

/// `p_j`: sum of all monomials of degree `j` in one block; `p_0 = 1`.
pub fn complete_sym(profile: &Profile, block: Block, j: usize) -> LaurentPolynomial {
    let vars: Vec<usize> = block.range(profile).collect();
    let mut out = LaurentPolynomial::zero(*profile);
    fn go(vars: &[usize], left: usize, pos: usize, e: &mut Vec<i64>, out: &mut LaurentPolynomial, one: &crate::scalar::Coefficient) {
        if pos + 1 == vars.len() {
            e[vars[pos]] = left as i64;
            out.add_term(Weight::new(e.clone()), one.clone());
            e[vars[pos]] = 0;
            return;
        }
        for k in 0..=left {
            e[vars[pos]] = k as i64;
            go(vars, left - k, pos + 1, e, out, one);
        }
        e[vars[pos]] = 0;
    }
    let mut e = vec![0i64; profile.rank()];
    go(&vars, j, 0, &mut e, &mut out, &profile.one());
    out
}

/// `c_r = Σ_{0≤i≤min(r,m)} (-1)^{r-i} σ_i(x) p_{r-i}(y)`.
pub fn c_generator(profile: &Profile, r: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::zero(*profile);
    for i in 0..=r.min(profile.m()) {
        let term = &elementary_sym(profile, Block::X, i).expect("i <= m")
            * &complete_sym(profile, Block::Y, r - i);
        out = if (r - i).is_multiple_of(2) { &out + &term } else { &out - &term };
    }
    out
}

/// `d_r = χ(S^r(E^*))` from the symmetric-power generating function.
pub fn d_generator(profile: &Profile, r: usize) -> LaurentPolynomial {
    SuperBasis::standard(*profile).dual().symmetric_power_char(r)
}

/// Weight `θ = (1^m | (-1)^n)`.
pub fn berezinian_weight(profile: &Profile) -> Weight {
    let mut e = vec![1i64; profile.m()];
    e.extend(std::iter::repeat_n(-1, profile.n()));
    Weight::new(e)
}

/// `Π x_i · Π y_j^{-1}`.
pub fn berezinian_char(profile: &Profile) -> LaurentPolynomial {
    LaurentPolynomial::unit_monomial(*profile, berezinian_weight(profile)).expect("sized to profile")
}

/// Exponents of the factors of `f_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompanionExponents {
    /// Power of the Berezinian; may be negative.
    pub berezinian: i64,
    /// `(s, power of Ber·d_s)` for `1 ≤ s ≤ n - 1`.
    pub ber_d: Vec<(usize, i64)>,
    /// Power of `c_m`.
    pub c_m: i64,
    /// `(t, power of c_t)` for `1 ≤ t ≤ m - 1`.
    pub c_t: Vec<(usize, i64)>,
}

/// Exponents making `Ber^a Π (Ber·d_s)^{b_s} c_m^c Π c_t^{e_t}` have leading
/// weight `λ`: `b_s = λ_{m+n-s} - λ_{m+n-s+1}`, `e_t = λ_t - λ_{t+1}`,
/// `c = λ_m + λ_{m+1}` and `a = λ_{m+n} - 2λ_{m+1}`.
pub fn companion_exponents(profile: &Profile, lambda: &Weight) -> Result<CompanionExponents> {
    lambda.check_len(profile.rank())?;
    if !is_dominant(profile, lambda) {
        return Err(Error::NotDominant(lambda.display_split(profile.m())));
    }
    let (m, n) = (profile.m(), profile.n());
    // 1-based access
    let l = |k: usize| lambda.entries()[k - 1];
    let ber_d: Vec<(usize, i64)> = (1..n).map(|s| (s, l(m + n - s) - l(m + n - s + 1))).collect();
    let c_t: Vec<(usize, i64)> = (1..m).map(|t| (t, l(t) - l(t + 1))).collect();
    let c_m = l(m) + l(m + 1);
    let berezinian = l(m + n) - 2 * l(m + 1);
    if c_m < 0 {
        return Err(Error::NegativeExponent(format!(
            "c_{m} exponent {c_m} for λ = {}",
            lambda.display_split(m)
        )));
    }
    if let Some((s, b)) = ber_d.iter().find(|(_, b)| *b < 0) {
        return Err(Error::NegativeExponent(format!("(Ber·d_{s}) exponent {b}")));
    }
    if let Some((t, e)) = c_t.iter().find(|(_, e)| *e < 0) {
        return Err(Error::NegativeExponent(format!("c_{t} exponent {e}")));
    }
    Ok(CompanionExponents {
        berezinian,
        ber_d,
        c_m,
        c_t,
    })
}

/// Torus image of the companion invariant `f_λ`; its unique leading summand
/// has weight `λ`.
pub fn companion_image(profile: &Profile, lambda: &Weight) -> Result<LaurentPolynomial> {
    let ex = companion_exponents(profile, lambda)?;
    let ber = berezinian_char(profile);
    let mut out = ber.monomial_pow(ex.berezinian)?;
    for &(s, b) in &ex.ber_d {
        if b > 0 {
            let factor = &ber * &d_generator(profile, s);
            out = &out * &factor.pow(b as u32);
        }
    }
    if ex.c_m > 0 {
        out = &out * &c_generator(profile, profile.m()).pow(ex.c_m as u32);
    }
    for &(t, e) in &ex.c_t {
        if e > 0 {
            out = &out * &c_generator(profile, t).pow(e as u32);
        }
    }
    Ok(out)
}

/// Names for the generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorId {
    C(usize),
    D(usize),
    Ber,
    /// `σ_i(x)^p`.
    SigmaX(usize),
    /// `σ_j(y)^p`.
    SigmaY(usize),
    /// `u_k = σ_m(x)^k σ_n(y)^{p-k}`, `0 < k < p`.
    U(usize),
    /// Plain `σ_i` of a block.
    Elementary(Block, usize),
    /// Plain `p_j` of a block.
    Complete(Block, usize),
}

impl GeneratorId {
    fn require_p(profile: &Profile, p: Option<u64>) -> Result<u64> {
        p.or(profile.p()).ok_or_else(|| {
            Error::InvalidArgument("this generator needs a prime p (set --p)".into())
        })
    }

    /// Builds the element. The `p`-power families use `p` if given, else the
    /// profile's characteristic.
    pub fn build(&self, profile: &Profile, p: Option<u64>) -> Result<LaurentPolynomial> {
        match *self {
            GeneratorId::C(r) => Ok(c_generator(profile, r)),
            GeneratorId::D(r) => Ok(d_generator(profile, r)),
            GeneratorId::Ber => Ok(berezinian_char(profile)),
            GeneratorId::SigmaX(i) | GeneratorId::SigmaY(i) => {
                let p = Self::require_p(profile, p)?;
                let block = if matches!(self, GeneratorId::SigmaX(_)) { Block::X } else { Block::Y };
                if i == 0 {
                    return Err(Error::IndexOutOfRange {
                        what: "sigma index",
                        index: 0,
                        max: block.range(profile).len() as i64,
                    });
                }
                Ok(elementary_sym(profile, block, i)?.pow(p as u32))
            }
            GeneratorId::U(k) => {
                let p = Self::require_p(profile, p)?;
                if k == 0 || k as u64 >= p {
                    return Err(Error::IndexOutOfRange {
                        what: "u_k index",
                        index: k as i64,
                        max: p as i64 - 1,
                    });
                }
                let sx = elementary_sym(profile, Block::X, profile.m())?;
                let sy = elementary_sym(profile, Block::Y, profile.n())?;
                Ok(&sx.pow(k as u32) * &sy.pow((p as usize - k) as u32))
            }
            GeneratorId::Elementary(b, i) => elementary_sym(profile, b, i),
            GeneratorId::Complete(b, j) => Ok(complete_sym(profile, b, j)),
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorId::C(r) => write!(f, "c{r}"),
            GeneratorId::D(r) => write!(f, "d{r}"),
            GeneratorId::Ber => write!(f, "ber"),
            GeneratorId::SigmaX(i) => write!(f, "sx{i}^p"),
            GeneratorId::SigmaY(j) => write!(f, "sy{j}^p"),
            GeneratorId::U(k) => write!(f, "u{k}"),
            GeneratorId::Elementary(b, i) => write!(f, "e{i}({})", b.name()),
            GeneratorId::Complete(b, j) => write!(f, "h{j}({})", b.name()),
        }
    }
}

/// Accepts `c:3`, `d:2`, `ber`, `sx:1`, `sy:1`, `u:1`, `e:x:2`, `h:y:3`.
impl FromStr for GeneratorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let bad = || Error::Parse(format!("unknown generator id {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let block = |t: &str| match t {
            "x" => Ok(Block::X),
            "y" => Ok(Block::Y),
            _ => Err(bad()),
        };
        match parts.as_slice() {
            ["c", r] => Ok(GeneratorId::C(num(r)?)),
            ["d", r] => Ok(GeneratorId::D(num(r)?)),
            ["ber"] => Ok(GeneratorId::Ber),
            ["sx", i] => Ok(GeneratorId::SigmaX(num(i)?)),
            ["sy", j] => Ok(GeneratorId::SigmaY(num(j)?)),
            ["u", k] => Ok(GeneratorId::U(num(k)?)),
            ["e", b, i] => Ok(GeneratorId::Elementary(block(b)?, num(i)?)),
            ["h", b, j] => Ok(GeneratorId::Complete(block(b)?, num(j)?)),
            _ => Err(bad()),
        }
    }
}
