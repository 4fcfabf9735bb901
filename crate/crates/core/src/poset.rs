//! Dominance order on `X(T) = Z^{m+n}`, dominant cones, predecessors,
//! finitely generated ideals and their descending chains.
//!
//! `λ ≤ μ` iff `μ - λ` is a nonnegative integer combination of the simple
//! roots `ε_k - ε_{k+1}`: equal totals and `Σ_{i≤k} λ_i ≤ Σ_{i≤k} μ_i` for
//! every `k`. `X(T)^+` is the cone of weights that are weakly decreasing in
//! each block, `X(T)^-` its negation.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::weight::Weight;

pub fn leq(lambda: &Weight, mu: &Weight) -> Result<bool> {
    lambda.check_len(mu.len())?;
    let mut a = 0i64;
    let mut b = 0i64;
    for (l, m) in lambda.entries().iter().zip(mu.entries()) {
        a += l;
        b += m;
        if a > b {
            return Ok(false);
        }
    }
    Ok(a == b)
}

pub fn lt(lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(lambda != mu && leq(lambda, mu)?)
}

/// `lambda` and `mu` are comparable in either direction.
pub fn comparable(lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(leq(lambda, mu)? || leq(mu, lambda)?)
}

/// `ε_k - ε_{k+1}` for a 0-based `k < len - 1`.
pub fn simple_root(len: usize, k: usize) -> Weight {
    let mut v = vec![0; len];
    v[k] = 1;
    v[k + 1] = -1;
    Weight::new(v)
}

fn weakly_decreasing(s: &[i64]) -> bool {
    s.windows(2).all(|w| w[0] >= w[1])
}

/// `λ ∈ X(T)^+`: both blocks weakly decreasing.
pub fn is_dominant(profile: &Profile, w: &Weight) -> bool {
    w.len() == profile.rank()
        && weakly_decreasing(w.plus_part(profile.m()))
        && weakly_decreasing(w.minus_part(profile.m()))
}

/// `λ ∈ X(T)^-`: both blocks weakly increasing.
pub fn is_antidominant(profile: &Profile, w: &Weight) -> bool {
    is_dominant(profile, &-w)
}

/// Sub-posets of `X(T)` with finite predecessor sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cone {
    /// All of `Z^{m+n}`.
    All,
    /// `X(T)^+`.
    Dominant,
    /// `X(T)^+_{≥0}`.
    NonnegDominant,
}

impl Cone {
    pub fn contains(self, profile: &Profile, w: &Weight) -> bool {
        if w.len() != profile.rank() {
            return false;
        }
        match self {
            Cone::All => true,
            Cone::Dominant => is_dominant(profile, w),
            Cone::NonnegDominant => is_dominant(profile, w) && w.is_nonnegative(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cone::All => "all",
            Cone::Dominant => "dominant",
            Cone::NonnegDominant => "nonneg-dominant",
        }
    }
}

impl std::str::FromStr for Cone {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Cone::All),
            "dominant" | "plus" => Ok(Cone::Dominant),
            "nonneg-dominant" | "nonneg_dominant" | "nonneg" => Ok(Cone::NonnegDominant),
            _ => Err(Error::Parse(format!("unknown cone {s:?}"))),
        }
    }
}

/// `λ' = (λ_1,…,λ_m - 1 | λ_{m+1} + 1, λ_{m+2},…)`, always a predecessor of
/// a dominant `λ`.
pub fn lambda_prime(profile: &Profile, lambda: &Weight) -> Weight {
    lambda - &simple_root(profile.rank(), profile.m() - 1)
}

/// Maximal elements under dominance, deduplicated, in lexicographic order.
pub fn maximal_elements(ws: &[Weight]) -> Vec<Weight> {
    let uniq: BTreeSet<&Weight> = ws.iter().collect();
    uniq.iter()
        .filter(|w| {
            !uniq
                .iter()
                .any(|v| v != *w && leq(w, v).unwrap_or(false))
        })
        .map(|w| (*w).clone())
        .collect()
}

/// Weakly decreasing integer vectors with the same total as `target` whose
/// prefix sums never exceed those of `target` (`target` weakly decreasing).
fn dominated_decreasing_blocks(target: &[i64]) -> Vec<Vec<i64>> {
    fn go(
        target: &[i64],
        prefix_bound: &[i64],
        pos: usize,
        upper: i64,
        sum: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let len = target.len();
        let lower = *target.last().unwrap();
        if pos == len {
            if sum == prefix_bound[len - 1] {
                out.push(cur.clone());
            }
            return;
        }
        let total = prefix_bound[len - 1];
        let remaining = (len - pos) as i64;
        let mut v = upper.min(prefix_bound[pos] - sum);
        while v >= lower {
            // remaining entries are in [lower, v]; the total must stay reachable
            let rest_max = v * (remaining - 1);
            let rest_min = lower * (remaining - 1);
            let need = total - sum - v;
            if need > rest_max {
                break;
            }
            if need >= rest_min {
                cur.push(v);
                go(target, prefix_bound, pos + 1, v, sum + v, cur, out);
                cur.pop();
            }
            v -= 1;
        }
    }
    if target.is_empty() {
        return vec![vec![]];
    }
    let prefix: Vec<i64> = Weight::new(target.to_vec()).prefix_sums();
    let mut out = Vec::new();
    go(target, &prefix, 0, target[0], 0, &mut Vec::new(), &mut out);
    out
}

/// Immediate predecessors of `λ` inside `cone`: the maximal cone elements
/// strictly below `λ`.
pub fn predecessors(profile: &Profile, lambda: &Weight, cone: Cone) -> Result<Vec<Weight>> {
    lambda.check_len(profile.rank())?;
    if !cone.contains(profile, lambda) {
        return Err(Error::OutsideCone(lambda.display_split(profile.m()), cone.name().into()));
    }
    let m = profile.m();
    let candidates: Vec<Weight> = match cone {
        Cone::All => (0..profile.rank() - 1)
            .map(|k| lambda - &simple_root(profile.rank(), k))
            .collect(),
        Cone::Dominant => {
            // Anything below λ that lowers the even total sits under λ'; the rest
            // keeps both block totals and is dominated blockwise.
            let plus = dominated_decreasing_blocks(lambda.plus_part(m));
            let minus = dominated_decreasing_blocks(lambda.minus_part(m));
            let mut c = vec![lambda_prime(profile, lambda)];
            for a in &plus {
                for b in &minus {
                    let w = Weight::from_blocks(a, b);
                    if &w != lambda {
                        c.push(w);
                    }
                }
            }
            c
        }
        Cone::NonnegDominant => interval_nonneg_dominant(profile, lambda)?
            .into_iter()
            .filter(|w| w != lambda)
            .collect(),
    };
    Ok(maximal_elements(&candidates))
}

/// `{ν ∈ X(T)^+_{≥0} : ν ≤ μ}`, in lexicographic order.
pub fn interval_nonneg_dominant(profile: &Profile, mu: &Weight) -> Result<Vec<Weight>> {
    mu.check_len(profile.rank())?;
    if !Cone::NonnegDominant.contains(profile, mu) {
        return Err(Error::OutsideCone(
            mu.display_split(profile.m()),
            Cone::NonnegDominant.name().into(),
        ));
    }
    let prefix = mu.prefix_sums();
    let total = mu.total();
    let len = profile.rank();
    let m = profile.m();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        pos: usize,
        len: usize,
        m: usize,
        prefix: &[i64],
        total: i64,
        prev: i64,
        sum: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Weight>,
    ) {
        if pos == len {
            if sum == total {
                out.push(Weight::new(cur.clone()));
            }
            return;
        }
        let upper = if pos == 0 || pos == m { total - sum } else { prev };
        let upper = upper.min(prefix[pos] - sum);
        for v in 0..=upper.max(-1) {
            cur.push(v);
            go(pos + 1, len, m, prefix, total, v, sum + v, cur, out);
            cur.pop();
        }
    }
    go(0, len, m, &prefix, total, total, 0, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// `(μ_1 + 1)^m · (|μ_+| + μ_{m+1} + 1)^n`.
pub fn interval_bound(profile: &Profile, mu: &Weight) -> u128 {
    let m = profile.m();
    let plus = mu.plus_part(m);
    let a = (plus[0] + 1).max(0) as u128;
    let b = (plus.iter().sum::<i64>() + mu.entries()[m] + 1).max(0) as u128;
    a.pow(m as u32) * b.pow(profile.n() as u32)
}

/// A weight with a parity label; the label does not affect the order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledWeight {
    pub weight: Weight,
    pub parity: u8,
}

impl LabeledWeight {
    pub fn new(weight: Weight, parity: u8) -> Result<Self> {
        if parity > 1 {
            return Err(Error::InvalidArgument(format!("parity must be 0 or 1, got {parity}")));
        }
        Ok(LabeledWeight { weight, parity })
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        leq(&self.weight, &other.weight)
    }
}

/// Element of one of the posets ideals live in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetElement {
    Single(Weight),
    /// `(λ, λ') ∈ X(T)^- × X(T)^+`.
    Pair { minus: Weight, plus: Weight },
}

impl PosetElement {
    pub fn pair(minus: Weight, plus: Weight) -> Self {
        PosetElement::Pair { minus, plus }
    }

    /// `(-λ, λ)`.
    pub fn diagonal(lambda: &Weight) -> Self {
        PosetElement::Pair {
            minus: -lambda,
            plus: lambda.clone(),
        }
    }

    /// `λ` when the element is `(-λ, λ)`.
    pub fn diagonal_weight(&self) -> Option<&Weight> {
        match self {
            PosetElement::Pair { minus, plus } if &-plus == minus => Some(plus),
            _ => None,
        }
    }
}

impl fmt::Display for PosetElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetElement::Single(w) => write!(f, "{w}"),
            PosetElement::Pair { minus, plus } => write!(f, "({minus}, {plus})"),
        }
    }
}

/// Which poset an ideal lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PosetKind {
    Cone(Cone),
    /// `X(T)^- × X(T)^+` with `(λ, λ') ≤ (μ, μ')` iff `λ ≥ μ` and `λ' ≤ μ'`.
    Product,
}

impl PosetKind {
    pub fn contains(self, profile: &Profile, e: &PosetElement) -> bool {
        match (self, e) {
            (PosetKind::Cone(c), PosetElement::Single(w)) => c.contains(profile, w),
            (PosetKind::Product, PosetElement::Pair { minus, plus }) => {
                is_antidominant(profile, minus) && is_dominant(profile, plus)
            }
            _ => false,
        }
    }

    fn check_variant(self, e: &PosetElement) -> Result<()> {
        match (self, e) {
            (PosetKind::Cone(_), PosetElement::Single(_)) => Ok(()),
            (PosetKind::Product, PosetElement::Pair { .. }) => Ok(()),
            _ => Err(Error::PosetMismatch(format!("{e} is not an element of a {self:?} poset"))),
        }
    }

    pub fn leq(self, a: &PosetElement, b: &PosetElement) -> Result<bool> {
        self.check_variant(a)?;
        self.check_variant(b)?;
        match (a, b) {
            (PosetElement::Single(x), PosetElement::Single(y)) => leq(x, y),
            (
                PosetElement::Pair { minus: a1, plus: a2 },
                PosetElement::Pair { minus: b1, plus: b2 },
            ) => Ok(leq(b1, a1)? && leq(a2, b2)?),
            _ => unreachable!(),
        }
    }

    /// Immediate predecessors of `e` in this poset.
    pub fn predecessors(self, profile: &Profile, e: &PosetElement) -> Result<Vec<PosetElement>> {
        self.check_variant(e)?;
        match (self, e) {
            (PosetKind::Cone(c), PosetElement::Single(w)) => Ok(predecessors(profile, w, c)?
                .into_iter()
                .map(PosetElement::Single)
                .collect()),
            (PosetKind::Product, PosetElement::Pair { minus, plus }) => {
                if !is_antidominant(profile, minus) {
                    return Err(Error::OutsideCone(
                        minus.display_split(profile.m()),
                        "antidominant".into(),
                    ));
                }
                let mut out = Vec::new();
                // covers from above in X(T)^- are negated predecessors in X(T)^+
                for s in predecessors(profile, &-minus, Cone::Dominant)? {
                    out.push(PosetElement::pair(-&s, plus.clone()));
                }
                for q in predecessors(profile, plus, Cone::Dominant)? {
                    out.push(PosetElement::pair(minus.clone(), q));
                }
                Ok(out)
            }
            _ => unreachable!(),
        }
    }
}

/// A finitely generated downward-closed subset `⋃ (λ_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightIdeal {
    profile: Profile,
    kind: PosetKind,
    generators: Vec<PosetElement>,
}

impl WeightIdeal {
    /// Validates and reduces the generator list to an antichain.
    pub fn new(profile: Profile, kind: PosetKind, generators: Vec<PosetElement>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidArgument("an ideal needs at least one generator".into()));
        }
        for g in &generators {
            kind.check_variant(g)?;
            if !kind.contains(&profile, g) {
                return Err(Error::OutsideCone(g.to_string(), format!("{kind:?}")));
            }
        }
        Self::from_antichain_candidates(profile, kind, generators)
    }

    fn from_antichain_candidates(
        profile: Profile,
        kind: PosetKind,
        generators: Vec<PosetElement>,
    ) -> Result<Self> {
        let uniq: BTreeSet<PosetElement> = generators.into_iter().collect();
        let mut kept = Vec::new();
        for g in &uniq {
            let mut dominated = false;
            for h in &uniq {
                if h != g && kind.leq(g, h)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                kept.push(g.clone());
            }
        }
        Ok(WeightIdeal {
            profile,
            kind,
            generators: kept,
        })
    }

    pub fn principal(profile: Profile, kind: PosetKind, generator: PosetElement) -> Result<Self> {
        Self::new(profile, kind, vec![generator])
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn generators(&self) -> &[PosetElement] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Membership: `e` lies in the poset and under some generator.
    pub fn contains(&self, e: &PosetElement) -> Result<bool> {
        self.kind.check_variant(e)?;
        if !self.kind.contains(&self.profile, e) {
            return Ok(false);
        }
        for g in &self.generators {
            if self.kind.leq(e, g)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `Γ_1`: the ideal generated by all predecessors of the generators. The
    /// complement `Γ \ Γ_1` is exactly the generator set.
    pub fn chain_step(&self) -> Result<Self> {
        let mut preds = Vec::new();
        for g in &self.generators {
            preds.extend(self.kind.predecessors(&self.profile, g)?);
        }
        Self::from_antichain_candidates(self.profile, self.kind, preds)
    }

    /// `[Γ_0, Γ_1, …, Γ_k]`.
    pub fn chain(&self, k: usize) -> Result<Vec<Self>> {
        let mut out = vec![self.clone()];
        for _ in 0..k {
            let next = out.last().unwrap().chain_step()?;
            out.push(next);
        }
        Ok(out)
    }

    /// `Γ \ Γ_k`, the union of the first `k` generator layers.
    pub fn difference_with_chain(&self, k: usize) -> Result<Vec<PosetElement>> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        for _ in 0..k {
            out.extend(cur.generators.iter().cloned());
            cur = cur.chain_step()?;
        }
        Ok(out)
    }
}

/// Sort key placing larger weights first: by total, then lexicographically
/// descending. Lexicographic descent is a linear extension of dominance
/// among weights of equal total.
pub fn descending_key(w: &Weight) -> (Reverse<i64>, Reverse<Weight>) {
    (Reverse(w.total()), Reverse(w.clone()))
}

/// Weights `λ ∈ X(T)^+` with `(-λ, λ) ∈ Γ \ Γ_cutoff`, each once, ordered so
/// that no weight is strictly smaller than a later one.
pub fn dk_weight_sequence(ideal: &WeightIdeal, cutoff: usize) -> Result<Vec<Weight>> {
    if ideal.kind() != PosetKind::Product {
        return Err(Error::PosetMismatch(
            "Donkin-Koppinen sequences need an ideal of X(T)^- × X(T)^+".into(),
        ));
    }
    if cutoff == 0 {
        return Err(Error::InvalidArgument("cutoff must be at least 1".into()));
    }
    let set: BTreeSet<Weight> = ideal
        .difference_with_chain(cutoff)?
        .iter()
        .filter_map(|e| e.diagonal_weight().cloned())
        .collect();
    let mut seq: Vec<Weight> = set.into_iter().collect();
    seq.sort_by_key(descending_key);
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn p(m: usize, n: usize) -> Profile {
        Profile::char0(m, n).unwrap()
    }

    #[test]
    fn single_root_order() {
        assert!(leq(&w("0|1"), &w("1|0")).unwrap());
        assert!(!leq(&w("1|0"), &w("0|1")).unwrap());
        assert!(leq(&w("1,0|0"), &w("1,0|0")).unwrap());
        assert!(leq(&w("1|0"), &w("1,0")).is_ok());
        assert!(leq(&w("1|0"), &w("1,0,0")).is_err());
    }

    #[test]
    fn predecessors_m1n1() {
        let pr = p(1, 1);
        assert_eq!(predecessors(&pr, &w("1|0"), Cone::Dominant).unwrap(), vec![w("0|1")]);
        assert_eq!(predecessors(&pr, &w("0|0"), Cone::Dominant).unwrap(), vec![w("-1|1")]);
        assert!(predecessors(&pr, &w("0|0"), Cone::NonnegDominant).unwrap().is_empty());
    }

    #[test]
    fn predecessors_reject_outside_cone() {
        let pr = p(2, 1);
        assert!(matches!(
            predecessors(&pr, &w("0,1|0"), Cone::Dominant),
            Err(Error::OutsideCone(..))
        ));
    }

    #[test]
    fn intervals() {
        let pr = p(1, 1);
        assert_eq!(
            interval_nonneg_dominant(&pr, &w("2|0")).unwrap(),
            vec![w("0|2"), w("1|1"), w("2|0")]
        );
        assert_eq!(interval_bound(&pr, &w("2|0")), 9);
        assert_eq!(interval_nonneg_dominant(&pr, &w("0|0")).unwrap(), vec![w("0|0")]);
        let pr = p(2, 1);
        assert_eq!(interval_bound(&pr, &w("1,0|0")), 8);
        assert_eq!(
            interval_nonneg_dominant(&pr, &w("1,0|0")).unwrap(),
            vec![w("0,0|1"), w("1,0|0")]
        );
    }

    #[test]
    fn chain_of_principal_ideal() {
        let pr = p(1, 1);
        let g = WeightIdeal::principal(pr, PosetKind::Cone(Cone::Dominant), PosetElement::Single(w("1|0")))
            .unwrap();
        let g1 = g.chain_step().unwrap();
        assert_eq!(g1.generators(), &[PosetElement::Single(w("0|1"))]);
        assert!(g.contains(&PosetElement::Single(w("0|1"))).unwrap());
        assert!(!g.contains(&PosetElement::Single(w("2|0"))).unwrap());
        assert!(g.contains(&PosetElement::pair(w("0|0"), w("0|0"))).is_err());
    }

    #[test]
    fn chain_terminates_in_bounded_cone() {
        let pr = p(1, 1);
        let g = WeightIdeal::principal(pr, PosetKind::Cone(Cone::NonnegDominant), PosetElement::Single(w("0|0")))
            .unwrap();
        assert!(g.chain_step().unwrap().is_empty());
    }
}
