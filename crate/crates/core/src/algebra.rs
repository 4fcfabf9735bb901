//! Supersymmetric polynomials `A_s`, `p`-balanced polynomials, the
//! subalgebra `A_s(p)`, and exact subalgebra membership.
//!
//! `f ∈ A_s` iff `f` is symmetric in `x` and in `y` separately and
//! `d/dt (f|_{x_1=y_1=t}) = 0`. All decision procedures work one total
//! degree at a time on monomial coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::{c_generator, GeneratorId};
use crate::json::to_json_value;
use crate::laurent::LaurentPolynomial;
use crate::linalg::{nullspace, solve_columns, RowSpace, Vector};
use crate::profile::Profile;
use crate::scalar::{is_prime, Coefficient};
use crate::weight::Weight;

/// Invariant under adjacent transpositions inside the `x` block and inside
/// the `y` block.
pub fn is_bisymmetric(f: &LaurentPolynomial) -> bool {
    let profile = f.profile();
    let (m, rank) = (profile.m(), profile.rank());
    let swaps = (0..m.saturating_sub(1)).chain(m..rank.saturating_sub(1));
    for a in swaps {
        if f.swap_variables(a, a + 1) != *f {
            return false;
        }
    }
    true
}

/// Cancellation with the formal `t`-derivative; any exponents allowed.
pub fn cancellation_test_laurent(f: &LaurentPolynomial) -> bool {
    f.substitute_diag(1, 1)
        .expect("x_1 and y_1 always exist")
        .derivative_t()
        .is_zero()
}

/// `d/dt (f|_{x_1=y_1=t}) = 0`; `f` must be polynomial in `x_1` and `y_1`.
pub fn cancellation_test(f: &LaurentPolynomial) -> Result<bool> {
    let m = f.profile().m();
    if f.support().any(|w| w.entries()[0] < 0 || w.entries()[m] < 0) {
        return Err(Error::NegativeExponent("x_1 or y_1 (clear denominators first)".into()));
    }
    Ok(cancellation_test_laurent(f))
}

pub fn is_supersymmetric(f: &LaurentPolynomial) -> Result<bool> {
    let cancels = cancellation_test(f)?;
    Ok(cancels && is_bisymmetric(f))
}

/// Laurent version: the formal `t`-derivative of the diagonal restriction
/// (a Laurent polynomial in `t`) must vanish.
pub fn is_supersymmetric_laurent(f: &LaurentPolynomial) -> bool {
    is_bisymmetric(f) && cancellation_test_laurent(f)
}

/// Homogeneous `f` whose every support weight has `p | λ_i + λ_j` for all
/// `i ≤ m < j`.
pub fn is_p_balanced(f: &LaurentPolynomial, p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let m = f.profile().m();
    let p = p as i64;
    Ok(f.support().all(|w| {
        let (plus, minus) = (w.plus_part(m), w.minus_part(m));
        plus.iter()
            .all(|a| minus.iter().all(|b| (a + b).rem_euclid(p) == 0))
    }))
}

/// Labelled generators of a subalgebra, all over one profile.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    elements: Vec<LaurentPolynomial>,
    labels: Vec<String>,
}

impl GeneratorSet {
    pub fn new(elements: Vec<LaurentPolynomial>, labels: Vec<String>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("generator set is empty".into()));
        }
        if elements.len() != labels.len() {
            return Err(Error::InvalidArgument("labels and elements differ in length".into()));
        }
        let profile = *elements[0].profile();
        for e in &elements {
            crate::laurent::check_profiles(&profile, e.profile())?;
        }
        Ok(GeneratorSet { elements, labels })
    }

    pub fn from_ids(profile: &Profile, ids: &[GeneratorId], p: Option<u64>) -> Result<Self> {
        let elements = ids
            .iter()
            .map(|id| id.build(profile, p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements, ids.iter().map(ToString::to_string).collect())
    }

    pub fn elements(&self) -> &[LaurentPolynomial] {
        &self.elements
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn profile(&self) -> &Profile {
        self.elements[0].profile()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Union, keeping the first copy of each label.
    pub fn union(&self, other: &Self) -> Result<Self> {
        let mut elements = self.elements.clone();
        let mut labels = self.labels.clone();
        for (e, l) in other.elements.iter().zip(&other.labels) {
            if !labels.contains(l) {
                elements.push(e.clone());
                labels.push(l.clone());
            }
        }
        Self::new(elements, labels)
    }
}

/// `σ_i(x)^p`, `σ_j(y)^p` and `u_k = σ_m(x)^k σ_n(y)^{p-k}` for `0 < k < p`.
pub fn asp_generators(profile: &Profile, p: u64) -> Result<GeneratorSet> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let mut ids: Vec<GeneratorId> = (1..=profile.m()).map(GeneratorId::SigmaX).collect();
    ids.extend((1..=profile.n()).map(GeneratorId::SigmaY));
    ids.extend((1..p as usize).map(GeneratorId::U));
    GeneratorSet::from_ids(profile, &ids, Some(p))
}

/// `c_0, …, c_{r_max}`.
pub fn c_generator_set(profile: &Profile, r_max: usize) -> GeneratorSet {
    let ids: Vec<GeneratorId> = (0..=r_max).map(GeneratorId::C).collect();
    GeneratorSet::from_ids(profile, &ids, None).expect("c_r always builds")
}

/// One product of generators with its coefficient in a combination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTerm {
    /// Multiset of generator labels, sorted; empty means the unit.
    pub factors: Vec<String>,
    pub coefficient: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub member: bool,
    pub combination: Vec<ProductTerm>,
    pub degree_cap: i64,
    pub degree: i64,
    /// Number of generator products spanning the degree piece.
    pub products: usize,
    /// Dimension of their span.
    pub span_dim: usize,
}

/// Default bound on the number of generator products at one degree.
pub const DEFAULT_MAX_PRODUCTS: usize = 200_000;

struct Product {
    factors: Vec<usize>,
    value: LaurentPolynomial,
}

/// Every multiset of positive-degree generators whose degrees sum to
/// `degree`, with its expanded product. Degree-zero generators are skipped;
/// the empty product supplies the unit.
fn products_of_degree(gens: &GeneratorSet, degree: i64, max_products: usize) -> Result<Vec<Product>> {
    let profile = *gens.profile();
    let mut graded: Vec<(usize, i64)> = Vec::new();
    for (k, g) in gens.elements().iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let d = g.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        if !g.is_polynomial() {
            return Err(Error::NegativeExponent(format!("generator {}", gens.labels()[k])));
        }
        if d > 0 && d <= degree {
            graded.push((k, d));
        }
    }

    let mut out = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        gens: &GeneratorSet,
        graded: &[(usize, i64)],
        start: usize,
        left: i64,
        factors: &mut Vec<usize>,
        value: &LaurentPolynomial,
        out: &mut Vec<Product>,
        max: usize,
    ) -> Result<()> {
        if left == 0 {
            if out.len() >= max {
                return Err(Error::ResourceLimit(format!("more than {max} generator products")));
            }
            out.push(Product {
                factors: factors.clone(),
                value: value.clone(),
            });
            return Ok(());
        }
        for idx in start..graded.len() {
            let (k, d) = graded[idx];
            if d > left {
                continue;
            }
            factors.push(k);
            let next = value * &gens.elements()[k];
            go(gens, graded, idx, left - d, factors, &next, out, max)?;
            factors.pop();
        }
        Ok(())
    }
    go(
        gens,
        &graded,
        0,
        degree,
        &mut Vec::new(),
        &LaurentPolynomial::one(profile),
        &mut out,
        max_products,
    )?;
    Ok(out)
}

fn coordinates(f: &LaurentPolynomial, index: &BTreeMap<Weight, usize>) -> Vector {
    let mut v = vec![f.profile().zero(); index.len()];
    for (w, c) in f.terms() {
        v[index[w]] = c.clone();
    }
    v
}

/// Whether `f` is a linear combination of products of `gens` of total
/// degree `deg f`, with an explicit combination when it is.
pub fn subalgebra_membership(
    f: &LaurentPolynomial,
    gens: &GeneratorSet,
    degree_cap: i64,
) -> Result<MembershipReport> {
    subalgebra_membership_with_limit(f, gens, degree_cap, DEFAULT_MAX_PRODUCTS)
}

pub fn subalgebra_membership_with_limit(
    f: &LaurentPolynomial,
    gens: &GeneratorSet,
    degree_cap: i64,
    max_products: usize,
) -> Result<MembershipReport> {
    crate::laurent::check_profiles(f.profile(), gens.profile())?;
    if !f.is_polynomial() {
        return Err(Error::NegativeExponent("membership query".into()));
    }
    let degree = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if degree > degree_cap {
        return Err(Error::DegreeExceedsCap {
            degree,
            cap: degree_cap,
        });
    }
    if f.is_zero() {
        return Ok(MembershipReport {
            member: true,
            combination: Vec::new(),
            degree_cap,
            degree,
            products: 0,
            span_dim: 0,
        });
    }
    let products = products_of_degree(gens, degree, max_products)?;

    let mut support: BTreeSet<Weight> = f.support().cloned().collect();
    for p in &products {
        support.extend(p.value.support().cloned());
    }
    let index: BTreeMap<Weight, usize> = support.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    let columns: Vec<Vector> = products.iter().map(|p| coordinates(&p.value, &index)).collect();
    let target = coordinates(f, &index);
    let ch = f.characteristic();
    let span_dim = RowSpace::new(columns.clone(), index.len()).dim();

    let Some(solution) = solve_columns(&columns, &target, ch) else {
        return Ok(MembershipReport {
            member: false,
            combination: Vec::new(),
            degree_cap,
            degree,
            products: products.len(),
            span_dim,
        });
    };

    let mut combination = Vec::new();
    let mut rebuilt = LaurentPolynomial::zero(*f.profile());
    for (prod, coeff) in products.iter().zip(&solution) {
        if coeff.is_zero() {
            continue;
        }
        rebuilt = &rebuilt + &prod.value.scale(coeff);
        let mut labels: Vec<String> = prod.factors.iter().map(|&k| gens.labels()[k].clone()).collect();
        labels.sort();
        combination.push(ProductTerm {
            factors: labels,
            coefficient: coeff.to_canonical_string(),
        });
    }
    assert_eq!(&rebuilt, f, "membership combination failed re-expansion");
    Ok(MembershipReport {
        member: true,
        combination,
        degree_cap,
        degree,
        products: products.len(),
        span_dim,
    })
}

/// Expands a reported combination back into a polynomial.
pub fn expand_combination(gens: &GeneratorSet, combination: &[ProductTerm]) -> Result<LaurentPolynomial> {
    let profile = *gens.profile();
    let mut out = LaurentPolynomial::zero(profile);
    for term in combination {
        let mut prod = LaurentPolynomial::one(profile);
        for label in &term.factors {
            let k = gens
                .labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown generator label {label}")))?;
            prod = &prod * &gens.elements()[k];
        }
        let c = Coefficient::parse(profile.characteristic(), &term.coefficient)?;
        out = &out + &prod.scale(&c);
    }
    Ok(out)
}

/// All exponent vectors in `N^{m+n}` of total `degree`, lexicographic.
pub fn monomials_of_degree(profile: &Profile, degree: usize) -> Vec<Weight> {
    fn go(len: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() + 1 == len {
            cur.push(left);
            out.push(Weight::new(cur.clone()));
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            go(len, left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(profile.rank(), degree as i64, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Integer constraint matrix cutting `A_s` out of the degree-`d` monomials:
/// one row `a_λ - a_{sλ}` per monomial and adjacent in-block swap, and one
/// row per `t`-degree `k` and residual exponent `ρ` of the diagonal
/// restriction, carrying the factor `k` from differentiation.
pub fn supersymmetric_constraints(profile: &Profile, degree: usize) -> (Vec<Weight>, Vec<Vec<i64>>) {
    let monomials = monomials_of_degree(profile, degree);
    let index: BTreeMap<&Weight, usize> = monomials.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let (m, rank) = (profile.m(), profile.rank());
    let mut rows = Vec::new();
    let swaps: Vec<usize> = (0..m.saturating_sub(1)).chain(m..rank.saturating_sub(1)).collect();
    for (i, w) in monomials.iter().enumerate() {
        for &a in &swaps {
            let s = w.swap(a, a + 1);
            if &s != w {
                let mut row = vec![0i64; monomials.len()];
                row[i] += 1;
                row[index[&s]] -= 1;
                rows.push(row);
            }
        }
    }
    let mut groups: BTreeMap<(i64, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (i, w) in monomials.iter().enumerate() {
        let e = w.entries();
        let k = e[0] + e[m];
        let mut rest = e.to_vec();
        rest[0] = 0;
        rest[m] = 0;
        groups.entry((k, rest)).or_default().push(i);
    }
    for ((k, _), members) in groups {
        if k == 0 {
            continue;
        }
        let mut row = vec![0i64; monomials.len()];
        for i in members {
            row[i] = k;
        }
        rows.push(row);
    }
    (monomials, rows)
}

fn constraint_rows(profile: &Profile, rows: &[Vec<i64>]) -> Vec<Vector> {
    rows.iter()
        .map(|r| r.iter().map(|&v| profile.scalar(v)).collect())
        .collect()
}

/// Basis of the degree-`d` piece of `A_s` over the profile's field.
pub fn supersymmetric_basis(profile: &Profile, degree: usize) -> Vec<LaurentPolynomial> {
    let (monomials, rows) = supersymmetric_constraints(profile, degree);
    let ns = nullspace(constraint_rows(profile, &rows), monomials.len(), profile.characteristic());
    ns.into_iter()
        .map(|v| {
            LaurentPolynomial::from_terms(*profile, monomials.iter().cloned().zip(v))
                .expect("coordinates sized to profile")
        })
        .collect()
}

/// `dim A_s` in degree `d`.
pub fn graded_dimension_as(profile: &Profile, degree: usize) -> usize {
    let (monomials, rows) = supersymmetric_constraints(profile, degree);
    let rank = crate::linalg::rank(constraint_rows(profile, &rows), monomials.len());
    monomials.len() - rank
}

/// All distinct rearrangements of `v`.
fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = v.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    loop {
        let n = sorted.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Orbit sum `m_{λ_+}(x) · m_{λ_-}(y)` of a weight under the two symmetric groups.
pub fn orbit_sum(profile: &Profile, lambda: &Weight) -> Result<LaurentPolynomial> {
    lambda.check_len(profile.rank())?;
    let m = profile.m();
    let mut terms = Vec::new();
    for a in distinct_permutations(lambda.plus_part(m)) {
        for b in distinct_permutations(lambda.minus_part(m)) {
            terms.push((Weight::from_blocks(&a, &b), profile.one()));
        }
    }
    LaurentPolynomial::from_terms(*profile, terms)
}

/// Orbit sums of the `p`-balanced dominant monomials of total `degree`: a
/// basis of the degree piece of bisymmetric `p`-balanced polynomials.
pub fn balanced_orbit_basis(profile: &Profile, p: u64, degree: usize) -> Result<Vec<LaurentPolynomial>> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let m = profile.m();
    let pi = p as i64;
    let mut out = Vec::new();
    for w in monomials_of_degree(profile, degree) {
        if !crate::poset::is_dominant(profile, &w) {
            continue;
        }
        let balanced = w
            .plus_part(m)
            .iter()
            .all(|a| w.minus_part(m).iter().all(|b| (a + b) % pi == 0));
        if balanced {
            out.push(orbit_sum(profile, &w)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Hyp2Status {
    Verified,
    Refuted,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyp2Cell {
    pub m: usize,
    pub n: usize,
    pub p: u64,
    pub degree: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyp2Report {
    pub cell: Hyp2Cell,
    pub status: Hyp2Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
    pub basis_dim: usize,
    pub span_dim: usize,
    pub runtime_ms: u64,
}

/// Tests whether the degree piece of `A_s` over `F_p` is spanned by products
/// of `A_s(p)` generators and `c_1, …, c_degree`.
pub fn hypothesis2_cell(profile: &Profile, degree: usize, max_products: usize) -> Result<Hyp2Report> {
    let start = Instant::now();
    let p = profile
        .p()
        .ok_or_else(|| Error::InvalidArgument("generation cells need a prime p".into()))?;
    let cell = Hyp2Cell {
        m: profile.m(),
        n: profile.n(),
        p,
        degree,
    };
    let basis = supersymmetric_basis(profile, degree);
    let gens = asp_generators(profile, p)?.union(&c_generator_set(profile, degree.max(1)))?;
    let monomials = monomials_of_degree(profile, degree);
    let index: BTreeMap<Weight, usize> = monomials.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();

    let products = match products_of_degree(&gens, degree as i64, max_products) {
        Ok(p) => p,
        Err(Error::ResourceLimit(_)) => {
            return Ok(Hyp2Report {
                cell,
                status: Hyp2Status::Inconclusive,
                witness: None,
                basis_dim: basis.len(),
                span_dim: 0,
                runtime_ms: start.elapsed().as_millis() as u64,
            })
        }
        Err(e) => return Err(e),
    };
    let span = RowSpace::new(
        products.iter().map(|p| coordinates(&p.value, &index)).collect(),
        index.len(),
    );
    let witness = basis.iter().find(|b| !span.contains(&coordinates(b, &index)));
    Ok(Hyp2Report {
        cell,
        status: if witness.is_some() {
            Hyp2Status::Refuted
        } else {
            Hyp2Status::Verified
        },
        witness: witness.map(to_json_value),
        basis_dim: basis.len(),
        span_dim: span.dim(),
        runtime_ms: start.elapsed().as_millis() as u64,
    })
}

/// `u_k = σ_m(x)^k σ_n(y)^{p-k}`.
pub fn u_generator(profile: &Profile, p: u64, k: u64) -> Result<LaurentPolynomial> {
    GeneratorId::U(k as usize).build(profile, Some(p))
}

/// `c_r` for every `r ≤ r_max`, paired with whether it is supersymmetric.
pub fn c_generators_supersymmetric(profile: &Profile, r_max: usize) -> Vec<(usize, bool)> {
    (0..=r_max)
        .map(|r| (r, is_supersymmetric(&c_generator(profile, r)).unwrap_or(false)))
        .collect()
}
