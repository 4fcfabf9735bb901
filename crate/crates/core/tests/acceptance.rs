//! Acceptance run: one line per criterion, nonzero exit if any fails.
//! Every check compares the library against a computation done here.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{below, covers_below, dk_oracle, dominant};
use supersym::algebra::{
    asp_generators, c_generator_set, expand_combination, hypothesis2_cell, is_p_balanced,
    is_supersymmetric, subalgebra_membership, Hyp2Report, Hyp2Status, DEFAULT_MAX_PRODUCTS,
};
use supersym::campaign::weight_box;
use supersym::characters::{gl11_simple_char, leading_summands};
use supersym::generators::{c_generator, companion_exponents, companion_image, d_generator};
use supersym::poset::{
    dk_weight_sequence, interval_bound, interval_nonneg_dominant, lambda_prime, leq, lt,
    predecessors, Cone, PosetElement, PosetKind, WeightIdeal,
};
use supersym::signs::{
    circ_action, power_char_by_enumeration, star_action, Convention, MultiIndex, Permutation,
    Side, SignedMonomialWord,
};
use supersym::{Error, LaurentPolynomial, Profile, SuperBasis, Weight};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn profiles(max_m: usize, max_n: usize) -> Vec<Profile> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            out.push(Profile::char0(m, n).unwrap());
        }
    }
    out
}

fn int_coeff(f: &LaurentPolynomial, w: &Weight) -> i64 {
    f.coefficient(w).to_canonical_string().parse().expect("integer coefficient")
}

// ---------------------------------------------------------------- 1

const P61: u128 = (1 << 61) - 1;

fn pow_mod(b: u128, e: i64) -> u128 {
    let (mut b, mut e) = (b % P61, e);
    if e < 0 {
        // Fermat inverse
        b = pow_mod(b, (P61 - 2) as i64);
        e = -e;
    }
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P61;
        }
        b = b * b % P61;
        e >>= 1;
    }
    acc
}

fn eval(f: &LaurentPolynomial, point: &[u128]) -> u128 {
    let mut total = 0u128;
    for (w, _) in f.terms() {
        let c = int_coeff(f, w);
        let mut v = (c.rem_euclid(P61 as i64)) as u128;
        for (k, &e) in w.entries().iter().enumerate() {
            v = v * pow_mod(point[k], e) % P61;
        }
        total = (total + v) % P61;
    }
    total
}

/// Bisymmetric, and `f(t, x₂… | t, y₂…)` does not depend on `t` at random points.
fn supersymmetric_by_evaluation(f: &LaurentPolynomial, m: usize, rng: &mut ChaCha8Rng) -> bool {
    for (w, _) in f.terms() {
        let e = w.entries();
        for a in 0..e.len() {
            for b in a + 1..e.len() {
                if (a < m) != (b < m) {
                    continue;
                }
                let mut s = e.to_vec();
                s.swap(a, b);
                if int_coeff(f, w) != int_coeff(f, &Weight::new(s)) {
                    return false;
                }
            }
        }
    }
    let rank = f.profile().rank();
    (0..4).all(|_| {
        let mut pt: Vec<u128> = (0..rank).map(|_| rng.gen_range(2..P61)).collect();
        let t1 = rng.gen_range(2..P61);
        let t2 = rng.gen_range(2..P61);
        pt[0] = t1;
        pt[m] = t1;
        let a = eval(f, &pt);
        pt[0] = t2;
        pt[m] = t2;
        a == eval(f, &pt)
    })
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for pr in profiles(3, 3) {
        for r in 0..=6 {
            let c = c_generator(&pr, r);
            ensure(is_supersymmetric(&c).map_err(|e| e.to_string())?, || {
                format!("c_{r} rejected for {pr}")
            })?;
            ensure(supersymmetric_by_evaluation(&c, pr.m(), &mut rng), || {
                format!("c_{r} fails the evaluation oracle for {pr}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} generators c_r, m,n <= 3, r <= 6"))
}

// ---------------------------------------------------------------- 2

/// Basis-counting character: nondecreasing words with the even part strict
/// (`exterior`) or the odd part strict (symmetric), sign `(-1)^{#odd}`.
fn char_by_basis(pr: &Profile, r: usize, exterior: bool, dual: bool) -> LaurentPolynomial {
    let m = pr.m();
    let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    fn go(
        pr: &Profile,
        r: usize,
        exterior: bool,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        let from = cur.last().copied().unwrap_or(1);
        for next in from..=pr.rank() {
            if cur.last() == Some(&next) {
                let odd = next > pr.m();
                if exterior != odd {
                    continue;
                }
            }
            cur.push(next);
            go(pr, r, exterior, cur, out);
            cur.pop();
        }
    }
    let mut words = Vec::new();
    go(pr, r, exterior, &mut Vec::new(), &mut words);
    for word in words {
        let mut e = vec![0i64; pr.rank()];
        let mut odd = 0;
        for &i in &word {
            e[i - 1] += if dual { -1 } else { 1 };
            odd += (i > m) as usize;
        }
        *terms.entry(e).or_default() += if odd % 2 == 0 { 1 } else { -1 };
    }
    let mut f = LaurentPolynomial::zero(*pr);
    for (e, c) in terms {
        let mono = LaurentPolynomial::monomial(*pr, Weight::new(e), pr.scalar(c)).unwrap();
        f = &f + &mono;
    }
    f
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for pr in profiles(2, 2) {
        let e = SuperBasis::standard(pr);
        let dual = e.dual();
        for r in 0..=4 {
            let ext = e.exterior_power_char(r);
            let enumerated = power_char_by_enumeration(&pr, r, true, false).map_err(|e| e.to_string())?;
            ensure(ext == c_generator(&pr, r) && ext == enumerated && ext == char_by_basis(&pr, r, true, false), || {
                format!("Λ^{r}(E) disagrees for {pr}")
            })?;
            let sym = dual.symmetric_power_char(r);
            let enumerated = power_char_by_enumeration(&pr, r, false, true).map_err(|e| e.to_string())?;
            ensure(sym == d_generator(&pr, r) && sym == enumerated && sym == char_by_basis(&pr, r, false, true), || {
                format!("S^{r}(E*) disagrees for {pr}")
            })?;
            checked += 2;
        }
    }
    Ok(format!("{checked} power characters, m,n <= 2, r <= 4"))
}

// ---------------------------------------------------------------- 3

fn maximal_support(f: &LaurentPolynomial) -> Vec<Weight> {
    let support: Vec<Weight> = f.support().cloned().collect();
    let mut out: Vec<Weight> = support
        .iter()
        .filter(|w| !support.iter().any(|v| v != *w && below(w.entries(), v.entries())))
        .cloned()
        .collect();
    out.sort();
    out
}

fn leading_of(f: &LaurentPolynomial) -> Result<Vec<Weight>, String> {
    let mut lead: Vec<Weight> = leading_summands(f)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(w, _)| w)
        .collect();
    lead.sort();
    Ok(lead)
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for pr in profiles(3, 3) {
        let (m, n) = (pr.m(), pr.n());
        for r in 0..=m + 3 {
            let mut v = vec![0i64; m + n];
            if r <= m {
                v[..r].fill(1);
            } else {
                v[..m].fill(1);
                v[m] = (r - m) as i64;
            }
            let c = c_generator(&pr, r);
            let want = vec![Weight::new(v)];
            ensure(leading_of(&c)? == want && maximal_support(&c) == want, || {
                format!("leading weight of c_{r} for {pr}")
            })?;
            checked += 1;
        }
        for r in 0..=n + 3 {
            let mut v = vec![0i64; m + n];
            if r <= n {
                v[m + n - r..].fill(-1);
            } else {
                v[m - 1] = n as i64 - r as i64;
                v[m..].fill(-1);
            }
            let d = d_generator(&pr, r);
            let want = vec![Weight::new(v)];
            ensure(leading_of(&d)? == want && maximal_support(&d) == want, || {
                format!("leading weight of d_{r} for {pr}")
            })?;
            checked += 1;
        }
    }
    let (mut images, mut outside) = (0, 0);
    for pr in profiles(2, 2) {
        for lambda in weight_box(pr.rank(), -3, 3) {
            if !dominant(&pr, lambda.entries()) {
                continue;
            }
            match companion_exponents(&pr, &lambda) {
                Ok(_) => {
                    let f = companion_image(&pr, &lambda).map_err(|e| e.to_string())?;
                    let want = vec![lambda.clone()];
                    ensure(leading_of(&f)? == want && maximal_support(&f) == want, || {
                        format!("companion image of {lambda} for {pr}")
                    })?;
                    images += 1;
                }
                Err(Error::NegativeExponent(_)) => outside += 1,
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok(format!(
        "{checked} generators; {images} companion images \
         ({outside} dominant weights need a negative companion exponent and are rejected)"
    ))
}

// ---------------------------------------------------------------- 4

/// Expanded form of `sign · x_{IJ}`: `None` if it vanishes, otherwise the
/// sign and the sorted factors `c_{ij}`.
fn normal_form(m: usize, row: &[usize], col: &[usize], sign: i8, shifted: bool) -> Option<(i8, Vec<(usize, usize)>)> {
    let par = |i: usize| ((i > m) != shifted) as u32;
    let mut s = 0;
    let mut before = 0;
    for t in 0..row.len() {
        s += par(row[t]) * before;
        before += par(row[t]) + par(col[t]);
    }
    let mut sign = if s % 2 == 1 { -sign } else { sign };
    let mut f: Vec<(usize, usize, bool)> = row
        .iter()
        .zip(col)
        .map(|(&i, &j)| (i, j, ((i > m) != (j > m))))
        .collect();
    // bubble sort, supercommuting neighbours
    for a in 0..f.len() {
        for b in 0..f.len() - 1 - a {
            if (f[b].0, f[b].1) > (f[b + 1].0, f[b + 1].1) {
                if f[b].2 && f[b + 1].2 {
                    sign = -sign;
                }
                f.swap(b, b + 1);
            }
        }
    }
    if f.windows(2).any(|w| w[0] == w[1] && w[0].2) {
        return None;
    }
    Some((sign, f.into_iter().map(|(i, j, _)| (i, j)).collect()))
}

/// `K•σ` for `•` = `⋆` (count odd inversions) or `∘` (count even ones).
fn act(m: usize, k: &[usize], sigma: &[usize], star: bool) -> (Vec<usize>, bool) {
    let moved: Vec<usize> = sigma.iter().map(|&s| k[s]).collect();
    let mut flips = 0;
    for a in 0..sigma.len() {
        for b in a + 1..sigma.len() {
            let (pa, pb) = (k[sigma[a]] > m, k[sigma[b]] > m);
            if sigma[a] > sigma[b] && pa == star && pb == star {
                flips += 1;
            }
        }
    }
    (moved, flips % 2 == 1)
}

fn words(rank: usize, r: usize) -> Vec<Vec<usize>> {
    weight_box(r, 1, rank as i64)
        .into_iter()
        .map(|w| w.entries().iter().map(|&x| x as usize).collect())
        .collect()
}

fn criterion_4() -> Outcome {
    let mut checked = 0u64;
    for k in 1..=2 {
        let pr = Profile::char0(k, k).unwrap();
        let m = pr.m();
        for r in 0..=4 {
            let perms = Permutation::all(r);
            for i in words(pr.rank(), r) {
                for j in words(pr.rank(), r) {
                    for (star, convention) in [(true, Convention::Standard), (false, Convention::ParityShifted)] {
                        let shifted = !star;
                        let base = normal_form(m, &i, &j, 1, shifted);
                        let mi = MultiIndex::new(&pr, i.clone()).unwrap();
                        let mj = MultiIndex::new(&pr, j.clone()).unwrap();
                        let w = SignedMonomialWord::new(mi, mj, 1, convention).unwrap();
                        ensure(w.canonical().map(|c| (c.sign, c.factors)) == base, || {
                            format!("expansion of x[{i:?},{j:?}]")
                        })?;
                        for sigma in &perms {
                            let (i2, fi) = act(m, &i, sigma.images(), star);
                            let (j2, fj) = act(m, &j, sigma.images(), star);
                            let sign = if fi != fj { -1 } else { 1 };
                            ensure(normal_form(m, &i2, &j2, sign, shifted) == base, || {
                                format!("oracle: identity fails for {i:?} {j:?} {:?} star={star}", sigma.images())
                            })?;
                            let lib = if star {
                                star_action(&star_action(&w, sigma, Side::Row).unwrap(), sigma, Side::Col)
                            } else {
                                circ_action(&circ_action(&w, sigma, Side::Row).unwrap(), sigma, Side::Col)
                            }
                            .unwrap();
                            ensure(lib.same_element(&w), || {
                                format!("library: identity fails for {i:?} {j:?} {:?} star={star}", sigma.images())
                            })?;
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (word, σ, action) triples, m = n <= 2, r <= 4"))
}

// ---------------------------------------------------------------- 5

fn criterion_5() -> Outcome {
    let mut pairs = 0u64;
    for (m, n) in [(1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (2, 2)] {
        let pr = Profile::char0(m, n).unwrap();
        let all = weight_box(pr.rank(), -2, 2);
        let mut groups: BTreeMap<i64, Vec<&Weight>> = BTreeMap::new();
        for w in &all {
            groups.entry(w.total()).or_default().push(w);
        }
        for group in groups.values() {
            let rel: Vec<Vec<bool>> = group
                .iter()
                .map(|a| group.iter().map(|b| leq(a, b).unwrap()).collect())
                .collect();
            for a in 0..group.len() {
                ensure(rel[a][a], || format!("not reflexive at {}", group[a]))?;
                for b in 0..group.len() {
                    pairs += 1;
                    ensure(rel[a][b] == below(group[a].entries(), group[b].entries()), || {
                        format!("leq({}, {}) disagrees with the root description", group[a], group[b])
                    })?;
                    if a != b && rel[a][b] {
                        ensure(!rel[b][a], || format!("not antisymmetric: {} {}", group[a], group[b]))?;
                        for c in 0..group.len() {
                            if rel[b][c] {
                                ensure(rel[a][c], || format!("not transitive via {}", group[b]))?;
                            }
                        }
                    }
                }
            }
        }
        // mixed totals are never comparable
        ensure(!leq(&Weight::new(vec![1; m + n]), &Weight::new(vec![2; m + n])).unwrap(), || {
            "weights of different totals compared".into()
        })?;
        for w in &all {
            let mut want = w.entries().to_vec();
            want[m - 1] -= 1;
            want[m] += 1;
            let got = lambda_prime(&pr, w);
            ensure(got.entries() == want.as_slice() && lt(&got, w).unwrap(), || format!("λ' of {w}"))?;
            if dominant(&pr, w.entries()) {
                let preds: BTreeSet<Vec<i64>> = predecessors(&pr, w, Cone::Dominant)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|q| q.entries().to_vec())
                    .collect();
                ensure(preds == covers_below(&pr, w.entries(), false, 6), || {
                    format!("predecessors of {w} are not its covers")
                })?;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs on [-2,2]^(m+n), m+n <= 4"))
}

// ---------------------------------------------------------------- 6

fn nonincreasing(len: usize, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=hi {
        for rest in nonincreasing(len - 1, first) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let pool = profiles(3, 3);
    let mut worst = 0f64;
    for sample in 0..200 {
        let pr = pool[sample % pool.len()];
        let (m, n) = (pr.m(), pr.n());
        let mut plus: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=4)).collect();
        let mut minus: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
        plus.sort_unstable_by(|a, b| b.cmp(a));
        minus.sort_unstable_by(|a, b| b.cmp(a));
        let mu_v: Vec<i64> = plus.iter().chain(&minus).copied().collect();
        let mu = Weight::new(mu_v.clone());
        let total: i64 = mu_v.iter().sum();
        // below μ forces entries ≤ μ_1 on the even side and ≤ |μ| on the odd side
        let mut brute = BTreeSet::new();
        for xs in nonincreasing(m, plus[0]) {
            let sx: i64 = xs.iter().sum();
            for ys in nonincreasing(n, total - sx) {
                let v: Vec<i64> = xs.iter().chain(&ys).copied().collect();
                if v.iter().sum::<i64>() == total && below(&v, &mu_v) {
                    brute.insert(v);
                }
            }
        }
        let ours: BTreeSet<Vec<i64>> = interval_nonneg_dominant(&pr, &mu)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|w| w.entries().to_vec())
            .collect();
        ensure(ours == brute, || format!("interval below {mu} for {pr}"))?;
        let bound = (plus[0] as u128 + 1).pow(m as u32)
            * ((plus.iter().sum::<i64>() + minus[0] + 1) as u128).pow(n as u32);
        ensure(interval_bound(&pr, &mu) == bound, || format!("bound formula at {mu}"))?;
        ensure(brute.len() as u128 <= bound, || {
            format!("|interval({mu})| = {} exceeds {bound}", brute.len())
        })?;
        worst = worst.max(brute.len() as f64 / bound as f64);
    }
    Ok(format!("200 seeded μ, m,n <= 3, entries <= 4; largest size/bound ratio {worst:.3}"))
}

// ---------------------------------------------------------------- 7

fn random_generator(pr: &Profile, rng: &mut ChaCha8Rng) -> (Vec<i64>, Vec<i64>) {
    let draw = |rng: &mut ChaCha8Rng| loop {
        let v: Vec<i64> = (0..pr.rank()).map(|_| rng.gen_range(-2..=2)).collect();
        if dominant(pr, &v) {
            return v;
        }
    };
    // the diagonal only meets the ideal below pairs of equal total
    let b = draw(rng);
    let a = loop {
        let a = draw(rng);
        if a.iter().sum::<i64>() == b.iter().sum::<i64>() {
            break a;
        }
    };
    (a.iter().map(|x| -x).collect(), b)
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ideals = 0;
    let mut sizes = 0;
    for pr in profiles(2, 2) {
        for _ in 0..6 {
            let count = rng.gen_range(1..=3);
            let gens: Vec<(Vec<i64>, Vec<i64>)> = (0..count).map(|_| random_generator(&pr, &mut rng)).collect();
            let elems = gens
                .iter()
                .map(|(a, b)| PosetElement::pair(Weight::new(a.clone()), Weight::new(b.clone())))
                .collect();
            let ideal = WeightIdeal::new(pr, PosetKind::Product, elems).map_err(|e| e.to_string())?;
            for cutoff in 1..=3 {
                let seq = dk_weight_sequence(&ideal, cutoff).map_err(|e| e.to_string())?;
                for a in 0..seq.len() {
                    for b in a + 1..seq.len() {
                        ensure(!lt(&seq[a], &seq[b]).unwrap(), || {
                            format!("{} precedes the larger {} for {gens:?}", seq[a], seq[b])
                        })?;
                    }
                }
                let got: BTreeSet<Weight> = seq.iter().cloned().collect();
                let want = dk_oracle(&pr, &gens, cutoff, 7);
                ensure(want.iter().all(|w| w.entries().iter().all(|x| x.abs() < 7)), || {
                    "search box too small".into()
                })?;
                ensure(got.len() == seq.len() && got == want, || {
                    format!("dk set for {gens:?} at cutoff {cutoff} on {pr}")
                })?;
                sizes += seq.len();
            }
            ideals += 1;
        }
    }
    Ok(format!("{ideals} seeded ideals, cutoffs 1..=3, {sizes} weights in total"))
}

// ---------------------------------------------------------------- 8

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut sorted = v.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // next_permutation
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else {
            return out;
        };
        let j = (i + 1..sorted.len()).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
}

fn orbit(pr: &Profile, lambda: &[i64]) -> LaurentPolynomial {
    let m = pr.m();
    let mut f = LaurentPolynomial::zero(*pr);
    for xs in distinct_permutations(&lambda[..m]) {
        for ys in distinct_permutations(&lambda[m..]) {
            let e: Vec<i64> = xs.iter().chain(&ys).copied().collect();
            f = &f + &LaurentPolynomial::unit_monomial(*pr, Weight::new(e)).unwrap();
        }
    }
    f
}

fn balanced_dominant(pr: &Profile, p: i64, degree: i64) -> Vec<Vec<i64>> {
    let m = pr.m();
    weight_box(pr.rank(), 0, degree)
        .into_iter()
        .map(|w| w.entries().to_vec())
        .filter(|v| v.iter().sum::<i64>() == degree && dominant(pr, v))
        .filter(|v| (0..m).all(|i| (m..v.len()).all(|j| (v[i] + v[j]) % p == 0)))
        .collect()
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut members = 0;
    for p in [2u64, 3, 5] {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let pr = Profile::new(m, n, Some(p)).unwrap();
            let gens = asp_generators(&pr, p).map_err(|e| e.to_string())?;
            for (g, label) in gens.elements().iter().zip(gens.labels()) {
                let ok = is_supersymmetric(g).map_err(|e| e.to_string())? && is_p_balanced(g, p).map_err(|e| e.to_string())?;
                ensure(ok, || format!("generator {label} for {pr}"))?;
            }
            let pools: Vec<(i64, Vec<Vec<i64>>)> = (1..=2 * p as i64)
                .map(|d| (d, balanced_dominant(&pr, p as i64, d)))
                .filter(|(_, b)| !b.is_empty())
                .collect();
            for _ in 0..20 {
                let (d, basis) = &pools[rng.gen_range(0..pools.len())];
                let f = loop {
                    let mut f = LaurentPolynomial::zero(pr);
                    for lambda in basis {
                        let c = pr.scalar(rng.gen_range(0..p as i64));
                        f = &f + &orbit(&pr, lambda).scale(&c);
                    }
                    if !f.is_zero() {
                        break f;
                    }
                };
                ensure(is_supersymmetric(&f).unwrap() && is_p_balanced(&f, p).unwrap(), || {
                    format!("sample {f} is not in A_s(p)")
                })?;
                let report = subalgebra_membership(&f, &gens, *d).map_err(|e| e.to_string())?;
                ensure(report.member, || format!("{f} not generated, p={p} {pr}"))?;
                let back = expand_combination(&gens, &report.combination).map_err(|e| e.to_string())?;
                ensure(back == f, || format!("combination for {f} does not expand back"))?;
                members += 1;
            }
        }
    }
    Ok(format!("{members} seeded elements of degree <= 2p written in the generators"))
}

// ---------------------------------------------------------------- 9

fn criterion_9() -> Outcome {
    let mut checked = 0;
    for p in [None, Some(2u64), Some(3), Some(5)] {
        let pr = Profile::new(1, 1, p).unwrap();
        for r in 0..=5i64 {
            let divides = match p {
                Some(p) => r % p as i64 == 0,
                None => r == 0,
            };
            let cs = c_generator_set(&pr, r.max(1) as usize);
            for i in 0..=r {
                let got = gl11_simple_char(&pr, i, r);
                if !divides && i == 0 {
                    ensure(got.is_err(), || format!("L(0|{r}) should not exist"))?;
                    continue;
                }
                let got = got.map_err(|e| e.to_string())?;
                let mut want: BTreeMap<Vec<i64>, i64> = BTreeMap::from([(vec![i, r - i], 1)]);
                if !divides {
                    want.insert(vec![i - 1, r - i + 1], -1);
                }
                let mut expected = LaurentPolynomial::zero(pr);
                for (e, c) in &want {
                    expected = &expected + &LaurentPolynomial::monomial(pr, Weight::new(e.clone()), pr.scalar(*c)).unwrap();
                }
                ensure(got == expected && got.num_terms() == want.len(), || {
                    format!("Tr(L({i}|{})) = {got}, p = {p:?}", r - i)
                })?;
                ensure(is_supersymmetric(&got).unwrap(), || format!("{got} not supersymmetric"))?;
                if let Some(p) = p {
                    if divides {
                        ensure(is_p_balanced(&got, p).unwrap(), || format!("{got} not {p}-balanced"))?;
                    }
                } else {
                    let rep = subalgebra_membership(&got, &cs, r).map_err(|e| e.to_string())?;
                    ensure(rep.member, || format!("{got} outside the c_r subalgebra"))?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} simple characters, r <= 5, char 0 and p in {{2,3,5}}"))
}

// ---------------------------------------------------------------- 10

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let strip = |r: &Hyp2Report| {
        let mut v = serde_json::to_value(r).unwrap();
        v["runtime_ms"] = 0.into();
        v.to_string()
    };
    let mut summary = Vec::new();
    for p in [2u64, 3] {
        let pr = Profile::new(1, 1, Some(p)).unwrap();
        let mut statuses = Vec::new();
        for d in 0..=6 {
            let a = hypothesis2_cell(&pr, d, DEFAULT_MAX_PRODUCTS).map_err(|e| e.to_string())?;
            let b = hypothesis2_cell(&pr, d, DEFAULT_MAX_PRODUCTS).map_err(|e| e.to_string())?;
            ensure(a.status != Hyp2Status::Inconclusive, || format!("p={p} d={d} inconclusive"))?;
            ensure(strip(&a) == strip(&b), || format!("p={p} d={d} not reproducible"))?;
            statuses.push(serde_json::to_value(a.status).unwrap().as_str().unwrap().to_string());
        }
        let uniq: BTreeSet<_> = statuses.iter().collect();
        summary.push(format!("p={p}: {}", uniq.into_iter().cloned().collect::<Vec<_>>().join("/")));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.0}s"))?;
    Ok(format!("m=n=1, d <= 6, {} (non-gating)", summary.join(", ")))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("generators c_r are supersymmetric", criterion_1),
        ("power characters via coset enumeration", criterion_2),
        ("leading weights", criterion_3),
        ("sign-action identities", criterion_4),
        ("dominance order axioms", criterion_5),
        ("interval size bound", criterion_6),
        ("weight sequence ordering", criterion_7),
        ("A_s(p) generators", criterion_8),
        ("GL(1|1) simple characters", criterion_9),
        ("generation by A_s(p) and c_r", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} — {detail} [{ms} ms]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} — {why} [{ms} ms]", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
