//! Brute-force oracles shared by the integration tests. None of these call
//! the library routine they are used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use supersym::campaign::weight_box;
use supersym::{Profile, Weight};

/// Rank over `Q` by fraction-free (Bareiss) elimination.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for r in rank + 1..a.len() {
            for k in c + 1..cols {
                let v = (&a[rank][c] * &a[r][k] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].abs();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b = b.rem_euclid(p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over `F_p` by plain Gaussian elimination on `i64` residues.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let p = p as i64;
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    if a.is_empty() {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for k in c..cols {
            a[rank][k] = a[rank][k] * inv % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c];
                for k in c..cols {
                    a[r][k] = (a[r][k] - f * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn rank_in(rows: &[Vec<i64>], p: Option<u64>) -> usize {
    match p {
        None => rank_rational(rows),
        Some(p) => rank_mod_p(rows, p),
    }
}

/// Partitions of `d` fitting in the `(m, n)` hook: `λ_{m+1} ≤ n`.
pub fn hook_partitions(d: usize, m: usize, n: usize) -> usize {
    fn go(left: usize, max: usize, len: usize, m: usize, n: usize) -> usize {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for part in 1..=left.min(max) {
            if len >= m && part > n {
                continue;
            }
            total += go(left - part, part, len + 1, m, n);
        }
        total
    }
    go(d, d, 0, m, n)
}

pub fn prefix(w: &[i64]) -> Vec<i64> {
    w.iter()
        .scan(0, |s, &x| {
            *s += x;
            Some(*s)
        })
        .collect()
}

/// Dominance straight from the root description: `μ - λ` is a nonnegative
/// combination of `ε_k - ε_{k+1}`, i.e. coefficients are the prefix sums.
pub fn below(lambda: &[i64], mu: &[i64]) -> bool {
    let d: Vec<i64> = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    let c = prefix(&d);
    c.last() == Some(&0) && c.iter().all(|&x| x >= 0)
}

/// Every weight whose prefix sums lie between those of `lo` and `hi`
/// (equal totals); this is the dominance interval `[lo, hi]` in `Z^len`.
pub fn interval_all(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let (a, b) = (prefix(lo), prefix(hi));
    let len = lo.len();
    let mut out = Vec::new();
    fn go(k: usize, len: usize, a: &[i64], b: &[i64], prev: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == len {
            out.push(cur.clone());
            return;
        }
        let (lo, hi) = if k + 1 == len { (b[k], b[k]) } else { (a[k], b[k]) };
        for s in lo..=hi {
            cur.push(s - prev);
            go(k + 1, len, a, b, s, cur, out);
            cur.pop();
        }
    }
    if a.last() == b.last() {
        go(0, len, &a, &b, 0, &mut Vec::new(), &mut out);
    }
    out
}

pub fn dominant(profile: &Profile, w: &[i64]) -> bool {
    let m = profile.m();
    w[..m].windows(2).all(|p| p[0] >= p[1]) && w[m..].windows(2).all(|p| p[0] >= p[1])
}

/// Longest strict chain from `lo` up to `hi` inside `X(T)^+` (`lo` dominant).
pub fn longest_dominant_chain(profile: &Profile, lo: &[i64], hi: &[i64]) -> Option<usize> {
    if !below(lo, hi) {
        return None;
    }
    let mut pts: Vec<Vec<i64>> = interval_all(lo, hi)
        .into_iter()
        .filter(|w| dominant(profile, w))
        .collect();
    // strictly increasing along the order
    pts.sort_by_key(|w| prefix(w).iter().sum::<i64>());
    let mut len: Vec<usize> = vec![0; pts.len()];
    for i in 0..pts.len() {
        for j in 0..i {
            if pts[j] != pts[i] && below(&pts[j], &pts[i]) {
                len[i] = len[i].max(len[j] + 1);
            }
        }
    }
    pts.iter().position(|w| w.as_slice() == hi).map(|i| len[i])
}

/// Immediate predecessors of `λ` in the set of dominant (optionally also
/// nonnegative) weights, by scanning everything between a lower bound and `λ`.
pub fn covers_below(profile: &Profile, lambda: &[i64], nonneg: bool, depth: i64) -> BTreeSet<Vec<i64>> {
    // a crude lower end: push `depth` units from the front to the back
    let mut lo = lambda.to_vec();
    lo[0] -= depth;
    *lo.last_mut().unwrap() += depth;
    let ok = |w: &[i64]| dominant(profile, w) && (!nonneg || w.iter().all(|&x| x >= 0));
    let below_set: Vec<Vec<i64>> = interval_all(&lo, lambda)
        .into_iter()
        .filter(|w| ok(w) && w.as_slice() != lambda)
        .collect();
    below_set
        .iter()
        .filter(|w| {
            !below_set
                .iter()
                .any(|v| v != *w && below(w, v))
        })
        .cloned()
        .collect()
}

pub fn to_weight(v: &[i64]) -> Weight {
    Weight::new(v.to_vec())
}

/// Height from the top of `Γ`: the longest chain from `(-λ, λ)` to a
/// generator, summing the chain lengths in the two factors.
pub fn height(pr: &Profile, lambda: &[i64], gens: &[(Vec<i64>, Vec<i64>)]) -> Option<usize> {
    gens.iter()
        .filter_map(|(minus, plus)| {
            // (−λ, λ) ≤ (c, d) iff c ≤ −λ and λ ≤ d; in X(T)^+ terms −(−λ) = λ ≤ −c
            let c_neg: Vec<i64> = minus.iter().map(|x| -x).collect();
            let a = longest_dominant_chain(pr, lambda, &c_neg)?;
            let b = longest_dominant_chain(pr, lambda, plus)?;
            Some(a + b)
        })
        .max()
}

pub fn dk_oracle(pr: &Profile, gens: &[(Vec<i64>, Vec<i64>)], cutoff: usize, bound: i64) -> BTreeSet<Weight> {
    weight_box(pr.rank(), -bound, bound)
        .into_iter()
        .filter(|l| dominant(pr, l.entries()))
        .filter(|l| height(pr, l.entries(), gens).is_some_and(|h| h < cutoff))
        .collect()
}
