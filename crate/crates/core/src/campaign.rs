//! Batch verification campaigns: a JSON spec lists tasks, each task runs a
//! family of exact checks and yields one self-contained record.
//!
//! Tasks run in parallel (bounded by `jobs`); records come back in task
//! order. Every task seeds its own RNG from `(seed, index)`, so reports are
//! reproducible apart from the `ms` field.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{
    asp_generators, balanced_orbit_basis, c_generator_set, hypothesis2_cell, is_p_balanced,
    is_supersymmetric, is_supersymmetric_laurent, subalgebra_membership, GeneratorSet,
    Hyp2Status, DEFAULT_MAX_PRODUCTS,
};
use crate::characters::{gl11_simple_char, leading_summands, unique_leading_weight, SuperBasis};
use crate::error::{Error, Result};
use crate::generators::{c_generator, companion_image, d_generator};
use crate::json::to_json_value;
use crate::laurent::LaurentPolynomial;
use crate::poset::{
    dk_weight_sequence, interval_bound, interval_nonneg_dominant, is_dominant, lambda_prime, leq,
    lt, predecessors, Cone, PosetElement, PosetKind, WeightIdeal,
};
use crate::profile::Profile;
use crate::signs::{
    circ_action, power_char_by_enumeration, star_action, Convention, MultiIndex, Permutation,
    Side, SignedMonomialWord,
};
use crate::weight::Weight;

/// Inclusive range `[lo, hi]`, written as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span(pub usize, pub usize);

impl Span {
    fn validate(self, what: &str) -> Result<()> {
        if self.0 > self.1 {
            return Err(Error::InvalidArgument(format!("{what} range [{}, {}] is empty", self.0, self.1)));
        }
        Ok(())
    }

    fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.0..=self.1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Task {
    /// `c_r` is supersymmetric and `d_r` passes the Laurent test.
    SupersymC { r: Span },
    /// Generating-function powers of `E`, `E^*` against the coset enumeration.
    CosetEnumeration { r: Span },
    /// Leading summands of `c_r`, `d_r`.
    LeadingWeights { r: Span },
    /// Companion images over dominant weights in `[-bound, bound]`.
    Companion { bound: i64 },
    /// `⋆` and `∘` invariance of `x_{IJ}` over all words of length in `r`.
    SignActions { r: Span },
    /// Order axioms on the box `[-bound, bound]^{m+n}` and predecessor sanity.
    PosetAxioms { bound: i64 },
    /// Interval sizes against the product bound for random `μ`.
    IntervalBound { samples: usize, max_entry: i64 },
    /// Ordering of Donkin-Koppinen weight sequences.
    Dk { generators: Vec<PosetElement>, cutoff: Span },
    /// `A_s(p)` generators and random `A_s(p)` elements.
    Asp { p: u64, samples: usize },
    /// `GL(1|1)` simple characters.
    Gl11 { r: Span },
    /// Is A_s generated by A_s(p) and the c_r in these degrees; exploratory.
    Hyp2 { p: u64, degree: Span },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::SupersymC { .. } => "supersym_c",
            Task::CosetEnumeration { .. } => "coset_enumeration",
            Task::LeadingWeights { .. } => "leading_weights",
            Task::Companion { .. } => "companion",
            Task::SignActions { .. } => "sign_actions",
            Task::PosetAxioms { .. } => "poset_axioms",
            Task::IntervalBound { .. } => "interval_bound",
            Task::Dk { .. } => "dk",
            Task::Asp { .. } => "asp",
            Task::Gl11 { .. } => "gl11",
            Task::Hyp2 { .. } => "hyp2",
        }
    }

    /// Exploratory tasks report a status but never fail a campaign.
    pub fn is_exploratory(&self) -> bool {
        matches!(self, Task::Hyp2 { .. })
    }

    fn validate(&self) -> Result<()> {
        match self {
            Task::SupersymC { r } | Task::LeadingWeights { r } | Task::Gl11 { r } => r.validate("r"),
            Task::CosetEnumeration { r } | Task::SignActions { r } => {
                r.validate("r")?;
                if r.1 > crate::signs::ENUMERATION_MAX_R {
                    return Err(Error::InvalidArgument(format!(
                        "r <= {} for enumeration tasks",
                        crate::signs::ENUMERATION_MAX_R
                    )));
                }
                Ok(())
            }
            Task::Companion { bound } | Task::PosetAxioms { bound } if *bound < 0 => {
                Err(Error::InvalidArgument("bound must be nonnegative".into()))
            }
            Task::IntervalBound { samples, max_entry } if *samples == 0 || *max_entry < 0 => {
                Err(Error::InvalidArgument("need samples > 0 and max_entry >= 0".into()))
            }
            Task::Dk { generators, cutoff } => {
                cutoff.validate("cutoff")?;
                if generators.is_empty() || cutoff.0 == 0 {
                    return Err(Error::InvalidArgument("dk needs generators and cutoff >= 1".into()));
                }
                Ok(())
            }
            Task::Asp { p, samples } if *samples == 0 || !crate::scalar::is_prime(*p) => {
                Err(Error::InvalidArgument("asp needs a prime p and samples > 0".into()))
            }
            Task::Hyp2 { p, degree } => {
                degree.validate("degree")?;
                if !crate::scalar::is_prime(*p) {
                    return Err(Error::InvalidArgument(format!("{p} is not prime")));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

/// A task with an optional profile overriding the campaign default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskSpec {
    #[serde(flatten)]
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<Profile>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignSpec {
    pub profile: Profile,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tasks: Vec<TaskSpec>,
    /// File path, or `-` for standard output.
    #[serde(default = "default_output")]
    pub output: String,
    #[serde(default)]
    pub format: Format,
}

fn default_output() -> String {
    "-".into()
}

fn checked_profile(p: &Profile) -> Result<Profile> {
    Profile::new(p.m(), p.n(), p.p())
}

impl CampaignSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CampaignSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("campaign spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        checked_profile(&self.profile)?;
        for t in &self.tasks {
            if let Some(p) = &t.profile {
                checked_profile(p)?;
            }
            t.task.validate()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail,
    Error,
    Verified,
    Refuted,
    Inconclusive,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaskRecord {
    pub task: String,
    pub params: Value,
    pub result: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub ms: u64,
}

impl TaskRecord {
    /// Counts against the exit status.
    pub fn failed(&self) -> bool {
        matches!(self.result, Outcome::Fail | Outcome::Error)
    }

    pub fn to_text(&self) -> String {
        let mut line = format!("{:<18} {:<12} {} ms", self.task, self.result.to_string(), self.ms);
        if let Some(w) = &self.witness {
            line.push_str(&format!("  witness: {w}"));
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub records: Vec<TaskRecord>,
}

impl CampaignReport {
    pub fn success(&self) -> bool {
        !self.records.iter().any(TaskRecord::failed)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }

    pub fn to_text(&self) -> String {
        self.records.iter().map(|r| r.to_text() + "\n").collect()
    }

    /// The report with every `ms` zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> Self {
        CampaignReport {
            records: self
                .records
                .iter()
                .map(|r| TaskRecord { ms: 0, ..r.clone() })
                .collect(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Text => self.to_text(),
        }
    }
}

/// Runs every task on a pool of `jobs` threads (0 means rayon's default).
pub fn run_campaign(spec: &CampaignSpec, jobs: usize) -> Result<CampaignReport> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let records = pool.install(|| {
        spec.tasks
            .par_iter()
            .enumerate()
            .map(|(index, t)| run_task(spec, index, t))
            .collect()
    });
    Ok(CampaignReport { records })
}

fn run_task(spec: &CampaignSpec, index: usize, t: &TaskSpec) -> TaskRecord {
    let start = Instant::now();
    let profile = t.profile.unwrap_or(spec.profile);
    let task_seed = spec.seed.wrapping_add(index as u64);
    let mut params = serde_json::to_value(&t.task).expect("tasks serialize");
    if let Value::Object(map) = &mut params {
        map.remove("kind");
        map.insert("index".into(), json!(index));
        map.insert("seed".into(), json!(spec.seed));
        map.insert("profile".into(), json!(profile));
    }
    let (result, witness) = match execute(&t.task, &profile, task_seed) {
        Ok(r) => r,
        // exploratory tasks never count against the exit status
        Err(e) if t.task.is_exploratory() => (Outcome::Inconclusive, Some(json!(e.to_string()))),
        Err(e) => (Outcome::Error, Some(json!(e.to_string()))),
    };
    TaskRecord {
        task: t.task.name().into(),
        params,
        result,
        witness,
        ms: start.elapsed().as_millis() as u64,
    }
}

type Check = Result<(Outcome, Option<Value>)>;

fn pass() -> Check {
    Ok((Outcome::Pass, None))
}

fn fail(witness: Value) -> Check {
    Ok((Outcome::Fail, Some(witness)))
}

fn execute(task: &Task, profile: &Profile, seed: u64) -> Check {
    match task {
        Task::SupersymC { r } => supersym_c(profile, *r),
        Task::CosetEnumeration { r } => coset_enumeration(profile, *r),
        Task::LeadingWeights { r } => leading_weights(profile, *r),
        Task::Companion { bound } => companion(profile, *bound),
        Task::SignActions { r } => sign_actions(profile, *r),
        Task::PosetAxioms { bound } => poset_axioms(profile, *bound),
        Task::IntervalBound { samples, max_entry } => interval_sizes(profile, *samples, *max_entry, seed),
        Task::Dk { generators, cutoff } => dk(profile, generators, *cutoff),
        Task::Asp { p, samples } => asp(profile, *p, *samples, seed),
        Task::Gl11 { r } => gl11(profile, *r),
        Task::Hyp2 { p, degree } => hyp2(profile, *p, *degree),
    }
}

fn supersym_c(profile: &Profile, r: Span) -> Check {
    for k in r.iter() {
        let c = c_generator(profile, k);
        if !is_supersymmetric(&c)? {
            return fail(json!({"generator": format!("c{k}"), "poly": to_json_value(&c)}));
        }
        let d = d_generator(profile, k);
        if !is_supersymmetric_laurent(&d) {
            return fail(json!({"generator": format!("d{k}"), "poly": to_json_value(&d)}));
        }
    }
    pass()
}

fn coset_enumeration(profile: &Profile, r: Span) -> Check {
    let e = SuperBasis::standard(*profile);
    let dual = e.dual();
    for k in r.iter() {
        let ext = power_char_by_enumeration(profile, k, true, false)?;
        if ext != e.exterior_power_char(k) || ext != c_generator(profile, k) {
            return fail(json!({"power": "exterior", "r": k, "enumerated": to_json_value(&ext)}));
        }
        let sym = power_char_by_enumeration(profile, k, false, true)?;
        if sym != dual.symmetric_power_char(k) || sym != d_generator(profile, k) {
            return fail(json!({"power": "symmetric_dual", "r": k, "enumerated": to_json_value(&sym)}));
        }
    }
    pass()
}

/// Expected leading weight of `c_r`.
pub fn expected_c_leading(profile: &Profile, r: usize) -> Weight {
    let (m, n) = (profile.m(), profile.n());
    let mut v = vec![0i64; m + n];
    if r <= m {
        v[..r].fill(1);
    } else {
        v[..m].fill(1);
        v[m] = (r - m) as i64;
    }
    Weight::new(v)
}

/// Expected leading weight of `d_r`.
pub fn expected_d_leading(profile: &Profile, r: usize) -> Weight {
    let (m, n) = (profile.m(), profile.n());
    let mut v = vec![0i64; m + n];
    if r <= n {
        v[m + n - r..].fill(-1);
    } else {
        v[m - 1] = n as i64 - r as i64;
        v[m..].fill(-1);
    }
    Weight::new(v)
}

fn leading_weights(profile: &Profile, r: Span) -> Check {
    for k in r.iter() {
        for (name, f, expected) in [
            ("c", c_generator(profile, k), expected_c_leading(profile, k)),
            ("d", d_generator(profile, k), expected_d_leading(profile, k)),
        ] {
            let lead: Vec<Weight> = leading_summands(&f)?.into_iter().map(|(w, _)| w).collect();
            if lead != vec![expected.clone()] {
                return fail(json!({
                    "generator": format!("{name}{k}"),
                    "expected": expected,
                    "leading": lead,
                }));
            }
        }
    }
    pass()
}

/// All weights with entries in `[lo, hi]`.
pub fn weight_box(len: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn companion(profile: &Profile, bound: i64) -> Check {
    for lambda in weight_box(profile.rank(), -bound, bound) {
        if !is_dominant(profile, &lambda) {
            continue;
        }
        match companion_image(profile, &lambda) {
            Ok(f) => {
                if unique_leading_weight(&f).as_ref() != Some(&lambda) {
                    return fail(json!({"lambda": lambda, "image": to_json_value(&f)}));
                }
            }
            Err(Error::NegativeExponent(_)) => {}
            Err(e) => return Err(e),
        }
    }
    pass()
}

/// Every multi-index of length `r` over `1..=m+n`.
pub fn all_multi_indices(profile: &Profile, r: usize) -> Vec<MultiIndex> {
    weight_box(r, 1, profile.rank() as i64)
        .into_iter()
        .map(|w| {
            MultiIndex::new(profile, w.entries().iter().map(|&x| x as usize).collect())
                .expect("entries in range")
        })
        .collect()
}

fn sign_actions(profile: &Profile, r: Span) -> Check {
    for k in r.iter() {
        let words = all_multi_indices(profile, k);
        let perms = Permutation::all(k);
        for i in &words {
            for j in &words {
                for (convention, name) in [(Convention::Standard, "star"), (Convention::ParityShifted, "circ")] {
                    let w = SignedMonomialWord::new(i.clone(), j.clone(), 1, convention)?;
                    for sigma in &perms {
                        let moved = match convention {
                            Convention::Standard => {
                                star_action(&star_action(&w, sigma, Side::Row)?, sigma, Side::Col)?
                            }
                            Convention::ParityShifted => {
                                circ_action(&circ_action(&w, sigma, Side::Row)?, sigma, Side::Col)?
                            }
                        };
                        if !moved.same_element(&w) {
                            return fail(json!({
                                "action": name,
                                "row": i.entries(),
                                "col": j.entries(),
                                "sigma": sigma.images(),
                            }));
                        }
                    }
                }
            }
        }
    }
    pass()
}

fn poset_axioms(profile: &Profile, bound: i64) -> Check {
    let all = weight_box(profile.rank(), -bound, bound);
    // only weights of equal total are comparable
    let mut by_total: std::collections::BTreeMap<i64, Vec<&Weight>> = Default::default();
    for w in &all {
        by_total.entry(w.total()).or_default().push(w);
    }
    for group in by_total.values() {
        let ups: Vec<BTreeSet<usize>> = group
            .iter()
            .map(|a| {
                (0..group.len())
                    .filter(|&b| leq(a, group[b]).expect("same length"))
                    .collect()
            })
            .collect();
        for (a, up) in ups.iter().enumerate() {
            if !up.contains(&a) {
                return fail(json!({"axiom": "reflexive", "weight": group[a]}));
            }
            for &b in up {
                if b != a && ups[b].contains(&a) {
                    return fail(json!({"axiom": "antisymmetric", "pair": [group[a], group[b]]}));
                }
                if !ups[b].is_subset(up) {
                    return fail(json!({"axiom": "transitive", "pair": [group[a], group[b]]}));
                }
            }
        }
    }
    for w in &all {
        if !lt(&lambda_prime(profile, w), w)? {
            return fail(json!({"claim": "lambda_prime", "weight": w}));
        }
        if is_dominant(profile, w) {
            for q in predecessors(profile, w, Cone::Dominant)? {
                if !lt(&q, w)? || !is_dominant(profile, &q) {
                    return fail(json!({"claim": "predecessor", "weight": w, "pred": q}));
                }
            }
        }
    }
    pass()
}

/// A random element of `X(T)^+_{≥0}` with entries at most `max_entry`.
pub fn random_nonneg_dominant(profile: &Profile, max_entry: i64, rng: &mut impl Rng) -> Weight {
    let mut plus: Vec<i64> = (0..profile.m()).map(|_| rng.gen_range(0..=max_entry)).collect();
    let mut minus: Vec<i64> = (0..profile.n()).map(|_| rng.gen_range(0..=max_entry)).collect();
    plus.sort_unstable_by(|a, b| b.cmp(a));
    minus.sort_unstable_by(|a, b| b.cmp(a));
    Weight::from_blocks(&plus, &minus)
}

fn interval_sizes(profile: &Profile, samples: usize, max_entry: i64, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let mu = random_nonneg_dominant(profile, max_entry, &mut rng);
        let size = interval_nonneg_dominant(profile, &mu)?.len() as u128;
        let bound = interval_bound(profile, &mu);
        if size > bound {
            return fail(json!({"mu": mu, "size": size as u64, "bound": bound as u64}));
        }
    }
    pass()
}

fn dk(profile: &Profile, generators: &[PosetElement], cutoff: Span) -> Check {
    let ideal = WeightIdeal::new(*profile, PosetKind::Product, generators.to_vec())?;
    for k in cutoff.iter() {
        let seq = dk_weight_sequence(&ideal, k)?;
        for a in 0..seq.len() {
            for b in a + 1..seq.len() {
                if seq[a] == seq[b] || lt(&seq[a], &seq[b])? {
                    return fail(json!({"cutoff": k, "sequence": seq, "positions": [a, b]}));
                }
            }
        }
    }
    pass()
}

/// A random nonzero element of the degree-`degree` piece spanned by `basis`.
pub fn random_combination(
    profile: &Profile,
    basis: &[LaurentPolynomial],
    rng: &mut impl Rng,
) -> LaurentPolynomial {
    let modulus = profile.p().unwrap_or(7) as i64;
    loop {
        let mut f = LaurentPolynomial::zero(*profile);
        for b in basis {
            let c = profile.scalar(rng.gen_range(0..modulus) - modulus / 2);
            f = &f + &b.scale(&c);
        }
        if !f.is_zero() {
            return f;
        }
    }
}

fn asp(profile: &Profile, p: u64, samples: usize, seed: u64) -> Check {
    let profile = profile.with_p(Some(p))?;
    let gens = asp_generators(&profile, p)?;
    for (g, label) in gens.elements().iter().zip(gens.labels()) {
        if !is_supersymmetric(g)? || !is_p_balanced(g, p)? {
            return fail(json!({"generator": label, "poly": to_json_value(g)}));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = 2 * p as usize;
    let degrees: Vec<(usize, Vec<LaurentPolynomial>)> = (1..=cap)
        .map(|d| balanced_orbit_basis(&profile, p, d).map(|b| (d, b)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, b)| !b.is_empty())
        .collect();
    for _ in 0..samples {
        let (d, basis) = &degrees[rng.gen_range(0..degrees.len())];
        let f = random_combination(&profile, basis, &mut rng);
        let report = subalgebra_membership(&f, &gens, *d as i64)?;
        if !report.member {
            return fail(json!({"degree": d, "element": to_json_value(&f)}));
        }
    }
    pass()
}

fn gl11(profile: &Profile, r: Span) -> Check {
    for k in r.iter() {
        let lo = match profile.p() {
            Some(p) if (k as u64).is_multiple_of(p) => 0,
            None if k == 0 => 0,
            _ => 1,
        };
        let cs: GeneratorSet = c_generator_set(profile, k.max(1));
        for i in lo..=k as i64 {
            let f = gl11_simple_char(profile, i, k as i64)?;
            if !is_supersymmetric(&f)? {
                return fail(json!({"i": i, "r": k, "reason": "not supersymmetric"}));
            }
            if profile.p().is_none() && !subalgebra_membership(&f, &cs, k as i64)?.member {
                return fail(json!({"i": i, "r": k, "reason": "not in the c_r subalgebra"}));
            }
        }
    }
    pass()
}

fn hyp2(profile: &Profile, p: u64, degree: Span) -> Check {
    let profile = profile.with_p(Some(p))?;
    let mut status = Outcome::Verified;
    let mut witness = None;
    for d in degree.iter() {
        let report = hypothesis2_cell(&profile, d, DEFAULT_MAX_PRODUCTS)?;
        match report.status {
            Hyp2Status::Refuted if witness.is_none() => {
                status = Outcome::Refuted;
                witness = Some(json!({"degree": d, "poly": report.witness}));
            }
            Hyp2Status::Inconclusive if status == Outcome::Verified => status = Outcome::Inconclusive,
            _ => {}
        }
    }
    Ok((status, witness))
}
