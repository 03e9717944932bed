//! Exhaustive search over bounded weight data, as empirical corroboration of
//! the profile-level argument.
//!
//! Datasets are enumerated up to symmetry: weights sorted inside each point,
//! points sorted lexicographically, and the global gcd of all weights equal
//! to 1 (rescaling every weight by `c` is the reparameterization `g -> g^c`).
//! Cheap necessary conditions run first; only survivors reach a full
//! certificate with its symbolic `chi_y` reductions.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::json;

use crate::certify::{self, PairingAnalysis, CHECK_NAMES};
use crate::localization;
use crate::model::{FixedPoint, FixedPointDataset, NProfile};

/// Sorts weights within points, sorts points, and divides out the global gcd.
pub fn canonicalize(d: &FixedPointDataset) -> FixedPointDataset {
    let g = d
        .points()
        .iter()
        .flat_map(|p| p.weights.iter())
        .fold(0i64, |acc, &w| acc.gcd(&w));
    let mut weights: Vec<Vec<i64>> = d
        .points()
        .iter()
        .map(|p| {
            let mut w: Vec<i64> = p.weights.iter().map(|x| x / g).collect();
            w.sort_unstable();
            w
        })
        .collect();
    weights.sort();
    let points = weights
        .into_iter()
        .enumerate()
        .map(|(k, w)| FixedPoint::new(format!("p{k}"), w))
        .collect();
    FixedPointDataset::from_points(d.n(), points, d.label().map(str::to_string))
        .expect("canonicalization preserves validity")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub points: usize,
    pub bound: i64,
}

impl SearchConfig {
    /// Four fixed points in dimension 10.
    pub fn dim10_four_points(bound: i64) -> Self {
        SearchConfig {
            n: 5,
            points: 4,
            bound,
        }
    }

    fn four_point_regime(&self) -> bool {
        self.points == 4 && self.n >= 4
    }
}

/// Pre-certificate stages, cheapest first.
pub const STAGES: [&str; 9] = [
    "parity",
    "few_points",
    "n_profile_symmetry",
    "consecutive",
    "pairing",
    "vanishing",
    "integrality",
    "gs_cross_check",
    "c1sq_vanishing",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub candidates: u64,
    /// Closed-form count of canonical datasets, for comparison.
    pub expected_candidates: BigInt,
    /// How many candidates each stage rejected, in [`STAGES`] order.
    pub rejected_at: Vec<(&'static str, u64)>,
    /// Candidates that reached the full certificate.
    pub fully_certified: u64,
    /// Failed-check counts among fully certified candidates.
    pub certificate_failures: Vec<(&'static str, u64)>,
    pub passing: u64,
    /// Up to [`MAX_EXAMPLES`] passing datasets.
    pub passing_examples: Vec<Vec<Vec<i64>>>,
}

pub const MAX_EXAMPLES: usize = 10;

impl SearchReport {
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut s = String::new();
        writeln!(
            s,
            "search: {} fixed points, n = {} (dimension {}), |w| <= {}",
            c.points,
            c.n,
            2 * c.n,
            c.bound
        )
        .unwrap();
        writeln!(s, "  candidates            {}", self.candidates).unwrap();
        writeln!(s, "  expected (closed form) {}", self.expected_candidates).unwrap();
        writeln!(s, "  rejected by stage").unwrap();
        for (name, count) in &self.rejected_at {
            writeln!(s, "    {name:<20} {count}").unwrap();
        }
        writeln!(s, "  fully certified       {}", self.fully_certified).unwrap();
        writeln!(s, "  failed checks among fully certified").unwrap();
        for (name, count) in &self.certificate_failures {
            writeln!(s, "    {name:<20} {count}").unwrap();
        }
        writeln!(s, "  passing               {}", self.passing).unwrap();
        for ex in &self.passing_examples {
            writeln!(s, "    {ex:?}").unwrap();
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let c = &self.config;
        let counts = |v: &[(&str, u64)]| {
            let mut m = serde_json::Map::new();
            for (k, n) in v {
                m.insert(k.to_string(), json!(n));
            }
            serde_json::Value::Object(m)
        };
        json!({
            "n": c.n,
            "points": c.points,
            "bound": c.bound,
            "candidates": self.candidates,
            "expected_candidates": crate::report::Value::Int(self.expected_candidates.clone()),
            "rejected_at": counts(&self.rejected_at),
            "fully_certified": self.fully_certified,
            "certificate_failures": counts(&self.certificate_failures),
            "passing": self.passing,
            "passing_examples": self.passing_examples,
        })
    }
}

fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

fn mobius(mut d: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if d > 1 {
        sign = -sign;
    }
    sign
}

/// Number of canonical datasets: multisets of `points` sorted weight vectors
/// over `{-bound..bound} \ {0}` with global gcd 1, by Mobius inversion over
/// the common divisor.
pub fn canonical_candidate_count(c: &SearchConfig) -> BigInt {
    (1..=c.bound.max(0) as u64)
        .map(|d| {
            let values = BigInt::from(2 * (c.bound as u64 / d));
            let vectors = binomial(&(values + c.n as u64 - 1), c.n as u64);
            let sets = binomial(&(vectors + c.points as u64 - 1), c.points as u64);
            sets * mobius(d)
        })
        .fold(BigInt::zero(), |a, b| a + b)
}

/// Per-vector data reused across every dataset containing it.
struct Vector {
    weights: Vec<i64>,
    negatives: usize,
    sum: i64,
    product: BigInt,
    gcd: i64,
}

/// Non-decreasing length-`n` vectors over the nonzero integers in
/// `[-bound, bound]`, in lexicographic order.
fn sorted_vectors(n: usize, bound: i64) -> Vec<Vector> {
    let values: Vec<i64> = (-bound..=bound).filter(|&v| v != 0).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(values: &[i64], start: usize, n: usize, cur: &mut Vec<i64>, out: &mut Vec<Vector>) {
        if cur.len() == n {
            let fp = FixedPoint::new("", cur.clone());
            out.push(Vector {
                weights: cur.clone(),
                negatives: fp.negative_count(),
                sum: fp.weight_sum(),
                product: fp.weight_product(),
                gcd: cur.iter().fold(0i64, |a, &w| a.gcd(&w)),
            });
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, i, n, cur, out);
            cur.pop();
        }
    }
    go(&values, 0, n, &mut cur, &mut out);
    out
}

#[derive(Default)]
struct Tally {
    candidates: u64,
    rejected: [u64; STAGES.len()],
    fully_certified: u64,
    failures: [u64; CHECK_NAMES.len()],
    passing: u64,
    examples: Vec<Vec<Vec<i64>>>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.candidates += other.candidates;
        for (a, b) in self.rejected.iter_mut().zip(other.rejected) {
            *a += b;
        }
        self.fully_certified += other.fully_certified;
        for (a, b) in self.failures.iter_mut().zip(other.failures) {
            *a += b;
        }
        self.passing += other.passing;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_EXAMPLES);
        self
    }
}

/// Index of the first stage that rejects, or `None` if all pass.
fn first_rejection(cfg: &SearchConfig, vs: &[&Vector]) -> Option<usize> {
    let k = vs.len();
    let dim = 2 * cfg.n;
    if !dim.is_multiple_of(4) && !k.is_multiple_of(2) {
        return Some(0);
    }
    let few = match k {
        1 => Some(dim == 0),
        2 => Some(dim == 2 || dim == 6),
        3 => Some(dim == 4),
        _ => None,
    };
    if few == Some(false) {
        return Some(1);
    }
    let mut counts = vec![0; cfg.n + 1];
    for v in vs {
        counts[v.negatives] += 1;
    }
    let profile = NProfile::new(counts);
    if !profile.is_symmetric() {
        return Some(2);
    }
    if profile.consecutive_nonzero().is_none() {
        return Some(3);
    }
    if cfg.four_point_regime() {
        let a = PairingAnalysis::new(
            vs.iter().map(|v| v.sum).collect(),
            vs.iter().map(|v| v.product.clone()).collect(),
        );
        if !a.holds() {
            return Some(4);
        }
    }
    let d = dataset(cfg, vs);
    if !localization::vanishing_check(&d).is_empty() {
        return Some(5);
    }
    let table = localization::chern_table(&d);
    if !localization::integrality_check(&table).is_empty() {
        return Some(6);
    }
    if !localization::gs_cross_check(&d).passes() {
        return Some(7);
    }
    if cfg.four_point_regime() && !localization::c1sq_divisibility_check(&d).expect("four-point regime").is_empty() {
        return Some(8);
    }
    None
}

fn dataset(cfg: &SearchConfig, vs: &[&Vector]) -> FixedPointDataset {
    FixedPointDataset::new(cfg.n, vs.iter().map(|v| v.weights.clone()).collect(), None)
        .expect("enumerated vectors are valid")
}

fn visit(cfg: &SearchConfig, vs: &[&Vector], tally: &mut Tally) {
    tally.candidates += 1;
    if let Some(stage) = first_rejection(cfg, vs) {
        tally.rejected[stage] += 1;
        return;
    }
    tally.fully_certified += 1;
    let d = dataset(cfg, vs);
    let cert = certify::certify(&d);
    for (i, c) in cert.checks.iter().enumerate() {
        if c.failed() {
            tally.failures[i] += 1;
        }
    }
    if cert.passed() {
        tally.passing += 1;
        if tally.examples.len() < MAX_EXAMPLES {
            tally.examples.push(d.weight_vectors());
        }
    }
}

/// Extends the multiset `chosen` with indices `>= start` until it has
/// `cfg.points` members; the running gcd filters non-canonical sets.
fn walk<'a>(
    cfg: &SearchConfig,
    vectors: &'a [Vector],
    start: usize,
    gcd: i64,
    chosen: &mut Vec<&'a Vector>,
    tally: &mut Tally,
) {
    if chosen.len() == cfg.points {
        if gcd == 1 {
            visit(cfg, chosen, tally);
        }
        return;
    }
    for (i, v) in vectors.iter().enumerate().skip(start) {
        chosen.push(v);
        walk(cfg, vectors, i, gcd.gcd(&v.gcd), chosen, tally);
        chosen.pop();
    }
}

/// Enumerates and certifies every canonical dataset within the bound.
///
/// The space is sharded by the first point and merged in shard order, so the
/// report does not depend on scheduling.
pub fn search_weights(cfg: &SearchConfig) -> SearchReport {
    assert!(cfg.bound >= 1 && cfg.points >= 1 && cfg.n >= 1);
    let vectors = sorted_vectors(cfg.n, cfg.bound);
    let tally = (0..vectors.len())
        .into_par_iter()
        .map(|first| {
            let mut t = Tally::default();
            let mut chosen = vec![&vectors[first]];
            walk(cfg, &vectors, first, vectors[first].gcd, &mut chosen, &mut t);
            t
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    SearchReport {
        config: *cfg,
        candidates: tally.candidates,
        expected_candidates: canonical_candidate_count(cfg),
        rejected_at: STAGES.iter().copied().zip(tally.rejected).collect(),
        fully_certified: tally.fully_certified,
        certificate_failures: CHECK_NAMES.iter().copied().zip(tally.failures).collect(),
        passing: tally.passing,
        passing_examples: tally.examples,
    }
}
