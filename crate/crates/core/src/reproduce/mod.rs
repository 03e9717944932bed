//! Profile-level case analysis showing that no circle action on a compact
//! 10-dimensional almost complex manifold has exactly four fixed points, and
//! the resulting lower bound of six fixed points.

mod search;

pub use search::{
    canonical_candidate_count, canonicalize, search_weights, SearchConfig, SearchReport,
};

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::certify;
use crate::fixtures;
use crate::localization::gs_chern_number;
use crate::model::NProfile;
use crate::report::Value;

const N: usize = 5;
const POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReproduceError {
    #[error("profile {0} is consistent; the case analysis does not close")]
    ConsistentCase(NProfile),
}

/// Profiles `(N_0, ..., N_5)` compatible with four fixed points: entries sum
/// to 4, `N_i = N_{5-i}`, and some two consecutive entries are nonzero.
pub fn enumerate_cases() -> Vec<NProfile> {
    // choose the half (N_0, N_1, N_2) summing to 2, then mirror
    let half = POINTS / 2;
    let mut out = Vec::new();
    for n0 in (0..=half).rev() {
        for n1 in (0..=half - n0).rev() {
            let n2 = half - n0 - n1;
            let p = NProfile::new(vec![n0, n1, n2, n2, n1, n0]);
            if p.consecutive_nonzero().is_some() {
                out.push(p);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseVerdict {
    Contradiction,
    Consistent,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub profile: NProfile,
    pub todd: BigInt,
    pub c1c4: BigInt,
    pub c1c2sq: BigRational,
    pub verdict: CaseVerdict,
}

impl CaseReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "profile": self.profile,
            "todd": Value::Int(self.todd.clone()),
            "c1c4": Value::Int(self.c1c4.clone()),
            "c1c2sq": Value::Rational(self.c1c2sq.clone()),
            "verdict": self.verdict,
        })
    }
}

/// Solves the Todd polynomial for `int c_1 c_2^2` given a profile.
///
/// With four fixed points in dimension 10 the numbers `c_1^3 c_2` and
/// `c_1^2 c_3` vanish, so `1440 Todd = -c_1 c_4 + 3 c_1 c_2^2`, where
/// `Todd = N_0` and `c_1 c_4` comes from the closed form in the `N_i`.
pub fn case_contradiction(profile: &NProfile) -> CaseReport {
    let todd = BigInt::from(profile.counts()[0]);
    let c1c4 = gs_chern_number(profile, N);
    let c1c2sq = BigRational::new(BigInt::from(1440) * &todd + &c1c4, BigInt::from(3));
    let verdict = if c1c2sq.is_integer() {
        CaseVerdict::Consistent
    } else {
        CaseVerdict::Contradiction
    };
    CaseReport {
        profile: profile.clone(),
        todd,
        c1c4,
        c1c2sq,
        verdict,
    }
}

/// One candidate fixed-point count in dimension 10 and why it is excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountStep {
    pub fixed_points: usize,
    pub excluded_by: Vec<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofReport {
    pub cases: Vec<CaseReport>,
    pub steps: Vec<CountStep>,
    pub minimum_fixed_points: usize,
    /// Shipped fixtures with the minimal count, and whether they certify.
    pub attained_by: Vec<(String, bool)>,
}

impl ProofReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "four fixed points in dimension 10").unwrap();
        writeln!(s, "  {:<16} {:>5} {:>6} {:>10}  verdict", "(N_0..N_5)", "todd", "c1c4", "c1c2^2").unwrap();
        for c in &self.cases {
            writeln!(
                s,
                "  {:<16} {:>5} {:>6} {:>10}  {}",
                c.profile.to_string(),
                c.todd,
                c.c1c4,
                Value::Rational(c.c1c2sq.clone()).to_string(),
                match c.verdict {
                    CaseVerdict::Contradiction => "contradiction",
                    CaseVerdict::Consistent => "consistent",
                }
            )
            .unwrap();
        }
        writeln!(s, "fixed-point counts in dimension 10").unwrap();
        for st in &self.steps {
            writeln!(s, "  k = {}: excluded by {}", st.fixed_points, st.excluded_by.join(", ")).unwrap();
        }
        let attained: Vec<String> = self
            .attained_by
            .iter()
            .map(|(l, ok)| format!("{l} ({})", if *ok { "certified" } else { "NOT certified" }))
            .collect();
        writeln!(s, "minimum: {} fixed points, attained by {}", self.minimum_fixed_points, attained.join(", ")).unwrap();
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "cases": self.cases.iter().map(CaseReport::to_json).collect::<Vec<_>>(),
            "steps": self.steps.iter().map(|st| json!({
                "fixed_points": st.fixed_points,
                "excluded_by": st.excluded_by,
            })).collect::<Vec<_>>(),
            "minimum_fixed_points": self.minimum_fixed_points,
            "attained_by": self.attained_by.iter().map(|(l, ok)| json!({
                "label": l,
                "certified": ok,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Closes every four-point case and walks the fixed-point counts upward
/// until one survives.
pub fn reproduce_theorem() -> Result<ProofReport, ReproduceError> {
    let cases: Vec<CaseReport> = enumerate_cases().iter().map(case_contradiction).collect();
    if let Some(c) = cases.iter().find(|c| c.verdict == CaseVerdict::Consistent) {
        return Err(ReproduceError::ConsistentCase(c.profile.clone()));
    }
    let dim = 2 * N;
    let mut steps = Vec::new();
    let mut k: usize = 1;
    loop {
        let mut excluded_by = Vec::new();
        if !dim.is_multiple_of(4) && !k.is_multiple_of(2) {
            excluded_by.push(certify::refs::PARITY);
        }
        let few_allowed: Option<&[usize]> = match k {
            1 => Some(&[0]),
            2 => Some(&[2, 6]),
            3 => Some(&[4]),
            _ => None,
        };
        if few_allowed.is_some_and(|a| !a.contains(&dim)) {
            excluded_by.push(certify::refs::FEW_POINTS);
        }
        if k == POINTS {
            excluded_by.push("four-point case analysis: c1c2^2 is never an integer");
        }
        if excluded_by.is_empty() {
            break;
        }
        steps.push(CountStep {
            fixed_points: k,
            excluded_by,
        });
        k += 1;
    }
    let attained_by = fixtures::all()
        .into_iter()
        .map(|(_, d)| d)
        .filter(|d| d.n() == N && d.len() == k)
        .map(|d| (d.display_label().to_string(), certify::certify(&d).passed()))
        .collect();
    Ok(ProofReport {
        cases,
        steps,
        minimum_fixed_points: k,
        attained_by,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(v: &[usize]) -> NProfile {
        NProfile::new(v.to_vec())
    }

    #[test]
    fn four_cases() {
        let cases = enumerate_cases();
        assert_eq!(cases.len(), 4);
        assert!(cases.contains(&prof(&[1, 1, 0, 0, 1, 1])));
        // N_2, N_3 are the consecutive pair; N_1 = 0 is allowed
        assert!(cases.contains(&prof(&[1, 0, 1, 1, 0, 1])));
        assert!(cases.contains(&prof(&[0, 1, 1, 1, 1, 0])));
        assert!(cases.contains(&prof(&[0, 0, 2, 2, 0, 0])));
    }

    #[test]
    fn case_values() {
        let r = case_contradiction(&prof(&[1, 1, 0, 0, 1, 1]));
        assert_eq!((r.todd, r.c1c4), (1.into(), 92.into()));
        assert_eq!(r.c1c2sq, BigRational::new(1532.into(), 3.into()));
        assert_eq!(r.verdict, CaseVerdict::Contradiction);

        let r = case_contradiction(&prof(&[1, 0, 1, 1, 0, 1]));
        assert_eq!((r.todd, r.c1c4), (1.into(), 68.into()));
        assert_eq!(r.c1c2sq, BigRational::new(1508.into(), 3.into()));
        assert_eq!(r.verdict, CaseVerdict::Contradiction);

        let r = case_contradiction(&prof(&[0, 1, 1, 1, 1, 0]));
        assert_eq!((r.todd, r.c1c4), (0.into(), 20.into()));
        assert_eq!(r.c1c2sq, BigRational::new(20.into(), 3.into()));

        let r = case_contradiction(&prof(&[0, 0, 2, 2, 0, 0]));
        assert_eq!((r.todd, r.c1c4), (0.into(), (-4).into()));
        assert_eq!(r.c1c2sq, BigRational::new((-4).into(), 3.into()));
        assert_eq!(r.verdict, CaseVerdict::Contradiction);
    }

    #[test]
    fn proof_chain() {
        let p = reproduce_theorem().unwrap();
        assert_eq!(p.minimum_fixed_points, 6);
        let ks: Vec<_> = p.steps.iter().map(|s| s.fixed_points).collect();
        assert_eq!(ks, [1, 2, 3, 4, 5]);
        assert!(p.steps[1].excluded_by.contains(&certify::refs::FEW_POINTS));
        let labels: Vec<_> = p.attained_by.iter().map(|(l, _)| l.as_str()).collect();
        assert_eq!(labels, ["CP5", "CP2xS6"]);
        assert!(p.attained_by.iter().all(|(_, ok)| *ok));
        assert_eq!(reproduce_theorem().unwrap().to_text(), p.to_text());
        assert!(p.to_text().contains("1532/3"));
    }
}
