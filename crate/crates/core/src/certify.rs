//! Certification of fixed-point data against the necessary conditions satisfied
//! by every circle action on a compact almost complex manifold with isolated
//! fixed points.
//!
//! A passing certificate means no known obstruction fired. It does not
//! assert that a manifold with that data exists.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::genus::{self, ChiValue, ChiVector};
use crate::localization::{self, ChernTable, MonomialViolation};
use crate::model::{FixedPointDataset, NProfile, ParsedDataset};
use crate::report::{witness_json, Value, Witness};

pub mod refs {
    pub const VALIDATION: &str = "dataset schema";
    pub const PARITY: &str = "Euler characteristic parity";
    pub const FEW_POINTS: &str = "classification with at most three fixed points";
    pub const CHI_STRUCTURE: &str = "chi_y fixed-point formula; a_i >= 0, a_i = a_{n-i}, sum a_i = #fixed points";
    pub const CONSECUTIVE: &str = "two consecutive nonzero N_i";
    pub const CHI_CONSTANCY: &str = "chi_y fixed-point formula";
    pub const VANISHING: &str = "ABBV localization, degree below dimension";
    pub const INTEGRALITY: &str = "integrality of Chern numbers";
    pub const GS: &str = "Godinho-Sabatini formula for c_1 c_{n-1}";
    pub const PAIRING: &str = "four fixed points: weight-sum pairing";
    pub const C1SQ: &str = "four fixed points: Chern numbers divisible by c_1^2 vanish";
    pub const TODD: &str = "Todd polynomial in dimension 10";
}

/// Fixed check order of every certificate.
pub const CHECK_NAMES: [&str; 12] = [
    "validation",
    "parity",
    "few_points",
    "chi_structure",
    "consecutive",
    "chi_constancy",
    "vanishing",
    "integrality",
    "gs_cross_check",
    "pairing",
    "c1sq_vanishing",
    "todd_identity",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: &'static str,
    pub status: Status,
    pub witness: Witness,
    pub paper_ref: &'static str,
}

impl CheckResult {
    fn new(check: &'static str, paper_ref: &'static str, status: Status, witness: Witness) -> Self {
        CheckResult {
            check,
            status,
            witness,
            paper_ref,
        }
    }

    fn skipped(check: &'static str, paper_ref: &'static str, precondition: &str) -> Self {
        Self::new(
            check,
            paper_ref,
            Status::Skipped,
            vec![("precondition".into(), Value::text(precondition))],
        )
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl Serialize for CheckResult {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckResult", 4)?;
        st.serialize_field("check", self.check)?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("witness", &witness_json(&self.witness))?;
        st.serialize_field("paper_ref", self.paper_ref)?;
        st.end()
    }
}

fn w(fields: Vec<(&str, Value)>) -> Witness {
    fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn violations_value(v: &[MonomialViolation]) -> Value {
    Value::Record(
        v.iter()
            .map(|x| (x.monomial.to_string(), Value::Rational(x.value.clone())))
            .collect(),
    )
}

fn table_value(t: &ChernTable) -> Value {
    Value::Record(
        t.entries()
            .iter()
            .map(|(m, v)| (m.to_string(), Value::Rational(v.clone())))
            .collect(),
    )
}

fn chi_values(chi: &ChiVector) -> Value {
    Value::List(
        chi.values()
            .iter()
            .map(|v| match v {
                ChiValue::Integer(i) => Value::Int(i.clone()),
                ChiValue::NonInteger(r) => Value::Rational(r.clone()),
                ChiValue::NonConstant(f) => Value::text(f.to_string()),
            })
            .collect(),
    )
}

pub fn check_validation(d: &FixedPointDataset, warnings: &[String]) -> CheckResult {
    CheckResult::new(
        "validation",
        refs::VALIDATION,
        Status::Pass,
        w(vec![
            ("n", d.n().into()),
            ("dimension", d.real_dimension().into()),
            ("fixed_points", d.len().into()),
            (
                "warnings",
                Value::List(warnings.iter().map(|s| Value::text(s.clone())).collect()),
            ),
        ]),
    )
}

/// An odd number of fixed points forces the dimension to be divisible by 4.
pub fn check_parity(d: &FixedPointDataset) -> CheckResult {
    let dim = d.real_dimension();
    let k = d.len();
    let applies = !dim.is_multiple_of(4);
    let ok = !applies || k.is_multiple_of(2);
    CheckResult::new(
        "parity",
        refs::PARITY,
        Status::from_ok(ok),
        w(vec![
            ("dimension", dim.into()),
            ("fixed_points", k.into()),
            ("dimension_divisible_by_4", (!applies).into()),
        ]),
    )
}

/// One fixed point only on a point, two only in dimension 2 or 6, three only
/// in dimension 4.
pub fn check_few_points(d: &FixedPointDataset) -> CheckResult {
    let dim = d.real_dimension();
    let allowed: &[usize] = match d.len() {
        1 => &[0],
        2 => &[2, 6],
        3 => &[4],
        _ => {
            return CheckResult::skipped(
                "few_points",
                refs::FEW_POINTS,
                "applies to at most three fixed points",
            )
        }
    };
    CheckResult::new(
        "few_points",
        refs::FEW_POINTS,
        Status::from_ok(allowed.contains(&dim)),
        w(vec![
            ("fixed_points", d.len().into()),
            ("dimension", dim.into()),
            ("allowed_dimensions", Value::ints(allowed.iter().copied())),
        ]),
    )
}

pub fn check_chi_structure(d: &FixedPointDataset) -> CheckResult {
    check_chi_structure_with(d, &genus::chi_vector(d))
}

fn check_chi_structure_with(d: &FixedPointDataset, chi: &ChiVector) -> CheckResult {
    let violations = genus::check_chi_structure_with(d, chi);
    CheckResult::new(
        "chi_structure",
        refs::CHI_STRUCTURE,
        Status::from_ok(violations.is_empty()),
        w(vec![
            ("chi", chi_values(chi)),
            ("n_profile", Value::ints(d.n_profile().counts().iter().copied())),
            (
                "violations",
                Value::List(violations.iter().map(|v| Value::text(v.to_string())).collect()),
            ),
        ]),
    )
}

pub fn check_consecutive(profile: &NProfile) -> CheckResult {
    let hit = profile.consecutive_nonzero();
    let mut witness = w(vec![("n_profile", Value::ints(profile.counts().iter().copied()))]);
    if let Some(i) = hit {
        witness.push(("index".into(), i.into()));
    }
    CheckResult::new("consecutive", refs::CONSECUTIVE, Status::from_ok(hit.is_some()), witness)
}

pub fn check_chi_constancy(d: &FixedPointDataset) -> CheckResult {
    check_chi_constancy_with(&genus::chi_vector(d))
}

fn check_chi_constancy_with(chi: &ChiVector) -> CheckResult {
    let bad: Vec<usize> = (0..chi.values().len()).filter(|&i| !chi.constancy_ok(i)).collect();
    CheckResult::new(
        "chi_constancy",
        refs::CHI_CONSTANCY,
        Status::from_ok(bad.is_empty()),
        w(vec![
            ("chi", chi_values(chi)),
            ("non_integral_indices", Value::ints(bad)),
        ]),
    )
}

pub fn check_vanishing(d: &FixedPointDataset) -> CheckResult {
    let checked: usize = (0..d.n())
        .map(|deg| localization::monomials_of_degree(d.n(), deg).len())
        .sum();
    let v = localization::vanishing_check(d);
    CheckResult::new(
        "vanishing",
        refs::VANISHING,
        Status::from_ok(v.is_empty()),
        w(vec![
            ("monomials_checked", checked.into()),
            ("nonzero", violations_value(&v)),
        ]),
    )
}

pub fn check_integrality(t: &ChernTable) -> CheckResult {
    let v = localization::integrality_check(t);
    CheckResult::new(
        "integrality",
        refs::INTEGRALITY,
        Status::from_ok(v.is_empty()),
        w(vec![
            ("chern_numbers", table_value(t)),
            ("non_integral", violations_value(&v)),
        ]),
    )
}

pub fn check_gs(d: &FixedPointDataset) -> CheckResult {
    let c = localization::gs_cross_check(d);
    CheckResult::new(
        "gs_cross_check",
        refs::GS,
        Status::from_ok(c.passes()),
        w(vec![
            ("monomial", Value::text(localization::c1_cn_minus_1(d.n()).to_string())),
            ("localized", Value::Rational(c.localized)),
            ("closed_form", Value::Int(c.closed_form)),
        ]),
    )
}

/// Two pairs of fixed points, as indices into the dataset.
pub type Pairing = [[usize; 2]; 2];

const PAIRINGS: [Pairing; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];

/// Weight-sum and weight-product relations among exactly four fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingAnalysis {
    pub sums: Vec<i64>,
    pub products: Vec<BigInt>,
    /// A pairing with sums `a, a, -a, -a`.
    pub sum_pairing: Option<Pairing>,
    /// Every weight sum is zero and `sum_p 1/prod w_p = 0`.
    pub zero_sum_case: bool,
    pub reciprocal_sum: BigRational,
    /// A sum pairing whose products are opposite within each pair.
    pub product_pairing: Option<Pairing>,
}

impl PairingAnalysis {
    pub fn new(sums: Vec<i64>, products: Vec<BigInt>) -> Self {
        assert_eq!(sums.len(), 4);
        let sum_ok = |p: &Pairing| {
            let [[a, b], [c, e]] = *p;
            sums[a] == sums[b] && sums[c] == sums[e] && sums[a] == -sums[c]
        };
        let prod_ok = |p: &Pairing| {
            let [[a, b], [c, e]] = *p;
            products[a] == -&products[b] && products[c] == -&products[e]
        };
        let sum_pairing = PAIRINGS.iter().find(|p| sum_ok(p)).copied();
        let product_pairing = PAIRINGS.iter().find(|p| sum_ok(p) && prod_ok(p)).copied();
        let reciprocal_sum: BigRational = products
            .iter()
            .map(|p| BigRational::new(1.into(), p.clone()))
            .sum();
        let zero_sum_case = sums.iter().all(|&s| s == 0) && reciprocal_sum.is_zero();
        PairingAnalysis {
            sums,
            products,
            sum_pairing,
            zero_sum_case,
            reciprocal_sum,
            product_pairing,
        }
    }

    pub fn of(d: &FixedPointDataset) -> Option<Self> {
        (d.len() == 4).then(|| {
            Self::new(
                d.points().iter().map(|p| p.weight_sum()).collect(),
                d.points().iter().map(|p| p.weight_product()).collect(),
            )
        })
    }

    /// At least one of the two alternatives holds (which implies a sum pairing).
    pub fn holds(&self) -> bool {
        self.zero_sum_case || self.product_pairing.is_some()
    }
}

fn pairing_value(d: &FixedPointDataset, p: Option<Pairing>) -> Value {
    match p {
        None => Value::text("none"),
        Some(pairs) => Value::List(
            pairs
                .iter()
                .map(|pair| Value::List(pair.iter().map(|&i| Value::text(d.points()[i].id.clone())).collect()))
                .collect(),
        ),
    }
}

pub fn check_pairing(d: &FixedPointDataset) -> CheckResult {
    if d.len() != 4 || d.n() < 4 {
        return CheckResult::skipped("pairing", refs::PAIRING, "applies to exactly 4 fixed points with n >= 4");
    }
    let a = PairingAnalysis::of(d).expect("four points");
    let mut branches = Vec::new();
    if a.zero_sum_case {
        branches.push(Value::text("zero_sums"));
    }
    if a.product_pairing.is_some() {
        branches.push(Value::text("paired_products"));
    }
    CheckResult::new(
        "pairing",
        refs::PAIRING,
        Status::from_ok(a.holds()),
        w(vec![
            ("weight_sums", Value::ints(a.sums.iter().copied())),
            ("weight_products", Value::ints(a.products.iter().cloned())),
            ("sum_pairing", pairing_value(d, a.sum_pairing)),
            ("reciprocal_product_sum", Value::Rational(a.reciprocal_sum.clone())),
            ("branches_held", Value::List(branches)),
        ]),
    )
}

pub fn check_c1sq(d: &FixedPointDataset) -> CheckResult {
    match localization::c1sq_divisibility_check(d) {
        Err(_) => CheckResult::skipped("c1sq_vanishing", refs::C1SQ, "applies to exactly 4 fixed points with n >= 4"),
        Ok(v) => CheckResult::new(
            "c1sq_vanishing",
            refs::C1SQ,
            Status::from_ok(v.is_empty()),
            w(vec![
                (
                    "monomials",
                    Value::List(
                        localization::c1sq_monomials(d.n())
                            .iter()
                            .map(|m| Value::text(m.to_string()))
                            .collect(),
                    ),
                ),
                ("nonzero", violations_value(&v)),
            ]),
        ),
    }
}

/// `(-c1c4 + c1^2c3 + 3 c1c2^2 - c1^3c2) / 1440` for a 10-dimensional table.
pub fn todd_polynomial_dim10(t: &ChernTable) -> Option<BigRational> {
    let get = |e: [u32; 5]| t.get(&e).cloned();
    let c1c4 = get([1, 0, 0, 1, 0])?;
    let c1sq_c3 = get([2, 0, 1, 0, 0])?;
    let c1_c2sq = get([1, 2, 0, 0, 0])?;
    let c1cu_c2 = get([3, 1, 0, 0, 0])?;
    let three = BigRational::from_integer(3.into());
    Some((-c1c4 + c1sq_c3 + three * c1_c2sq - c1cu_c2) / BigRational::from_integer(1440.into()))
}

pub fn check_todd_identity(d: &FixedPointDataset) -> CheckResult {
    check_todd_identity_with(d, &genus::chi_vector(d), &localization::chern_table(d))
}

fn check_todd_identity_with(d: &FixedPointDataset, chi: &ChiVector, t: &ChernTable) -> CheckResult {
    if d.n() != 5 {
        return CheckResult::skipped("todd_identity", refs::TODD, "applies to dimension 10 only");
    }
    let Some(todd) = chi.values()[0].as_integer() else {
        return CheckResult::skipped("todd_identity", refs::TODD, "chi^0 is not a constant integer");
    };
    let rhs = todd_polynomial_dim10(t).expect("dimension-10 table");
    let lhs = BigRational::from_integer(todd.clone());
    CheckResult::new(
        "todd_identity",
        refs::TODD,
        Status::from_ok(lhs == rhs),
        w(vec![
            ("todd", Value::Int(todd.clone())),
            ("chern_polynomial", Value::Rational(rhs)),
        ]),
    )
}

/// All checks for one dataset, in [`CHECK_NAMES`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub label: String,
    pub n: usize,
    pub fixed_points: usize,
    pub checks: Vec<CheckResult>,
}

impl Certificate {
    pub fn verdict(&self) -> Status {
        Status::from_ok(!self.checks.iter().any(CheckResult::failed))
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.check == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().filter(|c| c.failed()).map(|c| c.check)
    }

    pub fn verdict_line(&self) -> String {
        format!("verdict: {} ({})", self.verdict().as_str().to_uppercase(), self.label)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "certificate for {} (n = {}, dimension {}, {} fixed points)",
            self.label,
            self.n,
            2 * self.n,
            self.fixed_points
        )
        .unwrap();
        for c in &self.checks {
            writeln!(s, "  [{:<7}] {:<15} {}", c.status.as_str().to_uppercase(), c.check, c.paper_ref).unwrap();
            for (k, v) in &c.witness {
                writeln!(s, "              {k} = {v}").unwrap();
            }
        }
        writeln!(s, "{}", self.verdict_line()).unwrap();
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Certificate", 5)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("fixed_points", &self.fixed_points)?;
        st.serialize_field("checks", &self.checks)?;
        st.serialize_field("verdict", &self.verdict())?;
        st.end()
    }
}

/// Runs every check; failures are recorded, never short-circuited.
pub fn certify(d: &FixedPointDataset) -> Certificate {
    certify_with_warnings(d, &[])
}

pub fn certify_parsed(p: &ParsedDataset) -> Certificate {
    certify_with_warnings(&p.dataset, &p.warnings)
}

fn certify_with_warnings(d: &FixedPointDataset, warnings: &[String]) -> Certificate {
    let (chi, table) = rayon::join(|| genus::chi_vector(d), || localization::chern_table(d));
    let checks = vec![
        check_validation(d, warnings),
        check_parity(d),
        check_few_points(d),
        check_chi_structure_with(d, &chi),
        check_consecutive(&d.n_profile()),
        check_chi_constancy_with(&chi),
        check_vanishing(d),
        check_integrality(&table),
        check_gs(d),
        check_pairing(d),
        check_c1sq(d),
        check_todd_identity_with(d, &chi, &table),
    ];
    debug_assert!(checks.iter().map(|c| c.check).eq(CHECK_NAMES));
    Certificate {
        label: d.display_label().to_string(),
        n: d.n(),
        fixed_points: d.len(),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ds(n: usize, pts: Vec<Vec<i64>>) -> FixedPointDataset {
        FixedPointDataset::new(n, pts, None).unwrap()
    }

    #[test]
    fn parity_examples() {
        let four = ds(5, vec![vec![1; 5]; 4]);
        assert_eq!(check_parity(&four).status, Status::Pass);
        let three = ds(5, vec![vec![1; 5]; 3]);
        assert_eq!(check_parity(&three).status, Status::Fail);
        let dim8 = ds(4, vec![vec![1; 4]; 3]);
        assert_eq!(check_parity(&dim8).status, Status::Pass);
    }

    #[test]
    fn few_points_examples() {
        assert_eq!(check_few_points(&fixtures::s6()).status, Status::Pass);
        let two = ds(5, vec![vec![1; 5], vec![-1; 5]]);
        assert_eq!(check_few_points(&two).status, Status::Fail);
        assert_eq!(check_few_points(&fixtures::s2_x_s6()).status, Status::Skipped);
    }

    #[test]
    fn consecutive_examples() {
        assert!(check_consecutive(&NProfile::new(vec![1; 6])).passed());
        assert!(check_consecutive(&NProfile::new(vec![1, 0, 1])).failed());
        assert!(check_consecutive(&NProfile::new(vec![0, 1, 1, 0])).passed());
    }

    #[test]
    fn pairing_examples() {
        assert!(check_pairing(&fixtures::s2_x_s6()).passed());
        // sums 1, 2, -1, -2
        let bad = ds(4, vec![vec![1, 1, 1, -2], vec![1, 1, 1, -1], vec![-1, -1, -1, 2], vec![-1, -1, -1, 1]]);
        let a = PairingAnalysis::of(&bad).unwrap();
        assert_eq!(a.sums, vec![1, 2, -1, -2]);
        assert!(a.sum_pairing.is_none());
        assert!(check_pairing(&bad).failed());
        // all sums zero, reciprocal products 1/9 + 1/9 + 1/9 - 1/3 = 0
        let zero = ds(4, vec![vec![-3, -1, 1, 3], vec![-3, -1, 1, 3], vec![-3, -1, 1, 3], vec![-3, 1, 1, 1]]);
        let a = PairingAnalysis::of(&zero).unwrap();
        assert!(a.zero_sum_case, "{a:?}");
        assert!(check_pairing(&zero).passed());
        assert_eq!(check_pairing(&fixtures::cp5()).status, Status::Skipped);
    }

    #[test]
    fn todd_identity_examples() {
        let c = check_todd_identity(&fixtures::cp5());
        assert!(c.passed());
        assert_eq!(c.witness[1].1, Value::Rational(BigRational::from_integer(1.into())));
        assert!(check_todd_identity(&fixtures::cp2_x_s6()).passed());
        assert_eq!(check_todd_identity(&fixtures::cp2()).status, Status::Skipped);
    }

    #[test]
    fn certify_examples() {
        let c = certify(&fixtures::cp5());
        assert!(c.passed(), "{}", c.to_text());
        assert!(c.checks.iter().all(|x| x.status != Status::Fail));

        let c = certify(&fixtures::s6());
        assert!(c.passed());
        assert_eq!(c.check("pairing").unwrap().status, Status::Skipped);
        assert_eq!(c.check("todd_identity").unwrap().status, Status::Skipped);

        let single = ds(5, vec![vec![1, 2, 3, 4, 5]]);
        let c = certify(&single);
        let failed: Vec<_> = c.failed_checks().collect();
        assert!(failed.contains(&"few_points"));
        assert!(failed.contains(&"chi_constancy"));
        assert!(!c.passed());
    }

    #[test]
    fn certificate_lists_every_check_once() {
        let c = certify(&fixtures::cp2());
        let names: Vec<_> = c.checks.iter().map(|x| x.check).collect();
        assert_eq!(names, CHECK_NAMES);
        for x in &c.checks {
            if x.status == Status::Skipped {
                assert_eq!(x.witness[0].0, "precondition");
            }
        }
        let j = c.to_json();
        assert_eq!(j["checks"].as_array().unwrap().len(), 12);
        for x in j["checks"].as_array().unwrap() {
            for key in ["check", "status", "witness", "paper_ref"] {
                assert!(x.get(key).is_some(), "missing {key}");
            }
        }
        assert_eq!(j["verdict"], "pass");
    }
}
