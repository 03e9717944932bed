//! Fixed-point data: the weights of the circle action at each isolated fixed
//! point, the on-disk dataset format, and the negative-weight profile.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DatasetError {
    #[error("malformed dataset: {0}")]
    Malformed(String),
    #[error("half-dimension n must be positive")]
    ZeroDimension,
    #[error("dataset has no fixed points")]
    EmptyPoints,
    #[error("point {point} has {found} weights, expected {expected}")]
    Ragged {
        point: String,
        expected: usize,
        found: usize,
    },
    #[error("point {point} has a zero weight at position {position}")]
    ZeroWeight { point: String, position: usize },
}

/// An isolated fixed point and the weights of the circle action on its
/// tangent space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub id: String,
    pub weights: Vec<i64>,
}

impl FixedPoint {
    pub fn new(id: impl Into<String>, weights: Vec<i64>) -> Self {
        FixedPoint {
            id: id.into(),
            weights,
        }
    }

    /// Number of strictly negative weights.
    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w < 0).count()
    }

    pub fn weight_sum(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn weight_product(&self) -> BigInt {
        self.weights
            .iter()
            .fold(BigInt::one(), |acc, &w| acc * BigInt::from(w))
    }
}

/// Fixed-point data of a circle action on a `2n`-dimensional almost complex
/// manifold with isolated fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointDataset {
    n: usize,
    points: Vec<FixedPoint>,
    label: Option<String>,
}

impl FixedPointDataset {
    /// Validates and builds a dataset; point ids default to `p0, p1, ...`.
    pub fn new(
        n: usize,
        weights: Vec<Vec<i64>>,
        label: Option<String>,
    ) -> Result<Self, DatasetError> {
        let points = weights
            .into_iter()
            .enumerate()
            .map(|(k, w)| FixedPoint::new(format!("p{k}"), w))
            .collect();
        Self::from_points(n, points, label)
    }

    pub fn from_points(
        n: usize,
        points: Vec<FixedPoint>,
        label: Option<String>,
    ) -> Result<Self, DatasetError> {
        if n == 0 {
            return Err(DatasetError::ZeroDimension);
        }
        if points.is_empty() {
            return Err(DatasetError::EmptyPoints);
        }
        for p in &points {
            if p.weights.len() != n {
                return Err(DatasetError::Ragged {
                    point: p.id.clone(),
                    expected: n,
                    found: p.weights.len(),
                });
            }
            if let Some(position) = p.weights.iter().position(|&w| w == 0) {
                return Err(DatasetError::ZeroWeight {
                    point: p.id.clone(),
                    position,
                });
            }
        }
        Ok(FixedPointDataset { n, points, label })
    }

    /// Half of the real dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn real_dimension(&self) -> usize {
        2 * self.n
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn display_label(&self) -> &str {
        self.label.as_deref().unwrap_or("(unlabelled)")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn weight_vectors(&self) -> Vec<Vec<i64>> {
        self.points.iter().map(|p| p.weights.clone()).collect()
    }

    pub fn n_profile(&self) -> NProfile {
        let mut counts = vec![0; self.n + 1];
        for p in &self.points {
            counts[p.negative_count()] += 1;
        }
        NProfile { counts }
    }

    /// Serializes to the dataset file format.
    pub fn to_json(&self) -> String {
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(k, p)| {
                if p.id == format!("p{k}") {
                    RawPoint::Weights(p.weights.clone())
                } else {
                    RawPoint::Named {
                        id: Some(p.id.clone()),
                        weights: p.weights.clone(),
                    }
                }
            })
            .collect();
        let raw = RawDataset {
            n: self.n as u64,
            points,
            label: self.label.clone(),
            extra: BTreeMap::new(),
        };
        let mut s = serde_json::to_string_pretty(&raw).expect("dataset serializes");
        s.push('\n');
        s
    }
}

/// `(N_0, ..., N_n)`: how many fixed points have exactly `i` negative weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NProfile {
    counts: Vec<usize>,
}

impl NProfile {
    pub fn new(counts: Vec<usize>) -> Self {
        NProfile { counts }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// The `n` of the manifold this profile belongs to.
    pub fn n(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }

    /// Some `i` with `N_i != 0` and `N_{i+1} != 0`.
    pub fn consecutive_nonzero(&self) -> Option<usize> {
        self.counts
            .windows(2)
            .position(|w| w[0] != 0 && w[1] != 0)
    }

    pub fn reversed(&self) -> NProfile {
        NProfile {
            counts: self.counts.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Display for NProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct RawDataset {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    n: u64,
    points: Vec<RawPoint>,
    #[serde(flatten, skip_serializing)]
    extra: BTreeMap<String, serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawPoint {
    Weights(Vec<i64>),
    Named {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        id: Option<String>,
        weights: Vec<i64>,
    },
}

/// A parsed dataset together with non-fatal notes about the input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDataset {
    pub dataset: FixedPointDataset,
    pub warnings: Vec<String>,
}

/// Parses a JSON dataset document.
///
/// ```text
/// {"label": "CP2", "n": 2, "points": [[1, 2], [-1, 1], [-2, -1]]}
/// ```
///
/// A point may also be written as `{"id": "north", "weights": [...]}`.
/// Unknown top-level fields are ignored and reported as warnings.
pub fn parse_dataset(text: &str) -> Result<ParsedDataset, DatasetError> {
    let raw: RawDataset =
        serde_json::from_str(text).map_err(|e| DatasetError::Malformed(e.to_string()))?;
    let warnings = raw
        .extra
        .keys()
        .map(|k| format!("unknown field `{k}` ignored"))
        .collect();
    let n = usize::try_from(raw.n).map_err(|_| DatasetError::Malformed("n out of range".into()))?;
    let points = raw
        .points
        .into_iter()
        .enumerate()
        .map(|(k, p)| match p {
            RawPoint::Weights(w) => FixedPoint::new(format!("p{k}"), w),
            RawPoint::Named { id, weights } => {
                FixedPoint::new(id.unwrap_or_else(|| format!("p{k}")), weights)
            }
        })
        .collect();
    let dataset = FixedPointDataset::from_points(n, points, raw.label)?;
    Ok(ParsedDataset { dataset, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_cp2() {
        let d = parse_dataset(r#"{"n":2,"points":[[1,2],[-1,1],[-2,-1]]}"#).unwrap();
        assert!(d.warnings.is_empty());
        assert_eq!(d.dataset.len(), 3);
        assert_eq!(d.dataset.n_profile().counts(), &[1, 1, 1]);
    }

    #[test]
    fn parse_s6() {
        let d = parse_dataset(r#"{"n":3,"points":[[1,2,-3],[-1,-2,3]]}"#).unwrap();
        assert_eq!(d.dataset.len(), 2);
        assert_eq!(d.dataset.n_profile().counts(), &[0, 1, 1, 0]);
    }

    #[test]
    fn parse_rejects_bad_documents() {
        assert_eq!(
            parse_dataset(r#"{"n":1,"points":[[1],[0]]}"#).unwrap_err(),
            DatasetError::ZeroWeight {
                point: "p1".into(),
                position: 0
            }
        );
        assert!(matches!(
            parse_dataset(r#"{"n":2,"points":[[1,2],[1]]}"#),
            Err(DatasetError::Ragged { found: 1, .. })
        ));
        assert_eq!(
            parse_dataset(r#"{"n":2,"points":[]}"#).unwrap_err(),
            DatasetError::EmptyPoints
        );
        assert_eq!(
            parse_dataset(r#"{"n":0,"points":[[]]}"#).unwrap_err(),
            DatasetError::ZeroDimension
        );
        assert!(matches!(
            parse_dataset("{\"n\": 2, \"points\": [[1, 2.5]]}"),
            Err(DatasetError::Malformed(_))
        ));
        assert!(matches!(parse_dataset("not json"), Err(DatasetError::Malformed(_))));
    }

    #[test]
    fn unknown_fields_warn() {
        let d = parse_dataset(r#"{"n":1,"points":[[1],[-1]],"comment":"S2","x":1}"#).unwrap();
        assert_eq!(
            d.warnings,
            vec!["unknown field `comment` ignored", "unknown field `x` ignored"]
        );
    }

    #[test]
    fn named_points_roundtrip() {
        let text = r#"{"label":"S2","n":1,"points":[{"id":"north","weights":[3]},[-3]]}"#;
        let d = parse_dataset(text).unwrap().dataset;
        assert_eq!(d.points()[0].id, "north");
        assert_eq!(d.points()[1].id, "p1");
        assert_eq!(parse_dataset(&d.to_json()).unwrap().dataset, d);
    }

    #[test]
    fn point_statistics() {
        assert_eq!(FixedPoint::new("a", vec![1, 2]).negative_count(), 0);
        assert_eq!(FixedPoint::new("a", vec![-1, 1]).negative_count(), 1);
        assert_eq!(FixedPoint::new("a", vec![-2, -1]).negative_count(), 2);

        let p = FixedPoint::new("a", vec![1, 2, -3]);
        assert_eq!((p.weight_sum(), p.weight_product()), (0, BigInt::from(-6)));
        let p = FixedPoint::new("a", vec![1, 2]);
        assert_eq!((p.weight_sum(), p.weight_product()), (3, BigInt::from(2)));
        let p = FixedPoint::new("a", vec![-1, -2, 3]);
        assert_eq!((p.weight_sum(), p.weight_product()), (0, BigInt::from(6)));
    }

    #[test]
    fn profile_helpers() {
        let p = NProfile::new(vec![1, 0, 1]);
        assert!(p.is_symmetric());
        assert_eq!(p.consecutive_nonzero(), None);
        assert_eq!(NProfile::new(vec![0, 1, 1, 0]).consecutive_nonzero(), Some(1));
        assert_eq!(NProfile::new(vec![2, 1, 0]).reversed().counts(), &[0, 1, 2]);
        assert_eq!(p.to_string(), "(1,0,1)");
    }
}
