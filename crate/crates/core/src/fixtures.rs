//! Built-in example datasets from standard circle actions.
//!
//! None of these are taken on faith: the test suite certifies every one.

use crate::model::FixedPointDataset;

/// Linear action on `CP^n` with distinct integer parameters `a_0 < ... < a_n`;
/// the fixed point `k` carries the weights `a_j - a_k` for `j != k`.
pub fn complex_projective(n: usize) -> FixedPointDataset {
    let weights = (0..=n as i64)
        .map(|k| (0..=n as i64).filter(|&j| j != k).map(|j| j - k).collect())
        .collect();
    FixedPointDataset::new(n, weights, Some(format!("CP{n}"))).expect("valid CP^n data")
}

/// Rotation of `S^2` with speed `w`: weights `w` and `-w` at the poles.
pub fn sphere2(w: i64) -> FixedPointDataset {
    FixedPointDataset::new(1, vec![vec![w], vec![-w]], Some("S2".into())).expect("valid S2 data")
}

/// The two fixed points of a torus-generic circle inside `G_2` acting on `S^6`.
pub fn sphere6() -> FixedPointDataset {
    FixedPointDataset::new(3, vec![vec![1, 2, -3], vec![-1, -2, 3]], Some("S6".into()))
        .expect("valid S6 data")
}

/// Diagonal action on a product: fixed points are pairs, weights concatenate.
pub fn product(a: &FixedPointDataset, b: &FixedPointDataset) -> FixedPointDataset {
    let weights = a
        .points()
        .iter()
        .flat_map(|p| {
            b.points()
                .iter()
                .map(move |q| p.weights.iter().chain(&q.weights).copied().collect())
        })
        .collect();
    let label = format!("{}x{}", a.display_label(), b.display_label());
    FixedPointDataset::new(a.n() + b.n(), weights, Some(label)).expect("product of valid data")
}

pub fn cp2() -> FixedPointDataset {
    complex_projective(2)
}

pub fn cp5() -> FixedPointDataset {
    complex_projective(5)
}

pub fn s6() -> FixedPointDataset {
    sphere6()
}

/// `S^2 x S^6` with the `S^2` factor rotating at speed 7: four fixed points in
/// dimension 8 with weight sums `7, 7, -7, -7`.
pub fn s2_x_s6() -> FixedPointDataset {
    product(&sphere2(7), &sphere6())
}

pub fn cp2_x_s6() -> FixedPointDataset {
    product(&cp2(), &sphere6())
}

/// Every shipped fixture with its file stem.
pub fn all() -> Vec<(&'static str, FixedPointDataset)> {
    vec![
        ("cp2", cp2()),
        ("cp5", cp5()),
        ("s6", s6()),
        ("s2xs6", s2_x_s6()),
        ("cp2xs6", cp2_x_s6()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(cp2().weight_vectors(), vec![vec![1, 2], vec![-1, 1], vec![-2, -1]]);
        assert_eq!(cp5().len(), 6);
        assert_eq!(cp5().n_profile().counts(), &[1; 6]);
        let s = s2_x_s6();
        assert_eq!((s.n(), s.len()), (4, 4));
        assert_eq!(
            s.points().iter().map(|p| p.weight_sum()).collect::<Vec<_>>(),
            vec![7, 7, -7, -7]
        );
        assert_eq!(s.label(), Some("S2xS6"));
        let c = cp2_x_s6();
        assert_eq!((c.n(), c.len()), (5, 6));
    }
}
