/// Calls `f` on every `k`-subset of `0..n`, as ascending index slices in
/// lexicographic order.
pub(crate) fn for_each_subset<F: FnMut(&[usize])>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance the rightmost index that still has room
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[pos] += 1;
        for j in pos + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for n in 0..7 {
            for k in 0..=n + 1 {
                let mut c = 0u64;
                for_each_subset(n, k, |_| c += 1);
                let expect = if k > n {
                    0
                } else {
                    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
                };
                assert_eq!(c, expect, "C({n},{k})");
            }
        }
    }

    #[test]
    fn order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_subset(4, 2, |s| seen.push(s.to_vec()));
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
    }
}
