//! Binomials and lexicographic ranking of `k`-subsets of `0..n`.

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at every step: acc * (n - i) is divisible by (i + 1)
        match acc.checked_mul((n - i) as u128) {
            Some(v) => acc = v / (i + 1) as u128,
            None => return u128::MAX,
        }
    }
    acc
}

/// Number of subsets of `0..n` with size in `lo..=n`.
pub fn subsets_from(n: usize, lo: usize) -> u128 {
    (lo..=n).fold(0u128, |acc, s| acc.saturating_add(binomial(n, s)))
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
pub fn unrank(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut c = 0;
    for i in 0..k {
        loop {
            let below = binomial(n - 1 - c, k - 1 - i);
            if rank < below {
                break;
            }
            rank -= below;
            c += 1;
        }
        out.push(c);
        c += 1;
    }
    out
}

/// Advances to the lexicographic successor; false after the last subset.
pub fn next_subset(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let Some(i) = (0..k).rev().find(|&i| comb[i] < n - k + i) else {
        return false;
    };
    comb[i] += 1;
    for j in i + 1..k {
        comb[j] = comb[j - 1] + 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 6), 84);
        assert_eq!(binomial(16, 13), 560);
        assert_eq!(binomial(25, 10), 3_268_760);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(100, 50), 100_891_344_545_564_193_334_812_497_256);
        assert_eq!(binomial(200, 100), u128::MAX);
    }

    #[test]
    fn unrank_matches_successor_walk() {
        for (n, k) in [(6, 3), (5, 0), (5, 5), (7, 1)] {
            let mut comb = unrank(n, k, 0);
            let mut rank = 0u128;
            loop {
                assert_eq!(unrank(n, k, rank), comb);
                rank += 1;
                if !next_subset(&mut comb, n) {
                    break;
                }
            }
            assert_eq!(rank, binomial(n, k));
        }
    }

    #[test]
    fn range_sums() {
        assert_eq!(subsets_from(16, 13), 697);
        assert_eq!(subsets_from(9, 0), 512);
    }
}
