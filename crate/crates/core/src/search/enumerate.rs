//! Enumeration of index sets in search order.

use crate::near_zero::FiniteIndexSet;

/// Lexicographic `r`-combinations of `1..=n`.
struct Combinations {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Combinations {
    fn new(n: u32, r: usize) -> Self {
        let current = (r as u32 <= n).then(|| (1..=r as u32).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let r = out.len();
        let mut next = out.clone();
        // rightmost slot that can still move up
        let mut i = r;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (r - 1 - i) as u32 {
                next[i] += 1;
                for j in i + 1..r {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every nonempty `F ⊆ [1, max_index]` with `|F| <= max_size`, ordered by
/// largest element, then size, then lexicographically. This is the order
/// of [`FiniteIndexSet`]'s `Ord` impl.
pub fn index_sets(max_index: u32, max_size: usize) -> impl Iterator<Item = FiniteIndexSet> {
    (1..=max_index).flat_map(move |top| {
        (1..=max_size.min(top as usize)).flat_map(move |size| {
            Combinations::new(top - 1, size - 1).map(move |mut prefix| {
                prefix.push(top);
                FiniteIndexSet::new(prefix).expect("nonempty positive")
            })
        })
    })
}

/// Number of sets produced by [`index_sets`].
pub fn index_set_count(max_index: u32, max_size: usize) -> u128 {
    let mut total = 0u128;
    for top in 1..=max_index as u128 {
        // sum_{s < max_size} C(top - 1, s)
        let mut c = 1u128;
        for s in 0..(max_size as u128).min(top) {
            total += c;
            c = c * (top - 1 - s) / (s + 1);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_matches_ord_and_is_complete() {
        for n in 1..=8u32 {
            for size in 1..=n as usize {
                let sets: Vec<_> = index_sets(n, size).collect();
                assert!(sets.windows(2).all(|w| w[0] < w[1]));
                let brute = (1u32..(1 << n))
                    .filter(|m| m.count_ones() as usize <= size)
                    .count();
                assert_eq!(sets.len(), brute);
                assert_eq!(index_set_count(n, size), brute as u128);
            }
        }
    }

    #[test]
    fn first_few() {
        let v: Vec<Vec<u32>> = index_sets(3, 3).map(|s| s.to_vec()).collect();
        assert_eq!(
            v,
            vec![
                vec![1],
                vec![2],
                vec![1, 2],
                vec![3],
                vec![1, 3],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
    }

    #[test]
    fn combinations_of_empty_pool() {
        assert_eq!(
            Combinations::new(0, 0).collect::<Vec<_>>(),
            vec![Vec::<u32>::new()]
        );
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }
}
