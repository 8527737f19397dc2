use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::words::{necklaces, Necklace};

/// Zero positions `p` of the representative around which the word reads as
/// `b̄_k..b̄_1 0 b_1..b_k`. Each one is the lower end of a horizontal edge.
pub fn doubly_horizontal_witnesses(c: &Necklace) -> Vec<usize> {
    let w = c.rep();
    let n = w.len();
    let k = n / 2;
    (0..n)
        .filter(|&p| {
            w.bit(p) == 0 && (1..=k).all(|i| w.bit((p + i) % n) != w.bit((p + n - i) % n))
        })
        .collect()
}

/// Substrings found strictly between the two witnesses of a doubly
/// horizontal lower necklace, keyed to the least odd `n <= n_max` where
/// they occur. The gap is read forward from the witness whose cyclic
/// distance to the other is at most `k`. Sorted by length, then content.
pub fn feasible_substrings(n_max: usize) -> Vec<(String, usize)> {
    let found: Vec<(String, usize)> = (3..=n_max)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|n| {
            let k = n / 2;
            necklaces(n, k).into_iter().filter_map(move |c| {
                let pos = doubly_horizontal_witnesses(&c);
                if pos.len() != 2 {
                    return None;
                }
                let (mut i, mut j) = (pos[0], pos[1]);
                if (j + n - i) % n > k {
                    std::mem::swap(&mut i, &mut j);
                }
                let gap = (j + n - i) % n;
                let w = c.rep();
                let sub: String = (1..gap)
                    .map(|t| if w.bit((i + t) % n) == 1 { '1' } else { '0' })
                    .collect();
                Some((sub, n))
            })
        })
        .collect();

    let mut least: BTreeMap<(usize, String), usize> = BTreeMap::new();
    for (sub, n) in found {
        let slot = least.entry((sub.len(), sub)).or_insert(n);
        *slot = (*slot).min(n);
    }
    least.into_iter().map(|((_, s), n)| (s, n)).collect()
}
