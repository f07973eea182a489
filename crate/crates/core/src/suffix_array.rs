//! Suffix array by prefix doubling, and Kasai's LCP array.

use alloc::vec;
use alloc::vec::Vec;

/// Suffix array of `text` in `O(n log n)`: each round radix-sorts suffixes by
/// the rank pair of their first `2h` symbols, stopping once all ranks differ.
pub fn suffix_array(text: &[u32]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }

    // Initial ranks: dense codes of the symbols.
    let mut symbols: Vec<u32> = text.to_vec();
    symbols.sort_unstable();
    symbols.dedup();
    let mut rank: Vec<u32> = text
        .iter()
        .map(|s| symbols.binary_search(s).unwrap() as u32)
        .collect();
    let mut classes = symbols.len();

    let mut sa: Vec<u32> = (0..n as u32).collect();
    counting_sort(&mut sa, &rank, classes, &mut vec![0u32; n]);

    let mut second = vec![0u32; n];
    let mut next_rank = vec![0u32; n];
    let mut h = 1;
    while classes < n {
        // Order by the rank at i + h: suffixes shorter than h come first.
        let mut fill = 0;
        for i in n - h..n {
            second[fill] = i as u32;
            fill += 1;
        }
        for &s in &sa {
            if s as usize >= h {
                second[fill] = s - h as u32;
                fill += 1;
            }
        }
        // Stable sort by first rank.
        core::mem::swap(&mut sa, &mut second);
        counting_sort(&mut sa, &rank, classes, &mut second);

        let key = |i: usize| (rank[i], rank.get(i + h).map_or(0, |&r| r + 1));
        next_rank[sa[0] as usize] = 0;
        let mut class = 0u32;
        for w in 1..n {
            if key(sa[w] as usize) != key(sa[w - 1] as usize) {
                class += 1;
            }
            next_rank[sa[w] as usize] = class;
        }
        core::mem::swap(&mut rank, &mut next_rank);
        classes = class as usize + 1;
        h *= 2;
    }
    sa
}

/// Stable counting sort of `order` by `key[order[i]]`; `scratch` has the same
/// length as `order`.
fn counting_sort(order: &mut [u32], key: &[u32], classes: usize, scratch: &mut [u32]) {
    let mut start = vec![0usize; classes + 1];
    for &i in order.iter() {
        start[key[i as usize] as usize + 1] += 1;
    }
    for c in 1..=classes {
        start[c] += start[c - 1];
    }
    for &i in order.iter() {
        let slot = &mut start[key[i as usize] as usize];
        scratch[*slot] = i;
        *slot += 1;
    }
    order.copy_from_slice(scratch);
}

/// `lcp[r]` = common prefix length of suffixes `sa[r - 1]` and `sa[r]`;
/// `lcp[0] = 0`.
pub fn lcp_array(text: &[u32], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut rank = vec![0u32; n];
    for (r, &s) in sa.iter().enumerate() {
        rank[s as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
