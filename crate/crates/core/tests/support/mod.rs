//! Shared oracles for the integration suites. These deliberately take
//! different routes than the production code paths they check.

use std::collections::HashMap;

use sdepth_core::stanley::CharPoset;

/// Exhaustive Stanley depth: enumerate every interval partition of the
/// poset and maximize the minimum top popcount. Exponential; callers
/// keep posets at 12 elements or fewer.
pub fn sdepth_all_partitions(poset: &CharPoset) -> usize {
    assert!(poset.len() <= 12, "oracle is exponential in the poset size");
    let elems = poset.elements();
    let index: HashMap<u32, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let full: u64 = (1u64 << elems.len()) - 1;
    let mut memo: HashMap<u64, usize> = HashMap::new();
    best(elems, &index, full, poset.ring_size(), &mut memo)
}

fn best(
    elems: &[u32],
    index: &HashMap<u32, usize>,
    uncovered: u64,
    n: usize,
    memo: &mut HashMap<u64, usize>,
) -> usize {
    if uncovered == 0 {
        return n; // empty partition: no interval constrains the minimum
    }
    if let Some(&v) = memo.get(&uncovered) {
        return v;
    }
    let e = elems[uncovered.trailing_zeros() as usize];
    let mut result = 0;
    // all intervals [c, d] with c ⊆ e ⊆ d and the whole cube uncovered
    for (ci, &c) in elems.iter().enumerate() {
        if c & e != c || uncovered & (1u64 << ci) == 0 {
            continue;
        }
        for &d in elems.iter() {
            if d & e != e || c & d != c {
                continue;
            }
            let Some(bits) = cube_bits(index, c, d, uncovered) else {
                continue;
            };
            let sub = best(elems, index, uncovered & !bits, n, memo);
            result = result.max(sub.min(d.count_ones() as usize));
        }
    }
    memo.insert(uncovered, result);
    result
}

fn cube_bits(index: &HashMap<u32, usize>, c: u32, d: u32, uncovered: u64) -> Option<u64> {
    let diff = d ^ c;
    let mut bits = 0u64;
    let mut s = diff;
    loop {
        let &ei = index.get(&(c | s))?;
        if uncovered & (1u64 << ei) == 0 {
            return None;
        }
        bits |= 1u64 << ei;
        if s == 0 {
            return Some(bits);
        }
        s = (s - 1) & diff;
    }
}
