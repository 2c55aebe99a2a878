use super::partition::{partitions_of, Partition};
use super::symbol::{Bipartition, Symbol};
use crate::error::Result;

/// All ordered pairs `(lambda, mu)` with `|lambda| + |mu| = m`, sorted by
/// `(|lambda|, lambda, mu)`.
pub fn enumerate_bipartitions(m: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in 0..=m {
        let bottoms = partitions_of(m - a);
        for top in partitions_of(a) {
            for bottom in &bottoms {
                out.push((top.clone(), bottom.clone()));
            }
        }
    }
    out
}

/// Bipartitions of `m` carrying charge data `(k, r)`.
pub fn bipartitions(m: u32, charge_k: i64, r: u32) -> Vec<Bipartition> {
    enumerate_bipartitions(m)
        .into_iter()
        .map(|(top, bottom)| Bipartition::new(top, bottom, charge_k, r))
        .collect()
}

/// Standard bipartitions of `m`, in [`enumerate_bipartitions`] order.
pub fn standard_bipartitions(m: u32, charge_k: i64, r: u32) -> Vec<Bipartition> {
    bipartitions(m, charge_k, r)
        .into_iter()
        .filter(Bipartition::is_standard)
        .collect()
}

/// Window wide enough for every bipartition of degree `m`.
pub fn window_for_degree(m: u32, r: u32) -> i64 {
    i64::from(m) + i64::from(r) + 2
}

/// Standard symbols of degree `m`, all drawn through the same window.
pub fn enumerate_standard(m: u32, charge_k: i64, r: u32, window: i64) -> Result<Vec<Symbol>> {
    let mut out = Vec::new();
    for bp in bipartitions(m, charge_k, r) {
        let s = bp.to_symbol(window)?;
        if s.is_standard() {
            out.push(s);
        }
    }
    Ok(out)
}

/// All `d`-tuples of partitions of total size `m`, ordered by the
/// composition `(|lambda^0|, ..., |lambda^{d-1}|)` reversed-lexicographically
/// like [`enumerate_bipartitions`], then by components.
pub fn enumerate_multipartitions(d: usize, m: u32) -> Vec<Vec<Partition>> {
    if d == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in 0..=m {
        let tails = enumerate_multipartitions(d - 1, m - a);
        for head in partitions_of(a) {
            for tail in &tails {
                let mut v = Vec::with_capacity(d);
                v.push(head.clone());
                v.extend(tail.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}
