use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition with parts stored weakly increasing and zero parts
/// dropped, so `(0, 0, 1, 2)` and `(1, 2)` are the same partition.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Parts listed weakly increasing; leading zeros are allowed and dropped.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Malformed(format!(
                "partition parts must be weakly increasing: {parts:?}"
            )));
        }
        Ok(Self {
            parts: parts.into_iter().filter(|&p| p > 0).collect(),
        })
    }

    /// Parts in any order.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Self { parts }
    }

    /// Nonzero parts, weakly increasing.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Parts left-padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let pad = len.saturating_sub(self.parts.len());
        std::iter::repeat_n(0, pad)
            .chain(self.parts.iter().copied())
            .collect()
    }

    /// The part in the row `depth` places below the largest one (`depth = 0`
    /// is the largest part); zero past the end.
    pub fn part_from_top(&self, depth: usize) -> u32 {
        let n = self.parts.len();
        if depth < n {
            self.parts[n - 1 - depth]
        } else {
            0
        }
    }

    /// Charged contents `column - row + charge` of all cells, with rows
    /// counted from the largest part.
    pub fn contents(&self, charge: i64) -> impl Iterator<Item = i64> + '_ {
        self.parts
            .iter()
            .rev()
            .enumerate()
            .flat_map(move |(row, &len)| {
                (0..i64::from(len)).map(move |col| col - row as i64 + charge)
            })
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Self {
        let largest = self.parts.last().copied().unwrap_or(0);
        let cols = (1..=largest)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
            .collect();
        Self::from_unsorted(cols)
    }
}

/// Partitions compare by size first, then lexicographically as left-padded
/// weakly increasing sequences.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.len().max(other.len());
        self.size()
            .cmp(&other.size())
            .then_with(|| self.padded(n).cmp(&other.padded(n)))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `n`, in increasing [`Ord`] order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_unsorted(acc.clone()));
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            acc.push(p);
            go(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_zeros() {
        let p = Partition::new(vec![0, 0, 1, 2]).unwrap();
        assert_eq!(p.parts(), &[1, 2]);
        assert_eq!(p.size(), 3);
        assert_eq!(p.padded(4), vec![0, 0, 1, 2]);
        assert!(Partition::new(vec![2, 1]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn padded_lex_order() {
        let a = Partition::new(vec![0, 0, 2]).unwrap();
        let b = Partition::new(vec![0, 1, 1]).unwrap();
        assert!(a < b);
        let c = Partition::new(vec![0, 2, 2]).unwrap();
        let d = Partition::new(vec![1, 1, 2]).unwrap();
        assert!(c < d);
    }

    #[test]
    fn contents_of_small_shapes() {
        let col = Partition::new(vec![1, 1]).unwrap();
        let mut c: Vec<i64> = col.contents(2).collect();
        c.sort();
        assert_eq!(c, vec![1, 2]);
        let row = Partition::new(vec![2]).unwrap();
        assert_eq!(row.contents(1).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn conjugate_is_involutive() {
        for n in 0..8 {
            for p in partitions_of(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), p.size());
            }
        }
    }
}
