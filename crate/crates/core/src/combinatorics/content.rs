use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A finite multiset of integers, serialized as `[[value, multiplicity], ...]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, u32)>", into = "Vec<(i64, u32)>")]
pub struct ContentMultiset {
    counts: BTreeMap<i64, u32>,
}

impl ContentMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, value: i64) {
        *self.counts.entry(value).or_insert(0) += 1;
    }

    pub fn count(&self, value: i64) -> u32 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().map(|&c| u64::from(c)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(value, multiplicity)` in increasing value order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, c) in other.iter() {
            *out.counts.entry(v).or_insert(0) += c;
        }
        out
    }
}

impl FromIterator<i64> for ContentMultiset {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut out = Self::new();
        for v in iter {
            out.insert(v);
        }
        out
    }
}

impl TryFrom<Vec<(i64, u32)>> for ContentMultiset {
    type Error = Error;
    fn try_from(pairs: Vec<(i64, u32)>) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for (v, c) in pairs {
            if c == 0 {
                return Err(Error::Malformed(format!("zero multiplicity for {v}")));
            }
            *counts.entry(v).or_insert(0) += c;
        }
        Ok(Self { counts })
    }
}

impl From<ContentMultiset> for Vec<(i64, u32)> {
    fn from(c: ContentMultiset) -> Self {
        c.counts.into_iter().collect()
    }
}

impl fmt::Debug for ContentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.counts.iter()).finish()
    }
}

/// A tuple of partitions with one integer charge per component.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct DPartition {
    pub components: Vec<Partition>,
    pub charges: Vec<i64>,
}

impl DPartition {
    pub fn new(components: Vec<Partition>, charges: Vec<i64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Malformed(
                "a d-partition needs d >= 1 components".into(),
            ));
        }
        if components.len() != charges.len() {
            return Err(Error::Malformed(format!(
                "{} components but {} charges",
                components.len(),
                charges.len()
            )));
        }
        Ok(Self {
            components,
            charges,
        })
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    /// Multiset of cell fillings `column - row + r_s` over all components.
    pub fn cell_content(&self) -> ContentMultiset {
        self.components
            .iter()
            .zip(&self.charges)
            .flat_map(|(p, &c)| p.contents(c))
            .collect()
    }

    /// The sl_infinity weight `sum Lambda_{r_s} - sum c_j alpha_j`.
    pub fn weight(&self) -> Weight {
        Weight::new(self.charges.clone(), self.cell_content())
    }
}

impl fmt::Display for DPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "({})", comps.join(","))
    }
}

/// A weight `Lambda - sum_j c_j alpha_j` of the Fock space.
///
/// `highest` lists the fundamental-weight indices making up `Lambda`
/// (sorted); `depth` holds the nonzero simple-root coefficients `c_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Weight {
    pub highest: Vec<i64>,
    pub depth: ContentMultiset,
}

impl Weight {
    pub fn new(mut highest: Vec<i64>, depth: ContentMultiset) -> Self {
        highest.sort_unstable();
        Self { highest, depth }
    }

    pub fn coefficient(&self, j: i64) -> u32 {
        self.depth.count(j)
    }

    /// Exponent of `v` by which `t_j` acts on vectors of this weight.
    pub fn t_exponent(&self, j: i64) -> i64 {
        let fund = |i: i64| self.highest.iter().filter(|&&h| h == i).count() as i64;
        let c = |i: i64| i64::from(self.depth.count(i));
        // <h_j, Lambda_i> = delta_ij, <h_j, alpha_i> = 2 delta_ij - delta_{i,j+-1}
        fund(j) - 2 * c(j) + c(j - 1) + c(j + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn empty_dpartition_has_empty_content() {
        let dp = DPartition::new(vec![Partition::empty(); 3], vec![0, 4, -1]).unwrap();
        assert!(dp.cell_content().is_empty());
        assert_eq!(dp.weight().depth, ContentMultiset::new());
    }

    #[test]
    fn single_cell_is_its_charge() {
        let dp = DPartition::new(vec![Partition::empty(), part(&[1])], vec![3, 7]).unwrap();
        assert_eq!(dp.cell_content(), [7].into_iter().collect());
    }

    #[test]
    fn filled_diagrams_example() {
        // top row beads (1,2,3,6,8) over (2,3,5): k + r = 5, k = 3
        let dp = DPartition::new(vec![part(&[2, 3]), part(&[1, 1, 2])], vec![5, 3]).unwrap();
        let expected: ContentMultiset = [4, 5, 5, 6, 7, 1, 2, 3, 4].into_iter().collect();
        assert_eq!(dp.cell_content(), expected);
    }

    #[test]
    fn arity_mismatch() {
        assert!(DPartition::new(vec![Partition::empty()], vec![0, 1]).is_err());
        assert!(DPartition::new(vec![], vec![]).is_err());
    }

    #[test]
    fn t_exponent_of_highest_weight() {
        let w = Weight::new(vec![1, 0], ContentMultiset::new());
        assert_eq!(w.t_exponent(0), 1);
        assert_eq!(w.t_exponent(1), 1);
        assert_eq!(w.t_exponent(2), 0);
    }
}
