use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::content::{ContentMultiset, DPartition, Weight};
use super::partition::Partition;
use crate::error::{Error, Result};

/// A charged pair of partitions `(lambda, mu)`: `top` sits on charge
/// `k + r`, `bottom` on charge `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Bipartition {
    pub top: Partition,
    pub bottom: Partition,
    #[serde(rename = "k")]
    pub charge_k: i64,
    pub r: u32,
}

impl Bipartition {
    pub fn new(top: Partition, bottom: Partition, charge_k: i64, r: u32) -> Self {
        Self {
            top,
            bottom,
            charge_k,
            r,
        }
    }

    pub fn empty(charge_k: i64, r: u32) -> Self {
        Self::new(Partition::empty(), Partition::empty(), charge_k, r)
    }

    /// `|lambda| + |mu|`.
    pub fn degree(&self) -> u64 {
        self.top.size() + self.bottom.size()
    }

    pub fn top_charge(&self) -> i64 {
        self.charge_k + i64::from(self.r)
    }

    /// Smallest window that holds both partitions.
    pub fn min_window(&self) -> i64 {
        let top = self.top.len().saturating_sub(self.r as usize);
        top.max(self.bottom.len()) as i64
    }

    /// `(max number of nonzero parts) + r + 2`.
    pub fn default_window(&self) -> i64 {
        self.top.len().max(self.bottom.len()) as i64 + i64::from(self.r) + 2
    }

    /// `lambda_i = beta_i - i`, `mu_j = gamma_j - j` over `window` bottom-row
    /// indices.
    pub fn to_symbol(&self, window: i64) -> Result<Symbol> {
        let parts = self.top.len().max(self.bottom.len());
        if window < 0 || window < self.min_window() {
            return Err(Error::WindowTooSmall { window, parts });
        }
        let floor = self.charge_k - window;
        let beads = |p: &Partition, charge: i64| -> Vec<i64> {
            let n = (charge - floor) as usize;
            (0..n)
                .map(|t| {
                    let index = floor + 1 + t as i64;
                    index + i64::from(p.part_from_top(n - 1 - t))
                })
                .collect()
        };
        Ok(Symbol {
            beta: beads(&self.top, self.top_charge()),
            gamma: beads(&self.bottom, self.charge_k),
            floor,
            charge_k: self.charge_k,
            r: self.r,
        })
    }

    pub fn to_symbol_default(&self) -> Symbol {
        self.to_symbol(self.default_window())
            .expect("default window always fits")
    }

    pub fn is_standard(&self) -> bool {
        self.to_symbol_default().is_standard()
    }

    pub fn to_dpartition(&self) -> DPartition {
        DPartition {
            components: vec![self.top.clone(), self.bottom.clone()],
            charges: vec![self.top_charge(), self.charge_k],
        }
    }

    pub fn cell_content(&self) -> ContentMultiset {
        self.to_dpartition().cell_content()
    }

    pub fn weight(&self) -> Weight {
        self.to_dpartition().weight()
    }

    /// The row swap `(lambda, mu) -> (mu, lambda)`, defined for `r = 0`.
    pub fn sharp(&self) -> Option<Self> {
        (self.r == 0).then(|| Self::new(self.bottom.clone(), self.top.clone(), self.charge_k, 0))
    }

    /// Shift of all charges by `by` (the diagram automorphism of `A_infinity`).
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            charge_k: self.charge_k + by,
            ..self.clone()
        }
    }

    /// Label `((lambda padded), (mu padded))` with `mu` padded to `width`
    /// entries and `lambda` to `width + r`.
    pub fn padded_label(&self, width: usize) -> String {
        let join = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        format!(
            "(({}),({}))",
            join(self.top.padded(width + self.r as usize)),
            join(self.bottom.padded(width))
        )
    }

    /// Parses labels such as `((0,1,2),(1,2))` or `((),(3))`; zero parts
    /// are padding and are dropped.
    pub fn parse_label(label: &str, charge_k: i64, r: u32) -> Result<Self> {
        let bad = || Error::Malformed(format!("cannot parse bipartition label {label:?}"));
        let compact: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("((")
            .and_then(|s| s.strip_suffix("))"))
            .ok_or_else(bad)?;
        let (top, bottom) = inner.split_once("),(").ok_or_else(bad)?;
        let parse = |group: &str| -> Result<Partition> {
            if group.is_empty() {
                return Ok(Partition::empty());
            }
            let parts = group
                .split(',')
                .map(|x| x.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
        };
        Ok(Self::new(parse(top)?, parse(bottom)?, charge_k, r))
    }

    /// Narrowest padding width that shows every nonzero part.
    pub fn label_width(&self) -> usize {
        self.bottom
            .len()
            .max(self.top.len().saturating_sub(self.r as usize))
    }
}

/// Ordered by charge data, then `(|lambda|, lambda, mu)`.
impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.charge_k, self.r)
            .cmp(&(other.charge_k, other.r))
            .then_with(|| self.top.cmp(&other.top))
            .then_with(|| self.bottom.cmp(&other.bottom))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.padded_label(self.label_width()))
    }
}

/// A finite window of a semi-infinite two-row symbol.
///
/// `beta` holds the entries of indices `floor+1 ..= k+r`, `gamma` those of
/// `floor+1 ..= k`. Below the window both rows are the identity sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Symbol {
    pub beta: Vec<i64>,
    pub gamma: Vec<i64>,
    pub floor: i64,
    #[serde(rename = "k")]
    pub charge_k: i64,
    pub r: u32,
}

/// Which row of a symbol.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Row {
    Top,
    Bottom,
}

impl Symbol {
    /// Validates a window. Rows must be strictly increasing, lie above
    /// `floor`, and have lengths `k + r - floor` and `k - floor`.
    pub fn new(beta: Vec<i64>, gamma: Vec<i64>, floor: i64, charge_k: i64, r: u32) -> Result<Self> {
        let s = Self {
            beta,
            gamma,
            floor,
            charge_k,
            r,
        };
        s.validate()?;
        Ok(s)
    }

    /// Symbol whose window starts at index 1, as in the finite-rank
    /// pictures: `k = len(gamma)`, `r = len(beta) - len(gamma)`.
    pub fn from_rows(beta: &[i64], gamma: &[i64]) -> Result<Self> {
        if beta.len() < gamma.len() {
            return Err(Error::Malformed("top row shorter than bottom row".into()));
        }
        Self::new(
            beta.to_vec(),
            gamma.to_vec(),
            0,
            gamma.len() as i64,
            (beta.len() - gamma.len()) as u32,
        )
    }

    fn validate(&self) -> Result<()> {
        let window = self.charge_k - self.floor;
        if window < 0
            || self.gamma.len() as i64 != window
            || self.beta.len() as i64 != window + i64::from(self.r)
        {
            return Err(Error::Malformed(format!(
                "row lengths {}/{} do not match floor {} and charges (k={}, r={})",
                self.beta.len(),
                self.gamma.len(),
                self.floor,
                self.charge_k,
                self.r
            )));
        }
        for row in [&self.beta, &self.gamma] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Malformed(format!(
                    "row {row:?} is not strictly increasing"
                )));
            }
            // bead at index i sits at position >= i
            if row
                .iter()
                .enumerate()
                .any(|(t, &x)| x < self.floor + 1 + t as i64)
            {
                return Err(Error::Malformed(format!(
                    "row {row:?} dips below the identity"
                )));
            }
        }
        Ok(())
    }

    pub fn window(&self) -> i64 {
        self.charge_k - self.floor
    }

    pub fn row(&self, row: Row) -> &[i64] {
        match row {
            Row::Top => &self.beta,
            Row::Bottom => &self.gamma,
        }
    }

    pub fn row_mut(&mut self, row: Row) -> &mut Vec<i64> {
        match row {
            Row::Top => &mut self.beta,
            Row::Bottom => &mut self.gamma,
        }
    }

    /// Membership in the semi-infinite row.
    pub fn contains(&self, row: Row, x: i64) -> bool {
        x <= self.floor || self.row(row).binary_search(&x).is_ok()
    }

    /// `lambda_i = beta_i - i`, `mu_j = gamma_j - j`.
    pub fn to_bipartition(&self) -> Bipartition {
        let parts = |row: &[i64]| {
            Partition::from_unsorted(
                row.iter()
                    .enumerate()
                    .map(|(t, &x)| (x - (self.floor + 1 + t as i64)) as u32)
                    .collect(),
            )
        };
        Bipartition::new(parts(&self.beta), parts(&self.gamma), self.charge_k, self.r)
    }

    /// `beta_i <= gamma_i` for every index `i <= k`.
    pub fn is_standard(&self) -> bool {
        self.beta.iter().zip(&self.gamma).all(|(b, g)| b <= g)
    }

    /// `sum beta_i + sum gamma_j` minus the same sums for the identity rows.
    pub fn degree(&self) -> u64 {
        let excess = |row: &[i64]| -> i64 {
            row.iter()
                .enumerate()
                .map(|(t, &x)| x - (self.floor + 1 + t as i64))
                .sum()
        };
        (excess(&self.beta) + excess(&self.gamma)) as u64
    }

    /// Multiset union of the window entries of both rows.
    pub fn content(&self) -> ContentMultiset {
        self.beta.iter().chain(&self.gamma).copied().collect()
    }

    /// Same semi-infinite symbol seen through a window starting at
    /// `new_floor <= floor`.
    pub fn with_floor(&self, new_floor: i64) -> Result<Self> {
        if new_floor > self.floor {
            let bp = self.to_bipartition();
            return bp.to_symbol(self.charge_k - new_floor);
        }
        let pad: Vec<i64> = (new_floor + 1..=self.floor).collect();
        let extend = |row: &[i64]| pad.iter().chain(row).copied().collect::<Vec<_>>();
        Ok(Self {
            beta: extend(&self.beta),
            gamma: extend(&self.gamma),
            floor: new_floor,
            charge_k: self.charge_k,
            r: self.r,
        })
    }

    /// Row swap; only meaningful for `r = 0`.
    pub fn sharp(&self) -> Option<Self> {
        (self.r == 0).then(|| Self {
            beta: self.gamma.clone(),
            gamma: self.beta.clone(),
            ..self.clone()
        })
    }

    /// The bijection incrementing every entry and the charge by one.
    pub fn shifted(&self, by: i64) -> Self {
        Self {
            beta: self.beta.iter().map(|x| x + by).collect(),
            gamma: self.gamma.iter().map(|x| x + by).collect(),
            floor: self.floor + by,
            charge_k: self.charge_k + by,
            r: self.r,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[i64]| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        write!(f, "({} / {})", join(&self.beta), join(&self.gamma))
    }
}
