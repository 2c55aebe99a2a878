//! Closed formula for the canonical basis of the level-2 module `V(Lambda)`.
//!
//! A standard symbol `S` determines an injection `psi` from its bottom row
//! into its top row, matched level by level (`psi(j) = j - l` at level `l`).
//! The non-fixed orbits are the *pairs* of `S`; swapping any subset of
//! pairs across the rows gives the set `C(S)` of `2^p` symbols, and
//!
//! ```text
//! b_S = sum over Sigma in C(S) of v^{n(Sigma)} u_Sigma
//! ```
//!
//! where `n(Sigma)` is the number of swapped pairs.

use std::collections::BTreeSet;

use crate::combinatorics::{bipartitions, Bipartition, ContentMultiset, Symbol};
use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

/// The pairs `(j, psi(j))`, `psi(j) < j`, of a standard symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSet {
    /// Sorted by the larger element `j`.
    pub pairs: Vec<(i64, i64)>,
    /// Window entries of `beta ∩ gamma`, where `psi` is the identity.
    pub fixed: Vec<i64>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `psi(j)` for `j` in the bottom row window.
    pub fn psi(&self, j: i64) -> Option<i64> {
        if self.fixed.binary_search(&j).is_ok() {
            return Some(j);
        }
        self.pairs.iter().find(|&&(x, _)| x == j).map(|&(_, y)| y)
    }
}

pub fn psi_pairs(s: &Symbol) -> Result<PairSet> {
    if !s.is_standard() {
        return Err(Error::NotStandard);
    }
    let beta: BTreeSet<i64> = s.beta.iter().copied().collect();
    let fixed: Vec<i64> = s
        .gamma
        .iter()
        .copied()
        .filter(|j| beta.contains(j))
        .collect();
    let mut available: BTreeSet<i64> = s
        .beta
        .iter()
        .copied()
        .filter(|x| fixed.binary_search(x).is_err())
        .collect();
    let mut unmatched: Vec<i64> = s
        .gamma
        .iter()
        .copied()
        .filter(|j| !beta.contains(j))
        .collect();

    let max_level = s.gamma.last().map_or(0, |&g| g - s.floor);
    let mut pairs = Vec::with_capacity(unmatched.len());
    let mut level = 1;
    while !unmatched.is_empty() {
        if level > max_level {
            return Err(Error::NotStandard);
        }
        unmatched.retain(|&j| {
            if available.remove(&(j - level)) {
                pairs.push((j, j - level));
                false
            } else {
                true
            }
        });
        level += 1;
    }
    pairs.sort_unstable();
    Ok(PairSet { pairs, fixed })
}

/// Swaps the chosen pairs across the rows and re-sorts.
fn swap_pairs(s: &Symbol, pairs: &[(i64, i64)]) -> Symbol {
    let mut beta: BTreeSet<i64> = s.beta.iter().copied().collect();
    let mut gamma: BTreeSet<i64> = s.gamma.iter().copied().collect();
    for &(j, psi) in pairs {
        gamma.remove(&j);
        beta.insert(j);
        beta.remove(&psi);
        gamma.insert(psi);
    }
    Symbol {
        beta: beta.into_iter().collect(),
        gamma: gamma.into_iter().collect(),
        ..s.clone()
    }
}

/// `C(S)` with the statistic `n(Sigma)`, in binary-counter order over the
/// pairs sorted by their larger element. `(S, 0)` comes first.
pub fn c_set(s: &Symbol) -> Result<Vec<(Symbol, usize)>> {
    let pairs = psi_pairs(s)?;
    let p = pairs.len();
    let out = (0u64..1 << p)
        .map(|mask| {
            let chosen: Vec<(i64, i64)> = (0..p)
                .filter(|t| mask >> t & 1 == 1)
                .map(|t| pairs.pairs[t])
                .collect();
            (swap_pairs(s, &chosen), chosen.len())
        })
        .collect();
    Ok(out)
}

/// `Phi(b_S) = sum_{Sigma in C(S)} v^{n(Sigma)} u_Sigma`.
pub fn canonical_vector<R: Coefficient>(s: &Symbol) -> Result<FockVector<R>> {
    let mut out = FockVector::zero();
    for (sigma, n) in c_set(s)? {
        out.add_term(sigma.to_bipartition(), &LaurentPoly::v_pow(n as i64))?;
    }
    Ok(out)
}

/// Canonical basis vector labelled by a standard bipartition.
pub fn canonical_vector_of<R: Coefficient>(bp: &Bipartition) -> Result<FockVector<R>> {
    canonical_vector(&bp.to_symbol_default())
}

/// Expansion matrix of canonical basis vectors on the standard basis.
///
/// Rows are labelled by bipartitions, columns by standard bipartitions;
/// column `c` holds the coefficients of the corresponding canonical vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisMatrix<R: Coefficient> {
    pub rows: Vec<Bipartition>,
    pub columns: Vec<Bipartition>,
    pub entries: Vec<Vec<LaurentPoly<R>>>,
}

impl<R: Coefficient> BasisMatrix<R> {
    /// Assembles a matrix from column vectors. Support outside `rows` is an
    /// error.
    pub fn from_columns(
        rows: Vec<Bipartition>,
        columns: Vec<Bipartition>,
        vectors: &[FockVector<R>],
    ) -> Result<Self> {
        let mut entries = vec![vec![LaurentPoly::zero(); columns.len()]; rows.len()];
        for (c, vec) in vectors.iter().enumerate() {
            for (bp, coeff) in vec.iter() {
                let r = rows.binary_search(bp).map_err(|_| {
                    Error::Malformed(format!(
                        "column {} has support {bp} outside the rows",
                        columns[c]
                    ))
                })?;
                entries[r][c] = coeff.clone();
            }
        }
        Ok(Self {
            rows,
            columns,
            entries,
        })
    }

    pub fn entry(&self, row: &Bipartition, col: &Bipartition) -> Option<&LaurentPoly<R>> {
        let r = self.rows.binary_search(row).ok()?;
        let c = self.columns.binary_search(col).ok()?;
        Some(&self.entries[r][c])
    }

    /// Rows and columns whose labels have the given cell content.
    pub fn restrict_to_content(&self, content: &ContentMultiset) -> Self {
        let keep_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&i| &self.rows[i].cell_content() == content)
            .collect();
        let keep_cols: Vec<usize> = (0..self.columns.len())
            .filter(|&j| &self.columns[j].cell_content() == content)
            .collect();
        Self {
            rows: keep_rows.iter().map(|&i| self.rows[i].clone()).collect(),
            columns: keep_cols.iter().map(|&j| self.columns[j].clone()).collect(),
            entries: keep_rows
                .iter()
                .map(|&i| {
                    keep_cols
                        .iter()
                        .map(|&j| self.entries[i][j].clone())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn column_vector(&self, c: usize) -> FockVector<R> {
        let mut out = FockVector::zero();
        for (r, row) in self.rows.iter().enumerate() {
            out.add_term(row.clone(), &self.entries[r][c])
                .expect("matrix entries are distinct rows");
        }
        out
    }
}

/// Columns indexed by the standard bipartitions of `m`, rows by all
/// bipartitions of `m`, both in `(|lambda|, lambda, mu)` order.
pub fn basis_matrix<R: Coefficient>(m: u32, charge_k: i64, r: u32) -> Result<BasisMatrix<R>> {
    let rows = bipartitions(m, charge_k, r);
    let columns: Vec<Bipartition> = rows.iter().filter(|bp| bp.is_standard()).cloned().collect();
    let vectors = columns
        .iter()
        .map(canonical_vector_of)
        .collect::<Result<Vec<_>>>()?;
    BasisMatrix::from_columns(rows, columns, &vectors)
}
