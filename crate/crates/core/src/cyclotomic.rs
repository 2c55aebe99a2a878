//! Rouquier families of the cyclotomic algebras of `G(d, 1, m)`.
//!
//! Irreducible characters are labelled by `d`-partitions of `m`; two lie in
//! the same family exactly when their charged contents agree.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_multipartitions, ContentMultiset, DPartition, Weight};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CyclotomicParams {
    pub d: usize,
    pub m: u32,
    pub charges: Vec<i64>,
}

impl CyclotomicParams {
    pub fn new(d: usize, m: u32, charges: Vec<i64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::Malformed("d must be at least 1".into()));
        }
        if charges.len() != d {
            return Err(Error::Malformed(format!(
                "expected {d} charges, got {}",
                charges.len()
            )));
        }
        Ok(Self { d, m, charges })
    }
}

pub fn enumerate_dpartitions(params: &CyclotomicParams) -> Vec<DPartition> {
    enumerate_multipartitions(params.d, params.m)
        .into_iter()
        .map(|components| DPartition {
            components,
            charges: params.charges.clone(),
        })
        .collect()
}

/// A family block: its members and their common content.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RouquierFamily {
    pub content: ContentMultiset,
    pub members: Vec<DPartition>,
}

/// Blocks of equal charged content, ordered by first member.
pub fn rouquier_families(params: &CyclotomicParams) -> Vec<RouquierFamily> {
    let mut blocks: Vec<RouquierFamily> = Vec::new();
    let mut index: HashMap<ContentMultiset, usize> = HashMap::new();
    for dp in enumerate_dpartitions(params) {
        let content = dp.cell_content();
        match index.get(&content) {
            Some(&i) => blocks[i].members.push(dp),
            None => {
                index.insert(content.clone(), blocks.len());
                blocks.push(RouquierFamily {
                    content,
                    members: vec![dp],
                });
            }
        }
    }
    blocks
}

pub fn weight_of_dpartition(dp: &DPartition) -> Weight {
    dp.weight()
}

/// Characters attached to a level-`d` canonical basis for `d > 2`.
///
/// Not available: it would need the level-`d` canonical basis, and whether
/// the resulting combinations are meaningful is itself open.
pub fn higher_level_characters(_params: &CyclotomicParams) -> Result<()> {
    Err(Error::Unimplemented(
        "characters from higher-level canonical bases",
    ))
}
