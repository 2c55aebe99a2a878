//! Partitions, bipartitions, multipartitions and two-row symbols.

mod content;
mod enumerate;
mod partition;
mod symbol;

pub use content::{ContentMultiset, DPartition, Weight};
pub use enumerate::{
    bipartitions, enumerate_bipartitions, enumerate_multipartitions, enumerate_standard,
    standard_bipartitions, window_for_degree,
};
pub use partition::{partitions_of, Partition};
pub use symbol::{Bipartition, Row, Symbol};
