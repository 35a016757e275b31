//! Bar-partitions, twisted abaci, p-bar Littlewood decompositions and the
//! Galois sign data of spin characters of double covers of symmetric and
//! alternating groups, together with their p-blocks and the label
//! bijections between blocks of equal weight.

pub mod abacus;
pub mod blocks;
pub mod characters;
pub mod error;
pub mod galois;
pub mod humphreys;
pub mod littlewood;
pub mod partitions;

pub use error::{Error, Result};
pub use partitions::{BarPartition, FrobeniusSymbol, Partition, PartitionKind, Sign};
