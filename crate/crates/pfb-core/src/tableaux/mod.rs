//! Partitions and Young tableau machinery: shapes, weights, conjugation,
//! subtableaux, the graded lexicographic and total tableau orders, and the
//! enumeration of the semistandard, row-distinct and restricted families.

mod enumerate;
mod partition;
mod tableau;

pub use enumerate::{
    enumerate_a_restricted, enumerate_row_distinct, enumerate_ssyt, kostka, partitions_of,
    weight_space_dim, weights_up_to,
};
pub use partition::{partition_cmp, weight_cmp, Partition, Weight};
pub use tableau::{sort_tableaux, tableau_cmp, Tableau};
