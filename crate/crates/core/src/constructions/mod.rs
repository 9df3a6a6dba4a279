//! Products, subalgebras, inductive limits and Boolean powers, each with a
//! check that the reticulation commutes with it.

mod colimit;
mod power;
mod product;
mod subalgebra;

pub use colimit::{
    check_colimit_preservation, colimit, mediating_morphism, Cocone, Colimit, InductiveSystem,
};
pub use power::{
    boolean_power, check_boolean_power_preservation, check_partition_colimit, partition_system,
    BooleanPower, PartitionSystem, POWER_LIMIT,
};
pub use product::{check_product_preservation, direct_power, direct_product, PRODUCT_LIMIT};
pub use subalgebra::{check_subalgebra_preservation, closed_subsets, subalgebra};
