//! Compositions, set compositions, partitions, total orders and the
//! coefficient formulas shared by every algebra layer.

mod coefficients;
mod composition;
mod interval;
mod order;
mod partition;
mod set_composition;
mod set_partition;
mod shuffle;

pub use coefficients::{c_l, coarsening_coefficient, mobius, z_scalar};
pub use composition::Composition;
pub(crate) use interval::check_in_interval;
pub use interval::{
    block_orbit, c_max, c_max_set, is_strict, merge_positions, order_interval, order_interval_set,
    rho_c, rho_t, set_order_descents, t_min,
};
pub use order::{IntOrder, SetOrder};
pub use partition::Partition;
pub use set_composition::{standardize, SetComposition};
pub use set_partition::SetPartition;
pub use shuffle::{
    quasi_shuffle, quasi_shuffle_seqs, shifted_quasi_shuffle, shifted_shuffle, shuffle,
    shuffle_seqs,
};
