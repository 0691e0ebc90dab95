//! Digit-block converters and the schedules that chain them.

mod block;
pub(crate) mod lehmer;
mod schedule;

pub use block::{
    apply_block, compose, index_of_perm, op_order, perm_from_index, rank_tuple, tuple_rank,
    BlockOp, MAX_TABLE,
};
pub use schedule::OperatorSchedule;

/// Inverse operator; see [`BlockOp::inverse`].
pub fn inverse(op: &BlockOp) -> BlockOp {
    op.inverse()
}
