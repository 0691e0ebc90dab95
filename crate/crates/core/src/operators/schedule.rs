use super::block::{rank_tuple, tuple_rank, BlockOp};
use crate::error::{Error, Result};
use crate::periodic::Periodic;
use crate::word::check_base;

/// An eventually periodic sequence of block operators over one base. Block
/// `n` rewrites digits `k_1+...+k_{n-1}+1 ..= k_1+...+k_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OperatorSchedule {
    base: u32,
    ops: Periodic<BlockOp>,
}

impl OperatorSchedule {
    pub fn new(base: u32, pre: Vec<BlockOp>, per: Vec<BlockOp>) -> Result<Self> {
        check_base(base)?;
        if let Some(op) = pre.iter().chain(&per).find(|op| op.base() != base) {
            return Err(Error::BaseMismatch {
                expected: base,
                found: op.base(),
            });
        }
        Ok(Self {
            base,
            ops: Periodic::new(pre, per)?,
        })
    }

    pub fn constant(op: BlockOp) -> Self {
        Self {
            base: op.base(),
            ops: Periodic::constant(op),
        }
    }

    pub fn identity(base: u32) -> Result<Self> {
        Ok(Self::constant(BlockOp::identity(base, 1)?))
    }

    pub fn complement(base: u32) -> Result<Self> {
        Ok(Self::constant(BlockOp::complement(base, 1)?))
    }

    /// Complement on odd positions, identity on even ones.
    pub fn nega(base: u32) -> Result<Self> {
        Self::new(
            base,
            vec![],
            vec![BlockOp::complement(base, 1)?, BlockOp::identity(base, 1)?],
        )
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn ops(&self) -> &Periodic<BlockOp> {
        &self.ops
    }

    /// Operator of zero-based block `n`.
    pub fn block(&self, n: usize) -> &BlockOp {
        self.ops.at(n)
    }

    /// Digits covered by the preperiod blocks.
    pub fn pre_digits(&self) -> usize {
        self.ops.pre().iter().map(BlockOp::len).sum()
    }

    /// Digits covered by one period of blocks.
    pub fn period_digits(&self) -> usize {
        self.ops.per().iter().map(BlockOp::len).sum()
    }

    /// Digits covered by the first `blocks` blocks.
    pub fn boundary(&self, blocks: usize) -> usize {
        let pre = self.ops.pre();
        if blocks <= pre.len() {
            return pre[..blocks].iter().map(BlockOp::len).sum();
        }
        let rest = blocks - pre.len();
        let per = self.ops.per();
        let full = rest / per.len();
        self.pre_digits()
            + full * self.period_digits()
            + per[..rest % per.len()]
                .iter()
                .map(BlockOp::len)
                .sum::<usize>()
    }

    /// Number of blocks ending exactly at digit `rank`, if `rank` is a boundary.
    pub fn blocks_at(&self, rank: usize) -> Option<usize> {
        let mut pos = 0;
        let mut n = 0;
        while pos < rank {
            pos += self.block(n).len();
            n += 1;
        }
        (pos == rank).then_some(n)
    }

    pub fn require_boundary(&self, rank: usize) -> Result<usize> {
        self.blocks_at(rank).ok_or(Error::NotBlockBoundary(rank))
    }

    /// Zero-based index of the block containing one-based digit position `pos`.
    pub fn block_of_position(&self, pos: usize) -> usize {
        assert!(pos >= 1, "digit positions start at 1");
        let mut end = 0;
        let mut n = 0;
        loop {
            end += self.block(n).len();
            if end >= pos {
                return n;
            }
            n += 1;
        }
    }

    /// Schedule of the per-block inverses.
    pub fn inverse(&self) -> Self {
        Self {
            base: self.base,
            ops: self.ops.map(BlockOp::inverse),
        }
    }

    pub fn is_all_identity(&self) -> bool {
        self.ops
            .pre()
            .iter()
            .chain(self.ops.per())
            .all(BlockOp::is_identity)
    }

    pub fn is_all_complement(&self) -> bool {
        self.ops
            .pre()
            .iter()
            .chain(self.ops.per())
            .all(BlockOp::is_complement)
    }

    /// Every operator of the periodic part is the identity.
    pub fn tail_is_identity(&self) -> bool {
        self.ops.per().iter().all(BlockOp::is_identity)
    }

    pub fn tail_is_complement(&self) -> bool {
        self.ops.per().iter().all(BlockOp::is_complement)
    }

    /// Blockwise image of a digit prefix whose length is a block boundary.
    pub fn map_prefix(&self, digits: &[u32]) -> Result<Vec<u32>> {
        let blocks = self.require_boundary(digits.len())?;
        let mut out = Vec::with_capacity(digits.len());
        let mut pos = 0;
        for n in 0..blocks {
            let op = self.block(n);
            out.extend(op.apply(&digits[pos..pos + op.len()])?);
            pos += op.len();
        }
        Ok(out)
    }

    /// Blockwise image of the rank-`rank` prefix read as a base-`s` integer.
    /// `rank` must be a block boundary and `s^rank` must fit in `u64`.
    pub fn map_prefix_index(&self, j: u64, rank: usize) -> u64 {
        let s = self.base as u64;
        let mut out = 0u64;
        let mut pos = 0;
        let mut n = 0;
        while pos < rank {
            let op = self.block(n);
            let k = op.len();
            let width = s.pow(k as u32);
            let shift = s.pow((rank - pos - k) as u32);
            let block = ((j / shift) % width) as usize;
            out = out * width + op.map_rank(block) as u64;
            pos += k;
            n += 1;
        }
        out
    }

    /// Inverse of [`map_prefix_index`](Self::map_prefix_index).
    pub fn unmap_prefix_index(&self, j: u64, rank: usize) -> u64 {
        self.inverse().map_prefix_index(j, rank)
    }

    /// Image of one block given as a tuple; mostly useful for callers walking
    /// blocks by hand.
    pub fn apply_block(&self, n: usize, tuple: &[u32]) -> Result<Vec<u32>> {
        let op = self.block(n);
        let r = tuple_rank(self.base, op.len(), tuple)?;
        Ok(rank_tuple(self.base, op.len(), op.map_rank(r)))
    }
}
