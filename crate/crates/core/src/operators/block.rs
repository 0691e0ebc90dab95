use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::lehmer;
use crate::error::{Error, Result};
use crate::word::check_base;

/// Largest tuple count `s^k` for which a dense table is built.
pub const MAX_TABLE: usize = 1 << 20;

/// A bijection of the digit tuples `A_s^k`.
///
/// `table[j]` is the lexicographic rank of the image of the tuple whose
/// lexicographic rank is `j`. The operator's index is the lexicographic rank
/// of `table` among all permutations of the `s^k` tuples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockOp {
    base: u32,
    len: usize,
    table: Vec<usize>,
}

fn tuple_count(base: u32, len: usize) -> Result<usize> {
    check_base(base)?;
    if len == 0 {
        return Err(Error::InvalidBlockLength);
    }
    let mut n: u128 = 1;
    for _ in 0..len {
        n = n.saturating_mul(base as u128);
        if n > MAX_TABLE as u128 {
            return Err(Error::TableTooLarge {
                tuples: n,
                limit: MAX_TABLE,
            });
        }
    }
    Ok(n as usize)
}

impl BlockOp {
    /// The `index`-th permutation of `A_s^k` in lexicographic order.
    pub fn from_index(base: u32, len: usize, index: &BigUint) -> Result<Self> {
        let n = tuple_count(base, len)?;
        let table = lehmer::unrank(n, index).ok_or_else(|| Error::IndexOutOfRange {
            index: index.to_string(),
            tuples: n,
        })?;
        Ok(Self { base, len, table })
    }

    /// Builds from explicit rank images; `table[j]` is the image rank of rank `j`.
    pub fn from_rank_table(base: u32, len: usize, table: Vec<usize>) -> Result<Self> {
        let n = tuple_count(base, len)?;
        let mut seen = vec![false; n];
        if table.len() != n {
            return Err(Error::NotBijection { tuples: n });
        }
        for &t in &table {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotBijection { tuples: n });
            }
        }
        Ok(Self { base, len, table })
    }

    /// Builds from the image tuples of all tuples in lexicographic order.
    pub fn from_tuples(base: u32, len: usize, images: &[Vec<u32>]) -> Result<Self> {
        let table = images
            .iter()
            .map(|t| tuple_rank(base, len, t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rank_table(base, len, table)
    }

    pub fn identity(base: u32, len: usize) -> Result<Self> {
        let n = tuple_count(base, len)?;
        Ok(Self {
            base,
            len,
            table: (0..n).collect(),
        })
    }

    /// Digit-wise complement `t -> (s-1-t_1, ..., s-1-t_k)`.
    pub fn complement(base: u32, len: usize) -> Result<Self> {
        let n = tuple_count(base, len)?;
        Ok(Self {
            base,
            len,
            table: (0..n).rev().collect(),
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    /// Block length `k`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn tuple_count(&self) -> usize {
        self.table.len()
    }

    pub fn rank_table(&self) -> &[usize] {
        &self.table
    }

    /// Image of the tuple of rank `j`, as a rank.
    pub fn map_rank(&self, j: usize) -> usize {
        self.table[j]
    }

    pub fn index(&self) -> BigUint {
        lehmer::rank(&self.table)
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(j, &t)| j == t)
    }

    pub fn is_complement(&self) -> bool {
        let n = self.table.len();
        self.table.iter().enumerate().all(|(j, &t)| t == n - 1 - j)
    }

    pub fn apply(&self, tuple: &[u32]) -> Result<Vec<u32>> {
        let j = tuple_rank(self.base, self.len, tuple)?;
        Ok(rank_tuple(self.base, self.len, self.table[j]))
    }

    /// Image tuples of all tuples in lexicographic order.
    pub fn image_tuples(&self) -> Vec<Vec<u32>> {
        self.table
            .iter()
            .map(|&t| rank_tuple(self.base, self.len, t))
            .collect()
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &BlockOp) -> Result<BlockOp> {
        self.check_compatible(other)?;
        let table = other.table.iter().map(|&t| self.table[t]).collect();
        Ok(Self {
            base: self.base,
            len: self.len,
            table,
        })
    }

    pub fn inverse(&self) -> BlockOp {
        let mut table = vec![0; self.table.len()];
        for (j, &t) in self.table.iter().enumerate() {
            table[t] = j;
        }
        Self {
            base: self.base,
            len: self.len,
            table,
        }
    }

    pub fn pow(&self, exp: u64) -> BlockOp {
        let mut result = Self {
            base: self.base,
            len: self.len,
            table: (0..self.table.len()).collect(),
        };
        let mut sq = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose(&sq).expect("same shape");
            }
            sq = sq.compose(&sq).expect("same shape");
            e >>= 1;
        }
        result
    }

    /// Cycles of the rank permutation, each starting at its smallest element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.table.len()];
        let mut out = Vec::new();
        for start in 0..self.table.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j);
                j = self.table[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Least `t >= 1` with `self^t` the identity: lcm of cycle lengths.
    pub fn order(&self) -> BigUint {
        self.cycles()
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }

    fn check_compatible(&self, other: &BlockOp) -> Result<()> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                expected: self.base,
                found: other.base,
            });
        }
        if self.len != other.len {
            return Err(Error::BlockLengthMismatch {
                expected: self.len,
                found: other.len,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for BlockOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BlockOp(s={}, k={}, table={:?})",
            self.base, self.len, self.table
        )
    }
}

/// Lexicographic rank of a digit tuple.
pub fn tuple_rank(base: u32, len: usize, tuple: &[u32]) -> Result<usize> {
    if tuple.len() != len {
        return Err(Error::TupleLength {
            expected: len,
            found: tuple.len(),
        });
    }
    tuple
        .iter()
        .enumerate()
        .try_fold(0usize, |acc, (position, &d)| {
            if d >= base {
                Err(Error::DigitOutOfRange {
                    digit: d,
                    position,
                    size: base,
                })
            } else {
                Ok(acc * base as usize + d as usize)
            }
        })
}

/// Digit tuple of length `len` with lexicographic rank `rank`.
pub fn rank_tuple(base: u32, len: usize, mut rank: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (rank % base as usize) as u32;
        rank /= base as usize;
    }
    out
}

pub fn perm_from_index(base: u32, len: usize, index: &BigUint) -> Result<BlockOp> {
    BlockOp::from_index(base, len, index)
}

pub fn index_of_perm(op: &BlockOp) -> BigUint {
    op.index()
}

pub fn apply_block(op: &BlockOp, tuple: &[u32]) -> Result<Vec<u32>> {
    op.apply(tuple)
}

pub fn compose(a: &BlockOp, b: &BlockOp) -> Result<BlockOp> {
    a.compose(b)
}

pub fn op_order(op: &BlockOp) -> BigUint {
    op.order()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: u32, k: usize, i: u64) -> BlockOp {
        BlockOp::from_index(s, k, &BigUint::from(i)).unwrap()
    }

    fn example_k2() -> BlockOp {
        BlockOp::from_tuples(2, 2, &[vec![1, 0], vec![1, 1], vec![0, 0], vec![0, 1]]).unwrap()
    }

    fn example_s7() -> BlockOp {
        BlockOp::from_rank_table(7, 1, vec![3, 5, 6, 4, 0, 2, 1]).unwrap()
    }

    #[test]
    fn ternary_operator_rows() {
        assert_eq!(idx(3, 1, 1).rank_table(), &[0, 2, 1]);
        assert_eq!(idx(3, 1, 4).rank_table(), &[2, 0, 1]);
    }

    #[test]
    fn anchors() {
        assert!(idx(3, 1, 0).is_identity());
        let last = idx(2, 2, 23);
        assert!(last.is_complement());
        assert_eq!(last.apply(&[0, 1]).unwrap(), vec![1, 0]);
        assert_eq!(last.apply(&[1, 1]).unwrap(), vec![0, 0]);
        assert_eq!(
            BlockOp::complement(2, 2).unwrap().index(),
            BigUint::from(23u32)
        );
        assert_eq!(
            BlockOp::identity(3, 1).unwrap().index(),
            BigUint::from(0u32)
        );
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(
            BlockOp::from_index(2, 2, &BigUint::from(24u32)),
            Err(Error::IndexOutOfRange { tuples: 4, .. })
        ));
    }

    #[test]
    fn table_limit() {
        assert!(matches!(
            BlockOp::identity(2, 21),
            Err(Error::TableTooLarge { .. })
        ));
        assert!(BlockOp::identity(2, 20).is_ok());
    }

    #[test]
    fn non_bijective_tables_are_rejected() {
        assert_eq!(
            BlockOp::from_rank_table(3, 1, vec![0, 0, 1]),
            Err(Error::NotBijection { tuples: 3 })
        );
        assert_eq!(
            BlockOp::from_rank_table(3, 1, vec![0, 1]),
            Err(Error::NotBijection { tuples: 3 })
        );
    }

    #[test]
    fn apply_examples() {
        assert_eq!(example_k2().apply(&[1, 1]).unwrap(), vec![0, 1]);
        assert_eq!(example_s7().apply(&[1]).unwrap(), vec![5]);
        let id = BlockOp::identity(3, 2).unwrap();
        assert_eq!(id.apply(&[2, 1]).unwrap(), vec![2, 1]);
        assert_eq!(
            example_k2().apply(&[1]),
            Err(Error::TupleLength {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            example_k2().apply(&[1, 2]),
            Err(Error::DigitOutOfRange { .. })
        ));
    }

    #[test]
    fn k2_example_index() {
        assert_eq!(example_k2().index(), BigUint::from(16u32));
    }

    #[test]
    fn composition_and_inverse() {
        let t = idx(3, 1, 1);
        assert!(t.compose(&t).unwrap().is_identity());
        let c = BlockOp::complement(2, 3).unwrap();
        assert_eq!(c.inverse(), c);
        let s7 = example_s7();
        let cube = s7.pow(3);
        for (a, b) in [(0, 0), (3, 3), (4, 4), (1, 6), (5, 1)] {
            assert_eq!(cube.map_rank(a), b);
        }
        assert!(s7.compose(&s7.inverse()).unwrap().is_identity());
        assert_eq!(
            t.compose(&BlockOp::identity(2, 1).unwrap()),
            Err(Error::BaseMismatch {
                expected: 3,
                found: 2
            })
        );
        assert_eq!(
            t.compose(&BlockOp::identity(3, 2).unwrap()),
            Err(Error::BlockLengthMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn orders_and_cycles() {
        let s7 = example_s7();
        assert_eq!(s7.order(), BigUint::from(12u32));
        assert_eq!(s7.cycles(), vec![vec![0, 3, 4], vec![1, 5, 2, 6]]);
        assert_eq!(
            BlockOp::identity(2, 2).unwrap().order(),
            BigUint::from(1u32)
        );
        assert_eq!(idx(3, 1, 1).order(), BigUint::from(2u32));
        assert!(s7.pow(12).is_identity());
        assert!(!s7.pow(6).is_identity());
    }

    #[test]
    fn tuple_ranks() {
        assert_eq!(tuple_rank(3, 2, &[2, 1]).unwrap(), 7);
        assert_eq!(rank_tuple(3, 2, 7), vec![2, 1]);
        assert_eq!(rank_tuple(2, 3, 5), vec![1, 0, 1]);
    }
}
