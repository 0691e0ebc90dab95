mod common;

use itertools::Itertools;
use num_bigint::BigUint;
use proptest::prelude::*;
use radixforge::operators::{index_of_perm, op_order, perm_from_index};
use radixforge::BlockOp;

fn big(i: u64) -> BigUint {
    BigUint::from(i)
}

/// Lexicographic position of `table` among all permutations of its entries,
/// found by walking the permutations in order.
fn brute_index(table: &[usize]) -> u64 {
    (0..table.len())
        .permutations(table.len())
        .position(|p| p == table)
        .unwrap() as u64
}

#[test]
fn base_seven_index_by_enumeration() {
    let op = BlockOp::from_rank_table(7, 1, vec![3, 5, 6, 4, 0, 2, 1]).unwrap();
    assert_eq!(brute_index(op.rank_table()), 2755);
    assert_eq!(index_of_perm(&op), big(2755));
    assert_eq!(op_order(&op), big(12));
}

#[test]
fn all_binary_pairs_by_enumeration() {
    for (i, p) in (0..4usize).permutations(4).enumerate() {
        let op = perm_from_index(2, 2, &big(i as u64)).unwrap();
        assert_eq!(op.rank_table(), p.as_slice());
    }
}

#[test]
fn group_laws_on_all_24_binary_pair_ops() {
    let ops: Vec<BlockOp> = (0..24)
        .map(|i| perm_from_index(2, 2, &big(i)).unwrap())
        .collect();
    for a in &ops {
        let order = op_order(a);
        assert!((big(24) % &order) == big(0));
        let t: u64 = order.try_into().unwrap();
        assert!(a.pow(t).is_identity());
        assert!((1..t).all(|e| !a.pow(e).is_identity()));
        for b in &ops {
            for c in &ops {
                let left = a.compose(b).unwrap().compose(c).unwrap();
                let right = a.compose(&b.compose(c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn anchors() {
    for (s, k) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (7, 1)] {
        let n = (s as u64).pow(k as u32);
        let last: BigUint = (1..=n).map(BigUint::from).product::<BigUint>() - 1u32;
        assert!(perm_from_index(s, k, &big(0)).unwrap().is_identity());
        assert!(perm_from_index(s, k, &last).unwrap().is_complement());
        assert!(perm_from_index(s, k, &(last + 1u32)).is_err());
    }
}

fn shapes() -> impl Strategy<Value = (u32, usize)> {
    prop::sample::select(vec![(2u32, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (7, 1)])
}

proptest! {
    #[test]
    fn index_round_trips((s, k) in shapes(), seed in any::<u64>()) {
        let n = (s as u64).pow(k as u32);
        let total: BigUint = (1..=n).map(BigUint::from).product();
        let i = BigUint::from(seed) * BigUint::from(seed.rotate_left(17)) % &total;
        let op = perm_from_index(s, k, &i).unwrap();
        let mut sorted = op.rank_table().to_vec();
        sorted.sort();
        prop_assert_eq!(sorted, (0..n as usize).collect::<Vec<_>>());
        prop_assert_eq!(index_of_perm(&op), i);
        prop_assert!(op.compose(&op.inverse()).unwrap().is_identity());
    }
}
