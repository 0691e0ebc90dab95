use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::cylinder_count;
use crate::operators::OperatorSchedule;
use crate::rational::big_pow;
use crate::Rational;

/// Exhaustive sums run up to `2^22` cylinders; beyond that the closed form is used.
pub const EXHAUSTIVE_MAX_BITS: u32 = 22;

/// `(s^K - 1) / (2 s^K)`: the lower partition sum at rank `K` for any schedule.
pub fn partition_integral_closed(base: u32, rank: usize) -> Rational {
    let total = big_pow(base, rank);
    Rational::new(&total - 1, total * 2)
}

/// Sum over all rank-`K` cylinders, `K = k_1 + ... + k_n`, of the left end
/// of the image cylinder times `s^-K`.
pub fn partition_integral_exhaustive(sch: &OperatorSchedule, blocks: usize) -> Result<Rational> {
    if blocks == 0 {
        return Err(Error::EmptyPartition);
    }
    let rank = sch.boundary(blocks);
    let count = cylinder_count(sch.base(), rank, EXHAUSTIVE_MAX_BITS)?;
    let sum: u128 = (0..count)
        .into_par_iter()
        .map(|j| sch.map_prefix_index(j, rank) as u128)
        .sum();
    Ok(Rational::new(
        BigInt::from(sum),
        big_pow(sch.base(), 2 * rank),
    ))
}

/// Exhaustive when small enough, closed form otherwise.
pub fn partition_integral(sch: &OperatorSchedule, blocks: usize) -> Result<Rational> {
    match partition_integral_exhaustive(sch, blocks) {
        Err(Error::EnumerationTooLarge { .. }) => {
            Ok(partition_integral_closed(sch.base(), sch.boundary(blocks)))
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::BlockOp;
    use crate::rational::ratio;

    #[test]
    fn closed_form_values() {
        assert_eq!(partition_integral_closed(2, 1), ratio(1, 4));
        assert_eq!(partition_integral_closed(2, 3), ratio(7, 16));
    }

    #[test]
    fn identity_rank_two() {
        let sch = OperatorSchedule::identity(2).unwrap();
        let brute: Rational = (0..4).map(|j| ratio(j, 4) * ratio(1, 4)).sum();
        assert_eq!(brute, ratio(3, 8));
        assert_eq!(partition_integral_exhaustive(&sch, 2).unwrap(), brute);
    }

    #[test]
    fn block_schedule_matches_closed_form() {
        let sch =
            OperatorSchedule::constant(BlockOp::from_rank_table(2, 2, vec![2, 3, 0, 1]).unwrap());
        for n in 1..5 {
            let k = sch.boundary(n);
            assert_eq!(
                partition_integral(&sch, n).unwrap(),
                partition_integral_closed(2, k)
            );
        }
        assert_eq!(partition_integral(&sch, 0), Err(Error::EmptyPartition));
    }

    #[test]
    fn falls_back_to_closed_form() {
        let sch = OperatorSchedule::identity(2).unwrap();
        assert!(partition_integral_exhaustive(&sch, 23).is_err());
        assert_eq!(
            partition_integral(&sch, 40).unwrap(),
            partition_integral_closed(2, 40)
        );
    }
}
