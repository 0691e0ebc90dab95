#![allow(dead_code)]

use num_bigint::BigInt;
use radixforge::{BlockOp, DigitWord, OperatorSchedule, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_op(rng: &mut impl Rng, base: u32, max_len: usize) -> BlockOp {
    let len = rng.gen_range(1..=max_len);
    let n = (base as usize).pow(len as u32);
    let mut table: Vec<usize> = (0..n).collect();
    table.shuffle(rng);
    BlockOp::from_rank_table(base, len, table).unwrap()
}

/// Preperiod of 0..=2 blocks, period of 1..=2 blocks, block lengths up to `max_len`.
pub fn random_schedule(rng: &mut impl Rng, base: u32, max_len: usize) -> OperatorSchedule {
    let pre = (0..rng.gen_range(0..=2))
        .map(|_| random_op(rng, base, max_len))
        .collect();
    let per = (0..rng.gen_range(1..=2))
        .map(|_| random_op(rng, base, max_len))
        .collect();
    OperatorSchedule::new(base, pre, per).unwrap()
}

pub fn random_word(rng: &mut impl Rng, base: u32, max_pre: usize, max_per: usize) -> DigitWord {
    let pre = (0..rng.gen_range(0..=max_pre))
        .map(|_| rng.gen_range(0..base))
        .collect();
    let per = (0..rng.gen_range(1..=max_per))
        .map(|_| rng.gen_range(0..base))
        .collect();
    DigitWord::new(base, pre, per).unwrap()
}

/// Rational in `[0, 1]` with denominator up to `max_den`.
pub fn random_unit(rng: &mut impl Rng, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    q(rng.gen_range(0..=d), d)
}

/// `sum_{n<terms} sign_n d_n / s^n` as an exact partial sum.
pub fn partial_sum(digit: impl Fn(usize) -> i64, base: i64, terms: usize) -> Rational {
    let mut den = BigInt::from(1);
    let mut acc = Rational::from_integer(BigInt::from(0));
    for n in 0..terms {
        den *= base;
        acc += Rational::new(BigInt::from(digit(n)), den.clone());
    }
    acc
}
