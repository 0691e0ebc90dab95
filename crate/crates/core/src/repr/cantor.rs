//! Cantor series `sum eps_n / (q_1 q_2 ... q_n)` over an eventually periodic
//! base sequence, optionally with a minus sign on the positions of a
//! [`SignPattern`].

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::signed::shape_of;
use crate::error::{Error, Result};
use crate::periodic::{joint_shape, Periodic};
use crate::rational::in_unit_interval;
use crate::signs::SignPattern;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CantorSeries {
    bases: Periodic<u32>,
    signs: Option<SignPattern>,
}

impl CantorSeries {
    pub fn new(bases: Periodic<u32>, signs: Option<SignPattern>) -> Result<Self> {
        let bad = bases
            .pre()
            .iter()
            .chain(bases.per())
            .enumerate()
            .find(|(_, &q)| q < 2);
        if let Some((position, &size)) = bad {
            return Err(Error::InvalidAlphabet { position, size });
        }
        Ok(Self { bases, signs })
    }

    pub fn bases(&self) -> &Periodic<u32> {
        &self.bases
    }

    pub fn signs(&self) -> Option<&SignPattern> {
        self.signs.as_ref()
    }

    fn negative(&self, n: usize) -> bool {
        self.signs.as_ref().is_some_and(|s| s.contains(n))
    }

    fn check_digits(&self, digits: &Periodic<u32>) -> Result<()> {
        let (pre, per) = joint_shape(&[shape_of(digits), shape_of(&self.bases)]);
        for n in 0..pre + per {
            let (d, q) = (*digits.at(n), *self.bases.at(n));
            if d >= q {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    position: n,
                    size: q,
                });
            }
        }
        Ok(())
    }

    /// Exact value: preperiod summed term by term, the aligned period summed
    /// once and scaled by `1 / (1 - r)` with `r = 1 / prod(q over period)`.
    pub fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        self.check_digits(digits)?;
        let mut shapes = vec![shape_of(digits), shape_of(&self.bases)];
        if let Some(s) = &self.signs {
            shapes.push(shape_of(s.pattern()));
        }
        let (pre, per) = joint_shape(&shapes);
        let term = |n: usize, denom: &BigInt| {
            let r = Rational::new(BigInt::from(*digits.at(n)), denom.clone());
            if self.negative(n + 1) {
                -r
            } else {
                r
            }
        };
        let mut denom = BigInt::one();
        let mut head = Rational::zero();
        for n in 0..pre {
            denom *= *self.bases.at(n);
            head += term(n, &denom);
        }
        // period contribution measured relative to the end of the preperiod
        let mut rel = BigInt::one();
        let mut cycle = Rational::zero();
        for n in pre..pre + per {
            rel *= *self.bases.at(n);
            cycle += term(n, &rel);
        }
        let ratio = Rational::new(BigInt::one(), rel);
        let tail = cycle / (Rational::one() - ratio) / Rational::from_integer(denom);
        Ok(head + tail)
    }

    /// Largest-digit word `q_n - 1` on the positions selected by `pick`.
    fn top_word(&self, pick: impl Fn(usize) -> bool) -> Periodic<u32> {
        let mut shapes = vec![shape_of(&self.bases)];
        if let Some(s) = &self.signs {
            shapes.push(shape_of(s.pattern()));
        }
        let (pre, per) = joint_shape(&shapes);
        let digit = |n: usize| if pick(n + 1) { self.bases.at(n) - 1 } else { 0 };
        Periodic::new(
            (0..pre).map(digit).collect(),
            (pre..pre + per).map(digit).collect(),
        )
        .expect("nonempty period")
    }

    /// `(lo, lo + 1)` where `lo` sums the negative terms at their largest digits.
    pub fn bounds(&self) -> (Rational, Rational) {
        let lo = if self.signs.is_some() {
            let unsigned = CantorSeries {
                bases: self.bases.clone(),
                signs: None,
            };
            -unsigned
                .value(&self.top_word(|n| self.negative(n)))
                .expect("top digits fit the alphabet")
        } else {
            Rational::zero()
        };
        let hi = &lo + Rational::one();
        (lo, hi)
    }

    /// Greedy expansion of `x`; terminating form preferred.
    pub fn expand(&self, x: &Rational) -> Result<Periodic<u32>> {
        let (lo, hi) = self.bounds();
        if *x < lo || *x > hi {
            return Err(Error::out_of_range(x, lo, hi));
        }
        let unsigned = expand_unsigned(&(x - &lo), &self.bases)?;
        Ok(match &self.signs {
            None => unsigned,
            Some(nb) => {
                let (pre, per) = joint_shape(&[
                    shape_of(&unsigned),
                    shape_of(&self.bases),
                    shape_of(nb.pattern()),
                ]);
                let digit = |n: usize| {
                    let d = *unsigned.at(n);
                    if nb.contains(n + 1) {
                        self.bases.at(n) - 1 - d
                    } else {
                        d
                    }
                };
                Periodic::new(
                    (0..pre).map(digit).collect(),
                    (pre..pre + per).map(digit).collect(),
                )
                .expect("nonempty period")
                .minimized()
            }
        })
    }
}

/// Positive Cantor expansion of `x` in `[0, 1]`. The remainder keeps the
/// denominator of `x`, so `(remainder, phase in the base period)` recurs.
fn expand_unsigned(x: &Rational, bases: &Periodic<u32>) -> Result<Periodic<u32>> {
    if !in_unit_interval(x) {
        return Err(Error::out_of_range(x, Rational::zero(), Rational::one()));
    }
    if x.is_one() {
        return Ok(bases.map(|q| q - 1).minimized());
    }
    let den: BigUint = x.denom().to_biguint().expect("positive");
    let mut rem: BigUint = x.numer().to_biguint().expect("nonnegative");
    let pre_len = bases.pre().len();
    let per_len = bases.per().len();
    let mut seen: HashMap<(BigUint, usize), usize> = HashMap::new();
    let mut digits = Vec::new();
    for n in 0.. {
        if n >= pre_len {
            let key = (rem.clone(), (n - pre_len) % per_len);
            if let Some(&start) = seen.get(&key) {
                let per = digits.split_off(start);
                return Ok(Periodic::new(digits, per)?.minimized());
            }
            seen.insert(key, n);
        }
        let (d, r) = (rem * *bases.at(n)).div_rem(&den);
        digits.push(d.to_u32().expect("digit below base"));
        rem = r;
    }
    unreachable!("remainder states are finite")
}

pub fn cantor_value(
    digits: &Periodic<u32>,
    bases: &Periodic<u32>,
    signs: Option<&SignPattern>,
) -> Result<Rational> {
    CantorSeries::new(bases.clone(), signs.cloned())?.value(digits)
}
