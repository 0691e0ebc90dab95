//! Monotonicity and distance checks of the pseudo map.
//!
//! On the left endpoints `j / s^r` of rank-`r` cylinders the map reads
//! `f(j / s^r) = g(j) / s^r + c_r`, where `g` is the blockwise image of the
//! base-`s` integer `j` and `c_r` is the image of the zero tail; the same
//! holds at cylinder midpoints with another constant. Both checks therefore
//! run on integers and confirm the reported points with exact values.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::limits::{cylinder_count, max_bits};
use crate::operators::OperatorSchedule;
use crate::rational::big_pow;
use crate::repr::pseudo_value;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    StrictlyIncreasing,
    StrictlyDecreasing,
    PiecewiseMonotone,
    NonMonotone,
}

impl Monotonicity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Monotonicity::StrictlyIncreasing => "strictly-increasing",
            Monotonicity::StrictlyDecreasing => "strictly-decreasing",
            Monotonicity::PiecewiseMonotone => "piecewise-monotone",
            Monotonicity::NonMonotone => "non-monotone",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityReport {
    pub kind: Monotonicity,
    /// Consecutive cylinder midpoints `x_1 < x_2 < x_3` with their images,
    /// where `f` rises then falls or falls then rises.
    pub witness: Option<[(Rational, Rational); 3]>,
}

/// Block boundaries in `1..=max(rank, K_0 + K_p)` whose cylinder count fits
/// the enumeration cap; `rank` itself must fit.
fn scan_ranks(sch: &OperatorSchedule, rank: usize) -> Result<Vec<usize>> {
    sch.require_boundary(rank)?;
    let cap = max_bits();
    cylinder_count(sch.base(), rank, cap)?;
    let end = rank.max(sch.pre_digits() + sch.period_digits());
    let mut ranks = Vec::new();
    let mut n = 1;
    loop {
        let r = sch.boundary(n);
        if r > end || (r > rank && cylinder_count(sch.base(), r, cap).is_err()) {
            break;
        }
        ranks.push(r);
        n += 1;
    }
    Ok(ranks)
}

fn at_rank(j: u64, base: u32, rank: usize, twice: bool) -> Rational {
    let den = big_pow(base, rank);
    if twice {
        Rational::new(BigInt::from(2 * j + 1), den * 2)
    } else {
        Rational::new(BigInt::from(j), den)
    }
}

fn turn(sch: &OperatorSchedule, rank: usize) -> Result<Option<[(Rational, Rational); 3]>> {
    let count = cylinder_count(sch.base(), rank, max_bits())?;
    if count < 3 {
        return Ok(None);
    }
    let g = |j: u64| sch.map_prefix_index(j, rank) as i128;
    let (mut a, mut b) = (g(0), g(1));
    for j in 2..count {
        let c = g(j);
        if (b - a) * (c - b) < 0 {
            let pts = [j - 2, j - 1, j].map(|i| at_rank(i, sch.base(), rank, true));
            let [x1, x2, x3] = pts;
            let y = |x: &Rational| pseudo_value(x, sch);
            let (y1, y2, y3) = (y(&x1)?, y(&x2)?, y(&x3)?);
            debug_assert!((&y2 - &y1) * (&y3 - &y2) < Rational::zero());
            return Ok(Some([(x1, y1), (x2, y2), (x3, y3)]));
        }
        (a, b) = (b, c);
    }
    Ok(None)
}

/// Syntactic classification of the schedule plus, for anything but the two
/// monotone cases, a turning triple of cylinder midpoints when one exists up
/// to the scanned rank.
pub fn monotonicity_scan(sch: &OperatorSchedule, rank: usize) -> Result<MonotonicityReport> {
    let ranks = scan_ranks(sch, rank)?;
    let kind = if sch.is_all_identity() {
        Monotonicity::StrictlyIncreasing
    } else if sch.is_all_complement() {
        Monotonicity::StrictlyDecreasing
    } else if sch.tail_is_identity() || sch.tail_is_complement() {
        Monotonicity::PiecewiseMonotone
    } else {
        Monotonicity::NonMonotone
    };
    let mut witness = None;
    if !matches!(
        kind,
        Monotonicity::StrictlyIncreasing | Monotonicity::StrictlyDecreasing
    ) {
        for r in ranks {
            witness = turn(sch, r)?;
            if witness.is_some() {
                break;
            }
        }
    }
    Ok(MonotonicityReport { kind, witness })
}

/// Two cylinder endpoints whose images are not at the same distance as the
/// points themselves, or `None` when every scanned pair keeps its distance.
pub fn distance_counterexample(
    sch: &OperatorSchedule,
    rank: usize,
) -> Result<Option<(Rational, Rational)>> {
    let base = sch.base();
    for r in scan_ranks(sch, rank)? {
        let count = cylinder_count(base, r, max_bits())?;
        let g0 = sch.map_prefix_index(0, r) as i128;
        let mut sign = 0i128;
        let mut first_of_sign = [0u64; 2];
        for j in 1..count {
            let d = sch.map_prefix_index(j, r) as i128 - g0;
            let pair = if d.abs() != j as i128 {
                Some((0, j))
            } else if sign == 0 || d.signum() == sign {
                sign = d.signum();
                first_of_sign[(sign > 0) as usize] = j;
                None
            } else {
                Some((first_of_sign[(sign > 0) as usize], j))
            };
            if let Some((i, j)) = pair {
                return Ok(Some((
                    at_rank(i, base, r, false),
                    at_rank(j, base, r, false),
                )));
            }
        }
    }
    let (zero, one) = (Rational::zero(), Rational::one());
    let span = pseudo_value(&one, sch)? - pseudo_value(&zero, sch)?;
    if span != one && span != -one.clone() {
        return Ok(Some((zero, one)));
    }
    Ok(None)
}
