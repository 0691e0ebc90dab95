//! Distribution function of `eta = sum xi_n / s^n` with independent digits
//! `xi_n` taking value `i` with probability `p_{i,n}`, and its composition
//! with the pseudo map.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::operators::OperatorSchedule;
use crate::periodic::{joint_shape, Periodic};
use crate::rational::parse_rational;
use crate::repr::{pseudo_value, transform};
use crate::word::{expand, DigitWord};
use crate::Rational;

/// Digit probabilities `p_0, ..., p_{s-1}`, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProbabilityVector(Vec<Rational>);

impl ProbabilityVector {
    pub fn new(p: Vec<Rational>) -> Result<Self> {
        if p.len() < 2 {
            return Err(Error::InvalidProbabilities(format!(
                "need at least 2 entries, got {}",
                p.len()
            )));
        }
        if let Some(bad) = p.iter().find(|q| q.is_negative() || **q > Rational::one()) {
            return Err(Error::InvalidProbabilities(format!(
                "entry {bad} is outside [0, 1]"
            )));
        }
        let total: Rational = p.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidProbabilities(format!(
                "entries sum to {total}, not 1"
            )));
        }
        Ok(Self(p))
    }

    pub fn uniform(base: u32) -> Result<Self> {
        let q = Rational::new(1.into(), base.into());
        Self::new(vec![q; base as usize])
    }

    pub fn base(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn probs(&self) -> &[Rational] {
        &self.0
    }

    /// Cumulative offsets `a_i = p_0 + ... + p_{i-1}`.
    pub fn offsets(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.0
            .iter()
            .map(|p| {
                let a = acc.clone();
                acc += p;
                a
            })
            .collect()
    }
}

impl FromStr for ProbabilityVector {
    type Err = Error;

    /// Comma-separated exact rationals, e.g. `"1/4,3/4"`.
    fn from_str(text: &str) -> Result<Self> {
        let p = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Self::new(p)
    }
}

/// Eventually periodic sequence of probability vectors, one per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionProbabilities {
    probs: Periodic<ProbabilityVector>,
    /// Common denominator `D` of every entry.
    den: BigInt,
    /// `(D p_i, D a_i)` per position.
    scaled: Periodic<(Vec<BigInt>, Vec<BigInt>)>,
}

impl PositionProbabilities {
    pub fn new(probs: Periodic<ProbabilityVector>) -> Result<Self> {
        let base = probs.at(0).base();
        let all = || probs.pre().iter().chain(probs.per());
        if let Some(v) = all().find(|v| v.base() != base) {
            return Err(Error::InvalidProbabilities(format!(
                "vectors of lengths {base} and {} mixed",
                v.base()
            )));
        }
        let den = all()
            .flat_map(|v| v.probs().iter())
            .fold(BigInt::one(), |d, q| d.lcm(q.denom()));
        let scale = |q: &Rational| (q * &den).to_integer();
        let scaled = probs.map(|v| {
            (
                v.probs().iter().map(scale).collect(),
                v.offsets().iter().map(scale).collect(),
            )
        });
        Ok(Self { probs, den, scaled })
    }

    pub fn base(&self) -> u32 {
        self.probs.at(0).base()
    }

    pub fn vectors(&self) -> &Periodic<ProbabilityVector> {
        &self.probs
    }
}

impl From<ProbabilityVector> for PositionProbabilities {
    fn from(p: ProbabilityVector) -> Self {
        Self::new(Periodic::constant(p)).expect("single vector")
    }
}

/// `a_{b_1,1} + sum_{n>=2} a_{b_n,n} prod_{j<n} p_{b_j,j}` for the digits
/// `b` of `w`, summed over the preperiod and telescoped over the period.
pub fn distribution_of_word(w: &DigitWord, p: &PositionProbabilities) -> Result<Rational> {
    if w.base() != p.base() {
        return Err(Error::BaseMismatch {
            expected: p.base(),
            found: w.base(),
        });
    }
    if w.is_value_one() {
        return Ok(Rational::one());
    }
    let (pre, per) = joint_shape(&[
        (w.pre().len(), w.per().len()),
        (p.probs.pre().len(), p.probs.per().len()),
    ]);
    // after n digits the partial sum is acc / D^n and the weight is wt / D^n
    let digits = w.digits();
    let run = |range: std::ops::Range<usize>| {
        let mut acc = BigInt::zero();
        let mut wt = BigInt::one();
        for n in range {
            let d = *digits.at(n) as usize;
            let (scaled_p, scaled_a) = p.scaled.at(n);
            acc = acc * &p.den + &scaled_a[d] * &wt;
            wt *= &scaled_p[d];
        }
        (acc, wt)
    };
    let (head, weight) = run(0..pre);
    let (cycle, ratio) = run(pre..pre + per);
    let d_pre = num_traits::pow(p.den.clone(), pre);
    let gap = num_traits::pow(p.den.clone(), per) - ratio;
    if gap.is_zero() {
        if !cycle.is_zero() {
            return Err(Error::Divergent);
        }
        return Ok(Rational::new(head, d_pre));
    }
    // head / D^pre + (weight / D^pre) * cycle / (D^per - ratio)
    Ok(Rational::new(head * &gap + weight * cycle, d_pre * gap))
}

/// `F(x)`: 0 below 0, 1 above 1. With a schedule the digits used are the
/// blockwise image of the expansion of `x`, so `F(1)` follows the image of
/// the all-`(s-1)` word.
pub fn distribution(
    x: &Rational,
    p: &PositionProbabilities,
    sch: Option<&OperatorSchedule>,
) -> Result<Rational> {
    if let Some(sch) = sch {
        if sch.base() != p.base() {
            return Err(Error::BaseMismatch {
                expected: p.base(),
                found: sch.base(),
            });
        }
    }
    if x.is_negative() {
        return Ok(Rational::zero());
    }
    if *x > Rational::one() || (x.is_one() && sch.is_none()) {
        return Ok(Rational::one());
    }
    let w = expand(x, p.base())?;
    let digits = match sch {
        Some(sch) => transform(&w, sch)?,
        None => w,
    };
    distribution_of_word(&digits, p)
}

/// `F(f(x))` with `f` the pseudo map.
pub fn f_d(x: &Rational, p: &PositionProbabilities, sch: &OperatorSchedule) -> Result<Rational> {
    distribution(&pseudo_value(x, sch)?, p, None)
}

/// `F` on every grid point, in grid order.
pub fn distribution_grid(
    xs: &[Rational],
    p: &PositionProbabilities,
    sch: Option<&OperatorSchedule>,
) -> Result<Vec<Rational>> {
    xs.par_iter().map(|x| distribution(x, p, sch)).collect()
}

/// `f_D` on every grid point, in grid order.
pub fn f_d_grid(
    xs: &[Rational],
    p: &PositionProbabilities,
    sch: &OperatorSchedule,
) -> Result<Vec<Rational>> {
    xs.par_iter().map(|x| f_d(x, p, sch)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pv(t: &str) -> PositionProbabilities {
        t.parse::<ProbabilityVector>().unwrap().into()
    }

    #[test]
    fn vector_validation() {
        assert!("1/2,1/3".parse::<ProbabilityVector>().is_err());
        assert!("3/2,-1/2".parse::<ProbabilityVector>().is_err());
        assert!("1".parse::<ProbabilityVector>().is_err());
        assert!("0.5,0.5"
            .parse::<ProbabilityVector>()
            .unwrap_err()
            .is_parse());
        let p: ProbabilityVector = "1/6,1/3,1/2".parse().unwrap();
        assert_eq!(p.offsets(), vec![ratio(0, 1), ratio(1, 6), ratio(1, 2)]);
    }

    #[test]
    fn uniform_is_identity() {
        let p = pv("1/2,1/2");
        for x in [
            ratio(0, 1),
            ratio(1, 3),
            ratio(5, 8),
            ratio(9, 11),
            ratio(1, 1),
        ] {
            assert_eq!(distribution(&x, &p, None).unwrap(), x);
        }
    }

    #[test]
    fn skewed_values() {
        let p = pv("1/4,3/4");
        assert_eq!(distribution(&ratio(1, 2), &p, None).unwrap(), ratio(1, 4));
        assert_eq!(distribution(&ratio(0, 1), &p, None).unwrap(), ratio(0, 1));
        assert_eq!(distribution(&ratio(-3, 1), &p, None).unwrap(), ratio(0, 1));
        assert_eq!(distribution(&ratio(7, 5), &p, None).unwrap(), ratio(1, 1));
        // 3/4 = 0.11: a_1 + a_1 p_1
        assert_eq!(
            distribution(&ratio(3, 4), &p, None).unwrap(),
            ratio(1, 4) + ratio(3, 16)
        );
    }

    #[test]
    fn degenerate_vectors() {
        let p = pv("0,1");
        assert_eq!(distribution(&ratio(1, 3), &p, None).unwrap(), ratio(0, 1));
        assert_eq!(distribution(&ratio(3, 4), &p, None).unwrap(), ratio(0, 1));
        let p = pv("1,0");
        assert_eq!(distribution(&ratio(1, 3), &p, None).unwrap(), ratio(1, 1));
    }

    #[test]
    fn composition_paths_agree() {
        let p = pv("1/4,3/4");
        let c = OperatorSchedule::complement(2).unwrap();
        assert_eq!(f_d(&ratio(0, 1), &p, &c).unwrap(), ratio(1, 1));
        for x in [ratio(0, 1), ratio(1, 5), ratio(1, 2), ratio(1, 1)] {
            assert_eq!(
                f_d(&x, &p, &c).unwrap(),
                distribution(&x, &p, Some(&c)).unwrap()
            );
        }
        let u = pv("1/2,1/2");
        assert_eq!(f_d(&ratio(1, 5), &u, &c).unwrap(), ratio(4, 5));
    }

    #[test]
    fn per_position_vectors() {
        let probs = Periodic::new(
            vec!["1/3,2/3".parse().unwrap()],
            vec!["1/2,1/2".parse().unwrap(), "1/4,3/4".parse().unwrap()],
        )
        .unwrap();
        let p = PositionProbabilities::new(probs).unwrap();
        // 0.101 = a_{1,1} + p_{1,1} (a_{0,2} + p_{0,2} a_{1,3})
        let want = ratio(1, 3) + ratio(2, 3) * (ratio(0, 1) + ratio(1, 2) * ratio(1, 4));
        assert_eq!(distribution(&ratio(5, 8), &p, None).unwrap(), want);
        assert_eq!(distribution(&ratio(1, 1), &p, None).unwrap(), ratio(1, 1));
        let mixed = Periodic::new(
            vec![],
            vec!["1/2,1/2".parse().unwrap(), "1/3,1/3,1/3".parse().unwrap()],
        )
        .unwrap();
        assert!(PositionProbabilities::new(mixed).is_err());
    }

    #[test]
    fn grid_keeps_order() {
        let p = pv("1/3,2/3");
        let xs: Vec<Rational> = (0..=16).map(|i| ratio(i, 16)).collect();
        let ys = distribution_grid(&xs, &p, None).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(*y, distribution(x, &p, None).unwrap());
        }
        assert!(ys.windows(2).all(|w| w[0] <= w[1]));
    }
}
