//! Eventually periodic sequences: a finite preperiod followed by a nonempty
//! period repeated forever.
//!
//! Digit words, sign patterns, operator schedules, Cantor bases and
//! per-position probabilities are all instances of [`Periodic`].

use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::word::parse_digit_lists;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Periodic<T> {
    pre: Vec<T>,
    per: Vec<T>,
}

impl<T> Periodic<T> {
    pub fn new(pre: Vec<T>, per: Vec<T>) -> Result<Self> {
        if per.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(Self { pre, per })
    }

    /// The sequence `x, x, x, ...`.
    pub fn constant(x: T) -> Self {
        Self {
            pre: Vec::new(),
            per: vec![x],
        }
    }

    pub fn pre(&self) -> &[T] {
        &self.pre
    }

    pub fn per(&self) -> &[T] {
        &self.per
    }

    pub fn into_parts(self) -> (Vec<T>, Vec<T>) {
        (self.pre, self.per)
    }

    /// Element at zero-based position `n`.
    pub fn at(&self, n: usize) -> &T {
        if n < self.pre.len() {
            &self.pre[n]
        } else {
            &self.per[(n - self.pre.len()) % self.per.len()]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.pre.iter().chain(self.per.iter().cycle())
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Periodic<U> {
        let mut f = f;
        Periodic {
            pre: self.pre.iter().map(&mut f).collect(),
            per: self.per.iter().map(&mut f).collect(),
        }
    }
}

impl<T: Clone> Periodic<T> {
    /// Same sequence written with a preperiod of `pre_len` and a period of
    /// `per_len` elements. Requires `pre_len >= pre().len()` and `per_len` a
    /// positive multiple of `per().len()`.
    pub fn reshape(&self, pre_len: usize, per_len: usize) -> Self {
        assert!(
            pre_len >= self.pre.len(),
            "reshape cannot shorten the preperiod"
        );
        assert!(
            per_len > 0 && per_len.is_multiple_of(self.per.len()),
            "reshape period must be a multiple of the current period"
        );
        Self {
            pre: (0..pre_len).map(|n| self.at(n).clone()).collect(),
            per: (pre_len..pre_len + per_len)
                .map(|n| self.at(n).clone())
                .collect(),
        }
    }
}

impl<T: Clone + PartialEq> Periodic<T> {
    /// Shortest period, then shortest preperiod. Two sequences are equal
    /// element-wise iff their minimized forms are structurally equal.
    pub fn minimized(&self) -> Self {
        let n = self.per.len();
        let d = (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .find(|&d| (d..n).all(|i| self.per[i] == self.per[i - d]))
            .unwrap_or(n);
        let mut pre = self.pre.clone();
        let mut per = self.per[..d].to_vec();
        while let Some(last) = pre.last() {
            if last != per.last().expect("period is nonempty") {
                break;
            }
            pre.pop();
            per.rotate_right(1);
        }
        Self { pre, per }
    }

    pub fn same_sequence(&self, other: &Self) -> bool {
        self.minimized() == other.minimized()
    }
}

/// Preperiod and period lengths over which every given sequence can be
/// written simultaneously.
pub fn joint_shape(shapes: &[(usize, usize)]) -> (usize, usize) {
    shapes
        .iter()
        .fold((0, 1), |(pre, per), &(p, q)| (pre.max(p), per.lcm(&q)))
}

impl FromStr for Periodic<u32> {
    type Err = Error;

    /// Comma-separated integers, `"1,2(0)"` or `"(2,3)"`.
    fn from_str(text: &str) -> Result<Self> {
        let (pre, per) = parse_digit_lists(text, true)?;
        Self::new(pre, per)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pre: &[u32], per: &[u32]) -> Periodic<u32> {
        Periodic::new(pre.to_vec(), per.to_vec()).unwrap()
    }

    #[test]
    fn parses_integer_lists() {
        assert_eq!(
            "1,12(0)".parse::<Periodic<u32>>().unwrap(),
            p(&[1, 12], &[0])
        );
        assert_eq!("(2,3)".parse::<Periodic<u32>>().unwrap(), p(&[], &[2, 3]));
        assert!("1,2".parse::<Periodic<u32>>().unwrap_err().is_parse());
    }

    #[test]
    fn empty_period_is_rejected() {
        assert_eq!(
            Periodic::<u32>::new(vec![1], vec![]),
            Err(Error::EmptyPeriod)
        );
    }

    #[test]
    fn indexing_wraps_into_period() {
        let s = p(&[7, 8], &[1, 2, 3]);
        let got: Vec<u32> = (0..9).map(|n| *s.at(n)).collect();
        assert_eq!(got, vec![7, 8, 1, 2, 3, 1, 2, 3, 1]);
        assert_eq!(s.iter().take(9).copied().collect::<Vec<_>>(), got);
    }

    #[test]
    fn minimize_shrinks_period_then_preperiod() {
        assert_eq!(p(&[1, 0], &[0, 0]).minimized(), p(&[1], &[0]));
        assert_eq!(p(&[0, 1, 0], &[1, 0]).minimized(), p(&[], &[0, 1]));
        assert_eq!(p(&[2, 1, 2], &[1, 2]).minimized(), p(&[], &[2, 1]));
        assert_eq!(p(&[3, 1, 2], &[1, 2]).minimized(), p(&[3], &[1, 2]));
    }

    #[test]
    fn reshape_preserves_elements() {
        let s = p(&[5], &[1, 2]);
        let r = s.reshape(4, 6);
        assert_eq!(r.pre(), &[5, 1, 2, 1]);
        assert_eq!(r.per(), &[2, 1, 2, 1, 2, 1]);
        assert!(r.same_sequence(&s));
    }

    #[test]
    fn joint_shape_takes_max_and_lcm() {
        assert_eq!(joint_shape(&[(3, 4), (1, 6)]), (3, 12));
        assert_eq!(joint_shape(&[]), (0, 1));
    }
}
