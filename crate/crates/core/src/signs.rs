use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::periodic::Periodic;
use crate::word::parse_digit_lists;

/// Membership word of a set of positive integers: position `n` (one-based) is
/// `true` iff `n` belongs to the set. Positions in the set carry a minus sign
/// in quasi-nega expansions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignPattern(Periodic<bool>);

impl SignPattern {
    pub fn new(pre: Vec<bool>, per: Vec<bool>) -> Result<Self> {
        Ok(Self(Periodic::new(pre, per)?))
    }

    pub fn odd() -> Self {
        Self(Periodic::new(vec![], vec![true, false]).expect("nonempty"))
    }

    pub fn even() -> Self {
        Self(Periodic::new(vec![], vec![false, true]).expect("nonempty"))
    }

    pub fn all() -> Self {
        Self(Periodic::constant(true))
    }

    pub fn none() -> Self {
        Self(Periodic::constant(false))
    }

    /// Whether one-based position `n` is in the set.
    pub fn contains(&self, n: usize) -> bool {
        *self.0.at(n - 1)
    }

    pub fn pattern(&self) -> &Periodic<bool> {
        &self.0
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bit = |b: &bool| if *b { '1' } else { '0' };
        let pre: String = self.0.pre().iter().map(bit).collect();
        let per: String = self.0.per().iter().map(bit).collect();
        write!(f, "{pre}({per})")
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    /// `odd`, `even`, `all`, `none`, or a 0/1 word such as `"01(1)"`.
    fn from_str(text: &str) -> Result<Self> {
        match text.trim() {
            "odd" => return Ok(Self::odd()),
            "even" => return Ok(Self::even()),
            "all" => return Ok(Self::all()),
            "none" => return Ok(Self::none()),
            _ => {}
        }
        let (pre, per) = parse_digit_lists(text, false)?;
        let to_bits = |v: Vec<u32>| -> Result<Vec<bool>> {
            v.into_iter()
                .map(|d| match d {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(Error::parse(format!("sign pattern '{text}' must use 0/1"))),
                })
                .collect()
        };
        Self::new(to_bits(pre)?, to_bits(per)?)
    }
}
