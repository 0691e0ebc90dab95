//! Eventually periodic s-adic digit words and their exact values.
//!
//! A [`DigitWord`] `s:a_1...a_m(b_1...b_L)` denotes the expansion
//! `sum a_n / s^n` whose digits repeat `b_1...b_L` forever after the
//! preperiod. Every such word has a rational value and every rational in
//! `[0, 1]` has one.
//!
//! Canonical words prefer the terminating `(0)` tail. The value `1` is the only
//! canonical word with an all-`(s-1)` period.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::periodic::Periodic;
use crate::rational::{big_pow, in_unit_interval};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitWord {
    base: u32,
    digits: Periodic<u32>,
}

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

impl DigitWord {
    pub fn new(base: u32, pre: Vec<u32>, per: Vec<u32>) -> Result<Self> {
        Self::from_periodic(base, Periodic::new(pre, per)?)
    }

    pub fn from_periodic(base: u32, digits: Periodic<u32>) -> Result<Self> {
        check_base(base)?;
        let bad = digits
            .pre()
            .iter()
            .chain(digits.per())
            .enumerate()
            .find(|(_, &d)| d >= base);
        if let Some((position, &digit)) = bad {
            return Err(Error::DigitOutOfRange {
                digit,
                position,
                size: base,
            });
        }
        Ok(Self { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn pre(&self) -> &[u32] {
        self.digits.pre()
    }

    pub fn per(&self) -> &[u32] {
        self.digits.per()
    }

    pub fn digits(&self) -> &Periodic<u32> {
        &self.digits
    }

    /// Digit at one-based position `n`.
    pub fn digit(&self, n: usize) -> u32 {
        assert!(n >= 1, "digit positions start at 1");
        *self.digits.at(n - 1)
    }

    /// Word with the same digit sequence, written with the given shape.
    pub fn reshaped(&self, pre_len: usize, per_len: usize) -> Self {
        Self {
            base: self.base,
            digits: self.digits.reshape(pre_len, per_len),
        }
    }

    /// Exact value `(P + Q / (s^L - 1)) / s^M`.
    pub fn value(&self) -> Rational {
        let s = self.base;
        let p = digits_to_int(self.pre(), s);
        let q = digits_to_int(self.per(), s);
        let tail = Rational::new(q, big_pow(s, self.per().len()) - BigInt::one());
        (Rational::from_integer(p) + tail) / Rational::from_integer(big_pow(s, self.pre().len()))
    }

    pub fn is_value_one(&self) -> bool {
        let top = self.base - 1;
        self.pre().iter().chain(self.per()).all(|&d| d == top)
    }

    /// Tail is all zeros.
    pub fn is_terminating(&self) -> bool {
        self.per().iter().all(|&d| d == 0)
    }

    /// Tail is all `s-1`.
    pub fn has_top_tail(&self) -> bool {
        self.per().iter().all(|&d| d == self.base - 1)
    }

    /// The unique canonical word with the same value.
    pub fn canonical(&self) -> Self {
        let min = self.digits.minimized();
        let top = self.base - 1;
        if min.per() == [top] && !min.pre().is_empty() {
            // last preperiod digit is below s-1 after minimization
            let (mut pre, _) = min.into_parts();
            *pre.last_mut().expect("nonempty") += 1;
            let bumped = Periodic::new(pre, vec![0]).expect("nonempty period");
            return Self {
                base: self.base,
                digits: bumped.minimized(),
            };
        }
        Self {
            base: self.base,
            digits: min,
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// The other expansion of an s-adic rational in `(0, 1)`.
    ///
    /// For canonical `a_1...a_m(0)` with `a_m != 0` this is
    /// `a_1...[a_m - 1](s-1)`. Values without a second expansion (0, 1 and
    /// all non-terminating values) give `None`.
    pub fn dual_form(&self) -> Option<Self> {
        let c = self.canonical();
        if c.per() != [0] || c.pre().is_empty() {
            return None;
        }
        let mut pre = c.pre().to_vec();
        *pre.last_mut().expect("nonempty") -= 1;
        Some(Self {
            base: self.base,
            digits: Periodic::new(pre, vec![self.base - 1]).expect("nonempty period"),
        })
    }

    /// Both expansions of the value, canonical first.
    pub fn expansions(&self) -> Vec<Self> {
        let c = self.canonical();
        match c.dual_form() {
            Some(d) => vec![c, d],
            None => vec![c],
        }
    }
}

fn digits_to_int(digits: &[u32], base: u32) -> BigInt {
    digits.iter().fold(BigInt::zero(), |acc, &d| acc * base + d)
}

/// Canonical base-`s` expansion of `x` in `[0, 1]`.
///
/// Long division with a remainder table: the tail after position `n` has
/// value `r_n / q`, so the first repeated remainder closes the minimal period.
pub fn expand(x: &Rational, base: u32) -> Result<DigitWord> {
    check_base(base)?;
    if !in_unit_interval(x) {
        return Err(Error::out_of_range(x, Rational::zero(), Rational::one()));
    }
    if x.is_one() {
        return DigitWord::new(base, vec![], vec![base - 1]);
    }
    let den: BigUint = x.denom().to_biguint().expect("positive denominator");
    let mut rem: BigUint = x.numer().to_biguint().expect("nonnegative numerator");
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&start) = seen.get(&rem) {
            let per = digits.split_off(start);
            return DigitWord::new(base, digits, per);
        }
        seen.insert(rem.clone(), digits.len());
        let (d, r) = (rem * base).div_rem(&den);
        digits.push(d.to_u32().expect("digit below base"));
        rem = r;
    }
}

/// Value of `w`, checking that it is written over base `s`.
pub fn evaluate(w: &DigitWord, base: u32) -> Result<Rational> {
    if w.base() != base {
        return Err(Error::BaseMismatch {
            expected: base,
            found: w.base(),
        });
    }
    Ok(w.value())
}

pub fn canonicalize(w: &DigitWord) -> DigitWord {
    w.canonical()
}

pub fn dual_form(w: &DigitWord, base: u32) -> Option<DigitWord> {
    if w.base() != base {
        return None;
    }
    w.dual_form()
}

pub(crate) fn write_digits(f: &mut impl fmt::Write, digits: &[u32], base: u32) -> fmt::Result {
    if base > 10 {
        let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
        f.write_str(&parts.join(","))
    } else {
        digits.iter().try_for_each(|d| write!(f, "{d}"))
    }
}

/// Parses `"pre(per)"` digit lists: single characters when `comma` is false,
/// comma-separated integers otherwise.
pub(crate) fn parse_digit_lists(text: &str, comma: bool) -> Result<(Vec<u32>, Vec<u32>)> {
    let t = text.trim();
    let open = t
        .find('(')
        .ok_or_else(|| Error::parse(format!("missing '(' in '{text}'")))?;
    if !t.ends_with(')') {
        return Err(Error::parse(format!("missing closing ')' in '{text}'")));
    }
    let pre = parse_digit_list(&t[..open], comma, text)?;
    let per = parse_digit_list(&t[open + 1..t.len() - 1], comma, text)?;
    if per.is_empty() {
        return Err(Error::parse(format!("empty period in '{text}'")));
    }
    Ok((pre, per))
}

fn parse_digit_list(part: &str, comma: bool, whole: &str) -> Result<Vec<u32>> {
    let part = part.trim().trim_end_matches(',');
    if part.is_empty() {
        return Ok(Vec::new());
    }
    let bad = || Error::parse(format!("malformed digits in '{whole}'"));
    if comma {
        part.split(',')
            .map(|d| d.trim().parse::<u32>().map_err(|_| bad()))
            .collect()
    } else {
        part.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect()
    }
}

impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.base)?;
        write_digits(f, self.pre(), self.base)?;
        f.write_str("(")?;
        write_digits(f, self.per(), self.base)?;
        f.write_str(")")
    }
}

impl FromStr for DigitWord {
    type Err = Error;

    /// `"3:002(0)"`, or `"12:1,11(3,0)"` when the base exceeds 10.
    fn from_str(text: &str) -> Result<Self> {
        let (base, rest) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("digit word '{text}' lacks 'base:' prefix")))?;
        let base: u32 = base
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("malformed base in '{text}'")))?;
        let (pre, per) = parse_digit_lists(rest, base > 10)?;
        DigitWord::new(base, pre, per)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn w(text: &str) -> DigitWord {
        text.parse().unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&ratio(1, 3), 3).unwrap(), w("3:1(0)"));
        assert_eq!(expand(&ratio(1, 3), 2).unwrap(), w("2:(01)"));
        assert_eq!(expand(&ratio(2, 27), 3).unwrap(), w("3:002(0)"));
        assert_eq!(expand(&ratio(0, 1), 5).unwrap(), w("5:(0)"));
        assert_eq!(expand(&ratio(1, 1), 3).unwrap(), w("3:(2)"));
    }

    #[test]
    fn expand_rejects_bad_inputs() {
        assert!(matches!(
            expand(&ratio(4, 3), 2),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(
            expand(&ratio(-1, 3), 2),
            Err(Error::OutOfRange { .. })
        ));
        assert_eq!(expand(&ratio(1, 3), 1), Err(Error::InvalidBase(1)));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(w("2:(10)").value(), ratio(2, 3));
        assert_eq!(w("2:(0)").value(), ratio(0, 1));
        assert_eq!(w("3:002(2)").value(), ratio(1, 9));
        assert_eq!(w("3:001(2)").value(), ratio(2, 27));
        assert_eq!(w("3:002(0)").value(), ratio(2, 27));
        assert_eq!(
            evaluate(&w("3:1(0)"), 2),
            Err(Error::BaseMismatch {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn digits_must_fit_the_alphabet() {
        assert_eq!(
            DigitWord::new(3, vec![0, 3], vec![0]),
            Err(Error::DigitOutOfRange {
                digit: 3,
                position: 1,
                size: 3
            })
        );
        assert!("3:03(0)".parse::<DigitWord>().is_err());
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(w("2:10(00)").canonical(), w("2:1(0)"));
        assert_eq!(w("2:0(11)").canonical(), w("2:1(0)"));
        assert_eq!(w("3:(2)").canonical(), w("3:(2)"));
        assert_eq!(w("2:0111(1)").canonical(), w("2:1(0)"));
        assert_eq!(w("3:1(22)").canonical(), w("3:2(0)"));
        let c = w("2:1110011001(11)").canonical();
        assert_eq!(c, w("2:111001101(0)"));
        assert_eq!(c.value(), w("2:1110011001(11)").value());
    }

    #[test]
    fn dual_form_examples() {
        assert_eq!(w("2:1(0)").dual_form(), Some(w("2:0(1)")));
        assert_eq!(w("3:002(0)").dual_form(), Some(w("3:001(2)")));
        assert_eq!(w("2:(01)").dual_form(), None);
        assert_eq!(w("2:(0)").dual_form(), None);
        assert_eq!(w("2:(1)").dual_form(), None);
    }

    #[test]
    fn text_form_round_trips() {
        for t in [
            "3:002(0)",
            "2:(01)",
            "7:3455142(1)",
            "12:1,11(3,0)",
            "12:(11)",
        ] {
            assert_eq!(w(t).to_string(), t);
        }
        assert!("3002(0)".parse::<DigitWord>().unwrap_err().is_parse());
        assert!("3:002()".parse::<DigitWord>().unwrap_err().is_parse());
        assert!("3:002(0".parse::<DigitWord>().unwrap_err().is_parse());
    }
}
