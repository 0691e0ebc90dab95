//! Nega-s-adic and quasi-nega-s-adic expansions, evaluated through their
//! relation to plain s-adic words: flipping `a -> s-1-a` on the negative
//! positions turns the signed series into an s-adic word shifted by a
//! constant.

use num_traits::One;

use crate::error::{Error, Result};
use crate::periodic::{joint_shape, Periodic};
use crate::rational::ratio;
use crate::signs::SignPattern;
use crate::word::{check_base, expand, DigitWord};
use crate::Rational;

/// `w` with every odd-position digit replaced by `s-1-digit`. The preperiod
/// is padded to even length and the period doubled when odd, so parity is
/// fixed inside the period.
pub fn flip_odd(w: &DigitWord) -> DigitWord {
    let pre_len = w.pre().len() + w.pre().len() % 2;
    let per_len = if w.per().len().is_multiple_of(2) {
        w.per().len()
    } else {
        2 * w.per().len()
    };
    let shaped = w.reshaped(pre_len, per_len);
    let top = w.base() - 1;
    let flip = |(i, &d): (usize, &u32)| if i % 2 == 0 { top - d } else { d };
    let pre = shaped.pre().iter().enumerate().map(flip).collect();
    let per = shaped.per().iter().enumerate().map(flip).collect();
    DigitWord::new(w.base(), pre, per).expect("flipped digits stay in the alphabet")
}

/// `sum a_n / (-s)^n`, computed as `value(flip_odd(w)) - s/(s+1)`.
pub fn nega_value(w: &DigitWord, base: u32) -> Result<Rational> {
    if w.base() != base {
        return Err(Error::BaseMismatch {
            expected: base,
            found: w.base(),
        });
    }
    Ok(flip_odd(w).value() - ratio(base as i64, base as i64 + 1))
}

/// Nega-s-adic word for `x` in `[-s/(s+1), 1/(s+1)]`.
pub fn nega_expand(x: &Rational, base: u32) -> Result<DigitWord> {
    quasi_nega_expand(x, base, &SignPattern::odd())
}

/// `w` with digits flipped on the positions of `nb`.
pub fn flip_on(w: &DigitWord, nb: &SignPattern) -> DigitWord {
    let p = nb.pattern();
    let (pre_len, per_len) = joint_shape(&[
        (w.pre().len(), w.per().len()),
        (p.pre().len(), p.per().len()),
    ]);
    let shaped = w.reshaped(pre_len, per_len);
    let top = w.base() - 1;
    let flip = |offset: usize| {
        move |(i, &d): (usize, &u32)| {
            if nb.contains(offset + i + 1) {
                top - d
            } else {
                d
            }
        }
    };
    let pre = shaped.pre().iter().enumerate().map(flip(0)).collect();
    let per = shaped.per().iter().enumerate().map(flip(pre_len)).collect();
    DigitWord::new(w.base(), pre, per).expect("flipped digits stay in the alphabet")
}

/// Left end `a'_0 = -sum_{n in N_B} (s-1)/s^n` of the representable range.
fn lower_bound(base: u32, nb: &SignPattern) -> Result<Rational> {
    check_base(base)?;
    let top = base - 1;
    let word = DigitWord::from_periodic(base, nb.pattern().map(|&b| if b { top } else { 0 }))?;
    Ok(-word.value())
}

/// `(a'_0, a''_0)` with `a''_0 = 1 + a'_0`.
pub fn quasi_bounds(base: u32, nb: &SignPattern) -> Result<(Rational, Rational)> {
    let lo = lower_bound(base, nb)?;
    let hi = &lo + Rational::one();
    Ok((lo, hi))
}

/// `sum (-1)^{rho_n} a_n / s^n` with a minus sign exactly on `nb`.
pub fn quasi_nega_value(w: &DigitWord, base: u32, nb: &SignPattern) -> Result<Rational> {
    if w.base() != base {
        return Err(Error::BaseMismatch {
            expected: base,
            found: w.base(),
        });
    }
    Ok(flip_on(w, nb).value() + lower_bound(base, nb)?)
}

pub fn quasi_nega_expand(x: &Rational, base: u32, nb: &SignPattern) -> Result<DigitWord> {
    let (lo, hi) = quasi_bounds(base, nb)?;
    if *x < lo || *x > hi {
        return Err(Error::out_of_range(x, lo, hi));
    }
    Ok(flip_on(&expand(&(x - &lo), base)?, nb))
}

/// Joint shape helper shared with the Cantor module.
pub(crate) fn shape_of<T>(p: &Periodic<T>) -> (usize, usize) {
    (p.pre().len(), p.per().len())
}
