use crate::error::{Error, Result};
use crate::operators::OperatorSchedule;
use crate::periodic::Periodic;
use crate::word::{expand, DigitWord};
use crate::Rational;

/// Blockwise rewrite of `w` through `sch`.
///
/// The output is written with preperiod `A`, the first block boundary at or
/// beyond both the schedule preperiod and `w`'s preperiod, and period
/// `lcm(|w.period|, K_p)` where `K_p` is the digit width of one schedule
/// period. Past `A` the digits and the block pattern repeat jointly with that
/// period. The output is not canonicalized.
pub fn transform(w: &DigitWord, sch: &OperatorSchedule) -> Result<DigitWord> {
    if w.base() != sch.base() {
        return Err(Error::BaseMismatch {
            expected: sch.base(),
            found: w.base(),
        });
    }
    let k0 = sch.pre_digits();
    let kp = sch.period_digits();
    let pre_len = if w.pre().len() <= k0 {
        k0
    } else {
        k0 + (w.pre().len() - k0).div_ceil(kp) * kp
    };
    let per_len = num_integer::lcm(w.per().len(), kp);
    let shaped = w.reshaped(pre_len, per_len);
    let digits: Vec<u32> = shaped.pre().iter().chain(shaped.per()).copied().collect();
    let mut out = sch.map_prefix(&digits)?;
    let per = out.split_off(pre_len);
    DigitWord::from_periodic(w.base(), Periodic::new(out, per)?)
}

pub fn inverse_transform(w: &DigitWord, sch: &OperatorSchedule) -> Result<DigitWord> {
    transform(w, &sch.inverse())
}

/// Value of the pseudo map at `x`, using the canonical (terminating)
/// expansion of `x`.
pub fn pseudo_value(x: &Rational, sch: &OperatorSchedule) -> Result<Rational> {
    Ok(transform(&expand(x, sch.base())?, sch)?.value())
}

/// Whether a representation is a two-representation value in its system:
/// its word ends in `(0)` or `(s-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudoKind {
    PseudoRational,
    PseudoIrrational,
}

impl PseudoKind {
    pub fn of(image: &DigitWord) -> Self {
        if image.is_terminating() || image.has_top_tail() {
            PseudoKind::PseudoRational
        } else {
            PseudoKind::PseudoIrrational
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PseudoKind::PseudoRational => "pseudo-rational",
            PseudoKind::PseudoIrrational => "pseudo-irrational",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointImage {
    pub source: DigitWord,
    pub image: DigitWord,
    pub value: Rational,
    pub kind: PseudoKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointClassification {
    pub x: Rational,
    /// `x` has two s-adic expansions.
    pub s_rational: bool,
    /// Images of every expansion of `x`, canonical first.
    pub images: Vec<PointImage>,
    /// All images have the same value.
    pub equal: bool,
}

pub fn classify_point(x: &Rational, sch: &OperatorSchedule) -> Result<PointClassification> {
    let canonical = expand(x, sch.base())?;
    let images = canonical
        .expansions()
        .into_iter()
        .map(|source| {
            let image = transform(&source, sch)?;
            Ok(PointImage {
                value: image.value(),
                kind: PseudoKind::of(&image),
                source,
                image,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let equal = images.windows(2).all(|p| p[0].value == p[1].value);
    Ok(PointClassification {
        x: x.clone(),
        s_rational: images.len() == 2,
        images,
        equal,
    })
}

/// Values `x` having some expansion whose image is some expansion of `y`,
/// sorted ascending.
pub fn preimages(y: &Rational, sch: &OperatorSchedule) -> Result<Vec<Rational>> {
    let mut out = expand(y, sch.base())?
        .expansions()
        .iter()
        .map(|e| inverse_transform(e, sch).map(|w| w.value()))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}
