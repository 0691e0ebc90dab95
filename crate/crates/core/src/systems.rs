//! Numeral systems behind one trait, registered by name.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::operators::OperatorSchedule;
use crate::periodic::Periodic;
use crate::repr::{
    inverse_transform, nega_expand, nega_value, quasi_bounds, quasi_nega_expand, quasi_nega_value,
    transform, CantorSeries,
};
use crate::signs::SignPattern;
use crate::word::{check_base, expand, DigitWord};
use crate::Rational;

/// A positional system mapping eventually periodic digit words to values.
pub trait NumeralSystem: Send + Sync {
    fn name(&self) -> &'static str;

    /// Closed interval of representable values.
    fn range(&self) -> (Rational, Rational);

    fn value(&self, digits: &Periodic<u32>) -> Result<Rational>;

    /// A digit word with `value(encode(x)) == x`.
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>>;
}

impl fmt::Debug for dyn NumeralSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumeralSystem({})", self.name())
    }
}

/// Inputs a factory may draw on. Unused fields are ignored.
#[derive(Debug, Clone, Default)]
pub struct SystemParams {
    pub base: Option<u32>,
    pub schedule: Option<OperatorSchedule>,
    pub signs: Option<SignPattern>,
    pub bases: Option<Periodic<u32>>,
}

impl SystemParams {
    fn need<T: Clone>(field: &Option<T>, system: &str, param: &str) -> Result<T> {
        field.clone().ok_or_else(|| Error::MissingParameter {
            system: system.to_string(),
            param: param.to_string(),
        })
    }
}

pub type Factory = fn(&SystemParams) -> Result<Box<dyn NumeralSystem>>;

struct SAdic(u32);

impl NumeralSystem for SAdic {
    fn name(&self) -> &'static str {
        "s-adic"
    }
    fn range(&self) -> (Rational, Rational) {
        (Rational::zero(), Rational::one())
    }
    fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        Ok(DigitWord::from_periodic(self.0, digits.clone())?.value())
    }
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>> {
        Ok(expand(x, self.0)?.digits().clone())
    }
}

struct Nega(u32);

impl NumeralSystem for Nega {
    fn name(&self) -> &'static str {
        "nega"
    }
    fn range(&self) -> (Rational, Rational) {
        quasi_bounds(self.0, &SignPattern::odd()).expect("base checked")
    }
    fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        nega_value(&DigitWord::from_periodic(self.0, digits.clone())?, self.0)
    }
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>> {
        Ok(nega_expand(x, self.0)?.digits().clone())
    }
}

struct QuasiNega(u32, SignPattern);

impl NumeralSystem for QuasiNega {
    fn name(&self) -> &'static str {
        "quasi-nega"
    }
    fn range(&self) -> (Rational, Rational) {
        quasi_bounds(self.0, &self.1).expect("base checked")
    }
    fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        quasi_nega_value(
            &DigitWord::from_periodic(self.0, digits.clone())?,
            self.0,
            &self.1,
        )
    }
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>> {
        Ok(quasi_nega_expand(x, self.0, &self.1)?.digits().clone())
    }
}

/// Digits are s-adic; the value is that of the blockwise image.
struct Pseudo(OperatorSchedule);

impl NumeralSystem for Pseudo {
    fn name(&self) -> &'static str {
        "pseudo"
    }
    fn range(&self) -> (Rational, Rational) {
        (Rational::zero(), Rational::one())
    }
    fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        let w = DigitWord::from_periodic(self.0.base(), digits.clone())?;
        Ok(transform(&w, &self.0)?.value())
    }
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>> {
        let w = inverse_transform(&expand(x, self.0.base())?, &self.0)?;
        Ok(w.digits().clone())
    }
}

struct Cantor(CantorSeries);

impl NumeralSystem for Cantor {
    fn name(&self) -> &'static str {
        "cantor"
    }
    fn range(&self) -> (Rational, Rational) {
        self.0.bounds()
    }
    fn value(&self, digits: &Periodic<u32>) -> Result<Rational> {
        self.0.value(digits)
    }
    fn encode(&self, x: &Rational) -> Result<Periodic<u32>> {
        self.0.expand(x)
    }
}

fn base_of(p: &SystemParams, system: &str) -> Result<u32> {
    let base = SystemParams::need(&p.base, system, "base")?;
    check_base(base)?;
    Ok(base)
}

fn make_sadic(p: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
    Ok(Box::new(SAdic(base_of(p, "s-adic")?)))
}

fn make_nega(p: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
    Ok(Box::new(Nega(base_of(p, "nega")?)))
}

fn make_quasi(p: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
    let signs = SystemParams::need(&p.signs, "quasi-nega", "signs")?;
    Ok(Box::new(QuasiNega(base_of(p, "quasi-nega")?, signs)))
}

fn make_pseudo(p: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
    let schedule = SystemParams::need(&p.schedule, "pseudo", "schedule")?;
    if let Some(base) = p.base {
        if base != schedule.base() {
            return Err(Error::BaseMismatch {
                expected: schedule.base(),
                found: base,
            });
        }
    }
    Ok(Box::new(Pseudo(schedule)))
}

fn make_cantor(p: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
    let bases = SystemParams::need(&p.bases, "cantor", "bases")?;
    Ok(Box::new(Cantor(CantorSeries::new(bases, p.signs.clone())?)))
}

/// Name-to-factory table.
#[derive(Clone)]
pub struct SystemRegistry {
    factories: BTreeMap<String, Factory>,
}

impl SystemRegistry {
    pub fn empty() -> Self {
        Self {
            factories: BTreeMap::new(),
        }
    }

    /// `s-adic`, `nega`, `quasi-nega`, `pseudo` and `cantor`.
    pub fn with_builtins() -> Self {
        let mut r = Self::empty();
        r.register("s-adic", make_sadic);
        r.register("nega", make_nega);
        r.register("quasi-nega", make_quasi);
        r.register("pseudo", make_pseudo);
        r.register("cantor", make_cantor);
        r
    }

    /// Adds or replaces a factory.
    pub fn register(&mut self, name: &str, factory: Factory) {
        self.factories.insert(name.to_string(), factory);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.factories.keys().map(String::as_str)
    }

    pub fn build(&self, name: &str, params: &SystemParams) -> Result<Box<dyn NumeralSystem>> {
        let factory = self
            .factories
            .get(name)
            .ok_or_else(|| Error::UnknownSystem(name.to_string()))?;
        factory(params)
    }
}

impl Default for SystemRegistry {
    fn default() -> Self {
        Self::with_builtins()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::BlockOp;
    use crate::rational::ratio;

    fn params(base: u32) -> SystemParams {
        SystemParams {
            base: Some(base),
            ..Default::default()
        }
    }

    #[test]
    fn builtins_are_listed() {
        let r = SystemRegistry::with_builtins();
        let names: Vec<&str> = r.names().collect();
        assert_eq!(names, ["cantor", "nega", "pseudo", "quasi-nega", "s-adic"]);
    }

    #[test]
    fn unknown_and_missing() {
        let r = SystemRegistry::default();
        assert!(matches!(
            r.build("golden", &params(2)),
            Err(Error::UnknownSystem(_))
        ));
        assert!(matches!(
            r.build("pseudo", &params(2)),
            Err(Error::MissingParameter { param, .. }) if param == "schedule"
        ));
    }

    #[test]
    fn every_builtin_encodes_and_decodes() {
        let r = SystemRegistry::with_builtins();
        let k2 = BlockOp::from_rank_table(2, 2, vec![2, 3, 0, 1]).unwrap();
        let p = SystemParams {
            base: Some(2),
            schedule: Some(OperatorSchedule::constant(k2)),
            signs: Some("1(10)".parse().unwrap()),
            bases: Some(Periodic::new(vec![3], vec![2, 5]).unwrap()),
        };
        for name in ["s-adic", "nega", "quasi-nega", "pseudo", "cantor"] {
            let sys = r.build(name, &p).unwrap();
            let (lo, hi) = sys.range();
            for t in [ratio(0, 1), ratio(1, 3), ratio(2, 7), ratio(1, 1)] {
                let x = &lo + t * (&hi - &lo);
                let digits = sys.encode(&x).unwrap();
                assert_eq!(sys.value(&digits).unwrap(), x, "{name} at {x}");
            }
        }
    }

    #[test]
    fn custom_factory_overrides() {
        let mut r = SystemRegistry::empty();
        r.register("binary", |_| Ok(Box::new(SAdic(2))));
        let sys = r.build("binary", &SystemParams::default()).unwrap();
        assert_eq!(
            sys.value(&Periodic::new(vec![], vec![1, 0]).unwrap())
                .unwrap(),
            ratio(2, 3)
        );
    }
}
