use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::operators::OperatorSchedule;
use crate::rational::{in_unit_interval, inv_pow};
use crate::repr::transform;
use crate::word::expand;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Continuity {
    Continuous,
    Jump {
        left: Rational,
        right: Rational,
        jump: Rational,
    },
}

impl Continuity {
    pub fn jump(&self) -> Rational {
        match self {
            Continuity::Continuous => Rational::zero(),
            Continuity::Jump { jump, .. } => jump.clone(),
        }
    }
}

fn check_point(x0: &Rational) -> Result<()> {
    if in_unit_interval(x0) {
        Ok(())
    } else {
        Err(Error::out_of_range(x0, Rational::zero(), Rational::one()))
    }
}

/// One-sided limits of the pseudo map at `x0`: the left limit is the image of
/// the `(s-1)`-tailed expansion, the right limit that of the terminating one.
pub fn continuity_classify(x0: &Rational, sch: &OperatorSchedule) -> Result<Continuity> {
    check_point(x0)?;
    let forms = expand(x0, sch.base())?.expansions();
    let [canonical, dual] = forms.as_slice() else {
        return Ok(Continuity::Continuous);
    };
    let right = transform(canonical, sch)?.value();
    let left = transform(dual, sch)?.value();
    if left == right {
        return Ok(Continuity::Continuous);
    }
    let jump = (&right - &left).abs();
    Ok(Continuity::Jump { left, right, jump })
}

/// `s^-(k_1+...+k_{t-1})` where block `t` holds the last nonzero digit of
/// `x0`; both expansions agree on the earlier blocks. `None` for points
/// with a single expansion.
pub fn jump_bound(x0: &Rational, sch: &OperatorSchedule) -> Result<Option<Rational>> {
    check_point(x0)?;
    let w = expand(x0, sch.base())?;
    if w.dual_form().is_none() {
        return Ok(None);
    }
    let t = sch.block_of_position(w.pre().len());
    Ok(Some(inv_pow(sch.base(), sch.boundary(t))))
}
