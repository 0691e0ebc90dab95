//! Cylinder intervals of the s-adic and pseudo systems and images of
//! intervals under the pseudo map.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits::{cylinder_count, max_bits};
use crate::operators::OperatorSchedule;
use crate::rational::inv_pow;
use crate::repr::transform;
use crate::word::{check_base, expand};
use crate::Rational;

/// All numbers whose expansion starts with `digits`: the closed interval
/// `[0.c_1...c_m(0), 0.c_1...c_m(s-1)]` of length `s^-m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cylinder {
    base: u32,
    digits: Vec<u32>,
    lo: Rational,
    hi: Rational,
}

impl Cylinder {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        let mut numer = BigInt::zero();
        for (position, &d) in digits.iter().enumerate() {
            if d >= base {
                return Err(Error::DigitOutOfRange {
                    digit: d,
                    position,
                    size: base,
                });
            }
            numer = numer * base + d;
        }
        let width = inv_pow(base, digits.len());
        let lo = Rational::from_integer(numer) * &width;
        let hi = &lo + width;
        Ok(Self {
            base,
            digits,
            lo,
            hi,
        })
    }

    pub fn root(base: u32) -> Result<Self> {
        Self::new(base, Vec::new())
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn rank(&self) -> usize {
        self.digits.len()
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    fn child(&self, tail: &[u32]) -> Self {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(tail);
        Self::new(self.base, digits).expect("digits below base")
    }
}

impl fmt::Display for Cylinder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits.iter().map(u32::to_string).collect();
        let sep = if self.base > 10 { "," } else { "" };
        write!(
            f,
            "{}:{} [{}, {}]",
            self.base,
            digits.join(sep),
            self.lo,
            self.hi
        )
    }
}

pub fn cylinder_interval(digits: &[u32], base: u32) -> Result<Cylinder> {
    Cylinder::new(base, digits.to_vec())
}

/// Cylinder of the pseudo system; its rank must be a block boundary.
pub fn pseudo_cylinder(digits: &[u32], sch: &OperatorSchedule) -> Result<Cylinder> {
    sch.require_boundary(digits.len())?;
    Cylinder::new(sch.base(), digits.to_vec())
}

/// Subcylinders one digit deeper, or one block deeper when a schedule is
/// given, in increasing order of their digits.
pub fn children(c: &Cylinder, sch: Option<&OperatorSchedule>) -> Result<Vec<Cylinder>> {
    let k = match sch {
        None => 1,
        Some(sch) => {
            if sch.base() != c.base {
                return Err(Error::BaseMismatch {
                    expected: sch.base(),
                    found: c.base,
                });
            }
            sch.block(sch.require_boundary(c.rank())?).len()
        }
    };
    let count = (c.base as usize).pow(k as u32);
    Ok((0..count)
        .map(|r| c.child(&crate::operators::rank_tuple(c.base, k, r)))
        .collect())
}

/// Cylinder whose digits are the blockwise image of `c`'s digits.
pub fn image_of_cylinder(c: &Cylinder, sch: &OperatorSchedule) -> Result<Cylinder> {
    if sch.base() != c.base {
        return Err(Error::BaseMismatch {
            expected: sch.base(),
            found: c.base,
        });
    }
    Cylinder::new(c.base, sch.map_prefix(&c.digits)?)
}

/// Disjoint closed intervals plus isolated points outside them.
///
/// When the interval does not split into cylinders of rank at most the
/// requested depth, `exact` is false, `intervals` and `measure` describe the
/// inner approximation and `outer_measure` bounds the image from above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageSet {
    pub intervals: Vec<(Rational, Rational)>,
    pub points: Vec<Rational>,
    pub measure: Rational,
    pub outer_measure: Rational,
    pub exact: bool,
}

impl ImageSet {
    pub fn covers(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|(lo, hi)| lo <= x && x <= hi)
    }
}

/// Cylinders of rank at most `depth` inside `[a, b]`, chosen greedily at
/// block boundaries, and the rank-`depth` cylinders that straddle `a` or `b`.
fn decompose(
    a: &Rational,
    b: &Rational,
    sch: &OperatorSchedule,
    depth: usize,
) -> Result<(Vec<Cylinder>, Vec<Cylinder>)> {
    let mut inner = Vec::new();
    let mut partial = Vec::new();
    let mut stack = vec![Cylinder::root(sch.base())?];
    while let Some(c) = stack.pop() {
        if c.hi <= *a || c.lo >= *b {
            continue;
        }
        if c.lo >= *a && c.hi <= *b {
            inner.push(c);
        } else if c.rank() >= depth {
            partial.push(c);
        } else {
            let mut kids = children(&c, Some(sch))?;
            kids.reverse();
            stack.extend(kids);
        }
    }
    Ok((inner, partial))
}

fn merge(mut pieces: Vec<(Rational, Rational)>) -> Vec<(Rational, Rational)> {
    pieces.sort();
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(pieces.len());
    for (lo, hi) in pieces {
        match out.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Image of `[a, b]` under the pseudo map, resolved down to rank `depth`.
///
/// Both expansions of each endpoint are mapped when the decomposition is
/// exact; images landing outside the interval union become isolated points.
pub fn image_of_interval(
    a: &Rational,
    b: &Rational,
    sch: &OperatorSchedule,
    depth: usize,
) -> Result<ImageSet> {
    if a.is_negative() || a >= b || *b > Rational::one() {
        return Err(Error::invalid_interval(a, b));
    }
    sch.require_boundary(depth)?;
    let (inner, partial) = decompose(a, b, sch, depth)?;
    let measure: Rational = inner.iter().map(Cylinder::length).sum();
    let outer_measure = &measure + partial.iter().map(Cylinder::length).sum::<Rational>();
    let images = inner
        .iter()
        .map(|c| image_of_cylinder(c, sch).map(|i| (i.lo, i.hi)))
        .collect::<Result<Vec<_>>>()?;
    let mut set = ImageSet {
        intervals: merge(images),
        points: Vec::new(),
        measure,
        outer_measure,
        exact: partial.is_empty(),
    };
    if set.exact {
        let mut points = Vec::new();
        for e in [a, b] {
            for form in expand(e, sch.base())?.expansions() {
                let v = transform(&form, sch)?.value();
                if !set.covers(&v) {
                    points.push(v);
                }
            }
        }
        points.sort();
        points.dedup();
        set.points = points;
    }
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arrangement {
    LeftToRight,
    RightToLeft,
    Mixed,
}

impl Arrangement {
    pub fn as_str(&self) -> &'static str {
        match self {
            Arrangement::LeftToRight => "left-to-right",
            Arrangement::RightToLeft => "right-to-left",
            Arrangement::Mixed => "mixed",
        }
    }
}

/// Where each rank-`n` cylinder lands: `images[j]` is the left-to-right
/// position of the image of the cylinder with base `j` (read in base `s`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyProfile {
    pub rank: usize,
    pub images: Vec<u64>,
    pub arrangement: Arrangement,
}

impl AdjacencyProfile {
    /// Bases listed in the left-to-right order of their images.
    pub fn sorted_bases(&self) -> Vec<u64> {
        let mut out = vec![0; self.images.len()];
        for (j, &g) in self.images.iter().enumerate() {
            out[g as usize] = j as u64;
        }
        out
    }
}

pub fn adjacency_profile(sch: &OperatorSchedule, n: usize) -> Result<AdjacencyProfile> {
    sch.require_boundary(n)?;
    let count = cylinder_count(sch.base(), n, max_bits())?;
    let images: Vec<u64> = (0..count).map(|j| sch.map_prefix_index(j, n)).collect();
    let arrangement = if images.iter().enumerate().all(|(j, &g)| g == j as u64) {
        Arrangement::LeftToRight
    } else if images
        .iter()
        .enumerate()
        .all(|(j, &g)| g == count - 1 - j as u64)
    {
        Arrangement::RightToLeft
    } else {
        Arrangement::Mixed
    };
    Ok(AdjacencyProfile {
        rank: n,
        images,
        arrangement,
    })
}
