//! Pinned worked examples, recomputed on every run.

use std::fmt::Write as _;

use radixforge::analysis::{distance_counterexample, monotonicity_scan, partition_integral};
use radixforge::cylinder::{
    adjacency_profile, children, cylinder_interval, image_of_cylinder, image_of_interval, Cylinder,
};
use radixforge::rational::parse_rational;
use radixforge::repr::{classify_point, nega_value, quasi_bounds};
use radixforge::{
    expand, inverse_transform, pseudo_value, transform, BlockOp, DigitWord, OperatorSchedule,
    Rational, Result, SignPattern,
};
use serde_json::json;

use crate::report::Report;

fn op(base: u32, len: usize, index: u64) -> Result<BlockOp> {
    BlockOp::from_index(base, len, &index.into())
}

/// Binary op on pairs: 00 -> 10, 01 -> 11, 10 -> 00, 11 -> 01.
fn pair_swap() -> Result<OperatorSchedule> {
    Ok(OperatorSchedule::constant(op(2, 2, 16)?))
}

/// 0->3, 1->5, 2->6, 3->4, 4->0, 5->2, 6->1.
fn septenary() -> Result<OperatorSchedule> {
    Ok(OperatorSchedule::constant(op(7, 1, 2755)?))
}

/// Ternary swap of digits 1 and 2.
fn theta() -> Result<OperatorSchedule> {
    Ok(OperatorSchedule::constant(op(3, 1, 1)?))
}

type Check = fn() -> Result<(String, String)>;

fn r(text: &str) -> Rational {
    parse_rational(text).expect("fixture rational")
}

fn w(text: &str) -> DigitWord {
    text.parse().expect("fixture word")
}

fn pair(got: impl ToString, want: &str) -> Result<(String, String)> {
    Ok((got.to_string(), want.to_string()))
}

const CHECKS: &[(&str, Check)] = &[
    ("expand 2/27 in base 3", || {
        pair(expand(&r("2/27"), 3)?, "3:002(0)")
    }),
    ("second expansion of 2/27", || {
        pair(w("3:002(0)").dual_form().unwrap(), "3:001(2)")
    }),
    ("canonical form of 2:0(1)", || {
        pair(w("2:0(1)").canonical(), "2:1(0)")
    }),
    ("value of 3:001(2)", || pair(w("3:001(2)").value(), "2/27")),
    ("ternary op 1 table", || {
        pair(format!("{:?}", op(3, 1, 1)?.rank_table()), "[0, 2, 1]")
    }),
    ("ternary op 4 table", || {
        pair(format!("{:?}", op(3, 1, 4)?.rank_table()), "[2, 0, 1]")
    }),
    ("identity has index 0", || {
        pair(BlockOp::identity(3, 1)?.index(), "0")
    }),
    ("pair op maps 11 to 01", || {
        pair(format!("{:?}", op(2, 2, 16)?.apply(&[1, 1])?), "[0, 1]")
    }),
    ("septenary op maps 1 to 5", || {
        pair(format!("{:?}", op(7, 1, 2755)?.apply(&[1])?), "[5]")
    }),
    ("ternary swap is an involution", || {
        let t = op(3, 1, 1)?;
        pair(t.compose(&t)?.is_identity(), "true")
    }),
    ("septenary op cubed", || {
        let c = op(7, 1, 2755)?.pow(3);
        let img: Vec<usize> = [0, 3, 4, 1].iter().map(|&d| c.map_rank(d)).collect();
        pair(format!("{img:?}"), "[0, 3, 4, 6]")
    }),
    ("septenary op order", || pair(op(7, 1, 2755)?.order(), "12")),
    ("pair op transform", || {
        pair(
            transform(&w("2:1110011001(11)"), &pair_swap()?)?,
            "2:0100110011(01)",
        )
    }),
    ("septenary transform", || {
        pair(
            transform(&w("7:3455142(1)"), &septenary()?)?,
            "7:4022506(5)",
        )
    }),
    ("pair op inverse transform", || {
        pair(
            inverse_transform(&w("2:0100110011(01)"), &pair_swap()?)?,
            "2:1110011001(11)",
        )
    }),
    ("ternary swap inverse equals transform", || {
        let (x, t) = (w("3:0120(21)"), theta()?);
        pair(inverse_transform(&x, &t)? == transform(&x, &t)?, "true")
    }),
    ("ternary swap at 1/3", || {
        pair(pseudo_value(&r("1/3"), &theta()?)?, "2/3")
    }),
    ("ternary swap at 4/9", || {
        pair(pseudo_value(&r("4/9"), &theta()?)?, "8/9")
    }),
    ("ternary swap splits 2/27", || {
        let c = classify_point(&r("2/27"), &theta()?)?;
        let vals: Vec<String> = c.images.iter().map(|i| i.value.to_string()).collect();
        pair(format!("{} {}", vals.join(" "), c.equal), "1/27 5/54 false")
    }),
    ("nega-binary value of (10)", || {
        pair(nega_value(&w("2:(10)"), 2)?, "-2/3")
    }),
    ("nega-binary range", || {
        let (lo, hi) = quasi_bounds(2, &SignPattern::odd())?;
        pair(format!("{lo} {hi}"), "-2/3 1/3")
    }),
    ("cylinder 3:002", || {
        let c = cylinder_interval(&[0, 0, 2], 3)?;
        pair(format!("{} {}", c, c.length()), "3:002 [2/27, 1/9] 1/27")
    }),
    ("rank-2 children of the root", || {
        let sch = pair_swap()?;
        let kids = children(&Cylinder::root(2)?, Some(&sch))?;
        let lens: Vec<String> = kids.iter().map(|c| c.length().to_string()).collect();
        pair(lens.join(" "), "1/4 1/4 1/4 1/4")
    }),
    ("ternary swap cylinder images", || {
        let t = theta()?;
        let a = image_of_cylinder(&cylinder_interval(&[0, 0, 2], 3)?, &t)?;
        let b = image_of_cylinder(&cylinder_interval(&[0, 1, 0], 3)?, &t)?;
        pair(format!("{a} {b}"), "3:001 [1/27, 2/27] 3:020 [2/9, 7/27]")
    }),
    ("ternary swap image of [2/27, 4/27]", || {
        let set = image_of_interval(&r("2/27"), &r("4/27"), &theta()?, 3)?;
        let mut got = String::new();
        for (lo, hi) in &set.intervals {
            write!(got, "[{lo}, {hi}] ").unwrap();
        }
        for p in &set.points {
            write!(got, "{p} ").unwrap();
        }
        write!(got, "{}", set.measure).unwrap();
        pair(got, "[1/27, 2/27] [2/9, 7/27] 5/54 8/27 2/27")
    }),
    ("identity cylinders keep order", || {
        pair(
            adjacency_profile(&OperatorSchedule::identity(2)?, 3)?
                .arrangement
                .as_str(),
            "left-to-right",
        )
    }),
    ("nega-binary cylinders reverse", || {
        pair(
            adjacency_profile(&OperatorSchedule::nega(2)?, 1)?
                .arrangement
                .as_str(),
            "right-to-left",
        )
    }),
    ("identity is increasing", || {
        pair(
            monotonicity_scan(&OperatorSchedule::identity(2)?, 4)?
                .kind
                .as_str(),
            "strictly-increasing",
        )
    }),
    ("complement is decreasing", || {
        pair(
            monotonicity_scan(&OperatorSchedule::complement(2)?, 4)?
                .kind
                .as_str(),
            "strictly-decreasing",
        )
    }),
    ("ternary swap changes distances", || {
        let t = theta()?;
        let (x1, x2) = (r("1/3"), r("4/9"));
        let dy = pseudo_value(&x2, &t)? - pseudo_value(&x1, &t)?;
        pair(format!("{dy} {}", &x2 - &x1), "2/9 1/9")
    }),
    ("complement keeps distances", || {
        pair(
            distance_counterexample(&OperatorSchedule::complement(2)?, 6)?.is_none(),
            "true",
        )
    }),
    ("partition integral, one block", || {
        pair(partition_integral(&pair_swap()?, 1)?, "3/8")
    }),
    ("partition integral, rank 1", || {
        pair(partition_integral(&OperatorSchedule::nega(2)?, 1)?, "1/4")
    }),
    ("partition integral, rank 3", || {
        pair(partition_integral(&OperatorSchedule::nega(2)?, 3)?, "7/16")
    }),
];

/// Runs every check; the report fails when any check does.
pub fn run() -> Report {
    let mut plain = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for (name, check) in CHECKS {
        let (pass, detail) = match check() {
            Ok((got, want)) if got == want => (true, got),
            Ok((got, want)) => (false, format!("got {got}, want {want}")),
            Err(e) => (false, format!("error: {e}")),
        };
        if pass {
            writeln!(plain, "PASS {name}").unwrap();
        } else {
            failed += 1;
            writeln!(plain, "FAIL {name}: {detail}").unwrap();
        }
        rows.push(json!({ "name": name, "pass": pass, "detail": detail }));
    }
    write!(plain, "{} passed, {failed} failed", CHECKS.len() - failed).unwrap();
    let mut report = Report::new(plain, json!({ "checks": rows, "failed": failed }));
    report.ok = failed == 0;
    report
}
