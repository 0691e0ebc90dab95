use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use radixforge::analysis::{
    continuity_classify, distance_counterexample, distribution_grid, f_d_grid, jump_bound,
    monotonicity_scan, partition_integral, partition_integral_closed, Continuity,
    PositionProbabilities, ProbabilityVector,
};
use radixforge::cylinder::{
    adjacency_profile, children, cylinder_interval, image_of_cylinder, image_of_interval,
    pseudo_cylinder, Cylinder,
};
use radixforge::rational::{parse_rational, to_decimal};
use radixforge::repr::classify_point;
use radixforge::wire::{ClassificationJson, ImageSetJson, WordJson};
use radixforge::{
    expand, inverse_transform, transform, DigitWord, Error, NumeralSystem, OperatorSchedule,
    Periodic, Rational, SignPattern, SystemParams, SystemRegistry,
};
use serde_json::{json, Value};

use crate::report::{load_schedule, q, CliError, CliResult, Report};

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn interval(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("interval '{s}' is not of the form a:b"))?;
    Ok((rational(a)?, rational(b)?))
}

fn word(s: &str) -> Result<DigitWord, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn digit_list(s: &str) -> Result<Periodic<u32>, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn signs(s: &str) -> Result<SignPattern, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `"002"`, or `"1,11"` for digits above 9.
fn finite_digits(s: &str) -> Result<Vec<u32>, String> {
    let bad = || format!("malformed digits '{s}'");
    let s = s.trim();
    if s.is_empty() {
        Ok(Vec::new())
    } else if s.contains(',') {
        s.split(',')
            .map(|d| d.trim().parse().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect()
    }
}

fn periodic_text(p: &Periodic<u32>) -> String {
    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    format!("{}({})", join(p.pre()), join(p.per()))
}

fn word_json(w: &DigitWord) -> Value {
    serde_json::to_value(WordJson::from(w)).expect("word serializes")
}

fn cylinder_json(c: &Cylinder) -> Value {
    json!({ "base": c.base(), "digits": c.digits(), "lo": q(c.lo()), "hi": q(c.hi()), "length": q(&c.length()) })
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Rational,
    #[arg(long)]
    pub base: u32,
    /// Also print the second expansion of an s-rational value.
    #[arg(long)]
    pub all: bool,
}

impl ExpandArgs {
    pub fn run(&self) -> CliResult<Report> {
        let w = expand(&self.x, self.base)?;
        let forms = if self.all { w.expansions() } else { vec![w] };
        let plain = forms
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        let json = json!({ "x": q(&self.x), "expansions": forms.iter().map(word_json).collect::<Vec<_>>() });
        Ok(Report::new(plain, json))
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long, value_parser = word)]
    pub word: DigitWord,
}

impl EvalArgs {
    pub fn run(&self) -> CliResult<Report> {
        let v = self.word.value();
        let json =
            json!({ "word": word_json(&self.word), "value": q(&v), "decimal": to_decimal(&v, 12) });
        Ok(Report::new(v.to_string(), json))
    }
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(long, value_parser = word)]
    pub word: DigitWord,
    #[arg(long)]
    pub schedule: PathBuf,
    /// Apply the inverse operators instead.
    #[arg(long)]
    pub inverse: bool,
}

impl TransformArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = load_schedule(&self.schedule)?;
        let out = if self.inverse {
            inverse_transform(&self.word, &sch)?
        } else {
            transform(&self.word, &sch)?
        };
        let json = json!({
            "input": word_json(&self.word),
            "output": word_json(&out),
            "value": q(&out.value()),
        });
        Ok(Report::new(out.to_string(), json))
    }
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Rational,
    #[arg(long)]
    pub schedule: PathBuf,
}

impl ClassifyArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = load_schedule(&self.schedule)?;
        let c = classify_point(&self.x, &sch)?;
        let wire = ClassificationJson::from(&c);
        let mut plain = format!("kind {}\n", wire.kind);
        for i in &c.images {
            writeln!(
                plain,
                "{} -> {} = {} {}",
                i.source,
                i.image,
                i.value,
                i.kind.as_str()
            )
            .unwrap();
        }
        write!(plain, "equal {}", c.equal).unwrap();
        Ok(Report::new(
            plain,
            serde_json::to_value(wire).expect("classification serializes"),
        ))
    }
}

#[derive(Args, Debug)]
pub struct CylinderArgs {
    /// Cylinder base digits; empty for the whole interval.
    #[arg(long, default_value = "")]
    pub digits: String,
    #[arg(long)]
    pub base: Option<u32>,
    /// Treat the digits as a pseudo cylinder of this schedule and report its image.
    #[arg(long)]
    pub schedule: Option<PathBuf>,
    /// List the subcylinders one digit, or one block, deeper.
    #[arg(long)]
    pub children: bool,
}

impl CylinderArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = self.schedule.as_deref().map(load_schedule).transpose()?;
        let digits = finite_digits(&self.digits).map_err(CliError::Parse)?;
        let c = match (&sch, self.base) {
            (Some(s), Some(b)) if b != s.base() => {
                return Err(Error::BaseMismatch {
                    expected: s.base(),
                    found: b,
                }
                .into())
            }
            (Some(s), _) => pseudo_cylinder(&digits, s)?,
            (None, Some(b)) => cylinder_interval(&digits, b)?,
            (None, None) => {
                return Err(CliError::Parse(
                    "cylinder needs --base or --schedule".into(),
                ))
            }
        };
        let image = sch.as_ref().map(|s| image_of_cylinder(&c, s)).transpose()?;
        let kids = if self.children {
            children(&c, sch.as_ref())?
        } else {
            Vec::new()
        };
        let mut plain = format!("cylinder {} length {}", c, c.length());
        if let Some(img) = &image {
            write!(plain, "\nimage {img}").unwrap();
        }
        for k in &kids {
            write!(plain, "\nchild {k}").unwrap();
        }
        let json = json!({
            "cylinder": cylinder_json(&c),
            "image": image.as_ref().map(cylinder_json),
            "children": kids.iter().map(cylinder_json).collect::<Vec<_>>(),
        });
        Ok(Report::new(plain, json))
    }
}

#[derive(Args, Debug)]
pub struct ImageArgs {
    /// Closed interval `a:b`.
    #[arg(long, value_parser = interval)]
    pub interval: (Rational, Rational),
    #[arg(long)]
    pub schedule: PathBuf,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
}

impl ImageArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = load_schedule(&self.schedule)?;
        let (a, b) = &self.interval;
        let set = image_of_interval(a, b, &sch, self.depth as usize)?;
        let mut plain = String::new();
        for (lo, hi) in &set.intervals {
            writeln!(plain, "interval [{lo}, {hi}]").unwrap();
        }
        for p in &set.points {
            writeln!(plain, "point {p}").unwrap();
        }
        write!(plain, "measure {}", set.measure).unwrap();
        if !set.exact {
            write!(plain, "\ninexact, outer measure {}", set.outer_measure).unwrap();
        }
        let json = serde_json::to_value(ImageSetJson::from(&set)).expect("image set serializes");
        Ok(Report::new(plain, json))
    }
}

#[derive(Args, Debug)]
pub struct RankArgs {
    #[arg(long)]
    pub schedule: PathBuf,
    /// Cylinder rank; must be a block boundary of the schedule.
    #[arg(long)]
    pub rank: usize,
}

pub fn adjacency(args: &RankArgs) -> CliResult<Report> {
    let sch = load_schedule(&args.schedule)?;
    let p = adjacency_profile(&sch, args.rank)?;
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let sorted = p.sorted_bases();
    let plain = format!(
        "rank {} {}\nimages {}\norder {}",
        p.rank,
        p.arrangement.as_str(),
        list(&p.images),
        list(&sorted)
    );
    let mut csv = String::from("base,image\n");
    for (j, g) in p.images.iter().enumerate() {
        writeln!(csv, "{j},{g}").unwrap();
    }
    let json = json!({
        "rank": p.rank,
        "arrangement": p.arrangement.as_str(),
        "images": p.images,
        "sorted_bases": sorted,
    });
    Ok(Report::new(plain, json).with_csv(csv))
}

pub fn monotonicity(args: &RankArgs) -> CliResult<Report> {
    let sch = load_schedule(&args.schedule)?;
    let r = monotonicity_scan(&sch, args.rank)?;
    let mut plain = r.kind.as_str().to_string();
    if let Some(w) = &r.witness {
        let pts: Vec<String> = w.iter().map(|(x, y)| format!("{x} -> {y}")).collect();
        write!(plain, "\nwitness {}", pts.join(", ")).unwrap();
    }
    let witness = r.witness.as_ref().map(|w| {
        w.iter()
            .map(|(x, y)| json!({ "x": q(x), "y": q(y) }))
            .collect::<Vec<_>>()
    });
    Ok(Report::new(
        plain,
        json!({ "kind": r.kind.as_str(), "witness": witness }),
    ))
}

pub fn distance(args: &RankArgs) -> CliResult<Report> {
    let sch = load_schedule(&args.schedule)?;
    let Some((x1, x2)) = distance_counterexample(&sch, args.rank)? else {
        return Ok(Report::new("none", json!({ "pair": null })));
    };
    let (y1, y2) = (
        radixforge::pseudo_value(&x1, &sch)?,
        radixforge::pseudo_value(&x2, &sch)?,
    );
    let abs = |v: Rational| {
        if v < Rational::from_integer(0.into()) {
            -v
        } else {
            v
        }
    };
    let dx = abs(&x2 - &x1);
    let dy = abs(&y2 - &y1);
    let plain = format!("{x1} {x2} -> {y1} {y2}\n|dx| {dx} |dy| {dy}");
    let json = json!({
        "pair": { "x": [q(&x1), q(&x2)], "y": [q(&y1), q(&y2)], "dx": q(&dx), "dy": q(&dy) },
    });
    Ok(Report::new(plain, json))
}

#[derive(Args, Debug)]
pub struct ContinuityArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Rational,
    #[arg(long)]
    pub schedule: PathBuf,
}

impl ContinuityArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = load_schedule(&self.schedule)?;
        let c = continuity_classify(&self.x, &sch)?;
        let bound = jump_bound(&self.x, &sch)?;
        let (plain, mut json) = match &c {
            Continuity::Continuous => ("continuous".to_string(), json!({ "continuous": true })),
            Continuity::Jump { left, right, jump } => (
                format!("jump {jump}\nleft {left}\nright {right}"),
                json!({ "continuous": false, "left": q(left), "right": q(right), "jump": q(jump) }),
            ),
        };
        let mut plain = plain;
        if let Some(b) = &bound {
            write!(plain, "\nbound {b}").unwrap();
        }
        json["x"] = q(&self.x);
        json["bound"] = bound.as_ref().map_or(Value::Null, q);
        Ok(Report::new(plain, json))
    }
}

#[derive(Args, Debug)]
pub struct IntegralArgs {
    #[arg(long)]
    pub schedule: PathBuf,
    /// Number of schedule blocks in the partition.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub blocks: u64,
}

impl IntegralArgs {
    pub fn run(&self) -> CliResult<Report> {
        let sch = load_schedule(&self.schedule)?;
        let blocks = self.blocks as usize;
        let v = partition_integral(&sch, blocks)?;
        let rank = sch.boundary(blocks);
        let json = json!({
            "blocks": blocks,
            "rank": rank,
            "value": q(&v),
            "closed_form": q(&partition_integral_closed(sch.base(), rank)),
        });
        Ok(Report::new(v.to_string(), json))
    }
}

#[derive(Args, Debug)]
pub struct DistArgs {
    /// Digit probabilities `p_0,...,p_{s-1}`; repeat for per-position vectors.
    #[arg(long = "p", required = true)]
    pub p: Vec<String>,
    /// How many leading `--p` vectors form the preperiod; the rest repeat.
    #[arg(long, default_value_t = 0)]
    pub p_pre: usize,
    /// Read digits through this schedule.
    #[arg(long)]
    pub schedule: Option<PathBuf>,
    /// Evaluate `F(f(x))` with `f` the pseudo map of the schedule.
    #[arg(long, requires = "schedule")]
    pub compose: bool,
    /// Grid `i / (points - 1)` for `i = 0..points`.
    #[arg(long, default_value_t = 17, value_parser = clap::value_parser!(u64).range(2..))]
    pub points: u64,
    /// Evaluate at these points instead of the grid.
    #[arg(long = "x", value_parser = rational, allow_hyphen_values = true)]
    pub xs: Vec<Rational>,
    /// Fractional digits in the decimal columns.
    #[arg(long, default_value_t = 6)]
    pub places: usize,
}

impl DistArgs {
    fn probabilities(&self) -> CliResult<PositionProbabilities> {
        let vectors = self
            .p
            .iter()
            .map(|t| t.parse::<ProbabilityVector>())
            .collect::<Result<Vec<_>, _>>()?;
        if self.p_pre >= vectors.len() {
            return Err(CliError::Parse(format!(
                "--p-pre {} leaves no periodic vector among {} given",
                self.p_pre,
                vectors.len()
            )));
        }
        let mut pre = vectors;
        let per = pre.split_off(self.p_pre);
        Ok(PositionProbabilities::new(Periodic::new(pre, per)?)?)
    }

    pub fn run(&self) -> CliResult<Report> {
        let p = self.probabilities()?;
        let sch: Option<OperatorSchedule> =
            self.schedule.as_deref().map(load_schedule).transpose()?;
        let xs: Vec<Rational> = if self.xs.is_empty() {
            let n = self.points as i64 - 1;
            (0..=n).map(|i| Rational::new(i.into(), n.into())).collect()
        } else {
            self.xs.clone()
        };
        let ys = match (&sch, self.compose) {
            (Some(s), true) => f_d_grid(&xs, &p, s)?,
            _ => distribution_grid(&xs, &p, sch.as_ref())?,
        };
        let mut csv = String::from("x,x_decimal,F,F_decimal\n");
        for (x, y) in xs.iter().zip(&ys) {
            let d = |v: &Rational| to_decimal(v, self.places);
            writeln!(csv, "{x},{},{y},{}", d(x), d(y)).unwrap();
        }
        let rows: Vec<Value> = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| json!({ "x": q(x), "F": q(y) }))
            .collect();
        Ok(Report::new(csv.clone(), Value::Array(rows)).with_csv(csv))
    }
}

fn build(name: &str, params: &SystemParams) -> CliResult<Box<dyn NumeralSystem>> {
    Ok(SystemRegistry::with_builtins().build(name, params)?)
}

/// Value of `digits`, or the digits of `x`, in a registered system.
fn system_report(
    sys: &dyn NumeralSystem,
    digits: Option<&Periodic<u32>>,
    x: Option<&Rational>,
    show: impl Fn(&Periodic<u32>) -> CliResult<String>,
) -> CliResult<Report> {
    let (lo, hi) = sys.range();
    let (digits, value) = match (digits, x) {
        (Some(d), _) => (d.clone(), sys.value(d)?),
        (None, Some(x)) => (sys.encode(x)?, x.clone()),
        (None, None) => return Err(CliError::Parse("need digits or --x".into())),
    };
    let text = show(&digits)?;
    let plain = if x.is_some() {
        text.clone()
    } else {
        value.to_string()
    };
    let json = json!({
        "system": sys.name(),
        "digits": text,
        "value": q(&value),
        "range": [q(&lo), q(&hi)],
    });
    Ok(Report::new(plain, json))
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct WordOrValue {
    /// Digit word to evaluate, `"s:pre(per)"`.
    #[arg(long, value_parser = word)]
    pub word: Option<DigitWord>,
    /// Value to encode; needs --base.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct NegaArgs {
    #[command(flatten)]
    pub input: WordOrValue,
    #[arg(long)]
    pub base: Option<u32>,
}

impl NegaArgs {
    pub fn run(&self) -> CliResult<Report> {
        self.run_as("nega", None)
    }

    fn run_as(&self, name: &str, signs: Option<&SignPattern>) -> CliResult<Report> {
        let base = match (&self.input.word, self.base) {
            (Some(w), Some(b)) if w.base() != b => {
                return Err(Error::BaseMismatch {
                    expected: b,
                    found: w.base(),
                }
                .into())
            }
            (Some(w), _) => w.base(),
            (None, Some(b)) => b,
            (None, None) => return Err(CliError::Parse("--x needs --base".into())),
        };
        let params = SystemParams {
            base: Some(base),
            signs: signs.cloned(),
            ..SystemParams::default()
        };
        let sys = build(name, &params)?;
        let digits = self.input.word.as_ref().map(|w| w.digits().clone());
        system_report(sys.as_ref(), digits.as_ref(), self.input.x.as_ref(), |d| {
            Ok(DigitWord::from_periodic(base, d.clone())?.to_string())
        })
    }
}

#[derive(Args, Debug)]
pub struct QuasiNegaArgs {
    #[command(flatten)]
    pub nega: NegaArgs,
    /// Negative positions: odd, even, all, none, or a 0/1 word like `"1(01)"`.
    #[arg(long, value_parser = signs, default_value = "odd")]
    pub signs: SignPattern,
}

impl QuasiNegaArgs {
    pub fn run(&self) -> CliResult<Report> {
        self.nega.run_as("quasi-nega", Some(&self.signs))
    }
}

#[derive(Args, Debug)]
pub struct CantorArgs {
    /// Alphabet sizes `q_n`, e.g. `"(2,3)"`.
    #[arg(long, value_parser = digit_list)]
    pub bases: Periodic<u32>,
    /// Negative positions, for the sign-alternating variant.
    #[arg(long, value_parser = signs)]
    pub signs: Option<SignPattern>,
    /// Digits to evaluate, e.g. `"1,2(0)"`.
    #[arg(long, value_parser = digit_list, conflicts_with = "x", required_unless_present = "x")]
    pub digits: Option<Periodic<u32>>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub x: Option<Rational>,
}

impl CantorArgs {
    pub fn run(&self) -> CliResult<Report> {
        let params = SystemParams {
            bases: Some(self.bases.clone()),
            signs: self.signs.clone(),
            ..SystemParams::default()
        };
        let sys = build("cantor", &params)?;
        system_report(sys.as_ref(), self.digits.as_ref(), self.x.as_ref(), |d| {
            Ok(periodic_text(d))
        })
    }
}

pub fn systems() -> Report {
    let names: Vec<String> = SystemRegistry::with_builtins()
        .names()
        .map(String::from)
        .collect();
    Report::new(names.join("\n"), json!(names))
}
