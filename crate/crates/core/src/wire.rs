//! Serde forms used for JSON input and output. Rationals travel as `"p/q"`
//! strings and operator indices as decimal strings.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::cylinder::ImageSet;
use crate::error::{Error, Result};
use crate::operators::{rank_tuple, BlockOp, OperatorSchedule};
use crate::repr::PointClassification;
use crate::word::DigitWord;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordJson {
    pub s: u32,
    #[serde(default)]
    pub pre: Vec<u32>,
    pub per: Vec<u32>,
}

impl From<&DigitWord> for WordJson {
    fn from(w: &DigitWord) -> Self {
        Self {
            s: w.base(),
            pre: w.pre().to_vec(),
            per: w.per().to_vec(),
        }
    }
}

impl TryFrom<WordJson> for DigitWord {
    type Error = Error;

    fn try_from(w: WordJson) -> Result<Self> {
        DigitWord::new(w.s, w.pre, w.per)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpBody {
    Index {
        index: String,
    },
    /// Image tuple of each input tuple, inputs in lexicographic order.
    Table {
        table: Vec<Vec<u32>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpJson {
    pub s: u32,
    pub k: usize,
    #[serde(flatten)]
    pub body: OpBody,
}

impl OpJson {
    pub fn table_of(op: &BlockOp) -> Self {
        let table = op
            .rank_table()
            .iter()
            .map(|&r| rank_tuple(op.base(), op.len(), r))
            .collect();
        Self {
            s: op.base(),
            k: op.len(),
            body: OpBody::Table { table },
        }
    }
}

impl From<&BlockOp> for OpJson {
    fn from(op: &BlockOp) -> Self {
        Self {
            s: op.base(),
            k: op.len(),
            body: OpBody::Index {
                index: op.index().to_string(),
            },
        }
    }
}

impl TryFrom<OpJson> for BlockOp {
    type Error = Error;

    fn try_from(op: OpJson) -> Result<Self> {
        match op.body {
            OpBody::Index { index } => {
                let i: BigUint = index.trim().parse().map_err(|_| {
                    Error::parse(format!("operator index '{index}' is not a decimal integer"))
                })?;
                BlockOp::from_index(op.s, op.k, &i)
            }
            OpBody::Table { table } => BlockOp::from_tuples(op.s, op.k, &table),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleJson {
    pub s: u32,
    #[serde(default)]
    pub pre: Vec<OpJson>,
    pub per: Vec<OpJson>,
}

impl From<&OperatorSchedule> for ScheduleJson {
    fn from(sch: &OperatorSchedule) -> Self {
        let ops = sch.ops();
        Self {
            s: sch.base(),
            pre: ops.pre().iter().map(OpJson::from).collect(),
            per: ops.per().iter().map(OpJson::from).collect(),
        }
    }
}

impl TryFrom<ScheduleJson> for OperatorSchedule {
    type Error = Error;

    fn try_from(s: ScheduleJson) -> Result<Self> {
        let convert = |ops: Vec<OpJson>| {
            ops.into_iter()
                .map(BlockOp::try_from)
                .collect::<Result<Vec<_>>>()
        };
        OperatorSchedule::new(s.s, convert(s.pre)?, convert(s.per)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageSetJson {
    pub intervals: Vec<[String; 2]>,
    pub points: Vec<String>,
    pub measure: String,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer_measure: Option<String>,
}

impl From<&ImageSet> for ImageSetJson {
    fn from(set: &ImageSet) -> Self {
        Self {
            intervals: set
                .intervals
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
            points: set.points.iter().map(Rational::to_string).collect(),
            measure: set.measure.to_string(),
            exact: set.exact,
            outer_measure: (!set.exact).then(|| set.outer_measure.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    /// `s-rational` for two expansions, `single` otherwise.
    pub kind: String,
    pub x: String,
    pub sources: Vec<WordJson>,
    pub images: Vec<WordJson>,
    pub values: Vec<String>,
    pub pseudo_kinds: Vec<String>,
    pub equal: bool,
}

impl From<&PointClassification> for ClassificationJson {
    fn from(c: &PointClassification) -> Self {
        Self {
            kind: if c.s_rational { "s-rational" } else { "single" }.to_string(),
            x: c.x.to_string(),
            sources: c.images.iter().map(|i| WordJson::from(&i.source)).collect(),
            images: c.images.iter().map(|i| WordJson::from(&i.image)).collect(),
            values: c.images.iter().map(|i| i.value.to_string()).collect(),
            pseudo_kinds: c
                .images
                .iter()
                .map(|i| i.kind.as_str().to_string())
                .collect(),
            equal: c.equal,
        }
    }
}
