//! Exact arithmetic for pseudo-s-adic numeral systems.
//!
//! Every value is an exact [`Rational`]. Eventually periodic digit words
//! ([`DigitWord`]) stand for rationals in `[0, 1]`; an [`OperatorSchedule`]
//! rewrites them block by block through permutations of digit tuples
//! ([`BlockOp`]), which defines the pseudo map studied by [`cylinder`] and
//! [`analysis`].
//!
//! ```
//! use radixforge::{transform, BlockOp, DigitWord, OperatorSchedule};
//!
//! let op = BlockOp::from_rank_table(2, 2, vec![2, 3, 0, 1]).unwrap();
//! let sch = OperatorSchedule::constant(op);
//! let w: DigitWord = "2:1110011001(11)".parse().unwrap();
//! assert_eq!(transform(&w, &sch).unwrap().to_string(), "2:0100110011(01)");
//! ```

pub mod analysis;
pub mod cylinder;
pub mod error;
pub mod limits;
pub mod operators;
pub mod periodic;
pub mod rational;
pub mod repr;
pub mod signs;
pub mod systems;
pub mod wire;
pub mod word;

pub use error::{Error, Result};
pub use operators::{BlockOp, OperatorSchedule};
pub use periodic::Periodic;
pub use repr::{inverse_transform, pseudo_value, transform};
pub use signs::SignPattern;
pub use systems::{NumeralSystem, SystemParams, SystemRegistry};
pub use word::{expand, DigitWord};

pub type Rational = num_rational::BigRational;
