//! Digit-level maps between numeral systems.

mod cantor;
mod signed;
mod transform;

pub use cantor::{cantor_value, CantorSeries};
pub use signed::{
    flip_odd, flip_on, nega_expand, nega_value, quasi_bounds, quasi_nega_expand, quasi_nega_value,
};
pub use transform::{
    classify_point, inverse_transform, preimages, pseudo_value, transform, PointClassification,
    PointImage, PseudoKind,
};
