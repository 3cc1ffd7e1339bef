//! Exact arithmetic: slopes, torus curves and coordinate changes,
//! negative continued fractions, and torus-bundle monodromy words.

mod continued_fraction;
mod monodromy;
mod rational;
mod torus;

pub(crate) use continued_fraction::check_exponents;
pub use continued_fraction::{neg_cf_evaluate, neg_cf_expand};
pub use monodromy::{
    factor_monodromy, monodromy_matrix, Factorization, MonodromySign, MonodromyWord,
};
pub use rational::Rational;
pub use torus::{
    gluing_matrix, meridian_after_surgeries, mixed_torus_slopes, split_slopes, IntMatrix2,
    MixedTorusSlopes, SplitSlopes, TorusCurve,
};
