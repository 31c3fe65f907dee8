//! Exact polynomials in `β` and the variables `x_i`, and Laurent series in
//! `q^{-1}` with coefficients in `Z[β]`.

mod beta;
mod laurent;
mod sparse;

pub use beta::BetaPoly;
pub use laurent::{
    expand_rational, finite_specialize_q, principal_specialize, q_factorial, q_integer,
    soundness_bound, LaurentPoly, LaurentSeries, SeriesJson, SeriesMismatch,
};
#[cfg(test)]
pub(crate) use laurent::specialize_unchecked;
pub use sparse::{Monomial, PolyJson, SparsePoly, TermJson};
