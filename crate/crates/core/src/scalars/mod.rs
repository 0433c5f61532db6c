//! Exact arithmetic in the field Q(i)(q^(1/D)): Gaussian-rational coefficients,
//! rational exponents of q, canonical rational-function form, and the
//! valuation structure at q = infinity used by crystal lattices.

mod gauss;
mod laurent;
mod parse;
mod qscalar;

pub use gauss::GaussRat;
pub use laurent::{qexp, QExp, QLaurent};
pub use parse::{parse_scalar, render_laurent, render_scalar};
pub use qscalar::{quantum_factorial, quantum_integer, InfinityValuation, QScalar};
