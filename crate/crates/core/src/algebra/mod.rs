//! Exact univariate polynomial arithmetic, resolvent data, and certified root and sign checks.

pub mod charpoly;
pub mod interval;
pub mod poly;
pub mod positivity;
pub mod ratfunc;
pub mod ratpoly;
pub mod roots;
pub mod sturm;
pub mod text;

pub use charpoly::{bareiss_char_poly, char_and_adjugate, ResolventData};
pub use interval::RationalInterval;
pub use poly::IntPoly;
pub use positivity::{nonneg_on_ray, sign_on_interval, sign_on_open, RayVerdict, SignVerdict};
pub use ratfunc::{RationalFunction, Var};
pub use ratpoly::RatPoly;
pub use roots::{isolate_largest_root, AlgebraicReal};
pub use sturm::{sturm_count, SturmSequence};

use num_rational::BigRational;

/// `p(x + a)` computed exactly.
pub fn taylor_shift(p: &RatPoly, a: &BigRational) -> RatPoly {
    p.taylor_shift(a)
}
