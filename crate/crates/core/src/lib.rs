//! Exact computation of factorial Schur polynomials and the
//! Littlewood-Richardson type coefficients of their products.
//!
//! The coefficient c^ν_{θμ}(a,b) in
//! `s_θ(x|b) s_μ(x|a) = Σ_ν c^ν_{θμ}(a,b) s_ν(x|a)` is computed by several
//! independent engines (a barred-tableau sum, a recurrence on |ν/μ|, a
//! hook-length formula for the shifted specialization, and a brute-force
//! basis expansion) which are checked against each other.

pub mod acceptance;
pub mod cli;
pub mod error;
pub mod facschur;
pub mod lrcoef;
pub mod oracle;
pub mod ring;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use facschur::SeqSpec;
pub use ring::{Family, MultiPoly, Rational, Specialization, VarRef};
pub use shapes::{Partition, ShapeChain, SkewShape};
