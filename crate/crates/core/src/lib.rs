//! Certified L-infinity norms of rational transfer matrices.
//!
//! The pipeline is exact end to end: the determinant of
//! `g^2 I - G(-s)^T G(s)` on the imaginary axis gives a bivariate numerator
//! `n(w, g)`, its critical values are the real roots of a resultant, and
//! each candidate is checked by Sturm-Habicht root counting.

pub mod elim;
pub mod error;
pub mod linalg;
pub mod norm;
pub mod numeric;
pub mod param;
pub mod poly;
pub mod realroots;
pub mod sign;
pub mod transfer;

pub use error::{Error, Result};
pub use sign::Sign;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
