//! Exact polynomial arithmetic over `Q`.

mod bi;
pub(crate) mod dense;
pub(crate) mod ring;
mod uni;
mod var;

pub use bi::BiPoly;
pub use dense::Dense;
pub use ring::{GcdRing, Ring};
pub use uni::{gcd_uni, UniPoly};
pub use var::Var;

