//! Set-valued tableaux and stable Grothendieck polynomials, computed exactly.
//!
//! - [`shapes`]: partitions, skew shapes, hook lengths.
//! - [`tableaux`]: set-valued tableaux, their enumeration and counts.
//! - [`polyring`]: integer polynomials in `x1..xn` and `b`.
//! - [`grothendieck`]: Schur and Grothendieck polynomials by tableaux sums
//!   and by bi-alternants.
//! - [`involutions`]: the corner-removal classes, the toggles `f` and `g`,
//!   and the parity checks built on them.
//! - [`verify`] and [`sweep`]: exhaustive runs over families of shapes.

pub mod grothendieck;
pub mod involutions;
pub mod polyring;
pub mod shapes;
pub mod sweep;
pub mod tableaux;
pub mod verify;

pub use grothendieck::{Basis, Formula, PolynomialReport};
pub use polyring::{LaurentPoly, MultiPoly, Rational};
pub use shapes::{Cell, Partition, SkewShape};
pub use tableaux::{EntrySet, SetValuedTableau, WeightVector};
