//! Exact-arithmetic geometry of numbers at desk scale: lattice point
//! enumeration for convex bodies, successive minima, difference set
//! estimates with full equality classification, and verifiers for the
//! discrete Minkowski-type inequalities, all over big integers and
//! reduced rationals.

pub mod arith;
pub mod bodies;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod lp;
pub mod matrix;

pub use arith::{GaugeValue, Int, Rat};
pub use bodies::{Body, BodyRep, RationalEllipsoid, SymmetricHPolytope, VPolytope};
pub use error::{Error, Result};
pub use lattice::{LatticePoint, PointSet, ResidueClass};
pub use matrix::{IntMatrix, SmithNormalForm};
