//! conekit: exact computations with lattices and discrete groups acting on
//! open nondegenerate convex cones.
//!
//! Everything here is carried out in exact rational arithmetic: truncated
//! lattice hulls `[C ∩ L]` with enumeration certificates, dual-description
//! polyhedral conversion, the decomposition `Σ(C, L)` of the rational hull,
//! kernels/cores/cocores with truncated duality, polyhedral fundamental
//! cones with facet pairings and extracted presentations, and the structure
//! maps of face stabilizers.
//!
//! Two cone families are computable: rational polyhedral cones and
//! quadratic cones of signature `(1, n-1)` with a component selector. Both
//! admit exact membership and face enumeration, which is what makes the
//! constructions above decidable.

pub mod exact;
pub mod polyhedral;
pub mod cone;
pub mod hull;
pub mod group;
pub mod domain;
pub mod stabilizer;

pub use exact::{QMatrix, QVector, Rational};
