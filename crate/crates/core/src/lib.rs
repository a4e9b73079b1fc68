//! Convex bodies in Euclidean space and on the unit sphere, linked by the
//! gnomonic projection.
//!
//! Euclidean bodies are V-polytopes with exact support functions. Spherical
//! bodies are generated cones cut with the sphere, always certified to lie
//! in an open hemisphere. Binary operations on spherical bodies are either
//! computed directly (hull of the union, trivial operations) or transported
//! from the plane through a chart. Star sets are handled through radial
//! functions.

pub mod dd;
pub mod error;
pub mod euclid;
pub mod gnomonic;
pub mod hull;
pub mod linalg;
pub mod nnls;
pub mod random;
pub mod records;
pub mod sphere;
pub mod sphere_ops;
pub mod star;
pub mod wolfe;

pub use error::{GeomError, Result};
pub use euclid::{ConvexPolytope, QuadrantPolytope, SubspaceBasis, SupportFun4};
pub use gnomonic::HemisphereChart;
pub use linalg::Vector;
pub use records::BodyRecord;
pub use sphere::{SpherePolytope, Subsphere};
pub use sphere_ops::{ChartPolicy, CovMode, SphereOpSpec};
pub use star::{RadialMap, SphStarMap};
