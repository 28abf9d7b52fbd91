//! Exact rational linear algebra, linear programming and polyhedral set
//! algebra.

pub mod dd;
pub mod lp;
pub mod nnc;
pub mod norm;
pub mod poly;
pub mod rat;

pub use lp::{LpOutcome, Sense};
pub use nnc::{union_subset, NncPolyhedron, SubsetVerdict};
pub use norm::{distance, Distance, NormKind, NormSpec};
pub use poly::{
    convex_hull, lp_solve, minkowski_sum, polar_cone, segment_hull, support_function, ConeSet,
    Constraint, HPolyhedron, Support, UnionPolyhedron, VRep,
};
pub use rat::{ExtRat, Rat};
