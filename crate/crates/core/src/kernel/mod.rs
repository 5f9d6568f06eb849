//! Exact rational geometry: points and hyperplanes with their membership
//! predicates, plus brute-force hulls and polytope intersection.

mod chart;
mod hull;
mod intersect;
pub mod linalg;
mod point;
mod predicates;
mod rational;

pub use chart::Chart;
pub use hull::{extreme_points, facet_enumeration, facet_vertex_sets, Facet};
pub(crate) use hull::{for_each_combination, hull};
pub use intersect::{polytope_intersection, HRep};
pub(crate) use intersect::{bbox_disjoint, intersect_points, Facets};
pub use point::{IntoRational, Point, PointSet};
pub use predicates::{
    affine_rank, affine_rank_of, hyperplane_through, orientation, point_in_simplex, side_of,
    Hyperplane, Membership,
};
pub use rational::{
    format_rational, int, one, parse_rational, rat, sign, sqrt_exact, to_f64, zero, Rational,
};
