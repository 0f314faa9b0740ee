//! Geometry on the unit sphere: points, great arcs, rotations and the
//! holonomy identity satisfied by every closed spherical polygon.

mod angle;
mod mat3;
mod polygon;
mod stereo;
pub mod vec3;

pub use angle::{round_sig, Angle, ParseAngleError, Radians};
pub use mat3::{axis_rotation, rot_y, rot_z, Axis, Mat3};
pub use polygon::{arc_measure, arcs_intersect, corner_angle, is_simple, polygon_holonomy, ArcPolygon, ARC_TOL};
pub use stereo::{inverse_stereographic, stereographic, tangent_basis};
pub use vec3::{UnitVec, ANTIPODAL_TOL};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("points are antipodal")]
    Antipodal,
    #[error("points coincide")]
    Coincident,
    #[error("zero vector cannot be normalized")]
    ZeroVector,
    #[error("{edges} edges but {angles} angles")]
    LengthMismatch { edges: usize, angles: usize },
    #[error("a polygon needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("point is the projection pole")]
    AtPole,
}
