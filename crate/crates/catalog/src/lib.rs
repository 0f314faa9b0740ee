//! Every family of edge-to-edge tilings of the sphere by congruent triangles
//! or quadrilaterals, built both as labelled combinatorial complexes and as
//! explicit coordinates on the unit sphere.

pub mod assemble;
pub mod complex;
pub mod earth;
pub mod families;
pub mod flip;
mod geom;
pub mod mesh;
pub mod realize;

pub use assemble::{assemble, AssemblyGoal};
pub use complex::{find_isomorphism, is_isomorphic, symmetry_counts, tile_angle_aliases, Corner, Labels, Tile, TilingComplex};
pub use families::{build, build_many, build_many_sequential, census, table_row, vertex_types, Family, FamilyId, Params, Sporadic, SubKind};
pub use realize::{realize, realize_tol, GeometricRealization, REALIZE_TOL};

use quadsolve::SolveError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family: {0}")]
    InvalidFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("operation does not apply: {0}")]
    Inapplicable(String),
    #[error("geometry: {0}")]
    Geometry(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
}
