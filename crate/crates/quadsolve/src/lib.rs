//! Concrete spherical tiles from angle data: edge lengths of almost
//! equilateral quadrilaterals, triangles, kites and rhombi, the moduli of
//! general quadrilaterals in earth maps, and a deterministic root finder
//! for the transcendental equations that pin down angle values.

mod labels;
mod moduli;
mod predicates;
mod roots;
mod solve;
mod spec;

pub use labels::{AngleLabel, EdgeLabel, ParseClassError, QuadClass};
pub use moduli::{moduli_general_quad, moduli_point, moduli_polygon};
pub use predicates::{geometry_predicates, Verdict};
pub use roots::{find_root, find_roots, SCAN_POINTS};
pub use solve::{
    build_tile, check_tile, coolsaet_residual, cos_a_candidates, k_matrix, measure_spec, solve_almost_equilateral,
    solve_edge_a, solve_edge_b, solve_general_quad, solve_kite_rhombus, solve_triangle, solve_triangle_spec, triangle_exists, turtle,
    CLOSURE_TOL,
};
pub use spec::{QuadSpec, SolveReport};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SolveError {
    #[error("no such tile: {0}")]
    NoTile(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("tile does not close (holonomy off by {0:e})")]
    NoClosure(f64),
    #[error("invalid template: {0}")]
    Invalid(String),
    #[error("point outside the admissible region: {0}")]
    OutsideModuli(String),
    #[error("no sign change on [{lo}, {hi}]")]
    NoRoot { lo: f64, hi: f64 },
}
