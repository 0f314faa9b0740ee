//! Vertex combinations of tilings by congruent polygons: which angle
//! multisets can sum to 2π, and what the parity, counting and balance
//! arguments say about them.

mod audit;
mod combo;
mod enumerate;
mod euler;

pub use audit::{count_aaa_holds, counting_balance_audit, deg3miss_holds, AuditReport, CountingFinding};
pub use combo::{join_combos, Census, ParseComboError, VertexCombo};
pub use enumerate::{
    angle_sum_target, edge_compatible, enumerate_avc, enumerate_avc_per_f, enumerate_avc_tol, parity_check, AVCSet, SUM_TOL,
};
pub use euler::{euler_audit, DegreeHistogram, EulerAudit};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AvcError {
    #[error("invalid tile count: {0}")]
    BadF(String),
    #[error("invalid angles: {0}")]
    BadAngles(String),
}
