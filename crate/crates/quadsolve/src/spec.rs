use serde::{Deserialize, Serialize};
use sphercore::Angle;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::labels::{AngleLabel, EdgeLabel, QuadClass};
use crate::SolveError;

/// A congruent tile template: edge class, angles and edge lengths.
///
/// Labels that the class ties together are stored explicitly: a kite keeps
/// `delta = beta`, a rhombus keeps `gamma = alpha` and `delta = beta`, and
/// missing edge lengths fall back to `a`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadSpec {
    pub class: QuadClass,
    pub alpha: Angle,
    pub beta: Angle,
    pub gamma: Angle,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Angle>,
    pub a: Angle,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Angle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Angle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u32>,
}

impl QuadSpec {
    pub fn angle(&self, l: AngleLabel) -> Angle {
        match l {
            AngleLabel::Alpha => self.alpha,
            AngleLabel::Beta => self.beta,
            AngleLabel::Gamma => self.gamma,
            AngleLabel::Delta => self.delta.unwrap_or(self.beta),
        }
    }

    pub fn edge(&self, l: EdgeLabel) -> Angle {
        match l {
            EdgeLabel::A => self.a,
            EdgeLabel::B => self.b.unwrap_or(self.a),
            EdgeLabel::C => self.c.or(self.b).unwrap_or(self.a),
        }
    }

    /// `(interior angle, outgoing edge)` in radians, counterclockwise.
    pub fn corner_values(&self) -> Vec<(f64, f64)> {
        self.class
            .corners()
            .iter()
            .map(|&(t, e)| (self.angle(t).radians(), self.edge(e).radians()))
            .collect()
    }

    /// Sum of the tile's interior angles, exact when all angles are.
    pub fn angle_sum(&self) -> Angle {
        self.class.corners().iter().map(|&(t, _)| self.angle(t)).sum()
    }

    /// Spherical excess of the tile.
    pub fn area(&self) -> f64 {
        self.angle_sum().radians() - (self.class.sides() as f64 - 2.0) * PI
    }

    /// Angle sum a tile must have when `f` copies cover the sphere.
    pub fn target_sum(class: QuadClass, f: u32) -> Angle {
        let base = if class.is_triangle() { 1 } else { 2 };
        Angle::pi_frac(base, 1) + Angle::pi_frac(4, f as i64)
    }

    /// Checks edges in `(0, π)`, the class equalities and, when `f` is
    /// attached, the angle sum.
    pub fn validate(&self, tol: f64) -> Result<(), SolveError> {
        for e in self.class.edge_labels() {
            let x = self.edge(e).radians();
            if !(x > 0.0 && x < PI) {
                return Err(SolveError::Invalid(format!("edge {e} = {x} outside (0, π)")));
            }
        }
        let tied = match self.class {
            QuadClass::Kite => vec![(AngleLabel::Delta, AngleLabel::Beta)],
            QuadClass::Rhombus => vec![(AngleLabel::Gamma, AngleLabel::Alpha), (AngleLabel::Delta, AngleLabel::Beta)],
            QuadClass::IsoscelesTriangle => vec![(AngleLabel::Gamma, AngleLabel::Beta)],
            QuadClass::EquilateralTriangle => {
                vec![(AngleLabel::Beta, AngleLabel::Alpha), (AngleLabel::Gamma, AngleLabel::Alpha)]
            }
            _ => vec![],
        };
        for (x, y) in tied {
            if !self.angle(x).approx_eq(&self.angle(y), tol) {
                return Err(SolveError::Invalid(format!("class {} needs {x} = {y}", self.class)));
            }
        }
        if let Some(f) = self.f {
            let want = QuadSpec::target_sum(self.class, f);
            if !self.angle_sum().approx_eq(&want, tol) {
                return Err(SolveError::Invalid(format!(
                    "angle sum {} differs from {} required by f = {f}",
                    self.angle_sum(),
                    want
                )));
            }
        }
        Ok(())
    }

    /// Angle labels grouped by equal value, each mapped to the smallest label
    /// in its group. Exact angles are compared exactly, numeric ones within
    /// `1e-12`.
    pub fn angle_aliases(&self) -> BTreeMap<AngleLabel, AngleLabel> {
        let labels = self.class.angle_labels();
        labels
            .iter()
            .map(|&l| {
                let rep = labels
                    .iter()
                    .copied()
                    .find(|&m| self.angle(m).approx_eq(&self.angle(l), 1e-12))
                    .unwrap_or(l);
                (l, rep)
            })
            .collect()
    }

    pub fn edge_aliases(&self) -> BTreeMap<EdgeLabel, EdgeLabel> {
        let labels = self.class.edge_labels();
        labels
            .iter()
            .map(|&l| {
                let rep = labels
                    .iter()
                    .copied()
                    .find(|&m| self.edge(m).approx_eq(&self.edge(l), 1e-12))
                    .unwrap_or(l);
                (l, rep)
            })
            .collect()
    }
}

/// Result of solving a tile: the template plus the residual of every
/// identity that was checked along the way.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub spec: QuadSpec,
    pub residuals: BTreeMap<String, f64>,
    pub simple: bool,
}
