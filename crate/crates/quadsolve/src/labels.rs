use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Which corner of the template an angle belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleLabel {
    Alpha,
    Beta,
    Gamma,
    Delta,
}

/// Which edge length of the template an edge carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeLabel {
    A,
    B,
    C,
}

impl AngleLabel {
    pub const ALL: [AngleLabel; 4] = [AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma, AngleLabel::Delta];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> AngleLabel {
        AngleLabel::ALL[i]
    }

    pub fn symbol(self) -> &'static str {
        ["α", "β", "γ", "δ"][self.index()]
    }

    pub fn ascii(self) -> &'static str {
        ["alpha", "beta", "gamma", "delta"][self.index()]
    }
}

impl EdgeLabel {
    pub const ALL: [EdgeLabel; 3] = [EdgeLabel::A, EdgeLabel::B, EdgeLabel::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> EdgeLabel {
        EdgeLabel::ALL[i]
    }

    pub fn symbol(self) -> &'static str {
        ["a", "b", "c"][self.index()]
    }
}

impl fmt::Display for AngleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Edge combination of the tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuadClass {
    /// a²bc
    General,
    /// a²b²
    Kite,
    /// a³b
    AlmostEquilateral,
    /// a⁴
    Rhombus,
    /// abc
    Triangle,
    /// a²b
    IsoscelesTriangle,
    /// a³
    EquilateralTriangle,
}

use AngleLabel::*;
use EdgeLabel::*;

impl QuadClass {
    pub const ALL: [QuadClass; 7] = [
        QuadClass::General,
        QuadClass::Kite,
        QuadClass::AlmostEquilateral,
        QuadClass::Rhombus,
        QuadClass::Triangle,
        QuadClass::IsoscelesTriangle,
        QuadClass::EquilateralTriangle,
    ];

    /// Corners of the template in counterclockwise order, each with the
    /// label of the edge leaving it towards the next corner.
    pub fn corners(self) -> &'static [(AngleLabel, EdgeLabel)] {
        match self {
            QuadClass::General => &[(Alpha, A), (Beta, B), (Gamma, C), (Delta, A)],
            QuadClass::Kite => &[(Alpha, A), (Beta, B), (Gamma, B), (Beta, A)],
            QuadClass::AlmostEquilateral => &[(Alpha, A), (Beta, A), (Gamma, B), (Delta, A)],
            QuadClass::Rhombus => &[(Alpha, A), (Beta, A), (Alpha, A), (Beta, A)],
            QuadClass::Triangle => &[(Alpha, A), (Beta, C), (Gamma, B)],
            QuadClass::IsoscelesTriangle => &[(Alpha, A), (Beta, B), (Beta, A)],
            QuadClass::EquilateralTriangle => &[(Alpha, A), (Alpha, A), (Alpha, A)],
        }
    }

    pub fn sides(self) -> usize {
        self.corners().len()
    }

    pub fn is_triangle(self) -> bool {
        self.sides() == 3
    }

    /// Distinct angle labels used by the template.
    pub fn angle_labels(self) -> Vec<AngleLabel> {
        let mut v: Vec<AngleLabel> = self.corners().iter().map(|c| c.0).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Distinct edge labels used by the template.
    pub fn edge_labels(self) -> Vec<EdgeLabel> {
        let mut v: Vec<EdgeLabel> = self.corners().iter().map(|c| c.1).collect();
        v.sort();
        v.dedup();
        v
    }

    /// How many times each angle label occurs in one tile.
    pub fn multiplicity(self, l: AngleLabel) -> usize {
        self.corners().iter().filter(|c| c.0 == l).count()
    }

    pub fn short_name(self) -> &'static str {
        match self {
            QuadClass::General => "a2bc",
            QuadClass::Kite => "a2b2",
            QuadClass::AlmostEquilateral => "a3b",
            QuadClass::Rhombus => "a4",
            QuadClass::Triangle => "abc",
            QuadClass::IsoscelesTriangle => "a2b",
            QuadClass::EquilateralTriangle => "a3",
        }
    }
}

impl fmt::Display for QuadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown tile class {0:?}")]
pub struct ParseClassError(pub String);

impl FromStr for QuadClass {
    type Err = ParseClassError;
    fn from_str(s: &str) -> Result<QuadClass, ParseClassError> {
        let t = s.trim().to_ascii_lowercase();
        Ok(match t.as_str() {
            "a2bc" | "general" => QuadClass::General,
            "a2b2" | "kite" => QuadClass::Kite,
            "a3b" | "almost-equilateral" | "almost_equilateral" => QuadClass::AlmostEquilateral,
            "a4" | "rhombus" => QuadClass::Rhombus,
            "abc" | "triangle" => QuadClass::Triangle,
            "a2b" | "isosceles" => QuadClass::IsoscelesTriangle,
            "a3" | "equilateral" => QuadClass::EquilateralTriangle,
            _ => return Err(ParseClassError(s.to_string())),
        })
    }
}
