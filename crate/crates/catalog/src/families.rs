//! Named families, their parameters, tabulated data and constructions.

use avc::VertexCombo;
use quadsolve::{
    moduli_general_quad, moduli_point, solve_almost_equilateral, solve_general_quad, solve_kite_rhombus,
    solve_triangle_spec, turtle, measure_spec, AngleLabel, QuadClass, QuadSpec,
};
use serde::{Deserialize, Serialize};
use sphercore::{Angle, ArcPolygon, UnitVec};
use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt;

use crate::assemble::{assemble, AssemblyGoal};
use crate::complex::{symmetry_counts, TilingComplex};
use crate::earth::{earth_complex, tile_ccw, EarthKind};
use crate::flip::{adjacent_pairs, azimuth_windows, census_within, flip_sequence, zone_windows};
use crate::mesh::{fit_spec, label_mesh, Mesh, Subdivision};
use crate::realize::{realize, GeometricRealization};
use crate::CatalogError;

const FIT_TOL: f64 = 1e-9;
const DFS_BUDGET: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sporadic {
    S12_1,
    S16_1,
    S16_2,
    S16_3,
    S16_3Prime,
    S16_4,
    S36_5,
    S36_6,
}

impl Sporadic {
    pub const ALL: [Sporadic; 8] = [
        Sporadic::S12_1,
        Sporadic::S16_1,
        Sporadic::S16_2,
        Sporadic::S16_3,
        Sporadic::S16_3Prime,
        Sporadic::S16_4,
        Sporadic::S36_5,
        Sporadic::S36_6,
    ];

    pub fn f(self) -> usize {
        match self {
            Sporadic::S12_1 => 12,
            Sporadic::S36_5 | Sporadic::S36_6 => 36,
            _ => 16,
        }
    }
}

/// Subdivision applied to a Platonic solid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SubKind {
    T,
    B,
    Q,
    C,
}

impl SubKind {
    pub fn subdivision(self) -> Subdivision {
        match self {
            SubKind::T => Subdivision::Triangular,
            SubKind::B => Subdivision::Barycentric,
            SubKind::Q => Subdivision::Quadrilateral,
            SubKind::C => Subdivision::Quadricentric,
        }
    }

    fn letter(self) -> &'static str {
        match self {
            SubKind::T => "T",
            SubKind::B => "B",
            SubKind::Q => "Q",
            SubKind::C => "C",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Platonic(u8),
    Sub(SubKind, u8),
    SP6,
    SP6Prime,
    Earth(EarthKind),
    BP8Prime,
    QP8Prime,
    QP6Prime,
    /// E′△k
    TriFlip(u8),
    /// E″△1
    TriFlip1Double,
    /// E‴△1
    TriFlip1Triple,
    /// E′□4
    QuadFlip4,
    /// E′□5
    QuadFlip5,
    /// E″□5
    QuadFlip5Double,
    /// E′^(s,t)□2
    QuadFlipST,
    /// E″^(s′,t)□2
    QuadFlipS2T,
    /// E‴□2
    Rearranged2,
    Sporadic(Sporadic),
}

fn sub_digits(n: u32) -> String {
    n.to_string().chars().map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap_or(0)).unwrap_or(c)).collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match *self {
            Family::Platonic(n) => format!("P{}", sub_digits(n as u32)),
            Family::Sub(k, n) => format!("{}P{}", k.letter(), sub_digits(n as u32)),
            Family::SP6 => "SP₆".into(),
            Family::SP6Prime => "SP′₆".into(),
            Family::Earth(EarthKind::Tri(k)) => format!("E△{k}"),
            Family::Earth(EarthKind::Quad(k)) => format!("E□{k}"),
            Family::BP8Prime => "BP′₈".into(),
            Family::QP8Prime => "QP′₈".into(),
            Family::QP6Prime => "QP′₆".into(),
            Family::TriFlip(k) => format!("E′△{k}"),
            Family::TriFlip1Double => "E″△1".into(),
            Family::TriFlip1Triple => "E‴△1".into(),
            Family::QuadFlip4 => "E′□4".into(),
            Family::QuadFlip5 => "E′□5".into(),
            Family::QuadFlip5Double => "E″□5".into(),
            Family::QuadFlipST => "E′(s,t)□2".into(),
            Family::QuadFlipS2T => "E″(s′,t)□2".into(),
            Family::Rearranged2 => "E‴□2".into(),
            Family::Sporadic(s) => match s {
                Sporadic::S12_1 => "S₁₂1".into(),
                Sporadic::S16_1 => "S₁₆1".into(),
                Sporadic::S16_2 => "S₁₆2".into(),
                Sporadic::S16_3 => "S₁₆3".into(),
                Sporadic::S16_3Prime => "S′₁₆3".into(),
                Sporadic::S16_4 => "S₁₆4".into(),
                Sporadic::S36_5 => "S₃₆5".into(),
                Sporadic::S36_6 => "S₃₆6".into(),
            },
        };
        f.write_str(&s)
    }
}

/// Reduces a name to lowercase ASCII: subscripts become digits, primes
/// become `'`, the triangle and square marks become `t:` and `q:`, and
/// separators vanish.
fn normalize(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        match c {
            '₀'..='₉' => out.push(char::from_u32(c as u32 - 0x2080 + '0' as u32).unwrap_or(c)),
            '′' | '\'' | '’' => out.push('\''),
            '″' => out.push_str("''"),
            '‴' => out.push_str("'''"),
            '△' | '▵' | '∆' => out.push_str("t:"),
            '□' | '◻' | '■' => out.push_str("q:"),
            ' ' | '_' | '{' | '}' | '^' | '\\' | '-' => {}
            c => out.extend(c.to_lowercase()),
        }
    }
    for (from, to) in [
        ("(s,t)", ""),
        ("(s'',t)", ""),
        ("(s',t)", ""),
        ("triangle", "t:"),
        ("square", "q:"),
        ("tri", "t:"),
        ("quad", "q:"),
    ] {
        out = out.replace(from, to);
    }
    out
}

impl Family {
    /// Parses a family name, resolving aliases such as `CP₈ = QP₄`.
    pub fn parse(name: &str) -> Result<Family, CatalogError> {
        let key = normalize(name);
        let bad = || CatalogError::InvalidFamily(name.to_string());
        let primes = key.matches('\'').count();
        let bare: String = key.chars().filter(|&c| c != '\'').collect();
        if let Some(rest) = bare.strip_prefix('e') {
            let (shape, digit) = if let Some(d) = rest.strip_prefix("t:") {
                ('t', d)
            } else if let Some(d) = rest.strip_prefix("q:") {
                ('q', d)
            } else if let Some(d) = rest.strip_prefix('t') {
                ('t', d)
            } else if let Some(d) = rest.strip_prefix('q') {
                ('q', d)
            } else {
                return Err(bad());
            };
            let k: u8 = digit.parse().map_err(|_| bad())?;
            if !(1..=5).contains(&k) {
                return Err(bad());
            }
            return match (shape, primes, k) {
                ('t', 0, k) => Ok(Family::Earth(EarthKind::Tri(k))),
                ('q', 0, k) => Ok(Family::Earth(EarthKind::Quad(k))),
                ('t', 1, k) => Ok(Family::TriFlip(k)),
                ('t', 2, 1) => Ok(Family::TriFlip1Double),
                ('t', 3, 1) => Ok(Family::TriFlip1Triple),
                ('q', 1, 2) => Ok(Family::QuadFlipST),
                ('q', 2, 2) => Ok(Family::QuadFlipS2T),
                ('q', 3, 2) => Ok(Family::Rearranged2),
                ('q', 1, 4) => Ok(Family::QuadFlip4),
                ('q', 1, 5) => Ok(Family::QuadFlip5),
                ('q', 2, 5) => Ok(Family::QuadFlip5Double),
                _ => Err(bad()),
            };
        }
        if let Some(rest) = bare.strip_prefix('s') {
            if !rest.starts_with('p') {
                let s = match (rest, primes) {
                    ("121", 0) => Sporadic::S12_1,
                    ("161", 0) => Sporadic::S16_1,
                    ("162", 0) => Sporadic::S16_2,
                    ("163", 0) => Sporadic::S16_3,
                    ("163", 1) => Sporadic::S16_3Prime,
                    ("164", 0) => Sporadic::S16_4,
                    ("365", 0) => Sporadic::S36_5,
                    ("366", 0) => Sporadic::S36_6,
                    _ => return Err(bad()),
                };
                return Ok(Family::Sporadic(s));
            }
        }
        let (prefix, n) = bare.split_once('p').ok_or_else(bad)?;
        let n: u8 = n.parse().map_err(|_| bad())?;
        if ![4, 6, 8, 12, 20].contains(&n) {
            return Err(bad());
        }
        let fam = match (prefix, primes) {
            ("", 0) => Family::Platonic(n),
            ("s", 0) if n == 6 => Family::SP6,
            ("s", 1) if n == 6 => Family::SP6Prime,
            ("b", 1) if n == 8 => Family::BP8Prime,
            ("q", 1) if n == 8 => Family::QP8Prime,
            ("q", 1) if n == 6 => Family::QP6Prime,
            ("t", 0) => Family::Sub(SubKind::T, n),
            ("b", 0) => match n {
                4 => Family::Sub(SubKind::T, 6),
                6 | 8 => Family::Sub(SubKind::B, 6),
                _ => Family::Sub(SubKind::B, 12),
            },
            ("q", 0) => match n {
                4 => Family::Sub(SubKind::Q, 4),
                6 | 8 => Family::Sub(SubKind::Q, 6),
                _ => Family::Sub(SubKind::Q, 12),
            },
            ("c", 0) => match n {
                4 => Family::Platonic(6),
                6 | 8 => Family::Sub(SubKind::Q, 4),
                _ => Family::Sub(SubKind::C, 12),
            },
            _ => return Err(bad()),
        };
        Ok(fam)
    }

    /// Whether the tiles are triangles.
    pub fn is_triangular(self) -> bool {
        match self {
            Family::Platonic(n) => n != 6,
            Family::Sub(k, _) => matches!(k, SubKind::T | SubKind::B),
            Family::SP6 | Family::SP6Prime | Family::BP8Prime => true,
            Family::Earth(EarthKind::Tri(_)) => true,
            Family::TriFlip(_) | Family::TriFlip1Double | Family::TriFlip1Triple => true,
            _ => false,
        }
    }
}

/// Integer and real parameters of a family. Unset values take the family's
/// default; `f` may be given instead of `p` or `q`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    /// Free deformation parameters: angles in units of π, except the
    /// moduli point of E□1 which is `[a, φ]` in radians.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub free: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyId {
    pub family: Family,
    #[serde(default)]
    pub params: Params,
}

impl FamilyId {
    pub fn new(family: Family) -> FamilyId {
        FamilyId { family, params: Params::default() }
    }

    pub fn parse(name: &str) -> Result<FamilyId, CatalogError> {
        Ok(FamilyId::new(Family::parse(name)?))
    }

    pub fn with_p(mut self, p: u32) -> FamilyId {
        self.params.p = Some(p);
        self
    }

    pub fn with_q(mut self, q: u32) -> FamilyId {
        self.params.q = Some(q);
        self
    }

    pub fn with_f(mut self, f: u32) -> FamilyId {
        self.params.f = Some(f);
        self
    }

    pub fn with_st(mut self, s: u32, t: u32) -> FamilyId {
        self.params.s = Some(s);
        self.params.t = Some(t);
        self
    }

    pub fn with_free(mut self, free: Vec<f64>) -> FamilyId {
        self.params.free = free;
        self
    }

    /// Number of tiles and the resolved integer parameters.
    pub fn resolve(&self) -> Result<Resolved, CatalogError> {
        resolve(self)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        let r = match self.resolve() {
            Ok(r) => r,
            Err(_) => return Ok(()),
        };
        let mut parts = Vec::new();
        match self.family {
            Family::Earth(_) => parts.push(format!("p={}", r.p)),
            Family::QuadFlipST | Family::QuadFlipS2T => {
                parts.push(format!("p={}", r.p));
                parts.push(format!("s={}", r.s));
                parts.push(format!("t={}", r.t));
            }
            Family::TriFlip(_)
            | Family::TriFlip1Double
            | Family::TriFlip1Triple
            | Family::QuadFlip4
            | Family::QuadFlip5
            | Family::QuadFlip5Double
            | Family::Rearranged2 => parts.push(format!("q={}", r.q)),
            _ => {}
        }
        if !parts.is_empty() {
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// Parameters after defaults and consistency checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Resolved {
    pub f: usize,
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub t: usize,
    pub free: Vec<f64>,
}

fn inv(msg: impl Into<String>) -> CatalogError {
    CatalogError::InvalidParams(msg.into())
}

/// Tiles per unit of the family's index parameter, and the constant part:
/// `f = k·n + c` with `n` the index (`p` or `q`).
fn index_law(family: Family) -> Option<(char, usize, usize, usize)> {
    // (index name, k, c, default)
    Some(match family {
        Family::Earth(EarthKind::Tri(1)) => ('p', 4, 0, 3),
        Family::Earth(EarthKind::Tri(2)) => ('p', 4, 0, 3),
        Family::Earth(EarthKind::Tri(3)) => ('p', 2, 0, 5),
        Family::Earth(EarthKind::Tri(4)) => ('p', 4, 0, 4),
        Family::Earth(EarthKind::Tri(5)) => ('p', 8, 0, 4),
        Family::Earth(EarthKind::Quad(5)) => ('p', 8, 0, 4),
        Family::Earth(EarthKind::Quad(2)) => ('p', 2, 0, 8),
        Family::Earth(EarthKind::Quad(_)) => ('p', 2, 0, 4),
        Family::TriFlip(1) | Family::TriFlip(2) => ('q', 8, 4, 2),
        Family::TriFlip(3) => ('q', 4, 0, 3),
        Family::TriFlip(4) => ('q', 8, 4, 3),
        Family::TriFlip(5) => ('q', 16, 8, 2),
        Family::TriFlip1Double | Family::TriFlip1Triple => ('q', 8, 4, 2),
        Family::QuadFlip4 => ('q', 4, 2, 3),
        Family::QuadFlip5 | Family::QuadFlip5Double => ('q', 16, 8, 1),
        Family::QuadFlipST | Family::QuadFlipS2T => ('p', 2, 0, 8),
        Family::Rearranged2 => ('q', 6, 4, 2),
        _ => return None,
    })
}

fn resolve(id: &FamilyId) -> Result<Resolved, CatalogError> {
    let pr = &id.params;
    let fam = id.family;
    let mut out = Resolved { f: 0, p: 0, q: 0, s: 0, t: 0, free: pr.free.clone() };
    match index_law(fam) {
        Some((name, k, c, default)) => {
            let given = if name == 'p' { pr.p } else { pr.q };
            let n = match (given, pr.f) {
                (Some(n), Some(f)) if (k * n as usize + c) != f as usize => {
                    return Err(inv(format!("{fam}: {name} = {n} gives f = {}, not {f}", k * n as usize + c)))
                }
                (Some(n), _) => n as usize,
                (None, Some(f)) => {
                    let f = f as usize;
                    if f < c || !(f - c).is_multiple_of(k) {
                        return Err(inv(format!("{fam}: f = {f} is not of the form {k}{name}+{c}")));
                    }
                    (f - c) / k
                }
                (None, None) => default,
            };
            out.f = k * n + c;
            if name == 'p' {
                out.p = n;
            } else {
                out.q = n;
            }
        }
        None => {
            out.f = match fam {
                Family::Platonic(n) => n as usize,
                Family::Sub(SubKind::T, n) => n as usize * face_sides(n),
                Family::Sub(SubKind::B, n) => 2 * n as usize * face_sides(n),
                Family::Sub(SubKind::Q, n) => n as usize * face_sides(n),
                Family::Sub(SubKind::C, n) => n as usize * face_sides(n) / 2,
                Family::SP6 | Family::SP6Prime => 12,
                Family::BP8Prime => 48,
                Family::QP8Prime | Family::QP6Prime => 24,
                Family::Sporadic(s) => s.f(),
                _ => unreachable!("index_law covers the parametrised families"),
            };
            if let Some(f) = pr.f {
                if f as usize != out.f {
                    return Err(inv(format!("{fam} has f = {}, not {f}", out.f)));
                }
            }
        }
    }
    // index lower bounds
    let p_min = match fam {
        Family::Earth(k) => k.min_zones(),
        Family::QuadFlipST | Family::QuadFlipS2T => 3,
        _ => 0,
    };
    if out.p < p_min {
        return Err(inv(format!("{fam} needs p ≥ {p_min}, got p = {}", out.p)));
    }
    let q_min = match fam {
        // below these the flip only reproduces a Platonic solid
        Family::TriFlip(3) => 3,
        Family::TriFlip(5) | Family::QuadFlip4 => 2,
        Family::TriFlip(_) | Family::TriFlip1Double | Family::TriFlip1Triple => 1,
        Family::QuadFlip5 | Family::QuadFlip5Double | Family::Rearranged2 => 1,
        _ => 0,
    };
    if out.q < q_min {
        return Err(inv(format!("{fam} needs q ≥ {q_min}, got q = {}", out.q)));
    }
    if fam == Family::TriFlip(4) && out.q == 2 {
        return Err(inv("E′△4 with q = 2 has α = β and is the icosahedron"));
    }
    if matches!(fam, Family::QuadFlipST | Family::QuadFlipS2T) {
        out.s = pr.s.unwrap_or(3) as usize;
        out.t = pr.t.unwrap_or(2) as usize;
        let (f, s, t) = (out.f, out.s, out.t);
        // f/8 < s < 3f/8 and st ≤ f/2
        if !(8 * s > f && 8 * s < 3 * f) {
            return Err(inv(format!("{fam}: s = {s} must satisfy f/8 < s < 3f/8 for f = {f}")));
        }
        if t == 0 || 2 * s * t > f {
            return Err(inv(format!("{fam}: t = {t} must satisfy 1 ≤ t and st ≤ f/2 (s = {s}, f = {f})")));
        }
    }
    Ok(out)
}

fn face_sides(n: u8) -> usize {
    match n {
        6 => 4,
        12 => 5,
        _ => 3,
    }
}

fn pf(p: i64, q: i64) -> Angle {
    Angle::pi_frac(p, q)
}

fn vc(a: u32, b: u32, g: u32, d: u32) -> VertexCombo {
    VertexCombo::new(a, b, g, d)
}

/// Vertex types listed for the family at these parameters.
pub fn vertex_types(id: &FamilyId) -> Result<Vec<VertexCombo>, CatalogError> {
    let r = id.resolve()?;
    let (p, q, s, t) = (r.p as u32, r.q as u32, r.s as u32, r.t as u32);
    let v = match id.family {
        Family::Platonic(4) => vec![vc(1, 1, 1, 0)],
        Family::Platonic(6) => vec![vc(3, 0, 0, 0), vc(0, 1, 1, 1)],
        Family::Platonic(8) => vec![vc(4, 0, 0, 0), vc(0, 2, 2, 0)],
        Family::Platonic(20) => vec![vc(5, 0, 0, 0)],
        Family::Platonic(_) => vec![],
        Family::Sub(SubKind::T, n) => {
            let (apex, base) = match n {
                4 => (3, 6),
                6 => (4, 6),
                8 => (3, 8),
                12 => (5, 6),
                _ => (3, 10),
            };
            vec![vc(apex, 0, 0, 0), vc(0, base, 0, 0)]
        }
        Family::Sub(SubKind::B, n) => {
            let b = if n == 6 { 8 } else { 10 };
            vec![vc(6, 0, 0, 0), vc(0, b, 0, 0), vc(0, 0, 4, 0)]
        }
        Family::Sub(SubKind::Q, 4) => vec![vc(3, 0, 0, 0), vc(0, 4, 0, 0)],
        Family::Sub(SubKind::Q, 6) => vec![vc(3, 0, 0, 0), vc(0, 2, 0, 2), vc(0, 0, 4, 0)],
        Family::Sub(SubKind::Q, _) => vec![vc(5, 0, 0, 0), vc(0, 4, 0, 0), vc(0, 0, 3, 0)],
        Family::Sub(SubKind::C, _) => vec![vc(3, 0, 0, 0), vc(0, 5, 0, 0)],
        Family::SP6 | Family::SP6Prime => vec![vc(3, 0, 0, 0), vc(2, 2, 0, 0), vc(1, 4, 0, 0), vc(0, 6, 0, 0)],
        Family::Earth(EarthKind::Tri(1)) => vec![vc(0, 2, 2, 0), vc(2 * p, 0, 0, 0)],
        Family::Earth(EarthKind::Tri(2)) => vec![vc(2, 2, 0, 0), vc(0, 2 * p, 0, 0)],
        Family::Earth(EarthKind::Tri(3)) => vec![vc(0, 4, 0, 0), vc(p, 0, 0, 0)],
        Family::Earth(EarthKind::Tri(4)) => vec![vc(1, 4, 0, 0), vc(p, 0, 0, 0)],
        Family::Earth(EarthKind::Tri(_)) => vec![vc(2, 4, 0, 0), vc(0, 0, 4, 0), vc(2 * p, 0, 0, 0)],
        Family::Earth(EarthKind::Quad(1)) | Family::Earth(EarthKind::Quad(2)) => {
            vec![vc(0, 1, 1, 1), vc(p, 0, 0, 0)]
        }
        Family::Earth(EarthKind::Quad(3)) => vec![vc(0, 2, 1, 0), vc(p, 0, 0, 0)],
        Family::Earth(EarthKind::Quad(4)) => vec![vc(1, 2, 0, 0), vc(p, 0, 0, 0)],
        Family::Earth(EarthKind::Quad(_)) => {
            vec![vc(1, 2, 0, 0), vc(2, 0, 0, 2), vc(0, 0, 4, 0), vc(0, 0, 0, 2 * p)]
        }
        Family::BP8Prime => vec![vc(8, 0, 0, 0), vc(0, 6, 0, 0), vc(4, 0, 2, 0), vc(0, 0, 4, 0)],
        Family::QP6Prime => vec![vc(3, 0, 0, 0), vc(1, 2, 0, 0), vc(2, 0, 0, 2), vc(0, 2, 0, 2), vc(0, 0, 4, 0)],
        Family::QP8Prime => vec![vc(3, 0, 0, 0), vc(0, 4, 0, 0), vc(0, 2, 2, 0), vc(0, 0, 4, 0)],
        Family::TriFlip(1) => vec![vc(0, 2, 2, 0), vc(2 * q + 1, 1, 1, 0)],
        Family::TriFlip1Double => {
            vec![vc(0, 2, 2, 0), vc(1, 3, 1, 0), vc(2 * q, 0, 2, 0), vc(2 * q + 1, 1, 1, 0)]
        }
        Family::TriFlip1Triple => vec![vc(0, 2, 2, 0), vc(1, 3, 1, 0), vc(2 * q, 0, 2, 0)],
        Family::TriFlip(2) => vec![vc(2, 2, 0, 0), vc(1, 2 * q + 2, 0, 0)],
        Family::TriFlip(3) => vec![vc(0, 4, 0, 0), vc(q, 2, 0, 0)],
        Family::TriFlip(4) => vec![vc(1, 4, 0, 0), vc(q + 1, 2, 0, 0)],
        Family::TriFlip(_) => vec![vc(2, 4, 0, 0), vc(0, 0, 4, 0), vc(2 * q + 2, 2, 0, 0)],
        Family::QuadFlip4 => vec![vc(1, 2, 0, 0), vc(q + 1, 1, 0, 0)],
        Family::QuadFlip5 => vec![
            vc(1, 2, 0, 0),
            vc(2, 0, 0, 2),
            vc(0, 0, 4, 0),
            vc(1, 0, 0, 2 * q + 2),
            vc(0, 2, 0, 2 * q),
        ],
        Family::QuadFlip5Double => {
            vec![vc(1, 2, 0, 0), vc(2, 0, 0, 2), vc(0, 0, 4, 0), vc(1, 0, 0, 2 * q + 2)]
        }
        Family::QuadFlipST => vec![vc(0, 1, 1, 1), vc(p - s * t, t, 0, 0), vc(s, 0, 1, 1)],
        Family::QuadFlipS2T => vec![vc(0, 1, 1, 1), vc(s, 1, 0, 0), vc(p - s * t, 0, t, t)],
        Family::Rearranged2 => vec![vc(0, 1, 1, 1), vc(0, 0, 1, 3), vc(q + 1, 1, 0, 0), vc(q, 1, 2, 0)],
        Family::Sporadic(sp) => {
            let names: &[&str] = match sp {
                Sporadic::S12_1 => &["α³", "βγ²", "αβδ²"],
                Sporadic::S16_1 => &["α⁴", "βγ²", "αβδ²"],
                Sporadic::S16_2 => &["α⁴", "αγ²", "β²δ²"],
                Sporadic::S16_3 | Sporadic::S16_3Prime => &["α⁴", "βδ²", "αβγ²"],
                Sporadic::S16_4 => &["αβ²", "α²γδ", "γ²δ²"],
                Sporadic::S36_5 => &["αβ²", "α²δ²", "αγ³δ", "γδ³", "γ⁶"],
                Sporadic::S36_6 => &["αδ²", "αβ³", "α²βγ²", "γ³δ"],
            };
            names.iter().map(|s| s.parse().expect("well-formed vertex type")).collect()
        }
    };
    // a vertex type with no angles marks a degenerate parameter corner
    Ok(v.into_iter().filter(|c| c.degree() > 0).collect())
}

/// Row of the family tables: angle formula, vertex types, tile count and
/// symmetry group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub angles: String,
    pub vertices: Vec<String>,
    pub f: usize,
    pub symmetry: String,
    /// Order of the symmetry group at these parameters, when it is fixed.
    pub symmetry_order: Option<usize>,
}

fn group_order(name: &str, n: usize) -> Option<usize> {
    Some(match name {
        "C_2" => 2,
        "C_s" => 2,
        "C_2v" => 4,
        "D_2" => 4,
        "D_3" => 6,
        "D_4" => 8,
        "S_8" => 8,
        "D_2v" | "D_2h" => 8,
        "D_3v" => 12,
        "D_4v" => 16,
        "T_d" | "T_h" => 24,
        "O_h" => 48,
        "I_h" => 120,
        "D_p" => 2 * n,
        "D_pv" | "D_ph" => 4 * n,
        _ => return None,
    })
}

/// Symmetry group name with its order at the given parameters.
fn symmetry(id: &FamilyId, r: &Resolved) -> (String, Option<usize>) {
    let p = r.p;
    let named = |s: &str| (s.to_string(), group_order(s, p));
    let dp = |s: &str| {
        let name = s.replace('p', &p.to_string());
        (name, group_order(s, p))
    };
    match id.family {
        Family::Platonic(4) => {
            if is_regular(id) {
                named("T_d")
            } else {
                named("D_2")
            }
        }
        Family::Platonic(6) => {
            if is_regular(id) {
                named("O_h")
            } else {
                named("D_3")
            }
        }
        Family::Platonic(8) => {
            if is_regular(id) {
                named("O_h")
            } else {
                named("D_2v")
            }
        }
        Family::Platonic(_) => named("I_h"),
        Family::Sub(SubKind::T, 4) => named("T_d"),
        Family::Sub(_, 4) | Family::Sub(_, 6) | Family::Sub(_, 8) => {
            if id.family == Family::Sub(SubKind::Q, 6) && !is_regular(id) {
                named("T_h")
            } else {
                named("O_h")
            }
        }
        Family::Sub(_, _) => named("I_h"),
        Family::SP6 => named("C_2v"),
        Family::SP6Prime => named("C_s"),
        Family::Earth(EarthKind::Tri(2)) | Family::Earth(EarthKind::Tri(3)) if r.f == 8 => named("O_h"),
        Family::Earth(EarthKind::Tri(4)) if r.f == 20 => named("I_h"),
        Family::Earth(EarthKind::Tri(5)) if r.f == 24 => named("O_h"),
        Family::Earth(EarthKind::Quad(4)) if r.f == 6 => named("O_h"),
        Family::Earth(EarthKind::Tri(3)) => dp("D_ph"),
        Family::Earth(EarthKind::Quad(1)) | Family::Earth(EarthKind::Quad(2)) => dp("D_p"),
        Family::Earth(_) => dp("D_pv"),
        Family::BP8Prime | Family::QP8Prime => named("D_4v"),
        Family::QP6Prime => named("D_3"),
        Family::TriFlip(3) => named("D_2v"),
        Family::TriFlip(_) | Family::TriFlip1Triple | Family::QuadFlip4 | Family::QuadFlip5Double => named("D_2"),
        Family::TriFlip1Double if r.f == 12 => named("D_2v"),
        Family::TriFlip1Double | Family::QuadFlip5 | Family::Rearranged2 => named("C_2"),
        Family::QuadFlipST | Family::QuadFlipS2T => ("C_2 or D_n".to_string(), None),
        Family::Sporadic(s) => named(match s {
            Sporadic::S12_1 => "D_3",
            Sporadic::S16_1 | Sporadic::S16_3Prime => "D_4",
            Sporadic::S16_2 | Sporadic::S16_3 => "S_8",
            Sporadic::S16_4 => "D_2",
            Sporadic::S36_5 => "D_3",
            Sporadic::S36_6 => "C_2",
        }),
    }
}

fn is_regular(id: &FamilyId) -> bool {
    let d = default_free(id.family);
    let free = if id.params.free.is_empty() { &d } else { &id.params.free };
    free.iter().zip(&d).all(|(x, y)| (x - y).abs() < 1e-12)
}

fn default_free(family: Family) -> Vec<f64> {
    match family {
        Family::Platonic(4) | Family::Platonic(6) => vec![2.0 / 3.0, 2.0 / 3.0],
        Family::Platonic(8) => vec![0.5],
        Family::Sub(SubKind::Q, 6) => vec![0.5],
        Family::Earth(EarthKind::Tri(1)) | Family::TriFlip(1) => vec![0.4],
        Family::Earth(EarthKind::Quad(2)) => vec![0.9],
        Family::Earth(EarthKind::Quad(3)) => vec![0.6],
        _ => vec![],
    }
}

fn angle_text(id: &FamilyId) -> &'static str {
    match id.family {
        Family::Platonic(4) => "α+β+γ=2π",
        Family::Platonic(6) => "α=2/3π, β+γ+δ=2π",
        Family::Platonic(8) => "α=1/2π, β+γ=π",
        Family::Platonic(_) => "α=2/5π",
        Family::Sub(SubKind::T, 4) => "α=2/3π, β=1/3π",
        Family::Sub(SubKind::T, 6) => "α=1/2π, β=1/3π",
        Family::Sub(SubKind::T, 8) => "α=2/3π, β=1/4π",
        Family::Sub(SubKind::T, 12) => "α=2/5π, β=1/3π",
        Family::Sub(SubKind::T, _) => "α=2/3π, β=1/5π",
        Family::Sub(SubKind::B, 6) => "α=1/3π, β=1/4π, γ=1/2π",
        Family::Sub(SubKind::B, _) => "α=1/3π, β=1/5π, γ=1/2π",
        Family::Sub(SubKind::Q, 4) => "α=2/3π, β=1/2π",
        Family::Sub(SubKind::Q, 6) => "α=2/3π, β+δ=π, γ=1/2π",
        Family::Sub(SubKind::Q, _) => "α=2/5π, β=1/2π, γ=2/3π",
        Family::Sub(SubKind::C, _) => "α=2/3π, β=2/5π",
        Family::SP6 | Family::SP6Prime => "α=2/3π, β=1/3π",
        Family::Earth(EarthKind::Tri(1)) => "α=4/f π, β+γ=π",
        Family::Earth(EarthKind::Tri(2)) => "α=(1−4/f)π, β=4/f π",
        Family::Earth(EarthKind::Tri(3)) => "α=4/f π, β=1/2π",
        Family::Earth(EarthKind::Tri(4)) => "α=8/f π, β=(1/2−2/f)π",
        Family::Earth(EarthKind::Tri(_)) => "α=8/f π, β=(1/2−4/f)π, γ=1/2π",
        Family::Earth(EarthKind::Quad(1)) | Family::Earth(EarthKind::Quad(2)) => "α=4/f π, β+γ+δ=2π",
        Family::Earth(EarthKind::Quad(3)) => "α=4/f π, 2β+γ=2π",
        Family::Earth(EarthKind::Quad(4)) => "α=4/f π, β=(1−2/f)π",
        Family::Earth(EarthKind::Quad(_)) => "α=(1−8/f)π, β=(1/2+4/f)π, γ=1/2π, δ=8/f π",
        Family::BP8Prime => "α=1/4π, β=1/3π, γ=1/2π",
        Family::QP6Prime => "α=2/3π, β=2/3π, γ=1/2π, δ=1/3π",
        Family::QP8Prime => "α=2/3π, β=1/2π, γ=1/2π",
        Family::TriFlip(1) => "α=4/f π, β+γ=π",
        Family::TriFlip1Double | Family::TriFlip1Triple => "α=4/f π, β=(1/2−2/f)π, γ=(1/2+2/f)π",
        Family::TriFlip(2) => "α=(1−4/f)π, β=4/f π",
        Family::TriFlip(3) => "α=4/f π, β=1/2π",
        Family::TriFlip(4) => "α=8/f π, β=(1/2−2/f)π",
        Family::TriFlip(_) => "α=8/f π, β=(1/2−4/f)π, γ=1/2π",
        Family::QuadFlip4 => "α=4/f π, β=(1−2/f)π",
        Family::QuadFlip5 | Family::QuadFlip5Double => "α=(1−8/f)π, β=(1/2+4/f)π, γ=1/2π, δ=8/f π",
        Family::QuadFlipST => "α=4/f π, β=4s/f π",
        Family::QuadFlipS2T => "α=4/f π, γ+δ=4s′/f π, s+s′=p",
        Family::Rearranged2 => "α=4/f π, β=(4/3−4/(3f))π, γ=2/f π, δ=(2/3−2/(3f))π",
        Family::Sporadic(Sporadic::S12_1) => "α=2/3π, β=2π−2γ, δ=γ−1/3π, tan γ=−√3/√5",
        Family::Sporadic(Sporadic::S16_1) => "α=1/2π, β=2π−2γ, δ=γ−1/4π, tan γ=2−√5−√(7−3√5)",
        Family::Sporadic(Sporadic::S16_2) => "α=1/2π, β+δ=π, γ=3/4π, cos β=(√2−1)/2",
        Family::Sporadic(Sporadic::S16_3) | Family::Sporadic(Sporadic::S16_3Prime) => {
            "α=1/2π, β=π, γ=1/4π, δ=1/2π"
        }
        Family::Sporadic(Sporadic::S16_4) => "α=1/2π, β=3/4π, γ+δ=π, tan γ=2+√2",
        Family::Sporadic(Sporadic::S36_5) => "α=4/9π, β=7/9π, γ=1/3π, δ=5/9π",
        Family::Sporadic(Sporadic::S36_6) => "α=1/3π, β=5/9π, γ=7/18π, δ=5/6π",
    }
}

pub fn table_row(id: &FamilyId) -> Result<TableRow, CatalogError> {
    let r = id.resolve()?;
    let (symmetry, symmetry_order) = symmetry(id, &r);
    Ok(TableRow {
        name: id.to_string(),
        angles: angle_text(id).to_string(),
        vertices: vertex_types(id)?.iter().map(|c| c.to_string()).collect(),
        f: r.f,
        symmetry,
        symmetry_order,
    })
}

// ---------------------------------------------------------------------------
// templates

fn free_or_default(id: &FamilyId, r: &Resolved) -> Vec<f64> {
    if r.free.is_empty() {
        default_free(id.family)
    } else {
        r.free.clone()
    }
}

fn need_free(id: &FamilyId, v: &[f64], n: usize) -> Result<(), CatalogError> {
    if v.len() != n {
        return Err(inv(format!("{} takes {n} free parameter(s), got {}", id.family, v.len())));
    }
    Ok(())
}

fn from_pi(x: f64) -> Angle {
    Angle::from_pi_multiple(x)
}

fn with_f(mut s: QuadSpec, f: usize) -> QuadSpec {
    s.f = Some(f as u32);
    s
}

/// The almost equilateral tile of E□2 with apex `α = 4π/f` and `β` given.
pub fn earth2_spec(f: usize, beta: Angle) -> Result<QuadSpec, CatalogError> {
    let alpha = pf(4, f as i64);
    let cb = beta.cos();
    if !(beta.radians() > 0.0 && beta.radians() < 2.0 * PI) || (1.0 - cb).abs() < 1e-12 {
        return Err(inv(format!("β = {beta} is out of range")));
    }
    let ca = -cb / (1.0 - cb);
    if ca.abs() >= 1.0 {
        return Err(inv(format!("β = {beta} gives no edge length (cos a = {ca})")));
    }
    let a = ca.acos();
    let (v, _) = turtle(&[(alpha.radians(), a), (beta.radians(), a), (0.0, 0.0)]);
    let b1 = UnitVec::from_spherical(a, alpha.radians());
    let poly = ArcPolygon::from_vertices(vec![v[0], v[1], v[2], b1]).map_err(|e| CatalogError::Geometry(e.to_string()))?;
    let mut spec = measure_spec(QuadClass::AlmostEquilateral, &poly, Some(f as u32))?;
    spec.alpha = alpha;
    spec.beta = beta;
    spec.validate(1e-9)?;
    Ok(spec)
}

fn triangle(class: QuadClass, angles: &[Angle], f: usize) -> Result<QuadSpec, CatalogError> {
    Ok(solve_triangle_spec(class, angles, Some(f as u32))?)
}

fn kite_rhombus(class: QuadClass, angles: &[Angle], f: usize) -> Result<QuadSpec, CatalogError> {
    Ok(with_f(solve_kite_rhombus(class, angles)?, f))
}

fn default_earth1_point(p: usize) -> Result<(f64, f64), CatalogError> {
    let f = 2 * p;
    let k = earth_spec(EarthKind::Quad(3), f, &[0.6])?;
    Ok((k.a.radians(), 0.4 * 4.0 * PI / f as f64))
}

/// Tile of the earth map `kind` with `f` tiles.
pub fn earth_spec(kind: EarthKind, f: usize, free: &[f64]) -> Result<QuadSpec, CatalogError> {
    let fi = f as i64;
    let one = |d: f64| -> f64 { free.first().copied().unwrap_or(d) };
    match kind {
        EarthKind::Tri(1) => {
            let b = one(0.4);
            triangle(QuadClass::Triangle, &[pf(4, fi), from_pi(b), from_pi(1.0 - b)], f)
        }
        EarthKind::Tri(2) => triangle(QuadClass::IsoscelesTriangle, &[pf(fi - 4, fi), pf(4, fi)], f),
        EarthKind::Tri(3) => triangle(QuadClass::IsoscelesTriangle, &[pf(4, fi), pf(1, 2)], f),
        EarthKind::Tri(4) => triangle(QuadClass::IsoscelesTriangle, &[pf(8, fi), pf(fi - 4, 2 * fi)], f),
        EarthKind::Tri(_) => triangle(QuadClass::Triangle, &[pf(8, fi), pf(fi - 8, 2 * fi), pf(1, 2)], f),
        EarthKind::Quad(1) => {
            let (a, phi) = match free {
                [a, phi] => (*a, *phi),
                [] => default_earth1_point(f / 2)?,
                _ => return Err(inv("E□1 takes the moduli point [a, φ] in radians")),
            };
            Ok(moduli_general_quad(f as u32, moduli_point(a, phi))?)
        }
        EarthKind::Quad(2) => {
            let b = one(0.9);
            if f >= 8 && !(b > 0.5 && b < 1.5) {
                return Err(inv(format!("E□2 needs ½π < β < 3/2π, got β = {b}π")));
            }
            earth2_spec(f, from_pi(b))
        }
        EarthKind::Quad(3) => {
            let b = one(0.6);
            kite_rhombus(QuadClass::Kite, &[pf(4, fi), from_pi(b), from_pi(2.0 - 2.0 * b)], f)
        }
        EarthKind::Quad(4) => kite_rhombus(QuadClass::Rhombus, &[pf(4, fi), pf(fi - 2, fi)], f),
        EarthKind::Quad(_) => {
            let specs = solve_general_quad(pf(fi - 8, fi), pf(fi + 8, 2 * fi), pf(1, 2), pf(8, fi), Some(f as u32))?;
            Ok(specs.into_iter().next().expect("solver returns at least one tile"))
        }
    }
}

/// Tile of a sporadic tiling.
pub fn sporadic_spec(s: Sporadic) -> Result<QuadSpec, CatalogError> {
    let r = Angle::Numeric;
    let a: [Angle; 4] = match s {
        Sporadic::S12_1 => {
            let g = PI - (3.0f64 / 5.0).sqrt().atan();
            [pf(2, 3), r(2.0 * PI - 2.0 * g), r(g), r(g - PI / 3.0)]
        }
        Sporadic::S16_1 => {
            let g = PI + (2.0 - 5f64.sqrt() - (7.0 - 3.0 * 5f64.sqrt()).sqrt()).atan();
            [pf(1, 2), r(2.0 * PI - 2.0 * g), r(g), r(g - PI / 4.0)]
        }
        Sporadic::S16_2 => {
            let b = ((2f64.sqrt() - 1.0) / 2.0).acos();
            [pf(1, 2), r(b), pf(3, 4), r(PI - b)]
        }
        Sporadic::S16_3 | Sporadic::S16_3Prime => [pf(1, 2), pf(1, 1), pf(1, 4), pf(1, 2)],
        Sporadic::S16_4 => {
            let g = (2.0 + 2f64.sqrt()).atan();
            [pf(1, 2), pf(3, 4), r(g), r(PI - g)]
        }
        Sporadic::S36_5 => [pf(4, 9), pf(7, 9), pf(1, 3), pf(5, 9)],
        Sporadic::S36_6 => [pf(1, 3), pf(5, 9), pf(7, 18), pf(5, 6)],
    };
    Ok(solve_almost_equilateral(a[0], a[1], a[2], a[3], Some(s.f() as u32))?.spec)
}

// ---------------------------------------------------------------------------
// constructions

fn from_mesh(mesh: Mesh, spec: QuadSpec) -> Result<GeometricRealization, CatalogError> {
    let complex = label_mesh(&mesh, &spec, FIT_TOL)?;
    Ok(GeometricRealization { complex, coords: mesh.points, spec })
}

fn fitted(mesh: Mesh, class: QuadClass, angles: &[Angle]) -> Result<GeometricRealization, CatalogError> {
    let spec = fit_spec(&mesh, class, angles, FIT_TOL)?;
    from_mesh(mesh, spec)
}

fn dfs(
    spec: &QuadSpec,
    types: &[VertexCombo],
    f: usize,
    accept: Option<&dyn Fn(&TilingComplex) -> bool>,
) -> Result<GeometricRealization, CatalogError> {
    assemble(&AssemblyGoal { spec, allowed: types, required: types, f, accept, budget: DFS_BUDGET })
}

/// First candidate tile for which `build` succeeds.
fn first_ok<T>(
    specs: Vec<QuadSpec>,
    mut build: impl FnMut(&QuadSpec) -> Result<T, CatalogError>,
) -> Result<T, CatalogError> {
    let mut last = CatalogError::NotFound("no candidate tile".into());
    for s in &specs {
        match build(s) {
            Ok(x) => return Ok(x),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A Platonic solid, regular or deformed within its table constraints.
pub fn build_platonic(f: usize, free: &[f64]) -> Result<GeometricRealization, CatalogError> {
    let id = FamilyId::new(Family::Platonic(f as u8)).with_free(free.to_vec());
    let r = FamilyId::new(Family::Platonic(f as u8)).resolve();
    if ![4, 6, 8, 20].contains(&f) || r.is_err() {
        return Err(inv(match f {
            12 => "P₁₂ is tiled by pentagons and only serves as a source for subdivisions".to_string(),
            _ => format!("no Platonic tiling by triangles or quadrilaterals has {f} tiles"),
        }));
    }
    let free = free_or_default(&id, &r?);
    let types = vertex_types(&id)?;
    match f {
        4 => {
            need_free(&id, &free, 2)?;
            let (a, b) = (free[0], free[1]);
            let spec = triangle(QuadClass::Triangle, &[from_pi(a), from_pi(b), from_pi(2.0 - a - b)], 4)?;
            if is_regular(&id) {
                return from_mesh(Mesh::tetrahedron(), spec);
            }
            dfs(&spec, &types, 4, None)
        }
        6 => {
            need_free(&id, &free, 2)?;
            let (b, g) = (free[0], free[1]);
            let d = 2.0 - b - g;
            if is_regular(&id) {
                return fitted(Mesh::cube(), QuadClass::General, &[pf(2, 3); 4]);
            }
            let specs = solve_general_quad(pf(2, 3), from_pi(b), from_pi(g), from_pi(d), Some(6))?;
            first_ok(specs, |s| dfs(s, &types, 6, None))
        }
        8 => {
            need_free(&id, &free, 1)?;
            let spec = triangle(QuadClass::Triangle, &[pf(1, 2), from_pi(free[0]), from_pi(1.0 - free[0])], 8)?;
            let t = earth_complex(EarthKind::Tri(1), 2)?.with_aliases_from(&spec);
            realize(&t, &spec)
        }
        _ => fitted(Mesh::icosahedron(), QuadClass::EquilateralTriangle, &[pf(2, 5)]),
    }
}

fn axis_of(v: [f64; 3]) -> usize {
    (0..3).max_by(|&i, &j| v[i].abs().total_cmp(&v[j].abs())).expect("three axes")
}

/// Quadrilateral subdivision of the cube with the pyritohedral labelling
/// that survives deformation: `β` on the `x`-edges of faces normal to `z`,
/// on the `y`-edges of faces normal to `x`, on the `z`-edges of faces
/// normal to `y`. Tile `4k + i` lies in cube face `k` at its corner `i`.
pub fn qp6_complex() -> (Mesh, TilingComplex) {
    let cube = Mesh::cube();
    let q = cube.subdivide(Subdivision::Quadrilateral);
    let mut tiles = Vec::new();
    for face in &cube.faces {
        let centre = face.iter().fold([0.0; 3], |acc, &v| sphercore::vec3::add(acc, cube.points[v].to_array()));
        let beta_axis = (axis_of(centre) + 1) % 3;
        let n = face.len();
        for i in 0..n {
            let (v, w) = (face[i], face[(i + 1) % n]);
            let dir = sphercore::vec3::sub(cube.points[w].to_array(), cube.points[v].to_array());
            let (b, d) = if axis_of(dir) == beta_axis {
                (AngleLabel::Beta, AngleLabel::Delta)
            } else {
                (AngleLabel::Delta, AngleLabel::Beta)
            };
            // the subdivided face at corner i is (v, m(v,w), c, m(u,v))
            let qf = &q.faces[tiles.len()];
            let ccw = [(qf[0], AngleLabel::Alpha), (qf[1], b), (qf[2], AngleLabel::Gamma), (qf[3], d)];
            tiles.push(tile_ccw(QuadClass::General, &ccw).expect("general template"));
        }
    }
    let t = TilingComplex::new(QuadClass::General, q.points.len(), tiles);
    (cube, t)
}

fn build_qp6(beta: f64) -> Result<GeometricRealization, CatalogError> {
    if !(beta > 0.0 && beta < 1.0) {
        return Err(inv(format!("QP₆ needs 0 < β < π, got β = {beta}π")));
    }
    let (_, t) = qp6_complex();
    let specs = solve_general_quad(pf(2, 3), from_pi(beta), pf(1, 2), from_pi(1.0 - beta), Some(24))?;
    first_ok(specs, |s| realize(&t.clone().with_aliases_from(s), s))
}

/// A subdivision of a Platonic solid, labelled per its table row.
pub fn build_subdivision(kind: SubKind, base: u8, free: &[f64]) -> Result<GeometricRealization, CatalogError> {
    let fam = Family::parse(&format!("{}P{base}", kind.letter()))?;
    let Family::Sub(kind, base) = fam else {
        return build(&FamilyId::new(fam).with_free(free.to_vec()));
    };
    if kind == SubKind::Q && base == 6 {
        let b = free.first().copied().unwrap_or(0.5);
        return build_qp6(b);
    }
    let mesh = Mesh::platonic(base as usize)?.subdivide(kind.subdivision());
    use QuadClass::*;
    let (class, angles): (QuadClass, Vec<Angle>) = match (kind, base) {
        (SubKind::T, 4) => (IsoscelesTriangle, vec![pf(2, 3), pf(1, 3)]),
        (SubKind::T, 6) => (IsoscelesTriangle, vec![pf(1, 2), pf(1, 3)]),
        (SubKind::T, 8) => (IsoscelesTriangle, vec![pf(2, 3), pf(1, 4)]),
        (SubKind::T, 12) => (IsoscelesTriangle, vec![pf(2, 5), pf(1, 3)]),
        (SubKind::T, _) => (IsoscelesTriangle, vec![pf(2, 3), pf(1, 5)]),
        (SubKind::B, 6) => (Triangle, vec![pf(1, 3), pf(1, 4), pf(1, 2)]),
        (SubKind::B, _) => (Triangle, vec![pf(1, 3), pf(1, 5), pf(1, 2)]),
        (SubKind::Q, 4) => (Rhombus, vec![pf(2, 3), pf(1, 2)]),
        (SubKind::Q, _) => (Kite, vec![pf(2, 5), pf(1, 2), pf(2, 3)]),
        (SubKind::C, _) => (Rhombus, vec![pf(2, 3), pf(2, 5)]),
    };
    fitted(mesh, class, &angles)
}

/// All simple triangular subdivisions of the regular cube, one per choice
/// of diagonals (bit `k` of the index picks the diagonal of face `k`).
pub fn cube_simple_triangulations() -> Result<Vec<GeometricRealization>, CatalogError> {
    let cube = Mesh::cube();
    let spec = fit_spec(
        &cube.simple_triangular(&[false; 6])?,
        QuadClass::IsoscelesTriangle,
        &[pf(2, 3), pf(1, 3)],
        FIT_TOL,
    )?;
    let one = |bits: u32| -> Result<GeometricRealization, CatalogError> {
        let choice: Vec<bool> = (0..6).map(|k| bits >> k & 1 == 1).collect();
        from_mesh(cube.simple_triangular(&choice)?, spec.clone())
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..64u32).into_par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..64u32).map(one).collect()
    }
}

fn build_sp6(order: usize) -> Result<GeometricRealization, CatalogError> {
    let all = cube_simple_triangulations()?;
    all.into_iter()
        .find(|r| r.complex.census().len() == 4 && symmetry_counts(&r.complex).0 == order)
        .ok_or_else(|| CatalogError::NotFound(format!("no simple triangulation with {order} symmetries")))
}

/// An earth map tiling with `p` timezones.
pub fn build_earth_map(kind: EarthKind, p: usize, free: &[f64]) -> Result<GeometricRealization, CatalogError> {
    let id = FamilyId::new(Family::Earth(kind)).with_p(p as u32).with_free(free.to_vec());
    let r = id.resolve()?;
    let spec = earth_spec(kind, r.f, free)?;
    if kind == EarthKind::Quad(5) {
        let types = vertex_types(&id)?;
        let specs = solve_general_quad(spec.alpha, spec.beta, spec.gamma, spec.angle(AngleLabel::Delta), spec.f)?;
        return first_ok(specs, |s| dfs(s, &types, r.f, None));
    }
    let t = earth_complex(kind, p)?.with_aliases_from(&spec);
    realize(&t, &spec)
}

/// The sporadic tiling `s`.
pub fn build_sporadic(s: Sporadic) -> Result<GeometricRealization, CatalogError> {
    let spec = sporadic_spec(s)?;
    let types = vertex_types(&FamilyId::new(Family::Sporadic(s)))?;
    let want = match s {
        Sporadic::S16_3 => Some((8, 4)),
        Sporadic::S16_3Prime => Some((8, 8)),
        _ => None,
    };
    let accept = move |t: &TilingComplex| want.is_none_or(|w| symmetry_counts(t) == w);
    dfs(&spec, &types, s.f(), Some(&accept))
}

fn vertex_with(r: &GeometricRealization, c: VertexCombo) -> Option<usize> {
    let c = r.complex.alias_combo(&c);
    r.complex.vertex_combos().iter().position(|x| *x == c)
}

fn cap(r: &GeometricRealization, axis: UnitVec) -> BTreeSet<usize> {
    (0..r.complex.f())
        .filter(|&i| {
            let s = r.complex.tiles[i].corners.iter().map(|c| r.coords[c.vertex].dot(axis)).sum::<f64>();
            s > 1e-9
        })
        .collect()
}

/// Blocks of `size` tiles of an earth map: whole zones first when `size`
/// allows, then windows by azimuth about `pole`.
fn earth_windows(r: &GeometricRealization, per_zone: usize, size: usize, pole: UnitVec) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    if size.is_multiple_of(per_zone) {
        out = zone_windows(r.complex.f(), per_zone, size / per_zone);
    }
    out.extend(azimuth_windows(r, pole, size));
    out
}

/// A flip modification built from its source tiling.
pub fn apply_flip(id: &FamilyId) -> Result<GeometricRealization, CatalogError> {
    let r = id.resolve()?;
    let types = vertex_types(id)?;
    let all = |_: usize, t: &TilingComplex| census_within(t, &types, &types);
    let half = r.f / 2;
    let q = r.q;
    match id.family {
        Family::BP8Prime => {
            let src = fitted(
                Mesh::octahedron().subdivide(Subdivision::Barycentric),
                QuadClass::Triangle,
                &[pf(1, 4), pf(1, 3), pf(1, 2)],
            )?;
            flip_sequence(&src, 1, |c| vec![cap(c, UnitVec::Z)], all)
        }
        Family::QP8Prime => {
            let src = fitted(
                Mesh::octahedron().subdivide(Subdivision::Quadrilateral),
                QuadClass::Kite,
                &[pf(2, 3), pf(1, 2), pf(1, 2)],
            )?;
            flip_sequence(&src, 1, |c| vec![cap(c, UnitVec::Z)], all)
        }
        Family::QP6Prime => {
            let src = build_qp6(2.0 / 3.0)?;
            let (cube, _) = qp6_complex();
            let block: BTreeSet<usize> = cube
                .faces
                .iter()
                .enumerate()
                .filter(|(_, f)| f.contains(&0))
                .flat_map(|(k, _)| 4 * k..4 * k + 4)
                .collect();
            flip_sequence(&src, 1, |_| vec![block.clone()], all)
        }
        Family::TriFlip(5) => {
            // triangular subdivision of E′□4 with the same q
            let base = apply_flip(&FamilyId::new(Family::QuadFlip4).with_q(q as u32))?;
            let mesh = Mesh {
                points: base.coords.clone(),
                faces: base.complex.tiles.iter().map(|t| t.ccw_vertices()).collect(),
            };
            let spec = earth_spec(EarthKind::Tri(5), r.f, &[])?;
            let out = from_mesh(mesh.subdivide(Subdivision::Triangular), spec)?;
            if !census_within(&out.complex, &types, &types) {
                return Err(CatalogError::Mismatch("subdivided E′□4 has the wrong vertex types".into()));
            }
            Ok(out)
        }
        Family::TriFlip(k) => {
            let free = free_or_default(id, &r);
            let (kind, p, window) = match k {
                1 => (EarthKind::Tri(1), 2 * q + 1, half),
                2 => (EarthKind::Tri(2), 2 * q + 1, half),
                3 => (EarthKind::Tri(3), 2 * q, half),
                4 => (EarthKind::Tri(4), 2 * q + 1, 4 * q),
                _ => (EarthKind::Tri(5), 2 * q + 1, 8 * q),
            };
            let src = build_earth_map(kind, p, if k == 1 { &free } else { &[] })?;
            let pole = src.coords[0];
            flip_sequence(&src, 1, |c| earth_windows(c, kind.tiles_per_zone(), window, pole), all)
        }
        Family::TriFlip1Double | Family::TriFlip1Triple => {
            let f = r.f as i64;
            let beta = 0.5 - 2.0 / f as f64;
            let base = apply_flip(&FamilyId::new(Family::TriFlip(1)).with_q(q as u32).with_free(vec![beta]))?;
            let double = FamilyId::new(Family::TriFlip1Double).with_q(q as u32);
            let dt = vertex_types(&double)?;
            let once = flip_sequence(&base, 1, |c| adjacent_pairs(&c.complex), |_, t| census_within(t, &dt, &dt))?;
            if id.family == Family::TriFlip1Double {
                return Ok(once);
            }
            flip_sequence(&once, 1, |c| adjacent_pairs(&c.complex), all)
        }
        Family::QuadFlip4 => {
            let src = build_earth_map(EarthKind::Quad(4), 2 * q + 1, &[])?;
            let pole = src.coords[0];
            flip_sequence(&src, 1, |c| earth_windows(c, 2, 2 * q, pole), all)
        }
        Family::QuadFlip5 | Family::QuadFlip5Double => {
            let p = 2 * q + 1;
            let src = build_earth_map(EarthKind::Quad(5), p, &[])?;
            let pole = vertex_with(&src, vc(0, 0, 0, 2 * p as u32))
                .ok_or_else(|| CatalogError::Geometry("E□5 source has no pole".into()))?;
            let pole = src.coords[pole];
            flip_sequence(&src, 1, |c| azimuth_windows(c, pole, half), all)
        }
        Family::QuadFlipST | Family::QuadFlipS2T => {
            let (p, s, t) = (r.p, r.s, r.t);
            let primed = id.family == Family::QuadFlipST;
            // β = 4s/f π with s the flipped width; for E″ the width is s′ = p − s
            let s_beta = if primed { s } else { p - s };
            let src = build_earth_map(EarthKind::Quad(2), p, &[2.0 * s_beta as f64 / p as f64])?;
            let pole = src.coords[0];
            let (pi, si, ti) = (p as u32, s as u32, t as u32);
            let stage = |j: usize, c: &TilingComplex| {
                let j = j as u32;
                let ty = if primed {
                    vec![vc(0, 1, 1, 1), vc(pi - si * j, j, 0, 0), vc(si, 0, 1, 1), vc(pi, 0, 0, 0)]
                } else {
                    vec![vc(0, 1, 1, 1), vc(si, 1, 0, 0), vc(pi - si * j, 0, j, j), vc(pi, 0, 0, 0)]
                };
                let ty: Vec<VertexCombo> = ty.into_iter().filter(|x| x.degree() > 0).collect();
                if j == ti {
                    census_within(c, &types, &types)
                } else {
                    census_within(c, &ty, &[])
                }
            };
            let blocks = |c: &GeometricRealization| {
                earth_windows(c, 2, 2 * s, pole)
            };
            flip_sequence(&src, t, blocks, stage)
        }
        Family::Rearranged2 => {
            let f = r.f as i64;
            let a = solve_almost_equilateral(
                pf(4, f),
                pf(4 * f - 4, 3 * f),
                pf(2, f),
                pf(2 * f - 2, 3 * f),
                Some(f as u32),
            )?;
            dfs(&a.spec, &types, r.f, None)
        }
        other => Err(CatalogError::Inapplicable(format!("{other} is not a flip modification"))),
    }
}

/// Builds any family at the given parameters.
pub fn build(id: &FamilyId) -> Result<GeometricRealization, CatalogError> {
    let r = id.resolve()?;
    let free = &id.params.free;
    match id.family {
        Family::Platonic(n) => build_platonic(n as usize, free),
        Family::Sub(k, n) => build_subdivision(k, n, free),
        Family::SP6 => build_sp6(4),
        Family::SP6Prime => build_sp6(2),
        Family::Earth(kind) => build_earth_map(kind, r.p, free),
        Family::Sporadic(s) => build_sporadic(s),
        _ => apply_flip(id),
    }
}

/// Builds several families, in parallel when the `parallel` feature is on.
pub fn build_many(ids: &[FamilyId]) -> Vec<Result<GeometricRealization, CatalogError>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        ids.par_iter().map(build).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        ids.iter().map(build).collect()
    }
}

/// Builds several families one after another.
pub fn build_many_sequential(ids: &[FamilyId]) -> Vec<Result<GeometricRealization, CatalogError>> {
    ids.iter().map(build).collect()
}

// ---------------------------------------------------------------------------
// listing

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    /// "triangle" or "quadrilateral".
    pub tile: String,
    /// "platonic", "earth map" or "sporadic".
    pub group: String,
    pub aliases: Vec<String>,
    pub parameters: String,
}

/// Every family, grouped as in the two classification theorems.
pub fn census() -> Vec<CatalogEntry> {
    use Family::*;
    let entry = |family: Family, group: &str, aliases: &[&str], parameters: &str| CatalogEntry {
        name: family.to_string(),
        family,
        tile: if family.is_triangular() { "triangle" } else { "quadrilateral" }.to_string(),
        group: group.to_string(),
        aliases: aliases.iter().map(|s| s.to_string()).collect(),
        parameters: parameters.to_string(),
    };
    let mut out = vec![
        entry(Platonic(6), "platonic", &["CP₄"], "two free angles"),
        entry(Sub(SubKind::Q, 4), "platonic", &["CP₆", "CP₈"], ""),
        entry(Sub(SubKind::Q, 6), "platonic", &["QP₈"], "one free angle β"),
        entry(Sub(SubKind::Q, 12), "platonic", &["QP₂₀"], ""),
        entry(Sub(SubKind::C, 12), "platonic", &["CP₂₀"], ""),
        entry(QP6Prime, "platonic", &[], ""),
        entry(QP8Prime, "platonic", &[], ""),
    ];
    for k in 1..=5 {
        let params = match k {
            1 => "p; moduli point [a, φ]",
            2 => "p; β",
            3 => "p; β",
            _ => "p",
        };
        out.push(entry(Earth(EarthKind::Quad(k)), "earth map", &[], params));
    }
    out.push(entry(QuadFlipST, "earth map", &["E″(s′,1)□2 when t = 1"], "p, s, t"));
    out.push(entry(QuadFlipS2T, "earth map", &[], "p, s′, t"));
    out.push(entry(QuadFlip4, "earth map", &[], "q"));
    out.push(entry(QuadFlip5, "earth map", &[], "q"));
    out.push(entry(QuadFlip5Double, "earth map", &[], "q"));
    out.push(entry(Rearranged2, "earth map", &[], "q"));
    for s in self::Sporadic::ALL {
        out.push(entry(Sporadic(s), "sporadic", &[], ""));
    }
    out.extend([
        entry(Platonic(4), "platonic", &[], "two free angles"),
        entry(Platonic(8), "platonic", &[], "one free angle β"),
        entry(Platonic(20), "platonic", &[], ""),
        entry(Sub(SubKind::T, 4), "platonic", &[], ""),
        entry(Sub(SubKind::T, 6), "platonic", &["BP₄"], ""),
        entry(Sub(SubKind::T, 8), "platonic", &[], ""),
        entry(Sub(SubKind::T, 12), "platonic", &[], ""),
        entry(Sub(SubKind::T, 20), "platonic", &[], ""),
        entry(Sub(SubKind::B, 6), "platonic", &["BP₈"], ""),
        entry(Sub(SubKind::B, 12), "platonic", &["BP₂₀"], ""),
        entry(SP6, "platonic", &[], ""),
        entry(SP6Prime, "platonic", &[], ""),
        entry(BP8Prime, "platonic", &[], ""),
    ]);
    for k in 1..=5 {
        out.push(entry(Earth(EarthKind::Tri(k)), "earth map", &[], if k == 1 { "p; β" } else { "p" }));
    }
    out.push(entry(TriFlip(1), "earth map", &[], "q; β"));
    out.push(entry(TriFlip1Double, "earth map", &[], "q"));
    out.push(entry(TriFlip1Triple, "earth map", &[], "q"));
    for k in 2..=5 {
        out.push(entry(TriFlip(k), "earth map", &[], "q"));
    }
    out
}
