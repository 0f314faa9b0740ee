//! Earth map tilings: two poles joined by `p` repeating timezones.
//!
//! Vertex 0 is the north pole and vertex 1 the south pole. Tiles are listed
//! timezone by timezone.

use quadsolve::{AngleLabel, QuadClass};

use crate::complex::{Corner, Tile, TilingComplex};
use crate::CatalogError;

use AngleLabel::{Alpha as A, Beta as B, Delta as D, Gamma as G};

/// Tile from counterclockwise `(vertex, angle)` pairs; the template
/// orientation and edge labels follow from the angle pattern.
pub fn tile_ccw(class: QuadClass, ccw: &[(usize, AngleLabel)]) -> Result<Tile, CatalogError> {
    let corners = class.corners();
    let n = corners.len();
    if ccw.len() != n {
        return Err(CatalogError::Mismatch(format!("{class} tiles have {n} corners, got {}", ccw.len())));
    }
    for d in [1isize, -1] {
        for s in 0..n {
            let pos = |j: usize| (s as isize + d * j as isize).rem_euclid(n as isize) as usize;
            if (0..n).all(|j| ccw[pos(j)].1 == corners[j].0) {
                let tile_corners =
                    (0..n).map(|j| Corner { vertex: ccw[pos(j)].0, angle: corners[j].0, edge: corners[j].1 }).collect();
                return Ok(Tile { corners: tile_corners, reversed: d < 0 });
            }
        }
    }
    Err(CatalogError::Mismatch(format!("angle pattern {ccw:?} does not fit the {class} template")))
}

/// Which earth map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum EarthKind {
    Tri(u8),
    Quad(u8),
}

impl EarthKind {
    pub fn class(self) -> QuadClass {
        match self {
            EarthKind::Tri(1) | EarthKind::Tri(5) => QuadClass::Triangle,
            EarthKind::Tri(_) => QuadClass::IsoscelesTriangle,
            EarthKind::Quad(1) => QuadClass::General,
            EarthKind::Quad(2) => QuadClass::AlmostEquilateral,
            EarthKind::Quad(3) => QuadClass::Kite,
            EarthKind::Quad(4) => QuadClass::Rhombus,
            EarthKind::Quad(_) => QuadClass::General,
        }
    }

    /// Tiles per timezone.
    pub fn tiles_per_zone(self) -> usize {
        match self {
            EarthKind::Tri(1) | EarthKind::Tri(2) | EarthKind::Tri(4) => 4,
            EarthKind::Tri(3) => 2,
            EarthKind::Tri(5) | EarthKind::Quad(5) => 8,
            _ => 2,
        }
    }

    pub fn num_tiles(self, p: usize) -> usize {
        self.tiles_per_zone() * p
    }

    /// Smallest timezone count with an honest tiling (no degree-2 vertex).
    pub fn min_zones(self) -> usize {
        match self {
            EarthKind::Quad(_) | EarthKind::Tri(3..) => 3,
            _ => 2,
        }
    }
}

/// Labelled combinatorial earth map with `p` timezones. `Quad(5)` has no
/// closed combinatorial description here; it is assembled geometrically.
pub fn earth_complex(kind: EarthKind, p: usize) -> Result<TilingComplex, CatalogError> {
    if p < kind.min_zones() {
        return Err(CatalogError::InvalidParams(format!("{kind:?} needs at least {} timezones, got {p}", kind.min_zones())));
    }
    let class = kind.class();
    let t = |c: &[(usize, AngleLabel)]| tile_ccw(class, c);
    let (n, s) = (0usize, 1usize);
    let mut tiles = Vec::new();
    let num_vertices;
    match kind {
        EarthKind::Quad(k @ 1..=4) => {
            let b = |i: usize| 2 + i % p;
            let c = |i: usize| 2 + p + i % p;
            // corner of the upper tile at B_i, C_i, B_{i+1}
            let (x, y, z) = match k {
                1 | 2 => (B, G, D),
                3 => (B, G, B),
                _ => (B, A, B),
            };
            for i in 0..p {
                tiles.push(t(&[(n, A), (b(i), x), (c(i), y), (b(i + 1), z)])?);
                tiles.push(t(&[(s, A), (c(i + 1), x), (b(i + 1), y), (c(i), z)])?);
            }
            num_vertices = 2 + 2 * p;
        }
        EarthKind::Tri(k @ 1..=2) => {
            // zigzag ring: even points lean north, odd points south
            let r = |j: usize| 2 + j % (2 * p);
            let (pole, up_even, up_odd) = if k == 1 { (A, B, G) } else { (B, A, B) };
            let lab_up = |j: usize| if j.is_multiple_of(2) { up_even } else { up_odd };
            let lab_dn = |j: usize| if j.is_multiple_of(2) { up_odd } else { up_even };
            for j in 0..2 * p {
                tiles.push(t(&[(n, pole), (r(j), lab_up(j)), (r(j + 1), lab_up(j + 1))])?);
                tiles.push(t(&[(s, pole), (r(j + 1), lab_dn(j + 1)), (r(j), lab_dn(j))])?);
            }
            num_vertices = 2 + 2 * p;
        }
        EarthKind::Tri(3) => {
            let r = |j: usize| 2 + j % p;
            for j in 0..p {
                tiles.push(t(&[(n, A), (r(j), B), (r(j + 1), B)])?);
                tiles.push(t(&[(s, A), (r(j + 1), B), (r(j), B)])?);
            }
            num_vertices = 2 + p;
        }
        EarthKind::Tri(4) => {
            let u = |j: usize| 2 + j % p;
            let l = |j: usize| 2 + p + j % p;
            for j in 0..p {
                tiles.push(t(&[(n, A), (u(j), B), (u(j + 1), B)])?);
                tiles.push(t(&[(u(j), B), (l(j), A), (u(j + 1), B)])?);
                tiles.push(t(&[(l(j), B), (l(j + 1), B), (u(j + 1), A)])?);
                tiles.push(t(&[(s, A), (l(j + 1), B), (l(j), B)])?);
            }
            num_vertices = 2 + 2 * p;
        }
        EarthKind::Tri(5) => {
            // triangular subdivision of the rhombic earth map: rhombus α
            // and β corners keep their letters, face centres get γ
            let base = earth_complex(EarthKind::Quad(4), p)?;
            let mut next = base.num_vertices;
            for tile in &base.tiles {
                let ccw = ccw_labelled(tile);
                let centre = next;
                next += 1;
                for k in 0..4 {
                    let (v, x) = ccw[k];
                    let (w, y) = ccw[(k + 1) % 4];
                    tiles.push(t(&[(centre, G), (v, x), (w, y)])?);
                }
            }
            num_vertices = next;
        }
        _ => return Err(CatalogError::Inapplicable(format!("{kind:?} has no combinatorial earth map construction"))),
    }
    Ok(TilingComplex::new(class, num_vertices, tiles))
}

/// `(vertex, angle)` pairs of a tile in counterclockwise order.
pub fn ccw_labelled(tile: &Tile) -> Vec<(usize, AngleLabel)> {
    let mut v: Vec<(usize, AngleLabel)> = tile.corners.iter().map(|c| (c.vertex, c.angle)).collect();
    if tile.reversed {
        v[1..].reverse();
    }
    v
}
