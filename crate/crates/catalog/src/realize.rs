use quadsolve::QuadSpec;
use serde::{Deserialize, Serialize};
use sphercore::{ArcPolygon, UnitVec};
use std::collections::VecDeque;

use crate::complex::TilingComplex;
use crate::geom::{oriented_templates, place};
use crate::CatalogError;

/// Default agreement tolerance for re-entrant placements.
pub const REALIZE_TOL: f64 = 1e-8;

/// A complex with coordinates for every vertex and the tile it is built from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeometricRealization {
    pub complex: TilingComplex,
    pub coords: Vec<UnitVec>,
    pub spec: QuadSpec,
}

impl GeometricRealization {
    /// Tile `t` as a spherical polygon, corners in template order.
    pub fn tile_polygon(&self, t: usize) -> Result<ArcPolygon, CatalogError> {
        let verts = self.complex.tiles[t].corners.iter().map(|c| self.coords[c.vertex]).collect();
        ArcPolygon::from_vertices(verts).map_err(|e| CatalogError::Geometry(e.to_string()))
    }

    /// Tile `t` with corners in counterclockwise order.
    pub fn tile_polygon_ccw(&self, t: usize) -> Result<ArcPolygon, CatalogError> {
        let verts = self.complex.tiles[t].ccw_vertices().into_iter().map(|v| self.coords[v]).collect();
        ArcPolygon::from_vertices(verts).map_err(|e| CatalogError::Geometry(e.to_string()))
    }
}

/// Places tile 0 as the template (mirrored if reversed) and propagates
/// across shared edges breadth first. Every vertex reached twice must land
/// within `tol` of its first position.
pub fn realize(t: &TilingComplex, spec: &QuadSpec) -> Result<GeometricRealization, CatalogError> {
    realize_tol(t, spec, REALIZE_TOL)
}

pub fn realize_tol(t: &TilingComplex, spec: &QuadSpec, tol: f64) -> Result<GeometricRealization, CatalogError> {
    if spec.class != t.class {
        return Err(CatalogError::Mismatch(format!("template class {} but complex class {}", spec.class, t.class)));
    }
    if t.tiles.is_empty() {
        return Err(CatalogError::Geometry("empty complex".into()));
    }
    let tmpl = oriented_templates(spec)?;
    let mut coords: Vec<Option<UnitVec>> = vec![None; t.num_vertices];
    let mut done = vec![false; t.f()];
    let uses = t.edge_uses();
    let mut queue = VecDeque::from([0usize]);
    {
        let tile = &t.tiles[0];
        let o = &tmpl[tile.reversed as usize];
        let ccw = tile.ccw_vertices();
        for (j, &v) in ccw.iter().enumerate() {
            coords[v] = Some(o.pts[j]);
        }
    }
    while let Some(ti) = queue.pop_front() {
        if done[ti] {
            continue;
        }
        let tile = &t.tiles[ti];
        let o = &tmpl[tile.reversed as usize];
        let ccw = tile.ccw_vertices();
        let n = ccw.len();
        // anchor on any counterclockwise edge with both ends known
        let j = (0..n)
            .find(|&j| coords[ccw[j]].is_some() && coords[ccw[(j + 1) % n]].is_some())
            .ok_or_else(|| CatalogError::Geometry(format!("tile {ti} reached without a known edge")))?;
        let pts = place(o, j, coords[ccw[j]].unwrap(), coords[ccw[(j + 1) % n]].unwrap())
            .ok_or_else(|| CatalogError::Geometry(format!("tile {ti}: degenerate anchor edge")))?;
        for (k, &v) in ccw.iter().enumerate() {
            match coords[v] {
                Some(p) if p.chord(pts[k]) > tol => {
                    return Err(CatalogError::Geometry(format!(
                        "tile {ti} puts vertex {v} {:.3e} away from its earlier position",
                        p.chord(pts[k])
                    )))
                }
                Some(_) => {}
                None => coords[v] = Some(pts[k]),
            }
        }
        done[ti] = true;
        for k in 0..n {
            let (u, v) = (ccw[k], ccw[(k + 1) % n]);
            if let Some(us) = uses.get(&(u.min(v), u.max(v))) {
                for &(t2, _) in us {
                    if !done[t2] {
                        queue.push_back(t2);
                    }
                }
            }
        }
    }
    if let Some(ti) = done.iter().position(|d| !d) {
        return Err(CatalogError::Geometry(format!("tile {ti} is not connected to tile 0")));
    }
    let coords = coords
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| CatalogError::Geometry(format!("vertex {v} is on no tile"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GeometricRealization { complex: t.clone(), coords, spec: spec.clone() })
}
