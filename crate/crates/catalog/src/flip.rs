//! Flip modifications: a block of tiles is lifted off the sphere, moved by an
//! isometry that carries the block's boundary onto itself, and put back.

use sphercore::{tangent_basis, vec3, Mat3, UnitVec};
use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::TAU;

use crate::complex::{Tile, TilingComplex};
use crate::realize::GeometricRealization;
use crate::CatalogError;

const POS_TOL: f64 = 1e-7;

fn close(p: UnitVec, q: UnitVec) -> bool {
    p.chord(q) < POS_TOL
}

/// Counterclockwise boundary cycle of a block of tiles.
pub fn block_boundary(t: &TilingComplex, block: &BTreeSet<usize>) -> Result<Vec<usize>, CatalogError> {
    let mut inner = BTreeSet::new();
    for &i in block {
        let v = t.tiles[i].ccw_vertices();
        for k in 0..v.len() {
            inner.insert((v[k], v[(k + 1) % v.len()]));
        }
    }
    let mut next = BTreeMap::new();
    for &(u, v) in &inner {
        if !inner.contains(&(v, u)) && next.insert(u, v).is_some() {
            return Err(CatalogError::Inapplicable("block boundary touches itself".into()));
        }
    }
    let Some(&start) = next.keys().next() else {
        return Err(CatalogError::Inapplicable("block has no boundary".into()));
    };
    let mut cycle = vec![start];
    let mut cur = next[&start];
    while cur != start {
        if cycle.len() > next.len() {
            return Err(CatalogError::Inapplicable("block boundary is not a cycle".into()));
        }
        cycle.push(cur);
        cur = *next
            .get(&cur)
            .ok_or_else(|| CatalogError::Inapplicable("block boundary is open".into()))?;
    }
    if cycle.len() != next.len() {
        return Err(CatalogError::Inapplicable("block boundary has several components".into()));
    }
    Ok(cycle)
}

/// Isometries carrying the boundary cycle onto itself, identity excluded.
fn boundary_isometries(b: &[UnitVec]) -> Vec<Mat3> {
    let m = b.len();
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let mirror = Mat3::reflection(UnitVec::Y);
    for k in 0..m {
        if let Some(g) = Mat3::align(b[0], b[1], b[k], b[(k + 1) % m]) {
            if k != 0 && (0..m).all(|i| close(g.apply_unit(b[i]), b[(i + k) % m])) {
                out.push(g);
            }
        }
        let mb = |i: usize| mirror.apply_unit(b[i]);
        if let Some(g) = Mat3::align(mb(0), mb(1), b[k], b[(k + m - 1) % m]) {
            let g = g * mirror;
            if (0..m).all(|i| close(g.apply_unit(b[i]), b[(k + m - i) % m])) {
                out.push(g);
            }
        }
    }
    out
}

/// Rebuilds a realization from per-tile corner positions, merging vertices
/// that coincide.
fn rebuild(r: &GeometricRealization, tiles: Vec<(Tile, Vec<UnitVec>)>) -> GeometricRealization {
    let mut coords: Vec<UnitVec> = Vec::new();
    let mut out = Vec::with_capacity(tiles.len());
    for (mut tile, pos) in tiles {
        for (c, p) in tile.corners.iter_mut().zip(pos) {
            c.vertex = match coords.iter().position(|&q| close(p, q)) {
                Some(v) => v,
                None => {
                    coords.push(p);
                    coords.len() - 1
                }
            };
        }
        out.push(tile);
    }
    let mut complex = TilingComplex::new(r.complex.class, coords.len(), out);
    complex.angle_aliases = r.complex.angle_aliases.clone();
    complex.edge_aliases = r.complex.edge_aliases.clone();
    GeometricRealization { complex, coords, spec: r.spec.clone() }
}

/// Edge-to-edge with matching edge labels, consistent orientation, every
/// vertex of degree at least 3 and angle sums of 2π.
pub fn is_sound(r: &GeometricRealization) -> bool {
    let t = &r.complex;
    let mut directed = BTreeSet::new();
    for tile in &t.tiles {
        let v = tile.ccw_vertices();
        for k in 0..v.len() {
            if !directed.insert((v[k], v[(k + 1) % v.len()])) {
                return false;
            }
        }
    }
    for uses in t.edge_uses().values() {
        if uses.len() != 2 {
            return false;
        }
        let lab = |(ti, ci): (usize, usize)| t.edge_alias(t.tiles[ti].corners[ci].edge);
        if lab(uses[0]) != lab(uses[1]) {
            return false;
        }
    }
    let mut sum = vec![0.0; t.num_vertices];
    let mut deg = vec![0usize; t.num_vertices];
    for tile in &t.tiles {
        for c in &tile.corners {
            sum[c.vertex] += r.spec.angle(c.angle).radians();
            deg[c.vertex] += 1;
        }
    }
    sum.iter().zip(&deg).all(|(s, &d)| d >= 3 && (s - TAU).abs() < 1e-7)
}

fn region_key(pos: &[UnitVec]) -> Vec<[i64; 3]> {
    let mut k: Vec<[i64; 3]> = pos
        .iter()
        .map(|p| p.to_array().map(|x| (x * 1e6).round() as i64))
        .collect();
    k.sort();
    k
}

/// Every sound tiling obtained by flipping `block`, in a fixed order. Flips
/// that only permute the block's own tiles are skipped.
pub fn flip_block(r: &GeometricRealization, block: &BTreeSet<usize>) -> Result<Vec<GeometricRealization>, CatalogError> {
    let cycle = block_boundary(&r.complex, block)?;
    let b: Vec<UnitVec> = cycle.iter().map(|&v| r.coords[v]).collect();
    let pos = |i: usize| -> Vec<UnitVec> { r.complex.tiles[i].corners.iter().map(|c| r.coords[c.vertex]).collect() };
    let before: BTreeSet<_> = block.iter().map(|&i| region_key(&pos(i))).collect();
    let mut out = Vec::new();
    for g in boundary_isometries(&b) {
        let flip_orientation = g.det() < 0.0;
        let moved: Vec<(Tile, Vec<UnitVec>)> = (0..r.complex.f())
            .map(|i| {
                let mut tile = r.complex.tiles[i].clone();
                let mut p = pos(i);
                if block.contains(&i) {
                    p = p.into_iter().map(|q| g.apply_unit(q)).collect();
                    tile.reversed ^= flip_orientation;
                }
                (tile, p)
            })
            .collect();
        let after: BTreeSet<_> = block.iter().map(|&i| region_key(&moved[i].1)).collect();
        if after == before {
            continue;
        }
        let cand = rebuild(r, moved);
        if is_sound(&cand) {
            out.push(cand);
        }
    }
    Ok(out)
}

/// Windows of `zones` consecutive zones for tiles numbered zone by zone,
/// `per_zone` tiles each.
pub fn zone_windows(f: usize, per_zone: usize, zones: usize) -> Vec<BTreeSet<usize>> {
    let k = (zones * per_zone).min(f);
    (0..f / per_zone).map(|z| (0..k).map(|j| (z * per_zone + j) % f).collect()).collect()
}

/// Tiles sorted by the azimuth of their centres about `pole`; windows of `k`
/// consecutive tiles in that order, one starting at each tile.
pub fn azimuth_windows(r: &GeometricRealization, pole: UnitVec, k: usize) -> Vec<BTreeSet<usize>> {
    let (e1, e2) = tangent_basis(pole);
    let mut order: Vec<(f64, usize)> = (0..r.complex.f())
        .map(|i| {
            let s = r.complex.tiles[i]
                .corners
                .iter()
                .fold([0.0; 3], |acc, c| vec3::add(acc, r.coords[c.vertex].to_array()));
            (vec3::dot(s, e2).atan2(vec3::dot(s, e1)).rem_euclid(TAU), i)
        })
        .collect();
    order.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let n = order.len();
    (0..n).map(|s| (0..k.min(n)).map(|j| order[(s + j) % n].1).collect()).collect()
}

/// Flips `count` disjoint blocks, each drawn from `blocks(current)`. After
/// the `j`-th flip the tiling must satisfy `accept(j, complex)`. Blocks are
/// tried in order; the first accepted flip is kept.
pub fn flip_sequence(
    r: &GeometricRealization,
    count: usize,
    blocks: impl Fn(&GeometricRealization) -> Vec<BTreeSet<usize>>,
    accept: impl Fn(usize, &TilingComplex) -> bool,
) -> Result<GeometricRealization, CatalogError> {
    let mut cur = r.clone();
    let mut used: BTreeSet<usize> = BTreeSet::new();
    'outer: for j in 1..=count {
        for block in blocks(&cur) {
            if !block.is_disjoint(&used) {
                continue;
            }
            let Ok(cands) = flip_block(&cur, &block) else { continue };
            if let Some(next) = cands.into_iter().find(|c| accept(j, &c.complex)) {
                used.extend(block);
                cur = next;
                continue 'outer;
            }
        }
        return Err(CatalogError::NotFound(format!("no admissible block for flip {j} of {count}")));
    }
    Ok(cur)
}

/// Pairs of tiles sharing an edge.
pub fn adjacent_pairs(t: &TilingComplex) -> Vec<BTreeSet<usize>> {
    let mut out = BTreeSet::new();
    for uses in t.edge_uses().values() {
        if let [x, y] = uses[..] {
            if x.0 != y.0 {
                out.insert(BTreeSet::from([x.0, y.0]));
            }
        }
    }
    out.into_iter().collect()
}

/// Whether every vertex type of `t` is among `types`, and each of `needed`
/// occurs.
pub fn census_within(t: &TilingComplex, types: &[avc::VertexCombo], needed: &[avc::VertexCombo]) -> bool {
    let have = t.census();
    let types: BTreeSet<_> = types.iter().map(|c| t.alias_combo(c)).collect();
    have.keys().all(|c| types.contains(c)) && needed.iter().all(|c| have.contains_key(&t.alias_combo(c)))
}
