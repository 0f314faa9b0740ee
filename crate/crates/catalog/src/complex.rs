use avc::{Census, DegreeHistogram, VertexCombo};
use quadsolve::{AngleLabel, EdgeLabel, QuadClass, QuadSpec};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// One corner of a tile: the vertex it sits at, its angle label, and the
/// label of the edge leaving it towards the next corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Corner {
    pub vertex: usize,
    pub angle: AngleLabel,
    pub edge: EdgeLabel,
}

/// A tile with corners in template order. `reversed` marks a tile whose
/// template order runs clockwise on the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tile {
    pub corners: Vec<Corner>,
    #[serde(default)]
    pub reversed: bool,
}

impl Tile {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Vertex ids in counterclockwise order, starting from the first corner.
    pub fn ccw_vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.corners.iter().map(|c| c.vertex).collect();
        if self.reversed {
            v[1..].reverse();
        }
        v
    }

    /// Label of the edge between template corners `i` and `i + 1`.
    pub fn edge_after(&self, i: usize) -> EdgeLabel {
        self.corners[i % self.len()].edge
    }
}

/// A combinatorial tiling: tiles glued along shared vertex pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TilingComplex {
    pub class: QuadClass,
    pub num_vertices: usize,
    pub tiles: Vec<Tile>,
    /// Labels identified because their values coincide, each mapped to a
    /// representative. Used by censuses and symmetry counts.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub angle_aliases: BTreeMap<AngleLabel, AngleLabel>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub edge_aliases: BTreeMap<EdgeLabel, EdgeLabel>,
}

/// Angle labels exchanged by a congruence of the tile onto itself, each
/// mapped to the smallest label of its orbit.
///
/// Equal values alone do not merge labels: in a kite with `β = γ` the two
/// corners still play different roles.
pub fn tile_angle_aliases(spec: &QuadSpec) -> BTreeMap<AngleLabel, AngleLabel> {
    const TOL: f64 = 1e-9;
    let corners = spec.class.corners();
    let vals = spec.corner_values();
    let n = corners.len();
    let mut rep: BTreeMap<AngleLabel, AngleLabel> = corners.iter().map(|c| (c.0, c.0)).collect();
    let close = |x: f64, y: f64| (x - y).abs() < TOL;
    for d in [1isize, -1] {
        for s in 0..n {
            let sigma = |i: usize| (s as isize + d * i as isize).rem_euclid(n as isize) as usize;
            let ok = (0..n).all(|i| {
                let e = if d > 0 { sigma(i) } else { sigma(i + 1) };
                close(vals[sigma(i)].0, vals[i].0) && close(vals[e].1, vals[i].1)
            });
            if !ok {
                continue;
            }
            for i in 0..n {
                let (x, y) = (corners[i].0, corners[sigma(i)].0);
                let (rx, ry) = (rep[&x], rep[&y]);
                let lo = rx.min(ry);
                for v in rep.values_mut() {
                    if *v == rx || *v == ry {
                        *v = lo;
                    }
                }
            }
        }
    }
    rep
}

/// Where an undirected edge occurs: `(tile, template corner)` with the edge
/// running from that corner to the next.
pub type EdgeUses = BTreeMap<(usize, usize), Vec<(usize, usize)>>;

impl TilingComplex {
    pub fn new(class: QuadClass, num_vertices: usize, tiles: Vec<Tile>) -> TilingComplex {
        TilingComplex { class, num_vertices, tiles, angle_aliases: BTreeMap::new(), edge_aliases: BTreeMap::new() }
    }

    /// Records which labels the tile of `spec` cannot tell apart.
    pub fn with_aliases_from(mut self, spec: &QuadSpec) -> TilingComplex {
        self.angle_aliases = tile_angle_aliases(spec).into_iter().filter(|(k, v)| k != v).collect();
        self.edge_aliases = spec.edge_aliases().into_iter().filter(|(k, v)| k != v).collect();
        self
    }

    pub fn f(&self) -> usize {
        self.tiles.len()
    }

    pub fn alias(&self, l: AngleLabel) -> AngleLabel {
        self.angle_aliases.get(&l).copied().unwrap_or(l)
    }

    pub fn edge_alias(&self, l: EdgeLabel) -> EdgeLabel {
        self.edge_aliases.get(&l).copied().unwrap_or(l)
    }

    pub fn edge_uses(&self) -> EdgeUses {
        let mut m: EdgeUses = BTreeMap::new();
        for (t, tile) in self.tiles.iter().enumerate() {
            let n = tile.len();
            for i in 0..n {
                let (u, v) = (tile.corners[i].vertex, tile.corners[(i + 1) % n].vertex);
                m.entry((u.min(v), u.max(v))).or_default().push((t, i));
            }
        }
        m
    }

    pub fn num_edges(&self) -> usize {
        self.edge_uses().len()
    }

    /// `(tile, corner)` pairs at each vertex.
    pub fn vertex_corners(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.num_vertices];
        for (t, tile) in self.tiles.iter().enumerate() {
            for (i, c) in tile.corners.iter().enumerate() {
                if c.vertex < self.num_vertices {
                    out[c.vertex].push((t, i));
                }
            }
        }
        out
    }

    /// Vertex type at `v`, with aliased labels merged.
    pub fn combo_at(&self, v: usize) -> VertexCombo {
        let mut c = VertexCombo::default();
        for tile in &self.tiles {
            for k in &tile.corners {
                if k.vertex == v {
                    c = c.with(self.alias(k.angle));
                }
            }
        }
        c
    }

    pub fn vertex_combos(&self) -> Vec<VertexCombo> {
        let mut out = vec![VertexCombo::default(); self.num_vertices];
        for tile in &self.tiles {
            for k in &tile.corners {
                out[k.vertex] = out[k.vertex].with(self.alias(k.angle));
            }
        }
        out
    }

    /// Number of vertices of each type.
    pub fn census(&self) -> Census {
        let mut m = Census::new();
        for c in self.vertex_combos() {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    /// The vertex types that occur.
    pub fn vertex_types(&self) -> BTreeSet<VertexCombo> {
        self.census().into_keys().collect()
    }

    /// Maps a vertex type through this complex's aliases.
    pub fn alias_combo(&self, c: &VertexCombo) -> VertexCombo {
        let mut out = VertexCombo::default();
        for l in AngleLabel::ALL {
            out.counts[self.alias(l).index()] += c.count(l);
        }
        out
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        let degrees = self.vertex_combos().into_iter().map(|c| c.degree());
        let mut h = DegreeHistogram::from_degrees(self.class.sides() as u32, self.f() as i64, degrees);
        h.e = self.num_edges() as i64;
        h
    }

    /// Applies label substitutions to every corner.
    pub fn relabel(&self, angles: &BTreeMap<AngleLabel, AngleLabel>, edges: &BTreeMap<EdgeLabel, EdgeLabel>) -> TilingComplex {
        let mut out = self.clone();
        for tile in &mut out.tiles {
            for c in &mut tile.corners {
                c.angle = angles.get(&c.angle).copied().unwrap_or(c.angle);
                c.edge = edges.get(&c.edge).copied().unwrap_or(c.edge);
            }
        }
        out.angle_aliases.clear();
        out.edge_aliases.clear();
        out
    }

    /// Renumbers vertices by `perm[old] = new`.
    pub fn renumber(&self, perm: &[usize]) -> TilingComplex {
        let mut out = self.clone();
        for tile in &mut out.tiles {
            for c in &mut tile.corners {
                c.vertex = perm[c.vertex];
            }
        }
        out
    }
}

/// How much of the labelling an isomorphism must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Labels {
    /// Angle and edge labels after aliasing.
    Respect,
    /// Only the cell structure.
    Ignore,
}

/// A flag: a tile, one of its corners, and a direction of travel around it
/// in template order (`true` forwards).
type Flag = (usize, usize, bool);

struct Walk<'a> {
    t: &'a TilingComplex,
    uses: EdgeUses,
}

impl<'a> Walk<'a> {
    fn new(t: &'a TilingComplex) -> Walk<'a> {
        Walk { t, uses: t.edge_uses() }
    }

    fn corner(&self, (tile, i, fwd): Flag, k: usize) -> usize {
        let n = self.t.tiles[tile].len();
        if fwd {
            (i + k) % n
        } else {
            (i + n * k - k) % n
        }
    }

    fn vertex(&self, fl: Flag, k: usize) -> usize {
        self.t.tiles[fl.0].corners[self.corner(fl, k)].vertex
    }

    fn angle(&self, fl: Flag, k: usize) -> AngleLabel {
        self.t.alias(self.t.tiles[fl.0].corners[self.corner(fl, k)].angle)
    }

    /// Label of the edge from step `k` to step `k + 1`.
    fn edge(&self, fl: Flag, k: usize) -> EdgeLabel {
        let tile = &self.t.tiles[fl.0];
        let c = self.corner(fl, k);
        let idx = if fl.2 { c } else { (c + tile.len() - 1) % tile.len() };
        self.t.edge_alias(tile.corners[idx].edge)
    }

    /// Whether the flag walks counterclockwise on the sphere.
    fn ccw(&self, fl: Flag) -> bool {
        fl.2 != self.t.tiles[fl.0].reversed
    }

    /// The flag on the other tile across the edge from step `k` to `k + 1`,
    /// starting at the same vertex and heading the same way.
    fn across(&self, fl: Flag, k: usize) -> Option<Flag> {
        let (u, v) = (self.vertex(fl, k), self.vertex(fl, k + 1));
        let uses = self.uses.get(&(u.min(v), u.max(v)))?;
        let &(t2, i2) = uses.iter().find(|&&(t2, _)| t2 != fl.0)?;
        let tile = &self.t.tiles[t2];
        let n = tile.len();
        let a = tile.corners[i2].vertex;
        let j = (i2 + 1) % n;
        Some(if a == u { (t2, i2, true) } else { (t2, j, false) })
    }
}

/// Tries to extend `a0 ↦ b0` to a full isomorphism. Returns the vertex map.
fn transport(wa: &Walk, wb: &Walk, a0: Flag, b0: Flag, labels: Labels, keep_orientation: bool) -> Option<Vec<usize>> {
    let (ta, tb) = (wa.t, wb.t);
    if ta.f() != tb.f() || ta.num_vertices != tb.num_vertices {
        return None;
    }
    if keep_orientation && wa.ccw(a0) != wb.ccw(b0) {
        return None;
    }
    let mut tile_map = vec![usize::MAX; ta.f()];
    let mut vmap = vec![usize::MAX; ta.num_vertices];
    let mut vinv = vec![usize::MAX; tb.num_vertices];
    let mut queue = VecDeque::from([(a0, b0)]);
    while let Some((fa, fb)) = queue.pop_front() {
        let n = ta.tiles[fa.0].len();
        if tb.tiles[fb.0].len() != n {
            return None;
        }
        if tile_map[fa.0] != usize::MAX {
            // already mapped: the flags must agree
            if tile_map[fa.0] != fb.0 || vmap[wa.vertex(fa, 0)] != wb.vertex(fb, 0) || vmap[wa.vertex(fa, 1)] != wb.vertex(fb, 1) {
                return None;
            }
            continue;
        }
        tile_map[fa.0] = fb.0;
        for k in 0..n {
            if labels == Labels::Respect && (wa.angle(fa, k) != wb.angle(fb, k) || wa.edge(fa, k) != wb.edge(fb, k)) {
                return None;
            }
            let (x, y) = (wa.vertex(fa, k), wb.vertex(fb, k));
            if vmap[x] == usize::MAX && vinv[y] == usize::MAX {
                vmap[x] = y;
                vinv[y] = x;
            } else if vmap[x] != y || vinv[y] != x {
                return None;
            }
        }
        for k in 0..n {
            match (wa.across(fa, k), wb.across(fb, k)) {
                (Some(na), Some(nb)) => queue.push_back((na, nb)),
                (None, None) => {}
                _ => return None,
            }
        }
    }
    if tile_map.contains(&usize::MAX) {
        return None;
    }
    Some(vmap)
}

fn all_flags(t: &TilingComplex) -> Vec<Flag> {
    let mut out = Vec::new();
    for (i, tile) in t.tiles.iter().enumerate() {
        for k in 0..tile.len() {
            out.push((i, k, true));
            out.push((i, k, false));
        }
    }
    out
}

/// A vertex map `a → b` carrying tiles to tiles, if one exists.
pub fn find_isomorphism(a: &TilingComplex, b: &TilingComplex, labels: Labels) -> Option<Vec<usize>> {
    if a.f() == 0 || a.f() != b.f() || a.num_vertices != b.num_vertices {
        return None;
    }
    if labels == Labels::Respect && a.census() != b.census() {
        return None;
    }
    let (wa, wb) = (Walk::new(a), Walk::new(b));
    let a0 = (0, 0, true);
    all_flags(b).into_iter().find_map(|b0| transport(&wa, &wb, a0, b0, labels, false))
}

pub fn is_isomorphic(a: &TilingComplex, b: &TilingComplex, labels: Labels) -> bool {
    find_isomorphism(a, b, labels).is_some()
}

/// Number of label-preserving automorphisms, and how many of them keep the
/// orientation of the sphere.
pub fn symmetry_counts(t: &TilingComplex) -> (usize, usize) {
    if t.f() == 0 {
        return (1, 1);
    }
    let w = Walk::new(t);
    let a0 = (0, 0, true);
    let mut all = 0;
    let mut proper = 0;
    for b0 in all_flags(t) {
        if transport(&w, &w, a0, b0, Labels::Respect, false).is_some() {
            all += 1;
            if w.ccw(a0) == w.ccw(b0) {
                proper += 1;
            }
        }
    }
    (all, proper)
}
