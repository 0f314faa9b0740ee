//! Depth-first assembly of tilings from a tile template and a set of
//! allowed vertex types.
//!
//! Tiles are placed geometrically, one at a time, on the boundary edge with
//! the fewest legal placements. A placement is legal when its edges match
//! in length, its corners do not overlap corners already at a vertex, the
//! angles collected at every vertex still fit into some allowed vertex
//! type, and no arc crosses an existing arc.

use avc::VertexCombo;
use quadsolve::{AngleLabel, EdgeLabel, QuadSpec};
use sphercore::{arcs_intersect, UnitVec};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::f64::consts::TAU;

use crate::complex::{Corner, Tile, TilingComplex};
use crate::geom::{azimuth_at, inside_polygon, oriented_templates, place, sectors_overlap, Oriented};
use crate::realize::GeometricRealization;
use crate::CatalogError;

const MERGE_TOL: f64 = 1e-7;
const ANGLE_TOL: f64 = 1e-7;

/// What to look for.
pub struct AssemblyGoal<'a> {
    pub spec: &'a QuadSpec,
    /// Allowed vertex types, written with the template's own labels.
    pub allowed: &'a [VertexCombo],
    /// Vertex types that must all occur. Empty means any subset of `allowed`.
    pub required: &'a [VertexCombo],
    pub f: usize,
    /// Extra acceptance test on a finished tiling.
    pub accept: Option<&'a dyn Fn(&TilingComplex) -> bool>,
    /// Give up after this many placements.
    pub budget: usize,
}

#[derive(Clone)]
struct Sector {
    start: f64,
    width: f64,
}

#[derive(Clone)]
struct State {
    pts: Vec<UnitVec>,
    tiles: Vec<Tile>,
    polys: Vec<Vec<usize>>,
    /// Directed edges in use, each with its label.
    directed: HashMap<(usize, usize), EdgeLabel>,
    sectors: Vec<Vec<Sector>>,
    combos: Vec<VertexCombo>,
    total: Vec<f64>,
    nbrs: Vec<BTreeSet<usize>>,
}

struct Placement {
    orient: usize,
    ids: Vec<Option<usize>>,
    pts: Vec<UnitVec>,
}

struct Search<'a> {
    goal: &'a AssemblyGoal<'a>,
    tmpl: [Oriented; 2],
    angle_alias: BTreeMap<AngleLabel, AngleLabel>,
    edge_alias: BTreeMap<EdgeLabel, EdgeLabel>,
    allowed: Vec<VertexCombo>,
    required: BTreeSet<VertexCombo>,
    steps: usize,
}

impl<'a> Search<'a> {
    fn alias(&self, l: AngleLabel) -> AngleLabel {
        self.angle_alias.get(&l).copied().unwrap_or(l)
    }

    fn edge_alias(&self, l: EdgeLabel) -> EdgeLabel {
        self.edge_alias.get(&l).copied().unwrap_or(l)
    }

    fn aliased(&self, c: &VertexCombo) -> VertexCombo {
        let mut out = VertexCombo::default();
        for l in AngleLabel::ALL {
            out.counts[self.alias(l).index()] += c.count(l);
        }
        out
    }

    fn fits(&self, c: &VertexCombo) -> bool {
        self.allowed.iter().any(|a| c.is_within(a))
    }

    fn find_point(&self, s: &State, p: UnitVec) -> Option<usize> {
        s.pts.iter().position(|&q| q.chord(p) < MERGE_TOL)
    }

    /// All legal ways to put a tile on the far side of boundary edge `u → v`.
    fn candidates(&self, s: &State, u: usize, v: usize) -> Vec<Placement> {
        let label = s.directed[&(u, v)];
        let len = s.pts[u].dist(s.pts[v]);
        let mut out = Vec::new();
        for (oi, o) in self.tmpl.iter().enumerate() {
            let n = o.pts.len();
            for j in 0..n {
                if self.edge_alias(o.edge[j]) != self.edge_alias(label) {
                    continue;
                }
                if (o.pts[j].dist(o.pts[(j + 1) % n]) - len).abs() > MERGE_TOL {
                    continue;
                }
                // new tile runs v → u
                let Some(pts) = place(o, j, s.pts[v], s.pts[u]) else { continue };
                if let Some(p) = self.check(s, oi, o, pts) {
                    out.push(p);
                }
            }
        }
        out
    }

    fn check(&self, s: &State, oi: usize, o: &Oriented, pts: Vec<UnitVec>) -> Option<Placement> {
        let n = pts.len();
        let ids: Vec<Option<usize>> = pts.iter().map(|&p| self.find_point(s, p)).collect();
        let known: Vec<usize> = ids.iter().flatten().copied().collect();
        if known.iter().collect::<BTreeSet<_>>().len() != known.len() {
            return None;
        }
        // edges
        for k in 0..n {
            let (a, b) = (ids[k], ids[(k + 1) % n]);
            if let (Some(a), Some(b)) = (a, b) {
                if s.directed.contains_key(&(a, b)) {
                    return None;
                }
                if let Some(&l) = s.directed.get(&(b, a)) {
                    if self.edge_alias(l) != self.edge_alias(o.edge[k]) {
                        return None;
                    }
                    continue;
                }
            }
            // a new arc: it must not meet any existing arc away from shared ends
            let (p, q) = (pts[k], pts[(k + 1) % n]);
            for &(x, y) in s.directed.keys() {
                if x > y && s.directed.contains_key(&(y, x)) {
                    continue;
                }
                if Some(x) == a || Some(x) == b || Some(y) == a || Some(y) == b {
                    continue;
                }
                if arcs_intersect(p, q, s.pts[x], s.pts[y]) {
                    return None;
                }
            }
        }
        // corners
        for k in 0..n {
            let Some(w) = ids[k] else { continue };
            let next = pts[(k + 1) % n];
            let prev = pts[(k + n - 1) % n];
            let start = azimuth_at(pts[k], next);
            let width = o.value[k];
            if s.sectors[w].iter().any(|sec| sectors_overlap(start, width, sec.start, sec.width, ANGLE_TOL)) {
                return None;
            }
            let total = s.total[w] + width;
            if total > TAU + ANGLE_TOL {
                return None;
            }
            let combo = s.combos[w].with(self.alias(o.angle[k]));
            if !self.fits(&combo) {
                return None;
            }
            if (total - TAU).abs() < ANGLE_TOL && !self.allowed.contains(&combo) {
                return None;
            }
            // arcs leaving w in the same direction must end at the same vertex
            for (end, dir) in [(ids[(k + 1) % n], next), (ids[(k + n - 1) % n], prev)] {
                let az = azimuth_at(pts[k], dir);
                for &m in &s.nbrs[w] {
                    let d = (azimuth_at(s.pts[w], s.pts[m]) - az).rem_euclid(TAU);
                    if (d < ANGLE_TOL || TAU - d < ANGLE_TOL) && end != Some(m) {
                        return None;
                    }
                }
            }
        }
        // containment
        for (i, &p) in s.pts.iter().enumerate() {
            if !known.contains(&i) && inside_polygon(p, &pts, MERGE_TOL) {
                return None;
            }
        }
        for (k, &p) in pts.iter().enumerate() {
            if ids[k].is_some() {
                continue;
            }
            for poly in &s.polys {
                let ring: Vec<UnitVec> = poly.iter().map(|&v| s.pts[v]).collect();
                if inside_polygon(p, &ring, MERGE_TOL) {
                    return None;
                }
            }
        }
        Some(Placement { orient: oi, ids, pts })
    }

    fn apply(&self, s: &mut State, pl: &Placement) {
        let o = &self.tmpl[pl.orient];
        let n = pl.pts.len();
        let ids: Vec<usize> = (0..n)
            .map(|k| match pl.ids[k] {
                Some(id) => id,
                None => {
                    s.pts.push(pl.pts[k]);
                    s.sectors.push(Vec::new());
                    s.combos.push(VertexCombo::default());
                    s.total.push(0.0);
                    s.nbrs.push(BTreeSet::new());
                    s.pts.len() - 1
                }
            })
            .collect();
        for k in 0..n {
            let w = ids[k];
            s.sectors[w].push(Sector { start: azimuth_at(pl.pts[k], pl.pts[(k + 1) % n]), width: o.value[k] });
            s.total[w] += o.value[k];
            s.combos[w] = s.combos[w].with(self.alias(o.angle[k]));
            let nx = ids[(k + 1) % n];
            s.directed.insert((w, nx), o.edge[k]);
            s.nbrs[w].insert(nx);
            s.nbrs[nx].insert(w);
        }
        let mut corners = vec![Corner { vertex: 0, angle: AngleLabel::Alpha, edge: EdgeLabel::A }; n];
        for k in 0..n {
            let c = o.corner[k];
            let (al, el) = self.goal.spec.class.corners()[c];
            corners[c] = Corner { vertex: ids[k], angle: al, edge: el };
        }
        s.tiles.push(Tile { corners, reversed: pl.orient == 1 });
        s.polys.push(ids);
    }

    fn boundary(&self, s: &State) -> Vec<(usize, usize)> {
        let mut b: Vec<(usize, usize)> =
            s.directed.keys().filter(|&&(u, v)| !s.directed.contains_key(&(v, u))).copied().collect();
        b.sort_unstable();
        b
    }

    fn complex(&self, s: &State) -> TilingComplex {
        let mut t = TilingComplex::new(self.goal.spec.class, s.pts.len(), s.tiles.clone());
        t.angle_aliases = self.angle_alias.iter().filter(|(k, v)| k != v).map(|(k, v)| (*k, *v)).collect();
        t.edge_aliases = self.edge_alias.iter().filter(|(k, v)| k != v).map(|(k, v)| (*k, *v)).collect();
        t
    }

    fn dfs(&mut self, s: &State) -> Result<Option<State>, CatalogError> {
        self.steps += 1;
        if self.steps > self.goal.budget {
            return Err(CatalogError::NotFound(format!("search budget of {} placements exhausted", self.goal.budget)));
        }
        let bd = self.boundary(s);
        if bd.is_empty() {
            if s.tiles.len() != self.goal.f {
                return Ok(None);
            }
            let types: BTreeSet<VertexCombo> = s.combos.iter().copied().collect();
            if types.iter().any(|c| !self.allowed.contains(c)) {
                return Ok(None);
            }
            if !self.required.is_subset(&types) {
                return Ok(None);
            }
            if let Some(acc) = self.goal.accept {
                if !acc(&self.complex(s)) {
                    return Ok(None);
                }
            }
            return Ok(Some(s.clone()));
        }
        if s.tiles.len() >= self.goal.f {
            return Ok(None);
        }
        let mut best: Option<Vec<Placement>> = None;
        for &(u, v) in &bd {
            let c = self.candidates(s, u, v);
            if c.is_empty() {
                return Ok(None);
            }
            if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                let one = c.len() == 1;
                best = Some(c);
                if one {
                    break;
                }
            }
        }
        for pl in best.unwrap_or_default() {
            let mut next = s.clone();
            self.apply(&mut next, &pl);
            if let Some(done) = self.dfs(&next)? {
                return Ok(Some(done));
            }
        }
        Ok(None)
    }
}

/// Searches for a tiling meeting `goal`. The first tile is the template
/// as built by `build_tile`, so the result is in that frame.
pub fn assemble(goal: &AssemblyGoal) -> Result<GeometricRealization, CatalogError> {
    let spec = goal.spec;
    let tmpl = oriented_templates(spec)?;
    let angle_alias = crate::complex::tile_angle_aliases(spec);
    let edge_alias = spec.edge_aliases();
    let mut search = Search {
        goal,
        tmpl,
        angle_alias,
        edge_alias,
        allowed: Vec::new(),
        required: BTreeSet::new(),
        steps: 0,
    };
    search.allowed = goal.allowed.iter().map(|c| search.aliased(c)).collect();
    search.required = goal.required.iter().map(|c| search.aliased(c)).collect();
    let n = spec.class.sides();
    let empty = State {
        pts: Vec::new(),
        tiles: Vec::new(),
        polys: Vec::new(),
        directed: HashMap::new(),
        sectors: Vec::new(),
        combos: Vec::new(),
        total: Vec::new(),
        nbrs: Vec::new(),
    };
    let mut s = empty;
    let first = Placement { orient: 0, ids: vec![None; n], pts: search.tmpl[0].pts.clone() };
    search.apply(&mut s, &first);
    for w in 0..n {
        let c = s.combos[w];
        if !search.fits(&c) {
            return Err(CatalogError::NotFound(format!("corner {c} fits no allowed vertex")));
        }
    }
    match search.dfs(&s)? {
        Some(done) => {
            let complex = search.complex(&done);
            Ok(GeometricRealization { complex, coords: done.pts, spec: spec.clone() })
        }
        None => Err(CatalogError::NotFound("no tiling with the requested vertices".into())),
    }
}
