//! Independent checks of tilings: combinatorial soundness, congruence of
//! every tile to the template, angle sums, areas and automorphism counts.
//!
//! Nothing here trusts the labels for geometry. Angles and edges are
//! measured from the coordinates and compared with the template values.

use avc::euler_audit;
use catalog::{GeometricRealization, TilingComplex};
use serde::{Deserialize, Serialize};
use sphercore::{corner_angle, is_simple, polygon_holonomy, ArcPolygon, UnitVec};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::f64::consts::{PI, TAU};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Worst deviation found, or the number of offending items for counting
    /// checks.
    pub residual: f64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new() -> VerificationReport {
        VerificationReport { checks: Vec::new(), pass: true }
    }

    pub fn push(&mut self, name: &str, pass: bool, residual: f64, detail: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(Check { name: name.to_string(), pass, residual, detail: detail.into() });
    }

    /// Adds a tolerance check: passes when `residual <= tol`.
    fn within(&mut self, name: &str, residual: f64, tol: f64, detail: impl Into<String>) {
        self.push(name, residual <= tol, residual, detail);
    }

    /// Adds a counting check: passes when nothing was found.
    fn count(&mut self, name: &str, bad: usize, detail: impl Into<String>) {
        self.push(name, bad == 0, bad as f64, detail);
    }

    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.pass &= other.pass;
        self.checks.extend(other.checks);
        self
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:4} {:16} {:.3e}", if c.pass { "ok" } else { "FAIL" }, c.name, c.residual)?;
            if !c.detail.is_empty() {
                write!(f, "  {}", c.detail)?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Counterclockwise vertex cycle of each tile.
fn ccw_cycles(t: &TilingComplex) -> Vec<Vec<usize>> {
    t.tiles.iter().map(|x| x.ccw_vertices()).collect()
}

fn undirected(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Edge labels keyed by vertex pair, per tile.
fn tile_edge_labels(t: &TilingComplex) -> Vec<BTreeMap<(usize, usize), quadsolve::EdgeLabel>> {
    t.tiles
        .iter()
        .map(|tile| {
            let n = tile.corners.len();
            (0..n)
                .map(|i| {
                    let (a, b) = (tile.corners[i].vertex, tile.corners[(i + 1) % n].vertex);
                    (undirected(a, b), t.edge_alias(tile.corners[i].edge))
                })
                .collect()
        })
        .collect()
}

/// Edge-to-edge pairing, edge labels, degrees, vertex links and the
/// counting identities.
pub fn verify_combinatorial(t: &TilingComplex) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let cycles = ccw_cycles(t);
    let n = t.num_vertices;

    let bad_index = cycles.iter().flatten().filter(|&&v| v >= n).count();
    rep.count("vertex-index", bad_index, "");
    if bad_index > 0 {
        rep.pass = false;
        return rep;
    }
    let repeated = cycles.iter().filter(|c| c.iter().collect::<BTreeSet<_>>().len() != c.len()).count();
    rep.count("tile-vertices", repeated, "tiles repeating a vertex");

    // each directed edge once, each undirected edge in exactly two tiles
    let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
    let mut dup = 0;
    for (ti, c) in cycles.iter().enumerate() {
        for k in 0..c.len() {
            if directed.insert((c[k], c[(k + 1) % c.len()]), ti).is_some() {
                dup += 1;
            }
        }
    }
    let unpaired = directed.keys().filter(|&&(a, b)| !directed.contains_key(&(b, a))).count();
    rep.count("edge-pairing", dup + unpaired, format!("{dup} repeated, {unpaired} unpaired half-edges"));

    let labels = tile_edge_labels(t);
    let mut mismatched = 0;
    for (&(a, b), &ti) in &directed {
        if a < b {
            if let Some(&tj) = directed.get(&(b, a)) {
                if labels[ti][&undirected(a, b)] != labels[tj][&undirected(a, b)] {
                    mismatched += 1;
                }
            }
        }
    }
    rep.count("edge-label", mismatched, "edges whose two sides carry different labels");

    let mut degree = vec![0usize; n];
    for c in &cycles {
        for &v in c {
            degree[v] += 1;
        }
    }
    let isolated = degree.iter().filter(|&&d| d == 0).count();
    rep.count("vertex-used", isolated, "");
    let low = degree.iter().filter(|&&d| (1..3).contains(&d)).count();
    rep.count("degree", low, "vertices of degree below 3");

    // around each vertex, the corners must form one cycle
    let mut next_of: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for c in &cycles {
        let m = c.len();
        for k in 0..m {
            let (prev, v, next) = (c[(k + m - 1) % m], c[k], c[(k + 1) % m]);
            next_of[v].insert(next, prev);
        }
    }
    let bad_links = (0..n)
        .filter(|&v| {
            let map = &next_of[v];
            let Some(&start) = map.keys().next() else { return false };
            let mut cur = start;
            let mut steps = 0;
            loop {
                match map.get(&cur) {
                    Some(&nx) => cur = nx,
                    None => return true,
                }
                steps += 1;
                if cur == start || steps > map.len() {
                    break;
                }
            }
            cur != start || steps != map.len() || map.len() != degree[v]
        })
        .count();
    rep.count("vertex-link", bad_links, "vertices whose neighbourhood is not a disk");

    let sides = t.class.sides() as u32;
    let audit = euler_audit(&t.degree_histogram(), sides);
    rep.count("euler", audit.failed.len(), audit.failed.join(", "));
    if sides == 4 {
        let v3 = degree.iter().filter(|&&d| d == 3).count();
        rep.push("v3", v3 >= 8, v3 as f64, "degree-3 vertices (at least 8)");
    }
    rep
}

/// Interior angles and outgoing edge lengths, counterclockwise.
fn measure(poly: &[UnitVec]) -> Option<(Vec<f64>, Vec<f64>)> {
    let m = poly.len();
    let mut angles = Vec::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for k in 0..m {
        let (prev, v, next) = (poly[(k + m - 1) % m], poly[k], poly[(k + 1) % m]);
        angles.push(corner_angle(next, v, prev).ok()?.radians());
        edges.push(v.dist(next));
    }
    Some((angles, edges))
}

/// Smallest deviation between measured `(angles, edges)` and the template
/// over all cyclic shifts and the reflection.
fn congruence_residual(angles: &[f64], edges: &[f64], template: &[(f64, f64)]) -> f64 {
    let m = angles.len();
    if template.len() != m {
        return f64::INFINITY;
    }
    let mut best = f64::INFINITY;
    for shift in 0..m {
        for dir in [1isize, -1] {
            let mut worst: f64 = 0.0;
            for k in 0..m {
                let j = (shift as isize + dir * k as isize).rem_euclid(m as isize) as usize;
                // going backwards, the edge after position k is the edge before j
                let je = if dir == 1 { j } else { (j + m - 1) % m };
                worst = worst.max((angles[k] - template[j].0).abs()).max((edges[k] - template[je].1).abs());
            }
            best = best.min(worst);
        }
    }
    best
}

struct TileMeasure {
    congruence: f64,
    labelled: f64,
    excess: f64,
    area: f64,
    holonomy: f64,
    simple: bool,
    angles: Vec<(usize, f64)>,
}

fn measure_tile(r: &GeometricRealization, ti: usize, template: &[(f64, f64)], tile_area: f64) -> Option<TileMeasure> {
    let tile = &r.complex.tiles[ti];
    let ccw = tile.ccw_vertices();
    let pts: Vec<UnitVec> = ccw.iter().map(|&v| r.coords[v]).collect();
    let (angles, edges) = measure(&pts)?;
    let m = ccw.len();
    let congruence = congruence_residual(&angles, &edges, template);
    let mut labelled: f64 = 0.0;
    for c in &tile.corners {
        let pos = ccw.iter().position(|&v| v == c.vertex)?;
        labelled = labelled.max((angles[pos] - r.spec.angle(c.angle).radians()).abs());
    }
    let area = angles.iter().sum::<f64>() - (m as f64 - 2.0) * PI;
    let poly = ArcPolygon::from_vertices(pts).ok()?;
    // clockwise data: corner k of the reversed walk and the edge leaving it
    let cw_angles: Vec<f64> = (0..m).map(|k| angles[(m - k) % m]).collect();
    let cw_edges: Vec<f64> = (0..m).map(|k| edges[(2 * m - k - 1) % m]).collect();
    let holonomy = polygon_holonomy(&cw_edges, &cw_angles).ok()?.dist_to_identity();
    Some(TileMeasure {
        congruence,
        labelled,
        excess: (area - tile_area).abs(),
        area,
        holonomy,
        simple: is_simple(&poly),
        angles: ccw.iter().copied().zip(angles).collect(),
    })
}

/// Measures every tile from the coordinates: congruence to the template up
/// to rotation and reflection, angle labels, angle sums at the vertices,
/// spherical excess and closure of the edge-angle walk.
pub fn verify_geometric(r: &GeometricRealization, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let t = &r.complex;
    if r.coords.len() != t.num_vertices {
        rep.push("coords", false, (r.coords.len() as f64 - t.num_vertices as f64).abs(), "coordinate count");
        return rep;
    }
    let norm = r.coords.iter().map(|p| (sphercore::vec3::norm(p.to_array()) - 1.0).abs()).fold(0.0, f64::max);
    rep.within("coords", norm, tol, "distance from the unit sphere");

    let template = r.spec.corner_values();
    let f = t.f();
    let tile_area = 4.0 * PI / f as f64;
    let one = |ti: usize| measure_tile(r, ti, &template, tile_area);
    #[cfg(feature = "parallel")]
    let tiles: Vec<Option<TileMeasure>> = {
        use rayon::prelude::*;
        (0..f).into_par_iter().map(one).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let tiles: Vec<Option<TileMeasure>> = (0..f).map(one).collect();

    let broken = tiles.iter().filter(|m| m.is_none()).count();
    rep.count("measurable", broken, "tiles with coincident or antipodal vertices");
    if broken > 0 {
        rep.pass = false;
        return rep;
    }
    let tiles: Vec<TileMeasure> = tiles.into_iter().flatten().collect();
    let worst = |g: fn(&TileMeasure) -> f64| tiles.iter().map(g).fold(0.0, f64::max);

    rep.within("congruence", worst(|m| m.congruence), tol, "angles and edges against the template");
    rep.within("angle-labels", worst(|m| m.labelled), tol, "measured angle against its label");
    let mut sums = vec![0.0; t.num_vertices];
    for m in &tiles {
        for &(v, a) in &m.angles {
            sums[v] += a;
        }
    }
    // measured angles around a vertex always close up, so the sum is also
    // taken per tile, where a displaced vertex shows
    let vertex_err = sums.iter().map(|s| (s - TAU).abs()).fold(0.0, f64::max);
    let template_sum: f64 = template.iter().map(|c| c.0).sum();
    let tile_err = tiles
        .iter()
        .map(|m| (m.angles.iter().map(|a| a.1).sum::<f64>() - template_sum).abs())
        .fold(0.0, f64::max);
    rep.within(
        "angle-sum",
        vertex_err.max(tile_err),
        tol,
        format!("vertex sums against 2π ({vertex_err:.1e}), tile sums against the template ({tile_err:.1e})"),
    );
    rep.within("excess", worst(|m| m.excess), tol, format!("tile area against 4π/{f}"));
    let total: f64 = tiles.iter().map(|m| m.area).sum();
    rep.within("total-area", (total - 4.0 * PI).abs(), tol * f as f64, "sum of tile areas against 4π");
    rep.within("holonomy", worst(|m| m.holonomy), tol, "edge-angle walk returns to the identity");
    rep.count("simple", tiles.iter().filter(|m| !m.simple).count(), "self-intersecting tiles");
    rep
}

/// Both checks together.
pub fn verify(r: &GeometricRealization, tol: f64) -> VerificationReport {
    verify_combinatorial(&r.complex).merge(verify_geometric(r, tol))
}

/// Per-tile vertex cycles with the aliased angle label at each position and
/// the aliased label of the edge to the next position.
struct Cells {
    cycles: Vec<Vec<usize>>,
    angle: Vec<Vec<quadsolve::AngleLabel>>,
    edge: Vec<Vec<quadsolve::EdgeLabel>>,
    across: HashMap<(usize, usize), [usize; 2]>,
}

impl Cells {
    fn new(t: &TilingComplex) -> Option<Cells> {
        let cycles = ccw_cycles(t);
        let labels = tile_edge_labels(t);
        let mut angle = Vec::new();
        let mut edge = Vec::new();
        let mut across: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (ti, c) in cycles.iter().enumerate() {
            let tile = &t.tiles[ti];
            angle.push(
                c.iter()
                    .map(|&v| t.alias(tile.corners.iter().find(|x| x.vertex == v).expect("vertex of tile").angle))
                    .collect(),
            );
            edge.push((0..c.len()).map(|k| labels[ti][&undirected(c[k], c[(k + 1) % c.len()])]).collect());
            for k in 0..c.len() {
                across.entry(undirected(c[k], c[(k + 1) % c.len()])).or_default().push(ti);
            }
        }
        let across = across
            .into_iter()
            .map(|(e, v)| (v.len() == 2).then(|| (e, [v[0], v[1]])))
            .collect::<Option<HashMap<_, _>>>()?;
        Some(Cells { cycles, angle, edge, across })
    }

    /// Tries the map sending tile 0, position 0 to tile `t0`, position
    /// `p0`, walking in direction `dir`.
    fn extends(&self, t0: usize, p0: usize, dir: isize, nv: usize) -> bool {
        let f = self.cycles.len();
        let mut phi = vec![usize::MAX; nv];
        let mut inv = vec![usize::MAX; nv];
        let mut tile_img = vec![usize::MAX; f];
        let mut queue = vec![(0usize, 0usize, t0, p0)];
        tile_img[0] = t0;
        while let Some((s, j, s2, j2)) = queue.pop() {
            let (c, c2) = (&self.cycles[s], &self.cycles[s2]);
            let m = c.len();
            if c2.len() != m {
                return false;
            }
            for k in 0..m {
                let a = (j + k) % m;
                let b = (j2 as isize + dir * k as isize).rem_euclid(m as isize) as usize;
                let be = if dir == 1 { b } else { (b + m - 1) % m };
                if self.angle[s][a] != self.angle[s2][b] || self.edge[s][a] != self.edge[s2][be] {
                    return false;
                }
                let (v, w) = (c[a], c2[b]);
                if phi[v] == usize::MAX && inv[w] == usize::MAX {
                    phi[v] = w;
                    inv[w] = v;
                } else if phi[v] != w || inv[w] != v {
                    return false;
                }
            }
            for k in 0..m {
                let (v, w) = (c[k], c[(k + 1) % m]);
                let nb = self.across[&undirected(v, w)];
                let n1 = if nb[0] == s { nb[1] } else { nb[0] };
                let nb2 = match self.across.get(&undirected(phi[v], phi[w])) {
                    Some(x) => *x,
                    None => return false,
                };
                let n2 = if nb2[0] == s2 { nb2[1] } else { nb2[0] };
                if tile_img[n1] != usize::MAX {
                    if tile_img[n1] != n2 {
                        return false;
                    }
                    continue;
                }
                tile_img[n1] = n2;
                let jn = self.cycles[n1].iter().position(|&x| x == v).expect("shared vertex");
                let Some(jn2) = self.cycles[n2].iter().position(|&x| x == phi[v]) else { return false };
                queue.push((n1, jn, n2, jn2));
            }
        }
        tile_img.iter().all(|&x| x != usize::MAX)
    }
}

/// Number of label-preserving automorphisms, counting reflections, found by
/// transporting one flag to every flag and checking the induced map.
pub fn automorphism_order(t: &TilingComplex) -> usize {
    automorphism_counts(t).0
}

/// `(all, orientation preserving)` automorphism counts.
pub fn automorphism_counts(t: &TilingComplex) -> (usize, usize) {
    let Some(cells) = Cells::new(t) else { return (0, 0) };
    let mut all = 0;
    let mut rot = 0;
    for t0 in 0..cells.cycles.len() {
        for p0 in 0..cells.cycles[t0].len() {
            for dir in [1, -1] {
                if cells.extends(t0, p0, dir, t.num_vertices) {
                    all += 1;
                    if dir == 1 {
                        rot += 1;
                    }
                }
            }
        }
    }
    (all, rot)
}
