//! Polyhedral meshes on the sphere: the Platonic solids, the uniform
//! subdivisions, and the step from a mesh to a labelled complex.

use quadsolve::{AngleLabel, EdgeLabel, QuadClass, QuadSpec};
use sphercore::{corner_angle, vec3, Angle, UnitVec};
use std::collections::BTreeMap;

use crate::complex::{Corner, Tile, TilingComplex};
use crate::CatalogError;

/// Vertices on the unit sphere and faces listed counterclockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Mesh {
    pub points: Vec<UnitVec>,
    pub faces: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subdivision {
    Triangular,
    Barycentric,
    Quadrilateral,
    Quadricentric,
}

fn unit(x: f64, y: f64, z: f64) -> UnitVec {
    UnitVec::new(x, y, z).expect("nonzero")
}

fn normalized_sum(pts: impl Iterator<Item = UnitVec>) -> UnitVec {
    let s = pts.fold([0.0; 3], |acc, p| vec3::add(acc, p.to_array()));
    UnitVec::from_array(s).expect("face centre is not the origin")
}

impl Mesh {
    /// Convex hull faces of points in convex position on the sphere.
    pub fn hull(points: Vec<UnitVec>) -> Mesh {
        let n = points.len();
        let mut planes: Vec<[f64; 3]> = Vec::new();
        let mut faces = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (a, b, c) = (points[i].to_array(), points[j].to_array(), points[k].to_array());
                    let mut nrm = vec3::cross(vec3::sub(b, a), vec3::sub(c, a));
                    let len = vec3::norm(nrm);
                    if len < 1e-9 {
                        continue;
                    }
                    nrm = vec3::scale(nrm, 1.0 / len);
                    let h = vec3::dot(nrm, a);
                    if h < 0.0 {
                        nrm = vec3::scale(nrm, -1.0);
                    }
                    let h = h.abs();
                    if points.iter().any(|p| vec3::dot(nrm, p.to_array()) > h + 1e-9) {
                        continue;
                    }
                    if planes.iter().any(|q| vec3::norm(vec3::sub(*q, nrm)) < 1e-9) {
                        continue;
                    }
                    planes.push(nrm);
                    let mut on: Vec<usize> =
                        (0..n).filter(|&m| (vec3::dot(nrm, points[m].to_array()) - h).abs() < 1e-9).collect();
                    let centre = UnitVec::from_array(nrm).expect("unit normal");
                    on.sort_by(|&x, &y| {
                        let ax = crate::geom::azimuth_at(centre, points[x]);
                        let ay = crate::geom::azimuth_at(centre, points[y]);
                        ax.total_cmp(&ay)
                    });
                    faces.push(on);
                }
            }
        }
        Mesh { points, faces }
    }

    pub fn tetrahedron() -> Mesh {
        let s = [(1.0, 1.0, 1.0), (1.0, -1.0, -1.0), (-1.0, 1.0, -1.0), (-1.0, -1.0, 1.0)];
        Mesh::hull(s.iter().map(|&(x, y, z)| unit(x, y, z)).collect())
    }

    pub fn cube() -> Mesh {
        let mut p = Vec::new();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                for z in [-1.0, 1.0] {
                    p.push(unit(x, y, z));
                }
            }
        }
        Mesh::hull(p)
    }

    pub fn octahedron() -> Mesh {
        let p = vec![
            UnitVec::Z,
            UnitVec::X,
            UnitVec::Y,
            UnitVec::X.neg(),
            UnitVec::Y.neg(),
            UnitVec::Z.neg(),
        ];
        Mesh::hull(p)
    }

    pub fn icosahedron() -> Mesh {
        let g = (1.0 + 5f64.sqrt()) / 2.0;
        let mut p = Vec::new();
        for s in [-1.0, 1.0] {
            for t in [-1.0, 1.0] {
                p.push(unit(0.0, s, t * g));
                p.push(unit(s, t * g, 0.0));
                p.push(unit(t * g, 0.0, s));
            }
        }
        Mesh::hull(p)
    }

    pub fn dodecahedron() -> Mesh {
        let g = (1.0 + 5f64.sqrt()) / 2.0;
        let mut p = Vec::new();
        for x in [-1.0, 1.0] {
            for y in [-1.0, 1.0] {
                for z in [-1.0, 1.0] {
                    p.push(unit(x, y, z));
                }
            }
        }
        for s in [-1.0, 1.0] {
            for t in [-1.0, 1.0] {
                p.push(unit(0.0, s / g, t * g));
                p.push(unit(s / g, t * g, 0.0));
                p.push(unit(t * g, 0.0, s / g));
            }
        }
        Mesh::hull(p)
    }

    /// The regular solid with `f` faces.
    pub fn platonic(f: usize) -> Result<Mesh, CatalogError> {
        match f {
            4 => Ok(Mesh::tetrahedron()),
            6 => Ok(Mesh::cube()),
            8 => Ok(Mesh::octahedron()),
            12 => Ok(Mesh::dodecahedron()),
            20 => Ok(Mesh::icosahedron()),
            _ => Err(CatalogError::InvalidParams(format!("no Platonic solid has {f} faces"))),
        }
    }

    pub fn num_edges(&self) -> usize {
        self.edge_faces().len()
    }

    /// Undirected edge → faces on its left when traversed `min → max` and
    /// `max → min` respectively.
    pub fn edge_faces(&self) -> BTreeMap<(usize, usize), (Option<usize>, Option<usize>)> {
        edge_sides(&self.faces)
    }

    /// Unlabelled complex on the faces of the mesh.
    pub fn to_complex(&self) -> TilingComplex {
        unlabelled(self.points.len(), &self.faces)
    }

    fn face_centre(&self, f: usize) -> UnitVec {
        normalized_sum(self.faces[f].iter().map(|&v| self.points[v]))
    }

    pub fn subdivide(&self, kind: Subdivision) -> Mesh {
        let (faces, extra) = subdivide_topology(&self.faces, self.points.len(), kind);
        let mut points = self.points.clone();
        for e in extra {
            points.push(match e {
                NewPoint::Centre(f) => self.face_centre(f),
                NewPoint::Mid(u, v) => normalized_sum([self.points[u], self.points[v]].into_iter()),
            });
        }
        Mesh { points, faces }
    }

    /// Splits every quadrilateral along the diagonal from corner 0
    /// (`choice = false`) or corner 1 (`choice = true`).
    pub fn simple_triangular(&self, choice: &[bool]) -> Result<Mesh, CatalogError> {
        if choice.len() != self.faces.len() || self.faces.iter().any(|f| f.len() != 4) {
            return Err(CatalogError::Inapplicable(
                "simple triangular subdivision needs a quadrilateral mesh and one choice per face".into(),
            ));
        }
        let mut faces = Vec::new();
        for (f, &c) in self.faces.iter().zip(choice) {
            let k = c as usize;
            let v = |i: usize| f[(k + i) % 4];
            faces.push(vec![v(0), v(1), v(2)]);
            faces.push(vec![v(0), v(2), v(3)]);
        }
        Ok(Mesh { points: self.points.clone(), faces })
    }

    /// Face adjacency across each edge, or `None` for an open mesh.
    pub fn face_neighbours(&self) -> Option<Vec<Vec<usize>>> {
        let mut out = vec![Vec::new(); self.faces.len()];
        for (l, r) in self.edge_faces().values() {
            let (l, r) = ((*l)?, (*r)?);
            out[l].push(r);
            out[r].push(l);
        }
        Some(out)
    }
}

/// Where a vertex created by a subdivision sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NewPoint {
    Centre(usize),
    Mid(usize, usize),
}

fn edge_sides(faces: &[Vec<usize>]) -> BTreeMap<(usize, usize), (Option<usize>, Option<usize>)> {
    let mut m: BTreeMap<(usize, usize), (Option<usize>, Option<usize>)> = BTreeMap::new();
    for (fi, face) in faces.iter().enumerate() {
        let n = face.len();
        for i in 0..n {
            let (u, v) = (face[i], face[(i + 1) % n]);
            let e = m.entry((u.min(v), u.max(v))).or_default();
            if u < v {
                e.0 = Some(fi);
            } else {
                e.1 = Some(fi);
            }
        }
    }
    m
}

/// Faces of a subdivision of the counterclockwise faces `faces` on `nv`
/// vertices, and the vertices it adds (numbered from `nv` on).
pub fn subdivide_topology(faces: &[Vec<usize>], nv: usize, kind: Subdivision) -> (Vec<Vec<usize>>, Vec<NewPoint>) {
    let mut extra: Vec<NewPoint> = (0..faces.len()).map(NewPoint::Centre).collect();
    let centre = |f: usize| nv + f;
    let sides = edge_sides(faces);
    let mut mid = BTreeMap::new();
    if matches!(kind, Subdivision::Barycentric | Subdivision::Quadrilateral) {
        for &(u, v) in sides.keys() {
            mid.insert((u, v), nv + extra.len());
            extra.push(NewPoint::Mid(u, v));
        }
    }
    let m = |u: usize, v: usize| mid[&(u.min(v), u.max(v))];
    let mut out = Vec::new();
    if kind == Subdivision::Quadricentric {
        for (&(u, v), &(l, r)) in &sides {
            let (l, r) = (l.expect("closed surface"), r.expect("closed surface"));
            out.push(vec![u, centre(r), v, centre(l)]);
        }
        return (out, extra);
    }
    for (fi, face) in faces.iter().enumerate() {
        let n = face.len();
        let c = centre(fi);
        for i in 0..n {
            let (v, w, u) = (face[i], face[(i + 1) % n], face[(i + n - 1) % n]);
            match kind {
                Subdivision::Triangular => out.push(vec![c, v, w]),
                Subdivision::Barycentric => {
                    out.push(vec![c, v, m(v, w)]);
                    out.push(vec![c, m(v, w), w]);
                }
                Subdivision::Quadrilateral => out.push(vec![v, m(v, w), c, m(u, v)]),
                Subdivision::Quadricentric => unreachable!(),
            }
        }
    }
    (out, extra)
}

/// Subdivides the faces of a complex. The result carries placeholder
/// labels (every corner `α`, every edge `a`), good for comparing shapes.
pub fn subdivide_complex(t: &TilingComplex, kind: Subdivision) -> TilingComplex {
    let faces: Vec<Vec<usize>> = t.tiles.iter().map(|x| x.ccw_vertices()).collect();
    let (faces, extra) = subdivide_topology(&faces, t.num_vertices, kind);
    unlabelled(t.num_vertices + extra.len(), &faces)
}

/// Complex with placeholder labels on the given counterclockwise faces.
pub fn unlabelled(num_vertices: usize, faces: &[Vec<usize>]) -> TilingComplex {
    let class = if faces.first().map_or(4, |f| f.len()) == 3 { QuadClass::EquilateralTriangle } else { QuadClass::Rhombus };
    let tiles = faces
        .iter()
        .map(|f| Tile {
            corners: f.iter().map(|&v| Corner { vertex: v, angle: AngleLabel::Alpha, edge: EdgeLabel::A }).collect(),
            reversed: false,
        })
        .collect();
    TilingComplex::new(class, num_vertices, tiles)
}

/// Splits each pentagon in two quadrilaterals by joining the midpoint of a
/// selected edge to the opposite corner. `selected[f]` names the edge of
/// face `f` (by its starting corner); the selections must pair faces up
/// across shared edges.
///
/// Corners are labelled for the tile `α(a) β(b) γ(c) δ(a)`: the selected
/// edge splits into two `b` halves with `γ` at the midpoint, the joining
/// edge is `c`, and `δ` sits at the opposite corner.
pub fn simple_quadrilateral(mesh: &Mesh, selected: &[usize]) -> Result<TilingComplex, CatalogError> {
    if selected.len() != mesh.faces.len() || mesh.faces.iter().any(|f| f.len() != 5) {
        return Err(CatalogError::Inapplicable(
            "simple quadrilateral subdivision needs a pentagonal mesh and one edge per face".into(),
        ));
    }
    let mut mid: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (fi, (f, &k)) in mesh.faces.iter().zip(selected).enumerate() {
        if k >= 5 {
            return Err(CatalogError::InvalidParams(format!("face {fi}: edge index {k} out of range")));
        }
        let (u, v) = (f[k], f[(k + 1) % 5]);
        mid.entry((u.min(v), u.max(v))).or_default().push(fi);
    }
    if mid.values().any(|fs| fs.len() != 2) {
        return Err(CatalogError::InvalidParams("selected edges must pair up adjacent faces".into()));
    }
    let mut mid_id = BTreeMap::new();
    let mut next = mesh.points.len();
    for e in mid.keys() {
        mid_id.insert(*e, next);
        next += 1;
    }
    let mut tiles = Vec::new();
    use AngleLabel::*;
    use EdgeLabel::*;
    let corner = |vertex, angle, edge| Corner { vertex, angle, edge };
    for (f, &k) in mesh.faces.iter().zip(selected) {
        let v = |i: usize| f[(k + i) % 5];
        let m = mid_id[&(v(0).min(v(1)), v(0).max(v(1)))];
        // clockwise in template order
        tiles.push(Tile {
            corners: vec![corner(v(2), Alpha, A), corner(v(1), Beta, B), corner(m, Gamma, C), corner(v(3), Delta, A)],
            reversed: true,
        });
        tiles.push(Tile {
            corners: vec![corner(v(4), Alpha, A), corner(v(0), Beta, B), corner(m, Gamma, C), corner(v(3), Delta, A)],
            reversed: false,
        });
    }
    Ok(TilingComplex::new(QuadClass::General, next, tiles))
}

/// All selections of one edge per face of `mesh` that pair faces up.
pub fn edge_matchings(mesh: &Mesh) -> Vec<Vec<usize>> {
    let nf = mesh.faces.len();
    let ef = mesh.edge_faces();
    let mut sel = vec![usize::MAX; nf];
    let mut out = Vec::new();
    fn rec(
        mesh: &Mesh,
        ef: &BTreeMap<(usize, usize), (Option<usize>, Option<usize>)>,
        sel: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(f) = sel.iter().position(|&s| s == usize::MAX) else {
            out.push(sel.clone());
            return;
        };
        let face = &mesh.faces[f];
        let n = face.len();
        for k in 0..n {
            let (u, v) = (face[k], face[(k + 1) % n]);
            let (l, r) = ef[&(u.min(v), u.max(v))];
            let g = if l == Some(f) { r } else { l };
            let Some(g) = g else { continue };
            if sel[g] != usize::MAX {
                continue;
            }
            let gf = &mesh.faces[g];
            let kg = (0..gf.len()).find(|&i| gf[i] == v && gf[(i + 1) % gf.len()] == u).expect("shared edge");
            sel[f] = k;
            sel[g] = kg;
            rec(mesh, ef, sel, out);
            sel[f] = usize::MAX;
            sel[g] = usize::MAX;
        }
    }
    rec(mesh, &ef, &mut sel, &mut out);
    out
}

fn measured(mesh: &Mesh, face: &[usize], s: usize, d: isize) -> Vec<(f64, f64)> {
    let n = face.len() as isize;
    let at = |j: isize| mesh.points[face[(s as isize + d * j).rem_euclid(n) as usize]];
    (0..n)
        .map(|j| {
            let (prev, here, next) = (at(j - 1), at(j), at(j + 1));
            // interior angle does not depend on the walking direction
            let (ccw_next, ccw_prev) = if d > 0 { (next, prev) } else { (prev, next) };
            let ang = corner_angle(ccw_next, here, ccw_prev).map(|a| a.radians()).unwrap_or(f64::NAN);
            (ang, here.dist(next))
        })
        .collect()
}

/// Labels every face of `mesh` with the template of `spec`, matching
/// measured angles and edges within `tol`. A face read clockwise against
/// the template is marked reversed.
pub fn label_mesh(mesh: &Mesh, spec: &QuadSpec, tol: f64) -> Result<TilingComplex, CatalogError> {
    let corners = spec.class.corners();
    let want = spec.corner_values();
    let n = corners.len();
    let mut tiles = Vec::new();
    for (fi, face) in mesh.faces.iter().enumerate() {
        if face.len() != n {
            return Err(CatalogError::Mismatch(format!("face {fi} has {} corners, template {n}", face.len())));
        }
        let mut found = None;
        'search: for d in [1isize, -1] {
            for s in 0..n {
                let m = measured(mesh, face, s, d);
                if m.iter().zip(&want).all(|(x, y)| (x.0 - y.0).abs() < tol && (x.1 - y.1).abs() < tol) {
                    found = Some((s, d));
                    break 'search;
                }
            }
        }
        let (s, d) = found.ok_or_else(|| CatalogError::Mismatch(format!("face {fi} is not congruent to the template")))?;
        let tile_corners = (0..n)
            .map(|j| {
                let v = face[(s as isize + d * j as isize).rem_euclid(n as isize) as usize];
                Corner { vertex: v, angle: corners[j].0, edge: corners[j].1 }
            })
            .collect();
        tiles.push(Tile { corners: tile_corners, reversed: d < 0 });
    }
    Ok(TilingComplex::new(spec.class, mesh.points.len(), tiles).with_aliases_from(spec))
}

/// Reads a template off face 0 of `mesh`, taking the first reading whose
/// measured angles agree with `angles` (listed per distinct template label).
pub fn fit_spec(mesh: &Mesh, class: QuadClass, angles: &[Angle], tol: f64) -> Result<QuadSpec, CatalogError> {
    let labels = class.angle_labels();
    if labels.len() != angles.len() {
        return Err(CatalogError::InvalidParams(format!("class {class} takes {} angles", labels.len())));
    }
    let value: BTreeMap<AngleLabel, Angle> = labels.iter().copied().zip(angles.iter().copied()).collect();
    let corners = class.corners();
    let face = &mesh.faces[0];
    let n = corners.len();
    for d in [1isize, -1] {
        for s in 0..n {
            let m = measured(mesh, face, s, d);
            if !m.iter().zip(corners).all(|(x, c)| (x.0 - value[&c.0].radians()).abs() < tol) {
                continue;
            }
            let mut edge: BTreeMap<EdgeLabel, f64> = BTreeMap::new();
            let mut ok = true;
            for (x, c) in m.iter().zip(corners) {
                match edge.get(&c.1) {
                    Some(&e) if (e - x.1).abs() > tol => ok = false,
                    _ => {
                        edge.insert(c.1, x.1);
                    }
                }
            }
            if !ok {
                continue;
            }
            let get = |l: AngleLabel| value.get(&l).copied();
            let alpha = value[&AngleLabel::Alpha];
            let beta = get(AngleLabel::Beta).unwrap_or(alpha);
            let gamma = get(AngleLabel::Gamma).unwrap_or(match class {
                QuadClass::Rhombus => alpha,
                _ => beta,
            });
            let delta = if class.is_triangle() { None } else { Some(get(AngleLabel::Delta).unwrap_or(beta)) };
            return Ok(QuadSpec {
                class,
                alpha,
                beta,
                gamma,
                delta,
                a: Angle::Numeric(edge[&EdgeLabel::A]),
                b: edge.get(&EdgeLabel::B).map(|&x| Angle::Numeric(x)),
                c: edge.get(&EdgeLabel::C).map(|&x| Angle::Numeric(x)),
                f: Some(mesh.faces.len() as u32),
            });
        }
    }
    Err(CatalogError::Mismatch(format!("face 0 does not read as a {class} tile with the given angles")))
}
