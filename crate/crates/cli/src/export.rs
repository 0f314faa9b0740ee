//! OBJ meshes and SVG stereographic nets.

use crate::document::{DocumentError, TilingDocument};
use sphercore::{vec3, UnitVec};
use std::fmt::Write;

/// One polygon face per tile over shared vertex records.
pub fn to_obj(doc: &TilingDocument) -> Result<String, DocumentError> {
    let coords = doc.coords.as_ref().ok_or(DocumentError::NoCoords)?;
    let mut out = String::new();
    writeln!(out, "# {}", doc.name).unwrap();
    writeln!(out, "o {}", obj_name(&doc.name)).unwrap();
    for p in coords {
        let [x, y, z] = p.to_array();
        writeln!(out, "v {x:.12} {y:.12} {z:.12}").unwrap();
    }
    for tile in &doc.complex.tiles {
        let idx: Vec<String> = tile.ccw_vertices().iter().map(|v| (v + 1).to_string()).collect();
        writeln!(out, "f {}", idx.join(" ")).unwrap();
    }
    Ok(out)
}

fn obj_name(name: &str) -> String {
    name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

const SEGMENTS: usize = 64;
const HALF: f64 = 200.0;
const RADIUS: f64 = 90.0;

/// Stereographic projection from `-s·ẑ`; the hemisphere around `s·ẑ` lands
/// in the unit disk. Points near the projection pole are pushed out to a
/// finite radius, which the clip circle hides anyway.
fn project(p: [f64; 3], s: f64) -> (f64, f64) {
    let d = (1.0 + s * p[2]).max(1e-3);
    let (x, y) = (p[0] / d, s * p[1] / d);
    let r = x.hypot(y);
    if r > 4.0 {
        (4.0 * x / r, 4.0 * y / r)
    } else {
        (x, y)
    }
}

fn slerp(a: UnitVec, b: UnitVec, t: f64) -> [f64; 3] {
    let w = a.dot(b).clamp(-1.0, 1.0).acos();
    if w < 1e-12 {
        return a.to_array();
    }
    let (sa, sb) = (((1.0 - t) * w).sin() / w.sin(), (t * w).sin() / w.sin());
    vec3::add(vec3::scale(a.to_array(), sa), vec3::scale(b.to_array(), sb))
}

/// Two hemispheric nets side by side, centred on `+z` (left) and `-z`
/// (right). Every tile is drawn once per net as a closed path of great-arc
/// polylines, clipped to the net's disk.
pub fn to_svg(doc: &TilingDocument) -> Result<String, DocumentError> {
    let coords = doc.coords.as_ref().ok_or(DocumentError::NoCoords)?;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = 4.0 * HALF,
        h = 2.0 * HALF
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", escape(&doc.name)).unwrap();
    let nets = [("north", 1.0), ("south", -1.0)];
    writeln!(out, "<defs>").unwrap();
    for (k, (id, _)) in nets.iter().enumerate() {
        let cx = HALF * (2 * k + 1) as f64;
        writeln!(out, r#"<clipPath id="{id}"><circle cx="{cx}" cy="{HALF}" r="{RADIUS}"/></clipPath>"#).unwrap();
    }
    writeln!(out, "</defs>").unwrap();
    for (k, (id, s)) in nets.iter().enumerate() {
        let cx = HALF * (2 * k + 1) as f64;
        writeln!(out, r#"<g clip-path="url(#{id})" fill="none" stroke="black" stroke-width="0.5">"#).unwrap();
        for tile in &doc.complex.tiles {
            let ccw: Vec<UnitVec> = tile.ccw_vertices().iter().map(|&v| coords[v]).collect();
            let mut d = String::new();
            for i in 0..ccw.len() {
                let (a, b) = (ccw[i], ccw[(i + 1) % ccw.len()]);
                for j in 0..SEGMENTS {
                    let (x, y) = project(slerp(a, b, j as f64 / SEGMENTS as f64), *s);
                    let cmd = if i == 0 && j == 0 { 'M' } else { 'L' };
                    write!(d, "{cmd}{:.3},{:.3} ", cx + RADIUS * x, HALF - RADIUS * y).unwrap();
                }
            }
            d.push('Z');
            writeln!(out, r#"<path d="{d}"/>"#).unwrap();
        }
        writeln!(out, "</g>").unwrap();
        writeln!(out, r#"<circle cx="{cx}" cy="{HALF}" r="{RADIUS}" fill="none" stroke="gray"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
