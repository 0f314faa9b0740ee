#![allow(dead_code)]

use catalog::GeometricRealization;
use std::f64::consts::PI;

/// Largest deviation of any measured corner angle or edge length from the
/// tile's values, plus the tile area error.
pub fn geometry_error(r: &GeometricRealization) -> f64 {
    let mut worst: f64 = 0.0;
    let tile_area = r.spec.area();
    let mut total = 0.0;
    for (ti, tile) in r.complex.tiles.iter().enumerate() {
        let poly = r.tile_polygon_ccw(ti).expect("tile polygon");
        let n = tile.corners.len();
        let angles = poly.angle_radians();
        for (i, c) in tile.corners.iter().enumerate() {
            let pos = if tile.reversed { (n - i) % n } else { i };
            worst = worst.max((angles[pos] - r.spec.angle(c.angle).radians()).abs());
            let next = tile.corners[(i + 1) % n].vertex;
            let len = r.coords[c.vertex].dist(r.coords[next]);
            worst = worst.max((len - r.spec.edge(c.edge).radians()).abs());
        }
        total += poly.area();
        worst = worst.max((poly.area() - tile_area).abs());
    }
    worst.max((total - 4.0 * PI).abs())
}

pub fn euler(r: &GeometricRealization) -> i64 {
    let t = &r.complex;
    t.num_vertices as i64 - t.num_edges() as i64 + t.f() as i64
}

/// Sound combinatorics and geometry within 1e-7.
pub fn assert_valid(r: &GeometricRealization, what: &str) {
    assert!(catalog::flip::is_sound(r), "{what}: combinatorics");
    assert_eq!(euler(r), 2, "{what}: Euler characteristic");
    let e = geometry_error(r);
    assert!(e < 1e-7, "{what}: geometry off by {e:.3e}");
}
