use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Vertex degrees of a tiling together with its face, edge and vertex totals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    /// `v_k`: number of vertices of degree `k`.
    pub v_k: BTreeMap<u32, i64>,
    pub f: i64,
    pub e: i64,
    pub v: i64,
}

impl DegreeHistogram {
    /// Histogram of an `n`-gon tiling with `f` tiles and the given vertex degrees.
    pub fn from_degrees(n: u32, f: i64, degrees: impl IntoIterator<Item = u32>) -> DegreeHistogram {
        let mut v_k = BTreeMap::new();
        for d in degrees {
            *v_k.entry(d).or_insert(0) += 1;
        }
        let v = v_k.values().sum();
        DegreeHistogram { v_k, f, e: n as i64 * f / 2, v }
    }

    pub fn count(&self, k: u32) -> i64 {
        self.v_k.get(&k).copied().unwrap_or(0)
    }

    fn sum(&self, w: impl Fn(i64) -> i64) -> i64 {
        self.v_k.iter().map(|(&k, &c)| w(k as i64) * c).sum()
    }
}

/// Outcome of the vertex counting identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerAudit {
    pub pass: bool,
    pub failed: Vec<String>,
}

/// Checks the counting identities of an `n`-gon tiling of the sphere:
/// `v − e + f = 2`, `nf = 2e = Σ k·v_k`, `(6−n)f = 12 + Σ 2(k−3)v_k`, and
/// then for quadrilaterals `f = 6 + Σ(k−3)v_k`, `v₃ = 8 + Σ(k−4)v_k`, and
/// for triangles `3f = 12 + Σ 2(k−3)v_k`, `f = 8 + Σ(k−4)v_k`.
pub fn euler_audit(h: &DegreeHistogram, n: u32) -> EulerAudit {
    let n = n as i64;
    let mut failed = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            failed.push(name.to_string());
        }
    };
    check("euler", h.v - h.e + h.f == 2);
    check("vertex-total", h.v == h.sum(|_| 1));
    check("edge-count", n * h.f == 2 * h.e && 2 * h.e == h.sum(|k| k));
    check("min-degree", h.v_k.keys().all(|&k| k >= 3));
    check("face-count", (6 - n) * h.f == 12 + h.sum(|k| 2 * (k - 3)));
    match n {
        4 => {
            check("quad-face-count", h.f == 6 + h.sum(|k| k - 3));
            check("quad-degree-3", h.count(3) == 8 + h.sum(|k| if k >= 4 { k - 4 } else { 0 }));
            check("quad-v3-at-least-8", h.count(3) >= 8);
        }
        3 => {
            check("tri-face-count", 3 * h.f == 12 + h.sum(|k| 2 * (k - 3)));
            check("tri-face-count-4", h.f == 8 + h.sum(|k| k - 4));
        }
        _ => {}
    }
    EulerAudit { pass: failed.is_empty(), failed }
}
