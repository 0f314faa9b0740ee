use num_rational::Ratio;
use quadsolve::{AngleLabel, QuadClass, QuadSpec};
use serde::{Deserialize, Serialize};
use sphercore::Angle;
use std::collections::BTreeSet;
use std::f64::consts::TAU;

use crate::combo::VertexCombo;
use crate::AvcError;

/// Tolerance on a vertex angle sum when some angle is numeric.
pub const SUM_TOL: f64 = 1e-9;

/// An anglewise vertex combination: every vertex type the angle values allow.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AVCSet {
    pub class: QuadClass,
    /// Angle value for each label the class uses, in label order.
    pub angles: Vec<(AngleLabel, Angle)>,
    pub combos: BTreeSet<VertexCombo>,
    pub f: Option<u32>,
}

impl AVCSet {
    pub fn angle(&self, l: AngleLabel) -> Option<Angle> {
        self.angles.iter().find(|(m, _)| *m == l).map(|(_, a)| *a)
    }

    pub fn contains(&self, c: &VertexCombo) -> bool {
        self.combos.contains(c)
    }
}

/// `(2 + 4/f)π` for a quadrilateral and `(1 + 4/f)π` for a triangle.
pub fn angle_sum_target(f: u32, class: QuadClass) -> Result<Angle, AvcError> {
    if class.is_triangle() {
        if f < 4 {
            return Err(AvcError::BadF(format!("a triangular tiling has f ≥ 4, got {f}")));
        }
    } else if f < 6 || !f.is_multiple_of(2) {
        return Err(AvcError::BadF(format!("a quadrilateral tiling has even f ≥ 6, got {f}")));
    }
    Ok(QuadSpec::target_sum(class, f))
}

/// Parity lemma filter for the class.
///
/// General: β, γ, δ share parity. Almost equilateral: γ, δ share parity.
/// General triangle: α, β, γ share parity. Isosceles triangle and kite:
/// the number of β is even. Rhombus and equilateral triangle: no condition.
pub fn parity_check(combo: &VertexCombo, class: QuadClass) -> bool {
    let [k, l, m, n] = combo.counts;
    match class {
        QuadClass::General => l % 2 == m % 2 && m % 2 == n % 2,
        QuadClass::AlmostEquilateral => m % 2 == n % 2,
        QuadClass::Triangle => k % 2 == l % 2 && l % 2 == m % 2,
        QuadClass::IsoscelesTriangle | QuadClass::Kite => l % 2 == 0,
        QuadClass::Rhombus | QuadClass::EquilateralTriangle => true,
    }
}

/// For general quadrilaterals, `α^k γ^l` with `k, l > 0` cannot be a vertex:
/// the edges around such a vertex cannot match up.
pub fn edge_compatible(combo: &VertexCombo, class: QuadClass) -> bool {
    let [k, l, m, n] = combo.counts;
    !(class == QuadClass::General && k > 0 && m > 0 && l == 0 && n == 0)
}

/// The labels the class uses, paired with the given values.
fn label_values(class: QuadClass, angles: &[Angle]) -> Result<Vec<(AngleLabel, Angle)>, AvcError> {
    let labels = class.angle_labels();
    if labels.len() != angles.len() {
        return Err(AvcError::BadAngles(format!(
            "class {class} uses {} distinct angles, got {}",
            labels.len(),
            angles.len()
        )));
    }
    for a in angles {
        if !(a.radians() > 0.0) || !a.radians().is_finite() {
            return Err(AvcError::BadAngles(format!("angle {a} is not positive")));
        }
    }
    Ok(labels.into_iter().zip(angles.iter().copied()).collect())
}

/// Every vertex `Σ count·angle = 2π` of degree at least 3 that passes the
/// parity lemma and, for general quadrilaterals, the edge condition above.
///
/// `angles` holds one value per distinct label of the class (a rhombus takes
/// α, β; a kite α, β, γ). The sum is compared exactly when every angle is
/// exact and within [`SUM_TOL`] otherwise. `max_degree` defaults to
/// `⌈2π / smallest angle⌉`.
pub fn enumerate_avc(class: QuadClass, angles: &[Angle], max_degree: Option<u32>) -> Result<AVCSet, AvcError> {
    enumerate_avc_tol(class, angles, max_degree, SUM_TOL)
}

/// [`enumerate_avc`] with an explicit tolerance for numeric angle sums.
/// Exact angles ignore `tol`.
pub fn enumerate_avc_tol(
    class: QuadClass,
    angles: &[Angle],
    max_degree: Option<u32>,
    tol: f64,
) -> Result<AVCSet, AvcError> {
    let lv = label_values(class, angles)?;
    let min = lv.iter().map(|(_, a)| a.radians()).fold(f64::INFINITY, f64::min);
    let max_degree = max_degree.unwrap_or_else(|| (TAU / min - 1e-9).ceil() as u32).max(3);
    let exact: Option<Vec<Ratio<i64>>> = lv.iter().map(|(_, a)| a.ratio()).collect();
    let mut combos = BTreeSet::new();
    let mut counts = vec![0u32; lv.len()];
    search(&lv, &exact, tol, 0, &mut counts, max_degree, &mut |cs| {
        let mut c = VertexCombo::default();
        for ((l, _), k) in lv.iter().zip(cs) {
            c.counts[l.index()] = *k;
        }
        if c.degree() >= 3 && parity_check(&c, class) && edge_compatible(&c, class) {
            combos.insert(c);
        }
    });
    Ok(AVCSet { class, angles: lv, combos, f: None })
}

fn search(
    lv: &[(AngleLabel, Angle)],
    exact: &Option<Vec<Ratio<i64>>>,
    tol: f64,
    i: usize,
    counts: &mut Vec<u32>,
    max_degree: u32,
    emit: &mut impl FnMut(&[u32]),
) {
    let deg: u32 = counts.iter().sum();
    if i == lv.len() {
        let hit = match exact {
            Some(r) => {
                let s: Ratio<i64> = r.iter().zip(counts.iter()).map(|(a, &k)| *a * k as i64).sum();
                s == Ratio::from_integer(2)
            }
            None => {
                let s: f64 = lv.iter().zip(counts.iter()).map(|((_, a), &k)| a.radians() * k as f64).sum();
                (s - TAU).abs() <= tol
            }
        };
        if hit {
            emit(counts);
        }
        return;
    }
    let used: f64 = lv[..i].iter().zip(counts.iter()).map(|((_, a), &k)| a.radians() * k as f64).sum();
    let step = lv[i].1.radians();
    let mut k = 0u32;
    while deg + k <= max_degree && used + step * k as f64 <= TAU + tol {
        counts[i] = k;
        search(lv, exact, tol, i + 1, counts, max_degree, emit);
        k += 1;
    }
    counts[i] = 0;
}

/// Enumerates the AVC for each even `f` in `fs`, with angles given as a
/// function of `f`. Runs in parallel when the `parallel` feature is on.
pub fn enumerate_avc_per_f(
    class: QuadClass,
    angles_for: impl Fn(u32) -> Vec<Angle> + Sync,
    fs: &[u32],
) -> Vec<(u32, Result<AVCSet, AvcError>)> {
    let one = |&f: &u32| {
        let r = enumerate_avc(class, &angles_for(f), None).map(|mut s| {
            s.f = Some(f);
            s
        });
        (f, r)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        fs.par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        fs.iter().map(one).collect()
    }
}
