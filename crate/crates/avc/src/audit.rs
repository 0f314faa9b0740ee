use quadsolve::{AngleLabel, QuadClass};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::combo::{join_combos, Census, VertexCombo};
use crate::enumerate::AVCSet;

/// What the counting lemma says about one ordered pair of angles that occur
/// equally often in the tile.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingFinding {
    pub theta: AngleLabel,
    pub rho: AngleLabel,
    /// Combos with fewer `theta` than `rho`.
    pub light: Vec<VertexCombo>,
    /// Combos with more `theta` than `rho`; one of them must be a vertex
    /// whenever a light combo is.
    pub heavy: Vec<VertexCombo>,
    /// Light combos ruled out because no heavy combo exists.
    pub excluded: Vec<VertexCombo>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub counting: Vec<CountingFinding>,
    /// Human-readable consequences of the balance lemmas.
    pub balance: Vec<String>,
    pub violations: Vec<String>,
    /// The combos that survive every exclusion.
    pub reduced: BTreeSet<VertexCombo>,
}

impl AuditReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Applies the counting lemma to every pair of angles that occur equally
/// often in the tile, repeating until nothing more is excluded, then the
/// balance lemmas for general and almost equilateral quadrilaterals.
pub fn counting_balance_audit(avc: &AVCSet) -> AuditReport {
    let class = avc.class;
    let mut report = AuditReport { reduced: avc.combos.clone(), ..Default::default() };
    balance(avc, &mut report);
    let labels = class.angle_labels();
    let pairs: Vec<(AngleLabel, AngleLabel)> = labels
        .iter()
        .flat_map(|&t| labels.iter().map(move |&r| (t, r)))
        .filter(|&(t, r)| t != r && class.multiplicity(t) == class.multiplicity(r))
        .collect();
    loop {
        let mut changed = false;
        for &(t, r) in &pairs {
            let light: Vec<VertexCombo> =
                report.reduced.iter().filter(|c| c.count(t) < c.count(r)).copied().collect();
            let heavy: Vec<VertexCombo> =
                report.reduced.iter().filter(|c| c.count(t) > c.count(r)).copied().collect();
            if light.is_empty() {
                continue;
            }
            let excluded = if heavy.is_empty() { light.clone() } else { Vec::new() };
            for c in &excluded {
                report.reduced.remove(c);
                changed = true;
            }
            if let Some(old) = report.counting.iter_mut().find(|x| x.theta == t && x.rho == r) {
                old.excluded.extend(excluded);
                old.light = light;
                old.heavy = heavy;
            } else {
                report.counting.push(CountingFinding { theta: t, rho: r, light, heavy, excluded });
            }
        }
        if !changed {
            break;
        }
    }
    for f in &report.counting {
        if !f.excluded.is_empty() {
            report.balance.push(format!(
                "{} has fewer {} than {} with no vertex to compensate, so it is excluded",
                join_combos(&f.excluded),
                f.theta,
                f.rho
            ));
        }
    }
    balance(avc, &mut report);
    report.violations.dedup();
    report.balance.dedup();
    for &l in &labels {
        if !report.reduced.iter().any(|c| c.count(l) > 0) {
            report.violations.push(format!("no remaining vertex contains {l}"));
        }
    }
    report
}

fn has_square(set: &BTreeSet<VertexCombo>, l: AngleLabel) -> bool {
    set.iter().any(|c| c.count(l) >= 2)
}

fn balance(avc: &AVCSet, report: &mut AuditReport) {
    use AngleLabel::*;
    let set = report.reduced.clone();
    match avc.class {
        QuadClass::General => {
            let sq: Vec<bool> = [Beta, Gamma, Delta].iter().map(|&l| has_square(&set, l)).collect();
            if sq.iter().any(|&x| x) && !sq.iter().all(|&x| x) {
                report.violations.push(format!(
                    "balance: β²⋯, γ²⋯, δ²⋯ must all be present or all absent (present: {})",
                    [Beta, Gamma, Delta]
                        .iter()
                        .zip(&sq)
                        .filter(|(_, &s)| s)
                        .map(|(l, _)| l.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
            if !sq.iter().all(|&x| x) {
                let keep: BTreeSet<VertexCombo> = set
                    .iter()
                    .filter(|c| {
                        let [_, l, m, n] = c.counts;
                        (l, m, n) == (0, 0, 0) || c.counts == [0, 1, 1, 1]
                    })
                    .copied()
                    .collect();
                report.balance.push(format!("only vertices are α^k and βγδ: {}", join_combos(&keep)));
                report.reduced = keep;
            }
        }
        QuadClass::AlmostEquilateral => {
            let symmetric = match (avc.angle(Gamma), avc.angle(Delta)) {
                (Some(g), Some(d)) => g.approx_eq(&d, 1e-12),
                _ => true,
            };
            if symmetric {
                return;
            }
            let (g2, d2) = (has_square(&set, Gamma), has_square(&set, Delta));
            if g2 != d2 {
                report.violations.push(format!(
                    "balance: γ²⋯ and δ²⋯ must both be present or both absent (present: {})",
                    if g2 { "γ²⋯" } else { "δ²⋯" }
                ));
            }
            if !(g2 && d2) {
                let keep: BTreeSet<VertexCombo> = set
                    .iter()
                    .filter(|c| {
                        let [_, _, m, n] = c.counts;
                        (m, n) == (0, 0) || (m, n) == (1, 1)
                    })
                    .copied()
                    .collect();
                report.balance.push(format!("only vertices are α^kβ^l and α^kβ^lγδ: {}", join_combos(&keep)));
                report.reduced = keep;
            }
        }
        _ => {}
    }
}

/// If an angle occurring once in the tile gives the only degree 3 vertex
/// `θ³`, then `f ≥ 24`. Returns `true` when the census is consistent with
/// that bound (or the hypothesis does not apply).
pub fn count_aaa_holds(census: &Census, class: QuadClass, f: u32) -> bool {
    if class.is_triangle() {
        return true;
    }
    let deg3: Vec<&VertexCombo> = census.keys().filter(|c| c.degree() == 3).collect();
    let hyp = deg3.len() == 1
        && AngleLabel::ALL
            .iter()
            .any(|&l| class.multiplicity(l) == 1 && deg3[0].count(l) == 3);
    !hyp || f >= 24
}

/// If two angle slots of the tile never occur at a degree 3 vertex, some
/// degree 4 vertex holds them at least three times together or a degree 5
/// vertex holds them five times. Returns `true` when the census agrees.
pub fn deg3miss_holds(census: &Census, class: QuadClass) -> bool {
    if class.is_triangle() {
        return true;
    }
    let slots: Vec<AngleLabel> = class.corners().iter().map(|c| c.0).collect();
    let at_deg3 = |l: AngleLabel| census.keys().any(|c| c.degree() == 3 && c.count(l) > 0);
    for i in 0..slots.len() {
        for j in (i + 1)..slots.len() {
            let (x, y) = (slots[i], slots[j]);
            if at_deg3(x) || at_deg3(y) {
                continue;
            }
            let together = |c: &VertexCombo| if x == y { c.count(x) } else { c.count(x) + c.count(y) };
            let ok = census
                .keys()
                .any(|c| (c.degree() == 4 && together(c) >= 3) || (c.degree() == 5 && together(c) == 5));
            if !ok {
                return false;
            }
        }
    }
    true
}
