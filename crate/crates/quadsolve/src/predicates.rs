use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::labels::QuadClass;
use crate::spec::QuadSpec;

/// Outcome of one implication about almost equilateral quadrilaterals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The hypothesis does not hold (or the class is not a³b).
    Vacuous,
    Satisfied,
    Violated,
}

const EPS: f64 = 1e-12;

fn lt(x: f64, y: f64) -> bool {
    x < y - EPS
}

fn implies(hyp: bool, concl: bool) -> Verdict {
    match (hyp, concl) {
        (false, _) => Verdict::Vacuous,
        (true, true) => Verdict::Satisfied,
        (true, false) => Verdict::Violated,
    }
}

/// Necessary inequalities for a simple almost equilateral quadrilateral.
///
/// | name | hypothesis | conclusion |
/// |---|---|---|
/// | `two_beta_two_delta` | γ < π | α+2β > π and α+2δ > π |
/// | `beta_gamma_delta` | α, β, γ < π | β+γ < δ+π and γ+δ < β+π |
/// | `alpha_gamma_beta_delta` | γ, δ < π | α > γ ⇔ β > δ |
/// | `alpha_beta_gamma_delta` | none | α < β ⇔ γ < δ |
/// | `half_angles` | γ, δ ≤ π | α < 2γ ⇔ β < 2δ |
pub fn geometry_predicates(spec: &QuadSpec) -> BTreeMap<&'static str, Verdict> {
    let names = [
        "two_beta_two_delta",
        "beta_gamma_delta",
        "alpha_gamma_beta_delta",
        "alpha_beta_gamma_delta",
        "half_angles",
    ];
    if spec.class != QuadClass::AlmostEquilateral || spec.delta.is_none() {
        return names.iter().map(|&n| (n, Verdict::Vacuous)).collect();
    }
    let al = spec.alpha.radians();
    let be = spec.beta.radians();
    let ga = spec.gamma.radians();
    let de = spec.angle(crate::AngleLabel::Delta).radians();
    let mut out = BTreeMap::new();
    out.insert(names[0], implies(lt(ga, PI), lt(PI, al + 2.0 * be) && lt(PI, al + 2.0 * de)));
    out.insert(
        names[1],
        implies(lt(al, PI) && lt(be, PI) && lt(ga, PI), lt(be + ga, de + PI) && lt(ga + de, be + PI)),
    );
    out.insert(names[2], implies(lt(ga, PI) && lt(de, PI), lt(ga, al) == lt(de, be)));
    out.insert(names[3], implies(true, lt(al, be) == lt(ga, de)));
    out.insert(
        names[4],
        implies(ga <= PI + EPS && de <= PI + EPS, lt(al, 2.0 * ga) == lt(be, 2.0 * de)),
    );
    out
}
