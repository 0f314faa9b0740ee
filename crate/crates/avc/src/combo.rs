use quadsolve::AngleLabel;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A vertex `α^k β^l γ^m δ^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[derive(Default)]
pub struct VertexCombo {
    pub counts: [u32; 4],
}

/// How many vertices of each type a tiling has.
pub type Census = BTreeMap<VertexCombo, usize>;

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

impl VertexCombo {
    pub fn new(k: u32, l: u32, m: u32, n: u32) -> VertexCombo {
        VertexCombo { counts: [k, l, m, n] }
    }

    pub fn count(&self, l: AngleLabel) -> u32 {
        self.counts[l.index()]
    }

    pub fn degree(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Adds one more copy of `l`.
    pub fn with(mut self, l: AngleLabel) -> VertexCombo {
        self.counts[l.index()] += 1;
        self
    }

    /// Componentwise `self ≤ other`.
    pub fn is_within(&self, other: &VertexCombo) -> bool {
        self.counts.iter().zip(other.counts.iter()).all(|(a, b)| a <= b)
    }

    pub fn from_labels(labels: impl IntoIterator<Item = AngleLabel>) -> VertexCombo {
        labels.into_iter().fold(VertexCombo::default(), |c, l| c.with(l))
    }

    /// ASCII spelling such as `alpha^3 beta`.
    pub fn ascii(&self) -> String {
        let mut parts = Vec::new();
        for l in AngleLabel::ALL {
            match self.count(l) {
                0 => {}
                1 => parts.push(l.ascii().to_string()),
                k => parts.push(format!("{}^{k}", l.ascii())),
            }
        }
        parts.join(" ")
    }
}


impl fmt::Display for VertexCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in AngleLabel::ALL {
            let k = self.count(l);
            if k == 0 {
                continue;
            }
            f.write_str(l.symbol())?;
            if k > 1 {
                for d in k.to_string().bytes() {
                    write!(f, "{}", SUPERSCRIPTS[(d - b'0') as usize])?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse vertex {0:?}")]
pub struct ParseComboError(pub String);

impl FromStr for VertexCombo {
    type Err = ParseComboError;

    /// Parses `α³βδ²` or `alpha^3 beta delta^2`.
    fn from_str(s: &str) -> Result<VertexCombo, ParseComboError> {
        let err = || ParseComboError(s.to_string());
        let mut out = VertexCombo::default();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            if c.is_whitespace() {
                continue;
            }
            let label = match c {
                'α' => AngleLabel::Alpha,
                'β' => AngleLabel::Beta,
                'γ' => AngleLabel::Gamma,
                'δ' => AngleLabel::Delta,
                'a'..='z' => {
                    let mut word = c.to_string();
                    while let Some(&d) = chars.peek() {
                        if d.is_ascii_lowercase() {
                            word.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    match word.as_str() {
                        "alpha" => AngleLabel::Alpha,
                        "beta" => AngleLabel::Beta,
                        "gamma" => AngleLabel::Gamma,
                        "delta" => AngleLabel::Delta,
                        _ => return Err(err()),
                    }
                }
                _ => return Err(err()),
            };
            if chars.peek() == Some(&'^') {
                chars.next();
            }
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if let Some(v) = SUPERSCRIPTS.iter().position(|&x| x == d) {
                    digits.push(char::from(b'0' + v as u8));
                } else if d.is_ascii_digit() {
                    digits.push(d);
                } else {
                    break;
                }
                chars.next();
            }
            let k: u32 = if digits.is_empty() { 1 } else { digits.parse().map_err(|_| err())? };
            out.counts[label.index()] += k;
        }
        if out.degree() == 0 {
            return Err(err());
        }
        Ok(out)
    }
}

/// Renders combos separated by `", "`.
pub fn join_combos<'a>(combos: impl IntoIterator<Item = &'a VertexCombo>) -> String {
    combos.into_iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
