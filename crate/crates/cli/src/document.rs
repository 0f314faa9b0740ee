//! The JSON tiling document.

use catalog::{FamilyId, GeometricRealization, TilingComplex};
use quadsolve::QuadSpec;
use serde::{Deserialize, Serialize};
use sphercore::UnitVec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    /// Tolerance the document was verified at.
    pub tolerance: f64,
}

impl Provenance {
    pub fn new(tolerance: f64) -> Provenance {
        Provenance { tool: env!("CARGO_PKG_NAME").to_string(), version: env!("CARGO_PKG_VERSION").to_string(), tolerance }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TilingDocument {
    pub schema_version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyId>,
    pub template: QuadSpec,
    pub complex: TilingComplex,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<UnitVec>>,
    pub provenance: Provenance,
}

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unsupported schema version {0} (expected {SCHEMA_VERSION})")]
    Version(u32),
    #[error("document has no coordinates")]
    NoCoords,
}

impl TilingDocument {
    pub fn from_realization(name: &str, family: Option<FamilyId>, r: &GeometricRealization, tolerance: f64) -> TilingDocument {
        TilingDocument {
            schema_version: SCHEMA_VERSION,
            name: name.to_string(),
            family,
            template: r.spec.clone(),
            complex: r.complex.clone(),
            coords: Some(r.coords.clone()),
            provenance: Provenance::new(tolerance),
        }
    }

    pub fn realization(&self) -> Result<GeometricRealization, DocumentError> {
        let coords = self.coords.clone().ok_or(DocumentError::NoCoords)?;
        Ok(GeometricRealization { complex: self.complex.clone(), coords, spec: self.template.clone() })
    }

    /// Canonical form: pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// The document as it reads back from its canonical JSON; numeric
    /// template values are rounded to 12 significant digits on the way.
    /// Normalized documents round-trip exactly.
    pub fn normalized(&self) -> TilingDocument {
        TilingDocument::from_json(&self.to_json()).expect("canonical JSON reads back")
    }

    pub fn from_json(text: &str) -> Result<TilingDocument, DocumentError> {
        let doc: TilingDocument = serde_json::from_str(text)?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Version(doc.schema_version));
        }
        Ok(doc)
    }
}
