use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{alexander, lt_signature, KnotError, SeifertMatrix};
use crate::exactmath::{CirclePoint, IntMatrix, LaurentPoly1};

const BUNDLED: &str = include_str!("../../data/knots.json");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub alexander: LaurentPoly1,
    pub signature_minus1: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawEntry {
    name: String,
    seifert_matrix: IntMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expected: Option<Expected>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnotEntry {
    pub name: String,
    pub seifert: SeifertMatrix,
    pub expected: Option<Expected>,
}

/// Named Seifert matrices, each checked against its recorded Δ and σ(−1) when loaded.
#[derive(Clone, Debug, PartialEq)]
pub struct KnotTable {
    entries: Vec<KnotEntry>,
}

impl KnotTable {
    pub fn bundled() -> Self {
        Self::from_json(BUNDLED).expect("bundled knot table is valid")
    }

    pub fn load(path: &Path) -> Result<Self, KnotError> {
        let text = std::fs::read_to_string(path).map_err(|e| KnotError::Table(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, KnotError> {
        let raw: Vec<RawEntry> = serde_json::from_str(text).map_err(|e| KnotError::Table(e.to_string()))?;
        let mut entries = Vec::with_capacity(raw.len());
        for r in raw {
            let seifert = SeifertMatrix::new(r.seifert_matrix)
                .map_err(|e| KnotError::Table(format!("{}: {e}", r.name)))?
                .named(r.name.clone());
            if let Some(exp) = &r.expected {
                let delta = alexander(&seifert);
                if !delta.equal_up_to_unit(&exp.alexander) {
                    return Err(KnotError::Table(format!("{}: Alexander polynomial {delta}, expected {}", r.name, exp.alexander)));
                }
                let sig = lt_signature(&seifert, CirclePoint::MinusOne)?.value;
                if sig != exp.signature_minus1 {
                    return Err(KnotError::Table(format!(
                        "{}: signature at -1 is {sig}, expected {}",
                        r.name, exp.signature_minus1
                    )));
                }
            }
            if entries.iter().any(|e: &KnotEntry| e.name == r.name) {
                return Err(KnotError::Table(format!("duplicate entry {}", r.name)));
            }
            entries.push(KnotEntry { name: r.name, seifert, expected: r.expected });
        }
        Ok(Self { entries })
    }

    pub fn get(&self, name: &str) -> Option<&KnotEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.name.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_table_loads() {
        let t = KnotTable::bundled();
        assert_eq!(t.names().collect::<Vec<_>>(), ["unknot", "trefoil", "figure8", "stevedore"]);
        assert_eq!(t.get("unknot").unwrap().seifert.size(), 0);
        assert!(t.get("cinquefoil").is_none());
    }

    #[test]
    fn wrong_expectation_rejected() {
        let bad = r#"[{"name":"x","seifert_matrix":[[-1,1],[0,-1]],"expected":{"alexander":{"0":1,"1":-3,"2":1},"signature_minus1":-2}}]"#;
        assert!(matches!(KnotTable::from_json(bad), Err(KnotError::Table(_))));
        let bad = r#"[{"name":"x","seifert_matrix":[[-1,1],[0,-1]],"expected":{"alexander":{"0":1,"1":-1,"2":1},"signature_minus1":0}}]"#;
        assert!(KnotTable::from_json(bad).is_err());
        let ok = r#"[{"name":"x","seifert_matrix":[[-1,1],[0,-1]]}]"#;
        assert_eq!(KnotTable::from_json(ok).unwrap().entries().len(), 1);
    }
}
