use serde::{Deserialize, Serialize};

use super::KnotError;
use crate::exactmath::IntMatrix;

/// Square integer matrix of even size with A − Aᵀ unimodular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertMatrix {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(rename = "seifert_matrix")]
    a: IntMatrix,
}

impl SeifertMatrix {
    pub fn new(a: IntMatrix) -> Result<Self, KnotError> {
        if !a.is_square() {
            return Err(KnotError::NotSquare(a.rows(), a.cols()));
        }
        if !a.rows().is_multiple_of(2) {
            return Err(KnotError::OddSize(a.rows()));
        }
        let t = &a - &a.transpose();
        let det = t.det()?;
        if !num_traits::Signed::abs(&det).eq(&1.into()) {
            return Err(KnotError::NotUnimodular(det.to_string()));
        }
        Ok(Self { name: None, a })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, KnotError> {
        let a = IntMatrix::try_from_rows(rows)?;
        Self::new(a)
    }

    pub fn unknot() -> Self {
        Self { name: Some("unknot".into()), a: IntMatrix::empty() }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn genus(&self) -> usize {
        self.a.rows() / 2
    }

    /// The intersection form T = A − Aᵀ.
    pub fn intersection_form(&self) -> IntMatrix {
        &self.a - &self.a.transpose()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self { name: None, a: self.a.direct_sum(&other.a) }
    }

    /// Q·A·Qᵀ for unimodular Q; the result is again a Seifert matrix.
    pub fn congruent(&self, q: &IntMatrix) -> Result<Self, KnotError> {
        let a = crate::exactmath::congruence(q, &self.a)?;
        Ok(Self { name: self.name.clone(), a })
    }

    /// −A, a Seifert matrix for the concordance inverse.
    pub fn negate(&self) -> Self {
        Self { name: self.name.as_ref().map(|n| format!("-{n}")), a: -&self.a }
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            name: Option<String>,
            seifert_matrix: IntMatrix,
        }
        let raw = Raw::deserialize(d)?;
        let mut s = SeifertMatrix::new(raw.seifert_matrix).map_err(serde::de::Error::custom)?;
        s.name = raw.name;
        Ok(s)
    }
}
