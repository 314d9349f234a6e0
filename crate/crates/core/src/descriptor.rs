//! JSON descriptors for linear codes, QA codes and search results.
//!
//! Field elements are coefficient strings over the prime field, lowest degree
//! first, relative to the modulus of the ambient field `K`; `g^k` is accepted
//! on input.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_digits, AbelianGroup, FieldSpec, GroupElement, Subfield};
use crate::concatenation::{assignment_from_members, qa_from_constituents, Assignment, QaCode};
use crate::error::{Error, Result};
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::{CodeParams, LinearCode};
use crate::search::{SearchResult, SearchSpec, StageStats};

/// A linear code over the degree-`field_degree` subfield of `K = F_{q^tower_degree}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub q: u64,
    pub field_degree: u32,
    /// Degree of `K` over `F_q`; defaults to `field_degree`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tower_degree: Option<u32>,
    /// Modulus of `K` over the prime field, lowest degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub length: usize,
    pub generators: Vec<Vec<String>>,
}

fn modulus_digits(m: &Option<String>, q: u64) -> Result<Option<Vec<u32>>> {
    let (p, _) = crate::algebra::prime_power(q)?;
    m.as_deref().map(|s| parse_digits(s, p)).transpose()
}

impl CodeDescriptor {
    pub fn from_code(code: &LinearCode) -> Self {
        let f = code.field().spec();
        CodeDescriptor {
            q: f.q(),
            field_degree: code.field().degree(),
            tower_degree: Some(f.tower_degree()),
            modulus: Some(f.modulus_string()),
            length: code.length(),
            generators: code
                .generators()
                .iter()
                .map(|r| r.iter().map(|&x| f.format(x)).collect())
                .collect(),
        }
    }

    /// The ambient field described by `q`, `tower_degree` and `modulus`.
    pub fn field(&self) -> Result<Arc<FieldSpec>> {
        let degree = self.tower_degree.unwrap_or(self.field_degree);
        let spec = match modulus_digits(&self.modulus, self.q)? {
            Some(m) => FieldSpec::with_modulus(self.q, degree, m)?,
            None => FieldSpec::new(self.q, degree)?,
        };
        Ok(Arc::new(spec))
    }

    pub fn to_code(&self) -> Result<LinearCode> {
        self.to_code_in(self.field()?)
    }

    /// Interpret the generators inside an existing field `K`.
    pub fn to_code_in(&self, field: Arc<FieldSpec>) -> Result<LinearCode> {
        if field.q() != self.q {
            return Err(Error::Mismatch(format!(
                "descriptor is over q = {}, field has q = {}",
                self.q,
                field.q()
            )));
        }
        let rows = self
            .generators
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        LinearCode::new(Subfield::new(field, self.field_degree)?, self.length, rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentDescriptor {
    /// Any member of the class; the outer code is read relative to it.
    pub class_member: Vec<u32>,
    pub generators: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QaDescriptor {
    pub q: u64,
    pub group: Vec<u32>,
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    pub constituents: Vec<ConstituentDescriptor>,
}

impl QaDescriptor {
    pub fn decomposition(&self) -> Result<Arc<SemisimpleDecomposition>> {
        let group = AbelianGroup::new(self.group.clone())?;
        Ok(Arc::new(SemisimpleDecomposition::new(
            &group,
            self.q,
            modulus_digits(&self.modulus, self.q)?,
        )?))
    }

    /// Canonical assignment (constituents at class representatives).
    pub fn assignment(&self, d: &SemisimpleDecomposition) -> Result<Assignment> {
        let f = d.field();
        let mut pairs = Vec::new();
        for c in &self.constituents {
            let member = GroupElement(c.class_member.clone());
            let (i, _) = d.resolve_member(&member)?;
            let rows = c
                .generators
                .iter()
                .map(|r| r.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let code = LinearCode::new(d.subfield(i).clone(), self.index, rows).map_err(|e| match e {
                Error::Invalid(msg) => Error::Mismatch(format!(
                    "constituent at {member}: {msg} (class field has degree {})",
                    d.field_degrees()[i]
                )),
                other => other,
            })?;
            pairs.push((member, code));
        }
        assignment_from_members(d, pairs)
    }

    pub fn build(&self) -> Result<QaCode> {
        let d = self.decomposition()?;
        let a = self.assignment(&d)?;
        qa_from_constituents(d, self.index, a)
    }

    pub fn from_assignment(d: &SemisimpleDecomposition, index: usize, assignment: &Assignment) -> Self {
        let f = d.field();
        QaDescriptor {
            q: d.q(),
            group: d.group().factors().to_vec(),
            index,
            modulus: Some(f.modulus_string()),
            constituents: assignment
                .iter()
                .map(|(&i, c)| ConstituentDescriptor {
                    class_member: d.classes()[i].rep.0.clone(),
                    generators: c
                        .generators()
                        .iter()
                        .map(|r| r.iter().map(|&x| f.format(x)).collect())
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_qa(code: &QaCode) -> Self {
        Self::from_assignment(code.decomposition(), code.index(), code.assignment())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHitDescriptor {
    pub params: CodeParams,
    pub weight_distribution: Vec<u64>,
    /// Number of assignments sharing this fingerprint.
    pub assignments: usize,
    /// The first of them in search order.
    pub code: QaDescriptor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub q: u64,
    pub group: Vec<u32>,
    pub index: usize,
    pub d_min: usize,
    #[serde(default)]
    pub dim_target: Option<usize>,
    #[serde(default)]
    pub outer_codes: Option<usize>,
    /// Codes are grouped by (length, dimension, weight distribution). Codes
    /// in different groups are inequivalent; codes in one group may or may not be.
    pub dedup: String,
    pub codes: Vec<SearchHitDescriptor>,
    pub stats: Vec<StageStats>,
}

impl SearchReport {
    pub fn new(spec: &SearchSpec, result: &SearchResult) -> Self {
        let d = &result.decomposition;
        SearchReport {
            q: spec.q,
            group: spec.group.factors().to_vec(),
            index: spec.index,
            d_min: spec.d_min,
            dim_target: spec.dim_target,
            outer_codes: spec.outer_codes,
            dedup: "weight distribution".into(),
            codes: result
                .codes
                .iter()
                .map(|h| SearchHitDescriptor {
                    params: h.params,
                    weight_distribution: h.weight_distribution.clone(),
                    assignments: h.assignments.len(),
                    code: QaDescriptor::from_assignment(d, spec.index, &h.assignments[0]),
                })
                .collect(),
            stats: result.stats.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::QA_27_6_12;

    #[test]
    fn code_roundtrip() {
        let qa = QA_27_6_12.build().unwrap();
        let desc = CodeDescriptor::from_code(qa.flattened());
        let json = serde_json::to_string(&desc).unwrap();
        let back: CodeDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(&back.to_code().unwrap().generators(), &qa.flattened().generators());
    }

    #[test]
    fn qa_roundtrip() {
        let qa = QA_27_6_12.build().unwrap();
        let desc = QaDescriptor::from_qa(&qa);
        let json = serde_json::to_string(&desc).unwrap();
        let back: QaDescriptor = serde_json::from_str(&json).unwrap();
        let rebuilt = back.build().unwrap();
        assert_eq!(rebuilt.flattened(), qa.flattened());
        assert_eq!(rebuilt.assignment(), qa.assignment());
    }

    #[test]
    fn wrong_field_constituent_rejected() {
        let desc = QaDescriptor {
            q: 2,
            group: vec![3, 3],
            index: 1,
            modulus: None,
            constituents: vec![ConstituentDescriptor {
                class_member: vec![0, 0],
                generators: vec![vec!["01".into()]],
            }],
        };
        assert!(matches!(desc.build(), Err(Error::Mismatch(_))));
    }

    #[test]
    fn defaults_for_standalone_code() {
        let json = r#"{"q":2,"field_degree":4,"length":2,"generators":[["1","g^7"]]}"#;
        let desc: CodeDescriptor = serde_json::from_str(json).unwrap();
        let code = desc.to_code().unwrap();
        assert_eq!(code.field().spec().modulus_string(), "11001");
        assert_eq!(code.dimension(), 1);
    }
}
