//! Reference instances: three optimal binary QA codes, and two long codes
//! whose parameters follow from the concatenation bound alone.
//!
//! Outer generators are written as generator powers `g^k` of the splitting
//! field (`g⁴ = g + 1` in `F_16`, `g² = g + 1` in `F_4`). A constituent may be
//! attached to any member of its class.

use std::sync::Arc;

use crate::algebra::{AbelianGroup, GroupElement};
use crate::concatenation::{assignment_from_members, qa_from_constituents, PredictComponent, QaCode};
use crate::error::Result;
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::LinearCode;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: &'static str,
    pub q: u64,
    pub group: &'static [u32],
    pub index: usize,
    pub constituents: &'static [(&'static [u32], &'static [&'static [&'static str]])],
    /// `(length, dimension, distance)`.
    pub params: (usize, usize, usize),
    pub bound: usize,
}

pub const QA_50_12_18: Instance = Instance {
    name: "qa-50-12-18",
    q: 2,
    group: &[5, 5],
    index: 2,
    constituents: &[
        (&[1, 0], &[&["1", "g^7"]]),
        (&[1, 1], &[&["1", "g^7"]]),
        (&[2, 4], &[&["1", "g^12"]]),
    ],
    params: (50, 12, 18),
    bound: 12,
};

pub const QA_27_6_12: Instance = Instance {
    name: "qa-27-6-12",
    q: 2,
    group: &[3, 3],
    index: 3,
    constituents: &[
        (&[2, 2], &[&["1", "0", "1"], &["0", "1", "g"]]),
        (&[1, 0], &[&["1", "g", "1"]]),
    ],
    params: (27, 6, 12),
    bound: 12,
};

pub const QA_36_6_16: Instance = Instance {
    name: "qa-36-6-16",
    q: 2,
    group: &[3, 3],
    index: 4,
    constituents: &[
        (&[2, 2], &[&["1", "0", "g^2", "g"], &["0", "1", "1", "g"]]),
        (&[1, 0], &[&["1", "g", "g", "g"]]),
    ],
    params: (36, 6, 16),
    bound: 16,
};

pub const INSTANCES: [Instance; 3] = [QA_50_12_18, QA_27_6_12, QA_36_6_16];

impl Instance {
    pub fn decomposition(&self) -> Result<Arc<SemisimpleDecomposition>> {
        let group = AbelianGroup::new(self.group.to_vec())?;
        Ok(Arc::new(SemisimpleDecomposition::new(&group, self.q, None)?))
    }

    pub fn build(&self) -> Result<QaCode> {
        self.build_in(self.decomposition()?)
    }

    pub fn build_in(&self, d: Arc<SemisimpleDecomposition>) -> Result<QaCode> {
        let f = d.field().clone();
        let mut pairs = Vec::new();
        for (member, rows) in self.constituents {
            let member = GroupElement(member.to_vec());
            let (i, _) = d.resolve_member(&member)?;
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            pairs.push((member, LinearCode::new(d.subfield(i).clone(), self.index, rows)?));
        }
        let assignment = assignment_from_members(&d, pairs)?;
        qa_from_constituents(d, self.index, assignment)
    }
}

/// A long code known only through claimed outer parameters.
#[derive(Clone, Debug)]
pub struct LongInstance {
    pub name: &'static str,
    pub q: u64,
    pub group: &'static [u32],
    pub members: &'static [&'static [u32]],
    /// `(N, K, d)` of every outer code, over the degree-`k_i` extension.
    pub outer: (usize, usize, usize),
    pub params: (usize, usize, usize),
}

pub const LONG_BINARY: LongInstance = LongInstance {
    name: "qa-6400-3216",
    q: 2,
    group: &[5, 5],
    members: &[&[1, 0], &[0, 1], &[1, 1], &[1, 2]],
    outer: (256, 201, 12),
    params: (6400, 3216, 48),
};

pub const LONG_TERNARY: LongInstance = LongInstance {
    name: "qa-164025-81216",
    q: 3,
    group: &[5, 5],
    members: &[&[1, 0], &[1, 1], &[0, 1], &[1, 2]],
    outer: (6561, 5076, 55),
    params: (164025, 81216, 220),
};

pub const LONG_INSTANCES: [LongInstance; 2] = [LONG_BINARY, LONG_TERNARY];

impl LongInstance {
    pub fn decomposition(&self) -> Result<SemisimpleDecomposition> {
        let group = AbelianGroup::new(self.group.to_vec())?;
        SemisimpleDecomposition::new(&group, self.q, None)
    }

    /// Class indices of the listed members, in listing order.
    pub fn classes(&self, d: &SemisimpleDecomposition) -> Result<Vec<usize>> {
        self.members
            .iter()
            .map(|m| Ok(d.resolve_member(&GroupElement(m.to_vec()))?.0))
            .collect()
    }

    pub fn components(&self, d: &SemisimpleDecomposition) -> Result<Vec<PredictComponent>> {
        let (n_out, k_out, d_out) = self.outer;
        self.classes(d)?
            .into_iter()
            .map(|i| {
                let k = d.field_degrees()[i] as usize;
                Ok(PredictComponent {
                    inner_length: d.group().order(),
                    inner_dimension: k,
                    outer_length: n_out,
                    outer_field_degree: k,
                    outer_dimension: k_out,
                    outer_distance: d_out,
                })
            })
            .collect()
    }
}
