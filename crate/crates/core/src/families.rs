//! Families `E_i = F_q[H] e_0 □ F_i` over `H = C_p × C_p` with outer codes
//! over `F_q` itself. Each member has length `p² n_i`, dimension `k_i` and
//! distance at least `d(F_q[H] e_0) · d_i`; it is LCD when `F_i` is.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::AbelianGroup;
use crate::concatenation::{qa_from_constituents, Assignment, QaCode};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::{enumerate_codes, min_distance_with, CodeParams, Distance, LinearCode};

#[derive(Clone, Debug)]
pub struct FamilySpec {
    decomposition: Arc<SemisimpleDecomposition>,
    p: u32,
    outer_codes: Vec<LinearCode>,
    lcd_required: bool,
}

/// Decomposition of `F_q[C_p × C_p]`; outer codes must be built over its base field.
pub fn family_decomposition(q: u64, p: u32) -> Result<Arc<SemisimpleDecomposition>> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Invalid(format!("{p} is not a prime")));
    }
    let group = AbelianGroup::new(vec![p, p])?;
    Ok(Arc::new(SemisimpleDecomposition::new(&group, q, None)?))
}

impl FamilySpec {
    pub fn new(
        decomposition: Arc<SemisimpleDecomposition>,
        outer_codes: Vec<LinearCode>,
        lcd_required: bool,
    ) -> Result<Self> {
        let factors = decomposition.group().factors();
        if factors.len() != 2 || factors[0] != factors[1] || factors[0] < 2 {
            return Err(Error::InvalidGroup(format!(
                "families live over C_p x C_p, got {}",
                decomposition.group()
            )));
        }
        for c in &outer_codes {
            if c.field() != decomposition.base_field() {
                return Err(Error::Mismatch("outer codes must be linear over F_q".into()));
            }
            if lcd_required && !c.is_lcd() {
                return Err(Error::Invalid(format!(
                    "outer code of length {} and dimension {} is not LCD",
                    c.length(),
                    c.dimension()
                )));
            }
        }
        Ok(FamilySpec {
            p: factors[0],
            decomposition,
            outer_codes,
            lcd_required,
        })
    }

    pub fn decomposition(&self) -> &Arc<SemisimpleDecomposition> {
        &self.decomposition
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn outer_codes(&self) -> &[LinearCode] {
        &self.outer_codes
    }

    pub fn lcd_required(&self) -> bool {
        self.lcd_required
    }
}

#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub i: usize,
    pub code: QaCode,
    pub params: CodeParams,
    /// `d(F_q[H] e_0) · d(F_i)`; zero for a zero outer code.
    pub bound: usize,
    pub ideal_distance: usize,
    pub lcd: bool,
}

pub fn family_member(spec: &FamilySpec, i: usize, cap: u64, exec: Exec) -> Result<FamilyMember> {
    let outer = spec
        .outer_codes
        .get(i)
        .ok_or_else(|| Error::Invalid(format!("family has no member {i}")))?;
    let d = spec.decomposition.clone();
    let ideal_distance = min_distance_with(&d.minimal_ideal_code(0)?, cap, exec)?;
    let mut assignment = Assignment::new();
    assignment.insert(0, outer.clone());
    let code = qa_from_constituents(d, outer.length(), assignment)?;
    let bound = if outer.dimension() == 0 {
        0
    } else {
        ideal_distance * min_distance_with(outer, cap, exec)?
    };
    let distance = if code.dimension() == 0 {
        Distance::Exact(0)
    } else if code.flattened().size() <= cap as u128 {
        Distance::Exact(min_distance_with(code.flattened(), cap, exec)?)
    } else {
        Distance::AtLeast(bound)
    };
    let params = CodeParams {
        length: code.length(),
        dimension: code.dimension(),
        distance,
    };
    let lcd = verify_lcd_member(&code);
    Ok(FamilyMember {
        i,
        code,
        params,
        bound,
        ideal_distance,
        lcd,
    })
}

/// Hull of the flattened code is zero.
pub fn verify_lcd_member(member: &QaCode) -> bool {
    member.flattened().is_lcd()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub i: usize,
    pub n_i: usize,
    pub length: usize,
    pub dim: usize,
    pub distance: Distance,
    pub rate: f64,
    pub rel_distance: f64,
    pub lcd: bool,
}

pub fn family_report(spec: &FamilySpec, cap: u64, exec: Exec) -> Result<Vec<FamilyRow>> {
    let idx: Vec<usize> = (0..spec.outer_codes.len()).collect();
    exec.map_vec(&idx, |&i| family_member(spec, i, cap, Exec::Sequential))
        .into_iter()
        .map(|m| {
            let m = m?;
            let length = m.params.length as f64;
            Ok(FamilyRow {
                i: m.i,
                n_i: spec.outer_codes[m.i].length(),
                length: m.params.length,
                dim: m.params.dimension,
                distance: m.params.distance,
                rate: m.params.dimension as f64 / length,
                rel_distance: m.params.distance.value() as f64 / length,
                lcd: m.lcd,
            })
        })
        .collect()
}

/// Every nonzero LCD code over `F_q` of length `1..=max_length`, in
/// enumeration order.
pub fn builtin_lcd_outer_codes(d: &SemisimpleDecomposition, max_length: usize, cap: u64) -> Result<Vec<LinearCode>> {
    let mut out = Vec::new();
    for n in 1..=max_length {
        out.extend(enumerate_codes(d.base_field(), n, cap)?.filter(|c| c.dimension() > 0 && c.is_lcd()));
    }
    Ok(out)
}
