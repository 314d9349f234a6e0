//! Lower bound `min_v d(𝒞_{i_v}) · d(A_{i_1} ⊕ … ⊕ A_{i_v})` for direct
//! sums of concatenations, with outer codes sorted by distance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linear_codes::{min_distance_with, CodeParams, Distance, LinearCode};

use super::gcc::GccScheme;
use super::QaCode;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundStep {
    /// Class index for QA codes, component index for schemes.
    pub key: usize,
    pub outer_distance: usize,
    /// Distance of the sum of the first `v` inner codes.
    pub inner_distance: usize,
    pub product: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub value: usize,
    pub steps: Vec<BoundStep>,
}

/// `outer` holds `(key, outer distance)`; ties keep key order.
fn bound_core(
    mut outer: Vec<(usize, usize)>,
    mut prefix_distance: impl FnMut(&[usize]) -> Result<usize>,
) -> Result<BoundReport> {
    if outer.is_empty() {
        return Err(Error::ZeroCode);
    }
    outer.sort_by_key(|&(key, d)| (d, key));
    let mut keys = Vec::with_capacity(outer.len());
    let mut steps = Vec::with_capacity(outer.len());
    for &(key, outer_distance) in &outer {
        keys.push(key);
        let inner_distance = prefix_distance(&keys)?;
        steps.push(BoundStep {
            key,
            outer_distance,
            inner_distance,
            product: outer_distance * inner_distance,
        });
    }
    let value = steps.iter().map(|s| s.product).min().unwrap();
    Ok(BoundReport { value, steps })
}

/// Bound for a QA code from its constituents; inner prefix sums are sums of
/// minimal ideals, whose distances are computed exhaustively under `cap`.
pub fn distance_bound(code: &QaCode, cap: u64, exec: Exec) -> Result<BoundReport> {
    let d = code.decomposition();
    let outer = code
        .assignment()
        .iter()
        .map(|(&i, c)| Ok((i, min_distance_with(c, cap, exec)?)))
        .collect::<Result<Vec<_>>>()?;
    bound_core(outer, |classes| {
        min_distance_with(&d.ideal_sum_code(classes)?, cap, exec)
    })
}

pub fn distance_bound_scheme(scheme: &GccScheme, cap: u64, exec: Exec) -> Result<BoundReport> {
    let outer = scheme
        .components()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.outer.dimension() > 0)
        .map(|(k, c)| Ok((k, min_distance_with(&c.outer, cap, exec)?)))
        .collect::<Result<Vec<_>>>()?;
    bound_core(outer, |keys| {
        let rows = keys
            .iter()
            .flat_map(|&k| scheme.components()[k].injection.inner().generators().iter().cloned())
            .collect();
        let inner = LinearCode::from_rows_unchecked(
            scheme.components()[keys[0]].injection.inner().field().clone(),
            scheme.inner_length(),
            rows,
        );
        min_distance_with(&inner, cap, exec)
    })
}

/// Claimed parameters of one inner/outer pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictComponent {
    pub inner_length: usize,
    pub inner_dimension: usize,
    pub outer_length: usize,
    /// Degree over `F_q` of the outer code's field.
    pub outer_field_degree: usize,
    pub outer_dimension: usize,
    pub outer_distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub params: CodeParams,
    pub bound: BoundReport,
}

/// Parameters of `⊕ A_i □ 𝒞_i` from claimed component parameters alone.
/// `prefix_distance` receives component indices in bound order and returns
/// the distance of the sum of those inner codes.
pub fn predict_params(
    components: &[PredictComponent],
    prefix_distance: impl FnMut(&[usize]) -> Result<usize>,
) -> Result<Prediction> {
    let first = components.first().ok_or(Error::ZeroCode)?;
    for c in components {
        if c.outer_field_degree != c.inner_dimension {
            return Err(Error::Mismatch(format!(
                "inner dimension {} does not match the outer field degree {}",
                c.inner_dimension, c.outer_field_degree
            )));
        }
        if c.inner_length != first.inner_length || c.outer_length != first.outer_length {
            return Err(Error::Mismatch("components disagree on inner or outer length".into()));
        }
    }
    let outer = components
        .iter()
        .enumerate()
        .map(|(k, c)| (k, c.outer_distance))
        .collect();
    let bound = bound_core(outer, prefix_distance)?;
    let params = CodeParams {
        length: first.inner_length * first.outer_length,
        dimension: components.iter().map(|c| c.inner_dimension * c.outer_dimension).sum(),
        distance: Distance::AtLeast(bound.value),
    };
    Ok(Prediction { params, bound })
}
