//! Exhaustive search for QA codes of a fixed index with distance at least `d_min`.
//!
//! Stage 1 concatenates every nonzero outer code of length `ℓ` with the
//! minimal ideal of every class and keeps those meeting `d_min`. Each later
//! stage extends a surviving direct sum by one stage-1 survivor whose class
//! is larger than all classes already used. A direct sum contains each of its
//! summands, so a sum with a failing summand fails too; extending only by
//! survivors therefore reaches every qualifying sum exactly once.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::AbelianGroup;
use crate::concatenation::{simple_concatenation_with, Assignment};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::{
    enumerate_codes, has_weight_below, weight_distribution_with, CodeParams, Distance, LinearCode,
    DEFAULT_ENUMERATION_CAP, DEFAULT_SUBSPACE_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchCaps {
    /// Codewords per distance computation.
    pub enumeration: u64,
    /// Outer codes per class.
    pub subspaces: u64,
    /// Direct sums examined over all stages.
    pub candidates: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            enumeration: DEFAULT_ENUMERATION_CAP,
            subspaces: DEFAULT_SUBSPACE_CAP,
            candidates: 50_000_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub q: u64,
    pub group: AbelianGroup,
    pub index: usize,
    pub d_min: usize,
    /// Report only codes of this dimension; larger sums are not explored.
    pub dim_target: Option<usize>,
    /// Report only direct sums of exactly this many simple concatenations.
    pub outer_codes: Option<usize>,
    pub caps: SearchCaps,
}

impl SearchSpec {
    pub fn new(q: u64, group: AbelianGroup, index: usize, d_min: usize) -> Self {
        SearchSpec {
            q,
            group,
            index,
            d_min,
            dim_target: None,
            outer_codes: None,
            caps: SearchCaps::default(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.d_min == 0 {
            return Err(Error::Invalid("d_min must be at least 1".into()));
        }
        if self.index == 0 {
            return Err(Error::Invalid("index must be positive".into()));
        }
        if self.outer_codes == Some(0) {
            return Err(Error::Invalid("the number of outer codes must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageStats {
    pub stage: usize,
    pub generated: u64,
    pub kept: u64,
}

/// One fingerprint class: every assignment producing these parameters and
/// this weight distribution.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchHit {
    pub params: CodeParams,
    pub weight_distribution: Vec<u64>,
    pub assignments: Vec<Assignment>,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub decomposition: Arc<SemisimpleDecomposition>,
    pub codes: Vec<SearchHit>,
    pub stats: Vec<StageStats>,
}

impl SearchResult {
    pub fn of_dimension(&self, k: usize) -> impl Iterator<Item = &SearchHit> {
        self.codes.iter().filter(move |h| h.params.dimension == k)
    }
}

/// Stage-1 survivors for class `i`: outer codes with their exact concatenated distance.
pub fn stage1_filter(
    d: &SemisimpleDecomposition,
    spec: &SearchSpec,
    i: usize,
    exec: Exec,
) -> Result<Vec<(LinearCode, usize)>> {
    Ok(stage1(d, spec, i, exec)?
        .1
        .into_iter()
        .map(|s| (s.outer, s.distance))
        .collect())
}

struct Single {
    class: usize,
    outer: LinearCode,
    rows: Vec<Vec<crate::algebra::Fe>>,
    distance: usize,
    dimension: usize,
    weight_distribution: Vec<u64>,
}

/// Number of outer codes tried, and the survivors.
fn stage1(d: &SemisimpleDecomposition, spec: &SearchSpec, i: usize, exec: Exec) -> Result<(u64, Vec<Single>)> {
    let k = d.field_degrees()[i] as usize;
    let outers: Vec<LinearCode> = enumerate_codes(d.subfield(i), spec.index, spec.caps.subspaces)
        .map_err(|e| stage_error(e, 1))?
        .filter(|c| c.dimension() > 0)
        .filter(|c| spec.dim_target.is_none_or(|t| k * c.dimension() <= t))
        .collect();
    let checked = exec.map_vec(&outers, |outer| -> Result<Option<Single>> {
        let code = simple_concatenation_with(d, i, outer, Exec::Sequential)?;
        if has_weight_below(&code, spec.d_min, spec.caps.enumeration, Exec::Sequential)? {
            return Ok(None);
        }
        let wd = weight_distribution_with(&code, spec.caps.enumeration, Exec::Sequential)?;
        Ok(Some(Single {
            class: i,
            outer: outer.clone(),
            distance: first_weight(&wd),
            dimension: code.dimension(),
            rows: code.generators().to_vec(),
            weight_distribution: wd,
        }))
    });
    let kept = checked
        .into_iter()
        .filter_map(|r| r.map_err(|e| stage_error(e, 1)).transpose())
        .collect::<Result<_>>()?;
    Ok((outers.len() as u64, kept))
}

fn stage_error(e: Error, stage: usize) -> Error {
    match e {
        Error::CapExceeded { context, cap, required } => Error::CapExceeded {
            context: format!("search stage {stage}: {context}"),
            cap,
            required,
        },
        other => other,
    }
}

fn first_weight(wd: &[u64]) -> usize {
    wd.iter().skip(1).position(|&a| a > 0).map_or(0, |w| w + 1)
}

/// A direct sum of stage-1 survivors, by position in the survivor list.
#[derive(Clone)]
struct Candidate {
    parts: Vec<usize>,
    dimension: usize,
    weight_distribution: Vec<u64>,
}

pub fn search(spec: &SearchSpec) -> Result<SearchResult> {
    search_with(spec, Exec::default())
}

pub fn search_with(spec: &SearchSpec, exec: Exec) -> Result<SearchResult> {
    spec.validate()?;
    let d = Arc::new(SemisimpleDecomposition::new(&spec.group, spec.q, None)?);
    let mut singles = Vec::new();
    let mut generated = 0;
    for i in 0..d.num_classes() {
        let (tried, kept) = stage1(&d, spec, i, exec)?;
        generated += tried;
        singles.extend(kept);
    }
    let mut stats = vec![StageStats {
        stage: 1,
        generated,
        kept: singles.len() as u64,
    }];
    let n = d.group().order() * spec.index;
    let base = d.base_field().clone();

    let mut level: Vec<Candidate> = singles
        .iter()
        .enumerate()
        .map(|(p, s)| Candidate {
            parts: vec![p],
            dimension: s.dimension,
            weight_distribution: s.weight_distribution.clone(),
        })
        .collect();
    let mut found: Vec<Candidate> = level.clone();
    let mut examined = singles.len() as u64;
    let mut stage = 1;
    while !level.is_empty() && spec.outer_codes.is_none_or(|m| stage < m) {
        stage += 1;
        let jobs: Vec<(usize, usize)> = level
            .iter()
            .enumerate()
            .flat_map(|(c, cand)| {
                let last = singles[*cand.parts.last().unwrap()].class;
                let room = spec.dim_target.map(|t| t.saturating_sub(cand.dimension));
                singles
                    .iter()
                    .enumerate()
                    .filter(move |(_, s)| s.class > last && room.is_none_or(|r| s.dimension <= r))
                    .map(move |(p, _)| (c, p))
            })
            .collect();
        examined += jobs.len() as u64;
        if examined > spec.caps.candidates {
            return Err(Error::cap(
                format!("search stage {stage}: direct sums examined"),
                spec.caps.candidates,
                examined as u128,
            ));
        }
        let results = exec.map_vec(&jobs, |&(c, p)| -> Result<Option<Candidate>> {
            let cand = &level[c];
            let rows = cand
                .parts
                .iter()
                .chain(std::iter::once(&p))
                .flat_map(|&x| singles[x].rows.iter().cloned())
                .collect();
            let code = LinearCode::from_rows_unchecked(base.clone(), n, rows);
            if has_weight_below(&code, spec.d_min, spec.caps.enumeration, Exec::Sequential)? {
                return Ok(None);
            }
            let mut parts = cand.parts.clone();
            parts.push(p);
            Ok(Some(Candidate {
                parts,
                dimension: code.dimension(),
                weight_distribution: weight_distribution_with(&code, spec.caps.enumeration, Exec::Sequential)?,
            }))
        });
        let next: Vec<Candidate> = results
            .into_iter()
            .filter_map(|r| r.map_err(|e| stage_error(e, stage)).transpose())
            .collect::<Result<_>>()?;
        stats.push(StageStats {
            stage,
            generated: jobs.len() as u64,
            kept: next.len() as u64,
        });
        found.extend(next.iter().cloned());
        level = next;
    }

    let mut groups: BTreeMap<(usize, Vec<u64>), Vec<Assignment>> = BTreeMap::new();
    for cand in found {
        if spec.dim_target.is_some_and(|t| cand.dimension != t)
            || spec.outer_codes.is_some_and(|m| cand.parts.len() != m)
        {
            continue;
        }
        let assignment: Assignment = cand
            .parts
            .iter()
            .map(|&p| (singles[p].class, singles[p].outer.clone()))
            .collect();
        groups
            .entry((cand.dimension, cand.weight_distribution))
            .or_default()
            .push(assignment);
    }
    let codes = groups
        .into_iter()
        .map(|((dimension, wd), assignments)| SearchHit {
            params: CodeParams {
                length: n,
                dimension,
                distance: Distance::Exact(first_weight(&wd)),
            },
            weight_distribution: wd,
            assignments,
        })
        .collect();
    Ok(SearchResult {
        decomposition: d,
        codes,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3c3() -> AbelianGroup {
        AbelianGroup::new(vec![3, 3]).unwrap()
    }

    #[test]
    fn impossible_distance_gives_nothing() {
        let spec = SearchSpec::new(2, c3c3(), 2, 19);
        let r = search(&spec).unwrap();
        assert!(r.codes.is_empty());
    }

    #[test]
    fn d_min_one_keeps_every_outer_code() {
        let spec = SearchSpec::new(2, c3c3(), 2, 1);
        let d = decompose(&spec);
        for i in 0..d.num_classes() {
            let kept = stage1_filter(&d, &spec, i, Exec::Sequential).unwrap();
            let total = crate::linear_codes::count_codes(2, d.subfield(i).order()) - 1;
            assert_eq!(kept.len() as u128, total);
            assert!(kept.iter().all(|(c, _)| c.dimension() > 0));
        }
    }

    fn decompose(spec: &SearchSpec) -> SemisimpleDecomposition {
        SemisimpleDecomposition::new(&spec.group, spec.q, None).unwrap()
    }

    #[test]
    fn output_sorted_and_distinct() {
        let mut spec = SearchSpec::new(2, c3c3(), 2, 6);
        spec.dim_target = None;
        let r = search(&spec).unwrap();
        let keys: Vec<_> = r
            .codes
            .iter()
            .map(|h| (h.params.dimension, h.weight_distribution.clone()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        assert!(r.codes.iter().all(|h| h.params.distance.value() >= 6));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let spec = SearchSpec::new(2, c3c3(), 2, 4);
        let a = search_with(&spec, Exec::Sequential).unwrap();
        let b = search_with(&spec, Exec::Parallel).unwrap();
        assert_eq!(a.codes, b.codes);
        assert_eq!(a.stats, b.stats);
    }
}
