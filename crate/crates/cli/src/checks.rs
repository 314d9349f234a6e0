//! Reference reproductions and the algebraic identity suites.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qacodes::algebra::{AbelianGroup, Fe, GroupAlgebraElement};
use qacodes::catalog::{INSTANCES, LONG_INSTANCES};
use qacodes::concatenation::{distance_bound, predict_params, simple_concatenation};
use qacodes::idempotents::SemisimpleDecomposition;
use qacodes::linear_codes::{min_distance_with, CodeParams, Distance};
use qacodes::search::{search_with, SearchSpec};
use qacodes::{Exec, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Enough codewords for every prefix sum of the ternary inner ideals (3^16).
const LONG_CAP: u64 = 1 << 26;
const CAP: u64 = 1 << 24;

#[derive(Debug)]
pub struct Failed(pub usize);

impl fmt::Display for Failed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} check(s) failed", self.0)
    }
}

impl std::error::Error for Failed {}

#[derive(Debug, Serialize)]
pub struct Line {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn line(name: impl Into<String>, outcome: Result<(bool, String)>) -> Line {
    let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    Line {
        name: name.into(),
        pass,
        detail,
    }
}

pub fn verify_all(seed: u64, samples: usize, exec: Exec) -> Vec<Line> {
    let mut out = Vec::new();
    for inst in INSTANCES {
        out.push(line(inst.name, instance(&inst, exec)));
    }
    for inst in LONG_INSTANCES {
        out.push(line(inst.name, long_instance(&inst, exec)));
    }
    out.push(line("inner ideals of F_2[C5 x C5]", inner_ideals(exec)));
    out.push(line("search F_2[C3 x C3], index 3", search_regression(3, 12, exec)));
    out.push(line("search F_2[C3 x C3], index 4", search_regression(4, 16, exec)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (q, group) in [
        (2, vec![5, 5]),
        (2, vec![3, 3]),
        (3, vec![2, 2]),
        (4, vec![3, 3]),
        (3, vec![5]),
    ] {
        let name = format!(
            "identities F_{q}[{}]",
            AbelianGroup::new(group.clone())
                .map(|g| g.to_string())
                .unwrap_or_default()
        );
        out.push(line(name, identities(q, &group, samples, &mut rng)));
    }
    out
}

fn instance(inst: &qacodes::catalog::Instance, exec: Exec) -> Result<(bool, String)> {
    let qa = inst.build()?;
    let params = qa.params(CAP, exec)?;
    let bound = distance_bound(&qa, CAP, exec)?.value;
    let (n, k, d) = inst.params;
    let expected = CodeParams {
        length: n,
        dimension: k,
        distance: Distance::Exact(d),
    };
    Ok((
        params == expected && bound == inst.bound,
        format!("{params}, bound {bound} (expected {expected}, bound {})", inst.bound),
    ))
}

fn long_instance(inst: &qacodes::catalog::LongInstance, exec: Exec) -> Result<(bool, String)> {
    let d = inst.decomposition()?;
    let classes = inst.classes(&d)?;
    let components = inst.components(&d)?;
    let prediction = predict_params(&components, |keys| {
        let picked: Vec<usize> = keys.iter().map(|&k| classes[k]).collect();
        min_distance_with(&d.ideal_sum_code(&picked)?, LONG_CAP, exec)
    })?;
    let (n, k, dist) = inst.params;
    let p = prediction.params;
    Ok((
        p.length == n && p.dimension == k && p.distance == Distance::AtLeast(dist),
        format!("{p} (expected [{n}, {k}, >= {dist}])"),
    ))
}

fn inner_ideals(exec: Exec) -> Result<(bool, String)> {
    let d = qacodes::catalog::LONG_BINARY.decomposition()?;
    let classes = qacodes::catalog::LONG_BINARY.classes(&d)?;
    let mut single = Vec::new();
    for &i in &classes {
        let c = d.minimal_ideal_code(i)?;
        single.push((c.length(), c.dimension(), min_distance_with(&c, CAP, exec)?));
    }
    let sum = min_distance_with(&d.ideal_sum_code(&classes)?, CAP, exec)?;
    let pass = single.iter().all(|&p| p == (25, 4, 10)) && sum == 4;
    Ok((pass, format!("ideals {single:?}, sum distance {sum}")))
}

fn search_regression(index: usize, d_min: usize, exec: Exec) -> Result<(bool, String)> {
    let mut spec = SearchSpec::new(2, AbelianGroup::new(vec![3, 3])?, index, d_min);
    spec.dim_target = Some(6);
    spec.outer_codes = Some(2);
    let start = Instant::now();
    let result = search_with(&spec, exec)?;
    let hits = result.of_dimension(6).count();
    Ok((
        hits == 1,
        format!(
            "{hits} weight distribution(s) of [{}, 6, >= {d_min}] with two outer codes in {:.1?}",
            9 * index,
            start.elapsed()
        ),
    ))
}

fn random_element<R: Rng>(d: &SemisimpleDecomposition, rng: &mut R) -> GroupAlgebraElement {
    let elems = d.base_field().elements();
    let coeffs = (0..d.group().order())
        .map(|_| elems[rng.gen_range(0..elems.len())])
        .collect();
    GroupAlgebraElement::from_coeffs(coeffs)
}

/// Idempotent, isomorphism and projection identities on bases and random samples.
fn identities<R: Rng>(q: u64, group: &[u32], samples: usize, rng: &mut R) -> Result<(bool, String)> {
    let g = AbelianGroup::new(group.to_vec())?;
    let d = SemisimpleDecomposition::new(&g, q, None)?;
    let a = d.algebra();
    let f = d.field().clone();
    let mut failures = Vec::new();
    let mut fail = |what: String| failures.push(what);

    let mut total = a.zero();
    for i in 0..d.num_classes() {
        let e = d.idempotent(i);
        total = a.add(&total, e)?;
        if &a.mul(e, e)? != e {
            fail(format!("e_{i}^2 != e_{i}"));
        }
        for j in i + 1..d.num_classes() {
            if !a.mul(e, d.idempotent(j))?.is_zero() {
                fail(format!("e_{i} e_{j} != 0"));
            }
        }
        let ideal = d.minimal_ideal_code(i)?;
        if ideal.dimension() != d.classes()[i].size() {
            fail(format!(
                "dim R e_{i} = {} but |S_{i}| = {}",
                ideal.dimension(),
                d.classes()[i].size()
            ));
        }
        if d.phi(i, e)? != Fe::ONE {
            fail(format!("phi_{i}(e_{i}) != 1"));
        }

        let sub = d.subfield(i).elements();
        for &delta in sub {
            if d.phi(i, &d.psi(i, delta)?)? != delta {
                fail(format!("phi_{i}(psi_{i}(delta)) != delta"));
                break;
            }
        }
        for _ in 0..samples {
            let r = a.mul(&random_element(&d, rng), e)?;
            let s = a.mul(&random_element(&d, rng), e)?;
            let (pr, ps) = (d.phi(i, &r)?, d.phi(i, &s)?);
            if d.psi(i, pr)? != r {
                fail(format!("psi_{i}(phi_{i}(r)) != r"));
            }
            if d.phi(i, &a.mul(&r, &s)?)? != f.mul(pr, ps) || d.phi(i, &a.add(&r, &s)?)? != f.add(pr, ps) {
                fail(format!("phi_{i} is not a ring homomorphism"));
            }
            let x = rng.gen_range(0..d.group().order());
            let shifted = a.mul(&a.monomial(x), &r)?;
            let chi = d.phi(i, &a.mul(&a.monomial(x), e)?)?;
            if d.phi(i, &shifted)? != f.mul(chi, pr) {
                fail(format!("phi_{i}(Y^x r) != chi_{i}(x) phi_{i}(r)"));
            }
        }
    }
    if total != a.one() {
        fail("sum of idempotents != 1".into());
    }

    // Projections by Θ_i recover the simple concatenations of a random QA code.
    let index = 3;
    let mut assignment = qacodes::concatenation::Assignment::new();
    for i in 0..d.num_classes() {
        if rng.gen_bool(0.5) {
            let sub = d.subfield(i);
            let rows = vec![(0..index)
                .map(|_| sub.elements()[rng.gen_range(0..sub.elements().len())])
                .collect()];
            assignment.insert(i, qacodes::linear_codes::LinearCode::new(sub.clone(), index, rows)?);
        }
    }
    let dim: usize = assignment
        .iter()
        .map(|(&i, c)| c.dimension() * d.field_degrees()[i] as usize)
        .sum();
    let d = std::sync::Arc::new(d);
    let qa = qacodes::concatenation::qa_from_constituents(d.clone(), index, assignment.clone())?;
    if qa.dimension() != dim {
        fail(format!("dim C = {} but the constituents give {dim}", qa.dimension()));
    }
    for i in 0..d.num_classes() {
        let projected = qa.project(i)?;
        let expected = match assignment.get(&i) {
            Some(c) => simple_concatenation(&d, i, c)?,
            None => qacodes::linear_codes::LinearCode::zero(d.base_field().clone(), index * d.group().order()),
        };
        if projected != expected {
            fail(format!("C Theta_{i} != R e_{i} concatenated with C_{i}"));
        }
    }

    failures.dedup();
    let pass = failures.is_empty();
    let detail = if pass {
        format!("{} classes, {samples} samples each", d.num_classes())
    } else {
        failures.join("; ")
    };
    Ok((pass, detail))
}
