//! Quasi-abelian codes as direct sums of concatenations `R e_i □ 𝔠_i`.
//!
//! A word of `R^ℓ` is flattened to `F_q^{|H|·ℓ}` block by block: block `j`
//! holds the coefficient vector of the `j`-th coordinate in group order.

mod bound;
mod gcc;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{Fe, GroupElement};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::{min_distance_with, CodeParams, Distance, LinearCode};

pub use bound::{
    distance_bound, distance_bound_scheme, predict_params, BoundReport, BoundStep, PredictComponent, Prediction,
};
pub use gcc::{gcc_build, gcc_build_with, GccComponent, GccScheme, Injection};

/// Constituents keyed by class index. Zero codes are never stored.
pub type Assignment = BTreeMap<usize, LinearCode>;

#[derive(Clone, Debug)]
pub struct QaCode {
    decomposition: Arc<SemisimpleDecomposition>,
    index: usize,
    assignment: Assignment,
    flattened: LinearCode,
}

/// Resolve `(member, outer code)` pairs to canonical class indices.
///
/// An outer code given at `q^j · rep` is the constituent `σ^{-j}(𝔠)` at the
/// representative, because `ψ_{q^j rep} = ψ_rep ∘ σ^{-j}`.
pub fn assignment_from_members(
    d: &SemisimpleDecomposition,
    pairs: impl IntoIterator<Item = (GroupElement, LinearCode)>,
) -> Result<Assignment> {
    let mut out = Assignment::new();
    for (member, code) in pairs {
        let (i, j) = d.resolve_member(&member)?;
        if out.contains_key(&i) {
            return Err(Error::Invalid(format!(
                "two constituents given for the class of {}",
                d.classes()[i].rep
            )));
        }
        out.insert(i, code.frobenius(-(j as i64)));
    }
    Ok(out)
}

fn check_constituent(d: &SemisimpleDecomposition, index: usize, i: usize, code: &LinearCode) -> Result<()> {
    if i >= d.num_classes() {
        return Err(Error::Invalid(format!("class index {i} out of range")));
    }
    if code.length() != index {
        return Err(Error::LengthMismatch {
            expected: index,
            found: code.length(),
        });
    }
    if code.field() != d.subfield(i) {
        return Err(Error::Mismatch(format!(
            "constituent at class {} must be linear over the degree-{} field, found degree {}",
            d.classes()[i].rep,
            d.field_degrees()[i],
            code.field().degree()
        )));
    }
    Ok(())
}

/// Flattened rows `(ψ_i(β λ_1) | … | ψ_i(β λ_ℓ))` for every generator `λ` and basis element `β`.
fn concatenation_rows(d: &SemisimpleDecomposition, i: usize, outer: &LinearCode, exec: Exec) -> Vec<Vec<Fe>> {
    let f = d.field();
    let n = d.group().order();
    let jobs: Vec<(usize, Fe)> = (0..outer.dimension())
        .flat_map(|r| d.ideal_basis_data(i).basis.iter().map(move |&b| (r, b)))
        .collect();
    exec.map_vec(&jobs, |&(r, beta)| {
        let mut row = vec![Fe::ZERO; n * outer.length()];
        for (block, &x) in row.chunks_mut(n).zip(&outer.generators()[r]) {
            d.psi_linear(i, f.mul(beta, x), block);
        }
        row
    })
}

/// `⊕_i R e_i □ 𝔠_i`, checked against the dimension formula and module closure.
pub fn qa_from_constituents(d: Arc<SemisimpleDecomposition>, index: usize, assignment: Assignment) -> Result<QaCode> {
    qa_from_constituents_with(d, index, assignment, Exec::default())
}

pub fn qa_from_constituents_with(
    d: Arc<SemisimpleDecomposition>,
    index: usize,
    assignment: Assignment,
    exec: Exec,
) -> Result<QaCode> {
    if index == 0 {
        return Err(Error::Invalid("index must be positive".into()));
    }
    let mut kept = Assignment::new();
    let mut rows = Vec::new();
    let mut expected = 0;
    for (i, code) in assignment {
        check_constituent(&d, index, i, &code)?;
        if code.dimension() == 0 {
            continue;
        }
        rows.extend(concatenation_rows(&d, i, &code, exec));
        expected += d.field_degrees()[i] as usize * code.dimension();
        kept.insert(i, code);
    }
    let n = d.group().order() * index;
    let flattened = LinearCode::new(d.base_field().clone(), n, rows)?;
    if flattened.dimension() != expected {
        return Err(Error::Invariant(format!(
            "flattened dimension {} differs from the constituent count {expected}",
            flattened.dimension()
        )));
    }
    if !is_qa_in(&d, &flattened)? {
        return Err(Error::Invariant("constructed code is not an F_q[H]-module".into()));
    }
    Ok(QaCode {
        decomposition: d,
        index,
        assignment: kept,
        flattened,
    })
}

/// `R e_i □ 𝒞` as a flattened code.
pub fn simple_concatenation(d: &SemisimpleDecomposition, i: usize, outer: &LinearCode) -> Result<LinearCode> {
    simple_concatenation_with(d, i, outer, Exec::default())
}

pub(crate) fn simple_concatenation_with(
    d: &SemisimpleDecomposition,
    i: usize,
    outer: &LinearCode,
    exec: Exec,
) -> Result<LinearCode> {
    check_constituent(d, outer.length(), i, outer)?;
    let rows = concatenation_rows(d, i, outer, exec);
    Ok(LinearCode::from_rows_unchecked(
        d.base_field().clone(),
        d.group().order() * outer.length(),
        rows,
    ))
}

/// Whether a code of length `|H|·ℓ` is closed under blockwise translation.
/// Translations by the generators of the cyclic factors suffice.
pub fn is_qa(d: &SemisimpleDecomposition, code: &LinearCode) -> Result<bool> {
    is_qa_in(d, code)
}

fn is_qa_in(d: &SemisimpleDecomposition, code: &LinearCode) -> Result<bool> {
    let n = d.group().order();
    if !code.length().is_multiple_of(n) {
        return Err(Error::Mismatch(format!(
            "length {} is not a multiple of |H| = {n}",
            code.length()
        )));
    }
    let shifts: Vec<usize> = (0..d.group().factors().len())
        .map(|k| d.group().factor_generator(k))
        .filter(|&g| g != 0)
        .collect();
    let ga = d.algebra();
    Ok(code.generators().iter().all(|row| {
        shifts.iter().all(|&h| {
            let moved: Vec<Fe> = row.chunks(n).flat_map(|b| ga.translate(b, h)).collect();
            code.contains(&moved)
        })
    }))
}

/// `𝔠_i = { (φ_i(c_1 e_i), …, φ_i(c_ℓ e_i)) : c ∈ C }` for every class with
/// a nonzero constituent. Refuses codes that are not `F_q[H]`-modules.
pub fn constituents_of(d: &SemisimpleDecomposition, index: usize, code: &LinearCode) -> Result<Assignment> {
    let n = d.group().order();
    if code.length() != n * index {
        return Err(Error::LengthMismatch {
            expected: n * index,
            found: code.length(),
        });
    }
    if code.field() != d.base_field() {
        return Err(Error::Mismatch(
            "code must be linear over F_q of the decomposition".into(),
        ));
    }
    if !is_qa_in(d, code)? {
        return Err(Error::NotQuasiAbelian);
    }
    let mut out = Assignment::new();
    for i in 0..d.num_classes() {
        let rows: Vec<Vec<Fe>> = code
            .generators()
            .iter()
            .map(|row| row.chunks(n).map(|b| d.phi_coeffs(i, b)).collect())
            .collect();
        let c = LinearCode::new(d.subfield(i).clone(), index, rows)?;
        if c.dimension() > 0 {
            out.insert(i, c);
        }
    }
    Ok(out)
}

impl QaCode {
    pub fn decomposition(&self) -> &Arc<SemisimpleDecomposition> {
        &self.decomposition
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn flattened(&self) -> &LinearCode {
        &self.flattened
    }

    pub fn length(&self) -> usize {
        self.flattened.length()
    }

    pub fn dimension(&self) -> usize {
        self.flattened.dimension()
    }

    /// Exact parameters when the code has at most `cap` codewords, otherwise
    /// the concatenation bound.
    pub fn params(&self, cap: u64, exec: Exec) -> Result<CodeParams> {
        let distance = if self.dimension() == 0 {
            Distance::Exact(0)
        } else if self.flattened.size() <= cap as u128 {
            Distance::Exact(min_distance_with(&self.flattened, cap, exec)?)
        } else {
            Distance::AtLeast(distance_bound(self, cap, exec)?.value)
        };
        Ok(CodeParams {
            length: self.length(),
            dimension: self.dimension(),
            distance,
        })
    }

    /// `C·Θ_i`: every block multiplied by `e_i`, as a flattened code.
    pub fn project(&self, i: usize) -> Result<LinearCode> {
        let d = &self.decomposition;
        let n = d.group().order();
        let e = d.idempotent(i).coeffs();
        let rows = self
            .flattened
            .generators()
            .iter()
            .map(|row| row.chunks(n).flat_map(|b| d.algebra().convolve(b, e)).collect())
            .collect();
        Ok(LinearCode::from_rows_unchecked(
            d.base_field().clone(),
            self.length(),
            rows,
        ))
    }
}
