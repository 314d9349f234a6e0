//! Generalized concatenated codes `⊕_i A_i □ 𝒞_i`.

use std::sync::Arc;

use crate::algebra::{Fe, FieldSpec, Subfield};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::idempotents::SemisimpleDecomposition;
use crate::linear_codes::{matrix, LinearCode};

use super::Assignment;

/// An `F_q`-linear bijection `π: F_{q^k} → A` fixed by a basis `β_j` of
/// `F_{q^k}` and the images `π(β_j)`. Evaluated as
/// `π(δ) = Σ_j Tr(δ β*_j) π(β_j)` with the trace-dual basis `β*`.
#[derive(Clone, Debug)]
pub struct Injection {
    inner: LinearCode,
    degree: u32,
    basis: Vec<Fe>,
    dual: Vec<Fe>,
    images: Vec<Vec<Fe>>,
}

impl Injection {
    pub fn new(inner: LinearCode, basis: Vec<Fe>, images: Vec<Vec<Fe>>) -> Result<Self> {
        let f = inner.field().spec().clone();
        let k = inner.dimension();
        let degree = k as u32;
        if basis.len() != k || images.len() != k {
            return Err(Error::Mismatch(format!(
                "injection for an inner code of dimension {k} needs {k} basis elements and images"
            )));
        }
        if k == 0 || !f.tower_degree().is_multiple_of(degree) {
            return Err(Error::Mismatch(format!(
                "inner dimension {k} is not the degree of a subfield of K"
            )));
        }
        if basis.iter().any(|&b| !f.in_subfield(b, degree)) {
            return Err(Error::NotInSubfield { degree });
        }
        let gram: Vec<Vec<Fe>> = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| f.trace_unchecked(f.mul(a, b), degree)).collect())
            .collect();
        let inv = matrix::inverse(&f, &gram)
            .ok_or_else(|| Error::Invalid("injection basis is not a basis of the extension".into()))?;
        let dual = (0..k)
            .map(|j| {
                basis
                    .iter()
                    .enumerate()
                    .fold(Fe::ZERO, |acc, (l, &b)| f.add(acc, f.mul(inv[l][j], b)))
            })
            .collect();
        if matrix::rank(&f, &images) != k || images.iter().any(|r| !inner.contains(r)) {
            return Err(Error::Invalid(
                "injection images must be a basis of the inner code".into(),
            ));
        }
        Ok(Injection {
            inner,
            degree,
            basis,
            dual,
            images,
        })
    }

    /// Power basis of the canonical generator of `F_{q^k}` onto the RREF rows of `A`.
    pub fn standard(inner: LinearCode) -> Result<Self> {
        let f = inner.field().spec().clone();
        let k = inner.dimension() as u32;
        let g = f.subfield_generator(k)?;
        let basis = (0..k as u64).map(|j| f.pow(g, j)).collect();
        let images = inner.generators().to_vec();
        Self::new(inner, basis, images)
    }

    /// `ψ_i` restricted to the basis used by `minimal_ideal_code`.
    pub fn from_ideal(d: &SemisimpleDecomposition, i: usize) -> Result<Self> {
        let b = d.ideal_basis_data(i);
        Self::new(d.minimal_ideal_code(i)?, b.basis.clone(), b.images.clone())
    }

    pub fn inner(&self) -> &LinearCode {
        &self.inner
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> &[Fe] {
        &self.basis
    }

    pub fn apply(&self, f: &FieldSpec, delta: Fe, out: &mut [Fe]) {
        out.iter_mut().for_each(|x| *x = Fe::ZERO);
        if delta.is_zero() {
            return;
        }
        for (&dual, image) in self.dual.iter().zip(&self.images) {
            let c = f.trace_unchecked(f.mul(delta, dual), self.degree);
            if c.is_zero() {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(image) {
                *o = f.add(*o, f.mul(c, y));
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct GccComponent {
    pub injection: Injection,
    pub outer: LinearCode,
}

/// Inner codes `A_i` with trivially intersecting sum, each paired with an
/// outer code over `F_{q^{dim A_i}}`.
#[derive(Clone, Debug)]
pub struct GccScheme {
    field: Arc<FieldSpec>,
    inner_length: usize,
    outer_length: usize,
    components: Vec<GccComponent>,
}

impl GccScheme {
    pub fn new(components: Vec<GccComponent>) -> Result<Self> {
        let first = components
            .first()
            .ok_or_else(|| Error::Invalid("a scheme needs at least one component".into()))?;
        let field = first.injection.inner.field().spec().clone();
        let inner_length = first.injection.inner.length();
        let outer_length = first.outer.length();
        for c in &components {
            let a = &c.injection.inner;
            if a.field().degree() != 1 || **a.field().spec() != *field {
                return Err(Error::Mismatch(
                    "inner codes must be linear over F_q of one tower".into(),
                ));
            }
            if a.length() != inner_length {
                return Err(Error::LengthMismatch {
                    expected: inner_length,
                    found: a.length(),
                });
            }
            if c.outer.length() != outer_length {
                return Err(Error::LengthMismatch {
                    expected: outer_length,
                    found: c.outer.length(),
                });
            }
            if c.outer.field().degree() != c.injection.degree || **c.outer.field().spec() != *field {
                return Err(Error::Mismatch(format!(
                    "outer code over the degree-{} field paired with an inner code of dimension {}",
                    c.outer.field().degree(),
                    c.injection.degree
                )));
            }
        }
        let rows: Vec<Vec<Fe>> = components
            .iter()
            .flat_map(|c| c.injection.inner.generators().iter().cloned())
            .collect();
        let total: usize = components.iter().map(|c| c.injection.inner.dimension()).sum();
        if matrix::rank(&field, &rows) != total {
            return Err(Error::InnerSumNotDirect);
        }
        Ok(GccScheme {
            field,
            inner_length,
            outer_length,
            components,
        })
    }

    /// Pair standard injections of `inners` with `outers`.
    pub fn standard(pairs: Vec<(LinearCode, LinearCode)>) -> Result<Self> {
        let components = pairs
            .into_iter()
            .map(|(a, c)| {
                Ok(GccComponent {
                    injection: Injection::standard(a)?,
                    outer: c,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    /// The QA code of an assignment, seen as a GCC with the minimal ideals as inner codes.
    pub fn from_decomposition(d: &SemisimpleDecomposition, assignment: &Assignment) -> Result<Self> {
        let components = assignment
            .iter()
            .filter(|(_, c)| c.dimension() > 0)
            .map(|(&i, c)| {
                Ok(GccComponent {
                    injection: Injection::from_ideal(d, i)?,
                    outer: c.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn components(&self) -> &[GccComponent] {
        &self.components
    }

    pub fn inner_length(&self) -> usize {
        self.inner_length
    }

    pub fn outer_length(&self) -> usize {
        self.outer_length
    }

    pub fn length(&self) -> usize {
        self.inner_length * self.outer_length
    }

    /// `Σ k_i K_i`.
    pub fn dimension(&self) -> usize {
        self.components
            .iter()
            .map(|c| c.injection.inner.dimension() * c.outer.dimension())
            .sum()
    }
}

/// `⊕_i A_i □ 𝒞_i`: block `j` of a codeword is `Σ_i π_i(c_{i,j})`.
pub fn gcc_build(scheme: &GccScheme) -> Result<LinearCode> {
    gcc_build_with(scheme, Exec::default())
}

pub fn gcc_build_with(scheme: &GccScheme, exec: Exec) -> Result<LinearCode> {
    let f = &scheme.field;
    let n = scheme.inner_length;
    let jobs: Vec<(usize, usize, Fe)> = scheme
        .components
        .iter()
        .enumerate()
        .flat_map(|(ci, c)| {
            (0..c.outer.dimension()).flat_map(move |r| c.injection.basis.iter().map(move |&b| (ci, r, b)))
        })
        .collect();
    let rows = exec.map_vec(&jobs, |&(ci, r, beta)| {
        let c = &scheme.components[ci];
        let mut row = vec![Fe::ZERO; scheme.length()];
        for (block, &x) in row.chunks_mut(n).zip(&c.outer.generators()[r]) {
            c.injection.apply(f, f.mul(beta, x), block);
        }
        row
    });
    let code = LinearCode::from_rows_unchecked(Subfield::base(f.clone()), scheme.length(), rows);
    if code.dimension() != scheme.dimension() {
        return Err(Error::Invariant(format!(
            "generalized concatenation has dimension {}, expected {}",
            code.dimension(),
            scheme.dimension()
        )));
    }
    Ok(code)
}
