//! Linear codes over any field of the tower: canonical generator matrices,
//! duals, hulls, exhaustive distance computations and the enumeration of all
//! codes of a given length.

pub(crate) mod matrix;
mod subspaces;
mod weights;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, Subfield};
use crate::error::{Error, Result};

pub use subspaces::{count_codes, enumerate_codes, gaussian_binomial, CodeEnumerator, DEFAULT_SUBSPACE_CAP};
pub use weights::{
    codewords, first_min_weight_codeword, has_weight_below, min_distance, min_distance_with, weight_distribution,
    weight_distribution_with, MinWeightWord, DEFAULT_ENUMERATION_CAP,
};

/// A linear code held by its generator matrix in reduced row echelon form.
/// Two equal codes have identical generator matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    field: Subfield,
    length: usize,
    gens: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Span of `rows` over `field`. Entries must lie in the subfield.
    pub fn new(field: Subfield, length: usize, rows: Vec<Vec<Fe>>) -> Result<Self> {
        for row in &rows {
            if row.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: row.len(),
                });
            }
            if let Some(&x) = row.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::Invalid(format!(
                    "entry {} is not in the subfield of degree {}",
                    field.spec().format(x),
                    field.degree()
                )));
            }
        }
        Ok(Self::from_rows_unchecked(field, length, rows))
    }

    pub(crate) fn from_rows_unchecked(field: Subfield, length: usize, mut rows: Vec<Vec<Fe>>) -> Self {
        let pivots = matrix::rref(field.spec(), &mut rows);
        LinearCode {
            field,
            length,
            gens: rows,
            pivots,
        }
    }

    pub fn zero(field: Subfield, length: usize) -> Self {
        LinearCode {
            field,
            length,
            gens: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Subfield, length: usize) -> Self {
        let rows = (0..length)
            .map(|i| (0..length).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }).collect())
            .collect();
        Self::from_rows_unchecked(field, length, rows)
    }

    pub fn field(&self) -> &Subfield {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[Vec<Fe>] {
        &self.gens
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `|field|^dimension` (saturating).
    pub fn size(&self) -> u128 {
        (self.field.order() as u128).saturating_pow(self.dimension() as u32)
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        v.len() == self.length
            && matrix::reduce(self.field.spec(), &self.gens, &self.pivots, v)
                .iter()
                .all(|x| x.is_zero())
    }

    /// Message coordinates of a codeword.
    pub fn coordinates(&self, v: &[Fe]) -> Option<Vec<Fe>> {
        if v.len() != self.length {
            return None;
        }
        matrix::coordinates(self.field.spec(), &self.gens, &self.pivots, v)
    }

    pub fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                found: message.len(),
            });
        }
        let f = self.field.spec();
        let mut out = vec![Fe::ZERO; self.length];
        for (&m, row) in message.iter().zip(&self.gens) {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        Ok(out)
    }

    /// Euclidean dual.
    pub fn dual(&self) -> LinearCode {
        let f = self.field.spec();
        let free: Vec<usize> = (0..self.length).filter(|c| !self.pivots.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut h = vec![Fe::ZERO; self.length];
                h[fc] = Fe::ONE;
                for (row, &p) in self.gens.iter().zip(&self.pivots) {
                    h[p] = f.neg(row[fc]);
                }
                h
            })
            .collect();
        Self::from_rows_unchecked(self.field.clone(), self.length, rows)
    }

    /// `dim(C ∩ C⊥) = k − rank(G·Gᵀ)`.
    pub fn hull_dimension(&self) -> usize {
        let f = self.field.spec();
        let gram = matrix::mul_transpose(f, &self.gens, &self.gens);
        self.dimension() - matrix::rank(f, &gram)
    }

    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    /// `C + D`.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field != other.field || self.length != other.length {
            return Err(Error::Mismatch("codes over different fields or lengths".into()));
        }
        let rows = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_rows_unchecked(self.field.clone(), self.length, rows))
    }

    /// Apply `x ↦ x^(q^j)` to every entry (a field automorphism over `F_q`).
    pub fn frobenius(&self, j: i64) -> LinearCode {
        let f = self.field.spec();
        let rows = self
            .gens
            .iter()
            .map(|r| r.iter().map(|&x| f.frobenius(x, j)).collect())
            .collect();
        Self::from_rows_unchecked(self.field.clone(), self.length, rows)
    }
}

/// Put a matrix over `field` into canonical form.
pub fn rref_canonicalize(field: Subfield, rows: Vec<Vec<Fe>>) -> Result<LinearCode> {
    let length = rows.first().map_or(0, |r| r.len());
    LinearCode::new(field, length, rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Distance {
    Exact(usize),
    AtLeast(usize),
}

impl Distance {
    pub fn value(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub length: usize,
    pub dimension: usize,
    pub distance: Distance,
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.distance {
            Distance::Exact(d) => write!(f, "[{}, {}, {}]", self.length, self.dimension, d),
            Distance::AtLeast(d) => write!(f, "[{}, {}, >= {}]", self.length, self.dimension, d),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::FieldSpec;

    fn f2() -> Subfield {
        Subfield::base(Arc::new(FieldSpec::new(2, 1).unwrap()))
    }

    fn bits(v: &[u32]) -> Vec<Fe> {
        v.iter().map(|&b| Fe(b)).collect()
    }

    #[test]
    fn identity_is_canonical() {
        let full = LinearCode::full(f2(), 3);
        let again = rref_canonicalize(f2(), full.generators().to_vec()).unwrap();
        assert_eq!(full, again);
        assert_eq!(again.dimension(), 3);
    }

    #[test]
    fn listed_outer_generator_is_canonical() {
        let k = Arc::new(FieldSpec::new(2, 4).unwrap());
        let a7 = k.gen_pow(7);
        let c = rref_canonicalize(Subfield::new(k, 4).unwrap(), vec![vec![Fe::ONE, a7]]).unwrap();
        assert_eq!(c.generators(), &[vec![Fe::ONE, a7]]);
        assert_eq!(c.dimension(), 1);
    }

    #[test]
    fn zero_matrix_gives_zero_code() {
        let c = rref_canonicalize(f2(), vec![bits(&[0, 0])]).unwrap();
        assert_eq!(c.dimension(), 0);
        assert_eq!(c.length(), 2);
    }

    #[test]
    fn dual_examples() {
        let c = LinearCode::new(f2(), 2, vec![bits(&[1, 0])]).unwrap();
        assert_eq!(c.dual().generators(), &[bits(&[0, 1])]);
        assert_eq!(LinearCode::full(f2(), 3).dual().dimension(), 0);
        assert_eq!(LinearCode::zero(f2(), 3).dual(), LinearCode::full(f2(), 3));
    }

    #[test]
    fn hull_examples() {
        assert_eq!(
            LinearCode::new(f2(), 2, vec![bits(&[1, 0])]).unwrap().hull_dimension(),
            0
        );
        assert_eq!(
            LinearCode::new(f2(), 2, vec![bits(&[1, 1])]).unwrap().hull_dimension(),
            1
        );
        assert_eq!(LinearCode::zero(f2(), 4).hull_dimension(), 0);
    }

    #[test]
    fn rejects_entries_outside_subfield() {
        let k = Arc::new(FieldSpec::new(2, 2).unwrap());
        let err = LinearCode::new(Subfield::base(k.clone()), 2, vec![vec![Fe::ONE, k.generator()]]);
        assert!(err.is_err());
        assert!(LinearCode::new(f2(), 3, vec![bits(&[1, 0])]).is_err());
    }

    #[test]
    fn params_display() {
        let p = CodeParams {
            length: 6400,
            dimension: 3216,
            distance: Distance::AtLeast(48),
        };
        assert_eq!(p.to_string(), "[6400, 3216, >= 48]");
    }
}
