//! Enumeration of every linear code of a given length.
//!
//! Each subspace has exactly one RREF generator matrix, determined by its
//! pivot columns and the free entries to the right of each pivot. Codes are
//! produced by dimension (ascending), then pivot pattern (lexicographic),
//! then free entries (lexicographic over the canonical element order).

use crate::algebra::{Fe, Subfield};
use crate::error::{Error, Result};

use super::LinearCode;

pub const DEFAULT_SUBSPACE_CAP: u64 = 10_000_000;

/// Number of `k`-dimensional subspaces of `F_Q^n`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
        den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
    }
    num / den
}

/// Number of linear codes of length `n` over a field of order `q`.
pub fn count_codes(n: usize, q: u64) -> u128 {
    (0..=n)
        .map(|k| gaussian_binomial(n, k, q))
        .fold(0u128, u128::saturating_add)
}

pub fn enumerate_codes(field: &Subfield, length: usize, cap: u64) -> Result<CodeEnumerator> {
    let total = count_codes(length, field.order());
    if total > cap as u128 {
        return Err(Error::cap(
            format!("enumeration of codes of length {length} over F_{}", field.order()),
            cap,
            total,
        ));
    }
    Ok(CodeEnumerator {
        field: field.clone(),
        length,
        dim: 0,
        pivots: Vec::new(),
        free: Vec::new(),
        digits: Vec::new(),
        started: false,
        done: false,
    })
}

pub struct CodeEnumerator {
    field: Subfield,
    length: usize,
    dim: usize,
    pivots: Vec<usize>,
    /// (row, column) of each free entry, in row-major order.
    free: Vec<(usize, usize)>,
    digits: Vec<usize>,
    started: bool,
    done: bool,
}

impl CodeEnumerator {
    fn set_free(&mut self) {
        self.free.clear();
        for (r, &p) in self.pivots.iter().enumerate() {
            for c in p + 1..self.length {
                if !self.pivots.contains(&c) {
                    self.free.push((r, c));
                }
            }
        }
        self.digits = vec![0; self.free.len()];
    }

    fn next_pivots(&mut self) -> bool {
        // next k-combination of 0..n in lexicographic order
        let k = self.dim;
        let n = self.length;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.pivots[i] < n - k + i {
                self.pivots[i] += 1;
                for j in i + 1..k {
                    self.pivots[j] = self.pivots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        let q = self.field.order() as usize;
        for i in (0..self.digits.len()).rev() {
            if self.digits[i] + 1 < q {
                self.digits[i] += 1;
                return true;
            }
            self.digits[i] = 0;
        }
        if self.next_pivots() {
            self.set_free();
            return true;
        }
        if self.dim < self.length {
            self.dim += 1;
            self.pivots = (0..self.dim).collect();
            self.set_free();
            return true;
        }
        false
    }

    fn current(&self) -> LinearCode {
        let elems = self.field.elements();
        let mut rows = vec![vec![Fe::ZERO; self.length]; self.dim];
        for (r, &p) in self.pivots.iter().enumerate() {
            rows[r][p] = Fe::ONE;
        }
        for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
            rows[r][c] = elems[d];
        }
        LinearCode {
            field: self.field.clone(),
            length: self.length,
            gens: rows,
            pivots: self.pivots.clone(),
        }
    }
}

impl Iterator for CodeEnumerator {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
