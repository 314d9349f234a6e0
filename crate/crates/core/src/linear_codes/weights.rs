//! Exhaustive codeword enumeration kernels.
//!
//! The message space is split into chunks by its leading digits; each chunk
//! is walked incrementally (one row update per step) and chunks are reduced
//! with order-independent operations, so results do not depend on the
//! execution policy. Codes over `F_2` use a bit-packed Gray-code walk.

use crate::algebra::{Fe, FieldSpec};
use crate::error::{Error, Result};
use crate::exec::Exec;

use super::LinearCode;

/// Default bound on the number of codewords enumerated.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Chunks are made from leading digits until there are at least this many.
const MIN_CHUNKS: u128 = 256;

enum Rows {
    Binary { rows: Vec<Vec<u64>> },
    General { steps: Vec<Vec<Vec<Fe>>> },
}

enum Word<'a> {
    Bits(&'a [u64]),
    Symbols(&'a [Fe]),
}

impl Word<'_> {
    #[inline]
    fn weight(&self) -> usize {
        match self {
            Word::Bits(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            Word::Symbols(w) => w.iter().filter(|x| !x.is_zero()).count(),
        }
    }
}

struct Plan<'a> {
    code: &'a LinearCode,
    rows: Rows,
    /// Number of leading message digits fixed per chunk.
    split: usize,
    chunks: u64,
    q: usize,
}

impl<'a> Plan<'a> {
    fn new(code: &'a LinearCode, cap: u64, lex: bool, context: &str) -> Result<Self> {
        let q = code.field().order() as usize;
        let k = code.dimension();
        let required = (q as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if required > cap as u128 {
            return Err(Error::cap(context, cap, required));
        }
        let mut split = 0;
        while split < k && (q as u128).pow(split as u32) < MIN_CHUNKS {
            split += 1;
        }
        let chunks = (q as u64).pow(split as u32);
        let rows = if code.field().is_binary() && !lex {
            let limbs = code.length().div_ceil(64);
            let rows = code
                .generators()
                .iter()
                .map(|r| {
                    let mut packed = vec![0u64; limbs];
                    for (i, x) in r.iter().enumerate() {
                        if !x.is_zero() {
                            packed[i / 64] |= 1 << (i % 64);
                        }
                    }
                    packed
                })
                .collect();
            Rows::Binary { rows }
        } else {
            let f = code.field().spec();
            let elems = code.field().elements();
            // steps[i][a]: change of the word when digit i moves from
            // elems[a] to elems[a + 1] (the last entry wraps back to zero).
            let steps = code
                .generators()
                .iter()
                .map(|row| {
                    (0..q)
                        .map(|a| {
                            let delta = f.sub(elems[(a + 1) % q], elems[a]);
                            row.iter().map(|&g| f.mul(delta, g)).collect()
                        })
                        .collect()
                })
                .collect();
            Rows::General { steps }
        };
        Ok(Plan {
            code,
            rows,
            split,
            chunks,
            q,
        })
    }

    fn field(&self) -> &FieldSpec {
        self.code.field().spec()
    }

    /// Leading digits (most significant first) of chunk `c`.
    fn prefix(&self, c: u64) -> Vec<usize> {
        let mut d = vec![0usize; self.split];
        let mut t = c;
        for x in d.iter_mut().rev() {
            *x = (t % self.q as u64) as usize;
            t /= self.q as u64;
        }
        d
    }

    /// Visit every codeword of chunk `c` until `f` returns false.
    /// Returns false if stopped early.
    fn walk(&self, c: u64, mut f: impl FnMut(&Word<'_>, &[usize]) -> bool) -> bool {
        let k = self.code.dimension();
        let prefix = self.prefix(c);
        let low = k - self.split;
        match &self.rows {
            Rows::Binary { rows } => {
                let limbs = self.code.length().div_ceil(64);
                let mut word = vec![0u64; limbs];
                for (i, &d) in prefix.iter().enumerate() {
                    if d == 1 {
                        xor(&mut word, &rows[i]);
                    }
                }
                if !f(&Word::Bits(&word), &[]) {
                    return false;
                }
                let count = 1u64 << low;
                for i in 1..count {
                    let flip = i.trailing_zeros() as usize;
                    // low digits are rows split..k; flip the last-most for bit 0
                    xor(&mut word, &rows[k - 1 - flip]);
                    if !f(&Word::Bits(&word), &[]) {
                        return false;
                    }
                }
                true
            }
            Rows::General { steps } => {
                let field = self.field();
                let elems = self.code.field().elements();
                let mut word = vec![Fe::ZERO; self.code.length()];
                for (i, &d) in prefix.iter().enumerate() {
                    let m = elems[d];
                    if m.is_zero() {
                        continue;
                    }
                    for (w, &g) in word.iter_mut().zip(&self.code.generators()[i]) {
                        *w = field.add(*w, field.mul(m, g));
                    }
                }
                let mut digits = prefix.clone();
                digits.resize(k, 0);
                loop {
                    if !f(&Word::Symbols(&word), &digits) {
                        return false;
                    }
                    // odometer increment over the low digits
                    let mut i = k;
                    loop {
                        if i == self.split {
                            return true;
                        }
                        i -= 1;
                        let a = digits[i];
                        for (w, &s) in word.iter_mut().zip(&steps[i][a]) {
                            *w = field.add(*w, s);
                        }
                        if a + 1 < self.q {
                            digits[i] = a + 1;
                            break;
                        }
                        digits[i] = 0;
                    }
                }
            }
        }
    }
}

#[inline]
fn xor(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

/// `A_w` for `w = 0..=n`.
pub fn weight_distribution(code: &LinearCode, cap: u64) -> Result<Vec<u64>> {
    weight_distribution_with(code, cap, Exec::default())
}

pub fn weight_distribution_with(code: &LinearCode, cap: u64, exec: Exec) -> Result<Vec<u64>> {
    let plan = Plan::new(code, cap, false, "weight distribution")?;
    let n = code.length();
    Ok(exec.map_reduce(
        plan.chunks,
        || vec![0u64; n + 1],
        |c| {
            let mut counts = vec![0u64; n + 1];
            plan.walk(c, |w, _| {
                counts[w.weight()] += 1;
                true
            });
            counts
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    ))
}

/// Exact minimum distance by full enumeration.
pub fn min_distance(code: &LinearCode, cap: u64) -> Result<usize> {
    min_distance_with(code, cap, Exec::default())
}

pub fn min_distance_with(code: &LinearCode, cap: u64, exec: Exec) -> Result<usize> {
    if code.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    let plan = Plan::new(code, cap, false, "minimum distance")?;
    Ok(exec.map_reduce(
        plan.chunks,
        || usize::MAX,
        |c| {
            let mut best = usize::MAX;
            plan.walk(c, |w, _| {
                let wt = w.weight();
                if wt > 0 && wt < best {
                    best = wt;
                }
                best > 1
            });
            best
        },
        usize::min,
    ))
}

/// Whether some nonzero codeword has weight below `d`. Stops at the first
/// witness, so pruning candidates is much cheaper than a full distance.
pub fn has_weight_below(code: &LinearCode, d: usize, cap: u64, exec: Exec) -> Result<bool> {
    if code.dimension() == 0 || d <= 1 {
        return Ok(false);
    }
    let plan = Plan::new(code, cap, false, "distance filter")?;
    Ok(exec.any(plan.chunks, |c| {
        let mut found = false;
        plan.walk(c, |w, _| {
            let wt = w.weight();
            found = wt > 0 && wt < d;
            !found
        });
        found
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeightWord {
    pub distance: usize,
    pub message: Vec<Fe>,
    pub codeword: Vec<Fe>,
}

/// The first minimum-weight codeword with messages in lexicographic order
/// over the canonical element ordering.
pub fn first_min_weight_codeword(code: &LinearCode, cap: u64, exec: Exec) -> Result<MinWeightWord> {
    let d = min_distance_with(code, cap, exec)?;
    let plan = Plan::new(code, cap, true, "minimum weight codeword")?;
    let elems = code.field().elements();
    let hit = exec.find_first(plan.chunks, |c| {
        let mut hit = None;
        plan.walk(c, |w, digits| {
            if let Word::Symbols(s) = w {
                if w.weight() == d {
                    hit = Some((digits.iter().map(|&i| elems[i]).collect(), s.to_vec()));
                    return false;
                }
            }
            true
        });
        hit
    });
    let (message, codeword) = hit.ok_or_else(|| Error::Invariant("minimum weight word not found".into()))?;
    Ok(MinWeightWord {
        distance: d,
        message,
        codeword,
    })
}

/// All codewords, messages in lexicographic order.
pub fn codewords(code: &LinearCode, cap: u64) -> Result<Vec<Vec<Fe>>> {
    let plan = Plan::new(code, cap, true, "codeword listing")?;
    let mut out = Vec::with_capacity(code.size() as usize);
    for c in 0..plan.chunks {
        plan.walk(c, |w, _| {
            if let Word::Symbols(s) = w {
                out.push(s.to_vec());
            }
            true
        });
    }
    Ok(out)
}
