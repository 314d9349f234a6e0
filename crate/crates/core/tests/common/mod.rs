//! Brute-force oracles shared by the integration tests. They use only field
//! arithmetic from the library and recompute everything else from scratch.
#![allow(dead_code)]

use qacodes::algebra::{AbelianGroup, Fe, FieldSpec, GroupElement};
use qacodes::linear_codes::LinearCode;

/// Prime-field basis of the subfield of `f` generated by `gamma`, where
/// `gamma` is primitive of order `order - 1`.
fn prime_basis(f: &FieldSpec, gamma: Fe, order: u64) -> Vec<Fe> {
    let p = f.characteristic() as u64;
    let mut m = 0;
    let mut t = 1;
    while t < order {
        t *= p;
        m += 1;
    }
    (0..m).map(|j| f.pow(gamma, j)).collect()
}

/// Visit every vector of the prime-field span of `b·row` for each row and
/// each `b` in `scalars`; each vector is visited exactly once when those
/// products are prime-field independent.
pub fn for_each_span(f: &FieldSpec, rows: &[Vec<Fe>], scalars: &[Fe], length: usize, mut visit: impl FnMut(&[Fe])) {
    let p = f.characteristic();
    let gens: Vec<Vec<Fe>> = rows
        .iter()
        .flat_map(|r| scalars.iter().map(move |&b| r.iter().map(|&x| f.mul(b, x)).collect()))
        .collect();
    let mut word = vec![Fe::ZERO; length];
    let mut digits = vec![0u32; gens.len()];
    loop {
        visit(&word);
        let mut j = 0;
        loop {
            if j == gens.len() {
                return;
            }
            for (w, &g) in word.iter_mut().zip(&gens[j]) {
                *w = f.add(*w, g);
            }
            digits[j] += 1;
            if digits[j] < p {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}

pub fn for_each_codeword(code: &LinearCode, visit: impl FnMut(&[Fe])) {
    let sub = code.field();
    let basis = prime_basis(sub.spec(), sub.generator(), sub.order());
    for_each_span(sub.spec(), code.generators(), &basis, code.length(), visit);
}

pub fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

pub fn weight_distribution(code: &LinearCode) -> Vec<u64> {
    let mut wd = vec![0u64; code.length() + 1];
    for_each_codeword(code, |w| wd[weight(w)] += 1);
    wd
}

pub fn min_distance(code: &LinearCode) -> usize {
    let wd = weight_distribution(code);
    (1..wd.len()).find(|&w| wd[w] > 0).unwrap_or(0)
}

pub fn codewords(code: &LinearCode) -> Vec<Vec<Fe>> {
    let mut out = Vec::new();
    for_each_codeword(code, |w| out.push(w.to_vec()));
    out.sort();
    out
}

/// Rank by plain Gaussian elimination.
pub fn rank(f: &FieldSpec, rows: &[Vec<Fe>]) -> usize {
    let mut m: Vec<Vec<Fe>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = f.inv(m[r][c]).unwrap();
        let pivot: Vec<Fe> = m[r].iter().map(|&x| f.mul(inv, x)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let t = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = f.sub(*x, f.mul(t, y));
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

pub fn dot(f: &FieldSpec, a: &[Fe], b: &[Fe]) -> Fe {
    a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `dim(C ∩ C⊥)` from the codewords of `C` orthogonal to every generator.
pub fn hull_dimension_explicit(code: &LinearCode) -> usize {
    let f = code.field().spec().clone();
    let mut hull = Vec::new();
    for_each_codeword(code, |w| {
        if code.generators().iter().all(|g| dot(&f, w, g).is_zero()) {
            hull.push(w.to_vec());
        }
    });
    rank(&f, &hull)
}

/// `χ_a(h) = ξ^(Σ a_i h_i M / m_i)` with `ξ` the designated root of `f`.
pub fn chi(f: &FieldSpec, group: &AbelianGroup, a: &GroupElement, h: &GroupElement) -> Fe {
    let m = group.exponent();
    let root = f.root().expect("designated root");
    assert_eq!(root.order, m);
    let e =
        a.0.iter()
            .zip(&h.0)
            .zip(group.factors())
            .fold(0u64, |acc, ((&x, &y), &mi)| {
                (acc + (x as u64 * y as u64) % mi as u64 * (m / mi as u64)) % m
            });
    f.pow(root.element, e)
}

/// The orbit `{q^j x}` of `x`.
pub fn orbit(group: &AbelianGroup, q: u64, x: &GroupElement) -> Vec<GroupElement> {
    let mut out = vec![x.clone()];
    loop {
        let last = out.last().unwrap();
        let next = GroupElement(
            last.0
                .iter()
                .zip(group.factors())
                .map(|(&c, &m)| ((c as u64 * q) % m as u64) as u32)
                .collect(),
        );
        if next == *x {
            return out;
        }
        out.push(next);
    }
}

fn neg(group: &AbelianGroup, h: &GroupElement) -> GroupElement {
    GroupElement(h.0.iter().zip(group.factors()).map(|(&c, &m)| (m - c) % m).collect())
}

fn inv_order(f: &FieldSpec, group: &AbelianGroup) -> Fe {
    f.inv(f.from_int(group.order() as i64)).expect("|H| invertible")
}

/// Primitive idempotent `Σ_{x ∈ orbit} (1/m) Σ_h χ_x(−h) Y^h`.
pub fn idempotent(f: &FieldSpec, group: &AbelianGroup, q: u64, x: &GroupElement) -> Vec<Fe> {
    let inv = inv_order(f, group);
    (0..group.order())
        .map(|h| {
            let mh = neg(group, &group.element(h));
            orbit(group, q, x)
                .iter()
                .fold(Fe::ZERO, |acc, y| f.add(acc, f.mul(inv, chi(f, group, y, &mh))))
        })
        .collect()
}

/// Product in `F[H]` by direct convolution.
pub fn convolve(f: &FieldSpec, group: &AbelianGroup, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; group.order()];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = group.add(i, j);
            out[k] = f.add(out[k], f.mul(x, y));
        }
    }
    out
}

/// The ideal generated by `e` as a list of generators `Y^a e` over `F_q`.
pub fn ideal_rows(f: &FieldSpec, group: &AbelianGroup, e: &[Fe]) -> Vec<Vec<Fe>> {
    (0..group.order())
        .map(|a| {
            let mut y = vec![Fe::ZERO; group.order()];
            y[a] = Fe::ONE;
            convolve(f, group, &y, e)
        })
        .collect()
}

/// `Tr_{F_{q^k}/F_q}(x)`.
pub fn trace(f: &FieldSpec, q: u64, k: u32, x: Fe) -> Fe {
    let mut acc = Fe::ZERO;
    let mut y = x;
    for _ in 0..k {
        acc = f.add(acc, y);
        y = f.pow(y, q);
    }
    acc
}

/// Generators over `F_q` of the QA code with outer code `rows` at member `x`:
/// block `j`, coordinate `h` of the image of `δ c` is `(1/m) Tr(δ c_j χ_x(−h))`.
pub fn concatenation_rows(
    f: &FieldSpec,
    group: &AbelianGroup,
    q: u64,
    x: &GroupElement,
    rows: &[Vec<Fe>],
) -> Vec<Vec<Fe>> {
    let k = orbit(group, q, x).len() as u32;
    let gamma = f.subfield_generator(k).unwrap();
    let inv = inv_order(f, group);
    let n = group.order();
    let chis: Vec<Fe> = (0..n)
        .map(|h| chi(f, group, x, &neg(group, &group.element(h))))
        .collect();
    let mut out = Vec::new();
    for row in rows {
        for t in 0..k as u64 {
            let delta = f.pow(gamma, t);
            let mut v = Vec::with_capacity(row.len() * n);
            for &c in row {
                let dc = f.mul(delta, c);
                for &ch in &chis {
                    v.push(f.mul(inv, trace(f, q, k, f.mul(dc, ch))));
                }
            }
            out.push(v);
        }
    }
    out
}
