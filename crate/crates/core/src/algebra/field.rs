//! Prime-power fields and the tower `K ⊇ E ⊇ F_q`.
//!
//! A [`FieldSpec`] is the largest field `K` of a computation, presented as
//! `F_p[x]/(f)`. The base field `F_q` and every intermediate field are
//! subfields of `K`, tested by the Frobenius fixed-point criterion. Elements
//! are encoded as integers `Σ c_i p^i` of their coefficient vectors; that
//! integer order is the canonical element ordering used everywhere
//! (enumeration, generator choice, tie-breaking).

use std::fmt;
use std::sync::Arc;

use super::poly;
use crate::error::{Error, Result};

/// Largest supported `|K|` (log/antilog tables are materialized).
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// Tables for odd characteristic additions are built up to this size.
const ADD_TABLE_LIMIT: u32 = 1024;

/// An element of `K`, encoded by its coefficient vector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Designated primitive `M`-th root of unity: `ξ = g^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootOfUnity {
    pub order: u64,
    pub exponent: u64,
    pub element: Fe,
}

pub struct FieldSpec {
    p: u32,
    base_degree: u32,
    tower_degree: u32,
    modulus: Vec<u32>,
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    generator: Fe,
    root: Option<RootOfUnity>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("q", &self.q())
            .field("tower_degree", &self.tower_degree)
            .field("modulus", &self.modulus_string())
            .field("root", &self.root)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.base_degree == other.base_degree
            && self.tower_degree == other.tower_degree
            && self.modulus == other.modulus
            && self.root == other.root
    }
}

impl Eq for FieldSpec {}

/// Split a prime power into `(p, r)` with `q = p^r`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = poly::prime_factors(q as u128);
    if p.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = p[0] as u64;
    let mut r = 0;
    let mut t = q;
    while t > 1 {
        t /= p;
        r += 1;
    }
    Ok((p as u32, r))
}

impl FieldSpec {
    /// `K = F_{q^tower_degree}` with the default modulus for its degree over
    /// the prime field.
    pub fn new(q: u64, tower_degree: u32) -> Result<Self> {
        let (p, r) = prime_power(q)?;
        let n = (r * tower_degree) as usize;
        Self::check_size(p, n)?;
        Self::with_modulus(q, tower_degree, poly::default_modulus(p, n))
    }

    /// `K = F_p[x]/(modulus)`; the modulus must be monic of degree
    /// `r · tower_degree` and irreducible.
    pub fn with_modulus(q: u64, tower_degree: u32, modulus: Vec<u32>) -> Result<Self> {
        let (p, r) = prime_power(q)?;
        if tower_degree == 0 {
            return Err(Error::InvalidField("tower degree must be positive".into()));
        }
        let n = (r * tower_degree) as usize;
        Self::check_size(p, n)?;
        if modulus.len() != n + 1 || modulus[n] != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!(
                "modulus must be monic of degree {n} with coefficients below {p}"
            )));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::ReducibleModulus(digits_to_string(&modulus)));
        }
        let size = p.pow(n as u32);
        let to_poly = |v: u32| -> Vec<u32> {
            let mut d = Vec::with_capacity(n);
            let mut t = v;
            for _ in 0..n {
                d.push(t % p);
                t /= p;
            }
            d
        };
        let from_poly = |d: &[u32]| -> u32 { d.iter().rev().fold(0u32, |acc, &c| acc * p + c) };
        let order = (size - 1) as u128;
        let factors = poly::prime_factors(order);
        let one: Vec<u32> = vec![1];
        let generator = (1..size)
            .find(|&c| {
                let g = to_poly(c);
                let mut gt = g.clone();
                poly::trim(&mut gt);
                factors
                    .iter()
                    .all(|&f| poly::powmod(&gt, order / f, &modulus, p) != one)
            })
            .expect("multiplicative group is cyclic");
        let g_poly = to_poly(generator);
        let mut exp = vec![0u32; 2 * (size as usize - 1)];
        let mut log = vec![0u32; size as usize];
        let mut cur: Vec<u32> = vec![1];
        for i in 0..(size - 1) as usize {
            let mut d = cur.clone();
            d.resize(n, 0);
            let v = from_poly(&d);
            exp[i] = v;
            exp[i + size as usize - 1] = v;
            log[v as usize] = i as u32;
            cur = poly::mulmod(&cur, &g_poly, &modulus, p);
        }
        let add_table = if p != 2 && size <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (size * size) as usize];
            for a in 0..size {
                for b in 0..size {
                    t[(a * size + b) as usize] = digit_add(a, b, p);
                }
            }
            Some(t)
        } else {
            None
        };
        Ok(FieldSpec {
            p,
            base_degree: r,
            tower_degree,
            modulus,
            size,
            exp,
            log,
            add_table,
            generator: Fe(generator),
            root: None,
        })
    }

    fn check_size(p: u32, n: usize) -> Result<()> {
        let size = (p as u128).checked_pow(n as u32);
        match size {
            Some(s) if s <= MAX_FIELD_SIZE as u128 => Ok(()),
            _ => Err(Error::InvalidField(format!(
                "field of size {p}^{n} exceeds the supported maximum {MAX_FIELD_SIZE}"
            ))),
        }
    }

    /// Designate `ξ = g^((|K|-1)/m)`, the smallest power of the canonical
    /// generator with exact order `m`.
    pub fn with_root_of_unity(mut self, m: u64) -> Result<Self> {
        let order = self.size as u64 - 1;
        if m == 0 || !order.is_multiple_of(m) {
            return Err(Error::InvalidField(format!(
                "K of size {} has no primitive {m}-th root of unity",
                self.size
            )));
        }
        let exponent = order / m;
        let element = self.pow(self.generator, exponent);
        self.root = Some(RootOfUnity {
            order: m,
            exponent,
            element,
        });
        Ok(self)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.base_degree)
    }

    /// `[F_q : F_p]`.
    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    /// `[K : F_q]`.
    pub fn tower_degree(&self) -> u32 {
        self.tower_degree
    }

    /// `[K : F_p]`, the number of coefficients of an element.
    pub fn prime_degree(&self) -> u32 {
        self.base_degree * self.tower_degree
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        digits_to_string(&self.modulus)
    }

    /// Smallest element (canonical order) generating `K*`.
    pub fn generator(&self) -> Fe {
        self.generator
    }

    pub fn root(&self) -> Option<RootOfUnity> {
        self.root
    }

    pub fn xi(&self) -> Result<Fe> {
        self.root
            .map(|r| r.element)
            .ok_or_else(|| Error::InvalidField("no root of unity designated".into()))
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size).map(Fe)
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, c: i64) -> Fe {
        Fe(c.rem_euclid(self.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            return Fe(a.0 ^ b.0);
        }
        match &self.add_table {
            Some(t) => Fe(t[(a.0 * self.size + b.0) as usize]),
            None => Fe(digit_add(a.0, b.0, self.p)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        if self.p == 2 {
            return a;
        }
        let mut out = 0u32;
        let mut scale = 1u32;
        let mut t = a.0;
        while t > 0 {
            let d = t % self.p;
            out += ((self.p - d) % self.p) * scale;
            scale *= self.p;
            t /= self.p;
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        Fe(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let l = self.log[a.0 as usize];
        let order = self.size - 1;
        Some(Fe(self.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.0 == 0 {
            return Fe::ZERO;
        }
        let order = (self.size - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        Fe(self.exp[((l * (e % order)) % order) as usize])
    }

    /// `g^e` for the canonical generator.
    pub fn gen_pow(&self, e: u64) -> Fe {
        Fe(self.exp[(e % (self.size as u64 - 1)) as usize])
    }

    /// Discrete log to the base of the canonical generator.
    pub fn log(&self, a: Fe) -> Option<u64> {
        (a.0 != 0).then(|| self.log[a.0 as usize] as u64)
    }

    /// `q^j mod (|K| - 1)`, the exponent of the `j`-th Frobenius power.
    fn q_power_exponent(&self, j: u32) -> u64 {
        let order = (self.size - 1) as u128;
        let mut e = 1u128;
        for _ in 0..j {
            e = e * self.q() as u128 % order.max(1);
        }
        e as u64
    }

    /// `x^(q^j)`; negative `j` is taken modulo `[K:F_q]`.
    pub fn frobenius(&self, x: Fe, j: i64) -> Fe {
        let d = self.tower_degree as i64;
        let j = j.rem_euclid(d) as u32;
        if x.0 == 0 || j == 0 || self.size == 2 {
            return x;
        }
        let order = (self.size - 1) as u64;
        let l = self.log[x.0 as usize] as u64;
        let e = self.q_power_exponent(j);
        Fe(self.exp[((l as u128 * e as u128) % order as u128) as usize])
    }

    /// Frobenius fixed-point test for the degree-`k` subfield over `F_q`.
    pub fn in_subfield(&self, x: Fe, k: u32) -> bool {
        if k == 0 || !self.tower_degree.is_multiple_of(k) {
            return false;
        }
        self.frobenius(x, k as i64) == x
    }

    /// Degree over `F_q` of the smallest subfield containing `x`.
    pub fn element_degree(&self, x: Fe) -> u32 {
        (1..=self.tower_degree)
            .filter(|k| self.tower_degree.is_multiple_of(*k))
            .find(|&k| self.in_subfield(x, k))
            .unwrap_or(self.tower_degree)
    }

    /// Trace from the degree-`k` subfield down to `F_q`.
    pub fn trace(&self, x: Fe, k: u32) -> Result<Fe> {
        if !self.in_subfield(x, k) {
            return Err(Error::NotInSubfield { degree: k });
        }
        Ok(self.trace_unchecked(x, k))
    }

    pub(crate) fn trace_unchecked(&self, x: Fe, k: u32) -> Fe {
        let mut acc = Fe::ZERO;
        let mut y = x;
        for _ in 0..k {
            acc = self.add(acc, y);
            y = self.frobenius(y, 1);
        }
        acc
    }

    /// Canonical primitive element of the degree-`k` subfield:
    /// `g^((|K|-1)/(q^k-1))`.
    pub fn subfield_generator(&self, k: u32) -> Result<Fe> {
        if k == 0 || !self.tower_degree.is_multiple_of(k) {
            return Err(Error::InvalidField(format!(
                "no subfield of degree {k} in a degree-{} tower",
                self.tower_degree
            )));
        }
        let sub_order = self.q().pow(k) - 1;
        Ok(self.gen_pow((self.size as u64 - 1) / sub_order))
    }

    /// Coefficient string, lowest degree first, one digit per coefficient.
    pub fn format(&self, x: Fe) -> String {
        let n = self.prime_degree() as usize;
        let mut s = String::with_capacity(n);
        let mut t = x.0;
        for _ in 0..n {
            s.push(std::char::from_digit(t % self.p, 36).unwrap());
            t /= self.p;
        }
        s
    }

    /// Parse a coefficient string (lowest degree first, may be shorter than
    /// the full width) or a generator power `g^k` (`g` alone is `g^1`).
    pub fn parse(&self, s: &str) -> Result<Fe> {
        let s = s.trim();
        if s == "g" {
            return Ok(self.generator());
        }
        if let Some(e) = s.strip_prefix("g^") {
            let e: u64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator power {s:?}")))?;
            return Ok(self.gen_pow(e));
        }
        let n = self.prime_degree() as usize;
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let digits: Vec<char> = s.chars().collect();
        // Trailing zeros beyond the width are tolerated.
        if digits.len() > n && digits[n..].iter().any(|&c| c != '0') {
            return Err(Error::Parse(format!(
                "field element {s:?} has more than {n} coefficients"
            )));
        }
        let mut v = 0u32;
        for &c in digits.iter().take(n).rev() {
            let d = c
                .to_digit(36)
                .filter(|&d| d < self.p)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))?;
            v = v * self.p + d;
        }
        Ok(Fe(v))
    }
}

fn digit_add(a: u32, b: u32, p: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    let mut out = 0u32;
    let mut scale = 1u32;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    out
}

pub(crate) fn digits_to_string(d: &[u32]) -> String {
    d.iter().map(|&c| std::char::from_digit(c, 36).unwrap_or('?')).collect()
}

pub fn parse_digits(s: &str, p: u32) -> Result<Vec<u32>> {
    s.trim()
        .chars()
        .map(|c| {
            c.to_digit(36)
                .filter(|&d| d < p)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))
        })
        .collect()
}

/// A subfield `E ⊆ K` of degree `k` over `F_q`, with its elements listed in
/// canonical order.
#[derive(Clone)]
pub struct Subfield {
    spec: Arc<FieldSpec>,
    degree: u32,
    elements: Arc<[Fe]>,
}

impl fmt::Debug for Subfield {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subfield(F_{}^{} in {:?})", self.spec.q(), self.degree, self.spec)
    }
}

impl PartialEq for Subfield {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && (Arc::ptr_eq(&self.spec, &other.spec) || *self.spec == *other.spec)
    }
}

impl Eq for Subfield {}

impl Subfield {
    pub fn new(spec: Arc<FieldSpec>, degree: u32) -> Result<Self> {
        let gen = spec.subfield_generator(degree)?;
        let order = spec.q().pow(degree);
        let mut elements: Vec<Fe> = std::iter::once(Fe::ZERO)
            .chain((0..order - 1).map(|e| spec.pow(gen, e)))
            .collect();
        elements.sort_unstable();
        Ok(Subfield {
            spec,
            degree,
            elements: elements.into(),
        })
    }

    /// The base field `F_q`.
    pub fn base(spec: Arc<FieldSpec>) -> Self {
        Self::new(spec, 1).expect("degree 1 always divides")
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Fe] {
        &self.elements
    }

    pub fn contains(&self, x: Fe) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn generator(&self) -> Fe {
        self.spec.subfield_generator(self.degree).unwrap()
    }

    /// The subfield is `F_2` itself, which enables the bit-packed kernels.
    pub fn is_binary(&self) -> bool {
        self.elements.len() == 2
    }
}
