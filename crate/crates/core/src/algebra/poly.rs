//! Dense polynomials over a prime field `F_p`, lowest degree first.
//!
//! Only what field construction needs: reduction, modular exponentiation,
//! gcd, and the Rabin irreducibility test.

pub(crate) type Poly = Vec<u32>;

/// Small table of Conway polynomials, coefficients lowest degree first.
/// Every entry is primitive, so `x` generates the multiplicative group.
const CONWAY: &[(u32, &[u32])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (7, &[4, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
];

pub(crate) fn conway(p: u32, degree: usize) -> Option<Poly> {
    CONWAY
        .iter()
        .find(|(cp, coeffs)| *cp == p && coeffs.len() == degree + 1)
        .map(|(_, c)| c.to_vec())
}

pub(crate) fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    pow_mod(a as u64, (p - 2) as u64, p as u64) as u32
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Remainder of `a` modulo a monic-or-not nonzero `f`.
pub(crate) fn rem(a: &Poly, f: &Poly, p: u32) -> Poly {
    let mut r = a.clone();
    trim(&mut r);
    let df = f.len() - 1;
    let lead_inv = inv_mod(f[df], p);
    while r.len() > df {
        let shift = r.len() - 1 - df;
        let c = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &fi) in f.iter().enumerate() {
            let sub = (c as u64 * fi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &Poly, b: &Poly, p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Poly = out.into_iter().map(|v| v as u32).collect();
    trim(&mut out);
    out
}

pub(crate) fn mulmod(a: &Poly, b: &Poly, f: &Poly, p: u32) -> Poly {
    rem(&mul(a, b, p), f, p)
}

pub(crate) fn powmod(base: &Poly, mut e: u128, f: &Poly, p: u32) -> Poly {
    let mut result: Poly = vec![1];
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn sub(a: &Poly, b: &Poly, p: u32) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn gcd(a: &Poly, b: &Poly, p: u32) -> Poly {
    let mut a = a.clone();
    let mut b = b.clone();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

pub(crate) fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f`
/// and `gcd(x^(p^(n/r)) - x, f) = 1` for every prime `r | n`.
pub(crate) fn is_irreducible(f: &Poly, p: u32) -> bool {
    let mut f = f.clone();
    trim(&mut f);
    if f.len() < 2 {
        return false;
    }
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // x^(p^k) by k successive p-th powers.
    let frob = |k: usize| {
        let mut y = x.clone();
        for _ in 0..k {
            y = powmod(&y, p as u128, &f, p);
        }
        y
    };
    if !sub(&frob(n), &x, p).is_empty() {
        return false;
    }
    for r in prime_factors(n as u128) {
        let g = gcd(&sub(&frob(n / r as usize), &x, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// `x` has multiplicative order `p^n - 1` modulo `f` (assumed irreducible).
pub(crate) fn is_primitive(f: &Poly, p: u32) -> bool {
    let n = f.len() - 1;
    let order = (p as u128).pow(n as u32) - 1;
    let x: Poly = vec![0, 1];
    let one: Poly = vec![1];
    if powmod(&x, order, f, p) != one {
        return false;
    }
    prime_factors(order)
        .into_iter()
        .all(|r| powmod(&x, order / r, f, p) != one)
}

/// Table entry if present, else the smallest primitive monic polynomial
/// ordered by the integer encoding of its lower coefficients.
pub(crate) fn default_modulus(p: u32, degree: usize) -> Poly {
    if let Some(c) = conway(p, degree) {
        return c;
    }
    let count = (p as u64).pow(degree as u32);
    for v in 0..count {
        let mut f = Vec::with_capacity(degree + 1);
        let mut t = v;
        for _ in 0..degree {
            f.push((t % p as u64) as u32);
            t /= p as u64;
        }
        f.push(1);
        if f[0] != 0 && is_irreducible(&f, p) && is_primitive(&f, p) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_entries_are_primitive() {
        for (p, coeffs) in CONWAY {
            let f = coeffs.to_vec();
            assert!(is_irreducible(&f, *p), "{p} {f:?}");
            assert!(is_primitive(&f, *p), "{p} {f:?}");
        }
    }

    #[test]
    fn reducible_polynomials_rejected() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(!is_irreducible(&vec![1, 0, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
        assert!(!is_irreducible(&vec![1, 0, 1, 0, 1], 2));
        // x^2 + 1 is irreducible over F_3
        assert!(is_irreducible(&vec![1, 0, 1], 3));
        // x^4 + x^3 + x^2 + x + 1 is irreducible but not primitive over F_2
        let f = vec![1, 1, 1, 1, 1];
        assert!(is_irreducible(&f, 2));
        assert!(!is_primitive(&f, 2));
    }

    #[test]
    fn fallback_search_finds_primitive() {
        let f = default_modulus(11, 2);
        assert!(is_irreducible(&f, 11) && is_primitive(&f, 11));
    }
}
