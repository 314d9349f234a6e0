//! Finite abelian groups `H = C_{m_1} × … × C_{m_s}`.
//!
//! Elements are addressed by their index in mixed-radix lexicographic order
//! (rightmost coordinate fastest). This ordering fixes every coefficient
//! vector layout in the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    orders: Vec<u32>,
    order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<u32>);

impl AbelianGroup {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() || orders.contains(&0) {
            return Err(Error::InvalidGroup(format!(
                "cyclic factor orders must be positive, got {orders:?}"
            )));
        }
        let order = orders
            .iter()
            .try_fold(1usize, |acc, &m| acc.checked_mul(m as usize))
            .filter(|&n| n <= 1 << 20)
            .ok_or_else(|| Error::InvalidGroup("group too large".into()))?;
        Ok(AbelianGroup { orders, order })
    }

    pub fn cyclic(m: u32) -> Result<Self> {
        Self::new(vec![m])
    }

    pub fn factors(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `lcm(m_1, …, m_s)`.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &m| lcm(acc, m as u64))
    }

    /// `H` is not cyclic (strictly quasi-abelian codes need this).
    pub fn is_noncyclic(&self) -> bool {
        self.exponent() as usize != self.order
    }

    pub fn element(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0u32; self.orders.len()];
        for (c, &m) in coords.iter_mut().zip(&self.orders).rev() {
            *c = (idx % m as usize) as u32;
            idx /= m as usize;
        }
        GroupElement(coords)
    }

    pub fn index(&self, g: &GroupElement) -> Result<usize> {
        if g.0.len() != self.orders.len() || g.0.iter().zip(&self.orders).any(|(&c, &m)| c >= m) {
            return Err(Error::Mismatch(format!(
                "element {g} does not belong to the group {self}"
            )));
        }
        Ok(g.0
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c as usize))
    }

    /// Index of `k·a`; `k` may be negative.
    pub fn scale(&self, a: usize, k: i64) -> usize {
        let mut idx = 0usize;
        let mut rest = a;
        let mut stride = 1usize;
        for &m in self.orders.iter().rev() {
            let m = m as usize;
            let c = rest % m;
            rest /= m;
            let s = ((c as i64 * k).rem_euclid(m as i64)) as usize;
            idx += s * stride;
            stride *= m;
        }
        idx
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut idx = 0usize;
        let mut stride = 1usize;
        for &m in self.orders.iter().rev() {
            let m = m as usize;
            idx += ((a % m + b % m) % m) * stride;
            a /= m;
            b /= m;
            stride *= m;
        }
        idx
    }

    pub fn neg(&self, a: usize) -> usize {
        self.scale(a, -1)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Additive order of an element.
    pub fn element_order(&self, a: usize) -> u64 {
        self.element(a).0.iter().zip(&self.orders).fold(1u64, |acc, (&c, &m)| {
            let m = m as u64;
            lcm(acc, m / gcd(c as u64, m))
        })
    }

    /// Index of the generator of the `i`-th cyclic factor.
    pub fn factor_generator(&self, i: usize) -> usize {
        let mut coords = vec![0u32; self.orders.len()];
        if self.orders[i] > 1 {
            coords[i] = 1;
        }
        self.index(&GroupElement(coords)).unwrap()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|m| format!("C_{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for GroupElement {
    type Err = Error;

    /// Accepts `[2,4]` or `2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad group element {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GroupElement)
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Multiplicative order of `q` modulo `m` (`m ≥ 1`, `gcd(q, m) = 1`).
pub fn multiplicative_order(q: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = q % m;
    while x != 1 {
        x = x * (q % m) % m;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_radix_order_rightmost_fastest() {
        let h = AbelianGroup::new(vec![3, 3]).unwrap();
        assert_eq!(h.element(1), GroupElement(vec![0, 1]));
        assert_eq!(h.element(3), GroupElement(vec![1, 0]));
        for i in 0..h.order() {
            assert_eq!(h.index(&h.element(i)).unwrap(), i);
        }
    }

    #[test]
    fn arithmetic() {
        let h = AbelianGroup::new(vec![5, 5]).unwrap();
        let a = h.index(&GroupElement(vec![2, 4])).unwrap();
        let b = h.index(&GroupElement(vec![4, 3])).unwrap();
        assert_eq!(h.scale(a, 2), b);
        assert_eq!(h.add(a, h.neg(a)), 0);
        assert_eq!(h.element_order(a), 5);
        assert_eq!(h.element_order(0), 1);
        assert_eq!(h.exponent(), 5);
        assert!(h.is_noncyclic());
        assert!(!AbelianGroup::new(vec![2, 3]).unwrap().is_noncyclic());
    }

    #[test]
    fn parse_and_display() {
        let g: GroupElement = "[2,4]".parse().unwrap();
        assert_eq!(g.to_string(), "[2,4]");
        assert_eq!("1, 0".parse::<GroupElement>().unwrap(), GroupElement(vec![1, 0]));
        assert!("[a]".parse::<GroupElement>().is_err());
    }

    #[test]
    fn order_of_two_mod_m() {
        assert_eq!(multiplicative_order(2, 3), 2);
        assert_eq!(multiplicative_order(2, 5), 4);
        assert_eq!(multiplicative_order(2, 1), 1);
        assert_eq!(multiplicative_order(3, 5), 4);
    }
}
