//! The group algebra `F[H]` over a field of the tower.

use std::sync::Arc;

use super::field::{Fe, FieldSpec};
use super::group::AbelianGroup;
use crate::error::{Error, Result};

/// `Σ α_g Y^g`, dense in the group-lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    coeffs: Vec<Fe>,
}

impl GroupAlgebraElement {
    pub fn from_coeffs(coeffs: Vec<Fe>) -> Self {
        GroupAlgebraElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

#[derive(Clone, Debug)]
pub struct GroupAlgebra {
    field: Arc<FieldSpec>,
    group: AbelianGroup,
    /// `sum[a * |H| + b]` = index of `a + b`.
    sum: Arc<[u32]>,
}

impl GroupAlgebra {
    pub fn new(field: Arc<FieldSpec>, group: AbelianGroup) -> Self {
        let n = group.order();
        let mut sum = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                sum.push(group.add(a, b) as u32);
            }
        }
        GroupAlgebra {
            field,
            group,
            sum: sum.into(),
        }
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub(crate) fn sum_index(&self, a: usize, b: usize) -> usize {
        self.sum[a * self.dim() + b] as usize
    }

    pub fn zero(&self) -> GroupAlgebraElement {
        GroupAlgebraElement::from_coeffs(vec![Fe::ZERO; self.dim()])
    }

    /// `Y^0`.
    pub fn one(&self) -> GroupAlgebraElement {
        self.monomial(0)
    }

    /// `Y^h` for the element with index `h`.
    pub fn monomial(&self, h: usize) -> GroupAlgebraElement {
        let mut c = vec![Fe::ZERO; self.dim()];
        c[h] = Fe::ONE;
        GroupAlgebraElement::from_coeffs(c)
    }

    pub fn element(&self, coeffs: Vec<Fe>) -> Result<GroupAlgebraElement> {
        self.check_len(coeffs.len())?;
        Ok(GroupAlgebraElement::from_coeffs(coeffs))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.dim() {
            return Err(Error::Mismatch(format!(
                "group algebra element of length {len} used with |H| = {}",
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_len(a.coeffs.len())?;
        self.check_len(b.coeffs.len())?;
        Ok(GroupAlgebraElement::from_coeffs(
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| self.field.add(x, y))
                .collect(),
        ))
    }

    pub fn scale(&self, c: Fe, a: &GroupAlgebraElement) -> GroupAlgebraElement {
        GroupAlgebraElement::from_coeffs(a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect())
    }

    /// Group convolution `(ab)_g = Σ_{u+v=g} a_u b_v`.
    pub fn mul(&self, a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<GroupAlgebraElement> {
        self.check_len(a.coeffs.len())?;
        self.check_len(b.coeffs.len())?;
        Ok(GroupAlgebraElement::from_coeffs(self.convolve(&a.coeffs, &b.coeffs)))
    }

    pub(crate) fn convolve(&self, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
        let n = self.dim();
        let mut out = vec![Fe::ZERO; n];
        for (u, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let row = &self.sum[u * n..(u + 1) * n];
            for (v, &y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let g = row[v] as usize;
                out[g] = self.field.add(out[g], self.field.mul(x, y));
            }
        }
        out
    }

    /// `Y^h · a`: coefficient at `k` moves to `k + h`.
    pub(crate) fn translate(&self, a: &[Fe], h: usize) -> Vec<Fe> {
        let mut out = vec![Fe::ZERO; self.dim()];
        for (k, &c) in a.iter().enumerate() {
            out[self.sum_index(k, h)] = c;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group::GroupElement;

    fn f2_c3c3() -> GroupAlgebra {
        let field = Arc::new(FieldSpec::new(2, 1).unwrap());
        GroupAlgebra::new(field, AbelianGroup::new(vec![3, 3]).unwrap())
    }

    fn idx(ga: &GroupAlgebra, c: &[u32]) -> usize {
        ga.group().index(&GroupElement(c.to_vec())).unwrap()
    }

    #[test]
    fn identity_and_monomials() {
        let ga = f2_c3c3();
        let a = ga.add(&ga.monomial(idx(&ga, &[1, 2])), &ga.monomial(4)).unwrap();
        assert_eq!(ga.mul(&a, &ga.one()).unwrap(), a);
        assert_eq!(ga.mul(&ga.one(), &a).unwrap(), a);
        let g = idx(&ga, &[1, 2]);
        let h = idx(&ga, &[2, 2]);
        assert_eq!(
            ga.mul(&ga.monomial(g), &ga.monomial(h)).unwrap(),
            ga.monomial(idx(&ga, &[0, 1]))
        );
    }

    #[test]
    fn square_of_binomial_in_char_2() {
        let ga = f2_c3c3();
        let a = ga
            .add(&ga.monomial(idx(&ga, &[1, 0])), &ga.monomial(idx(&ga, &[0, 1])))
            .unwrap();
        let expected = ga
            .add(&ga.monomial(idx(&ga, &[2, 0])), &ga.monomial(idx(&ga, &[0, 2])))
            .unwrap();
        assert_eq!(ga.mul(&a, &a).unwrap(), expected);
    }

    #[test]
    fn length_mismatch_rejected() {
        let ga = f2_c3c3();
        let short = GroupAlgebraElement::from_coeffs(vec![Fe::ONE; 3]);
        assert!(ga.mul(&short, &ga.one()).is_err());
        assert!(ga.add(&ga.one(), &short).is_err());
    }
}
