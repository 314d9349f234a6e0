//! Semisimple decomposition `F_q[H] = ⊕ R·e_i` and the field isomorphisms
//! between each minimal ideal and its field `E_i ⊆ K`.
//!
//! Classes are indexed in order of their representatives (the smallest
//! member in group-lex order), so the class of `0` is always index 0.
//! `φ_i` and `ψ_i` use the character of the representative. A different
//! member `q^j·rep` of the same class gives the Frobenius-twisted maps
//! `φ_{q^j rep} = σ^j ∘ φ_i` and `ψ_{q^j rep} = ψ_i ∘ σ^{-j}`; see
//! [`SemisimpleDecomposition::resolve_member`].

use std::sync::Arc;

use crate::algebra::{
    build_tower_with_modulus, AbelianGroup, Characters, Fe, FieldSpec, GroupAlgebra, GroupAlgebraElement, GroupElement,
    Subfield,
};
use crate::error::{Error, Result};
use crate::linear_codes::{matrix, LinearCode};

/// Above this many coefficient products the pairwise orthogonality check is
/// done in the character domain instead of by convolution.
const DIRECT_CHECK_BUDGET: usize = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicClass {
    pub rep: GroupElement,
    /// `q^i · rep` for `i = 0..size`.
    pub members: Vec<GroupElement>,
    pub(crate) indices: Vec<usize>,
}

impl CyclotomicClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn rep_index(&self) -> usize {
        self.indices[0]
    }

    pub fn member_indices(&self) -> &[usize] {
        &self.indices
    }
}

/// q-cyclotomic classes of `H`, sorted by representative.
pub fn cyclotomic_classes(group: &AbelianGroup, q: u64) -> Result<Vec<CyclotomicClass>> {
    let order = group.order() as u64;
    if crate::algebra::group::gcd(q, order) != 1 {
        return Err(Error::NotSemisimple { q, order });
    }
    let mut seen = vec![false; group.order()];
    let mut classes = Vec::new();
    for h in 0..group.order() {
        if seen[h] {
            continue;
        }
        let mut indices = vec![h];
        seen[h] = true;
        let mut x = group.scale(h, q as i64);
        while x != h {
            seen[x] = true;
            indices.push(x);
            x = group.scale(x, q as i64);
        }
        classes.push(CyclotomicClass {
            rep: group.element(h),
            members: indices.iter().map(|&i| group.element(i)).collect(),
            indices,
        });
    }
    Ok(classes)
}

/// F_q-basis data for one minimal ideal: `β_j = ξ_i^j` and `ψ_i(β_j)`.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    /// Group element `g` with `ξ_i = φ_i(Y^g e_i) = χ_i(g)`.
    pub generator_element: usize,
    pub xi: Fe,
    pub basis: Vec<Fe>,
    /// Trace-dual basis: `Tr(β_a β*_b) = δ_ab`.
    pub dual_basis: Vec<Fe>,
    /// Rows `ψ_i(β_j)`: the materialized `F_q`-linear map `E_i → R e_i`.
    pub images: Vec<Vec<Fe>>,
}

#[derive(Debug)]
pub struct SemisimpleDecomposition {
    q: u64,
    algebra: GroupAlgebra,
    chars: Characters,
    base: Subfield,
    classes: Vec<CyclotomicClass>,
    class_of: Vec<usize>,
    idempotents: Vec<GroupAlgebraElement>,
    field_degrees: Vec<u32>,
    subfields: Vec<Subfield>,
    inv_m: Fe,
    /// `char_rows[i][h] = χ_{rep_i}(h)`.
    char_rows: Vec<Vec<Fe>>,
    bases: Vec<IdealBasis>,
}

/// Decompose `F_q[H]`, verifying every idempotent identity.
pub fn decompose_algebra(group: &AbelianGroup, q: u64) -> Result<SemisimpleDecomposition> {
    SemisimpleDecomposition::new(group, q, None)
}

impl SemisimpleDecomposition {
    pub fn new(group: &AbelianGroup, q: u64, modulus: Option<Vec<u32>>) -> Result<Self> {
        let field = Arc::new(build_tower_with_modulus(q, group, modulus)?);
        let classes = cyclotomic_classes(group, q)?;
        let chars = Characters::new(field.clone(), group.clone())?;
        let algebra = GroupAlgebra::new(field.clone(), group.clone());
        let m = group.order() as i64;
        let inv_m = field
            .inv(field.from_int(m))
            .ok_or(Error::NotSemisimple { q, order: m as u64 })?;
        let mut class_of = vec![0usize; group.order()];
        for (i, c) in classes.iter().enumerate() {
            for &h in &c.indices {
                class_of[h] = i;
            }
        }
        let base = Subfield::base(field.clone());
        let field_degrees: Vec<u32> = classes.iter().map(|c| c.size() as u32).collect();
        let subfields = field_degrees
            .iter()
            .map(|&k| Subfield::new(field.clone(), k))
            .collect::<Result<Vec<_>>>()?;
        let char_rows: Vec<Vec<Fe>> = classes
            .iter()
            .map(|c| (0..group.order()).map(|h| chars.value(c.rep_index(), h)).collect())
            .collect();

        let mut d = SemisimpleDecomposition {
            q,
            algebra,
            chars,
            base,
            classes,
            class_of,
            idempotents: Vec::new(),
            field_degrees,
            subfields,
            inv_m,
            char_rows,
            bases: Vec::new(),
        };
        d.idempotents = (0..d.classes.len())
            .map(|i| d.idempotent_f(i))
            .collect::<Result<Vec<_>>>()?;
        d.bases = (0..d.classes.len())
            .map(|i| d.ideal_basis(i))
            .collect::<Result<Vec<_>>>()?;
        d.verify()?;
        Ok(d)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        self.algebra.field()
    }

    pub fn group(&self) -> &AbelianGroup {
        self.algebra.group()
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn characters(&self) -> &Characters {
        &self.chars
    }

    /// The base field `F_q` as a subfield of `K`.
    pub fn base_field(&self) -> &Subfield {
        &self.base
    }

    pub fn classes(&self) -> &[CyclotomicClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn idempotents(&self) -> &[GroupAlgebraElement] {
        &self.idempotents
    }

    pub fn idempotent(&self, i: usize) -> &GroupAlgebraElement {
        &self.idempotents[i]
    }

    /// `k_i = |S_q(h_i)| = [E_i : F_q]`.
    pub fn field_degrees(&self) -> &[u32] {
        &self.field_degrees
    }

    /// `E_i` as a subfield of `K`.
    pub fn subfield(&self, i: usize) -> &Subfield {
        &self.subfields[i]
    }

    pub fn ideal_basis_data(&self, i: usize) -> &IdealBasis {
        &self.bases[i]
    }

    /// `1/|H|` in the prime field.
    pub fn inv_order(&self) -> Fe {
        self.inv_m
    }

    pub fn class_of_index(&self, h: usize) -> usize {
        self.class_of[h]
    }

    /// Class index of any member, and `j` with `member = q^j · rep`.
    pub fn resolve_member(&self, member: &GroupElement) -> Result<(usize, usize)> {
        let h = self.group().index(member)?;
        let i = self.class_of[h];
        let j = self.classes[i].indices.iter().position(|&x| x == h).unwrap();
        Ok((i, j))
    }

    fn check_class(&self, i: usize) -> Result<()> {
        if i >= self.classes.len() {
            return Err(Error::Invalid(format!(
                "class index {i} out of range (t = {})",
                self.classes.len()
            )));
        }
        Ok(())
    }

    /// `E_x = (1/m) Σ_a χ_x(−a) Y^a` in `K[H]`.
    pub fn idempotent_k(&self, x: &GroupElement) -> Result<GroupAlgebraElement> {
        let xi = self.group().index(x)?;
        Ok(GroupAlgebraElement::from_coeffs(self.idempotent_k_coeffs(xi)))
    }

    fn idempotent_k_coeffs(&self, x: usize) -> Vec<Fe> {
        let f = self.field();
        (0..self.group().order())
            .map(|a| f.mul(self.inv_m, self.chars.value(x, self.group().neg(a))))
            .collect()
    }

    /// `e_i = Σ_{x ∈ S_i} E_x`, which must have all coefficients in `F_q`.
    fn idempotent_f(&self, i: usize) -> Result<GroupAlgebraElement> {
        let f = self.field();
        let mut acc = vec![Fe::ZERO; self.group().order()];
        for &x in &self.classes[i].indices {
            for (a, e) in acc.iter_mut().zip(self.idempotent_k_coeffs(x)) {
                *a = f.add(*a, e);
            }
        }
        if let Some(&c) = acc.iter().find(|&&c| !self.base.contains(c)) {
            return Err(Error::Invariant(format!(
                "idempotent of class {} has coefficient {} outside F_q",
                self.classes[i].rep,
                f.format(c)
            )));
        }
        Ok(GroupAlgebraElement::from_coeffs(acc))
    }

    fn ideal_basis(&self, i: usize) -> Result<IdealBasis> {
        let f = self.field();
        let k = self.field_degrees[i];
        let generator_element = (0..self.group().order())
            .find(|&g| f.element_degree(self.char_rows[i][g]) == k)
            .ok_or_else(|| Error::Invariant(format!("no generator of E_{i} among character values")))?;
        let xi = self.char_rows[i][generator_element];
        let basis: Vec<Fe> = (0..k as u64).map(|j| f.pow(xi, j)).collect();
        let gram: Vec<Vec<Fe>> = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| f.trace_unchecked(f.mul(a, b), k)).collect())
            .collect();
        let inv =
            matrix::inverse(f, &gram).ok_or_else(|| Error::Invariant(format!("power basis of E_{i} is degenerate")))?;
        let dual_basis = (0..k as usize)
            .map(|j| {
                basis
                    .iter()
                    .enumerate()
                    .fold(Fe::ZERO, |acc, (l, &b)| f.add(acc, f.mul(inv[l][j], b)))
            })
            .collect();
        let images = basis.iter().map(|&b| self.psi_formula(i, b)).collect();
        Ok(IdealBasis {
            generator_element,
            xi,
            basis,
            dual_basis,
            images,
        })
    }

    fn verify(&self) -> Result<()> {
        let ga = &self.algebra;
        let n = self.group().order();
        let t = self.classes.len();
        let fail = |msg: String| Err(Error::Invariant(msg));

        let mut sum = ga.zero();
        for (i, e) in self.idempotents.iter().enumerate() {
            if &ga.mul(e, e)? != e {
                return fail(format!("e_{i}^2 != e_{i}"));
            }
            sum = ga.add(&sum, e)?;
        }
        if sum != ga.one() {
            return fail("sum of primitive idempotents is not Y^0".into());
        }
        if t * t * n * n <= DIRECT_CHECK_BUDGET {
            for i in 0..t {
                for j in i + 1..t {
                    if !ga.mul(&self.idempotents[i], &self.idempotents[j])?.is_zero() {
                        return fail(format!("e_{i} e_{j} != 0"));
                    }
                }
            }
        } else {
            // Fourier side: ê_i(x) = Σ_h e_i(h) χ_x(h); products are pointwise.
            let f = self.field();
            let hats: Vec<Vec<Fe>> = self
                .idempotents
                .iter()
                .map(|e| {
                    (0..n)
                        .map(|x| {
                            e.coeffs()
                                .iter()
                                .enumerate()
                                .fold(Fe::ZERO, |acc, (h, &c)| f.add(acc, f.mul(c, self.chars.value(x, h))))
                        })
                        .collect()
                })
                .collect();
            for x in 0..n {
                let nonzero = hats.iter().filter(|h| !h[x].is_zero()).count();
                if nonzero > 1 {
                    return fail(format!("idempotents not orthogonal at character {x}"));
                }
            }
        }
        for i in 0..t {
            let k = self.field_degrees[i] as usize;
            let rank = matrix::rank(self.base.spec(), &self.bases[i].images);
            if rank != k {
                return fail(format!("dim R e_{i} = {rank}, expected {k}"));
            }
        }
        Ok(())
    }

    /// `φ_i(r) = Σ α_h χ_i(h)` for `r ∈ R e_i`.
    pub fn phi(&self, i: usize, r: &GroupAlgebraElement) -> Result<Fe> {
        self.check_class(i)?;
        let re = self.algebra.mul(r, &self.idempotents[i])?;
        if &re != r {
            return Err(Error::NotInIdeal { class: i });
        }
        Ok(self.phi_coeffs(i, r.coeffs()))
    }

    /// `Σ α_h χ_i(h)` without the ideal check; equals `φ_i(r e_i)` for any `r`.
    pub(crate) fn phi_coeffs(&self, i: usize, coeffs: &[Fe]) -> Fe {
        let f = self.field();
        coeffs.iter().zip(&self.char_rows[i]).fold(
            Fe::ZERO,
            |acc, (&a, &c)| if a.is_zero() { acc } else { f.add(acc, f.mul(a, c)) },
        )
    }

    /// `ψ_i(δ) = Σ_k (1/m) Tr(δ χ_i(−k)) Y^k` for `δ ∈ E_i`.
    pub fn psi(&self, i: usize, delta: Fe) -> Result<GroupAlgebraElement> {
        self.check_class(i)?;
        if !self.subfields[i].contains(delta) {
            return Err(Error::NotInSubfield {
                degree: self.field_degrees[i],
            });
        }
        Ok(GroupAlgebraElement::from_coeffs(self.psi_formula(i, delta)))
    }

    fn psi_formula(&self, i: usize, delta: Fe) -> Vec<Fe> {
        let f = self.field();
        let k = self.field_degrees[i];
        (0..self.group().order())
            .map(|h| {
                let c = self.char_rows[i][self.group().neg(h)];
                f.mul(self.inv_m, f.trace_unchecked(f.mul(delta, c), k))
            })
            .collect()
    }

    /// `ψ_i` through the materialized linear map: `Σ_j Tr(δ β*_j) ψ_i(β_j)`.
    pub(crate) fn psi_linear(&self, i: usize, delta: Fe, out: &mut [Fe]) {
        let f = self.field();
        let b = &self.bases[i];
        let k = self.field_degrees[i];
        out.iter_mut().for_each(|x| *x = Fe::ZERO);
        if delta.is_zero() {
            return;
        }
        for (dual, image) in b.dual_basis.iter().zip(&b.images) {
            let c = f.trace_unchecked(f.mul(delta, *dual), k);
            if c.is_zero() {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(image) {
                *o = f.add(*o, f.mul(c, y));
            }
        }
    }

    /// The ideal `R e_i` as an `F_q`-linear code of length `|H|`.
    pub fn minimal_ideal_code(&self, i: usize) -> Result<LinearCode> {
        self.check_class(i)?;
        LinearCode::new(self.base.clone(), self.group().order(), self.bases[i].images.clone())
    }

    /// `R e_{i_1} ⊕ … ⊕ R e_{i_v}`.
    pub fn ideal_sum_code(&self, classes: &[usize]) -> Result<LinearCode> {
        let mut rows = Vec::new();
        for &i in classes {
            self.check_class(i)?;
            rows.extend(self.bases[i].images.iter().cloned());
        }
        LinearCode::new(self.base.clone(), self.group().order(), rows)
    }

    /// `Θ_i = (e_i, …, e_i) ∈ R^ℓ`.
    pub fn theta(&self, i: usize, index: usize) -> Vec<GroupAlgebraElement> {
        vec![self.idempotents[i].clone(); index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(orders: &[u32]) -> AbelianGroup {
        AbelianGroup::new(orders.to_vec()).unwrap()
    }

    fn ge(c: &[u32]) -> GroupElement {
        GroupElement(c.to_vec())
    }

    #[test]
    fn classes_c3c3() {
        let classes = cyclotomic_classes(&group(&[3, 3]), 2).unwrap();
        let members: Vec<Vec<GroupElement>> = classes.iter().map(|c| c.members.clone()).collect();
        assert_eq!(
            members,
            vec![
                vec![ge(&[0, 0])],
                vec![ge(&[0, 1]), ge(&[0, 2])],
                vec![ge(&[1, 0]), ge(&[2, 0])],
                vec![ge(&[1, 1]), ge(&[2, 2])],
                vec![ge(&[1, 2]), ge(&[2, 1])],
            ]
        );
    }

    #[test]
    fn classes_c5c5_and_trivial() {
        let classes = cyclotomic_classes(&group(&[5, 5]), 2).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 4, 4, 4, 4, 4, 4]);
        assert_eq!(cyclotomic_classes(&group(&[1]), 7).unwrap().len(), 1);
    }

    #[test]
    fn decomposition_degrees() {
        let d = decompose_algebra(&group(&[3, 3]), 2).unwrap();
        assert_eq!(d.field_degrees(), &[1, 2, 2, 2, 2]);
        let d = decompose_algebra(&group(&[5, 5]), 2).unwrap();
        assert_eq!(d.field_degrees(), &[1, 4, 4, 4, 4, 4, 4]);
        let d = decompose_algebra(&group(&[1]), 3).unwrap();
        assert_eq!(d.field_degrees(), &[1]);
    }

    #[test]
    fn e0_is_all_ones_for_binary_odd_order() {
        let d = decompose_algebra(&group(&[3, 3]), 2).unwrap();
        assert!(d.idempotent(0).coeffs().iter().all(|&c| c == Fe::ONE));
        let e0 = d.idempotent_k(&ge(&[0, 0])).unwrap();
        assert_eq!(&e0, d.idempotent(0));
    }

    #[test]
    fn k_idempotents_orthogonal() {
        let d = decompose_algebra(&group(&[3, 3]), 2).unwrap();
        let ga = GroupAlgebra::new(d.field().clone(), d.group().clone());
        let ex = d.idempotent_k(&ge(&[1, 2])).unwrap();
        let ey = d.idempotent_k(&ge(&[2, 0])).unwrap();
        assert!(ga.mul(&ex, &ey).unwrap().is_zero());
        assert_eq!(ga.mul(&ex, &ex).unwrap(), ex);
    }

    #[test]
    fn phi_psi_units() {
        let d = decompose_algebra(&group(&[5, 5]), 2).unwrap();
        for i in 0..d.num_classes() {
            assert_eq!(d.phi(i, d.idempotent(i)).unwrap(), Fe::ONE);
            assert_eq!(&d.psi(i, Fe::ONE).unwrap(), d.idempotent(i));
            assert!(d.psi(i, Fe::ZERO).unwrap().is_zero());
            assert_eq!(d.phi(i, &d.algebra().zero()).unwrap(), Fe::ZERO);
        }
    }

    #[test]
    fn phi_rejects_outside_ideal() {
        let d = decompose_algebra(&group(&[3, 3]), 2).unwrap();
        assert_eq!(d.phi(1, &d.algebra().one()), Err(Error::NotInIdeal { class: 1 }));
        // a generator of F_4 is not in E_0 = F_2
        let g = d.field().generator();
        assert!(matches!(d.psi(0, g), Err(Error::NotInSubfield { degree: 1 })));
    }

    #[test]
    fn linear_psi_matches_formula() {
        let d = decompose_algebra(&group(&[5, 5]), 2).unwrap();
        let n = d.group().order();
        let mut buf = vec![Fe::ZERO; n];
        for i in 0..d.num_classes() {
            for &delta in d.subfield(i).elements() {
                d.psi_linear(i, delta, &mut buf);
                assert_eq!(buf, d.psi(i, delta).unwrap().into_coeffs());
            }
        }
    }

    #[test]
    fn resolve_member_positions() {
        let d = decompose_algebra(&group(&[5, 5]), 2).unwrap();
        let (i, j) = d.resolve_member(&ge(&[2, 4])).unwrap();
        assert_eq!(d.classes()[i].rep, ge(&[1, 2]));
        assert_eq!(j, 1);
    }

    #[test]
    fn minimal_ideal_codes() {
        let d = decompose_algebra(&group(&[5, 5]), 2).unwrap();
        let c0 = d.minimal_ideal_code(0).unwrap();
        assert_eq!(c0.dimension(), 1);
        assert_eq!(crate::linear_codes::min_distance(&c0, 1 << 10).unwrap(), 25);
        let c1 = d.minimal_ideal_code(1).unwrap();
        assert_eq!(c1.dimension(), 4);
        assert_eq!(crate::linear_codes::min_distance(&c1, 1 << 10).unwrap(), 10);
    }

    #[test]
    fn nonsemisimple_rejected() {
        assert_eq!(
            decompose_algebra(&group(&[2, 2]), 2).unwrap_err(),
            Error::NotSemisimple { q: 2, order: 4 }
        );
    }
}
