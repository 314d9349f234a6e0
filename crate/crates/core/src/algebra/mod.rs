//! Exact arithmetic: prime-power fields, finite abelian groups, characters
//! and the group algebra `F_q[H]`.

pub mod field;
pub mod group;
pub mod group_algebra;
pub(crate) mod poly;

use std::sync::Arc;

pub use field::{parse_digits, prime_power, Fe, FieldSpec, RootOfUnity, Subfield};
pub use group::{multiplicative_order, AbelianGroup, GroupElement};
pub use group_algebra::{GroupAlgebra, GroupAlgebraElement};

use crate::error::{Error, Result};

/// Splitting field `K = F_q(ξ)` for the exponent `M` of `H`, with `ξ`
/// designated. `[K : F_q]` is the multiplicative order of `q` modulo `M`.
pub fn build_tower(q: u64, group: &AbelianGroup) -> Result<FieldSpec> {
    build_tower_with_modulus(q, group, None)
}

pub fn build_tower_with_modulus(q: u64, group: &AbelianGroup, modulus: Option<Vec<u32>>) -> Result<FieldSpec> {
    field::prime_power(q)?;
    let order = group.order() as u64;
    if group::gcd(q, order) != 1 {
        return Err(Error::NotSemisimple { q, order });
    }
    let m = group.exponent();
    let degree = multiplicative_order(q, m) as u32;
    let spec = match modulus {
        Some(f) => FieldSpec::with_modulus(q, degree, f)?,
        None => FieldSpec::new(q, degree)?,
    };
    spec.with_root_of_unity(m)
}

/// Character values `χ_a(h) = ξ^(Σ a_i h_i M/m_i)` for one `(K, H)` pair.
#[derive(Clone, Debug)]
pub struct Characters {
    field: Arc<FieldSpec>,
    group: AbelianGroup,
    xi_powers: Vec<Fe>,
}

impl Characters {
    pub fn new(field: Arc<FieldSpec>, group: AbelianGroup) -> Result<Self> {
        let m = group.exponent();
        let root = field.root().filter(|r| r.order == m).ok_or_else(|| {
            Error::Mismatch(format!(
                "field has no designated primitive {m}-th root of unity for {group}"
            ))
        })?;
        let xi_powers = (0..m).map(|e| field.pow(root.element, e)).collect();
        Ok(Characters {
            field,
            group,
            xi_powers,
        })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Exponent of `ξ` in `χ_a(h)`, reduced mod `M`.
    pub fn exponent(&self, a: usize, h: usize) -> u64 {
        let m = self.group.exponent();
        let ac = self.group.element(a);
        let hc = self.group.element(h);
        ac.0.iter()
            .zip(&hc.0)
            .zip(self.group.factors())
            .fold(0u64, |acc, ((&ai, &hi), &mi)| {
                (acc + ai as u64 * hi as u64 % mi as u64 * (m / mi as u64)) % m
            })
    }

    pub fn value(&self, a: usize, h: usize) -> Fe {
        self.xi_powers[self.exponent(a, h) as usize]
    }

    /// `ξ^e`.
    pub fn xi_power(&self, e: u64) -> Fe {
        self.xi_powers[(e % self.xi_powers.len() as u64) as usize]
    }
}

/// `χ_a(h)` for explicit group elements.
pub fn character(a: &GroupElement, h: &GroupElement, field: &Arc<FieldSpec>, group: &AbelianGroup) -> Result<Fe> {
    let chars = Characters::new(field.clone(), group.clone())?;
    Ok(chars.value(group.index(a)?, group.index(h)?))
}
