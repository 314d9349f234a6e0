mod common;

use std::sync::Arc;

use proptest::prelude::*;

use qacodes::algebra::{character, AbelianGroup, Fe, FieldSpec, GroupElement, Subfield};
use qacodes::concatenation::{is_qa, qa_from_constituents, Assignment};
use qacodes::idempotents::SemisimpleDecomposition;
use qacodes::linear_codes::{
    count_codes, enumerate_codes, gaussian_binomial, min_distance, weight_distribution_with, LinearCode,
};
use qacodes::Exec;

const FIELDS: [(u64, u32); 9] = [(2, 1), (3, 1), (4, 1), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (4, 2)];

fn field(i: usize) -> Arc<FieldSpec> {
    let (q, t) = FIELDS[i];
    Arc::new(FieldSpec::new(q, t).unwrap())
}

fn elem(f: &FieldSpec, x: u32) -> Fe {
    f.elements().nth(x as usize % f.size() as usize).unwrap()
}

/// A field index with a small random code over its base field.
fn code_strategy() -> impl Strategy<Value = (usize, usize, Vec<Vec<u32>>)> {
    (0usize..5, 1usize..=7).prop_flat_map(|(fi, n)| {
        (
            Just(fi),
            Just(n),
            prop::collection::vec(prop::collection::vec(any::<u32>(), n), 0..=n.min(4)),
        )
    })
}

fn build(fi: usize, n: usize, rows: &[Vec<u32>]) -> LinearCode {
    let f = field(fi);
    let rows = rows.iter().map(|r| r.iter().map(|&x| elem(&f, x)).collect()).collect();
    LinearCode::new(Subfield::base(f), n, rows).unwrap()
}

/// Number of `k`-dimensional subspaces of `F_q^n` from the product formula.
fn subspace_count(n: usize, k: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(fi in 0usize..FIELDS.len(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(fi);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
        prop_assert_eq!(f.pow(a, f.size() as u64), a);
    }

    #[test]
    fn frobenius_and_trace(fi in 0usize..FIELDS.len(), a in any::<u32>(), b in any::<u32>()) {
        let f = field(fi);
        let (a, b) = (elem(&f, a), elem(&f, b));
        let t = f.tower_degree() as i64;
        prop_assert_eq!(f.frobenius(a, t), a);
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
        let tr = f.trace(a, f.tower_degree()).unwrap();
        prop_assert!(f.in_subfield(tr, 1));
        prop_assert_eq!(tr, common::trace(&f, f.q(), f.tower_degree(), a));
    }

    #[test]
    fn rref_is_canonical((fi, n, rows) in code_strategy(), perm_seed in any::<u64>()) {
        let c = build(fi, n, &rows);
        let again = LinearCode::new(c.field().clone(), n, c.generators().to_vec()).unwrap();
        prop_assert_eq!(&again, &c);
        let mut shuffled = rows.clone();
        if !shuffled.is_empty() {
            let k = shuffled.len();
            shuffled.rotate_left((perm_seed as usize) % k);
        }
        prop_assert_eq!(build(fi, n, &shuffled), c.clone());
        prop_assert_eq!(c.dimension(), common::rank(c.field().spec(), build(fi, n, &rows).generators()));
    }

    #[test]
    fn dual_is_an_involution((fi, n, rows) in code_strategy()) {
        let c = build(fi, n, &rows);
        let dual = c.dual();
        prop_assert_eq!(c.dimension() + dual.dimension(), n);
        prop_assert_eq!(dual.dual(), c.clone());
        let f = c.field().spec();
        for g in c.generators() {
            for h in dual.generators() {
                prop_assert!(common::dot(f, g, h).is_zero());
            }
        }
    }

    #[test]
    fn hull_matches_intersection((fi, n, rows) in code_strategy()) {
        let c = build(fi, n, &rows);
        prop_assert_eq!(c.hull_dimension(), common::hull_dimension_explicit(&c));
    }

    #[test]
    fn weights_match_the_oracle_and_singleton((fi, n, rows) in code_strategy()) {
        let c = build(fi, n, &rows);
        let seq = weight_distribution_with(&c, 1 << 20, Exec::Sequential).unwrap();
        let par = weight_distribution_with(&c, 1 << 20, Exec::Parallel).unwrap();
        prop_assert_eq!(&seq, &par);
        prop_assert_eq!(&seq, &common::weight_distribution(&c));
        prop_assert_eq!(seq.iter().sum::<u64>() as u128, c.size());
        if c.dimension() > 0 {
            let d = min_distance(&c, 1 << 20).unwrap();
            prop_assert!(d + c.dimension() <= n + 1);
        }
    }

    #[test]
    fn characters_are_multiplicative(a in any::<(u32, u32)>(), b in any::<(u32, u32)>(), h in any::<(u32, u32)>(), k in any::<(u32, u32)>()) {
        let g = AbelianGroup::new(vec![3, 5]).unwrap();
        let f = Arc::new(FieldSpec::new(2, 4).unwrap().with_root_of_unity(15).unwrap());
        let el = |x: (u32, u32)| GroupElement(vec![x.0 % 3, x.1 % 5]);
        let add = |x: &GroupElement, y: &GroupElement| GroupElement(vec![(x.0[0] + y.0[0]) % 3, (x.0[1] + y.0[1]) % 5]);
        let (a, b, h, k) = (el(a), el(b), el(h), el(k));
        let chi = |x: &GroupElement, y: &GroupElement| character(x, y, &f, &g).unwrap();
        prop_assert_eq!(chi(&a, &add(&h, &k)), f.mul(chi(&a, &h), chi(&a, &k)));
        prop_assert_eq!(chi(&add(&a, &b), &h), f.mul(chi(&a, &h), chi(&b, &h)));
        prop_assert_eq!(chi(&a, &h), chi(&h, &a));
    }

    #[test]
    fn random_qa_codes_are_modules(seed in any::<u64>(), index in 1usize..=3) {
        let d = Arc::new(SemisimpleDecomposition::new(&AbelianGroup::new(vec![3, 3]).unwrap(), 2, None).unwrap());
        let mut a = Assignment::new();
        let mut s = seed;
        for i in 0..d.num_classes() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if s >> 63 == 1 {
                let sub = d.subfield(i);
                let row = (0..index).map(|j| sub.elements()[((s >> (8 * j + 8)) as usize) % sub.elements().len()]).collect();
                let c = LinearCode::new(sub.clone(), index, vec![row]).unwrap();
                if c.dimension() > 0 {
                    a.insert(i, c);
                }
            }
        }
        let qa = qa_from_constituents(d.clone(), index, a).unwrap();
        prop_assert!(is_qa(&d, qa.flattened()).unwrap());
    }
}

#[test]
fn enumerated_code_counts() {
    // The last field is F_4 with F_2 as its base, so codes are binary.
    for (q, t) in [(2u64, 1u32), (3, 1), (4, 1), (2, 2)] {
        let sub = Subfield::base(Arc::new(FieldSpec::new(q, t).unwrap()));
        let order = sub.order();
        for n in 1..=4 {
            let codes: Vec<LinearCode> = enumerate_codes(&sub, n, 1 << 20).unwrap().collect();
            let expected: u128 = (0..=n).map(|k| subspace_count(n, k, order)).sum();
            assert_eq!(codes.len() as u128, expected, "q={order}, n={n}");
            assert_eq!(count_codes(n, order), expected);
            for k in 0..=n {
                let got = codes.iter().filter(|c| c.dimension() == k).count() as u128;
                assert_eq!(got, gaussian_binomial(n, k, order));
                assert_eq!(got, subspace_count(n, k, order));
            }
            let mut sorted = codes.clone();
            sorted.sort_by(|a, b| {
                a.generators()
                    .cmp(b.generators())
                    .then(a.dimension().cmp(&b.dimension()))
            });
            sorted.dedup();
            assert_eq!(sorted.len(), codes.len(), "duplicates for q={order}, n={n}");
        }
    }
}
