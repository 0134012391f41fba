//! Property tests: field axioms, and group invariants that must not depend
//! on how a group was presented.

use irratio_core::analysis::conjugacy_classes;
use irratio_core::constructions::basic::{cyclic, symmetric};
use irratio_core::element::Element;
use irratio_core::law::PermLaw;
use irratio_core::{crosscheck_nc, is_irrational, power_orbit, FieldCtx, Group};
use proptest::prelude::*;
use std::sync::Arc;

const FIELD_ORDERS: [u64; 8] = [2, 3, 4, 5, 8, 9, 16, 49];

fn field_and_elems() -> impl Strategy<Value = (Arc<FieldCtx>, u32, u32, u32)> {
    prop::sample::select(FIELD_ORDERS.to_vec()).prop_flat_map(|q| {
        let f = FieldCtx::with_order(q).unwrap();
        let n = f.size();
        (Just(f), 0..n, 0..n, 0..n)
    })
}

proptest! {
    #[test]
    fn field_axioms((f, a, b, c) in field_and_elems()) {
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        match f.inv(a) {
            Some(i) => prop_assert_eq!(f.mul(a, i), f.one()),
            None => prop_assert_eq!(a, f.zero()),
        }
    }

    #[test]
    fn qth_power_is_identity((f, a, _b, _c) in field_and_elems()) {
        // a^q = a in GF(q)
        prop_assert_eq!(f.pow(a, f.size() as u64), a);
    }

    /// Random permutations of 6 points: the group they generate has an order
    /// and irrationality verdict independent of generator order, and the
    /// power-orbit test agrees with the direct normalizer scan.
    #[test]
    fn generator_order_is_irrelevant(
        a in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle(),
        b in Just((0u32..6).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let law = Arc::new(PermLaw { degree: 6 });
        let g1 = Group::new(law.clone(), vec![Element::perm(a.clone()), Element::perm(b.clone())], "g1").unwrap();
        let g2 = Group::new(law, vec![Element::perm(b), Element::perm(a)], "g2").unwrap();
        prop_assert_eq!(g1.order().unwrap(), g2.order().unwrap());
        prop_assert_eq!(is_irrational(&g1).unwrap(), is_irrational(&g2).unwrap());
        let c1 = conjugacy_classes(&g1).unwrap();
        let c2 = conjugacy_classes(&g2).unwrap();
        prop_assert_eq!(c1.len(), c2.len());
        for &x in c1.reps() {
            prop_assert_eq!(power_orbit(&g1, x).unwrap().is_trivial(), crosscheck_nc(&g1, x).unwrap());
        }
    }
}

#[test]
fn class_sizes_sum_to_order() {
    for g in [symmetric(5).unwrap(), cyclic(12).unwrap()] {
        let cl = conjugacy_classes(&g).unwrap();
        let total: usize = (0..cl.len()).map(|c| cl.size(c)).sum();
        assert_eq!(total, g.order().unwrap());
    }
}
