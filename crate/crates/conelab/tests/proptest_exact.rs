//! Property-based invariants over the exact scalar and lattice kernel.

use conelab::lattice::sublattice_intersection_q;
use conelab::mat::IntMatrix;
use conelab::num::{Int, QuadNum, Rat};
use conelab::vecs::{int_vec, primitive};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rat::new(Int::from(p), Int::from(q)))
}

fn quadnum(n: u64) -> impl Strategy<Value = QuadNum> {
    (small_rat(), small_rat()).prop_map(move |(a, b)| QuadNum::new(a, b, n).unwrap())
}

proptest! {
    #[test]
    fn quadnum_field_identities(x in quadnum(2), y in quadnum(2), z in quadnum(2)) {
        let lhs = x.checked_mul(&y.checked_add(&z).unwrap()).unwrap();
        let rhs = x.checked_mul(&y).unwrap().checked_add(&x.checked_mul(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let assoc_l = x.checked_mul(&y).unwrap().checked_mul(&z).unwrap();
        let assoc_r = x.checked_mul(&y.checked_mul(&z).unwrap()).unwrap();
        prop_assert_eq!(assoc_l, assoc_r);
    }

    #[test]
    fn quadnum_sign_is_multiplicative(x in quadnum(3), y in quadnum(3)) {
        let prod = x.checked_mul(&y).unwrap();
        prop_assert_eq!(prod.sign(), x.sign() * y.sign());
    }

    #[test]
    fn quadnum_floor_brackets_value(x in quadnum(5)) {
        let f = x.floor();
        let lo = QuadNum::rational(Rat::from_integer(f.clone()));
        let hi = QuadNum::rational(Rat::from_integer(&f + Int::one()));
        prop_assert!(x.checked_sub(&lo).unwrap().sign() >= 0);
        prop_assert!(hi.checked_sub(&x).unwrap().sign() > 0);
    }

    #[test]
    fn primitive_is_idempotent(v in proptest::collection::vec(-30i64..=30, 1..5)) {
        let x = int_vec(&v);
        let p = primitive(&x);
        prop_assert_eq!(primitive(&p.clone()), p.clone());
        // primitivization preserves the ray: x = g * p for g >= 0
        if !x.iter().all(|c| c.is_zero()) {
            let i = p.iter().position(|c| !c.is_zero()).unwrap();
            let g = &x[i] / &p[i];
            prop_assert!(!g.is_negative() || x[i].is_negative() == p[i].is_negative());
            for k in 0..x.len() {
                prop_assert_eq!(x[k].clone(), &g * &p[k]);
            }
        }
    }

    #[test]
    fn hnf_is_invariant_under_row_shuffles(
        rows in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 3), 1..4),
        swap in any::<bool>(),
    ) {
        let m = IntMatrix::from_rows(rows.iter().map(|r| int_vec(r)).collect());
        let mut shuffled = rows.clone();
        let last = shuffled.len() - 1;
        if swap && last > 0 {
            shuffled.swap(0, last);
        }
        let m2 = IntMatrix::from_rows(shuffled.iter().map(|r| int_vec(r)).collect());
        let (h1, _) = m.hnf();
        let (h2, _) = m2.hnf();
        // the row lattice is the same, so the HNFs agree up to trailing zeros
        let nonzero = |h: &IntMatrix| -> Vec<Vec<Int>> {
            (0..h.rows)
                .map(|i| h.row(i))
                .filter(|r| r.iter().any(|x| !x.is_zero()))
                .collect()
        };
        prop_assert_eq!(nonzero(&h1), nonzero(&h2));
    }

    #[test]
    fn sublattice_intersection_rejects_irrational(
        a in small_rat(), b in small_rat(),
    ) {
        prop_assume!(!b.is_zero());
        let v = vec![QuadNum::new(a, b, 2).unwrap(), QuadNum::one()];
        let r = sublattice_intersection_q(2, &[v]);
        prop_assert!(matches!(r, Err(conelab::Error::IrrationalInput)));
    }
}
