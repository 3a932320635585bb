//! Property tests for the geometric kernel: reconstruction identities for
//! the normal forms, duality involutions, conversion cross-checks against an
//! independent Fourier-Motzkin oracle, face extremality, quotient duality,
//! and the exact-sign cross-check for quadratic numbers.

mod common;

use common::*;
use conelab::cone::{caratheodory, Cone};
use conelab::lattice::{in_lattice, saturate_subgroup, split_quotient};
use conelab::mat::IntMatrix;
use conelab::num::{isqrt, Int, QuadNum, Rat};
use conelab::vecs::{dot, int_to_rat, neg, IntVec};
use num_traits::{One, Signed, Zero};
use rand::Rng;

#[test]
fn hnf_snf_reconstruction_on_random_matrices() {
    let mut r = rng(11);
    for trial in 0..1000 {
        let rows = r.gen_range(1..=4);
        let cols = r.gen_range(1..=4);
        let m = IntMatrix::from_rows(
            (0..rows).map(|_| random_int_vec(&mut r, cols, 20)).collect(),
        );
        let (h, u) = m.hnf();
        assert_eq!(u.mul(&m), h, "U*A = H failed at trial {}", trial);
        assert_eq!(u.det().abs(), Int::one(), "U not unimodular at trial {}", trial);
        let (s, us, vs) = m.snf();
        assert_eq!(us.mul(&m).mul(&vs), s, "U*A*V = S failed at trial {}", trial);
        assert_eq!(us.det().abs(), Int::one());
        assert_eq!(vs.det().abs(), Int::one());
        // diagonal, nonnegative, divisibility chain
        for i in 0..s.rows {
            for j in 0..s.cols {
                if i != j {
                    assert!(s[(i, j)].is_zero());
                }
            }
        }
        let k = s.rows.min(s.cols);
        for i in 0..k {
            assert!(!s[(i, i)].is_negative());
            if i + 1 < k && !s[(i, i)].is_zero() {
                assert!(
                    (&s[(i + 1, i + 1)] % &s[(i, i)]).is_zero(),
                    "divisibility chain broken at trial {}",
                    trial
                );
            }
        }
    }
}

#[test]
fn saturation_idempotent_and_split_sections() {
    let mut r = rng(12);
    for _ in 0..200 {
        let d = r.gen_range(1..=4);
        let k = r.gen_range(1..=d);
        let cols: Vec<IntVec> = (0..k).map(|_| random_int_vec(&mut r, d, 9)).collect();
        let gens = IntMatrix::from_cols(cols);
        let s1 = saturate_subgroup(&gens).unwrap();
        let s2 = saturate_subgroup(&s1).unwrap();
        for j in 0..s1.cols {
            assert!(in_lattice(&s2, &s1.col(j)));
        }
        for j in 0..s2.cols {
            assert!(in_lattice(&s1, &s2.col(j)));
        }
        // a split section exists for every saturated sublattice
        let section = split_quotient(&s1, d).unwrap();
        section.validate().unwrap();
        for j in 0..s1.cols {
            assert!(section.project(&s1.col(j)).iter().all(|x| x.is_zero()));
        }
    }
}

#[test]
fn quadnum_sign_agrees_with_interval_arithmetic() {
    // 100-decimal-digit rational bounds on sqrt(n) (tightened adaptively);
    // the exact a^2 vs n b^2 rule stays authoritative.
    let mut r = rng(13);
    let radicands = [2u64, 3, 5, 7, 10];
    for trial in 0..10_000 {
        let n = radicands[trial % radicands.len()];
        let a = Rat::new(Int::from(r.gen_range(-50i64..=50)), Int::from(r.gen_range(1i64..=20)));
        let b = Rat::new(Int::from(r.gen_range(-50i64..=50)), Int::from(r.gen_range(1i64..=20)));
        let q = QuadNum::new(a.clone(), b.clone(), n).unwrap();
        let exact = q.sign();
        let mut digits = 100u32;
        loop {
            let scale = Int::from(10u32).pow(digits);
            let lo = isqrt(&(Int::from(n) * &scale * &scale)); // floor(sqrt(n)*10^d)
            let lo = Rat::new(lo.clone(), scale.clone());
            let hi = &lo + Rat::new(Int::one(), scale.clone());
            // value in [a + b*lo, a + b*hi] (order depends on sign of b)
            let v1 = &a + &b * &lo;
            let v2 = &a + &b * &hi;
            let (lo_v, hi_v) = if v1 <= v2 { (v1, v2) } else { (v2, v1) };
            if lo_v.is_positive() {
                assert_eq!(exact, 1, "interval positive but exact {} at {:?}", exact, q);
                break;
            }
            if hi_v.is_negative() {
                assert_eq!(exact, -1, "interval negative but exact {} at {:?}", exact, q);
                break;
            }
            if lo_v.is_zero() && hi_v.is_zero() {
                assert_eq!(exact, 0);
                break;
            }
            // interval straddles zero: a + b*sqrt(n) = 0 only when a = b = 0
            if a.is_zero() && b.is_zero() {
                assert_eq!(exact, 0);
                break;
            }
            digits *= 2;
            assert!(digits <= 1600, "interval never resolved for {:?}", q);
        }
    }
}

#[test]
fn duality_involution_on_random_cones() {
    let mut r = rng(14);
    for trial in 0..250 {
        let d = r.gen_range(1..=4);
        let c = random_cone(&mut r, d, 5, 8);
        let dd = c.dual().unwrap().dual().unwrap();
        assert_eq!(
            c.rays_int().unwrap(),
            dd.rays_int().unwrap(),
            "rays changed under double dual at trial {}",
            trial
        );
        assert_eq!(c.lineality_int().unwrap(), dd.lineality_int().unwrap());
        assert_eq!(c.facet_normals().unwrap(), dd.facet_normals().unwrap());
    }
}

#[test]
fn conversion_matches_fourier_motzkin_oracle() {
    let mut r = rng(15);
    for trial in 0..120 {
        let d = r.gen_range(2..=3);
        let c = random_cone(&mut r, d, 4, 6);
        let gens = c.generators_int().unwrap();
        let oracle = fm_inequalities(d, &gens);
        for x in box_points(d, 4) {
            let via_cone = c.contains_lattice(&x).unwrap();
            let via_fm = satisfies_all(&oracle, &x);
            assert_eq!(
                via_cone, via_fm,
                "FM oracle disagrees at {:?} (trial {})",
                x, trial
            );
        }
    }
}

#[test]
fn h_to_v_direction_against_fm_oracle() {
    // start from inequalities: the derived generators, pushed through the
    // independent Fourier-Motzkin conversion, must describe the same set as
    // the original constraints
    let mut r = rng(21);
    for trial in 0..120 {
        let d = r.gen_range(2..=3);
        let k = r.gen_range(1..=d + 2);
        let normals: Vec<IntVec> = (0..k)
            .map(|_| random_int_vec(&mut r, d, 4))
            .filter(|n| !n.iter().all(|x| x.is_zero()))
            .collect();
        if normals.is_empty() {
            continue;
        }
        let cone = Cone::from_parts(
            d,
            None,
            None,
            Some(
                normals
                    .iter()
                    .map(|n| conelab::cone::HalfSpace::new(conelab::vecs::int_to_q(n), false))
                    .collect(),
            ),
        )
        .unwrap();
        let gens = cone.generators_int().unwrap();
        let fm = fm_inequalities(d, &gens);
        for x in box_points(d, 4) {
            let original = satisfies_all(&normals, &x);
            let via_fm = satisfies_all(&fm, &x);
            assert_eq!(
                original, via_fm,
                "H-to-V vs FM mismatch at {:?} (trial {})",
                x, trial
            );
        }
    }
}

#[test]
fn face_extremality_property() {
    let mut r = rng(16);
    for _ in 0..40 {
        let d = r.gen_range(2..=3);
        let c = random_pointed_cone(&mut r, d, 4, d + 2);
        // faces cut by each facet normal
        for phi in c.facet_normals().unwrap() {
            let tau = c.face(phi).unwrap();
            let pts = box_points(d, 4);
            for x in &pts {
                if !c.contains_lattice(x).unwrap() {
                    continue;
                }
                for y in &pts {
                    if !c.contains_lattice(y).unwrap() {
                        continue;
                    }
                    let s = conelab::vecs::add(x, y);
                    if tau.contains_lattice(&s).unwrap() {
                        assert!(
                            tau.contains_lattice(x).unwrap() && tau.contains_lattice(y).unwrap(),
                            "face fails extremality at {:?} + {:?}",
                            x,
                            y
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_strong_convexity_and_dual_of_quotient() {
    let mut r = rng(17);
    for _ in 0..60 {
        let d = r.gen_range(2..=3);
        let c = random_cone(&mut r, d, 4, 6);
        let (q, section) = c.quotient_by_lineality().unwrap();
        assert!(q.is_pointed(), "quotient must be strongly convex");
        assert!(q.lineality_int().unwrap().is_empty());
        if section.quotient_rank() == d {
            continue; // trivial quotient: nothing more to check
        }
        // dual of the quotient embeds as sigma-dual intersect ker(pi)-perp:
        // compare membership over a dual-space box
        let dual = c.dual().unwrap();
        let qdual = q.dual().unwrap();
        let kernel_cols = section.kernel_basis.cols_vec();
        for phi in box_points(d, 3) {
            // in the embedded image iff phi kills the kernel and the induced
            // functional lies in the quotient dual
            let kills = kernel_cols.iter().all(|kcol| dot(&phi, kcol).is_zero());
            let lhs = if kills {
                // induced functional on the quotient: psi = phi o section
                let psi: IntVec = (0..section.quotient_rank())
                    .map(|j| dot(&phi, &section.section.col(j)))
                    .collect();
                qdual.contains_lattice(&psi).unwrap()
            } else {
                false
            };
            let rhs = dual.contains_lattice(&phi).unwrap() && kills;
            assert_eq!(lhs, rhs, "dual-of-quotient mismatch at {:?}", phi);
        }
    }
}

#[test]
fn caratheodory_random_instances() {
    let mut r = rng(18);
    for _ in 0..300 {
        let d = r.gen_range(2..=3);
        let k = r.gen_range(d..=d + 3);
        let gens: Vec<Vec<Rat>> = (0..k)
            .map(|_| int_to_rat(&random_int_vec(&mut r, d, 5)))
            .collect();
        // a random nonnegative rational combination stays in the cone
        let mut x = vec![Rat::zero(); d];
        for g in &gens {
            let c = Rat::new(Int::from(r.gen_range(0i64..=6)), Int::from(r.gen_range(1i64..=3)));
            for i in 0..d {
                x[i] += &g[i] * &c;
            }
        }
        let decomp = caratheodory(&gens, &x).unwrap();
        // linear independence of the support
        let cols: Vec<IntVec> = decomp
            .iter()
            .map(|(_, g, _)| {
                conelab::vecs::rat_to_primitive_int(g)
            })
            .collect();
        if !cols.is_empty() {
            let m = IntMatrix::from_cols(cols);
            assert_eq!(m.rank(), decomp.len(), "support not independent");
        }
        // exact reconstruction
        for i in 0..d {
            let s: Rat = decomp.iter().map(|(_, g, c)| &g[i] * c).sum();
            assert_eq!(s, x[i]);
        }
        // strictly positive coefficients
        assert!(decomp.iter().all(|(_, _, c)| c.is_positive()));
    }
}

#[test]
fn rep_equivalence_roundtrip_box() {
    let mut r = rng(19);
    for _ in 0..100 {
        let d = r.gen_range(2..=3);
        let c = random_cone(&mut r, d, 5, 6);
        let h = c.v_to_h().unwrap();
        let back = h.h_to_v().unwrap();
        for x in box_points(d, 5) {
            assert_eq!(
                c.contains_lattice(&x).unwrap(),
                back.contains_lattice(&x).unwrap()
            );
        }
    }
}

#[test]
fn monoid_reduction_to_full_dimensional_agrees() {
    // low-dimensional monoid: computations in ZS coordinates match ambient
    let mut r = rng(20);
    for _ in 0..40 {
        // random rank-1 or rank-2 monoid inside Z^3
        let k = r.gen_range(1..=2);
        let base: Vec<IntVec> = (0..k).map(|_| random_int_vec(&mut r, 3, 3)).collect();
        if base.iter().any(|b| b.iter().all(|x| x.is_zero())) {
            continue;
        }
        // generators: nonnegative combinations of the base directions
        let gens: Vec<IntVec> = (0..k + 2)
            .map(|_| {
                let mut v = vec![Int::zero(); 3];
                for b in &base {
                    let c = Int::from(r.gen_range(0i64..=2));
                    v = conelab::vecs::add(&v, &conelab::vecs::scale(b, &c));
                }
                v
            })
            .filter(|v| !v.iter().all(|x| x.is_zero()))
            .collect();
        if gens.is_empty() {
            continue;
        }
        let Ok(m) = conelab::monoid::AffineMonoid::new(3, gens.clone()) else { continue };
        // membership of sums of generators is always true
        for _ in 0..10 {
            let mut x = vec![Int::zero(); 3];
            for g in &gens {
                let c = Int::from(r.gen_range(0i64..=2));
                x = conelab::vecs::add(&x, &conelab::vecs::scale(g, &c));
            }
            assert!(m.membership(&x).unwrap(), "generated point rejected: {:?}", x);
        }
        // points off the group are rejected
        let probe = random_int_vec(&mut r, 3, 4);
        if !in_lattice(m.group_basis(), &probe) {
            assert!(!m.membership(&probe).unwrap());
        }
    }
}

#[test]
fn strict_flags_round_trip_through_closure() {
    let c = Cone::from_int_halfspaces(2, &[(&[0, 1], true), (&[1, 0], false)]).unwrap();
    assert!(!c.is_closed());
    let cl = c.closure();
    assert!(cl.is_closed());
    // closure contains the strict boundary
    assert!(cl.contains_lattice(&iv(&[1, 0])).unwrap());
    assert!(!c.contains_lattice(&iv(&[1, 0])).unwrap());
    // and the lineality of the closure reflects the relaxed geometry
    assert!(cl.lineality_int().unwrap().is_empty());
    let h = Cone::from_int_halfspaces(2, &[(&[0, 1], true)]).unwrap().closure();
    assert_eq!(h.lineality_int().unwrap(), vec![neg(&iv(&[-1, 0]))]);
}
