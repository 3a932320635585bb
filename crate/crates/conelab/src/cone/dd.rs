//! Incremental double description over exact integers.
//!
//! `cone_from_inequalities` computes the lineality basis and the extremal rays
//! (modulo lineality) of `{x : a.x >= 0 for all a}`. Inequalities are inserted
//! one at a time; adjacency of rays is decided by the combinatorial zero-set
//! criterion, so no floating point and no rank computations are involved.

use crate::num::Int;
use crate::vecs::{dot, is_zero_vec, neg, primitive, scale, sub, IntVec};
use num_traits::{Signed, Zero};

#[derive(Clone)]
struct RayState {
    v: IntVec,
    zero: Vec<u64>,
}

fn bit_set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

fn bit_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bit_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

#[derive(Debug, Clone)]
pub struct DdResult {
    /// Basis of the lineality space (not yet canonicalized).
    pub lineality: Vec<IntVec>,
    /// Extremal rays modulo the lineality space, primitive.
    pub rays: Vec<IntVec>,
}

pub fn cone_from_inequalities(rank: usize, normals: &[IntVec]) -> DdResult {
    let words = normals.len().div_ceil(64) + 1;
    let mut lin: Vec<IntVec> = (0..rank)
        .map(|i| {
            let mut e = vec![Int::zero(); rank];
            e[i] = Int::from(1);
            e
        })
        .collect();
    let mut rays: Vec<RayState> = Vec::new();

    for (j, a) in normals.iter().enumerate() {
        if is_zero_vec(a) {
            for r in rays.iter_mut() {
                bit_set(&mut r.zero, j);
            }
            continue;
        }
        // Lineality interaction: if a does not vanish on the lineality space,
        // one basis direction leaves the lineality and becomes a ray.
        let pivot = lin.iter().position(|l| !dot(a, l).is_zero());
        if let Some(idx) = pivot {
            let mut l0 = lin.remove(idx);
            let mut d0 = dot(a, &l0);
            if d0.is_negative() {
                l0 = neg(&l0);
                d0 = -d0;
            }
            for l in lin.iter_mut() {
                let dk = dot(a, l);
                if !dk.is_zero() {
                    *l = primitive(&sub(&scale(l, &d0), &scale(&l0, &dk)));
                }
            }
            for r in rays.iter_mut() {
                let dr = dot(a, &r.v);
                if !dr.is_zero() {
                    r.v = primitive(&sub(&scale(&r.v, &d0), &scale(&l0, &dr)));
                }
                bit_set(&mut r.zero, j);
            }
            // l0 saw every earlier inequality vanish on it
            let mut z = vec![0u64; words];
            for i in 0..j {
                bit_set(&mut z, i);
            }
            rays.push(RayState { v: primitive(&l0), zero: z });
            continue;
        }
        // a vanishes on the lineality space: split rays by sign
        let signs: Vec<i8> = rays
            .iter()
            .map(|r| {
                let d = dot(a, &r.v);
                if d.is_zero() {
                    0
                } else if d.is_positive() {
                    1
                } else {
                    -1
                }
            })
            .collect();
        if signs.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&signs) {
                if s == 0 {
                    bit_set(&mut r.zero, j);
                }
            }
            continue;
        }
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] > 0).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] < 0).collect();
        let mut newrays: Vec<RayState> = Vec::new();
        for &p in &plus {
            for &m in &minus {
                let z = bit_and(&rays[p].zero, &rays[m].zero);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(t, rt)| t == p || t == m || !bit_subset(&z, &rt.zero));
                if !adjacent {
                    continue;
                }
                let dp = dot(a, &rays[p].v);
                let dm = dot(a, &rays[m].v);
                // dp > 0 > dm, so dp * r_m - dm * r_p is a positive combination
                let v = primitive(&sub(&scale(&rays[m].v, &dp), &scale(&rays[p].v, &dm)));
                let mut zz = z;
                bit_set(&mut zz, j);
                newrays.push(RayState { v, zero: zz });
            }
        }
        let mut kept: Vec<RayState> = Vec::new();
        for (i, r) in rays.into_iter().enumerate() {
            match signs[i] {
                1 => kept.push(r),
                0 => {
                    let mut r = r;
                    bit_set(&mut r.zero, j);
                    kept.push(r);
                }
                _ => {}
            }
        }
        kept.extend(newrays);
        // guard against duplicate directions in degenerate configurations
        kept.sort_by(|x, y| x.v.cmp(&y.v));
        kept.dedup_by(|x, y| x.v == y.v);
        rays = kept;
    }

    let mut out_rays: Vec<IntVec> = rays.into_iter().map(|r| r.v).collect();
    out_rays.sort();
    DdResult { lineality: lin, rays: out_rays }
}
