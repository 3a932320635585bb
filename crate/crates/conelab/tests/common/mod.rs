//! Shared helpers for the integration and acceptance suites: seeded random
//! cone populations and an independent Fourier-Motzkin conversion oracle.

#![allow(dead_code)]

use conelab::cone::Cone;
use conelab::num::{Int, Rat};
use conelab::vecs::{add, dot, int_vec, is_zero_vec, primitive, scale, IntVec};
use num_traits::{Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand::{Rng, SeedableRng};

pub type StdRng = ChaCha8Rng;

pub fn rng(seed: u64) -> StdRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int_vec(rng: &mut StdRng, d: usize, max_abs: i64) -> IntVec {
    (0..d).map(|_| Int::from(rng.gen_range(-max_abs..=max_abs))).collect()
}

/// Random full-dimensional pointed rational cone with generator entries in
/// [-max_abs, max_abs]; rejection sampling on the canonical geometry.
pub fn random_pointed_cone(rng: &mut StdRng, d: usize, max_abs: i64, max_gens: usize) -> Cone {
    loop {
        let k = rng.gen_range(d..=max_gens.max(d));
        let gens: Vec<IntVec> = (0..k)
            .map(|_| random_int_vec(rng, d, max_abs))
            .filter(|g| !is_zero_vec(g))
            .collect();
        if gens.len() < d {
            continue;
        }
        let qgens: Vec<_> = gens.iter().map(|g| conelab::vecs::int_to_q(g)).collect();
        let Ok(cone) = Cone::from_v_rep(d, qgens) else { continue };
        if cone.is_full_dimensional()
            && cone.is_pointed()
            && !cone.rays_int().unwrap().is_empty()
        {
            return cone;
        }
    }
}

/// Random closed rational cone, possibly with lineality: plain generators
/// plus an occasional +-pair.
pub fn random_cone(rng: &mut StdRng, d: usize, max_abs: i64, max_gens: usize) -> Cone {
    loop {
        let k = rng.gen_range(1..=max_gens.max(1));
        let mut gens: Vec<IntVec> = (0..k)
            .map(|_| random_int_vec(rng, d, max_abs))
            .filter(|g| !is_zero_vec(g))
            .collect();
        if rng.gen_bool(0.3) {
            let v = random_int_vec(rng, d, max_abs);
            if !is_zero_vec(&v) {
                gens.push(v.clone());
                gens.push(conelab::vecs::neg(&v));
            }
        }
        if gens.is_empty() {
            continue;
        }
        let qgens: Vec<_> = gens.iter().map(|g| conelab::vecs::int_to_q(g)).collect();
        if let Ok(cone) = Cone::from_v_rep(d, qgens) {
            return cone;
        }
    }
}

/// Random cone whose lineality space is nonzero.
pub fn random_cone_with_lineality(rng: &mut StdRng, d: usize, max_abs: i64) -> Cone {
    loop {
        let c = random_cone(rng, d, max_abs, d + 3);
        if !c.lineality_int().unwrap().is_empty() {
            return c;
        }
    }
}

/// Random lattice point of the cone: a nonnegative combination of the
/// canonical generators with coefficients in [0, max_coeff].
pub fn random_cone_point(rng: &mut StdRng, cone: &Cone, max_coeff: i64) -> IntVec {
    let gens = cone.generators_int().unwrap();
    let mut x = vec![Int::zero(); cone.rank()];
    for g in &gens {
        let c = Int::from(rng.gen_range(0..=max_coeff));
        x = add(&x, &scale(g, &c));
    }
    x
}

/// All lattice points of the centered sup-norm box.
pub fn box_points(d: usize, radius: i64) -> Vec<IntVec> {
    let mut out = Vec::new();
    if d == 0 {
        out.push(IntVec::new());
        return out;
    }
    let mut point = vec![-radius; d];
    loop {
        out.push(point.iter().map(|&c| Int::from(c)).collect());
        let mut i = d;
        for k in (0..d).rev() {
            if point[k] < radius {
                point[k] += 1;
                i = k;
                break;
            }
        }
        if i == d {
            break;
        }
        for c in point.iter_mut().skip(i + 1) {
            *c = -radius;
        }
    }
    out
}

/// Independent Fourier-Motzkin conversion oracle: inequality normals of
/// pos(gens), obtained by eliminating the combination coefficients from
/// `x = sum t_i g_i, t >= 0`. The output may be redundant; membership
/// comparisons are what it is for.
pub fn fm_inequalities(rank: usize, gens: &[IntVec]) -> Vec<IntVec> {
    let n = gens.len();
    let width = rank + n;
    let mut rows: Vec<IntVec> = Vec::new();
    // x_j - sum_i t_i g_ij = 0 as two inequalities
    for j in 0..rank {
        let mut row = vec![Int::zero(); width];
        row[j] = Int::from(1);
        for (i, g) in gens.iter().enumerate() {
            row[rank + i] = -g[j].clone();
        }
        rows.push(row.clone());
        rows.push(conelab::vecs::neg(&row));
    }
    // t_i >= 0
    for i in 0..n {
        let mut row = vec![Int::zero(); width];
        row[rank + i] = Int::from(1);
        rows.push(row);
    }
    // eliminate the t columns back to front
    for col in (rank..width).rev() {
        let mut pos: Vec<IntVec> = Vec::new();
        let mut neg_rows: Vec<IntVec> = Vec::new();
        let mut zero: Vec<IntVec> = Vec::new();
        for r in rows {
            match r[col].sign() {
                num_bigint::Sign::Plus => pos.push(r),
                num_bigint::Sign::Minus => neg_rows.push(r),
                num_bigint::Sign::NoSign => zero.push(r),
            }
        }
        let mut next = zero;
        for p in &pos {
            for ng in &neg_rows {
                // p[col] * ng - ng[col] * p has zero at col and is a
                // positive combination of the two rows
                let combined = conelab::vecs::sub(
                    &scale(ng, &p[col]),
                    &scale(p, &ng[col]),
                );
                let combined = primitive(&combined);
                if !is_zero_vec(&combined) {
                    next.push(combined);
                }
            }
        }
        next.sort();
        next.dedup();
        rows = next;
    }
    // keep the x-part
    let mut out: Vec<IntVec> = rows
        .into_iter()
        .map(|r| primitive(&r[..rank]))
        .filter(|r| !is_zero_vec(r))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Membership under an inequality list (all non-strict).
pub fn satisfies_all(normals: &[IntVec], x: &[Int]) -> bool {
    normals.iter().all(|n| !dot(n, x).is_negative())
}

pub fn iv(v: &[i64]) -> IntVec {
    int_vec(v)
}

pub fn rat_i(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}
