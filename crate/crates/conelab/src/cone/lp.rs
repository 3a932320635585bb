//! Exact rational linear programming (dense two-phase simplex with Bland's
//! rule) and the constructive Caratheodory decomposition built on it.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::num::Rat;
use crate::vecs::RatVec;
use num_traits::{One, Signed, Zero};

/// min c.x subject to A x = b, x >= 0. Returns None if infeasible.
/// The objective is assumed bounded below on the feasible set (true for the
/// uses in this crate: feasibility phases and coefficient-sum minimization).
fn simplex(a: &[RatVec], b: &[Rat], c: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    // tableau with artificial columns n..n+m, rhs at column n+m
    let mut t: Vec<RatVec> = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = a[i].clone();
        let flip = b[i].is_negative();
        if flip {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        for k in 0..m {
            row.push(if k == i { Rat::one() } else { Rat::zero() });
        }
        row.push(if flip { -b[i].clone() } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let width = n + m;

    let run = |t: &mut Vec<RatVec>, basis: &mut Vec<usize>, cost: &dyn Fn(usize) -> Rat, cols: usize| {
        loop {
            // reduced costs under the current basis
            let mut entering: Option<usize> = None;
            for j in 0..cols {
                if basis.contains(&j) {
                    continue;
                }
                let mut r = cost(j);
                for (i, &bi) in basis.iter().enumerate() {
                    let cb = cost(bi);
                    if !cb.is_zero() {
                        r -= cb * &t[i][j];
                    }
                }
                if r.is_negative() {
                    entering = Some(j);
                    break; // Bland: smallest index
                }
            }
            let Some(e) = entering else { break };
            // ratio test; Bland tie-break on smallest basis variable
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..t.len() {
                if t[i][e].is_positive() {
                    let ratio = &t[i][width] / &t[i][e];
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((li, lr)) => {
                            if ratio < lr || (ratio == lr && basis[i] < basis[li]) {
                                Some((i, ratio))
                            } else {
                                Some((li, lr))
                            }
                        }
                    };
                }
            }
            let Some((li, _)) = leave else {
                // unbounded in the entering direction; callers' objectives
                // are bounded below, so this indicates a degenerate use
                return false;
            };
            // pivot at (li, e)
            let piv = t[li][e].clone();
            for v in t[li].iter_mut() {
                *v /= piv.clone();
            }
            for i in 0..t.len() {
                if i != li && !t[i][e].is_zero() {
                    let f = t[i][e].clone();
                    for j in 0..=width {
                        let d = &f * &t[li][j];
                        t[i][j] -= d;
                    }
                }
            }
            basis[li] = e;
        }
        true
    };

    // phase I: drive artificials to zero
    let phase1 = |j: usize| if j >= n { Rat::one() } else { Rat::zero() };
    if !run(&mut t, &mut basis, &phase1, width) {
        return None;
    }
    let obj1: Rat = basis
        .iter()
        .enumerate()
        .map(|(i, &bi)| if bi >= n { t[i][width].clone() } else { Rat::zero() })
        .sum();
    if !obj1.is_zero() {
        return None;
    }
    // pivot out artificials stuck in the basis at level zero
    let mut drop_rows: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        if basis[i] >= n {
            if let Some(e) = (0..n).find(|&j| !t[i][j].is_zero()) {
                let piv = t[i][e].clone();
                for v in t[i].iter_mut() {
                    *v /= piv.clone();
                }
                let row = t[i].clone();
                for k in 0..t.len() {
                    if k != i && !t[k][e].is_zero() {
                        let f = t[k][e].clone();
                        for j in 0..=width {
                            let d = &f * &row[j];
                            t[k][j] -= d;
                        }
                    }
                }
                basis[i] = e;
            } else {
                drop_rows.push(i); // redundant constraint row
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        t.remove(i);
        basis.remove(i);
    }
    // phase II over the original columns
    let phase2 = |j: usize| if j < n { c[j].clone() } else { Rat::zero() };
    if !run(&mut t, &mut basis, &phase2, n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bi) in basis.iter().enumerate() {
        if bi < n {
            x[bi] = t[i][width].clone();
        }
    }
    Some(x)
}

/// Nonnegative rational coefficients t with sum t_i g_i = x, minimizing
/// sum t_i. None if x is outside the generated cone.
pub fn nonneg_combination(gens: &[RatVec], x: &RatVec) -> Option<Vec<Rat>> {
    let d = x.len();
    if gens.is_empty() {
        return if x.iter().all(|v| v.is_zero()) { Some(vec![]) } else { None };
    }
    let a: Vec<RatVec> = (0..d).map(|i| gens.iter().map(|g| g[i].clone()).collect()).collect();
    let c = vec![Rat::one(); gens.len()];
    simplex(&a, x, &c)
}

/// Caratheodory decomposition: express `x` as a strictly positive rational
/// combination of a linearly independent subset of `gens`.
///
/// Returns `(index, generator, coefficient)` triples in index order. Errors
/// with `NotInCone` when no nonnegative combination exists.
pub fn caratheodory(gens: &[RatVec], x: &RatVec) -> Result<Vec<(usize, RatVec, Rat)>> {
    for g in gens {
        if g.len() != x.len() {
            return Err(Error::DimensionMismatch { expected: x.len(), got: g.len() });
        }
    }
    let mut t = nonneg_combination(gens, x).ok_or(Error::NotInCone)?;
    // Shrink the support until it is linearly independent. If c is a rational
    // dependence of the support generators, t - lambda*c stays feasible for
    // lambda up to the smallest ratio t_i/c_i over positive c_i and kills at
    // least one coefficient.
    loop {
        let support: Vec<usize> = (0..gens.len()).filter(|&i| t[i].is_positive()).collect();
        let Some(mut dep) = rational_dependence(gens, &support) else { break };
        if dep.iter().all(|c| !c.is_positive()) {
            for c in dep.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut lambda: Option<Rat> = None;
        for (k, &i) in support.iter().enumerate() {
            if dep[k].is_positive() {
                let r = &t[i] / &dep[k];
                lambda = Some(match lambda {
                    None => r,
                    Some(l) => {
                        if r < l {
                            r
                        } else {
                            l
                        }
                    }
                });
            }
        }
        let lambda = lambda.expect("dependence has a positive entry");
        for (k, &i) in support.iter().enumerate() {
            let d = &lambda * &dep[k];
            t[i] -= d;
            if t[i].is_negative() {
                t[i] = Rat::zero(); // exact arithmetic: only guards rounding in reasoning
            }
        }
    }
    let out: Vec<(usize, RatVec, Rat)> = (0..gens.len())
        .filter(|&i| t[i].is_positive())
        .map(|i| (i, gens[i].clone(), t[i].clone()))
        .collect();
    // sanity: reconstruct exactly
    let d = x.len();
    for i in 0..d {
        let s: Rat = out.iter().map(|(_, g, c)| &g[i] * c).sum();
        debug_assert_eq!(s, x[i]);
    }
    Ok(out)
}

/// A nontrivial rational dependence among gens[support], or None if they are
/// linearly independent. Returned in support order.
fn rational_dependence(gens: &[RatVec], support: &[usize]) -> Option<Vec<Rat>> {
    if support.is_empty() {
        return None;
    }
    let d = gens[support[0]].len();
    let k = support.len();
    // Gaussian elimination on the d x k matrix of support columns
    let mut m: Vec<RatVec> = (0..d)
        .map(|i| support.iter().map(|&j| gens[j][i].clone()).collect())
        .collect();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; k];
    let mut row = 0usize;
    for col in 0..k {
        let Some(p) = (row..d).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let piv = m[row][col].clone();
        for v in m[row].iter_mut() {
            *v /= piv.clone();
        }
        for i in 0..d {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..k {
                    let t = &f * &m[row][j];
                    m[i][j] -= t;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let free = (0..k).find(|&c| pivot_of_col[c].is_none())?;
    // dependence: free column = -1, pivot columns read off the eliminated rows
    let mut dep = vec![Rat::zero(); k];
    dep[free] = -Rat::one();
    for c in 0..k {
        if let Some(r) = pivot_of_col[c] {
            dep[c] = m[r][free].clone();
        }
    }
    Some(dep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn caratheodory_diagonal() {
        let gens = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        let x = vec![rat(2), rat(2)];
        let got = caratheodory(&gens, &x).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].1, vec![rat(1), rat(1)]);
        assert_eq!(got[0].2, rat(2));
    }

    #[test]
    fn caratheodory_axis() {
        let gens = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        let x = vec![rat(1), rat(0)];
        let got = caratheodory(&gens, &x).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].1, vec![rat(1), rat(0)]);
        assert_eq!(got[0].2, rat(1));
    }

    #[test]
    fn caratheodory_mixed() {
        let gens = vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)], vec![rat(0), rat(1)]];
        let x = vec![rat(3), rat(1)];
        let got = caratheodory(&gens, &x).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].1, vec![rat(1), rat(0)]);
        assert_eq!(got[0].2, rat(2));
        assert_eq!(got[1].1, vec![rat(1), rat(1)]);
        assert_eq!(got[1].2, rat(1));
    }

    #[test]
    fn outside_cone_rejected() {
        let gens = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let x = vec![rat(-1), rat(0)];
        assert!(matches!(caratheodory(&gens, &x), Err(Error::NotInCone)));
    }

    #[test]
    fn zero_point() {
        let gens = vec![vec![rat(1), rat(0)]];
        let x = vec![rat(0), rat(0)];
        let got = caratheodory(&gens, &x).unwrap();
        assert!(got.is_empty());
    }
}
