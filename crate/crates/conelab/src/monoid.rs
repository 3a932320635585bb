//! Affine monoids S inside Z^d: the group ZS, the cone sigma_S, normality,
//! exact membership and Hilbert bases.

use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::{hnf_basis, in_lattice};
use crate::mat::IntMatrix;
use crate::num::Int;
use crate::vecs::{dot, int_to_q, is_zero_vec, sub, IntVec};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use std::sync::OnceLock;

/// Minimal generating set of the monoid `sigma intersect Z^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<IntVec>,
}

/// A finitely generated submonoid of Z^rank.
#[derive(Debug)]
pub struct AffineMonoid {
    rank: usize,
    generators: Vec<IntVec>,
    group_basis: IntMatrix,
    cone: Cone,
    saturation_gens: OnceLock<Vec<IntVec>>,
}

impl Clone for AffineMonoid {
    fn clone(&self) -> Self {
        AffineMonoid {
            rank: self.rank,
            generators: self.generators.clone(),
            group_basis: self.group_basis.clone(),
            cone: self.cone.clone(),
            saturation_gens: OnceLock::new(),
        }
    }
}

impl AffineMonoid {
    pub fn new(rank: usize, generators: Vec<IntVec>) -> Result<AffineMonoid> {
        let mut gens: Vec<IntVec> = Vec::new();
        for g in generators {
            if g.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: g.len() });
            }
            if !is_zero_vec(&g) {
                gens.push(g);
            }
        }
        gens.sort();
        gens.dedup();
        let basis_rows = hnf_basis(&gens);
        let group_basis = if basis_rows.is_empty() {
            IntMatrix::zero(rank, 0)
        } else {
            IntMatrix::from_cols(basis_rows)
        };
        let cone = if gens.is_empty() {
            Cone::zero_cone(rank)
        } else {
            Cone::from_parts(
                rank,
                None,
                Some(gens.iter().map(|g| int_to_q(g)).collect()),
                None,
            )?
        };
        Ok(AffineMonoid { rank, generators: gens, group_basis, cone, saturation_gens: OnceLock::new() })
    }

    pub fn from_i64(rank: usize, gens: &[&[i64]]) -> Result<AffineMonoid> {
        Self::new(rank, gens.iter().map(|g| crate::vecs::int_vec(g)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[IntVec] {
        &self.generators
    }

    /// Columns form a canonical basis of the group ZS generated by S.
    pub fn group_basis(&self) -> &IntMatrix {
        &self.group_basis
    }

    /// The cone sigma_S generated by S in the ambient space.
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn group_rank(&self) -> usize {
        self.group_basis.cols
    }

    /// The generators rewritten in coordinates of the ZS basis, together with
    /// the cone they span there (full-dimensional by construction).
    pub(crate) fn coordinate_view(&self) -> Result<(Vec<IntVec>, Cone)> {
        let dim = self.group_rank();
        let mut coords = Vec::new();
        for g in &self.generators {
            let sol = self
                .group_basis
                .solve_rational(g)
                .ok_or_else(|| Error::Parse("generator outside its own group".into()))?;
            let y: IntVec = sol
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    c.to_integer()
                })
                .collect();
            coords.push(y);
        }
        let cone = if coords.is_empty() {
            Cone::zero_cone(dim)
        } else {
            Cone::from_parts(dim, None, Some(coords.iter().map(|g| int_to_q(g)).collect()), None)?
        };
        Ok((coords, cone))
    }

    /// Exact membership: is x a nonnegative integer combination of the
    /// generators? Decided by a weight-bounded search; the weight is a
    /// relative-interior functional of the dual cone, so coefficients on the
    /// non-lineality generators are a priori bounded, and the lineality part
    /// reduces to lattice membership.
    pub fn membership(&self, x: &[Int]) -> Result<bool> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        if is_zero_vec(x) {
            return Ok(true);
        }
        if !in_lattice(&self.group_basis, x) {
            return Ok(false);
        }
        if !self.cone.contains_lattice(x)? {
            return Ok(false);
        }
        let nu = self.cone.dual_relint_functional()?;
        let mut line_gens: Vec<IntVec> = Vec::new();
        let mut pointed_gens: Vec<(IntVec, Int)> = Vec::new();
        for g in &self.generators {
            let w = dot(&nu, g);
            debug_assert!(!w.is_negative());
            if w.is_zero() {
                line_gens.push(g.clone());
            } else {
                pointed_gens.push((g.clone(), w));
            }
        }
        // the lineality generators span a full sublattice of the lineality
        // space and their monoid equals that lattice
        let line_basis_rows = hnf_basis(&line_gens);
        let line_basis = if line_basis_rows.is_empty() {
            IntMatrix::zero(self.rank, 0)
        } else {
            IntMatrix::from_cols(line_basis_rows)
        };
        // heavier generators first keeps the search tree shallow
        pointed_gens.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let budget = dot(&nu, x);
        fn dfs(
            gens: &[(IntVec, Int)],
            rem: &IntVec,
            budget: &Int,
            line_basis: &IntMatrix,
        ) -> bool {
            if gens.is_empty() {
                return in_lattice(line_basis, rem);
            }
            let (g, w) = &gens[0];
            let max_coeff = budget.div_floor(w);
            let mut k = Int::zero();
            let mut cur = rem.clone();
            let mut left = budget.clone();
            loop {
                if dfs(&gens[1..], &cur, &left, line_basis) {
                    return true;
                }
                k += 1;
                if k > max_coeff {
                    return false;
                }
                cur = sub(&cur, g);
                left -= w;
            }
        }
        Ok(dfs(&pointed_gens, &x.to_vec(), &budget, &line_basis))
    }

    /// Generators of the saturation: the Hilbert basis of
    /// `sigma_S intersect ZS`, mapped back to ambient coordinates.
    pub fn saturation_generators(&self) -> Result<&[IntVec]> {
        if let Some(v) = self.saturation_gens.get() {
            return Ok(v);
        }
        let (_coords, cone) = self.coordinate_view()?;
        let hb = hilbert_basis(&cone)?;
        let mut ambient: Vec<IntVec> =
            hb.elements.iter().map(|h| self.group_basis.mul_vec(h)).collect();
        ambient.sort();
        Ok(self.saturation_gens.get_or_init(|| ambient))
    }

    /// Normality check: S is normal in ZS iff every Hilbert-basis element of
    /// `sigma_S intersect ZS` already lies in S. On failure the first missing
    /// element is the witness.
    pub fn is_normal(&self) -> Result<(bool, Option<IntVec>)> {
        for h in self.saturation_generators()? {
            if !self.membership(h)? {
                return Ok((false, Some(h.clone())));
            }
        }
        Ok((true, None))
    }

    /// The saturation as a monoid: generated by the Hilbert basis of
    /// `sigma_S intersect ZS`. Always normal; contains S.
    pub fn saturation(&self) -> Result<AffineMonoid> {
        let gens = self.saturation_generators()?.to_vec();
        AffineMonoid::new(self.rank, gens)
    }
}

/// Hilbert basis of the monoid `cone intersect Z^rank` for a closed rational
/// polyhedral cone.
///
/// Pointed full-dimensional case: every irreducible element lies, by the
/// Caratheodory argument, in the half-open parallelepiped of some linearly
/// independent subset of the extremal rays. Candidates are gathered by exact
/// coset enumeration (Smith normal form) over every maximal independent ray
/// subset, then reduced to the irreducible ones. Lineality contributes the
/// +-basis of its lattice; lower-dimensional cones are handled in coordinates
/// of their span lattice.
pub fn hilbert_basis(cone: &Cone) -> Result<HilbertBasis> {
    if !cone.is_rational() {
        return Err(Error::QuadraticUnsupported);
    }
    if !cone.is_closed() {
        return Err(Error::RepresentationMismatch(
            "Hilbert bases require a closed cone".into(),
        ));
    }
    let d = cone.rank();
    let lin = cone.lineality_int()?;
    if !lin.is_empty() {
        let (quot, section) = cone.quotient_by_lineality()?;
        let sub = hilbert_basis(&quot)?;
        let mut elements: Vec<IntVec> = Vec::new();
        for l in &lin {
            elements.push(l.clone());
            elements.push(crate::vecs::neg(l));
        }
        for h in &sub.elements {
            elements.push(section.lift(h));
        }
        elements.sort();
        elements.dedup();
        return Ok(HilbertBasis { elements });
    }
    let rays: Vec<IntVec> = cone.rays_int()?.to_vec();
    if rays.is_empty() {
        return Ok(HilbertBasis { elements: vec![] });
    }
    if !cone.is_full_dimensional() {
        // restrict to the span lattice and recurse in full dimension
        let span_rows = hnf_basis(&rays);
        let basis = IntMatrix::from_cols(span_rows);
        let dim = basis.cols;
        let mut coords = Vec::new();
        for r in &rays {
            let sol = basis
                .solve_rational(r)
                .ok_or_else(|| Error::Parse("ray outside its span lattice".into()))?;
            coords.push(sol.iter().map(|c| c.to_integer()).collect::<IntVec>());
        }
        let sub_cone = Cone::from_parts(
            dim,
            None,
            Some(coords.iter().map(|g| int_to_q(g)).collect()),
            None,
        )?;
        let sub = hilbert_basis(&sub_cone)?;
        let mut elements: Vec<IntVec> =
            sub.elements.iter().map(|h| basis.mul_vec(h)).collect();
        elements.sort();
        return Ok(HilbertBasis { elements });
    }
    // pointed, full-dimensional
    let mut candidates: BTreeSet<IntVec> = BTreeSet::new();
    for r in &rays {
        candidates.insert(r.clone());
    }
    for subset in subsets_of_size(rays.len(), d) {
        let cols: Vec<IntVec> = subset.iter().map(|&i| rays[i].clone()).collect();
        let a = IntMatrix::from_cols(cols);
        if a.det().is_zero() {
            continue;
        }
        for p in parallelepiped_points(&a) {
            if !is_zero_vec(&p) {
                candidates.insert(p);
            }
        }
    }
    let all: Vec<IntVec> = candidates.iter().cloned().collect();
    // guarded i128 fast path for the many difference-membership queries
    let max_abs = all
        .iter()
        .map(|c| crate::vecs::inf_norm(c))
        .max()
        .unwrap_or_else(Int::zero)
        * Int::from(2);
    let fast = cone.fast_lattice_checker(&max_abs);
    let small: Option<Vec<Vec<i128>>> = all
        .iter()
        .map(|c| c.iter().map(|x| x.to_string().parse::<i128>().ok()).collect())
        .collect();
    let mut elements: Vec<IntVec> = Vec::new();
    if let (Some(chk), Some(small)) = (&fast, &small) {
        'cand_fast: for (ci, c) in small.iter().enumerate() {
            for (ai, a) in small.iter().enumerate() {
                if ai == ci {
                    continue;
                }
                let diff: Vec<i128> = c.iter().zip(a).map(|(x, y)| x - y).collect();
                if diff.iter().any(|&v| v != 0) && chk.contains(&diff) {
                    continue 'cand_fast; // c = a + diff is a decomposition
                }
            }
            elements.push(all[ci].clone());
        }
    } else {
        'candidate: for c in &all {
            for a in &all {
                if a == c {
                    continue;
                }
                let diff = sub(c, a);
                if !is_zero_vec(&diff) && cone.contains_lattice(&diff)? {
                    continue 'candidate; // c = a + diff is a decomposition
                }
            }
            elements.push(c.clone());
        }
    }
    elements.sort();
    Ok(HilbertBasis { elements })
}

/// Lattice points of the half-open parallelepiped spanned by the columns of a
/// nonsingular integer matrix: one representative of each residue class of
/// `Z^d / A Z^d`, reduced into the box by subtracting integer parts.
fn parallelepiped_points(a: &IntMatrix) -> Vec<IntVec> {
    let d = a.rows;
    let (s, u, _v) = a.snf();
    let uinv = u.inverse_unimodular().expect("unimodular by construction");
    let divisors: Vec<Int> = (0..d).map(|i| s[(i, i)].clone()).collect();
    let mut points = Vec::new();
    let mut counter: Vec<Int> = vec![Int::zero(); d];
    loop {
        // x = U^-1 * counter is a class representative
        let x = uinv.mul_vec(&counter);
        // t = A^-1 x; reduce componentwise into [0,1)
        let t = a.solve_rational(&x).expect("nonsingular");
        let floor: IntVec = t.iter().map(|c| c.floor().to_integer()).collect();
        let shift = a.mul_vec(&floor);
        points.push(sub(&x, &shift));
        // odometer over the residue tuples
        let mut i = 0;
        loop {
            if i == d {
                points.sort();
                points.dedup();
                return points;
            }
            counter[i] += 1;
            if counter[i] < divisors[i] {
                break;
            }
            counter[i] = Int::zero();
            i += 1;
        }
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance the combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Brute-force decomposition check used as the independent test oracle:
/// can `x` be written as a nonnegative combination of `basis` elements?
/// Memoized descent strictly decreasing a positive weight.
pub fn decomposes_over(
    basis: &[IntVec],
    x: &[Int],
    cone: &Cone,
    memo: &mut std::collections::HashMap<IntVec, bool>,
) -> bool {
    if is_zero_vec(x) {
        return true;
    }
    if let Some(&r) = memo.get(x) {
        return r;
    }
    let mut ok = false;
    for b in basis {
        let rest = sub(x, b);
        if cone.contains_lattice(&rest).unwrap_or(false) && decomposes_over(basis, &rest, cone, memo)
        {
            ok = true;
            break;
        }
    }
    memo.insert(x.to_vec(), ok);
    ok
}

/// All lattice points of the cone inside the centered sup-norm box.
pub fn lattice_points_in_box(cone: &Cone, radius: i64) -> Result<Vec<IntVec>> {
    let d = cone.rank();
    let mut out = Vec::new();
    if d == 0 {
        out.push(IntVec::new());
        return Ok(out);
    }
    let mut point = vec![-radius; d];
    loop {
        let x: IntVec = point.iter().map(|&c| Int::from(c)).collect();
        if cone.contains_lattice(&x)? {
            out.push(x);
        }
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
    Ok(out)
}
