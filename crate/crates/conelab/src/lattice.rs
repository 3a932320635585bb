//! Lattice algorithms on top of the normal forms: rational-subspace
//! intersection with the standard lattice, subgroup saturation, and split
//! sections of torsion-free quotients.

use crate::error::{Error, Result};
use crate::mat::IntMatrix;
use crate::num::Int;
use crate::vecs::{rat_to_primitive_int, RatVec};
use num_traits::{One, Zero};

/// A split short exact sequence of lattices
/// `0 -> ker -> Z^d --projection--> Z^{d-r} -> 0` with `projection * section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSection {
    /// (d-r) x d matrix of the projection.
    pub projection: IntMatrix,
    /// d x (d-r) matrix of the section.
    pub section: IntMatrix,
    /// d x r matrix whose columns span the kernel.
    pub kernel_basis: IntMatrix,
}

impl LatticeSection {
    pub fn ambient_rank(&self) -> usize {
        self.projection.cols
    }

    pub fn quotient_rank(&self) -> usize {
        self.projection.rows
    }

    pub fn project(&self, v: &[Int]) -> Vec<Int> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[Int]) -> Vec<Int> {
        self.section.mul_vec(v)
    }

    /// Check the defining identities exactly.
    pub fn validate(&self) -> Result<()> {
        let d = self.ambient_rank();
        let q = self.quotient_rank();
        if self.section.rows != d || self.section.cols != q {
            return Err(Error::InvalidSection("section shape mismatch".into()));
        }
        if self.projection.mul(&self.section) != IntMatrix::identity(q) {
            return Err(Error::InvalidSection("projection * section != id".into()));
        }
        if !self.projection.mul(&self.kernel_basis).is_zero() {
            return Err(Error::InvalidSection("kernel basis not killed by projection".into()));
        }
        Ok(())
    }
}

/// [`sublattice_intersection`] on quadratic-capable vectors: rejects any
/// basis vector with an irrational entry.
pub fn sublattice_intersection_q(
    rank: usize,
    subspace_basis: &[crate::vecs::QVec],
) -> Result<IntMatrix> {
    let rational: Vec<RatVec> = subspace_basis
        .iter()
        .map(|v| crate::vecs::q_to_rat(v).ok_or(Error::IrrationalInput))
        .collect::<Result<_>>()?;
    sublattice_intersection(rank, &rational)
}

/// Z-basis of `W intersect Z^rank` for a rational subspace `W` spanned by the
/// given vectors. Errors if the subspace data has irrational entries (the
/// caller passes `QuadNum` data through `q_to_rat` first).
pub fn sublattice_intersection(rank: usize, subspace_basis: &[RatVec]) -> Result<IntMatrix> {
    for v in subspace_basis {
        if v.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, got: v.len() });
        }
    }
    // Clear denominators; the integer span has full rank in W, so its
    // saturation is exactly W intersect Z^rank.
    let cols: Vec<Vec<Int>> =
        subspace_basis.iter().map(|v| rat_to_primitive_int(v)).collect();
    let gens = IntMatrix::from_cols(cols);
    let gens = if gens.rows == 0 { IntMatrix::zero(rank, 0) } else { gens };
    saturate_subgroup(&gens)
}

/// Basis of the saturation `{x in Z^d : k x in N for some k > 0}` of the
/// subgroup `N` generated by the columns of `gens`.
///
/// Via the Smith normal form `U A V = diag(d_i)`: the column span of `A` is
/// spanned by `d_i * (col_i of U^-1)`, so dropping the `d_i` yields the
/// saturation.
pub fn saturate_subgroup(gens: &IntMatrix) -> Result<IntMatrix> {
    let d = gens.rows;
    if gens.cols == 0 {
        return Ok(IntMatrix::zero(d, 0));
    }
    let (s, u, _v) = gens.snf();
    let uinv = u.inverse_unimodular()?;
    let r = (0..d.min(gens.cols)).filter(|&i| !s[(i, i)].is_zero()).count();
    let mut cols: Vec<Vec<Int>> = (0..r).map(|i| uinv.col(i)).collect();
    cols.sort();
    Ok(IntMatrix::from_cols(cols))
}

/// Split the quotient `Z^rank / span(kernel_basis)`.
///
/// `kernel_basis` columns must be a basis of a saturated sublattice, otherwise
/// the quotient has torsion and no section exists.
pub fn split_quotient(kernel_basis: &IntMatrix, rank: usize) -> Result<LatticeSection> {
    if kernel_basis.rows != rank && kernel_basis.cols != 0 {
        return Err(Error::DimensionMismatch { expected: rank, got: kernel_basis.rows });
    }
    let r = kernel_basis.cols;
    if r == 0 {
        return Ok(LatticeSection {
            projection: IntMatrix::identity(rank),
            section: IntMatrix::identity(rank),
            kernel_basis: IntMatrix::zero(rank, 0),
        });
    }
    let (s, u, _v) = kernel_basis.snf();
    // Saturated basis iff all r elementary divisors are 1.
    for i in 0..r {
        if i >= rank || s[(i, i)] != Int::one() {
            return Err(Error::NotSaturated);
        }
    }
    // In coordinates y = U x the kernel is spanned by e_1..e_r, so the
    // projection is the last rank-r rows of U and the section comes from the
    // matching columns of U^-1.
    let uinv = u.inverse_unimodular()?;
    let q = rank - r;
    let mut projection = IntMatrix::zero(q, rank);
    for i in 0..q {
        for j in 0..rank {
            projection[(i, j)] = u[(r + i, j)].clone();
        }
    }
    let mut section = IntMatrix::zero(rank, q);
    for i in 0..rank {
        for j in 0..q {
            section[(i, j)] = uinv[(i, r + j)].clone();
        }
    }
    let out = LatticeSection { projection, section, kernel_basis: kernel_basis.clone() };
    out.validate()?;
    Ok(out)
}

/// Canonical basis (HNF rows, primitive) of the lattice spanned by the given
/// integer vectors over Z.
pub fn hnf_basis(vectors: &[Vec<Int>]) -> Vec<Vec<Int>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_rows(vectors.to_vec());
    let (h, _) = m.hnf();
    let mut out = Vec::new();
    for i in 0..h.rows {
        let row = h.row(i);
        if row.iter().any(|x| !x.is_zero()) {
            out.push(row);
        }
    }
    out
}

/// Does `v` lie in the column span of `basis` over Z? Exact HNF solve.
pub fn in_lattice(basis: &IntMatrix, v: &[Int]) -> bool {
    if basis.cols == 0 {
        return v.iter().all(|x| x.is_zero());
    }
    // Solve basis * x = v over Q, then check integrality by elimination over Z:
    // use the HNF of the transpose for a triangular solve.
    match basis.solve_rational(v) {
        None => false,
        Some(x) => {
            // the rational solution must be integral and exact
            if !x.iter().all(|c| c.is_integer()) {
                return false;
            }
            let xi: Vec<Int> = x.iter().map(|c| c.to_integer()).collect();
            basis.mul_vec(&xi) == v
        }
    }
}
