//! Dense integer matrices with exact normal-form algorithms.
//!
//! Conventions used throughout the crate:
//! * `hnf` is row-style: `H = U * A` with `U` unimodular, `H` in row echelon
//!   form, pivots positive, entries above each pivot reduced into
//!   `[0, pivot)`, zero rows at the bottom.
//! * `snf` returns `(S, U, V)` with `S = U * A * V` diagonal and
//!   `d_1 | d_2 | ...`, all diagonal entries nonnegative.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::num::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: Vec<Vec<Int>>) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |v| v.len());
        assert!(cols.iter().all(|v| v.len() == r), "ragged columns");
        let mut m = Self::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
    }

    pub fn row(&self, i: usize) -> Vec<Int> {
        (0..self.cols).map(|j| self[(i, j)].clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Int> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn rows_vec(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn cols_vec(&self) -> Vec<Vec<Int>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in multiply");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a * &rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector multiply");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row(dst) += k * row(src)
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let t = k * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &Int) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let t = k * &self[(i, src)];
            self[(i, dst)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = 1i32;
        let mut prev = Int::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Int::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = &num / &prev;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Row Hermite normal form. Returns `(H, U)` with `H = U * self`.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let (rows, cols) = (self.rows, self.cols);
        let mut pivot_row = 0usize;
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        for col in 0..cols {
            if pivot_row >= rows {
                break;
            }
            // gcd elimination below pivot_row in this column
            loop {
                let mut best: Option<usize> = None;
                for i in pivot_row..rows {
                    if !h[(i, col)].is_zero() {
                        best = match best {
                            None => Some(i),
                            Some(b) => {
                                if h[(i, col)].abs() < h[(b, col)].abs() {
                                    Some(i)
                                } else {
                                    Some(b)
                                }
                            }
                        };
                    }
                }
                let Some(b) = best else { break };
                h.swap_rows(pivot_row, b);
                u.swap_rows(pivot_row, b);
                let mut done = true;
                for i in pivot_row + 1..rows {
                    if !h[(i, col)].is_zero() {
                        let q = h[(i, col)].div_floor(&h[(pivot_row, col)]);
                        let nq = -q;
                        h.add_row_multiple(i, pivot_row, &nq);
                        u.add_row_multiple(i, pivot_row, &nq);
                        if !h[(i, col)].is_zero() {
                            done = false;
                        }
                    }
                }
                if done {
                    break;
                }
            }
            if h[(pivot_row, col)].is_zero() {
                continue;
            }
            if h[(pivot_row, col)].is_negative() {
                h.negate_row(pivot_row);
                u.negate_row(pivot_row);
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
        }
        // reduce entries above each pivot into [0, pivot)
        for &(pr, pc) in pivots.iter() {
            for i in 0..pr {
                if !h[(i, pc)].is_zero() {
                    let q = h[(i, pc)].div_floor(&h[(pr, pc)]);
                    let nq = -q;
                    h.add_row_multiple(i, pr, &nq);
                    u.add_row_multiple(i, pr, &nq);
                }
            }
        }
        (h, u)
    }

    /// Rank over the rationals (= rank of the HNF).
    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf();
        (0..h.rows).filter(|&i| (0..h.cols).any(|j| !h[(i, j)].is_zero())).count()
    }

    /// Smith normal form. Returns `(S, U, V)` with `S = U * self * V`,
    /// `S` diagonal, nonnegative, with the divisibility chain.
    pub fn snf(&self) -> (IntMatrix, IntMatrix, IntMatrix) {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0usize;
        while t < n {
            // find a nonzero pivot in the remaining block, smallest |.|
            let mut best: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if !s[(i, j)].is_zero() {
                        best = match best {
                            None => Some((i, j)),
                            Some((bi, bj)) => {
                                if s[(i, j)].abs() < s[(bi, bj)].abs() {
                                    Some((i, j))
                                } else {
                                    Some((bi, bj))
                                }
                            }
                        };
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            s.swap_rows(t, bi);
            u.swap_rows(t, bi);
            s.swap_cols(t, bj);
            v.swap_cols(t, bj);
            // clear row and column t
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in t + 1..self.rows {
                    if !s[(i, t)].is_zero() {
                        let q = s[(i, t)].div_floor(&s[(t, t)]);
                        let nq = -q;
                        s.add_row_multiple(i, t, &nq);
                        u.add_row_multiple(i, t, &nq);
                        if !s[(i, t)].is_zero() {
                            s.swap_rows(t, i);
                            u.swap_rows(t, i);
                            dirty = true;
                        }
                    }
                }
                for j in t + 1..self.cols {
                    if !s[(t, j)].is_zero() {
                        let q = s[(t, j)].div_floor(&s[(t, t)]);
                        let nq = -q;
                        s.add_col_multiple(j, t, &nq);
                        v.add_col_multiple(j, t, &nq);
                        if !s[(t, j)].is_zero() {
                            s.swap_cols(t, j);
                            v.swap_cols(t, j);
                            dirty = true;
                        }
                    }
                }
            }
            if s[(t, t)].is_negative() {
                s.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        // enforce divisibility chain d_i | d_{i+1}
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..n.saturating_sub(1) {
                let (a, b) = (s[(i, i)].clone(), s[(i + 1, i + 1)].clone());
                if a.is_zero() && !b.is_zero() {
                    // move nonzero up the chain
                    s.swap_rows(i, i + 1);
                    u.swap_rows(i, i + 1);
                    s.swap_cols(i, i + 1);
                    v.swap_cols(i, i + 1);
                    changed = true;
                    continue;
                }
                if !a.is_zero() && !(&b % &a).is_zero() {
                    // standard 2x2 fixup: add col i+1 to col i, then re-reduce
                    let one = Int::one();
                    s.add_col_multiple(i, i + 1, &one);
                    v.add_col_multiple(i, i + 1, &one);
                    // clear the (i+1, i) entry via gcd dance
                    loop {
                        if s[(i + 1, i)].is_zero() {
                            break;
                        }
                        if s[(i, i)].is_zero() {
                            s.swap_rows(i, i + 1);
                            u.swap_rows(i, i + 1);
                            continue;
                        }
                        let q = s[(i + 1, i)].div_floor(&s[(i, i)]);
                        let nq = -q;
                        s.add_row_multiple(i + 1, i, &nq);
                        u.add_row_multiple(i + 1, i, &nq);
                        if !s[(i + 1, i)].is_zero() {
                            s.swap_rows(i, i + 1);
                            u.swap_rows(i, i + 1);
                        }
                    }
                    // clear the (i, i+1) entry
                    loop {
                        if s[(i, i + 1)].is_zero() {
                            break;
                        }
                        if s[(i, i)].is_zero() {
                            s.swap_cols(i, i + 1);
                            v.swap_cols(i, i + 1);
                            continue;
                        }
                        let q = s[(i, i + 1)].div_floor(&s[(i, i)]);
                        let nq = -q;
                        s.add_col_multiple(i + 1, i, &nq);
                        v.add_col_multiple(i + 1, i, &nq);
                        if !s[(i, i + 1)].is_zero() {
                            s.swap_cols(i, i + 1);
                            v.swap_cols(i, i + 1);
                        }
                    }
                    if s[(i, i)].is_negative() {
                        s.negate_row(i);
                        u.negate_row(i);
                    }
                    if s[(i + 1, i + 1)].is_negative() {
                        s.negate_row(i + 1);
                        u.negate_row(i + 1);
                    }
                    changed = true;
                }
            }
        }
        (s, u, v)
    }

    /// Inverse of a matrix with determinant +-1. Errors otherwise.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        // rational Gauss-Jordan, then integrality check
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| Rat::from_integer(self[(i, j)].clone())).collect())
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
                return Err(Error::InvalidSection("singular matrix".into()));
            };
            a.swap(col, p);
            inv.swap(col, p);
            let piv = a[col][col].clone();
            for j in 0..n {
                a[col][j] /= piv.clone();
                inv[col][j] /= piv.clone();
            }
            for i in 0..n {
                if i != col && !a[i][col].is_zero() {
                    let f = a[i][col].clone();
                    for j in 0..n {
                        let t = &f * &a[col][j];
                        a[i][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[i][j] -= t;
                    }
                }
            }
        }
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return Err(Error::InvalidSection("matrix is not unimodular".into()));
                }
                out[(i, j)] = inv[i][j].to_integer();
            }
        }
        Ok(out)
    }

    /// Integer basis of the right kernel {x : A x = 0}, as matrix columns.
    /// The kernel of an integer matrix is automatically saturated.
    pub fn kernel_basis(&self) -> IntMatrix {
        // rows of U matching zero rows of H in hnf(transpose) span {x : A x = 0}
        let at = self.transpose();
        let (h, u) = at.hnf();
        let mut cols: Vec<Vec<Int>> = Vec::new();
        for i in 0..h.rows {
            if (0..h.cols).all(|j| h[(i, j)].is_zero()) {
                cols.push(u.row(i));
            }
        }
        cols.sort();
        IntMatrix::from_cols(cols)
    }

    /// Solve A x = b over the rationals; `None` if inconsistent.
    pub fn solve_rational(&self, b: &[Int]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let (rows, cols) = (self.rows, self.cols);
        let mut a: Vec<Vec<Rat>> = (0..rows)
            .map(|i| {
                let mut r: Vec<Rat> =
                    (0..cols).map(|j| Rat::from_integer(self[(i, j)].clone())).collect();
                r.push(Rat::from_integer(b[i].clone()));
                r
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut pr = 0usize;
        for pc in 0..cols {
            let Some(p) = (pr..rows).find(|&i| !a[i][pc].is_zero()) else { continue };
            a.swap(pr, p);
            let piv = a[pr][pc].clone();
            for j in pc..=cols {
                a[pr][j] /= piv.clone();
            }
            for i in 0..rows {
                if i != pr && !a[i][pc].is_zero() {
                    let f = a[i][pc].clone();
                    for j in pc..=cols {
                        let t = &f * &a[pr][j];
                        a[i][j] -= t;
                    }
                }
            }
            pivot_cols.push(pc);
            pr += 1;
            if pr == rows {
                break;
            }
        }
        for i in pr..rows {
            if !a[i][cols].is_zero() {
                return None;
            }
        }
        let mut x = vec![Rat::zero(); cols];
        for (r, &pc) in pivot_cols.iter().enumerate() {
            x[pc] = a[r][cols].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;

    fn check_hnf_shape(h: &IntMatrix) {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero_row = false;
        for i in 0..h.rows {
            let pivot = (0..h.cols).find(|&j| !h[(i, j)].is_zero());
            match pivot {
                None => seen_zero_row = true,
                Some(pc) => {
                    assert!(!seen_zero_row, "nonzero row after zero row");
                    if let Some(lp) = last_pivot {
                        assert!(pc > lp, "pivots not strictly right-moving");
                    }
                    last_pivot = Some(pc);
                    assert!(h[(i, pc)].is_positive(), "pivot not positive");
                    for r in 0..i {
                        assert!(!h[(r, pc)].is_negative() && h[(r, pc)] < h[(i, pc)]);
                    }
                }
            }
        }
    }

    #[test]
    fn hnf_identity() {
        let a = IntMatrix::identity(2);
        let (h, u) = a.hnf();
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_zero() {
        let a = IntMatrix::zero(3, 2);
        let (h, u) = a.hnf();
        assert!(h.is_zero());
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_example() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[0, 3]]);
        let (h, u) = a.hnf();
        assert_eq!(u.mul(&a), h);
        assert_eq!(u.det().abs(), int(1));
        check_hnf_shape(&h);
        // upper triangular with positive pivots
        assert!(h[(0, 0)].is_positive());
        assert!(h[(1, 1)].is_positive());
        assert!(h[(1, 0)].is_zero());
    }

    #[test]
    fn snf_identity_and_diag() {
        let a = IntMatrix::identity(3);
        let (s, u, v) = a.snf();
        assert_eq!(s, IntMatrix::identity(3));
        assert_eq!(u.mul(&a).mul(&v), s);

        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let (s, u, v) = a.snf();
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(s[(0, 0)], int(1));
        assert_eq!(s[(1, 1)], int(6));
    }

    #[test]
    fn snf_row_gcd() {
        let a = IntMatrix::from_i64(&[&[2, 4]]);
        let (s, u, v) = a.snf();
        assert_eq!(u.mul(&a).mul(&v), s);
        assert_eq!(s[(0, 0)], int(2));
    }

    #[test]
    fn kernel_basis_simple() {
        // kernel of [1 1 0] is rank 2
        let a = IntMatrix::from_i64(&[&[1, 1, 0]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols, 2);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn inverse_unimodular_roundtrip() {
        let u = IntMatrix::from_i64(&[&[1, 2], &[1, 3]]);
        let inv = u.inverse_unimodular().unwrap();
        assert_eq!(u.mul(&inv), IntMatrix::identity(2));
        let bad = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(bad.inverse_unimodular().is_err());
    }

    #[test]
    fn det_values() {
        assert_eq!(IntMatrix::from_i64(&[&[2, 1], &[1, 1]]).det(), int(1));
        assert_eq!(IntMatrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]).det(), int(0));
        assert_eq!(
            IntMatrix::from_i64(&[&[3, 0, 0], &[0, -2, 0], &[0, 0, 5]]).det(),
            int(-30)
        );
    }
}
