//! Cones with coordinates in a real quadratic field.
//!
//! Rank <= 2 cones get a canonical geometry (boundary rays, facets,
//! equations) via exact field arithmetic; higher-rank quadratic cones keep
//! their given inequalities and support membership only.

#![allow(clippy::needless_range_loop)]

use super::HalfSpace;
use crate::error::{Error, Result};
use crate::num::{Int, QuadNum, Rat};
use crate::vecs::{int_to_q, q_dot, q_dot_int, q_normalize, QVec};
use std::cmp::Ordering;

pub(crate) fn q_lex_cmp(a: &QVec, b: &QVec) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.checked_sub(y).expect("same field").sign() {
            1 => return Ordering::Greater,
            -1 => return Ordering::Less,
            _ => {}
        }
    }
    a.len().cmp(&b.len())
}

fn qneg(v: &QVec) -> QVec {
    v.iter().map(|x| -x).collect()
}

fn q_is_zero(v: &QVec) -> bool {
    v.iter().all(|x| x.is_zero())
}

fn perp(v: &QVec) -> QVec {
    vec![-&v[1], v[0].clone()]
}

/// Solve a*u + b*v = g over the field; None if u, v are dependent.
fn solve2(u: &QVec, v: &QVec, g: &QVec) -> Result<Option<(QuadNum, QuadNum)>> {
    let det = u[0].checked_mul(&v[1])?.checked_sub(&u[1].checked_mul(&v[0])?)?;
    if det.is_zero() {
        return Ok(None);
    }
    let a = g[0].checked_mul(&v[1])?.checked_sub(&g[1].checked_mul(&v[0])?)?.checked_div(&det)?;
    let b = u[0].checked_mul(&g[1])?.checked_sub(&u[1].checked_mul(&g[0])?)?.checked_div(&det)?;
    Ok(Some((a, b)))
}

/// Is g a c-multiple of u with c of the given sign requirement? Returns c.
fn parallel_factor(u: &QVec, g: &QVec) -> Result<Option<QuadNum>> {
    let Some(i) = u.iter().position(|x| !x.is_zero()) else {
        return Ok(if q_is_zero(g) { Some(QuadNum::zero()) } else { None });
    };
    let c = g[i].checked_div(&u[i])?;
    for k in 0..u.len() {
        let lhs = u[k].checked_mul(&c)?;
        if lhs.checked_sub(&g[k])?.sign() != 0 {
            return Ok(None);
        }
    }
    Ok(Some(c))
}

fn in_pos2(u: &QVec, v: &QVec, g: &QVec) -> Result<bool> {
    match solve2(u, v, g)? {
        Some((a, b)) => Ok(a.sign() >= 0 && b.sign() >= 0),
        None => {
            if let Some(c) = parallel_factor(u, g)? {
                if c.sign() >= 0 {
                    return Ok(true);
                }
            }
            if let Some(c) = parallel_factor(v, g)? {
                return Ok(c.sign() >= 0);
            }
            Ok(false)
        }
    }
}

/// Canonical representative for an undirected line: the lex-larger of v, -v.
fn line_canonical(v: &QVec) -> QVec {
    let n = qneg(v);
    if q_lex_cmp(v, &n) == Ordering::Less {
        n
    } else {
        v.clone()
    }
}

#[derive(Clone, Debug)]
pub(crate) enum QuadGeo {
    Canonical {
        n: u64,
        facets: Vec<QVec>,
        equations: Vec<QVec>,
        strict: Vec<QVec>,
        rays: Vec<QVec>,
        lineality: Vec<QVec>,
        closed: bool,
        full_dim: bool,
        zero_collapsed: bool,
    },
    Raw {
        constraints: Vec<(QVec, bool)>,
    },
}

pub(crate) fn build_quadratic(
    rank: usize,
    n: u64,
    gens: Option<Vec<QVec>>,
    halfspaces: Option<Vec<HalfSpace>>,
) -> Result<QuadGeo> {
    if rank > 2 {
        // membership through the given inequalities only
        let Some(hs) = halfspaces else {
            return Err(Error::QuadraticRankUnsupported(rank));
        };
        if gens.is_some() {
            return Err(Error::QuadraticRankUnsupported(rank));
        }
        let _ = n;
        return Ok(QuadGeo::Raw {
            constraints: hs.into_iter().map(|h| (h.normal, h.strict)).collect(),
        });
    }
    match (gens, halfspaces) {
        (Some(gs), None) => canonical_from_generators(rank, n, gs),
        (None, Some(hs)) => canonical_from_constraints(rank, n, hs),
        (Some(gs), Some(hs)) => {
            if hs.iter().any(|h| h.strict) {
                return Err(Error::RepresentationMismatch(
                    "generator representations cannot carry strict inequalities".into(),
                ));
            }
            let a = canonical_from_generators(rank, n, gs)?;
            let b = canonical_from_constraints(rank, n, hs)?;
            if !same_canonical(&a, &b) {
                return Err(Error::RepresentationMismatch(
                    "generator and inequality representations describe different cones".into(),
                ));
            }
            Ok(a)
        }
        (None, None) => Err(Error::EmptyRepresentation),
    }
}

fn same_canonical(a: &QuadGeo, b: &QuadGeo) -> bool {
    match (a, b) {
        (
            QuadGeo::Canonical { rays: r1, lineality: l1, equations: e1, .. },
            QuadGeo::Canonical { rays: r2, lineality: l2, equations: e2, .. },
        ) => r1 == r2 && l1 == l2 && e1 == e2,
        _ => false,
    }
}

fn unit_qvecs(rank: usize) -> Vec<QVec> {
    (0..rank)
        .map(|i| {
            let mut e = vec![Int::from(0); rank];
            e[i] = Int::from(1);
            int_to_q(&e)
        })
        .collect()
}

fn assemble(
    n: u64,
    rank: usize,
    facets: Vec<QVec>,
    equations: Vec<QVec>,
    strict: Vec<QVec>,
    rays: Vec<QVec>,
    lineality: Vec<QVec>,
) -> Result<QuadGeo> {
    let collapse = strict.iter().any(|s| {
        rays.iter().all(|r| q_dot(s, r).map(|d| d.is_zero()).unwrap_or(false))
            && lineality.iter().all(|l| q_dot(s, l).map(|d| d.is_zero()).unwrap_or(false))
    });
    if collapse {
        return Ok(QuadGeo::Canonical {
            n,
            facets: vec![],
            equations: unit_qvecs(rank),
            strict: vec![],
            rays: vec![],
            lineality: vec![],
            closed: true,
            full_dim: rank == 0,
            zero_collapsed: true,
        });
    }
    let closed = strict.iter().all(|s| {
        lineality.is_empty()
            && rays.iter().all(|r| q_dot(s, r).map(|d| d.sign() > 0).unwrap_or(false))
    });
    let full_dim = equations.is_empty();
    let mut facets = facets;
    facets.sort_by(q_lex_cmp);
    let mut rays = rays;
    rays.sort_by(q_lex_cmp);
    Ok(QuadGeo::Canonical {
        n,
        facets,
        equations,
        strict,
        rays,
        lineality,
        closed,
        full_dim,
        zero_collapsed: false,
    })
}

fn canonical_from_generators(rank: usize, n: u64, gens: Vec<QVec>) -> Result<QuadGeo> {
    assert!(rank == 2, "quadratic entries only survive normalization in rank 2");
    let gens: Vec<QVec> = gens.into_iter().filter(|g| !q_is_zero(g)).collect();
    if gens.is_empty() {
        return assemble(n, rank, vec![], unit_qvecs(rank), vec![], vec![], vec![]);
    }
    // opposite pair -> the hull contains a line
    let mut line: Option<QVec> = None;
    'outer: for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if let Some(c) = parallel_factor(&gens[i], &gens[j])? {
                if c.sign() < 0 {
                    line = Some(gens[i].clone());
                    break 'outer;
                }
            }
        }
    }
    if let Some(dir) = line {
        let side = perp(&dir);
        let mut pos_side = false;
        let mut neg_side = false;
        for g in &gens {
            match q_dot(&side, g)?.sign() {
                1 => pos_side = true,
                -1 => neg_side = true,
                _ => {}
            }
        }
        return match (pos_side, neg_side) {
            (false, false) => {
                // the line itself
                let eq = q_normalize(&perp(&dir))?;
                assemble(n, rank, vec![], vec![line_canonical(&eq)], vec![], vec![], vec![
                    line_canonical(&q_normalize(&dir)?),
                ])
            }
            (true, true) => {
                assemble(n, rank, vec![], vec![], vec![], vec![], unit_qvecs(rank))
            }
            (onpos, _) => {
                let normal = if onpos { side } else { qneg(&side) };
                let normal = q_normalize(&normal)?;
                assemble(
                    n,
                    rank,
                    vec![normal.clone()],
                    vec![],
                    vec![],
                    vec![normal],
                    vec![line_canonical(&q_normalize(&dir)?)],
                )
            }
        };
    }
    // no line: grow an extreme pair
    let mut u = gens[0].clone();
    let mut v = gens[0].clone();
    for g in gens.iter().skip(1) {
        if in_pos2(&u, &v, g)? {
            continue;
        }
        if in_pos2(g, &v, &u)? {
            u = g.clone();
        } else if in_pos2(&u, g, &v)? {
            v = g.clone();
        } else {
            // 0 is interior to the triangle: the hull is the whole plane
            return assemble(n, rank, vec![], vec![], vec![], vec![], unit_qvecs(rank));
        }
    }
    if let Some(c) = parallel_factor(&u, &v)? {
        debug_assert!(c.sign() >= 0);
        // single ray
        let dir = q_normalize(&u)?;
        let eq = line_canonical(&q_normalize(&perp(&dir))?);
        return assemble(n, rank, vec![dir.clone()], vec![eq], vec![], vec![dir], vec![]);
    }
    let mut nu = perp(&u);
    if q_dot(&nu, &v)?.sign() < 0 {
        nu = qneg(&nu);
    }
    let mut nv = perp(&v);
    if q_dot(&nv, &u)?.sign() < 0 {
        nv = qneg(&nv);
    }
    assemble(
        n,
        rank,
        vec![q_normalize(&nu)?, q_normalize(&nv)?],
        vec![],
        vec![],
        vec![q_normalize(&u)?, q_normalize(&v)?],
        vec![],
    )
}

fn canonical_from_constraints(rank: usize, n: u64, hs: Vec<HalfSpace>) -> Result<QuadGeo> {
    assert!(rank == 2, "quadratic entries only survive normalization in rank 2");
    let strict: Vec<QVec> = hs.iter().filter(|h| h.strict).map(|h| h.normal.clone()).collect();
    let mut normals: Vec<QVec> = hs.iter().map(|h| h.normal.clone()).collect();
    normals.sort_by(q_lex_cmp);
    normals.dedup();
    // split into equations (opposite pairs) and one-sided constraints
    let mut equations: Vec<QVec> = Vec::new();
    let mut cons: Vec<QVec> = Vec::new();
    let mut used = vec![false; normals.len()];
    for i in 0..normals.len() {
        if used[i] {
            continue;
        }
        let neg_i = qneg(&normals[i]);
        if let Some(j) = (i + 1..normals.len()).find(|&j| !used[j] && normals[j] == neg_i) {
            used[i] = true;
            used[j] = true;
            // a strict member of an opposite pair empties the cone
            if strict.contains(&normals[i]) || strict.contains(&normals[j]) {
                return assemble(n, rank, vec![], unit_qvecs(rank), vec![QVec::new()], vec![], vec![])
                    .map(force_collapse);
            }
            equations.push(line_canonical(&normals[i]));
        } else {
            used[i] = true;
            cons.push(normals[i].clone());
        }
    }
    if !equations.is_empty() {
        let dir = perp(&equations[0]);
        if equations.iter().skip(1).any(|e| q_dot(e, &dir).map(|d| !d.is_zero()).unwrap_or(true)) {
            // two independent equations: only the origin
            return assemble(n, rank, vec![], unit_qvecs(rank), vec![], vec![], vec![]);
        }
        let mut pos_ok = true;
        let mut neg_ok = true;
        for c in &cons {
            match q_dot(c, &dir)?.sign() {
                1 => neg_ok = false,
                -1 => pos_ok = false,
                _ => {}
            }
        }
        let eq = equations[0].clone();
        return match (pos_ok, neg_ok) {
            (true, true) => assemble(
                n,
                rank,
                vec![],
                vec![eq],
                strict,
                vec![],
                vec![line_canonical(&q_normalize(&dir)?)],
            ),
            (false, false) => assemble(n, rank, vec![], unit_qvecs(rank), vec![], vec![], vec![]),
            (p, _) => {
                let d = if p { dir } else { qneg(&dir) };
                let d = q_normalize(&d)?;
                assemble(n, rank, vec![d.clone()], vec![eq], strict, vec![d], vec![])
            }
        };
    }
    if cons.is_empty() {
        return assemble(n, rank, vec![], vec![], strict, vec![], unit_qvecs(rank));
    }
    // candidate boundary directions: perps of the constraints
    let mut kept: Vec<QVec> = Vec::new();
    for c in &cons {
        for cand in [perp(c), qneg(&perp(c))] {
            let ok = cons.iter().all(|m| q_dot(m, &cand).map(|d| d.sign() >= 0).unwrap_or(false));
            if ok {
                let cand = q_normalize(&cand)?;
                if !kept.contains(&cand) {
                    kept.push(cand);
                }
            }
        }
    }
    if kept.is_empty() {
        return assemble(n, rank, vec![], unit_qvecs(rank), vec![], vec![], vec![]);
    }
    // a kept opposite pair means the closure is a half-plane
    for i in 0..kept.len() {
        let ni = qneg(&kept[i]);
        if kept.contains(&ni) {
            debug_assert_eq!(cons.len(), 1);
            let normal = q_normalize(&cons[0])?;
            return assemble(
                n,
                rank,
                vec![normal.clone()],
                vec![],
                strict,
                vec![normal],
                vec![line_canonical(&kept[i])],
            );
        }
    }
    // extremal directions among kept
    let mut extremal: Vec<QVec> = Vec::new();
    for (i, d) in kept.iter().enumerate() {
        let mut redundant = false;
        'pairs: for a in 0..kept.len() {
            for b in a + 1..kept.len() {
                if a == i || b == i {
                    continue;
                }
                if in_pos2(&kept[a], &kept[b], d)? {
                    redundant = true;
                    break 'pairs;
                }
            }
        }
        if !redundant {
            extremal.push(d.clone());
        }
    }
    if extremal.len() == 1 {
        let dir = extremal.pop().expect("one element");
        let eq = line_canonical(&q_normalize(&perp(&dir))?);
        return assemble(n, rank, vec![dir.clone()], vec![eq], strict, vec![dir], vec![]);
    }
    debug_assert_eq!(extremal.len(), 2);
    let (u, v) = (extremal[0].clone(), extremal[1].clone());
    let mut nu = perp(&u);
    if q_dot(&nu, &v)?.sign() < 0 {
        nu = qneg(&nu);
    }
    let mut nv = perp(&v);
    if q_dot(&nv, &u)?.sign() < 0 {
        nv = qneg(&nv);
    }
    assemble(
        n,
        rank,
        vec![q_normalize(&nu)?, q_normalize(&nv)?],
        vec![],
        strict,
        vec![u, v],
        vec![],
    )
}

fn force_collapse(g: QuadGeo) -> QuadGeo {
    match g {
        QuadGeo::Canonical { n, equations, .. } => QuadGeo::Canonical {
            n,
            facets: vec![],
            equations,
            strict: vec![],
            rays: vec![],
            lineality: vec![],
            closed: true,
            full_dim: false,
            zero_collapsed: true,
        },
        raw => raw,
    }
}

impl QuadGeo {
    pub(crate) fn closed(&self) -> bool {
        match self {
            QuadGeo::Canonical { closed, .. } => *closed,
            QuadGeo::Raw { constraints } => constraints.iter().all(|(_, s)| !s),
        }
    }

    pub(crate) fn full_dim(&self) -> bool {
        match self {
            QuadGeo::Canonical { full_dim, .. } => *full_dim,
            QuadGeo::Raw { .. } => false,
        }
    }

    pub(crate) fn has_strict(&self) -> bool {
        match self {
            QuadGeo::Canonical { strict, .. } => !strict.is_empty(),
            QuadGeo::Raw { constraints } => constraints.iter().any(|(_, s)| *s),
        }
    }

    pub(crate) fn relax(&mut self) {
        match self {
            QuadGeo::Canonical { strict, closed, .. } => {
                strict.clear();
                *closed = true;
            }
            QuadGeo::Raw { constraints } => {
                for (_, s) in constraints.iter_mut() {
                    *s = false;
                }
            }
        }
    }

    pub(crate) fn lineality(&self) -> Vec<QVec> {
        match self {
            QuadGeo::Canonical { lineality, strict, zero_collapsed, .. } => {
                if !strict.is_empty() || *zero_collapsed {
                    Vec::new()
                } else {
                    lineality.clone()
                }
            }
            QuadGeo::Raw { constraints } => {
                if constraints.iter().any(|(_, s)| *s) {
                    return Vec::new();
                }
                field_kernel(&constraints.iter().map(|(v, _)| v.clone()).collect::<Vec<_>>())
            }
        }
    }

    pub(crate) fn require_canonical(&self, rank: usize) -> Result<()> {
        match self {
            QuadGeo::Canonical { .. } => Ok(()),
            QuadGeo::Raw { .. } => Err(Error::QuadraticRankUnsupported(rank)),
        }
    }

    pub(crate) fn contains(&self, x: &QVec) -> Result<bool> {
        match self {
            QuadGeo::Canonical { facets, equations, strict, zero_collapsed, .. } => {
                if *zero_collapsed {
                    return Ok(false);
                }
                for e in equations {
                    if q_dot(e, x)?.sign() != 0 {
                        return Ok(false);
                    }
                }
                for f in facets {
                    if q_dot(f, x)?.sign() < 0 {
                        return Ok(false);
                    }
                }
                for s in strict {
                    if q_dot(s, x)?.sign() <= 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            QuadGeo::Raw { constraints } => {
                for (nrm, strict) in constraints {
                    let d = q_dot(nrm, x)?.sign();
                    if d < 0 || (*strict && d == 0) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
        }
    }

    pub(crate) fn contains_int(&self, x: &[Int]) -> Result<bool> {
        let q: QVec = int_to_q(x);
        self.contains(&q)
    }

    pub(crate) fn relint_contains(&self, x: &QVec) -> Result<bool> {
        match self {
            QuadGeo::Canonical { facets, .. } => {
                for f in facets {
                    if q_dot(f, x)?.sign() <= 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            QuadGeo::Raw { .. } => Err(Error::QuadraticRankUnsupported(3)),
        }
    }

    pub(crate) fn relint_contains_int(&self, x: &[Int]) -> Result<bool> {
        match self {
            QuadGeo::Canonical { facets, .. } => {
                for f in facets {
                    if q_dot_int(f, x)?.sign() <= 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            QuadGeo::Raw { .. } => Err(Error::QuadraticRankUnsupported(3)),
        }
    }

    pub(crate) fn halfspaces(&self) -> Result<Vec<HalfSpace>> {
        match self {
            QuadGeo::Canonical { facets, equations, strict, .. } => {
                let mut out = Vec::new();
                for e in equations {
                    out.push(HalfSpace::new(e.clone(), false));
                    out.push(HalfSpace::new(qneg(e), false));
                }
                for f in facets {
                    out.push(HalfSpace::new(f.clone(), strict.contains(f)));
                }
                for s in strict {
                    if !facets.contains(s) {
                        out.push(HalfSpace::new(s.clone(), true));
                    }
                }
                Ok(out)
            }
            QuadGeo::Raw { constraints } => Ok(constraints
                .iter()
                .map(|(v, s)| HalfSpace::new(v.clone(), *s))
                .collect()),
        }
    }

    /// Boundary rays of the canonical rank-2 form.
    pub(crate) fn rays(&self) -> Result<&[QVec]> {
        match self {
            QuadGeo::Canonical { rays, .. } => Ok(rays),
            QuadGeo::Raw { .. } => Err(Error::QuadraticRankUnsupported(3)),
        }
    }

    /// Canonical facet list with strictness flags.
    pub(crate) fn facet_constraints(&self) -> Vec<(QVec, bool)> {
        match self {
            QuadGeo::Canonical { facets, strict, .. } => facets
                .iter()
                .map(|f| (f.clone(), strict.contains(f)))
                .collect(),
            QuadGeo::Raw { constraints } => constraints.clone(),
        }
    }
}

/// Kernel of a set of field-coefficient functionals, by Gauss elimination.
fn field_kernel(normals: &[QVec]) -> Vec<QVec> {
    if normals.is_empty() {
        return Vec::new();
    }
    let d = normals[0].len();
    let mut m: Vec<QVec> = normals.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..d {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for j in 0..d {
            m[row][j] = m[row][j].checked_mul(&inv).expect("same field");
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..d {
                    let t = f.checked_mul(&m[row][j]).expect("same field");
                    m[i][j] = m[i][j].checked_sub(&t).expect("same field");
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..d {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![QuadNum::zero(); d];
        v[free] = QuadNum::rational(Rat::from_integer(Int::from(1)));
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::Cone;
    use crate::num::rat;
    use crate::vecs::int_vec;

    fn sqrt2_cone() -> Cone {
        // 0 <= y <= sqrt(2) x: normals (0,1) and (sqrt2, -1)
        Cone::from_h_rep(
            2,
            vec![
                HalfSpace::new(int_to_q(&int_vec(&[0, 1])), false),
                HalfSpace::new(
                    vec![QuadNum::sqrt_of(2).unwrap(), QuadNum::from_int(-1)],
                    false,
                ),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sqrt2_cone_membership() {
        let c = sqrt2_cone();
        assert!(!c.is_rational());
        assert!(c.is_closed());
        assert!(c.is_full_dimensional());
        // (12,17): 17 > 12 sqrt 2 (289 > 288) -> outside
        assert!(!c.contains_lattice(&int_vec(&[12, 17])).unwrap());
        // (97,137): 137 < 97 sqrt 2 (18769 < 18818) -> inside
        assert!(c.contains_lattice(&int_vec(&[97, 137])).unwrap());
        assert!(c.contains_lattice(&int_vec(&[1, 1])).unwrap());
        assert!(c.relint_contains_lattice(&int_vec(&[1, 1])).unwrap());
        assert!(!c.relint_contains_lattice(&int_vec(&[1, 0])).unwrap());
        assert!(c.contains_lattice(&int_vec(&[1, 0])).unwrap());
        // closure is itself
        let cl = c.closure();
        assert!(cl.is_closed());
        assert!(cl.contains_lattice(&int_vec(&[1, 0])).unwrap());
    }

    #[test]
    fn sqrt2_cone_from_generators() {
        // pos{(1,0),(1,sqrt2)}: same cone as the constraint form
        let g = Cone::from_v_rep(
            2,
            vec![
                int_to_q(&int_vec(&[1, 0])),
                vec![QuadNum::from_int(1), QuadNum::sqrt_of(2).unwrap()],
            ],
        )
        .unwrap();
        let h = sqrt2_cone();
        for x in [[1i64, 1], [12, 17], [97, 137], [2, 2], [1, 0], [0, 1], [-1, 0]] {
            let xi = int_vec(&x);
            assert_eq!(
                g.contains_lattice(&xi).unwrap(),
                h.contains_lattice(&xi).unwrap(),
                "disagree at {:?}",
                x
            );
        }
    }

    #[test]
    fn quadratic_lineality_and_halfplane() {
        // halfplane y >= sqrt2 x: normal (-sqrt2, 1)
        let c = Cone::from_h_rep(
            2,
            vec![HalfSpace::new(
                vec![-&QuadNum::sqrt_of(2).unwrap(), QuadNum::from_int(1)],
                false,
            )],
        )
        .unwrap();
        let lin = c.lineality();
        assert_eq!(lin.len(), 1);
        // the boundary line has irrational slope: (1, sqrt2) direction
        let d = &lin[0];
        let slope_check = d[1].checked_sub(
            &d[0].checked_mul(&QuadNum::sqrt_of(2).unwrap()).unwrap(),
        );
        assert_eq!(slope_check.unwrap().sign(), 0);
    }

    #[test]
    fn quadratic_single_ray() {
        let c = Cone::from_v_rep(
            2,
            vec![vec![QuadNum::from_int(1), QuadNum::sqrt_of(2).unwrap()]],
        )
        .unwrap();
        assert!(!c.is_full_dimensional());
        assert!(c.contains(&vec![QuadNum::from_int(2), QuadNum::new(rat(0), rat(2), 2).unwrap()]).unwrap());
        assert!(!c.contains_lattice(&int_vec(&[1, 1])).unwrap());
        assert!(!c.contains(&vec![QuadNum::from_int(-1), -&QuadNum::sqrt_of(2).unwrap()]).unwrap());
    }

    #[test]
    fn rank3_quadratic_membership_only() {
        let hs = vec![
            HalfSpace::new(
                vec![QuadNum::sqrt_of(2).unwrap(), QuadNum::from_int(-1), QuadNum::from_int(0)],
                false,
            ),
            HalfSpace::new(int_to_q(&int_vec(&[0, 0, 1])), false),
        ];
        let c = Cone::from_h_rep(3, hs).unwrap();
        assert!(c.contains_lattice(&int_vec(&[1, 1, 0])).unwrap());
        assert!(!c.contains_lattice(&int_vec(&[1, 2, 0])).unwrap());
        assert!(c.v_to_h().is_err());
    }
}
