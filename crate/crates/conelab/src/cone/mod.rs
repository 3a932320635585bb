//! Exact convex cones: representations, duality, faces, extremal rays,
//! lineality spaces, quotients and sections.
//!
//! A cone always contains the origin. Rational cones carry a fully canonical
//! geometry (facets, span equations, extremal rays, lineality) computed by
//! double description at construction time; quadratic cones (entries in a
//! real quadratic field) are supported in rank <= 2 with an equivalent
//! canonical form, and in higher rank only through their given inequalities.
//!
//! Strict inequalities are stored as extra `> 0` constraints next to the
//! closure geometry: the point set is `{0} union {x : equations = 0,
//! facets >= 0, strict > 0}`. Duality and conversion act on the closure.

mod dd;
pub mod lp;
mod quad;
mod section;

pub use lp::caratheodory;
pub use section::{affine_section_cone, cross_section, hyperplane_section, AffineSectionContext};

use crate::error::{Error, Result};
use crate::lattice::{saturate_subgroup, split_quotient, LatticeSection};
use crate::mat::IntMatrix;
use crate::num::Int;
use crate::vecs::{
    dot, int_to_q, is_zero_vec, neg, primitive, q_dot_int, q_normalize, q_to_primitive_int,
    IntVec, QVec, RatVec,
};
use num_traits::{Signed, Zero};

/// One linear constraint `normal . x >= 0` (or `> 0` when strict).
#[derive(Clone, Debug, PartialEq)]
pub struct HalfSpace {
    pub normal: QVec,
    pub strict: bool,
}

impl HalfSpace {
    pub fn new(normal: QVec, strict: bool) -> Self {
        HalfSpace { normal, strict }
    }

    pub fn from_int(normal: &[i64], strict: bool) -> Self {
        HalfSpace { normal: int_to_q(&crate::vecs::int_vec(normal)), strict }
    }
}

/// A rational ray, stored primitive integral.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ray {
    pub dir: IntVec,
}

/// A rational polytope given by its (irredundant) vertex list.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    pub vertices: Vec<RatVec>,
}

#[derive(Clone, Debug)]
pub(crate) struct RatGeo {
    /// Canonical basis of the closure's lineality space (HNF rows).
    pub lineality: Vec<IntVec>,
    /// Extremal rays of the closure modulo lineality, canonical and sorted.
    pub rays: Vec<IntVec>,
    /// Irredundant facet normals of the closure, canonical and sorted.
    pub facets: Vec<IntVec>,
    /// Equations cutting out the linear span (empty iff full-dimensional).
    pub equations: Vec<IntVec>,
    /// Strict constraints layered on top of the closure.
    pub strict: Vec<IntVec>,
    pub closed: bool,
    pub full_dim: bool,
    /// True when strict constraints collapse the point set to {0}.
    pub zero_collapsed: bool,
}

#[derive(Clone, Debug)]
pub(crate) enum Geometry {
    Rational(RatGeo),
    Quadratic(quad::QuadGeo),
}

#[derive(Clone, Debug)]
pub struct Cone {
    rank: usize,
    quad_n: Option<u64>,
    pub(crate) geo: Geometry,
}

fn canonical_basis_rows(vectors: &[IntVec], rank: usize) -> Vec<IntVec> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = IntMatrix::from_rows(vectors.to_vec());
    let (h, _) = m.hnf();
    let mut out = Vec::new();
    for i in 0..h.rows {
        let row = h.row(i);
        if !is_zero_vec(&row) {
            out.push(primitive(&row));
        }
    }
    let _ = rank;
    out
}

/// Canonical basis of the saturation of the lattice spanned by `vectors`,
/// plus the matching split of the quotient.
fn saturated_section(vectors: &[IntVec], rank: usize) -> Result<(Vec<IntVec>, LatticeSection)> {
    let sat = saturate_subgroup(&IntMatrix::from_cols(vectors.to_vec()))?;
    let basis = canonical_basis_rows(&sat.cols_vec(), rank);
    let section = split_quotient(&IntMatrix::from_cols(basis.clone()), rank)?;
    Ok((basis, section))
}

/// Reduce each direction modulo the lattice split: project, make primitive,
/// lift back. Deterministic representatives for rays mod lineality.
fn reduce_mod(section: &Option<LatticeSection>, dirs: &[IntVec]) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = dirs
        .iter()
        .map(|r| match section {
            None => primitive(r),
            Some(s) => {
                let p = primitive(&s.project(r));
                s.lift(&p)
            }
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

struct RationalParts {
    gens: Option<Vec<IntVec>>,
    constraints: Option<Vec<(IntVec, bool)>>,
}

impl Cone {
    // ---------------- constructors ----------------

    pub fn from_parts(
        rank: usize,
        quad_n: Option<u64>,
        generators: Option<Vec<QVec>>,
        halfspaces: Option<Vec<HalfSpace>>,
    ) -> Result<Cone> {
        if generators.is_none() && halfspaces.is_none() {
            return Err(Error::EmptyRepresentation);
        }
        if let Some(n) = quad_n {
            if n < 2 || !crate::num::is_squarefree(n) {
                return Err(Error::BadRadicand(n));
            }
        }
        // normalize and split rational vs quadratic
        let mut rational = true;
        let mut gens_norm: Option<Vec<QVec>> = None;
        if let Some(gens) = &generators {
            let mut v = Vec::new();
            for g in gens {
                if g.len() != rank {
                    return Err(Error::DimensionMismatch { expected: rank, got: g.len() });
                }
                if g.iter().all(|x| x.is_zero()) {
                    continue; // the origin is implicit
                }
                Self::check_radicand(g, quad_n)?;
                let ng = q_normalize(g)?;
                if ng.iter().any(|x| !x.is_rational()) {
                    rational = false;
                }
                v.push(ng);
            }
            v.sort_by(quad::q_lex_cmp);
            v.dedup();
            gens_norm = Some(v);
        }
        let mut hs_norm: Option<Vec<HalfSpace>> = None;
        if let Some(hs) = &halfspaces {
            let mut v = Vec::new();
            for h in hs {
                if h.normal.len() != rank {
                    return Err(Error::DimensionMismatch { expected: rank, got: h.normal.len() });
                }
                if h.normal.iter().all(|x| x.is_zero()) {
                    if h.strict {
                        return Err(Error::ZeroNormal);
                    }
                    continue; // 0 >= 0 carries no information
                }
                Self::check_radicand(&h.normal, quad_n)?;
                let nn = q_normalize(&h.normal)?;
                if nn.iter().any(|x| !x.is_rational()) {
                    rational = false;
                }
                v.push(HalfSpace { normal: nn, strict: h.strict });
            }
            // same normal twice: the strict copy wins the membership rule,
            // so keep strict flags joined by OR
            v.sort_by(|a, b| quad::q_lex_cmp(&a.normal, &b.normal));
            v.dedup_by(|a, b| {
                if a.normal == b.normal {
                    b.strict |= a.strict;
                    true
                } else {
                    false
                }
            });
            hs_norm = Some(v);
        }

        if rational {
            let gens_int = gens_norm.as_ref().map(|gs| {
                gs.iter().map(|g| q_to_primitive_int(g).expect("rational data")).collect()
            });
            let cons_int = hs_norm.as_ref().map(|hs| {
                hs.iter()
                    .map(|h| (q_to_primitive_int(&h.normal).expect("rational data"), h.strict))
                    .collect()
            });
            if gens_int.is_some() && cons_int.as_ref().is_some_and(|c: &Vec<(IntVec, bool)>| {
                c.iter().any(|(_, s)| *s)
            }) {
                return Err(Error::RepresentationMismatch(
                    "generator representations cannot carry strict inequalities".into(),
                ));
            }
            let geo = Self::build_rational(
                rank,
                RationalParts { gens: gens_int, constraints: cons_int },
            )?;
            Ok(Cone { rank, quad_n: None, geo: Geometry::Rational(geo) })
        } else {
            let n = quad_n.ok_or(Error::Parse(
                "quadratic entries present but no radicand declared".into(),
            ))?;
            let geo = quad::build_quadratic(rank, n, gens_norm, hs_norm)?;
            Ok(Cone { rank, quad_n: Some(n), geo: Geometry::Quadratic(geo) })
        }
    }

    fn check_radicand(v: &QVec, quad_n: Option<u64>) -> Result<()> {
        for x in v {
            if let Some(m) = x.radicand() {
                match quad_n {
                    Some(n) if n == m => {}
                    Some(n) => return Err(Error::MixedRadicand(n, m)),
                    None => {
                        return Err(Error::Parse(
                            "quadratic entry without a declared radicand".into(),
                        ))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_v_rep(rank: usize, generators: Vec<QVec>) -> Result<Cone> {
        let n = generators
            .iter()
            .flat_map(|g| g.iter())
            .find_map(|x| x.radicand());
        Cone::from_parts(rank, n, Some(generators), None)
    }

    pub fn from_h_rep(rank: usize, halfspaces: Vec<HalfSpace>) -> Result<Cone> {
        let n = halfspaces
            .iter()
            .flat_map(|h| h.normal.iter())
            .find_map(|x| x.radicand());
        Cone::from_parts(rank, n, None, Some(halfspaces))
    }

    /// Cone generated by integer vectors; the workhorse for tests.
    pub fn from_int_generators(rank: usize, gens: &[&[i64]]) -> Result<Cone> {
        let v: Vec<QVec> =
            gens.iter().map(|g| int_to_q(&crate::vecs::int_vec(g))).collect();
        Cone::from_v_rep(rank, v)
    }

    pub fn from_int_halfspaces(rank: usize, normals: &[(&[i64], bool)]) -> Result<Cone> {
        let hs: Vec<HalfSpace> =
            normals.iter().map(|(n, s)| HalfSpace::from_int(n, *s)).collect();
        Cone::from_h_rep(rank, hs)
    }

    pub fn zero_cone(rank: usize) -> Cone {
        Cone::from_parts(rank, None, Some(vec![]), None).expect("trivial cone")
    }

    fn build_rational(rank: usize, parts: RationalParts) -> Result<RatGeo> {
        let (lin_raw, rays_raw, facets_raw, eqs_raw, strict_raw) = match (&parts.gens, &parts.constraints) {
            (Some(gens), maybe_cons) => {
                // dual description: inequalities phi.g >= 0 in the dual space
                let dualdd = dd::cone_from_inequalities(rank, gens);
                let eqs = dualdd.lineality;
                let facets = dualdd.rays;
                // primal from the derived facets and equations
                let mut ineqs = facets.clone();
                for e in &eqs {
                    ineqs.push(e.clone());
                    ineqs.push(neg(e));
                }
                let primal = dd::cone_from_inequalities(rank, &ineqs);
                if let Some(cons) = maybe_cons {
                    // both representations given: they must agree
                    let alt = Self::geo_from_constraints(rank, cons)?;
                    let this = Self::assemble(rank, primal.lineality.clone(), primal.rays.clone(), facets.clone(), eqs.clone(), vec![])?;
                    if alt.lineality != this.lineality || alt.rays != this.rays {
                        return Err(Error::RepresentationMismatch(
                            "generator and inequality representations describe different cones"
                                .into(),
                        ));
                    }
                }
                (primal.lineality, primal.rays, facets, eqs, vec![])
            }
            (None, Some(cons)) => {
                let geo = Self::geo_from_constraints(rank, cons)?;
                return Ok(geo);
            }
            (None, None) => unreachable!("checked in from_parts"),
        };
        Self::assemble(rank, lin_raw, rays_raw, facets_raw, eqs_raw, strict_raw)
    }

    fn geo_from_constraints(rank: usize, cons: &[(IntVec, bool)]) -> Result<RatGeo> {
        let relaxed: Vec<IntVec> = cons.iter().map(|(n, _)| n.clone()).collect();
        let primal = dd::cone_from_inequalities(rank, &relaxed);
        // dual side from the primal generators
        let mut gens = primal.rays.clone();
        for l in &primal.lineality {
            gens.push(l.clone());
            gens.push(neg(l));
        }
        let dualdd = dd::cone_from_inequalities(rank, &gens);
        let strict: Vec<IntVec> =
            cons.iter().filter(|(_, s)| *s).map(|(n, _)| n.clone()).collect();
        Self::assemble(rank, primal.lineality, primal.rays, dualdd.rays, dualdd.lineality, strict)
    }

    fn assemble(
        rank: usize,
        lin_raw: Vec<IntVec>,
        rays_raw: Vec<IntVec>,
        facets_raw: Vec<IntVec>,
        eqs_raw: Vec<IntVec>,
        strict: Vec<IntVec>,
    ) -> Result<RatGeo> {
        let (lineality, section) = if lin_raw.is_empty() {
            (Vec::new(), None)
        } else {
            let (basis, section) = saturated_section(&lin_raw, rank)?;
            (basis, Some(section))
        };
        let rays = reduce_mod(&section, &rays_raw);
        let (equations, facets) = if eqs_raw.is_empty() {
            let mut f: Vec<IntVec> = facets_raw.iter().map(|v| primitive(v)).collect();
            f.sort();
            f.dedup();
            (Vec::new(), f)
        } else {
            let (eq_basis, eq_section) = saturated_section(&eqs_raw, rank)?;
            (eq_basis, reduce_mod(&Some(eq_section), &facets_raw))
        };
        let mut strict: Vec<IntVec> = strict.iter().map(|v| primitive(v)).collect();
        strict.sort();
        strict.dedup();
        // a strict constraint vanishing on the whole closure collapses the
        // point set to the origin
        let collapse = strict.iter().any(|s| {
            rays.iter().all(|r| dot(s, r).is_zero())
                && lineality.iter().all(|l| dot(s, l).is_zero())
        });
        if collapse {
            let equations: Vec<IntVec> = (0..rank)
                .map(|i| {
                    let mut e = vec![Int::zero(); rank];
                    e[i] = Int::from(1);
                    e
                })
                .collect();
            return Ok(RatGeo {
                lineality: vec![],
                rays: vec![],
                facets: vec![],
                equations,
                strict: vec![],
                closed: true,
                full_dim: rank == 0,
                zero_collapsed: true,
            });
        }
        let closed = strict.iter().all(|s| {
            lineality.is_empty() && rays.iter().all(|r| dot(s, r).is_positive())
        });
        let full_dim = equations.is_empty();
        Ok(RatGeo {
            lineality,
            rays,
            facets,
            equations,
            strict,
            closed,
            full_dim,
            zero_collapsed: false,
        })
    }

    // ---------------- accessors ----------------

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn quad_n(&self) -> Option<u64> {
        self.quad_n
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.geo, Geometry::Rational(_))
    }

    pub(crate) fn rational_geo(&self) -> Result<&RatGeo> {
        match &self.geo {
            Geometry::Rational(g) => Ok(g),
            Geometry::Quadratic(_) => Err(Error::QuadraticUnsupported),
        }
    }

    pub fn is_closed(&self) -> bool {
        match &self.geo {
            Geometry::Rational(g) => g.closed,
            Geometry::Quadratic(g) => g.closed(),
        }
    }

    pub fn is_full_dimensional(&self) -> bool {
        match &self.geo {
            Geometry::Rational(g) => g.full_dim,
            Geometry::Quadratic(g) => g.full_dim(),
        }
    }

    pub fn has_strict(&self) -> bool {
        match &self.geo {
            Geometry::Rational(g) => !g.strict.is_empty(),
            Geometry::Quadratic(g) => g.has_strict(),
        }
    }

    /// Irredundant facet normals of the closure (rational cones).
    pub fn facet_normals(&self) -> Result<&[IntVec]> {
        Ok(&self.rational_geo()?.facets)
    }

    pub fn span_equations(&self) -> Result<&[IntVec]> {
        Ok(&self.rational_geo()?.equations)
    }

    pub fn strict_normals(&self) -> Result<&[IntVec]> {
        Ok(&self.rational_geo()?.strict)
    }

    /// Extremal rays of the closure modulo lineality (rational cones).
    pub fn rays_int(&self) -> Result<&[IntVec]> {
        Ok(&self.rational_geo()?.rays)
    }

    /// Canonical generator list of the closure: +-lineality basis plus rays.
    pub fn generators_int(&self) -> Result<Vec<IntVec>> {
        let g = self.rational_geo()?;
        let mut out = Vec::new();
        for l in &g.lineality {
            out.push(l.clone());
            out.push(neg(l));
        }
        out.extend(g.rays.iter().cloned());
        out.sort();
        Ok(out)
    }

    /// Canonical half-space list of the closure.
    pub fn halfspaces(&self) -> Result<Vec<HalfSpace>> {
        match &self.geo {
            Geometry::Rational(g) => {
                let mut out = Vec::new();
                for e in &g.equations {
                    out.push(HalfSpace::new(int_to_q(e), false));
                    out.push(HalfSpace::new(int_to_q(&neg(e)), false));
                }
                for fnorm in &g.facets {
                    let strict = g.strict.contains(fnorm);
                    out.push(HalfSpace::new(int_to_q(fnorm), strict));
                }
                for s in &g.strict {
                    if !g.facets.contains(s) {
                        out.push(HalfSpace::new(int_to_q(s), true));
                    }
                }
                Ok(out)
            }
            Geometry::Quadratic(g) => g.halfspaces(),
        }
    }

    // ---------------- membership ----------------

    /// Exact membership of a lattice point.
    pub fn contains_lattice(&self, x: &[Int]) -> Result<bool> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        if is_zero_vec(x) {
            return Ok(true);
        }
        match &self.geo {
            Geometry::Rational(g) => {
                if g.zero_collapsed {
                    return Ok(false);
                }
                Ok(g.equations.iter().all(|e| dot(e, x).is_zero())
                    && g.facets.iter().all(|f| !dot(f, x).is_negative())
                    && g.strict.iter().all(|s| dot(s, x).is_positive()))
            }
            Geometry::Quadratic(g) => g.contains_int(x),
        }
    }

    /// Exact membership of a point with quadratic coordinates.
    pub fn contains(&self, x: &QVec) -> Result<bool> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        if x.iter().all(|v| v.is_zero()) {
            return Ok(true);
        }
        match &self.geo {
            Geometry::Rational(g) => {
                if g.zero_collapsed {
                    return Ok(false);
                }
                for e in &g.equations {
                    if q_dot_int(x, e)?.sign() != 0 {
                        return Ok(false);
                    }
                }
                for f in &g.facets {
                    if q_dot_int(x, f)?.sign() < 0 {
                        return Ok(false);
                    }
                }
                for s in &g.strict {
                    if q_dot_int(x, s)?.sign() <= 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Geometry::Quadratic(g) => g.contains(x),
        }
    }

    /// Relative-interior membership for full-dimensional cones: every facet
    /// value strictly positive.
    pub fn relint_contains_lattice(&self, x: &[Int]) -> Result<bool> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        match &self.geo {
            Geometry::Rational(g) => Ok(g.facets.iter().all(|f| dot(f, x).is_positive())),
            Geometry::Quadratic(g) => g.relint_contains_int(x),
        }
    }

    pub fn relint_contains(&self, x: &QVec) -> Result<bool> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: x.len() });
        }
        match &self.geo {
            Geometry::Rational(g) => {
                for f in &g.facets {
                    if q_dot_int(x, f)?.sign() <= 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Geometry::Quadratic(g) => g.relint_contains(x),
        }
    }

    /// Fast integer membership checker for box enumerations. Valid for points
    /// with coordinates bounded by `max_abs` after scaling by `scale` and
    /// shifting by `shift`; falls back to None when i128 cannot hold the
    /// intermediate products, in which case callers use the exact path.
    pub fn fast_lattice_checker(&self, max_abs: &Int) -> Option<FastChecker> {
        let g = match &self.geo {
            Geometry::Rational(g) => g,
            Geometry::Quadratic(_) => return None,
        };
        if g.zero_collapsed {
            return Some(FastChecker { eqs: vec![], facets: vec![], strict: vec![], zero_only: true });
        }
        let limit = Int::from(i64::MAX as i128 >> 1);
        let to_small = |vs: &Vec<IntVec>| -> Option<Vec<Vec<i128>>> {
            vs.iter()
                .map(|v| {
                    let mut bound = Int::zero();
                    for x in v {
                        bound += x.abs() * max_abs;
                    }
                    if bound > limit {
                        return None;
                    }
                    v.iter()
                        .map(|x| {
                            let s = x.to_string();
                            s.parse::<i128>().ok()
                        })
                        .collect()
                })
                .collect()
        };
        Some(FastChecker {
            eqs: to_small(&g.equations)?,
            facets: to_small(&g.facets)?,
            strict: to_small(&g.strict)?,
            zero_only: false,
        })
    }

    // ---------------- operations ----------------

    /// Relax every strict inequality; the closure of the point set.
    pub fn closure(&self) -> Cone {
        let mut c = self.clone();
        match &mut c.geo {
            Geometry::Rational(g) => {
                g.strict.clear();
                g.closed = true;
            }
            Geometry::Quadratic(g) => g.relax(),
        }
        c
    }

    /// The dual cone, computed on the closure. Rational cones only.
    pub fn dual(&self) -> Result<Cone> {
        let g = self.rational_geo()?;
        let mut gens: Vec<QVec> = Vec::new();
        for f in &g.facets {
            gens.push(int_to_q(f));
        }
        for e in &g.equations {
            gens.push(int_to_q(e));
            gens.push(int_to_q(&neg(e)));
        }
        Cone::from_parts(self.rank, None, Some(gens), None)
    }

    fn require_nonstrict(&self) -> Result<()> {
        if self.has_strict() {
            return Err(Error::RepresentationMismatch(
                "conversion requires non-strict inequalities; take the closure first".into(),
            ));
        }
        Ok(())
    }

    /// Conversion: attach the derived inequality description. The result
    /// carries both canonical representations of the same closed cone.
    pub fn v_to_h(&self) -> Result<Cone> {
        self.require_nonstrict()?;
        match &self.geo {
            Geometry::Rational(_) => Ok(self.clone()),
            Geometry::Quadratic(g) => {
                g.require_canonical(self.rank)?;
                Ok(self.clone())
            }
        }
    }

    /// Conversion in the other direction; same canonicalized result.
    pub fn h_to_v(&self) -> Result<Cone> {
        self.v_to_h()
    }

    /// Basis of the largest linear subspace contained in the point set.
    /// With strict constraints present this is always trivial.
    pub fn lineality_int(&self) -> Result<Vec<IntVec>> {
        let g = self.rational_geo()?;
        if !g.strict.is_empty() || g.zero_collapsed {
            return Ok(Vec::new());
        }
        Ok(g.lineality.clone())
    }

    pub fn lineality(&self) -> Vec<QVec> {
        match &self.geo {
            Geometry::Rational(g) => {
                if !g.strict.is_empty() || g.zero_collapsed {
                    Vec::new()
                } else {
                    g.lineality.iter().map(|l| int_to_q(l)).collect()
                }
            }
            Geometry::Quadratic(g) => g.lineality(),
        }
    }

    pub fn is_pointed(&self) -> bool {
        match &self.geo {
            Geometry::Rational(g) => {
                g.zero_collapsed || !g.strict.is_empty() || g.lineality.is_empty()
            }
            Geometry::Quadratic(g) => g.lineality().is_empty(),
        }
    }

    /// Complete list of extremal rays of a closed pointed rational cone.
    pub fn extremal_rays(&self) -> Result<Vec<Ray>> {
        let g = self.rational_geo()?;
        if !g.closed {
            return Err(Error::RepresentationMismatch(
                "extremal rays require a closed cone".into(),
            ));
        }
        if !g.lineality.is_empty() {
            return Err(Error::LinealityNonzero);
        }
        Ok(g.rays.iter().map(|r| Ray { dir: r.clone() }).collect())
    }

    /// The face `sigma intersect phi-perp` for a supporting functional phi.
    pub fn face(&self, phi: &[Int]) -> Result<Cone> {
        let g = self.rational_geo()?;
        if !g.closed {
            return Err(Error::RepresentationMismatch("faces require a closed cone".into()));
        }
        if phi.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: phi.len() });
        }
        if is_zero_vec(phi) {
            return Ok(self.clone());
        }
        // validate phi in the dual cone
        let supports = g.rays.iter().all(|r| !dot(phi, r).is_negative())
            && g.lineality.iter().all(|l| dot(phi, l).is_zero());
        if !supports {
            return Err(Error::NotInDualCone);
        }
        let mut hs: Vec<HalfSpace> = Vec::new();
        for e in &g.equations {
            hs.push(HalfSpace::new(int_to_q(e), false));
            hs.push(HalfSpace::new(int_to_q(&neg(e)), false));
        }
        for f in &g.facets {
            hs.push(HalfSpace::new(int_to_q(f), false));
        }
        let p = primitive(phi);
        hs.push(HalfSpace::new(int_to_q(&p), false));
        hs.push(HalfSpace::new(int_to_q(&neg(&p)), false));
        Cone::from_parts(self.rank, None, None, Some(hs))
    }

    /// Quotient by the (point-set) lineality space: a strongly convex cone in
    /// the quotient lattice plus the split used to get there.
    pub fn quotient_by_lineality(&self) -> Result<(Cone, LatticeSection)> {
        let g = self.rational_geo()?;
        let lin = if g.strict.is_empty() { g.lineality.clone() } else { Vec::new() };
        if lin.is_empty() {
            let section = split_quotient(&IntMatrix::zero(self.rank, 0), self.rank)?;
            return Ok((self.clone(), section));
        }
        let section = split_quotient(&IntMatrix::from_cols(lin), self.rank)?;
        let q = section.quotient_rank();
        let gens: Vec<QVec> = g
            .rays
            .iter()
            .map(|r| int_to_q(&section.project(r)))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        let cone = Cone::from_parts(q, None, Some(gens), None)?;
        Ok((cone, section))
    }

    /// Sum of the canonical facet normals: an integral functional in the
    /// relative interior of the dual cone (zero iff the cone is a subspace).
    pub fn dual_relint_functional(&self) -> Result<IntVec> {
        let g = self.rational_geo()?;
        let mut nu = vec![Int::zero(); self.rank];
        for f in &g.facets {
            for (i, x) in f.iter().enumerate() {
                nu[i] += x;
            }
        }
        Ok(nu)
    }

    /// Smallest relative-interior lattice point in the deterministic order
    /// (sup-norm shell, then 1-norm, then lex). Full-dimensional cones only.
    pub fn relint_lattice_point(&self, max_radius: u32) -> Result<IntVec> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let zero = vec![Int::zero(); self.rank];
        if self.relint_contains_lattice(&zero)? {
            return Ok(zero);
        }
        for radius in 1..=max_radius as i64 {
            let mut shell: Vec<IntVec> = Vec::new();
            let mut point = vec![-radius; self.rank];
            loop {
                if point.iter().any(|&c| c.abs() == radius) {
                    shell.push(point.iter().map(|&c| Int::from(c)).collect());
                }
                let mut carry = self.rank;
                for i in (0..self.rank).rev() {
                    if point[i] < radius {
                        point[i] += 1;
                        carry = i;
                        break;
                    }
                }
                if carry == self.rank {
                    break;
                }
                for c in point.iter_mut().skip(carry + 1) {
                    *c = -radius;
                }
            }
            shell.sort_by_key(|p| {
                (p.iter().map(|x| x.abs()).sum::<Int>(), p.clone())
            });
            for p in shell {
                if self.relint_contains_lattice(&p)? {
                    return Ok(p);
                }
            }
        }
        Err(Error::NotFound(max_radius as u64))
    }
}

/// Overflow-guarded integer membership on i128; see
/// [`Cone::fast_lattice_checker`].
pub struct FastChecker {
    eqs: Vec<Vec<i128>>,
    facets: Vec<Vec<i128>>,
    strict: Vec<Vec<i128>>,
    zero_only: bool,
}

impl FastChecker {
    #[inline]
    pub fn contains(&self, x: &[i128]) -> bool {
        if x.iter().all(|&v| v == 0) {
            return true;
        }
        if self.zero_only {
            return false;
        }
        let dotp = |n: &Vec<i128>| -> i128 { n.iter().zip(x).map(|(a, b)| a * b).sum() };
        self.eqs.iter().all(|e| dotp(e) == 0)
            && self.facets.iter().all(|f| dotp(f) >= 0)
            && self.strict.iter().all(|s| dotp(s) > 0)
    }
}
