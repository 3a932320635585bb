//! Linear and affine hyperplane sections of rational cones, plus bounded
//! cross-section polytopes.

use super::{Cone, HalfSpace, Polytope};
use crate::error::{Error, Result};
use crate::mat::IntMatrix;
use crate::num::{Int, Rat};
use crate::vecs::{dot, int_to_q, is_zero_vec, primitive, rat_to_primitive_int, IntVec, RatVec};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Intersect a rational cone with the hyperplane `normal-perp`, re-expressed
/// in a canonical Z-basis of the rank-(d-1) lattice `normal-perp intersect Z^d`.
///
/// Returns the section cone together with the basis matrix `B` (columns are
/// the basis vectors): a point `y` of the section corresponds to `B y` in the
/// ambient lattice.
pub fn hyperplane_section(cone: &Cone, normal: &[Rat]) -> Result<(Cone, IntMatrix)> {
    let d = cone.rank();
    if normal.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: normal.len() });
    }
    if normal.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroNormal);
    }
    let g = cone.rational_geo()?;
    let n = rat_to_primitive_int(normal);
    // canonical basis of the kernel lattice
    let kernel = IntMatrix::from_rows(vec![n]).kernel_basis();
    let rows = kernel.transpose();
    let (h, _) = rows.hnf();
    let mut basis_vectors: Vec<IntVec> = Vec::new();
    for i in 0..h.rows {
        let r = h.row(i);
        if !is_zero_vec(&r) {
            basis_vectors.push(r);
        }
    }
    let b = IntMatrix::from_cols(basis_vectors.clone());
    // pull back each constraint along B
    let pull = |phi: &IntVec| -> IntVec {
        basis_vectors.iter().map(|col| dot(phi, col)).collect()
    };
    let mut hs: Vec<HalfSpace> = Vec::new();
    let mut collapsed = false;
    for e in &g.equations {
        let p = pull(e);
        if !is_zero_vec(&p) {
            let p = primitive(&p);
            hs.push(HalfSpace::new(int_to_q(&p), false));
            hs.push(HalfSpace::new(int_to_q(&crate::vecs::neg(&p)), false));
        }
    }
    for f in &g.facets {
        let p = pull(f);
        if !is_zero_vec(&p) {
            hs.push(HalfSpace::new(int_to_q(&primitive(&p)), false));
        }
    }
    for s in &g.strict {
        let p = pull(s);
        if is_zero_vec(&p) {
            // a strict constraint vanishing on the hyperplane kills everything
            collapsed = true;
        } else {
            hs.push(HalfSpace::new(int_to_q(&primitive(&p)), true));
        }
    }
    if g.zero_collapsed {
        collapsed = true;
    }
    let section_cone = if collapsed {
        Cone::zero_cone(d.saturating_sub(1))
    } else {
        Cone::from_parts(d - 1, None, None, Some(hs))?
    };
    Ok((section_cone, b))
}

/// Membership context for the affine section of a cone at level
/// `nu(alpha)`: translated to the origin, a lattice point `beta` with
/// `nu(beta) = 0` belongs to the section monoid iff `beta + l*alpha` lands in
/// the cone for some integer `l > 0`.
///
/// For a polyhedral cone the smallest such `l` has the closed form
/// `max(1, max_j ceil(-phi_j(beta) / phi_j(alpha)))` over the facets with
/// `phi_j(alpha) > 0`, subject to `phi_j(beta) >= 0` for the facets with
/// `phi_j(alpha) = 0` and to the span equations.
#[derive(Clone, Debug)]
pub struct AffineSectionContext {
    pub alpha: IntVec,
    pub nu: IntVec,
    pub level: Int,
    /// facets with positive value on alpha, paired with that value
    pub bound_facets: Vec<(IntVec, Int)>,
    /// facets vanishing on alpha: hard nonnegativity constraints
    pub hard_facets: Vec<IntVec>,
    /// span equations: hard equality constraints
    pub equations: Vec<IntVec>,
}

pub fn affine_section_cone(cone: &Cone, alpha: &[Int], nu: &[Int]) -> Result<AffineSectionContext> {
    let d = cone.rank();
    if alpha.len() != d || nu.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: alpha.len().max(nu.len()) });
    }
    let g = cone.rational_geo()?;
    if !g.closed {
        return Err(Error::RepresentationMismatch(
            "affine sections require a closed cone".into(),
        ));
    }
    if !cone.contains_lattice(alpha)? {
        return Err(Error::AlphaOutsideCone);
    }
    let level = dot(nu, alpha);
    if !level.is_positive() {
        return Err(Error::Parse("nu(alpha) must be positive".into()));
    }
    let mut bound_facets = Vec::new();
    let mut hard_facets = Vec::new();
    for f in &g.facets {
        let v = dot(f, alpha);
        debug_assert!(!v.is_negative());
        if v.is_positive() {
            bound_facets.push((f.clone(), v));
        } else {
            hard_facets.push(f.clone());
        }
    }
    Ok(AffineSectionContext {
        alpha: alpha.to_vec(),
        nu: nu.to_vec(),
        level,
        bound_facets,
        hard_facets,
        equations: g.equations.clone(),
    })
}

impl AffineSectionContext {
    /// Decide membership of `beta` (which must satisfy `nu(beta) = 0`);
    /// returns the minimal shift `l >= 1` on success.
    pub fn member(&self, beta: &[Int]) -> Result<Option<Int>> {
        if beta.len() != self.alpha.len() {
            return Err(Error::DimensionMismatch {
                expected: self.alpha.len(),
                got: beta.len(),
            });
        }
        if !dot(&self.nu, beta).is_zero() {
            return Err(Error::Parse("beta must satisfy nu(beta) = 0".into()));
        }
        for e in &self.equations {
            if !dot(e, beta).is_zero() {
                return Ok(None);
            }
        }
        for h in &self.hard_facets {
            if dot(h, beta).is_negative() {
                return Ok(None);
            }
        }
        let mut l = Int::from(1);
        for (f, val) in &self.bound_facets {
            let fb = dot(f, beta);
            if fb.is_negative() {
                // ceil(-fb / val)
                let need = (-fb).div_ceil(val);
                if need > l {
                    l = need;
                }
            }
        }
        Ok(Some(l))
    }
}

/// Vertices of `cone intersect {nu = level}` for a closed pointed rational
/// cone and `nu` in the relative interior of the dual cone.
pub fn cross_section(cone: &Cone, nu: &[Int], level: &Rat) -> Result<Polytope> {
    let g = cone.rational_geo()?;
    if !g.closed {
        return Err(Error::RepresentationMismatch(
            "cross sections require a closed cone".into(),
        ));
    }
    if !level.is_positive() {
        return Err(Error::Parse("level must be positive".into()));
    }
    let dual = cone.dual()?;
    match dual.relint_contains_lattice(nu) {
        Ok(true) => {}
        Ok(false) => return Err(Error::NuNotInRelint),
        Err(Error::NotFullDimensional) => return Err(Error::NuNotInRelint),
        Err(e) => return Err(e),
    }
    let mut vertices: Vec<RatVec> = Vec::new();
    for r in &g.rays {
        let v = dot(nu, r);
        debug_assert!(v.is_positive(), "relint functional must be positive on rays");
        let t = level / Rat::from_integer(v);
        vertices.push(r.iter().map(|x| Rat::from_integer(x.clone()) * &t).collect());
    }
    vertices.sort();
    Ok(Polytope { vertices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_frac};
    use crate::vecs::int_vec;

    #[test]
    fn octant_section() {
        let c = Cone::from_int_generators(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let (s, b) = hyperplane_section(&c, &[rat(0), rat(0), rat(1)]).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(b.cols, 2);
        assert_eq!(s.rays_int().unwrap(), &[int_vec(&[0, 1]), int_vec(&[1, 0])]);
        // basis maps section points into the hyperplane
        let y = int_vec(&[2, 3]);
        let amb = b.mul_vec(&y);
        assert_eq!(amb[2], Int::zero());
    }

    #[test]
    fn skew_cone_section_is_ray() {
        let c = Cone::from_int_generators(2, &[&[1, 0], &[1, 2]]).unwrap();
        let (s, _b) = hyperplane_section(&c, &[rat(0), rat(1)]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.rays_int().unwrap(), &[int_vec(&[1])]);
        assert!(s.is_pointed());
    }

    #[test]
    fn halfplane_section_is_line() {
        let c = Cone::from_int_halfspaces(2, &[(&[0, 1], false)]).unwrap();
        let (s, _b) = hyperplane_section(&c, &[rat(0), rat(1)]).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.lineality_int().unwrap(), vec![int_vec(&[1])]);
    }

    #[test]
    fn affine_section_quadrant() {
        let c = Cone::from_int_generators(2, &[&[1, 0], &[0, 1]]).unwrap();
        let ctx =
            affine_section_cone(&c, &int_vec(&[1, 1]), &int_vec(&[1, 1])).unwrap();
        assert_eq!(ctx.level, Int::from(2));
        // beta = (5,-5): nu(beta) = 0, member with l = 5
        assert_eq!(ctx.member(&int_vec(&[5, -5])).unwrap(), Some(Int::from(5)));
        assert_eq!(ctx.member(&int_vec(&[0, 0])).unwrap(), Some(Int::from(1)));
    }

    #[test]
    fn affine_section_skew() {
        let c = Cone::from_int_generators(2, &[&[1, 0], &[1, 2]]).unwrap();
        let ctx =
            affine_section_cone(&c, &int_vec(&[1, 1]), &int_vec(&[1, 0])).unwrap();
        // beta = (0,3): facet (2,-1) forces l >= 3; (3,6) lands inside
        assert_eq!(ctx.member(&int_vec(&[0, 3])).unwrap(), Some(Int::from(3)));
    }

    #[test]
    fn affine_section_validation() {
        let c = Cone::from_int_generators(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            affine_section_cone(&c, &int_vec(&[-1, 0]), &int_vec(&[1, 1])),
            Err(Error::AlphaOutsideCone)
        ));
        assert!(affine_section_cone(&c, &int_vec(&[1, 0]), &int_vec(&[0, 1])).is_err());
    }

    #[test]
    fn cross_sections() {
        let q = Cone::from_int_generators(2, &[&[1, 0], &[0, 1]]).unwrap();
        let p = cross_section(&q, &int_vec(&[1, 1]), &rat(1)).unwrap();
        assert_eq!(p.vertices, vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);

        let c = Cone::from_int_generators(2, &[&[1, 0], &[1, 2]]).unwrap();
        let p = cross_section(&c, &int_vec(&[1, 0]), &rat(1)).unwrap();
        assert_eq!(p.vertices, vec![vec![rat(1), rat(0)], vec![rat(1), rat(2)]]);

        let c3 = Cone::from_int_generators(2, &[&[1, 0], &[1, 1], &[0, 1]]).unwrap();
        let p = cross_section(&c3, &int_vec(&[1, 1]), &rat(2)).unwrap();
        assert_eq!(p.vertices, vec![vec![rat(0), rat(2)], vec![rat(2), rat(0)]]);

        // nu on the boundary of the dual is rejected
        assert!(matches!(
            cross_section(&q, &int_vec(&[1, 0]), &rat(1)),
            Err(Error::NuNotInRelint)
        ));
        // cones with lineality are rejected through the same door
        let h = Cone::from_int_halfspaces(2, &[(&[0, 1], false)]).unwrap();
        assert!(matches!(
            cross_section(&h, &int_vec(&[0, 1]), &rat(1)),
            Err(Error::NuNotInRelint)
        ));
        let _ = rat_frac(1, 2);
    }
}
