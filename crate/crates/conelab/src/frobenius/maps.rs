//! Direct-summand presentations of cone algebras: the monomial ring maps
//! induced by a split lattice quotient, and the projection onto a linear
//! hyperplane section.

use super::AlgebraElement;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::lattice::LatticeSection;
use crate::num::Int;
use crate::vecs::{dot, is_zero_vec, IntVec};
use num_traits::Zero;

/// The pair of monomial ring maps `pi*(X^a) = X^{pi(a)}` and
/// `i*(X^y) = X^{i(y)}` induced by a split quotient of the exponent lattice.
/// `pi* o i* = id` on the quotient algebra, so the quotient cone algebra is a
/// direct summand of the original one.
#[derive(Clone, Debug)]
pub struct SummandMaps {
    section: LatticeSection,
}

pub fn quotient_summand_maps(cone: &Cone, section: &LatticeSection) -> Result<SummandMaps> {
    section.validate()?;
    if section.ambient_rank() != cone.rank() {
        return Err(Error::InvalidSection("ambient rank mismatch".into()));
    }
    // the kernel must sit inside the cone's lineality space
    let lin = cone.lineality_int()?;
    for j in 0..section.kernel_basis.cols {
        let col = section.kernel_basis.col(j);
        if !crate::lattice::in_lattice(
            &crate::mat::IntMatrix::from_cols(lin.clone()),
            &col,
        ) {
            return Err(Error::InvalidSection(
                "kernel basis is not inside the cone's lineality lattice".into(),
            ));
        }
    }
    Ok(SummandMaps { section: section.clone() })
}

impl SummandMaps {
    /// pi*: exponents are projected; colliding terms add in F_p.
    pub fn project_elem(&self, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut terms = Vec::new();
        for (exp, c) in y.terms() {
            if exp.len() != self.section.ambient_rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.section.ambient_rank(),
                    got: exp.len(),
                });
            }
            terms.push((self.section.project(exp), c));
        }
        AlgebraElement::from_terms(y.p(), terms)
    }

    /// i*: exponents are lifted along the section; injective on monomials.
    pub fn lift_elem(&self, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut terms = Vec::new();
        for (exp, c) in y.terms() {
            if exp.len() != self.section.quotient_rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.section.quotient_rank(),
                    got: exp.len(),
                });
            }
            terms.push((self.section.lift(exp), c));
        }
        AlgebraElement::from_terms(y.p(), terms)
    }

    pub fn section(&self) -> &LatticeSection {
        &self.section
    }
}

/// The `F_p[sigma_H cap M_H]`-linear projection of the cone algebra onto the
/// hyperplane-section subalgebra: keeps exactly the monomials whose exponent
/// lies in the cone and on the hyperplane, kills the rest.
#[derive(Clone, Debug)]
pub struct HyperplaneSplit {
    cone: Cone,
    normal: IntVec,
}

pub fn hyperplane_projection_split(cone: &Cone, normal: &[Int]) -> Result<HyperplaneSplit> {
    if normal.len() != cone.rank() {
        return Err(Error::DimensionMismatch { expected: cone.rank(), got: normal.len() });
    }
    if is_zero_vec(normal) {
        return Err(Error::ZeroNormal);
    }
    let _ = cone.rational_geo()?;
    Ok(HyperplaneSplit { cone: cone.clone(), normal: normal.to_vec() })
}

impl HyperplaneSplit {
    pub fn apply(&self, y: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(y.p())?;
        for (exp, c) in y.terms() {
            if dot(&self.normal, exp).is_zero() && self.cone.contains_lattice(exp)? {
                out = out.add(&AlgebraElement::monomial(y.p(), exp.clone(), c)?)?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vecs::int_vec;

    #[test]
    fn summand_identities_halfplane() {
        let c = Cone::from_int_halfspaces(2, &[(&[0, 1], false)]).unwrap();
        let (quot, section) = c.quotient_by_lineality().unwrap();
        let maps = quotient_summand_maps(&c, &section).unwrap();
        // i*(X^1) = X^{(0,1)}
        let x1 = AlgebraElement::monomial(2, int_vec(&[1]), 1).unwrap();
        let lifted = maps.lift_elem(&x1).unwrap();
        assert_eq!(
            lifted,
            AlgebraElement::monomial(2, int_vec(&[0, 1]), 1).unwrap()
        );
        // pi*(X^{(3,2)}) = X^2
        let x32 = AlgebraElement::monomial(2, int_vec(&[3, 2]), 1).unwrap();
        assert_eq!(
            maps.project_elem(&x32).unwrap(),
            AlgebraElement::monomial(2, int_vec(&[2]), 1).unwrap()
        );
        // pi* o i* = id on quotient monomials
        for t in 0..5i64 {
            let m = AlgebraElement::monomial(2, int_vec(&[t]), 1).unwrap();
            let roundtrip = maps.project_elem(&maps.lift_elem(&m).unwrap()).unwrap();
            assert_eq!(roundtrip, m);
        }
        // i* lands inside the cone algebra
        for t in 0..5i64 {
            let m = AlgebraElement::monomial(2, int_vec(&[t]), 1).unwrap();
            let lifted = maps.lift_elem(&m).unwrap();
            for (exp, _) in lifted.terms() {
                assert!(c.contains_lattice(exp).unwrap());
                assert!(quot.contains_lattice(&section.project(exp)).unwrap());
            }
        }
    }

    #[test]
    fn summand_identity_pointed() {
        let c = Cone::from_int_generators(2, &[&[1, 0], &[1, 2]]).unwrap();
        let (_, section) = c.quotient_by_lineality().unwrap();
        let maps = quotient_summand_maps(&c, &section).unwrap();
        let m = AlgebraElement::monomial(3, int_vec(&[2, 1]), 2).unwrap();
        assert_eq!(maps.project_elem(&m).unwrap(), m);
        assert_eq!(maps.lift_elem(&m).unwrap(), m);
    }

    #[test]
    fn hyperplane_split_examples() {
        let c = Cone::from_int_generators(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let phi = hyperplane_projection_split(&c, &int_vec(&[0, 0, 1])).unwrap();
        let y = AlgebraElement::from_terms(
            2,
            vec![(int_vec(&[1, 2, 0]), 1), (int_vec(&[1, 2, 3]), 1)],
        )
        .unwrap();
        let img = phi.apply(&y).unwrap();
        assert_eq!(
            img,
            AlgebraElement::monomial(2, int_vec(&[1, 2, 0]), 1).unwrap()
        );
        // phi(1) = 1
        let one = AlgebraElement::one(2, 3).unwrap();
        assert_eq!(phi.apply(&one).unwrap(), one);
        // linearity sample: both sides vanish when the section exponent
        // leaves the hyperplane
        let u = AlgebraElement::monomial(2, int_vec(&[0, 1, 5]), 1).unwrap();
        let xbeta = AlgebraElement::monomial(2, int_vec(&[1, 0, 0]), 1).unwrap();
        let lhs = phi.apply(&xbeta.mul(&u).unwrap()).unwrap();
        let rhs = xbeta.mul(&phi.apply(&u).unwrap()).unwrap();
        assert!(lhs.is_zero());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn hyperplane_split_is_linear_over_section_algebra() {
        let c = Cone::from_int_generators(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let phi = hyperplane_projection_split(&c, &int_vec(&[0, 0, 1])).unwrap();
        // beta ranges over section monomials, u over cone monomials
        for bx in 0..3i64 {
            for by in 0..3i64 {
                let beta = AlgebraElement::monomial(5, int_vec(&[bx, by, 0]), 3).unwrap();
                for ux in 0..2i64 {
                    for uz in 0..2i64 {
                        let u = AlgebraElement::monomial(5, int_vec(&[ux, 1, uz]), 2).unwrap();
                        let lhs = phi.apply(&beta.mul(&u).unwrap()).unwrap();
                        let rhs = beta.mul(&phi.apply(&u).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
