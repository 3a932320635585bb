//! Exact computations with convex cones, lattices and affine monoids over
//! the integers and real quadratic fields, plus the Frobenius-splitting
//! machinery for the monomial algebras they define in characteristic p.
//!
//! Everything is exact: unbounded integers, big rationals and
//! `a + b*sqrt(n)` field elements; no floating point touches any verdict.

pub mod cone;
pub mod error;
pub mod frobenius;
pub mod grval;
pub mod json;
pub mod lattice;
pub mod mat;
pub mod monoid;
pub mod num;
pub mod report;
pub mod vecs;

pub use cone::{Cone, HalfSpace, Polytope, Ray};
pub use error::{Error, Result};
pub use lattice::{saturate_subgroup, split_quotient, sublattice_intersection, LatticeSection};
pub use mat::IntMatrix;
pub use num::{Int, QuadNum, Rat};

#[cfg(test)]
mod concurrency_assertions {
    // every engine value is immutable after construction and moves freely
    // between threads
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn values_are_send_sync() {
        assert_send_sync::<crate::Cone>();
        assert_send_sync::<crate::QuadNum>();
        assert_send_sync::<crate::IntMatrix>();
        assert_send_sync::<crate::LatticeSection>();
        assert_send_sync::<crate::monoid::AffineMonoid>();
        assert_send_sync::<crate::monoid::HilbertBasis>();
        assert_send_sync::<crate::frobenius::AlgebraElement>();
        assert_send_sync::<crate::frobenius::SplitDescriptor>();
        assert_send_sync::<crate::frobenius::WitnessReport>();
        assert_send_sync::<crate::frobenius::Verdict>();
        assert_send_sync::<crate::grval::MonomialValuation>();
    }
}
