//! Graded rings of monomial valuations on monoid algebras.
//!
//! A monomial valuation on `k[S]` (localized at its monomial maximal ideal) is
//! determined by an injective linear map of exponent lattices into a value
//! group Z^r, totally ordered by an irrational positive weight vector. The
//! value monoid `Phi_R` is the image of S; the associated graded ring is the
//! monoid algebra `k[Phi_R]` with one-dimensional graded pieces, so finite
//! generation questions reduce to the cone machinery.

use crate::error::{Error, Result};
use crate::frobenius::{is_split_f_regular, Verdict};
use crate::mat::IntMatrix;
use crate::monoid::AffineMonoid;
use crate::num::Int;
use crate::vecs::{IntVec, QVec};
use num_integer::Integer;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct MonomialValuation {
    source: AffineMonoid,
    value_map: IntMatrix,
    order_weight: QVec,
}

/// The value monoid Phi_R = nu(R - {0}) as an affine monoid of the value
/// lattice.
#[derive(Clone, Debug)]
pub struct ValueMonoid {
    pub monoid: AffineMonoid,
}

#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub value_monoid: AffineMonoid,
    /// number of monoid generators in the presentation
    pub generator_count: usize,
}

impl GradedPresentation {
    /// Human-readable statement of the identification.
    pub fn statement(&self) -> String {
        format!(
            "gr_nu(R) = k[Phi_R]; Phi_R generated by {} element(s); every graded piece has k-dimension 1",
            self.generator_count
        )
    }
}

#[derive(Clone, Debug)]
pub enum GrVerdict {
    /// The graded ring is split-F-regular territory: finitely generated with
    /// the stated generator table.
    FinitelyGenerated {
        generators: Vec<IntVec>,
        verdict: Verdict,
    },
    /// Phi_R is not normal in its group, so `k[Phi_R]` is not split-F-regular
    /// and the finite-generation theorem does not apply.
    NotNormal { witness: IntVec },
}

impl MonomialValuation {
    pub fn new(source: AffineMonoid, value_map: IntMatrix, order_weight: QVec) -> Result<Self> {
        if value_map.cols != source.rank() {
            return Err(Error::DimensionMismatch {
                expected: source.rank(),
                got: value_map.cols,
            });
        }
        if order_weight.len() != value_map.rows {
            return Err(Error::DimensionMismatch {
                expected: value_map.rows,
                got: order_weight.len(),
            });
        }
        // injectivity on ZS: the composite map must keep full rank
        let composite = value_map.mul(source.group_basis());
        if composite.rank() != source.group_basis().cols {
            return Err(Error::NonInjective);
        }
        // strictly positive, Q-linearly independent weights
        for w in &order_weight {
            if w.sign() <= 0 {
                return Err(Error::NonPositiveWeight);
            }
        }
        if !weights_independent(&order_weight) {
            return Err(Error::DependentWeights);
        }
        Ok(MonomialValuation { source, value_map, order_weight })
    }

    pub fn source(&self) -> &AffineMonoid {
        &self.source
    }

    pub fn value_map(&self) -> &IntMatrix {
        &self.value_map
    }

    pub fn order_weight(&self) -> &QVec {
        &self.order_weight
    }

    /// Phi_R: the image of the exponent monoid, deduplicated and sorted.
    pub fn value_monoid(&self) -> Result<ValueMonoid> {
        let images: Vec<IntVec> = self
            .source
            .generators()
            .iter()
            .map(|g| self.value_map.mul_vec(g))
            .collect();
        Ok(ValueMonoid { monoid: AffineMonoid::new(self.value_map.rows, images)? })
    }

    /// The presentation `gr_nu(R) = k[Phi_R]`.
    pub fn graded_ring_presentation(&self) -> Result<GradedPresentation> {
        let vm = self.value_monoid()?;
        let generator_count = vm.monoid.generators().len();
        Ok(GradedPresentation { value_monoid: vm.monoid, generator_count })
    }

    /// Finite generation of the graded ring under the split-F-regularity
    /// hypothesis: if Phi_R is normal, `k[Phi_R]` is the algebra of a closed
    /// rational polyhedral cone and the verdict machinery certifies it; if it
    /// is not normal, split-F-regularity already fails and the theorem's
    /// hypothesis is void.
    pub fn gr_finitely_generated_if_split_f_regular(&self, p: u64) -> Result<GrVerdict> {
        let vm = self.value_monoid()?;
        let (normal, witness) = vm.monoid.is_normal()?;
        if !normal {
            return Ok(GrVerdict::NotNormal { witness: witness.expect("non-normal has witness") });
        }
        // reduction to the group of the monoid: run the verdict on the cone
        // expressed in ZPhi coordinates
        let (_coords, cone) = vm.monoid.coordinate_view()?;
        let verdict = is_split_f_regular(&cone, p, 8, 16)?;
        let generators = vm.monoid.saturation_generators()?.to_vec();
        Ok(GrVerdict::FinitelyGenerated { generators, verdict })
    }
}

/// Q-linear independence of quadratic numbers: each is a + b sqrt(n), so the
/// 2 x r rational coefficient matrix must have rank r.
fn weights_independent(weights: &QVec) -> bool {
    let r = weights.len();
    if r == 0 {
        return true;
    }
    // clear a common denominator: rank is invariant under global scaling
    let mut denom = Int::one();
    for w in weights {
        denom = denom.lcm(w.a.denom());
        denom = denom.lcm(w.b.denom());
    }
    let rows: Vec<IntVec> = vec![
        weights.iter().map(|w| w.a.numer() * (&denom / w.a.denom())).collect(),
        weights.iter().map(|w| w.b.numer() * (&denom / w.b.denom())).collect(),
    ];
    IntMatrix::from_rows(rows).rank() == r
}
