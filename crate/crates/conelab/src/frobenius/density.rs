//! Diophantine density demonstrator in rank 2: certified approximation of a
//! rational target by a point of `{m v + lambda : m >= 0 rational,
//! lambda in scale * Z^2}` when the ray direction v has irrational slope.
//!
//! The scaling m runs over j/N for a fixed denominator N derived from the
//! tolerance; with an integer scaling the x-coordinate of (1, sqrt(n))-type
//! directions only hits a discrete set and density fails, so the ray
//! statement (dense translates of the full ray) is the one realized here.

use super::witness::{sign_transcript, SignCheck};
use crate::error::{Error, Result};
use crate::num::{Int, QuadNum, Rat};
use crate::vecs::{IntVec, QVec, RatVec};
use num_traits::Signed;

/// A certified approximation `|m v + lambda - target| < epsilon` (sup-norm),
/// with per-coordinate exact sign transcripts.
#[derive(Clone, Debug)]
pub struct DenseApproximation {
    pub m: Rat,
    pub lambda: IntVec,
    pub checks: Vec<SignCheck>,
}

/// Deterministic scan: m = j/N for N fixed from epsilon, lambda the
/// componentwise nearest lattice multiple. Errors with `RationalDirection`
/// when the slope of v is rational (density genuinely fails) and
/// `NotFound` when the iteration budget is exhausted.
pub fn dense_approx(
    v: &QVec,
    scale: &Int,
    target: &RatVec,
    epsilon: &Rat,
    budget: u64,
) -> Result<DenseApproximation> {
    if v.len() != 2 || target.len() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: v.len().max(target.len()) });
    }
    if !epsilon.is_positive() {
        return Err(Error::Parse("epsilon must be positive".into()));
    }
    if !scale.is_positive() {
        return Err(Error::Parse("lattice scale must be positive".into()));
    }
    // rational-slope rejection: v on a rational line means the translates
    // stay in a discrete family of lines
    if v[0].is_zero() || v[1].is_zero() {
        return Err(Error::RationalDirection);
    }
    let slope = v[1].checked_div(&v[0])?;
    if slope.is_rational() {
        return Err(Error::RationalDirection);
    }
    let scale_q = QuadNum::rational(Rat::from_integer(scale.clone()));
    let eps_q = QuadNum::rational(epsilon.clone());
    // denominator of the scan grid; 8/epsilon keeps the x-sweep fine enough
    let n_den: Int = (Rat::from_integer(Int::from(8)) / epsilon).ceil().to_integer();
    let n_den = if n_den.is_positive() { n_den } else { Int::from(1) };
    for j in 0..=budget {
        let m = Rat::new(Int::from(j), n_den.clone());
        let mut lambda = IntVec::with_capacity(2);
        let mut diffs: Vec<QuadNum> = Vec::with_capacity(2);
        let mut ok = true;
        for i in 0..2 {
            let w = v[i].scale(&m);
            // nearest multiple of scale to target_i - w_i
            let resid = QuadNum::rational(target[i].clone()).checked_sub(&w)?;
            let k = resid.checked_div(&scale_q)?.round();
            let l = &k * scale;
            let lq = QuadNum::rational(Rat::from_integer(l.clone()));
            let diff = w.checked_add(&lq)?.checked_sub(&QuadNum::rational(target[i].clone()))?;
            // |diff| < epsilon, two exact sign tests
            let upper = eps_q.checked_sub(&diff)?;
            let lower = eps_q.checked_add(&diff)?;
            if upper.sign() <= 0 || lower.sign() <= 0 {
                ok = false;
                break;
            }
            lambda.push(l);
            diffs.push(diff);
        }
        if ok {
            let mut checks = Vec::new();
            for (i, diff) in diffs.iter().enumerate() {
                let upper = eps_q.checked_sub(diff)?;
                let lower = eps_q.checked_add(diff)?;
                let (su, cu) = sign_transcript(&upper);
                let (sl, cl) = sign_transcript(&lower);
                checks.push(SignCheck {
                    constraint: format!("coordinate {}: epsilon - |deviation|", i),
                    requirement: "> 0".into(),
                    value: format!("deviation = {}", diff),
                    sign: su.min(sl),
                    comparison: format!("eps - d: {}; eps + d: {}", cu, cl),
                    satisfied: su > 0 && sl > 0,
                });
            }
            return Ok(DenseApproximation { m, lambda, checks });
        }
    }
    Err(Error::NotFound(budget))
}
