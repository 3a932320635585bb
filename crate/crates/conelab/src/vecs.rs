//! Small helpers on integer, rational and quadratic coordinate vectors.

use crate::error::{Error, Result};
use crate::num::{Int, QuadNum, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntVec = Vec<Int>;
pub type RatVec = Vec<Rat>;
pub type QVec = Vec<QuadNum>;

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn rat_dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dot product of a quadratic normal with a quadratic point.
pub fn q_dot(a: &[QuadNum], b: &[QuadNum]) -> Result<QuadNum> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let mut acc = QuadNum::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.checked_mul(y)?)?;
    }
    Ok(acc)
}

pub fn q_dot_int(a: &[QuadNum], b: &[Int]) -> Result<QuadNum> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), got: b.len() });
    }
    let mut acc = QuadNum::zero();
    for (x, y) in a.iter().zip(b) {
        acc = acc.checked_add(&x.scale(&Rat::from_integer(y.clone())))?;
    }
    Ok(acc)
}

pub fn add(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Int], b: &[Int]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn neg(a: &[Int]) -> IntVec {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn scale(a: &[Int], k: &Int) -> IntVec {
    a.iter().map(|x| x * k).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn inf_norm(a: &[Int]) -> Int {
    a.iter().map(|x| x.abs()).max().unwrap_or_else(Int::zero)
}

/// Divide by the gcd of the entries, keeping orientation. Zero stays zero.
pub fn primitive(a: &[Int]) -> IntVec {
    let mut g = Int::zero();
    for x in a {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

/// Clear denominators of a rational vector to a primitive integer vector,
/// keeping orientation.
pub fn rat_to_primitive_int(v: &[Rat]) -> IntVec {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: IntVec = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    primitive(&ints)
}

pub fn int_to_rat(v: &[Int]) -> RatVec {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn int_to_q(v: &[Int]) -> QVec {
    v.iter().map(|x| QuadNum::rational(Rat::from_integer(x.clone()))).collect()
}

pub fn rat_to_q(v: &[Rat]) -> QVec {
    v.iter().map(|x| QuadNum::rational(x.clone())).collect()
}

/// Integer content of a quadratic vector, if every entry is rational.
pub fn q_to_rat(v: &[QuadNum]) -> Option<RatVec> {
    v.iter().map(|x| x.as_rational().cloned()).collect()
}

/// Primitive integer form of a rational quadratic vector.
pub fn q_to_primitive_int(v: &[QuadNum]) -> Option<IntVec> {
    q_to_rat(v).map(|r| rat_to_primitive_int(&r))
}

/// Normalize a quadratic vector: if all entries are rational, reduce to a
/// primitive integer vector (returned as Left); otherwise scale so the leading
/// nonzero entry has absolute value 1 (positive scaling only).
pub fn q_normalize(v: &[QuadNum]) -> Result<QVec> {
    if let Some(iv) = q_to_primitive_int(v) {
        return Ok(int_to_q(&iv));
    }
    let lead = v.iter().find(|x| !x.is_zero()).expect("nonzero vector");
    let scale = if lead.sign() > 0 { lead.inv()? } else { (-lead).inv()? };
    v.iter().map(|x| x.checked_mul(&scale)).collect()
}

/// Strict total order used for deterministic output everywhere.
pub fn lex_cmp(a: &[Int], b: &[Int]) -> std::cmp::Ordering {
    a.cmp(b)
}

pub fn sort_vecs(vs: &mut [IntVec]) {
    vs.sort_by(|a, b| lex_cmp(a, b));
}

pub fn fmt_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn fmt_qvec(v: &[QuadNum]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}
