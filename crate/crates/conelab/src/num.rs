//! Exact scalar arithmetic: big rationals and real quadratic numbers a + b*sqrt(n).
//!
//! Every sign decision in the crate funnels through [`QuadNum::sign`], which
//! compares `a^2` against `n*b^2` instead of evaluating square roots. `n` is a
//! squarefree integer >= 2, so `sqrt(n)` is irrational and `a + b*sqrt(n) = 0`
//! forces `a = b = 0`; the comparison is therefore never ambiguous.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Rat = BigRational;
pub type Int = BigInt;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(v: &Int) -> Int {
    assert!(!v.is_negative(), "isqrt of negative value");
    v.sqrt()
}

/// True iff `n` is squarefree. Trial division; fine for the radicands in play.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return false;
            }
        }
        d += 1;
    }
    true
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| -> u64 { ((a as u128 * b as u128) % n as u128) as u64 };
    let pow = |mut b: u64, mut e: u64| -> u64 {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// An element a + b*sqrt(n) of the real quadratic field Q(sqrt(n)).
///
/// `b = 0` encodes a plain rational; such values combine freely with any
/// radicand. Two values with `b != 0` must share their radicand.
#[derive(Clone)]
pub struct QuadNum {
    pub a: Rat,
    pub b: Rat,
    pub n: u64,
}

impl PartialEq for QuadNum {
    fn eq(&self, other: &Self) -> bool {
        // the radicand is irrelevant for rational values
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.n == other.n)
    }
}

impl Eq for QuadNum {}

impl std::hash::Hash for QuadNum {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.n.hash(state);
        }
    }
}

impl QuadNum {
    pub fn new(a: Rat, b: Rat, n: u64) -> Result<Self> {
        if !b.is_zero() && (n < 2 || !is_squarefree(n)) {
            return Err(Error::BadRadicand(n));
        }
        Ok(QuadNum { a, b, n })
    }

    pub fn rational(a: Rat) -> Self {
        QuadNum { a, b: Rat::zero(), n: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(rat(v))
    }

    pub fn sqrt_of(n: u64) -> Result<Self> {
        Self::new(Rat::zero(), Rat::one(), n)
    }

    pub fn zero() -> Self {
        Self::rational(Rat::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Effective radicand: `None` for rational values.
    pub fn radicand(&self) -> Option<u64> {
        if self.b.is_zero() {
            None
        } else {
            Some(self.n)
        }
    }

    fn join_radicand(&self, rhs: &QuadNum) -> Result<u64> {
        match (self.radicand(), rhs.radicand()) {
            (Some(m), Some(n)) if m != n => Err(Error::MixedRadicand(m, n)),
            (Some(m), _) => Ok(m),
            (_, Some(n)) => Ok(n),
            (None, None) => Ok(self.n.max(rhs.n)),
        }
    }

    pub fn checked_add(&self, rhs: &QuadNum) -> Result<QuadNum> {
        let n = self.join_radicand(rhs)?;
        Ok(QuadNum { a: &self.a + &rhs.a, b: &self.b + &rhs.b, n })
    }

    pub fn checked_sub(&self, rhs: &QuadNum) -> Result<QuadNum> {
        let n = self.join_radicand(rhs)?;
        Ok(QuadNum { a: &self.a - &rhs.a, b: &self.b - &rhs.b, n })
    }

    pub fn checked_mul(&self, rhs: &QuadNum) -> Result<QuadNum> {
        let n = self.join_radicand(rhs)?;
        let nn = Rat::from_integer(Int::from(n));
        // (a + b s)(c + d s) = ac + bd n + (ad + bc) s
        Ok(QuadNum {
            a: &self.a * &rhs.a + &self.b * &rhs.b * &nn,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
            n,
        })
    }

    /// Galois conjugate a - b*sqrt(n).
    pub fn conj(&self) -> QuadNum {
        QuadNum { a: self.a.clone(), b: -self.b.clone(), n: self.n }
    }

    /// Field norm a^2 - n b^2 (a rational number).
    pub fn norm(&self) -> Rat {
        &self.a * &self.a - Rat::from_integer(Int::from(self.n)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<QuadNum> {
        if self.is_zero() {
            return Err(Error::Parse("division by zero".into()));
        }
        if self.b.is_zero() {
            return Ok(QuadNum::rational(self.a.recip()));
        }
        let nrm = self.norm();
        // norm != 0 since sqrt(n) is irrational
        let c = self.conj();
        Ok(QuadNum { a: &c.a / &nrm, b: &c.b / &nrm, n: self.n })
    }

    pub fn checked_div(&self, rhs: &QuadNum) -> Result<QuadNum> {
        self.checked_mul(&rhs.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> QuadNum {
        QuadNum { a: &self.a * r, b: &self.b * r, n: self.n }
    }

    /// Exact sign of a + b*sqrt(n): -1, 0 or +1.
    ///
    /// Splits on the signs of a and b; in the mixed case the comparison
    /// a + b*sqrt(n) >< 0 reduces to a^2 >< n*b^2 on the appropriate side.
    pub fn sign(&self) -> i8 {
        let sa = rat_sign(&self.a);
        if self.b.is_zero() {
            return sa;
        }
        let sb = rat_sign(&self.b);
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // opposite signs: |a| vs |b|*sqrt(n), i.e. a^2 vs n b^2
        let a2 = &self.a * &self.a;
        let nb2 = Rat::from_integer(Int::from(self.n)) * &self.b * &self.b;
        match a2.cmp(&nb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            // impossible for squarefree n >= 2 unless a = b = 0
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn cmp_exact(&self, rhs: &QuadNum) -> Result<Ordering> {
        let d = self.checked_sub(rhs)?;
        Ok(match d.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }

    /// Largest integer <= self, computed exactly.
    pub fn floor(&self) -> Int {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        // First approximate floor(b*sqrt(n)) from below, then fix up with
        // exact sign tests. b*sqrt(n) = sign(b) * sqrt(n*p^2)/q for b = p/q.
        let p = self.b.numer().abs();
        let q = self.b.denom().clone();
        let inner = Int::from(self.n) * &p * &p;
        let root = isqrt(&inner); // floor(sqrt(n) * |p|)
        let bs_estimate = if self.b.is_negative() {
            // -sqrt(inner)/q: floor = -ceil(root'/q) where root' in [root, root+1)
            -((&root + Int::one()).div_ceil(&q))
        } else {
            root.div_floor(&q)
        };
        let mut z = self.a.floor().to_integer() + bs_estimate;
        // z is within a couple units of the true floor; adjust exactly.
        loop {
            let zq = QuadNum::rational(Rat::from_integer(z.clone()));
            let d = self.checked_sub(&zq).expect("same field");
            if d.sign() < 0 {
                z -= 1;
                continue;
            }
            let z1 = QuadNum::rational(Rat::from_integer(&z + Int::one()));
            let d1 = self.checked_sub(&z1).expect("same field");
            if d1.sign() >= 0 {
                z += 1;
                continue;
            }
            return z;
        }
    }

    /// Nearest integer (ties toward +infinity), exact.
    pub fn round(&self) -> Int {
        let half = QuadNum::rational(rat_frac(1, 2));
        self.checked_add(&half).expect("same field").floor()
    }

    /// Crude double approximation; never used for decisions, only for display
    /// and search seeding.
    pub fn to_f64(&self) -> f64 {
        let fa = rat_to_f64(&self.a);
        let fb = rat_to_f64(&self.b);
        fa + fb * (self.n as f64).sqrt()
    }
}

pub fn rat_sign(r: &Rat) -> i8 {
    match r.numer().sign() {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::NoSign => 0,
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

impl fmt::Debug for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*sqrt({})", self.b, self.n);
        }
        if self.b.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.a, -self.b.clone(), self.n)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.n)
        }
    }
}

// Panicking operator sugar for contexts where radicands are already known to
// agree (parse-time rejection guarantees this inside the engines).
impl Add for &QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        self.checked_add(rhs).expect("mixed radicands")
    }
}

impl Sub for &QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        self.checked_sub(rhs).expect("mixed radicands")
    }
}

impl Mul for &QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        self.checked_mul(rhs).expect("mixed radicands")
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { a: -self.a.clone(), b: -self.b.clone(), n: self.n }
    }
}

/// Continued-fraction expansion of the quadratic irrational (p + sqrt(d))/q.
///
/// Standard integer recurrence: a_i = floor((P_i + sqrt(D))/Q_i),
/// P_{i+1} = a_i Q_i - P_i, Q_{i+1} = (D - P_{i+1}^2)/Q_i, with D scaled once
/// so that Q_0 divides D - P_0^2.
pub struct QuadCf {
    p: Int,
    q: Int,
    d: Int,
    h_prev: Int,
    h: Int,
    k_prev: Int,
    k: Int,
}

impl QuadCf {
    /// Expansion of the value a + b*sqrt(n) with b != 0.
    pub fn new(x: &QuadNum) -> Result<Self> {
        if x.b.is_zero() {
            return Err(Error::RationalDirection);
        }
        // a + b sqrt(n) = (u + v sqrt(n)) / w with integers u, v, w > 0
        let da = x.a.denom().clone();
        let db = x.b.denom().clone();
        let w0: Int = da.lcm(&db);
        let u = x.a.numer() * (&w0 / x.a.denom());
        let v = x.b.numer() * (&w0 / x.b.denom());
        // (u + v sqrt(n))/w = (u + sign(v) sqrt(v^2 n)) / w
        let mut p = u;
        let mut q = w0;
        let mut d = &v * &v * Int::from(x.n);
        if v.is_negative() {
            // u - sqrt(d) over w: fold the sign into the canonical form
            // (u - sqrt(d))/w = (-u + sqrt(d))/(-w)
            p = -p;
            q = -q;
        }
        // ensure q | d - p^2
        let rem = (&d - &p * &p) % &q;
        if !rem.is_zero() {
            d = &d * &q * &q;
            p = &p * &q.clone().abs();
            q = &q * &q.clone().abs();
        }
        Ok(QuadCf {
            p,
            q,
            d,
            h_prev: Int::zero(),
            h: Int::one(),
            k_prev: Int::one(),
            k: Int::zero(),
        })
    }

    fn floor_term(&self) -> Int {
        // floor((p + sqrt(d))/q), exact via isqrt plus fixup
        let root = isqrt(&self.d);
        let mut a = if self.q.is_positive() {
            (&self.p + &root).div_floor(&self.q)
        } else {
            (&self.p + &root + Int::one()).div_floor(&self.q)
        };
        // verify: a <= (p + sqrt d)/q < a + 1  <=>  sign tests on q*a - p vs sqrt(d)
        let check = |a: &Int, p: &Int, q: &Int, d: &Int| -> Ordering {
            // compare (p + sqrt(d)) with q*a  (careful with q sign handled by caller)
            let t = q * a - p; // need sqrt(d) >= t for a to be a lower bound (q>0)
            if t.is_negative() {
                Ordering::Greater
            } else {
                d.cmp(&(&t * &t))
            }
        };
        if self.q.is_positive() {
            while check(&a, &self.p, &self.q, &self.d) == Ordering::Less {
                a -= 1;
            }
            while check(&(&a + Int::one()), &self.p, &self.q, &self.d) != Ordering::Less {
                a += 1;
            }
        } else {
            // (p + sqrt d)/q with q < 0: x >= a  <=>  p + sqrt d <= q a
            let checkn = |a: &Int| -> bool {
                let t = &self.q * a - &self.p; // need sqrt(d) <= t
                !t.is_negative() && self.d <= &t * &t
            };
            while !checkn(&a) {
                a -= 1;
            }
            while checkn(&(&a + Int::one())) {
                a += 1;
            }
        }
        a
    }

    /// Next convergent (h, k) with h/k approximating the value.
    pub fn next_convergent(&mut self) -> (Int, Int) {
        let a = self.floor_term();
        let h_new = &a * &self.h + &self.h_prev;
        let k_new = &a * &self.k + &self.k_prev;
        self.h_prev = std::mem::replace(&mut self.h, h_new);
        self.k_prev = std::mem::replace(&mut self.k, k_new);
        // advance the quadratic state
        let p_new = &a * &self.q - &self.p;
        let q_new = (&self.d - &p_new * &p_new) / &self.q;
        self.p = p_new;
        self.q = q_new;
        (self.h.clone(), self.k.clone())
    }
}
