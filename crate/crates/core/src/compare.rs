//! Exact comparison of real numbers built from logarithms of rationals.
//!
//! A [`LogPoly`] is a polynomial with rational coefficients in the symbols `ln a`, where each
//! atom `a` is a prime or an integer cofactor left unfactored by trial division. Equality is
//! decided symbolically when all coefficients cancel. Otherwise the difference is evaluated
//! with interval arithmetic at growing precision until its sign is certain.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::real::{self, Interval};

const TRIAL_LIMIT: u64 = 1 << 20;

/// Factor by trial division; a remaining cofactor above the trial limit is kept whole.
pub fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut m = n.clone();
    if m.is_zero() {
        return out;
    }
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            out.push((pb, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        match out.iter_mut().find(|(q, _)| *q == m) {
            Some(f) => f.1 += 1,
            None => out.push((m, 1)),
        }
    }
    out.sort();
    out
}

type Monomial = Vec<BigUint>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LogPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LogPoly {
    pub fn zero() -> Self {
        LogPoly::default()
    }

    pub fn constant(q: BigRational) -> Self {
        let mut p = LogPoly::zero();
        p.push(Vec::new(), q);
        p
    }

    /// `ln(q)` for a positive rational `q`.
    pub fn ln(q: &BigRational) -> Self {
        assert!(q.is_positive(), "logarithm of a non-positive number");
        let mut p = LogPoly::zero();
        for (a, e) in factor(&q.numer().to_biguint().unwrap()) {
            p.push(vec![a], BigRational::from_integer(BigInt::from(e)));
        }
        for (a, e) in factor(&q.denom().to_biguint().unwrap()) {
            p.push(vec![a], -BigRational::from_integer(BigInt::from(e)));
        }
        p
    }

    pub fn ln_int(n: &BigUint) -> Self {
        Self::ln(&BigRational::from_integer(BigInt::from(n.clone())))
    }

    /// `ln(n / d)` for positive integers.
    pub fn ln_ratio(n: &BigUint, d: &BigUint) -> Self {
        Self::ln(&BigRational::new(BigInt::from(n.clone()), BigInt::from(d.clone())))
    }

    pub fn ln_u64(n: u64) -> Self {
        Self::ln_int(&BigUint::from(n))
    }

    fn push(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.push(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = LogPoly::zero();
        for (m, c) in &self.terms {
            out.push(m.clone(), c * q);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = LogPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let mut m: Monomial = m1.iter().chain(m2.iter()).cloned().collect();
                m.sort();
                out.push(m, c1 * c2);
            }
        }
        out
    }

    /// `Some(c)` with `self = c * other` when both are linear and proportional.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        if other.is_zero() || self.degree() > 1 || other.degree() > 1 {
            return None;
        }
        let (m, c) = other.terms.iter().next()?;
        let k = self.terms.get(m).cloned().unwrap_or_else(BigRational::zero) / c;
        if other.scale(&k) == *self {
            Some(k)
        } else {
            None
        }
    }

    /// Enclosure of the value at the given precision.
    pub fn eval(&self, prec: u32) -> Interval {
        let mut cache: HashMap<BigUint, Interval> = HashMap::new();
        let mut sum = Interval::from_i64(0, prec);
        for (m, c) in &self.terms {
            let mut t = Interval::from_rational(c, prec);
            for a in m {
                let l = cache.entry(a.clone()).or_insert_with(|| real::ln_int(a, prec)).clone();
                t = t.mul(&l);
            }
            sum = sum.add(&t);
        }
        sum
    }

    /// Best-effort `f64` value, for display only.
    pub fn approx(&self) -> f64 {
        self.eval(80).mid().to_f64().unwrap_or(f64::NAN)
    }
}

/// Sign decisions with symbolic cancellation first and escalating interval precision after.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparator {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for Comparator {
    fn default() -> Self {
        Comparator { start_bits: 128, max_bits: 1024 }
    }
}

impl Comparator {
    pub fn with_start(bits: u32) -> Self {
        Comparator { start_bits: bits.max(16), max_bits: 1024.max(bits) }
    }

    pub fn sign(&self, p: &LogPoly) -> Result<Ordering> {
        if p.is_zero() {
            return Ok(Ordering::Equal);
        }
        let mut bits = self.start_bits;
        loop {
            match p.eval(bits).sign() {
                Some(Ordering::Equal) | None => {}
                Some(s) => return Ok(s),
            }
            if bits >= self.max_bits {
                return Err(Error::Uncertain(bits));
            }
            bits = (bits * 2).min(self.max_bits);
        }
    }

    pub fn compare(&self, a: &LogPoly, b: &LogPoly) -> Result<Ordering> {
        self.sign(&a.sub(b))
    }

    /// Indices of the maxima of `vals`, in input order.
    pub fn argmax(&self, vals: &[LogPoly]) -> Result<Vec<usize>> {
        if vals.is_empty() {
            return Ok(Vec::new());
        }
        let mut best = 0;
        for k in 1..vals.len() {
            if self.compare(&vals[k], &vals[best])? == Ordering::Greater {
                best = k;
            }
        }
        let mut out = Vec::new();
        for k in 0..vals.len() {
            if k == best || self.compare(&vals[k], &vals[best])? == Ordering::Equal {
                out.push(k);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn factoring() {
        let f = factor(&BigUint::from(360u32));
        assert_eq!(f, vec![(BigUint::from(2u32), 3), (BigUint::from(3u32), 2), (BigUint::from(5u32), 1)]);
        assert!(factor(&BigUint::one()).is_empty());
        let big = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        assert_eq!(factor(&big).len(), 2);
    }

    #[test]
    fn symbolic_cancellation() {
        let c = Comparator::default();
        // ln 16 + ln 3 / 2 - ln 27 is positive; 2 ln 3 = ln 9 exactly
        let lhs = LogPoly::ln_u64(16).add(&LogPoly::ln_u64(3).scale(&q(1, 2)));
        assert_eq!(c.compare(&lhs, &LogPoly::ln_u64(27)).unwrap(), Ordering::Greater);
        let a = LogPoly::ln_u64(3).scale(&q(2, 1));
        assert!(a.sub(&LogPoly::ln_u64(9)).is_zero());
        // products of logarithms cancel by monomial
        let p = LogPoly::ln_u64(6).mul(&LogPoly::ln_u64(4));
        let r = LogPoly::ln_u64(2).add(&LogPoly::ln_u64(3)).mul(&LogPoly::ln_u64(2).scale(&q(2, 1)));
        assert_eq!(c.compare(&p, &r).unwrap(), Ordering::Equal);
    }

    #[test]
    fn close_values_escalate() {
        // 84 ln 2 = 58.2244..., 53 ln 3 = 58.2264...
        let c = Comparator { start_bits: 16, max_bits: 1024 };
        let a = LogPoly::ln_u64(2).scale(&q(84, 1));
        let b = LogPoly::ln_u64(3).scale(&q(53, 1));
        assert_eq!(c.compare(&a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn ratio_detection() {
        let a = LogPoly::ln_u64(3);
        let b = LogPoly::ln_u64(9);
        assert_eq!(a.ratio_to(&b), Some(q(1, 2)));
        assert_eq!(LogPoly::ln_u64(2).ratio_to(&b), None);
    }

    #[test]
    fn argmax_ties() {
        let c = Comparator::default();
        let vals = vec![LogPoly::ln_u64(9), LogPoly::ln_u64(3).scale(&q(2, 1)), LogPoly::ln_u64(8)];
        assert_eq!(c.argmax(&vals).unwrap(), vec![0, 1]);
    }

    #[test]
    fn uncertain_is_reported() {
        let c = Comparator { start_bits: 16, max_bits: 16 };
        // 1 + 1e-30 against 1: not decidable in 16 bits
        let tiny = LogPoly::ln(&(q(1, 1) + BigRational::new(BigInt::one(), BigInt::from(10).pow(30))));
        assert_eq!(c.sign(&tiny), Err(Error::Uncertain(16)));
        assert_eq!(Comparator::default().sign(&tiny).unwrap(), Ordering::Greater);
    }
}
