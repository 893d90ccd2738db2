//! Rigorous interval arithmetic on dyadic endpoints.
//!
//! An [`Interval`] at precision `p` is `[lo, hi] * 2^-p` with integer `lo <= hi`. Every
//! operation rounds outward, so the true real result always lies inside.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    prec: u32,
}

fn floor_shr(x: &BigInt, k: u32) -> BigInt {
    x.div_floor(&(BigInt::one() << k))
}

fn ceil_shr(x: &BigInt, k: u32) -> BigInt {
    -((-x).div_floor(&(BigInt::one() << k)))
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

impl Interval {
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn point_int(k: &BigInt, prec: u32) -> Self {
        let v = k << prec;
        Interval { lo: v.clone(), hi: v, prec }
    }

    pub fn from_i64(k: i64, prec: u32) -> Self {
        Self::point_int(&BigInt::from(k), prec)
    }

    /// Smallest dyadic interval containing `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!den.is_zero());
        let (n, d) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
        let scaled = n << prec;
        Interval { lo: scaled.div_floor(&d), hi: ceil_div(&scaled, &d), prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        Self::from_ratio(q.numer(), q.denom(), prec)
    }

    /// Re-express at another precision, rounding outward when bits are dropped.
    pub fn with_prec(&self, prec: u32) -> Self {
        match prec.cmp(&self.prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let d = prec - self.prec;
                Interval { lo: &self.lo << d, hi: &self.hi << d, prec }
            }
            Ordering::Less => {
                let d = self.prec - prec;
                Interval { lo: floor_shr(&self.lo, d), hi: ceil_shr(&self.hi, d), prec }
            }
        }
    }

    pub fn lo(&self) -> BigRational {
        BigRational::new(self.lo.clone(), BigInt::one() << self.prec)
    }

    pub fn hi(&self) -> BigRational {
        BigRational::new(self.hi.clone(), BigInt::one() << self.prec)
    }

    pub fn mid(&self) -> BigRational {
        (self.lo() + self.hi()) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo() <= q && q <= &self.hi()
    }

    /// Sign when it is certain: `Some(Equal)` only for the exact point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified `self < other`, `self > other`, or `None` when the intervals overlap.
    pub fn cmp_certain(&self, other: &Self) -> Option<Ordering> {
        let d = self.sub(other);
        match d.sign() {
            Some(Ordering::Equal) => None,
            s => s,
        }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.prec, o.prec, "interval precisions differ");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        Interval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi, prec: self.prec }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Interval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo, prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo, prec: self.prec }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let ps = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mn = ps.iter().min().unwrap();
        let mx = ps.iter().max().unwrap();
        Interval { lo: floor_shr(mn, self.prec), hi: ceil_shr(mx, self.prec), prec: self.prec }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            Interval { lo: b, hi: a, prec: self.prec }
        } else {
            Interval { lo: a, hi: b, prec: self.prec }
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(k.is_positive());
        Interval { lo: self.lo.div_floor(k), hi: ceil_div(&self.hi, k), prec: self.prec }
    }

    /// Quotient; `None` if the divisor may be zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        self.check(o);
        if !(o.lo.is_positive() || o.hi.is_negative()) {
            return None;
        }
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for x in [&self.lo, &self.hi] {
            for y in [&o.lo, &o.hi] {
                let s = x << self.prec;
                let (f, c) = if y.is_negative() {
                    let (s2, y2) = (-&s, -y);
                    (s2.div_floor(&y2), ceil_div(&s2, &y2))
                } else {
                    (s.div_floor(y), ceil_div(&s, y))
                };
                lo = Some(match lo {
                    Some(l) if l <= f => l,
                    _ => f,
                });
                hi = Some(match hi {
                    Some(h) if h >= c => h,
                    _ => c,
                });
            }
        }
        Some(Interval { lo: lo.unwrap(), hi: hi.unwrap(), prec: self.prec })
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            self.neg()
        } else {
            let m = if -&self.lo > self.hi { -&self.lo } else { self.hi.clone() };
            Interval { lo: BigInt::zero(), hi: m, prec: self.prec }
        }
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut out = Interval::from_i64(1, self.prec);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Widen by `ulps` units of the last place on both sides.
    fn widen(&self, ulps: u32) -> Self {
        Interval { lo: &self.lo - ulps, hi: &self.hi + ulps, prec: self.prec }
    }

    /// Square root; `None` for intervals reaching below zero.
    pub fn sqrt(&self) -> Option<Self> {
        if self.lo.is_negative() {
            return None;
        }
        let lo = (&self.lo << self.prec).sqrt();
        let hv = &self.hi << self.prec;
        let mut hi = hv.sqrt();
        if &hi * &hi < hv {
            hi += 1;
        }
        Some(Interval { lo, hi, prec: self.prec })
    }

    pub fn exp(&self) -> Self {
        let a = exp_point(&self.lo, self.prec);
        let b = if self.lo == self.hi { a.clone() } else { exp_point(&self.hi, self.prec) };
        Interval { lo: a.lo, hi: b.hi, prec: self.prec }
    }

    /// Decimal rendering of the midpoint with `digits` places after the point.
    pub fn to_decimal(&self, digits: usize) -> String {
        decimal(&self.mid(), digits)
    }
}

/// `q` rounded toward zero to `digits` decimal places.
pub fn decimal(q: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let v = (q * BigRational::from_integer(scale)).to_integer();
    let neg = v.is_negative() || (v.is_zero() && q.is_negative());
    let s = v.abs().to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

fn exp_point(v: &BigInt, prec: u32) -> Interval {
    let bits = v.bits() as i64;
    let s = (bits - prec as i64 + 1).max(0) as u32;
    let r = Interval { lo: floor_shr(v, s), hi: ceil_shr(v, s), prec };
    // Taylor series for |r| <= 1/2, remainder at most 2 * 2^-(K+1) / (K+1)!
    let mut sum = Interval::from_i64(1, prec);
    let mut term = sum.clone();
    let mut k = 1u32;
    let mut bound = BigRational::one(); // 2 * (1/2)^k / k!
    let target = BigRational::new(BigInt::one(), BigInt::one() << prec);
    loop {
        term = term.mul(&r).div_int(&BigInt::from(k));
        sum = sum.add(&term);
        k += 1;
        bound /= BigRational::from_integer(BigInt::from(2 * k as i64));
        if bound < target {
            break;
        }
    }
    let mut y = sum.widen(1);
    for _ in 0..s {
        y = y.mul(&y);
    }
    y
}

/// `atanh(a / b)` for `0 <= a / b <= 1/3`.
fn atanh_small(a: &BigInt, b: &BigInt, prec: u32) -> Interval {
    debug_assert!(BigInt::from(3) * a <= *b);
    let t = Interval::from_ratio(a, b, prec);
    let t2 = t.mul(&t);
    let mut term = t;
    let mut sum = Interval::from_i64(0, prec);
    // (1/9)^terms <= 2^-(prec + 12); tail <= (9/8) t^(2J+1) / (2J+1), below one ulp
    let terms = prec / 3 + 6;
    for j in 0..terms {
        sum = sum.add(&term.div_int(&BigInt::from(2 * j + 1)));
        term = term.mul(&t2);
    }
    Interval { lo: sum.lo, hi: sum.hi + 1u32, prec }
}

/// Natural logarithm of a positive integer.
pub fn ln_int(m: &BigUint, prec: u32) -> Interval {
    assert!(!m.is_zero(), "logarithm of zero");
    if m.is_one() {
        return Interval::from_i64(0, prec);
    }
    let two = BigInt::from(2);
    let k = m.bits() - 1;
    let p = BigInt::one() << k;
    let mi = BigInt::from_biguint(Sign::Plus, m.clone());
    let ln2 = atanh_small(&BigInt::one(), &BigInt::from(3), prec).mul_int(&two);
    let frac = atanh_small(&(&mi - &p), &(&mi + &p), prec).mul_int(&two);
    ln2.mul_int(&BigInt::from(k)).add(&frac)
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(q: &BigRational, prec: u32) -> Interval {
    assert!(q.is_positive(), "logarithm of a non-positive number");
    let n = q.numer().to_biguint().unwrap();
    let d = q.denom().to_biguint().unwrap();
    ln_int(&n, prec).sub(&ln_int(&d, prec))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn negative_shifts_round_down() {
        assert_eq!(floor_shr(&BigInt::from(-3), 1), BigInt::from(-2));
        assert_eq!(ceil_shr(&BigInt::from(-3), 1), BigInt::from(-1));
        assert_eq!(ceil_shr(&BigInt::from(3), 1), BigInt::from(2));
    }

    #[test]
    fn ln2_digits() {
        let l = ln_int(&BigUint::from(2u32), 200);
        assert!(l.to_decimal(40).starts_with("0.693147180559945309417232121458176568075"));
        assert!(l.width() < q(1, 1 << 40));
    }

    #[test]
    fn ln_of_products_adds() {
        let a = ln_int(&BigUint::from(6u32), 128);
        let b = ln_int(&BigUint::from(2u32), 128).add(&ln_int(&BigUint::from(3u32), 128));
        assert!(a.sub(&b).contains(&q(0, 1)));
    }

    #[test]
    fn exp_inverts_ln() {
        for m in [1u32, 2, 3, 10, 1000] {
            let l = ln_int(&BigUint::from(m), 160);
            let e = l.exp();
            assert!(e.contains(&q(m as i64, 1)), "exp(ln {m})");
            assert!(e.width() < q(1, 1 << 60));
        }
        let e = Interval::from_i64(-5, 128).exp();
        assert!(e.to_decimal(20).starts_with("0.00673794699908546709"));
    }

    #[test]
    fn sqrt_two() {
        let s = Interval::from_i64(2, 128).sqrt().unwrap();
        assert!(s.to_decimal(30).starts_with("1.414213562373095048801688724209"));
        assert!(s.mul(&s).contains(&q(2, 1)));
    }

    #[test]
    fn division_brackets() {
        let a = Interval::from_rational(&q(1, 3), 64);
        let b = Interval::from_rational(&q(-2, 7), 64);
        let c = a.div(&b).unwrap();
        assert!(c.contains(&q(-7, 6)));
        assert!(a.div(&Interval::from_i64(0, 64)).is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal(&q(1, 2), 3), "0.500");
        assert_eq!(decimal(&q(-1, 8), 2), "-0.12");
        assert_eq!(decimal(&q(22, 7), 0), "3");
    }
}
