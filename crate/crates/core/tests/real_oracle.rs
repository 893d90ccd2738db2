// Certified interval results checked against astro-float at 256 bits.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use homlab_core::real::{decimal, ln_int, Interval};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

const P: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

fn bf(q: &BigRational, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&decimal(q, 90), Radix::Dec, P, RM, cc)
}

/// `v` lies inside `iv`, up to the oracle's own rounding (about 1e-70, relative once `|v| > 1`).
fn encloses(iv: &Interval, v: &BigFloat, cc: &mut Consts) -> bool {
    let eps = BigFloat::parse("1e-70", Radix::Dec, P, RM, cc);
    let slack = eps.add(&v.abs().mul(&eps, P, RM), P, RM);
    let lo = bf(&iv.lo(), cc).sub(&slack, P, RM);
    let hi = bf(&iv.hi(), cc).add(&slack, P, RM);
    v.cmp(&lo).is_some_and(|c| c >= 0) && v.cmp(&hi).is_some_and(|c| c <= 0)
}

fn tight(iv: &Interval) -> bool {
    iv.width() < BigRational::new(BigInt::from(1), BigInt::from(1) << 150u32)
}

#[test]
fn ln_of_small_integers() {
    let mut cc = Consts::new().unwrap();
    for m in 1u32..=200 {
        let iv = ln_int(&BigUint::from(m), 200);
        let v = BigFloat::from_u32(m, P).ln(P, RM, &mut cc);
        assert!(tight(&iv), "ln {m} too wide");
        assert!(encloses(&iv, &v, &mut cc), "ln {m}");
    }
}

#[test]
fn ln_of_large_integer() {
    let mut cc = Consts::new().unwrap();
    let m = BigUint::from(3u32).pow(200);
    let iv = ln_int(&m, 200);
    let v = BigFloat::from_u32(3, P).ln(P, RM, &mut cc).mul(&BigFloat::from_u32(200, P), P, RM);
    assert!(encloses(&iv, &v, &mut cc));
}

#[test]
fn sqrt_of_small_integers() {
    let mut cc = Consts::new().unwrap();
    for m in [2i64, 3, 5, 29, 1000] {
        let iv = Interval::from_i64(m, 200).sqrt().unwrap();
        let v = BigFloat::from_i64(m, P).sqrt(P, RM);
        assert!(encloses(&iv, &v, &mut cc), "sqrt {m}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_matches(num in -20_000i64..20_000, den in 200i64..500) {
        let mut cc = Consts::new().unwrap();
        let q = BigRational::new(num.into(), den.into());
        let iv = Interval::from_rational(&q, 200).exp();
        let v = bf(&q, &mut cc).exp(P, RM, &mut cc);
        // intervals carry absolute precision, so the check is absolute too
        prop_assert!(encloses(&iv, &v, &mut cc));
    }

    #[test]
    fn power_via_logs_matches(x in 1u32..50, zn in -100i64..100) {
        // x^(zn/1000), the shape used by the x^z bound check
        let mut cc = Consts::new().unwrap();
        let z = BigRational::new(zn.into(), 1000.into());
        let iv = ln_int(&BigUint::from(x), 200).mul(&Interval::from_rational(&z, 200)).exp();
        let v = BigFloat::from_u32(x, P).pow(&bf(&z, &mut cc), P, RM, &mut cc);
        prop_assert!(encloses(&iv, &v, &mut cc));
    }
}
