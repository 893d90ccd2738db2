// Phase identities and numeric bounds on random inputs.

use homlab_core::gadget::{dirichlet, phase_decompose_col, phase_decompose_kab, surjection_bracket_applies, surjection_bracket_holds, xz_bound_check, GadgetParams};
use homlab_core::real::Interval;
use homlab_core::structure::classify_components;
use homlab_core::{Graph, TwoColouredGraph};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

fn bigraph(max: usize) -> impl Strategy<Value = TwoColouredGraph> {
    (1..=max, 1..=max).prop_flat_map(|(l, r)| {
        proptest::collection::vec(any::<bool>(), l * r)
            .prop_map(move |bits| TwoColouredGraph::new(l, r, (0..l * r).filter(|&k| bits[k]).map(|k| (k / r, k % r))).unwrap())
    })
}

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (2..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len())
            .prop_map(move |bits| Graph::new(n, pairs.iter().zip(&bits).filter(|x| *x.1).map(|x| *x.0)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kab_phases_match_closed_form(h in bigraph(3), a in 1usize..=2, b in 1usize..=2, cg in 0usize..=1, cj in 0usize..=1) {
        let gp = TwoColouredGraph::complete(1, 1);
        let gamma = TwoColouredGraph::complete(1, 1);
        let j = TwoColouredGraph::path(3);
        let r = phase_decompose_kab(&h, &gp, &gamma, &j, GadgetParams { a, b, copies_gamma: cg, copies_j: cj }).unwrap();
        prop_assert!(r.ok());
    }

    #[test]
    fn col_phases_match_closed_form(h in graph(4), a in 0usize..=2, b in 0usize..=2) {
        prop_assume!(h.edge_count() > 0);
        prop_assume!(!classify_components(&h).iter().any(|c| c.is_trivial()));
        let k11 = TwoColouredGraph::complete(1, 1);
        let r = phase_decompose_col(&h, &k11, &k11, a, b, 1).unwrap();
        prop_assert!(r.ok());
    }

    #[test]
    fn dirichlet_meets_bound(nums in proptest::collection::vec((1i64..10_000, 1i64..10_000), 1..=3), n in 1u64..=2_000) {
        let alphas: Vec<Interval> = nums.iter().map(|&(p, q)| Interval::from_rational(&BigRational::new(p.into(), q.into()), 200)).collect();
        let r = dirichlet(&alphas, n).unwrap();
        prop_assert!(r.q >= 1 && r.q <= n);
        let d = alphas.len() as i32;
        for (a, p) in alphas.iter().zip(&r.p_values) {
            let e = (a.mid() * BigRational::from_integer(BigInt::from(r.q)) - BigRational::from_integer(p.clone())).abs();
            prop_assert!(e.pow(d) * BigRational::from_integer(BigInt::from(n)) <= BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn xz_bound_holds(n in 1u64..=500, kf in 0u32..=1000, xf in 0u32..=1000, zf in -1000i64..=1000) {
        // K in [1, n], x in [1, K], |z| <= 1/n, all on a rational grid
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let nn = n as i64;
        let k = q(1, 1) + q(nn - 1, 1) * q(kf as i64, 1000);
        let x = q(1, 1) + (&k - q(1, 1)) * q(xf as i64, 1000);
        let z = q(zf, 1000 * nn);
        prop_assert_eq!(xz_bound_check(&x, &z, &k, n, 200).unwrap(), Some(true));
    }
}

#[test]
fn surjection_bracket_range() {
    for k in 1..=6u64 {
        for n in 1..=60u64 {
            if surjection_bracket_applies(n, k).unwrap() {
                assert!(surjection_bracket_holds(n, k), "n={n} k={k}");
            }
        }
    }
}
