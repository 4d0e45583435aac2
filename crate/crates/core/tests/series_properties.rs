//! Randomized and golden properties of the series engine and the operator
//! layer built on it.

use std::sync::Arc;

use proptest::prelude::*;

use apbern::exactq::{GaussRational, MultiPoly, VarSet};
use apbern::families::{Trig, UFactory};
use apbern::fps::{apostol_kernel, exp_poly_t, KernelSpec, TruncSeries};
use apbern::opcalc::{build_trig_operator, DOperatorSeries, TrigOperatorKind};

fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::from_ratio(n, d)
}

fn vars() -> Arc<VarSet> {
    VarSet::new(["x", "y", "z"]).unwrap()
}

fn arb_rational() -> impl Strategy<Value = GaussRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| GaussRational::from_ratio(n, d))
}

fn arb_small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), arb_rational()), 0..=3).prop_map(
        |terms| {
            MultiPoly::from_terms(
                &vars(),
                terms
                    .into_iter()
                    .map(|((a, b, c), v)| (vec![a, b, c], v)),
            )
        },
    )
}

/// Order-6 series with a nonzero scalar constant coefficient.
fn arb_unit_series() -> impl Strategy<Value = TruncSeries> {
    (
        arb_rational().prop_filter("unit", |v| !num_traits::Zero::is_zero(v)),
        prop::collection::vec(arb_small_poly(), 6),
    )
        .prop_map(|(a0, tail)| {
            let vs = vars();
            let mut coeffs = vec![MultiPoly::constant(&vs, a0)];
            coeffs.extend(tail);
            TruncSeries::from_coeffs(&vs, coeffs)
        })
}

/// Order-6 series with zero constant coefficient.
fn arb_exp_argument() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(arb_small_poly(), 6).prop_map(|tail| {
        let vs = vars();
        let mut coeffs = vec![MultiPoly::zero(&vs)];
        coeffs.extend(tail);
        TruncSeries::from_coeffs(&vs, coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn inverse_multiplies_to_one(s in arb_unit_series()) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, TruncSeries::one(s.vars(), s.order()));
    }

    #[test]
    fn exp_satisfies_its_defining_ode(a in arb_exp_argument()) {
        // d/dt exp(a) = a' * exp(a), compared at order N-1.
        let e = a.exp().unwrap();
        let lhs = e.derivative_t();
        let rhs = &a.derivative_t() * &e.truncated(a.order() - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_application_is_linear(
        p in arb_small_poly(),
        r in arb_small_poly(),
        a in arb_rational(),
        b in arb_rational(),
        op_coeffs in prop::collection::vec(arb_rational(), 7),
    ) {
        let vs = vars();
        let series = TruncSeries::from_coeffs(
            &vs,
            op_coeffs.into_iter().map(|c| MultiPoly::constant(&vs, c)).collect(),
        );
        let op = DOperatorSeries::from_series(&series, "x").unwrap();
        let combo = &p.scalar_mul(&a) + &r.scalar_mul(&b);
        let lhs = op.apply(&combo).unwrap();
        let rhs = &op.apply(&p).unwrap().scalar_mul(&a) + &op.apply(&r).unwrap().scalar_mul(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nilpotency_makes_extra_operator_orders_irrelevant(
        p in arb_small_poly(),
        op_coeffs in prop::collection::vec(arb_rational(), 3),
    ) {
        // An operator truncated at exactly deg_x(p) acts the same as any
        // longer truncation of the same series.
        let vs = vars();
        let deg = p.degree_in("x").unwrap() as usize;
        let series_long = TruncSeries::from_fn(&vs, deg + 4, |n| {
            op_coeffs
                .get(n % op_coeffs.len().max(1))
                .map(|c| MultiPoly::constant(&vs, c.clone()))
                .unwrap_or_else(|| MultiPoly::zero(&vs))
        });
        let series_exact = series_long.truncated(deg);
        let op_long = DOperatorSeries::from_series(&series_long, "x").unwrap();
        let op_exact = DOperatorSeries::from_series(&series_exact, "x").unwrap();
        prop_assert_eq!(op_long.apply(&p).unwrap(), op_exact.apply(&p).unwrap());
    }
}

/// The Bernoulli numbers through index 18, as published.
const BERNOULLI_TABLE: [(i64, i64); 19] = [
    (1, 1),
    (-1, 2),
    (1, 6),
    (0, 1),
    (-1, 30),
    (0, 1),
    (1, 42),
    (0, 1),
    (-1, 30),
    (0, 1),
    (5, 66),
    (0, 1),
    (-691, 2730),
    (0, 1),
    (7, 6),
    (0, 1),
    (-3617, 510),
    (0, 1),
    (43867, 798),
];

#[test]
fn kernel_reproduces_the_bernoulli_table() {
    let vs = vars();
    let spec = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
    let series = apostol_kernel(&spec, &vs, 18).unwrap();
    for (n, &(num, den)) in BERNOULLI_TABLE.iter().enumerate() {
        let got = series
            .extract_family(n)
            .unwrap()
            .constant_value()
            .unwrap();
        assert_eq!(got, q(num, den), "B_{n}");
    }
}

#[test]
fn unit_branch_members_vanish_below_the_kernel_order() {
    let vs = vars();
    let x = MultiPoly::var(&vs, "x").unwrap();
    for (lambda, mu) in [(q(1, 1), q(1, 1)), (q(3, 1), q(2, 1)), (q(2, 1), q(0, 1))] {
        for v in 1..=3u32 {
            let spec = KernelSpec::new(v, lambda.clone(), mu.clone()).unwrap();
            let series = &apostol_kernel(&spec, &vs, 8).unwrap() * &exp_poly_t(&x, 8);
            for n in 0..v as usize {
                assert!(
                    series.extract_family(n).unwrap().is_zero(),
                    "v={v} n={n} lambda={lambda} mu={mu}"
                );
            }
            assert!(!series.extract_family(v as usize).unwrap().is_zero());
        }
    }
}

#[test]
fn trig_operators_match_the_z_derivative_route() {
    // On cosine members, z*tan(zD)*D acts as -z*d/dz; on sine members,
    // z*cot(zD)*D acts as +z*d/dz. Both reduce to the first-derivative
    // relations between the two kinds.
    let vs = vars();
    let z = MultiPoly::var(&vs, "z").unwrap();
    for (lambda, mu) in [(q(1, 1), q(-1, 1)), (q(3, 1), q(2, 1))] {
        for u in [UFactory::One, UFactory::GouldHopper { m: 2 }] {
            let kernel = KernelSpec::new(1, lambda.clone(), mu.clone()).unwrap();
            let cos_spec = apbern::families::FamilySpec::new(kernel.clone(), u.clone(), Trig::Cos);
            let sin_spec = apbern::families::FamilySpec::new(kernel, u, Trig::Sin);
            for n in 0..=6usize {
                let c = cos_spec.member_in(&vs, n).unwrap();
                let s = sin_spec.member_in(&vs, n).unwrap();

                let tan_op =
                    build_trig_operator(TrigOperatorKind::Tan, &vs, "x", "z", n.max(2)).unwrap();
                let lhs = tan_op.apply(&c).unwrap();
                let rhs = &(-&z) * &c.diff("z").unwrap();
                assert_eq!(lhs, rhs, "tan route, n={n}");

                let cot_op =
                    build_trig_operator(TrigOperatorKind::Cot, &vs, "x", "z", n.max(2)).unwrap();
                let lhs = cot_op.apply(&s).unwrap();
                let rhs = &z * &s.diff("z").unwrap();
                assert_eq!(lhs, rhs, "cot route, n={n}");
            }
        }
    }
}
