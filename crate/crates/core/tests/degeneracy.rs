//! The degeneracy ladder, checked against routes independent of the kernel
//! code path: a recurrence-based Bernoulli oracle, a direct denominator
//! inversion, and plain substitution.

use std::sync::Arc;

use apbern::exactq::{binomial_q, GaussRational, MultiPoly, VarSet};
use apbern::families::{
    bernoulli_number, cs_closed_form, FamilySpec, Trig, UFactory,
};
use apbern::fps::{
    exp_poly_t, lambda_exp_plus_mu, series_div, KernelSpec, TruncSeries,
};

fn q(n: i64, d: i64) -> GaussRational {
    GaussRational::from_ratio(n, d)
}

/// Bernoulli numbers from the classical recurrence
/// `sum_{k=0}^{n} C(n+1,k) B_k = 0` for `n >= 1`, `B_0 = 1`.
/// No series machinery involved.
fn bernoulli_recurrence(max: usize) -> Vec<GaussRational> {
    let mut table: Vec<GaussRational> = vec![q(1, 1)];
    for n in 1..=max {
        let mut acc = GaussRational::from_int(0);
        for (k, b) in table.iter().enumerate() {
            acc = &acc + &(&binomial_q(n + 1, k) * b);
        }
        let scale = q(-1, (n + 1) as i64);
        table.push(&acc * &scale);
    }
    table
}

#[test]
fn kernel_bernoulli_numbers_match_the_recurrence_oracle() {
    let oracle = bernoulli_recurrence(18);
    for (n, expect) in oracle.iter().enumerate() {
        assert_eq!(&bernoulli_number(n), expect, "B_{n}");
    }
}

#[test]
fn classical_point_reduces_to_recurrence_built_polynomials() {
    // lambda = 1, mu = -1, v = 1: members must equal
    // sum_k C(n,k) B_k x^{n-k} with B_k from the recurrence oracle.
    let vars = VarSet::new(["x"]).unwrap();
    let oracle = bernoulli_recurrence(10);
    let spec = FamilySpec::new(
        KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap(),
        UFactory::One,
        Trig::None,
    );
    for n in 0..=10usize {
        let mut expect = MultiPoly::zero(&vars);
        for k in 0..=n {
            let mono = MultiPoly::var_pow(&vars, "x", (n - k) as u32).unwrap();
            expect = &expect + &mono.scalar_mul(&(&binomial_q(n, k) * &oracle[k]));
        }
        assert_eq!(spec.member_in(&vars, n).unwrap(), expect, "n={n}");
    }
}

#[test]
fn mu_minus_one_matches_direct_denominator_inversion() {
    // The branchy kernel at mu = -1 against a from-scratch construction
    // t^v / (lambda e^t - 1)^v * e^{xt} built with series_div only.
    let vars: Arc<VarSet> = VarSet::new(["x"]).unwrap();
    let x = MultiPoly::var(&vars, "x").unwrap();
    let order = 12usize;
    for lambda in [q(2, 1), q(1, 2), q(-1, 1), q(1, 1)] {
        for v in 1..=2u32 {
            let t = TruncSeries::monomial_t(&MultiPoly::one(&vars), 1, order);
            let den = lambda_exp_plus_mu(&vars, &lambda, &q(-1, 1), order);
            let base = series_div(&t, &den).unwrap();
            let direct = &base.pow(v) * &exp_poly_t(&x, base.order());

            let spec = FamilySpec::new(
                KernelSpec::new(v, lambda.clone(), q(-1, 1)).unwrap(),
                UFactory::One,
                Trig::None,
            );
            for n in 0..=10usize {
                assert_eq!(
                    spec.member_in(&vars, n).unwrap(),
                    direct.extract_family(n).unwrap(),
                    "lambda={lambda} v={v} n={n}"
                );
            }
        }
    }
}

#[test]
fn order_zero_kernel_gives_monomials() {
    let vars = VarSet::new(["x"]).unwrap();
    for (lambda, mu) in [(q(2, 1), q(5, 1)), (q(1, 1), q(-1, 1))] {
        let spec = FamilySpec::new(
            KernelSpec::new(0, lambda, mu).unwrap(),
            UFactory::One,
            Trig::None,
        );
        for n in 0..=10usize {
            assert_eq!(
                spec.member_in(&vars, n).unwrap(),
                MultiPoly::var_pow(&vars, "x", n as u32).unwrap(),
                "n={n}"
            );
        }
    }
}

#[test]
fn trig_families_collapse_at_z_zero() {
    let vars = VarSet::new(["x", "y", "z"]).unwrap();
    let zero = GaussRational::from_int(0);
    for (lambda, mu) in [(q(1, 1), q(-1, 1)), (q(3, 1), q(2, 1))] {
        for u in [UFactory::One, UFactory::GouldHopper { m: 2 }] {
            let kernel = KernelSpec::new(1, lambda.clone(), mu.clone()).unwrap();
            let plain = FamilySpec::new(kernel.clone(), u.clone(), Trig::None);
            let cos = FamilySpec::new(kernel.clone(), u.clone(), Trig::Cos);
            let sin = FamilySpec::new(kernel, u, Trig::Sin);
            for n in 0..=10usize {
                let c = cos.member_in(&vars, n).unwrap();
                assert_eq!(
                    c.subst_value("z", &zero).unwrap(),
                    plain.member_in(&vars, n).unwrap(),
                    "cos collapse n={n}"
                );
                let s = sin.member_in(&vars, n).unwrap();
                assert!(
                    s.subst_value("z", &zero).unwrap().is_zero(),
                    "sin collapse n={n}"
                );
            }
        }
    }
}

#[test]
fn closed_binomial_pair_collapses_at_y_zero() {
    let vars = VarSet::new(["x", "y"]).unwrap();
    let zero = GaussRational::from_int(0);
    for n in 0..=12usize {
        let (c, s) = cs_closed_form(n);
        assert_eq!(
            c.subst_value("y", &zero).unwrap(),
            MultiPoly::var_pow(&vars, "x", n as u32).unwrap()
        );
        assert!(s.subst_value("y", &zero).unwrap().is_zero());
    }
}

#[test]
fn symbolic_shift_identity_survives_sampling() {
    // The addition identity verified with a symbolic shift also holds with
    // the symbol replaced by concrete rationals.
    let vars = VarSet::new(["x", "h"]).unwrap();
    let spec = FamilySpec::new(
        KernelSpec::new(1, q(2, 1), q(-1, 1)).unwrap(),
        UFactory::One,
        Trig::None,
    )
    .with_shift("h");
    let plain = FamilySpec::new(
        KernelSpec::new(1, q(2, 1), q(-1, 1)).unwrap(),
        UFactory::One,
        Trig::None,
    );
    let h = MultiPoly::var(&vars, "h").unwrap();
    for n in 0..=8usize {
        let lhs = spec.member_in(&vars, n).unwrap();
        let mut rhs = MultiPoly::zero(&vars);
        for k in 0..=n {
            let base = plain.member_in(&vars, k).unwrap();
            rhs = &rhs + &(&base * &h.pow((n - k) as u32)).scalar_mul(&binomial_q(n, k));
        }
        assert_eq!(lhs, rhs, "symbolic n={n}");
        for value in [q(1, 1), q(-2, 3), q(5, 2), q(0, 1), q(-7, 4)] {
            assert_eq!(
                lhs.subst_value("h", &value).unwrap(),
                rhs.subst_value("h", &value).unwrap(),
                "sampled h={value} n={n}"
            );
        }
    }
}
