//! The classical Apostol--Bernoulli property list (ids `intro.*`): addition,
//! difference, derivative, integral, sum of powers, order additivity, the
//! expansion in powers of `x`, and the order-reduction relation.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exactq::{binomial_q, factorial_q, GaussRational, MultiPoly, VarSet};
use crate::families::{Trig, UFactory};
use crate::fps::KernelSpec;

use super::{FamilyTable, IdentityCheck, Session, VerdictReport};

impl Session {
    /// Runs the eight classical checks for `mu = -1` kernels over a small
    /// grid of rational `lambda` values (including the Bernoulli point
    /// `lambda = 1`, where every formula below still holds).
    pub fn verify_intro_identities(&self, max_n: usize) -> Vec<VerdictReport> {
        let vars = VarSet::new(["x", "y", "h"]).expect("distinct");
        let table = FamilyTable::new(self, &vars, max_n + 3);
        let x = table.var("x");
        let y = table.var("y");
        let h = table.var("h");
        let one = GaussRational::one();
        let minus_one = GaussRational::from_int(-1);
        let u1 = UFactory::One;

        let mut lambdas = alloc::vec![
            GaussRational::one(),
            GaussRational::from_int(2),
            GaussRational::from_int(3),
            GaussRational::from_ratio(1, 2),
        ];
        lambdas.extend(self.samples().rationals("intro-lambda", 1));

        let mut h_pows = Vec::with_capacity(max_n + 1);
        h_pows.push(MultiPoly::one(&vars));
        for j in 1..=max_n {
            h_pows.push(&h_pows[j - 1] * &h);
        }
        let mut x_pows = Vec::with_capacity(max_n + 1);
        x_pows.push(MultiPoly::one(&vars));
        for j in 1..=max_n {
            x_pows.push(&x_pows[j - 1] * &x);
        }

        let mut out = Vec::new();
        for lambda in &lambdas {
            let kernel = |v: u32| {
                KernelSpec::new(v, lambda.clone(), minus_one.clone()).expect("mu nonzero")
            };
            let member = |v: u32, arg: Option<&MultiPoly>, n: usize| {
                table.member(&kernel(v), &u1, arg, Trig::None, None, n)
            };

            // Addition: P_n(x + h) as a binomial convolution, symbolic h.
            let mut check = IdentityCheck::new("intro.addition")
                .param("lambda", lambda)
                .param("h", "symbolic")
                .erratum("printed shift variable is b; the statement is in the shift symbol");
            let x_plus_h = &x + &h;
            for n in 0..=max_n {
                let lhs = member(1, Some(&x_plus_h), n);
                let mut rhs = MultiPoly::zero(&vars);
                for j in 0..=n {
                    let base = member(1, Some(&x), j);
                    rhs = &rhs + &(&base * &h_pows[n - j]).scalar_mul(&binomial_q(n, j));
                }
                check.compare(&[n], &lhs, &rhs);
            }
            out.push(check.finish());

            // Difference equation, order-v form:
            // lambda*P^{(v)}_n(x+1) - P^{(v)}_n(x) = n*P^{(v-1)}_{n-1}(x).
            let x_plus_one = &x + &MultiPoly::one(&vars);
            for v in [1u32, 2] {
                let mut check = IdentityCheck::new("intro.difference")
                    .param("lambda", lambda)
                    .param("v", v);
                for n in 1..=max_n {
                    let lhs = &member(v, Some(&x_plus_one), n).scalar_mul(lambda)
                        - &member(v, Some(&x), n);
                    let rhs = member(v - 1, Some(&x), n - 1)
                        .scalar_mul(&GaussRational::from_int(n as i64));
                    check.compare(&[n], &lhs, &rhs);
                }
                out.push(check.finish());
            }

            // Iterated derivative: d^p/dx^p P_n = n!/(n-p)! * P_{n-p}.
            for v in [1u32, 2] {
                let mut check = IdentityCheck::new("intro.derivative")
                    .param("lambda", lambda)
                    .param("v", v);
                for n in 0..=max_n {
                    let base = member(v, Some(&x), n);
                    let mut lhs = base;
                    for p in 0..=n {
                        if p > 0 {
                            lhs = lhs.diff("x").expect("x");
                        }
                        let scale = &factorial_q(n) / &factorial_q(n - p);
                        let rhs = member(v, Some(&x), n - p).scalar_mul(&scale);
                        check.compare(&[n, p], &lhs, &rhs);
                    }
                }
                out.push(check.finish());
            }

            // Integral over [a, b] against the antiderivative of the
            // next-index member.
            let bounds = self.samples().rationals("intro-integral", 2);
            for v in [1u32, 2] {
                let mut check = IdentityCheck::new("intro.integral")
                    .param("lambda", lambda)
                    .param("v", v)
                    .param("a", &bounds[0])
                    .param("b", &bounds[1]);
                for n in 0..=max_n {
                    let antiderivative = member(v, Some(&x), n).integrate("x").expect("x");
                    let eval = |p: &MultiPoly, at: &GaussRational| {
                        p.subst_value("x", at)
                            .expect("x")
                            .constant_value()
                            .expect("x-only polynomial")
                    };
                    let lhs = &eval(&antiderivative, &bounds[1]) - &eval(&antiderivative, &bounds[0]);
                    let next = member(v, Some(&x), n + 1);
                    let rhs = &(&eval(&next, &bounds[1]) - &eval(&next, &bounds[0]))
                        / &GaussRational::from_int((n + 1) as i64);
                    check.compare(
                        &[n],
                        &MultiPoly::constant(&vars, lhs),
                        &MultiPoly::constant(&vars, rhs),
                    );
                }
                out.push(check.finish());
            }

            // Order additivity with a symbolic second argument.
            for v in [1u32, 2, 3] {
                for w in [1u32, 2, 3] {
                    let mut check = IdentityCheck::new("intro.order-additivity")
                        .param("lambda", lambda)
                        .param("v", v)
                        .param("u-order", w);
                    let cap = max_n.min(8);
                    for n in 0..=cap {
                        let x_plus_y = &x + &y;
                        let lhs = member(v + w, Some(&x_plus_y), n);
                        let mut rhs = MultiPoly::zero(&vars);
                        for j in 0..=n {
                            let left = member(v, Some(&x), j);
                            let right = member(w, Some(&y), n - j);
                            rhs = &rhs + &(&left * &right).scalar_mul(&binomial_q(n, j));
                        }
                        check.compare(&[n], &lhs, &rhs);
                    }
                    out.push(check.finish());
                }
            }

            // Expansion in powers of x from the numbers of the same order.
            for v in [1u32, 2] {
                let mut check = IdentityCheck::new("intro.x-expansion")
                    .param("lambda", lambda)
                    .param("v", v);
                for n in 0..=max_n {
                    let lhs = member(v, Some(&x), n);
                    let mut rhs = MultiPoly::zero(&vars);
                    for j in 0..=n {
                        let number = member(v, None, j);
                        rhs = &rhs + &(&number * &x_pows[n - j]).scalar_mul(&binomial_q(n, j));
                    }
                    check.compare(&[n], &lhs, &rhs);
                }
                out.push(check.finish());
            }

            // Order reduction: order-v members from order-(v-1) numbers and
            // order-one members.
            for v in [1u32, 2, 3] {
                let mut check = IdentityCheck::new("intro.order-v-relation")
                    .param("lambda", lambda)
                    .param("v", v);
                for n in 0..=max_n {
                    let lhs = member(v, Some(&x), n);
                    let mut rhs = MultiPoly::zero(&vars);
                    for j in 0..=n {
                        let number = member(v - 1, None, n - j);
                        let base = member(1, Some(&x), j);
                        rhs = &rhs + &(&number * &base).scalar_mul(&binomial_q(n, j));
                    }
                    check.compare(&[n], &lhs, &rhs);
                }
                out.push(check.finish());
            }
        }

        // Sum of powers: sum_{k=0}^{m-1} k^n against the lambda-weighted
        // member sums, on the fixed grid plus the classical point.
        let sop_lambdas = [
            GaussRational::from_int(2),
            GaussRational::from_int(3),
            GaussRational::from_ratio(1, 2),
            GaussRational::one(),
        ];
        for lambda in &sop_lambdas {
            let kernel = KernelSpec::new(1, lambda.clone(), minus_one.clone()).expect("valid");
            let mut check = IdentityCheck::new("intro.sum-of-powers").param("lambda", lambda);
            for n in 1..=6usize {
                for m in 1..=6usize {
                    let mut lhs = GaussRational::zero();
                    for k in 0..m {
                        lhs = &lhs + &GaussRational::from_int(k as i64).pow(n as u32);
                    }

                    let next = table.member(&kernel, &u1, Some(&x), Trig::None, None, n + 1);
                    let at = |k: i64| {
                        next.subst_value("x", &GaussRational::from_int(k))
                            .expect("x")
                            .constant_value()
                            .expect("x-only polynomial")
                    };
                    let n_plus_1 = GaussRational::from_int((n + 1) as i64);
                    let mut member_sum = GaussRational::zero();
                    for k in 1..=m {
                        member_sum = &member_sum + &at(k as i64);
                    }
                    let weighted = &(&(lambda - &one) / &n_plus_1) * &member_sum;
                    let tail = &(&at(m as i64) - &at(0)) / &n_plus_1;
                    let rhs = &weighted + &tail;

                    check.compare(
                        &[n, m],
                        &MultiPoly::constant(&vars, lhs),
                        &MultiPoly::constant(&vars, rhs),
                    );
                }
            }
            out.push(check.finish());
        }
        out
    }
}
