//! Truncated formal power series in `t` over multivariate polynomials.
//!
//! A series stores ordinary coefficients `a_0 .. a_N` for a fixed truncation
//! order `N`; the polynomial family member of index `n` is `n! * a_n`
//! (families are exponential generating functions, but keeping ordinary
//! coefficients makes Cauchy products binomial-free — the factorial enters
//! exactly once, at extraction).
//!
//! There is no general composition. The only builders are the ones the
//! generating functions need: `exp` of a zero-constant series, `cos`/`sin`
//! of `p*t`, geometric-style inversion of unit series, and the
//! `(t/(lambda*e^t + mu))^v` kernel with its two branches.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactq::{factorial, factorial_q, GaussRational, MultiPoly, PolyError, VarSet};

/// Errors from series construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Binary operation between series of different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Constant coefficient is zero or not a scalar, so the series has no
    /// inverse in the truncated ring.
    NotAUnit,
    /// `exp` of a series with nonzero constant term would need a
    /// transcendental scalar.
    NonzeroConstantTerm,
    /// Requested index exceeds the truncation order.
    TruncationExceeded { requested: usize, order: usize },
    /// `div_tpow(k)` found a nonzero coefficient below `t^k`.
    NonzeroLowCoefficient { index: usize },
    /// Kernel parameters `(lambda, mu) = (0, 0)`.
    InvalidKernel,
    Poly(PolyError),
}

impl From<PolyError> for SeriesError {
    fn from(e: PolyError) -> Self {
        SeriesError::Poly(e)
    }
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "truncation order mismatch: {left} vs {right}")
            }
            SeriesError::NotAUnit => {
                write!(f, "constant coefficient is zero or not a scalar")
            }
            SeriesError::NonzeroConstantTerm => {
                write!(f, "exp requires a zero constant term")
            }
            SeriesError::TruncationExceeded { requested, order } => {
                write!(f, "index {requested} exceeds truncation order {order}")
            }
            SeriesError::NonzeroLowCoefficient { index } => {
                write!(f, "cannot divide by t^k: coefficient at t^{index} is nonzero")
            }
            SeriesError::InvalidKernel => {
                write!(f, "kernel requires (lambda, mu) != (0, 0)")
            }
            SeriesError::Poly(e) => write!(f, "{e}"),
        }
    }
}

/// Parameters of the generalized kernel `(t/(lambda*e^t + mu))^order`.
///
/// `lambda + mu == 0` selects the classical branch (the denominator vanishes
/// at `t = 0` and cancels against the numerator `t`); otherwise the
/// denominator is a unit and the kernel carries an explicit `t^order`
/// prefactor, so family members below index `order` vanish.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KernelSpec {
    pub order: u32,
    pub lambda: GaussRational,
    pub mu: GaussRational,
}

impl KernelSpec {
    pub fn new(order: u32, lambda: GaussRational, mu: GaussRational) -> Result<Self, SeriesError> {
        if lambda.is_zero() && mu.is_zero() {
            return Err(SeriesError::InvalidKernel);
        }
        Ok(Self { order, lambda, mu })
    }

    /// Same parameters at a different order.
    pub fn with_order(&self, order: u32) -> Self {
        Self {
            order,
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
        }
    }

    /// True when `lambda + mu == 0` (the `t`-cancellation branch).
    pub fn is_classical_branch(&self) -> bool {
        (&self.lambda + &self.mu).is_zero()
    }
}

/// A formal power series truncated at order `N`: coefficients for
/// `t^0 .. t^N`, all over one variable set.
///
/// Arithmetic never reads or writes beyond index `N`. Binary operators
/// panic on an order or ring mismatch; the `checked_*` methods report it.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    vars: Arc<VarSet>,
    coeffs: Vec<MultiPoly>,
}

impl TruncSeries {
    pub fn zero(vars: &Arc<VarSet>, order: usize) -> Self {
        Self {
            vars: Arc::clone(vars),
            coeffs: alloc::vec![MultiPoly::zero(vars); order + 1],
        }
    }

    pub fn one(vars: &Arc<VarSet>, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = MultiPoly::one(vars);
        s
    }

    pub fn constant(vars: &Arc<VarSet>, value: GaussRational, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = MultiPoly::constant(vars, value);
        s
    }

    /// The monomial `p * t^k`.
    pub fn monomial_t(p: &MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(p.vars(), order);
        if k <= order {
            s.coeffs[k] = p.clone();
        }
        s
    }

    /// Builds from a coefficient function `n -> a_n`.
    pub fn from_fn(
        vars: &Arc<VarSet>,
        order: usize,
        mut f: impl FnMut(usize) -> MultiPoly,
    ) -> Self {
        Self {
            vars: Arc::clone(vars),
            coeffs: (0..=order).map(|n| f(n)).collect(),
        }
    }

    pub fn from_coeffs(vars: &Arc<VarSet>, coeffs: Vec<MultiPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least t^0");
        Self {
            vars: Arc::clone(vars),
            coeffs,
        }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(MultiPoly::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Copy truncated to a lower order.
    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self {
            vars: Arc::clone(&self.vars),
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        if self.vars != other.vars {
            return Err(SeriesError::Poly(PolyError::RingMismatch));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        Ok(Self {
            vars: Arc::clone(&self.vars),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.checked_add(&-other)
    }

    /// Cauchy product truncated at `N`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(other)?;
        let order = self.order();
        let mut coeffs = alloc::vec![MultiPoly::zero(&self.vars); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Self {
            vars: Arc::clone(&self.vars),
            coeffs,
        })
    }

    pub fn scalar_mul(&self, s: &GaussRational) -> Self {
        Self {
            vars: Arc::clone(&self.vars),
            coeffs: self.coeffs.iter().map(|c| c.scalar_mul(s)).collect(),
        }
    }

    pub fn poly_mul(&self, p: &MultiPoly) -> Self {
        Self {
            vars: Arc::clone(&self.vars),
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.vars, self.order());
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse: `self * invert(self) = 1 + O(t^{N+1})`.
    ///
    /// The constant coefficient must be a nonzero scalar; a polynomial
    /// constant term has no inverse in the coefficient ring.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = self.coeffs[0]
            .constant_value()
            .filter(|c| !c.is_zero())
            .ok_or(SeriesError::NotAUnit)?;
        let a0_inv = a0.inv().expect("nonzero scalar");
        let order = self.order();
        let mut inv = Vec::with_capacity(order + 1);
        inv.push(MultiPoly::constant(&self.vars, a0_inv.clone()));
        for n in 1..=order {
            // c_n = -(1/a0) * sum_{k=1..n} a_k c_{n-k}
            let mut acc = MultiPoly::zero(&self.vars);
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &inv[n - k]);
            }
            inv.push(acc.scalar_mul(&-&a0_inv));
        }
        Ok(Self {
            vars: Arc::clone(&self.vars),
            coeffs: inv,
        })
    }

    /// Exponential of a series with zero constant term, via the recurrence
    /// `(exp a)' = a' * exp a`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = self.order();
        let mut out = Vec::with_capacity(order + 1);
        out.push(MultiPoly::one(&self.vars));
        for n in 1..=order {
            // n * b_n = sum_{k=1..n} k * a_k * b_{n-k}
            let mut acc = MultiPoly::zero(&self.vars);
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = (&self.coeffs[k] * &out[n - k])
                    .scalar_mul(&GaussRational::from_int(k as i64));
                acc = &acc + &term;
            }
            out.push(acc.scalar_mul(&GaussRational::from_ratio(1, n as i64)));
        }
        Ok(Self {
            vars: Arc::clone(&self.vars),
            coeffs: out,
        })
    }

    /// Derivative in `t`; the result has order `N - 1`.
    pub fn derivative_t(&self) -> Self {
        let order = self.order();
        assert!(order >= 1, "cannot differentiate an order-0 series");
        let coeffs = (0..order)
            .map(|n| self.coeffs[n + 1].scalar_mul(&GaussRational::from_int((n + 1) as i64)))
            .collect();
        Self {
            vars: Arc::clone(&self.vars),
            coeffs,
        }
    }

    /// Multiplication by `t^k` in the truncated ring (the top `k`
    /// coefficients fall off the end); the order is unchanged.
    pub fn mul_tpow(&self, k: usize) -> Self {
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| {
                if n < k {
                    MultiPoly::zero(&self.vars)
                } else {
                    self.coeffs[n - k].clone()
                }
            })
            .collect();
        Self {
            vars: Arc::clone(&self.vars),
            coeffs,
        }
    }

    /// Division by `t^k`. Errors if any coefficient below `t^k` is nonzero;
    /// the result has order `N - k`.
    pub fn div_tpow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.order(), "shift exceeds truncation order");
        for (i, c) in self.coeffs[..k].iter().enumerate() {
            if !c.is_zero() {
                return Err(SeriesError::NonzeroLowCoefficient { index: i });
            }
        }
        Ok(Self {
            vars: Arc::clone(&self.vars),
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Substitution `t -> c*t`: coefficient `a_n` becomes `c^n * a_n`.
    pub fn scale_t(&self, c: &GaussRational) -> Self {
        let mut power = GaussRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a.scalar_mul(&power);
                power = &power * c;
                scaled
            })
            .collect();
        Self {
            vars: Arc::clone(&self.vars),
            coeffs,
        }
    }

    /// The family member of index `n`: `n! * a_n`.
    pub fn extract_family(&self, n: usize) -> Result<MultiPoly, SeriesError> {
        if n > self.order() {
            return Err(SeriesError::TruncationExceeded {
                requested: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].scalar_mul(&factorial_q(n)))
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_add(rhs).expect("series mismatch in +")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_sub(rhs).expect("series mismatch in -")
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.checked_mul(rhs).expect("series mismatch in *")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            vars: Arc::clone(&self.vars),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({c})*t^{n}")?;
        }
        write!(f, "]")
    }
}

/// `exp(p * t)`: coefficients `p^n / n!`.
pub fn exp_poly_t(p: &MultiPoly, order: usize) -> TruncSeries {
    let vars = p.vars();
    let mut power = MultiPoly::one(vars);
    let coeffs = (0..=order)
        .map(|n| {
            if n > 0 {
                power = &power * p;
            }
            power.scalar_mul(&inv_factorial(n))
        })
        .collect();
    TruncSeries::from_coeffs(vars, coeffs)
}

/// `cos(p * t)`: even coefficients `(-1)^r p^{2r} / (2r)!`.
pub fn cos_poly_t(p: &MultiPoly, order: usize) -> TruncSeries {
    trig_poly_t(p, order, 0)
}

/// `sin(p * t)`: odd coefficients `(-1)^r p^{2r+1} / (2r+1)!`.
pub fn sin_poly_t(p: &MultiPoly, order: usize) -> TruncSeries {
    trig_poly_t(p, order, 1)
}

fn trig_poly_t(p: &MultiPoly, order: usize, parity: usize) -> TruncSeries {
    let vars = p.vars();
    let mut out = TruncSeries::zero(vars, order);
    let mut power = if parity == 0 {
        MultiPoly::one(vars)
    } else {
        p.clone()
    };
    let mut sign = GaussRational::one();
    let mut n = parity;
    while n <= order {
        out.coeffs[n] = power.scalar_mul(&(&sign * &inv_factorial(n)));
        sign = -sign;
        power = &(&power * p) * p;
        n += 2;
    }
    out
}

/// The Maclaurin pair `(cos(z*t), sin(z*t))` for a variable `z`.
pub fn cos_sin_zt(
    vars: &Arc<VarSet>,
    z: &str,
    order: usize,
) -> Result<(TruncSeries, TruncSeries), SeriesError> {
    let zp = MultiPoly::var(vars, z)?;
    Ok((cos_poly_t(&zp, order), sin_poly_t(&zp, order)))
}

/// `exp(c * t)` for a scalar `c`.
pub fn exp_scalar_t(vars: &Arc<VarSet>, c: &GaussRational, order: usize) -> TruncSeries {
    exp_poly_t(&MultiPoly::constant(vars, c.clone()), order)
}

/// `lambda * e^t + mu`.
pub fn lambda_exp_plus_mu(
    vars: &Arc<VarSet>,
    lambda: &GaussRational,
    mu: &GaussRational,
    order: usize,
) -> TruncSeries {
    let e = exp_scalar_t(vars, &GaussRational::one(), order).scalar_mul(lambda);
    &e + &TruncSeries::constant(vars, mu.clone(), order)
}

/// Exact division `num / den` in the truncated ring, cancelling the common
/// power of `t` dictated by the denominator's valuation. The result has
/// order `N - k` where `k` is that valuation.
pub fn series_div(num: &TruncSeries, den: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    let k = den.valuation().ok_or(SeriesError::NotAUnit)?;
    let num = num.div_tpow(k)?;
    let den = den.div_tpow(k).expect("valuation k");
    num.checked_mul(&den.invert()?)
}

/// The kernel `(t/(lambda*e^t + mu))^v`.
///
/// When `lambda + mu == 0` the denominator is `lambda * t * (e^t - 1)/t`,
/// so the unit factor `(e^t - 1)/t` is inverted and no `t` prefactor
/// remains. Otherwise the denominator is itself a unit and the kernel is
/// `t^v` times a unit, so all coefficients below `t^v` vanish.
pub fn apostol_kernel(
    spec: &KernelSpec,
    vars: &Arc<VarSet>,
    order: usize,
) -> Result<TruncSeries, SeriesError> {
    let v = spec.order;
    if v == 0 {
        return Ok(TruncSeries::one(vars, order));
    }
    if spec.is_classical_branch() {
        // (e^t - 1)/t has coefficients 1/(n+1)!.
        let unit = TruncSeries::from_fn(vars, order, |n| {
            MultiPoly::constant(vars, inv_factorial(n + 1))
        });
        let lambda_inv = spec.lambda.inv().ok_or(SeriesError::InvalidKernel)?;
        let base = unit.invert()?.scalar_mul(&lambda_inv);
        Ok(base.pow(v))
    } else {
        let den = lambda_exp_plus_mu(vars, &spec.lambda, &spec.mu, order);
        Ok(den.invert()?.pow(v).mul_tpow(v as usize))
    }
}

pub(crate) fn inv_factorial(n: usize) -> GaussRational {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    GaussRational::from_rational(BigRational::new(BigInt::one(), factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;

    fn q(n: i64, d: i64) -> GaussRational {
        GaussRational::from_ratio(n, d)
    }

    fn xz() -> Arc<VarSet> {
        VarSet::new(["x", "z"]).unwrap()
    }

    fn constant_series(vars: &Arc<VarSet>, vals: &[(i64, i64)]) -> TruncSeries {
        TruncSeries::from_coeffs(
            vars,
            vals.iter()
                .map(|&(n, d)| MultiPoly::constant(vars, q(n, d)))
                .collect(),
        )
    }

    #[test]
    fn cauchy_product_truncates() {
        let vars = xz();
        let one_plus_t = constant_series(&vars, &[(1, 1), (1, 1), (0, 1), (0, 1)]);
        let one_minus_t = constant_series(&vars, &[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        let expect = constant_series(&vars, &[(1, 1), (0, 1), (-1, 1), (0, 1)]);
        assert_eq!(&one_plus_t * &one_minus_t, expect);
    }

    #[test]
    fn inverse_exponentials_cancel() {
        let vars = xz();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let a = exp_poly_t(&x, 6);
        let b = exp_poly_t(&(-&x), 6);
        assert_eq!(&a * &b, TruncSeries::one(&vars, 6));
    }

    #[test]
    fn bernoulli_generating_product() {
        // (t/(e^t - 1)) * e^{xt}: coefficient of t^2 is x^2/2 - x/2 + 1/12.
        let vars = xz();
        let spec = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
        let kernel = apostol_kernel(&spec, &vars, 4).unwrap();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let s = &kernel * &exp_poly_t(&x, 4);
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![2, 0], q(1, 2)),
                (alloc::vec![1, 0], q(-1, 2)),
                (alloc::vec![0, 0], q(1, 12)),
            ],
        );
        assert_eq!(s.coeff(2), &expect);
    }

    #[test]
    fn geometric_inverse() {
        let vars = xz();
        let s = constant_series(&vars, &[(1, 1), (-1, 1), (0, 1), (0, 1)]);
        let expect = constant_series(&vars, &[(1, 1), (1, 1), (1, 1), (1, 1)]);
        assert_eq!(s.invert().unwrap(), expect);
    }

    #[test]
    fn exp_inverse_alternates() {
        let vars = xz();
        let e = exp_scalar_t(&vars, &q(1, 1), 5);
        let inv = e.invert().unwrap();
        for n in 0..=5 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expect = &q(sign, 1) * &inv_factorial(n);
            assert_eq!(inv.coeff(n).constant_value().unwrap(), expect);
        }
    }

    #[test]
    fn shifted_constant_inverse() {
        // 1/(2+t) = 1/2 - t/4 + ...
        let vars = xz();
        let s = constant_series(&vars, &[(2, 1), (1, 1), (0, 1)]);
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeff(0).constant_value().unwrap(), q(1, 2));
        assert_eq!(inv.coeff(1).constant_value().unwrap(), q(-1, 4));
    }

    #[test]
    fn invert_requires_scalar_unit_constant() {
        let vars = xz();
        assert_eq!(
            TruncSeries::zero(&vars, 3).invert().unwrap_err(),
            SeriesError::NotAUnit
        );
        let x = MultiPoly::var(&vars, "x").unwrap();
        let mut s = TruncSeries::one(&vars, 3);
        s.coeffs[0] = x;
        assert_eq!(s.invert().unwrap_err(), SeriesError::NotAUnit);
    }

    #[test]
    fn exp_examples() {
        let vars = xz();
        let x = MultiPoly::var(&vars, "x").unwrap();

        // exp(x t) via the generic recurrence matches the direct builder.
        let arg = TruncSeries::monomial_t(&x, 1, 5);
        assert_eq!(arg.exp().unwrap(), exp_poly_t(&x, 5));

        // exp(0) = 1.
        assert_eq!(
            TruncSeries::zero(&vars, 5).exp().unwrap(),
            TruncSeries::one(&vars, 5)
        );

        // Nonzero constant term is rejected.
        assert_eq!(
            TruncSeries::one(&vars, 5).exp().unwrap_err(),
            SeriesError::NonzeroConstantTerm
        );
    }

    #[test]
    fn gould_hopper_cubic_from_exp() {
        // 3! * [t^3] exp(x t + y t^2) = x^3 + 6 x y.
        let vars = VarSet::new(["x", "y"]).unwrap();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let y = MultiPoly::var(&vars, "y").unwrap();
        let arg = &TruncSeries::monomial_t(&x, 1, 4) + &TruncSeries::monomial_t(&y, 2, 4);
        let h = arg.exp().unwrap();
        let member = h.extract_family(3).unwrap();
        let expect = MultiPoly::from_terms(
            &vars,
            [(alloc::vec![3, 0], q(1, 1)), (alloc::vec![1, 1], q(6, 1))],
        );
        assert_eq!(member, expect);
    }

    #[test]
    fn trig_builders() {
        let vars = xz();
        let (cos, sin) = cos_sin_zt(&vars, "z", 6).unwrap();
        let z2 = MultiPoly::from_terms(&vars, [(alloc::vec![0, 2], q(-1, 2))]);
        assert_eq!(cos.coeff(2), &z2);
        assert_eq!(sin.coeff(1), &MultiPoly::var(&vars, "z").unwrap());
        // cos^2 + sin^2 = 1 in the truncated ring.
        let sum = &(&cos * &cos) + &(&sin * &sin);
        assert_eq!(sum, TruncSeries::one(&vars, 6));
    }

    #[test]
    fn kernel_bernoulli_branch() {
        let vars = xz();
        let spec = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
        let k = apostol_kernel(&spec, &vars, 4).unwrap();
        let expect = [(1, 1), (-1, 2), (1, 12), (0, 1), (-1, 720)];
        for (n, &(num, den)) in expect.iter().enumerate() {
            assert_eq!(k.coeff(n).constant_value().unwrap(), q(num, den), "at t^{n}");
        }
    }

    #[test]
    fn kernel_exponential_only() {
        // v=1, lambda=2, mu=0: t/(2 e^t) = (t/2) e^{-t}.
        let vars = xz();
        let spec = KernelSpec::new(1, q(2, 1), q(0, 1)).unwrap();
        let k = apostol_kernel(&spec, &vars, 3).unwrap();
        assert_eq!(k.coeff(1).constant_value().unwrap(), q(1, 2));
        assert_eq!(k.coeff(2).constant_value().unwrap(), q(-1, 2));
    }

    #[test]
    fn kernel_unit_branch_prefactor() {
        let vars = xz();
        let spec = KernelSpec::new(2, q(1, 1), q(1, 1)).unwrap();
        let k = apostol_kernel(&spec, &vars, 4).unwrap();
        assert!(k.coeff(0).is_zero());
        assert!(k.coeff(1).is_zero());
        assert!(!k.coeff(2).is_zero());
    }

    #[test]
    fn kernel_rejects_zero_pair() {
        assert_eq!(
            KernelSpec::new(1, q(0, 1), q(0, 1)).unwrap_err(),
            SeriesError::InvalidKernel
        );
    }

    #[test]
    fn extract_family_examples() {
        let vars = xz();
        let spec = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
        let kernel = apostol_kernel(&spec, &vars, 4).unwrap();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let (cos, sin) = cos_sin_zt(&vars, "z", 4).unwrap();
        let e = exp_poly_t(&x, 4);

        let c_fam = &(&kernel * &e) * &cos;
        let p2 = c_fam.extract_family(2).unwrap();
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![2, 0], q(1, 1)),
                (alloc::vec![1, 0], q(-1, 1)),
                (alloc::vec![0, 0], q(1, 6)),
                (alloc::vec![0, 2], q(-1, 1)),
            ],
        );
        assert_eq!(p2, expect);

        let s_fam = &(&kernel * &e) * &sin;
        assert_eq!(
            s_fam.extract_family(1).unwrap(),
            MultiPoly::var(&vars, "z").unwrap()
        );

        // n = 0 is the raw constant coefficient.
        assert_eq!(c_fam.extract_family(0).unwrap(), *c_fam.coeff(0));

        assert_eq!(
            c_fam.extract_family(9).unwrap_err(),
            SeriesError::TruncationExceeded {
                requested: 9,
                order: 4
            }
        );
    }

    #[test]
    fn div_tpow_contract() {
        let vars = xz();
        let s = constant_series(&vars, &[(0, 1), (0, 1), (3, 1), (5, 1)]);
        let shifted = s.div_tpow(2).unwrap();
        assert_eq!(shifted.order(), 1);
        assert_eq!(shifted.coeff(0).constant_value().unwrap(), q(3, 1));

        let bad = constant_series(&vars, &[(0, 1), (7, 1), (3, 1)]);
        assert_eq!(
            bad.div_tpow(2).unwrap_err(),
            SeriesError::NonzeroLowCoefficient { index: 1 }
        );
    }

    #[test]
    fn series_div_cancels_common_valuation() {
        // (t^2 + t^3) / (t - t^2) = t * (1 + t)/(1 - t) = t + 2t^2 + 2t^3 + ...
        let vars = xz();
        let num = constant_series(&vars, &[(0, 1), (0, 1), (1, 1), (1, 1), (0, 1)]);
        let den = constant_series(&vars, &[(0, 1), (1, 1), (-1, 1), (0, 1), (0, 1)]);
        let ratio = series_div(&num, &den).unwrap();
        assert_eq!(ratio.order(), 3);
        let expect = constant_series(&vars, &[(0, 1), (1, 1), (2, 1), (2, 1)]);
        assert_eq!(ratio, expect);
    }

    #[test]
    fn scale_t_matches_rebuilt_kernel() {
        // Building t' = c*t into the generating function directly must agree
        // with the coefficient transform a_n -> c^n a_n.
        let vars = xz();
        let spec = KernelSpec::new(1, q(3, 1), q(2, 1)).unwrap();
        let kernel = apostol_kernel(&spec, &vars, 6).unwrap();
        for c in [q(2, 1), q(-1, 1)] {
            let ct = TruncSeries::monomial_t(&MultiPoly::constant(&vars, c.clone()), 1, 6);
            let den = &exp_scalar_t(&vars, &c, 6).scalar_mul(&q(3, 1))
                + &TruncSeries::constant(&vars, q(2, 1), 6);
            let rebuilt = series_div(&ct, &den).unwrap();
            assert_eq!(rebuilt, kernel.scale_t(&c).truncated(rebuilt.order()));
        }
    }

    #[test]
    fn eval_of_member_is_exact() {
        let vars = xz();
        let spec = KernelSpec::new(1, q(1, 1), q(-1, 1)).unwrap();
        let kernel = apostol_kernel(&spec, &vars, 4).unwrap();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let member = (&kernel * &exp_poly_t(&x, 4)).extract_family(2).unwrap();
        let at: BTreeMap<&str, GaussRational> = [("x", q(0, 1))].into();
        assert_eq!(member.eval(&at).unwrap(), q(1, 6));
    }
}
