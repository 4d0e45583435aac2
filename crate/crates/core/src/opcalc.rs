//! Operator calculus: formal power series in the derivative operator `D_x`
//! applied to polynomials.
//!
//! `D_x` is nilpotent on polynomials, so an operator series truncated at
//! order `J >= deg_x(p)` acts exactly. Operator series are built by the
//! `fps` engine as series in `t` and reinterpreted with `t -> D_x`; the
//! coefficients live in the remaining symbols (never in `x` itself — the
//! `x`-multiplication term of the raising operator is handled as an
//! explicit separate term, which keeps nilpotency reasoning sound).
//!
//! The raising operator of the source material contains `v/D_x`, which has
//! no canonical action on polynomials with a nonzero constant term in `x`;
//! raising is therefore verified at the generating-function level
//! ([`verify_raising_gf`]), which is equivalent and exactly testable. The
//! differential equations contain no `1/D_x` and are verified as operators
//! on polynomials ([`verify_ode`]).

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::One;

use crate::exactq::{GaussRational, MultiPoly, PolyError, VarSet};
use crate::families::{kernel_ratio, FamilyError, FamilySpec, Trig, UFactory};
use crate::fps::{
    apostol_kernel, cos_poly_t, exp_poly_t, series_div, sin_poly_t, SeriesError, TruncSeries,
};
use crate::theorems::{family_params, IdentityCheck, VerdictReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OperatorError {
    /// The operator was truncated below the polynomial's degree in the
    /// differentiation variable; applying it would silently drop terms.
    InsufficientOrder { needed: usize, have: usize },
    /// An operator coefficient involves the differentiation variable.
    CoefficientInvolvesVariable(String),
    Series(SeriesError),
    Family(FamilyError),
    Poly(PolyError),
}

impl From<SeriesError> for OperatorError {
    fn from(e: SeriesError) -> Self {
        OperatorError::Series(e)
    }
}

impl From<FamilyError> for OperatorError {
    fn from(e: FamilyError) -> Self {
        OperatorError::Family(e)
    }
}

impl From<PolyError> for OperatorError {
    fn from(e: PolyError) -> Self {
        OperatorError::Poly(e)
    }
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::InsufficientOrder { needed, have } => {
                write!(f, "operator order {have} is below the required {needed}")
            }
            OperatorError::CoefficientInvolvesVariable(v) => {
                write!(f, "operator coefficient involves the differentiation variable `{v}`")
            }
            OperatorError::Series(e) => write!(f, "{e}"),
            OperatorError::Family(e) => write!(f, "{e}"),
            OperatorError::Poly(e) => write!(f, "{e}"),
        }
    }
}

/// The operator `sum_j c_j * D_var^j`, truncated at operator order `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DOperatorSeries {
    var: String,
    coeffs: Vec<MultiPoly>,
}

impl DOperatorSeries {
    /// Reinterprets a `t`-series as an operator series, `t -> D_var`.
    pub fn from_series(series: &TruncSeries, var: &str) -> Result<Self, OperatorError> {
        for c in series.coeffs() {
            if c.degree_in(var)? > 0 {
                return Err(OperatorError::CoefficientInvolvesVariable(var.to_string()));
            }
        }
        Ok(Self {
            var: var.to_string(),
            coeffs: series.coeffs().to_vec(),
        })
    }

    pub fn zero(vars: &Arc<VarSet>, var: &str, order: usize) -> Self {
        Self {
            var: var.to_string(),
            coeffs: alloc::vec![MultiPoly::zero(vars); order + 1],
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &MultiPoly {
        &self.coeffs[j]
    }

    /// `sum_j c_j * d^j p / d var^j`, exact.
    ///
    /// Errors when the operator order is below `deg_var(p)` — higher terms
    /// would be missing, and silent truncation is never acceptable here.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, OperatorError> {
        let needed = p.degree_in(&self.var)? as usize;
        if self.order() < needed {
            return Err(OperatorError::InsufficientOrder {
                needed,
                have: self.order(),
            });
        }
        let mut acc = &self.coeffs[0] * p;
        let mut derivative = p.clone();
        for j in 1..=needed {
            derivative = derivative.diff(&self.var)?;
            if derivative.is_zero() {
                break;
            }
            if self.coeffs[j].is_zero() {
                continue;
            }
            acc = &acc + &(&self.coeffs[j] * &derivative);
        }
        Ok(acc)
    }
}

/// The operator `v * (lambda*e^D*(1-D) + mu)/(lambda*e^D + mu)` truncated
/// at `J`, built by series division and reinterpreted in `D_var`.
pub fn build_ratio_operator(
    kernel: &crate::fps::KernelSpec,
    vars: &Arc<VarSet>,
    var: &str,
    order: usize,
) -> Result<DOperatorSeries, OperatorError> {
    if kernel.order == 0 {
        return Ok(DOperatorSeries::zero(vars, var, order));
    }
    let ratio = kernel_ratio(kernel, vars, order)?
        .scalar_mul(&GaussRational::from_int(kernel.order as i64));
    DOperatorSeries::from_series(&ratio, var)
}

/// Which trigonometric operator to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigOperatorKind {
    /// `z * tan(z*D) * D = z^2 D^2 + z^4 D^4/3 + 2 z^6 D^6/15 + ...`
    Tan,
    /// `z * cot(z*D) * D = 1 - z^2 D^2/3 - ...` (regular: the `D` factor
    /// cancels the cotangent pole).
    Cot,
}

/// Builds `z*tan(z*D)*D` or `z*cot(z*D)*D` at operator order `J`.
pub fn build_trig_operator(
    kind: TrigOperatorKind,
    vars: &Arc<VarSet>,
    var: &str,
    z: &str,
    order: usize,
) -> Result<DOperatorSeries, OperatorError> {
    let zp = MultiPoly::var(vars, z)?;
    let series = match kind {
        TrigOperatorKind::Tan => {
            // z*t*sin(zt)/cos(zt)
            let sin = sin_poly_t(&zp, order);
            let cos = cos_poly_t(&zp, order);
            series_div(&sin, &cos)?.poly_mul(&zp).mul_tpow(1)
        }
        TrigOperatorKind::Cot => {
            // z*t*cos(zt)/sin(zt) = cos(zt) / [sin(zt)/(z t)], and the
            // bracket has coefficients (-1)^r z^{2r}/(2r+1)!.
            let cos = cos_poly_t(&zp, order);
            let mut sign = GaussRational::one();
            let mut zpow = MultiPoly::one(vars);
            let sinc = TruncSeries::from_fn(vars, order, |n| {
                if n % 2 == 0 {
                    let c = zpow.scalar_mul(&(&sign * &crate::fps::inv_factorial(n + 1)));
                    sign = -&sign;
                    zpow = &(&zpow * &zp) * &zp;
                    c
                } else {
                    MultiPoly::zero(vars)
                }
            });
            &cos * &sinc.invert()?
        }
    };
    DOperatorSeries::from_series(&series, var)
}

/// Checks the induced differential equation
///
/// ```text
/// [x*D + (U'/U)(y,D)*D + v*(lambda*e^D*(1-D)+mu)/(lambda*e^D+mu)
///      -+ z*trig(z*D)*D - n] P_n = 0
/// ```
///
/// with `-tan` for the cosine kind and `+cot` for the sine kind, applied
/// exactly to the member polynomial. `j` is the operator truncation order;
/// it must be at least `deg_x(P_n)` (pass `j = n`).
pub fn verify_ode(spec: &FamilySpec, n: usize, j: usize) -> Result<VerdictReport, OperatorError> {
    let vars = spec.default_varset();
    let member = spec.member_in(&vars, n)?;
    let x = MultiPoly::var(&vars, "x")?;

    let dx = member.diff("x")?;
    // x * D P
    let mut total = &x * &dx;

    // (U'/U)(y, D) * D
    let logd = spec.u.log_derivative(&vars, "y", j)?;
    let logd_op = DOperatorSeries::from_series(&logd.mul_tpow(1), "x")?;
    total = &total + &logd_op.apply(&member)?;

    // A shift factor e^{kt} contributes k*D to the multiplier.
    if let Some(k) = &spec.shift {
        let kp = MultiPoly::var(&vars, k)?;
        total = &total + &(&kp * &dx);
    }

    // v * ratio(D)
    let ratio_op = build_ratio_operator(&spec.kernel, &vars, "x", j)?;
    total = &total + &ratio_op.apply(&member)?;

    match spec.trig {
        Trig::None => {}
        Trig::Cos => {
            let tan_op = build_trig_operator(TrigOperatorKind::Tan, &vars, "x", "z", j)?;
            total = &total - &tan_op.apply(&member)?;
        }
        Trig::Sin => {
            let cot_op = build_trig_operator(TrigOperatorKind::Cot, &vars, "x", "z", j)?;
            total = &total + &cot_op.apply(&member)?;
        }
    }

    total = &total - &member.scalar_mul(&GaussRational::from_int(n as i64));

    let mut check = IdentityCheck::new("ode")
        .params_from(&family_params(spec))
        .param("n", n);
    check.compare(&[n], &total, &MultiPoly::zero(&vars));
    Ok(check.finish())
}

/// Checks the raising relation at the generating-function level: `d/dt` of
/// the family series equals
///
/// ```text
/// [x + U'/U(y,t) + (v/t)*(lambda*e^t*(1-t)+mu)/(lambda*e^t+mu)
///    -+ z*{tan|cot}(z*t)] * F(t)
/// ```
///
/// coefficientwise up to `t^{N-2}`. The `v/t` pole is never materialized:
/// the product `ratio * F` always has valuation at least one (in the unit
/// branch `F` itself carries `t^v` with `v >= 1`; in the classical branch
/// the ratio vanishes at `t = 0`), so the division by `t` is the exact
/// shift [`TruncSeries::div_tpow`]. With `v = 0` the term is absent. Each
/// comparison is scaled by `n!`, so both sides read as family members:
/// index `n+1` compares the multiplier-route member against `d/dt`, which
/// is definitionally the directly-extracted member of index `n+1`.
pub fn verify_raising_gf(spec: &FamilySpec, order: usize) -> Result<VerdictReport, OperatorError> {
    assert!(order >= 2, "need at least two orders to compare");
    let vars = spec.default_varset();
    let x = MultiPoly::var(&vars, "x")?;

    // B = kernel * e^{xt} * U * (shift); F = B * trig(zt).
    let mut b = &apostol_kernel(&spec.kernel, &vars, order)? * &exp_poly_t(&x, order);
    if spec.u != UFactory::One {
        b = &b * &spec.u.series(&vars, "y", order)?;
    }
    let mut multiplier_x = x.clone();
    if let Some(k) = &spec.shift {
        let kp = MultiPoly::var(&vars, k)?;
        b = &b * &exp_poly_t(&kp, order);
        multiplier_x = &multiplier_x + &kp;
    }
    let f = match spec.trig {
        Trig::None => b.clone(),
        Trig::Cos => &b * &cos_poly_t(&MultiPoly::var(&vars, "z")?, order),
        Trig::Sin => &b * &sin_poly_t(&MultiPoly::var(&vars, "z")?, order),
    };

    let lhs = f.derivative_t(); // order N-1

    let mut check = IdentityCheck::new("raising-gf")
        .params_from(&family_params(spec))
        .param("order", order);

    let mut rhs = f.poly_mul(&multiplier_x).truncated(order - 1);
    let logd = spec.u.log_derivative(&vars, "y", order)?;
    rhs = &rhs + &(&logd * &f).truncated(order - 1);

    if spec.kernel.order > 0 {
        let ratio = kernel_ratio(&spec.kernel, &vars, order)?;
        let rf = &ratio * &f;
        match rf.div_tpow(1) {
            Ok(shifted) => {
                rhs = &rhs
                    + &shifted.scalar_mul(&GaussRational::from_int(spec.kernel.order as i64));
            }
            Err(e) => {
                // An uncancelled 1/t: nothing to compare against, so report
                // the structural mismatch with its diagnostic.
                check.structural_failure(&[0], &alloc::format!("{e}"));
                return Ok(check.finish());
            }
        }
    }

    let z_term = |trig_series: TruncSeries| -> TruncSeries {
        let zp = MultiPoly::var(&vars, "z").expect("z present for trig kinds");
        (&trig_series * &b).poly_mul(&zp).truncated(order - 1)
    };
    match spec.trig {
        Trig::None => {}
        // -z*tan(zt) * F = -z*sin(zt) * B
        Trig::Cos => rhs = &rhs - &z_term(sin_poly_t(&MultiPoly::var(&vars, "z")?, order)),
        // +z*cot(zt) * F = +z*cos(zt) * B
        Trig::Sin => rhs = &rhs + &z_term(cos_poly_t(&MultiPoly::var(&vars, "z")?, order)),
    }

    for i in 0..=order - 2 {
        let scale = crate::exactq::factorial_q(i);
        check.compare(
            &[i + 1],
            &lhs.coeff(i).scalar_mul(&scale),
            &rhs.coeff(i).scalar_mul(&scale),
        );
    }
    Ok(check.finish())
}

/// Checks the lowering relation `d P_n / dx = n * P_{n-1}` exactly.
pub fn verify_lowering(spec: &FamilySpec, n: usize) -> Result<VerdictReport, OperatorError> {
    assert!(n >= 1, "lowering needs n >= 1");
    let vars = spec.default_varset();
    let pn = spec.member_in(&vars, n)?;
    let pm = spec.member_in(&vars, n - 1)?;
    let lhs = pn.diff("x")?;
    let rhs = pm.scalar_mul(&GaussRational::from_int(n as i64));
    let mut check = IdentityCheck::new("lowering")
        .params_from(&family_params(spec))
        .param("n", n);
    check.compare(&[n], &lhs, &rhs);
    Ok(check.finish())
}
