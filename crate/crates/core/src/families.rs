//! Named polynomial families and their generating-function builders.
//!
//! Every family here is a product of at most five factors:
//!
//! ```text
//! (t/(lambda*e^t + mu))^v  *  e^{xt}  *  U(y,t)  *  {cos|sin}(zt)  *  e^{kt}
//! ```
//!
//! where `U(y,t)` is a pluggable unit series (constant one, Gould--Hopper,
//! Hermite--Appell, Miller--Lee, or truncated exponential). Members are
//! extracted as `n! * a_n`; builders use two guard coefficients beyond the
//! highest requested index so off-by-one index bugs surface as mismatches
//! rather than silent truncation.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::exactq::{binomial_q, GaussRational, MultiPoly, PolyError, VarSet};
use crate::fps::{
    apostol_kernel, cos_poly_t, exp_poly_t, lambda_exp_plus_mu, series_div, sin_poly_t,
    KernelSpec, SeriesError, TruncSeries,
};

/// Guard coefficients kept beyond the highest extracted index.
const GUARD: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyError {
    Series(SeriesError),
    Poly(PolyError),
    /// The closed-form Apostol--Bernoulli numbers have a pole at `lambda = 1`.
    PoleAtLambdaOne,
    /// Closed forms exist only for indices 0..=5.
    IndexOutOfRange { index: usize, max: usize },
    InvalidParam(&'static str),
    UnknownFactory(String),
}

impl From<SeriesError> for FamilyError {
    fn from(e: SeriesError) -> Self {
        FamilyError::Series(e)
    }
}

impl From<PolyError> for FamilyError {
    fn from(e: PolyError) -> Self {
        FamilyError::Poly(e)
    }
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::Series(e) => write!(f, "{e}"),
            FamilyError::Poly(e) => write!(f, "{e}"),
            FamilyError::PoleAtLambdaOne => {
                write!(f, "closed form has a pole at lambda = 1; use the Bernoulli branch")
            }
            FamilyError::IndexOutOfRange { index, max } => {
                write!(f, "index {index} out of range (closed forms exist for 0..={max})")
            }
            FamilyError::InvalidParam(msg) => write!(f, "invalid parameter: {msg}"),
            FamilyError::UnknownFactory(name) => write!(f, "unknown factory `{name}`"),
        }
    }
}

/// The Appell prefactor `A(t)` of the Hermite--Appell factory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AppellKind {
    /// `A(t) = 1` (plain Hermite--Kampe de Feriet).
    One,
    /// `A(t) = 2/(e^t + 1)` (the Euler-polynomial kernel).
    EulerKernel,
}

/// Builder for the unit series `U(y,t)` of a 2-variable general polynomial
/// family. `U_0(y)` is a nonzero scalar for every variant, so the series is
/// always invertible.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum UFactory {
    One,
    /// `e^{y t^m}`.
    GouldHopper { m: u32 },
    /// `A(t) * e^{y t^2}`.
    HermiteAppell { appell: AppellKind },
    /// `(1-t)^{m+1}`, as the source operators use it; the conventional
    /// reciprocal `1/(1-t)^{m+1}` sits behind the explicit flag.
    MillerLee { m: u32, reciprocal: bool },
    /// `1/(1 - y t^m)`.
    TruncExp { m: u32 },
}

impl UFactory {
    pub fn gould_hopper(m: u32) -> Result<Self, FamilyError> {
        if m == 0 {
            return Err(FamilyError::InvalidParam("gould-hopper requires m >= 1"));
        }
        Ok(UFactory::GouldHopper { m })
    }

    pub fn trunc_exp(m: u32) -> Result<Self, FamilyError> {
        if m == 0 {
            return Err(FamilyError::InvalidParam("trunc-exp requires m >= 1"));
        }
        Ok(UFactory::TruncExp { m })
    }

    pub fn miller_lee(m: u32) -> Self {
        UFactory::MillerLee {
            m,
            reciprocal: false,
        }
    }

    pub fn hermite_appell(appell: AppellKind) -> Self {
        UFactory::HermiteAppell { appell }
    }

    /// Factory lookup by CLI-facing name.
    pub fn by_name(name: &str, m: Option<u32>) -> Result<Self, FamilyError> {
        match name {
            "one" => Ok(UFactory::One),
            "gould-hopper" => Self::gould_hopper(m.unwrap_or(2)),
            "hermite-appell" => Ok(UFactory::HermiteAppell {
                appell: AppellKind::One,
            }),
            "hermite-appell-euler" => Ok(UFactory::HermiteAppell {
                appell: AppellKind::EulerKernel,
            }),
            "miller-lee" => Ok(Self::miller_lee(m.unwrap_or(1))),
            "miller-lee-reciprocal" => Ok(UFactory::MillerLee {
                m: m.unwrap_or(1),
                reciprocal: true,
            }),
            "trunc-exp" => Self::trunc_exp(m.unwrap_or(2)),
            other => Err(FamilyError::UnknownFactory(other.to_string())),
        }
    }

    /// Canonical label used in verdict parameters and fault keys.
    pub fn label(&self) -> String {
        match self {
            UFactory::One => "one".to_string(),
            UFactory::GouldHopper { m } => alloc::format!("gould-hopper({m})"),
            UFactory::HermiteAppell {
                appell: AppellKind::One,
            } => "hermite-appell(1)".to_string(),
            UFactory::HermiteAppell {
                appell: AppellKind::EulerKernel,
            } => "hermite-appell(euler)".to_string(),
            UFactory::MillerLee { m, reciprocal } => {
                if *reciprocal {
                    alloc::format!("miller-lee-reciprocal({m})")
                } else {
                    alloc::format!("miller-lee({m})")
                }
            }
            UFactory::TruncExp { m } => alloc::format!("trunc-exp({m})"),
        }
    }

    /// Whether the factory's series actually involves the symbol `y`.
    pub fn uses_y(&self) -> bool {
        !matches!(self, UFactory::One | UFactory::MillerLee { .. })
    }

    /// The five standard variants every sweep exercises.
    pub fn standard_five() -> Vec<UFactory> {
        alloc::vec![
            UFactory::One,
            UFactory::GouldHopper { m: 2 },
            UFactory::HermiteAppell {
                appell: AppellKind::One,
            },
            UFactory::miller_lee(1),
            UFactory::TruncExp { m: 2 },
        ]
    }

    /// `U(y,t)` truncated at `order`.
    pub fn series(
        &self,
        vars: &Arc<VarSet>,
        y: &str,
        order: usize,
    ) -> Result<TruncSeries, FamilyError> {
        match self {
            UFactory::One => Ok(TruncSeries::one(vars, order)),
            UFactory::GouldHopper { m } => {
                let yp = MultiPoly::var(vars, y)?;
                let arg = TruncSeries::monomial_t(&yp, *m as usize, order);
                Ok(arg.exp()?)
            }
            UFactory::HermiteAppell { appell } => {
                let yp = MultiPoly::var(vars, y)?;
                let hermite = TruncSeries::monomial_t(&yp, 2, order).exp()?;
                match appell {
                    AppellKind::One => Ok(hermite),
                    AppellKind::EulerKernel => {
                        let a = euler_kernel(vars, order)?;
                        Ok(&a * &hermite)
                    }
                }
            }
            UFactory::MillerLee { m, reciprocal } => {
                let base = one_minus_t(vars, order).pow(m + 1);
                if *reciprocal {
                    Ok(base.invert()?)
                } else {
                    Ok(base)
                }
            }
            UFactory::TruncExp { m } => {
                let yp = MultiPoly::var(vars, y)?;
                let den = &TruncSeries::one(vars, order)
                    - &TruncSeries::monomial_t(&yp, *m as usize, order);
                Ok(den.invert()?)
            }
        }
    }

    /// The coefficient polynomial `U_r(y) = r! * a_r`.
    pub fn u_poly(
        &self,
        vars: &Arc<VarSet>,
        y: &str,
        r: usize,
    ) -> Result<MultiPoly, FamilyError> {
        Ok(self.series(vars, y, r)?.extract_family(r)?)
    }

    /// The logarithmic derivative `U'(y,t)/U(y,t)` as a `t`-series, from the
    /// closed forms each factory admits.
    pub fn log_derivative(
        &self,
        vars: &Arc<VarSet>,
        y: &str,
        order: usize,
    ) -> Result<TruncSeries, FamilyError> {
        match self {
            UFactory::One => Ok(TruncSeries::zero(vars, order)),
            UFactory::GouldHopper { m } => {
                // m * y * t^{m-1}
                let p = MultiPoly::var(vars, y)?.scalar_mul(&GaussRational::from_int(*m as i64));
                Ok(TruncSeries::monomial_t(&p, (*m - 1) as usize, order))
            }
            UFactory::HermiteAppell { appell } => {
                let two_y_t = TruncSeries::monomial_t(
                    &MultiPoly::var(vars, y)?.scalar_mul(&GaussRational::from_int(2)),
                    1,
                    order,
                );
                match appell {
                    AppellKind::One => Ok(two_y_t),
                    AppellKind::EulerKernel => {
                        // A'/A = -e^t/(e^t + 1)
                        let e = crate::fps::exp_scalar_t(vars, &GaussRational::one(), order);
                        let den = &e + &TruncSeries::one(vars, order);
                        let ratio = series_div(&(-&e), &den)?;
                        Ok(&ratio + &two_y_t)
                    }
                }
            }
            UFactory::MillerLee { m, reciprocal } => {
                // -(m+1)/(1-t), sign flipped for the reciprocal family.
                let scale = if *reciprocal {
                    GaussRational::from_int((*m + 1) as i64)
                } else {
                    GaussRational::from_int(-((*m + 1) as i64))
                };
                Ok(one_minus_t(vars, order).invert()?.scalar_mul(&scale))
            }
            UFactory::TruncExp { m } => {
                // m * y * t^{m-1} / (1 - y t^m)
                let yp = MultiPoly::var(vars, y)?;
                let num = TruncSeries::monomial_t(
                    &yp.scalar_mul(&GaussRational::from_int(*m as i64)),
                    (*m - 1) as usize,
                    order,
                );
                let den = &TruncSeries::one(vars, order)
                    - &TruncSeries::monomial_t(&yp, *m as usize, order);
                Ok(&num * &den.invert()?)
            }
        }
    }
}

fn one_minus_t(vars: &Arc<VarSet>, order: usize) -> TruncSeries {
    &TruncSeries::one(vars, order) - &TruncSeries::monomial_t(&MultiPoly::one(vars), 1, order)
}

/// `2/(e^t + 1)`.
fn euler_kernel(vars: &Arc<VarSet>, order: usize) -> Result<TruncSeries, FamilyError> {
    let e = crate::fps::exp_scalar_t(vars, &GaussRational::one(), order);
    let den = &e + &TruncSeries::one(vars, order);
    Ok(den.invert()?.scalar_mul(&GaussRational::from_int(2)))
}

/// Which trigonometric factor multiplies the generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Trig {
    None,
    Cos,
    Sin,
}

impl Trig {
    pub fn label(&self) -> &'static str {
        match self {
            Trig::None => "plain",
            Trig::Cos => "c",
            Trig::Sin => "s",
        }
    }
}

/// A fully determined generating function
/// `(t/(lambda*e^t + mu))^v * e^{xt} * U(y,t) * trig(zt) * e^{kt}`.
///
/// The exponential symbol is always `x`; `y` appears iff the factory uses
/// it, `z` iff `trig != None`, and the optional shift symbol contributes
/// the trailing exponential factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub kernel: KernelSpec,
    pub u: UFactory,
    pub trig: Trig,
    pub shift: Option<String>,
}

impl FamilySpec {
    pub fn new(kernel: KernelSpec, u: UFactory, trig: Trig) -> Self {
        Self {
            kernel,
            u,
            trig,
            shift: None,
        }
    }

    pub fn with_shift(mut self, symbol: impl Into<String>) -> Self {
        self.shift = Some(symbol.into());
        self
    }

    /// The variables this family's members can mention, in canonical order.
    pub fn default_varset(&self) -> Arc<VarSet> {
        let mut names: Vec<String> = alloc::vec!["x".to_string()];
        if self.u.uses_y() {
            names.push("y".to_string());
        }
        if self.trig != Trig::None {
            names.push("z".to_string());
        }
        if let Some(k) = &self.shift {
            names.push(k.clone());
        }
        VarSet::new(names).expect("distinct names")
    }

    /// The generating function truncated at `order`, over an explicit
    /// variable set (which must contain every symbol the spec involves).
    pub fn series(&self, vars: &Arc<VarSet>, order: usize) -> Result<TruncSeries, FamilyError> {
        let mut s = apostol_kernel(&self.kernel, vars, order)?;
        let x = MultiPoly::var(vars, "x")?;
        s = &s * &exp_poly_t(&x, order);
        if self.u != UFactory::One {
            s = &s * &self.u.series(vars, "y", order)?;
        }
        match self.trig {
            Trig::None => {}
            Trig::Cos => {
                let z = MultiPoly::var(vars, "z")?;
                s = &s * &cos_poly_t(&z, order);
            }
            Trig::Sin => {
                let z = MultiPoly::var(vars, "z")?;
                s = &s * &sin_poly_t(&z, order);
            }
        }
        if let Some(k) = &self.shift {
            let kp = MultiPoly::var(vars, k)?;
            s = &s * &exp_poly_t(&kp, order);
        }
        Ok(s)
    }

    /// The `n`-th member over an explicit variable set.
    pub fn member_in(&self, vars: &Arc<VarSet>, n: usize) -> Result<MultiPoly, FamilyError> {
        Ok(self.series(vars, n + GUARD)?.extract_family(n)?)
    }

    /// The `n`-th member over the family's own variable set.
    pub fn member(&self, n: usize) -> Result<MultiPoly, FamilyError> {
        self.member_in(&self.default_varset(), n)
    }
}

/// The classical Bernoulli number `B_n`, from the kernel at
/// `(v, lambda, mu) = (1, 1, -1)`.
pub fn bernoulli_number(n: usize) -> GaussRational {
    let vars = VarSet::new(["x"]).expect("one name");
    let spec =
        KernelSpec::new(1, GaussRational::one(), GaussRational::from_int(-1)).expect("valid");
    let series = apostol_kernel(&spec, &vars, n).expect("kernel builds");
    series
        .extract_family(n)
        .expect("n <= order")
        .constant_value()
        .expect("x-free series")
}

/// The classical Bernoulli polynomial `B_n(x)` over the variable set `[x]`.
pub fn bernoulli_polynomial(n: usize) -> MultiPoly {
    let spec =
        KernelSpec::new(1, GaussRational::one(), GaussRational::from_int(-1)).expect("valid");
    FamilySpec::new(spec, UFactory::One, Trig::None)
        .member(n)
        .expect("builds")
}

/// Closed form of the `n`-th Apostol--Bernoulli number, `n <= 5`.
///
/// For `n >= 2` the value is `scale * lambda * inner(lambda) / (lambda-1)^n`
/// with `inner` stored by ascending coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApostolClosedForm {
    Zero,
    /// `1/(lambda - 1)`.
    Reciprocal,
    Factored { scale: i64, inner: &'static [i64] },
}

pub const APOSTOL_CLOSED_FORMS: [ApostolClosedForm; 6] = [
    ApostolClosedForm::Zero,
    ApostolClosedForm::Reciprocal,
    ApostolClosedForm::Factored {
        scale: -2,
        inner: &[1],
    },
    ApostolClosedForm::Factored {
        scale: 3,
        inner: &[1, 1],
    },
    ApostolClosedForm::Factored {
        scale: -4,
        inner: &[1, 4, 1],
    },
    ApostolClosedForm::Factored {
        scale: 5,
        inner: &[1, 11, 11, 1],
    },
];

/// Evaluates the closed form of the Apostol--Bernoulli number of index
/// `n <= 5` at a rational `lambda != 1`.
pub fn apostol_bernoulli_number_closed(
    n: usize,
    lambda: &GaussRational,
) -> Result<GaussRational, FamilyError> {
    let form = APOSTOL_CLOSED_FORMS
        .get(n)
        .ok_or(FamilyError::IndexOutOfRange { index: n, max: 5 })?;
    let one = GaussRational::one();
    if *lambda == one {
        return Err(FamilyError::PoleAtLambdaOne);
    }
    let den = (lambda - &one).pow(n as u32);
    Ok(match form {
        ApostolClosedForm::Zero => GaussRational::zero(),
        ApostolClosedForm::Reciprocal => &one / &den,
        ApostolClosedForm::Factored { scale, inner } => {
            let mut inner_val = GaussRational::zero();
            let mut pow = GaussRational::one();
            for &c in *inner {
                inner_val = &inner_val + &(&GaussRational::from_int(c) * &pow);
                pow = &pow * lambda;
            }
            let num = &(&GaussRational::from_int(*scale) * lambda) * &inner_val;
            &num / &den
        }
    })
}

/// The closed binomial sums behind `e^{xt} cos(yt)` and `e^{xt} sin(yt)`:
///
/// ```text
/// C_n(x,y) = sum_{r<=n/2}     (-1)^r C(n,2r)   x^{n-2r}   y^{2r}
/// S_n(x,y) = sum_{r<=(n-1)/2} (-1)^r C(n,2r+1) x^{n-2r-1} y^{2r+1}
/// ```
///
/// Built directly from the binomial formulas, not via series, so they can
/// serve as an independent oracle for the series route.
pub fn cs_closed_form_in(
    vars: &Arc<VarSet>,
    x: &str,
    y: &str,
    n: usize,
) -> Result<(MultiPoly, MultiPoly), FamilyError> {
    let mut c = MultiPoly::zero(vars);
    let mut s = MultiPoly::zero(vars);
    let mut sign = GaussRational::one();
    for r in 0..=(n / 2) {
        let xc = MultiPoly::var_pow(vars, x, (n - 2 * r) as u32)?;
        let yc = MultiPoly::var_pow(vars, y, (2 * r) as u32)?;
        let coeff = &sign * &binomial_q(n, 2 * r);
        c = &c + &(&xc * &yc).scalar_mul(&coeff);
        if 2 * r + 1 <= n {
            let xs = MultiPoly::var_pow(vars, x, (n - 2 * r - 1) as u32)?;
            let ys = MultiPoly::var_pow(vars, y, (2 * r + 1) as u32)?;
            let coeff = &sign * &binomial_q(n, 2 * r + 1);
            s = &s + &(&xs * &ys).scalar_mul(&coeff);
        }
        sign = -sign;
    }
    Ok((c, s))
}

/// `cs_closed_form_in` over the default variable set `[x, y]`.
pub fn cs_closed_form(n: usize) -> (MultiPoly, MultiPoly) {
    let vars = VarSet::new(["x", "y"]).expect("distinct");
    cs_closed_form_in(&vars, "x", "y", n).expect("known symbols")
}

/// Generating function of the generalized Apostol--Genocchi polynomials,
/// `(2t/(lambda*e^t + mu))^v * e^{xt} = 2^v * kernel^v * e^{xt}`.
pub fn genocchi_series(
    kernel: &KernelSpec,
    vars: &Arc<VarSet>,
    x: &str,
    order: usize,
) -> Result<TruncSeries, FamilyError> {
    let base = apostol_kernel(kernel, vars, order)?;
    let two_v = GaussRational::from_int(2).pow(kernel.order);
    let xp = MultiPoly::var(vars, x)?;
    Ok((&base * &exp_poly_t(&xp, order)).scalar_mul(&two_v))
}

/// The `n`-th generalized Apostol--Genocchi polynomial in `x`.
pub fn apostol_genocchi(
    n: usize,
    v: u32,
    lambda: GaussRational,
    mu: GaussRational,
) -> Result<MultiPoly, FamilyError> {
    let kernel = KernelSpec::new(v, lambda, mu)?;
    let vars = VarSet::new(["x"]).expect("one name");
    Ok(genocchi_series(&kernel, &vars, "x", n + GUARD)?.extract_family(n)?)
}

/// The ratio `(lambda*e^t*(1-t) + mu)/(lambda*e^t + mu)` as a `t`-series.
///
/// Regular in both branches: when `lambda + mu != 0` the denominator is a
/// unit; when `lambda + mu = 0` numerator and denominator both vanish at
/// `t = 0` and the denominator's valuation (one) cancels, leaving a series
/// with zero constant term.
pub fn kernel_ratio(
    kernel: &KernelSpec,
    vars: &Arc<VarSet>,
    order: usize,
) -> Result<TruncSeries, FamilyError> {
    let guard = order + 1;
    let den = lambda_exp_plus_mu(vars, &kernel.lambda, &kernel.mu, guard);
    // lambda * e^t * (1 - t) + mu
    let e = crate::fps::exp_scalar_t(vars, &GaussRational::one(), guard);
    let e_shift = e.mul_tpow(1);
    let num = &(&e - &e_shift).scalar_mul(&kernel.lambda)
        + &TruncSeries::constant(vars, kernel.mu.clone(), guard);
    let ratio = series_div(&num, &den)?;
    Ok(ratio.truncated(order))
}
