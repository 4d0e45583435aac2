//! Sparse multivariate polynomials over Gaussian rationals.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::GaussRational;

/// Errors from polynomial construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Binary operation between polynomials over different variable sets.
    RingMismatch,
    /// A variable name not present in the polynomial's variable set.
    UnknownVariable(String),
    /// Evaluation assignment missing a variable that occurs in the polynomial.
    UnboundVariable(String),
    /// Duplicate name while building a variable set.
    DuplicateVariable(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::RingMismatch => write!(f, "polynomials belong to different variable sets"),
            PolyError::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            PolyError::UnboundVariable(v) => write!(f, "assignment does not bind variable `{v}`"),
            PolyError::DuplicateVariable(v) => write!(f, "duplicate variable `{v}`"),
        }
    }
}

/// An ordered set of variable names. The order is fixed for the lifetime of
/// a polynomial ring; exponent vectors index into it.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// Exponent vector, ordered graded-lexicographically so that map iteration
/// (and therefore printing) is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    fn constant(n_vars: usize) -> Self {
        Monomial(alloc::vec![0; n_vars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over [`GaussRational`] in a fixed
/// [`VarSet`]. Zero coefficients are never stored, so two polynomials over
/// the same variable set are equal iff their term maps are identical.
///
/// Values are immutable after construction. The arithmetic operators panic
/// on a variable-set mismatch; use the `checked_*` methods where the
/// mismatch must surface as an error.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, GaussRational>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Self {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, GaussRational::one())
    }

    pub fn constant(vars: &Arc<VarSet>, value: GaussRational) -> Self {
        let mut p = Self::zero(vars);
        if !value.is_zero() {
            p.terms.insert(Monomial::constant(vars.len()), value);
        }
        p
    }

    /// The polynomial `name^1`.
    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self, PolyError> {
        Self::var_pow(vars, name, 1)
    }

    /// The polynomial `name^pow`.
    pub fn var_pow(vars: &Arc<VarSet>, name: &str, pow: u32) -> Result<Self, PolyError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = alloc::vec![0; vars.len()];
        exps[idx] = pow;
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial(exps), GaussRational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponent vector, coefficient)` pairs.
    /// Repeated monomials accumulate; zero coefficients are dropped.
    pub fn from_terms<I>(vars: &Arc<VarSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, GaussRational)>,
    {
        let mut p = Self::zero(vars);
        for (exps, coeff) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(Monomial(exps), coeff);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    /// The value of a degree-0 polynomial; `None` when any term has a
    /// variable in it.
    pub fn constant_value(&self) -> Option<GaussRational> {
        if self.terms.is_empty() {
            return Some(GaussRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_constant() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> GaussRational {
        self.terms
            .get(&Monomial::constant(self.vars.len()))
            .cloned()
            .unwrap_or_else(GaussRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Highest exponent of `name` across all terms.
    pub fn degree_in(&self, name: &str) -> Result<u32, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    fn add_term(&mut self, mono: Monomial, coeff: GaussRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(c) => {
                let sum = &*c + &coeff;
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *c = sum;
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.checked_add(&-other)
    }

    /// Exact product. The term count is at most `|a| * |b|`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scalar_mul(&self, s: &GaussRational) -> Self {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        Self {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact partial derivative with respect to `name`.
    pub fn diff(&self, name: &str) -> Result<Self, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = e - 1;
            out.add_term(Monomial(exps), c * &GaussRational::from_int(e as i64));
        }
        Ok(out)
    }

    /// Antiderivative with respect to `name`, with zero constant of
    /// integration.
    pub fn integrate(&self, name: &str) -> Result<Self, PolyError> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut exps = m.0.clone();
            exps[idx] = e + 1;
            out.add_term(
                Monomial(exps),
                c / &GaussRational::from_int((e + 1) as i64),
            );
        }
        Ok(out)
    }

    /// Exact evaluation. The assignment must bind every variable that
    /// occurs with a positive exponent.
    pub fn eval(
        &self,
        assignment: &BTreeMap<&str, GaussRational>,
    ) -> Result<GaussRational, PolyError> {
        let mut values: Vec<Option<&GaussRational>> = alloc::vec![None; self.vars.len()];
        for (name, value) in assignment {
            if let Some(idx) = self.vars.index_of(name) {
                values[idx] = Some(value);
            }
        }
        let mut total = GaussRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values[idx].ok_or_else(|| {
                    PolyError::UnboundVariable(self.vars.name(idx).to_string())
                })?;
                term = &term * &v.pow(e);
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Substitutes `replacement` for every occurrence of `name`.
    pub fn subst(&self, name: &str, replacement: &Self) -> Result<Self, PolyError> {
        if !self.same_ring(replacement) {
            return Err(PolyError::RingMismatch);
        }
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        // Cache powers of the replacement up to the highest exponent used.
        let max_e = self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0) as usize;
        let mut powers = Vec::with_capacity(max_e + 1);
        powers.push(Self::one(&self.vars));
        for e in 1..=max_e {
            powers.push(&powers[e - 1] * replacement);
        }
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut exps = m.0.clone();
            exps[idx] = 0;
            let mut rest = Self::zero(&self.vars);
            rest.terms.insert(Monomial(exps), c.clone());
            out = &out + &(&rest * &powers[e as usize]);
        }
        Ok(out)
    }

    /// Substitutes a scalar value for `name`.
    pub fn subst_value(&self, name: &str, value: &GaussRational) -> Result<Self, PolyError> {
        self.subst(name, &Self::constant(&self.vars, value.clone()))
    }

    /// Splits every coefficient into real and imaginary parts, returning
    /// `(re, im)` with real coefficients.
    pub fn split_re_im(&self) -> (Self, Self) {
        let mut re = Self::zero(&self.vars);
        let mut im = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            re.add_term(m.clone(), GaussRational::from_rational(c.re().clone()));
            im.add_term(m.clone(), GaussRational::from_rational(c.im().clone()));
        }
        (re, im)
    }

    /// True when no coefficient has an imaginary part.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussRational::is_real)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("variable set mismatch in +")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("variable set mismatch in -")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("variable set mismatch in *")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical text: terms in descending graded-lexicographic order,
    /// `p/q` fractions, `i` for the imaginary unit, `*` between coefficient
    /// and variables, `^` for exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign_negative, mag) = displayed_sign(c);
            if pos == 0 {
                if sign_negative {
                    write!(f, "-")?;
                }
            } else if sign_negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, m, &mag, &self.vars)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Factors a leading minus out of purely real or purely imaginary
/// coefficients; mixed complex coefficients keep their sign inside.
fn displayed_sign(c: &GaussRational) -> (bool, GaussRational) {
    use num_traits::Signed;
    let re_neg = c.re().is_negative();
    let im_neg = c.im().is_negative();
    if (c.im().is_zero() && re_neg) || (c.re().is_zero() && im_neg) {
        (true, -c)
    } else {
        (false, c.clone())
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    m: &Monomial,
    coeff: &GaussRational,
    vars: &VarSet,
) -> fmt::Result {
    let is_const = m.is_constant();
    let coeff_text = coeff.to_canonical_string();
    // Mixed complex coefficients get parentheses so the term reads back
    // unambiguously.
    let needs_parens = !coeff.re().is_zero() && !coeff.im().is_zero();
    if is_const {
        if needs_parens {
            return write!(f, "({coeff_text})");
        }
        return write!(f, "{coeff_text}");
    }
    if needs_parens {
        write!(f, "({coeff_text})*")?;
    } else if !coeff.is_one() {
        write!(f, "{coeff_text}*")?;
    }
    let mut first = true;
    for (idx, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", vars.name(idx))?;
        } else {
            write!(f, "{}^{}", vars.name(idx), e)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> GaussRational {
        GaussRational::from_ratio(n, d)
    }

    fn xyz() -> Arc<VarSet> {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn varset_rejects_duplicates() {
        assert_eq!(
            VarSet::new(["x", "y", "x"]).unwrap_err(),
            PolyError::DuplicateVariable("x".into())
        );
    }

    #[test]
    fn difference_of_squares() {
        let vars = xyz();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let half = MultiPoly::constant(&vars, q(1, 2));
        let a = &x - &half;
        let b = &x + &half;
        let expect = &(&x * &x) - &MultiPoly::constant(&vars, q(1, 4));
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn multiplicative_identity() {
        let vars = xyz();
        let x = MultiPoly::var(&vars, "x").unwrap();
        let y = MultiPoly::var(&vars, "y").unwrap();
        let p = &(&x * &y) + &MultiPoly::constant(&vars, q(-7, 3));
        assert_eq!(&p * &MultiPoly::one(&vars), p);
    }

    #[test]
    fn schoolbook_product_oracle() {
        // (x^3 - 3x y^2) * (3 x^2 y - y^3), expanded term by term by hand:
        // 3x^5y - x^3y^3 - 9x^3y^3 + 3xy^5 = 3x^5y - 10x^3y^3 + 3xy^5
        let vars = xyz();
        let a = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![3, 0, 0], q(1, 1)),
                (alloc::vec![1, 2, 0], q(-3, 1)),
            ],
        );
        let b = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![2, 1, 0], q(3, 1)),
                (alloc::vec![0, 3, 0], q(-1, 1)),
            ],
        );
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![5, 1, 0], q(3, 1)),
                (alloc::vec![3, 3, 0], q(-10, 1)),
                (alloc::vec![1, 5, 0], q(3, 1)),
            ],
        );
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = MultiPoly::one(&xyz());
        let b = MultiPoly::one(&VarSet::new(["u"]).unwrap());
        assert_eq!(a.checked_mul(&b).unwrap_err(), PolyError::RingMismatch);
        assert_eq!(a.checked_add(&b).unwrap_err(), PolyError::RingMismatch);
    }

    /// x^2 - x + 1/6 - z^2 over (x, y, z).
    fn worked_poly(vars: &Arc<VarSet>) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            [
                (alloc::vec![2, 0, 0], q(1, 1)),
                (alloc::vec![1, 0, 0], q(-1, 1)),
                (alloc::vec![0, 0, 0], q(1, 6)),
                (alloc::vec![0, 0, 2], q(-1, 1)),
            ],
        )
    }

    #[test]
    fn eval_examples() {
        let vars = xyz();
        let p = worked_poly(&vars);
        let at = |x: GaussRational, z: GaussRational| {
            let mut m = BTreeMap::new();
            m.insert("x", x);
            m.insert("z", z);
            p.eval(&m).unwrap()
        };
        // Bernoulli polynomial value at 0 with z=0.
        assert_eq!(at(q(0, 1), q(0, 1)), q(1, 6));

        // All-zero assignment picks out the constant term.
        let all_zero: BTreeMap<&str, GaussRational> =
            [("x", q(0, 1)), ("y", q(0, 1)), ("z", q(0, 1))].into();
        assert_eq!(p.eval(&all_zero).unwrap(), p.constant_term());

        // (x^3 - 3 x y^2) at x=2, y=1.
        let cubic = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![3, 0, 0], q(1, 1)),
                (alloc::vec![1, 2, 0], q(-3, 1)),
            ],
        );
        let m: BTreeMap<&str, GaussRational> = [("x", q(2, 1)), ("y", q(1, 1))].into();
        assert_eq!(cubic.eval(&m).unwrap(), q(2, 1));
    }

    #[test]
    fn eval_unbound_variable_errors() {
        let vars = xyz();
        let p = worked_poly(&vars);
        let m: BTreeMap<&str, GaussRational> = [("x", q(1, 1))].into();
        assert_eq!(
            p.eval(&m).unwrap_err(),
            PolyError::UnboundVariable("z".into())
        );
    }

    #[test]
    fn diff_examples() {
        let vars = xyz();
        let p = worked_poly(&vars);
        let dx = p.diff("x").unwrap();
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![1, 0, 0], q(2, 1)),
                (alloc::vec![0, 0, 0], q(-1, 1)),
            ],
        );
        assert_eq!(dx, expect);

        let dz = p.diff("z").unwrap();
        let expect_z = MultiPoly::from_terms(&vars, [(alloc::vec![0, 0, 1], q(-2, 1))]);
        assert_eq!(dz, expect_z);

        let c = MultiPoly::constant(&vars, q(9, 7));
        assert!(c.diff("x").unwrap().is_zero());

        assert_eq!(
            p.diff("t").unwrap_err(),
            PolyError::UnknownVariable("t".into())
        );
    }

    #[test]
    fn subst_and_partial_eval() {
        let vars = xyz();
        let p = worked_poly(&vars);
        let at_z0 = p.subst_value("z", &q(0, 1)).unwrap();
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![2, 0, 0], q(1, 1)),
                (alloc::vec![1, 0, 0], q(-1, 1)),
                (alloc::vec![0, 0, 0], q(1, 6)),
            ],
        );
        assert_eq!(at_z0, expect);

        // Substituting z -> x turns -z^2 into -x^2.
        let x = MultiPoly::var(&vars, "x").unwrap();
        let swapped = p.subst("z", &x).unwrap();
        let expect = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![1, 0, 0], q(-1, 1)),
                (alloc::vec![0, 0, 0], q(1, 6)),
            ],
        );
        assert_eq!(swapped, expect);
    }

    #[test]
    fn integrate_inverts_diff() {
        let vars = xyz();
        let p = worked_poly(&vars);
        let int = p.integrate("x").unwrap();
        assert_eq!(int.diff("x").unwrap(), p);
    }

    #[test]
    fn canonical_display() {
        let vars = xyz();
        let p = worked_poly(&vars);
        // Descending graded-lex over (x, y, z): x^2, then z^2, then x, then 1/6.
        assert_eq!(p.to_string(), "x^2 - z^2 - x + 1/6");
        assert_eq!(MultiPoly::zero(&vars).to_string(), "0");

        let i = GaussRational::i();
        let mixed = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![1, 0, 0], &q(1, 2) + &i),
                (alloc::vec![0, 0, 1], &q(0, 1) - &i),
            ],
        );
        assert_eq!(mixed.to_string(), "(1/2+i)*x - i*z");
    }

    #[test]
    fn split_re_im_round_trips() {
        let vars = xyz();
        let i = GaussRational::i();
        let p = MultiPoly::from_terms(
            &vars,
            [
                (alloc::vec![2, 0, 0], &q(1, 3) + &(&q(2, 1) * &i)),
                (alloc::vec![0, 1, 0], q(-4, 1)),
            ],
        );
        let (re, im) = p.split_re_im();
        assert!(re.is_real() && im.is_real());
        let i_poly = MultiPoly::constant(&vars, i);
        assert_eq!(&re + &(&i_poly * &im), p);
    }
}
