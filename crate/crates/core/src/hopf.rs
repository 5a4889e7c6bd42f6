//! An operator representation on polynomials with truncated series
//! coefficients: generator images, commutation-relation checks, the central
//! element, and a two-route validation of the evaluated R-matrix action.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{binom_int, rat_int, Rational, TruncSeries};

/// A polynomial in one or two variables with [`TruncSeries`] coefficients.
/// Canonical: zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct PolyFn {
    vars: usize,
    order: usize,
    coeffs: BTreeMap<(u32, u32), TruncSeries>,
}

impl PolyFn {
    pub fn zero(vars: usize, order: usize) -> Self {
        assert!(vars == 1 || vars == 2, "PolyFn supports 1 or 2 variables");
        PolyFn { vars, order, coeffs: BTreeMap::new() }
    }

    pub fn monomial(vars: usize, order: usize, exps: (u32, u32), coeff: TruncSeries) -> Self {
        let mut f = Self::zero(vars, order);
        assert!(vars == 2 || exps.1 == 0, "second exponent must be 0 in one variable");
        f.add_term(exps, coeff);
        f
    }

    /// `z^k` in one variable.
    pub fn z_pow(k: u32, order: usize) -> Self {
        Self::monomial(1, order, (k, 0), TruncSeries::one(order))
    }

    /// `z0^p z1^q` in two variables.
    pub fn z0_z1_pow(p: u32, q: u32, order: usize) -> Self {
        Self::monomial(2, order, (p, q), TruncSeries::one(order))
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exps: (u32, u32)) -> TruncSeries {
        self.coeffs.get(&exps).cloned().unwrap_or_else(|| TruncSeries::zero(self.order))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &TruncSeries)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, exps: (u32, u32), coeff: TruncSeries) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, -c);
        }
        out
    }

    pub fn scale(&self, s: &TruncSeries) -> Self {
        let mut out = Self::zero(self.vars, self.order);
        for (e, c) in self.coeffs.iter() {
            out.add_term(*e, c * s);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.vars, rhs.vars);
        let mut out = Self::zero(self.vars, self.order);
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.add_term((e1.0 + e2.0, e1.1 + e2.1), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::monomial(self.vars, self.order, (0, 0), TruncSeries::one(self.order));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn mul_var(&self, var: usize) -> Self {
        assert!(var < self.vars);
        let mut out = Self::zero(self.vars, self.order);
        for (e, c) in self.coeffs.iter() {
            let ne = if var == 0 { (e.0 + 1, e.1) } else { (e.0, e.1 + 1) };
            out.add_term(ne, c.clone());
        }
        out
    }

    fn diff_var(&self, var: usize) -> Self {
        assert!(var < self.vars);
        let mut out = Self::zero(self.vars, self.order);
        for (e, c) in self.coeffs.iter() {
            let k = if var == 0 { e.0 } else { e.1 };
            if k == 0 {
                continue;
            }
            let ne = if var == 0 { (e.0 - 1, e.1) } else { (e.0, e.1 - 1) };
            out.add_term(ne, c.scale(&rat_int(k as i64)));
        }
        out
    }
}

impl fmt::Debug for PolyFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "PolyFn(0)");
        }
        write!(f, "PolyFn(")?;
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*z0^{}*z1^{}", e.0, e.1)?;
        }
        write!(f, ")")
    }
}

/// A symbolic composition tree of the basic operators acting on [`PolyFn`]:
/// scalar series, multiplication by a variable, and differentiation.
#[derive(Clone, Debug)]
pub enum RepOperator {
    Scalar(TruncSeries),
    MulVar(usize),
    Diff(usize),
    /// `Compose(f, g)` applies `g` first.
    Compose(Box<RepOperator>, Box<RepOperator>),
    Add(Box<RepOperator>, Box<RepOperator>),
    Sub(Box<RepOperator>, Box<RepOperator>),
}

impl RepOperator {
    pub fn apply(&self, f: &PolyFn) -> PolyFn {
        match self {
            RepOperator::Scalar(s) => f.scale(s),
            RepOperator::MulVar(v) => f.mul_var(*v),
            RepOperator::Diff(v) => f.diff_var(*v),
            RepOperator::Compose(a, b) => a.apply(&b.apply(f)),
            RepOperator::Add(a, b) => a.apply(f).add(&b.apply(f)),
            RepOperator::Sub(a, b) => a.apply(f).sub(&b.apply(f)),
        }
    }

    pub fn compose(self, rhs: RepOperator) -> RepOperator {
        RepOperator::Compose(Box::new(self), Box::new(rhs))
    }

    pub fn sub_op(self, rhs: RepOperator) -> RepOperator {
        RepOperator::Sub(Box::new(self), Box::new(rhs))
    }

    pub fn add_op(self, rhs: RepOperator) -> RepOperator {
        RepOperator::Add(Box::new(self), Box::new(rhs))
    }

    /// Commutator `self . rhs - rhs . self`.
    pub fn commutator(&self, rhs: &RepOperator) -> RepOperator {
        self.clone().compose(rhs.clone()).sub_op(rhs.clone().compose(self.clone()))
    }
}

/// Image of a generator under the representation with parameter `lambda`:
/// `a` acts as the scalar `1 + h`, `b` as `d/dz`, `phi` as multiplication by
/// `h z`, and `psi` as `lambda - z d/dz`.
pub fn rep_generator(name: &str, lambda: &Rational, order: usize) -> Result<RepOperator> {
    let op = match name {
        "a" => RepOperator::Scalar(&TruncSeries::one(order) + &TruncSeries::hbar(order)),
        "b" => RepOperator::Diff(0),
        "phi" => RepOperator::Scalar(TruncSeries::hbar(order)).compose(RepOperator::MulVar(0)),
        "psi" => RepOperator::Scalar(TruncSeries::constant(order, lambda.clone()))
            .sub_op(RepOperator::MulVar(0).compose(RepOperator::Diff(0))),
        other => return Err(Error::UnknownGenerator(other.to_string())),
    };
    Ok(op)
}

/// Outcome of checking the three defining commutation relations on all
/// monomials up to a degree bound. `violations` is empty when they all hold.
#[derive(Clone, Debug)]
pub struct CommutatorReport {
    pub degree_bound: u32,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl CommutatorReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies `phi b - b phi = 1 - a`, `psi b - b psi = b` and
/// `phi psi - psi phi = phi` as operators, applied to every monomial
/// `z^k`, `k <= degree_bound`.
pub fn commutator_check(lambda: &Rational, order: usize, degree_bound: u32) -> CommutatorReport {
    let a = rep_generator("a", lambda, order).unwrap();
    let b = rep_generator("b", lambda, order).unwrap();
    let phi = rep_generator("phi", lambda, order).unwrap();
    let psi = rep_generator("psi", lambda, order).unwrap();
    let one = RepOperator::Scalar(TruncSeries::one(order));

    let relations: [(&str, RepOperator, RepOperator); 3] = [
        ("phi b - b phi = 1 - a", phi.commutator(&b), one.sub_op(a)),
        ("psi b - b psi = b", psi.commutator(&b), b.clone()),
        ("phi psi - psi phi = phi", phi.commutator(&psi), phi.clone()),
    ];

    let mut report = CommutatorReport { degree_bound, checked: 0, violations: Vec::new() };
    for k in 0..=degree_bound {
        let f = PolyFn::z_pow(k, order);
        for (name, lhs, rhs) in &relations {
            report.checked += 1;
            if lhs.apply(&f) != rhs.apply(&f) {
                report.violations.push(format!("{name} fails on z^{k} (lambda = {lambda})"));
            }
        }
    }
    report
}

/// Checks that the central element `phi b + (a - 1) psi` acts as the scalar
/// `lambda * h` on every monomial `z^k`, `k <= degree_bound`.
pub fn central_element_check(lambda: &Rational, order: usize, degree_bound: u32) -> bool {
    let b = rep_generator("b", lambda, order).unwrap();
    let phi = rep_generator("phi", lambda, order).unwrap();
    let psi = rep_generator("psi", lambda, order).unwrap();
    let a_minus_1 = RepOperator::Scalar(TruncSeries::hbar(order));
    let central = phi.compose(b).add_op(a_minus_1.compose(psi));

    let scalar = TruncSeries::hbar(order).scale(lambda);
    (0..=degree_bound).all(|k| {
        let f = PolyFn::z_pow(k, order);
        central.apply(&f) == f.scale(&scalar)
    })
}

/// The evaluated R-matrix as the double operator sum
/// `sum_{m,n} h^{m+n}/n! binom(-z0 d0, m) (z0 d1)^n`, truncated at total
/// `h`-degree `order`. The graded operator `binom(-z0 d0, m)` acts on a
/// `z0`-degree-`k` piece as the scalar `binom(-k, m)`.
fn apply_r_double_sum(f: &PolyFn) -> PolyFn {
    assert_eq!(f.vars(), 2);
    let order = f.order();
    let mut out = PolyFn::zero(2, order);
    let mut g = f.clone();
    let mut factorial = Rational::one();
    for n in 0..=order {
        if n > 0 {
            g = g.diff_var(1).mul_var(0); // z0 d/dz1
            factorial *= rat_int(n as i64);
            if g.is_zero() {
                break;
            }
        }
        for (e, c) in g.terms() {
            for m in 0..=(order - n) {
                let scalar = binom_int(-(e.0 as i64), m) / &factorial;
                if scalar.is_zero() {
                    continue;
                }
                out.add_term(*e, c.scale(&scalar).mul_hbar_pow(m + n));
            }
        }
    }
    out
}

/// The substitution route: `f(U^T z)`, i.e. `z0 -> (1-t) z0 + z1` and
/// `z1 -> t z0` with `t = (1+h)^{-1}` expanded as a series. Independent of
/// the double sum: the series entries come from geometric expansion, not
/// binomial sums.
fn apply_r_substitution(f: &PolyFn) -> PolyFn {
    assert_eq!(f.vars(), 2);
    let order = f.order();
    let t = TruncSeries::one_plus_hbar_pow(-1, order);
    let one_minus_t = &TruncSeries::one(order) - &t;

    let mut arg0 = PolyFn::zero(2, order); // (1-t) z0 + z1
    arg0.add_term((1, 0), one_minus_t);
    arg0.add_term((0, 1), TruncSeries::one(order));
    let arg1 = PolyFn::monomial(2, order, (1, 0), t); // t z0

    let mut out = PolyFn::zero(2, order);
    for (e, c) in f.terms() {
        let term = arg0.pow(e.0).mul(&arg1.pow(e.1)).scale(c);
        out = out.add(&term);
    }
    out
}

/// Validates the R-matrix action on the monomial `z0^p z1^q` by comparing two
/// independent evaluations: the truncated double operator sum composed with
/// the argument swap, against the matrix substitution `f(U^T z)`. Both must
/// agree exactly at the truncation order. (The representation parameter is
/// fixed to zero here; it only enters the R-matrix through an overall scalar.)
pub fn r_matrix_action_check(p: u32, q: u32, order: usize) -> bool {
    let f = PolyFn::z0_z1_pow(p, q, order);
    let swapped = PolyFn::z0_z1_pow(q, p, order);
    apply_r_double_sum(&swapped) == apply_r_substitution(&f)
}
