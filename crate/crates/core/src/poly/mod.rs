//! Ring contexts, monomials, the lexicographic order, and canonical
//! multivariate polynomials with exact rational (or parametric)
//! coefficients.
//!
//! Variables are ordered `x_1 < x_2 < ... < x_d` with the *last* variable
//! most significant: the lex comparison looks at the exponent of `x_d`
//! first. Polynomials keep their terms strictly descending in this
//! order, with no zero coefficients; the zero polynomial has no terms.

mod coeff;
mod context;
mod display;
mod parse;

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kernel::BigRational;

pub use coeff::Coeff;
pub use context::RingContext;
pub use parse::{parse_ideal_file, parse_polynomial, IdealFile, ParseError};

/// A power product, stored densely: one exponent per context variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn var(idx: usize, nvars: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial::new(
                other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the monomial is a positive power of the single
    /// variable `i`.
    pub fn pure_power(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Squarefree part: every positive exponent clamped to one.
    pub fn squarefree(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect())
    }
}

/// Pure lexicographic comparison: exponent of the most significant
/// (last) variable first.
pub fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    for (ea, eb) in a.exps.iter().rev().zip(b.exps.iter().rev()) {
        match ea.cmp(eb) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Context-checked comparison of two monomials of `ctx`.
pub fn lex_compare(a: &Monomial, b: &Monomial, ctx: &RingContext) -> Result<Ordering> {
    if a.nvars() != ctx.num_vars() || b.nvars() != ctx.num_vars() {
        return Err(Error::MismatchedContext);
    }
    Ok(lex_cmp(a, b))
}

/// Canonical multivariate polynomial: strictly descending terms, no zero
/// coefficients. Coefficients are rational, or polynomials in the
/// context parameters when the context has parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: RingContext,
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero(ctx: &RingContext) -> Self {
        Polynomial { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn one(ctx: &RingContext) -> Self {
        Self::constant(ctx, BigRational::one())
    }

    pub fn constant(ctx: &RingContext, value: BigRational) -> Self {
        let coeff = Coeff::from_rational(ctx.num_params(), value);
        if coeff.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(coeff, Monomial::one(ctx.num_vars()))],
        }
    }

    pub fn var(ctx: &RingContext, idx: usize) -> Self {
        assert!(idx < ctx.num_vars());
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(
                Coeff::one(ctx.num_params()),
                Monomial::var(idx, ctx.num_vars()),
            )],
        }
    }

    pub fn var_named(ctx: &RingContext, name: &str) -> Result<Self> {
        let idx = ctx
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(Self::var(ctx, idx))
    }

    /// The parameter `name` as a constant-monomial polynomial.
    pub fn param_named(ctx: &RingContext, name: &str) -> Result<Self> {
        let idx = ctx
            .param_index(name)
            .ok_or_else(|| Error::UnknownParameter(name.to_string()))?;
        Ok(Polynomial {
            ctx: ctx.clone(),
            terms: vec![(
                Coeff::parameter(ctx.num_params(), idx),
                Monomial::one(ctx.num_vars()),
            )],
        })
    }

    pub fn from_monomial(ctx: &RingContext, mono: Monomial) -> Self {
        assert_eq!(mono.nvars(), ctx.num_vars());
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Coeff::one(ctx.num_params()), mono)],
        }
    }

    /// Canonicalizes an arbitrary term list: merges equal monomials,
    /// drops zeros, sorts descending.
    pub fn from_terms(ctx: &RingContext, terms: Vec<(Coeff, Monomial)>) -> Self {
        let mut merged: Vec<(Coeff, Monomial)> = Vec::with_capacity(terms.len());
        let mut sorted = terms;
        sorted.sort_by(|a, b| lex_cmp(&b.1, &a.1));
        for (coeff, mono) in sorted {
            debug_assert_eq!(mono.nvars(), ctx.num_vars());
            if let Some(last) = merged.last_mut() {
                if last.1 == mono {
                    last.0 = last.0.add(&coeff);
                    continue;
                }
            }
            merged.push((coeff, mono));
        }
        merged.retain(|(c, _)| !c.is_zero());
        Polynomial { ctx: ctx.clone(), terms: merged }
    }

    pub fn ctx(&self) -> &RingContext {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms.iter().map(|(_, m)| m.degree()).max().unwrap_or(0)
    }

    /// True for a single term with constant rational coefficient.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_constant()
    }

    pub fn uses_params(&self) -> bool {
        self.terms.iter().any(|(c, _)| c.uses_params())
    }

    /// True when the variable `idx` occurs in some term.
    pub fn uses_var(&self, idx: usize) -> bool {
        self.terms.iter().any(|(_, m)| m.exps()[idx] > 0)
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::MismatchedContext)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match lex_cmp(&self.terms[i].1, &other.terms[j].1) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].0.add(&other.terms[j].0);
                    if !c.is_zero() {
                        out.push((c, self.terms[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ctx: self.ctx.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(c, m)| (c.neg(), m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                terms.push((ca.mul(cb), ma.mul(mb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Multiplication by a single term, order-preserving.
    pub fn mul_term(&self, coeff: &Coeff, mono: &Monomial) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.mul(coeff), m.mul(mono)))
                .filter(|(c, _)| !c.is_zero())
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Polynomial {
        if factor.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.scale(factor), m.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same context");
        }
        acc
    }

    /// Formal partial derivative in the variable `idx`.
    pub fn derivative_var(&self, idx: usize) -> Polynomial {
        assert!(idx < self.ctx.num_vars());
        let terms = self
            .terms
            .iter()
            .filter(|(_, m)| m.exps()[idx] > 0)
            .map(|(c, m)| {
                let mut exps = m.exps().to_vec();
                let e = exps[idx];
                exps[idx] -= 1;
                (
                    c.scale(&BigRational::from_integer(e.into())),
                    Monomial::new(exps),
                )
            })
            .collect();
        // Term order is preserved: decrementing a fixed variable's exponent
        // is strictly monotone for lex.
        Polynomial { ctx: self.ctx.clone(), terms }
    }

    /// Formal partial derivative in the parameter named `param`.
    pub fn derivative_param(&self, param: &str) -> Result<Polynomial> {
        let idx = self
            .ctx
            .param_index(param)
            .ok_or_else(|| Error::UnknownParameter(param.to_string()))?;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.derivative(idx), m.clone()))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        Ok(Polynomial { ctx: self.ctx.clone(), terms })
    }

    /// Evaluates a parameter-free polynomial at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ctx.num_vars() {
            return Err(Error::MismatchedContext);
        }
        let mut acc = BigRational::zero();
        for (c, m) in &self.terms {
            let c = c.as_constant().ok_or(Error::ParametersPresent)?;
            let mut term = c;
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes rational values for all parameters; the result lives
    /// in the parameter-free context.
    pub fn specialize_params(&self, values: &[BigRational]) -> Result<Polynomial> {
        if values.len() != self.ctx.num_params() {
            return Err(Error::MissingParameterValue(format!(
                "expected {} values, got {}",
                self.ctx.num_params(),
                values.len()
            )));
        }
        let target = self.ctx.without_params();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (Coeff::from_rational(0, c.eval(values)), m.clone()))
            .filter(|(c, _)| !c.is_zero())
            .collect();
        Ok(Polynomial { ctx: target, terms })
    }

    /// Reinterprets the polynomial in `target`, which must have the same
    /// variables and a parameter list containing this context's
    /// parameters.
    pub fn lift_params(&self, target: &RingContext) -> Result<Polynomial> {
        if target.vars() != self.ctx.vars() {
            return Err(Error::MismatchedContext);
        }
        let mapping: Option<Vec<usize>> = self
            .ctx
            .params()
            .iter()
            .map(|p| target.param_index(p))
            .collect();
        let mapping = mapping.ok_or(Error::MismatchedContext)?;
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| (c.remap_params(target.num_params(), &mapping), m.clone()))
            .collect();
        Ok(Polynomial { ctx: target.clone(), terms })
    }

    /// Reinterprets in a context whose variable list extends this one
    /// (the new variables get exponent zero).
    pub fn extend_vars(&self, target: &RingContext) -> Result<Polynomial> {
        if target.num_vars() < self.ctx.num_vars()
            || target.vars()[..self.ctx.num_vars()] != *self.ctx.vars()
            || target.params() != self.ctx.params()
        {
            return Err(Error::MismatchedContext);
        }
        let n = target.num_vars();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                let mut exps = m.exps().to_vec();
                exps.resize(n, 0);
                (c.clone(), Monomial::new(exps))
            })
            .collect();
        Ok(Polynomial { ctx: target.clone(), terms })
    }

    /// Restricts to a prefix context; fails if a dropped variable occurs.
    pub fn restrict_vars(&self, target: &RingContext) -> Result<Polynomial> {
        let k = target.num_vars();
        if k > self.ctx.num_vars()
            || self.ctx.vars()[..k] != *target.vars()
            || target.params() != self.ctx.params()
        {
            return Err(Error::MismatchedContext);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (c, m) in &self.terms {
            if m.exps()[k..].iter().any(|&e| e > 0) {
                return Err(Error::MismatchedContext);
            }
            terms.push((c.clone(), Monomial::new(m.exps()[..k].to_vec())));
        }
        // Dropping trailing zero exponents preserves relative lex order.
        Ok(Polynomial { ctx: target.clone(), terms })
    }

    /// Drops an all-zero parameter list, reinterpreting constant
    /// coefficients in the parameter-free context.
    pub fn strip_params(&self) -> Result<Polynomial> {
        if self.uses_params() {
            return Err(Error::ParametersPresent);
        }
        let target = self.ctx.without_params();
        let terms = self
            .terms
            .iter()
            .map(|(c, m)| {
                (
                    Coeff::from_rational(0, c.as_constant().expect("constant checked")),
                    m.clone(),
                )
            })
            .collect();
        Ok(Polynomial { ctx: target, terms })
    }

    /// Verifies the canonical-form invariant (strictly descending terms,
    /// no zero coefficients). Used by tests.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(c, _)| !c.is_zero())
            && self
                .terms
                .windows(2)
                .all(|w| lex_cmp(&w[0].1, &w[1].1) == Ordering::Greater)
    }
}

/// A total assignment of polynomials to the context variables;
/// parameters are left untouched.
#[derive(Debug, Clone)]
pub struct Substitution {
    ctx: RingContext,
    images: Vec<Polynomial>,
}

impl Substitution {
    pub fn new(ctx: &RingContext, images: Vec<Polynomial>) -> Result<Self> {
        if images.len() != ctx.num_vars() {
            return Err(Error::MismatchedContext);
        }
        for img in &images {
            if img.ctx() != ctx {
                return Err(Error::MismatchedContext);
            }
        }
        Ok(Substitution { ctx: ctx.clone(), images })
    }

    pub fn identity(ctx: &RingContext) -> Self {
        Substitution {
            ctx: ctx.clone(),
            images: (0..ctx.num_vars()).map(|i| Polynomial::var(ctx, i)).collect(),
        }
    }

    /// Identity except for the listed variable images.
    pub fn mapping(ctx: &RingContext, assignments: &[(usize, Polynomial)]) -> Result<Self> {
        let mut sub = Self::identity(ctx);
        for (idx, img) in assignments {
            if img.ctx() != ctx || *idx >= ctx.num_vars() {
                return Err(Error::MismatchedContext);
            }
            sub.images[*idx] = img.clone();
        }
        Ok(sub)
    }

    pub fn image(&self, idx: usize) -> &Polynomial {
        &self.images[idx]
    }

    /// Applies the ring endomorphism to `f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ctx() != &self.ctx {
            return Err(Error::MismatchedContext);
        }
        let mut acc = Polynomial::zero(&self.ctx);
        for (c, m) in &f.terms {
            let mut term = Polynomial::one(&self.ctx);
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&self.images[i].pow(e))?;
                }
            }
            acc = acc.add(&term.mul_term(c, &Monomial::one(self.ctx.num_vars())))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ctx_xy() -> RingContext {
        RingContext::new(["x", "y"], Vec::<String>::new()).unwrap()
    }

    #[test]
    fn lex_order_most_significant_last() {
        let ctx = ctx_xy();
        let xy = Monomial::new(vec![1, 1]);
        let x2 = Monomial::new(vec![2, 0]);
        // y-exponent decides: xy > x^2.
        assert_eq!(lex_compare(&xy, &x2, &ctx).unwrap(), Ordering::Greater);
        assert_eq!(lex_compare(&xy, &xy, &ctx).unwrap(), Ordering::Equal);
        let x = Monomial::new(vec![1, 0]);
        let y = Monomial::new(vec![0, 1]);
        assert_eq!(lex_compare(&x, &y, &ctx).unwrap(), Ordering::Less);
    }

    #[test]
    fn lex_compare_rejects_wrong_arity() {
        let ctx = ctx_xy();
        let m = Monomial::new(vec![1]);
        assert_eq!(
            lex_compare(&m, &m, &ctx).unwrap_err(),
            Error::MismatchedContext
        );
    }

    #[test]
    fn product_expansion() {
        let ctx = ctx_xy();
        let x = Polynomial::var(&ctx, 0);
        let y = Polynomial::var(&ctx, 1);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        let expected = parse_polynomial("y^2 + 2*x*y + x^2", &ctx).unwrap();
        assert_eq!(sq, expected);
        assert!(sq.is_canonical());
    }

    #[test]
    fn additive_and_absorbing_identities() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x^2 - 2*x*y", &ctx).unwrap();
        let zero = Polynomial::zero(&ctx);
        assert_eq!(f.add(&zero).unwrap(), f);
        assert!(f.mul(&zero).unwrap().is_zero());
    }

    #[test]
    fn substitution_examples() {
        let ctx = ctx_xy();
        let y2 = parse_polynomial("y^2", &ctx).unwrap();
        let x2 = parse_polynomial("x^2", &ctx).unwrap();
        let sub = Substitution::mapping(&ctx, &[(1, x2)]).unwrap();
        assert_eq!(
            sub.apply(&y2).unwrap(),
            parse_polynomial("x^4", &ctx).unwrap()
        );

        let f = parse_polynomial("x*y - 3", &ctx).unwrap();
        assert_eq!(Substitution::identity(&ctx).apply(&f).unwrap(), f);

        let xy = parse_polynomial("x*y", &ctx).unwrap();
        let img = parse_polynomial("y + x^2", &ctx).unwrap();
        let sub = Substitution::mapping(&ctx, &[(1, img)]).unwrap();
        assert_eq!(
            sub.apply(&xy).unwrap(),
            parse_polynomial("x*y + x^3", &ctx).unwrap()
        );
    }

    #[test]
    fn param_derivative_examples() {
        let ctx = RingContext::new(["x"], ["a"]).unwrap();
        let f = parse_polynomial("x^2 - a*x", &ctx).unwrap();
        assert_eq!(
            f.derivative_param("a").unwrap(),
            parse_polynomial("-x", &ctx).unwrap()
        );
        let g = parse_polynomial("x^2", &ctx).unwrap();
        assert!(g.derivative_param("a").unwrap().is_zero());
        let ctx2 = RingContext::new(["y"], ["a"]).unwrap();
        let h = parse_polynomial("a^2*y", &ctx2).unwrap();
        assert_eq!(
            h.derivative_param("a").unwrap(),
            parse_polynomial("2*a*y", &ctx2).unwrap()
        );
        assert!(matches!(
            h.derivative_param("b"),
            Err(Error::UnknownParameter(_))
        ));
    }

    #[test]
    fn specialize_params_evaluates_coefficients() {
        let ctx = RingContext::new(["x", "y"], ["a"]).unwrap();
        let f = parse_polynomial("y - a*x^2", &ctx).unwrap();
        let g = f.specialize_params(&[q(1)]).unwrap();
        let plain = ctx.without_params();
        assert_eq!(g, parse_polynomial("y - x^2", &plain).unwrap());
        let h = f.specialize_params(&[q(0)]).unwrap();
        assert_eq!(h, parse_polynomial("y", &plain).unwrap());
    }

    #[test]
    fn var_derivative() {
        let ctx = ctx_xy();
        let f = parse_polynomial("x^3*y + 2*x", &ctx).unwrap();
        assert_eq!(
            f.derivative_var(0),
            parse_polynomial("3*x^2*y + 2", &ctx).unwrap()
        );
    }
}
