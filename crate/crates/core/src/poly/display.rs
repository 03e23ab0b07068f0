//! Canonical text form. `parse_polynomial` applied to the printed form
//! returns an equal polynomial (round-trip tested).

use std::fmt;

use num_traits::{One, Signed};

use crate::kernel::BigRational;

use super::{Coeff, Monomial, Polynomial};

fn power_product(names: &[String], exps: &[u32]) -> Option<String> {
    let mut parts = Vec::new();
    for (name, &e) in names.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

/// Renders a coefficient polynomial over the parameter names.
pub(super) fn coeff_string(coeff: &Coeff, param_names: &[String]) -> String {
    if coeff.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (exps, scalar)) in coeff.terms().rev().enumerate() {
        let (neg, body) = signed_body(scalar, power_product(param_names, exps));
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

/// Splits a scalar times an optional power product into sign and body.
fn signed_body(scalar: &BigRational, product: Option<String>) -> (bool, String) {
    let neg = scalar.is_negative();
    let abs = scalar.abs();
    let body = match product {
        None => format!("{abs}"),
        Some(p) if abs.is_one() => p,
        Some(p) => format!("{abs}*{p}"),
    };
    (neg, body)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var_names = self.ctx.vars();
        let param_names = self.ctx.params();
        for (i, (coeff, mono)) in self.terms.iter().enumerate() {
            let vars = power_product(var_names, mono.exps());
            let (neg, body) = if let Some(scalar) = coeff.as_constant() {
                signed_body(&scalar, vars)
            } else if coeff.terms().count() == 1 {
                // Single parametric term: fold parameter powers into the product.
                let (exps, scalar) = coeff.terms().next().unwrap();
                let params = power_product(param_names, exps);
                let product = match (params, vars) {
                    (Some(p), Some(v)) => Some(format!("{p}*{v}")),
                    (Some(p), None) => Some(p),
                    (None, Some(v)) => Some(v),
                    (None, None) => None,
                };
                signed_body(scalar, product)
            } else {
                let inner = coeff_string(coeff, param_names);
                let body = match vars {
                    Some(v) => format!("({inner})*{v}"),
                    None => format!("({inner})"),
                };
                (false, body)
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// Formats a monomial with the names of a context.
pub fn monomial_string(mono: &Monomial, names: &[String]) -> String {
    power_product(names, mono.exps()).unwrap_or_else(|| "1".to_string())
}
