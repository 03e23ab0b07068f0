use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
struct ContextData {
    vars: Vec<String>,
    params: Vec<String>,
}

/// A polynomial ring context: an ordered list of variables and an
/// optional ordered list of parameters.
///
/// Variables are listed in ascending significance: the last variable is
/// the most significant for the lexicographic order (it is compared
/// first and therefore eliminated first). Parameters never take part in
/// monomial comparisons; they live inside coefficients.
///
/// Cloning is cheap (shared `Arc`); equality compares names.
#[derive(Debug, Clone)]
pub struct RingContext(Arc<ContextData>);

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for RingContext {}

impl std::hash::Hash for RingContext {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl RingContext {
    pub fn new<S: Into<String>, T: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        params: impl IntoIterator<Item = T>,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidInput("at least one variable is required".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in vars.iter().chain(params.iter()) {
            if name.is_empty() || !seen.insert(name.clone()) {
                return Err(Error::InvalidInput(format!(
                    "duplicate or empty name `{name}` in ring context"
                )));
            }
        }
        Ok(RingContext(Arc::new(ContextData { vars, params })))
    }

    /// Context with variables `x1, .., xd` and no parameters.
    pub fn standard(d: usize) -> Self {
        Self::new((1..=d).map(|i| format!("x{i}")), Vec::<String>::new())
            .expect("standard context is well-formed")
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn params(&self) -> &[String] {
        &self.0.params
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn num_params(&self) -> usize {
        self.0.params.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.0.params.iter().position(|p| p == name)
    }

    /// Same variables, no parameters.
    pub fn without_params(&self) -> RingContext {
        if self.num_params() == 0 {
            self.clone()
        } else {
            Self::new(self.vars().to_vec(), Vec::<String>::new()).expect("vars already valid")
        }
    }

    /// Same parameters, only the first `k` (least significant) variables.
    pub fn prefix(&self, k: usize) -> Result<RingContext> {
        if k == 0 || k > self.num_vars() {
            return Err(Error::InvalidDimensions(format!(
                "prefix of {k} variables out of {}",
                self.num_vars()
            )));
        }
        Self::new(self.vars()[..k].to_vec(), self.params().to_vec())
    }

    /// Appends variables above the existing ones (more significant).
    pub fn extended(&self, extra_vars: &[String]) -> Result<RingContext> {
        let mut vars = self.vars().to_vec();
        vars.extend(extra_vars.iter().cloned());
        Self::new(vars, self.params().to_vec())
    }

    /// Same variables plus the given parameters appended.
    pub fn with_params(&self, extra: &[String]) -> Result<RingContext> {
        let mut params = self.params().to_vec();
        params.extend(extra.iter().cloned());
        Self::new(self.vars().to_vec(), params)
    }

    /// A variable name not colliding with any existing name, derived from
    /// `stem` by appending a counter when needed.
    pub fn fresh_name(&self, stem: &str) -> String {
        let taken =
            |n: &str| self.0.vars.iter().any(|v| v == n) || self.0.params.iter().any(|p| p == n);
        if !taken(stem) {
            return stem.to_string();
        }
        for k in 0.. {
            let candidate = format!("{stem}{k}");
            if !taken(&candidate) {
                return candidate;
            }
        }
        unreachable!()
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.vars().join(", "))?;
        if !self.params().is_empty() {
            write!(f, "; param {}", self.params().join(", "))?;
        }
        Ok(())
    }
}
