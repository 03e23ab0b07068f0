use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::kernel::BigRational;

/// A coefficient: a polynomial in the ring parameters with rational
/// coefficients. For a parameter-free context this is just a rational
/// number wrapped in a one-entry map.
///
/// Keys are dense exponent vectors over the parameters; entries are
/// nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    nparams: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl Coeff {
    pub fn zero(nparams: usize) -> Self {
        Coeff { nparams, terms: BTreeMap::new() }
    }

    pub fn from_rational(nparams: usize, value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(vec![0; nparams], value);
        }
        Coeff { nparams, terms }
    }

    pub fn one(nparams: usize) -> Self {
        Self::from_rational(nparams, BigRational::one())
    }

    /// The monomial `p_idx` with coefficient 1.
    pub fn parameter(nparams: usize, idx: usize) -> Self {
        assert!(idx < nparams);
        let mut exps = vec![0; nparams];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, BigRational::one());
        Coeff { nparams, terms }
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// The rational value when the coefficient is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        debug_assert_eq!(self.nparams, other.nparams);
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            match terms.entry(e.clone()) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c.clone());
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    let sum = o.get() + c;
                    if sum.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = sum;
                    }
                }
            }
        }
        Coeff { nparams: self.nparams, terms }
    }

    pub fn neg(&self) -> Coeff {
        Coeff {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        debug_assert_eq!(self.nparams, other.nparams);
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let prod = ca * cb;
                match terms.entry(exps) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(prod);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let sum = o.get() + prod;
                        if sum.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = sum;
                        }
                    }
                }
            }
        }
        Coeff { nparams: self.nparams, terms }
    }

    pub fn scale(&self, factor: &BigRational) -> Coeff {
        if factor.is_zero() {
            return Coeff::zero(self.nparams);
        }
        Coeff {
            nparams: self.nparams,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * factor)).collect(),
        }
    }

    /// Formal partial derivative in parameter `idx`.
    pub fn derivative(&self, idx: usize) -> Coeff {
        assert!(idx < self.nparams);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[idx] > 0 {
                let mut exps = e.clone();
                exps[idx] -= 1;
                terms.insert(exps, c * BigRational::from_integer(e[idx].into()));
            }
        }
        Coeff { nparams: self.nparams, terms }
    }

    /// Evaluates at the given parameter values.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        debug_assert_eq!(values.len(), self.nparams);
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &values[i];
                }
            }
            acc += term;
        }
        acc
    }

    /// Re-keys the coefficient for a context with `new_nparams` parameters,
    /// where the old parameter `i` maps to position `mapping[i]`.
    pub fn remap_params(&self, new_nparams: usize, mapping: &[usize]) -> Coeff {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut exps = vec![0u32; new_nparams];
            for (i, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    exps[mapping[i]] = exp;
                }
            }
            terms.insert(exps, c.clone());
        }
        Coeff { nparams: new_nparams, terms }
    }

    /// True when some parameter actually occurs.
    pub fn uses_params(&self) -> bool {
        !self.is_constant()
    }
}
