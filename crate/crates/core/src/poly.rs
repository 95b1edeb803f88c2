//! Sparse multivariate polynomials over exact rational scalars, weighted
//! gradings and homogeneous decomposition.
//!
//! Coefficients are arbitrary-precision rationals ([`Scalar`]); a polynomial
//! stores a map from exponent multi-indices to nonzero coefficients. A
//! [`Grading`] is a tuple of positive integer weights `γ` assigning the
//! weighted degree `⟨α,γ⟩ = Σ αᵢγᵢ` to each monomial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::Error;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Weighted degree of a monomial or homogeneous element.
pub type Degree = u32;

/// Shorthand for small rational constants, mostly used in tests and examples.
pub fn rat(numer: i64, denom: i64) -> Scalar {
    assert!(denom != 0, "zero denominator");
    BigRational::new(numer.into(), denom.into())
}

/// A multi-index `α ∈ ℕⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    /// The zero multi-index in `n` variables.
    pub fn zero(n_vars: usize) -> Self {
        Exponent(vec![0; n_vars])
    }

    /// The multi-index of the single variable `var`.
    pub fn unit(n_vars: usize, var: usize) -> Self {
        assert!(var < n_vars, "variable index out of range");
        let mut e = vec![0; n_vars];
        e[var] = 1;
        Exponent(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total (unweighted) degree `|α|`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Entrywise sum, the exponent of a monomial product.
    pub fn plus(&self, other: &Exponent) -> Exponent {
        assert_eq!(self.len(), other.len(), "exponent length mismatch");
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A weight tuple `γ` of positive integers defining the grading.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    weights: Vec<u32>,
}

impl Grading {
    pub fn new(weights: Vec<u32>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::NoVariables);
        }
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(Error::ZeroWeight { index });
        }
        Ok(Grading { weights })
    }

    /// The standard grading, all weights 1.
    pub fn standard(n_vars: usize) -> Self {
        Grading::new(vec![1; n_vars]).expect("standard grading")
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, var: usize) -> Degree {
        self.weights[var]
    }

    pub fn max_weight(&self) -> Degree {
        *self.weights.iter().max().expect("nonempty")
    }

    pub fn weight_sum(&self) -> Degree {
        self.weights.iter().sum()
    }

    /// The weighted degree `⟨α,γ⟩ = Σ αᵢγᵢ`.
    pub fn degree_of(&self, alpha: &Exponent) -> Degree {
        assert_eq!(
            alpha.len(),
            self.n_vars(),
            "exponent length does not match variable count"
        );
        alpha
            .entries()
            .iter()
            .zip(&self.weights)
            .map(|(&a, &w)| a * w)
            .sum()
    }
}

/// Homogeneity status of a polynomial or module vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    /// The zero element (homogeneous of every degree).
    Zero,
    /// Homogeneous of the given degree.
    Homogeneous(Degree),
    /// Terms of several degrees are present.
    Mixed,
}

impl Homogeneity {
    /// The degree, if homogeneous and nonzero.
    pub fn degree(self) -> Option<Degree> {
        match self {
            Homogeneity::Homogeneous(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_mixed(self) -> bool {
        matches!(self, Homogeneity::Mixed)
    }
}

/// All exponents `α` with `⟨α,γ⟩ = k`, in descending lexicographic order.
///
/// The order is fixed once and for all so that every slice basis, matrix and
/// report in this crate is reproducible.
pub fn monomial_basis(g: &Grading, k: Degree) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(g.n_vars());
    enumerate_exponents(g.weights(), k, &mut prefix, &mut out);
    out
}

fn enumerate_exponents(weights: &[u32], k: Degree, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
    match weights {
        [] => {
            if k == 0 {
                out.push(Exponent::new(prefix.clone()));
            }
        }
        [w, rest @ ..] => {
            let max = k / w;
            for e in (0..=max).rev() {
                prefix.push(e);
                enumerate_exponents(rest, k - e * w, prefix, out);
                prefix.pop();
            }
        }
    }
}

/// A sparse polynomial with rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has an empty term
/// map. The variable count is tracked explicitly so that the zero polynomial
/// knows its ambient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<Exponent, Scalar>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Scalar) -> Self {
        let mut p = Polynomial::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(Exponent::zero(n_vars), c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Polynomial::constant(n_vars, Scalar::one())
    }

    /// The single variable `z_var`.
    pub fn variable(n_vars: usize, var: usize) -> Self {
        Polynomial::monomial(Exponent::unit(n_vars, var), Scalar::one())
    }

    pub fn monomial(alpha: Exponent, coeff: Scalar) -> Self {
        let mut p = Polynomial::zero(alpha.len());
        if !coeff.is_zero() {
            p.terms.insert(alpha, coeff);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Exponent) -> Scalar {
        self.terms.get(alpha).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Exponent::zero(self.n_vars))
    }

    /// Is this a single-term polynomial?
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn accumulate(&mut self, alpha: Exponent, c: Scalar) {
        if c.is_zero() {
            return;
        }
        assert_eq!(alpha.len(), self.n_vars, "variable count mismatch");
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(a, x)| (a.clone(), x * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `z^α` (exponent shift).
    pub fn multiply_monomial(&self, alpha: &Exponent) -> Polynomial {
        assert_eq!(alpha.len(), self.n_vars, "variable count mismatch");
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.plus(alpha), c.clone()))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.n_vars);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.accumulate(a.plus(b), c * d);
            }
        }
        out
    }

    /// Homogeneity with respect to `g`.
    pub fn homogeneity(&self, g: &Grading) -> Homogeneity {
        let mut degree = None;
        for alpha in self.terms.keys() {
            let k = g.degree_of(alpha);
            match degree {
                None => degree = Some(k),
                Some(d) if d != k => return Homogeneity::Mixed,
                Some(_) => {}
            }
        }
        match degree {
            None => Homogeneity::Zero,
            Some(k) => Homogeneity::Homogeneous(k),
        }
    }

    /// Split into homogeneous parts; keys with zero part are absent and the
    /// parts sum back to the original polynomial.
    pub fn homogeneous_components(&self, g: &Grading) -> BTreeMap<Degree, Polynomial> {
        let mut out: BTreeMap<Degree, Polynomial> = BTreeMap::new();
        for (alpha, c) in &self.terms {
            let k = g.degree_of(alpha);
            out.entry(k)
                .or_insert_with(|| Polynomial::zero(self.n_vars))
                .terms
                .insert(alpha.clone(), c.clone());
        }
        out
    }

    /// Largest weighted degree among the terms; `None` for the zero
    /// polynomial, whose degree is undefined.
    pub fn max_degree(&self, g: &Grading) -> Option<Degree> {
        self.terms.keys().map(|a| g.degree_of(a)).max()
    }

    /// Evaluate at a rational point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.n_vars, "variable count mismatch");
        let mut total = Scalar::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in alpha.entries().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            total += term;
        }
        total
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.accumulate(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.n_vars, other.n_vars, "variable count mismatch");
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.accumulate(a.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        self.multiply(other)
    }
}
