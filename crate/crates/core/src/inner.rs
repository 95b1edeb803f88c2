//! Inner products on graded polynomial modules and exact unnormalized
//! Gram–Schmidt orthogonalization.
//!
//! A kernel assigns a positive rational weight to each monomial; distinct
//! monomials are orthogonal, free-module components are mutually orthogonal
//! with unit weight. The Hardy polydisc kernel makes all monomials
//! orthonormal; the Drury–Arveson kernel weights `z^α` by `α!/|α|!`.
//!
//! Orthogonalization is unnormalized (projection coefficients
//! `⟨x,u⟩/⟨u,u⟩`), so all arithmetic stays rational and orthogonality checks
//! are exact equalities.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::module::ModuleVector;
use crate::poly::{Exponent, Scalar};

/// A diagonal inner-product kernel on monomials.
#[derive(Clone)]
pub enum InnerKernel {
    /// All monomials orthonormal.
    HardyPolydisc,
    /// Monomial weights `α!/|α|!`.
    DruryArveson,
    /// User-supplied positive weight function.
    CustomDiagonal(Arc<dyn Fn(&Exponent) -> Scalar + Send + Sync>),
}

impl fmt::Debug for InnerKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl InnerKernel {
    pub fn name(&self) -> &'static str {
        match self {
            InnerKernel::HardyPolydisc => "hardy",
            InnerKernel::DruryArveson => "drury-arveson",
            InnerKernel::CustomDiagonal(_) => "custom",
        }
    }

    /// The weight `w(α) > 0` of the monomial `z^α`.
    pub fn monomial_weight(&self, alpha: &Exponent) -> Scalar {
        match self {
            InnerKernel::HardyPolydisc => Scalar::one(),
            InnerKernel::DruryArveson => {
                let mut numer = BigInt::one();
                for &e in alpha.entries() {
                    numer *= factorial(e);
                }
                BigRational::new(numer, factorial(alpha.total()))
            }
            InnerKernel::CustomDiagonal(w) => {
                let value = w(alpha);
                assert!(
                    value > Scalar::zero(),
                    "custom kernel weight must be positive"
                );
                value
            }
        }
    }
}

fn factorial(n: u32) -> BigInt {
    let mut out = BigInt::one();
    for i in 2..=n {
        out *= i;
    }
    out
}

/// The inner product `Σ_j Σ_α u_{j,α} v_{j,α} w(α)`.
///
/// Bilinear, symmetric and positive definite; homogeneous elements of
/// distinct degrees are orthogonal under every kernel because their monomial
/// supports are disjoint.
pub fn inner_product(u: &ModuleVector, v: &ModuleVector, kernel: &InnerKernel) -> Scalar {
    assert_eq!(u.spec(), v.spec(), "module mismatch");
    let mut total = Scalar::zero();
    for (p, q) in u.components().iter().zip(v.components()) {
        // iterate the smaller support, look up in the larger
        let (small, large) = if p.num_terms() <= q.num_terms() {
            (p, q)
        } else {
            (q, p)
        };
        for (alpha, c) in small.terms() {
            let d = large.coeff(alpha);
            if !d.is_zero() {
                total += c * d * kernel.monomial_weight(alpha);
            }
        }
    }
    total
}

/// Incremental unnormalized Gram–Schmidt over module vectors.
pub struct Orthogonalizer {
    kernel: InnerKernel,
    basis: Vec<ModuleVector>,
    norms: Vec<Scalar>,
}

impl Orthogonalizer {
    pub fn new(kernel: InnerKernel) -> Self {
        Orthogonalizer {
            kernel,
            basis: Vec::new(),
            norms: Vec::new(),
        }
    }

    pub fn basis(&self) -> &[ModuleVector] {
        &self.basis
    }

    /// Project `v` onto the orthogonal complement of the current span.
    pub fn residual(&self, v: &ModuleVector) -> ModuleVector {
        let mut r = v.clone();
        for (u, n) in self.basis.iter().zip(&self.norms) {
            let c = inner_product(&r, u, &self.kernel);
            if !c.is_zero() {
                r = r.sub(&u.scale(&(c / n)));
            }
        }
        r
    }

    /// Push a vector; keeps and returns the residual when it is nonzero.
    pub fn push(&mut self, v: &ModuleVector) -> Option<&ModuleVector> {
        let r = self.residual(v);
        if r.is_zero() {
            return None;
        }
        let n = inner_product(&r, &r, &self.kernel);
        self.basis.push(r);
        self.norms.push(n);
        self.basis.last()
    }
}

/// Unnormalized Gram–Schmidt in input order.
///
/// Returns the pairwise-orthogonal nonzero results together with the indices
/// of the inputs that produced them; the output spans the same subspace as
/// the input.
pub fn gram_schmidt(
    vectors: &[ModuleVector],
    kernel: &InnerKernel,
) -> (Vec<ModuleVector>, Vec<usize>) {
    if let Some(first) = vectors.first() {
        assert!(
            vectors.iter().all(|v| v.spec() == first.spec()),
            "module mismatch"
        );
    }
    let mut gs = Orthogonalizer::new(kernel.clone());
    let mut survivors = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if gs.push(v).is_some() {
            survivors.push(i);
        }
    }
    (gs.basis, survivors)
}

/// Gram–Schmidt on dense slice coordinates with per-coordinate weights; the
/// fast path used by the degree-wise algorithms.
pub(crate) struct CoordOrthogonalizer {
    weights: Vec<Scalar>,
    basis: Vec<Vec<Scalar>>,
    norms: Vec<Scalar>,
}

impl CoordOrthogonalizer {
    pub(crate) fn new(weights: Vec<Scalar>) -> Self {
        CoordOrthogonalizer {
            weights,
            basis: Vec::new(),
            norms: Vec::new(),
        }
    }

    fn dot(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for ((x, y), w) in a.iter().zip(b).zip(&self.weights) {
            if !x.is_zero() && !y.is_zero() {
                total += x * y * w;
            }
        }
        total
    }

    /// Push a coordinate vector; returns the orthogonalized residual when it
    /// is nonzero.
    pub(crate) fn push(&mut self, v: Vec<Scalar>) -> Option<&[Scalar]> {
        assert_eq!(v.len(), self.weights.len(), "dimension mismatch");
        let mut r = v;
        for (u, n) in self.basis.iter().zip(&self.norms) {
            let c = self.dot(&r, u);
            if c.is_zero() {
                continue;
            }
            let f = c / n;
            for (ri, ui) in r.iter_mut().zip(u) {
                if !ui.is_zero() {
                    let sub = ui * &f;
                    *ri -= sub;
                }
            }
        }
        if r.iter().all(Zero::is_zero) {
            return None;
        }
        let n = self.dot(&r, &r);
        self.basis.push(r);
        self.norms.push(n);
        self.basis.last().map(Vec::as_slice)
    }

    pub(crate) fn basis_last(&self) -> Option<&[Scalar]> {
        self.basis.last().map(Vec::as_slice)
    }
}
