//! Graded free modules with degree shifts, presented modules given by
//! generators and relations, degree slices and Hilbert functions.
//!
//! A [`PresentedModule`] models `(⟨generators⟩ + ⟨relations⟩)/⟨relations⟩`
//! inside a shifted free module. A plain submodule has no relations; a
//! quotient of the free module lists the basis vectors as generators. Every
//! degree-`k` slice is a finite-dimensional rational vector space, computed
//! by enumerating monomial multiples of the defining vectors and reducing
//! with exact elimination. Slices are cached per degree behind a mutex, so a
//! module value stays logically immutable and safe to share.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;

use crate::linalg::{RatMatrix, RowSpan};
use crate::poly::{monomial_basis, Degree, Exponent, Grading, Homogeneity, Polynomial, Scalar};
use crate::Error;

/// A free module `⊕_j R(−s_j)` over the polynomial ring: a grading plus one
/// non-negative degree shift per basis vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModuleSpec {
    grading: Grading,
    shifts: Vec<Degree>,
}

impl FreeModuleSpec {
    pub fn new(grading: Grading, shifts: Vec<Degree>) -> Self {
        assert!(!shifts.is_empty(), "rank must be positive");
        FreeModuleSpec { grading, shifts }
    }

    /// The ring itself: rank one, shift zero.
    pub fn ring(grading: Grading) -> Self {
        FreeModuleSpec::new(grading, vec![0])
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn n_vars(&self) -> usize {
        self.grading.n_vars()
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[Degree] {
        &self.shifts
    }

    pub fn shift(&self, j: usize) -> Degree {
        self.shifts[j]
    }

    /// The basis vector `e_j` (homogeneous of degree `shift(j)`).
    pub fn basis_vector(&self, j: usize) -> ModuleVector {
        assert!(j < self.rank(), "basis index out of range");
        let mut components = vec![Polynomial::zero(self.n_vars()); self.rank()];
        components[j] = Polynomial::one(self.n_vars());
        ModuleVector {
            spec: self.clone(),
            components,
        }
    }

    pub fn unit_vectors(&self) -> Vec<ModuleVector> {
        (0..self.rank()).map(|j| self.basis_vector(j)).collect()
    }

    pub fn zero_vector(&self) -> ModuleVector {
        ModuleVector {
            spec: self.clone(),
            components: vec![Polynomial::zero(self.n_vars()); self.rank()],
        }
    }

    /// Basis of the degree-`k` slice of the free module, as pairs
    /// `(component, exponent)` in component order, exponents in the fixed
    /// monomial order.
    pub fn slice_pairs(&self, k: Degree) -> Vec<(usize, Exponent)> {
        let mut pairs = Vec::new();
        for (j, &s) in self.shifts.iter().enumerate() {
            if k < s {
                continue;
            }
            for alpha in monomial_basis(&self.grading, k - s) {
                pairs.push((j, alpha));
            }
        }
        pairs
    }

    pub fn slice_dim(&self, k: Degree) -> usize {
        self.shifts
            .iter()
            .filter(|&&s| k >= s)
            .map(|&s| monomial_basis(&self.grading, k - s).len())
            .sum()
    }
}

/// An element of a shifted free module: one polynomial per basis vector.
///
/// Homogeneous of degree `k` means component `j` is γ-homogeneous of degree
/// `k − shift(j)` (or zero).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    spec: FreeModuleSpec,
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn new(spec: FreeModuleSpec, components: Vec<Polynomial>) -> Self {
        assert_eq!(components.len(), spec.rank(), "component count mismatch");
        assert!(
            components.iter().all(|p| p.n_vars() == spec.n_vars()),
            "variable count mismatch"
        );
        ModuleVector { spec, components }
    }

    /// Wrap a single polynomial as a vector in the rank-one module.
    pub fn from_polynomial(spec: FreeModuleSpec, p: Polynomial) -> Self {
        assert_eq!(spec.rank(), 1, "expected a rank-one module");
        ModuleVector::new(spec, vec![p])
    }

    pub fn spec(&self) -> &FreeModuleSpec {
        &self.spec
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Polynomial {
        &self.components[j]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Degree of a homogeneous vector, `Zero` for the zero vector and `Mixed`
    /// when components disagree or are inhomogeneous.
    pub fn degree(&self) -> Homogeneity {
        let mut degree = None;
        for (j, p) in self.components.iter().enumerate() {
            match p.homogeneity(self.spec.grading()) {
                Homogeneity::Zero => {}
                Homogeneity::Mixed => return Homogeneity::Mixed,
                Homogeneity::Homogeneous(d) => {
                    let k = d + self.spec.shift(j);
                    match degree {
                        None => degree = Some(k),
                        Some(existing) if existing != k => return Homogeneity::Mixed,
                        Some(_) => {}
                    }
                }
            }
        }
        match degree {
            None => Homogeneity::Zero,
            Some(k) => Homogeneity::Homogeneous(k),
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.spec, other.spec, "module mismatch");
        ModuleVector {
            spec: self.spec.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        assert_eq!(self.spec, other.spec, "module mismatch");
        ModuleVector {
            spec: self.spec.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        ModuleVector {
            spec: self.spec.clone(),
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiply every component by the monomial `z^α`.
    pub fn multiply_monomial(&self, alpha: &Exponent) -> ModuleVector {
        ModuleVector {
            spec: self.spec.clone(),
            components: self
                .components
                .iter()
                .map(|p| p.multiply_monomial(alpha))
                .collect(),
        }
    }

    /// Multiply every component by a polynomial.
    pub fn multiply_polynomial(&self, p: &Polynomial) -> ModuleVector {
        ModuleVector {
            spec: self.spec.clone(),
            components: self.components.iter().map(|q| q.multiply(p)).collect(),
        }
    }
}

/// Coordinate chart of a free-module degree slice: the basis pairs together
/// with a reverse lookup, used to move between vectors and dense coordinates.
pub(crate) struct SliceIndex {
    k: Degree,
    pairs: Vec<(usize, Exponent)>,
    position: HashMap<(usize, Exponent), usize>,
}

impl SliceIndex {
    pub(crate) fn new(spec: &FreeModuleSpec, k: Degree) -> Self {
        let pairs = spec.slice_pairs(k);
        let position = pairs
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        SliceIndex { k, pairs, position }
    }

    pub(crate) fn dim(&self) -> usize {
        self.pairs.len()
    }

    pub(crate) fn pairs(&self) -> &[(usize, Exponent)] {
        &self.pairs
    }

    /// Coordinates of `z^α · v` for a homogeneous `v`, without forming the
    /// product vector. Passing the zero exponent gives the coordinates of `v`
    /// itself.
    pub(crate) fn coords_shifted(&self, v: &ModuleVector, alpha: &Exponent) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.pairs.len()];
        for (j, p) in v.components().iter().enumerate() {
            for (beta, c) in p.terms() {
                let key = (j, beta.plus(alpha));
                let idx = *self
                    .position
                    .get(&key)
                    .unwrap_or_else(|| panic!("term of degree != {} in slice", self.k));
                out[idx] = c.clone();
            }
        }
        out
    }

    pub(crate) fn coords(&self, v: &ModuleVector) -> Vec<Scalar> {
        let zero = Exponent::zero(v.spec().n_vars());
        self.coords_shifted(v, &zero)
    }

    /// Rebuild a module vector from slice coordinates.
    pub(crate) fn vector(&self, spec: &FreeModuleSpec, coords: &[Scalar]) -> ModuleVector {
        assert_eq!(coords.len(), self.pairs.len(), "dimension mismatch");
        let mut components = vec![Polynomial::zero(spec.n_vars()); spec.rank()];
        for ((j, alpha), c) in self.pairs.iter().zip(coords) {
            if !c.is_zero() {
                components[*j] =
                    &components[*j] + &Polynomial::monomial(alpha.clone(), c.clone());
            }
        }
        ModuleVector::new(spec.clone(), components)
    }
}

/// Basis of a degree slice of a presented module: coset representatives for
/// the slice itself plus a basis of the relation slice they are taken
/// modulo.
#[derive(Clone, Debug)]
pub struct DegreeSliceBasis {
    pub representatives: Vec<ModuleVector>,
    pub relation_basis: Vec<ModuleVector>,
}

/// Per-degree data shared by the slice, Hilbert-function and wandering
/// computations.
pub(crate) struct DegreeSliceData {
    /// Dimension of the ambient free-module slice.
    pub(crate) free_dim: usize,
    /// Span of all relation multiples of this degree.
    pub(crate) rel_span: RowSpan,
    /// Independent relation multiples spanning `rel_span` (coordinates).
    pub(crate) rel_basis: Vec<Vec<Scalar>>,
    /// Coset representatives of the slice modulo relations (coordinates).
    pub(crate) representatives: Vec<Vec<Scalar>>,
    /// Independent generator multiples with `α ≠ 0` extending `rel_span`;
    /// these represent the degree-`k` slice of `Σ_i z_i · M` modulo
    /// relations.
    pub(crate) submax_basis: Vec<Vec<Scalar>>,
}

#[derive(Default)]
struct ModuleCache {
    slices: BTreeMap<Degree, Arc<DegreeSliceData>>,
    mult: BTreeMap<(Degree, usize), Arc<RatMatrix>>,
}

/// A graded module presented by homogeneous generators and relations inside
/// a shifted free module.
#[derive(Debug)]
pub struct PresentedModule {
    spec: FreeModuleSpec,
    generators: Vec<ModuleVector>,
    relations: Vec<ModuleVector>,
    cache: Mutex<ModuleCache>,
}

impl Clone for PresentedModule {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("module cache poisoned");
        PresentedModule {
            spec: self.spec.clone(),
            generators: self.generators.clone(),
            relations: self.relations.clone(),
            cache: Mutex::new(ModuleCache {
                slices: cache.slices.clone(),
                mult: cache.mult.clone(),
            }),
        }
    }
}

impl std::fmt::Debug for ModuleCache {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModuleCache({} slices)", self.slices.len())
    }
}

impl PresentedModule {
    /// General presentation `(⟨generators⟩ + ⟨relations⟩)/⟨relations⟩`.
    pub fn with_presentation(
        spec: FreeModuleSpec,
        generators: Vec<ModuleVector>,
        relations: Vec<ModuleVector>,
    ) -> Result<Self, Error> {
        for (index, g) in generators.iter().enumerate() {
            if g.spec() != &spec {
                return Err(Error::SpecMismatch);
            }
            if g.degree().is_mixed() {
                return Err(Error::NotHomogeneous {
                    role: "generator",
                    index,
                });
            }
        }
        for (index, r) in relations.iter().enumerate() {
            if r.spec() != &spec {
                return Err(Error::SpecMismatch);
            }
            if r.degree().is_mixed() {
                return Err(Error::NotHomogeneous {
                    role: "relation",
                    index,
                });
            }
        }
        Ok(PresentedModule {
            spec,
            generators,
            relations,
            cache: Mutex::new(ModuleCache::default()),
        })
    }

    /// A submodule of the free module (no relations).
    pub fn submodule(spec: FreeModuleSpec, generators: Vec<ModuleVector>) -> Result<Self, Error> {
        PresentedModule::with_presentation(spec, generators, Vec::new())
    }

    /// A homogeneous ideal, as a rank-one submodule.
    pub fn ideal(grading: Grading, generators: Vec<Polynomial>) -> Result<Self, Error> {
        let spec = FreeModuleSpec::ring(grading);
        let gens = generators
            .into_iter()
            .map(|p| ModuleVector::from_polynomial(spec.clone(), p))
            .collect();
        PresentedModule::submodule(spec, gens)
    }

    /// Quotient of the free module by the span of the relations; the basis
    /// vectors are the generators.
    pub fn quotient(spec: FreeModuleSpec, relations: Vec<ModuleVector>) -> Result<Self, Error> {
        let generators = spec.unit_vectors();
        PresentedModule::with_presentation(spec, generators, relations)
    }

    /// The free module itself.
    pub fn free(spec: FreeModuleSpec) -> Self {
        PresentedModule::quotient(spec, Vec::new()).expect("free module")
    }

    pub fn spec(&self) -> &FreeModuleSpec {
        &self.spec
    }

    pub fn grading(&self) -> &Grading {
        self.spec.grading()
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.generators
    }

    pub fn relations(&self) -> &[ModuleVector] {
        &self.relations
    }

    /// Largest degree among the (nonzero) generators.
    pub fn max_generator_degree(&self) -> Option<Degree> {
        self.generators.iter().filter_map(|g| g.degree().degree()).max()
    }

    /// Largest degree among generators and relations.
    pub fn max_data_degree(&self) -> Option<Degree> {
        self.generators
            .iter()
            .chain(&self.relations)
            .filter_map(|v| v.degree().degree())
            .max()
    }

    /// Default truncation degree for syzygy scans:
    /// `(max data degree)·(n+1) + Σγᵢ`.
    pub fn default_truncation(&self) -> Degree {
        let d = self.max_data_degree().unwrap_or(0);
        let n = self.spec.n_vars() as Degree;
        d * (n + 1) + self.grading().weight_sum()
    }

    pub(crate) fn slice_data(&self, k: Degree) -> Arc<DegreeSliceData> {
        {
            let cache = self.cache.lock().expect("module cache poisoned");
            if let Some(data) = cache.slices.get(&k) {
                return Arc::clone(data);
            }
        }
        let data = Arc::new(self.compute_slice(k));
        let mut cache = self.cache.lock().expect("module cache poisoned");
        Arc::clone(cache.slices.entry(k).or_insert(data))
    }

    fn compute_slice(&self, k: Degree) -> DegreeSliceData {
        let index = SliceIndex::new(&self.spec, k);
        let free_dim = index.dim();
        let grading = self.grading();

        // Span of all relation multiples of degree k.
        let mut rel_span = RowSpan::new(free_dim);
        let mut rel_basis = Vec::new();
        for r in &self.relations {
            let Homogeneity::Homogeneous(d) = r.degree() else {
                continue;
            };
            if d > k {
                continue;
            }
            for alpha in monomial_basis(grading, k - d) {
                let coords = index.coords_shifted(r, &alpha);
                if rel_span.insert(coords.clone()) {
                    rel_basis.push(coords);
                }
            }
        }

        // Generator multiples, full slice and the z·M part.
        let mut full_span = rel_span.clone();
        let mut representatives = Vec::new();
        let mut submax_span = rel_span.clone();
        let mut submax_basis = Vec::new();
        for g in &self.generators {
            let Homogeneity::Homogeneous(d) = g.degree() else {
                continue;
            };
            if d > k {
                continue;
            }
            for alpha in monomial_basis(grading, k - d) {
                let coords = index.coords_shifted(g, &alpha);
                if full_span.insert(coords.clone()) {
                    representatives.push(coords.clone());
                }
                if !alpha.is_zero() && submax_span.insert(coords.clone()) {
                    submax_basis.push(coords);
                }
            }
        }

        DegreeSliceData {
            free_dim,
            rel_span,
            rel_basis,
            representatives,
            submax_basis,
        }
    }

    /// Dimension of the degree-`k` slice.
    pub fn hilbert_function(&self, k: Degree) -> usize {
        self.slice_data(k).representatives.len()
    }

    /// Basis of the degree-`k` slice: coset representatives plus the
    /// relation-slice basis they are taken modulo.
    pub fn slice_basis(&self, k: Degree) -> DegreeSliceBasis {
        let data = self.slice_data(k);
        let index = SliceIndex::new(&self.spec, k);
        DegreeSliceBasis {
            representatives: data
                .representatives
                .iter()
                .map(|c| index.vector(&self.spec, c))
                .collect(),
            relation_basis: data
                .rel_basis
                .iter()
                .map(|c| index.vector(&self.spec, c))
                .collect(),
        }
    }

    /// Basis of the degree-`k` slice of `Σ_i z_i · M`, modulo relations.
    pub fn times_maximal_ideal_slice(&self, k: Degree) -> Vec<ModuleVector> {
        let data = self.slice_data(k);
        let index = SliceIndex::new(&self.spec, k);
        data.submax_basis
            .iter()
            .map(|c| index.vector(&self.spec, c))
            .collect()
    }

    /// Dimension of the degree-`k` slice of `Σ_i z_i · M`.
    pub(crate) fn submax_dim(&self, k: Degree) -> usize {
        self.slice_data(k).submax_basis.len()
    }

    /// Matrix of multiplication by `z_var` from the degree-`d` slice to the
    /// degree-`d + γ_var` slice, in the representative bases.
    pub(crate) fn multiplication_matrix(&self, d: Degree, var: usize) -> Arc<RatMatrix> {
        {
            let cache = self.cache.lock().expect("module cache poisoned");
            if let Some(m) = cache.mult.get(&(d, var)) {
                return Arc::clone(m);
            }
        }
        let matrix = Arc::new(self.compute_multiplication(d, var));
        let mut cache = self.cache.lock().expect("module cache poisoned");
        Arc::clone(cache.mult.entry((d, var)).or_insert(matrix))
    }

    fn compute_multiplication(&self, d: Degree, var: usize) -> RatMatrix {
        let target_degree = d + self.grading().weight(var);
        let source = self.slice_data(d);
        let target = self.slice_data(target_degree);
        let from_dim = source.representatives.len();
        let to_dim = target.representatives.len();
        if from_dim == 0 || to_dim == 0 {
            return RatMatrix::zeros(to_dim, from_dim);
        }

        let source_index = SliceIndex::new(&self.spec, d);
        let target_index = SliceIndex::new(&self.spec, target_degree);
        let step = Exponent::unit(self.spec.n_vars(), var);

        // Solve against representatives and relation basis at the target
        // degree; the relation part of each solution is discarded.
        let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(to_dim + target.rel_basis.len());
        columns.extend(target.representatives.iter().cloned());
        columns.extend(target.rel_basis.iter().cloned());
        let basis = RatMatrix::from_columns(target.free_dim, &columns);

        let images: Vec<Vec<Scalar>> = source
            .representatives
            .iter()
            .map(|coords| {
                let v = source_index.vector(&self.spec, coords);
                target_index.coords(&v.multiply_monomial(&step))
            })
            .collect();
        let solutions = crate::linalg::solve_many(&basis, &images);

        let mut matrix = RatMatrix::zeros(to_dim, from_dim);
        for (j, sol) in solutions.into_iter().enumerate() {
            let sol = sol.expect("multiplication image must lie in the target slice");
            for (i, value) in sol.into_iter().take(to_dim).enumerate() {
                *matrix.at_mut(i, j) = value;
            }
        }
        matrix
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn g11() -> Grading {
        Grading::standard(2)
    }

    fn var(i: usize) -> Polynomial {
        Polynomial::variable(2, i)
    }

    #[test]
    fn vector_degree_examples() {
        let spec = FreeModuleSpec::new(g11(), vec![0, 3]);
        let e1 = spec.basis_vector(0);
        let e2 = spec.basis_vector(1);

        let v = e1.multiply_polynomial(&var(0));
        assert_eq!(v.degree(), Homogeneity::Homogeneous(1));
        assert_eq!(e2.degree(), Homogeneity::Homogeneous(3));

        let w = e1.multiply_polynomial(&(&var(0) + &var(1).multiply(&var(1))));
        assert_eq!(w.degree(), Homogeneity::Mixed);

        assert_eq!(spec.zero_vector().degree(), Homogeneity::Zero);
    }

    #[test]
    fn rejects_inhomogeneous_generator() {
        let mixed = &var(0) + &var(1).multiply(&var(1));
        let err = PresentedModule::ideal(g11(), vec![mixed]).unwrap_err();
        assert_eq!(
            err,
            Error::NotHomogeneous {
                role: "generator",
                index: 0
            }
        );
    }

    #[test]
    fn slice_basis_of_principal_ideal() {
        // (z1) in two variables, k = 2: {z1², z1 z2}
        let m = PresentedModule::ideal(g11(), vec![var(0)]).unwrap();
        let basis = m.slice_basis(2);
        assert_eq!(basis.representatives.len(), 2);
        assert!(basis.relation_basis.is_empty());
        let x2 = var(0).multiply(&var(0));
        let xy = var(0).multiply(&var(1));
        assert_eq!(basis.representatives[0].component(0), &x2);
        assert_eq!(basis.representatives[1].component(0), &xy);
    }

    #[test]
    fn slice_of_zero_module() {
        let m = PresentedModule::submodule(FreeModuleSpec::ring(g11()), vec![]).unwrap();
        for k in 0..5 {
            assert_eq!(m.hilbert_function(k), 0);
            assert!(m.slice_basis(k).representatives.is_empty());
        }
    }

    #[test]
    fn quotient_by_maximal_ideal() {
        let spec = FreeModuleSpec::ring(g11());
        let rels = vec![
            ModuleVector::from_polynomial(spec.clone(), var(0)),
            ModuleVector::from_polynomial(spec.clone(), var(1)),
        ];
        let m = PresentedModule::quotient(spec, rels).unwrap();
        assert_eq!(m.hilbert_function(0), 1);
        assert_eq!(m.hilbert_function(1), 0);
        assert_eq!(m.hilbert_function(2), 0);
    }

    #[test]
    fn hilbert_function_examples() {
        // (z1², z1z2, z2²): k=2 → 3, k=3 → 4
        let x = var(0);
        let y = var(1);
        let m = PresentedModule::ideal(
            g11(),
            vec![x.multiply(&x), x.multiply(&y), y.multiply(&y)],
        )
        .unwrap();
        assert_eq!(m.hilbert_function(2), 3);
        assert_eq!(m.hilbert_function(3), 4);

        // full ring with γ = (1,2): 1,1,2,2,3
        let g = Grading::new(vec![1, 2]).unwrap();
        let full = PresentedModule::free(FreeModuleSpec::ring(g));
        let values: Vec<usize> = (0..5).map(|k| full.hilbert_function(k)).collect();
        assert_eq!(values, vec![1, 1, 2, 2, 3]);
    }

    #[test]
    fn times_maximal_ideal_examples() {
        let x = var(0);
        let y = var(1);
        let m = PresentedModule::ideal(g11(), vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(m.times_maximal_ideal_slice(1).len(), 0);
        assert_eq!(m.times_maximal_ideal_slice(2).len(), 3);

        let sq =
            PresentedModule::ideal(g11(), vec![x.multiply(&x), x.multiply(&y), y.multiply(&y)])
                .unwrap();
        assert_eq!(sq.times_maximal_ideal_slice(3).len(), 4);
    }

    #[test]
    fn quotient_consistency() {
        // dim (F/N)_k + dim N_k = dim F_k
        let x = var(0);
        let y = var(1);
        let spec = FreeModuleSpec::ring(g11());
        let rels = vec![
            ModuleVector::from_polynomial(spec.clone(), x.multiply(&x)),
            ModuleVector::from_polynomial(spec.clone(), x.multiply(&y)),
        ];
        let n = PresentedModule::submodule(spec.clone(), rels.clone()).unwrap();
        let q = PresentedModule::quotient(spec.clone(), rels).unwrap();
        let f = PresentedModule::free(spec.clone());
        for k in 0..8 {
            assert_eq!(
                q.hilbert_function(k) + n.hilbert_function(k),
                f.hilbert_function(k)
            );
            assert_eq!(f.hilbert_function(k), spec.slice_dim(k));
        }
    }

    #[test]
    fn multiplication_matrix_respects_relations() {
        // In C[z]/(z1), multiplication by z1 is zero.
        let spec = FreeModuleSpec::ring(g11());
        let rels = vec![ModuleVector::from_polynomial(spec.clone(), var(0))];
        let q = PresentedModule::quotient(spec, rels).unwrap();
        let m = q.multiplication_matrix(1, 0);
        assert!(m.is_zero());
        let by_y = q.multiplication_matrix(1, 1);
        assert_eq!((by_y.rows(), by_y.cols()), (1, 1));
        assert_eq!(by_y.at(0, 0), &rat(1, 1));
    }
}
