//! Iterated syzygy extraction: minimal graded free resolutions with
//! polynomial matrices, minimality and slice-exactness checks, fiber
//! homology and the Fredholm index.
//!
//! The resolution of a presented module `M` is built degree by degree. The
//! presentation map sends the basis of a shifted free module onto a minimal
//! generating set of `M`; its kernel is scanned slice-wise up to a
//! truncation degree, new syzygy generators being exactly the kernel
//! vectors independent from monomial multiples of the syzygies already
//! found. Iterating yields the complex `(𝒟•, φ•)` with every `φ^p(0) = 0`.
//!
//! Truncation is explicit: a resolution carries a [`Certification`] telling
//! whether the scan degree provably covers all syzygies (exact bounds exist
//! for monomial data), was vouched for by the caller, or merely survived a
//! trailing empty-kernel window.

use std::fmt;

use num_traits::Zero;

use crate::inner::{CoordOrthogonalizer, InnerKernel};
use crate::linalg::{RatMatrix, RowSpan};
use crate::module::{FreeModuleSpec, ModuleVector, PresentedModule, SliceIndex};
use crate::poly::{monomial_basis, Degree, Homogeneity, Polynomial, Scalar};
use crate::wander::{minimize_with_relations, MinimizeMode};
use crate::Error;

/// A dense matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    n_vars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, n_vars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            n_vars,
            entries: vec![Polynomial::zero(n_vars); rows * cols],
        }
    }

    /// Matrix whose `j`-th column holds the components of `columns[j]`.
    pub fn from_column_vectors(columns: &[ModuleVector], rows: usize, n_vars: usize) -> Self {
        let mut m = PolyMatrix::zeros(rows, columns.len(), n_vars);
        for (j, v) in columns.iter().enumerate() {
            assert_eq!(v.spec().rank(), rows, "column rank mismatch");
            for i in 0..rows {
                *m.at_mut(i, j) = v.component(i).clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn at(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn multiply(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, other.cols, self.n_vars);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if !b.is_zero() {
                        let sum = out.at(i, j) + &a.multiply(b);
                        *out.at_mut(i, j) = sum;
                    }
                }
            }
        }
        out
    }

    /// Evaluate every entry at a rational point.
    pub fn evaluate(&self, point: &[Scalar]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).evaluate(point);
            }
        }
        out
    }
}

/// One step `φ^p : ℂ[z]⊗𝒟^p → ℂ[z]⊗𝒟^{p−1}` of a resolution.
///
/// Rows are indexed by the basis of the previous step, columns by the new
/// syzygy generators; column `j` is homogeneous of degree
/// `generator_degrees[j]` in the shifted sense.
#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub generator_degrees: Vec<Degree>,
    pub phi: PolyMatrix,
}

impl ResolutionStep {
    pub fn cols(&self) -> usize {
        self.generator_degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generator_degrees.is_empty()
    }

    /// Column `j` as a vector in the previous free module.
    pub fn column_vector(&self, prev: &FreeModuleSpec, j: usize) -> ModuleVector {
        let components = (0..self.phi.rows()).map(|i| self.phi.at(i, j).clone()).collect();
        ModuleVector::new(prev.clone(), components)
    }

    pub fn column_vectors(&self, prev: &FreeModuleSpec) -> Vec<ModuleVector> {
        (0..self.cols()).map(|j| self.column_vector(prev, j)).collect()
    }
}

/// Why (or why not) a resolution is complete at its truncation degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certification {
    /// Monomial data: all syzygy degrees are provably at most `bound`.
    MonomialBound { bound: Degree },
    /// The caller supplied a completeness bound.
    UserBound { bound: Degree },
    /// No bound known; the scan ended with an empty-kernel window of the
    /// given width. Heuristic evidence, not a proof.
    HeuristicWindow { window: Degree },
    /// The scan degree may miss syzygies.
    Incomplete { diagnostic: String },
}

impl Certification {
    pub fn is_complete(&self) -> bool {
        !matches!(self, Certification::Incomplete { .. })
    }

    pub fn is_heuristic(&self) -> bool {
        matches!(self, Certification::HeuristicWindow { .. })
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certification::MonomialBound { bound } => {
                write!(f, "certified (monomial support bound {bound})")
            }
            Certification::UserBound { bound } => {
                write!(f, "certified (user-supplied bound {bound})")
            }
            Certification::HeuristicWindow { window } => {
                write!(f, "certified (heuristic: empty kernel window of width {window})")
            }
            Certification::Incomplete { diagnostic } => write!(f, "not certified: {diagnostic}"),
        }
    }
}

/// A minimal graded free resolution, truncated at `truncation_degree`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: PresentedModule,
    /// Minimal generators of the target; the presentation map sends the
    /// `i`-th basis vector of the step-0 free module to `pi0[i]`.
    pub pi0: Vec<ModuleVector>,
    pub d0_degrees: Vec<Degree>,
    /// The maps `φ^p` for `p = 1, …, length`.
    pub steps: Vec<ResolutionStep>,
    pub truncation_degree: Degree,
    pub certification: Certification,
}

impl Resolution {
    pub fn certified_complete(&self) -> bool {
        self.certification.is_complete()
    }

    /// Number of syzygy steps beyond the presentation.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// Generator degrees of the `p`-th free module (`p = 0` is the
    /// presentation).
    pub fn step_degrees(&self, p: usize) -> &[Degree] {
        if p == 0 {
            &self.d0_degrees
        } else {
            &self.steps[p - 1].generator_degrees
        }
    }

    /// Rank of the `p`-th free module, 0 beyond the resolution length.
    pub fn rank(&self, p: usize) -> usize {
        if p == 0 {
            self.d0_degrees.len()
        } else if p <= self.steps.len() {
            self.steps[p - 1].generator_degrees.len()
        } else {
            0
        }
    }

    pub fn free_spec(&self, p: usize) -> Option<FreeModuleSpec> {
        let degrees = if p == 0 {
            self.d0_degrees.clone()
        } else if p <= self.steps.len() {
            self.steps[p - 1].generator_degrees.clone()
        } else {
            return None;
        };
        if degrees.is_empty() {
            return None;
        }
        Some(FreeModuleSpec::new(self.target.grading().clone(), degrees))
    }

    /// Largest generator degree appearing anywhere in the resolution.
    pub fn max_step_degree(&self) -> Option<Degree> {
        let mut best = self.d0_degrees.iter().copied().max();
        for s in &self.steps {
            best = best.max(s.generator_degrees.iter().copied().max());
        }
        best
    }

    fn assert_complex(&self) {
        for w in self.steps.windows(2) {
            assert!(
                w[0].phi.multiply(&w[1].phi).is_zero(),
                "consecutive resolution maps must compose to zero"
            );
        }
        let Some(first) = self.steps.first() else {
            return;
        };
        let spec0 = self.free_spec(0).expect("presentation is nonempty");
        for j in 0..first.cols() {
            let col = first.column_vector(&spec0, j);
            let mut image = self.target.spec().zero_vector();
            for (i, p) in col.components().iter().enumerate() {
                if !p.is_zero() {
                    image = image.add(&self.pi0[i].multiply_polynomial(p));
                }
            }
            if image.is_zero() {
                continue;
            }
            let Homogeneity::Homogeneous(d) = image.degree() else {
                panic!("syzygy image must be homogeneous");
            };
            let data = self.target.slice_data(d);
            let index = SliceIndex::new(self.target.spec(), d);
            assert!(
                data.rel_span.contains(&index.coords(&image)),
                "first syzygies must map into the relation submodule"
            );
        }
    }
}

/// Options for [`minimal_resolution`].
#[derive(Clone, Debug)]
pub struct ResolveOptions {
    /// Truncation degree for the syzygy scan; defaults to
    /// `PresentedModule::default_truncation`.
    pub max_degree: Option<Degree>,
    /// A caller-supplied completeness bound, trusted as is.
    pub certify_bound: Option<Degree>,
    pub kernel: InnerKernel,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            max_degree: None,
            certify_bound: None,
            kernel: InnerKernel::HardyPolydisc,
        }
    }
}

/// The degree-preserving minimal presentation of a module: the degrees of a
/// minimal generating set together with the generators themselves
/// (orthogonal mode, taken modulo the relations of the target).
pub fn presentation(
    m: &PresentedModule,
    kernel: &InnerKernel,
) -> Result<(Vec<Degree>, Vec<ModuleVector>), Error> {
    let min = minimize_with_relations(
        m.spec(),
        m.relations(),
        m.generators(),
        MinimizeMode::Orthogonal,
        kernel,
    )?;
    Ok((min.degrees, min.vectors))
}

/// Columns of the degree-`k` slice of the map together with an independent
/// set of relation multiples appended; the kernel of the augmented matrix
/// projects onto the slice kernel of the induced map into the quotient.
fn augmented_slice_columns(
    source: &FreeModuleSpec,
    images: &[ModuleVector],
    target_relations: &[ModuleVector],
    target_index: &SliceIndex,
    k: Degree,
) -> (Vec<Vec<Scalar>>, usize) {
    let grading = source.grading();
    let src_pairs = source.slice_pairs(k);
    let mut columns: Vec<Vec<Scalar>> = src_pairs
        .iter()
        .map(|(i, alpha)| target_index.coords_shifted(&images[*i], alpha))
        .collect();
    let src_dim = columns.len();
    let mut rel_span = RowSpan::new(target_index.dim());
    for r in target_relations {
        let Homogeneity::Homogeneous(d) = r.degree() else {
            continue;
        };
        if d > k {
            continue;
        }
        for alpha in monomial_basis(grading, k - d) {
            let coords = target_index.coords_shifted(r, &alpha);
            if rel_span.insert(coords.clone()) {
                columns.push(coords);
            }
        }
    }
    (columns, src_dim)
}

/// Compute the next resolution step: minimal generators of the kernel of the
/// map sending the `i`-th basis vector of `source` to `images[i]`, modulo
/// the target relations, scanned for degrees `k ≤ up_to`.
///
/// New generators at degree `k` are kernel-slice vectors independent from
/// monomial multiples of the syzygies already found, orthogonalized under
/// the kernel; the assembled matrix has homogeneous columns and zero
/// constant terms.
pub fn syzygies(
    source: &FreeModuleSpec,
    images: &[ModuleVector],
    target_relations: &[ModuleVector],
    up_to: Degree,
    kernel: &InnerKernel,
) -> ResolutionStep {
    assert_eq!(images.len(), source.rank(), "one image per basis vector");
    let target_spec = images[0].spec().clone();
    for (i, v) in images.iter().enumerate() {
        assert_eq!(v.spec(), &target_spec, "images in one target module");
        match v.degree() {
            Homogeneity::Zero => {}
            Homogeneity::Homogeneous(d) => {
                assert_eq!(d, source.shift(i), "image degree must match source shift")
            }
            Homogeneity::Mixed => panic!("images must be homogeneous"),
        }
    }

    let grading = source.grading();
    let mut found: Vec<(Degree, ModuleVector)> = Vec::new();
    for k in 0..=up_to {
        if source.slice_dim(k) == 0 {
            continue;
        }
        let target_index = SliceIndex::new(&target_spec, k);
        let (columns, src_dim) =
            augmented_slice_columns(source, images, target_relations, &target_index, k);
        let matrix = RatMatrix::from_columns(target_index.dim(), &columns);
        let kernel_vectors = matrix.kernel_basis();
        if kernel_vectors.is_empty() {
            continue;
        }

        let source_index = SliceIndex::new(source, k);
        let weights: Vec<Scalar> = source_index
            .pairs()
            .iter()
            .map(|(_, alpha)| kernel.monomial_weight(alpha))
            .collect();
        let mut gs = CoordOrthogonalizer::new(weights);
        for (d, v) in &found {
            for alpha in monomial_basis(grading, k - d) {
                gs.push(source_index.coords_shifted(v, &alpha));
            }
        }
        for cand in kernel_vectors {
            let coords = cand[..src_dim].to_vec();
            if coords.iter().all(Zero::is_zero) {
                continue;
            }
            if gs.push(coords).is_some() {
                let v = source_index.vector(source, gs.basis_last().expect("just pushed"));
                found.push((k, v));
            }
        }
    }

    let mut generator_degrees = Vec::with_capacity(found.len());
    let mut vectors = Vec::with_capacity(found.len());
    for (d, v) in found {
        generator_degrees.push(d);
        vectors.push(v);
    }
    let phi = PolyMatrix::from_column_vectors(&vectors, source.rank(), source.n_vars());
    ResolutionStep {
        generator_degrees,
        phi,
    }
}

enum BoundKind {
    Monomial,
    User,
}

/// A monomial vector: exactly one nonzero component, itself a monomial.
fn is_monomial_vector(v: &ModuleVector) -> bool {
    let mut seen = false;
    for p in v.components() {
        if p.is_zero() {
            continue;
        }
        if seen || !p.is_monomial() {
            return false;
        }
        seen = true;
    }
    seen
}

fn has_unit_generators(m: &PresentedModule) -> bool {
    m.generators() == m.spec().unit_vectors().as_slice()
}

/// Support bound for monomial data: per free-module component, the sum of
/// the degrees of the divisibility-minimal monomials, beyond which no
/// syzygy of a monomial submodule or quotient can live.
fn monomial_bound(m: &PresentedModule, pi0: &[ModuleVector]) -> Option<Degree> {
    let spec = m.spec();
    let grading = m.grading();
    let per_component = |vectors: &[ModuleVector]| -> Option<Degree> {
        let mut best: Option<Degree> = None;
        for j in 0..spec.rank() {
            let s = spec.shift(j);
            let exponents: Vec<_> = vectors
                .iter()
                .filter(|v| !v.component(j).is_zero())
                .map(|v| v.component(j).terms().next().expect("monomial").0.clone())
                .collect();
            if exponents.is_empty() {
                continue;
            }
            let divides = |a: &crate::poly::Exponent, b: &crate::poly::Exponent| {
                a.entries().iter().zip(b.entries()).all(|(x, y)| x <= y)
            };
            let mut sum = 0;
            for (i, alpha) in exponents.iter().enumerate() {
                let redundant = exponents.iter().enumerate().any(|(l, beta)| {
                    l != i && divides(beta, alpha) && (!divides(alpha, beta) || l < i)
                });
                if !redundant {
                    sum += grading.degree_of(alpha);
                }
            }
            best = Some(best.unwrap_or(0).max(s + sum));
        }
        best
    };

    if m.relations().is_empty() {
        if pi0.iter().all(is_monomial_vector) {
            per_component(pi0)
        } else {
            None
        }
    } else if has_unit_generators(m) && m.relations().iter().all(is_monomial_vector) {
        let shift_max = spec.shifts().iter().copied().max().unwrap_or(0);
        Some(per_component(m.relations()).unwrap_or(0).max(shift_max))
    } else {
        None
    }
}

/// Construct the minimal graded free resolution of `m`, scanning syzygies up
/// to the effective truncation degree (the smaller of the requested degree
/// and any known completeness bound).
pub fn minimal_resolution(m: &PresentedModule, opts: &ResolveOptions) -> Resolution {
    let (d0_degrees, pi0) =
        presentation(m, &opts.kernel).expect("module generators were validated at construction");
    let requested = opts.max_degree.unwrap_or_else(|| m.default_truncation());

    if pi0.is_empty() {
        return Resolution {
            target: m.clone(),
            pi0,
            d0_degrees,
            steps: Vec::new(),
            truncation_degree: requested,
            certification: Certification::MonomialBound { bound: 0 },
        };
    }

    let bound = match opts.certify_bound {
        Some(b) => Some((b, BoundKind::User)),
        None => monomial_bound(m, &pi0).map(|b| (b, BoundKind::Monomial)),
    };
    let scan = requested;

    let n = m.spec().n_vars();
    let mut steps: Vec<ResolutionStep> = Vec::new();
    let mut source = FreeModuleSpec::new(m.grading().clone(), d0_degrees.clone());
    let mut images = pi0.clone();
    let mut relations: Vec<ModuleVector> = m.relations().to_vec();
    loop {
        let step = syzygies(&source, &images, &relations, scan, &opts.kernel);
        if step.is_empty() {
            break;
        }
        // Hilbert syzygy bound: a (p > n)-th syzygy module would contradict
        // the slice kernels computed so far.
        assert!(
            steps.len() < n,
            "resolution length exceeded the variable count"
        );
        let next = FreeModuleSpec::new(m.grading().clone(), step.generator_degrees.clone());
        images = step.column_vectors(&source);
        relations = Vec::new();
        source = next;
        steps.push(step);
    }

    let certification = match bound {
        Some((b, BoundKind::Monomial)) if scan >= b => Certification::MonomialBound { bound: b },
        Some((b, BoundKind::User)) if scan >= b => Certification::UserBound { bound: b },
        _ => {
            let activity = {
                let mut best = d0_degrees.iter().copied().max().unwrap_or(0);
                for s in &steps {
                    best = best.max(s.generator_degrees.iter().copied().max().unwrap_or(0));
                }
                best
            };
            let data_degree = d0_degrees
                .iter()
                .copied()
                .chain(
                    m.relations()
                        .iter()
                        .filter_map(|r| r.degree().degree()),
                )
                .max()
                .unwrap_or(0);
            let window = m.grading().max_weight() + data_degree;
            if scan >= activity + window {
                Certification::HeuristicWindow { window }
            } else {
                Certification::Incomplete {
                    diagnostic: format!(
                        "truncation degree {scan} leaves no empty-kernel window of width \
                         {window} above the last syzygy degree {activity}; raise the scan \
                         degree or supply a completeness bound"
                    ),
                }
            }
        }
    };

    let resolution = Resolution {
        target: m.clone(),
        pi0,
        d0_degrees,
        steps,
        truncation_degree: scan,
        certification,
    };
    resolution.assert_complex();
    resolution
}

/// A nonzero constant term in a resolution map.
#[derive(Clone, Debug)]
pub struct MinimalityViolation {
    /// Step index `p ≥ 1`.
    pub step: usize,
    pub row: usize,
    pub col: usize,
    pub constant: Scalar,
}

/// Result of the `φ^p(0) = 0` check.
#[derive(Clone, Debug, Default)]
pub struct MinimalityReport {
    pub violations: Vec<MinimalityViolation>,
}

impl MinimalityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for MinimalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "minimality: ok (all constant terms vanish)")
        } else {
            let v = &self.violations[0];
            write!(
                f,
                "minimality violated: phi^{} entry ({}, {}) has constant term {} \
                 ({} violation(s) total)",
                v.step,
                v.row,
                v.col,
                v.constant,
                self.violations.len()
            )
        }
    }
}

/// Check that every entry of every `φ^p` has zero constant term.
pub fn check_minimality(r: &Resolution) -> MinimalityReport {
    let mut violations = Vec::new();
    for (s, step) in r.steps.iter().enumerate() {
        for i in 0..step.phi.rows() {
            for j in 0..step.phi.cols() {
                let c = step.phi.at(i, j).constant_term();
                if !c.is_zero() {
                    violations.push(MinimalityViolation {
                        step: s + 1,
                        row: i,
                        col: j,
                        constant: c,
                    });
                }
            }
        }
    }
    MinimalityReport { violations }
}

/// Result of the slice-exactness and Euler-characteristic checks.
#[derive(Clone, Debug)]
pub struct ExactnessReport {
    pub checked_up_to: Degree,
    pub composition_ok: bool,
    pub failures: Vec<String>,
}

impl ExactnessReport {
    pub fn is_ok(&self) -> bool {
        self.composition_ok && self.failures.is_empty()
    }
}

impl fmt::Display for ExactnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(f, "exactness: ok up to degree {}", self.checked_up_to)
        } else {
            write!(
                f,
                "exactness: {} failure(s) up to degree {}",
                self.failures.len() + usize::from(!self.composition_ok),
                self.checked_up_to
            )
        }
    }
}

/// Verify, for every degree `k ≤ k_max`, that the resolution complex is
/// exact at each spot and that the alternating sum of the free-module slice
/// dimensions equals the Hilbert function of the target.
pub fn check_exactness(r: &Resolution, k_max: Degree) -> ExactnessReport {
    assert!(
        k_max <= r.truncation_degree,
        "cannot check beyond the truncation degree"
    );
    let mut failures = Vec::new();

    // composition is exactly zero
    let mut composition_ok = true;
    for (p, w) in r.steps.windows(2).enumerate() {
        if !w[0].phi.multiply(&w[1].phi).is_zero() {
            composition_ok = false;
            failures.push(format!("phi^{} ∘ phi^{} != 0", p + 1, p + 2));
        }
    }

    let specs: Vec<Option<FreeModuleSpec>> = (0..=r.length()).map(|p| r.free_spec(p)).collect();
    let column_cache: Vec<Vec<ModuleVector>> = r
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| match &specs[i] {
            Some(prev) => s.column_vectors(prev),
            None => Vec::new(),
        })
        .collect();

    for k in 0..=k_max {
        // slice matrices of phi^p for p = 1..=L
        let mut ranks = vec![0usize; r.length() + 2];
        let mut nullities = vec![0usize; r.length() + 1];
        for p in 1..=r.length() {
            let (Some(prev), Some(src)) = (&specs[p - 1], &specs[p]) else {
                continue;
            };
            let target_index = SliceIndex::new(prev, k);
            let pairs = src.slice_pairs(k);
            let columns: Vec<Vec<Scalar>> = pairs
                .iter()
                .map(|(j, alpha)| target_index.coords_shifted(&column_cache[p - 1][*j], alpha))
                .collect();
            let matrix = RatMatrix::from_columns(target_index.dim(), &columns);
            let rank = matrix.rank();
            ranks[p] = rank;
            nullities[p] = matrix.cols() - rank;
        }

        // kernel of the presentation slice
        if let Some(f0) = &specs[0] {
            let target_index = SliceIndex::new(r.target.spec(), k);
            let (columns, _src_dim) =
                augmented_slice_columns(f0, &r.pi0, r.target.relations(), &target_index, k);
            let matrix = RatMatrix::from_columns(target_index.dim(), &columns);
            let pi0_nullity = matrix.cols() - matrix.rank();
            if pi0_nullity != ranks[1] {
                failures.push(format!(
                    "degree {k}: ker Π⁰ has dimension {pi0_nullity} but im φ¹ has rank {}",
                    ranks[1]
                ));
            }
        }

        for p in 1..=r.length() {
            if nullities[p] != ranks[p + 1] {
                failures.push(format!(
                    "degree {k}: ker φ^{p} has dimension {} but im φ^{} has rank {}",
                    nullities[p],
                    p + 1,
                    ranks[p + 1]
                ));
            }
        }

        // Euler identity
        let mut euler: i64 = 0;
        for (p, spec) in specs.iter().enumerate() {
            let dim = spec.as_ref().map_or(0, |s| s.slice_dim(k)) as i64;
            euler += if p % 2 == 0 { dim } else { -dim };
        }
        let hilbert = r.target.hilbert_function(k) as i64;
        if euler != hilbert {
            failures.push(format!(
                "degree {k}: alternating slice dimensions give {euler} but the Hilbert \
                 function is {hilbert}"
            ));
        }
    }

    ExactnessReport {
        checked_up_to: k_max,
        composition_ok,
        failures,
    }
}

/// Homology dimensions of the fiber complex `(𝒟•, φ•(λ))` at a rational
/// point. Requires a certified resolution.
pub fn fiber_homology(r: &Resolution, point: &[Scalar]) -> Result<Vec<usize>, Error> {
    if !r.certified_complete() {
        return Err(Error::NotCertified);
    }
    let n = r.target.spec().n_vars();
    if point.len() != n {
        return Err(Error::PointDimension {
            expected: n,
            found: point.len(),
        });
    }
    let l = r.length();
    let dims: Vec<usize> = (0..=l).map(|p| r.rank(p)).collect();
    let ranks: Vec<usize> = r
        .steps
        .iter()
        .map(|s| s.phi.evaluate(point).rank())
        .collect();
    Ok((0..=l)
        .map(|p| {
            let incoming = if p < l { ranks[p] } else { 0 };
            let outgoing = if p == 0 { 0 } else { ranks[p - 1] };
            dims[p] - incoming - outgoing
        })
        .collect())
}

/// The index `Σ_p (−1)^p dim 𝒟^p` of a certified resolution.
pub fn fredholm_index(r: &Resolution) -> Result<i64, Error> {
    if !r.certified_complete() {
        return Err(Error::NotCertified);
    }
    let mut index: i64 = 0;
    for p in 0..=r.length() {
        let dim = r.rank(p) as i64;
        index += if p % 2 == 0 { dim } else { -dim };
    }
    Ok(index)
}
