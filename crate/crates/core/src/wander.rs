//! Wandering-subspace bases, graded Betti counts and minimization of
//! homogeneous generating sets.
//!
//! For a graded module `M`, the degree-`k` slice of its wandering subspace is
//! the orthogonal complement `M_k ⊖ Σ_i z_i M_{k−γ_i}`; its dimension `β_k`
//! counts the minimal homogeneous generators of degree `k`, independently of
//! the chosen inner product. [`betti_counts`] computes the `β_k` purely by
//! rank comparisons, and serves as the independent oracle for
//! [`minimize_generators`], which walks the degrees in ascending order and
//! either discards generators that lie in the span of monomial multiples of
//! the generators kept so far, or replaces them by orthogonalized
//! representatives.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::inner::{inner_product, CoordOrthogonalizer, InnerKernel};
use crate::linalg::RowSpan;
use crate::module::{FreeModuleSpec, ModuleVector, PresentedModule, SliceIndex};
use crate::poly::{monomial_basis, Degree, Exponent, Homogeneity, Scalar};
use crate::Error;

/// Per-degree counts of minimal homogeneous generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiRow {
    counts: BTreeMap<Degree, usize>,
}

impl BettiRow {
    pub fn from_counts(counts: BTreeMap<Degree, usize>) -> Self {
        let counts = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        BettiRow { counts }
    }

    pub fn from_degrees(degrees: &[Degree]) -> Self {
        let mut counts = BTreeMap::new();
        for &d in degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        BettiRow { counts }
    }

    pub fn get(&self, k: Degree) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// Total number of minimal generators, `Σ_k β_k`.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Degree, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn counts(&self) -> &BTreeMap<Degree, usize> {
        &self.counts
    }
}

impl fmt::Display for BettiRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        write!(f, "}}")
    }
}

/// How [`minimize_generators`] builds its output.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MinimizeMode {
    /// Replace each surviving generator by its Gram–Schmidt residual; the
    /// output is pairwise orthogonal and orthogonal to all lower multiples.
    Orthogonal,
    /// Keep the surviving generators themselves; the output is a subset of
    /// the input, identified by index.
    Subset,
}

/// A minimal homogeneous generating set.
#[derive(Clone, Debug)]
pub struct MinimalGenerators {
    /// The minimal generators, sorted by degree (ties in input order).
    pub vectors: Vec<ModuleVector>,
    /// Their degrees, parallel to `vectors`.
    pub degrees: Vec<Degree>,
    /// Input index each output vector originates from.
    pub source_indices: Vec<usize>,
    /// Indices of zero input vectors that were dropped.
    pub dropped_zero: Vec<usize>,
    pub mode: MinimizeMode,
    pub kernel: InnerKernel,
}

impl MinimalGenerators {
    pub fn betti_row(&self) -> BettiRow {
        BettiRow::from_degrees(&self.degrees)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Orthogonal basis of the degree-`k` wandering slice
/// `M_k ⊖ Σ_i z_i M_{k−γ_i}` under the given kernel.
///
/// Computed by orthogonalizing the multiples basis (relation multiples plus
/// generator multiples with `α ≠ 0`) followed by the slice representatives;
/// the survivors of the second block are the result. Its dimension is the
/// Betti number `β_k`.
pub fn wandering_slice(m: &PresentedModule, k: Degree, kernel: &InnerKernel) -> Vec<ModuleVector> {
    let data = m.slice_data(k);
    let index = SliceIndex::new(m.spec(), k);
    let weights = slice_weights(&index, kernel);
    let mut gs = CoordOrthogonalizer::new(weights);
    for coords in data.rel_basis.iter().chain(&data.submax_basis) {
        gs.push(coords.clone());
    }
    let mut out = Vec::new();
    for coords in &data.representatives {
        if gs.push(coords.clone()).is_some() {
            out.push(index.vector(m.spec(), last_basis_vector(&gs)));
        }
    }
    out
}

fn last_basis_vector(gs: &CoordOrthogonalizer) -> &[Scalar] {
    gs.basis_last().expect("just pushed")
}

fn slice_weights(index: &SliceIndex, kernel: &InnerKernel) -> Vec<Scalar> {
    index
        .pairs()
        .iter()
        .map(|(_, alpha)| kernel.monomial_weight(alpha))
        .collect()
}

/// The graded Betti row `β_k = dim M_k − dim (Σ_i z_i M)_k` for `k ≤ up_to`.
///
/// A pure rank computation without any inner product; this is the
/// independent oracle the minimization algorithm is checked against.
pub fn betti_counts(m: &PresentedModule, up_to: Degree) -> BettiRow {
    let mut counts = BTreeMap::new();
    for k in 0..=up_to {
        let dim = m.hilbert_function(k);
        let covered = m.submax_dim(k);
        if dim > covered {
            counts.insert(k, dim - covered);
        }
    }
    BettiRow { counts }
}

/// Minimal number of generators `N = Σ_k β_k` of the module.
pub fn cyclicity(m: &PresentedModule) -> usize {
    match m.max_generator_degree() {
        None => 0,
        Some(d) => betti_counts(m, d).total(),
    }
}

/// Transform homogeneous generators of a submodule into a minimal generating
/// set for the same submodule.
///
/// Generators are processed by ascending degree, ties in input order. At
/// each degree the span of all monomial multiples of the generators kept so
/// far is formed; generators inside that span are removed, the rest survive
/// (orthogonalized in [`MinimizeMode::Orthogonal`], verbatim in
/// [`MinimizeMode::Subset`]). Zero input vectors are dropped and recorded.
pub fn minimize_generators(
    generators: &[ModuleVector],
    mode: MinimizeMode,
    kernel: &InnerKernel,
) -> Result<MinimalGenerators, Error> {
    let Some(first) = generators.iter().find(|g| !g.is_zero()) else {
        return Ok(MinimalGenerators {
            vectors: Vec::new(),
            degrees: Vec::new(),
            source_indices: Vec::new(),
            dropped_zero: (0..generators.len()).collect(),
            mode,
            kernel: kernel.clone(),
        });
    };
    let spec = first.spec().clone();
    minimize_with_relations(&spec, &[], generators, mode, kernel)
}

/// Minimization inside an ambient module with relations: spans and inner
/// products are taken modulo the relation slices. Used by the resolution
/// presentation step for quotient targets.
pub(crate) fn minimize_with_relations(
    spec: &FreeModuleSpec,
    relations: &[ModuleVector],
    generators: &[ModuleVector],
    mode: MinimizeMode,
    kernel: &InnerKernel,
) -> Result<MinimalGenerators, Error> {
    // validate and stage the input
    let mut staged: Vec<(Degree, usize)> = Vec::new();
    let mut dropped_zero = Vec::new();
    for (index, g) in generators.iter().enumerate() {
        if g.spec() != spec {
            return Err(Error::SpecMismatch);
        }
        match g.degree() {
            Homogeneity::Zero => dropped_zero.push(index),
            Homogeneity::Mixed => {
                return Err(Error::NotHomogeneous {
                    role: "generator",
                    index,
                })
            }
            Homogeneity::Homogeneous(d) => staged.push((d, index)),
        }
    }
    staged.sort_by_key(|&(d, index)| (d, index));

    let grading = spec.grading();
    let mut kept: Vec<(Degree, ModuleVector, usize)> = Vec::new();

    let mut s = 0;
    while s < staged.len() {
        let degree = staged[s].0;
        let mut stage_members = Vec::new();
        while s < staged.len() && staged[s].0 == degree {
            stage_members.push(staged[s].1);
            s += 1;
        }

        let index = SliceIndex::new(spec, degree);

        // Multiples of everything already fixed: relation multiples of this
        // degree plus monomial multiples of the kept generators of lower
        // degree.
        let mut block: Vec<Vec<Scalar>> = Vec::new();
        for r in relations {
            let Homogeneity::Homogeneous(d) = r.degree() else {
                continue;
            };
            if d > degree {
                continue;
            }
            for alpha in monomial_basis(grading, degree - d) {
                block.push(index.coords_shifted(r, &alpha));
            }
        }
        for (d, v, _) in &kept {
            if *d >= degree {
                continue;
            }
            for alpha in monomial_basis(grading, degree - d) {
                block.push(index.coords_shifted(v, &alpha));
            }
        }

        match mode {
            MinimizeMode::Orthogonal => {
                let weights = slice_weights(&index, kernel);
                let mut gs = CoordOrthogonalizer::new(weights);
                for b in block {
                    gs.push(b);
                }
                for &i in &stage_members {
                    let coords = index.coords(&generators[i]);
                    if gs.push(coords).is_some() {
                        let vector = index.vector(spec, last_basis_vector(&gs));
                        kept.push((degree, vector, i));
                    }
                }
            }
            MinimizeMode::Subset => {
                let mut span = RowSpan::new(index.dim());
                for b in block {
                    span.insert(b);
                }
                for &i in &stage_members {
                    let coords = index.coords(&generators[i]);
                    if span.insert(coords) {
                        kept.push((degree, generators[i].clone(), i));
                    }
                }
            }
        }
    }

    let mut vectors = Vec::with_capacity(kept.len());
    let mut degrees = Vec::with_capacity(kept.len());
    let mut source_indices = Vec::with_capacity(kept.len());
    for (d, v, i) in kept {
        degrees.push(d);
        vectors.push(v);
        source_indices.push(i);
    }
    Ok(MinimalGenerators {
        vectors,
        degrees,
        source_indices,
        dropped_zero,
        mode,
        kernel: kernel.clone(),
    })
}

/// A failed orthogonality condition: `⟨vectors[later], z^multiplier ·
/// vectors[earlier]⟩ = value ≠ 0`.
#[derive(Clone, Debug)]
pub struct OrthogonalityViolation {
    pub later: usize,
    pub earlier: usize,
    pub multiplier: Exponent,
    pub value: Scalar,
}

/// Result of checking the sufficient orthogonality conditions on a minimal
/// generating set.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    /// Number of inner products checked.
    pub checked: usize,
    /// The first violation in scan order, if any.
    pub violation: Option<OrthogonalityViolation>,
}

impl OrthogonalityReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for OrthogonalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "orthogonality: ok ({} products checked)", self.checked),
            Some(v) => write!(
                f,
                "orthogonality violated: <x[{}], z^{:?} x[{}]> = {}",
                v.later, v.multiplier, v.earlier, v.value
            ),
        }
    }
}

/// Check that an orthogonal-mode output satisfies the sufficient
/// orthogonality conditions: for every pair of output vectors with degrees
/// `k_p ≤ k_q` and every monomial `z^α` of weighted degree `k_q − k_p`, the
/// inner product `⟨x_q, z^α x_p⟩` vanishes exactly (pairs of equal degree are
/// checked for plain pairwise orthogonality).
pub fn verify_minimal_orthogonality(result: &MinimalGenerators) -> OrthogonalityReport {
    assert_eq!(
        result.mode,
        MinimizeMode::Orthogonal,
        "orthogonality conditions apply to orthogonal-mode output"
    );
    let mut checked = 0;
    for q in 0..result.vectors.len() {
        for p in 0..q {
            let (kq, kp) = (result.degrees[q], result.degrees[p]);
            debug_assert!(kp <= kq, "output must be sorted by degree");
            let grading = result.vectors[p].spec().grading();
            for alpha in monomial_basis(grading, kq - kp) {
                let multiple = result.vectors[p].multiply_monomial(&alpha);
                let value = inner_product(&result.vectors[q], &multiple, &result.kernel);
                checked += 1;
                if !value.is_zero() {
                    return OrthogonalityReport {
                        checked,
                        violation: Some(OrthogonalityViolation {
                            later: q,
                            earlier: p,
                            multiplier: alpha,
                            value,
                        }),
                    };
                }
            }
        }
    }
    OrthogonalityReport {
        checked,
        violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::PresentedModule;
    use crate::poly::{Grading, Polynomial};

    fn g11() -> Grading {
        Grading::standard(2)
    }

    fn var(i: usize) -> Polynomial {
        Polynomial::variable(2, i)
    }

    fn ring_vec(p: Polynomial) -> ModuleVector {
        ModuleVector::from_polynomial(FreeModuleSpec::ring(g11()), p)
    }

    fn hardy() -> InnerKernel {
        InnerKernel::HardyPolydisc
    }

    #[test]
    fn wandering_slice_examples() {
        let x = var(0);
        let y = var(1);
        let m = PresentedModule::ideal(g11(), vec![x.clone(), y.clone()]).unwrap();
        let w1 = wandering_slice(&m, 1, &hardy());
        assert_eq!(w1.len(), 2);
        assert_eq!(w1[0].component(0), &x);
        assert_eq!(w1[1].component(0), &y);
        assert!(wandering_slice(&m, 2, &hardy()).is_empty());

        let zero = PresentedModule::submodule(FreeModuleSpec::ring(g11()), vec![]).unwrap();
        for k in 0..4 {
            assert!(wandering_slice(&zero, k, &hardy()).is_empty());
        }
    }

    #[test]
    fn betti_examples() {
        let x = var(0);
        let y = var(1);
        let sq =
            PresentedModule::ideal(g11(), vec![x.multiply(&x), x.multiply(&y), y.multiply(&y)])
                .unwrap();
        let row = betti_counts(&sq, 4);
        assert_eq!(row.counts(), &BTreeMap::from([(2, 3)]));

        let redundant =
            PresentedModule::ideal(g11(), vec![x.clone(), x.multiply(&y)]).unwrap();
        assert_eq!(betti_counts(&redundant, 4).counts(), &BTreeMap::from([(1, 1)]));

        let g12 = Grading::new(vec![1, 2]).unwrap();
        let m = PresentedModule::ideal(
            g12,
            vec![
                Polynomial::variable(2, 0).multiply(&Polynomial::variable(2, 0)),
                Polynomial::variable(2, 1),
            ],
        )
        .unwrap();
        assert_eq!(betti_counts(&m, 4).counts(), &BTreeMap::from([(2, 2)]));
    }

    #[test]
    fn minimize_worked_example() {
        let x = var(0);
        let y = var(1);
        let gens = vec![
            ring_vec(x.clone()),
            ring_vec(&x + &y),
            ring_vec(y.multiply(&y)),
        ];

        let orth = minimize_generators(&gens, MinimizeMode::Orthogonal, &hardy()).unwrap();
        assert_eq!(orth.degrees, vec![1, 1]);
        assert_eq!(orth.vectors[0], ring_vec(x.clone()));
        assert_eq!(orth.vectors[1], ring_vec(y.clone()));
        assert_eq!(orth.source_indices, vec![0, 1]);

        let subset = minimize_generators(&gens, MinimizeMode::Subset, &hardy()).unwrap();
        assert_eq!(subset.degrees, vec![1, 1]);
        assert_eq!(subset.vectors[0], gens[0]);
        assert_eq!(subset.vectors[1], gens[1]);
        assert_eq!(subset.source_indices, vec![0, 1]);
    }

    #[test]
    fn minimize_keeps_independent_set() {
        let x = var(0);
        let y = var(1);
        let gens = vec![
            ring_vec(x.multiply(&x)),
            ring_vec(x.multiply(&y)),
            ring_vec(y.multiply(&y)),
        ];
        let out = minimize_generators(&gens, MinimizeMode::Orthogonal, &hardy()).unwrap();
        assert_eq!(out.len(), 3);
        assert_eq!(out.betti_row().counts(), &BTreeMap::from([(2, 3)]));
    }

    #[test]
    fn minimize_empty_input() {
        let out = minimize_generators(&[], MinimizeMode::Orthogonal, &hardy()).unwrap();
        assert!(out.is_empty());
        assert!(out.dropped_zero.is_empty());
    }

    #[test]
    fn minimize_drops_zero_vectors() {
        let spec = FreeModuleSpec::ring(g11());
        let gens = vec![spec.zero_vector(), ring_vec(var(0))];
        let out = minimize_generators(&gens, MinimizeMode::Subset, &hardy()).unwrap();
        assert_eq!(out.dropped_zero, vec![0]);
        assert_eq!(out.len(), 1);
        assert_eq!(out.source_indices, vec![1]);
    }

    #[test]
    fn minimize_rejects_mixed_input() {
        let mixed = ring_vec(&var(0) + &var(1).multiply(&var(1)));
        let err =
            minimize_generators(&[mixed], MinimizeMode::Orthogonal, &hardy()).unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { .. }));
    }

    #[test]
    fn verify_orthogonality_success_and_violation() {
        let x = var(0);
        let y = var(1);
        let gens = vec![
            ring_vec(x.clone()),
            ring_vec(&x + &y),
            ring_vec(y.multiply(&y)),
        ];
        let out = minimize_generators(&gens, MinimizeMode::Orthogonal, &hardy()).unwrap();
        assert!(verify_minimal_orthogonality(&out).is_ok());

        // hand-built non-minimal pair {z1, z1 z2}: fails at α = (0,1)
        let bad = MinimalGenerators {
            vectors: vec![ring_vec(x.clone()), ring_vec(x.multiply(&y))],
            degrees: vec![1, 2],
            source_indices: vec![0, 1],
            dropped_zero: vec![],
            mode: MinimizeMode::Orthogonal,
            kernel: hardy(),
        };
        let report = verify_minimal_orthogonality(&bad);
        let v = report.violation.expect("must fail");
        assert_eq!((v.later, v.earlier), (1, 0));
        assert_eq!(v.multiplier, Exponent::new(vec![0, 1]));
        assert_eq!(v.value, crate::poly::rat(1, 1));

        // single generator: vacuous success
        let single = minimize_generators(
            &[ring_vec(x.clone())],
            MinimizeMode::Orthogonal,
            &hardy(),
        )
        .unwrap();
        assert!(verify_minimal_orthogonality(&single).is_ok());
    }

    #[test]
    fn cyclicity_examples() {
        let x = var(0);
        let y = var(1);
        let m = PresentedModule::ideal(g11(), vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(cyclicity(&m), 2);

        let full = PresentedModule::free(FreeModuleSpec::ring(g11()));
        assert_eq!(cyclicity(&full), 1);

        let sq =
            PresentedModule::ideal(g11(), vec![x.multiply(&x), x.multiply(&y), y.multiply(&y)])
                .unwrap();
        assert_eq!(cyclicity(&sq), 3);
    }
}
