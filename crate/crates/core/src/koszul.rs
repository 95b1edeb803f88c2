//! Degree-sliced Koszul complex of the coordinate multiplication tuple on a
//! presented module, homology dimensions, and cross-validation of Betti
//! data against a resolution.
//!
//! The Koszul complex `Λ•M` has one exterior basis vector `e_S` per subset
//! `S ⊆ {1,…,n}`, carrying internal weight `Σ_{i∈S} γ_i`; the differential
//! sends `e_S ⊗ m` to `Σ_{i∈S} ± e_{S∖i} ⊗ z_i m`. Slicing at internal
//! degree `k` gives finite rational matrices assembled from the module's
//! multiplication maps, and the homology dimensions recover the generator
//! degrees of the minimal free resolution.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::linalg::RatMatrix;
use crate::module::PresentedModule;
use crate::poly::Degree;
use crate::resolve::Resolution;
use crate::Error;

/// Subsets of `{0,…,n−1}` of size `p`, as bit masks in ascending numeric
/// order.
fn subsets(n: usize, p: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == p {
            out.push(mask);
        }
    }
    out
}

fn subset_weight(m: &PresentedModule, mask: u32) -> Degree {
    let mut w = 0;
    for i in 0..m.spec().n_vars() {
        if mask & (1 << i) != 0 {
            w += m.grading().weight(i);
        }
    }
    w
}

fn block_dim(m: &PresentedModule, k: Degree, mask: u32) -> usize {
    match k.checked_sub(subset_weight(m, mask)) {
        Some(d) => m.hilbert_function(d),
        None => 0,
    }
}

/// The boundary map `δ_p` out of exterior degree `p` at internal degree `k`.
fn boundary_matrix(m: &PresentedModule, p: usize, k: Degree) -> RatMatrix {
    let n = m.spec().n_vars();
    if p == 0 || p > n {
        // δ_0 maps into the zero space; δ_p for p > n maps out of it
        let rows = if p == 0 { 0 } else { koszul_slice_dim(m, p - 1, k) };
        let cols = if p == 0 { koszul_slice_dim(m, 0, k) } else { 0 };
        return RatMatrix::zeros(rows, cols);
    }
    let sources = subsets(n, p);
    let targets = subsets(n, p - 1);
    let target_offset: BTreeMap<u32, usize> = {
        let mut off = BTreeMap::new();
        let mut total = 0;
        for &t in &targets {
            off.insert(t, total);
            total += block_dim(m, k, t);
        }
        off
    };
    let rows: usize = targets.iter().map(|&t| block_dim(m, k, t)).sum();
    let cols: usize = sources.iter().map(|&s| block_dim(m, k, s)).sum();
    let mut matrix = RatMatrix::zeros(rows, cols);

    let mut col_base = 0;
    for &s in &sources {
        let Some(source_degree) = k.checked_sub(subset_weight(m, s)) else {
            continue;
        };
        let dim = m.hilbert_function(source_degree);
        if dim == 0 {
            continue;
        }
        let mut position = 0;
        for i in 0..n {
            if s & (1 << i) == 0 {
                continue;
            }
            let target = s & !(1 << i);
            let mult = m.multiplication_matrix(source_degree, i);
            let row_base = target_offset[&target];
            let negate = position % 2 == 1;
            for r in 0..mult.rows() {
                for c in 0..mult.cols() {
                    let v = mult.at(r, c);
                    if !v.is_zero() {
                        *matrix.at_mut(row_base + r, col_base + c) +=
                            if negate { -v.clone() } else { v.clone() };
                    }
                }
            }
            position += 1;
        }
        col_base += dim;
    }
    matrix
}

/// Dimension of the Koszul slice `⊕_{|S|=p} M_{k−w(S)}`.
pub fn koszul_slice_dim(m: &PresentedModule, p: usize, k: Degree) -> usize {
    let n = m.spec().n_vars();
    if p > n {
        return 0;
    }
    subsets(n, p).iter().map(|&s| block_dim(m, k, s)).sum()
}

/// One slice of the Koszul complex: the boundary out of `(p, k)` and the
/// boundary into it. Their product is exactly zero.
#[derive(Clone, Debug)]
pub struct KoszulSlice {
    pub p: usize,
    pub k: Degree,
    /// Slice of `δ_p`, mapping out of exterior degree `p`.
    pub boundary_out: RatMatrix,
    /// Slice of `δ_{p+1}`, mapping into exterior degree `p`.
    pub boundary_in: RatMatrix,
}

impl KoszulSlice {
    pub fn homology_dim(&self) -> usize {
        self.boundary_out.cols() - self.boundary_out.rank() - self.boundary_in.rank()
    }
}

pub fn koszul_slice(m: &PresentedModule, p: usize, k: Degree) -> KoszulSlice {
    KoszulSlice {
        p,
        k,
        boundary_out: boundary_matrix(m, p, k),
        boundary_in: boundary_matrix(m, p + 1, k),
    }
}

/// `dim H_p(z, M)_k = dim ker δ_p − rank δ_{p+1}` at internal degree `k`.
pub fn koszul_homology_dim(m: &PresentedModule, p: usize, k: Degree) -> usize {
    if p > m.spec().n_vars() {
        return 0;
    }
    koszul_slice(m, p, k).homology_dim()
}

/// Graded homology dimensions for `p = 0..=n` and `k ≤ k_max`; entry `p` of
/// the result maps each internal degree with nonzero homology to its
/// dimension.
pub fn koszul_homology_table(m: &PresentedModule, k_max: Degree) -> Vec<BTreeMap<Degree, usize>> {
    let n = m.spec().n_vars();
    let mut table = vec![BTreeMap::new(); n + 1];
    for k in 0..=k_max {
        // share the boundary matrices between adjacent p
        let mut boundaries: Vec<RatMatrix> = Vec::with_capacity(n + 2);
        for p in 0..=n + 1 {
            boundaries.push(boundary_matrix(m, p, k));
        }
        for (p, row) in table.iter_mut().enumerate() {
            let dim =
                boundaries[p].cols() - boundaries[p].rank() - boundaries[p + 1].rank();
            if dim > 0 {
                row.insert(k, dim);
            }
        }
    }
    table
}

/// Total homology dimension `Σ_k dim H_p(z, M)_k` for `k ≤ k_max`.
pub fn koszul_total_homology(m: &PresentedModule, p: usize, k_max: Degree) -> usize {
    (0..=k_max).map(|k| koszul_homology_dim(m, p, k)).sum()
}

/// Outcome of comparing Koszul homology with the generator degrees of a
/// resolution.
#[derive(Clone, Debug)]
pub struct KoszulBettiReport {
    /// Hard check: total homology dimensions equal the free-module ranks.
    pub totals_ok: bool,
    /// Graded refinement: per-degree dimensions match the generator degrees.
    pub graded_ok: bool,
    pub scanned_to: Degree,
    pub mismatches: Vec<String>,
}

impl KoszulBettiReport {
    pub fn is_ok(&self) -> bool {
        self.totals_ok && self.graded_ok
    }
}

impl fmt::Display for KoszulBettiReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            write!(
                f,
                "koszul cross-check: ok up to degree {}",
                self.scanned_to
            )
        } else {
            write!(
                f,
                "koszul cross-check failed ({} mismatch(es), totals {}, graded {})",
                self.mismatches.len(),
                if self.totals_ok { "ok" } else { "failed" },
                if self.graded_ok { "ok" } else { "failed" },
            )
        }
    }
}

/// Compare the graded Koszul homology of the target module with the
/// generator degrees of a certified resolution: for each `p`, the degrees at
/// which `H_p(z, M)` is nonzero must match the degrees of the `p`-th
/// free module, with multiplicities.
pub fn koszul_betti_check(
    m: &PresentedModule,
    r: &Resolution,
) -> Result<KoszulBettiReport, Error> {
    if !r.certified_complete() {
        return Err(Error::NotCertified);
    }
    let n = m.spec().n_vars();
    let scan = r.truncation_degree;
    let table = koszul_homology_table(m, scan);
    let mut mismatches = Vec::new();
    let mut totals_ok = true;
    let mut graded_ok = true;
    for p in 0..=n {
        let expected: BTreeMap<Degree, usize> = {
            let mut counts = BTreeMap::new();
            if p <= r.length() {
                for &d in r.step_degrees(p) {
                    *counts.entry(d).or_insert(0) += 1;
                }
            }
            counts
        };
        let actual = &table[p];
        let total_actual: usize = actual.values().sum();
        let total_expected: usize = expected.values().sum();
        if total_actual != total_expected {
            totals_ok = false;
            mismatches.push(format!(
                "p = {p}: total homology {total_actual} != free-module rank {total_expected}"
            ));
        }
        if actual != &expected {
            graded_ok = false;
            mismatches.push(format!(
                "p = {p}: graded homology {actual:?} != generator degrees {expected:?}"
            ));
        }
    }
    Ok(KoszulBettiReport {
        totals_ok,
        graded_ok,
        scanned_to: scan,
        mismatches,
    })
}

/// The Euler characteristic of the Koszul homology, with the scan bound it
/// was computed under.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EulerIndex {
    pub value: i64,
    pub scan_bound: Degree,
}

impl fmt::Display for EulerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (scanned to degree {})", self.value, self.scan_bound)
    }
}

/// `Σ_p (−1)^p dim H_p(z, M)`, scanning internal degrees up to the module's
/// default truncation. Must agree with the Fredholm index of a certified
/// resolution of the same module.
pub fn euler_index(m: &PresentedModule) -> EulerIndex {
    let scan = m.default_truncation();
    EulerIndex {
        value: euler_index_up_to(m, scan),
        scan_bound: scan,
    }
}

/// The alternating homology sum scanned up to an explicit degree.
pub fn euler_index_up_to(m: &PresentedModule, k_max: Degree) -> i64 {
    let n = m.spec().n_vars();
    let table = koszul_homology_table(m, k_max);
    let mut value: i64 = 0;
    for (p, row) in table.iter().enumerate().take(n + 1) {
        let total: i64 = row.values().map(|&d| d as i64).sum();
        value += if p % 2 == 0 { total } else { -total };
    }
    value
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{FreeModuleSpec, ModuleVector};
    use crate::poly::{Grading, Polynomial};

    fn g11() -> Grading {
        Grading::standard(2)
    }

    fn var(i: usize) -> Polynomial {
        Polynomial::variable(2, i)
    }

    fn maximal_ideal() -> PresentedModule {
        PresentedModule::ideal(g11(), vec![var(0), var(1)]).unwrap()
    }

    fn origin_quotient() -> PresentedModule {
        let spec = FreeModuleSpec::ring(g11());
        let rels = vec![
            ModuleVector::from_polynomial(spec.clone(), var(0)),
            ModuleVector::from_polynomial(spec.clone(), var(1)),
        ];
        PresentedModule::quotient(spec, rels).unwrap()
    }

    #[test]
    fn boundary_squares_to_zero() {
        for m in [maximal_ideal(), origin_quotient()] {
            for p in 0..=2 {
                for k in 0..6 {
                    let slice = koszul_slice(&m, p, k);
                    let prod = slice.boundary_out.multiply(&slice.boundary_in);
                    assert!(prod.is_zero(), "δ∘δ != 0 at p={p}, k={k}");
                }
            }
        }
    }

    #[test]
    fn homology_of_maximal_ideal() {
        let m = maximal_ideal();
        assert_eq!(koszul_total_homology(&m, 0, 6), 2);
        assert_eq!(koszul_total_homology(&m, 1, 6), 1);
        assert_eq!(koszul_total_homology(&m, 2, 6), 0);
        // graded positions: H0 lives at k = 1, H1 at k = 2
        assert_eq!(koszul_homology_dim(&m, 0, 1), 2);
        assert_eq!(koszul_homology_dim(&m, 1, 2), 1);
    }

    #[test]
    fn homology_of_origin_quotient() {
        let q = origin_quotient();
        assert_eq!(koszul_total_homology(&q, 0, 6), 1);
        assert_eq!(koszul_total_homology(&q, 1, 6), 2);
        assert_eq!(koszul_total_homology(&q, 2, 6), 1);
        assert_eq!(koszul_homology_dim(&q, 0, 0), 1);
        assert_eq!(koszul_homology_dim(&q, 1, 1), 2);
        assert_eq!(koszul_homology_dim(&q, 2, 2), 1);
    }

    #[test]
    fn homology_of_free_module() {
        let f = PresentedModule::free(FreeModuleSpec::ring(g11()));
        assert_eq!(koszul_total_homology(&f, 0, 6), 1);
        assert_eq!(koszul_total_homology(&f, 1, 6), 0);
        assert_eq!(koszul_total_homology(&f, 2, 6), 0);
    }

    #[test]
    fn vanishes_beyond_variable_count() {
        let m = maximal_ideal();
        for k in 0..6 {
            assert_eq!(koszul_homology_dim(&m, 3, k), 0);
            assert_eq!(koszul_homology_dim(&m, 5, k), 0);
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_index(&maximal_ideal()).value, 1);
        assert_eq!(euler_index(&origin_quotient()).value, 0);
        let full = PresentedModule::free(FreeModuleSpec::ring(g11()));
        assert_eq!(euler_index(&full).value, 1);
    }

    #[test]
    fn betti_cross_check_on_worked_examples() {
        use crate::resolve::{minimal_resolution, ResolveOptions};

        for m in [
            maximal_ideal(),
            origin_quotient(),
            PresentedModule::free(FreeModuleSpec::ring(g11())),
        ] {
            let r = minimal_resolution(&m, &ResolveOptions::default());
            let report = koszul_betti_check(&m, &r).unwrap();
            assert!(report.totals_ok, "{:?}", report.mismatches);
            assert!(report.graded_ok, "{:?}", report.mismatches);
        }
    }

    #[test]
    fn cross_check_requires_certification() {
        use crate::resolve::{minimal_resolution, ResolveOptions};

        let x = var(0);
        let y = var(1);
        let f = &x.multiply(&x) + &y.multiply(&y);
        let m = PresentedModule::ideal(g11(), vec![f, x.multiply(&y)]).unwrap();
        let opts = ResolveOptions {
            max_degree: Some(2),
            ..ResolveOptions::default()
        };
        let r = minimal_resolution(&m, &opts);
        assert!(matches!(koszul_betti_check(&m, &r), Err(Error::NotCertified)));
    }
}
