//! Property tests for the algebraic invariants: exact decompositions,
//! elimination identities, orthogonality, and slice consistency.

use proptest::prelude::*;

use betti::inner::{gram_schmidt, inner_product, InnerKernel};
use betti::linalg::{in_span, RatMatrix};
use betti::module::{FreeModuleSpec, ModuleVector, PresentedModule};
use betti::poly::{
    monomial_basis, rat, Degree, Exponent, Grading, Homogeneity, Polynomial, Scalar,
};
use betti::wander::{betti_counts, minimize_generators, wandering_slice, MinimizeMode};

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, 1i64..=2).prop_map(|(n, d)| rat(n, d))
}

fn arb_grading() -> impl Strategy<Value = Grading> {
    prop::collection::vec(1u32..=2, 1..=3).prop_map(|w| Grading::new(w).unwrap())
}

fn arb_poly(n_vars: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=3, n_vars), arb_scalar()),
        0..5,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(n_vars);
        for (e, c) in terms {
            p = &p + &Polynomial::monomial(Exponent::new(e), c);
        }
        p
    })
}

/// A homogeneous polynomial of the given degree (possibly zero).
fn arb_homogeneous(g: &Grading, k: Degree) -> BoxedStrategy<Polynomial> {
    let basis = monomial_basis(g, k);
    let n_vars = g.n_vars();
    prop::collection::vec(arb_scalar(), basis.len()..=basis.len())
        .prop_map(move |coeffs| {
            let mut p = Polynomial::zero(n_vars);
            for (alpha, c) in basis.iter().zip(coeffs) {
                p = &p + &Polynomial::monomial(alpha.clone(), c);
            }
            p
        })
        .boxed()
}

fn arb_graded_poly() -> impl Strategy<Value = (Grading, Polynomial)> {
    arb_grading().prop_flat_map(|g| {
        let n = g.n_vars();
        (Just(g), arb_poly(n))
    })
}

/// A grading together with homogeneous polynomials of degrees in `range`.
fn arb_homogeneous_set(
    max_polys: usize,
    range: std::ops::RangeInclusive<Degree>,
) -> impl Strategy<Value = (Grading, Vec<(Degree, Polynomial)>)> {
    arb_grading().prop_flat_map(move |g| {
        let degrees = prop::collection::vec(range.clone(), 1..=max_polys);
        degrees.prop_flat_map(move |ds| {
            let g = g.clone();
            let strategies: Vec<BoxedStrategy<Polynomial>> =
                ds.iter().map(|&d| arb_homogeneous(&g, d)).collect();
            strategies.prop_map(move |polys| {
                (g.clone(), ds.iter().copied().zip(polys).collect::<Vec<_>>())
            })
        })
    })
}

fn arb_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(arb_scalar(), c), r)
            .prop_map(RatMatrix::from_rows)
    })
}

/// Independent count of `{α : ⟨α,γ⟩ = k}`, recursing over the last variable
/// (the library enumerates over the first).
fn count_exponents(weights: &[u32], k: Degree) -> u64 {
    match weights.split_last() {
        None => u64::from(k == 0),
        Some((&w, rest)) => (0..=k / w).map(|e| count_exponents(rest, k - e * w)).sum(),
    }
}

fn ring_vectors(g: &Grading, polys: Vec<Polynomial>) -> Vec<ModuleVector> {
    let spec = FreeModuleSpec::ring(g.clone());
    polys
        .into_iter()
        .map(|p| ModuleVector::from_polynomial(spec.clone(), p))
        .collect()
}

proptest! {
    #[test]
    fn components_resum_to_input((g, p) in arb_graded_poly()) {
        let parts = p.homogeneous_components(&g);
        let mut sum = Polynomial::zero(g.n_vars());
        for (k, part) in &parts {
            prop_assert_eq!(part.homogeneity(&g), Homogeneity::Homogeneous(*k));
            sum = &sum + part;
        }
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn homogeneous_product_adds_degrees(
        (g, polys) in arb_homogeneous_set(2, 0..=3),
    ) {
        let f = &polys[0].1;
        let (q_deg, h) = polys.last().unwrap();
        let prod = f.multiply(h);
        if prod.is_zero() {
            prop_assert!(matches!(prod.homogeneity(&g), Homogeneity::Zero));
        } else {
            prop_assert_eq!(
                prod.homogeneity(&g),
                Homogeneity::Homogeneous(polys[0].0 + q_deg)
            );
        }
    }

    #[test]
    fn monomial_basis_count_matches_recursion(g in arb_grading(), k in 0u32..=8) {
        let basis = monomial_basis(&g, k);
        prop_assert_eq!(basis.len() as u64, count_exponents(g.weights(), k));
        for alpha in &basis {
            prop_assert_eq!(g.degree_of(alpha), k);
        }
        let mut deduped = basis.clone();
        deduped.dedup();
        prop_assert_eq!(deduped.len(), basis.len());
    }

    #[test]
    fn rref_is_idempotent(m in arb_matrix()) {
        let (r1, p1) = m.rref();
        let (r2, p2) = r1.rref();
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(p1, p2);
    }

    #[test]
    fn rank_invariant_under_row_permutation(m in arb_matrix(), swap in any::<(usize, usize)>()) {
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let mut permuted = rows.clone();
        let (a, b) = (swap.0 % rows.len(), swap.1 % rows.len());
        permuted.swap(a, b);
        prop_assert_eq!(m.rank(), RatMatrix::from_rows(permuted).rank());
    }

    #[test]
    fn kernel_is_annihilated(m in arb_matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in kernel {
            prop_assert!(m.apply(&v).iter().all(|x| x == &rat(0, 1)));
        }
    }

    #[test]
    fn in_span_solutions_are_exact(
        m in arb_matrix(),
        coeffs in prop::collection::vec(arb_scalar(), 5),
    ) {
        // build a vector inside the span and check the reported coordinates
        let v: Vec<Scalar> = (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| m.at(i, j) * &coeffs[j % coeffs.len()])
                    .fold(rat(0, 1), |acc, x| acc + x)
            })
            .collect();
        let sol = in_span(&v, &m).expect("constructed inside the span");
        prop_assert_eq!(m.apply(&sol), v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gram_schmidt_output_is_orthogonal_with_span_rank(
        (g, polys) in arb_homogeneous_set(4, 0..=3),
    ) {
        let polys: Vec<Polynomial> = polys.into_iter().map(|(_, p)| p).collect();
        let vectors = ring_vectors(&g, polys.clone());
        for kernel in [InnerKernel::HardyPolydisc, InnerKernel::DruryArveson] {
            let (basis, survivors) = gram_schmidt(&vectors, &kernel);
            prop_assert_eq!(basis.len(), survivors.len());
            for i in 0..basis.len() {
                for j in 0..i {
                    prop_assert_eq!(inner_product(&basis[i], &basis[j], &kernel), rat(0, 1));
                }
                prop_assert!(!basis[i].is_zero());
            }
            // |output| = rank of the coefficient matrix of the input
            let mut keys: Vec<Exponent> = Vec::new();
            for p in &polys {
                for (alpha, _) in p.terms() {
                    if !keys.contains(alpha) {
                        keys.push(alpha.clone());
                    }
                }
            }
            let rank = if keys.is_empty() {
                0
            } else {
                let rows: Vec<Vec<Scalar>> = polys
                    .iter()
                    .map(|p| keys.iter().map(|a| p.coeff(a)).collect())
                    .collect();
                RatMatrix::from_rows(rows).rank()
            };
            prop_assert_eq!(basis.len(), rank);
        }
    }

    #[test]
    fn distinct_degrees_are_orthogonal(
        (g, polys) in arb_homogeneous_set(1, 0..=3),
        offset in 1u32..=3,
    ) {
        let (d, f) = polys[0].clone();
        let h_strategy = arb_homogeneous(&g, d + offset);
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        let h = h_strategy.new_tree(&mut runner).unwrap().current();
        let v = ring_vectors(&g, vec![f, h]);
        for kernel in [InnerKernel::HardyPolydisc, InnerKernel::DruryArveson] {
            prop_assert_eq!(inner_product(&v[0], &v[1], &kernel), rat(0, 1));
        }
    }

    #[test]
    fn quotient_hilbert_consistency(
        (g, polys) in arb_homogeneous_set(3, 1..=3),
        k in 0u32..=6,
    ) {
        let polys: Vec<Polynomial> = polys.into_iter().map(|(_, p)| p).collect();
        let spec = FreeModuleSpec::ring(g.clone());
        let rels: Vec<ModuleVector> = ring_vectors(&g, polys);
        let n = PresentedModule::submodule(spec.clone(), rels.clone()).unwrap();
        let q = PresentedModule::quotient(spec.clone(), rels).unwrap();
        let f = PresentedModule::free(spec.clone());
        prop_assert_eq!(
            q.hilbert_function(k) + n.hilbert_function(k),
            f.hilbert_function(k)
        );
        prop_assert_eq!(f.hilbert_function(k), spec.slice_dim(k));
        // the Betti difference is never negative
        prop_assert!(n.times_maximal_ideal_slice(k).len() <= n.hilbert_function(k));
    }

    #[test]
    fn minimize_is_idempotent_and_matches_wandering(
        (g, polys) in arb_homogeneous_set(4, 1..=3),
    ) {
        let polys: Vec<Polynomial> = polys.into_iter().map(|(_, p)| p).collect();
        let gens = ring_vectors(&g, polys);
        let kernel = InnerKernel::HardyPolydisc;
        let once = minimize_generators(&gens, MinimizeMode::Orthogonal, &kernel).unwrap();
        let twice = minimize_generators(&once.vectors, MinimizeMode::Orthogonal, &kernel).unwrap();
        prop_assert_eq!(once.degrees.clone(), twice.degrees.clone());
        // idempotence: re-running the orthogonalization changes nothing
        for (a, b) in once.vectors.iter().zip(&twice.vectors) {
            prop_assert_eq!(a, b);
        }

        // bijection check: wandering slices of the generated submodule have
        // dimension equal to the number of minimal generators of that degree
        if !once.vectors.is_empty() {
            let spec = once.vectors[0].spec().clone();
            let module = PresentedModule::submodule(spec, once.vectors.clone()).unwrap();
            let max_degree = *once.degrees.iter().max().unwrap();
            let row = betti_counts(&module, max_degree);
            for k in 0..=max_degree {
                let expected = once.degrees.iter().filter(|&&d| d == k).count();
                prop_assert_eq!(wandering_slice(&module, k, &kernel).len(), expected);
                prop_assert_eq!(row.get(k), expected);
            }
        }
    }
}
