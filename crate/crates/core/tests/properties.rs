use proptest::collection::vec;
use proptest::prelude::*;

use ordfor::category::{compose, enumerate_hom, identity};
use ordfor::forest::{enumerate_forests, ordinal_sum, OrderedForest};
use ordfor::linalg::{q, RationalMatrix};
use ordfor::morphism::{explore_reductions, raw_graft, reduce, ForestMorphism};
use ordfor::normalization::{from_epi_functor, gamma, normalize, normalize_map, to_epi_functor};
use ordfor::oracle;
use ordfor::random::{random_complex, random_epi_functor, random_natural_map_mixed, seeded};
use ordfor::shadow::{
    compose_surjections, duality, enumerate_surjections, forest_of, from_cuts, sigma_of, Surjection,
};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RationalMatrix> {
    (0..=max_rows, 0..=max_cols).prop_flat_map(|(r, c)| {
        vec(-3i64..=3, r * c).prop_map(move |v| {
            RationalMatrix::from_entries(r, c, v.into_iter().map(q).collect()).unwrap()
        })
    })
}

fn forest(max_size: usize) -> impl Strategy<Value = OrderedForest> {
    (0..=max_size).prop_flat_map(|size| {
        let all = enumerate_forests(size);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn hom(m: usize, n: usize) -> Vec<ForestMorphism> {
    enumerate_hom(m, n).morphisms
}

/// A composable pair `(f, g)` with `f: [m] -> [n]`, `g: [l] -> [m]`.
fn composable_pair() -> impl Strategy<Value = (ForestMorphism, ForestMorphism)> {
    (0..=2usize, 0..=2usize, 0..=2usize)
        .prop_map(|(a, b, c)| {
            let mut v = [a, b, c];
            v.sort();
            v
        })
        .prop_flat_map(|[l, m, n]| {
            let (fs, gs) = (hom(m, n), hom(l, m));
            (0..fs.len(), 0..gs.len()).prop_map(move |(i, j)| (fs[i].clone(), gs[j].clone()))
        })
}

fn surjection() -> impl Strategy<Value = Surjection> {
    (0..=6usize)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, m)| {
            let all = enumerate_surjections(n, m);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
}

proptest! {
    #[test]
    fn validator_agrees_with_definition(
        size in 0usize..=6,
        raw in vec((0usize..6, 0usize..6), 0..8),
    ) {
        let covers: Vec<(usize, usize)> =
            raw.into_iter().filter(|&(a, b)| a < size && b < size).collect();
        prop_assert_eq!(
            OrderedForest::new(size, covers.iter().copied()).is_ok(),
            oracle::is_ordered_forest(size, &covers)
        );
    }

    #[test]
    fn generated_forests_satisfy_definition(f in forest(8)) {
        let covers: Vec<(usize, usize)> = f.covers().to_vec();
        prop_assert!(oracle::is_ordered_forest(f.size(), &covers));
        prop_assert!(f.is_postorder());
    }

    #[test]
    fn decomposition_round_trips(f in forest(8)) {
        let d = f.decompose();
        prop_assert!(d.verify(&f).is_empty());
        prop_assert_eq!(ordinal_sum(&d.trees(&f)), f);
    }

    #[test]
    fn reduction_is_confluent_and_idempotent(f in forest(8)) {
        let r = reduce(&f).unwrap();
        prop_assert!(explore_reductions(&f).unwrap().is_confluent());
        prop_assert_eq!(reduce(&r).unwrap(), r);
    }

    #[test]
    fn rank_agrees_with_minors(m in matrix(4, 4)) {
        prop_assert_eq!(m.rank(), oracle::naive_rank(&m));
        prop_assert_eq!(m.rank(), oracle::elimination_rank(&m));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_has_complementary_dimension(m in matrix(5, 5)) {
        let k = m.kernel();
        prop_assert!(m.mul(&k).unwrap().is_zero());
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
    }

    #[test]
    fn solve_returns_exact_solutions(a in matrix(4, 4), seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let x = ordfor::random::random_matrix(&mut rng, a.cols(), 2);
        let b = a.mul(&x).unwrap();
        let y = a.solve(&b).unwrap().expect("b lies in the image");
        prop_assert_eq!(a.mul(&y).unwrap(), b);
    }

    #[test]
    fn gamma_then_normalize_is_identity(seed in any::<u64>(), top in 0usize..=3) {
        let c = random_complex(&mut seeded(seed), top, 3);
        prop_assert_eq!(normalize(&gamma(&c)).unwrap(), c);
    }

    #[test]
    fn quasi_isomorphism_tests_agree(seed in any::<u64>()) {
        let u = random_natural_map_mixed(&mut seeded(seed), 2, 3);
        let chain = normalize_map(&u.to_ssm_map().unwrap()).unwrap();
        let cone = chain.is_quasi_iso();
        let induced = chain.induced_homology_isos().iter().all(|&b| b);
        prop_assert_eq!(cone, induced);
        prop_assert_eq!(cone, u.is_weak_equivalence().unwrap());
    }

    #[test]
    fn functors_and_modules_correspond(seed in any::<u64>(), trunc in 1usize..=3) {
        let a = random_epi_functor(&mut seeded(seed), trunc, 2);
        prop_assert_eq!(to_epi_functor(&from_epi_functor(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn shadow_is_functorial((f, g) in composable_pair()) {
        let fg = compose(&f, &g).unwrap();
        prop_assert_eq!(compose_surjections(&sigma_of(&f), &sigma_of(&g)).unwrap(), sigma_of(&fg));
    }

    #[test]
    fn composition_has_units((f, _) in composable_pair()) {
        prop_assert_eq!(compose(&identity(f.cod()), &f).unwrap(), f.clone());
        prop_assert_eq!(compose(&f, &identity(f.dom())).unwrap(), f);
    }

    #[test]
    fn raw_graft_keeps_boundaries((f, g) in composable_pair()) {
        let h = raw_graft(&f, &g).unwrap().morphism();
        prop_assert_eq!(h.dom(), g.dom());
        prop_assert_eq!(h.cod(), f.cod());
    }

    #[test]
    fn surjections_are_recovered_from_their_forests(s in surjection()) {
        prop_assert_eq!(sigma_of(&forest_of(&s)), s.clone());
        prop_assert_eq!(from_cuts(&duality(&s)), s);
    }

    #[test]
    fn codegeneracies_factor_surjections(s in surjection()) {
        let mut acc = Surjection::identity(s.source());
        for step in s.codegeneracy_factorization() {
            acc = compose_surjections(&acc, &step).unwrap();
        }
        prop_assert_eq!(acc, s);
    }
}
