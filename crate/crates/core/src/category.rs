//! The category of reduced boundary-labelled ordered forests.
//!
//! Objects are the ordinals `[n]`. A morphism `[m] -> [n]` is a reduced
//! forest with `m + 1` maxima and `n + 1` minima, and composition is grafting
//! followed by reduction.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::forest::{ordinal_sum, OrderedForest};
use crate::morphism::{raw_graft, reduce, ForestMorphism};

/// The identity `[n] -> [n]`: the discrete forest on `n + 1` points.
pub fn identity(n: usize) -> ForestMorphism {
    ForestMorphism::from_forest(OrderedForest::discrete(n)).expect("discrete forests are nonempty")
}

/// `f ∘ g = Red(f · g)` for `f: [m] -> [n]` and `g: [l] -> [m]`.
pub fn compose(f: &ForestMorphism, g: &ForestMorphism) -> Result<ForestMorphism> {
    let graft = raw_graft(f, g)?;
    ForestMorphism::from_forest(reduce(&graft.h)?)
}

/// Upper bound on the size of a reduced forest `[m] -> [n]`.
///
/// Non-root internal vertices branch at least twice, so a tree with `l`
/// leaves has at most `l - 1` of them besides its root.
pub fn size_bound(m: usize, n: usize) -> usize {
    (m + 1) + (n + 1) + n.saturating_sub(m)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomSet {
    pub dom: usize,
    pub cod: usize,
    pub morphisms: Vec<ForestMorphism>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn contains(&self, f: &ForestMorphism) -> bool {
        self.morphisms.binary_search(f).is_ok()
    }
}

/// Subtrees with `leaves` leaves in which every non-leaf has at least two children.
fn branching_subtrees(leaves: usize, memo: &mut Vec<Vec<OrderedForest>>) -> Vec<OrderedForest> {
    while memo.len() <= leaves {
        let l = memo.len();
        let built = if l == 0 {
            Vec::new()
        } else if l == 1 {
            vec![OrderedForest::point()]
        } else {
            sequences(l, 2, memo)
                .into_iter()
                .map(|f| f.with_root())
                .collect()
        };
        memo.push(built);
    }
    memo[leaves].clone()
}

/// Ordered sequences of at least `min_parts` branching subtrees whose leaf
/// counts sum to `leaves`, each returned as their ordinal sum.
fn sequences(
    leaves: usize,
    min_parts: usize,
    memo: &mut Vec<Vec<OrderedForest>>,
) -> Vec<OrderedForest> {
    fn go(
        left: usize,
        parts: usize,
        min_parts: usize,
        memo: &[Vec<OrderedForest>],
        acc: &OrderedForest,
        out: &mut Vec<OrderedForest>,
    ) {
        if left == 0 {
            if parts >= min_parts {
                out.push(acc.clone());
            }
            return;
        }
        for first in 1..=left {
            // a single part may not use every leaf when at least two are required
            if parts == 0 && min_parts >= 2 && first == left {
                continue;
            }
            for t in &memo[first] {
                go(
                    left - first,
                    parts + 1,
                    min_parts,
                    memo,
                    &ordinal_sum([acc, t]),
                    out,
                );
            }
        }
    }
    for l in 1..leaves {
        branching_subtrees(l, memo);
    }
    if min_parts <= 1 {
        branching_subtrees(leaves, memo);
    }
    let mut out = Vec::new();
    go(
        leaves,
        0,
        min_parts,
        memo,
        &OrderedForest::empty(),
        &mut out,
    );
    out
}

/// Reduced trees with `leaves` minima: the point when `leaves == 1`, or a
/// root over a nonempty sequence of branching subtrees.
pub fn reduced_trees(leaves: usize) -> Vec<OrderedForest> {
    let mut memo = Vec::new();
    let mut out = Vec::new();
    if leaves == 1 {
        out.push(OrderedForest::point());
    }
    if leaves >= 1 {
        out.extend(
            sequences(leaves, 1, &mut memo)
                .into_iter()
                .map(|f| f.with_root()),
        );
    }
    out
}

/// Compositions of `total` into `parts` positive summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All morphisms `[m] -> [n]`, in canonical order.
pub fn enumerate_hom(m: usize, n: usize) -> HomSet {
    let mut morphisms = Vec::new();
    if m <= n {
        let trees: Vec<Vec<OrderedForest>> = (0..=n + 1).map(reduced_trees).collect();
        for blocks in compositions(n + 1, m + 1) {
            let mut partial = vec![OrderedForest::empty()];
            for &b in &blocks {
                partial = partial
                    .iter()
                    .flat_map(|p| trees[b].iter().map(move |t| ordinal_sum([p, t])))
                    .collect();
            }
            morphisms.extend(
                partial
                    .into_iter()
                    .map(|f| ForestMorphism::from_forest(f).expect("nonempty")),
            );
        }
    }
    morphisms.sort();
    morphisms.dedup();
    HomSet {
        dom: m,
        cod: n,
        morphisms,
    }
}

/// The full subcategory on objects `[0] ..= [max]`.
#[derive(Clone, Debug)]
pub struct Fragment {
    max: usize,
    homs: Vec<Vec<HomSet>>,
    composites: OnceLock<Vec<(ForestMorphism, ForestMorphism, ForestMorphism)>>,
}

/// A shared fragment, built once per process for each bound.
pub fn cached_fragment(max: usize) -> Arc<Fragment> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Fragment>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().expect("fragment cache").get(&max) {
        return f.clone();
    }
    let built = Arc::new(Fragment::new(max));
    cache
        .lock()
        .expect("fragment cache")
        .entry(max)
        .or_insert(built)
        .clone()
}

impl Fragment {
    pub fn new(max: usize) -> Self {
        let homs = (0..=max)
            .map(|m| (0..=max).map(|n| enumerate_hom(m, n)).collect())
            .collect();
        Fragment {
            max,
            homs,
            composites: OnceLock::new(),
        }
    }

    pub fn max_object(&self) -> usize {
        self.max
    }

    pub fn hom(&self, m: usize, n: usize) -> &HomSet {
        &self.homs[m][n]
    }

    pub fn morphisms(&self) -> impl Iterator<Item = &ForestMorphism> {
        self.homs.iter().flatten().flat_map(|h| h.morphisms.iter())
    }

    pub fn contains(&self, f: &ForestMorphism) -> bool {
        f.dom() <= self.max && f.cod() <= self.max && self.hom(f.dom(), f.cod()).contains(f)
    }

    /// All composable pairs `(f, g)` with `f ∘ g` defined.
    pub fn composable_pairs(&self) -> Vec<(&ForestMorphism, &ForestMorphism)> {
        let mut out = Vec::new();
        for f in self.morphisms() {
            for l in 0..=self.max {
                for g in &self.hom(l, f.dom()).morphisms {
                    out.push((f, g));
                }
            }
        }
        out
    }

    /// Every composable `(f, g, f ∘ g)`, computed on first use.
    pub fn composites(&self) -> &[(ForestMorphism, ForestMorphism, ForestMorphism)] {
        self.composites.get_or_init(|| {
            self.composable_pairs()
                .into_par_iter()
                .map(|(f, g)| (f.clone(), g.clone(), compose(f, g).expect("composable")))
                .collect()
        })
    }

    /// Composition table keyed by `(f, g)`.
    pub fn composition_table(&self) -> HashMap<(ForestMorphism, ForestMorphism), ForestMorphism> {
        self.composable_pairs()
            .into_par_iter()
            .map(|(f, g)| ((f.clone(), g.clone()), compose(f, g).expect("composable")))
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCounterexample {
    pub law: &'static str,
    pub morphisms: Vec<ForestMorphism>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub unit_max: usize,
    pub assoc_max: usize,
    pub unit_checks: usize,
    pub assoc_checks: usize,
    pub counterexamples: Vec<AxiomCounterexample>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Unit laws and associativity on all objects up to `max_object`.
pub fn check_category_axioms(max_object: usize) -> AxiomReport {
    check_axioms(max_object, max_object)
}

/// Unit laws on objects `<= unit_max`, associativity on objects `<= assoc_max`.
pub fn check_axioms(unit_max: usize, assoc_max: usize) -> AxiomReport {
    let units = Fragment::new(unit_max);
    let mut counterexamples: Vec<AxiomCounterexample> = units
        .morphisms()
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|f| {
            let mut bad = Vec::new();
            let right = compose(f, &identity(f.dom()));
            let left = compose(&identity(f.cod()), f);
            if right.as_ref() != Ok(f) {
                bad.push(AxiomCounterexample {
                    law: "right unit",
                    morphisms: vec![f.clone()],
                });
            }
            if left.as_ref() != Ok(f) {
                bad.push(AxiomCounterexample {
                    law: "left unit",
                    morphisms: vec![f.clone()],
                });
            }
            bad
        })
        .collect();
    let unit_checks = units.morphisms().count() * 2;

    let assoc = Fragment::new(assoc_max);
    let table = assoc.composition_table();
    let triples: Vec<(&ForestMorphism, &ForestMorphism)> = assoc.composable_pairs();
    let assoc_results: Vec<(usize, Vec<AxiomCounterexample>)> = triples
        .par_iter()
        .map(|&(f, g)| {
            let mut checks = 0;
            let mut bad = Vec::new();
            for r in 0..=assoc_max {
                for k in &assoc.hom(r, g.dom()).morphisms {
                    checks += 1;
                    let fg = &table[&(f.clone(), g.clone())];
                    let gk = &table[&(g.clone(), k.clone())];
                    let lhs = &table[&(fg.clone(), k.clone())];
                    let rhs = &table[&(f.clone(), gk.clone())];
                    if lhs != rhs {
                        bad.push(AxiomCounterexample {
                            law: "associativity",
                            morphisms: vec![f.clone(), g.clone(), k.clone()],
                        });
                    }
                }
            }
            (checks, bad)
        })
        .collect();
    let assoc_checks = assoc_results.iter().map(|(c, _)| c).sum();
    counterexamples.extend(assoc_results.into_iter().flat_map(|(_, b)| b));
    AxiomReport {
        unit_max,
        assoc_max,
        unit_checks,
        assoc_checks,
        counterexamples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::forest::validate;

    fn m(size: usize, covers: &[(usize, usize)]) -> ForestMorphism {
        ForestMorphism::from_forest(validate(size, covers.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn identities() {
        assert_eq!(identity(0).forest(), &OrderedForest::point());
        assert_eq!(identity(2).forest(), &OrderedForest::discrete(2));
        for n in 0..=10 {
            assert!(identity(n).is_reduced());
            assert_eq!((identity(n).dom(), identity(n).cod()), (n, n));
        }
    }

    #[test]
    fn composition_examples() {
        let e = m(2, &[(0, 1)]);
        assert_eq!(compose(&e, &e).unwrap(), e);
        let cherry = m(3, &[(0, 2), (1, 2)]);
        assert_eq!(
            compose(&e, &cherry),
            Err(Error::BoundaryMismatch { dom: 0, cod: 1 })
        );
    }

    #[test]
    fn small_hom_counts() {
        assert_eq!(enumerate_hom(0, 0).len(), 2);
        assert_eq!(enumerate_hom(1, 1).len(), 4);
        assert!(enumerate_hom(1, 0).is_empty());
        assert_eq!(enumerate_hom(0, 1).len(), 2);
        // a root over one of the three branching trees with three leaves,
        // or over the sequences (1,2), (2,1), (1,1,1)
        assert_eq!(enumerate_hom(0, 2).len(), 6);
    }

    #[test]
    fn hom_members_are_reduced_and_bounded() {
        for mm in 0..=3 {
            for n in 0..=3 {
                for f in enumerate_hom(mm, n).morphisms {
                    assert!(f.is_reduced());
                    assert_eq!((f.dom(), f.cod()), (mm, n));
                    assert!(f.size() <= size_bound(mm, n));
                }
            }
        }
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(compositions(1, 2).is_empty());
    }

    #[test]
    fn axioms_small() {
        let r = check_category_axioms(1);
        assert!(r.passed(), "{:?}", r.counterexamples);
        assert!(r.assoc_checks > 0);
    }
}
