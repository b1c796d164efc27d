//! Boundary-labelled ordered forests with grafting and reduction.
//!
//! A forest `F` read as a morphism `[m] -> [n]` has its `m + 1` maxima as
//! domain and its `n + 1` minima as codomain. The boundary labels must be
//! order isomorphisms onto those strata for the induced total order, so they
//! are determined by the forest and carry no data of their own. Two
//! boundary-labelled forests are isomorphic exactly when their rank-canonical
//! forms are equal.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::{forest_maps, is_forest_map, validate, ForestRecord, OrderedForest};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestMorphism {
    forest: OrderedForest,
    dom: usize,
    cod: usize,
    reduced: bool,
}

impl ForestMorphism {
    pub fn from_forest(forest: OrderedForest) -> Result<Self> {
        if forest.is_empty() {
            return Err(Error::EmptyForest);
        }
        let dom = forest.maxima().len() - 1;
        let cod = forest.minima().len() - 1;
        let reduced = unary_vertices(&forest).is_empty();
        Ok(ForestMorphism {
            forest,
            dom,
            cod,
            reduced,
        })
    }

    pub fn forest(&self) -> &OrderedForest {
        &self.forest
    }

    pub fn into_forest(self) -> OrderedForest {
        self.forest
    }

    /// `m` for a morphism `[m] -> [n]`.
    pub fn dom(&self) -> usize {
        self.dom
    }

    /// `n` for a morphism `[m] -> [n]`.
    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn size(&self) -> usize {
        self.forest.size()
    }

    /// ι⁺: position `i` of the domain goes to the `i`-th maximum.
    pub fn dom_label(&self) -> Vec<usize> {
        self.forest.maxima()
    }

    /// ι⁻: position `j` of the codomain goes to the `j`-th minimum.
    pub fn cod_label(&self) -> Vec<usize> {
        self.forest.minima()
    }

    pub fn to_record(&self) -> ForestRecord {
        self.forest.to_record()
    }
}

impl Serialize for ForestMorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.forest.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ForestMorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let forest = OrderedForest::deserialize(d)?;
        ForestMorphism::from_forest(forest).map_err(serde::de::Error::custom)
    }
}

/// Isomorphism of boundary-labelled forests, decided on canonical forms.
pub fn is_isomorphic(a: &ForestMorphism, b: &ForestMorphism) -> bool {
    a.dom == b.dom && a.cod == b.cod && a.forest == b.forest
}

/// The raw graft `H = F·G` together with its structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraftResult {
    pub h: OrderedForest,
    /// Inclusion `F -> H`.
    pub j_f: Vec<usize>,
    /// `G -> H`, sending the `i`-th minimum of `G` to the `i`-th root of `F`.
    pub j_g: Vec<usize>,
    /// `H -> G`, collapsing each inserted tree `F_i` onto the `i`-th minimum of `G`.
    pub collapse: Vec<usize>,
    f: ForestMorphism,
    g: ForestMorphism,
}

impl GraftResult {
    pub fn morphism(&self) -> ForestMorphism {
        ForestMorphism::from_forest(self.h.clone()).expect("grafts are nonempty")
    }

    pub fn f(&self) -> &ForestMorphism {
        &self.f
    }

    pub fn g(&self) -> &ForestMorphism {
        &self.g
    }
}

/// Grafts `f: [m] -> [n]` onto `g: [l] -> [m]`, replacing the `i`-th minimum
/// of `G` by the tree of `F` below its `i`-th root. The result is a forest
/// `[l] -> [n]`.
pub fn raw_graft(f: &ForestMorphism, g: &ForestMorphism) -> Result<GraftResult> {
    if f.dom != g.cod {
        return Err(Error::BoundaryMismatch {
            dom: f.dom,
            cod: g.cod,
        });
    }
    let ff = &f.forest;
    let gf = &g.forest;
    let roots = ff.maxima();
    let mut min_index = vec![None; gf.size()];
    for (i, y) in gf.minima().into_iter().enumerate() {
        min_index[y] = Some(i);
    }

    let mut j_f = vec![usize::MAX; ff.size()];
    let mut j_g = vec![usize::MAX; gf.size()];
    let mut collapse = Vec::with_capacity(ff.size() + gf.size());
    for z in 0..gf.size() {
        match min_index[z] {
            Some(i) => {
                let x = roots[i];
                for a in ff.lower_set(x).expect("roots are in range") {
                    j_f[a] = collapse.len();
                    collapse.push(z);
                }
                j_g[z] = j_f[x];
            }
            None => {
                j_g[z] = collapse.len();
                collapse.push(z);
            }
        }
    }

    let covers = ff
        .covers()
        .iter()
        .map(|&(a, b)| (j_f[a], j_f[b]))
        .chain(gf.covers().iter().map(|&(a, b)| (j_g[a], j_g[b])));
    let h = validate(collapse.len(), covers)?;
    Ok(GraftResult {
        h,
        j_f,
        j_g,
        collapse,
        f: f.clone(),
        g: g.clone(),
    })
}

/// Checks the boundary-compatible cocone conditions for `(f_map, g_map)` into `q`.
pub fn check_cocone(
    f: &ForestMorphism,
    g: &ForestMorphism,
    q: &OrderedForest,
    f_map: &[usize],
    g_map: &[usize],
) -> std::result::Result<(), String> {
    if f.dom != g.cod {
        return Err(format!("not composable: [{}] vs [{}]", f.dom, g.cod));
    }
    if !is_forest_map(&f.forest, q, f_map) {
        return Err("F-leg does not preserve both orders".into());
    }
    if !is_forest_map(&g.forest, q, g_map) {
        return Err("G-leg does not preserve both orders".into());
    }
    let roots = f.forest.maxima();
    let mins = g.forest.minima();
    for (i, (&x, &y)) in roots.iter().zip(&mins).enumerate() {
        if f_map[x] != g_map[y] {
            return Err(format!("legs disagree on boundary point {i}"));
        }
        let tree = f.forest.lower_set(x).expect("roots are in range");
        for z in 0..y {
            if tree.clone().any(|a| g_map[z] > f_map[a]) {
                return Err(format!(
                    "element {z} of G before y_{i} lands after the graft of F_{i}"
                ));
            }
        }
    }
    Ok(())
}

/// All boundary-compatible cocones from the span `F <- [m] -> G` into `q`.
pub fn boundary_cocones(
    f: &ForestMorphism,
    g: &ForestMorphism,
    q: &OrderedForest,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    if f.dom != g.cod {
        return Vec::new();
    }
    let f_maps = forest_maps(&f.forest, q);
    let g_maps = forest_maps(&g.forest, q);
    let mut out = Vec::new();
    for fm in &f_maps {
        for gm in &g_maps {
            if check_cocone(f, g, q, fm, gm).is_ok() {
                out.push((fm.clone(), gm.clone()));
            }
        }
    }
    out
}

/// The unique `u: H -> Q` with `u∘j_f = f_map` and `u∘j_g = g_map`.
pub fn factor_cocone(
    graft: &GraftResult,
    f_map: &[usize],
    g_map: &[usize],
    q: &OrderedForest,
) -> Result<Vec<usize>> {
    check_cocone(&graft.f, &graft.g, q, f_map, g_map).map_err(Error::NotACocone)?;
    let mut u = vec![usize::MAX; graft.h.size()];
    for (a, &h) in graft.j_f.iter().enumerate() {
        u[h] = f_map[a];
    }
    for (z, &h) in graft.j_g.iter().enumerate() {
        if u[h] == usize::MAX {
            u[h] = g_map[z];
        } else if u[h] != g_map[z] {
            return Err(Error::NotACocone(format!("legs disagree at {h}")));
        }
    }
    if !is_forest_map(&graft.h, q, &u) {
        return Err(Error::NotACocone(
            "induced map does not preserve both orders".into(),
        ));
    }
    Ok(u)
}

/// Internal vertices with exactly one cover below and one above.
pub fn unary_vertices(f: &OrderedForest) -> Vec<usize> {
    (0..f.size())
        .filter(|&v| {
            !f.is_minimal(v)
                && !f.is_maximal(v)
                && f.children(v).len() == 1
                && f.parents(v).len() == 1
        })
        .collect()
}

/// Removes a unary vertex `v`, joining its child directly to its parent.
pub fn contract(f: &OrderedForest, v: usize) -> Result<OrderedForest> {
    if v >= f.size() {
        return Err(Error::RankOutOfBounds {
            rank: v,
            size: f.size(),
        });
    }
    if !unary_vertices(f).contains(&v) {
        return Err(Error::NotUnary { vertex: v });
    }
    let child = f.children(v)[0];
    let shift = |r: usize| if r > v { r - 1 } else { r };
    let covers = f.covers().iter().filter(|&&(_, b)| b != v).map(|&(a, b)| {
        let a = if a == v { child } else { a };
        (shift(a), shift(b))
    });
    validate(f.size() - 1, covers).map_err(|e| match e {
        Error::IntervalViolation { witness } => {
            Error::IntervalViolationAfterContraction { vertex: v, witness }
        }
        other => other,
    })
}

/// Contracts unary vertices, lowest rank first, until none remain.
pub fn reduce(f: &OrderedForest) -> Result<OrderedForest> {
    Ok(reduce_counting(f)?.0)
}

/// Like [`reduce`], also returning the number of contractions performed.
pub fn reduce_counting(f: &OrderedForest) -> Result<(OrderedForest, usize)> {
    let mut current = f.clone();
    let mut steps = 0;
    while let Some(&v) = unary_vertices(&current).first() {
        current = contract(&current, v)?;
        steps += 1;
    }
    Ok((current, steps))
}

/// Outcome of exploring every contraction order from a forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceOutcome {
    pub normal_forms: BTreeSet<OrderedForest>,
    /// Length of the longest contraction sequence.
    pub longest: usize,
}

impl ConfluenceOutcome {
    pub fn is_confluent(&self) -> bool {
        self.normal_forms.len() == 1
    }
}

/// Explores the full tree of contraction sequences from `f`.
pub fn explore_reductions(f: &OrderedForest) -> Result<ConfluenceOutcome> {
    fn visit(
        f: &OrderedForest,
        memo: &mut HashMap<OrderedForest, ConfluenceOutcome>,
    ) -> Result<ConfluenceOutcome> {
        if let Some(done) = memo.get(f) {
            return Ok(done.clone());
        }
        let redexes = unary_vertices(f);
        let outcome = if redexes.is_empty() {
            ConfluenceOutcome {
                normal_forms: BTreeSet::from([f.clone()]),
                longest: 0,
            }
        } else {
            let mut normal_forms = BTreeSet::new();
            let mut longest = 0;
            for v in redexes {
                let next = visit(&contract(f, v)?, memo)?;
                normal_forms.extend(next.normal_forms);
                longest = longest.max(next.longest + 1);
            }
            ConfluenceOutcome {
                normal_forms,
                longest,
            }
        };
        memo.insert(f.clone(), outcome.clone());
        Ok(outcome)
    }
    visit(f, &mut HashMap::new())
}

/// True iff every maximal contraction sequence ends in the same normal form.
pub fn confluence_check(f: &OrderedForest) -> bool {
    explore_reductions(f)
        .map(|o| o.is_confluent())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::enumerate_forests;

    fn m(size: usize, covers: &[(usize, usize)]) -> ForestMorphism {
        ForestMorphism::from_forest(validate(size, covers.iter().copied()).unwrap()).unwrap()
    }

    fn edge() -> ForestMorphism {
        m(2, &[(0, 1)])
    }

    fn cherry() -> ForestMorphism {
        m(3, &[(0, 2), (1, 2)])
    }

    #[test]
    fn from_forest_reads_boundary() {
        let p = m(1, &[]);
        assert_eq!((p.dom(), p.cod()), (0, 0));
        assert_eq!(
            p,
            ForestMorphism::from_forest(OrderedForest::point()).unwrap()
        );
        let e = edge();
        assert_eq!((e.dom(), e.cod()), (0, 0));
        assert_ne!(e, p);
        let c = cherry();
        assert_eq!((c.dom(), c.cod()), (0, 1));
        assert_eq!(
            ForestMorphism::from_forest(OrderedForest::empty()),
            Err(Error::EmptyForest)
        );
    }

    #[test]
    fn isomorphism() {
        assert!(is_isomorphic(&cherry(), &cherry()));
        assert!(!is_isomorphic(&edge(), &m(1, &[])));
    }

    #[test]
    fn graft_edge_on_edge() {
        let r = raw_graft(&edge(), &edge()).unwrap();
        assert_eq!(r.h, OrderedForest::chain(3));
        let h = r.morphism();
        assert_eq!((h.dom(), h.cod()), (0, 0));
        assert_eq!(r.j_f, vec![0, 1]);
        assert_eq!(r.j_g, vec![1, 2]);
        assert_eq!(r.collapse, vec![0, 0, 1]);
    }

    #[test]
    fn graft_with_identities() {
        let c = cherry();
        let id0 = ForestMorphism::from_forest(OrderedForest::discrete(0)).unwrap();
        let id1 = ForestMorphism::from_forest(OrderedForest::discrete(1)).unwrap();
        assert_eq!(raw_graft(&c, &id0).unwrap().h, *c.forest());
        assert_eq!(raw_graft(&id1, &c).unwrap().h, *c.forest());
        assert_eq!(
            raw_graft(&edge(), &c).unwrap_err(),
            Error::BoundaryMismatch { dom: 0, cod: 1 }
        );
    }

    #[test]
    fn graft_interleaves_blocks() {
        // G: [1] -> [2], two trees: root over (y0, y1) and a lone y2 with its root
        let g = m(5, &[(0, 2), (1, 2), (3, 4)]);
        assert_eq!((g.dom(), g.cod()), (1, 2));
        // F: [2] -> [3]: cherry, point, edge
        let f = m(6, &[(0, 2), (1, 2), (4, 5)]);
        assert_eq!((f.dom(), f.cod()), (2, 3));
        let r = raw_graft(&f, &g).unwrap();
        // layout: F_0 (3) F_1 (1) root_g0, F_2 (2) root_g1
        assert_eq!(
            r.h,
            validate(8, [(0, 2), (1, 2), (2, 4), (3, 4), (5, 6), (6, 7)]).unwrap()
        );
        assert_eq!(
            r.h.maxima(),
            r.g()
                .forest()
                .maxima()
                .iter()
                .map(|&z| r.j_g[z])
                .collect::<Vec<_>>()
        );
        assert_eq!(
            r.h.minima(),
            r.f()
                .forest()
                .minima()
                .iter()
                .map(|&a| r.j_f[a])
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn cocones_and_factorization() {
        let e = edge();
        let r = raw_graft(&e, &e).unwrap();
        let cocones = boundary_cocones(&e, &e, &r.h);
        assert!(cocones.contains(&(r.j_f.clone(), r.j_g.clone())));
        assert_eq!(
            factor_cocone(&r, &r.j_f, &r.j_g, &r.h).unwrap(),
            vec![0, 1, 2]
        );

        let p = OrderedForest::point();
        let c = cherry();
        let id = ForestMorphism::from_forest(OrderedForest::discrete(1)).unwrap();
        let pr = raw_graft(&id, &c).unwrap();
        let consts = boundary_cocones(&id, &c, &p);
        assert!(consts.contains(&(vec![0, 0], vec![0, 0, 0])));
        assert_eq!(
            factor_cocone(&pr, &[0, 0], &[0, 0, 0], &p).unwrap(),
            vec![0, 0, 0]
        );

        // brute force: every pair of functions F,G -> chain(3), filtered by the raw conditions
        let q = OrderedForest::chain(3);
        let mut brute = 0;
        for code in 0..81usize {
            let fm = [code % 3, code / 3 % 3];
            let gm = [code / 9 % 3, code / 27];
            let both = |mp: [usize; 2]| mp[0] <= mp[1] && q.leq(mp[0], mp[1]);
            if both(fm) && both(gm) && fm[1] == gm[0] {
                brute += 1; // nothing in G precedes y_0
            }
        }
        assert_eq!(boundary_cocones(&e, &e, &q).len(), brute);
        // equals the number of order-preserving self-maps of the 3-chain
        assert_eq!(brute, 10);

        assert!(matches!(
            factor_cocone(&r, &[0, 1], &[2, 2], &r.h),
            Err(Error::NotACocone(_))
        ));
    }

    #[test]
    fn unary_examples() {
        assert_eq!(unary_vertices(&OrderedForest::chain(3)), vec![1]);
        let stem = validate(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
        assert!(unary_vertices(&stem).is_empty());
        assert!(unary_vertices(cherry().forest()).is_empty());
    }

    #[test]
    fn contract_examples() {
        assert_eq!(
            contract(&OrderedForest::chain(3), 1).unwrap(),
            OrderedForest::chain(2)
        );
        let four = OrderedForest::chain(4);
        for first in [1, 2] {
            let once = contract(&four, first).unwrap();
            assert_eq!(contract(&once, 1).unwrap(), OrderedForest::chain(2));
        }
        for v in 0..3 {
            assert_eq!(
                contract(cherry().forest(), v),
                Err(Error::NotUnary { vertex: v })
            );
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce(&OrderedForest::chain(2)).unwrap(),
            OrderedForest::chain(2)
        );
        assert_eq!(
            reduce_counting(&OrderedForest::chain(4)).unwrap(),
            (OrderedForest::chain(2), 2)
        );
        for n in 1..=8 {
            for f in enumerate_forests(n) {
                let r = reduce(&f).unwrap();
                assert_eq!(reduce(&r).unwrap(), r);
            }
        }
    }

    #[test]
    fn confluence_examples() {
        assert!(confluence_check(cherry().forest()));
        let out = explore_reductions(&OrderedForest::chain(5)).unwrap();
        assert!(out.is_confluent());
        assert_eq!(out.longest, 3);
        assert_eq!(
            out.normal_forms.into_iter().next().unwrap(),
            OrderedForest::chain(2)
        );
    }
}
