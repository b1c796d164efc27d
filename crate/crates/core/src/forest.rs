//! Ordered quivers and ordered forests.
//!
//! Elements are identified with their ranks in the total order, so an
//! ordered quiver on `size` elements is the set `0..size` together with the
//! Hasse diagram of its partial order. A cover `(a, b)` means `a` is
//! immediately below `b`; every cover has `a < b`, which is exactly the
//! compatibility of the partial order with the total order.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite poset whose partial order is compatible with the rank order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedQuiver {
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl OrderedQuiver {
    /// Checks rank bounds, compatibility (`a < b` for every cover) and
    /// irredundancy of the cover set.
    pub fn new(size: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut covers: Vec<(usize, usize)> = covers.into_iter().collect();
        covers.sort_unstable();
        for &(a, b) in &covers {
            for r in [a, b] {
                if r >= size {
                    return Err(Error::RankOutOfBounds { rank: r, size });
                }
            }
        }
        if let Some(&(a, b)) = covers.iter().find(|(a, b)| a >= b) {
            return Err(Error::CoverOrderViolation {
                child: a,
                parent: b,
            });
        }
        if let Some(w) = covers.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RedundantCover {
                child: w[0].0,
                parent: w[0].1,
            });
        }
        let quiver = OrderedQuiver { size, covers };
        let reach = quiver.reachability();
        for &(a, b) in &quiver.covers {
            let implied = quiver
                .covers
                .iter()
                .any(|&(a2, c)| a2 == a && c != b && reach[c][b]);
            if implied {
                return Err(Error::RedundantCover {
                    child: a,
                    parent: b,
                });
            }
        }
        Ok(quiver)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `reach[a][b]` iff `a <= b` in the partial order.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.size;
        let mut reach = vec![vec![false; n]; n];
        // covers go upward in rank, so fill from the top down
        for a in (0..n).rev() {
            reach[a][a] = true;
            for &(_, b) in self.covers.iter().filter(|(c, _)| *c == a) {
                for t in b..n {
                    if reach[b][t] {
                        reach[a][t] = true;
                    }
                }
            }
        }
        reach
    }
}

/// An ordered quiver in which every principal lower set is a contiguous
/// block of ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedForest {
    size: usize,
    covers: Vec<(usize, usize)>,
    // L(x) = lower_start[x] ..= x
    lower_start: Vec<usize>,
}

/// Validates `(size, covers)` against the ordered-forest axioms.
pub fn validate(
    size: usize,
    covers: impl IntoIterator<Item = (usize, usize)>,
) -> Result<OrderedForest> {
    OrderedForest::from_quiver(OrderedQuiver::new(size, covers)?)
}

impl OrderedForest {
    pub fn new(size: usize, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        validate(size, covers)
    }

    pub fn from_quiver(quiver: OrderedQuiver) -> Result<Self> {
        let reach = quiver.reachability();
        let n = quiver.size;
        let mut lower_start = Vec::with_capacity(n);
        for x in 0..n {
            let lower: Vec<usize> = (0..=x).filter(|&y| reach[y][x]).collect();
            let lo = lower[0];
            if lower.len() != x - lo + 1 {
                return Err(Error::IntervalViolation { witness: x });
            }
            lower_start.push(lo);
        }
        Ok(OrderedForest {
            size: n,
            covers: quiver.covers,
            lower_start,
        })
    }

    /// The height-zero forest `[n]`: `n + 1` incomparable points.
    pub fn discrete(n: usize) -> Self {
        OrderedForest {
            size: n + 1,
            covers: Vec::new(),
            lower_start: (0..=n).collect(),
        }
    }

    pub fn point() -> Self {
        Self::discrete(0)
    }

    /// A chain with `len` elements.
    pub fn chain(len: usize) -> Self {
        validate(len, (1..len).map(|i| (i - 1, i))).expect("chains are ordered forests")
    }

    pub fn empty() -> Self {
        OrderedForest {
            size: 0,
            covers: Vec::new(),
            lower_start: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn quiver(&self) -> OrderedQuiver {
        OrderedQuiver {
            size: self.size,
            covers: self.covers.clone(),
        }
    }

    /// `a <= b` in the partial order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a <= b && self.lower_start[b] <= a
    }

    fn check_rank(&self, x: usize) -> Result<()> {
        if x >= self.size {
            return Err(Error::RankOutOfBounds {
                rank: x,
                size: self.size,
            });
        }
        Ok(())
    }

    pub fn lower_set(&self, x: usize) -> Result<RangeInclusive<usize>> {
        self.check_rank(x)?;
        Ok(self.lower_start[x]..=x)
    }

    pub fn upper_set(&self, x: usize) -> Result<Vec<usize>> {
        self.check_rank(x)?;
        Ok((x..self.size).filter(|&y| self.leq(x, y)).collect())
    }

    pub fn minima(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| self.lower_start[x] == x)
            .collect()
    }

    pub fn maxima(&self) -> Vec<usize> {
        let mut has_parent = vec![false; self.size];
        for &(a, _) in &self.covers {
            has_parent[a] = true;
        }
        (0..self.size).filter(|&x| !has_parent[x]).collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.lower_start[x] == x
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        !self.covers.iter().any(|&(a, _)| a == x)
    }

    /// Immediate successors of `x`; a single element in a valid forest.
    pub fn parents(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|(a, _)| *a == x)
            .map(|&(_, b)| b)
            .collect()
    }

    pub fn parent(&self, x: usize) -> Option<usize> {
        self.covers.iter().find(|(a, _)| *a == x).map(|&(_, b)| b)
    }

    /// Immediate predecessors of `x` in increasing rank order.
    pub fn children(&self, x: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|(_, b)| *b == x)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Length (in edges) of the longest chain.
    pub fn height(&self) -> usize {
        let mut depth = vec![0usize; self.size];
        // covers are sorted by child; every cover into `a` has a child below
        // `a`, so depth[a] is final before any cover out of `a` is read
        for &(a, b) in &self.covers {
            depth[b] = depth[b].max(depth[a] + 1);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// Each element has at most one immediate successor.
    pub fn has_unique_parents(&self) -> bool {
        (0..self.size).all(|x| self.parents(x).len() <= 1)
    }

    /// The rank order is the left-to-right post-order of the component trees:
    /// every element is the rank-maximum of its lower set, and the children
    /// of a vertex occupy consecutive blocks ending right below it.
    pub fn is_postorder(&self) -> bool {
        fn walk(f: &OrderedForest, root: usize, out: &mut Vec<usize>) {
            for c in f.children(root) {
                walk(f, c, out);
            }
            out.push(root);
        }
        let mut order = Vec::with_capacity(self.size);
        for r in self.maxima() {
            walk(self, r, &mut order);
        }
        order == (0..self.size).collect::<Vec<_>>()
    }

    /// The full subposet on `subset`, with induced partial and total orders.
    pub fn induced(&self, subset: &[usize]) -> Result<OrderedForest> {
        let mut elems: Vec<usize> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        for &x in &elems {
            self.check_rank(x)?;
        }
        let k = elems.len();
        let mut covers = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (elems[i], elems[j]);
                if !self.leq(a, b) {
                    continue;
                }
                let between = (i + 1..j).any(|t| self.leq(a, elems[t]) && self.leq(elems[t], b));
                if !between {
                    covers.push((i, j));
                }
            }
        }
        validate(k, covers)
    }

    pub fn decompose(&self) -> TreeDecomposition {
        let components = self
            .maxima()
            .into_iter()
            .map(|root| TreeComponent {
                root,
                lo: self.lower_start[root],
                hi: root,
            })
            .collect();
        TreeDecomposition { components }
    }

    /// The tree obtained by adding one new root above every maximum.
    pub fn with_root(&self) -> OrderedForest {
        let root = self.size;
        let mut covers = self.covers.clone();
        covers.extend(self.maxima().into_iter().map(|m| (m, root)));
        covers.sort_unstable();
        let mut lower_start = self.lower_start.clone();
        lower_start.push(0);
        OrderedForest {
            size: self.size + 1,
            covers,
            lower_start,
        }
    }

    pub fn to_record(&self) -> ForestRecord {
        ForestRecord {
            size: self.size,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Graphviz rendering, one node per rank and edges drawn child to parent.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph forest {\n  rankdir=BT;\n");
        for x in 0..self.size {
            let _ = writeln!(out, "  n{x} [label=\"{x}\"];");
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Ordered disjoint union: ranks of later summands are shifted past earlier ones.
pub fn ordinal_sum<'a>(parts: impl IntoIterator<Item = &'a OrderedForest>) -> OrderedForest {
    let mut size = 0;
    let mut covers = Vec::new();
    let mut lower_start = Vec::new();
    for p in parts {
        covers.extend(p.covers.iter().map(|&(a, b)| (a + size, b + size)));
        lower_start.extend(p.lower_start.iter().map(|&l| l + size));
        size += p.size;
    }
    covers.sort_unstable();
    OrderedForest {
        size,
        covers,
        lower_start,
    }
}

/// One tree of the canonical decomposition: the lower set of `root`,
/// which is the rank interval `lo ..= hi` with `hi == root`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeComponent {
    pub root: usize,
    pub lo: usize,
    pub hi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub components: Vec<TreeComponent>,
}

impl TreeDecomposition {
    /// The component trees as standalone forests, in rank order.
    pub fn trees(&self, forest: &OrderedForest) -> Vec<OrderedForest> {
        self.components
            .iter()
            .map(|c| {
                let covers = forest
                    .covers
                    .iter()
                    .filter(|(a, _)| (c.lo..=c.hi).contains(a))
                    .map(|&(a, b)| (a - c.lo, b - c.lo));
                validate(c.hi - c.lo + 1, covers).expect("lower sets of a forest are forests")
            })
            .collect()
    }

    /// Checks the five decomposition clauses against `forest`,
    /// returning a description of every clause that fails.
    pub fn verify(&self, forest: &OrderedForest) -> Vec<String> {
        let mut failures = Vec::new();
        let n = forest.size();
        for (i, c) in self.components.iter().enumerate() {
            // (i) ordered tree with root m_i
            match forest.induced(&(c.lo..=c.hi).collect::<Vec<_>>()) {
                Ok(t) if t.maxima().len() == 1 && t.maxima()[0] == c.root - c.lo => {}
                _ => failures.push(format!("component {i} is not an ordered tree")),
            }
            // (iv) T_i = L(m_i) is a rank interval
            let lower: BTreeSet<usize> = (0..n).filter(|&y| forest.leq(y, c.root)).collect();
            if lower != (c.lo..=c.hi).collect() {
                failures.push(format!("component {i} is not the interval L(m_{i})"));
            }
        }
        // (ii) disjoint and (iii) covering
        let mut owner = vec![None; n];
        for (i, c) in self.components.iter().enumerate() {
            for x in c.lo..=c.hi.min(n.saturating_sub(1)) {
                if let Some(j) = owner[x] {
                    failures.push(format!("components {j} and {i} overlap at {x}"));
                }
                owner[x] = Some(i);
            }
        }
        if let Some(x) = owner.iter().position(Option::is_none) {
            failures.push(format!("element {x} lies in no component"));
        }
        if self.components.windows(2).any(|w| w[0].root >= w[1].root) {
            failures.push("roots are not in increasing rank order".into());
        }
        // (v) no comparabilities across components, and the ordinal sum restores F
        for a in 0..n {
            for b in a + 1..n {
                if owner[a] != owner[b] && forest.leq(a, b) {
                    failures.push(format!("{a} <= {b} across components"));
                }
            }
        }
        if failures.is_empty() && ordinal_sum(&self.trees(forest)) != *forest {
            failures.push("ordinal sum of components differs from the forest".into());
        }
        failures
    }
}

/// All maps `F -> Q` preserving both the partial and the total order.
pub fn forest_maps(f: &OrderedForest, q: &OrderedForest) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if f.size == 0 {
        out.push(Vec::new());
        return out;
    }
    if q.size == 0 {
        return out;
    }
    let mut current = Vec::with_capacity(f.size);
    extend_monotone(f, q, &mut current, &mut out);
    out
}

fn extend_monotone(
    f: &OrderedForest,
    q: &OrderedForest,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let x = cur.len();
    if x == f.size {
        out.push(cur.clone());
        return;
    }
    let start = cur.last().copied().unwrap_or(0);
    for v in start..q.size {
        // every cover into x has its child already assigned
        if f.children(x).iter().all(|&c| q.leq(cur[c], v)) {
            cur.push(v);
            extend_monotone(f, q, cur, out);
            cur.pop();
        }
    }
}

/// Whether `map` preserves both orders.
pub fn is_forest_map(f: &OrderedForest, q: &OrderedForest, map: &[usize]) -> bool {
    map.len() == f.size
        && map.iter().all(|&v| v < q.size)
        && map.windows(2).all(|w| w[0] <= w[1])
        && f.covers.iter().all(|&(a, b)| q.leq(map[a], map[b]))
}

/// All ordered forests with exactly `size` elements, generated as plane
/// forests numbered in post-order. There are Catalan(size) of them.
pub fn enumerate_forests(size: usize) -> Vec<OrderedForest> {
    let mut forests: Vec<Vec<OrderedForest>> = vec![vec![OrderedForest::empty()]];
    let mut trees: Vec<Vec<OrderedForest>> = vec![Vec::new()];
    for n in 1..=size {
        let mut tn = Vec::new();
        for below in &forests[n - 1] {
            tn.push(below.with_root());
        }
        trees.push(tn);
        let mut fn_ = Vec::new();
        for first in 1..=n {
            for t in &trees[first] {
                for rest in &forests[n - first] {
                    fn_.push(ordinal_sum([t, rest]));
                }
            }
        }
        forests.push(fn_);
    }
    forests.swap_remove(size)
}

/// Serialized form shared by forests and morphisms: 0-based ranks, covers
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ForestRecord {
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
}

impl ForestRecord {
    pub fn validate(&self) -> Result<OrderedForest> {
        validate(self.size, self.covers.iter().map(|c| (c[0], c[1])))
    }

    /// Compact JSON, used as a map key in presheaf files.
    pub fn key(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

impl Serialize for OrderedForest {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrderedForest {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ForestRecord::deserialize(d)?
            .validate()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cherry() -> OrderedForest {
        validate(3, [(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn validate_examples() {
        let c = cherry();
        assert_eq!(c.decompose().components.len(), 1);
        assert_eq!(c.height(), 1);
        assert_eq!(
            validate(4, [(0, 1), (0, 2), (1, 3), (2, 3)]),
            Err(Error::IntervalViolation { witness: 2 })
        );
        let p = validate(1, []).unwrap();
        assert_eq!(p, OrderedForest::point());
        assert_eq!(p.height(), 0);
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            validate(3, [(2, 1)]),
            Err(Error::CoverOrderViolation {
                child: 2,
                parent: 1
            })
        );
        assert_eq!(
            validate(3, [(1, 1)]),
            Err(Error::CoverOrderViolation {
                child: 1,
                parent: 1
            })
        );
        assert_eq!(
            validate(3, [(0, 1), (1, 2), (0, 2)]),
            Err(Error::RedundantCover {
                child: 0,
                parent: 2
            })
        );
        assert_eq!(
            validate(2, [(0, 5)]),
            Err(Error::RankOutOfBounds { rank: 5, size: 2 })
        );
        // 0 and 2 below 3 but 1 is not: {0,2,3} is not contiguous
        assert_eq!(
            validate(4, [(0, 3), (2, 3)]),
            Err(Error::IntervalViolation { witness: 3 })
        );
    }

    #[test]
    fn strata_and_lower_sets() {
        let chain = OrderedForest::chain(3);
        assert_eq!(chain.lower_set(2).unwrap(), 0..=2);
        assert_eq!(chain.upper_set(0).unwrap(), vec![0, 1, 2]);
        let c = cherry();
        assert_eq!(c.minima(), vec![0, 1]);
        assert_eq!(c.maxima(), vec![2]);
        assert_eq!(
            c.lower_set(3),
            Err(Error::RankOutOfBounds { rank: 3, size: 3 })
        );
        assert_eq!(
            c.upper_set(7),
            Err(Error::RankOutOfBounds { rank: 7, size: 3 })
        );
    }

    #[test]
    fn heights() {
        assert_eq!(OrderedForest::discrete(4).height(), 0);
        assert_eq!(cherry().height(), 1);
        assert_eq!(OrderedForest::chain(3).height(), 2);
        // height is the longest chain, not the chain through the last child
        let lopsided = validate(5, [(0, 1), (1, 3), (2, 3), (3, 4)]).unwrap();
        assert_eq!(lopsided.height(), 3);
    }

    #[test]
    fn decompose_examples() {
        let two_edges = validate(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            two_edges.decompose().components,
            vec![
                TreeComponent {
                    root: 1,
                    lo: 0,
                    hi: 1
                },
                TreeComponent {
                    root: 3,
                    lo: 2,
                    hi: 3
                }
            ]
        );
        assert_eq!(
            OrderedForest::point().decompose().components,
            vec![TreeComponent {
                root: 0,
                lo: 0,
                hi: 0
            }]
        );
        let stem = validate(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            stem.decompose().components,
            vec![TreeComponent {
                root: 3,
                lo: 0,
                hi: 3
            }]
        );
    }

    #[test]
    fn ordinal_sum_examples() {
        let p = OrderedForest::point();
        assert_eq!(ordinal_sum([&p, &p]), OrderedForest::discrete(1));
        let e = OrderedForest::chain(2);
        assert_eq!(ordinal_sum([&e, &p]), validate(3, [(0, 1)]).unwrap());
        assert_eq!(ordinal_sum([]), OrderedForest::empty());
    }

    #[test]
    fn decompose_round_trips_small_tree_lists() {
        let trees: Vec<OrderedForest> = (1..=4)
            .flat_map(enumerate_forests)
            .filter(|f| f.maxima().len() == 1)
            .collect();
        for a in &trees {
            for b in &trees {
                let sum = ordinal_sum([a, b]);
                assert_eq!(sum.decompose().trees(&sum), vec![a.clone(), b.clone()]);
            }
        }
    }

    #[test]
    fn forest_maps_examples() {
        let p = OrderedForest::point();
        assert_eq!(forest_maps(&p, &p), vec![vec![0]]);
        assert_eq!(forest_maps(&OrderedForest::chain(2), &p), vec![vec![0, 0]]);
        // brute force over all 3^3 functions, filtered by both orders
        let c = cherry();
        let mut brute = 0;
        for code in 0..27usize {
            let m = [code % 3, code / 3 % 3, code / 9];
            let rank_ok = (0..3).all(|a| (a..3).all(|b| m[a] <= m[b]));
            let order_ok = (0..3).all(|a| (0..3).all(|b| !c.leq(a, b) || c.leq(m[a], m[b])));
            if rank_ok && order_ok {
                brute += 1;
            }
        }
        assert_eq!(brute, 8);
        assert_eq!(forest_maps(&c, &c).len(), 8);
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| enumerate_forests(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn induced_subposet_drops_middle() {
        let stem = validate(4, [(0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(stem.induced(&[0, 1, 3]).unwrap(), cherry());
    }

    #[test]
    fn dot_export() {
        let dot = OrderedForest::chain(2).to_dot();
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("n1 [label=\"1\"]"));
    }

    #[test]
    fn record_json_round_trip() {
        let c = cherry();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"size":3,"covers":[[0,2],[1,2]]}"#);
        let back: OrderedForest = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        let bad: std::result::Result<OrderedForest, _> =
            serde_json::from_str(r#"{"size":4,"covers":[[0,1],[0,2],[1,3],[2,3]]}"#);
        assert!(bad.is_err());
    }
}
