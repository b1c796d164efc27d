//! Slow, independent implementations used to cross-check the fast paths.
//!
//! Membership is decided from the literal definitions; the library types
//! only hold the results.

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::forest::OrderedForest;
use crate::linalg::{Rational, RationalMatrix};
use crate::morphism::ForestMorphism;

/// Reflexive-transitive closure of `covers` on `0..size` by Warshall.
pub fn closure(size: usize, covers: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; size]; size];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in covers {
        r[a][b] = true;
    }
    for k in 0..size {
        for i in 0..size {
            if r[i][k] {
                for j in 0..size {
                    if r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
    }
    r
}

/// The definition read literally: covers point upward in rank, form the
/// Hasse diagram of their closure, and every principal lower set is a
/// contiguous block of ranks.
pub fn is_ordered_forest(size: usize, covers: &[(usize, usize)]) -> bool {
    if covers.iter().any(|&(a, b)| a >= b || b >= size) {
        return false;
    }
    let mut sorted = covers.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let r = closure(size, covers);
    // a cover must not factor through a third element
    for &(a, b) in covers {
        if (0..size).any(|c| c != a && c != b && r[a][c] && r[c][b]) {
            return false;
        }
    }
    (0..size).all(|x| {
        let below: Vec<usize> = (0..size).filter(|&y| r[y][x]).collect();
        below.last() == Some(&x) && below.windows(2).all(|w| w[1] == w[0] + 1)
    })
}

/// Every forest of `size` elements, from the `size!` parent functions.
pub fn forests_by_parent_functions(size: usize) -> Vec<OrderedForest> {
    if size == 0 {
        return vec![OrderedForest::empty()];
    }
    // parent of x is one of x+1..size, or none (encoded as size)
    let total: usize = (1..=size).product();
    let mut out: Vec<OrderedForest> = (0..total)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut covers = Vec::new();
            for x in 0..size {
                let choices = size - x;
                let c = code % choices;
                code /= choices;
                if c + x + 1 < size {
                    covers.push((x, c + x + 1));
                }
            }
            is_ordered_forest(size, &covers).then(|| unchecked(size, &covers))
        })
        .collect();
    out.sort();
    out
}

/// Every forest of `size` elements, from all subsets of upward pairs.
pub fn forests_by_cover_subsets(size: usize) -> Vec<OrderedForest> {
    let pairs: Vec<(usize, usize)> = (0..size)
        .flat_map(|a| (a + 1..size).map(move |b| (a, b)))
        .collect();
    assert!(pairs.len() < 31, "too many subsets to enumerate");
    let mut out: Vec<OrderedForest> = (0u32..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let covers: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            is_ordered_forest(size, &covers).then(|| unchecked(size, &covers))
        })
        .collect();
    out.sort();
    out
}

fn unchecked(size: usize, covers: &[(usize, usize)]) -> OrderedForest {
    OrderedForest::new(size, covers.iter().copied()).expect("oracle accepted it")
}

/// No element with exactly one child and a parent.
pub fn is_reduced(size: usize, covers: &[(usize, usize)]) -> bool {
    (0..size).all(|v| {
        let below = covers.iter().filter(|&&(_, b)| b == v).count();
        let above = covers.iter().filter(|&&(a, _)| a == v).count();
        !(below == 1 && above == 1)
    })
}

/// Reduced forests with `m + 1` maxima and `n + 1` minima and at most
/// `max_size` elements.
pub fn hom_by_brute_force(m: usize, n: usize, max_size: usize) -> Vec<ForestMorphism> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for f in forests_by_parent_functions(size) {
            let covers = f.covers();
            let maxima = (0..size)
                .filter(|&v| covers.iter().all(|&(a, _)| a != v))
                .count();
            let minima = (0..size)
                .filter(|&v| covers.iter().all(|&(_, b)| b != v))
                .count();
            if maxima == m + 1 && minima == n + 1 && is_reduced(size, covers) {
                out.push(ForestMorphism::from_forest(f).expect("nonempty"));
            }
        }
    }
    out.sort();
    out
}

/// Maps preserving rank order and the partial order, from all `|Q|^|F|` maps.
pub fn order_maps(f: &OrderedForest, q: &OrderedForest) -> Vec<Vec<usize>> {
    let rf = closure(f.size(), f.covers());
    let rq = closure(q.size(), q.covers());
    let total = q
        .size()
        .checked_pow(f.size() as u32)
        .expect("small instance");
    let mut out: Vec<Vec<usize>> = (0..total)
        .filter_map(|mut code| {
            let map: Vec<usize> = (0..f.size())
                .map(|_| {
                    let v = code % q.size();
                    code /= q.size();
                    v
                })
                .collect();
            let monotone = map.windows(2).all(|w| w[0] <= w[1]);
            let ordered =
                (0..f.size()).all(|a| (0..f.size()).all(|b| !rf[a][b] || rq[map[a]][map[b]]));
            (monotone && ordered).then_some(map)
        })
        .collect();
    out.sort();
    out
}

/// Isomorphism of boundary-labelled forests by search over all bijections
/// preserving the partial order and the order of maxima and of minima.
pub fn isomorphic_by_bijection(a: &ForestMorphism, b: &ForestMorphism) -> bool {
    let (fa, fb) = (a.forest(), b.forest());
    if fa.size() != fb.size() || a.dom() != b.dom() || a.cod() != b.cod() {
        return false;
    }
    let n = fa.size();
    let (ra, rb) = (closure(n, fa.covers()), closure(n, fb.covers()));
    let (ma, mb) = (a.dom_label(), b.dom_label());
    let (la, lb) = (a.cod_label(), b.cod_label());
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn search(
        perm: &mut Vec<usize>,
        used: &mut [bool],
        check: &dyn Fn(&[usize]) -> bool,
        n: usize,
    ) -> bool {
        if perm.len() == n {
            return check(perm);
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                if search(perm, used, check, n) {
                    return true;
                }
                perm.pop();
                used[v] = false;
            }
        }
        false
    }
    let check = |p: &[usize]| {
        (0..n).all(|x| (0..n).all(|y| ra[x][y] == rb[p[x]][p[y]]))
            && ma.iter().zip(&mb).all(|(&x, &y)| p[x] == y)
            && la.iter().zip(&lb).all(|(&x, &y)| p[x] == y)
    };
    search(&mut perm, &mut used, &check, n)
}

/// Rank as the largest nonvanishing minor, determinants by cofactors.
pub fn naive_rank(m: &RationalMatrix) -> usize {
    fn det(rows: &[Vec<Rational>]) -> Rational {
        let n = rows.len();
        if n == 0 {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        if n < k {
            return Vec::new();
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    for k in (1..=m.rows().min(m.cols())).rev() {
        for rs in subsets(m.rows(), k) {
            for cs in subsets(m.cols(), k) {
                let sub: Vec<Vec<Rational>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[(i, j)].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Rank by textbook Gauss-Jordan with rational pivots.
pub fn elimination_rank(m: &RationalMatrix) -> usize {
    let mut rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].clone()).collect())
        .collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for v in rows[rank].iter_mut() {
            *v = &*v / &pivot;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = rows[r][c].clone();
                for j in 0..m.cols() {
                    let sub = &factor * &rows[rank][j];
                    rows[r][j] = &rows[r][j] - sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Monotone onto maps `[n] -> [m]` among all `(m+1)^(n+1)` maps.
pub fn surjections_by_brute_force(n: usize, m: usize) -> Vec<Vec<usize>> {
    let total = (m + 1).pow(n as u32 + 1);
    (0..total)
        .filter_map(|mut code| {
            let values: Vec<usize> = (0..=n)
                .map(|_| {
                    let v = code % (m + 1);
                    code /= m + 1;
                    v
                })
                .collect();
            let monotone = values.windows(2).all(|w| w[0] <= w[1]);
            let onto = (0..=m).all(|i| values.contains(&i));
            (monotone && onto).then_some(values)
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: usize) -> usize {
    binomial(2 * n, n) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_definition() {
        assert!(is_ordered_forest(3, &[(0, 2), (1, 2)]));
        assert!(!is_ordered_forest(4, &[(0, 2), (1, 2), (0, 3), (1, 3)]));
        assert!(!is_ordered_forest(3, &[(0, 1), (1, 2), (0, 2)]));
        assert!(!is_ordered_forest(4, &[(0, 3), (2, 3)]));
        assert!(!is_ordered_forest(2, &[(1, 0)]));
    }

    #[test]
    fn two_enumerations_agree() {
        for size in 0..=5 {
            let a = forests_by_parent_functions(size);
            assert_eq!(a, forests_by_cover_subsets(size));
            assert_eq!(a.len(), catalan(size));
        }
    }

    #[test]
    fn ranks() {
        let m = RationalMatrix::from_i64(3, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(naive_rank(&m), 2);
        assert_eq!(elimination_rank(&m), 2);
        assert_eq!(naive_rank(&RationalMatrix::zeros(2, 2)), 0);
    }

    #[test]
    fn small_counts() {
        assert_eq!(surjections_by_brute_force(2, 1).len(), 2);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(hom_by_brute_force(0, 0, 2).len(), 2);
    }

    #[test]
    fn bijection_search() {
        let a = ForestMorphism::from_forest(OrderedForest::chain(2)).unwrap();
        assert!(isomorphic_by_bijection(&a, &a));
        let b = ForestMorphism::from_forest(OrderedForest::discrete(1)).unwrap();
        assert!(!isomorphic_by_bijection(&a, &b));
    }
}
