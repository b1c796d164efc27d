//! Order-preserving surjections and the shadow of a forest.
//!
//! A morphism `F: [m] -> [n]` has a shadow `σ_F: [n] ↠ [m]` sending each
//! minimum to the index of the root above it. Morphisms of `Δ_epi^op` are
//! stored as their underlying surjections, so the functor law reads
//! `σ_{F∘G} = σ_G ∘ σ_F`.

use serde::{Deserialize, Serialize};

use crate::category::{compose, enumerate_hom, identity, Fragment};
use crate::error::{Error, Result};
use crate::forest::{ordinal_sum, validate, OrderedForest};
use crate::morphism::ForestMorphism;

/// An order-preserving surjection `[n] ↠ [m]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Surjection {
    n: usize,
    m: usize,
    values: Vec<usize>,
}

impl Surjection {
    pub fn new(n: usize, m: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != n + 1 {
            return Err(Error::InvalidSurjection(format!(
                "{} values for source [{n}]",
                values.len()
            )));
        }
        if values[0] != 0 {
            return Err(Error::InvalidSurjection("does not start at 0".into()));
        }
        for w in values.windows(2) {
            if w[1] < w[0] {
                return Err(Error::InvalidSurjection("not weakly increasing".into()));
            }
            if w[1] > w[0] + 1 {
                return Err(Error::InvalidSurjection(format!("skips {}", w[0] + 1)));
            }
        }
        if values[n] != m {
            return Err(Error::InvalidSurjection(format!("does not reach {m}")));
        }
        Ok(Surjection { n, m, values })
    }

    pub fn identity(n: usize) -> Self {
        Surjection {
            n,
            m: n,
            values: (0..=n).collect(),
        }
    }

    /// The elementary surjection `[n+1] ↠ [n]` hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n, "codegeneracy index {i} out of range for [{n}]");
        let values = (0..=n + 1)
            .map(|k| if k <= i { k } else { k - 1 })
            .collect();
        Surjection {
            n: n + 1,
            m: n,
            values,
        }
    }

    /// Source top index.
    pub fn source(&self) -> usize {
        self.n
    }

    /// Target top index.
    pub fn target(&self) -> usize {
        self.m
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, j: usize) -> usize {
        self.values[j]
    }

    /// Fiber `σ⁻¹(i)` as a rank range.
    pub fn fiber(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        let lo = self.values.partition_point(|&v| v < i);
        let hi = self.values.partition_point(|&v| v <= i) - 1;
        lo..=hi
    }

    pub fn is_identity(&self) -> bool {
        self.n == self.m
    }

    /// Writes `self` as a composite of codegeneracies, applied first to last.
    pub fn codegeneracy_factorization(&self) -> Vec<Surjection> {
        let mut out = Vec::new();
        let mut current = self.clone();
        while let Some(i) = (0..current.n).find(|&i| current.values[i] == current.values[i + 1]) {
            // current = rest ∘ s^i, rest: [n-1] ↠ [m]
            out.push(Surjection::codegeneracy(current.n - 1, i));
            let mut values = current.values.clone();
            values.remove(i + 1);
            current = Surjection {
                n: current.n - 1,
                m: current.m,
                values,
            };
        }
        out
    }

    pub fn to_record(&self) -> SurjectionRecord {
        SurjectionRecord {
            n: self.n,
            m: self.m,
            values: self.values.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurjectionRecord {
    pub n: usize,
    pub m: usize,
    pub values: Vec<usize>,
}

impl<'de> Deserialize<'de> for Surjection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = SurjectionRecord::deserialize(d)?;
        Surjection::new(r.n, r.m, r.values).map_err(serde::de::Error::custom)
    }
}

/// `tau ∘ sigma` for `sigma: [n] ↠ [k]` and `tau: [k] ↠ [m]`.
pub fn compose_surjections(sigma: &Surjection, tau: &Surjection) -> Result<Surjection> {
    if sigma.m != tau.n {
        return Err(Error::IndexMismatch(format!(
            "[{}] ↠ [{}] followed by [{}] ↠ [{}]",
            sigma.n, sigma.m, tau.n, tau.m
        )));
    }
    let values = sigma.values.iter().map(|&v| tau.values[v]).collect();
    Ok(Surjection {
        n: sigma.n,
        m: tau.m,
        values,
    })
}

/// All order-preserving surjections `[n] ↠ [m]`; there are `C(n, m)`.
pub fn enumerate_surjections(n: usize, m: usize) -> Vec<Surjection> {
    if m > n {
        return Vec::new();
    }
    // choose which of the n gaps between consecutive points are steps
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(m);
    fn choose(
        start: usize,
        n: usize,
        left: usize,
        steps: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(steps.clone());
            return;
        }
        for g in start..n {
            if n - g < left {
                break;
            }
            steps.push(g);
            choose(g + 1, n, left - 1, steps, out);
            steps.pop();
        }
    }
    let mut choices = Vec::new();
    choose(0, n, m, &mut steps, &mut choices);
    for cut in choices {
        let mut values = Vec::with_capacity(n + 1);
        let mut v = 0;
        for j in 0..=n {
            values.push(v);
            if cut.contains(&j) {
                v += 1;
            }
        }
        out.push(Surjection { n, m, values });
    }
    out.sort();
    out
}

/// The shadow `σ_F: [n] ↠ [m]` of `F: [m] -> [n]`.
pub fn sigma_of(f: &ForestMorphism) -> Surjection {
    let forest = f.forest();
    let roots = forest.maxima();
    let values = forest
        .minima()
        .into_iter()
        .map(|leaf| {
            roots
                .iter()
                .position(|&r| forest.leq(leaf, r))
                .expect("every minimum lies below a root")
        })
        .collect();
    Surjection::new(f.cod(), f.dom(), values).expect("shadows are order-preserving surjections")
}

/// The full subposet on minima and maxima, with the same boundary.
pub fn height_one_subposet(f: &ForestMorphism) -> ForestMorphism {
    let forest = f.forest();
    let mut keep = forest.minima();
    keep.extend(forest.maxima());
    let h = forest
        .induced(&keep)
        .expect("subposets of min ∪ max are forests");
    ForestMorphism::from_forest(h).expect("nonempty")
}

/// The height-one forest `F_σ: [m] -> [n]`: for each fiber `B_i` a root
/// over `|B_i|` leaves. Singleton fibers give a root over one leaf, never a
/// bare point.
pub fn forest_of(sigma: &Surjection) -> ForestMorphism {
    let trees: Vec<OrderedForest> = (0..=sigma.m)
        .map(|i| {
            let leaves = sigma.fiber(i).count();
            validate(leaves + 1, (0..leaves).map(|l| (l, leaves))).expect("corollas are forests")
        })
        .collect();
    ForestMorphism::from_forest(ordinal_sum(&trees)).expect("nonempty")
}

/// Every component tree has height exactly one.
pub fn is_height_one(f: &ForestMorphism) -> bool {
    let forest = f.forest();
    forest.height() == 1 && forest.maxima().iter().all(|&r| !forest.is_minimal(r))
}

/// An order-preserving injection with `len` entries into `0..target`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Injection {
    target: usize,
    values: Vec<usize>,
}

impl Injection {
    pub fn new(target: usize, values: Vec<usize>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInjection("not strictly increasing".into()));
        }
        if values.last().is_some_and(|&v| v >= target) {
            return Err(Error::InvalidInjection(format!("value out of 0..{target}")));
        }
        Ok(Injection { target, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `self ∘ other`, where `other` lands in the domain of `self`.
    pub fn compose(&self, other: &Injection) -> Result<Injection> {
        if other.target != self.len() {
            return Err(Error::IndexMismatch(format!(
                "injection into {} entries composed with one of {} entries",
                other.target,
                self.len()
            )));
        }
        Ok(Injection {
            target: self.target,
            values: other.values.iter().map(|&v| self.values[v]).collect(),
        })
    }
}

/// The cut positions of `σ: [n] ↠ [m]`: the maximum of each fiber `B_i`
/// for `i < m`, an injection of `m` entries into `0..n`.
pub fn duality(sigma: &Surjection) -> Injection {
    let values = (0..sigma.m).map(|i| *sigma.fiber(i).end()).collect();
    Injection {
        target: sigma.n,
        values,
    }
}

/// Inverse of [`duality`]: the surjection `[n] ↠ [m]` cutting after each value.
pub fn from_cuts(cuts: &Injection) -> Surjection {
    let n = cuts.target;
    let mut values = Vec::with_capacity(n + 1);
    let mut v = 0;
    for j in 0..=n {
        values.push(v);
        if cuts.values.contains(&j) {
            v += 1;
        }
    }
    Surjection {
        n,
        m: cuts.len(),
        values,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PiReport {
    pub max_object: usize,
    pub identity_failures: Vec<usize>,
    pub functoriality_checks: usize,
    pub functoriality_failures: Vec<(ForestMorphism, ForestMorphism)>,
    pub unhit_surjections: Vec<Surjection>,
    pub bijection_failures: Vec<String>,
    /// `(|Hom([0],[0])|, |Δ_epi([0],[0])|)`.
    pub faithfulness_witness: (usize, usize),
}

impl PiReport {
    pub fn passed(&self) -> bool {
        self.identity_failures.is_empty()
            && self.functoriality_failures.is_empty()
            && self.unhit_surjections.is_empty()
            && self.bijection_failures.is_empty()
    }
}

/// Functoriality and fullness of the shadow functor, exhaustively on
/// objects `<= max_object`.
pub fn check_pi_functor(max_object: usize) -> PiReport {
    let frag = Fragment::new(max_object);
    let mut report = PiReport {
        max_object,
        ..PiReport::default()
    };
    for n in 0..=max_object {
        if !sigma_of(&identity(n)).is_identity() {
            report.identity_failures.push(n);
        }
    }
    for (f, g) in frag.composable_pairs() {
        report.functoriality_checks += 1;
        let fg = compose(f, g).expect("composable");
        let expected = compose_surjections(&sigma_of(f), &sigma_of(g)).expect("matching indices");
        if sigma_of(&fg) != expected {
            report.functoriality_failures.push((f.clone(), g.clone()));
        }
    }
    for m in 0..=max_object {
        for n in m..=max_object {
            let hom = frag.hom(m, n);
            for s in enumerate_surjections(n, m) {
                if !hom.morphisms.iter().any(|f| sigma_of(f) == s) {
                    report.unhit_surjections.push(s.clone());
                }
                let fs = forest_of(&s);
                if sigma_of(&fs) != s {
                    report
                        .bijection_failures
                        .push(format!("σ(F_σ) != σ for {:?}", s.values()));
                }
                if !hom.contains(&fs) || !is_height_one(&fs) {
                    report.bijection_failures.push(format!(
                        "F_σ for {:?} is not a height-one morphism",
                        s.values()
                    ));
                }
            }
            for f in hom.morphisms.iter().filter(|f| is_height_one(f)) {
                if forest_of(&sigma_of(f)) != *f {
                    report
                        .bijection_failures
                        .push(format!("F_(σ_F) != F for {:?}", f.to_record()));
                }
            }
        }
    }
    report.faithfulness_witness = (enumerate_hom(0, 0).len(), enumerate_surjections(0, 0).len());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, m: usize, v: &[usize]) -> Surjection {
        Surjection::new(n, m, v.to_vec()).unwrap()
    }

    #[test]
    fn surjection_validation() {
        assert!(Surjection::new(2, 1, vec![0, 1, 0]).is_err());
        assert!(Surjection::new(2, 2, vec![0, 0, 2]).is_err());
        assert!(Surjection::new(2, 1, vec![0, 1]).is_err());
        assert!(Surjection::new(1, 1, vec![1, 1]).is_err());
        assert!(Surjection::new(2, 1, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn composition() {
        let sigma = s(2, 1, &[0, 0, 1]);
        assert_eq!(
            compose_surjections(&Surjection::identity(2), &sigma).unwrap(),
            sigma
        );
        assert_eq!(
            compose_surjections(&sigma, &s(1, 0, &[0, 0])).unwrap(),
            s(2, 0, &[0, 0, 0])
        );
        assert!(compose_surjections(&sigma, &sigma).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_surjections(2, 1).len(), 2);
        assert!(enumerate_surjections(1, 2).is_empty());
        assert_eq!(enumerate_surjections(0, 0), vec![Surjection::identity(0)]);
    }

    #[test]
    fn fibers() {
        let sigma = s(4, 2, &[0, 1, 1, 1, 2]);
        assert_eq!(sigma.fiber(0), 0..=0);
        assert_eq!(sigma.fiber(1), 1..=3);
        assert_eq!(sigma.fiber(2), 4..=4);
    }

    #[test]
    fn factorization_recomposes() {
        for n in 0..=4 {
            for m in 0..=n {
                for sigma in enumerate_surjections(n, m) {
                    let mut acc = Surjection::identity(n);
                    for step in sigma.codegeneracy_factorization() {
                        acc = compose_surjections(&acc, &step).unwrap();
                    }
                    assert_eq!(acc, sigma);
                }
            }
        }
    }

    #[test]
    fn shadows() {
        for n in 0..4 {
            assert_eq!(sigma_of(&identity(n)), Surjection::identity(n));
        }
        let stem =
            ForestMorphism::from_forest(validate(4, [(0, 2), (1, 2), (2, 3)]).unwrap()).unwrap();
        assert_eq!(sigma_of(&stem), s(1, 0, &[0, 0]));
        let cherry = validate(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(height_one_subposet(&stem).forest(), &cherry);
        let edge = ForestMorphism::from_forest(OrderedForest::chain(2)).unwrap();
        assert_eq!(height_one_subposet(&edge), edge);
    }

    #[test]
    fn forest_of_examples() {
        let id2 = forest_of(&Surjection::identity(2));
        assert_eq!(id2.size(), 6);
        assert_eq!(
            id2.forest(),
            &validate(6, [(0, 1), (2, 3), (4, 5)]).unwrap()
        );
        let f = forest_of(&s(2, 1, &[0, 0, 1]));
        assert_eq!(f.forest(), &validate(5, [(0, 2), (1, 2), (3, 4)]).unwrap());
        assert!(f.is_reduced());
        assert!(is_height_one(&f));
        // the identity is height zero, not a height-one representative
        assert!(!is_height_one(&identity(1)));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(duality(&s(2, 1, &[0, 0, 1])).values(), &[1]);
        assert_eq!(duality(&Surjection::identity(3)).values(), &[0, 1, 2]);
        let sigma = s(4, 2, &[0, 1, 1, 1, 2]);
        assert_eq!(from_cuts(&duality(&sigma)), sigma);
        assert!(Injection::new(3, vec![2, 1]).is_err());
        assert!(Injection::new(3, vec![3]).is_err());
    }

    #[test]
    fn pi_small() {
        let r = check_pi_functor(1);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.faithfulness_witness, (2, 1));
    }

    #[test]
    fn surjection_json() {
        let json = r#"{"n":2,"m":1,"values":[0,0,1]}"#;
        let sigma: Surjection = serde_json::from_str(json).unwrap();
        assert_eq!(serde_json::to_string(&sigma).unwrap(), json);
        assert!(serde_json::from_str::<Surjection>(r#"{"n":2,"m":1,"values":[0,1,0]}"#).is_err());
    }
}
