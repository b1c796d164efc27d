//! Truncated presheaves on the forest category. Restriction along the
//! shadow functor has a right adjoint computed as finite limits.
//!
//! The right adjoint at `[n]` is a limit over pairs `(k, σ: [n] ↠ [k])`.
//! An arrow `(k, σ) -> (k', σ')` is a reduced morphism `h: [k'] -> [k]` with
//! `σ_h ∘ σ = σ'`; the arrow `(k, σ) -> (k', σ') -> (k'', σ'')` built from
//! `h1` then `h2` is `h1 ∘ h2`. A point of the limit is a family
//! `x_(k,σ) ∈ X[k]` with `X(h) x_(k,σ) = x_(k',σ')`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::category::{cached_fragment, identity, Fragment};
use crate::error::{Error, Result};
use crate::forest::ForestRecord;
use crate::linalg::{
    solve_limit, Equation, LimitSolution, LinearConstraintSystem, MatrixRecord, RationalMatrix,
};
use crate::morphism::ForestMorphism;
use crate::normalization::{is_fibration, EpiFunctor, EpiMap};
use crate::shadow::{compose_surjections, enumerate_surjections, sigma_of, Surjection};

/// `X[0..=N]` with `X(F): X[n] -> X[m]` for every reduced `F: [m] -> [n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPresheaf {
    truncation: usize,
    dims: Vec<usize>,
    maps: BTreeMap<ForestMorphism, RationalMatrix>,
}

impl TruncatedPresheaf {
    pub fn new(
        truncation: usize,
        dims: Vec<usize>,
        maps: BTreeMap<ForestMorphism, RationalMatrix>,
    ) -> Result<Self> {
        if dims.len() != truncation + 1 {
            return Err(Error::DimensionMismatch(format!(
                "truncation {truncation} but {} dims",
                dims.len()
            )));
        }
        let frag = cached_fragment(truncation);
        for f in frag.morphisms() {
            let x = maps.get(f).ok_or_else(|| {
                Error::FunctorLawViolation(format!("no matrix for {}", f.to_record().key()))
            })?;
            if x.rows() != dims[f.dom()] || x.cols() != dims[f.cod()] {
                return Err(Error::DimensionMismatch(format!(
                    "matrix for {}",
                    f.to_record().key()
                )));
            }
        }
        if let Some(f) = maps.keys().find(|f| !frag.contains(f)) {
            return Err(Error::FunctorLawViolation(format!(
                "{} is not a reduced morphism of the truncation",
                f.to_record().key()
            )));
        }
        let x = TruncatedPresheaf {
            truncation,
            dims,
            maps,
        };
        x.check_laws(&frag)?;
        Ok(x)
    }

    /// `X(id) = id` and `X(F ∘ G) = X(G) X(F)` against the composition table.
    fn check_laws(&self, frag: &Fragment) -> Result<()> {
        for n in 0..=self.truncation {
            if self.map(&identity(n)) != &RationalMatrix::identity(self.dims[n]) {
                return Err(Error::FunctorLawViolation(format!(
                    "X(id_[{n}]) is not the identity"
                )));
            }
        }
        let bad = frag.composites().par_iter().find_any(|(f, g, fg)| {
            self.map(g)
                .mul(self.map(f))
                .map(|m| &m != self.map(fg))
                .unwrap_or(true)
        });
        match bad {
            Some((f, g, _)) => Err(Error::FunctorLawViolation(format!(
                "X({} ∘ {})",
                f.to_record().key(),
                g.to_record().key()
            ))),
            None => Ok(()),
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, f: &ForestMorphism) -> &RationalMatrix {
        &self.maps[f]
    }

    pub fn maps(&self) -> &BTreeMap<ForestMorphism, RationalMatrix> {
        &self.maps
    }

    pub fn to_record(&self) -> PresheafRecord {
        PresheafRecord {
            truncation: self.truncation,
            dims: self.dims.clone(),
            maps: self
                .maps
                .iter()
                .map(|(f, m)| (f.to_record().key(), m.to_record()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresheafRecord {
    #[serde(rename = "N")]
    pub truncation: usize,
    pub dims: Vec<usize>,
    pub maps: BTreeMap<String, MatrixRecord>,
}

impl PresheafRecord {
    pub fn to_presheaf(&self) -> Result<TruncatedPresheaf> {
        let mut maps = BTreeMap::new();
        for (key, m) in &self.maps {
            let record: ForestRecord = serde_json::from_str(key)
                .map_err(|e| Error::MalformedInput(format!("forest key {key}: {e}")))?;
            let f = ForestMorphism::from_forest(record.validate()?)?;
            maps.insert(f, m.to_matrix()?);
        }
        TruncatedPresheaf::new(self.truncation, self.dims.clone(), maps)
    }
}

impl Serialize for TruncatedPresheaf {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedPresheaf {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PresheafRecord::deserialize(d)?
            .to_presheaf()
            .map_err(serde::de::Error::custom)
    }
}

/// Restriction along the shadow: `X[n] = A[n]`, `X(F) = A(σ_F)`.
pub fn pullback_presheaf(a: &EpiFunctor) -> Result<TruncatedPresheaf> {
    let frag = cached_fragment(a.truncation());
    let maps = frag
        .morphisms()
        .map(|f| (f.clone(), a.map(&sigma_of(f)).clone()))
        .collect();
    TruncatedPresheaf::new(a.truncation(), a.dims().to_vec(), maps)
}

/// Free on `Hom([m], [k])` at `[m]`, acting by precomposition.
pub fn representable_presheaf(k: usize, truncation: usize) -> Result<TruncatedPresheaf> {
    if k > truncation {
        return Err(Error::TruncationTooSmall(truncation));
    }
    let frag = cached_fragment(truncation);
    let bases: Vec<&[ForestMorphism]> = (0..=truncation)
        .map(|m| frag.hom(m, k).morphisms.as_slice())
        .collect();
    let index: Vec<HashMap<&ForestMorphism, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, h)| (h, i)).collect())
        .collect();
    let composite: HashMap<(&ForestMorphism, &ForestMorphism), &ForestMorphism> = frag
        .composites()
        .iter()
        .map(|(f, g, fg)| ((f, g), fg))
        .collect();
    let mut maps = BTreeMap::new();
    for f in frag.morphisms() {
        let (m, n) = (f.dom(), f.cod());
        let mut x = RationalMatrix::zeros(bases[m].len(), bases[n].len());
        for (j, h) in bases[n].iter().enumerate() {
            let hf = composite[&(h, f)];
            x[(index[m][hf], j)] = crate::linalg::q(1);
        }
        maps.insert(f.clone(), x);
    }
    TruncatedPresheaf::new(truncation, bases.iter().map(|b| b.len()).collect(), maps)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CommaObject {
    pub k: usize,
    pub sigma: Surjection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommaArrow {
    pub source: usize,
    pub target: usize,
    /// `h: [k_target] -> [k_source]`.
    pub h: ForestMorphism,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommaDiagram {
    pub base: usize,
    pub objects: Vec<CommaObject>,
    pub arrows: Vec<CommaArrow>,
}

impl CommaDiagram {
    pub fn index_of(&self, k: usize, sigma: &Surjection) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.k == k && &o.sigma == sigma)
    }

    /// Identities present and composites closed; failures as messages.
    pub fn check_category_laws(&self, frag: &Fragment) -> Vec<String> {
        let mut failures = Vec::new();
        let has = |s: usize, t: usize, h: &ForestMorphism| {
            self.arrows
                .iter()
                .any(|a| a.source == s && a.target == t && &a.h == h)
        };
        for (i, o) in self.objects.iter().enumerate() {
            if !has(i, i, &identity(o.k)) {
                failures.push(format!("no identity at {i}"));
            }
        }
        let composite: HashMap<(&ForestMorphism, &ForestMorphism), &ForestMorphism> = frag
            .composites()
            .iter()
            .map(|(f, g, fg)| ((f, g), fg))
            .collect();
        for a in &self.arrows {
            for b in self.arrows.iter().filter(|b| b.source == a.target) {
                let h = composite[&(&a.h, &b.h)];
                if !has(a.source, b.target, h) {
                    failures.push(format!(
                        "composite {} -> {} -> {} missing",
                        a.source, a.target, b.target
                    ));
                }
            }
        }
        failures
    }
}

pub fn build_comma(n: usize, truncation: usize) -> Result<CommaDiagram> {
    if n > truncation {
        return Err(Error::TruncationTooSmall(truncation));
    }
    let frag = cached_fragment(truncation);
    Ok(comma_in(&frag, n))
}

fn comma_in(frag: &Fragment, n: usize) -> CommaDiagram {
    let objects: Vec<CommaObject> = (0..=n)
        .flat_map(|k| {
            enumerate_surjections(n, k)
                .into_iter()
                .map(move |sigma| CommaObject { k, sigma })
        })
        .collect();
    let mut arrows = Vec::new();
    for (s, a) in objects.iter().enumerate() {
        for (t, b) in objects.iter().enumerate() {
            if b.k > a.k {
                continue;
            }
            for h in &frag.hom(b.k, a.k).morphisms {
                let moved = compose_surjections(&a.sigma, &sigma_of(h)).expect("indices match");
                if moved == b.sigma {
                    arrows.push(CommaArrow {
                        source: s,
                        target: t,
                        h: h.clone(),
                    });
                }
            }
        }
    }
    CommaDiagram {
        base: n,
        objects,
        arrows,
    }
}

/// The limit of `X` over the comma diagram at `[n]`.
#[derive(Clone, Debug)]
pub struct Pushforward {
    pub comma: CommaDiagram,
    pub limit: LimitSolution,
}

impl Pushforward {
    pub fn dim(&self) -> usize {
        self.limit.dim()
    }
}

pub fn pushforward(x: &TruncatedPresheaf, n: usize) -> Result<Pushforward> {
    let frag = cached_fragment(x.truncation);
    if n > x.truncation {
        return Err(Error::TruncationTooSmall(x.truncation));
    }
    let comma = comma_in(&frag, n);
    assert!(
        comma.index_of(n, &Surjection::identity(n)).is_some(),
        "comma diagrams contain (n, id)"
    );
    let limit = limit_over(&comma, x.dims(), |h| x.map(h).clone())?;
    Ok(Pushforward { comma, limit })
}

fn limit_over(
    comma: &CommaDiagram,
    dims: &[usize],
    act: impl Fn(&ForestMorphism) -> RationalMatrix,
) -> Result<LimitSolution> {
    let mut sys = LinearConstraintSystem::new(comma.objects.iter().map(|o| dims[o.k]).collect());
    for a in comma
        .arrows
        .iter()
        .filter(|a| a.source != a.target || !a.h.forest().covers().is_empty())
    {
        let rows = dims[comma.objects[a.target].k];
        let xh = act(&a.h);
        let terms = if a.source == a.target {
            vec![(a.source, xh.sub(&RationalMatrix::identity(rows))?)]
        } else {
            vec![
                (a.source, xh),
                (a.target, RationalMatrix::identity(rows).neg()),
            ]
        };
        sys.push(Equation { rows, terms })?;
    }
    Ok(solve_limit(&sys))
}

/// Selects the `(k, ρ ∘ τ)` block into slot `(k, ρ)`, from the product at
/// the source of `τ` to the product at its target.
fn restriction_matrix(
    from: &CommaDiagram,
    to: &CommaDiagram,
    tau: &Surjection,
    dims: &[usize],
) -> RationalMatrix {
    let offsets = |c: &CommaDiagram| -> Vec<usize> {
        let mut acc = 0;
        c.objects
            .iter()
            .map(|o| {
                let at = acc;
                acc += dims[o.k];
                at
            })
            .collect()
    };
    let (fo, to_off) = (offsets(from), offsets(to));
    let total = |c: &CommaDiagram| c.objects.iter().map(|o| dims[o.k]).sum();
    let mut p = RationalMatrix::zeros(total(to), total(from));
    for (t, o) in to.objects.iter().enumerate() {
        let pulled = compose_surjections(tau, &o.sigma).expect("indices match");
        let s = from
            .index_of(o.k, &pulled)
            .expect("pulled-back object exists");
        p.set_block(to_off[t], fo[s], &RationalMatrix::identity(dims[o.k]));
    }
    p
}

/// All pushforward limits plus the induced functor on surjections.
#[derive(Clone, Debug)]
pub struct PushforwardFunctor {
    pub levels: Vec<Pushforward>,
    pub functor: EpiFunctor,
}

pub fn pushforward_functor(x: &TruncatedPresheaf) -> Result<PushforwardFunctor> {
    let levels: Vec<Pushforward> = (0..=x.truncation)
        .into_par_iter()
        .map(|n| pushforward(x, n))
        .collect::<Result<_>>()?;
    let dims = levels.iter().map(|l| l.dim()).collect();
    let mut maps = BTreeMap::new();
    for n in 0..=x.truncation {
        for m in 0..=n {
            for tau in enumerate_surjections(n, m) {
                let p = restriction_matrix(&levels[n].comma, &levels[m].comma, &tau, x.dims());
                let moved = p.mul(&levels[n].limit.basis)?;
                let coords = levels[m].limit.basis.solve(&moved)?.ok_or_else(|| {
                    Error::FunctorLawViolation(format!("{:?} leaves the limit", tau.values()))
                })?;
                maps.insert(tau, coords);
            }
        }
    }
    let functor = EpiFunctor::new(x.truncation, dims, maps)?;
    Ok(PushforwardFunctor { levels, functor })
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitReport {
    pub dims: Vec<usize>,
    pub pushforward_dims: Vec<usize>,
    pub iso: Vec<bool>,
}

impl UnitReport {
    pub fn passed(&self) -> bool {
        self.iso.iter().all(|&b| b)
    }
}

/// `η_A: A -> π_* π^* A` with component `A(σ)` at `(k, σ)`.
pub fn unit_check(a: &EpiFunctor) -> Result<UnitReport> {
    let x = pullback_presheaf(a)?;
    let mut pushforward_dims = Vec::new();
    let mut iso = Vec::new();
    for n in 0..=a.truncation() {
        let p = pushforward(&x, n)?;
        let blocks: Vec<RationalMatrix> = p
            .comma
            .objects
            .iter()
            .map(|o| a.map(&o.sigma).clone())
            .collect();
        let mut eta = RationalMatrix::zeros(0, a.dims()[n]);
        for b in &blocks {
            eta = eta.vstack(b)?;
        }
        let coords = p
            .limit
            .basis
            .solve(&eta)?
            .ok_or(Error::NotACone { degree: n })?;
        pushforward_dims.push(p.dim());
        iso.push(coords.is_isomorphism());
    }
    Ok(UnitReport {
        dims: a.dims().to_vec(),
        pushforward_dims,
        iso,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CounitReport {
    pub dims: Vec<usize>,
    pub pushforward_dims: Vec<usize>,
    pub counit_iso: Vec<bool>,
    pub naturality_failures: Vec<String>,
    pub pushed_counit_iso: Vec<bool>,
}

impl CounitReport {
    pub fn passed(&self) -> bool {
        self.naturality_failures.is_empty() && self.pushed_counit_iso.iter().all(|&b| b)
    }

    pub fn counit_is_iso(&self) -> bool {
        self.counit_iso.iter().all(|&b| b)
    }
}

/// `ε_X: π^* π_* X -> X`, projection onto the `(k, id)` block at `[k]`,
/// together with its pushforward.
pub fn counit_check(x: &TruncatedPresheaf) -> Result<CounitReport> {
    let pf = pushforward_functor(x)?;
    let eps: Vec<RationalMatrix> = (0..=x.truncation)
        .map(|k| {
            let at = pf.levels[k]
                .comma
                .index_of(k, &Surjection::identity(k))
                .expect("(k, id) exists");
            pf.levels[k].limit.projections[at].clone()
        })
        .collect();
    let pulled = pullback_presheaf(&pf.functor)?;
    let frag = cached_fragment(x.truncation);
    let mut naturality_failures = Vec::new();
    for f in frag.morphisms() {
        let lhs = x.map(f).mul(&eps[f.cod()])?;
        let rhs = eps[f.dom()].mul(pulled.map(f))?;
        if lhs != rhs {
            naturality_failures.push(f.to_record().key());
        }
    }
    let map = PresheafMap::new(pulled, x.clone(), eps.clone())?;
    let pushed = pushforward_map(&map)?;
    Ok(CounitReport {
        dims: x.dims().to_vec(),
        pushforward_dims: pf.functor.dims().to_vec(),
        counit_iso: eps.iter().map(|e| e.is_isomorphism()).collect(),
        naturality_failures,
        pushed_counit_iso: pushed
            .components()
            .iter()
            .map(|c| c.is_isomorphism())
            .collect(),
    })
}

/// A natural map of truncated presheaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresheafMap {
    source: TruncatedPresheaf,
    target: TruncatedPresheaf,
    components: Vec<RationalMatrix>,
}

impl PresheafMap {
    pub fn new(
        source: TruncatedPresheaf,
        target: TruncatedPresheaf,
        components: Vec<RationalMatrix>,
    ) -> Result<Self> {
        if source.truncation != target.truncation || components.len() != source.truncation + 1 {
            return Err(Error::DimensionMismatch(
                "map between presheaves of different truncation".into(),
            ));
        }
        for (n, f) in components.iter().enumerate() {
            if f.rows() != target.dims[n] || f.cols() != source.dims[n] {
                return Err(Error::DimensionMismatch(format!("component {n}")));
            }
        }
        for (h, xh) in &source.maps {
            let lhs = target.map(h).mul(&components[h.cod()])?;
            let rhs = components[h.dom()].mul(xh)?;
            if lhs != rhs {
                return Err(Error::NotNatural(format!(
                    "square at {}",
                    h.to_record().key()
                )));
            }
        }
        Ok(PresheafMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(x: &TruncatedPresheaf) -> Self {
        let components = x
            .dims
            .iter()
            .map(|&d| RationalMatrix::identity(d))
            .collect();
        PresheafMap {
            source: x.clone(),
            target: x.clone(),
            components,
        }
    }

    /// Restriction of a natural map of functors on surjections.
    pub fn pullback(u: &EpiMap) -> Result<Self> {
        PresheafMap::new(
            pullback_presheaf(u.source())?,
            pullback_presheaf(u.target())?,
            u.components().to_vec(),
        )
    }

    pub fn source(&self) -> &TruncatedPresheaf {
        &self.source
    }

    pub fn target(&self) -> &TruncatedPresheaf {
        &self.target
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    pub fn to_record(&self) -> PresheafMapRecord {
        PresheafMapRecord {
            source: self.source.to_record(),
            target: self.target.to_record(),
            components: self.components.iter().map(|m| m.to_record()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresheafMapRecord {
    pub source: PresheafRecord,
    pub target: PresheafRecord,
    pub components: Vec<MatrixRecord>,
}

impl PresheafMapRecord {
    pub fn to_map(&self) -> Result<PresheafMap> {
        PresheafMap::new(
            self.source.to_presheaf()?,
            self.target.to_presheaf()?,
            self.components
                .iter()
                .map(|m| m.to_matrix())
                .collect::<Result<_>>()?,
        )
    }
}

/// `π_* f` as a natural map of functors on surjections.
pub fn pushforward_map(f: &PresheafMap) -> Result<EpiMap> {
    let ps = pushforward_functor(&f.source)?;
    let pt = pushforward_functor(&f.target)?;
    let mut components = Vec::with_capacity(f.components.len());
    for n in 0..f.components.len() {
        let blocks: Vec<RationalMatrix> = ps.levels[n]
            .comma
            .objects
            .iter()
            .map(|o| f.components[o.k].clone())
            .collect();
        let moved = RationalMatrix::block_diag(&blocks).mul(&ps.levels[n].limit.basis)?;
        let coords = pt.levels[n]
            .limit
            .basis
            .solve(&moved)?
            .ok_or_else(|| Error::NotNatural(format!("image leaves the limit at [{n}]")))?;
        components.push(coords);
    }
    EpiMap::new(ps.functor, pt.functor, components)
}

pub fn detect_weak_equivalence(f: &PresheafMap) -> Result<bool> {
    pushforward_map(f)?.is_weak_equivalence()
}

pub fn detect_fibration(f: &PresheafMap) -> Result<bool> {
    is_fibration(&pushforward_map(f)?.to_ssm_map()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::enumerate_hom;
    use crate::linalg::q;

    #[test]
    fn pullback_of_constant_is_constant() {
        let x = pullback_presheaf(&EpiFunctor::constant(2, 2)).unwrap();
        assert!(x.maps().values().all(|m| m == &RationalMatrix::identity(2)));
    }

    #[test]
    fn pullback_hides_the_two_endomorphisms() {
        let mut maps = BTreeMap::new();
        maps.insert(Surjection::identity(0), RationalMatrix::identity(1));
        let a = EpiFunctor::new(0, vec![1], maps).unwrap();
        let x = pullback_presheaf(&a).unwrap();
        let ends = enumerate_hom(0, 0);
        assert_eq!(ends.len(), 2);
        assert_eq!(x.map(&ends.morphisms[0]), x.map(&ends.morphisms[1]));
    }

    #[test]
    fn representable_at_zero() {
        let x = representable_presheaf(0, 1).unwrap();
        assert_eq!(x.dims(), &[2, 0]);
        let ends = enumerate_hom(0, 0);
        let a = x.map(&ends.morphisms[0]);
        let b = x.map(&ends.morphisms[1]);
        assert_ne!(a, b);
        let e = &ends.morphisms[1];
        assert_eq!(e.size(), 2);
        assert_eq!(b, &RationalMatrix::from_i64(2, &[&[0, 0], &[1, 1]]));
        assert!(representable_presheaf(3, 2).is_err());
    }

    #[test]
    fn comma_shapes() {
        let c0 = build_comma(0, 2).unwrap();
        assert_eq!(c0.objects.len(), 1);
        let compatible = enumerate_hom(0, 0)
            .morphisms
            .iter()
            .filter(|h| sigma_of(h).is_identity())
            .count();
        assert_eq!(c0.arrows.len(), compatible);
        assert_eq!(build_comma(1, 2).unwrap().objects.len(), 2);
        let frag = cached_fragment(2);
        for n in 0..=2 {
            assert!(build_comma(n, 2)
                .unwrap()
                .check_category_laws(&frag)
                .is_empty());
        }
    }

    #[test]
    fn pushforward_of_constant_recovers_dims() {
        let a = EpiFunctor::constant(2, 2);
        let pf = pushforward_functor(&pullback_presheaf(&a).unwrap()).unwrap();
        assert_eq!(pf.functor.dims(), &[2, 2, 2]);
        assert!(unit_check(&a).unwrap().passed());
    }

    #[test]
    fn representable_counit() {
        let x = representable_presheaf(0, 2).unwrap();
        let r = counit_check(&x).unwrap();
        assert_eq!(r.pushforward_dims, vec![1, 0, 0]);
        assert!(!r.counit_is_iso());
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn counit_of_pullback_is_iso() {
        let r = counit_check(&pullback_presheaf(&EpiFunctor::constant(2, 1)).unwrap()).unwrap();
        assert!(r.counit_is_iso() && r.passed());
    }

    #[test]
    fn detection_on_simple_maps() {
        let x = pullback_presheaf(&EpiFunctor::constant(2, 1)).unwrap();
        assert!(detect_weak_equivalence(&PresheafMap::identity(&x)).unwrap());
        let zero =
            PresheafMap::new(x.clone(), x.clone(), vec![RationalMatrix::zeros(1, 1); 3]).unwrap();
        // constant Q has normalized homology Q in degree 0
        assert!(!detect_weak_equivalence(&zero).unwrap());
        let bad = PresheafMap::new(
            x.clone(),
            x,
            vec![
                RationalMatrix::identity(1),
                RationalMatrix::from_entries(1, 1, vec![q(2)]).unwrap(),
                RationalMatrix::identity(1),
            ],
        );
        assert!(matches!(bad, Err(Error::NotNatural(_))));
    }

    #[test]
    fn presheaf_json_round_trip() {
        let x = representable_presheaf(0, 1).unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.contains(r#""{\"size\":2,\"covers\":[[0,1]]}""#));
        assert_eq!(serde_json::from_str::<TruncatedPresheaf>(&json).unwrap(), x);
    }
}
