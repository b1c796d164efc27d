//! Semisimplicial modules with normalized chains and their left adjoint.
//! Modules translate to functors on order-preserving surjections.
//!
//! A functor `A` on surjections with truncation `N` becomes a module with
//! `X_n = A[n+1]` for `n < N` and faces `d_i = A(s^i)`, where
//! `s^i: [n+1] ↠ [n]` hits `i` twice. The level `A[0]` is kept as an
//! augmentation `ε = A(s^0): X_0 -> A[0]` that normalization never reads.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ChainComplex, ChainMap, MatrixRecord, RationalMatrix};
use crate::shadow::{compose_surjections, enumerate_surjections, Surjection};

/// Face-map presentation: levels `X_0 ..= X_N`, faces `d_i: X_n -> X_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimplicialModule {
    dims: Vec<usize>,
    /// `faces[n - 1][i]` is `d_i` on `X_n`.
    faces: Vec<Vec<RationalMatrix>>,
    augmentation_dim: usize,
    augmentation: RationalMatrix,
}

impl SemisimplicialModule {
    /// An unaugmented module (augmentation level of dimension zero).
    pub fn new(dims: Vec<usize>, faces: Vec<Vec<RationalMatrix>>) -> Result<Self> {
        let aug = RationalMatrix::zeros(0, dims.first().copied().unwrap_or(0));
        Self::augmented(dims, faces, 0, aug)
    }

    pub fn augmented(
        dims: Vec<usize>,
        faces: Vec<Vec<RationalMatrix>>,
        augmentation_dim: usize,
        augmentation: RationalMatrix,
    ) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::DimensionMismatch(
                "a module needs at least level 0".into(),
            ));
        }
        if faces.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} face levels for {} degrees",
                faces.len(),
                dims.len()
            )));
        }
        for (k, level) in faces.iter().enumerate() {
            let n = k + 1;
            if level.len() != n + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "degree {n} has {} faces",
                    level.len()
                )));
            }
            for (i, d) in level.iter().enumerate() {
                if d.rows() != dims[n - 1] || d.cols() != dims[n] {
                    return Err(Error::DimensionMismatch(format!(
                        "face d_{i} on degree {n}"
                    )));
                }
            }
        }
        if augmentation.rows() != augmentation_dim || augmentation.cols() != dims[0] {
            return Err(Error::DimensionMismatch("augmentation".into()));
        }
        let x = SemisimplicialModule {
            dims,
            faces,
            augmentation_dim,
            augmentation,
        };
        x.check_identities()?;
        Ok(x)
    }

    fn check_identities(&self) -> Result<()> {
        for n in 2..=self.top() {
            for j in 1..=n {
                for i in 0..j {
                    let lhs = self.face(n - 1, i).mul(self.face(n, j))?;
                    let rhs = self.face(n - 1, j - 1).mul(self.face(n, i))?;
                    if lhs != rhs {
                        return Err(Error::SimplicialIdentityViolation { n, i, j });
                    }
                }
            }
        }
        if self.top() >= 1 {
            let a = self.augmentation.mul(self.face(1, 0))?;
            let b = self.augmentation.mul(self.face(1, 1))?;
            if a != b {
                return Err(Error::AugmentationViolation);
            }
        }
        Ok(())
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `d_i: X_n -> X_{n-1}`.
    pub fn face(&self, n: usize, i: usize) -> &RationalMatrix {
        &self.faces[n - 1][i]
    }

    pub fn augmentation_dim(&self) -> usize {
        self.augmentation_dim
    }

    pub fn augmentation(&self) -> &RationalMatrix {
        &self.augmentation
    }

    pub fn to_record(&self) -> SsmRecord {
        let mut faces = BTreeMap::new();
        for n in 1..=self.top() {
            for i in 0..=n {
                faces.insert(format!("{n},{i}"), self.face(n, i).to_record());
            }
        }
        let augmentation = (self.augmentation_dim > 0).then(|| AugmentationRecord {
            dim: self.augmentation_dim,
            map: self.augmentation.to_record(),
        });
        SsmRecord {
            top: self.top(),
            dims: self.dims.clone(),
            faces,
            augmentation,
        }
    }
}

pub fn validate_ssm(
    dims: Vec<usize>,
    faces: Vec<Vec<RationalMatrix>>,
) -> Result<SemisimplicialModule> {
    SemisimplicialModule::new(dims, faces)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationRecord {
    pub dim: usize,
    pub map: MatrixRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsmRecord {
    #[serde(rename = "N")]
    pub top: usize,
    pub dims: Vec<usize>,
    pub faces: BTreeMap<String, MatrixRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<AugmentationRecord>,
}

impl SsmRecord {
    pub fn to_module(&self) -> Result<SemisimplicialModule> {
        if self.dims.len() != self.top + 1 {
            return Err(Error::MalformedInput(format!(
                "N = {} but {} dims",
                self.top,
                self.dims.len()
            )));
        }
        let mut faces = Vec::with_capacity(self.top);
        for n in 1..=self.top {
            let mut level = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let key = format!("{n},{i}");
                let m = self
                    .faces
                    .get(&key)
                    .ok_or_else(|| Error::MalformedInput(format!("missing face \"{key}\"")))?;
                level.push(m.to_matrix()?);
            }
            faces.push(level);
        }
        if let Some(extra) = self.faces.keys().find(|k| {
            let parsed: Option<(usize, usize)> = k
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            !matches!(parsed, Some((n, i)) if (1..=self.top).contains(&n) && i <= n)
        }) {
            return Err(Error::MalformedInput(format!(
                "unexpected face key \"{extra}\""
            )));
        }
        match &self.augmentation {
            Some(a) => {
                SemisimplicialModule::augmented(self.dims.clone(), faces, a.dim, a.map.to_matrix()?)
            }
            None => SemisimplicialModule::new(self.dims.clone(), faces),
        }
    }
}

impl Serialize for SemisimplicialModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SemisimplicialModule {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        SsmRecord::deserialize(d)?
            .to_module()
            .map_err(serde::de::Error::custom)
    }
}

/// Column bases of `N_n = ∩_{i<n} ker d_i` for every degree.
pub fn normalized_bases(x: &SemisimplicialModule) -> Vec<RationalMatrix> {
    (0..=x.top())
        .map(|n| {
            if n == 0 {
                return RationalMatrix::identity(x.dims[0]);
            }
            let mut stacked = RationalMatrix::zeros(0, x.dims[n]);
            for i in 0..n {
                stacked = stacked.vstack(x.face(n, i)).expect("faces share a source");
            }
            stacked.kernel()
        })
        .collect()
}

/// Normalized chains with `∂_n = (-1)^n d_n` restricted to `N_n`.
pub fn normalize(x: &SemisimplicialModule) -> Result<ChainComplex> {
    let bases = normalized_bases(x);
    let mut differentials = Vec::with_capacity(x.top());
    for n in 1..=x.top() {
        let mut image = x.face(n, n).mul(&bases[n])?;
        if n % 2 == 1 {
            image = image.neg();
        }
        let coords = bases[n - 1]
            .solve(&image)?
            .ok_or(Error::NotAComplex { degree: n })?;
        differentials.push(coords);
    }
    ChainComplex::new(bases.iter().map(|b| b.cols()).collect(), differentials)
}

/// The left adjoint: `d_i = 0` for `i < n` and `d_n = (-1)^n ∂_n`.
pub fn gamma(c: &ChainComplex) -> SemisimplicialModule {
    let faces = (1..=c.top())
        .map(|n| {
            let mut level: Vec<RationalMatrix> = (0..n)
                .map(|_| RationalMatrix::zeros(c.dim(n - 1), c.dim(n)))
                .collect();
            let d = c.differential(n);
            level.push(if n % 2 == 1 { d.neg() } else { d });
            level
        })
        .collect();
    SemisimplicialModule::new(c.dims().to_vec(), faces).expect("one nonzero face per degree")
}

/// A levelwise map commuting with every face and the augmentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsmMap {
    source: SemisimplicialModule,
    target: SemisimplicialModule,
    components: Vec<RationalMatrix>,
    augmentation: RationalMatrix,
}

impl SsmMap {
    pub fn new(
        source: SemisimplicialModule,
        target: SemisimplicialModule,
        components: Vec<RationalMatrix>,
    ) -> Result<Self> {
        let aug = RationalMatrix::zeros(target.augmentation_dim, source.augmentation_dim);
        Self::augmented(source, target, components, aug)
    }

    pub fn augmented(
        source: SemisimplicialModule,
        target: SemisimplicialModule,
        components: Vec<RationalMatrix>,
        augmentation: RationalMatrix,
    ) -> Result<Self> {
        if source.top() != target.top() || components.len() != source.dims.len() {
            return Err(Error::DimensionMismatch(
                "map between modules of different length".into(),
            ));
        }
        for (n, f) in components.iter().enumerate() {
            if f.rows() != target.dims[n] || f.cols() != source.dims[n] {
                return Err(Error::DimensionMismatch(format!("component {n}")));
            }
        }
        if augmentation.rows() != target.augmentation_dim
            || augmentation.cols() != source.augmentation_dim
        {
            return Err(Error::DimensionMismatch("augmentation component".into()));
        }
        for n in 1..=source.top() {
            for i in 0..=n {
                let lhs = target.face(n, i).mul(&components[n])?;
                let rhs = components[n - 1].mul(source.face(n, i))?;
                if lhs != rhs {
                    return Err(Error::NotNatural(format!("face d_{i} on degree {n}")));
                }
            }
        }
        if target.augmentation.mul(&components[0])? != augmentation.mul(&source.augmentation)? {
            return Err(Error::NotNatural("augmentation".into()));
        }
        Ok(SsmMap {
            source,
            target,
            components,
            augmentation,
        })
    }

    pub fn identity(x: &SemisimplicialModule) -> Self {
        let components = x
            .dims
            .iter()
            .map(|&d| RationalMatrix::identity(d))
            .collect();
        let aug = RationalMatrix::identity(x.augmentation_dim);
        SsmMap {
            source: x.clone(),
            target: x.clone(),
            components,
            augmentation: aug,
        }
    }

    pub fn source(&self) -> &SemisimplicialModule {
        &self.source
    }

    pub fn target(&self) -> &SemisimplicialModule {
        &self.target
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    pub fn is_levelwise_surjective(&self) -> bool {
        self.components.iter().all(|f| f.is_surjective())
    }
}

/// `N(f)` on normalized coordinates.
pub fn normalize_map(f: &SsmMap) -> Result<ChainMap> {
    let bx = normalized_bases(&f.source);
    let by = normalized_bases(&f.target);
    let mut components = Vec::with_capacity(bx.len());
    for n in 0..bx.len() {
        let pushed = f.components[n].mul(&bx[n])?;
        let coords = by[n]
            .solve(&pushed)?
            .ok_or_else(|| Error::NotNatural(format!("image of N_{n} leaves N_{n}")))?;
        components.push(coords);
    }
    ChainMap::new(normalize(&f.source)?, normalize(&f.target)?, components)
}

pub fn is_weak_equivalence(f: &SsmMap) -> Result<bool> {
    Ok(normalize_map(f)?.is_quasi_iso())
}

pub fn is_fibration(f: &SsmMap) -> Result<bool> {
    Ok(normalize_map(f)?
        .components()
        .iter()
        .all(|m| m.is_surjective()))
}

/// A covariant functor on surjections `[n] ↠ [m]` with `n, m <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpiFunctor {
    truncation: usize,
    dims: Vec<usize>,
    maps: BTreeMap<Surjection, RationalMatrix>,
}

impl EpiFunctor {
    pub fn new(
        truncation: usize,
        dims: Vec<usize>,
        maps: BTreeMap<Surjection, RationalMatrix>,
    ) -> Result<Self> {
        if dims.len() != truncation + 1 {
            return Err(Error::DimensionMismatch(format!(
                "truncation {truncation} but {} dims",
                dims.len()
            )));
        }
        for n in 0..=truncation {
            for m in 0..=n {
                for s in enumerate_surjections(n, m) {
                    let a = maps.get(&s).ok_or_else(|| {
                        Error::FunctorLawViolation(format!("no matrix for {:?}", s.values()))
                    })?;
                    if a.rows() != dims[m] || a.cols() != dims[n] {
                        return Err(Error::DimensionMismatch(format!(
                            "matrix for {:?}",
                            s.values()
                        )));
                    }
                }
            }
        }
        if let Some(s) = maps.keys().find(|s| s.source() > truncation) {
            return Err(Error::FunctorLawViolation(format!(
                "{:?} is above the truncation",
                s.values()
            )));
        }
        let a = EpiFunctor {
            truncation,
            dims,
            maps,
        };
        a.check_laws()?;
        Ok(a)
    }

    /// `A(id) = id` and `A(τ∘σ) = A(τ) A(σ)` on the truncation.
    pub fn check_laws(&self) -> Result<()> {
        for n in 0..=self.truncation {
            if self.map(&Surjection::identity(n)) != &RationalMatrix::identity(self.dims[n]) {
                return Err(Error::FunctorLawViolation(format!(
                    "A(id_[{n}]) is not the identity"
                )));
            }
        }
        for n in 0..=self.truncation {
            for k in 0..=n {
                for sigma in enumerate_surjections(n, k) {
                    for m in 0..=k {
                        for tau in enumerate_surjections(k, m) {
                            let composite = compose_surjections(&sigma, &tau)?;
                            if *self.map(&composite) != self.map(&tau).mul(self.map(&sigma))? {
                                return Err(Error::FunctorLawViolation(format!(
                                    "A({:?} then {:?})",
                                    sigma.values(),
                                    tau.values()
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Every space `Q^dim`, every map the identity.
    pub fn constant(truncation: usize, dim: usize) -> Self {
        let mut maps = BTreeMap::new();
        for n in 0..=truncation {
            for m in 0..=n {
                for s in enumerate_surjections(n, m) {
                    maps.insert(s, RationalMatrix::identity(dim));
                }
            }
        }
        EpiFunctor {
            truncation,
            dims: vec![dim; truncation + 1],
            maps,
        }
    }

    /// Extends the values on codegeneracies to all surjections. The laws are
    /// checked, not assumed.
    pub fn from_codegeneracies(
        truncation: usize,
        dims: Vec<usize>,
        codegeneracy: impl Fn(usize, usize) -> RationalMatrix,
    ) -> Result<Self> {
        let mut maps = BTreeMap::new();
        for n in 0..=truncation {
            for m in 0..=n {
                for s in enumerate_surjections(n, m) {
                    let mut acc = RationalMatrix::identity(dims[n]);
                    for step in s.codegeneracy_factorization() {
                        let k = step.target();
                        let i = (0..=k)
                            .find(|&i| step.apply(i) == step.apply(i + 1))
                            .expect("elementary");
                        acc = codegeneracy(k, i).mul(&acc)?;
                    }
                    maps.insert(s, acc);
                }
            }
        }
        EpiFunctor::new(truncation, dims, maps)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn map(&self, s: &Surjection) -> &RationalMatrix {
        &self.maps[s]
    }

    pub fn maps(&self) -> &BTreeMap<Surjection, RationalMatrix> {
        &self.maps
    }

    pub fn to_record(&self) -> EpiFunctorRecord {
        EpiFunctorRecord {
            truncation: self.truncation,
            dims: self.dims.clone(),
            maps: self
                .maps
                .iter()
                .map(|(s, m)| (surjection_key(s), m.to_record()))
                .collect(),
        }
    }
}

/// `"0,0,1"` for the surjection with values `[0, 0, 1]`.
pub fn surjection_key(s: &Surjection) -> String {
    s.values()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_surjection_key(key: &str) -> Result<Surjection> {
    let values = key
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::MalformedInput(format!("surjection key \"{key}\": {e}")))?;
    let m = *values
        .last()
        .ok_or_else(|| Error::MalformedInput("empty surjection key".into()))?;
    Surjection::new(values.len() - 1, m, values)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpiFunctorRecord {
    #[serde(rename = "N")]
    pub truncation: usize,
    pub dims: Vec<usize>,
    pub maps: BTreeMap<String, MatrixRecord>,
}

impl EpiFunctorRecord {
    pub fn to_functor(&self) -> Result<EpiFunctor> {
        let mut maps = BTreeMap::new();
        for (k, m) in &self.maps {
            maps.insert(parse_surjection_key(k)?, m.to_matrix()?);
        }
        EpiFunctor::new(self.truncation, self.dims.clone(), maps)
    }
}

impl Serialize for EpiFunctor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for EpiFunctor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        EpiFunctorRecord::deserialize(d)?
            .to_functor()
            .map_err(serde::de::Error::custom)
    }
}

/// Face-map presentation of `A`; needs truncation at least 1.
pub fn from_epi_functor(a: &EpiFunctor) -> Result<SemisimplicialModule> {
    if a.truncation == 0 {
        return Err(Error::TruncationTooSmall(0));
    }
    a.check_laws()?;
    let top = a.truncation - 1;
    let dims = a.dims[1..].to_vec();
    let faces = (1..=top)
        .map(|n| {
            (0..=n)
                .map(|i| a.map(&Surjection::codegeneracy(n, i)).clone())
                .collect()
        })
        .collect();
    let aug = a.map(&Surjection::codegeneracy(0, 0)).clone();
    SemisimplicialModule::augmented(dims, faces, a.dims[0], aug)
}

pub fn to_epi_functor(x: &SemisimplicialModule) -> Result<EpiFunctor> {
    let mut dims = vec![x.augmentation_dim];
    dims.extend(&x.dims);
    // A(s^i: [k+1] ↠ [k]) is d_i on X_k, or the augmentation when k = 0
    EpiFunctor::from_codegeneracies(x.top() + 1, dims, |k, i| {
        if k == 0 {
            x.augmentation.clone()
        } else {
            x.face(k, i).clone()
        }
    })
}

/// A natural transformation between functors on surjections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpiMap {
    source: EpiFunctor,
    target: EpiFunctor,
    components: Vec<RationalMatrix>,
}

impl EpiMap {
    pub fn new(
        source: EpiFunctor,
        target: EpiFunctor,
        components: Vec<RationalMatrix>,
    ) -> Result<Self> {
        if source.truncation != target.truncation || components.len() != source.truncation + 1 {
            return Err(Error::DimensionMismatch(
                "map between functors of different truncation".into(),
            ));
        }
        for (n, f) in components.iter().enumerate() {
            if f.rows() != target.dims[n] || f.cols() != source.dims[n] {
                return Err(Error::DimensionMismatch(format!("component {n}")));
            }
        }
        for (s, a) in &source.maps {
            let lhs = target.map(s).mul(&components[s.source()])?;
            let rhs = components[s.target()].mul(a)?;
            if lhs != rhs {
                return Err(Error::NotNatural(format!("square at {:?}", s.values())));
            }
        }
        Ok(EpiMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(a: &EpiFunctor) -> Self {
        let components = a
            .dims
            .iter()
            .map(|&d| RationalMatrix::identity(d))
            .collect();
        EpiMap {
            source: a.clone(),
            target: a.clone(),
            components,
        }
    }

    pub fn source(&self) -> &EpiFunctor {
        &self.source
    }

    pub fn target(&self) -> &EpiFunctor {
        &self.target
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    pub fn to_ssm_map(&self) -> Result<SsmMap> {
        SsmMap::augmented(
            from_epi_functor(&self.source)?,
            from_epi_functor(&self.target)?,
            self.components[1..].to_vec(),
            self.components[0].clone(),
        )
    }

    pub fn is_weak_equivalence(&self) -> Result<bool> {
        is_weak_equivalence(&self.to_ssm_map()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsmMapRecord {
    pub source: SsmRecord,
    pub target: SsmRecord,
    pub components: Vec<MatrixRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub augmentation: Option<MatrixRecord>,
}

impl SsmMapRecord {
    pub fn to_map(&self) -> Result<SsmMap> {
        let source = self.source.to_module()?;
        let target = self.target.to_module()?;
        let components = self
            .components
            .iter()
            .map(|m| m.to_matrix())
            .collect::<Result<Vec<_>>>()?;
        match &self.augmentation {
            Some(a) => SsmMap::augmented(source, target, components, a.to_matrix()?),
            None => SsmMap::new(source, target, components),
        }
    }
}

impl SsmMap {
    pub fn to_record(&self) -> SsmMapRecord {
        SsmMapRecord {
            source: self.source.to_record(),
            target: self.target.to_record(),
            components: self.components.iter().map(|m| m.to_record()).collect(),
            augmentation: (self.augmentation.rows() > 0 || self.augmentation.cols() > 0)
                .then(|| self.augmentation.to_record()),
        }
    }
}

/// Smallest map found with every level surjective but `N(f)` not
/// degreewise surjective. Searches top degree 1, dimensions at most 1 and
/// entries in `{-1, 0, 1}`.
pub fn find_surjective_non_fibration() -> Option<SsmMap> {
    let entries = [-1i64, 0, 1];
    let matrices = |rows: usize, cols: usize| -> Vec<RationalMatrix> {
        let len = rows * cols;
        let mut out = Vec::new();
        for code in 0..3usize.pow(len as u32) {
            let mut c = code;
            let vals: Vec<i64> = (0..len)
                .map(|_| {
                    let v = entries[c % 3];
                    c /= 3;
                    v
                })
                .collect();
            let rows_ref: Vec<&[i64]> = vals.chunks(cols.max(1)).take(rows).collect();
            out.push(if len == 0 {
                RationalMatrix::zeros(rows, cols)
            } else {
                RationalMatrix::from_i64(cols, &rows_ref)
            });
        }
        out
    };
    let modules = |d0: usize, d1: usize| -> Vec<SemisimplicialModule> {
        let mut out = Vec::new();
        for a in matrices(d0, d1) {
            for b in matrices(d0, d1) {
                out.push(
                    SemisimplicialModule::new(vec![d0, d1], vec![vec![a.clone(), b]])
                        .expect("top degree 1"),
                );
            }
        }
        out
    };
    for dx0 in 0..=1 {
        for dx1 in 0..=1 {
            for dy0 in 0..=1 {
                for dy1 in 0..=1 {
                    for x in modules(dx0, dx1) {
                        for y in modules(dy0, dy1) {
                            for f0 in matrices(dy0, dx0) {
                                for f1 in matrices(dy1, dx1) {
                                    let Ok(f) =
                                        SsmMap::new(x.clone(), y.clone(), vec![f0.clone(), f1])
                                    else {
                                        continue;
                                    };
                                    if f.is_levelwise_surjective()
                                        && !is_fibration(&f).expect("natural")
                                    {
                                        return Some(f);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_i64(cols, rows)
    }

    #[test]
    fn top_degree_one_is_always_valid() {
        let x = validate_ssm(vec![1, 2], vec![vec![m(2, &[&[1, 0]]), m(2, &[&[3, -1]])]]);
        assert!(x.is_ok());
    }

    #[test]
    fn identity_violation_is_reported() {
        // X_0 = X_1 = X_2 = Q, faces on X_1 equal, faces on X_2 chosen so d_0 d_1 != d_0 d_0
        let one = m(1, &[&[1]]);
        let two = m(1, &[&[2]]);
        let bad = validate_ssm(
            vec![1, 1, 1],
            vec![
                vec![one.clone(), two.clone()],
                vec![one.clone(), two, one.clone()],
            ],
        );
        assert!(matches!(
            bad,
            Err(Error::SimplicialIdentityViolation { n: 2, .. })
        ));
        let good = validate_ssm(
            vec![1, 1, 1],
            vec![
                vec![one.clone(), one.clone()],
                vec![one.clone(), one.clone(), one],
            ],
        );
        assert!(good.is_ok());
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            validate_ssm(vec![1, 1], vec![]),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            validate_ssm(vec![1, 1], vec![vec![m(1, &[&[1]])]]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn normalize_small_example() {
        let x = validate_ssm(vec![1, 2], vec![vec![m(2, &[&[1, 0]]), m(2, &[&[0, 1]])]]).unwrap();
        let bases = normalized_bases(&x);
        assert_eq!(bases[1], m(1, &[&[0], &[1]]));
        let c = normalize(&x).unwrap();
        assert_eq!(c.dims(), &[1, 1]);
        assert_eq!(c.differential(1), m(1, &[&[-1]]));
        assert_eq!(c.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn zero_faces_normalize_to_zero_differentials() {
        let x = validate_ssm(
            vec![2, 1],
            vec![vec![
                RationalMatrix::zeros(2, 1),
                RationalMatrix::zeros(2, 1),
            ]],
        )
        .unwrap();
        assert_eq!(
            normalize(&x).unwrap(),
            ChainComplex::zero_differentials(vec![2, 1])
        );
    }

    #[test]
    fn gamma_signs() {
        let c = ChainComplex::new(vec![1, 1], vec![m(1, &[&[1]])]).unwrap();
        let g = gamma(&c);
        assert_eq!(g.face(1, 1), &m(1, &[&[-1]]));
        assert!(g.face(1, 0).is_zero());
        assert_eq!(normalize(&g).unwrap(), c);
        let z = ChainComplex::zero_differentials(vec![0, 0, 0]);
        assert_eq!(normalize(&gamma(&z)).unwrap(), z);
    }

    #[test]
    fn maps_and_equivalences() {
        let c = ChainComplex::new(vec![1, 1], vec![m(1, &[&[1]])]).unwrap();
        let x = gamma(&c);
        let id = SsmMap::identity(&x);
        assert!(is_weak_equivalence(&id).unwrap());
        assert!(is_fibration(&id).unwrap());
        let h = gamma(&ChainComplex::zero_differentials(vec![1, 0]));
        let zero = SsmMap::new(
            h.clone(),
            h,
            vec![RationalMatrix::zeros(1, 1), RationalMatrix::zeros(0, 0)],
        )
        .unwrap();
        assert!(!is_weak_equivalence(&zero).unwrap());
        let bad = SsmMap::new(x.clone(), x, vec![m(1, &[&[1]]), m(1, &[&[2]])]);
        assert!(matches!(bad, Err(Error::NotNatural(_))));
    }

    #[test]
    fn constant_functor_translation() {
        let a = EpiFunctor::constant(3, 1);
        let x = from_epi_functor(&a).unwrap();
        for n in 1..=x.top() {
            for i in 0..=n {
                assert_eq!(x.face(n, i), &m(1, &[&[1]]));
            }
        }
        assert_eq!(to_epi_functor(&x).unwrap(), a);
    }

    #[test]
    fn law_violation_is_rejected() {
        let mut maps = EpiFunctor::constant(2, 1).maps().clone();
        let s = Surjection::new(2, 0, vec![0, 0, 0]).unwrap();
        maps.insert(s, m(1, &[&[2]]));
        assert!(matches!(
            EpiFunctor::new(2, vec![1; 3], maps),
            Err(Error::FunctorLawViolation(_))
        ));
        assert!(matches!(
            from_epi_functor(&EpiFunctor::constant(0, 1)),
            Err(Error::TruncationTooSmall(0))
        ));
    }

    #[test]
    fn augmentation_is_checked() {
        let x = SemisimplicialModule::augmented(
            vec![1, 1],
            vec![vec![m(1, &[&[1]]), m(1, &[&[2]])]],
            1,
            m(1, &[&[1]]),
        );
        assert_eq!(x, Err(Error::AugmentationViolation));
    }

    #[test]
    fn records_round_trip() {
        let x = SemisimplicialModule::augmented(
            vec![1, 2],
            vec![vec![m(2, &[&[1, 0]]), m(2, &[&[0, 1]])]],
            0,
            RationalMatrix::zeros(0, 1),
        )
        .unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with(r#"{"N":1,"dims":[1,2],"faces":{"1,0""#));
        assert_eq!(
            serde_json::from_str::<SemisimplicialModule>(&json).unwrap(),
            x
        );
        let a = EpiFunctor::constant(2, 2);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<EpiFunctor>(&json).unwrap(), a);
        assert_eq!(parse_surjection_key("0,0,1").unwrap().values(), &[0, 0, 1]);
        assert!(parse_surjection_key("0,2").is_err());
    }

    #[test]
    fn surjectivity_failure_exists() {
        let f = find_surjective_non_fibration().expect("a witness in the searched range");
        assert!(f.is_levelwise_surjective());
        assert!(!is_fibration(&f).unwrap());
        let n = normalize_map(&f).unwrap();
        assert!(n.components().iter().any(|c| !c.is_surjective()));
    }
}
