//! Exact rational linear algebra.
//!
//! Matrices act on column vectors: an `r × c` matrix is a map `Q^c -> Q^r`.
//! Subspaces are passed around as matrices whose columns span them.
//! Elimination is fraction-free (Bareiss) on integer-scaled rows; rationals
//! only reappear when the echelon form is normalized.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            write!(f, " [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

fn mismatch(op: &str, a: &RationalMatrix, b: &RationalMatrix) -> Error {
    Error::DimensionMismatch(format!(
        "{op}: {}x{} against {}x{}",
        a.rows, a.cols, b.rows, b.cols
    ))
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    /// Integer matrix from rows; all rows must have equal length.
    pub fn from_i64(cols: usize, rows: &[&[i64]]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row {i}");
            for (j, &v) in r.iter().enumerate() {
                m[(i, j)] = q(v);
            }
        }
        m
    }

    /// A matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(mismatch("product", self, other));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(mismatch("sum", self, other));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&q(-1))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(mismatch("hstack", self, other));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(mismatch("vstack", self, other));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal sum of the given matrices.
    pub fn block_diag(blocks: &[RationalMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &RationalMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn rows_range(&self, start: usize, len: usize) -> Self {
        let data = self.data[start * self.cols..(start + len) * self.cols].to_vec();
        RationalMatrix {
            rows: len,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Row echelon form by fraction-free elimination. Rows are first scaled to
    /// integers; returns the integer echelon rows and the pivot columns.
    pub fn fraction_free_echelon(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    let (quo, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                    a[i][j] = quo;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.fraction_free_echelon().1.len()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let (ech, pivots) = self.fraction_free_echelon();
        let mut m = Self::zeros(self.rows, self.cols);
        for (i, row) in ech.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = Rational::from_integer(v.clone());
            }
        }
        for (r, &c) in pivots.iter().enumerate() {
            let inv = m[(r, c)].recip();
            for j in 0..self.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..r {
                let factor = m[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..self.cols {
                    let v = &m[(i, j)] - &factor * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
        }
        (m, pivots)
    }

    /// Columns form a basis of the null space.
    pub fn kernel(&self) -> RationalMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -r[(i, f)].clone();
            }
        }
        out
    }

    /// Columns form a basis of the column space (pivot columns of `self`).
    pub fn image(&self) -> RationalMatrix {
        let (_, pivots) = self.fraction_free_echelon();
        self.select_columns(&pivots)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    /// Some `X` with `self · X = rhs`, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &RationalMatrix) -> Result<Option<RationalMatrix>> {
        let aug = self.hstack(rhs)?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(i, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if !self.is_isomorphism() {
            return None;
        }
        self.solve(&Self::identity(self.rows)).ok().flatten()
    }

    pub fn to_record(&self) -> MatrixRecord {
        MatrixRecord {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
                .collect(),
        }
    }
}

/// Basis of `span(u) ∩ span(v)`, where both are given by spanning columns.
pub fn intersect(u: &RationalMatrix, v: &RationalMatrix) -> Result<RationalMatrix> {
    let stacked = u.hstack(&v.neg())?;
    let k = stacked.kernel();
    let coeffs = k.rows_range(0, u.cols());
    Ok(u.mul(&coeffs)?.image())
}

/// JSON form of a matrix; entries are strings `"p/q"` or `"p"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixRecord {
    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::MalformedInput(format!(
                "matrix entries do not match {}x{}",
                self.rows, self.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                let v = Rational::from_str(s.trim()).map_err(|_| {
                    Error::MalformedInput(format!("entry ({i},{j}) = {s:?} is not a rational"))
                })?;
                data.push(v);
            }
        }
        RationalMatrix::from_entries(self.rows, self.cols, data)
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        MatrixRecord::deserialize(d)?
            .to_matrix()
            .map_err(serde::de::Error::custom)
    }
}

/// A bounded chain complex `C_N -> ... -> C_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    // differentials[k] is ∂_{k+1}: C_{k+1} -> C_k
    differentials: Vec<RationalMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, differentials: Vec<RationalMatrix>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::DimensionMismatch(
                "a complex needs at least degree 0".into(),
            ));
        }
        if differentials.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} differentials for top degree {}",
                differentials.len(),
                dims.len() - 1
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.rows() != dims[k] || d.cols() != dims[k + 1] {
                return Err(Error::DimensionMismatch(format!(
                    "∂_{} is {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    dims[k],
                    dims[k + 1]
                )));
            }
        }
        for k in 1..differentials.len() {
            if !differentials[k - 1].mul(&differentials[k])?.is_zero() {
                return Err(Error::NotAComplex { degree: k });
            }
        }
        Ok(ChainComplex {
            dims,
            differentials,
        })
    }

    /// The complex with the given dimensions and all differentials zero.
    pub fn zero_differentials(dims: Vec<usize>) -> Self {
        let differentials = (1..dims.len())
            .map(|n| RationalMatrix::zeros(dims[n - 1], dims[n]))
            .collect();
        ChainComplex {
            dims,
            differentials,
        }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn differentials(&self) -> &[RationalMatrix] {
        &self.differentials
    }

    /// `∂_n: C_n -> C_{n-1}`, the zero map outside `1..=N`.
    pub fn differential(&self, n: usize) -> RationalMatrix {
        if n >= 1 && n <= self.top() {
            self.differentials[n - 1].clone()
        } else {
            RationalMatrix::zeros(if n == 0 { 0 } else { self.dim(n - 1) }, self.dim(n))
        }
    }

    pub fn homology_dims(&self) -> Vec<usize> {
        (0..=self.top())
            .map(|n| {
                let cycles = self.dims[n] - self.differential(n).rank();
                cycles - self.differential(n + 1).rank()
            })
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().iter().all(|&h| h == 0)
    }

    pub fn to_record(&self) -> ComplexRecord {
        ComplexRecord {
            dims: self.dims.clone(),
            differentials: self.differentials.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexRecord {
    pub dims: Vec<usize>,
    pub differentials: Vec<RationalMatrix>,
}

impl ComplexRecord {
    pub fn to_complex(&self) -> Result<ChainComplex> {
        ChainComplex::new(self.dims.clone(), self.differentials.clone())
    }
}

/// A degreewise map of complexes with the same top degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    components: Vec<RationalMatrix>,
}

impl ChainMap {
    pub fn new(
        source: ChainComplex,
        target: ChainComplex,
        components: Vec<RationalMatrix>,
    ) -> Result<Self> {
        if source.top() != target.top() || components.len() != source.top() + 1 {
            return Err(Error::DimensionMismatch(
                "chain map degrees do not line up".into(),
            ));
        }
        for (n, f) in components.iter().enumerate() {
            if f.rows() != target.dim(n) || f.cols() != source.dim(n) {
                return Err(Error::DimensionMismatch(format!(
                    "component {n} has the wrong shape"
                )));
            }
        }
        for n in 1..=source.top() {
            let left = target.differential(n).mul(&components[n])?;
            let right = components[n - 1].mul(&source.differential(n))?;
            if left != right {
                return Err(Error::NotChainMap { degree: n });
            }
        }
        Ok(ChainMap {
            source,
            target,
            components,
        })
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let components = c
            .dims
            .iter()
            .map(|&d| RationalMatrix::identity(d))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            components,
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn components(&self) -> &[RationalMatrix] {
        &self.components
    }

    fn component(&self, n: usize) -> RationalMatrix {
        self.components
            .get(n)
            .cloned()
            .unwrap_or_else(|| RationalMatrix::zeros(self.target.dim(n), self.source.dim(n)))
    }

    /// `cone_n = D_n ⊕ C_{n-1}` with `∂(y, x) = (∂y + f x, -∂x)`, degrees `0..=N+1`.
    pub fn mapping_cone(&self) -> ChainComplex {
        let (c, d) = (&self.source, &self.target);
        let top = c.top() + 1;
        let dims: Vec<usize> = (0..=top)
            .map(|n| d.dim(n) + if n == 0 { 0 } else { c.dim(n - 1) })
            .collect();
        let mut differentials = Vec::with_capacity(top);
        for n in 1..=top {
            let mut m = RationalMatrix::zeros(dims[n - 1], dims[n]);
            m.set_block(0, 0, &d.differential(n));
            m.set_block(0, d.dim(n), &self.component(n - 1));
            if n >= 2 {
                m.set_block(d.dim(n - 1), d.dim(n), &c.differential(n - 1).neg());
            }
            differentials.push(m);
        }
        ChainComplex::new(dims, differentials).expect("cones of chain maps are complexes")
    }

    /// Quasi-isomorphism test through acyclicity of the mapping cone.
    pub fn is_quasi_iso(&self) -> bool {
        self.mapping_cone().is_acyclic()
    }

    /// Whether each induced map `H_n(C) -> H_n(D)` is an isomorphism,
    /// computed on explicit homology representatives.
    pub fn induced_homology_isos(&self) -> Vec<bool> {
        let (c, d) = (&self.source, &self.target);
        (0..=c.top())
            .map(|n| {
                let cycles = c.differential(n).kernel();
                let boundaries_c = c.differential(n + 1).image();
                let boundaries_d = d.differential(n + 1).image();
                let h_c = cycles.cols() - boundaries_c.cols();
                let h_d = d.differential(n).kernel().cols() - boundaries_d.cols();
                if h_c != h_d {
                    return false;
                }
                // representatives: cycles extending a basis of the boundaries
                let reps = boundaries_c.hstack(&cycles).expect("same ambient").image();
                let reps =
                    reps.select_columns(&(boundaries_c.cols()..reps.cols()).collect::<Vec<_>>());
                let pushed = self.components[n].mul(&reps).expect("shapes agree");
                boundaries_d.hstack(&pushed).expect("same ambient").rank()
                    == boundaries_d.cols() + h_c
            })
            .collect()
    }
}

/// One homogeneous block equation `Σ M_k x_{b_k} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub rows: usize,
    pub terms: Vec<(usize, RationalMatrix)>,
}

/// A finite homogeneous linear system over a product of blocks; its
/// solution space is the limit of a finite diagram of vector spaces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearConstraintSystem {
    pub blocks: Vec<usize>,
    pub equations: Vec<Equation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSolution {
    /// Columns span the solution space inside the product of the blocks.
    pub basis: RationalMatrix,
    /// Per block, the projection from solution coordinates.
    pub projections: Vec<RationalMatrix>,
    pub offsets: Vec<usize>,
}

impl LimitSolution {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

impl LinearConstraintSystem {
    pub fn new(blocks: Vec<usize>) -> Self {
        LinearConstraintSystem {
            blocks,
            equations: Vec::new(),
        }
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = acc;
                acc += b;
                o
            })
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn push(&mut self, equation: Equation) -> Result<()> {
        for (b, m) in &equation.terms {
            let width = *self
                .blocks
                .get(*b)
                .ok_or_else(|| Error::IndexMismatch(format!("no variable block {b}")))?;
            if m.rows() != equation.rows || m.cols() != width {
                return Err(Error::DimensionMismatch(format!(
                    "term on block {b} has the wrong shape"
                )));
            }
        }
        self.equations.push(equation);
        Ok(())
    }

    pub fn matrix(&self) -> RationalMatrix {
        let offsets = self.offsets();
        let rows = self.equations.iter().map(|e| e.rows).sum();
        let mut m = RationalMatrix::zeros(rows, self.total_dim());
        let mut r0 = 0;
        for e in &self.equations {
            for (b, t) in &e.terms {
                for i in 0..t.rows() {
                    for j in 0..t.cols() {
                        let v = &m[(r0 + i, offsets[*b] + j)] + &t[(i, j)];
                        m[(r0 + i, offsets[*b] + j)] = v;
                    }
                }
            }
            r0 += e.rows;
        }
        m
    }
}

pub fn solve_limit(sys: &LinearConstraintSystem) -> LimitSolution {
    let offsets = sys.offsets();
    let basis = sys.matrix().kernel();
    let projections = sys
        .blocks
        .iter()
        .zip(&offsets)
        .map(|(&len, &o)| basis.rows_range(o, len))
        .collect();
    LimitSolution {
        basis,
        projections,
        offsets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_row() {
        let k = RationalMatrix::from_i64(2, &[&[1, 1]]).kernel();
        assert_eq!(k, RationalMatrix::from_i64(1, &[&[-1], &[1]]));
        assert!(RationalMatrix::from_i64(2, &[&[1, 1]])
            .mul(&k)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn intersection_of_axes_is_zero() {
        let u = RationalMatrix::from_i64(1, &[&[1], &[0]]);
        let v = RationalMatrix::from_i64(1, &[&[0], &[1]]);
        assert_eq!(intersect(&u, &v).unwrap().cols(), 0);
        let w = RationalMatrix::from_i64(2, &[&[1, 1], &[0, 1]]);
        assert_eq!(intersect(&u, &w).unwrap().cols(), 1);
    }

    #[test]
    fn rank_and_rref_with_fractions() {
        let m = RationalMatrix::from_entries(
            2,
            3,
            vec![ratio(1, 2), ratio(1, 3), q(1), q(3), q(2), q(6)],
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0]);
        assert_eq!(r[(0, 1)], ratio(2, 3));
    }

    #[test]
    fn solve_and_inverse() {
        let a = RationalMatrix::from_i64(2, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), RationalMatrix::identity(2));
        let singular = RationalMatrix::from_i64(2, &[&[1, 1], &[1, 1]]);
        assert!(singular.inverse().is_none());
        let b = RationalMatrix::from_i64(1, &[&[1], &[0]]);
        assert!(singular.solve(&b).unwrap().is_none());
    }

    #[test]
    fn empty_shapes() {
        let z = RationalMatrix::zeros(0, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel(), RationalMatrix::identity(3));
        let w = RationalMatrix::zeros(3, 0);
        assert_eq!(w.kernel().cols(), 0);
        assert!(RationalMatrix::zeros(0, 0).is_isomorphism());
        assert!(RationalMatrix::zeros(2, 3)
            .mul(&RationalMatrix::zeros(2, 1))
            .is_err());
    }

    #[test]
    fn homology_examples() {
        let id = ChainComplex::new(vec![1, 1], vec![RationalMatrix::identity(1)]).unwrap();
        assert_eq!(id.homology_dims(), vec![0, 0]);
        assert_eq!(
            ChainComplex::zero_differentials(vec![2, 3]).homology_dims(),
            vec![2, 3]
        );
        let bad = ChainComplex::new(
            vec![1, 1, 1],
            vec![RationalMatrix::identity(1), RationalMatrix::identity(1)],
        );
        assert_eq!(bad, Err(Error::NotAComplex { degree: 1 }));
    }

    #[test]
    fn cones() {
        let c =
            ChainComplex::new(vec![1, 2], vec![RationalMatrix::from_i64(2, &[&[1, 0]])]).unwrap();
        let id = ChainMap::identity(&c);
        assert!(id.mapping_cone().is_acyclic());
        assert!(id.is_quasi_iso());
        assert_eq!(id.induced_homology_isos(), vec![true, true]);

        let zero_target = ChainComplex::zero_differentials(vec![0, 0]);
        let to_zero = ChainMap::new(
            c.clone(),
            zero_target,
            vec![RationalMatrix::zeros(0, 1), RationalMatrix::zeros(0, 2)],
        )
        .unwrap();
        let h = c.homology_dims();
        assert_eq!(h, vec![0, 1]);
        // H_n(cone(C -> 0)) = H_{n-1}(C)
        assert_eq!(to_zero.mapping_cone().homology_dims(), vec![0, 0, 1]);
        assert!(!to_zero.is_quasi_iso());
    }

    #[test]
    fn not_a_chain_map() {
        let c = ChainComplex::new(vec![1, 1], vec![RationalMatrix::identity(1)]).unwrap();
        let r = ChainMap::new(
            c.clone(),
            c,
            vec![RationalMatrix::identity(1), RationalMatrix::zeros(1, 1)],
        );
        assert_eq!(r, Err(Error::NotChainMap { degree: 1 }));
    }

    #[test]
    fn limits() {
        let free = solve_limit(&LinearConstraintSystem::new(vec![2, 3]));
        assert_eq!(free.dim(), 5);

        // equalizer of f = g: x in block 0, y in block 1, f x = y and g x = y
        let f = RationalMatrix::from_i64(2, &[&[1, 2]]);
        let mut eq = LinearConstraintSystem::new(vec![2, 1]);
        for m in [&f, &f] {
            eq.push(Equation {
                rows: 1,
                terms: vec![(0, m.clone()), (1, q(-1).into_matrix())],
            })
            .unwrap();
        }
        assert_eq!(solve_limit(&eq).dim(), 2);

        // pullback of Q -> Q <- Q along identities
        let mut pb = LinearConstraintSystem::new(vec![1, 1, 1]);
        let id = RationalMatrix::identity(1);
        pb.push(Equation {
            rows: 1,
            terms: vec![(0, id.clone()), (2, id.neg())],
        })
        .unwrap();
        pb.push(Equation {
            rows: 1,
            terms: vec![(1, id.clone()), (2, id.neg())],
        })
        .unwrap();
        let sol = solve_limit(&pb);
        assert_eq!(sol.dim(), 1);
        assert_eq!(sol.projections[0], sol.projections[2]);
    }

    trait IntoMatrix {
        fn into_matrix(self) -> RationalMatrix;
    }

    impl IntoMatrix for Rational {
        fn into_matrix(self) -> RationalMatrix {
            RationalMatrix::from_entries(1, 1, vec![self]).unwrap()
        }
    }

    #[test]
    fn record_round_trip() {
        let m = RationalMatrix::from_entries(1, 2, vec![ratio(-3, 4), q(5)]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"rows":1,"cols":2,"entries":[["-3/4","5"]]}"#);
        let back: RationalMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let bad: std::result::Result<RationalMatrix, _> =
            serde_json::from_str(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#);
        assert!(bad.is_err());
    }
}
