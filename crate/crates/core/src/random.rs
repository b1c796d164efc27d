//! Seeded random complexes and augmented modules, plus natural maps between
//! functors on surjections.
//!
//! Free choices are matrices with entries in `-2..=2`; constrained data is a
//! random integer combination of an exact solution basis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::linalg::{q, ChainComplex, RationalMatrix};
use crate::normalization::{to_epi_functor, EpiFunctor, EpiMap, SemisimplicialModule};
use crate::shadow::Surjection;

pub type Rng64 = ChaCha8Rng;

pub fn seeded(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut Rng64, rows: usize, cols: usize) -> RationalMatrix {
    let data = (0..rows * cols).map(|_| q(rng.gen_range(-2..=2))).collect();
    RationalMatrix::from_entries(rows, cols, data).expect("shape matches")
}

/// `rows x cols` with every column a random combination of the columns of `basis`.
fn combinations(rng: &mut Rng64, basis: &RationalMatrix, cols: usize) -> RationalMatrix {
    let coeffs = random_matrix(rng, basis.cols(), cols);
    basis.mul(&coeffs).expect("shapes agree")
}

/// A complex with the given dimensions; `∂_{n+1}` lands in `ker ∂_n`.
pub fn random_complex_with_dims(rng: &mut Rng64, dims: &[usize]) -> ChainComplex {
    let mut differentials: Vec<RationalMatrix> = Vec::new();
    for n in 1..dims.len() {
        let d = match differentials.last() {
            None => random_matrix(rng, dims[0], dims[1]),
            Some(prev) => combinations(rng, &prev.kernel(), dims[n]),
        };
        differentials.push(d);
    }
    ChainComplex::new(dims.to_vec(), differentials).expect("each differential lands in a kernel")
}

/// Top degree `top`, each dimension in `0..=max_dim`.
pub fn random_complex(rng: &mut Rng64, top: usize, max_dim: usize) -> ChainComplex {
    let dims: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_dim)).collect();
    random_complex_with_dims(rng, &dims)
}

/// Column-wise solutions `(y_0, ..., y_n)` of the identities a new level of
/// faces must satisfy against the faces `below` (or the augmentation at
/// `n = 1`), stacked as a basis in `X_{n-1}^{n+1}`.
fn face_constraints(below: &[RationalMatrix], n: usize, width: usize) -> RationalMatrix {
    let rows_per = below.first().map_or(0, |d| d.rows());
    let mut system = RationalMatrix::zeros(0, width * (n + 1));
    for j in 1..=n {
        for i in 0..j {
            // d_i y_j - d_{j-1} y_i = 0, with `below` indexed by face number
            let mut row = RationalMatrix::zeros(rows_per, width * (n + 1));
            let di = if n == 1 { &below[0] } else { &below[i] };
            let dj = if n == 1 { &below[0] } else { &below[j - 1] };
            row.set_block(0, j * width, di);
            row.set_block(0, i * width, &dj.neg());
            system = system.vstack(&row).expect("same width");
        }
    }
    system.kernel()
}

/// A random module with the given level dimensions and augmentation.
pub fn random_ssm_with_dims(
    rng: &mut Rng64,
    dims: &[usize],
    augmentation_dim: usize,
) -> SemisimplicialModule {
    let augmentation = random_matrix(rng, augmentation_dim, dims[0]);
    let mut faces: Vec<Vec<RationalMatrix>> = Vec::new();
    for n in 1..dims.len() {
        let width = dims[n - 1];
        let below: Vec<RationalMatrix> = match faces.last() {
            None => vec![augmentation.clone()],
            Some(level) => level.clone(),
        };
        let basis = face_constraints(&below, n, width);
        let stacked = combinations(rng, &basis, dims[n]);
        faces.push(
            (0..=n)
                .map(|i| stacked.rows_range(i * width, width))
                .collect(),
        );
    }
    SemisimplicialModule::augmented(dims.to_vec(), faces, augmentation_dim, augmentation)
        .expect("faces solve the identities")
}

pub fn random_ssm(
    rng: &mut Rng64,
    top: usize,
    max_dim: usize,
    augmented: bool,
) -> SemisimplicialModule {
    let dims: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_dim)).collect();
    let aug = if augmented {
        rng.gen_range(0..=max_dim)
    } else {
        0
    };
    random_ssm_with_dims(rng, &dims, aug)
}

/// A functor on surjections with truncation at least 1.
pub fn random_epi_functor(rng: &mut Rng64, truncation: usize, max_dim: usize) -> EpiFunctor {
    assert!(truncation >= 1, "truncation 0 has no codegeneracies");
    to_epi_functor(&random_ssm(rng, truncation - 1, max_dim, true))
        .expect("identities give a functor")
}

pub fn random_epi_functor_with_dims(rng: &mut Rng64, dims: &[usize]) -> EpiFunctor {
    to_epi_functor(&random_ssm_with_dims(rng, &dims[1..], dims[0]))
        .expect("identities give a functor")
}

/// A basis of natural transformations `A -> B`, each as its list of components.
pub fn natural_maps_basis(a: &EpiFunctor, b: &EpiFunctor) -> Vec<Vec<RationalMatrix>> {
    let t = a.truncation();
    let sizes: Vec<usize> = (0..=t).map(|n| b.dims()[n] * a.dims()[n]).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let mut system = RationalMatrix::zeros(0, total);
    for k in 0..t {
        for i in 0..=k {
            // B(s) U_{k+1} - U_k A(s) = 0 for s = s^i: [k+1] ↠ [k]
            let s = Surjection::codegeneracy(k, i);
            let (am, bm) = (a.map(&s), b.map(&s));
            let rows = bm.rows() * am.cols();
            let mut row = RationalMatrix::zeros(rows, total);
            let left = RationalMatrix::identity(a.dims()[k + 1]).kron(bm);
            let right = am.transpose().kron(&RationalMatrix::identity(b.dims()[k]));
            row.set_block(0, offsets[k + 1], &left);
            row.set_block(0, offsets[k], &right.neg());
            system = system.vstack(&row).expect("same width");
        }
    }
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|c| {
            let v = kernel.column(c);
            (0..=t)
                .map(|n| {
                    let (r, cols) = (b.dims()[n], a.dims()[n]);
                    let mut u = RationalMatrix::zeros(r, cols);
                    for j in 0..cols {
                        for i in 0..r {
                            u[(i, j)] = v[offsets[n] + j * r + i].clone();
                        }
                    }
                    u
                })
                .collect()
        })
        .collect()
}

fn random_combination(rng: &mut Rng64, a: &EpiFunctor, b: &EpiFunctor) -> Vec<RationalMatrix> {
    let mut acc: Vec<RationalMatrix> = (0..=a.truncation())
        .map(|n| RationalMatrix::zeros(b.dims()[n], a.dims()[n]))
        .collect();
    for basis in natural_maps_basis(a, b) {
        let c = q(rng.gen_range(-2..=2));
        for (u, v) in acc.iter_mut().zip(&basis) {
            *u = u.add(&v.scale(&c)).expect("same shape");
        }
    }
    acc
}

pub fn random_natural_map(rng: &mut Rng64, a: &EpiFunctor, b: &EpiFunctor) -> Result<EpiMap> {
    EpiMap::new(a.clone(), b.clone(), random_combination(rng, a, b))
}

/// Alternates between maps into an independent random target and
/// perturbations of the identity, so both outcomes of a weak-equivalence
/// test occur.
pub fn random_natural_map_mixed(rng: &mut Rng64, truncation: usize, max_dim: usize) -> EpiMap {
    let a = random_epi_functor(rng, truncation, max_dim);
    if rng.gen_bool(0.5) {
        let b = random_epi_functor(rng, truncation, max_dim);
        random_natural_map(rng, &a, &b).expect("kernel elements are natural")
    } else {
        let perturbation = random_combination(rng, &a, &a);
        let components = perturbation
            .iter()
            .enumerate()
            .map(|(n, p)| {
                RationalMatrix::identity(a.dims()[n])
                    .add(p)
                    .expect("square")
            })
            .collect();
        EpiMap::new(a.clone(), a, components).expect("kernel elements are natural")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalization::{from_epi_functor, gamma, normalize};

    #[test]
    fn complexes_are_valid_and_deterministic() {
        let mut r1 = seeded(7);
        let mut r2 = seeded(7);
        for _ in 0..20 {
            let c = random_complex(&mut r1, 3, 3);
            assert_eq!(c, random_complex(&mut r2, 3, 3));
            assert_eq!(normalize(&gamma(&c)).unwrap(), c);
        }
    }

    #[test]
    fn modules_satisfy_identities() {
        let mut rng = seeded(11);
        for _ in 0..20 {
            let x = random_ssm(&mut rng, 3, 2, true);
            assert!(SemisimplicialModule::augmented(
                x.dims().to_vec(),
                (1..=x.top())
                    .map(|n| (0..=n).map(|i| x.face(n, i).clone()).collect())
                    .collect(),
                x.augmentation_dim(),
                x.augmentation().clone(),
            )
            .is_ok());
        }
    }

    #[test]
    fn functors_round_trip() {
        let mut rng = seeded(3);
        for _ in 0..10 {
            let a = random_epi_functor(&mut rng, 3, 2);
            assert_eq!(to_epi_functor(&from_epi_functor(&a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn natural_maps_are_natural() {
        let mut rng = seeded(5);
        for _ in 0..10 {
            let a = random_epi_functor(&mut rng, 2, 3);
            let b = random_epi_functor(&mut rng, 2, 3);
            for basis in natural_maps_basis(&a, &b) {
                assert!(EpiMap::new(a.clone(), b.clone(), basis).is_ok());
            }
            let _ = random_natural_map_mixed(&mut rng, 2, 3);
        }
    }

    #[test]
    fn identity_is_in_the_endomorphism_space() {
        let mut rng = seeded(9);
        let a = random_epi_functor(&mut rng, 2, 2);
        let basis = natural_maps_basis(&a, &a);
        assert!(!basis.is_empty() || a.dims().iter().all(|&d| d == 0));
    }
}
