//! Normalized chains and the inverse construction `Γ`. Functors on
//! surjections appear as augmented modules.

use ordfor::normalization::{
    find_surjective_non_fibration, from_epi_functor, gamma, is_fibration, is_weak_equivalence,
    normalize, normalized_bases, to_epi_functor, EpiFunctor,
};
use ordfor::random::{random_complex, random_epi_functor, random_natural_map_mixed, seeded};
use ordfor::shadow::Surjection;

fn main() -> ordfor::Result<()> {
    let mut rng = seeded(7);

    let c = random_complex(&mut rng, 3, 3);
    println!(
        "random complex, dims {:?}, homology {:?}",
        c.dims(),
        c.homology_dims()
    );
    let x = gamma(&c);
    println!("Γ of it has levels {:?}", x.dims());
    let back = normalize(&x)?;
    assert_eq!(back, c);
    println!("normalizing Γ recovers the complex exactly");

    let a = random_epi_functor(&mut rng, 2, 2);
    println!("functor on surjections with dims {:?}", a.dims());
    let s = Surjection::codegeneracy(1, 0);
    println!("A(s^0: [2] ↠ [1]) = {:?}", a.map(&s));
    let m = from_epi_functor(&a)?;
    println!(
        "as an augmented module: levels {:?}, augmentation dim {}",
        m.dims(),
        m.augmentation_dim()
    );
    for (n, basis) in normalized_bases(&m).iter().enumerate() {
        println!("  normalized basis in degree {n}: {} vectors", basis.cols());
    }
    assert_eq!(to_epi_functor(&m)?, a);

    let constant = EpiFunctor::constant(2, 2);
    println!("constant functor dims {:?}", constant.dims());

    for _ in 0..4 {
        let u = random_natural_map_mixed(&mut rng, 2, 3);
        let f = u.to_ssm_map()?;
        println!(
            "map {:?} -> {:?}: weak equivalence {}, fibration {}",
            u.source().dims(),
            u.target().dims(),
            is_weak_equivalence(&f)?,
            is_fibration(&f)?
        );
    }

    if let Some(f) = find_surjective_non_fibration() {
        println!(
            "levelwise surjective but not a fibration: {}",
            serde_json::to_string(&f.to_record()).expect("records serialize")
        );
    }
    Ok(())
}
