//! The shadow of a morphism is an order-preserving surjection. Surjections
//! are dual to injections.

use ordfor::category::{compose, enumerate_hom};
use ordfor::shadow::{
    check_pi_functor, compose_surjections, duality, enumerate_surjections, forest_of, from_cuts,
    sigma_of, Surjection,
};

fn main() -> ordfor::Result<()> {
    let s = Surjection::new(4, 2, vec![0, 0, 1, 2, 2])?;
    println!("σ = {:?}", s.values());
    for i in 0..=s.target() {
        println!("  fiber over {i}: {:?}", s.fiber(i));
    }
    let steps: Vec<Vec<usize>> = s
        .codegeneracy_factorization()
        .iter()
        .map(|c| c.values().to_vec())
        .collect();
    println!("as codegeneracies, applied in order: {steps:?}");

    let f = forest_of(&s);
    println!("its corolla forest: {:?}", f.forest().covers());
    assert_eq!(sigma_of(&f), s);

    let cuts = duality(&s);
    println!(
        "dual injection into [{}]: {:?}",
        cuts.target(),
        cuts.values()
    );
    assert_eq!(from_cuts(&cuts), s);

    for n in 0..=4 {
        let counts: Vec<usize> = (0..=n).map(|m| enumerate_surjections(n, m).len()).collect();
        println!("surjections out of [{n}]: {counts:?}");
    }

    let fs = enumerate_hom(2, 3);
    let gs = enumerate_hom(1, 2);
    let (f, g) = (&fs.morphisms[5], &gs.morphisms[2]);
    println!(
        "σ_f = {:?}, σ_g = {:?}",
        sigma_of(f).values(),
        sigma_of(g).values()
    );
    let lhs = compose_surjections(&sigma_of(f), &sigma_of(g))?;
    let rhs = sigma_of(&compose(f, g)?);
    println!(
        "σ_g ∘ σ_f = {:?}, σ of f∘g = {:?}",
        lhs.values(),
        rhs.values()
    );

    let report = check_pi_functor(2);
    println!(
        "functoriality checks {}, passed {}, |Hom([0],[0])| = {} over {} surjection",
        report.functoriality_checks,
        report.passed(),
        report.faithfulness_witness.0,
        report.faithfulness_witness.1
    );
    Ok(())
}
