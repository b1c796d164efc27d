//! Hom-sets and composition in the category of reduced forests.

use ordfor::category::{
    cached_fragment, check_axioms, compose, enumerate_hom, identity, size_bound,
};

fn main() -> ordfor::Result<()> {
    println!("|Hom([m],[n])| for m, n <= 3:");
    for m in 0..=3 {
        let row: Vec<String> = (0..=3)
            .map(|n| format!("{:>3}", enumerate_hom(m, n).len()))
            .collect();
        println!("  [{m}] {}", row.join(" "));
    }

    let hom = enumerate_hom(0, 1);
    println!("Hom([0],[1]), size bound {}:", size_bound(0, 1));
    for f in &hom.morphisms {
        println!("  {:?}", f.forest().covers());
    }

    let f = &hom.morphisms[hom.len() - 1];
    let id = identity(1);
    assert_eq!(&compose(&id, f)?, f);
    assert_eq!(&compose(f, &identity(0))?, f);

    let endo = enumerate_hom(0, 0);
    let edge = &endo.morphisms[1];
    println!("edge ∘ edge = {:?}", compose(edge, edge)?.forest().covers());

    let frag = cached_fragment(2);
    println!(
        "objects <= [2]: {} morphisms, {} composable pairs",
        frag.morphisms().count(),
        frag.composable_pairs().len()
    );
    let report = check_axioms(3, 2);
    println!("axioms hold: {}", report.passed());
    Ok(())
}
