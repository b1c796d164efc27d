//! Grafting and reducing two morphisms. Cocones out of the pair factor
//! through the graft.

use ordfor::forest::OrderedForest;
use ordfor::morphism::{
    boundary_cocones, explore_reductions, factor_cocone, raw_graft, reduce, ForestMorphism,
};

fn main() -> ordfor::Result<()> {
    // f: [1] -> [1], two parallel edges; g: [0] -> [1], a cherry.
    let f = ForestMorphism::from_forest(OrderedForest::new(4, [(0, 1), (2, 3)])?)?;
    let g = ForestMorphism::from_forest(OrderedForest::new(3, [(0, 2), (1, 2)])?)?;
    println!(
        "f: [{}] -> [{}], g: [{}] -> [{}]",
        f.dom(),
        f.cod(),
        g.dom(),
        g.cod()
    );

    let graft = raw_graft(&f, &g)?;
    println!("raw graft covers {:?}", graft.h.covers());
    println!("f sits at {:?}, g sits at {:?}", graft.j_f, graft.j_g);

    let outcome = explore_reductions(&graft.h)?;
    println!(
        "normal forms over all contraction orders: {}, longest sequence {}",
        outcome.normal_forms.len(),
        outcome.longest
    );
    let reduced = reduce(&graft.h)?;
    println!("reduced covers {:?}", reduced.covers());

    // Every boundary-compatible pair of maps into Q factors through the graft.
    let q = OrderedForest::chain(3);
    let cocones = boundary_cocones(&f, &g, &q);
    println!("{} cocones into a chain of length 3", cocones.len());
    for (fm, gm) in cocones.iter().take(3) {
        let u = factor_cocone(&graft, fm, gm, &q)?;
        println!("  f->{fm:?} g->{gm:?} factors as {u:?}");
    }
    Ok(())
}
