//! Validating and decomposing ordered forests.

use ordfor::forest::{enumerate_forests, ordinal_sum, OrderedForest};
use ordfor::Error;

fn main() -> ordfor::Result<()> {
    // Two trees: a cherry on 0,1 under 2, and a single edge 3 -> 4.
    let f = OrderedForest::new(5, [(0, 2), (1, 2), (3, 4)])?;
    println!("covers {:?}", f.covers());
    println!(
        "minima {:?} maxima {:?} height {}",
        f.minima(),
        f.maxima(),
        f.height()
    );
    println!("lower set of 2: {:?}", f.lower_set(2)?);

    let d = f.decompose();
    for (c, tree) in d.components.iter().zip(d.trees(&f)) {
        println!(
            "tree rooted at {} spans {}..={}: {:?}",
            c.root,
            c.lo,
            c.hi,
            tree.covers()
        );
    }
    assert!(d.verify(&f).is_empty());
    assert_eq!(ordinal_sum(&d.trees(&f)), f);

    // The diamond has a vertex with two parents.
    match OrderedForest::new(4, [(0, 2), (1, 2), (0, 3), (1, 3)]) {
        Err(e @ Error::IntervalViolation { .. }) => println!("diamond rejected: {e}"),
        other => println!("unexpected: {other:?}"),
    }

    let counts: Vec<usize> = (0..=7).map(|n| enumerate_forests(n).len()).collect();
    println!("forests per size: {counts:?}");
    println!("{}", f.to_dot());
    Ok(())
}
