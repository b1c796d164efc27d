//! Presheaves on forests pulled back along the shadow. The right Kan
//! extension is a limit over comma categories.

use ordfor::kan::{
    build_comma, counit_check, detect_weak_equivalence, pullback_presheaf, pushforward,
    pushforward_functor, representable_presheaf, unit_check, PresheafMap,
};
use ordfor::random::{random_epi_functor, random_natural_map_mixed, seeded};

fn main() -> ordfor::Result<()> {
    let mut rng = seeded(11);

    let comma = build_comma(2, 2)?;
    println!(
        "comma category at [2]: {} objects, {} arrows",
        comma.objects.len(),
        comma.arrows.len()
    );

    let a = random_epi_functor(&mut rng, 2, 3);
    let x = pullback_presheaf(&a)?;
    println!("pulled back functor with dims {:?}", x.dims());
    for n in 0..=2 {
        let p = pushforward(&x, n)?;
        println!("  limit at [{n}] has dimension {}", p.dim());
    }
    let pf = pushforward_functor(&x)?;
    println!("pushforward dims {:?}", pf.functor.dims());

    let unit = unit_check(&a)?;
    println!("unit iso per degree {:?}", unit.iso);

    let r = representable_presheaf(0, 2)?;
    let counit = counit_check(&r)?;
    println!(
        "representable at [0]: dims {:?}, pushforward dims {:?}",
        counit.dims, counit.pushforward_dims
    );
    println!(
        "counit iso {:?}, after pushing forward {:?}",
        counit.counit_iso, counit.pushed_counit_iso
    );

    for _ in 0..4 {
        let u = random_natural_map_mixed(&mut rng, 2, 3);
        let pulled = PresheafMap::pullback(&u)?;
        println!(
            "direct {} detected {}",
            u.is_weak_equivalence()?,
            detect_weak_equivalence(&pulled)?
        );
    }
    Ok(())
}
