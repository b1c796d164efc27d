//! Runs a few of the exhaustive sweeps at reduced bounds and prints their
//! reports. `cargo test --test acceptance` runs all of them at full size.

use ordfor::checks;

fn main() {
    let reports = [
        checks::decomposition(6),
        checks::graft_soundness(4),
        checks::confluence(7),
        checks::category_axioms(2, 2),
        checks::shadow_functor(2),
        checks::normalization(1, 20, 3, 3),
        checks::counit(&[0, 1], 2),
    ];
    for r in &reports {
        println!(
            "{:<20} pass={} counts={}",
            r.command,
            r.pass,
            serde_json::to_string(&r.counts).expect("counts serialize")
        );
    }
}
