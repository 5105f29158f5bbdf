//! The classical anchor: with the default parameter pack
//! (k = 1, alpha = 1, lambda = 1, rho = 0, u = -1, ln a = 0, ln b = 1) the
//! master family at the origin collapses to the Genocchi numbers
//! 0, 1, -1, 0, 1, 0, -3, 0, 17, ...
//!
//! Run with: cargo run --example genocchi_numbers

use polygenocchi::families::{family_value, ghat, FamilyId, FamilyParams, GParams};
use polygenocchi::ring::Rat;

fn main() -> polygenocchi::Result<()> {
    let p = GParams::default();
    let zero = Rat::zero();

    println!("master family at the origin vs the classical registry column\n");
    println!("{:>3}  {:>8}  {:>8}", "n", "master", "registry");
    for n in 0..=12 {
        let master = ghat(n, &p, &zero, &zero, &zero)?;
        let registry = family_value(FamilyId::Genocchi, n, &FamilyParams::default())?;
        assert_eq!(master, registry);
        println!("{n:>3}  {master:>8}  {registry:>8}");
    }

    // The same column shifted into a polynomial: x enters through the
    // three-variable exponential factor, so ghat(n, .., x, 0, 0) is the
    // classical Genocchi polynomial G_n(x).
    println!("\nG_4(x) at a few rational points");
    for x in [Rat::zero(), Rat::one(), Rat::new(1, 2), Rat::new(-3, 4)] {
        let v = ghat(4, &p, &x, &zero, &zero)?;
        println!("  G_4({x}) = {v}");
    }
    Ok(())
}
