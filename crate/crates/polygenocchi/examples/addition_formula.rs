//! The addition rule: the family evaluated at a shifted point
//! (x1+x2, y1+y2, z1+z2) is a binomial convolution of the family at the
//! first point with the plain three-variable factor at the second. This is
//! what makes the family an Appell-style sequence in all three arguments.
//!
//! Run with: cargo run --example addition_formula

use polygenocchi::families::{ghat, GParams};
use polygenocchi::ring::Rat;
use polygenocchi::theorems::addition;

fn main() -> polygenocchi::Result<()> {
    let mut p = GParams::default();
    p.k = 2;
    p.rho = Rat::new(1, 4);
    p.lambda = Rat::new(3, 2);

    let p1 = (Rat::new(1, 2), Rat::new(-1, 3), Rat::new(1, 5));
    let p2 = (Rat::new(2, 3), Rat::new(1, 2), Rat::new(-1, 2));
    let sum = (&p1.0 + &p2.0, &p1.1 + &p2.1, &p1.2 + &p2.2);

    println!("shift ({}, {}, {}) by ({}, {}, {})\n", p1.0, p1.1, p1.2, p2.0, p2.1, p2.2);
    println!("{:>3}  {:>24}  {:>24}", "n", "convolution", "direct");
    for n in 0..=8 {
        let via_rule = addition(n, &p, &p1, &p2)?;
        let direct = ghat(n, &p, &sum.0, &sum.1, &sum.2)?;
        assert_eq!(via_rule, direct);
        println!("{n:>3}  {via_rule:>24}  {direct:>24}");
    }

    // Shifting by the origin is the identity.
    let origin = (Rat::zero(), Rat::zero(), Rat::zero());
    for n in 0..=8 {
        assert_eq!(addition(n, &p, &p1, &origin)?, ghat(n, &p, &p1.0, &p1.1, &p1.2)?);
    }
    println!("\nshift by the origin is the identity: checked for n <= 8");
    Ok(())
}
