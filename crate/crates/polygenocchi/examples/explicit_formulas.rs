//! Closed-form evaluators vs the generating-function oracle. The closed
//! forms replace the infinite parameter sums with finite rational values
//! (Eulerian polynomial quotients), so they evaluate without any series
//! division. Because the compound numerator starts at t^1, the order-1 form
//! naturally produces coefficient n+1 divided by n+1, and the order-alpha
//! form produces coefficient n+alpha divided by (n+alpha)...(n+1); the
//! oracle extracts the same coefficient from the generating function.
//!
//! Run with: cargo run --example explicit_formulas

use polygenocchi::families::{ghat, GParams};
use polygenocchi::ring::Rat;
use polygenocchi::theorems::{explicit_higher, explicit_order1};
use polygenocchi::Error;

fn main() -> polygenocchi::Result<()> {
    let mut p = GParams {
        k: 2,
        alpha: 1,
        lambda: Rat::new(1, 3),
        rho: Rat::new(1, 2),
        u: Rat::new(-3, 2),
        log_a: Rat::new(2, 5),
        log_b: Rat::one(),
    };
    let (x, y, z) = (Rat::new(1, 2), Rat::new(-1, 3), Rat::new(2, 7));

    println!("order-1 closed form vs generating function ({p})\n");
    for n in 0..=8usize {
        let closed = explicit_order1(n, &p, &x, &y, &z)?;
        let oracle = &ghat(n + 1, &p, &x, &y, &z)? * &Rat::new(1, n as i64 + 1);
        assert_eq!(closed, oracle);
        println!("  coefficient {} / {}: {closed}", n + 1, n + 1);
    }

    // The higher-order form sums over compositions of the index into alpha
    // parts; at alpha = 3 that is already a nontrivial rearrangement.
    p.alpha = 3;
    println!("\nhigher-order closed form, alpha = 3\n");
    for n in 0..=6usize {
        let closed = explicit_higher(n, &p, &x, &y, &z)?;
        let mut falling = Rat::one();
        for j in 1..=3 {
            falling = &falling * &Rat::from_int((n + j) as i64);
        }
        let oracle = &ghat(n + 3, &p, &x, &y, &z)? * &falling.inv().expect("nonzero");
        assert_eq!(closed, oracle);
        println!("  coefficient {} / {falling}: {closed}", n + 3);
    }

    // lambda = u makes the finite closed form hit its pole (the parameter
    // sums diverge there), even though the generating function itself is
    // fine for u != 1. The evaluators refuse rather than answer wrongly.
    p.alpha = 1;
    p.lambda = p.u.clone();
    match explicit_order1(2, &p, &x, &y, &z) {
        Err(Error::PoleAtOne) => println!("\nlambda = u correctly rejected: pole at z = 1"),
        other => panic!("expected the pole error, got {other:?}"),
    }
    Ok(())
}
