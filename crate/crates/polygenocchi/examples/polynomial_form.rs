//! Coefficients of the master family are polynomials in x, y, z. This
//! expands one of them into monomials two independent ways and checks the
//! expansion against pointwise evaluation.
//!
//! Run with: cargo run --example polynomial_form

use polygenocchi::families::{ghat, ghat_poly, GParams};
use polygenocchi::ring::Rat;
use polygenocchi::theorems::{poly_expand, poly_expand_dff};

fn main() -> polygenocchi::Result<()> {
    let mut p = GParams::default();
    p.rho = Rat::new(1, 3);

    let n = 5;
    let poly = poly_expand(n, &p)?;
    assert_eq!(poly, poly_expand_dff(n, &p)?);
    assert_eq!(poly, ghat_poly(n, &p)?);

    println!("coefficient {n} as a polynomial (rho = {}):\n", p.rho);
    for (e, c) in poly.sorted_terms() {
        println!("  x^{} y^{} z^{}  *  {c}", e[0], e[1], e[2]);
    }

    // The expansion and the generating function must agree at every point.
    let pts = [
        (Rat::zero(), Rat::zero(), Rat::zero()),
        (Rat::one(), Rat::new(-1, 2), Rat::new(2, 3)),
        (Rat::new(-5, 4), Rat::new(1, 7), Rat::new(3, 2)),
    ];
    println!("\npointwise coherence:");
    for (x, y, z) in pts {
        let direct = ghat(n, &p, &x, &y, &z)?;
        let via_poly = poly.eval(&x, &y, &z);
        assert_eq!(direct, via_poly);
        println!("  at ({x}, {y}, {z}): {direct}");
    }
    Ok(())
}
