//! The combinatorial scaffolding the closed forms are built from: degenerate
//! Stirling numbers of both kinds, r-Whitney numbers, the Eulerian triangle,
//! and the polyexponential series.
//!
//! Run with: cargo run --example special_numbers

use polygenocchi::ring::Rat;
use polygenocchi::specnum::{
    deg_stirling, eulerian_table, geom_power_sum, polyexp, whitney_first, whitney_tilde,
    StirlingKind,
};

fn main() -> polygenocchi::Result<()> {
    let rho = Rat::new(1, 2);

    println!("degenerate Stirling numbers, rho = {rho}");
    for (kind, label) in [(StirlingKind::First, "first"), (StirlingKind::Second, "second")] {
        println!("  {label} kind:");
        for n in 0..=5 {
            let row: Vec<String> = (0..=n)
                .map(|j| deg_stirling(kind, n, j, &rho).unwrap().to_string())
                .collect();
            println!("    n={n}: {}", row.join(", "));
        }
    }
    // At rho = 0 both kinds collapse to the classical triangles.
    let s_classical = deg_stirling(StirlingKind::Second, 4, 2, &Rat::zero())?;
    println!("  classical check: S(4,2) = {s_classical}");

    println!("\nr-Whitney numbers of the first kind, m = 2, r = 1/3");
    let m = Rat::from_int(2);
    let r = Rat::new(1, 3);
    for n in 0..=4 {
        let row = whitney_first(&m, &r, n)?;
        let text: Vec<String> = row.coeffs.iter().map(|c| c.to_string()).collect();
        println!("  n={n}: {}", text.join(", "));
    }
    // The r = 0 shortcut is a power-of-m rescaling of classical Stirling
    // numbers of the first kind.
    let tilde = whitney_tilde(&m, 4);
    let direct = whitney_first(&m, &Rat::zero(), 4)?;
    assert_eq!(tilde, direct);
    println!("  r=0 shortcut agrees with the general row at n=4");

    println!("\nEulerian triangle");
    let table = eulerian_table(6);
    for n in 0..=6 {
        let row: Vec<String> = table.row(n).iter().map(|v| v.to_string()).collect();
        println!("  n={n}: {}", row.join(", "));
    }
    // These close the infinite sums: sum_p p^m z^p = A_m(z)/(1-z)^{m+1}.
    let z = Rat::new(1, 3);
    println!(
        "  power-sum closure at z = {z}: sum p^3 z^p = {}",
        geom_power_sum(&z, 3)?
    );

    println!("\npolyexponential series Ei_k, first EGF coefficients (rho = {rho})");
    for k in 1..=3 {
        let s = polyexp(k, &rho, 6);
        let row: Vec<String> = (0..=6).map(|n| s.egf(n).to_string()).collect();
        println!("  k={k}: {}", row.join(", "));
    }
    Ok(())
}
