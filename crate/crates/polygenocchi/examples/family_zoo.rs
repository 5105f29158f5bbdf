//! Every registry family, tabulated side by side. Each one is a
//! specialization of the same master generating function; the registry
//! exists so the classical columns have names.
//!
//! Run with: cargo run --example family_zoo

use polygenocchi::families::{family_series, FamilyParams, ALL_FAMILIES};

fn main() -> polygenocchi::Result<()> {
    let mut fp = FamilyParams::default();
    // Nonzero degeneracy and a generic Apostol weight so the degenerate and
    // Apostol columns do not silently coincide with the classical ones.
    fp.deg = polygenocchi::ring::Rat::new(1, 2);
    fp.lambda = polygenocchi::ring::Rat::new(2, 1);

    let n_max = 6;
    println!("first {} values of every registry family", n_max + 1);
    println!("(deg = {}, lambda = {}, other parameters default)\n", fp.deg, fp.lambda);
    for id in ALL_FAMILIES {
        let series = family_series(id, &fp, n_max)?;
        let row: Vec<String> = (0..=n_max).map(|n| series.egf(n).to_string()).collect();
        println!("{:<24} {}", id.to_string(), row.join(", "));
    }
    Ok(())
}
