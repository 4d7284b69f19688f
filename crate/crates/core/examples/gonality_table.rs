//! Brill-Noether numbers and the gonality lookup table for canonical
//! covers, by base genus and parity of the theta characteristic.
//!
//!     cargo run --release --example gonality_table

use spectral_workbench::covers::{bn_number, gonality_prediction, GonalityPrediction, ThetaParity};

fn main() {
    println!("Brill-Noether numbers rho(g, r, d) = g - (r+1)(g + r - d):");
    for (g, r, d) in [(4u64, 1u64, 3i64), (10, 1, 6), (7, 2, 8)] {
        println!("  rho({g}, {r}, {d}) = {}", bn_number(g, r, d));
    }

    println!("\npredicted gonality of the canonical double cover:");
    println!("{:>4} {:>8} {:>8}", "g", "even", "odd");
    for g in 2..=16u64 {
        let cell = |parity| match gonality_prediction(g, parity) {
            GonalityPrediction::Gonality(v) => v.to_string(),
            GonalityPrediction::OutsideStatedRange => "-".into(),
        };
        println!(
            "{g:>4} {:>8} {:>8}",
            cell(ThetaParity::Even),
            cell(ThetaParity::Odd)
        );
    }
    println!("\n'-' marks genus/parity pairs outside the stated hypotheses;");
    println!("no extrapolation is offered there.");
}
