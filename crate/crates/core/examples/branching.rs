//! Discriminants and branching: a general spectral cover of the line is
//! simply branched (squarefree discriminant); the degenerations are
//! flexes, bitangents and singular points, classified at every base-field
//! multiple root of the discriminant, infinity included.
//!
//!     cargo run --release --example branching

use spectral_workbench::arith::{print_form, BinaryForm, Field};
use spectral_workbench::spectral::{classify_branching, discriminant, SpectralData};

fn main() {
    let p = 1009;
    let field = Field::prime(p).unwrap();

    // Monte Carlo: how often is a random cover simply branched?
    let trials = 200;
    let mut squarefree = 0;
    for seed in 0..trials {
        let s = SpectralData::random(2, 2, p, seed).unwrap();
        let disc = discriminant(&s).unwrap();
        if !disc.is_zero() && !disc.squarefree_part().unwrap().1 {
            squarefree += 1;
        }
    }
    println!("random n=2, k=2 covers over F_{p}: {squarefree}/{trials} simply branched\n");

    // A flex: chi = T^3 - x ramifies triply over x = 0.
    let flex = SpectralData::new(
        1,
        vec![
            BinaryForm::zero(field, 1),
            BinaryForm::zero(field, 2),
            BinaryForm::from_ints(field, 3, &[0, -1, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let report = classify_branching(&flex).unwrap();
    println!("chi = T^3 - x:");
    println!("  disc = {}", print_form(&report.discriminant));
    for (at, tag) in &report.classifications {
        println!("  {at:?} -> {tag:?}");
    }

    // A bitangent: chi = (T^2 - 1)^2 + x (T^3 + 2) has two double points
    // over x = 0.
    let bitangent = SpectralData::new(
        1,
        vec![
            BinaryForm::from_ints(field, 1, &[0, 1]).unwrap(),
            BinaryForm::from_ints(field, 2, &[-2, 0, 0]).unwrap(),
            BinaryForm::zero(field, 3),
            BinaryForm::from_ints(field, 4, &[1, 2, 0, 0, 0]).unwrap(),
        ],
    )
    .unwrap();
    let report = classify_branching(&bitangent).unwrap();
    println!("\nchi = (T^2 - 1)^2 + x (T^3 + 2):");
    for (at, tag) in &report.classifications {
        println!("  {at:?} -> {tag:?}");
    }

    // Two components crossing: chi = (T^2 - x)(T^2 - x - x^2) is singular
    // where they meet.
    let crossing = SpectralData::new(
        1,
        vec![
            BinaryForm::zero(field, 1),
            BinaryForm::from_ints(field, 2, &[0, -2, -1]).unwrap(),
            BinaryForm::zero(field, 3),
            BinaryForm::from_ints(field, 4, &[0, 0, 1, 1, 0]).unwrap(),
        ],
    )
    .unwrap();
    let report = classify_branching(&crossing).unwrap();
    println!("\nchi = (T^2 - x)(T^2 - x - x^2):");
    for (at, tag) in &report.classifications {
        println!("  {at:?} -> {tag:?}");
    }
}
