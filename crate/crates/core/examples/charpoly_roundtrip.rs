//! The Hitchin correspondence at the matrix level: spectral data, its
//! companion twisted endomorphism, the exact round trip through the
//! characteristic polynomial, conjugation invariance, and the commutant.
//!
//!     cargo run --release --example charpoly_roundtrip

use spectral_workbench::arith::print_form;
use spectral_workbench::hitchin::{random_aut, SplitMix64};
use spectral_workbench::spectral::{char_poly, commutant_dim, companion, conjugate, SpectralData};

fn main() {
    let p = 1009;
    let (n, k) = (3u64, 2i64);
    let data = SpectralData::random(n, k, p, 42).unwrap();
    println!("spectral data over F_{p} (n = {n}, k = {k}):");
    for i in 1..=n as usize {
        println!("  s_{i} = {}", print_form(data.s(i)));
    }

    // The companion realizes the data as a twisted endomorphism on the
    // twist ladder (a - (n-1)k, ..., a); char_poly inverts it exactly.
    let phi = companion(&data, 1);
    println!(
        "\ncompanion on splitting type e = {:?}:",
        phi.splitting_type().twists()
    );
    let recovered = char_poly(&phi).unwrap();
    println!("char_poly(companion(s)) == s: {}", recovered == data);

    // Conjugating by a bundle automorphism leaves the characteristic
    // polynomial untouched, coefficient by coefficient.
    let mut rng = SplitMix64::new(7);
    let g = random_aut(phi.splitting_type(), p, rng.next_u64()).unwrap();
    let conj = conjugate(&phi, &g).unwrap();
    println!(
        "char_poly(g phi g^-1) == char_poly(phi): {}",
        char_poly(&conj).unwrap() == recovered
    );

    // The commutant of the companion of irreducible data is the scalars.
    println!("commutant dimension: {}", commutant_dim(&phi));
}
