//! Exact irreducibility certificates for spectral polynomials over the
//! function field F_p(x), decided by fiber factorization and Hensel
//! lifting of candidate factors.
//!
//!     cargo run --release --example irreducibility

use spectral_workbench::arith::{BinaryForm, Field, TPoly};
use spectral_workbench::spectral::{is_irreducible, SpectralData};

fn main() {
    let p = 1009;
    let field = Field::prime(p).unwrap();

    // Random spectral data is irreducible with overwhelming frequency.
    let mut irreducible = 0;
    let trials = 50;
    for seed in 0..trials {
        let s = SpectralData::random(3, 1, p, seed).unwrap();
        if is_irreducible(&s).unwrap_or(false) {
            irreducible += 1;
        }
    }
    println!("random n=3, k=1 data over F_{p}: {irreducible}/{trials} irreducible");

    // A constructed product is detected exactly: chi = (T - x)(T - x - 1).
    let x = BinaryForm::from_ints(field, 1, &[0, 1]).unwrap();
    let x1 = BinaryForm::from_ints(field, 1, &[1, 1]).unwrap();
    let one = BinaryForm::constant(field, 1);
    let chi = TPoly::new(vec![x.neg(), one.clone()]).mul(&TPoly::new(vec![x1.neg(), one]));
    let s = SpectralData::new(
        1,
        vec![
            chi.coeff(1).cloned().unwrap(),
            chi.coeff(0).cloned().unwrap(),
        ],
    )
    .unwrap();
    println!(
        "chi = (T - x)(T - x - 1) reported irreducible: {}",
        is_irreducible(&s).unwrap()
    );

    // T^2 - x has no polynomial square root: certified irreducible.
    let s = SpectralData::new(
        1,
        vec![
            BinaryForm::zero(field, 1),
            BinaryForm::from_ints(field, 2, &[0, -1, 0]).unwrap(),
        ],
    )
    .unwrap();
    println!(
        "T^2 - x reported irreducible: {}",
        is_irreducible(&s).unwrap()
    );
}
