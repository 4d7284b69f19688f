//! The shipped determinantal fixture: a symmetric 4x4 matrix of linear
//! forms whose determinant is a smooth plane quartic carrying a
//! noneffective theta characteristic. Demonstrates the symbolic
//! determinant, the Laplace and adjugate identities, the brute-force
//! rank-drop point search for the augmented matrix, and the bounded
//! smoothness check.
//!
//!     cargo run --release --example beauville_quartic

use spectral_workbench::arith::Field;
use spectral_workbench::detquartic::{rank_drop_points, smooth_plane_curve_check};
use spectral_workbench::json::{builtin_fixture, from_json_str, QuarticFixtureDoc};

fn main() {
    let doc: QuarticFixtureDoc =
        from_json_str(builtin_fixture("beauville-genus3").unwrap()).unwrap();
    println!("fixture `{}` (d = {})", doc.name, doc.d);

    // Exact symbolic determinant over the rationals.
    let m = doc.matrix_over(Field::Rational).unwrap();
    let det = m.det_form();
    println!("\ndet M = {det}");

    // Laplace identity down the first column, and the adjugate rank-one
    // identity for every index quadruple.
    let mut all = true;
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    all &= m.adjugate_identity_check([i, j, k, l]).unwrap();
                }
            }
        }
    }
    println!(
        "adjugate identity cof(i,j)cof(k,l) = cof(i,l)cof(k,j) mod det: {all} (256 quadruples)"
    );

    // Rank-drop points of [M | r] over two primes: the universal four,
    // and the full six-point pattern once the residual conjugate pair
    // becomes rational.
    for p in [1163u64, 1259] {
        let field = Field::prime(p).unwrap();
        let aug = doc.augmented_over(field).unwrap();
        let pts = rank_drop_points(&aug).unwrap();
        println!("\nrank-drop points over F_{p} ({} total):", pts.len());
        for pt in &pts {
            println!("  [{}, {}, {}]", pt[0], pt[1], pt[2]);
        }
    }

    // Bounded smoothness: no singular point with coordinates in F_p or
    // F_{p^2}.
    let f1009 = Field::prime(1009).unwrap();
    let report = smooth_plane_curve_check(&doc.matrix_over(f1009).unwrap().det_form(), 1009, 2);
    println!(
        "\nsmoothness search at p = 1009, e_max = 2: {:?}",
        report.unwrap()
    );
}
