//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured wall time (`cargo test --test acceptance --
//! --nocapture` to see them all).
//!
//! Every tolerance is exact integer or exact-arithmetic equality; the two
//! statistical criteria carry their stated bounds (a 90% squarefree rate
//! with a fixed seed, and a 5% reseed allowance for rank experiments).

use std::time::Instant;

use spectral_workbench::arith::{BinaryForm, Field};
use spectral_workbench::covers::{
    gonality_prediction, Genus2ThetaRing, GonalityPrediction, ThetaParity,
};
use spectral_workbench::detquartic::{
    rank_drop_points, smooth_plane_curve_check, SmoothnessReport,
};
use spectral_workbench::hitchin::{
    aut_dim, enumerate_splitting_types, expected_dims, has_forced_invariant_subbundle, random_aut,
    random_endo, run_rank_experiment, SplitMix64,
};
use spectral_workbench::json::{builtin_fixture, from_json_str, QuarticFixtureDoc};
use spectral_workbench::spectral::{
    char_poly, classify_branching, commutant_dim, companion, conjugate, discriminant,
    is_irreducible, BranchPoint, BranchTag, SpectralData,
};
use spectral_workbench::Error;

fn pass(criterion: u32, detail: &str, started: Instant) {
    println!(
        "criterion {criterion}: PASS - {detail} [{:.2}s]",
        started.elapsed().as_secs_f64()
    );
}

/// Criterion 1: for every splitting type with n <= 4, k in {1,2,3},
/// |e_i| <= 3 satisfying the balanced hypothesis and a nonnegative
/// expected dimension, the rank experiment at p = 1009 with 10 samples is
/// dominant with empirical fiber dimension exactly the balanced formula.
/// At most 5% of configurations may need a reseed.
///
/// One refinement, carried over from the theorem this certifies: the
/// dimension formula is asserted "if the splitting locus is non-empty",
/// and a boundary type whose consecutive twist gap exceeds `k` has a
/// structurally forced invariant subbundle, hence an empty stratum on
/// irreducible spectral curves, whatever its expected dimension. For
/// those configurations the experiment is asserted NOT dominant (the
/// empty-fiber branch of the theorem); the equality is asserted for all
/// others.
#[test]
fn criterion_1_balanced_dimension_formula() {
    let started = Instant::now();
    let p = 1009u64;
    let mut configs = 0u64;
    let mut forced_empty = 0u64;
    let mut reseeded = 0u64;
    for st in enumerate_splitting_types(4, 3) {
        for k in 1..=3i64 {
            let e = st.twists();
            if e[0] - e[e.len() - 1] + k < -1 {
                continue;
            }
            let report = expected_dims(&st, k);
            let expected = report
                .expected_balanced
                .expect("hypothesis holds for this config");
            if expected < 0 {
                continue;
            }
            configs += 1;
            if has_forced_invariant_subbundle(&st, k) {
                // Empty stratum: every sample's polynomial factors and the
                // Hitchin map cannot dominate.
                forced_empty += 1;
                let result = run_rank_experiment(&st, k, p, configs * 1000, 10).unwrap();
                assert!(
                    !result.dominant,
                    "structurally empty stratum e={:?} m={:?} k={k} reported dominant",
                    st.twists(),
                    st.multiplicities()
                );
                assert!(
                    result
                        .per_sample
                        .iter()
                        .all(|s| s.irreducible != Some(true)),
                    "forced-reducible stratum produced an irreducible sample"
                );
                continue;
            }
            let mut ok = false;
            let mut attempts = 0u64;
            for attempt in 0..3u64 {
                attempts = attempt;
                let seed = configs * 1000 + attempt;
                let result = run_rank_experiment(&st, k, p, seed, 10).unwrap();
                if result.dominant && result.empirical_fiber_dim == expected {
                    ok = true;
                    break;
                }
            }
            assert!(
                ok,
                "config e={:?} m={:?} k={k}: expected fiber dim {expected} not observed",
                st.twists(),
                st.multiplicities()
            );
            if attempts > 0 {
                reseeded += 1;
            }
        }
    }
    assert!(configs > 300, "enumeration shrank unexpectedly: {configs}");
    assert!(
        (reseeded as f64) <= 0.05 * configs as f64,
        "{reseeded}/{configs} configurations needed a reseed"
    );
    pass(
        1,
        &format!(
            "{} configurations dominant with exact fiber dimension ({reseeded} reseeds); {forced_empty} boundary strata verified empty (non-dominant)",
            configs - forced_empty
        ),
        started,
    );
}

/// Criterion 2: expected_general (with the theorem's `d` read as `n`)
/// = expected_balanced = rho' under the hypothesis, exhaustively for
/// n <= 5, |e_i| <= 4, k <= 3.
#[test]
fn criterion_2_formula_concordance() {
    let started = Instant::now();
    let mut checked = 0u64;
    for st in enumerate_splitting_types(5, 4) {
        for k in 1..=3i64 {
            let r = expected_dims(&st, k);
            if !r.balanced_applicable {
                continue;
            }
            let balanced = r.expected_balanced.unwrap();
            assert_eq!(r.expected_general, balanced, "{st:?} k={k}");
            assert_eq!(r.expected_general, r.rho_prime, "{st:?} k={k}");
            checked += 1;
        }
    }
    assert!(checked > 1000);
    pass(
        2,
        &format!("{checked} (type, k) pairs agree exactly"),
        started,
    );
}

/// Criterion 3: the automorphism-dimension formula equals brute-force
/// enumeration of admissible block-matrix coefficient slots for all types
/// with n <= 5, |e_i| <= 4.
#[test]
fn criterion_3_aut_dimension_lemma() {
    let started = Instant::now();
    let mut checked = 0u64;
    for st in enumerate_splitting_types(5, 4) {
        // Oracle: count the monomial slots of End(E) one at a time over
        // expanded summand pairs.
        let expanded = st.expanded();
        let mut slots = 0u64;
        for &ei in &expanded {
            for &ej in &expanded {
                let t = ei - ej;
                if t >= 0 {
                    slots += (t + 1) as u64;
                }
            }
        }
        assert_eq!(aut_dim(&st), slots, "{st:?}");
        checked += 1;
    }
    assert!(checked > 500);
    pass(
        3,
        &format!("{checked} splitting types match the slot count"),
        started,
    );
}

/// Criterion 4: Hitchin correspondence round trips. 1000 random spectral
/// data (n <= 4, k <= 3) survive companion -> char_poly exactly;
/// conjugation by 100 random automorphisms preserves char_poly; the
/// commutant is trivial on every sample whose polynomial is irreducible.
#[test]
fn criterion_4_correspondence_round_trips() {
    let started = Instant::now();
    let p = 1009u64;
    let mut rng = SplitMix64::new(2026);
    let mut round_trips = 0u64;
    let mut irreducible = 0u64;
    while round_trips < 1000 {
        let n = 1 + rng.next_below(4);
        let k = 1 + rng.next_below(3) as i64;
        let a = rng.next_below(7) as i64 - 3;
        let s = SpectralData::random(n, k, p, rng.next_u64()).unwrap();
        let phi = companion(&s, a);
        assert_eq!(char_poly(&phi).unwrap(), s, "round trip failed");
        round_trips += 1;
        if n >= 2 {
            match is_irreducible(&s) {
                Ok(true) => {
                    irreducible += 1;
                    assert_eq!(commutant_dim(&phi), 1, "nontrivial commutant for {s:?}");
                }
                Ok(false) => {}
                Err(Error::NoSquarefreeSpecialization) => {}
                Err(e) => panic!("unexpected error {e:?}"),
            }
        }
    }
    assert!(
        irreducible > 500,
        "too few irreducible samples: {irreducible}"
    );

    let mut conjugations = 0u64;
    let types = enumerate_splitting_types(4, 3);
    while conjugations < 100 {
        let st = &types[rng.next_below(types.len() as u64) as usize];
        let k = 1 + rng.next_below(3) as i64;
        let phi = random_endo(st, k, p, rng.next_u64()).unwrap();
        let g = random_aut(st, p, rng.next_u64()).unwrap();
        let conj = conjugate(&phi, &g).unwrap();
        assert_eq!(
            char_poly(&conj).unwrap(),
            char_poly(&phi).unwrap(),
            "conjugation changed the characteristic polynomial"
        );
        conjugations += 1;
    }
    pass(
        4,
        &format!(
            "1000 round trips, {conjugations} conjugation invariances, {irreducible} trivial commutants"
        ),
        started,
    );
}

/// Criterion 5: simple-branching genericity. At least 90% of 500 random
/// spectral data (n in {2,3}, k in {1,2}, p = 1009) have squarefree
/// discriminant, and the flex/bitangent fixtures classify as constructed.
#[test]
fn criterion_5_simple_branching_genericity() {
    let started = Instant::now();
    let p = 1009u64;
    let field = Field::prime(p).unwrap();
    let mut rng = SplitMix64::new(55);
    let mut squarefree = 0u64;
    let total = 500u64;
    for _ in 0..total {
        let n = 2 + rng.next_below(2);
        let k = 1 + rng.next_below(2) as i64;
        let s = SpectralData::random(n, k, p, rng.next_u64()).unwrap();
        let disc = discriminant(&s).unwrap();
        if disc.is_zero() {
            continue;
        }
        let (_, repeated) = disc.squarefree_part().unwrap();
        if !repeated {
            squarefree += 1;
        }
    }
    assert!(
        squarefree * 10 >= total * 9,
        "only {squarefree}/{total} squarefree discriminants"
    );

    // Flex fixture: chi = T^3 - x.
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
    assert!(report
        .classifications
        .contains(&(BranchPoint::Affine(0), BranchTag::Flex)));

    // Bitangent fixture: chi = (T^2 - 1)^2 + x (T^3 + 2).
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
    assert!(report
        .classifications
        .contains(&(BranchPoint::Affine(0), BranchTag::Bitangent)));
    pass(
        5,
        &format!("{squarefree}/{total} squarefree; flex and bitangent fixtures classified"),
        started,
    );
}

/// Criterion 6: genus-2 section rings. Hilbert dimensions match the
/// Riemann-Roch sequence and the projection-formula sums for degrees
/// <= 12 on 100 random fixtures; the degree-6 piece has dimension 9 and
/// is generated by degree-3 products on every fixture.
#[test]
fn criterion_6_genus2_rings() {
    let started = Instant::now();
    let rr = |m: u32| -> u64 {
        match m {
            0 => 1,
            1 => 0,
            2 => 2,
            m => (m - 1) as u64,
        }
    };
    for seed in 0..100u64 {
        let ring = Genus2ThetaRing::random(1009, seed, true).unwrap();
        let bare = Genus2ThetaRing::new(
            ring.b1().clone(),
            ring.b2().clone(),
            ring.linear_form().clone(),
            false,
        )
        .unwrap();
        for m in 0..=12u32 {
            assert_eq!(bare.hilbert_dim(m), rr(m), "R_theta degree {m} seed {seed}");
            let pullback = rr(m) + if m >= 1 { rr(m - 1) } else { 0 };
            assert_eq!(
                ring.hilbert_dim(m),
                pullback,
                "R_pullback degree {m} seed {seed}"
            );
        }
        assert_eq!(ring.hilbert_dim(6), 9);
        assert!(
            ring.generation_in_degree(3, 6).unwrap(),
            "degree-6 piece not generated by degree-3 products at seed {seed}"
        );
    }
    pass(
        6,
        "100 fixtures: Riemann-Roch Hilbert functions and degree-3 generation of degree 6",
        started,
    );
}

/// Criterion 7: the shipped determinantal fixture. Laplace identities
/// exact over the rationals; the adjugate identity holds for all 4^4
/// index quadruples; rank-drop over F_1163 contains the three stated
/// rational points; the determinant passes the smoothness search at
/// p = 1009 with extensions up to degree 2.
#[test]
fn criterion_7_determinantal_fixture() {
    let started = Instant::now();
    let doc: QuarticFixtureDoc =
        from_json_str(builtin_fixture("beauville-genus3").unwrap()).unwrap();
    let m = doc.matrix_over(Field::Rational).unwrap();
    let det = m.det_form();
    assert_eq!(det.degree(), 4);
    assert!(!det.is_zero());

    // Laplace expansion down every column.
    for j in 0..4 {
        let mut acc = spectral_workbench::detquartic::TernaryForm::zero(Field::Rational, 4);
        for i in 0..4 {
            let term = m.entry(i, j).to_form().mul(&m.cofactor(i, j).unwrap());
            acc = if (i + j) % 2 == 1 {
                acc.sub(&term)
            } else {
                acc.add(&term)
            };
        }
        assert_eq!(acc, det, "Laplace expansion failed down column {j}");
    }

    // All 256 quadruples of the adjugate identity.
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    assert!(
                        m.adjugate_identity_check([i, j, k, l]).unwrap(),
                        "adjugate identity failed at ({i},{j},{k},{l})"
                    );
                }
            }
        }
    }

    // Rank-drop points over F_1163 contain the three stated points.
    let f1163 = Field::prime(1163).unwrap();
    let aug = doc.augmented_over(f1163).unwrap();
    let points = rank_drop_points(&aug).unwrap();
    for expected in [[1u64, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]] {
        assert!(
            points.contains(&expected),
            "rank-drop locus over F_1163 misses {expected:?}"
        );
    }
    let count_1163 = points.len();

    // The full six-point pattern appears over a split prime; the count is
    // reported, not assumed, for the unverified coordinates.
    let f1259 = Field::prime(1259).unwrap();
    let aug = doc.augmented_over(f1259).unwrap();
    let split_points = rank_drop_points(&aug).unwrap();
    let count_1259 = split_points.len();

    // Smoothness of the determinant at p = 1009 through degree-2
    // extensions.
    let f1009 = Field::prime(1009).unwrap();
    let det_p = doc.matrix_over(f1009).unwrap().det_form();
    let report = smooth_plane_curve_check(&det_p, 1009, 2).unwrap();
    assert_eq!(
        report,
        SmoothnessReport::SmoothOverCheckedFields { p: 1009, e_max: 2 }
    );
    pass(
        7,
        &format!(
            "Laplace + 256 adjugate quadruples exact; rank-drop counts: {count_1163} over F_1163, {count_1259} over F_1259; smooth through F_1009^2"
        ),
        started,
    );
}

/// Criterion 8: the gonality theorems quantify over general curves in
/// moduli and are not desk-verifiable; they enter through the lookup
/// table, checked here clause by clause against an independent rendering
/// of the statements, with the computational content covered by criteria
/// 4-6.
#[test]
fn criterion_8_gonality_table_clauses() {
    let started = Instant::now();
    // Independent rendering of the published clauses.
    let expected = |g: u64, parity: ThetaParity| -> Option<u64> {
        let even_theta = parity == ThetaParity::Even;
        match (g, even_theta) {
            (2, true) => Some(3),
            (2, false) => Some(2),
            (3, true) => Some(5),
            (3, false) => Some(4),
            (g, true) if g >= 4 && g % 2 == 0 => Some(g + 2),
            (g, false) if g >= 7 && g % 2 == 0 => Some(g + 2),
            (g, true) if g >= 8 && g % 2 == 1 => Some(g + 3),
            (g, false) if g >= 11 && g % 2 == 1 => Some(g + 3),
            _ => None,
        }
    };
    let mut checked = 0u64;
    for g in 2..=40u64 {
        for parity in [ThetaParity::Even, ThetaParity::Odd] {
            let got = gonality_prediction(g, parity);
            match expected(g, parity) {
                Some(v) => assert_eq!(got, GonalityPrediction::Gonality(v), "g={g} {parity:?}"),
                None => assert_eq!(
                    got,
                    GonalityPrediction::OutsideStatedRange,
                    "g={g} {parity:?}"
                ),
            }
            checked += 1;
        }
    }
    pass(
        8,
        &format!(
            "{checked} (genus, parity) clauses match; asymptotic statements delegated to criteria 4-6"
        ),
        started,
    );
}
