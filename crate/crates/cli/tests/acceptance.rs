//! Acceptance gate: one criterion per test, each printing a single
//! `ACCEPTANCE <n> PASS|FAIL` line (visible with --nocapture) before
//! asserting. Random criteria use fixed seeds; oracles are implemented
//! independently of the library code they check.

use std::time::{Duration, Instant};

use cockcroft_cli::demo::{NestedCommutator, TripleCommutator};
use cockcroft_core::{
    certify, check_witness, exponent_balance, lcs_weight, left_power_witness, lyndon_words,
    magnus_expand, search_membership, smith_normal_form, trace_to_witness, Alphabet,
    CertificationFailure, IntMatrix, MembershipEvidence, Presentation, SearchBounds, Syllable,
    WeightResult, Word,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn run_cli(args: &[&str]) -> Value {
    let mut argv = vec!["cockcroft", "--json"];
    argv.extend_from_slice(args);
    let (text, code) = cockcroft_cli::execute(argv).expect("arguments parse");
    assert_eq!(code, 0, "command failed: {text}");
    serde_json::from_str(&text).expect("valid JSON")
}

fn report(criterion: usize, ok: bool) {
    println!("ACCEPTANCE {criterion} {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion {criterion} failed");
}

#[test]
fn criterion_1_triple_family_reproduction() {
    let mut ok = true;
    for (a, b, c) in [(1i64, 1i64, 1i64), (2, 1, 1), (2, 3, 1), (2, 3, 5)] {
        let start = Instant::now();
        let doc = run_cli(&[
            "demo",
            "example1",
            "--a",
            &a.to_string(),
            "--b",
            &b.to_string(),
            "--c",
            &c.to_string(),
        ]);
        let elapsed = start.elapsed();
        let payload = &doc["payload"];
        let abc = (a * b * c).to_string();
        ok &= payload["certificate"]["degree"] == json!("2");
        // The degree-3 image must be exactly abc times the base class,
        // which has coordinate 1 on xyz and on xzy — nonzero throughout.
        ok &= payload["e_class"]["coords"] == json!({ "xyz": abc, "xzy": abc });
        ok &= payload["e_class"]["target_exact"] == json!(true);
        ok &= payload["scalar_match"] == json!(true);
        ok &= payload["detected"] == json!(true);
        ok &= elapsed < Duration::from_secs(10);
    }
    report(1, ok);
}

#[test]
fn criterion_2_nested_family_reproduction() {
    let mut ok = true;
    for c in [1i64, 2, 3] {
        let start = Instant::now();
        let doc = run_cli(&["demo", "example2", "--c", &c.to_string()]);
        let elapsed = start.elapsed();
        let payload = &doc["payload"];
        let scalar = (-(c * c)).to_string();
        ok &= payload["certificate"]["degree"] == json!("3");
        // Base class is -1 on xxyy; the image is c^2 times that.
        ok &= payload["e_class"]["coords"] == json!({ "xxyy": scalar });
        ok &= payload["e_class"]["target_exact"] == json!(true);
        ok &= payload["scalar_match"] == json!(true);
        ok &= payload["detected"] == json!(true);
        ok &= elapsed < Duration::from_secs(10);
    }
    report(2, ok);
}

#[test]
fn criterion_3_membership_pipeline_within_default_bounds() {
    let start = Instant::now();
    let family = TripleCommutator { a: 1, b: 1, c: 1 };
    let p = family.presentation();
    let mu = family.mu();
    let mut ok = true;
    for part in [p.part_r().unwrap(), p.part_s().unwrap()] {
        let bounds = SearchBounds::defaults_for(&mu, part);
        match search_membership(&mu, part, &bounds) {
            MembershipEvidence::SearchProved(trace) => {
                let witness = trace_to_witness(&mu, part, &trace).expect("trace replays");
                ok &= check_witness(&mu, &witness, part).expect("indices in range");
                let balance = exponent_balance(&witness, part).expect("indices in range");
                ok &= balance.values().all(|&v| v == 0);
            }
            _ => ok = false,
        }
    }
    ok &= start.elapsed() < Duration::from_secs(60);
    report(3, ok);
}

#[test]
fn criterion_4_mined_intersection_elements_sit_above_the_certificate_degree() {
    let triple = TripleCommutator { a: 1, b: 1, c: 1 };
    let nested = NestedCommutator { c: 1 };
    let ab3 = Alphabet::new(vec!["x", "y", "z"]).unwrap();
    let x = Word::generator(&ab3, 0).unwrap();
    let y = Word::generator(&ab3, 1).unwrap();
    let z = Word::generator(&ab3, 2).unwrap();
    let third = Presentation::with_partition(
        ab3.clone(),
        vec![x.commutator(&y).unwrap()],
        vec![x.commutator(&z).unwrap()],
    )
    .unwrap();

    // Extra intersection elements: commutators of conjugated relators lie in
    // both normal closures by construction; the searches below prove it.
    let mine = |p: &Presentation, conjugator: &Word| -> Vec<Word> {
        let r0 = &p.part_r().unwrap()[0];
        p.part_s()
            .unwrap()
            .iter()
            .flat_map(|s| {
                [
                    r0.commutator(s).unwrap(),
                    r0.conjugate_by(conjugator).unwrap().commutator(s).unwrap(),
                ]
            })
            .collect()
    };

    let corpus: Vec<(Presentation, Vec<Word>)> = vec![
        (triple.presentation(), {
            let mut v = mine(&triple.presentation(), &x);
            v.push(triple.mu());
            v
        }),
        (nested.presentation(), {
            let g = Word::generator(&nested.alphabet(), 0).unwrap();
            let mut v = mine(&nested.presentation(), &g);
            v.push(nested.mu());
            v
        }),
        (third.clone(), mine(&third, &y)),
    ];

    let mut ok = true;
    let mut mined = 0usize;
    for (p, candidates) in &corpus {
        let n = match certify(p, 8) {
            Ok(cert) => cert.degree(),
            Err(_) => {
                ok = false;
                continue;
            }
        };
        for mu in candidates {
            if mu.is_identity() {
                continue;
            }
            let mut proved = true;
            for part in [p.part_r().unwrap(), p.part_s().unwrap()] {
                let bounds = SearchBounds::defaults_for(mu, part);
                proved &= matches!(
                    search_membership(mu, part, &bounds),
                    MembershipEvidence::SearchProved(_)
                );
            }
            if !proved {
                ok = false;
                continue;
            }
            mined += 1;
            match lcs_weight(mu, 12) {
                WeightResult::Weight(w) => ok &= w >= n + 1,
                WeightResult::ExceedsBound(bound) => ok &= bound >= n + 1,
                WeightResult::Identity => {}
            }
        }
    }
    ok &= mined >= 10;
    report(4, ok);
}

#[test]
fn criterion_5_negative_controls() {
    let ab = Alphabet::new(vec!["x", "y"]).unwrap();
    let x = Word::generator(&ab, 0).unwrap();
    let y = Word::generator(&ab, 1).unwrap();
    let y2 = Word::generator_pow(&ab, 1, BigInt::from(2)).unwrap();

    let dependent = Presentation::with_partition(
        ab.clone(),
        vec![x.commutator(&y).unwrap()],
        vec![x.commutator(&y2).unwrap()],
    )
    .unwrap();
    let unequal = Presentation::with_partition(
        ab.clone(),
        vec![x.clone()],
        vec![x.commutator(&y).unwrap()],
    )
    .unwrap();

    let ok = matches!(certify(&dependent, 8), Err(CertificationFailure::Dependent { .. }))
        && matches!(certify(&unequal, 8), Err(CertificationFailure::UnequalWeights { .. }));
    report(5, ok);
}

fn random_word(rng: &mut ChaCha8Rng, ab: &Alphabet, max_letters: usize) -> Word {
    let len = rng.gen_range(0..=max_letters);
    let syllables = (0..len).map(|_| {
        let gen = rng.gen_range(0..ab.rank());
        let exp: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
        Syllable::new(gen, exp)
    });
    Word::from_syllables(ab, syllables).unwrap()
}

#[test]
fn criterion_6_expansion_laws_on_random_pairs() {
    let names = ["x", "y", "z"];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut ok = true;

    for _ in 0..500 {
        let rank = rng.gen_range(1..=3);
        let ab = Alphabet::new(names[..rank].to_vec()).unwrap();
        let d = rng.gen_range(2..=5);
        let u = random_word(&mut rng, &ab, 12);
        let v = random_word(&mut rng, &ab, 12);
        let product = magnus_expand(&u.multiply(&v).unwrap(), d);
        ok &= product == magnus_expand(&u, d).mul(&magnus_expand(&v, d));
        ok &= magnus_expand(&u, d).mul(&magnus_expand(&u.invert(), d)).is_one();
    }

    for _ in 0..200 {
        let rank = rng.gen_range(2..=3);
        let ab = Alphabet::new(names[..rank].to_vec()).unwrap();
        let u = random_word(&mut rng, &ab, 8);
        let v = random_word(&mut rng, &ab, 8);
        let (Some(wu), Some(wv)) =
            (lcs_weight(&u, 6).finite(), lcs_weight(&v, 6).finite())
        else {
            continue;
        };
        let sum = wu + wv;
        match lcs_weight(&u.commutator(&v).unwrap(), sum.max(6)) {
            WeightResult::Weight(n) => ok &= n >= sum,
            // Bound was probed at or above the sum, so exceeding it is
            // consistent with superadditivity.
            WeightResult::ExceedsBound(_) | WeightResult::Identity => {}
        }
    }
    report(6, ok);
}

/// Independent necklace-count oracle: the number of Lyndon words of length n
/// over r letters is (1/n) * sum over d | n of mobius(d) * r^(n/d).
fn necklace_count(rank: usize, n: usize) -> usize {
    fn mobius(mut d: usize) -> i64 {
        let mut out = 1i64;
        let mut p = 2;
        while p * p <= d {
            if d % p == 0 {
                d /= p;
                if d % p == 0 {
                    return 0;
                }
                out = -out;
            }
            p += 1;
        }
        if d > 1 {
            out = -out;
        }
        out
    }
    let mut total = 0i64;
    for d in 1..=n {
        if n % d == 0 {
            total += mobius(d) * (rank as i64).pow((n / d) as u32);
        }
    }
    (total / n as i64) as usize
}

#[test]
fn criterion_7_lyndon_basis_sizes_match_the_necklace_oracle() {
    let mut ok = true;
    for rank in 1..=3 {
        for degree in 1..=6 {
            ok &= lyndon_words(rank, degree).len() == necklace_count(rank, degree);
        }
    }
    let rank2: Vec<usize> = (1..=6).map(|d| lyndon_words(2, d).len()).collect();
    ok &= rank2 == vec![2, 1, 2, 3, 6, 9];
    report(7, ok);
}

/// Fraction-free Gaussian elimination rank, written directly against the
/// entries rather than through the decomposition under test.
fn elimination_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> =
        (0..rows).map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                a[r][c] = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[test]
fn criterion_8_smith_form_on_random_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ok = true;
    for _ in 0..200 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let entries: Vec<Vec<BigInt>> = (0..rows)
            .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-20i64..=20))).collect())
            .collect();
        let m = IntMatrix::from_rows(rows, cols, entries);
        let snf = smith_normal_form(&m);
        ok &= snf.u.mul(&m).mul(&snf.v) == snf.diagonal_matrix(rows, cols);
        ok &= snf
            .invariant_factors
            .windows(2)
            .all(|pair| (&pair[1] % &pair[0]).is_zero());
        ok &= snf.invariant_factors.iter().all(|d| d > &BigInt::zero());
        ok &= snf.rank() == elimination_rank(&m);
    }
    report(8, ok);
}

#[test]
fn criterion_9_homology_of_reference_complexes() {
    let mut ok = true;

    let ab2 = Alphabet::new(vec!["x", "y"]).unwrap();
    let x = Word::generator(&ab2, 0).unwrap();
    let y = Word::generator(&ab2, 1).unwrap();
    let torus = Presentation::new(ab2.clone(), vec![x.commutator(&y).unwrap()]).unwrap();
    let h = torus.complex_homology();
    ok &= h.h1_torsion.is_empty() && h.h1_free_rank == 2 && h.h2_free_rank == 1;

    let ab1 = Alphabet::new(vec!["x"]).unwrap();
    let x2 = Word::generator_pow(&ab1, 0, BigInt::from(2)).unwrap();
    let projective = Presentation::new(ab1, vec![x2]).unwrap();
    let h = projective.complex_homology();
    ok &= h.h1_torsion == vec![BigInt::from(2)] && h.h1_free_rank == 0 && h.h2_free_rank == 0;

    let family = TripleCommutator { a: 1, b: 1, c: 1 };
    let p = family.presentation();
    let h = p.complex_homology();
    ok &= h.h1_torsion.is_empty() && h.h1_free_rank == 3 && h.h2_free_rank == 3;
    match certify(&p, 8) {
        Ok(cert) => match cockcroft_core::efficiency_report(&p, &cert) {
            Ok(eff) => ok &= eff.efficient && eff.deficiency == 0,
            Err(_) => ok = false,
        },
        Err(_) => ok = false,
    }
    report(9, ok);
}

// The power-witness constructors are exercised across the full parameter
// grid by the demos; this pins the small-exponent algebra the grid rests on.
#[test]
fn power_witnesses_cover_negative_exponents() {
    let ab = Alphabet::new(vec!["x", "y"]).unwrap();
    let x = Word::generator(&ab, 0).unwrap();
    let y = Word::generator(&ab, 1).unwrap();
    let relators = [x.commutator(&y).unwrap()];
    for e in -4i64..=4 {
        let target = x.commutator(&y.pow(&BigInt::from(e)).unwrap()).unwrap();
        let w = cockcroft_core::right_power_witness(0, &y, e).unwrap();
        assert!(check_witness(&target, &w, &relators).unwrap(), "right e={e}");
        let target = x.pow(&BigInt::from(e)).unwrap().commutator(&y).unwrap();
        let w = left_power_witness(0, &x, e).unwrap();
        assert!(check_witness(&target, &w, &relators).unwrap(), "left e={e}");
    }
}
