//! Acceptance suite. One test per criterion; each prints a `[PASS]` line
//! (visible with `--nocapture`) including its runtime where a budget
//! applies. Expected values come from independent oracles computed here:
//! integer recurrences, hand-derived table cells, Pascal binomials, and
//! seeded-recurrence regeneration of the incomplete families.

use std::time::{Duration, Instant};

use incpoly_cli::opts::TableKind;
use incpoly_cli::{table, verifycmd};
use incpoly_core::series::{
    compare_gf_to_sequence, gf_fib_incomplete_closed, gf_lucas_incomplete_closed,
    solve_nonhomogeneous_gf, GfComparison, LucasGfVariant, PolySeries,
};
use incpoly_core::{
    fib, fib_explicit, fib_incomplete, fib_incomplete_extended, lucas, lucas_explicit,
    lucas_incomplete, lucas_incomplete_extended, FamilyParams, Polynomial,
};
use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(text: &str) -> FamilyParams {
    FamilyParams::new(Polynomial::parse(text).unwrap())
}

fn report(criterion: &str, elapsed: Option<Duration>) {
    match elapsed {
        Some(d) => println!("[PASS] {criterion} ({d:.2?})"),
        None => println!("[PASS] {criterion}"),
    }
}

/// The incomplete Fibonacci table for h(x) = x, rows n = 1..10: a triangle
/// of 30 nonempty cells.
const TABLE_FIB: &[(u64, &[&str])] = &[
    (1, &["1"]),
    (2, &["h"]),
    (3, &["h^2", "h^2 + 1"]),
    (4, &["h^3", "h^3 + 2h"]),
    (5, &["h^4", "h^4 + 3h^2", "h^4 + 3h^2 + 1"]),
    (6, &["h^5", "h^5 + 4h^3", "h^5 + 4h^3 + 3h"]),
    (
        7,
        &[
            "h^6",
            "h^6 + 5h^4",
            "h^6 + 5h^4 + 6h^2",
            "h^6 + 5h^4 + 6h^2 + 1",
        ],
    ),
    (
        8,
        &[
            "h^7",
            "h^7 + 6h^5",
            "h^7 + 6h^5 + 10h^3",
            "h^7 + 6h^5 + 10h^3 + 4h",
        ],
    ),
    (
        9,
        &[
            "h^8",
            "h^8 + 7h^6",
            "h^8 + 7h^6 + 15h^4",
            "h^8 + 7h^6 + 15h^4 + 10h^2",
            "h^8 + 7h^6 + 15h^4 + 10h^2 + 1",
        ],
    ),
    (
        10,
        &[
            "h^9",
            "h^9 + 8h^7",
            "h^9 + 8h^7 + 21h^5",
            "h^9 + 8h^7 + 21h^5 + 20h^3",
            "h^9 + 8h^7 + 21h^5 + 20h^3 + 5h",
        ],
    ),
];

/// The incomplete Lucas table for h(x) = x, rows n = 1..9 (29 cells).
const TABLE_LUCAS: &[(u64, &[&str])] = &[
    (1, &["h"]),
    (2, &["h^2", "h^2 + 2"]),
    (3, &["h^3", "h^3 + 3h"]),
    (4, &["h^4", "h^4 + 4h^2", "h^4 + 4h^2 + 2"]),
    (5, &["h^5", "h^5 + 5h^3", "h^5 + 5h^3 + 5h"]),
    (
        6,
        &[
            "h^6",
            "h^6 + 6h^4",
            "h^6 + 6h^4 + 9h^2",
            "h^6 + 6h^4 + 9h^2 + 2",
        ],
    ),
    (
        7,
        &[
            "h^7",
            "h^7 + 7h^5",
            "h^7 + 7h^5 + 14h^3",
            "h^7 + 7h^5 + 14h^3 + 7h",
        ],
    ),
    (
        8,
        &[
            "h^8",
            "h^8 + 8h^6",
            "h^8 + 8h^6 + 20h^4",
            "h^8 + 8h^6 + 20h^4 + 16h^2",
            "h^8 + 8h^6 + 20h^4 + 16h^2 + 2",
        ],
    ),
    (
        9,
        &[
            "h^9",
            "h^9 + 9h^7",
            "h^9 + 9h^7 + 27h^5",
            "h^9 + 9h^7 + 27h^5 + 30h^3",
            "h^9 + 9h^7 + 27h^5 + 30h^3 + 9h",
        ],
    ),
];

#[test]
fn criterion_1_golden_tables() {
    let start = Instant::now();
    let x = params("x");
    let mut cells_checked = 0usize;
    for (kind, golden, n_max) in [
        (TableKind::Fib, TABLE_FIB, 10),
        (TableKind::Lucas, TABLE_LUCAS, 9),
    ] {
        let model = table::build_table(kind, &x, n_max, false);
        assert_eq!(model.rows.len(), golden.len());
        for (row, (n, expected)) in model.rows.iter().zip(golden) {
            assert_eq!(row.n, *n);
            assert_eq!(row.cells.len(), expected.len(), "row n={n} width");
            for (cell, expect) in row.cells.iter().zip(*expected) {
                assert_eq!(model.cell_text(cell), *expect, "cell at n={n}");
                cells_checked += 1;
            }
        }
        // the rendered markdown carries every cell verbatim
        let md = model.render(incpoly_cli::Format::Markdown);
        for (_, expected) in golden {
            for cell in *expected {
                assert!(md.contains(&format!(" {cell} ")), "markdown missing {cell}");
            }
        }
    }
    assert_eq!(cells_checked, 30 + 29);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    report(
        "criterion 1: golden tables reproduced cell-for-cell (30 + 29 nonempty cells)",
        Some(elapsed),
    );
}

#[test]
fn criterion_2_integer_specializations() {
    // independent integer oracles
    let mut fib_n = Vec::new();
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..=30 {
        fib_n.push(a);
        (a, b) = (b, a + b);
    }
    let mut lucas_n = Vec::new();
    let (mut a, mut b) = (2u128, 1u128);
    for _ in 0..=30 {
        lucas_n.push(a);
        (a, b) = (b, a + b);
    }
    let mut pell = Vec::new();
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..=15 {
        pell.push(a);
        (a, b) = (b, 2 * b + a);
    }
    assert_eq!(&pell[1..6], &[1, 2, 5, 12, 29]);

    let one = params("1");
    for n in 1..=30u64 {
        let f = fib_incomplete(&one, n, (n - 1) / 2).unwrap();
        assert_eq!(f, Polynomial::constant(fib_n[n as usize] as i64), "F_{n}");
        let l = lucas_incomplete(&one, n, n / 2).unwrap();
        assert_eq!(l, Polynomial::constant(lucas_n[n as usize] as i64), "L_{n}");
    }
    let two = params("2");
    for n in 1..=15u64 {
        assert_eq!(
            fib(&two, n),
            Polynomial::constant(pell[n as usize] as i64),
            "Pell_{n}"
        );
    }
    report(
        "criterion 2: h=1 recovers Fibonacci/Lucas numbers (n <= 30), h=2 recovers Pell numbers (n <= 15)",
        None,
    );
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let samples: Vec<FamilyParams> = ["1", "2", "x", "x^2+1", "3x"]
        .iter()
        .map(|h| params(h))
        .collect();
    let model = verifycmd::build_verify(&samples, 30);
    assert_eq!(model.reports.len(), 18 * 5);
    let mut falsified = Vec::new();
    let mut counterexamples = 0usize;
    for r in &model.reports {
        counterexamples += r.counterexamples.len();
        if !r.passed() {
            falsified.push(format!("{} at h = {}", r.identity.tag(), r.h_text));
        }
    }
    assert!(falsified.is_empty(), "falsified: {falsified:?}");
    assert_eq!(counterexamples, 0);
    let points = model.total_points();
    assert!(points >= 10_000, "only {points} grid points");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    report(
        &format!(
            "criterion 3: all 18 identities all-pass over 5 h-samples, n <= 30 ({points} grid points, 0 counterexamples)"
        ),
        Some(elapsed),
    );
}

/// Pascal-triangle binomial for the seeded-recurrence oracle.
fn binom_oracle(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1)];
        for i in 1..row.len() {
            next.push(&row[i - 1] + &row[i]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row[k as usize].clone()
}

fn lucas_coeff_oracle(m: u64, l: u64) -> BigInt {
    if m == 0 && l == 0 {
        return BigInt::from(2);
    }
    let b = binom_oracle((m - l) as i64, l as i64);
    if b.is_zero() {
        return b;
    }
    BigInt::from(m) * b / BigInt::from(m - l)
}

#[test]
fn criterion_4_explicit_vs_recurrence_and_seeded_iteration() {
    let samples = ["1", "2", "x", "x^2+1", "3x"];
    for h in samples {
        let p = params(h);
        for n in 1..=30 {
            assert_eq!(fib_explicit(&p, n), fib(&p, n), "fib h={h} n={n}");
            assert_eq!(lucas_explicit(&p, n), lucas(&p, n), "lucas h={h} n={n}");
        }
    }
    // iterating the nonhomogeneous recurrences from their boundary seeds
    // regenerates every definitional value with n <= 30
    for h in samples {
        let p = params(h);
        let hp = p.h().clone();
        for l in 0..=14u64 {
            if 2 * l + 1 > 30 {
                break;
            }
            let mut prev2 = fib(&p, 2 * l + 1);
            let mut prev = fib(&p, 2 * l + 2);
            assert_eq!(prev2, fib_incomplete(&p, 2 * l + 1, l).unwrap());
            if 2 * l + 2 <= 30 {
                assert_eq!(prev, fib_incomplete(&p, 2 * l + 2, l).unwrap());
            }
            for n in 2 * l + 3..=30 {
                let forcing = hp
                    .pow(n - 3 - 2 * l)
                    .scale(&binom_oracle((n - 3 - l) as i64, l as i64));
                let next = &(&hp * &prev) + &(&prev2 - &forcing);
                assert_eq!(
                    next,
                    fib_incomplete(&p, n, l).unwrap(),
                    "fib h={h} n={n} l={l}"
                );
                prev2 = prev;
                prev = next;
            }
        }
        for l in 0..=15u64 {
            if 2 * l > 30 {
                break;
            }
            let mut prev2 = lucas(&p, 2 * l);
            let mut prev = lucas(&p, 2 * l + 1);
            assert_eq!(prev2, lucas_incomplete(&p, 2 * l, l).unwrap());
            if 2 * l < 30 {
                assert_eq!(prev, lucas_incomplete(&p, 2 * l + 1, l).unwrap());
            }
            for n in 2 * l + 2..=30 {
                let m = n - 2;
                let forcing = hp.pow(m - 2 * l).scale(&lucas_coeff_oracle(m, l));
                let next = &(&hp * &prev) + &(&prev2 - &forcing);
                assert_eq!(
                    next,
                    lucas_incomplete(&p, n, l).unwrap(),
                    "lucas h={h} n={n} l={l}"
                );
                prev2 = prev;
                prev = next;
            }
        }
    }
    report(
        "criterion 4: explicit formulas match recurrences (n <= 30); seeded nonhomogeneous iteration regenerates both incomplete families",
        None,
    );
}

#[test]
fn criterion_5_fib_generating_function_reproduction() {
    let start = Instant::now();
    for h in ["1", "2", "x", "x^2+1"] {
        let p = params(h);
        for l in 0..=5u64 {
            let order = (2 * l + 26) as usize;
            let closed = gf_fib_incomplete_closed(&p, l, order);
            let cmp = compare_gf_to_sequence(
                &closed,
                |n| fib_incomplete_extended(&p, n as i64, l as i64),
                order,
            );
            assert!(cmp.all_match(), "h={h} l={l}: {cmp:?}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    report(
        "criterion 5: incomplete-Fibonacci closed form matches the definition sequence (4 h-samples, l <= 5, order 2l+26)",
        Some(elapsed),
    );
}

#[test]
fn criterion_6_lucas_generating_function_adjudication() {
    let mut records = Vec::new();
    for h in ["1", "2", "x", "x^2+1"] {
        let p = params(h);
        for l in 0..=5u64 {
            let order = (2 * l + 26) as usize;
            let direct = |n: u64| lucas_incomplete_extended(&p, n as i64, l as i64);
            let printed = gf_lucas_incomplete_closed(&p, l, order, LucasGfVariant::AsPrinted);
            let candidate =
                gf_lucas_incomplete_closed(&p, l, order, LucasGfVariant::CorrectedCandidate);
            let printed_cmp = compare_gf_to_sequence(&printed, direct, order);
            let candidate_cmp = compare_gf_to_sequence(&candidate, direct, order);
            if h == "1" {
                // (a) the two variants coincide and both match
                assert_eq!(printed, candidate, "variants differ at h=1, l={l}");
                assert!(printed_cmp.all_match() && candidate_cmp.all_match());
            } else {
                // (b) record which variant matches; the printed numerator is
                // not reproducible away from h = 1, the candidate is
                assert!(candidate_cmp.all_match(), "candidate h={h} l={l}");
                assert!(
                    !printed_cmp.all_match(),
                    "printed unexpectedly matched h={h} l={l}"
                );
            }
            records.push(format!(
                "h={h} l={l}: printed={} candidate={}",
                if printed_cmp.all_match() {
                    "match"
                } else {
                    "MISMATCH"
                },
                if candidate_cmp.all_match() {
                    "match"
                } else {
                    "MISMATCH"
                },
            ));
        }
    }
    // hand-verified case: l = 0, h = x, printed form first mismatch at n <= 3
    let x = params("x");
    let printed = gf_lucas_incomplete_closed(&x, 0, 26, LucasGfVariant::AsPrinted);
    match compare_gf_to_sequence(&printed, |n| lucas_incomplete_extended(&x, n as i64, 0), 26) {
        GfComparison::Mismatch { index, .. } => assert!(index <= 3, "first mismatch at {index}"),
        GfComparison::AllMatch => panic!("printed form matched at h=x"),
    }
    for line in &records {
        println!("  {line}");
    }
    report(
        "criterion 6: incomplete-Lucas closed form adjudicated (printed variant matches only at h=1; corrected candidate matches everywhere)",
        None,
    );
}

#[test]
fn criterion_7_nonhomogeneous_gf_solver_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1797);
    let random_poly = |rng: &mut ChaCha8Rng| {
        let degree = rng.random_range(0..=2usize);
        Polynomial::new(
            (0..=degree)
                .map(|_| BigInt::from(rng.random_range(-3i64..=3)))
                .collect(),
        )
    };
    for instance in 0..50 {
        let a = random_poly(&mut rng);
        let b = random_poly(&mut rng);
        let s0 = random_poly(&mut rng);
        let s1 = random_poly(&mut rng);
        let forcing: Vec<Polynomial> = (0..=20).map(|_| random_poly(&mut rng)).collect();
        let g = PolySeries::new(forcing.clone());
        let u = solve_nonhomogeneous_gf(&a, &b, &g, &s0, &s1, &forcing[0], &forcing[1]);
        assert_eq!(u.coeff(0), &s0, "instance {instance}: s0");
        assert_eq!(u.coeff(1), &s1, "instance {instance}: s1");
        for (n, r) in forcing.iter().enumerate().skip(2) {
            let expect = &(&a * u.coeff(n - 1)) + &(&(&b * u.coeff(n - 2)) + r);
            assert_eq!(u.coeff(n), &expect, "instance {instance}: n={n}");
        }
    }
    report(
        "criterion 7: recurrence-to-GF solver satisfies the defining recurrence on 50 randomized instances to order 20",
        None,
    );
}

#[test]
fn criterion_8_parser_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for case in 0..500 {
        let degree = rng.random_range(0..=12usize);
        let coeffs: Vec<BigInt> = (0..=degree)
            .map(|_| {
                if rng.random_range(0..4) == 0 {
                    return BigInt::zero();
                }
                let mut bytes = [0u8; 16];
                rng.fill(&mut bytes);
                let sign = if rng.random_range(0..2) == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                BigInt::from_bytes_le(sign, &bytes)
            })
            .collect();
        let poly = Polynomial::new(coeffs);
        let text = poly.to_text();
        let parsed = Polynomial::parse(&text)
            .unwrap_or_else(|e| panic!("case {case}: cannot re-parse {text:?}: {e}"));
        assert_eq!(parsed, poly, "case {case}: round trip of {text:?}");
    }
    report(
        "criterion 8: parse . format is the identity on 500 random canonical polynomials (degree <= 12, coefficients up to 2^128)",
        None,
    );
}
