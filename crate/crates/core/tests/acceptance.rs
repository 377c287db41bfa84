//! Acceptance suite: every release criterion, one test each, with a
//! printed pass line per criterion. All comparisons are exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use std::time::Instant;

use num_bigint::BigInt;
use once_cell::sync::Lazy;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use grouplaw::curve::{CurveParams, Point};
use grouplaw::field::Prime;
use grouplaw::harness::{
    exhaustive_check, randomized_check, HarnessConfig, HarnessMode, PropertyId,
};
use grouplaw::ideal::CurveIdeal;
use grouplaw::poly::{Monomial, Poly};
use grouplaw::prover::{
    numeric::numeric_consistency, run_all, CheckStatus, LemmaId, VerificationReport,
};
use grouplaw::MPoly;

static REPORT: Lazy<VerificationReport> = Lazy::new(run_all);

fn check(id: LemmaId) -> &'static grouplaw::prover::CheckResult {
    REPORT
        .checks
        .iter()
        .find(|c| c.id == id)
        .expect("run_all covers every id")
}

fn assert_zero_residual(id: LemmaId) {
    let c = check(id);
    assert_eq!(c.status, CheckStatus::Pass, "{id} must pass");
    assert!(c.residual.is_zero(), "{id} residual must be zero");
    assert_eq!(c.residual.to_string(), "0");
}

#[test]
fn criterion_01_symbolic_associativity_replay() {
    let c = check(LemmaId::Assoc3Generic);
    assert_eq!(c.status, CheckStatus::Pass);
    assert!(c.residual.is_zero());
    assert!(
        c.elapsed_millis <= 600_000,
        "ten-minute budget exceeded: {} ms",
        c.elapsed_millis
    );
    println!(
        "criterion 1: PASS - three-point associativity reduces both coordinates to zero ({} ms, peak {} terms)",
        c.elapsed_millis, c.peak_term_count
    );
}

#[test]
fn criterion_02_doubling_associativity() {
    assert_zero_residual(LemmaId::AssocDouble);
    assert_zero_residual(LemmaId::AssocQuad);
    println!("criterion 2: PASS - doubling and double-double associativity residuals are zero");
}

#[test]
fn criterion_03_auxiliary_identities() {
    assert_zero_residual(LemmaId::NegDistributes);
    assert_zero_residual(LemmaId::DoubleMinusA);
    assert_zero_residual(LemmaId::AddMinusB);
    assert_zero_residual(LemmaId::PmbSimplification);
    println!("criterion 3: PASS - negation, double-minus, add-minus, and slope-square residuals are zero");
}

#[test]
fn criterion_04_quartic_and_factorization() {
    // both displayed forms verify cleanly against the addition formulas,
    // so the documented-diff fallback is never needed here
    assert_zero_residual(LemmaId::Claim5Square);
    assert_zero_residual(LemmaId::Claim5Factorization);
    println!("criterion 4: PASS - displayed quartic and its factorization hold modulo the ideal");
}

#[test]
fn criterion_05_transcription_audit() {
    let c = check(LemmaId::TranscriptionAudit);
    assert_ne!(
        c.status,
        CheckStatus::Fail,
        "audit must complete with pass or flagged"
    );
    assert!(!c.diffs.is_empty(), "audit must render residual diffs");
    if c.status == CheckStatus::Flagged {
        assert!(!c.residual.is_zero());
        assert!(
            c.diffs.iter().any(|d| d.contains("printed residual")),
            "flagged audit must render the printed residuals"
        );
        assert!(
            c.diffs
                .iter()
                .any(|d| d.contains("printed-minus-derived delta")),
            "flagged audit must render the raw deltas"
        );
    }
    println!(
        "criterion 5: PASS - transcription audit completed as `{}` with {} diff lines",
        c.status.as_str(),
        c.diffs.len()
    );
}

#[test]
fn criterion_06_exhaustive_sweep() {
    let start = Instant::now();
    let report = exhaustive_check(13).expect("within guard");
    let elapsed = start.elapsed();
    assert!(
        report.passed(),
        "sweep failures: {:?}",
        report.first_counterexample
    );
    // primes 5, 7, 11, 13 carry 20 + 42 + 110 + 156 nonsingular curves
    assert_eq!(report.curves, 328);
    for entry in &report.properties {
        assert_eq!(entry.failures, 0, "{:?}", entry.property);
    }
    assert!(report.stats(PropertyId::Associativity).checked > 500_000);
    assert!(
        elapsed.as_secs() <= 600,
        "ten-minute budget exceeded: {elapsed:?}"
    );
    println!(
        "criterion 6: PASS - exhaustive sweep over 328 curves, {} associativity triples, 0 failures ({} ms)",
        report.stats(PropertyId::Associativity).checked,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_07_fixed_curve_oracle() {
    let curve = CurveParams::new(Prime::new(7).unwrap(), 1, 1).unwrap();
    let points = curve.enumerate_points().unwrap();
    let o = Point::Infinity;
    let p1 = curve.point(0, 1).unwrap();
    let p2 = curve.point(0, 6).unwrap();
    let p3 = curve.point(2, 2).unwrap();
    let p4 = curve.point(2, 5).unwrap();
    assert_eq!(points, vec![o, p1, p2, p3, p4]);

    // cyclic of order 5: every affine point generates the whole group
    for g in [p1, p2, p3, p4] {
        let mut seen = std::collections::HashSet::new();
        let mut acc = Point::Infinity;
        for _ in 0..5 {
            acc = acc.add(&g).unwrap();
            seen.insert(acc.to_string());
        }
        assert_eq!(acc, Point::Infinity);
        assert_eq!(seen.len(), 5);
    }
    assert_eq!(p1.scalar_mul(2), p4); // 2*(0,1) = (2,5)
    assert_eq!(p1.scalar_mul(5), o);

    // frozen 5x5 table, computed by an independent implementation of the
    // chord-and-tangent rules (indices into the enumerated point order)
    let table: [[usize; 5]; 5] = [
        [0, 1, 2, 3, 4],
        [1, 4, 0, 2, 3],
        [2, 0, 3, 4, 1],
        [3, 2, 4, 1, 0],
        [4, 3, 1, 0, 2],
    ];
    for (i, lhs) in points.iter().enumerate() {
        for (j, rhs) in points.iter().enumerate() {
            assert_eq!(
                lhs.add(rhs).unwrap(),
                points[table[i][j]],
                "table mismatch at ({i}, {j})"
            );
        }
    }
    println!("criterion 7: PASS - p=7,a=1,b=1 has the frozen 5-element cyclic table");
}

#[test]
fn criterion_08_randomized_run() {
    let config = HarnessConfig {
        mode: HarnessMode::Randomized { prime_bits: 31 },
        trials: 1000,
        seed: 42,
    };
    let start = Instant::now();
    let r1 = randomized_check(&config).unwrap();
    let elapsed = start.elapsed();
    let r2 = randomized_check(&config).unwrap();
    assert!(r1.passed(), "failures: {:?}", r1.first_counterexample);
    let s1 = serde_json::to_string(&r1).unwrap();
    let s2 = serde_json::to_string(&r2).unwrap();
    assert_eq!(s1, s2, "reports must be byte-identical under a fixed seed");
    assert!(
        elapsed.as_secs() <= 60,
        "one-minute budget exceeded: {elapsed:?}"
    );
    // the injected quarter of trials must reach the correlated cases
    assert!(r1.stats(PropertyId::Cancellation).checked > 0);
    assert!(r1.stats(PropertyId::NegatedSumConstraint).checked > 0);
    assert!(r1.branch_coverage.generic > 0);
    assert!(r1.branch_coverage.repeated_operand > 0);
    assert!(r1.branch_coverage.neutral_involved > 0);
    println!(
        "criterion 8: PASS - 1000 randomized trials at 31-bit primes, 0 failures, byte-identical rerun ({} ms)",
        elapsed.as_millis()
    );
}

fn random_poly(rng: &mut StdRng, terms: usize, max_exp: u32) -> MPoly {
    Poly::from_terms((0..terms).map(|_| {
        let exps: [u32; 8] = std::array::from_fn(|_| rng.gen_range(0..=max_exp));
        (
            Monomial::from_exponents(exps).unwrap(),
            BigInt::from(rng.gen_range(-50i64..=50)),
        )
    }))
}

#[test]
fn criterion_09_polynomial_engine_properties() {
    let ideal: CurveIdeal<BigInt> = CurveIdeal::new();
    let mut rng = StdRng::seed_from_u64(0x5EED);

    // idempotence, linearity, multiplicativity-up-to-reduction
    for _ in 0..100 {
        let f = random_poly(&mut rng, 10, 4);
        let g = random_poly(&mut rng, 10, 4);
        let c = BigInt::from(rng.gen_range(-9i64..=9));
        let nf_f = ideal.normal_form(&f);
        assert_eq!(ideal.normal_form(&nf_f), nf_f);
        assert_eq!(
            ideal.normal_form(&(&f + &g)),
            &nf_f + &ideal.normal_form(&g)
        );
        let scaled = f
            .iter()
            .map(|(m, k)| (*m, k.clone() * &c))
            .collect::<Vec<_>>();
        assert_eq!(
            ideal.normal_form(&Poly::from_terms(scaled)),
            Poly::from_terms(
                nf_f.iter()
                    .map(|(m, k)| (*m, k.clone() * &c))
                    .collect::<Vec<_>>()
            )
        );
        assert_eq!(
            ideal.normal_form(&f.mul(&g)),
            ideal.normal_form(&ideal.normal_form(&f).mul(&ideal.normal_form(&g)))
        );
        assert_eq!(ideal.mul_reduced(&f, &g), ideal.normal_form(&f.mul(&g)));
    }

    // reduction-order independence across 100 randomized schedules
    for _ in 0..100 {
        let f = random_poly(&mut rng, 6, 3);
        let expected = ideal.normal_form(&f);
        assert_eq!(ideal.normal_form_randomized(&f, &mut rng), expected);
    }

    // membership soundness on 100 random generator combinations
    for _ in 0..100 {
        let combo = (0..3)
            .map(|i| random_poly(&mut rng, 6, 3).mul(&ideal.generators()[i]))
            .fold(Poly::zero(), |acc, t| &acc + &t);
        assert!(ideal.contains(&combo));
    }
    println!(
        "criterion 9: PASS - normal-form algebra and membership soundness, 300 randomized cases"
    );
}

#[test]
fn criterion_10_numeric_symbolic_consistency() {
    for id in LemmaId::ALL {
        let outcome = numeric_consistency(id, 50, 0xA11CE ^ id as u64);
        assert_eq!(outcome.configurations, 50, "{id}");
        assert_eq!(outcome.failures, 0, "{id}: {:?}", outcome.counterexample);
        if id == LemmaId::TranscriptionAudit {
            // flagged displays must be numerically distinguishable too
            assert!(outcome.printed_nonzero > 0);
        }
    }
    println!(
        "criterion 10: PASS - 50 admissible configurations per check evaluate every cleared difference to zero"
    );
}
