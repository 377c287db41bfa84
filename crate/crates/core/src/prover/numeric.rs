//! Numeric cross-checks of the symbolic comparisons.
//!
//! Every identity the prover certifies by normal form must also evaluate
//! to zero at concrete on-curve configurations satisfying the check's
//! hypotheses. Configurations are sampled over random 31-bit primes and
//! rejected until every recorded denominator factor is nonzero, which is
//! exactly the hypothesis set of the generic case.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{checks, transcript, LemmaId};
use crate::harness::{random_affine_point, random_curve, random_prime};
use crate::ideal::CurveIdeal;
use crate::{MPoly, MRat};

const PRIME_BITS: u32 = 31;
const MAX_REJECTIONS_PER_CONFIG: u64 = 10_000;

/// Outcome of sampling one check at many admissible configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub id: LemmaId,
    /// Admissible configurations evaluated.
    pub configurations: u64,
    /// Configurations where a supposedly-zero cleared difference was
    /// nonzero. Must be zero.
    pub failures: u64,
    /// Samples discarded because a denominator factor vanished.
    pub rejected: u64,
    /// Audit only: configurations where some printed display evaluated
    /// nonzero (evidence the display is not an identity).
    pub printed_nonzero: u64,
    /// First failing configuration, if any.
    pub counterexample: Option<String>,
}

struct Config {
    assignment: [u64; 8],
    p: u64,
}

fn sample_on_curve<R: Rng>(rng: &mut R) -> Config {
    let p = random_prime(PRIME_BITS, rng).expect("valid bit size");
    let curve = random_curve(p, rng);
    let mut coords = [0u64; 6];
    for slot in 0..3 {
        let point = random_affine_point(&curve, rng);
        let (x, y) = point.coordinates().expect("affine by construction");
        coords[2 * slot] = x.residue();
        coords[2 * slot + 1] = y.residue();
    }
    Config {
        assignment: [
            coords[0],
            coords[1],
            coords[2],
            coords[3],
            coords[4],
            coords[5],
            curve.a().residue(),
            curve.b().residue(),
        ],
        p: p.value(),
    }
}

fn admissible(config: &Config, witnesses: &[MPoly], pairs: &[(MRat, MRat)]) -> bool {
    witnesses
        .iter()
        .all(|w| w.eval_mod(&config.assignment, config.p) != 0)
        && pairs.iter().all(|(l, r)| {
            l.den().eval_mod(&config.assignment, config.p) != 0
                && r.den().eval_mod(&config.assignment, config.p) != 0
        })
}

fn cleared_difference_at(pair: &(MRat, MRat), config: &Config) -> u64 {
    let (l, r) = pair;
    let p = config.p;
    let a = l.num().eval_mod(&config.assignment, p) as u128
        * r.den().eval_mod(&config.assignment, p) as u128
        % p as u128;
    let b = r.num().eval_mod(&config.assignment, p) as u128
        * l.den().eval_mod(&config.assignment, p) as u128
        % p as u128;
    ((a + p as u128 - b) % p as u128) as u64
}

/// Samples `trials` admissible configurations and evaluates the check's
/// cleared differences at each.
pub fn numeric_consistency(id: LemmaId, trials: u64, seed: u64) -> ConsistencyReport {
    let ideal: CurveIdeal<BigInt> = CurveIdeal::new();
    let (pairs, witnesses, printed): (Vec<(MRat, MRat)>, Vec<MPoly>, Vec<MPoly>) =
        if id == LemmaId::TranscriptionAudit {
            // the derived identities are unconditional; the printed
            // displays are evaluated separately as evidence
            let pairs = vec![
                (
                    MRat::from_poly(transcript::derived_x_identity()),
                    MRat::int(0),
                ),
                (
                    MRat::from_poly(transcript::derived_y_identity()),
                    MRat::int(0),
                ),
            ];
            let printed = vec![
                transcript::printed_x_display(),
                transcript::printed_y_display(),
            ];
            (pairs, Vec::new(), printed)
        } else {
            let cmp = checks::build_comparison(id, &ideal);
            (cmp.pairs, cmp.witnesses, Vec::new())
        };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ConsistencyReport {
        id,
        configurations: 0,
        failures: 0,
        rejected: 0,
        printed_nonzero: 0,
        counterexample: None,
    };
    for _ in 0..trials {
        let config = loop {
            let candidate = sample_on_curve(&mut rng);
            if admissible(&candidate, &witnesses, &pairs) {
                break candidate;
            }
            report.rejected += 1;
            assert!(
                report.rejected < MAX_REJECTIONS_PER_CONFIG * trials.max(1),
                "admissible configurations should be abundant at 31-bit primes"
            );
        };
        report.configurations += 1;
        for (i, pair) in pairs.iter().enumerate() {
            let value = cleared_difference_at(pair, &config);
            if value != 0 {
                report.failures += 1;
                if report.counterexample.is_none() {
                    report.counterexample = Some(format!(
                        "{id}: pair {i} evaluates to {value} at p={}, assignment={:?}",
                        config.p, config.assignment
                    ));
                }
            }
        }
        if printed
            .iter()
            .any(|d| d.eval_mod(&config.assignment, config.p) != 0)
        {
            report.printed_nonzero += 1;
        }
    }
    report
}
