//! Construction of each symbolic check: which points are composed, with
//! which slopes, and which rational expressions must agree modulo the
//! curve ideal.

use std::time::Instant;

use num_bigint::BigInt;

use super::transcript;
use super::{symbolic_add_with, CheckResult, CheckStatus, LemmaId, ReducedEngine, Slope, SymPoint};
use crate::ideal::CurveIdeal;
use crate::poly::Var;
use crate::{MPoly, MRat};

/// A symbolic check, ready to be decided or numerically sampled: pairs of
/// rational expressions that must agree modulo the ideal, plus the
/// denominator factors whose nonvanishing the comparison presupposes.
pub(crate) struct Comparison {
    pub pairs: Vec<(MRat, MRat)>,
    pub witnesses: Vec<MPoly>,
    pub peak: usize,
}

fn coordinate_pairs(lhs: &SymPoint, rhs: &SymPoint) -> Vec<(MRat, MRat)> {
    vec![
        (lhs.x.clone(), rhs.x.clone()),
        (lhs.y.clone(), rhs.y.clone()),
    ]
}

/// Builds the comparison for every check except the transcription audit.
pub(crate) fn build_comparison(id: LemmaId, ideal: &CurveIdeal<BigInt>) -> Comparison {
    let mut engine = ReducedEngine::new(ideal);
    let a = SymPoint::generic_a();
    let b = SymPoint::generic_b();
    let c = SymPoint::generic_c();
    let sadd = |e: &mut ReducedEngine, p: &SymPoint, q: &SymPoint, s: Slope| {
        symbolic_add_with(e, p, q, s).expect("generic points have nonzero slope denominators")
    };
    let pairs = match id {
        LemmaId::Assoc3Generic => {
            let ab = sadd(&mut engine, &a, &b, Slope::Chord);
            let ab_c = sadd(&mut engine, &ab, &c, Slope::Chord);
            let bc = sadd(&mut engine, &b, &c, Slope::Chord);
            let a_bc = sadd(&mut engine, &a, &bc, Slope::Chord);
            coordinate_pairs(&ab_c, &a_bc)
        }
        LemmaId::AssocDouble => {
            let aa = sadd(&mut engine, &a, &a, Slope::Tangent);
            let aa_b = sadd(&mut engine, &aa, &b, Slope::Chord);
            let ab = sadd(&mut engine, &a, &b, Slope::Chord);
            let a_ab = sadd(&mut engine, &a, &ab, Slope::Chord);
            coordinate_pairs(&aa_b, &a_ab)
        }
        LemmaId::AssocQuad => {
            let aa = sadd(&mut engine, &a, &a, Slope::Tangent);
            let lhs = sadd(&mut engine, &aa, &aa, Slope::Tangent);
            let aaa = sadd(&mut engine, &a, &aa, Slope::Chord);
            let rhs = sadd(&mut engine, &a, &aaa, Slope::Chord);
            let pairs = coordinate_pairs(&lhs, &rhs);
            debug_assert!(pairs.iter().all(|(l, r)| {
                [l.num(), l.den(), r.num(), r.den()].iter().all(|p| {
                    p.vars_used()
                        .iter()
                        .all(|v| matches!(v, Var::Xa | Var::Ya | Var::A | Var::B))
                })
            }));
            pairs
        }
        LemmaId::NegDistributes => {
            let lhs = sadd(&mut engine, &a.negate(), &b.negate(), Slope::Chord);
            let rhs = sadd(&mut engine, &a, &b, Slope::Chord).negate();
            coordinate_pairs(&lhs, &rhs)
        }
        LemmaId::DoubleMinusA => {
            let aa = sadd(&mut engine, &a, &a, Slope::Tangent);
            let lhs = sadd(&mut engine, &aa, &a.negate(), Slope::Chord);
            coordinate_pairs(&lhs, &a)
        }
        LemmaId::AddMinusB => {
            let ab = sadd(&mut engine, &a, &b, Slope::Chord);
            let lhs = sadd(&mut engine, &ab, &b.negate(), Slope::Chord);
            coordinate_pairs(&lhs, &a)
        }
        LemmaId::PmbSimplification => {
            vec![(
                MRat::from_poly(transcript::palindrome_cancellation()),
                MRat::int(0),
            )]
        }
        LemmaId::Claim5Square => {
            vec![(
                MRat::from_poly(transcript::quartic_square_form()),
                MRat::from_poly(transcript::quartic_constraint()),
            )]
        }
        LemmaId::Claim5Factorization => {
            vec![(
                MRat::from_poly(transcript::quartic_constraint()),
                MRat::from_poly(transcript::quartic_factored_form()),
            )]
        }
        LemmaId::TranscriptionAudit => {
            unreachable!("the audit does not reduce to pair comparisons")
        }
    };
    let (witnesses, mut peak) = engine.into_parts();
    for (l, r) in &pairs {
        peak = peak
            .max(l.num().len())
            .max(l.den().len())
            .max(r.num().len())
            .max(r.den().len());
    }
    Comparison {
        pairs,
        witnesses,
        peak,
    }
}

/// The transcription audit: reduce the printed cleared displays and the
/// re-derived identities, and render the residuals plus the raw deltas.
pub(crate) fn audit_check(ideal: &CurveIdeal<BigInt>, start: Instant) -> CheckResult {
    let printed_x = transcript::printed_x_display();
    let printed_y = transcript::printed_y_display();
    let derived_x = transcript::derived_x_identity();
    let derived_y = transcript::derived_y_identity();

    let printed_x_nf = ideal.normal_form(&printed_x);
    let printed_y_nf = ideal.normal_form(&printed_y);
    let derived_x_nf = ideal.normal_form(&derived_x);
    let derived_y_nf = ideal.normal_form(&derived_y);

    let peak = [
        &printed_x,
        &printed_y,
        &derived_x,
        &derived_y,
        &printed_x_nf,
        &printed_y_nf,
        &derived_x_nf,
        &derived_y_nf,
    ]
    .iter()
    .map(|p| p.len())
    .max()
    .unwrap_or(0);

    let mut diffs = Vec::new();
    for (coord, printed, derived, printed_nf, derived_nf) in [
        ("x", &printed_x, &derived_x, &printed_x_nf, &derived_x_nf),
        ("y", &printed_y, &derived_y, &printed_y_nf, &derived_y_nf),
    ] {
        let delta = printed - derived;
        diffs.push(format!(
            "{coord}: printed display residual has {} terms; derived form residual has {} terms; raw printed-minus-derived delta has {} terms",
            printed_nf.len(),
            derived_nf.len(),
            delta.len(),
        ));
        if !printed_nf.is_zero() {
            diffs.push(format!("{coord} printed residual: {printed_nf}"));
            diffs.push(format!("{coord} printed-minus-derived delta: {delta}"));
        }
        if !derived_nf.is_zero() {
            diffs.push(format!("{coord} derived residual: {derived_nf}"));
        }
    }

    let status = if !derived_x_nf.is_zero() || !derived_y_nf.is_zero() {
        // the re-derived forms are ground truth; failing to reduce them is
        // a defect in this tool, not in the transcription
        CheckStatus::Fail
    } else if printed_x_nf.is_zero() && printed_y_nf.is_zero() {
        CheckStatus::Pass
    } else {
        CheckStatus::Flagged
    };
    let residual = if !printed_x_nf.is_zero() {
        printed_x_nf
    } else {
        printed_y_nf
    };
    CheckResult {
        id: LemmaId::TranscriptionAudit,
        status,
        residual,
        peak_term_count: peak,
        elapsed_millis: start.elapsed().as_millis() as u64,
        diffs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quad_check_uses_only_doubling_variables() {
        let ideal = CurveIdeal::new();
        let cmp = build_comparison(LemmaId::AssocQuad, &ideal);
        for (l, r) in &cmp.pairs {
            for p in [l.num(), l.den(), r.num(), r.den()] {
                for v in p.vars_used() {
                    assert!(
                        matches!(v, Var::Xa | Var::Ya | Var::A | Var::B),
                        "unexpected variable {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn witnesses_record_slope_denominators() {
        let ideal = CurveIdeal::new();
        let cmp = build_comparison(LemmaId::NegDistributes, &ideal);
        // two chord additions -> two x-difference witnesses
        assert_eq!(cmp.witnesses.len(), 2);
        for w in &cmp.witnesses {
            assert!(!w.is_zero());
        }
    }

    #[test]
    fn double_minus_self_recovers_the_point() {
        let r = super::super::check_lemma(LemmaId::DoubleMinusA);
        assert_eq!(r.status, CheckStatus::Pass);
    }
}
