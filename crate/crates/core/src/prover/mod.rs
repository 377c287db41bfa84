//! Symbolic verification of the coordinate identities behind the group
//! law.
//!
//! Each check rebuilds one identity from the chord/tangent addition
//! formulas by rational-function composition, clears denominators by
//! cross-multiplication, and reduces modulo the curve ideal. A zero
//! residual certifies the identity over every commutative ring in the
//! eight variables, independent of any particular field.
//!
//! During composition the prover keeps every numerator and denominator in
//! normal form. Replacing a fraction component by a congruent one (mod the
//! ideal) does not move the fraction as an element of the quotient's
//! fraction field, so the final residual is exactly the normal form of the
//! naive cleared difference, while intermediate expansion stays tractable.

mod checks;
pub mod numeric;
mod transcript;

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::CurveIdeal;
use crate::poly::Var;
use crate::ratfunc::RatFuncError;
use crate::{MPoly, MRat, TOOL_NAME};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProverError {
    #[error("chord slope is degenerate: denominator is the zero polynomial")]
    DegenerateSlope,
    #[error("unknown lemma id `{0}`")]
    UnknownLemma(String),
}

/// Which slope the addition formula uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slope {
    /// `(y_A - y_B) / (x_A - x_B)`, for distinct x-coordinates.
    Chord,
    /// `(3 x_A^2 + a) / (2 y_A)`, for doubling.
    Tangent,
}

/// A point with rational-function coordinates in the eight variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoint {
    pub x: MRat,
    pub y: MRat,
}

impl SymPoint {
    pub fn from_vars(x: Var, y: Var) -> SymPoint {
        SymPoint {
            x: MRat::var(x),
            y: MRat::var(y),
        }
    }

    /// The generic points the checks are phrased in.
    pub fn generic_a() -> SymPoint {
        SymPoint::from_vars(Var::Xa, Var::Ya)
    }

    pub fn generic_b() -> SymPoint {
        SymPoint::from_vars(Var::Xb, Var::Yb)
    }

    pub fn generic_c() -> SymPoint {
        SymPoint::from_vars(Var::Xc, Var::Yc)
    }

    pub fn negate(&self) -> SymPoint {
        SymPoint {
            x: self.x.clone(),
            y: self.y.neg(),
        }
    }
}

/// Strategy for the rational-function arithmetic inside the addition
/// formula: plain composition, or composition with every component kept in
/// normal form plus bookkeeping of denominator factors.
pub(crate) trait RfEngine {
    fn add(&mut self, a: &MRat, b: &MRat) -> MRat;
    fn sub(&mut self, a: &MRat, b: &MRat) -> MRat;
    fn mul(&mut self, a: &MRat, b: &MRat) -> MRat;
    fn div(&mut self, a: &MRat, b: &MRat) -> Result<MRat, ProverError>;
}

pub(crate) struct PlainEngine;

impl RfEngine for PlainEngine {
    fn add(&mut self, a: &MRat, b: &MRat) -> MRat {
        a.add(b)
    }

    fn sub(&mut self, a: &MRat, b: &MRat) -> MRat {
        a.sub(b)
    }

    fn mul(&mut self, a: &MRat, b: &MRat) -> MRat {
        a.mul(b)
    }

    fn div(&mut self, a: &MRat, b: &MRat) -> Result<MRat, ProverError> {
        a.div(b).map_err(|e| match e {
            RatFuncError::DivisionByZeroPolynomial | RatFuncError::ZeroDenominator => {
                ProverError::DegenerateSlope
            }
        })
    }
}

pub(crate) struct ReducedEngine<'a> {
    ideal: &'a CurveIdeal<num_bigint::BigInt>,
    /// Every divisor numerator introduced by a slope: the factors that
    /// must be nonzero for the composed fractions to make sense.
    witnesses: Vec<MPoly>,
    peak: usize,
}

impl<'a> ReducedEngine<'a> {
    pub(crate) fn new(ideal: &'a CurveIdeal<num_bigint::BigInt>) -> ReducedEngine<'a> {
        ReducedEngine {
            ideal,
            witnesses: Vec::new(),
            peak: 0,
        }
    }

    pub(crate) fn into_parts(self) -> (Vec<MPoly>, usize) {
        (self.witnesses, self.peak)
    }

    fn note(&mut self, rf: MRat) -> MRat {
        self.peak = self.peak.max(rf.num().len()).max(rf.den().len());
        rf
    }
}

impl RfEngine for ReducedEngine<'_> {
    fn add(&mut self, a: &MRat, b: &MRat) -> MRat {
        let num =
            &self.ideal.mul_reduced(a.num(), b.den()) + &self.ideal.mul_reduced(b.num(), a.den());
        let den = self.ideal.mul_reduced(a.den(), b.den());
        self.note(MRat::new(num, den).expect("product of nonzero denominators"))
    }

    fn sub(&mut self, a: &MRat, b: &MRat) -> MRat {
        let num =
            &self.ideal.mul_reduced(a.num(), b.den()) - &self.ideal.mul_reduced(b.num(), a.den());
        let den = self.ideal.mul_reduced(a.den(), b.den());
        self.note(MRat::new(num, den).expect("product of nonzero denominators"))
    }

    fn mul(&mut self, a: &MRat, b: &MRat) -> MRat {
        let num = self.ideal.mul_reduced(a.num(), b.num());
        let den = self.ideal.mul_reduced(a.den(), b.den());
        self.note(MRat::new(num, den).expect("product of nonzero denominators"))
    }

    fn div(&mut self, a: &MRat, b: &MRat) -> Result<MRat, ProverError> {
        if b.num().is_zero() {
            return Err(ProverError::DegenerateSlope);
        }
        self.witnesses.push(b.num().clone());
        let num = self.ideal.mul_reduced(a.num(), b.den());
        let den = self.ideal.mul_reduced(a.den(), b.num());
        Ok(self.note(MRat::new(num, den).expect("divisor numerator checked nonzero")))
    }
}

pub(crate) fn symbolic_add_with<E: RfEngine>(
    engine: &mut E,
    lhs: &SymPoint,
    rhs: &SymPoint,
    slope: Slope,
) -> Result<SymPoint, ProverError> {
    let alpha = match slope {
        Slope::Chord => {
            let dy = engine.sub(&lhs.y, &rhs.y);
            let dx = engine.sub(&lhs.x, &rhs.x);
            engine.div(&dy, &dx)?
        }
        Slope::Tangent => {
            assert_eq!(lhs, rhs, "tangent slope requires identical points");
            let x_sq = engine.mul(&lhs.x, &lhs.x);
            let three_x_sq = engine.mul(&MRat::int(3), &x_sq);
            let numerator = engine.add(&three_x_sq, &MRat::var(Var::A));
            let denominator = engine.mul(&MRat::int(2), &lhs.y);
            engine.div(&numerator, &denominator)?
        }
    };
    let alpha_sq = engine.mul(&alpha, &alpha);
    let x1 = engine.sub(&alpha_sq, &lhs.x);
    let x = engine.sub(&x1, &rhs.x);
    let run = engine.sub(&lhs.x, &x);
    let rise = engine.mul(&alpha, &run);
    let y = engine.sub(&rise, &lhs.y);
    Ok(SymPoint { x, y })
}

/// One application of the addition formula to symbolic points, by plain
/// rational-function composition (no reduction).
pub fn symbolic_add(lhs: &SymPoint, rhs: &SymPoint, slope: Slope) -> Result<SymPoint, ProverError> {
    symbolic_add_with(&mut PlainEngine, lhs, rhs, slope)
}

/// Identifiers for every symbolic check, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LemmaId {
    /// `(A+B)+C = A+(B+C)`, chords throughout.
    Assoc3Generic,
    /// `(A+A)+B = A+(A+B)`, tangent for the doubling.
    AssocDouble,
    /// `(A+A)+(A+A) = A+(A+(A+A))`, tangent for both doublings.
    AssocQuad,
    /// `-A-B = -(A+B)`.
    NegDistributes,
    /// The slope-square cancellation `(-yB-yA)^2 - (yB-yA)^2 = 4 yA yB`.
    PmbSimplification,
    /// `(A+A)-A = A`.
    DoubleMinusA,
    /// `(A+B)-B = A`.
    AddMinusB,
    /// The squared constraint equals the displayed quartic.
    Claim5Square,
    /// The displayed quartic equals its displayed factorization.
    Claim5Factorization,
    /// Printed cleared displays vs. re-derived forms.
    TranscriptionAudit,
}

impl LemmaId {
    pub const ALL: [LemmaId; 10] = [
        LemmaId::Assoc3Generic,
        LemmaId::AssocDouble,
        LemmaId::AssocQuad,
        LemmaId::NegDistributes,
        LemmaId::PmbSimplification,
        LemmaId::DoubleMinusA,
        LemmaId::AddMinusB,
        LemmaId::Claim5Square,
        LemmaId::Claim5Factorization,
        LemmaId::TranscriptionAudit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::Assoc3Generic => "Assoc3Generic",
            LemmaId::AssocDouble => "AssocDouble",
            LemmaId::AssocQuad => "AssocQuad",
            LemmaId::NegDistributes => "NegDistributes",
            LemmaId::PmbSimplification => "PmbSimplification",
            LemmaId::DoubleMinusA => "DoubleMinusA",
            LemmaId::AddMinusB => "AddMinusB",
            LemmaId::Claim5Square => "Claim5Square",
            LemmaId::Claim5Factorization => "Claim5Factorization",
            LemmaId::TranscriptionAudit => "TranscriptionAudit",
        }
    }

    pub fn parse(name: &str) -> Result<LemmaId, ProverError> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| ProverError::UnknownLemma(name.to_string()))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Flagged,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Flagged => "flagged",
        }
    }
}

/// Outcome of one symbolic check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: LemmaId,
    pub status: CheckStatus,
    /// Normal form of the cleared difference; zero on pass. For checks
    /// comparing both coordinates this is the first nonzero residual.
    pub residual: MPoly,
    /// Largest term count among the polynomials recorded while composing
    /// and reducing.
    pub peak_term_count: usize,
    pub elapsed_millis: u64,
    /// Audit detail: residual and delta renderings (empty elsewhere).
    pub diffs: Vec<String>,
}

/// All check outcomes, in fixed [`LemmaId`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn summary(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut flagged = 0;
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Flagged => flagged += 1,
            }
        }
        (pass, fail, flagged)
    }

    /// Overall verdict: every check except the transcription audit must
    /// pass; the audit may be flagged.
    pub fn overall_pass(&self) -> bool {
        self.checks.iter().all(|c| match c.id {
            LemmaId::TranscriptionAudit => c.status != CheckStatus::Fail,
            _ => c.status == CheckStatus::Pass,
        })
    }

    pub fn to_json(&self) -> JsonReport {
        JsonReport {
            tool: TOOL_NAME.to_string(),
            checks: self
                .checks
                .iter()
                .map(|c| JsonCheck {
                    id: c.id.name().to_string(),
                    status: c.status.as_str().to_string(),
                    residual_terms: c.residual.len(),
                    residual_text: c.residual.to_string(),
                    elapsed_ms: c.elapsed_millis,
                })
                .collect(),
            summary: {
                let (pass, fail, flagged) = self.summary();
                JsonSummary {
                    pass,
                    fail,
                    flagged,
                }
            },
        }
    }
}

/// Machine-readable report. Field names are part of the output contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub tool: String,
    pub checks: Vec<JsonCheck>,
    pub summary: JsonSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCheck {
    pub id: String,
    pub status: String,
    pub residual_terms: usize,
    pub residual_text: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonSummary {
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

/// Runs one symbolic check to completion.
pub fn check_lemma(id: LemmaId) -> CheckResult {
    let start = Instant::now();
    let ideal = CurveIdeal::new();
    if id == LemmaId::TranscriptionAudit {
        return checks::audit_check(&ideal, start);
    }
    let comparison = checks::build_comparison(id, &ideal);
    let mut residual = MPoly::zero();
    let mut peak = comparison.peak;
    for (lhs, rhs) in &comparison.pairs {
        let r = lhs.cleared_difference_nf(rhs, &ideal);
        peak = peak.max(r.len());
        if residual.is_zero() && !r.is_zero() {
            residual = r;
        }
    }
    let status = if residual.is_zero() {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    };
    CheckResult {
        id,
        status,
        residual,
        peak_term_count: peak,
        elapsed_millis: start.elapsed().as_millis() as u64,
        diffs: Vec::new(),
    }
}

/// Runs every check; checks execute concurrently but the report is always
/// in [`LemmaId`] order.
pub fn run_all() -> VerificationReport {
    use rayon::prelude::*;
    let mut checks: Vec<CheckResult> = LemmaId::ALL.par_iter().map(|&id| check_lemma(id)).collect();
    checks.sort_by_key(|c| c.id);
    VerificationReport { checks }
}
