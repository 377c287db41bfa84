//! Exact verification of the elliptic-curve group law.
//!
//! The crate has two halves that check the same statements by independent
//! means:
//!
//! * a symbolic half ([`poly`], [`ideal`], [`ratfunc`], [`prover`]) that
//!   rebuilds the coordinate identities behind the chord-and-tangent
//!   addition law as sparse integer polynomials and decides them by normal
//!   form reduction modulo the curve ideal, and
//! * a numeric half ([`field`], [`curve`], [`harness`]) that tests every
//!   group axiom and auxiliary law over prime fields, exhaustively for
//!   small primes and with seeded randomized sampling for large ones.
//!
//! All arithmetic is exact: arbitrary-precision integers on the symbolic
//! side, `u64` residues on the numeric side. There are no tolerances
//! anywhere.
//!
//! ```
//! use grouplaw::curve::CurveParams;
//! use grouplaw::field::Prime;
//! use grouplaw::prover::{check_lemma, CheckStatus, LemmaId};
//!
//! // numeric: the curve y^2 = x^3 + x + 1 over F_7 is cyclic of order 5
//! let curve = CurveParams::new(Prime::new(7)?, 1, 1)?;
//! let g = curve.point(0, 1)?;
//! assert_eq!(g.scalar_mul(2), curve.point(2, 5)?);
//! assert!(g.scalar_mul(5).is_infinity());
//!
//! // symbolic: a coordinate identity certified by normal-form reduction
//! let outcome = check_lemma(LemmaId::DoubleMinusA);
//! assert_eq!(outcome.status, CheckStatus::Pass);
//! assert!(outcome.residual.is_zero());
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod curve;
pub mod field;
pub mod harness;
pub mod ideal;
pub mod poly;
pub mod prover;
pub mod ratfunc;

/// Sparse multivariate polynomial over arbitrary-precision integers in the
/// eight fixed variables. This is the coefficient ring used by every
/// symbolic check; the generic [`poly::Poly`] exists so the engine itself
/// stays scalar-type-agnostic.
pub type MPoly = poly::Poly<num_bigint::BigInt>;

/// Rational expression (numerator/denominator pair of [`MPoly`]) such as a
/// chord or tangent slope.
pub type MRat = ratfunc::RatFunc<num_bigint::BigInt>;

/// Name reported in machine-readable output.
pub const TOOL_NAME: &str = "grouplaw";
