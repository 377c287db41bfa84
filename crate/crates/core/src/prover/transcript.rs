//! Fixed polynomial displays used by the symbolic checks.
//!
//! Two families live here:
//!
//! * the *printed* cleared associativity identities: a verbatim
//!   transcription of the classical hand-set displays, kept exactly as
//!   displayed, transcription defects included. The audit reduces these
//!   and diffs them against ground truth rather than silently fixing them.
//! * the *derived* counterparts: the same identities rebuilt from the
//!   addition formulas by clearing denominators, which is what the
//!   formulas actually imply. These must reduce to zero.
//!
//! Also here: the quartic constraint displays used by the forced-double
//! checks (`Claim5Square`, `Claim5Factorization`).

use crate::poly::Var;
use crate::MPoly;

fn v(var: Var) -> MPoly {
    MPoly::var(var)
}

fn int(n: i64) -> MPoly {
    MPoly::int(n)
}

/// The six helper symbols the cleared displays are written in.
///
/// `printed` keeps the transcription defect in `alpha` (`yB - xA`, mixing
/// an x- and a y-coordinate); the derived value is `yB - yA`.
pub(crate) struct DisplaySymbols {
    pub alpha: MPoly,
    pub beta: MPoly,
    pub gamma: MPoly,
    pub tau: MPoly,
    pub eta: MPoly,
    pub mu: MPoly,
}

pub(crate) fn display_symbols(printed: bool) -> DisplaySymbols {
    let eta = &v(Var::Xb) - &v(Var::Xa);
    let mu = &v(Var::Xb) - &v(Var::Xc);
    let alpha = if printed {
        &v(Var::Yb) - &v(Var::Xa)
    } else {
        &v(Var::Yb) - &v(Var::Ya)
    };
    let gamma = &v(Var::Yb) - &v(Var::Yc);
    // beta = (yA + yC) eta^3 - alpha ((2xA + xB) eta^2 - alpha^2)
    let beta = &(&v(Var::Ya) + &v(Var::Yc)).mul(&eta.pow(3))
        - &alpha.mul(&(&(&(&int(2) * &v(Var::Xa)) + &v(Var::Xb)).mul(&eta.pow(2)) - &alpha.pow(2)));
    // tau = (yA + yB) mu^3 - gamma ((2xB + xC) mu^2 - gamma^2)
    let tau = &(&v(Var::Ya) + &v(Var::Yb)).mul(&mu.pow(3))
        - &gamma.mul(&(&(&(&int(2) * &v(Var::Xb)) + &v(Var::Xc)).mul(&mu.pow(2)) - &gamma.pow(2)));
    DisplaySymbols {
        alpha,
        beta,
        gamma,
        tau,
        eta,
        mu,
    }
}

fn coordinate_sum() -> MPoly {
    &(&v(Var::Xa) + &v(Var::Xb)) + &v(Var::Xc)
}

/// Printed x-coordinate identity, verbatim. Note the two transcription
/// defects it inherits: `alpha = yB - xA`, and the final squared factor of
/// the first product using `eta` where the derivation produces `mu`.
pub(crate) fn printed_x_display() -> MPoly {
    let s = display_symbols(true);
    let sum = coordinate_sum();
    let da = &sum.mul(&s.eta.pow(2)) - &s.alpha.pow(2);
    // ((xA+xB+xC) eta^2 - gamma^2): the derivation has mu^2 here
    let mixed = &sum.mul(&s.eta.pow(2)) - &s.gamma.pow(2);
    let two_diff = &(&int(2) * &v(Var::Xa)) - &(&int(2) * &v(Var::Xc));
    let inner = &(&two_diff.mul(&s.mu.pow(2)) + &s.gamma.pow(2)).mul(&s.eta.pow(2))
        - &s.alpha.pow(2).mul(&s.mu.pow(2));
    let first = &s.beta.pow(2).mul(&s.mu.pow(2)) + &inner.mul(&da.pow(2));
    &first.mul(&mixed.pow(2)) - &s.tau.pow(2).mul(&da.pow(2)).mul(&s.eta.pow(2))
}

/// Printed y-coordinate identity, verbatim. Inherits `alpha = yB - xA`,
/// an `eta^2 - eta^2` factor where the derivation produces
/// `eta^2 - alpha^2`, and an `eta^2 - gamma^2` factor where the
/// derivation produces `mu^2 - gamma^2`.
pub(crate) fn printed_y_display() -> MPoly {
    let s = display_symbols(true);
    let sum = coordinate_sum();
    let da = &sum.mul(&s.eta.pow(2)) - &s.alpha.pow(2);
    let db = &sum.mul(&s.mu.pow(2)) - &s.gamma.pow(2);
    let degenerate = &sum.mul(&s.eta.pow(2)) - &s.eta.pow(2);
    let mixed = &sum.mul(&s.eta.pow(2)) - &s.gamma.pow(2);

    let lead = (&v(Var::Ya) - &v(Var::Yc))
        .mul(&da.pow(3))
        .mul(&db.pow(3))
        .mul(&s.eta.pow(3))
        .mul(&s.mu.pow(3));
    let beta_core = &(&(&(&int(2) * &v(Var::Xc)) - &v(Var::Xa)) - &v(Var::Xb)).mul(&s.eta.pow(2))
        + &s.alpha.pow(2);
    let beta_term = s
        .beta
        .mul(&(&beta_core.mul(&degenerate.pow(2)) - &s.beta.pow(2)))
        .mul(&db.pow(3))
        .mul(&s.mu.pow(3));
    let tau_core = &(&(&(&int(2) * &v(Var::Xa)) - &v(Var::Xb)) - &v(Var::Xc)).mul(&s.mu.pow(2))
        + &s.gamma.pow(2);
    let tau_term = s
        .tau
        .mul(&(&tau_core.mul(&mixed.pow(2)) - &s.tau.pow(2)))
        .mul(&da.pow(3))
        .mul(&s.eta.pow(3));
    &(&lead + &beta_term) - &tau_term
}

/// x-coordinate identity re-derived from the addition formulas: the
/// cross-multiplied difference of the two association orders, written over
/// the common denominator `(dA eta)^2 (dB mu)^2`.
pub(crate) fn derived_x_identity() -> MPoly {
    let s = display_symbols(false);
    let sum = coordinate_sum();
    let da = &sum.mul(&s.eta.pow(2)) - &s.alpha.pow(2);
    let db = &sum.mul(&s.mu.pow(2)) - &s.gamma.pow(2);
    let lhs_core =
        &(&(&v(Var::Xa) + &v(Var::Xb)) - &v(Var::Xc)).mul(&s.eta.pow(2)) - &s.alpha.pow(2);
    let rhs_core =
        &(&(&v(Var::Xb) + &v(Var::Xc)) - &v(Var::Xa)).mul(&s.mu.pow(2)) - &s.gamma.pow(2);
    let lhs = &s.beta.pow(2) + &lhs_core.mul(&da.pow(2));
    let rhs = &s.tau.pow(2) + &rhs_core.mul(&db.pow(2));
    &lhs.mul(&db.pow(2)).mul(&s.mu.pow(2)) - &rhs.mul(&da.pow(2)).mul(&s.eta.pow(2))
}

/// y-coordinate identity re-derived from the addition formulas, over the
/// common denominator `(dA eta)^3 (dB mu)^3`.
pub(crate) fn derived_y_identity() -> MPoly {
    let s = display_symbols(false);
    let sum = coordinate_sum();
    let da = &sum.mul(&s.eta.pow(2)) - &s.alpha.pow(2);
    let db = &sum.mul(&s.mu.pow(2)) - &s.gamma.pow(2);

    let lead = (&v(Var::Ya) - &v(Var::Yc))
        .mul(&da.pow(3))
        .mul(&db.pow(3))
        .mul(&s.eta.pow(3))
        .mul(&s.mu.pow(3));
    let beta_core = &(&(&(&int(2) * &v(Var::Xc)) - &v(Var::Xa)) - &v(Var::Xb)).mul(&s.eta.pow(2))
        + &s.alpha.pow(2);
    let beta_term = s
        .beta
        .mul(&(&beta_core.mul(&da.pow(2)) - &s.beta.pow(2)))
        .mul(&db.pow(3))
        .mul(&s.mu.pow(3));
    let tau_core = &(&(&(&int(2) * &v(Var::Xa)) - &v(Var::Xb)) - &v(Var::Xc)).mul(&s.mu.pow(2))
        + &s.gamma.pow(2);
    let tau_term = s
        .tau
        .mul(&(&tau_core.mul(&db.pow(2)) - &s.tau.pow(2)))
        .mul(&da.pow(3))
        .mul(&s.eta.pow(3));
    &(&lead + &beta_term) - &tau_term
}

/// The displayed quartic constraint in `xB` forced by `A + B = -A`.
pub(crate) fn quartic_constraint() -> MPoly {
    let xa = v(Var::Xa);
    let xb = v(Var::Xb);
    let ya = v(Var::Ya);
    let a = v(Var::A);
    let b = v(Var::B);
    let three_xa2_a = &(&int(3) * &xa.pow(2)) + &a;
    let linear = &(&(&int(2) * &a.pow(2)).mul(&xa) + &(&int(6) * &xa.pow(5)))
        - &(&int(12) * &b).mul(&xa.pow(2));
    let t1 = (&int(4) * &xb.pow(3)).mul(&ya.pow(2));
    let t2 = xb.pow(2).mul(&three_xa2_a.pow(2));
    let t3 = xb.mul(&linear);
    let t4 = (&ya.pow(2) - &b).pow(2);
    let t5 = (&int(4) * &a).mul(&xa.pow(4));
    let t6 = (&int(8) * &b).mul(&xa.pow(3));
    &(&(&(&(&t1 - &t2) + &t3) - &t4) + &t5) + &t6
}

/// `4 yA^2 yB^2 - (yA^2 + a xB + b - 2 xA^3 + 3 xA^2 xB)^2`: both sides of
/// the squared slope constraint, moved to one side. Congruent to the
/// quartic modulo the curve ideal.
pub(crate) fn quartic_square_form() -> MPoly {
    let xa = v(Var::Xa);
    let xb = v(Var::Xb);
    let ya = v(Var::Ya);
    let yb = v(Var::Yb);
    let middle = &(&(&(&ya.pow(2) + &v(Var::A).mul(&xb)) + &v(Var::B)) - &(&int(2) * &xa.pow(3)))
        + &(&int(3) * &xa.pow(2)).mul(&xb);
    &(&int(4) * &ya.pow(2)).mul(&yb.pow(2)) - &middle.pow(2)
}

/// `(4 yA^2 xB - (3 xA^2 + a)^2 + 8 xA yA^2) (xB - xA)^2`: the quartic's
/// displayed factorization, denominators cleared by `4 yA^2`.
pub(crate) fn quartic_factored_form() -> MPoly {
    let xa = v(Var::Xa);
    let xb = v(Var::Xb);
    let ya = v(Var::Ya);
    let three_xa2_a = &(&int(3) * &xa.pow(2)) + &v(Var::A);
    let factor = &(&(&int(4) * &ya.pow(2)).mul(&xb) - &three_xa2_a.pow(2))
        + &(&int(8) * &xa).mul(&ya.pow(2));
    factor.mul(&(&xb - &xa).pow(2))
}

/// `((-yB - yA)^2 - (yB - yA)^2) - 4 yA yB`: the slope-square cancellation
/// behind the palindromic-sum criterion. Zero already as a polynomial.
pub(crate) fn palindrome_cancellation() -> MPoly {
    let ya = v(Var::Ya);
    let yb = v(Var::Yb);
    let lhs = &(&-&yb - &ya).pow(2) - &(&yb - &ya).pow(2);
    &lhs - &(&(&int(4) * &ya) * &yb)
}
