//! Rational expressions as unreduced numerator/denominator pairs.
//!
//! No gcd cancellation is ever attempted: fractions grow as they compose
//! and all equality questions go through [`RatFunc::equal_mod_ideal`],
//! which clears denominators by cross-multiplication and reduces modulo
//! the curve ideal. That test is sound wherever the denominators are
//! nonzero, which the callers guarantee through their hypotheses.

use thiserror::Error;

use crate::ideal::CurveIdeal;
use crate::poly::{Coeff, Poly, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatFuncError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by a rational function with zero numerator")]
    DivisionByZeroPolynomial,
}

/// An unreduced fraction of polynomials with nonzero denominator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> RatFunc<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<RatFunc<C>, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        Ok(RatFunc { num, den })
    }

    pub fn from_poly(p: Poly<C>) -> RatFunc<C> {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc<C> {
        RatFunc::from_poly(Poly::var(v))
    }

    pub fn int(n: i64) -> RatFunc<C> {
        RatFunc::from_poly(Poly::int(n))
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFunc<C>) -> RatFunc<C> {
        RatFunc {
            num: &self.num.mul(&other.den) + &other.num.mul(&self.den),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &RatFunc<C>) -> RatFunc<C> {
        RatFunc {
            num: &self.num.mul(&other.den) - &other.num.mul(&self.den),
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul(&self, other: &RatFunc<C>) -> RatFunc<C> {
        RatFunc {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn div(&self, other: &RatFunc<C>) -> Result<RatFunc<C>, RatFuncError> {
        if other.num.is_zero() {
            return Err(RatFuncError::DivisionByZeroPolynomial);
        }
        Ok(RatFunc {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        })
    }

    pub fn neg(&self) -> RatFunc<C> {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// Cross-multiplied equality modulo the curve ideal:
    /// `n1*d2 - n2*d1` must have normal form zero.
    pub fn equal_mod_ideal(&self, other: &RatFunc<C>, ideal: &CurveIdeal<C>) -> bool {
        self.cleared_difference_nf(other, ideal).is_zero()
    }

    /// Normal form of the cross-multiplied difference `n1*d2 - n2*d1`.
    pub fn cleared_difference_nf(&self, other: &RatFunc<C>, ideal: &CurveIdeal<C>) -> Poly<C> {
        let lhs = ideal.mul_reduced(&self.num, &other.den);
        let rhs = ideal.mul_reduced(&other.num, &self.den);
        &lhs - &rhs
    }

    /// Componentwise normal form. The fraction is unchanged as an element
    /// of the quotient's fraction field, since numerator and denominator
    /// each move by an ideal member.
    pub fn reduced(&self, ideal: &CurveIdeal<C>) -> RatFunc<C> {
        RatFunc {
            num: ideal.normal_form(&self.num),
            den: ideal.normal_form(&self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type R = RatFunc<i64>;

    fn chord_slope() -> R {
        // (yA - yB) / (xA - xB)
        R::new(
            &Poly::var(Var::Ya) - &Poly::var(Var::Yb),
            &Poly::var(Var::Xa) - &Poly::var(Var::Xb),
        )
        .unwrap()
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            R::new(Poly::one(), Poly::zero()),
            Err(RatFuncError::ZeroDenominator)
        );
    }

    #[test]
    fn adding_zero_is_identity_up_to_cross_multiplication() {
        let ideal = CurveIdeal::new();
        let f = chord_slope();
        let g = f.add(&R::int(0));
        assert!(f.equal_mod_ideal(&g, &ideal));
        // representation is bookkeeping only: denominator picked up a factor
        assert_eq!(g.den(), &f.den().mul(&Poly::one()));
    }

    #[test]
    fn product_keeps_factors_unreduced() {
        let slope = chord_slope();
        let diff = R::from_poly(&Poly::var(Var::Xa) - &Poly::var(Var::Xb));
        let prod = slope.mul(&diff);
        let expected_num = (&Poly::var(Var::Ya) - &Poly::var(Var::Yb))
            .mul(&(&Poly::var(Var::Xa) - &Poly::var(Var::Xb)));
        assert_eq!(prod.num(), &expected_num);
        assert_eq!(prod.den(), &(&Poly::var(Var::Xa) - &Poly::var(Var::Xb)));
    }

    #[test]
    fn division_by_zero_numerator_rejected() {
        let zero_over_one = R::int(0);
        assert_eq!(
            chord_slope().div(&zero_over_one),
            Err(RatFuncError::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn equality_mod_ideal_examples() {
        let ideal = CurveIdeal::new();
        // yA^2 - b - a*xA  ==  xA^3  modulo the ideal
        let lhs = R::from_poly(
            &(&Poly::var(Var::Ya).pow(2) - &Poly::var(Var::B))
                - &(&Poly::var(Var::A) * &Poly::var(Var::Xa)),
        );
        let rhs = R::from_poly(Poly::var(Var::Xa).pow(3));
        assert!(lhs.equal_mod_ideal(&rhs, &ideal));

        let f = chord_slope();
        assert!(f.equal_mod_ideal(&f, &ideal));

        let xa = R::var(Var::Xa);
        let xb = R::var(Var::Xb);
        assert!(!xa.equal_mod_ideal(&xb, &ideal));
        assert_eq!(
            xa.cleared_difference_nf(&xb, &ideal),
            &Poly::var(Var::Xa) - &Poly::var(Var::Xb)
        );
    }
}
