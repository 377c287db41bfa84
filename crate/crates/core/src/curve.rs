//! The affine Weierstrass curve `y^2 = x^3 + ax + b` over `F_p` and its
//! chord-and-tangent addition law.
//!
//! Points carry their curve, so adding points from different curves is an
//! error rather than silent nonsense. `O` denotes the point at infinity,
//! the neutral element: `A + O = O + A = A`.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldError, FpElement, Prime};

/// Affine point enumeration is meant for small fields only.
pub const ENUMERATION_LIMIT: u64 = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("singular curve: discriminant 4a^3 + 27b^2 = 0 mod {0}")]
    SingularCurve(u64),
    #[error("({x}, {y}) does not satisfy y^2 = x^3 + ax + b mod {modulus}")]
    NotOnCurve { x: u64, y: u64, modulus: u64 },
    #[error("points belong to different curves")]
    CurveMismatch,
    #[error("p = {0} exceeds the enumeration limit {ENUMERATION_LIMIT}")]
    TooLarge(u64),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// One elliptic curve instance `(p, a, b)` with nonzero discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveParams {
    p: Prime,
    a: FpElement,
    b: FpElement,
}

/// `4a^3 + 27b^2` in `F_p`; nonzero exactly when `x^3 + ax + b` has
/// distinct roots.
pub fn discriminant(p: Prime, a: FpElement, b: FpElement) -> FpElement {
    let four = FpElement::new(4, p);
    let twenty_seven = FpElement::new(27, p);
    four * a * a * a + twenty_seven * b * b
}

impl CurveParams {
    pub fn new(p: Prime, a: u64, b: u64) -> Result<CurveParams, CurveError> {
        let a = FpElement::new(a, p);
        let b = FpElement::new(b, p);
        if discriminant(p, a, b).is_zero() {
            return Err(CurveError::SingularCurve(p.value()));
        }
        Ok(CurveParams { p, a, b })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn a(&self) -> FpElement {
        self.a
    }

    pub fn b(&self) -> FpElement {
        self.b
    }

    pub fn discriminant(&self) -> FpElement {
        discriminant(self.p, self.a, self.b)
    }

    /// Right-hand side `x^3 + ax + b`.
    pub fn rhs(&self, x: FpElement) -> FpElement {
        x * x * x + self.a * x + self.b
    }

    pub fn is_on_curve(&self, x: FpElement, y: FpElement) -> bool {
        y * y == self.rhs(x)
    }

    /// Constructs a checked affine point.
    pub fn point(&self, x: u64, y: u64) -> Result<Point, CurveError> {
        let x = FpElement::new(x, self.p);
        let y = FpElement::new(y, self.p);
        if !self.is_on_curve(x, y) {
            return Err(CurveError::NotOnCurve {
                x: x.residue(),
                y: y.residue(),
                modulus: self.p.value(),
            });
        }
        Ok(Point::Affine { curve: *self, x, y })
    }

    /// Every point on the curve: `O` first, then affine points in
    /// ascending `(x, y)` order.
    pub fn enumerate_points(&self) -> Result<Vec<Point>, CurveError> {
        let p = self.p.value();
        if p > ENUMERATION_LIMIT {
            return Err(CurveError::TooLarge(p));
        }
        let mut points = vec![Point::Infinity];
        for xv in 0..p {
            let x = FpElement::new(xv, self.p);
            let t = self.rhs(x);
            if t.legendre() >= 0 {
                let (r1, r2) = t.sqrt()?;
                points.push(Point::Affine {
                    curve: *self,
                    x,
                    y: r1,
                });
                if r1 != r2 {
                    points.push(Point::Affine {
                        curve: *self,
                        x,
                        y: r2,
                    });
                }
            }
        }
        Ok(points)
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 = x^3 + {}x + {} over F_{}",
            self.a.residue(),
            self.b.residue(),
            self.p
        )
    }
}

/// A curve point: the point at infinity or a checked affine pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine {
        curve: CurveParams,
        x: FpElement,
        y: FpElement,
    },
}

impl Point {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn coordinates(&self) -> Option<(FpElement, FpElement)> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, y, .. } => Some((*x, *y)),
        }
    }

    /// `O -> O`, `(x, y) -> (x, -y)`.
    pub fn negate(&self) -> Point {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { curve, x, y } => Point::Affine {
                curve: *curve,
                x: *x,
                y: -*y,
            },
        }
    }

    /// Chord-and-tangent addition.
    ///
    /// Cases: `A + O = O + A = A`; if `x_A = x_B` and `y_A = -y_B` the sum
    /// is `O`; otherwise the chord slope `(y_A - y_B)/(x_A - x_B)` applies
    /// when `x_A != x_B` and the tangent slope `(3x_A^2 + a)/(2y_A)` when
    /// `x_A = x_B` (which forces `A = B` with `y_A != 0`).
    pub fn add(&self, other: &Point) -> Result<Point, CurveError> {
        let (curve, xa, ya, xb, yb) = match (self, other) {
            (Point::Infinity, _) => return Ok(*other),
            (_, Point::Infinity) => return Ok(*self),
            (
                Point::Affine {
                    curve: ca,
                    x: xa,
                    y: ya,
                },
                Point::Affine {
                    curve: cb,
                    x: xb,
                    y: yb,
                },
            ) => {
                if ca != cb {
                    return Err(CurveError::CurveMismatch);
                }
                (*ca, *xa, *ya, *xb, *yb)
            }
        };
        if xa == xb && ya == -yb {
            return Ok(Point::Infinity);
        }
        let slope = if xa == xb {
            // same x and not opposite: the points coincide and y != 0
            assert_eq!(ya, yb, "equal x-coordinates force equal points here");
            assert!(!ya.is_zero(), "y = 0 with equal x is the inverse case");
            let three = FpElement::new(3, curve.p);
            let two = FpElement::new(2, curve.p);
            (three * xa * xa + curve.a) * (two * ya).inv().expect("nonzero by the case split")
        } else {
            (ya - yb) * (xa - xb).inv().expect("x_A != x_B")
        };
        let x = slope * slope - xa - xb;
        let y = -ya + slope * (xa - x);
        debug_assert!(curve.is_on_curve(x, y));
        Ok(Point::Affine { curve, x, y })
    }

    pub fn sub(&self, other: &Point) -> Result<Point, CurveError> {
        self.add(&other.negate())
    }

    /// `k`-fold sum by double-and-add; `0 * A = O`.
    pub fn scalar_mul(&self, k: u64) -> Point {
        let mut acc = Point::Infinity;
        let mut base = *self;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base).expect("same curve throughout");
            }
            base = base.add(&base).expect("same curve throughout");
            k >>= 1;
        }
        acc
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y, .. } => write!(f, "{},{}", x.residue(), y.residue()),
        }
    }
}
