//! Exact arithmetic in prime fields `F_p` with `p > 3`.
//!
//! Elements are canonical residues in `[0, p)` carrying their modulus, so
//! equality is structural and mixing moduli is a bug caught at the call
//! site. Primality is established once, at [`Prime`] construction, by a
//! deterministic Miller-Rabin witness set that is exact for all 64-bit
//! inputs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} must exceed 3")]
    TooSmall(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("{residue} is not a square modulo {modulus}")]
    NotASquare { residue: u64, modulus: u64 },
}

/// A proven prime modulus, strictly greater than 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Prime, FieldError> {
        if value <= 3 {
            return Err(FieldError::TooSmall(value));
        }
        if !is_prime_u64(value) {
            return Err(FieldError::NotPrime(value));
        }
        Ok(Prime(value))
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Deterministic Miller-Rabin primality test, exact for all `u64` inputs.
///
/// The witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is known to
/// have no 64-bit strong pseudoprimes.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A residue in `[0, p)` tagged with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpElement {
    residue: u64,
    modulus: Prime,
}

impl FpElement {
    /// Normalizes any `u64` into the canonical range.
    pub fn new(value: u64, modulus: Prime) -> FpElement {
        FpElement {
            residue: value % modulus.0,
            modulus,
        }
    }

    /// Normalizes a signed value, mapping negatives to their positive
    /// residue.
    pub fn from_i64(value: i64, modulus: Prime) -> FpElement {
        let p = modulus.0 as i128;
        let r = ((value as i128 % p) + p) % p;
        FpElement {
            residue: r as u64,
            modulus,
        }
    }

    pub fn residue(self) -> u64 {
        self.residue
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn check_same_modulus(self, other: FpElement) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic on elements with mismatched moduli is rejected"
        );
    }

    pub fn pow(self, exp: u64) -> FpElement {
        FpElement {
            residue: pow_mod(self.residue, exp, self.modulus.0),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(self) -> Result<FpElement, FieldError> {
        if self.residue == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(self.modulus.0 - 2))
    }

    /// Legendre symbol: `0` for zero, `+1` for a nonzero square, `-1`
    /// otherwise, computed as `x^((p-1)/2)`.
    pub fn legendre(self) -> i32 {
        if self.residue == 0 {
            return 0;
        }
        let e = self.pow((self.modulus.0 - 1) / 2);
        if e.residue == 1 {
            1
        } else {
            -1
        }
    }

    /// Both square roots `{r, p-r}` of a quadratic residue, ordered by
    /// residue. Degenerates to `{0, 0}` for zero input.
    ///
    /// Tonelli-Shanks, with the auxiliary nonresidue found by scanning
    /// 2, 3, 4, ... so the output is identical across runs.
    pub fn sqrt(self) -> Result<(FpElement, FpElement), FieldError> {
        let p = self.modulus.0;
        match self.legendre() {
            0 => return Ok((self, self)),
            -1 => {
                return Err(FieldError::NotASquare {
                    residue: self.residue,
                    modulus: p,
                })
            }
            _ => {}
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while FpElement::new(z, self.modulus).legendre() != -1 {
            z += 1;
        }
        let mut m = s;
        let mut c = FpElement::new(z, self.modulus).pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.residue != 1 {
            let mut i = 0u32;
            let mut probe = t;
            while probe.residue != 1 {
                probe = probe * probe;
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b * b;
            }
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        debug_assert_eq!(r * r, self);
        let other = -r;
        if r.residue <= other.residue {
            Ok((r, other))
        } else {
            Ok((other, r))
        }
    }
}

impl std::ops::Add for FpElement {
    type Output = FpElement;
    fn add(self, other: FpElement) -> FpElement {
        self.check_same_modulus(other);
        let p = self.modulus.0;
        let mut r = self.residue + other.residue;
        if r >= p {
            r -= p;
        }
        FpElement {
            residue: r,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for FpElement {
    type Output = FpElement;
    fn sub(self, other: FpElement) -> FpElement {
        self.check_same_modulus(other);
        let p = self.modulus.0;
        let r = if self.residue >= other.residue {
            self.residue - other.residue
        } else {
            self.residue + p - other.residue
        };
        FpElement {
            residue: r,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for FpElement {
    type Output = FpElement;
    fn mul(self, other: FpElement) -> FpElement {
        self.check_same_modulus(other);
        FpElement {
            residue: mul_mod(self.residue, other.residue, self.modulus.0),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for FpElement {
    type Output = FpElement;
    fn neg(self) -> FpElement {
        let r = if self.residue == 0 {
            0
        } else {
            self.modulus.0 - self.residue
        };
        FpElement {
            residue: r,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.residue.fmt(f)
    }
}
