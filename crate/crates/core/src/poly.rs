//! Sparse multivariate polynomials in the eight fixed variables
//! `xA, yA, xB, yB, xC, yC, a, b`.
//!
//! The variable set is closed: every identity this crate decides lives in
//! the ring `Z[xA, xB, xC, yA, yB, yC, a, b]`, so exponent vectors pack
//! into a single `u64` (one byte per variable, highest-precedence variable
//! in the most significant byte). That makes lexicographic comparison an
//! integer comparison and monomial multiplication an integer addition with
//! a carry check.
//!
//! The engine is generic over the coefficient ring through [`Coeff`]; the
//! crate-level [`crate::MPoly`] alias fixes `BigInt`, which is what every
//! exactness claim relies on. Terms are kept in descending graded
//! lexicographic order with no zero coefficients and no duplicate
//! monomials, so equality is structural.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{BuildHasherDefault, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

/// Exponents are capped well below this; hitting the cap means a bug, not
/// a use case.
pub const MAX_EXPONENT: u32 = 255;

/// The eight fixed variables, in decreasing precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Xa,
    Ya,
    Xb,
    Yb,
    Xc,
    Yc,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 8] = [
        Var::Xa,
        Var::Ya,
        Var::Xb,
        Var::Yb,
        Var::Xc,
        Var::Yc,
        Var::A,
        Var::B,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Xa => "xA",
            Var::Ya => "yA",
            Var::Xb => "xB",
            Var::Yb => "yB",
            Var::Xc => "xC",
            Var::Yc => "yC",
            Var::A => "a",
            Var::B => "b",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Packed exponent vector: byte `7 - index(v)` holds the exponent of `v`,
/// so `xA` sits in the most significant byte and plain `u64` comparison is
/// lexicographic comparison under the variable precedence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var) -> Monomial {
        Monomial(1u64 << ((7 - v.index()) * 8))
    }

    pub fn from_exponents(exps: [u32; 8]) -> Option<Monomial> {
        let mut packed = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXPONENT {
                return None;
            }
            packed |= (e as u64) << ((7 - i) * 8);
        }
        Some(Monomial(packed))
    }

    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> ((7 - v.index()) * 8)) & 0xFF) as u32
    }

    pub fn with_exponent(self, v: Var, e: u32) -> Monomial {
        debug_assert!(e <= MAX_EXPONENT);
        let shift = (7 - v.index()) * 8;
        Monomial((self.0 & !(0xFFu64 << shift)) | ((e as u64) << shift))
    }

    pub fn total_degree(self) -> u32 {
        self.0.to_le_bytes().iter().map(|&b| b as u32).sum()
    }

    /// Componentwise exponent sum; `None` when any exponent would pass the
    /// byte cap (detected via per-byte carry bits).
    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let sum = self.0.wrapping_add(other.0);
        let carries = (self.0 & other.0) | ((self.0 | other.0) & !sum);
        if carries & HIGH_BITS != 0 {
            None
        } else {
            Some(Monomial(sum))
        }
    }

    pub fn is_constant(self) -> bool {
        self.0 == 0
    }
}

/// Graded lexicographic order: total degree first, then lexicographic by
/// variable precedence.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficient ring bound: exact signed arithmetic, cheap by-reference
/// multiplication, and rendering. `BigInt` is the ring of record; `i64`
/// works for small test polynomials.
pub trait Coeff:
    Signed
    + Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + From<i64>
    + AddAssign<Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Signed
        + Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + From<i64>
        + AddAssign<Self>
        + for<'a> Mul<&'a Self, Output = Self>
        + Send
        + Sync
        + 'static
{
}

/// Multiply-shift hasher for packed monomials; the default SipHash is
/// needlessly slow for 8-byte keys in the multiplication inner loop.
#[derive(Default)]
pub(crate) struct MonoHasher(u64);

impl Hasher for MonoHasher {
    #[inline]
    fn write_u64(&mut self, n: u64) {
        let mut h = n.wrapping_mul(0x9E37_79B9_7F4A_7C15);
        h ^= h >> 32;
        self.0 = h.wrapping_mul(0xD6E8_FEB8_6659_FD93);
    }

    fn write(&mut self, _: &[u8]) {
        unimplemented!("monomial keys hash through write_u64")
    }

    #[inline]
    fn finish(&self) -> u64 {
        self.0
    }
}

pub(crate) type TermMap<C> = HashMap<Monomial, C, BuildHasherDefault<MonoHasher>>;

/// Sparse polynomial: terms sorted in descending graded-lex order, no zero
/// coefficients, no duplicate monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

// Work below this many coefficient products stays on one thread.
const PARALLEL_PAIRS: usize = 1 << 21;

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Poly<C> {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly<C> {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Poly<C> {
        Poly::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Poly<C> {
        Poly::constant(C::from(n))
    }

    pub fn var(v: Var) -> Poly<C> {
        Poly::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial) -> Poly<C> {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Canonicalizes an arbitrary term list: merges duplicate monomials,
    /// drops zero coefficients, sorts.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Poly<C> {
        let mut map = TermMap::default();
        for (m, c) in terms {
            accumulate(&mut map, m, c);
        }
        Poly::from_map(map)
    }

    /// Convenience builder from raw exponent vectors in variable-precedence
    /// order, e.g. `[1, 0, 0, 0, 0, 0, 0, 2]` for `xA*b^2`.
    pub fn from_exponents(terms: &[([u32; 8], i64)]) -> Poly<C> {
        Poly::from_terms(terms.iter().map(|&(exps, c)| {
            let m = Monomial::from_exponents(exps).expect("exponent exceeds the per-variable cap");
            (m, C::from(c))
        }))
    }

    pub(crate) fn from_map(map: TermMap<C>) -> Poly<C> {
        let mut terms: Vec<(Monomial, C)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.len() > 1 << 16 {
            terms.par_sort_unstable_by(|a, b| b.0.cmp(&a.0));
        } else {
            terms.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Monomial, C)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        // descending graded-lex: the first term has maximal degree
        self.terms.first().map_or(0, |(m, _)| m.total_degree())
    }

    pub fn max_exponent(&self, v: Var) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(v))
            .max()
            .unwrap_or(0)
    }

    pub fn vars_used(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.max_exponent(v) > 0)
            .collect()
    }

    fn merged(&self, other: &Poly<C>, negate_rhs: bool) -> Poly<C> {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other.terms.iter().peekable();
        loop {
            match (lhs.peek(), rhs.peek()) {
                (Some((ml, _)), Some((mr, _))) => match ml.cmp(mr) {
                    Ordering::Greater => {
                        let (m, c) = lhs.next().unwrap();
                        terms.push((*m, c.clone()));
                    }
                    Ordering::Less => {
                        let (m, c) = rhs.next().unwrap();
                        terms.push((
                            *m,
                            if negate_rhs {
                                c.clone().neg()
                            } else {
                                c.clone()
                            },
                        ));
                    }
                    Ordering::Equal => {
                        let (m, cl) = lhs.next().unwrap();
                        let (_, cr) = rhs.next().unwrap();
                        let c = if negate_rhs {
                            cl.clone() - cr.clone()
                        } else {
                            cl.clone() + cr.clone()
                        };
                        if !c.is_zero() {
                            terms.push((*m, c));
                        }
                    }
                },
                (Some(_), None) => {
                    let (m, c) = lhs.next().unwrap();
                    terms.push((*m, c.clone()));
                }
                (None, Some(_)) => {
                    let (m, c) = rhs.next().unwrap();
                    terms.push((
                        *m,
                        if negate_rhs {
                            c.clone().neg()
                        } else {
                            c.clone()
                        },
                    ));
                }
                (None, None) => break,
            }
        }
        Poly { terms }
    }

    pub fn mul(&self, other: &Poly<C>) -> Poly<C> {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(*m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(*m, c);
        }
        let pairs = self.terms.len() * other.terms.len();
        if pairs < PARALLEL_PAIRS {
            let mut map = TermMap::default();
            mul_block(&self.terms, other, &mut map);
            Poly::from_map(map)
        } else {
            let chunk = (self.terms.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
            self.terms
                .par_chunks(chunk)
                .map(|block| {
                    let mut map = TermMap::default();
                    mul_block(block, other, &mut map);
                    Poly::from_map(map)
                })
                .reduce(Poly::zero, |acc, part| &acc + &part)
        }
    }

    fn mul_term(&self, m: Monomial, c: &C) -> Poly<C> {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(mt, ct)| (checked_mono_mul(*mt, m), ct.clone() * c))
            .collect();
        // multiplying every monomial by the same factor preserves the order
        Poly { terms }
    }

    pub fn pow(&self, exp: u32) -> Poly<C> {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut exp = exp;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

#[inline]
pub(crate) fn checked_mono_mul(a: Monomial, b: Monomial) -> Monomial {
    a.checked_mul(b)
        .expect("monomial exponent overflow: some variable exceeds 255")
}

#[inline]
pub(crate) fn accumulate<C: Coeff>(map: &mut TermMap<C>, m: Monomial, c: C) {
    use std::collections::hash_map::Entry;
    match map.entry(m) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn mul_block<C: Coeff>(block: &[(Monomial, C)], other: &Poly<C>, map: &mut TermMap<C>) {
    map.reserve(block.len().saturating_mul(2));
    for (ml, cl) in block {
        for (mr, cr) in &other.terms {
            accumulate(map, checked_mono_mul(*ml, *mr), cl.clone() * cr);
        }
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        self.merged(rhs, false)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        self.merged(rhs, true)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone().neg()))
                .collect(),
        }
    }
}

impl Poly<BigInt> {
    /// Evaluates at an assignment of all eight variables in `F_p`.
    /// `assignment[i]` is the value of `Var::ALL[i]`.
    pub fn eval_mod(&self, assignment: &[u64; 8], p: u64) -> u64 {
        let mut powers: [Vec<u64>; 8] = Default::default();
        for v in Var::ALL {
            let max = self.max_exponent(v) as usize;
            let mut table = Vec::with_capacity(max + 1);
            table.push(1 % p);
            let base = assignment[v.index()] % p;
            for e in 1..=max {
                table.push(((table[e - 1] as u128 * base as u128) % p as u128) as u64);
            }
            powers[v.index()] = table;
        }
        let big_p = BigInt::from(p);
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut r = c % &big_p;
            if r.is_negative() {
                r += &big_p;
            }
            let mut t = r.to_u64().expect("residue fits in u64");
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = ((t as u128 * powers[v.index()][e] as u128) % p as u128) as u64;
                }
            }
            acc = ((acc as u128 + t as u128) % p as u128) as u64;
        }
        acc
    }
}

/// Canonical text rendering: descending graded-lex terms, variables in
/// precedence order, `^1` and unit coefficients omitted, terms joined by
/// `" + "` / `" - "`. The zero polynomial renders as `"0"`.
impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let magnitude = c.abs();
            if m.is_constant() {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}*")?;
                }
                let mut first = true;
                for v in Var::ALL {
                    let e = m.exponent(v);
                    if e == 0 {
                        continue;
                    }
                    if !first {
                        f.write_str("*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
