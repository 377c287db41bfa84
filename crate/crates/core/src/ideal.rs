//! The curve ideal and normal-form reduction.
//!
//! The ideal is generated by `yV^2 - xV^3 - a*xV - b` for the three point
//! letters `V in {A, B, C}`. Because the three rewrite rules
//! `yV^2 -> xV^3 + a*xV + b` touch disjoint variables, repeatedly applying
//! them in any order terminates (total y-degree strictly drops) and ends in
//! the same polynomial: the unique representative with every y-exponent at
//! most 1. A polynomial lies in the ideal exactly when its normal form is
//! zero, which is the membership test every symbolic check reduces to.
//!
//! Reduction here is single-pass: a term carrying `yV^(2q+r)` is rewritten
//! directly against a precomputed table of powers `(xV^3 + a*xV + b)^q`,
//! which never reintroduces a y-variable.

use rand::Rng;
use rayon::prelude::*;

use crate::poly::{accumulate, checked_mono_mul, Coeff, Monomial, Poly, TermMap, Var};

/// `(y, x)` variable pairs for the three point letters.
const POINT_VARS: [(Var, Var); 3] = [(Var::Ya, Var::Xa), (Var::Yb, Var::Xb), (Var::Yc, Var::Xc)];

/// The fixed ideal `(yA^2 - xA^3 - a*xA - b, ..., yC^2 - ... )`.
#[derive(Debug, Clone)]
pub struct CurveIdeal<C: Coeff> {
    generators: [Poly<C>; 3],
    substitutions: [Poly<C>; 3],
}

impl<C: Coeff> Default for CurveIdeal<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Coeff> CurveIdeal<C> {
    pub fn new() -> Self {
        let substitutions = POINT_VARS.map(|(_, xv)| {
            let x = Poly::var(xv);
            &(&x.pow(3) + &(&Poly::var(Var::A) * &x)) + &Poly::var(Var::B)
        });
        let generators = [0, 1, 2].map(|i| {
            let (yv, _) = POINT_VARS[i];
            &Poly::var(yv).pow(2) - &substitutions[i]
        });
        CurveIdeal {
            generators,
            substitutions,
        }
    }

    pub fn generators(&self) -> &[Poly<C>; 3] {
        &self.generators
    }

    /// `xV^3 + a*xV + b` for point letter `i` (0 = A, 1 = B, 2 = C).
    pub fn substitution(&self, i: usize) -> &Poly<C> {
        &self.substitutions[i]
    }

    /// The unique remainder modulo the ideal: every y-exponent at most 1.
    pub fn normal_form(&self, f: &Poly<C>) -> Poly<C> {
        if !needs_reduction(f) {
            return f.clone();
        }
        let tables = self.tables_for(|v| f.max_exponent(v));
        if f.len() < 1 << 14 {
            let mut map = TermMap::default();
            for (m, c) in f.iter() {
                reduce_term_into(&mut map, *m, c.clone(), &tables);
            }
            Poly::from_map(map)
        } else {
            let terms: Vec<&(Monomial, C)> = f.iter().collect();
            let chunk = (terms.len() / (4 * rayon::current_num_threads()).max(1)).max(1);
            terms
                .par_chunks(chunk)
                .map(|block| {
                    let mut map = TermMap::default();
                    for (m, c) in block {
                        reduce_term_into(&mut map, *m, c.clone(), &tables);
                    }
                    Poly::from_map(map)
                })
                .reduce(Poly::zero, |acc, part| &acc + &part)
        }
    }

    /// Fused multiply-and-reduce: equals `normal_form(f * g)` without ever
    /// materializing the unreduced product.
    pub fn mul_reduced(&self, f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let tables = self.tables_for(|v| f.max_exponent(v) + g.max_exponent(v));
        let (small, big) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let pairs = small.len().saturating_mul(big.len());
        if pairs < 1 << 21 {
            let mut map = TermMap::default();
            mul_reduce_block(&small.iter().collect::<Vec<_>>(), big, &tables, &mut map);
            Poly::from_map(map)
        } else {
            let terms: Vec<&(Monomial, C)> = big.iter().collect();
            let chunk = (terms.len() / (8 * rayon::current_num_threads()).max(1)).max(1);
            terms
                .par_chunks(chunk)
                .map(|block| {
                    let mut map = TermMap::default();
                    mul_reduce_block(block, small, &tables, &mut map);
                    Poly::from_map(map)
                })
                .reduce(Poly::zero, |acc, part| &acc + &part)
        }
    }

    /// Membership test: `f` lies in the ideal iff its normal form is zero.
    pub fn contains(&self, f: &Poly<C>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// One-step-at-a-time reduction with a randomized rewrite schedule.
    /// Used to test that the normal form is independent of reduction order;
    /// far slower than [`Self::normal_form`].
    pub fn normal_form_randomized<R: Rng>(&self, f: &Poly<C>, rng: &mut R) -> Poly<C> {
        let mut current = f.clone();
        loop {
            let candidates: Vec<(Monomial, C, usize)> = current
                .iter()
                .flat_map(|(m, c)| {
                    POINT_VARS
                        .iter()
                        .enumerate()
                        .filter(|(_, (yv, _))| m.exponent(*yv) >= 2)
                        .map(|(i, _)| (*m, c.clone(), i))
                        .collect::<Vec<_>>()
                })
                .collect();
            if candidates.is_empty() {
                return current;
            }
            let (m, c, i) = candidates[rng.gen_range(0..candidates.len())].clone();
            let (yv, _) = POINT_VARS[i];
            let lowered = m.with_exponent(yv, m.exponent(yv) - 2);
            let replaced = Poly::term(c.clone(), lowered).mul(&self.substitutions[i]);
            current = &(&current - &Poly::term(c, m)) + &replaced;
        }
    }

    fn tables_for(&self, max_exp: impl Fn(Var) -> u32) -> [Vec<Poly<C>>; 3] {
        [0, 1, 2].map(|i| {
            let (yv, _) = POINT_VARS[i];
            let q = (max_exp(yv) / 2) as usize;
            let mut pows = Vec::with_capacity(q + 1);
            pows.push(Poly::one());
            for k in 1..=q {
                pows.push(pows[k - 1].mul(&self.substitutions[i]));
            }
            pows
        })
    }
}

fn needs_reduction<C: Coeff>(f: &Poly<C>) -> bool {
    f.iter()
        .any(|(m, _)| POINT_VARS.iter().any(|(yv, _)| m.exponent(*yv) >= 2))
}

fn mul_reduce_block<C: Coeff>(
    block: &[&(Monomial, C)],
    other: &Poly<C>,
    tables: &[Vec<Poly<C>>; 3],
    map: &mut TermMap<C>,
) {
    map.reserve(block.len().saturating_mul(2));
    for (ml, cl) in block {
        for (mr, cr) in other.iter() {
            let m = checked_mono_mul(*ml, *mr);
            reduce_term_into(map, m, cl.clone() * cr, tables);
        }
    }
}

#[inline]
fn reduce_term_into<C: Coeff>(map: &mut TermMap<C>, m: Monomial, c: C, tables: &[Vec<Poly<C>>; 3]) {
    let qa = m.exponent(Var::Ya) >> 1;
    let qb = m.exponent(Var::Yb) >> 1;
    let qc = m.exponent(Var::Yc) >> 1;
    if qa | qb | qc == 0 {
        accumulate(map, m, c);
        return;
    }
    let base = m
        .with_exponent(Var::Ya, m.exponent(Var::Ya) & 1)
        .with_exponent(Var::Yb, m.exponent(Var::Yb) & 1)
        .with_exponent(Var::Yc, m.exponent(Var::Yc) & 1);
    for (ma, ca) in tables[0][qa as usize].iter() {
        let m1 = checked_mono_mul(base, *ma);
        let c1 = c.clone() * ca;
        for (mb, cb) in tables[1][qb as usize].iter() {
            let m2 = checked_mono_mul(m1, *mb);
            let c2 = c1.clone() * cb;
            for (mc, cc) in tables[2][qc as usize].iter() {
                accumulate(map, checked_mono_mul(m2, *mc), c2.clone() * cc);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    type P = Poly<i64>;

    fn v(var: Var) -> P {
        Poly::var(var)
    }

    fn random_poly(rng: &mut StdRng, terms: usize, max_exp: u32) -> P {
        P::from_terms((0..terms).map(|_| {
            let exps: [u32; 8] = std::array::from_fn(|_| rng.gen_range(0..=max_exp));
            let m = Monomial::from_exponents(exps).unwrap();
            (m, rng.gen_range(-9i64..=9))
        }))
    }

    #[test]
    fn generator_rendering() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        assert_eq!(ideal.generators()[0].to_string(), "-xA^3 - xA*a + yA^2 - b");
        assert_eq!(ideal.generators()[2].to_string(), "-xC^3 - xC*a + yC^2 - b");
    }

    #[test]
    fn nf_of_y_squared() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let expected = &(&v(Var::Xa).pow(3) + &(&v(Var::A) * &v(Var::Xa))) + &v(Var::B);
        assert_eq!(ideal.normal_form(&v(Var::Ya).pow(2)), expected);
    }

    #[test]
    fn nf_fixed_point() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let f = &(&v(Var::Xa) * &v(Var::B)) + &P::int(3);
        assert_eq!(ideal.normal_form(&f), f);
    }

    #[test]
    fn nf_of_y_cubed() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        // yA^3 = yA * yA^2 -> yA*xA^3 + a*xA*yA + b*yA
        let expected = P::from_exponents(&[
            ([3, 1, 0, 0, 0, 0, 0, 0], 1),
            ([1, 1, 0, 0, 0, 0, 1, 0], 1),
            ([0, 1, 0, 0, 0, 0, 0, 1], 1),
        ]);
        assert_eq!(ideal.normal_form(&v(Var::Ya).pow(3)), expected);
    }

    #[test]
    fn membership_by_construction() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let combo = (0..3)
                .map(|i| {
                    let h = random_poly(&mut rng, 5, 2);
                    h.mul(&ideal.generators()[i])
                })
                .fold(P::zero(), |acc, t| &acc + &t);
            assert!(ideal.contains(&combo));
        }
    }

    #[test]
    fn nf_idempotent_and_linear() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let f = random_poly(&mut rng, 8, 3);
            let g = random_poly(&mut rng, 8, 3);
            let nf = ideal.normal_form(&f);
            assert_eq!(ideal.normal_form(&nf), nf);
            assert_eq!(
                ideal.normal_form(&(&f + &g)),
                &ideal.normal_form(&f) + &ideal.normal_form(&g)
            );
        }
    }

    #[test]
    fn nf_multiplicative_up_to_reduction() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let mut rng = StdRng::seed_from_u64(13);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 6, 2);
            let g = random_poly(&mut rng, 6, 2);
            let direct = ideal.normal_form(&f.mul(&g));
            let reduced_first =
                ideal.normal_form(&ideal.normal_form(&f).mul(&ideal.normal_form(&g)));
            assert_eq!(direct, reduced_first);
            assert_eq!(ideal.mul_reduced(&f, &g), direct);
        }
    }

    #[test]
    fn randomized_schedules_agree() {
        let ideal: CurveIdeal<i64> = CurveIdeal::new();
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..10 {
            let f = random_poly(&mut rng, 6, 3);
            let nf = ideal.normal_form(&f);
            let scheduled = ideal.normal_form_randomized(&f, &mut rng);
            assert_eq!(scheduled, nf);
        }
    }

    #[test]
    fn evaluation_compatibility_on_curve() {
        use crate::curve::CurveParams;
        use crate::field::Prime;
        use num_bigint::BigInt;

        let ideal: CurveIdeal<BigInt> = CurveIdeal::new();
        let mut rng = StdRng::seed_from_u64(19);
        let prime = Prime::new(1009).unwrap();
        let curve = CurveParams::new(prime, 4, 9).unwrap();
        let points = curve.enumerate_points().unwrap();
        let affine: Vec<_> = points.iter().filter_map(|p| p.coordinates()).collect();

        for _ in 0..10 {
            let f: Poly<BigInt> = Poly::from_terms((0..8).map(|_| {
                let exps: [u32; 8] = std::array::from_fn(|_| rng.gen_range(0..4u32));
                (
                    Monomial::from_exponents(exps).unwrap(),
                    BigInt::from(rng.gen_range(-20i64..=20)),
                )
            }));
            let nf = ideal.normal_form(&f);
            let pick = |rng: &mut StdRng| affine[rng.gen_range(0..affine.len())];
            let (xa, ya) = pick(&mut rng);
            let (xb, yb) = pick(&mut rng);
            let (xc, yc) = pick(&mut rng);
            let assignment = [
                xa.residue(),
                ya.residue(),
                xb.residue(),
                yb.residue(),
                xc.residue(),
                yc.residue(),
                curve.a().residue(),
                curve.b().residue(),
            ];
            let p = prime.value();
            assert_eq!(f.eval_mod(&assignment, p), nf.eval_mod(&assignment, p));
        }
    }
}
