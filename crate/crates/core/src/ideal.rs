//! Ideals of Z[eta] and the splitting of rational primes.
//!
//! Z[eta] is a principal ideal domain, so every ideal is carried by one
//! generator. Prime ideals are found by factoring the minimal polynomial
//! modulo p and then searching for a small element of the right norm.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{int_norm, FieldElem, MIN_POLY};

/// Initial coefficient bound for the generator search; doubled on failure.
pub const SEARCH_START: i64 = 10;
/// The search gives up beyond this bound.
pub const SEARCH_LIMIT: i64 = 640;

#[derive(Debug, Clone)]
pub struct IdealK {
    gen: FieldElem,
}

impl IdealK {
    /// The ideal generated by a nonzero integral element.
    pub fn new(gen: FieldElem) -> Result<Self> {
        if gen.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !gen.is_integral() {
            return Err(Error::NotInvertible);
        }
        Ok(IdealK { gen })
    }

    pub fn from_int(n: i64) -> Result<Self> {
        Self::new(FieldElem::from_int(n))
    }

    pub fn unit() -> Self {
        IdealK {
            gen: FieldElem::one(),
        }
    }

    pub fn generator(&self) -> &FieldElem {
        &self.gen
    }

    pub fn norm(&self) -> BigInt {
        self.gen.norm().abs().to_integer()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.norm().is_one()
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        x.is_zero() || x.divisible_by(&self.gen)
    }

    /// `self` divides `other` as ideals, i.e. `other` is contained in `self`.
    pub fn divides(&self, other: &IdealK) -> bool {
        self.contains(&other.gen)
    }

    pub fn mul(&self, other: &IdealK) -> IdealK {
        IdealK {
            gen: &self.gen * &other.gen,
        }
    }

    pub fn pow(&self, e: u32) -> IdealK {
        IdealK {
            gen: self.gen.pow(e),
        }
    }

    /// Is the ideal coprime to 2?
    pub fn is_odd(&self) -> bool {
        !(self.norm() % 2u32).is_zero()
    }

    /// Exponent of the prime `p` in this ideal.
    pub fn valuation(&self, p: &IdealK) -> u32 {
        let mut x = self.gen.clone();
        let mut v = 0;
        while !p.is_unit_ideal() {
            match x.checked_div(&p.gen) {
                Ok(q) if q.is_integral() => {
                    x = q;
                    v += 1;
                }
                _ => break,
            }
        }
        v
    }
}

/// Equality as ideals: the generators differ by a unit.
impl PartialEq for IdealK {
    fn eq(&self, other: &Self) -> bool {
        self.gen.divisible_by(&other.gen) && other.gen.divisible_by(&self.gen)
    }
}

impl Eq for IdealK {}

impl fmt::Display for IdealK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.gen)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    pub ideal: IdealK,
    /// Rational prime below.
    pub p: u64,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// Image of eta in the residue field when `f = 1`.
    pub root: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub p: u64,
    pub factors: Vec<PrimeIdeal>,
}

impl PrimeFactorization {
    /// Sum of e*f over the factors; always 3.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|f| f.e * f.f).sum()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn eval_min_poly_mod(t: u64, p: u64) -> u64 {
    let p = p as i128;
    let t = t as i128;
    let v = MIN_POLY
        .iter()
        .rev()
        .fold(0i128, |acc, &c| (acc * t + c as i128).rem_euclid(p));
    v as u64
}

/// Roots of the minimal polynomial modulo `p`, with multiplicity.
pub fn min_poly_roots_mod(p: u64) -> Vec<(u64, u32)> {
    let mut roots = Vec::new();
    for t in 0..p {
        if eval_min_poly_mod(t, p) == 0 {
            roots.push(t);
        }
    }
    match roots.len() {
        1 => {
            // Either a triple root or one simple root times an irreducible quadratic;
            // the derivative decides.
            let r = roots[0] as i128;
            let pi = p as i128;
            let d = (3 * r * r + 2 * r - 2).rem_euclid(pi);
            let mult = if d == 0 { 3 } else { 1 };
            alloc::vec![(roots[0], mult)]
        }
        2 => {
            // One of the two is double: deflate once to find out which.
            let pi = p as i128;
            let mut out = Vec::new();
            for &r in &roots {
                let ri = r as i128;
                let d = (3 * ri * ri + 2 * ri - 2).rem_euclid(pi);
                out.push((r, if d == 0 { 2 } else { 1 }));
            }
            out
        }
        _ => roots.into_iter().map(|r| (r, 1)).collect(),
    }
}

/// Smallest-height element `a + b eta + c eta^2` with `|N| = norm` and,
/// when `root` is given, `a + b root + c root^2 = 0 (mod p)`.
///
/// Candidates are visited shell by shell in height, and lexicographically in
/// `(c, b, a)` within a shell, so the result is reproducible.
fn search_generator(p: u64, norm: i128, root: Option<u64>) -> Result<FieldElem> {
    let mut bound = SEARCH_START;
    let mut searched = 0i64;
    while bound <= SEARCH_LIMIT {
        for h in searched..=bound {
            for c in -h..=h {
                for b in -h..=h {
                    for a in -h..=h {
                        if a.abs().max(b.abs()).max(c.abs()) != h {
                            continue;
                        }
                        if let Some(r) = root {
                            let (pi, ri) = (p as i128, r as i128);
                            let v =
                                (a as i128 + b as i128 * ri + c as i128 * ri * ri).rem_euclid(pi);
                            if v != 0 {
                                continue;
                            }
                        }
                        if int_norm(&[a as i128, b as i128, c as i128]).abs() == norm {
                            return Ok(FieldElem::from_ints(a, b, c));
                        }
                    }
                }
            }
        }
        searched = bound + 1;
        bound *= 2;
    }
    Err(Error::GeneratorSearchExhausted {
        prime: p,
        bound: SEARCH_LIMIT,
    })
}

/// Decomposition of `p Z[eta]` into prime ideals.
pub fn factor_rational_prime(p: u64) -> Result<PrimeFactorization> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let roots = min_poly_roots_mod(p);
    let pn = p as i128;
    let mut factors = Vec::new();
    match roots.as_slice() {
        [] => factors.push(PrimeIdeal {
            ideal: IdealK::from_int(p as i64)?,
            p,
            e: 1,
            f: 3,
            root: None,
        }),
        [(r, 3)] => {
            let gen = search_generator(p, pn, Some(*r))?;
            factors.push(PrimeIdeal {
                ideal: IdealK::new(gen)?,
                p,
                e: 3,
                f: 1,
                root: Some(*r),
            });
        }
        [(r, 1)] => {
            // simple root times an irreducible quadratic
            let gen = search_generator(p, pn, Some(*r))?;
            factors.push(PrimeIdeal {
                ideal: IdealK::new(gen.clone())?,
                p,
                e: 1,
                f: 1,
                root: Some(*r),
            });
            let rest = FieldElem::from_int(p as i64).checked_div(&gen)?;
            factors.push(PrimeIdeal {
                ideal: IdealK::new(rest)?,
                p,
                e: 1,
                f: 2,
                root: None,
            });
        }
        multi => {
            for &(r, e) in multi {
                let gen = search_generator(p, pn, Some(r))?;
                factors.push(PrimeIdeal {
                    ideal: IdealK::new(gen)?,
                    p,
                    e,
                    f: 1,
                    root: Some(r),
                });
            }
        }
    }
    Ok(PrimeFactorization { p, factors })
}

/// Rational prime factors of `n`, by trial division.
pub fn rational_prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        if (&n % d).is_zero() {
            out.push(d);
            while (&n % d).is_zero() {
                n /= d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor exceeds u64"));
    }
    out
}

/// Factorization of an ideal into prime powers, sorted by (p, root).
pub fn factor_ideal(ideal: &IdealK) -> Result<Vec<(PrimeIdeal, u32)>> {
    let mut out = Vec::new();
    for p in rational_prime_factors(&ideal.norm()) {
        for prime in factor_rational_prime(p)?.factors {
            let v = ideal.valuation(&prime.ideal);
            if v > 0 {
                out.push((prime, v));
            }
        }
    }
    Ok(out)
}

/// All prime ideals lying over rational primes `p <= max_prime`, sorted by norm then prime.
pub fn primes_up_to(max_prime: u64) -> Result<Vec<PrimeIdeal>> {
    let mut out = Vec::new();
    for p in 2..=max_prime {
        if is_prime(p) {
            out.extend(factor_rational_prime(p)?.factors);
        }
    }
    out.sort_by_key(|prime| (prime.ideal.norm(), prime.p, prime.root));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64, c: i64) -> FieldElem {
        FieldElem::from_ints(a, b, c)
    }

    #[test]
    fn thirteen_splits_into_the_triplet() {
        let fac = factor_rational_prime(13).unwrap();
        assert_eq!(fac.factors.len(), 3);
        let expected = [fe(-1, 2, 0), fe(3, -2, 0), fe(3, 1, 0)];
        let roots = [7, 8, 10];
        for ((prime, gen), root) in fac.factors.iter().zip(expected).zip(roots) {
            assert_eq!(prime.ideal, IdealK::new(gen).unwrap());
            assert_eq!((prime.e, prime.f, prime.root), (1, 1, Some(root)));
        }
        let product = expected_product();
        assert_eq!(product, fe(13, 0, 0));
    }

    fn expected_product() -> FieldElem {
        [
            fe(0, 1, 0),
            fe(2, 1, 0),
            fe(-1, 2, 0),
            fe(3, -2, 0),
            fe(3, 1, 0),
        ]
        .iter()
        .fold(FieldElem::one(), |acc, x| &acc * x)
    }

    #[test]
    fn eta_times_eta_plus_two_is_a_unit() {
        assert!((&fe(0, 1, 0) * &fe(2, 1, 0)).is_unit());
    }

    #[test]
    fn seven_is_totally_ramified() {
        let fac = factor_rational_prime(7).unwrap();
        assert_eq!(fac.factors.len(), 1);
        let prime = &fac.factors[0];
        assert_eq!(prime.ideal, IdealK::new(fe(2, -1, 0)).unwrap());
        assert_eq!((prime.e, prime.f), (3, 1));
        assert_eq!(prime.ideal.pow(3), IdealK::from_int(7).unwrap());
    }

    #[test]
    fn two_is_inert() {
        let fac = factor_rational_prime(2).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].ideal, IdealK::from_int(2).unwrap());
        assert_eq!((fac.factors[0].e, fac.factors[0].f), (1, 3));
    }

    #[test]
    fn primes_below_one_hundred() {
        for p in (2..=100).filter(|&p| is_prime(p)) {
            let fac = factor_rational_prime(p).unwrap();
            assert_eq!(fac.degree(), 3, "p = {p}");
            let norm_product = fac.factors.iter().fold(BigInt::one(), |acc, f| {
                acc * num_traits::pow(f.ideal.norm(), f.e as usize)
            });
            assert_eq!(norm_product, BigInt::from(p).pow(3));
            // A cyclic cubic: split, inert, or the single ramified prime.
            let shape: Vec<(u32, u32)> = fac.factors.iter().map(|f| (f.e, f.f)).collect();
            match p {
                7 => assert_eq!(shape, [(3, 1)]),
                _ if p % 7 == 1 || p % 7 == 6 => assert_eq!(shape, [(1, 1); 3]),
                _ => assert_eq!(shape, [(1, 3)]),
            }
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert_eq!(factor_rational_prime(15), Err(Error::NotPrime(15)));
    }

    #[test]
    fn ideal_equality_up_to_units() {
        let a = IdealK::new(fe(2, -1, 0)).unwrap();
        let b = IdealK::new(&fe(2, -1, 0) * &fe(-1, 1, 0)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, IdealK::from_int(7).unwrap());
        assert!(a.divides(&IdealK::from_int(7).unwrap()));
        assert_eq!(IdealK::from_int(7).unwrap().valuation(&a), 3);
    }

    #[test]
    fn factor_twenty_six() {
        let factors = factor_ideal(&IdealK::from_int(26).unwrap()).unwrap();
        let shape: Vec<(u64, u32)> = factors.iter().map(|(p, v)| (p.p, *v)).collect();
        assert_eq!(shape, [(2, 1), (13, 1), (13, 1), (13, 1)]);
    }

    #[test]
    fn units_and_nonunits() {
        assert!(FieldElem::eta().is_unit());
        assert!(fe(-1, 1, 0).is_unit());
        assert!(!fe(2, -1, 0).is_unit());
    }
}
