//! The totally real cubic field K = Q(eta), eta = 2cos(2pi/7).
//!
//! Elements are stored on the power basis 1, eta, eta^2 with exact rational
//! coefficients. Products are reduced with eta^3 = 1 + 2 eta - eta^2, so
//! degree three and higher terms never appear.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::real::{Precision, Real};

/// Coefficients `[r0, r1, r2]` of the reduction rule `eta^3 = r0 + r1 eta + r2 eta^2`.
pub const ETA_CUBE: [i64; 3] = [1, 2, -1];

/// Coefficients of the minimal polynomial `t^3 + t^2 - 2t - 1`, constant term first.
pub const MIN_POLY: [i64; 4] = [-1, -2, 1, 1];

/// Natural-place approximations of the three real roots of the minimal polynomial.
pub const ETA_F64: [f64; 3] = [
    1.246_979_603_717_467,
    -0.445_041_867_912_628_8,
    -1.801_937_735_804_838,
];

/// A real place of K.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    /// eta -> 2cos(2pi/7), the positive root.
    Natural,
    /// eta -> 2cos(4pi/7).
    Sigma1,
    /// eta -> 2cos(6pi/7).
    Sigma2,
}

impl Place {
    pub const ALL: [Place; 3] = [Place::Natural, Place::Sigma1, Place::Sigma2];

    pub fn index(self) -> usize {
        match self {
            Place::Natural => 0,
            Place::Sigma1 => 1,
            Place::Sigma2 => 2,
        }
    }

    /// Isolating interval `(lo, hi)` for the image of eta; the cubic changes sign on it.
    fn bracket(self) -> (i64, i64) {
        match self {
            Place::Natural => (1, 2),
            Place::Sigma1 => (-1, 0),
            Place::Sigma2 => (-2, -1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Place::Natural => "sigma0",
            Place::Sigma1 => "sigma1",
            Place::Sigma2 => "sigma2",
        }
    }
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem {
    c: [BigRational; 3],
}

impl FieldElem {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational) -> Self {
        FieldElem { c: [c0, c1, c2] }
    }

    pub fn from_coeffs(c: [BigRational; 3]) -> Self {
        FieldElem { c }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        FieldElem {
            c: [q(c0), q(c1), q(c2)],
        }
    }

    pub fn from_bigints(c: &[BigInt; 3]) -> Self {
        FieldElem {
            c: c.clone().map(BigRational::from_integer),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_ints(n, 0, 0)
    }

    pub fn from_rational(r: BigRational) -> Self {
        FieldElem {
            c: [r, BigRational::zero(), BigRational::zero()],
        }
    }

    /// `num / den` as a constant.
    pub fn from_fraction(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn eta() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// tau = 1 + eta + eta^2.
    pub fn tau() -> Self {
        Self::from_ints(1, 1, 1)
    }

    pub fn coeffs(&self) -> &[BigRational; 3] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero()
    }

    /// Membership in the ring of integers Z[eta].
    pub fn is_integral(&self) -> bool {
        self.c.iter().all(|x| x.denom().is_one())
    }

    pub fn integral_coeffs(&self) -> Option<[BigInt; 3]> {
        if self.is_integral() {
            Some(self.c.clone().map(|x| x.to_integer()))
        } else {
            None
        }
    }

    /// Small integral coefficients, if they fit.
    pub fn to_i64s(&self) -> Option<[i64; 3]> {
        let c = self.integral_coeffs()?;
        Some([c[0].to_i64()?, c[1].to_i64()?, c[2].to_i64()?])
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Is this element rational (no eta terms)?
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.c[1].is_zero() && self.c[2].is_zero() {
            Some(&self.c[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        FieldElem {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r],
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FieldElem::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Matrix of multiplication by `self`; column `k` holds `self * eta^k`.
    pub fn mul_matrix(&self) -> [[BigRational; 3]; 3] {
        let col0 = self.c.clone();
        let col1 = times_eta(&col0);
        let col2 = times_eta(&col1);
        let mut m: [[BigRational; 3]; 3] = Default::default();
        for (k, col) in [col0, col1, col2].into_iter().enumerate() {
            for (r, v) in col.into_iter().enumerate() {
                m[r][k] = v;
            }
        }
        m
    }

    /// Trace to Q: 3 c0 - c1 + 5 c2.
    pub fn trace(&self) -> BigRational {
        let t = trace_powers(ETA_CUBE, 3);
        &self.c[0] * q(t[0]) + &self.c[1] * q(t[1]) + &self.c[2] * q(t[2])
    }

    /// Norm to Q, the determinant of the multiplication matrix.
    pub fn norm(&self) -> BigRational {
        det3(&self.mul_matrix())
    }

    pub fn inverse(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        // Solve M v = e0 by the adjugate: v = adj(M) e0 / det M.
        let m = self.mul_matrix();
        let det = det3(&m);
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        let v0 = cof(1, 2, 1, 2);
        let v1 = -cof(1, 2, 0, 2);
        let v2 = cof(1, 2, 0, 1);
        Ok(FieldElem {
            c: [v0 / &det, v1 / &det, v2 / &det],
        })
    }

    /// `self / other` if `other` is a nonzero element.
    pub fn checked_div(&self, other: &FieldElem) -> Result<FieldElem> {
        Ok(self * &other.inverse()?)
    }

    /// Does `other` divide `self` in Z[eta]?
    pub fn divisible_by(&self, other: &FieldElem) -> bool {
        match self.checked_div(other) {
            Ok(q) => q.is_integral(),
            Err(_) => false,
        }
    }

    /// A unit of Z[eta]: integral with norm +-1.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm().abs().is_one()
    }

    pub fn embed(&self, place: Place, precision: Precision) -> Real {
        let bits = precision.bits();
        let eta = eta_root(place, bits);
        self.eval_at(&eta)
    }

    /// Evaluate the coefficient polynomial at a fixed-point value of eta.
    pub fn eval_at(&self, eta: &Real) -> Real {
        let bits = eta.bits();
        let c: Vec<Real> = self
            .c
            .iter()
            .map(|x| Real::from_rational(x, bits))
            .collect();
        let eta2 = eta * eta;
        &(&c[0] + &(&c[1] * eta)) + &(&c[2] * &eta2)
    }

    pub fn embed_f64(&self, place: Place) -> f64 {
        let e = ETA_F64[place.index()];
        let c: Vec<f64> = self.c.iter().map(ratio_to_f64).collect();
        c[0] + e * (c[1] + e * c[2])
    }
}

fn ratio_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
    })
}

fn times_eta(c: &[BigRational; 3]) -> [BigRational; 3] {
    // (c0 + c1 e + c2 e^2) e = c2 e^3 + c1 e^2 + c0 e
    let [r0, r1, r2] = ETA_CUBE;
    [&c[2] * q(r0), &c[0] + &c[2] * q(r1), &c[1] + &c[2] * q(r2)]
}

fn det3(m: &[[BigRational; 3]; 3]) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

/// Power sums `Tr(eta^k)` for `k < count`, for the cubic with the given reduction rule.
pub fn trace_powers(rule: [i64; 3], count: usize) -> Vec<i64> {
    let [r0, r1, r2] = rule;
    let mut t = Vec::with_capacity(count.max(3));
    t.push(3);
    t.push(r2);
    t.push(r2 * r2 + 2 * r1);
    while t.len() < count {
        let n = t.len();
        t.push(r2 * t[n - 1] + r1 * t[n - 2] + r0 * t[n - 3]);
    }
    t.truncate(count);
    t
}

/// Trace Gram matrix `Tr(eta^(r+c))` on the power basis, for a given reduction rule.
pub fn trace_gram(rule: [i64; 3]) -> [[i64; 3]; 3] {
    let t = trace_powers(rule, 5);
    let mut g = [[0; 3]; 3];
    for (r, row) in g.iter_mut().enumerate() {
        for (c, v) in row.iter_mut().enumerate() {
            *v = t[r + c];
        }
    }
    g
}

/// Discriminant of Z[eta] computed from an arbitrary reduction rule.
pub fn discriminant_for_rule(rule: [i64; 3]) -> i64 {
    let g = trace_gram(rule);
    g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
        - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
        + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
}

pub fn field_discriminant() -> i64 {
    discriminant_for_rule(ETA_CUBE)
}

/// Image of eta at `place`, by exact bisection on dyadic rationals.
pub fn eta_root(place: Place, bits: u32) -> Real {
    let (lo, hi) = place.bracket();
    // Work with m / 2^k; the cubic at lo is negative for the natural place
    // and positive for the other two, so track the sign at lo.
    let cubic_sign = |m: &BigInt, k: u32| -> i32 {
        let s = BigInt::one() << k;
        let val = m * m * m + m * m * &s - BigInt::from(2) * m * &s * &s - &s * &s * &s;
        match val.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    };
    let lo_sign = cubic_sign(&BigInt::from(lo), 0);
    let mut k = 0u32;
    let mut a = BigInt::from(lo);
    let mut b = BigInt::from(hi);
    while k < bits {
        a <<= 1;
        b <<= 1;
        k += 1;
        let mid: BigInt = (&a + &b) >> 1;
        let s = cubic_sign(&mid, k);
        if s == 0 {
            return Real::from_dyadic(&mid, k, bits);
        }
        if s == lo_sign {
            a = mid;
        } else {
            b = mid;
        }
    }
    Real::from_dyadic(&a, k, bits)
}

/// Product of integral elements given by coefficient triples.
pub fn int_mul(a: &[i128; 3], b: &[i128; 3]) -> [i128; 3] {
    let p0 = a[0] * b[0];
    let p1 = a[0] * b[1] + a[1] * b[0];
    let p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    let p3 = a[1] * b[2] + a[2] * b[1];
    let p4 = a[2] * b[2];
    // eta^3 = 1 + 2eta - eta^2, eta^4 = -1 - eta + 3eta^2
    [p0 + p3 - p4, p1 + 2 * p3 - p4, p2 - p3 + 3 * p4]
}

/// Norm of an integral element given by a coefficient triple.
pub fn int_norm(a: &[i128; 3]) -> i128 {
    let e1 = int_mul(a, &[0, 1, 0]);
    let e2 = int_mul(&e1, &[0, 1, 0]);
    let m = [
        [a[0], e1[0], e2[0]],
        [a[1], e1[1], e2[1]],
        [a[2], e1[2], e2[2]],
    ];
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `N(a) * a^{-1}`, which is integral for integral `a`.
pub fn int_adjugate(a: &[i128; 3]) -> [i128; 3] {
    let e1 = int_mul(a, &[0, 1, 0]);
    let e2 = int_mul(&e1, &[0, 1, 0]);
    let m = [
        [a[0], e1[0], e2[0]],
        [a[1], e1[1], e2[1]],
        [a[2], e1[2], e2[2]],
    ];
    let cof =
        |r0: usize, r1: usize, c0: usize, c1: usize| m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    [cof(1, 2, 1, 2), -cof(1, 2, 0, 2), cof(1, 2, 0, 1)]
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: FieldElem) -> FieldElem {
                self.$method(&rhs)
            }
        }
    };
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
            ],
        }
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
            ],
        }
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let (a, b) = (&self.c, &rhs.c);
        let p0 = &a[0] * &b[0];
        let p1 = &a[0] * &b[1] + &a[1] * &b[0];
        let p2 = &a[0] * &b[2] + &a[1] * &b[1] + &a[2] * &b[0];
        let p3 = &a[1] * &b[2] + &a[2] * &b[1];
        let p4 = &a[2] * &b[2];
        let [r0, r1, r2] = ETA_CUBE;
        // eta^4 = r2 r0 + (r0 + r2 r1) eta + (r1 + r2^2) eta^2
        let (s0, s1, s2) = (r2 * r0, r0 + r2 * r1, r1 + r2 * r2);
        FieldElem {
            c: [
                p0 + &p3 * q(r0) + &p4 * q(s0),
                p1 + &p3 * q(r1) + &p4 * q(s1),
                p2 + &p3 * q(r2) + &p4 * q(s2),
            ],
        }
    }
}

/// Division by a nonzero element; panics on zero like integer division.
impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElem) -> FieldElem {
        self * &rhs.inverse().expect("division by zero in K")
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            c: [-&self.c[0], -&self.c[1], -&self.c[2]],
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl Default for FieldElem {
    fn default() -> Self {
        FieldElem::zero()
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_int(n)
    }
}

/// Renders `c0 + c1*eta + c2*eta^2`, omitting zero terms.
impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomials = ["", "eta", "eta^2"];
        let mut out = String::new();
        for (k, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let coeff_text = if abs.denom().is_one() {
                alloc::format!("{}", abs.numer())
            } else {
                alloc::format!("{}/{}", abs.numer(), abs.denom())
            };
            if k == 0 {
                out.push_str(&coeff_text);
            } else if abs.is_one() {
                out.push_str(monomials[k]);
            } else {
                out.push_str(&coeff_text);
                out.push('*');
                out.push_str(monomials[k]);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64, c: i64) -> FieldElem {
        FieldElem::from_ints(a, b, c)
    }

    #[test]
    fn eta_cubed_reduces() {
        let eta = FieldElem::eta();
        assert_eq!(&eta * &(&eta * &eta), fe(1, 2, -1));
        assert!((eta.pow(3) + eta.pow(2) - &eta * &fe(2, 0, 0) - fe(1, 0, 0)).is_zero());
    }

    #[test]
    fn ramification_identity() {
        let lhs = fe(2, -1, 0).pow(3);
        let rhs = &fe(7, 0, 0) * &fe(-1, 1, 0).pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs, fe(7, -14, 7));
    }

    #[test]
    fn units_from_the_text() {
        assert!((&fe(-1, 1, 0) * &fe(0, 2, 1)).is_one());
        assert_eq!(FieldElem::eta().inverse().unwrap(), fe(-2, 1, 1));
        assert_eq!(FieldElem::one().inverse().unwrap(), FieldElem::one());
        assert_eq!(FieldElem::zero().inverse(), Err(Error::ZeroInput));
    }

    #[test]
    fn inverse_of_two_minus_eta_has_denominator_seven() {
        let x = fe(2, -1, 0);
        let inv = x.inverse().unwrap();
        assert_eq!(inv.denominator(), BigInt::from(7));
        assert!((&inv * &x).is_one());
        // From (2 - eta)^3 = 7 (eta - 1)^2: (2 - eta)^{-1} = (2 - eta)^2 / (7 (eta - 1)^2).
        let via_identity = &x.pow(2) * &(&fe(-1, 1, 0).pow(2) * &fe(7, 0, 0)).inverse().unwrap();
        assert_eq!(inv, via_identity);
    }

    #[test]
    fn trace_table() {
        let eta = FieldElem::eta();
        assert_eq!(eta.trace(), q(-1));
        assert_eq!(eta.pow(2).trace(), q(5));
        assert_eq!(eta.pow(3).trace(), q(-4));
        assert_eq!(eta.pow(4).trace(), q(13));
        assert_eq!(trace_powers(ETA_CUBE, 5), [3, -1, 5, -4, 13]);
    }

    #[test]
    fn norms() {
        assert_eq!(FieldElem::eta().norm(), q(1));
        assert_eq!(fe(2, -1, 0).norm().abs(), q(7));
        assert_eq!(FieldElem::tau().norm(), q(7));
        assert_eq!(fe(2, 0, 0).norm(), q(8));
        assert_eq!(int_norm(&[2, -1, 0]), 7);
        assert_eq!(int_norm(&[-1, 1, 0]).abs(), 1);
    }

    #[test]
    fn adjugate_inverts() {
        let a = [3i128, -2, 0];
        let adj = int_adjugate(&a);
        assert_eq!(int_mul(&a, &adj), [int_norm(&a), 0, 0]);
    }

    #[test]
    fn discriminant_and_gram() {
        assert_eq!(field_discriminant(), 49);
        assert_eq!(trace_gram(ETA_CUBE), [[3, -1, 5], [-1, 5, -4], [5, -4, 13]]);
    }

    #[test]
    fn tampered_rule_breaks_discriminant() {
        assert_ne!(discriminant_for_rule([1, 2, 1]), 49);
        assert_ne!(discriminant_for_rule([1, 3, -1]), 49);
    }

    #[test]
    fn embeddings() {
        let p = Precision::DEFAULT;
        let natural = FieldElem::eta().embed(Place::Natural, p).to_f64();
        assert!((natural - 2.0 * (2.0 * core::f64::consts::PI / 7.0).cos()).abs() < 1e-15);
        for place in [Place::Sigma1, Place::Sigma2] {
            assert!(FieldElem::eta().embed(place, p).is_negative());
        }
        for place in Place::ALL {
            let one = FieldElem::one().embed(place, p);
            assert_eq!(
                one.to_decimal(60),
                "1.000000000000000000000000000000000000000000000000000000000000"
            );
            assert!(
                (FieldElem::eta().embed(place, p).to_f64() - ETA_F64[place.index()]).abs() < 1e-15
            );
        }
        let expected = [
            2.0 * (2.0 * core::f64::consts::PI / 7.0).cos(),
            2.0 * (4.0 * core::f64::consts::PI / 7.0).cos(),
            2.0 * (6.0 * core::f64::consts::PI / 7.0).cos(),
        ];
        for place in Place::ALL {
            assert!((ETA_F64[place.index()] - expected[place.index()]).abs() < 1e-14);
        }
    }

    #[test]
    fn discriminant_from_embeddings() {
        // Square of the Vandermonde determinant of the three roots.
        let r = ETA_F64;
        let v = (r[0] - r[1]) * (r[0] - r[2]) * (r[1] - r[2]);
        assert!((v * v - 49.0).abs() < 1e-6);
        assert_eq!((v * v).round() as i64, 49);
    }

    #[test]
    fn display() {
        assert_eq!(fe(-1, -3, 0).to_string(), "-1 - 3*eta");
        assert_eq!(fe(0, 1, 1).to_string(), "eta + eta^2");
        assert_eq!(FieldElem::zero().to_string(), "0");
        let x = FieldElem::new(
            BigRational::new((-9).into(), 7.into()),
            BigRational::new(2.into(), 7.into()),
            BigRational::new(3.into(), 7.into()),
        );
        assert_eq!(x.to_string(), "-9/7 + 2/7*eta + 3/7*eta^2");
    }
}
