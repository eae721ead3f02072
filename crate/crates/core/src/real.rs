//! Binary fixed-point reals backed by big integers.
//!
//! Only the handful of operations the engine needs are provided: the field
//! operations, square root, natural logarithm and inverse hyperbolic cosine.
//! A value is `mant / 2^bits`; both operands of a binary operation must share
//! the same `bits`.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Working precision, in decimal digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    pub digits: u32,
}

impl Precision {
    pub const DEFAULT: Precision = Precision { digits: 64 };

    pub const fn new(digits: u32) -> Self {
        Precision { digits }
    }

    /// Binary digits carried, including 40 guard bits.
    pub fn bits(self) -> u32 {
        (self.digits as u64 * 3322 / 1000) as u32 + 40
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::DEFAULT
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mant: BigInt,
    bits: u32,
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real {
            mant: BigInt::zero(),
            bits,
        }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Real {
            mant: BigInt::from(n) << bits,
            bits,
        }
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Self {
        Real {
            mant: n << bits,
            bits,
        }
    }

    /// Nearest fixed-point value to `q` (rounded toward negative infinity).
    pub fn from_rational(q: &BigRational, bits: u32) -> Self {
        let num: BigInt = q.numer() << bits;
        Real {
            mant: floor_div(&num, q.denom()),
            bits,
        }
    }

    /// Exact dyadic value `m / 2^shift`, rescaled to `bits`.
    pub fn from_dyadic(m: &BigInt, shift: u32, bits: u32) -> Self {
        let mant = if bits >= shift {
            m << (bits - shift)
        } else {
            m >> (shift - bits)
        };
        Real { mant, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn abs(&self) -> Self {
        Real {
            mant: self.mant.abs(),
            bits: self.bits,
        }
    }

    pub fn div(&self, other: &Real) -> Real {
        debug_assert_eq!(self.bits, other.bits);
        let num: BigInt = &self.mant << self.bits;
        Real {
            mant: floor_div(&num, &other.mant),
            bits: self.bits,
        }
    }

    pub fn div_int(&self, n: i64) -> Real {
        Real {
            mant: floor_div(&self.mant, &BigInt::from(n)),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, n: i64) -> Real {
        Real {
            mant: &self.mant * n,
            bits: self.bits,
        }
    }

    /// Square root; panics on negative input.
    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "square root of a negative real");
        let wide: BigInt = &self.mant << self.bits;
        Real {
            mant: wide.sqrt(),
            bits: self.bits,
        }
    }

    fn atanh_series(z: &Real) -> Real {
        let z2 = z * z;
        let mut sum = z.clone();
        let mut power = z.clone();
        let mut k = 3i64;
        loop {
            power = &power * &z2;
            let term = power.div_int(k);
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            k += 2;
        }
        sum
    }

    pub fn ln2(bits: u32) -> Real {
        let third = Real::from_int(1, bits).div_int(3);
        Real::atanh_series(&third).mul_int(2)
    }

    /// Natural logarithm; panics unless the argument is positive.
    pub fn ln(&self) -> Real {
        assert!(
            self.mant.sign() == Sign::Plus,
            "logarithm of a non-positive real"
        );
        let bits = self.bits;
        let len = self.mant.bits() as i64;
        let exponent = len - 1 - bits as i64;
        // m in [1, 2)
        let m = Real::from_dyadic(&self.mant, (len - 1) as u32, bits);
        let one = Real::from_int(1, bits);
        let z = (&m - &one).div(&(&m + &one));
        let lnm = Real::atanh_series(&z).mul_int(2);
        &lnm + &Real::ln2(bits).mul_int(exponent)
    }

    /// Inverse hyperbolic cosine; the argument must be at least one.
    pub fn acosh(&self) -> Real {
        let one = Real::from_int(1, self.bits);
        let sq = &(self * self) - &one;
        let root = if sq.is_negative() {
            Real::zero(self.bits)
        } else {
            sq.sqrt()
        };
        (self + &root).ln()
    }

    pub fn to_f64(&self) -> f64 {
        let len = self.mant.bits() as i64;
        let shift = (len - 60).max(0);
        let top = (&self.mant >> shift as u32).to_f64().unwrap_or(0.0);
        top * libm::exp2((shift - self.bits as i64) as f64)
    }

    /// Decimal rendering with `digits` fractional digits, rounded to nearest.
    pub fn to_decimal(&self, digits: u32) -> String {
        let ten = BigInt::from(10u32);
        let scale = num_traits::pow(ten, digits as usize);
        let abs = self.mant.abs() * scale;
        let half = BigInt::one() << (self.bits.max(1) - 1);
        let rounded: BigInt = (abs + half) >> self.bits;
        let mut s = rounded.to_str_radix(10);
        let width = digits as usize + 1;
        if s.len() < width {
            let mut padded = String::new();
            for _ in 0..width - s.len() {
                padded.push('0');
            }
            padded.push_str(&s);
            s = padded;
        }
        let split = s.len() - digits as usize;
        let mut out = String::new();
        if self.is_negative() && rounded_nonzero(&s) {
            out.push('-');
        }
        out.push_str(&s[..split]);
        if digits > 0 {
            out.push('.');
            out.push_str(&s[split..]);
        }
        out
    }
}

fn rounded_nonzero(s: &str) -> bool {
    s.bytes().any(|b| b != b'0')
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::div_floor(a, b)
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.bits, other.bits);
        self.mant.cmp(&other.mant)
    }
}

impl<'a> Add<&'a Real> for &'a Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        Real {
            mant: &self.mant + &rhs.mant,
            bits: self.bits,
        }
    }
}

impl<'a> Sub<&'a Real> for &'a Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        Real {
            mant: &self.mant - &rhs.mant,
            bits: self.bits,
        }
    }
}

impl<'a> Mul<&'a Real> for &'a Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        let prod = &self.mant * &rhs.mant;
        Real {
            mant: floor_div(&prod, &(BigInt::one() << self.bits)),
            bits: self.bits,
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            mant: -&self.mant,
            bits: self.bits,
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BITS: u32 = 253;

    #[test]
    fn ln_and_acosh_match_f64() {
        let x = Real::from_int(3, BITS);
        assert!((x.ln().to_f64() - 3f64.ln()).abs() < 1e-15);
        assert!((x.acosh().to_f64() - 3f64.acosh()).abs() < 1e-15);
        let small = Real::from_int(1, BITS).div_int(7);
        assert!((small.ln().to_f64() - (1.0f64 / 7.0).ln()).abs() < 1e-15);
    }

    #[test]
    fn ln2_to_sixty_digits() {
        let ln2 = Real::ln2(Precision::DEFAULT.bits());
        assert_eq!(
            ln2.to_decimal(60),
            "0.693147180559945309417232121458176568075500134360255254120680"
        );
    }

    #[test]
    fn sqrt_two_to_sixty_digits() {
        let two = Real::from_int(2, Precision::DEFAULT.bits());
        assert_eq!(
            two.sqrt().to_decimal(60),
            "1.414213562373095048801688724209698078569671875376948073176680"
        );
    }

    #[test]
    fn decimal_rendering_of_negatives() {
        let x = Real::from_int(-3, BITS).div_int(2);
        assert_eq!(x.to_decimal(3), "-1.500");
        assert_eq!(Real::zero(BITS).to_decimal(2), "0.00");
    }
}
