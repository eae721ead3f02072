//! The quaternion algebra D = (eta, eta)_K: i^2 = j^2 = eta, ji = -ij.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::field::{FieldElem, Place, ETA_F64};
use crate::real::{Precision, Real};

/// `a + b i + c j + d ij`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuatElem {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl QuatElem {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        QuatElem { a, b, c, d }
    }

    pub fn from_coords(v: [FieldElem; 4]) -> Self {
        let [a, b, c, d] = v;
        QuatElem { a, b, c, d }
    }

    pub fn coords(&self) -> [&FieldElem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn into_coords(self) -> [FieldElem; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn scalar(x: FieldElem) -> Self {
        QuatElem::new(x, FieldElem::zero(), FieldElem::zero(), FieldElem::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::scalar(FieldElem::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        QuatElem::new(
            FieldElem::zero(),
            FieldElem::one(),
            FieldElem::zero(),
            FieldElem::zero(),
        )
    }

    pub fn j() -> Self {
        QuatElem::new(
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::one(),
            FieldElem::zero(),
        )
    }

    pub fn ij() -> Self {
        QuatElem::new(
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::zero(),
            FieldElem::one(),
        )
    }

    /// j' = (1 + eta i + tau j) / 2.
    pub fn j_prime() -> Self {
        let half = FieldElem::from_fraction(1, 2);
        QuatElem::new(
            half.clone(),
            &half * &FieldElem::eta(),
            &half * &FieldElem::tau(),
            FieldElem::zero(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    pub fn is_scalar(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        QuatElem::new(s * &self.a, s * &self.b, s * &self.c, s * &self.d)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        QuatElem::new(
            self.a.scale(r),
            self.b.scale(r),
            self.c.scale(r),
            self.d.scale(r),
        )
    }

    pub fn conj(&self) -> Self {
        QuatElem::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn reduced_trace(&self) -> FieldElem {
        &self.a + &self.a
    }

    /// a^2 - eta b^2 - eta c^2 + eta^2 d^2.
    pub fn reduced_norm(&self) -> FieldElem {
        let eta = FieldElem::eta();
        let eta2 = &eta * &eta;
        &(&(&self.a * &self.a) - &(&eta * &(&(&self.b * &self.b) + &(&self.c * &self.c))))
            + &(&eta2 * &(&self.d * &self.d))
    }

    /// Inverse via the conjugate; `None` for zero-norm elements.
    pub fn inverse(&self) -> Option<QuatElem> {
        let n = self.reduced_norm().inverse().ok()?;
        Some(self.conj().scale(&n))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = QuatElem::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    pub fn commutator(&self, other: &QuatElem) -> QuatElem {
        &(self * other) - &(other * self)
    }

    /// Image under the splitting at the natural place:
    /// i -> diag(s, -s), j -> [[0, 1], [e, 0]] with e = eta, s = sqrt(e).
    pub fn real_matrix(&self, precision: Precision) -> RealMat2 {
        let bits = precision.bits();
        let e = crate::field::eta_root(Place::Natural, bits);
        let s = e.sqrt();
        let [a, b, c, d] = [&self.a, &self.b, &self.c, &self.d].map(|x| x.eval_at(&e));
        let bs = &b * &s;
        let ds = &d * &s;
        RealMat2([&a + &bs, &c + &ds, &(&c * &e) - &(&ds * &e), &a - &bs])
    }

    /// Double-precision version of [`QuatElem::real_matrix`].
    pub fn real_matrix_f64(&self) -> [f64; 4] {
        let e = ETA_F64[0];
        let s = libm::sqrt(e);
        let [a, b, c, d] =
            [&self.a, &self.b, &self.c, &self.d].map(|x| x.embed_f64(Place::Natural));
        [a + b * s, c + d * s, e * (c - d * s), a - b * s]
    }

    /// Reduced norm evaluated at a place.
    pub fn norm_at(&self, place: Place) -> f64 {
        self.reduced_norm().embed_f64(place)
    }
}

/// Signature of the reduced norm form at a real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormForm {
    /// Positive definite: the completion is Hamilton's quaternions.
    Definite,
    /// Indefinite: the completion is M_2(R).
    Indefinite,
}

/// The norm form is diag(1, -eta, -eta, eta^2), so its signature is the sign of eta.
pub fn norm_form_at(place: Place) -> NormForm {
    if FieldElem::eta()
        .embed(place, Precision::new(20))
        .is_negative()
    {
        NormForm::Definite
    } else {
        NormForm::Indefinite
    }
}

pub fn is_hamilton_at(place: Place) -> bool {
    norm_form_at(place) == NormForm::Definite
}

/// A real 2x2 matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealMat2(pub [Real; 4]);

impl RealMat2 {
    pub fn trace(&self) -> Real {
        &self.0[0] + &self.0[3]
    }

    pub fn det(&self) -> Real {
        &(&self.0[0] * &self.0[3]) - &(&self.0[1] * &self.0[2])
    }

    pub fn mul(&self, o: &RealMat2) -> RealMat2 {
        let m = &self.0;
        let n = &o.0;
        RealMat2([
            &(&m[0] * &n[0]) + &(&m[1] * &n[2]),
            &(&m[0] * &n[1]) + &(&m[1] * &n[3]),
            &(&m[2] * &n[0]) + &(&m[3] * &n[2]),
            &(&m[2] * &n[1]) + &(&m[3] * &n[3]),
        ])
    }

    /// Largest entrywise absolute difference.
    pub fn max_diff(&self, o: &RealMat2) -> Real {
        let mut best = Real::zero(self.0[0].bits());
        for k in 0..4 {
            let d = (&self.0[k] - &o.0[k]).abs();
            if d > best {
                best = d;
            }
        }
        best
    }
}

impl<'a> Add<&'a QuatElem> for &'a QuatElem {
    type Output = QuatElem;
    fn add(self, o: &QuatElem) -> QuatElem {
        QuatElem::new(
            &self.a + &o.a,
            &self.b + &o.b,
            &self.c + &o.c,
            &self.d + &o.d,
        )
    }
}

impl<'a> Sub<&'a QuatElem> for &'a QuatElem {
    type Output = QuatElem;
    fn sub(self, o: &QuatElem) -> QuatElem {
        QuatElem::new(
            &self.a - &o.a,
            &self.b - &o.b,
            &self.c - &o.c,
            &self.d - &o.d,
        )
    }
}

impl<'a> Mul<&'a QuatElem> for &'a QuatElem {
    type Output = QuatElem;
    fn mul(self, o: &QuatElem) -> QuatElem {
        let eta = FieldElem::eta();
        let eta2 = &eta * &eta;
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let a = &(&(a1 * a2) + &(&eta * &(&(b1 * b2) + &(c1 * c2)))) - &(&eta2 * &(d1 * d2));
        let b = &(&(a1 * b2) + &(b1 * a2)) + &(&eta * &(&(d1 * c2) - &(c1 * d2)));
        let c = &(&(a1 * c2) + &(c1 * a2)) + &(&eta * &(&(b1 * d2) - &(d1 * b2)));
        let d = &(&(a1 * d2) + &(d1 * a2)) + &(&(b1 * c2) - &(c1 * b2));
        QuatElem::new(a, b, c, d)
    }
}

impl Neg for &QuatElem {
    type Output = QuatElem;
    fn neg(self) -> QuatElem {
        QuatElem::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

macro_rules! forward_quat {
    ($tr:ident, $method:ident) => {
        impl $tr<QuatElem> for QuatElem {
            type Output = QuatElem;
            fn $method(self, rhs: QuatElem) -> QuatElem {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QuatElem> for QuatElem {
            type Output = QuatElem;
            fn $method(self, rhs: &QuatElem) -> QuatElem {
                (&self).$method(rhs)
            }
        }
    };
}

forward_quat!(Add, add);
forward_quat!(Sub, sub);
forward_quat!(Mul, mul);

impl Neg for QuatElem {
    type Output = QuatElem;
    fn neg(self) -> QuatElem {
        -&self
    }
}

impl From<FieldElem> for QuatElem {
    fn from(x: FieldElem) -> Self {
        QuatElem::scalar(x)
    }
}

/// `(q0) + (q1)*i + (q2)*j + (q3)*ij`, zero terms omitted.
impl fmt::Display for QuatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = ["", "i", "j", "ij"];
        let mut first = true;
        for (k, x) in self.coords().into_iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "({x})")?;
            } else {
                write!(f, "({x})*{}", units[k])?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64, c: i64) -> FieldElem {
        FieldElem::from_ints(a, b, c)
    }

    #[test]
    fn defining_relations() {
        let (i, j, ij) = (QuatElem::i(), QuatElem::j(), QuatElem::ij());
        let eta = QuatElem::scalar(FieldElem::eta());
        assert_eq!(&i * &i, eta);
        assert_eq!(&j * &j, eta);
        assert_eq!(&i * &j, ij);
        assert_eq!(&j * &i, -&ij);
        assert_eq!(&ij * &ij, QuatElem::scalar(-FieldElem::eta().pow(2)));
    }

    #[test]
    fn j_prime_identities() {
        let jp = QuatElem::j_prime();
        let i = QuatElem::i();
        assert_eq!(&jp * &jp, &jp + &QuatElem::scalar(fe(1, 3, 0)));
        let rhs = &(&QuatElem::scalar(FieldElem::eta().pow(2)) + &i) - &(&i * &jp);
        assert_eq!(&jp * &i, rhs);
        assert_eq!(jp.reduced_trace(), FieldElem::one());
        assert_eq!(jp.reduced_norm(), fe(-1, -3, 0));
    }

    #[test]
    fn norms_and_traces_of_basis() {
        assert_eq!(QuatElem::ij().reduced_norm(), FieldElem::eta().pow(2));
        assert!(QuatElem::i().reduced_trace().is_zero());
        let x = QuatElem::new(fe(1, 2, 0), fe(0, 1, -1), fe(3, 0, 1), fe(-2, 1, 1));
        assert_eq!(&x * &x.conj(), QuatElem::scalar(x.reduced_norm()));
        assert_eq!(&x.conj() * &x, QuatElem::scalar(x.reduced_norm()));
    }

    #[test]
    fn ramification_at_real_places() {
        assert!(is_hamilton_at(Place::Sigma1));
        assert!(is_hamilton_at(Place::Sigma2));
        assert_eq!(norm_form_at(Place::Natural), NormForm::Indefinite);
        // i - 1 has norm 1 - eta < 0 at the natural place
        assert!((&QuatElem::i() - &QuatElem::one()).norm_at(Place::Natural) < 0.0);
    }

    #[test]
    fn real_matrix_of_identity_and_j_prime() {
        let p = Precision::DEFAULT;
        let id = QuatElem::one().real_matrix(p);
        let one = Real::from_int(1, p.bits());
        let zero = Real::zero(p.bits());
        assert_eq!(id, RealMat2([one.clone(), zero.clone(), zero, one]));
        let jp = QuatElem::j_prime().real_matrix(p);
        assert!((jp.trace().to_f64() - 1.0).abs() < 1e-40);
    }

    #[test]
    fn display() {
        assert_eq!(
            QuatElem::j_prime().to_string(),
            "(1/2) + (1/2*eta)*i + (1/2 + 1/2*eta + 1/2*eta^2)*j"
        );
        assert_eq!(QuatElem::zero().to_string(), "0");
    }
}
