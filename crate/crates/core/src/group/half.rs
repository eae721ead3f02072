//! Integer arithmetic on the Hurwitz order.
//!
//! Every element of Q_Hur lies in (1/2) O, so `x` is stored as the integer
//! coordinates of `2x` on 1, i, j, ij (each coordinate a triple over
//! 1, eta, eta^2). This is the representation used by the enumeration
//! engines; `QuatElem` is only used at the boundaries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::field::{int_adjugate, int_mul, int_norm, FieldElem, ETA_F64};
use crate::quat::QuatElem;

type Tri = [i128; 3];

fn times_eta(v: &Tri) -> Tri {
    [v[2], v[0] + 2 * v[2], v[1] - v[2]]
}

fn add(a: &Tri, b: &Tri) -> Tri {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn sub(a: &Tri, b: &Tri) -> Tri {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn even(v: &Tri) -> bool {
    v.iter().all(|c| c % 2 == 0)
}

/// Product of integer quaternions on 1, i, j, ij.
fn quat_mul(x: &[Tri; 4], y: &[Tri; 4]) -> [Tri; 4] {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    let m = int_mul;
    let a = sub(
        &add(&m(a1, a2), &times_eta(&add(&m(b1, b2), &m(c1, c2)))),
        &times_eta(&times_eta(&m(d1, d2))),
    );
    let b = add(
        &add(&m(a1, b2), &m(b1, a2)),
        &times_eta(&sub(&m(d1, c2), &m(c1, d2))),
    );
    let c = add(
        &add(&m(a1, c2), &m(c1, a2)),
        &times_eta(&sub(&m(b1, d2), &m(d1, b2))),
    );
    let d = add(&add(&m(a1, d2), &m(d1, a2)), &sub(&m(b1, c2), &m(c1, b2)));
    [a, b, c, d]
}

/// An element `x` of Q_Hur, stored as the coordinates of `2x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfQuat(pub [[i64; 3]; 4]);

impl HalfQuat {
    fn wide(&self) -> [Tri; 4] {
        self.0.map(|t| t.map(i128::from))
    }

    fn narrow(v: [Tri; 4]) -> Result<HalfQuat> {
        let mut out = [[0i64; 3]; 4];
        for k in 0..4 {
            for l in 0..3 {
                out[k][l] = i64::try_from(v[k][l]).map_err(|_| Error::Overflow)?;
            }
        }
        Ok(HalfQuat(out))
    }

    pub fn one() -> HalfQuat {
        HalfQuat([[2, 0, 0], [0; 3], [0; 3], [0; 3]])
    }

    pub fn from_int(n: i64) -> HalfQuat {
        HalfQuat([[2 * n, 0, 0], [0; 3], [0; 3], [0; 3]])
    }

    /// Fails unless `2x` has integral coordinates.
    pub fn from_quat(x: &QuatElem) -> Result<HalfQuat> {
        let two = FieldElem::from_int(2);
        let mut out = [[0i64; 3]; 4];
        for (k, c) in x.coords().iter().enumerate() {
            let v = (*c * &two).integral_coeffs().ok_or(Error::NotInOrder)?;
            for l in 0..3 {
                out[k][l] = v[l].to_i64().ok_or(Error::Overflow)?;
            }
        }
        Ok(HalfQuat(out))
    }

    pub fn to_quat(&self) -> QuatElem {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let c = self
            .0
            .map(|t| FieldElem::from_ints(t[0], t[1], t[2]).scale(&half));
        QuatElem::from_coords(c)
    }

    /// Product; exact because Q_Hur is closed under multiplication.
    pub fn mul(&self, o: &HalfQuat) -> Result<HalfQuat> {
        let p = quat_mul(&self.wide(), &o.wide());
        debug_assert!(p.iter().all(even), "product left the Hurwitz order");
        Self::narrow(p.map(|t| t.map(|c| c / 2)))
    }

    pub fn add(&self, o: &HalfQuat) -> Result<HalfQuat> {
        let (a, b) = (self.wide(), o.wide());
        Self::narrow(core::array::from_fn(|k| add(&a[k], &b[k])))
    }

    pub fn neg(&self) -> HalfQuat {
        HalfQuat(self.0.map(|t| t.map(|c| -c)))
    }

    pub fn conj(&self) -> HalfQuat {
        let [a, b, c, d] = self.0;
        let n = |t: [i64; 3]| t.map(|v| -v);
        HalfQuat([a, n(b), n(c), n(d)])
    }

    /// Reduced trace, which is the first coordinate of `2x`.
    pub fn trace(&self) -> [i64; 3] {
        self.0[0]
    }

    /// `4 nrd(x)` as an integral triple.
    pub fn norm_times_four(&self) -> [i128; 3] {
        let [a, b, c, d] = self.wide();
        let sq = |v: &Tri| int_mul(v, v);
        let bc = times_eta(&add(&sq(&b), &sq(&c)));
        add(&sub(&sq(&a), &bc), &times_eta(&times_eta(&sq(&d))))
    }

    pub fn is_norm_one(&self) -> bool {
        self.norm_times_four() == [4, 0, 0]
    }

    pub fn is_pm_one(&self) -> bool {
        let [a, b, c, d] = self.0;
        b == [0; 3] && c == [0; 3] && d == [0; 3] && (a == [2, 0, 0] || a == [-2, 0, 0])
    }

    /// Representative of `{x, -x}`: the larger of the two.
    pub fn canonical(&self) -> HalfQuat {
        let n = self.neg();
        if n > *self {
            n
        } else {
            *self
        }
    }

    /// Representative of `{x, -x, conj x, -conj x}`.
    pub fn canonical_up_to_inverse(&self) -> HalfQuat {
        let a = self.canonical();
        let b = self.conj().canonical();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Largest absolute coordinate, a crude size measure.
    pub fn height(&self) -> i64 {
        self.0.iter().flatten().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Real 2 x 2 matrix at the natural place, as `[a, b, c, d]` row-major.
    pub fn matrix_f64(&self) -> [f64; 4] {
        let e = ETA_F64[0];
        let s = libm::sqrt(e);
        let [a, b, c, d] = self.0.map(|t| eval_f64(&t, 0) / 2.0);
        [a + b * s, c + d * s, e * (c - d * s), a - b * s]
    }
}

/// Value of an integral triple at the given real place (0, 1 or 2).
pub fn eval_f64(t: &[i64; 3], place: usize) -> f64 {
    let e = ETA_F64[place];
    t[0] as f64 + t[1] as f64 * e + t[2] as f64 * e * e
}

/// Test for `x = s (mod g Q_Hur)` on the integer representation.
#[derive(Debug, Clone)]
pub struct CongruenceTester {
    adj: Tri,
    norm: i128,
}

impl CongruenceTester {
    pub fn new(g: &FieldElem) -> Result<CongruenceTester> {
        let c = g.integral_coeffs().ok_or(Error::NotInvertible)?;
        let mut t = [0i128; 3];
        for k in 0..3 {
            t[k] = c[k].to_i128().ok_or(Error::Overflow)?;
        }
        let norm = int_norm(&t);
        if norm == 0 {
            return Err(Error::ZeroInput);
        }
        Ok(CongruenceTester {
            adj: int_adjugate(&t),
            norm,
        })
    }

    /// Is `(x - s) / g` in the Hurwitz order?
    pub fn congruent(&self, x: &HalfQuat, s: i64) -> bool {
        let mut w = x.wide();
        w[0][0] -= 2 * s as i128;
        let mut y = [[0i128; 3]; 4];
        for k in 0..4 {
            let p = int_mul(&w[k], &self.adj);
            for l in 0..3 {
                if p[l] % self.norm != 0 {
                    return false;
                }
                y[k][l] = p[l] / self.norm;
            }
        }
        hurwitz_parity(&y)
    }

    /// `x = 1` or `x = -1` modulo `g Q_Hur`.
    pub fn congruent_pm_one(&self, x: &HalfQuat) -> bool {
        self.congruent(x, 1) || self.congruent(x, -1)
    }
}

/// The Hurwitz congruences on `2y = (a, b, c, d)`:
/// a = eta^2 b + (eta + 1) c and d = tau b + eta c modulo 2.
pub fn hurwitz_parity(y: &[Tri; 4]) -> bool {
    let [a, b, c, d] = y;
    let eb = times_eta(b);
    let e2b = times_eta(&eb);
    let ec = times_eta(c);
    let first = sub(&sub(a, &e2b), &add(&ec, c));
    // tau = 1 + eta + eta^2
    let tau_b = add(&add(b, &eb), &e2b);
    let second = sub(&sub(d, &tau_b), &ec);
    even(&first) && even(&second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generators::{g2, g3, g7};
    use crate::order::hur_congruence_test;

    #[test]
    fn round_trip_and_products() {
        let (a, b, c) = (g2(), g3(), g7());
        let (ha, hb, hc) = (
            HalfQuat::from_quat(&a).unwrap(),
            HalfQuat::from_quat(&b).unwrap(),
            HalfQuat::from_quat(&c).unwrap(),
        );
        assert_eq!(ha.0, [[0; 3], [0; 3], [0; 3], [-4, 2, 2]]);
        assert_eq!(hb.0, [[1, 0, 0], [0; 3], [-2, 0, 1], [3, 0, -1]]);
        assert_eq!(ha.to_quat(), a);
        assert_eq!(hc.mul(&hb).unwrap(), ha);
        assert_eq!(
            HalfQuat::from_quat(&(&a * &b)).unwrap(),
            ha.mul(&hb).unwrap()
        );
        assert!(ha.is_norm_one() && hb.is_norm_one() && hc.is_norm_one());
        assert_eq!(hb.mul(&hb.conj()).unwrap(), HalfQuat::one());
        assert_eq!(ha.mul(&ha).unwrap(), HalfQuat::from_int(-1));
        assert_eq!(ha.trace(), [0, 0, 0]);
        assert!(
            HalfQuat::from_quat(&QuatElem::i().scale(&FieldElem::from_fraction(1, 4))).is_err()
        );
    }

    #[test]
    fn parity_matches_exact_membership() {
        let mut count = 0;
        for bits in 0u32..4096 {
            let t = |k: u32| {
                [
                    (bits >> k & 1) as i128,
                    (bits >> (k + 1) & 1) as i128,
                    (bits >> (k + 2) & 1) as i128,
                ]
            };
            let y = [t(0), t(3), t(6), t(9)];
            let q = QuatElem::from_coords(y.map(|v| {
                FieldElem::from_ints(v[0] as i64, v[1] as i64, v[2] as i64)
                    .scale(&BigRational::new(1.into(), 2.into()))
            }));
            assert_eq!(hurwitz_parity(&y), hur_congruence_test(&q));
            count += hurwitz_parity(&y) as u32;
        }
        // [Q_Hur : O] = 64 of the 4096 classes of (1/2) O / O
        assert_eq!(count, 64);
    }

    #[test]
    fn congruence_tester() {
        let t = CongruenceTester::new(&FieldElem::from_ints(2, -1, 0)).unwrap();
        assert!(t.congruent(&HalfQuat::one(), 1));
        assert!(!t.congruent(&HalfQuat::one(), -1));
        let ha = HalfQuat::from_quat(&g2()).unwrap();
        assert!(!t.congruent_pm_one(&ha));
        let two = CongruenceTester::new(&FieldElem::from_int(2)).unwrap();
        assert!(two.congruent(&HalfQuat::one(), -1));
        let seven = HalfQuat::from_int(7);
        assert!(t.congruent(&seven, 0));
    }

    #[test]
    fn real_matrix_agrees() {
        let m = HalfQuat::from_quat(&g7()).unwrap().matrix_f64();
        let r = g7().real_matrix_f64();
        for k in 0..4 {
            assert!((m[k] - r[k]).abs() < 1e-12);
        }
    }
}
