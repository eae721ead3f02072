//! 2 x 2 matrices over a residue ring, row-major.

use alloc::format;
use alloc::string::String;

use super::ring::{Residue, ResidueRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mat2(pub [Residue; 4]);

impl Mat2 {
    pub fn new(r: &ResidueRing, a: Residue, b: Residue, c: Residue, d: Residue) -> Mat2 {
        Mat2([a, b, c, d].map(|x| r.reduce(x.0.map(i128::from))))
    }

    pub fn from_ints(r: &ResidueRing, m: [i64; 4]) -> Mat2 {
        Mat2(m.map(|x| r.from_int(x)))
    }

    pub fn zero() -> Mat2 {
        Mat2::default()
    }

    pub fn scalar(r: &ResidueRing, s: &Residue) -> Mat2 {
        Mat2([*s, r.zero(), r.zero(), *s])
    }

    pub fn identity(r: &ResidueRing) -> Mat2 {
        Mat2::scalar(r, &r.one())
    }

    pub fn add(&self, r: &ResidueRing, o: &Mat2) -> Mat2 {
        Mat2(core::array::from_fn(|k| r.add(&self.0[k], &o.0[k])))
    }

    pub fn sub(&self, r: &ResidueRing, o: &Mat2) -> Mat2 {
        Mat2(core::array::from_fn(|k| r.sub(&self.0[k], &o.0[k])))
    }

    pub fn neg(&self, r: &ResidueRing) -> Mat2 {
        Mat2(self.0.map(|x| r.neg(&x)))
    }

    pub fn scale(&self, r: &ResidueRing, s: &Residue) -> Mat2 {
        Mat2(self.0.map(|x| r.mul(&x, s)))
    }

    pub fn mul(&self, r: &ResidueRing, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        let dot =
            |x: &Residue, y: &Residue, z: &Residue, w: &Residue| r.add(&r.mul(x, y), &r.mul(z, w));
        Mat2([
            dot(a, e, b, g),
            dot(a, f, b, h),
            dot(c, e, d, g),
            dot(c, f, d, h),
        ])
    }

    pub fn pow(&self, r: &ResidueRing, mut n: u64) -> Mat2 {
        let mut base = *self;
        let mut acc = Mat2::identity(r);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(r, &base);
            }
            base = base.mul(r, &base);
            n >>= 1;
        }
        acc
    }

    pub fn det(&self, r: &ResidueRing) -> Residue {
        let [a, b, c, d] = &self.0;
        r.sub(&r.mul(a, d), &r.mul(b, c))
    }

    pub fn trace(&self, r: &ResidueRing) -> Residue {
        r.add(&self.0[0], &self.0[3])
    }

    pub fn is_scalar(&self) -> bool {
        self.0[1] == Residue::default() && self.0[2] == Residue::default() && self.0[0] == self.0[3]
    }

    /// Canonical representative of the class modulo -1: the smaller of `m` and `-m`.
    pub fn projective(&self, r: &ResidueRing) -> Mat2 {
        let n = self.neg(r);
        if n < *self {
            n
        } else {
            *self
        }
    }

    pub fn display(&self, r: &ResidueRing) -> String {
        let e = self.0.map(|x| r.display(&x));
        format!("[[{}, {}], [{}, {}]]", e[0], e[1], e[2], e[3])
    }
}

/// Determinant of a 4 x 4 matrix over a commutative ring by cofactor expansion.
pub fn det4(r: &ResidueRing, m: &[[Residue; 4]; 4]) -> Residue {
    let mut total = r.zero();
    for c in 0..4 {
        let minor: [[Residue; 3]; 3] = core::array::from_fn(|i| {
            let row = &m[i + 1];
            let mut it = (0..4).filter(|&k| k != c).map(|k| row[k]);
            core::array::from_fn(|_| it.next().expect("three columns"))
        });
        let term = r.mul(&m[0][c], &det3(r, &minor));
        total = if c % 2 == 0 {
            r.add(&total, &term)
        } else {
            r.sub(&total, &term)
        };
    }
    total
}

fn det3(r: &ResidueRing, m: &[[Residue; 3]; 3]) -> Residue {
    let d2 = |a: &Residue, b: &Residue, c: &Residue, d: &Residue| r.sub(&r.mul(a, d), &r.mul(b, c));
    let t0 = r.mul(&m[0][0], &d2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]));
    let t1 = r.mul(&m[0][1], &d2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]));
    let t2 = r.mul(&m[0][2], &d2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
    r.add(&r.sub(&t0, &t1), &t2)
}
