//! Quotients of Z[eta] by prime-power ideals.
//!
//! An ideal is a rank-3 sublattice of Z^3 (coordinates on 1, eta, eta^2).
//! Its Hermite normal form is lower triangular with positive diagonal
//! `d0, d1, d2`, and the canonical representative of a class is the unique
//! vector with `0 <= v_k < d_k`, obtained by clearing the columns from the
//! top down.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{int_mul, FieldElem};
use crate::ideal::{factor_ideal, IdealK, PrimeIdeal};
use crate::linalg::FieldOps;

/// A canonical representative, as coefficients on 1, eta, eta^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Residue(pub [i64; 3]);

impl Residue {
    pub fn coeffs(&self) -> [i64; 3] {
        self.0
    }
}

/// Lower-triangular Hermite basis of an ideal of Z[eta].
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Hnf {
    /// Row `k` has its pivot in column `k` and zeros after it.
    rows: [[i128; 3]; 3],
}

impl Hnf {
    pub(crate) fn of_generator(gen: &[i128; 3]) -> Hnf {
        let e1 = int_mul(gen, &[0, 1, 0]);
        let e2 = int_mul(&e1, &[0, 1, 0]);
        let mut active: Vec<[i128; 3]> = alloc::vec![*gen, e1, e2];
        let mut rows = [[0i128; 3]; 3];
        for col in (0..3).rev() {
            loop {
                let nonzero: Vec<usize> =
                    (0..active.len()).filter(|&k| active[k][col] != 0).collect();
                if nonzero.len() <= 1 {
                    break;
                }
                let &pivot = nonzero
                    .iter()
                    .min_by_key(|&&k| active[k][col].abs())
                    .expect("nonempty");
                let p = active[pivot];
                for &k in &nonzero {
                    if k != pivot {
                        let q = Integer::div_floor(&active[k][col], &p[col]);
                        for c in 0..3 {
                            active[k][c] -= q * p[c];
                        }
                    }
                }
            }
            let pos = (0..active.len())
                .find(|&k| active[k][col] != 0)
                .expect("ideal of full rank");
            let mut row = active.remove(pos);
            if row[col] < 0 {
                row = row.map(|v| -v);
            }
            rows[col] = row;
        }
        let mut hnf = Hnf { rows };
        for k in 1..3 {
            for col in (0..k).rev() {
                let q = Integer::div_floor(&hnf.rows[k][col], &hnf.rows[col][col]);
                for c in 0..3 {
                    hnf.rows[k][c] -= q * hnf.rows[col][c];
                }
            }
        }
        hnf
    }

    pub(crate) fn diag(&self) -> [i128; 3] {
        [self.rows[0][0], self.rows[1][1], self.rows[2][2]]
    }

    pub(crate) fn reduce(&self, mut v: [i128; 3]) -> [i128; 3] {
        for col in (0..3).rev() {
            let q = Integer::div_floor(&v[col], &self.rows[col][col]);
            if q != 0 {
                for c in 0..=col {
                    v[c] -= q * self.rows[col][c];
                }
            }
        }
        v
    }

    pub(crate) fn size(&self) -> u64 {
        let d = self.diag();
        (d[0] * d[1] * d[2]) as u64
    }

    /// The `idx`-th canonical representative in mixed radix (c0 fastest).
    pub(crate) fn nth(&self, mut idx: u64) -> [i128; 3] {
        let d = self.diag();
        let mut v = [0i128; 3];
        for k in 0..3 {
            v[k] = (idx % d[k] as u64) as i128;
            idx /= d[k] as u64;
        }
        v
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// A finite field Z[eta]/P.
    PrimeField,
    /// Z[eta]/P^k for an odd prime P and k > 1.
    Local,
    /// Z[eta]/2^t for t > 1.
    EvenLocal,
    /// A product of the above over coprime prime powers.
    Product,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::PrimeField => "prime-field",
            RingKind::Local => "local",
            RingKind::EvenLocal => "even-local",
            RingKind::Product => "product",
        }
    }
}

/// Z[eta]/P^k for a prime ideal P.
#[derive(Debug, Clone)]
pub struct ResidueRing {
    modulus: IdealK,
    prime: PrimeIdeal,
    exponent: u32,
    hnf: Hnf,
    prime_hnf: Hnf,
    size: u64,
    residue_size: u64,
}

fn ideal_coeffs(ideal: &IdealK) -> Result<[i128; 3]> {
    let c = ideal
        .generator()
        .integral_coeffs()
        .ok_or(Error::NotInvertible)?;
    let mut out = [0i128; 3];
    for k in 0..3 {
        out[k] = c[k].to_i128().ok_or(Error::Overflow)?;
    }
    Ok(out)
}

impl ResidueRing {
    /// The ring Z[eta]/P^k.
    pub fn new(prime: PrimeIdeal, exponent: u32) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::ProperIdealRequired);
        }
        let modulus = prime.ideal.pow(exponent);
        let hnf = Hnf::of_generator(&ideal_coeffs(&modulus)?);
        let prime_hnf = Hnf::of_generator(&ideal_coeffs(&prime.ideal)?);
        let size = hnf.size();
        let residue_size = prime_hnf.size();
        if modulus.norm() != BigInt::from(size) {
            return Err(Error::Consistency(format!(
                "index of {modulus} does not match its norm"
            )));
        }
        Ok(ResidueRing {
            modulus,
            prime,
            exponent,
            hnf,
            prime_hnf,
            size,
            residue_size,
        })
    }

    pub fn modulus(&self) -> &IdealK {
        &self.modulus
    }

    pub fn prime(&self) -> &PrimeIdeal {
        &self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Order of the residue field.
    pub fn residue_size(&self) -> u64 {
        self.residue_size
    }

    pub fn characteristic(&self) -> u64 {
        self.prime.p
    }

    pub fn is_even(&self) -> bool {
        self.prime.p == 2
    }

    pub fn kind(&self) -> RingKind {
        if self.exponent == 1 {
            RingKind::PrimeField
        } else if self.is_even() {
            RingKind::EvenLocal
        } else {
            RingKind::Local
        }
    }

    /// Diagonal of the Hermite basis; representative coordinate `k` lies in `0..d_k`.
    pub fn moduli(&self) -> [i64; 3] {
        self.hnf.diag().map(|d| d as i64)
    }

    pub fn reduce(&self, v: [i128; 3]) -> Residue {
        Residue(self.hnf.reduce(v).map(|c| c as i64))
    }

    fn wide(x: &Residue) -> [i128; 3] {
        x.0.map(i128::from)
    }

    pub fn zero(&self) -> Residue {
        Residue::default()
    }

    pub fn one(&self) -> Residue {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Residue {
        self.reduce([n as i128, 0, 0])
    }

    pub fn from_coeffs(&self, c: [i64; 3]) -> Residue {
        self.reduce(c.map(i128::from))
    }

    pub fn eta(&self) -> Residue {
        self.reduce([0, 1, 0])
    }

    fn residue_of_bigints(&self, c: &[BigInt; 3]) -> Residue {
        let m = BigInt::from(self.hnf.diag()[0]);
        let v = core::array::from_fn(|k| {
            c[k].mod_floor(&m)
                .to_i128()
                .expect("reduced below the modulus")
        });
        self.reduce(v)
    }

    /// Image of an element of K whose denominator is prime to the modulus.
    pub fn from_field(&self, x: &FieldElem) -> Result<Residue> {
        let den = x.denominator();
        let num = x.scale(&num_rational::BigRational::from_integer(den.clone()));
        let c = num.integral_coeffs().ok_or(Error::NotInvertible)?;
        let n = self.residue_of_bigints(&c);
        let d = self.residue_of_bigints(&[den, BigInt::zero(), BigInt::zero()]);
        Ok(self.mul(&n, &self.inv(&d)?))
    }

    /// The canonical representative as an element of Z[eta].
    pub fn lift(&self, x: &Residue) -> FieldElem {
        FieldElem::from_ints(x.0[0], x.0[1], x.0[2])
    }

    pub fn add(&self, a: &Residue, b: &Residue) -> Residue {
        let (a, b) = (Self::wide(a), Self::wide(b));
        self.reduce([a[0] + b[0], a[1] + b[1], a[2] + b[2]])
    }

    pub fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        let (a, b) = (Self::wide(a), Self::wide(b));
        self.reduce([a[0] - b[0], a[1] - b[1], a[2] - b[2]])
    }

    pub fn neg(&self, a: &Residue) -> Residue {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        self.reduce(int_mul(&Self::wide(a), &Self::wide(b)))
    }

    pub fn mul_int(&self, a: &Residue, n: i64) -> Residue {
        self.reduce(Self::wide(a).map(|c| c * n as i128))
    }

    pub fn pow(&self, a: &Residue, mut n: u64) -> Residue {
        let mut base = *a;
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &Residue) -> bool {
        a.0 == [0, 0, 0]
    }

    /// Membership of a representative in the maximal ideal.
    pub fn in_maximal_ideal(&self, a: &Residue) -> bool {
        self.prime_hnf.reduce(Self::wide(a)) == [0, 0, 0]
    }

    /// Canonical representative of the class of `a` modulo P.
    pub fn residue_class(&self, a: &Residue) -> Residue {
        Residue(self.prime_hnf.reduce(Self::wide(a)).map(|c| c as i64))
    }

    pub fn is_unit(&self, a: &Residue) -> bool {
        !self.in_maximal_ideal(a)
    }

    /// Order of the unit group.
    pub fn unit_count(&self) -> u64 {
        self.size - self.size / self.residue_size
    }

    pub fn inv(&self, a: &Residue) -> Result<Residue> {
        if !self.is_unit(a) {
            return Err(Error::NotInvertible);
        }
        Ok(self.pow(a, self.unit_count() - 1))
    }

    /// The `idx`-th element in canonical order.
    pub fn element(&self, idx: u64) -> Residue {
        Residue(self.hnf.nth(idx).map(|c| c as i64))
    }

    pub fn elements(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.size).map(move |k| self.element(k))
    }

    /// One representative per residue class modulo P, in canonical order.
    pub fn residue_reps(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.residue_size).map(move |k| self.reduce(self.prime_hnf.nth(k)))
    }

    /// Coordinates on 1, eps, eps^2 with eps = eta - r, for a ramified prime and k <= 3.
    pub fn epsilon_coords(&self, x: &Residue) -> Option<[i64; 3]> {
        if self.prime.e != 3 || self.exponent > 3 {
            return None;
        }
        let r = self.prime.root? as i64;
        let p = self.prime.p as i64;
        let [c0, c1, c2] = x.0;
        let v = [c0 + c1 * r + c2 * r * r, c1 + 2 * r * c2, c2];
        Some(v.map(|c| c.rem_euclid(p)))
    }

    /// Compact text: an integer for prime fields Z/p, a polynomial in eps for
    /// ramified rings, and in eta otherwise.
    pub fn display(&self, x: &Residue) -> String {
        let d = self.hnf.diag();
        if d[1] == 1 && d[2] == 1 {
            return format!("{}", x.0[0]);
        }
        if let Some(e) = self.epsilon_coords(x) {
            return poly_text(&e, "eps");
        }
        poly_text(&x.0, "eta")
    }
}

fn poly_text(c: &[i64; 3], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &v) in c.iter().enumerate() {
        if v == 0 {
            continue;
        }
        terms.push(match (k, v) {
            (0, _) => format!("{v}"),
            (1, 1) => String::from(var),
            (1, _) => format!("{v}*{var}"),
            (_, 1) => format!("{var}^{k}"),
            _ => format!("{v}*{var}^{k}"),
        });
    }
    if terms.is_empty() {
        String::from("0")
    } else {
        terms.join(" + ")
    }
}

impl fmt::Display for ResidueRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[eta]/{}", self.modulus)
    }
}

/// Residue fields support Gaussian elimination; `inv` is `None` off the unit group.
impl FieldOps for ResidueRing {
    type Elem = Residue;
    fn zero(&self) -> Residue {
        ResidueRing::zero(self)
    }
    fn one(&self) -> Residue {
        ResidueRing::one(self)
    }
    fn add(&self, a: &Residue, b: &Residue) -> Residue {
        ResidueRing::add(self, a, b)
    }
    fn sub(&self, a: &Residue, b: &Residue) -> Residue {
        ResidueRing::sub(self, a, b)
    }
    fn mul(&self, a: &Residue, b: &Residue) -> Residue {
        ResidueRing::mul(self, a, b)
    }
    fn inv(&self, a: &Residue) -> Option<Residue> {
        ResidueRing::inv(self, a).ok()
    }
    fn is_zero(&self, a: &Residue) -> bool {
        ResidueRing::is_zero(self, a)
    }
}

/// Z[eta]/I as the product of its prime-power factors.
#[derive(Debug, Clone)]
pub struct ProductRing {
    modulus: IdealK,
    components: Vec<ResidueRing>,
}

impl ProductRing {
    pub fn modulus(&self) -> &IdealK {
        &self.modulus
    }

    pub fn components(&self) -> &[ResidueRing] {
        &self.components
    }

    pub fn size(&self) -> u64 {
        self.components.iter().map(ResidueRing::size).product()
    }

    pub fn kind(&self) -> RingKind {
        match self.components.as_slice() {
            [one] => one.kind(),
            _ => RingKind::Product,
        }
    }
}

/// Z[eta]/I for a nonzero proper ideal, split into prime-power components
/// sorted by rational prime and root.
pub fn build_residue_ring(ideal: &IdealK) -> Result<ProductRing> {
    if ideal.is_unit_ideal() {
        return Err(Error::ProperIdealRequired);
    }
    let components = factor_ideal(ideal)?
        .into_iter()
        .map(|(prime, e)| ResidueRing::new(prime, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductRing {
        modulus: ideal.clone(),
        components,
    })
}

/// The ring Z[eta]/P^k for a prime ideal given by its generator.
pub fn local_ring(prime: &IdealK, exponent: u32) -> Result<ResidueRing> {
    match build_residue_ring(prime)?.components.as_slice() {
        [one] if one.exponent == 1 => ResidueRing::new(one.prime.clone(), exponent),
        _ => Err(Error::Consistency(format!("{prime} is not prime"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(a: i64, b: i64, c: i64) -> IdealK {
        IdealK::new(FieldElem::from_ints(a, b, c)).unwrap()
    }

    fn single(i: &IdealK) -> ResidueRing {
        let r = build_residue_ring(i).unwrap();
        assert_eq!(r.components().len(), 1);
        r.components()[0].clone()
    }

    #[test]
    fn two_gives_f8() {
        let r = single(&IdealK::from_int(2).unwrap());
        assert_eq!(r.size(), 8);
        assert_eq!(r.kind(), RingKind::PrimeField);
        let e = r.eta();
        // t^3 + t^2 + 1
        let f = r.add(&r.add(&r.pow(&e, 3), &r.pow(&e, 2)), &r.one());
        assert!(r.is_zero(&f));
        assert_eq!(r.pow(&e, 7), r.one());
        assert_ne!(e, r.one());
        assert_eq!(r.pow(&e, 8), e);
    }

    #[test]
    fn thirteen_triplet_fields() {
        for (gen, root) in [((-1, 2, 0), 7), ((3, -2, 0), 8), ((3, 1, 0), 10)] {
            let r = single(&ideal(gen.0, gen.1, gen.2));
            assert_eq!(r.size(), 13);
            assert_eq!(r.eta(), Residue([root, 0, 0]));
            assert_eq!(r.moduli(), [13, 1, 1]);
        }
    }

    #[test]
    fn seven_is_a_truncated_polynomial_ring() {
        let r = single(&IdealK::from_int(7).unwrap());
        assert_eq!(r.kind(), RingKind::Local);
        assert_eq!(r.size(), 343);
        assert_eq!(r.epsilon_coords(&r.eta()), Some([2, 1, 0]));
        let eps = r.sub(&r.eta(), &r.from_int(2));
        assert!(!r.is_zero(&r.pow(&eps, 2)));
        assert!(r.is_zero(&r.pow(&eps, 3)));
        assert_eq!(r.display(&eps), "eps");
    }

    #[test]
    fn inverses_and_units() {
        let r = single(&IdealK::from_int(7).unwrap());
        let mut units = 0;
        for x in r.elements() {
            if r.is_unit(&x) {
                units += 1;
                assert_eq!(r.mul(&x, &r.inv(&x).unwrap()), r.one());
            } else {
                assert!(r.inv(&x).is_err());
            }
        }
        assert_eq!(units, r.unit_count());
        assert_eq!(units, 294);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let r = single(&IdealK::from_int(8).unwrap());
        assert_eq!(r.kind(), RingKind::EvenLocal);
        let xs = [
            FieldElem::from_ints(5, -3, 11),
            FieldElem::from_ints(-7, 2, 1),
            FieldElem::from_ints(100, 0, -9),
        ];
        for x in &xs {
            for y in &xs {
                let (rx, ry) = (r.from_field(x).unwrap(), r.from_field(y).unwrap());
                assert_eq!(r.from_field(&(x * y)).unwrap(), r.mul(&rx, &ry));
                assert_eq!(r.from_field(&(x + y)).unwrap(), r.add(&rx, &ry));
            }
        }
        let third = FieldElem::from_fraction(1, 3);
        assert_eq!(
            r.mul(&r.from_field(&third).unwrap(), &r.from_int(3)),
            r.one()
        );
        assert!(r.from_field(&FieldElem::from_fraction(1, 2)).is_err());
    }

    #[test]
    fn product_of_components() {
        let r = build_residue_ring(&IdealK::from_int(26).unwrap()).unwrap();
        assert_eq!(r.kind(), RingKind::Product);
        assert_eq!(r.size(), 8 * 13 * 13 * 13);
        let sizes: Vec<u64> = r.components().iter().map(ResidueRing::size).collect();
        assert_eq!(sizes, [8, 13, 13, 13]);
        assert!(build_residue_ring(&IdealK::unit()).is_err());
    }
}
