//! Orders of D as explicit Z[eta]-lattices.
//!
//! Three orders are built in: the symbol order O = Z[eta][i, j], Elkies'
//! order Z[eta][i, j'] and the Hurwitz order Z[eta][i, j, j'], the latter on
//! the basis (1, g2, g3, g2 g3). Each is validated once on construction:
//! the basis must span D, contain 1, and have an integral multiplication
//! table.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::group::generators::{g2, g3, g7, jj_prime, kappa};
use crate::ideal::{factor_rational_prime, rational_prime_factors, IdealK};
use crate::linalg::{self, NumberField};
use crate::quat::QuatElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderName {
    /// Z[eta][i, j]
    Standard,
    /// Z[eta][i, j']
    Elkies,
    /// Z[eta][i, j, j']
    Hurwitz,
}

impl OrderName {
    pub fn label(self) -> &'static str {
        match self {
            OrderName::Standard => "O",
            OrderName::Elkies => "ELK",
            OrderName::Hurwitz => "HUR",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "O" => Some(OrderName::Standard),
            "ELK" => Some(OrderName::Elkies),
            "HUR" => Some(OrderName::Hurwitz),
            _ => None,
        }
    }

    pub fn build(self) -> Order {
        match self {
            OrderName::Standard => Order::standard(),
            OrderName::Elkies => Order::elkies(),
            OrderName::Hurwitz => Order::hurwitz(),
        }
    }
}

impl fmt::Display for OrderName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A full-rank Z[eta]-lattice in D with a fixed basis.
#[derive(Debug, Clone)]
pub struct Lattice {
    basis: [QuatElem; 4],
    /// Inverse of the basis matrix (rows are basis vectors in 1, i, j, ij coordinates).
    to_coords: Vec<Vec<FieldElem>>,
}

impl Lattice {
    pub fn new(basis: [QuatElem; 4]) -> Result<Self> {
        let rows: Vec<Vec<FieldElem>> = basis
            .iter()
            .map(|b| b.coords().map(Clone::clone).to_vec())
            .collect();
        let to_coords = linalg::inverse(&NumberField, &rows)
            .ok_or_else(|| Error::Consistency("lattice basis is not a K-basis of D".to_string()))?;
        Ok(Lattice { basis, to_coords })
    }

    /// The lattice (1/2) O.
    pub fn half_standard() -> Self {
        let half = FieldElem::from_fraction(1, 2);
        let basis = [
            QuatElem::one(),
            QuatElem::i(),
            QuatElem::j(),
            QuatElem::ij(),
        ]
        .map(|b| b.scale(&half));
        Lattice::new(basis).expect("scaled standard basis")
    }

    pub fn basis(&self) -> &[QuatElem; 4] {
        &self.basis
    }

    /// Coordinates of `x` on this basis (exact, possibly non-integral).
    pub fn coords(&self, x: &QuatElem) -> [FieldElem; 4] {
        let v: Vec<FieldElem> = x.coords().map(Clone::clone).to_vec();
        let c = linalg::vec_mat(&NumberField, &v, &self.to_coords);
        let mut it = c.into_iter();
        core::array::from_fn(|_| it.next().expect("four coordinates"))
    }

    pub fn combine(&self, coords: &[FieldElem; 4]) -> QuatElem {
        coords
            .iter()
            .zip(&self.basis)
            .fold(QuatElem::zero(), |acc, (c, b)| &acc + &b.scale(c))
    }

    pub fn contains(&self, x: &QuatElem) -> bool {
        self.coords(x).iter().all(FieldElem::is_integral)
    }

    /// The lattice `s L` for a nonzero central `s`.
    pub fn scaled(&self, s: &FieldElem) -> Lattice {
        Lattice::new(self.basis.clone().map(|b| b.scale(s))).expect("nonzero scaling")
    }
}

pub type MultTable = [[[FieldElem; 4]; 4]; 4];

#[derive(Debug, Clone)]
pub struct Order {
    name: OrderName,
    lattice: Lattice,
    table: MultTable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub subject: QuatElem,
    pub order: OrderName,
    pub coords: [FieldElem; 4],
    pub member: bool,
}

impl Order {
    /// Validates closure and containment of 1 before returning.
    pub fn new(name: OrderName, basis: [QuatElem; 4]) -> Result<Self> {
        let lattice = Lattice::new(basis)?;
        if !lattice.contains(&QuatElem::one()) {
            return Err(Error::Consistency(alloc::format!("1 is not in {name}")));
        }
        let mut table: MultTable = Default::default();
        for k in 0..4 {
            for l in 0..4 {
                let prod = &lattice.basis[k] * &lattice.basis[l];
                let c = lattice.coords(&prod);
                if !c.iter().all(FieldElem::is_integral) {
                    return Err(Error::Consistency(alloc::format!(
                        "{name} is not closed: e{k} e{l}"
                    )));
                }
                table[k][l] = c;
            }
        }
        Ok(Order {
            name,
            lattice,
            table,
        })
    }

    pub fn standard() -> Self {
        Order::new(
            OrderName::Standard,
            [
                QuatElem::one(),
                QuatElem::i(),
                QuatElem::j(),
                QuatElem::ij(),
            ],
        )
        .expect("standard order")
    }

    pub fn elkies() -> Self {
        let jp = QuatElem::j_prime();
        let ijp = &QuatElem::i() * &jp;
        Order::new(OrderName::Elkies, [QuatElem::one(), QuatElem::i(), jp, ijp])
            .expect("Elkies order")
    }

    /// The Hurwitz order on the basis (1, g2, g3, g2 g3).
    pub fn hurwitz() -> Self {
        let (a, b, c) = (g2(), g3(), g7());
        assert_eq!(&c * &b, a, "g2 = g7 g3 must hold before the basis is used");
        let ab = &a * &b;
        Order::new(OrderName::Hurwitz, [QuatElem::one(), a, b, ab]).expect("Hurwitz order")
    }

    pub fn name(&self) -> OrderName {
        self.name
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn basis(&self) -> &[QuatElem; 4] {
        &self.lattice.basis
    }

    pub fn table(&self) -> &MultTable {
        &self.table
    }

    pub fn coords(&self, x: &QuatElem) -> [FieldElem; 4] {
        self.lattice.coords(x)
    }

    pub fn contains(&self, x: &QuatElem) -> MembershipCertificate {
        let coords = self.coords(x);
        let member = coords.iter().all(FieldElem::is_integral);
        MembershipCertificate {
            subject: x.clone(),
            order: self.name,
            coords,
            member,
        }
    }

    /// Gram matrix of the reduced trace form on the basis.
    pub fn trace_gram(&self) -> Vec<Vec<FieldElem>> {
        let b = &self.lattice.basis;
        (0..4)
            .map(|r| (0..4).map(|c| (&b[r] * &b[c]).reduced_trace()).collect())
            .collect()
    }
}

/// Membership in the Hurwitz order through the congruences on
/// x = (a + b i + c j + d ij) / 2:
/// a = eta^2 b + (eta + 1) c and d = tau b + eta c modulo 2.
pub fn hur_congruence_test(x: &QuatElem) -> bool {
    let two = FieldElem::from_int(2);
    let [a, b, c, d] = x.coords().map(|v| v * &two);
    if ![&a, &b, &c, &d].iter().all(|v| v.is_integral()) {
        return false;
    }
    let eta = FieldElem::eta();
    let first = &(&a - &(&eta.pow(2) * &b)) - &(&(&eta + &FieldElem::one()) * &c);
    let second = &(&d - &(&FieldElem::tau() * &b)) - &(&eta * &c);
    even(&first) && even(&second)
}

fn even(x: &FieldElem) -> bool {
    x.scale(&num_rational::BigRational::new(1.into(), 2.into()))
        .is_integral()
}

/// Index `[larger : smaller]` as abelian groups.
pub fn order_index(larger: &Lattice, smaller: &Lattice) -> Result<BigInt> {
    let mut rows = Vec::new();
    for b in smaller.basis() {
        let c = larger.coords(b);
        if !c.iter().all(FieldElem::is_integral) {
            return Err(Error::NotSublattice);
        }
        rows.push(c.to_vec());
    }
    let det = linalg::determinant(&NumberField, &rows);
    Ok(det.norm().abs().to_integer())
}

/// A factorization `value = unit * root^2` in Z[eta].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareRoot {
    pub root: FieldElem,
    pub unit: FieldElem,
}

/// Writes an integral element as a unit times a square, prime by prime.
pub fn square_root_up_to_unit(value: &FieldElem) -> Result<SquareRoot> {
    let mut root = FieldElem::one();
    let ideal = IdealK::new(value.clone())?;
    for p in rational_prime_factors(&ideal.norm()) {
        for prime in factor_rational_prime(p)?.factors {
            let v = ideal.valuation(&prime.ideal);
            if v % 2 == 1 {
                return Err(Error::NonSquareDiscriminant(value.to_string()));
            }
            root = &root * &prime.ideal.generator().pow(v / 2);
        }
    }
    let unit = value.checked_div(&root.pow(2))?;
    if !unit.is_unit() {
        return Err(Error::NonSquareDiscriminant(value.to_string()));
    }
    Ok(SquareRoot { root, unit })
}

#[derive(Debug, Clone)]
pub struct DiscriminantReport {
    pub order: OrderName,
    pub gram: Vec<Vec<FieldElem>>,
    pub determinant: FieldElem,
    pub reduced: IdealK,
    pub unit: FieldElem,
}

/// The ideal whose square is generated by the trace-form Gram determinant.
pub fn reduced_discriminant(order: &Order) -> Result<DiscriminantReport> {
    let gram = order.trace_gram();
    let determinant = linalg::determinant(&NumberField, &gram);
    let SquareRoot { root, unit } = square_root_up_to_unit(&determinant)?;
    Ok(DiscriminantReport {
        order: order.name(),
        gram,
        determinant,
        reduced: IdealK::new(root)?,
        unit,
    })
}

#[derive(Debug, Clone)]
pub struct MaximalityCertificate {
    pub discriminant: DiscriminantReport,
    /// Inverse of the Gram determinant; integral exactly when it is a unit.
    pub determinant_inverse: FieldElem,
    pub index_over_standard: BigInt,
    pub maximal: bool,
}

/// D has no finite ramification, so an order with unit reduced
/// discriminant is maximal.
pub fn maximality_certificate() -> Result<MaximalityCertificate> {
    let hur = Order::hurwitz();
    let discriminant = reduced_discriminant(&hur)?;
    let determinant_inverse = discriminant.determinant.inverse()?;
    let index_over_standard = order_index(hur.lattice(), Order::standard().lattice())?;
    let maximal = discriminant.reduced.is_unit_ideal()
        && determinant_inverse.is_integral()
        && (&determinant_inverse * &discriminant.determinant).is_one();
    Ok(MaximalityCertificate {
        discriminant,
        determinant_inverse,
        index_over_standard,
        maximal,
    })
}

/// Basis of the K-subspace of elements commuting with g2 and g3.
pub fn centralizer_of_generators() -> Vec<QuatElem> {
    let hur = Order::hurwitz();
    let gens = [g2(), g3()];
    // Columns: unknown coordinates on the Hurwitz basis; rows: coordinates of the commutators.
    let mut rows: Vec<Vec<FieldElem>> = Vec::new();
    for g in &gens {
        let comms: Vec<QuatElem> = hur.basis().iter().map(|b| b.commutator(g)).collect();
        for coord in 0..4 {
            rows.push(comms.iter().map(|c| c.coords()[coord].clone()).collect());
        }
    }
    linalg::kernel(&NumberField, &rows)
        .into_iter()
        .map(|v| {
            let c: [FieldElem; 4] = core::array::from_fn(|k| v[k].clone());
            hur.lattice().combine(&c)
        })
        .collect()
}

/// Change of basis between (1, g2, g3, g2 g3) and (1, i, j j', kappa).
#[derive(Debug, Clone)]
pub struct BasisChange {
    /// Row k: coordinates of the k-th alternative basis element on the Hurwitz basis.
    pub alternative_in_hurwitz: Vec<Vec<FieldElem>>,
    /// Row k: coordinates of the k-th Hurwitz basis element on the alternative basis.
    pub hurwitz_in_alternative: Vec<Vec<FieldElem>>,
    pub forward_det: FieldElem,
    pub backward_det: FieldElem,
}

impl BasisChange {
    pub fn unimodular(&self) -> bool {
        let integral = |m: &Vec<Vec<FieldElem>>| m.iter().flatten().all(FieldElem::is_integral);
        integral(&self.alternative_in_hurwitz)
            && integral(&self.hurwitz_in_alternative)
            && self.forward_det.is_unit()
            && self.backward_det.is_unit()
    }
}

pub fn alternative_basis() -> [QuatElem; 4] {
    [QuatElem::one(), QuatElem::i(), jj_prime(), kappa()]
}

pub fn alternative_basis_change() -> Result<BasisChange> {
    let hur = Order::hurwitz();
    let alt = Lattice::new(alternative_basis())?;
    let forward: Vec<Vec<FieldElem>> = alt.basis().iter().map(|b| hur.coords(b).to_vec()).collect();
    let backward: Vec<Vec<FieldElem>> =
        hur.basis().iter().map(|b| alt.coords(b).to_vec()).collect();
    let forward_det = linalg::determinant(&NumberField, &forward);
    let backward_det = linalg::determinant(&NumberField, &backward);
    Ok(BasisChange {
        alternative_in_hurwitz: forward,
        hurwitz_in_alternative: backward,
        forward_det,
        backward_det,
    })
}

/// Checks that inverting 2 makes the Hurwitz and standard orders equal:
/// 2 HUR is inside O and O is inside HUR.
pub fn inverted_two_equality() -> bool {
    let hur = Order::hurwitz();
    let std = Order::standard();
    let two = FieldElem::from_int(2);
    hur.basis()
        .iter()
        .all(|b| std.contains(&b.scale(&two)).member)
        && std.basis().iter().all(|b| hur.contains(b).member)
}

/// Human-readable summary of a membership certificate.
pub fn describe_membership(cert: &MembershipCertificate) -> String {
    let coords: Vec<String> = cert.coords.iter().map(|c| c.to_string()).collect();
    alloc::format!(
        "{} in {}: {} (coordinates [{}])",
        cert.subject,
        cert.order,
        cert.member,
        coords.join(", ")
    )
}

/// N(d(O)) = [HUR : O] N(d(HUR)) on reduced discriminants.
pub fn discriminant_chain_consistent() -> Result<bool> {
    let o = reduced_discriminant(&Order::standard())?;
    let h = reduced_discriminant(&Order::hurwitz())?;
    let index = order_index(Order::hurwitz().lattice(), Order::standard().lattice())?;
    Ok(o.reduced.norm() == index * h.reduced.norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn fe(a: i64, b: i64, c: i64) -> FieldElem {
        FieldElem::from_ints(a, b, c)
    }

    fn sevenths(a: i64, b: i64, c: i64) -> FieldElem {
        fe(a, b, c).scale(&BigRational::new(1.into(), 7.into()))
    }

    #[test]
    fn all_three_orders_close() {
        for name in [OrderName::Standard, OrderName::Elkies, OrderName::Hurwitz] {
            let order = name.build();
            for row in order.table() {
                for entry in row {
                    assert!(entry.iter().all(FieldElem::is_integral));
                }
            }
        }
    }

    #[test]
    fn j_is_not_in_elkies_order() {
        let cert = Order::elkies().contains(&QuatElem::j());
        assert!(!cert.member);
        assert_eq!(
            cert.coords,
            [
                sevenths(-9, 2, 3),
                sevenths(3, -3, -1),
                sevenths(18, -4, -6),
                FieldElem::zero()
            ]
        );
    }

    #[test]
    fn hurwitz_contains_j_and_j_prime() {
        let hur = Order::hurwitz();
        assert!(hur.contains(&QuatElem::j()).member);
        assert!(hur.contains(&QuatElem::j_prime()).member);
        assert!(hur.contains(&QuatElem::i()).member);
        assert_eq!(
            hur.coords(&QuatElem::one()),
            [fe(1, 0, 0), fe(0, 0, 0), fe(0, 0, 0), fe(0, 0, 0)]
        );
    }

    #[test]
    fn j_prime_not_in_standard_order() {
        let cert = Order::standard().contains(&QuatElem::j_prime());
        assert!(!cert.member);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            cert.coords,
            [
                fe(1, 0, 0).scale(&half),
                fe(0, 1, 0).scale(&half),
                FieldElem::tau().scale(&half),
                FieldElem::zero()
            ]
        );
    }

    #[test]
    fn i_from_commutator_is_integral() {
        let (a, b) = (g2(), g3());
        let i = b.commutator(&a).scale(&fe(1, 1, 0));
        assert_eq!(i, QuatElem::i());
        assert!(Order::hurwitz().contains(&i).member);
    }

    #[test]
    fn congruence_examples() {
        assert!(hur_congruence_test(&QuatElem::j_prime()));
        assert!(!hur_congruence_test(&QuatElem::scalar(
            FieldElem::from_fraction(1, 2)
        )));
        assert!(hur_congruence_test(&QuatElem::j()));
    }

    #[test]
    fn indices() {
        let hur = Order::hurwitz();
        let std = Order::standard();
        assert_eq!(
            order_index(hur.lattice(), std.lattice()).unwrap(),
            BigInt::from(64)
        );
        assert_eq!(
            order_index(hur.lattice(), hur.lattice()).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            order_index(&Lattice::half_standard(), hur.lattice()).unwrap(),
            BigInt::from(64)
        );
        assert_eq!(
            order_index(std.lattice(), hur.lattice()),
            Err(Error::NotSublattice)
        );
        assert_eq!(
            order_index(&Lattice::half_standard(), std.lattice()).unwrap(),
            BigInt::from(4096)
        );
        assert_eq!(
            order_index(hur.lattice(), Order::elkies().lattice()).unwrap(),
            BigInt::from(49)
        );
    }

    #[test]
    fn discriminants() {
        let o = reduced_discriminant(&Order::standard()).unwrap();
        assert_eq!(o.determinant, -&(&fe(16, 0, 0) * &FieldElem::eta().pow(4)));
        assert_eq!(o.reduced, IdealK::from_int(4).unwrap());
        let h = reduced_discriminant(&Order::hurwitz()).unwrap();
        assert!(h.reduced.is_unit_ideal());
        assert_eq!(h.determinant, -&fe(-1, 1, 0).pow(2));
        let e = reduced_discriminant(&Order::elkies()).unwrap();
        assert_eq!(e.reduced, IdealK::new(fe(2, -1, 0).pow(2)).unwrap());
        assert!(discriminant_chain_consistent().unwrap());
    }

    #[test]
    fn maximality() {
        let cert = maximality_certificate().unwrap();
        assert!(cert.maximal);
        assert_eq!(cert.index_over_standard, BigInt::from(64));
    }

    #[test]
    fn non_square_rejected() {
        assert!(matches!(
            square_root_up_to_unit(&fe(2, -1, 0)),
            Err(Error::NonSquareDiscriminant(_))
        ));
    }

    #[test]
    fn center_is_the_base_ring() {
        let cent = centralizer_of_generators();
        assert_eq!(cent.len(), 1);
        assert!(cent[0].is_scalar());
    }

    #[test]
    fn alternative_basis_is_unimodular() {
        let change = alternative_basis_change().unwrap();
        assert!(change.unimodular());
    }

    #[test]
    fn inverting_two() {
        assert!(inverted_two_equality());
    }

    #[test]
    fn presentation_of_the_hurwitz_order() {
        let (a, b) = (g2(), g3());
        assert_eq!(a.pow(2), QuatElem::from_int(-1));
        assert_eq!(b.pow(2), &b - &QuatElem::one());
        assert_eq!(
            &(&a * &b) + &(&b * &a),
            &a - &QuatElem::scalar(fe(-1, 1, 1))
        );
        assert_eq!(b.pow(3), QuatElem::from_int(-1));
    }
}
