//! The norm-one elements of the Hurwitz order that project to the
//! (2,3,7) generators.

use crate::field::FieldElem;
use crate::quat::QuatElem;

fn fe(a: i64, b: i64, c: i64) -> FieldElem {
    FieldElem::from_ints(a, b, c)
}

fn half(a: i64, b: i64, c: i64) -> FieldElem {
    fe(a, b, c).scale(&num_rational::BigRational::new(1.into(), 2.into()))
}

/// g2 = ij / eta.
pub fn g2() -> QuatElem {
    QuatElem::ij().scale(&FieldElem::eta().inverse().expect("eta is a unit"))
}

/// g3 = (1 + (eta^2 - 2) j + (3 - eta^2) ij) / 2.
pub fn g3() -> QuatElem {
    QuatElem::new(
        half(1, 0, 0),
        FieldElem::zero(),
        half(-2, 0, 1),
        half(3, 0, -1),
    )
}

/// g7 = ((tau - 2) + (2 - eta^2) i + (tau - 3) ij) / 2.
pub fn g7() -> QuatElem {
    QuatElem::new(
        half(-1, 1, 1),
        half(2, 0, -1),
        FieldElem::zero(),
        half(-2, 1, 1),
    )
}

pub fn generators() -> (QuatElem, QuatElem, QuatElem) {
    (g2(), g3(), g7())
}

/// j j'.
pub fn jj_prime() -> QuatElem {
    &QuatElem::j() * &QuatElem::j_prime()
}

/// kappa = i j j' - (1 - eta) ij.
pub fn kappa() -> QuatElem {
    &(&QuatElem::i() * &jj_prime()) - &QuatElem::ij().scale(&fe(1, -1, 0))
}

/// Both directions of the statement that g2 and g3 generate Q_Hur as an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationCheck {
    /// g2, g3, g7 lie in the Hurwitz order.
    pub generators_in_order: bool,
    /// i = (1 + eta)(g3 g2 - g2 g3).
    pub i_from_generators: bool,
    /// j = (1 + eta)(1 + (eta^2 + eta - 1) g2 - 2 g3).
    pub j_from_generators: bool,
    /// j' = (1 + eta i) g3 + (eta^2 - 2) ij + j.
    pub j_prime_from_generators: bool,
    /// g3 = (3 + 6eta - eta^2) + (1 + 3eta) i - (2 + eta^2) jj' - 2 kappa.
    pub g3_in_alternative_basis: bool,
}

impl GenerationCheck {
    pub fn holds(&self) -> bool {
        self.generators_in_order
            && self.i_from_generators
            && self.j_from_generators
            && self.j_prime_from_generators
            && self.g3_in_alternative_basis
    }
}

pub fn order_generation_check() -> GenerationCheck {
    let (a, b, c) = generators();
    let hur = crate::order::Order::hurwitz();
    let one_eta = fe(1, 1, 0);
    let i = QuatElem::i();
    let j = QuatElem::j();
    let i_rec = (&(&b * &a) - &(&a * &b)).scale(&one_eta);
    let j_rec =
        (&(&QuatElem::one() + &a.scale(&fe(-1, 1, 1))) - &b.scale(&fe(2, 0, 0))).scale(&one_eta);
    let eta_i = &QuatElem::one() + &i.scale(&FieldElem::eta());
    let jp_rec = &(&(&eta_i * &b) + &QuatElem::ij().scale(&fe(-2, 0, 1))) + &j;
    let g3_alt = &(&(&QuatElem::scalar(fe(3, 6, -1)) + &i.scale(&fe(1, 3, 0)))
        - &jj_prime().scale(&fe(2, 0, 1)))
        - &kappa().scale(&fe(2, 0, 0));
    GenerationCheck {
        generators_in_order: [&a, &b, &c].iter().all(|g| hur.contains(g).member),
        i_from_generators: i_rec == i,
        j_from_generators: j_rec == j,
        j_prime_from_generators: jp_rec == QuatElem::j_prime(),
        g3_in_alternative_basis: g3_alt == b,
    }
}
