//! The finite quotients Delta / Gamma(I), seen inside PSL2(Z[eta]/I).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::IdealK;
use crate::residue::{build_residue_ring, split, Mat2, ResidueRing, SplitMap};

/// |SL2(Z[eta]/P^k)| = q^(3k-2) (q^2 - 1).
pub fn sl2_order(ring: &ResidueRing) -> u128 {
    let q = ring.residue_size() as u128;
    q.pow(3 * ring.exponent() - 2) * (q * q - 1)
}

/// Order of the image of the norm-one group in PSL2(Z[eta]/I), from the
/// component counts. The image of Q^1 is all of SL2; the sign is lost
/// unless -1 = 1 modulo I.
pub fn quotient_group_order(ideal: &IdealK) -> Result<u128> {
    let ring = build_residue_ring(ideal)?;
    let sl: u128 = ring.components().iter().map(sl2_order).product();
    let minus_one_trivial = ideal.divides(&IdealK::from_int(2)?);
    Ok(if minus_one_trivial { sl } else { sl / 2 })
}

/// A tuple of component matrices modulo a common sign.
fn projective(s: &SplitMap, m: &[Mat2]) -> Vec<Mat2> {
    let neg: Vec<Mat2> = m
        .iter()
        .zip(s.components())
        .map(|(x, c)| x.neg(c.ring()))
        .collect();
    if neg.as_slice() < m {
        neg
    } else {
        m.to_vec()
    }
}

fn tuple_mul(s: &SplitMap, a: &[Mat2], b: &[Mat2]) -> Vec<Mat2> {
    a.iter()
        .zip(b)
        .zip(s.components())
        .map(|((x, y), c)| x.mul(c.ring(), y))
        .collect()
}

fn is_pm_identity(s: &SplitMap, m: &[Mat2]) -> bool {
    let id: Vec<Mat2> = s
        .components()
        .iter()
        .map(|c| Mat2::identity(c.ring()))
        .collect();
    projective(s, m) == projective(s, &id)
}

/// Order of a tuple in the projective group, up to `limit`.
fn projective_order(s: &SplitMap, m: &[Mat2], limit: u64) -> Option<u64> {
    let mut power = m.to_vec();
    for n in 1..=limit {
        if is_pm_identity(s, &power) {
            return Some(n);
        }
        power = tuple_mul(s, &power, m);
    }
    None
}

/// Images of g2, g3 and g7 = g2 g3^-1 on every component.
pub fn generator_images(s: &SplitMap) -> [Vec<Mat2>; 3] {
    let a: Vec<Mat2> = s.components().iter().map(|c| c.image_g2()).collect();
    let b: Vec<Mat2> = s.components().iter().map(|c| c.image_g3()).collect();
    // g3^-1 = g3^2 up to sign, since g3^3 = -1
    let b_inv: Vec<Mat2> = tuple_mul(s, &b, &b);
    let c = tuple_mul(s, &a, &b_inv);
    [a, b, c]
}

/// Orders of the images of g2, g3, g7 in PSL2(Z[eta]/I).
pub fn generator_orders(s: &SplitMap) -> [Option<u64>; 3] {
    generator_images(s).map(|m| projective_order(s, &m, 64))
}

/// Size of the subgroup of PSL2 generated by the images of g2 and g3, by
/// closure; `None` if it exceeds `limit`.
pub fn closure_order(s: &SplitMap, limit: usize) -> Option<u64> {
    let [a, b, _] = generator_images(s);
    let gens = [projective(s, &a), projective(s, &b)];
    let id: Vec<Mat2> = s
        .components()
        .iter()
        .map(|c| Mat2::identity(c.ring()))
        .collect();
    let start = projective(s, &id);
    let mut seen: BTreeSet<Vec<Mat2>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = alloc::vec![start];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                let y = projective(s, &tuple_mul(s, x, g));
                if seen.insert(y.clone()) {
                    if seen.len() > limit {
                        return None;
                    }
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    Some(seen.len() as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub ideal: IdealK,
    pub order: u128,
    /// Closure count when it was run.
    pub closure: Option<u64>,
    pub generator_orders: [Option<u64>; 3],
    pub genus: u64,
}

/// Genus of the Hurwitz surface attached to I, 1 + |G| / 84.
pub fn genus_of(ideal: &IdealK) -> Result<u64> {
    let s = split(ideal)?;
    genus_from(ideal, &s, quotient_group_order(ideal)?)
}

fn genus_from(ideal: &IdealK, s: &SplitMap, order: u128) -> Result<u64> {
    let orders = generator_orders(s);
    if orders != [Some(2), Some(3), Some(7)] {
        return Err(Error::NotHurwitzQuotient(format!(
            "{ideal}: generator orders {orders:?}"
        )));
    }
    if !order.is_multiple_of(84) {
        return Err(Error::NotHurwitzQuotient(format!(
            "{ideal}: |G| = {order} is not divisible by 84"
        )));
    }
    Ok(1 + (order / 84) as u64)
}

/// Formula order, optional closure check and genus for one ideal.
pub fn quotient_report(ideal: &IdealK, closure_limit: usize) -> Result<QuotientReport> {
    let s = split(ideal)?;
    let order = quotient_group_order(ideal)?;
    let closure = if order <= closure_limit as u128 {
        closure_order(&s, closure_limit)
    } else {
        None
    };
    if let Some(c) = closure {
        if c as u128 != order {
            return Err(Error::Consistency(format!(
                "{ideal}: closure gives {c}, formula gives {order}"
            )));
        }
    }
    let genus = genus_from(ideal, &s, order)?;
    Ok(QuotientReport {
        ideal: ideal.clone(),
        order,
        closure,
        generator_orders: generator_orders(&s),
        genus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElem;

    fn ideal(a: i64, b: i64, c: i64) -> IdealK {
        IdealK::new(FieldElem::from_ints(a, b, c)).unwrap()
    }

    #[test]
    fn classical_quotients() {
        for (i, order, genus) in [
            (ideal(2, -1, 0), 168, 3),
            (IdealK::from_int(2).unwrap(), 504, 7),
            (ideal(-1, 2, 0), 1092, 14),
            (ideal(3, -2, 0), 1092, 14),
            (ideal(3, 1, 0), 1092, 14),
        ] {
            let r = quotient_report(&i, 5000).unwrap();
            assert_eq!(r.order, order);
            assert_eq!(r.closure, Some(order as u64));
            assert_eq!(r.genus, genus);
        }
    }

    #[test]
    fn larger_moduli() {
        // PSL2(F27), and the level-7 and level-4 quotients
        assert_eq!(
            quotient_group_order(&IdealK::from_int(3).unwrap()).unwrap(),
            9828
        );
        assert_eq!(genus_of(&IdealK::from_int(3).unwrap()).unwrap(), 118);
        assert_eq!(
            quotient_group_order(&IdealK::from_int(7).unwrap()).unwrap(),
            7u128.pow(7) * 48 / 2
        );
        assert_eq!(
            quotient_group_order(&IdealK::from_int(4).unwrap()).unwrap(),
            8u128.pow(4) * 63 / 2
        );
        let s = split(&ideal(2, -1, 0).pow(2)).unwrap();
        assert_eq!(closure_order(&s, 100_000), Some(7u64.pow(4) * 48 / 2));
    }

    #[test]
    fn unit_ideal_is_rejected() {
        assert!(quotient_group_order(&IdealK::unit()).is_err());
    }
}
