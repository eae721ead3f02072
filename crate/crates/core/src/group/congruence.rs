//! Principal congruence subgroups Q^1(I) = { x : nrd x = 1, x = 1 mod I Q_Hur }.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::IdealK;
use crate::order::hur_congruence_test;
use crate::quat::QuatElem;
use crate::residue::{reduce, Mat2, SplitMap};

/// The subgroup Q^1(I) for a fixed ideal.
#[derive(Debug, Clone)]
pub struct CongruenceLevel {
    pub ideal: IdealK,
}

impl CongruenceLevel {
    pub fn new(ideal: IdealK) -> Self {
        CongruenceLevel { ideal }
    }

    pub fn contains(&self, x: &QuatElem) -> Result<bool> {
        in_congruence_subgroup(x, &self.ideal)
    }
}

fn check_norm_one(x: &QuatElem) -> Result<()> {
    if !x.reduced_norm().is_one() {
        return Err(Error::NotNormOne);
    }
    if !hur_congruence_test(x) {
        return Err(Error::NotInOrder);
    }
    Ok(())
}

/// `x - s` lies in `I Q_Hur`, tested as `(x - s) / g` in Q_Hur.
fn congruent_to(x: &QuatElem, s: i64, ideal: &IdealK) -> Result<bool> {
    let ginv = ideal.generator().inverse()?;
    let diff = x - &QuatElem::from_int(s);
    Ok(hur_congruence_test(&diff.scale(&ginv)))
}

/// Membership in Q^1(I) through the lattice condition x - 1 in I Q_Hur.
pub fn in_congruence_subgroup(x: &QuatElem, ideal: &IdealK) -> Result<bool> {
    check_norm_one(x)?;
    congruent_to(x, 1, ideal)
}

/// Membership of the class of `x` in the image of Q^1(I) in PSL: x = 1 or x = -1.
pub fn congruent_pm_one(x: &QuatElem, ideal: &IdealK) -> Result<bool> {
    check_norm_one(x)?;
    Ok(congruent_to(x, 1, ideal)? || congruent_to(x, -1, ideal)?)
}

fn all_equal(images: &[Mat2], split: &SplitMap, negate: bool) -> bool {
    images.iter().zip(split.components()).all(|(m, c)| {
        let id = Mat2::identity(c.ring());
        *m == if negate { id.neg(c.ring()) } else { id }
    })
}

/// The same test through the splitting: every component image is the identity.
pub fn in_congruence_subgroup_via_split(x: &QuatElem, split: &SplitMap) -> Result<bool> {
    check_norm_one(x)?;
    Ok(all_equal(&reduce(x, split)?, split, false))
}

/// PSL version through the splitting: all components are +1, or all are -1.
pub fn congruent_pm_one_via_split(x: &QuatElem, split: &SplitMap) -> Result<bool> {
    check_norm_one(x)?;
    let images: Vec<Mat2> = reduce(x, split)?;
    Ok(all_equal(&images, split, false) || all_equal(&images, split, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldElem;
    use crate::group::generators::{g2, g3, g7};
    use crate::residue::split;

    fn klein() -> IdealK {
        IdealK::new(FieldElem::from_ints(2, -1, 0)).unwrap()
    }

    #[test]
    fn identity_and_generators() {
        let i = klein();
        assert!(in_congruence_subgroup(&QuatElem::one(), &i).unwrap());
        for g in [g2(), g3(), g7()] {
            assert!(!in_congruence_subgroup(&g, &i).unwrap());
            assert!(!congruent_pm_one(&g, &i).unwrap());
        }
        assert!(congruent_pm_one(&QuatElem::from_int(-1), &i).unwrap());
        assert!(!in_congruence_subgroup(&QuatElem::from_int(-1), &i).unwrap());
        assert!(
            in_congruence_subgroup(&QuatElem::from_int(-1), &IdealK::from_int(2).unwrap()).unwrap()
        );
    }

    #[test]
    fn seventh_power_of_g7_and_errors() {
        let i = klein();
        // g7^7 = -1 lies in every congruence subgroup up to sign
        assert!(congruent_pm_one(&g7().pow(7), &i).unwrap());
        assert!(matches!(
            in_congruence_subgroup(&QuatElem::i(), &i),
            Err(Error::NotNormOne)
        ));
        let s = split(&i).unwrap();
        assert!(!in_congruence_subgroup_via_split(&g2(), &s).unwrap());
        assert!(congruent_pm_one_via_split(&g7().pow(7), &s).unwrap());
    }
}
