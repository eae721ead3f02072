//! Words in g2, g3 and g3^-1.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::generators::{g2, g3};
use super::half::HalfQuat;
use crate::error::Result;
use crate::quat::QuatElem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    G2,
    G3,
    G3Inv,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::G2, Letter::G3, Letter::G3Inv];

    pub fn name(self) -> &'static str {
        match self {
            Letter::G2 => "g2",
            Letter::G3 => "g3",
            Letter::G3Inv => "g3^-1",
        }
    }

    pub fn quat(self) -> QuatElem {
        match self {
            Letter::G2 => g2(),
            Letter::G3 => g3(),
            Letter::G3Inv => g3().conj(),
        }
    }

    pub fn half(self) -> HalfQuat {
        HalfQuat::from_quat(&self.quat()).expect("generators lie in the Hurwitz order")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GroupWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> QuatElem {
        self.letters
            .iter()
            .fold(QuatElem::one(), |acc, l| &acc * &l.quat())
    }

    pub fn evaluate_half(&self) -> Result<HalfQuat> {
        self.letters
            .iter()
            .try_fold(HalfQuat::one(), |acc, l| acc.mul(&l.half()))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let names: Vec<&str> = self.letters.iter().map(|l| l.name()).collect();
        f.write_str(&names.join(" "))
    }
}

impl From<GroupWord> for String {
    fn from(w: GroupWord) -> String {
        alloc::format!("{w}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_paths_agree() {
        let w = GroupWord::new(alloc::vec![
            Letter::G2,
            Letter::G3,
            Letter::G2,
            Letter::G3Inv,
            Letter::G2
        ]);
        let q = w.evaluate();
        assert!(q.reduced_norm().is_one());
        assert_eq!(HalfQuat::from_quat(&q).unwrap(), w.evaluate_half().unwrap());
        assert_eq!(w.to_string(), "g2 g3 g2 g3^-1 g2");
        assert_eq!(GroupWord::default().to_string(), "1");
        let inv = &Letter::G3.quat() * &Letter::G3Inv.quat();
        assert!(inv.is_scalar() && inv.a.is_one());
    }
}
