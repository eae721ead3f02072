use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInput,
    #[error(
        "no principal generator found for a prime above {prime} with coefficients up to {bound}"
    )]
    GeneratorSearchExhausted { prime: u64, bound: i64 },
    #[error("{0} is not a rational prime")]
    NotPrime(u64),
    #[error("lattice is not contained in the larger lattice")]
    NotSublattice,
    #[error("discriminant {0} is not a unit times a square")]
    NonSquareDiscriminant(String),
    #[error("norm equation has no solution in {0}")]
    NoSolution(String),
    #[error("a proper nonzero ideal is required")]
    ProperIdealRequired,
    #[error("element is not in the Hurwitz order")]
    NotInOrder,
    #[error("element does not have reduced norm one")]
    NotNormOne,
    #[error("quotient is not a Hurwitz group: {0}")]
    NotHurwitzQuotient(String),
    #[error("no congruence element found within {0}")]
    NoElementFound(String),
    #[error("trace bound must exceed 2")]
    EmptyWindow,
    #[error("congruence subgroup contains torsion: {0}")]
    TorsionDetected(String),
    #[error("parabolic element found in a cocompact group: {0}")]
    ParabolicFound(String),
    #[error("denominator not invertible modulo the ideal")]
    NotInvertible,
    #[error("integer overflow in fixed-width arithmetic")]
    Overflow,
    #[error("relation check failed: {0}")]
    Consistency(String),
}
