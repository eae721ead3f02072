//! The (2,3,7) triangle group inside the norm-one units of Q_Hur.

pub mod congruence;
pub mod generators;
pub mod half;
pub mod lattice;
pub mod quotient;
pub mod systole;
pub mod word;
