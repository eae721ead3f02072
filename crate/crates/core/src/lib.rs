//! Exact arithmetic for the Hurwitz quaternion order.
//!
//! The base field is K = Q(eta), eta = 2cos(2pi/7), and the algebra is
//! D = (eta, eta)_K. On top of exact field and quaternion arithmetic the
//! crate provides the three classical orders, explicit splittings of
//! residue rings of the Hurwitz order into 2x2 matrix rings, and the
//! (2,3,7) congruence tower with two independent systole engines.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod error;
pub mod exec;
pub mod field;
pub mod group;
pub mod ideal;
pub mod linalg;
pub mod order;
pub mod quat;
pub mod real;
pub mod residue;

pub use error::{Error, Result};
pub use field::{FieldElem, Place};
pub use ideal::{IdealK, PrimeFactorization, PrimeIdeal};
pub use order::{Order, OrderName};
pub use quat::QuatElem;
pub use real::{Precision, Real};
