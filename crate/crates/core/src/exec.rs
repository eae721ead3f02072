//! Work distribution hook for the enumeration engines.
//!
//! The engines only ever need an order-preserving parallel map. The core
//! crate ships the sequential implementation; a threaded one lives in the
//! command-line crate.

use alloc::vec::Vec;

pub trait Executor: Sync {
    /// Applies `f` to every item and returns the results in input order.
    fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync,
    {
        items.iter().map(f).collect()
    }
}
