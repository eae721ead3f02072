//! Scoped-thread executor.

use hurwitz_core::exec::Executor;

/// Splits work into contiguous chunks, one per thread, and concatenates the
/// results in input order.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    threads: usize,
}

impl Threaded {
    pub fn new(threads: usize) -> Self {
        Threaded {
            threads: threads.max(1),
        }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }
}

impl Executor for Threaded {
    fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync,
    {
        if self.threads == 1 || items.len() < 2 {
            return items.iter().map(f).collect();
        }
        let chunk = items.len().div_ceil(self.threads);
        let f = &f;
        std::thread::scope(|s| {
            let handles: Vec<_> = items
                .chunks(chunk)
                .map(|c| s.spawn(move || c.iter().map(f).collect::<Vec<U>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<u64> = (0..1000).collect();
        for t in [1, 2, 3, 8, 2000] {
            let out = Threaded::new(t).map(&items, |x| x * x);
            assert_eq!(out, items.iter().map(|x| x * x).collect::<Vec<_>>());
        }
        assert!(Threaded::new(4).map(&[] as &[u8], |x| *x).is_empty());
        assert_eq!(Threaded::new(0).threads(), 1);
    }
}
