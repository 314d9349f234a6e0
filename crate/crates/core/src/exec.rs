//! Execution policy for the data-parallel kernels.
//!
//! Every kernel that walks a large index space (codeword enumeration, search
//! candidates, family members) takes an [`Exec`]. Results never depend on the
//! policy: all reductions are order-independent (sums, minima) or are
//! followed by a deterministic sort.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    /// Rayon work stealing. Falls back to sequential when the crate is built
    /// without the `parallel` feature.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Map every index in `0..n` and fold the results with `reduce`.
    pub(crate) fn map_reduce<T, M, R>(self, n: u64, identity: impl Fn() -> T + Sync + Send, map: M, reduce: R) -> T
    where
        T: Send,
        M: Fn(u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(&map).reduce(&identity, &reduce);
        }
        (0..n).map(map).fold(identity(), reduce)
    }

    pub(crate) fn any(self, n: u64, pred: impl Fn(u64) -> bool + Sync + Send) -> bool {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().any(pred);
        }
        (0..n).any(pred)
    }

    /// First index (in ascending order) satisfying `pred`.
    pub(crate) fn find_first<T: Send>(self, n: u64, f: impl Fn(u64) -> Option<T> + Sync + Send) -> Option<T> {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..n).into_par_iter().map(&f).find_first(|r| r.is_some()).flatten();
        }
        (0..n).find_map(f)
    }

    /// Order-preserving map over a slice.
    pub(crate) fn map_vec<T: Sync, U: Send>(self, items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}
