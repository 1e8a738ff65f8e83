//! Sequential / parallel execution helpers for the census-style scans.
//!
//! With the `parallel` feature enabled (the default) these fan out over
//! rayon's global pool; without it they run as plain loops. Both modes
//! return results in index order — `find_first` semantics for searches,
//! index-ordered collection for maps — so the feature flag never changes
//! any observable output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to `0..n` and collects the results in index order.
#[cfg(feature = "parallel")]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

/// Applies `f` to `0..n` and collects the results in index order.
#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Returns the first (lowest-index) `Some` produced by `f` over `0..n`.
#[cfg(feature = "parallel")]
pub(crate) fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    (0..n).into_par_iter().find_map_first(f)
}

/// Returns the first (lowest-index) `Some` produced by `f` over `0..n`.
#[cfg(not(feature = "parallel"))]
pub(crate) fn find_map_first<T, F>(n: usize, f: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).find_map(f)
}
