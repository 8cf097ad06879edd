//! Data-parallel helpers.
//!
//! With the `parallel` feature (on by default) the sweep kernels fan out over
//! rayon's pool; without it, or when [`Exec::Sequential`] is requested, the
//! same closures run on the calling thread. Outputs are always returned in
//! input order so callers stay byte-deterministic.

/// Execution strategy for batch kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this build can actually run work in parallel.
    pub fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Map `f` over `items`, preserving order.
pub fn map<T, U, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
        _ => items.into_iter().map(f).collect(),
    }
}

/// Map `f` over `items` and concatenate the results, preserving order.
pub fn flat_map<T, U, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Vec<U> + Sync + Send,
{
    map(exec, items, f).into_iter().flatten().collect()
}
