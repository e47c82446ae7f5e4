//! Data-parallel map with a sequential fallback.
//!
//! Every batch entry point of the crate (grid sweeps, per-coefficient
//! quadratures, identity suites) funnels through [`map_indexed`], so the
//! choice between rayon and a plain loop is made in one place. Without the
//! `parallel` feature, [`Execution::Parallel`] silently degrades to the
//! sequential loop.

/// How a batch of independent evaluations is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this build can actually run work on several threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Maps `f` over `0..len`, preserving order.
pub fn map_indexed<R, F>(exec: Execution, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec == Execution::Parallel {
        use rayon::prelude::*;
        return (0..len).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..len).map(f).collect()
}
