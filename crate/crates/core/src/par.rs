use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for the data-parallel sweeps.
///
/// `Parallel` uses the current rayon pool when the `parallel` feature is
/// compiled in, and behaves exactly like `Sequential` otherwise. Outputs are
/// collected in input order, so both modes return identical results.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel,
}

impl Exec {
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => range.into_par_iter().map(f).collect(),
            _ => range.map(f).collect(),
        }
    }

    /// Whether this build can actually run work on several threads.
    pub fn is_threaded(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}
