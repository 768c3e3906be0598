//! Switch between rayon and sequential iteration. Both paths produce
//! identical results: callers only map independent items and collect in
//! input order, so scheduling never leaks into the output.

use std::sync::atomic::{AtomicBool, Ordering};

static SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces the sequential path at runtime even when the `parallel` feature
/// is compiled in. Used by the benchmarks to compare the two.
pub fn set_sequential(on: bool) {
    SEQUENTIAL.store(on, Ordering::Relaxed);
}

/// Caps the number of worker threads. Only the first call has an effect;
/// returns whether the cap was installed.
pub fn set_max_threads(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}

pub(crate) fn map_collect<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        if items.len() > 1 && !SEQUENTIAL.load(Ordering::Relaxed) {
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}
