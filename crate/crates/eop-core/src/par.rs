//! Data-parallel execution of independent verification jobs.
//!
//! Every verification job in this crate (identity samples, residual scans,
//! per-level spectrum checks) is a pure function of its inputs, so batches
//! can run on a rayon pool.  The `parallel` cargo feature (default on)
//! compiles the rayon path in; [`set_parallel`] additionally allows turning
//! it off at runtime, which the benchmark suite uses to compare both modes
//! on identical inputs.  With the feature disabled the sequential fallback
//! is the only path and the toggle is a no-op.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL_ENABLED: AtomicBool = AtomicBool::new(true);

/// Enable or disable the rayon path at runtime.  Returns the previous value.
pub fn set_parallel(enabled: bool) -> bool {
    PARALLEL_ENABLED.swap(enabled, Ordering::SeqCst)
}

/// True when batches will actually run on the rayon pool.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL_ENABLED.load(Ordering::SeqCst)
}

/// Map `f` over `items`, in parallel when enabled, preserving input order.
pub fn map_batch<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// Map `f` over index range `0..n`, in parallel when enabled, preserving order.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batch_preserves_order_in_both_modes() {
        let items: Vec<u64> = (0..1000).collect();
        let prev = set_parallel(true);
        let a = map_batch(items.clone(), |x| x * x);
        set_parallel(false);
        let b = map_batch(items, |x| x * x);
        set_parallel(prev);
        assert_eq!(a, b);
        assert_eq!(a[17], 17 * 17);
    }

    #[test]
    fn range_map_matches_sequential() {
        let prev = set_parallel(true);
        let a = map_range(257, |i| i as f64 * 0.5);
        set_parallel(prev);
        let b: Vec<f64> = (0..257).map(|i| i as f64 * 0.5).collect();
        assert_eq!(a, b);
    }
}
