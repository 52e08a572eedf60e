//! Index-parallel map with a sequential fallback.
//!
//! With the `parallel` feature (default) work is spread over a rayon pool;
//! without it, or with `workers == 1`, everything runs on the calling thread.
//! Output order always follows the index order.

/// Maps `f` over `0..count` using up to `workers` threads.
pub fn map_indexed<T, F>(count: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if workers > 1 && count > 1 {
        use rayon::prelude::*;
        return match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
            Ok(pool) => pool.install(|| (0..count).into_par_iter().map(&f).collect()),
            Err(_) => (0..count).into_par_iter().map(&f).collect(),
        };
    }
    let _ = workers;
    (0..count).map(f).collect()
}

/// Maps `f` over a slice on the global pool (sequentially without `parallel`).
pub fn map_slice<S, T, F>(items: &[S], f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Number of worker threads available to the default pool.
pub fn available_workers() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}
