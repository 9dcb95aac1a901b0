//! Fan-out over independent work items.
//!
//! With the `parallel` feature the items run on the current rayon pool;
//! without it they run in order on the calling thread. Results always come
//! back in item order, and every caller combines them with exact integer
//! sums, so totals do not depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_indices<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indices<R, F>(n: usize, f: F) -> Vec<R>
where
    F: Fn(usize) -> R,
{
    (0..n).map(f).collect()
}

/// Runs `job` with at most `threads` worker threads.
#[cfg(feature = "parallel")]
pub fn with_threads<R, F>(threads: usize, job: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool.install(job),
        Err(_) => job(),
    }
}

/// Runs `job` on the calling thread; built without the `parallel` feature.
#[cfg(not(feature = "parallel"))]
pub fn with_threads<R, F>(_threads: usize, job: F) -> R
where
    F: FnOnce() -> R,
{
    job()
}

/// Whether this build fans work out over threads.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
