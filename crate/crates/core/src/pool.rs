//! Worker pool sizing.

use std::sync::OnceLock;

use rayon::ThreadPool;

/// Environment variable capping the number of worker threads.
pub const MAX_THREADS_ENV: &str = "GRIFF_MAX_THREADS";

fn thread_count() -> usize {
    let avail = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    match std::env::var(MAX_THREADS_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
        Some(cap) if cap >= 1 => cap.min(avail),
        _ => avail,
    }
}

/// Shared pool, sized once from the environment.
pub fn pool() -> &'static ThreadPool {
    static POOL: OnceLock<ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(thread_count())
            .thread_name(|i| format!("griff-worker-{i}"))
            .build()
            .expect("thread pool")
    })
}
