use rayon::ThreadPool;

pub const THREADS_ENV: &str = "FUETER_LAB_THREADS";

/// Worker pool capped by `FUETER_LAB_THREADS` (unset, empty or 0 means the
/// rayon default).
pub fn pool() -> ThreadPool {
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()).unwrap_or(0);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}
