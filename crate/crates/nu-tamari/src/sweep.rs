//! Parallel sweeps over ν words with output in canonical word order.

use nu_tamari_core::paths::NuPath;
use rayon::prelude::*;

/// Environment variable overriding the number of worker threads.
pub const THREADS_ENV: &str = "NU_TAMARI_THREADS";

/// All words over `{N, E}` of the given length, `N < E` lexicographically.
pub fn words(len: usize) -> Vec<NuPath> {
    (0u64..1 << len)
        .map(|mask| {
            (0..len)
                .map(|i| {
                    if mask >> (len - 1 - i) & 1 == 1 {
                        'E'
                    } else {
                        'N'
                    }
                })
                .collect::<String>()
                .parse()
                .expect("non-empty word")
        })
        .collect()
}

/// All words with `1 ≤ |ν| ≤ max_len`, shorter words first.
pub fn words_up_to(max_len: usize) -> Vec<NuPath> {
    (1..=max_len).flat_map(words).collect()
}

/// Thread count: `explicit`, else the environment variable, else rayon's default.
pub fn thread_count(explicit: Option<usize>) -> Option<usize> {
    explicit
        .or_else(|| std::env::var(THREADS_ENV).ok()?.trim().parse().ok())
        .filter(|&n| n > 0)
}

/// Applies `f` to every word in parallel; results come back in input order.
pub fn run<T: Send>(
    words: &[NuPath],
    threads: Option<usize>,
    f: impl Fn(&NuPath) -> T + Sync,
) -> Vec<T> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count(threads) {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    pool.install(|| words.par_iter().map(&f).collect())
}
