use std::num::NonZeroUsize;

use crate::error::CliError;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "LOOPMECH_THREADS";

/// Available parallelism, capped by `LOOPMECH_THREADS` when set.
pub fn worker_count() -> Result<usize, CliError> {
    let available = std::thread::available_parallelism().map_or(1, NonZeroUsize::get);
    match std::env::var(THREADS_ENV) {
        Ok(v) => {
            let cap: usize = v
                .trim()
                .parse()
                .map_err(|_| CliError::Config(format!("{THREADS_ENV} must be a positive integer, got {v:?}")))?;
            if cap == 0 {
                return Err(CliError::Config(format!("{THREADS_ENV} must be at least 1")));
            }
            Ok(cap.min(available))
        }
        Err(_) => Ok(available),
    }
}

/// Applies `f` to every item on up to `threads` scoped workers. Results come
/// back in input order, so output does not depend on the thread count.
pub fn map_ordered<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.max(1).min(items.len().max(1));
    if threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker thread panicked"))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved_for_any_thread_count() {
        let items: Vec<u64> = (0..103).collect();
        let serial: Vec<u64> = items.iter().map(|x| x * x).collect();
        for t in [1, 2, 3, 8, 200] {
            assert_eq!(map_ordered(&items, t, |x| x * x), serial);
        }
        assert!(map_ordered(&Vec::<u64>::new(), 4, |x| *x).is_empty());
    }
}
