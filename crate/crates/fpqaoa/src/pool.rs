use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::Result;

/// Bounded worker pool. Results of [`map`](Pool::map) are always in index
/// order, so output never depends on the number of workers.
pub struct Pool {
    inner: ThreadPool,
}

impl Pool {
    /// `jobs = 0` uses every available core.
    pub fn new(jobs: usize) -> Result<Self> {
        let inner = ThreadPoolBuilder::new().num_threads(jobs).build()?;
        Ok(Self { inner })
    }

    pub fn jobs(&self) -> usize {
        self.inner.current_num_threads()
    }

    pub fn map<T, F>(&self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        self.inner
            .install(|| (0..len).into_par_iter().map(f).collect())
    }

    pub fn try_map<T, E, F>(&self, len: usize, f: F) -> std::result::Result<Vec<T>, E>
    where
        T: Send,
        E: Send,
        F: Fn(usize) -> std::result::Result<T, E> + Sync + Send,
    {
        self.inner
            .install(|| (0..len).into_par_iter().map(f).collect())
    }
}
