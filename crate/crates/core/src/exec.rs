//! Static work partitioning and the worker pool behind the bench harness.

use std::ops::Range;

use crate::error::{Error, Result};

/// Split `0..len` into `parts` contiguous ranges whose lengths differ by at
/// most one; the first `len % parts` ranges get the extra item. Ranges may
/// be empty when `len < parts`.
pub fn partition(len: usize, parts: usize) -> Vec<Range<usize>> {
    assert!(parts >= 1, "parts must be >= 1");
    let base = len / parts;
    let rem = len % parts;
    let mut out = Vec::with_capacity(parts);
    let mut start = 0;
    for w in 0..parts {
        let size = base + usize::from(w < rem);
        out.push(start..start + size);
        start += size;
    }
    out
}

/// Carve a mutable slice into consecutive chunks of the given sizes. The
/// sizes must sum to at most the slice length; leftover tail is dropped.
pub(crate) fn carve_mut<'a, T>(mut slice: &'a mut [T], sizes: &[usize]) -> Vec<&'a mut [T]> {
    let mut out = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let (head, tail) = slice.split_at_mut(size);
        out.push(head);
        slice = tail;
    }
    out
}

/// A fixed-size team of workers. One worker runs inline on the calling
/// thread; more than one requires the `parallel` feature.
pub struct Workers {
    threads: usize,
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Workers {
    pub fn new(threads: usize) -> Result<Self> {
        if threads == 0 {
            return Err(Error::BenchConfig("worker count must be >= 1".into()));
        }
        #[cfg(feature = "parallel")]
        {
            let pool = if threads == 1 {
                None
            } else {
                Some(
                    rayon::ThreadPoolBuilder::new()
                        .num_threads(threads)
                        .build()
                        .map_err(|e| Error::BenchConfig(format!("thread pool: {e}")))?,
                )
            };
            Ok(Workers { threads, pool })
        }
        #[cfg(not(feature = "parallel"))]
        {
            if threads > 1 {
                return Err(Error::BenchConfig(
                    "built without the `parallel` feature; only 1 worker is available".into(),
                ));
            }
            Ok(Workers { threads })
        }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Run one item per worker. Items own disjoint data; the call returns
    /// after every item finished, which is the barrier the callers rely on.
    pub fn run<T, F>(&self, items: Vec<T>, f: F)
    where
        T: Send,
        F: Fn(T) + Send + Sync,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            pool.install(|| items.into_par_iter().for_each(&f));
            return;
        }
        for t in items {
            f(t);
        }
    }
}
