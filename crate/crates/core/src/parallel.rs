use rayon::prelude::*;

use crate::error::{Error, Result};

/// Maps `f` over shard indices `0..shards` on `workers` threads and returns
/// the results in shard order, so output never depends on the worker count.
pub fn run_sharded<R, F>(workers: usize, shards: usize, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    if workers <= 1 || shards <= 1 {
        return Ok((0..shards).map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Workers(e.to_string()))?;
    Ok(pool.install(|| (0..shards).into_par_iter().map(f).collect()))
}
