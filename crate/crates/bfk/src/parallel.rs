//! Runs the enumeration shards on a worker pool. Shard results are merged in an
//! order-independent way, so the output does not depend on the worker count.

use bfk_core::enumeration::{self, Classification, SearchOptions, ShardResult};
use bfk_core::FaceGraph;
use rayon::prelude::*;

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool")
}

pub fn classify(d_max: usize, opts: SearchOptions, jobs: usize) -> Classification {
    let shards = enumeration::classification_shards(d_max, opts);
    let results: Vec<ShardResult> = pool(jobs).install(|| shards.par_iter().map(enumeration::run_shard).collect());
    enumeration::assemble(d_max, results)
}

pub fn generate(n: usize, d: usize, opts: SearchOptions, jobs: usize) -> Vec<FaceGraph> {
    let shards = enumeration::shards(n, d, opts);
    let results: Vec<ShardResult> = pool(jobs).install(|| shards.par_iter().map(enumeration::run_shard).collect());
    enumeration::merge_results(results).into_values().flat_map(|m| m.into_values()).collect()
}

/// Default worker count: the machine's available parallelism.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
