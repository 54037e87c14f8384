use serde::{Deserialize, Serialize};

/// Default cap on the number of entries in any enumeration map.
pub const DEFAULT_MEMORY_CAP: usize = 200_000_000;

/// Knobs shared by the enumeration-heavy operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeOptions {
    /// Worker threads; 0 uses the ambient rayon pool.
    pub workers: usize,
    /// Abort when a point/value map would exceed this many entries.
    pub memory_cap: usize,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions { workers: 0, memory_cap: DEFAULT_MEMORY_CAP }
    }
}

impl ComputeOptions {
    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_memory_cap(mut self, cap: usize) -> Self {
        self.memory_cap = cap;
        self
    }

    /// Runs `f` on a pool with `self.workers` threads.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.workers == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}
