use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicU64, Ordering};

use lru::LruCache;
use parking_lot::Mutex;

use crate::bits::VertexSet;

/// Default number of memoized subcomplexes.
pub const DEFAULT_MEMO_CAPACITY: usize = 1 << 20;

/// Bounded table from canonical facet lists to decided answers.
///
/// Keys are exact facet sets over vertex ids, sorted numerically; no
/// isomorphism reduction is applied. Eviction is least-recently-used. Concurrent inserts of
/// the same key always carry the same answer, so the last writer wins.
pub struct MemoTable {
    cache: Option<Mutex<LruCache<Box<[VertexSet]>, bool>>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoStats {
    pub entries: usize,
    pub hits: u64,
    pub misses: u64,
}

impl MemoTable {
    pub fn new(capacity: usize) -> Self {
        MemoTable {
            cache: NonZeroUsize::new(capacity).map(|c| Mutex::new(LruCache::new(c))),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    /// A table that stores nothing.
    pub fn disabled() -> Self {
        Self::new(0)
    }

    pub fn is_enabled(&self) -> bool {
        self.cache.is_some()
    }

    pub fn get(&self, key: &[VertexSet]) -> Option<bool> {
        let cache = self.cache.as_ref()?;
        let found = cache.lock().get(key).copied();
        let counter = if found.is_some() {
            &self.hits
        } else {
            &self.misses
        };
        counter.fetch_add(1, Ordering::Relaxed);
        found
    }

    pub fn insert(&self, key: &[VertexSet], value: bool) {
        if let Some(cache) = &self.cache {
            cache.lock().put(key.into(), value);
        }
    }

    pub fn clear(&self) {
        if let Some(cache) = &self.cache {
            cache.lock().clear();
        }
    }

    pub fn stats(&self) -> MemoStats {
        MemoStats {
            entries: self.cache.as_ref().map_or(0, |c| c.lock().len()),
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
        }
    }
}

impl Default for MemoTable {
    fn default() -> Self {
        Self::new(DEFAULT_MEMO_CAPACITY)
    }
}
