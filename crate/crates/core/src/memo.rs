use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// A fill-once cache. Values are computed outside the lock, so concurrent
/// callers may compute the same entry twice; the first insert wins and
/// both results are equal by construction.
pub(crate) struct Memo<K, V> {
    map: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo { map: RwLock::new(HashMap::new()) }
    }

    pub(crate) fn get(&self, k: &K) -> Option<Arc<V>> {
        self.map.read().unwrap().get(k).cloned()
    }

    pub(crate) fn insert(&self, k: K, v: V) -> Arc<V> {
        self.map.write().unwrap().entry(k).or_insert_with(|| Arc::new(v)).clone()
    }

    pub(crate) fn get_or_try<E>(&self, k: &K, f: impl FnOnce() -> Result<V, E>) -> Result<Arc<V>, E> {
        if let Some(v) = self.get(k) {
            return Ok(v);
        }
        let v = f()?;
        Ok(self.insert(k.clone(), v))
    }
}
