use std::collections::HashMap;
use std::hash::Hash;
use std::sync::{Arc, RwLock};

/// A read-mostly memo table.
///
/// Values are computed outside the lock; if two threads race on the same key
/// the first insertion wins and both callers observe that value.
pub(crate) struct Memo<K, V> {
    table: RwLock<HashMap<K, Arc<V>>>,
}

impl<K: Eq + Hash + Clone, V> Memo<K, V> {
    pub(crate) fn new() -> Self {
        Memo {
            table: RwLock::new(HashMap::new()),
        }
    }

    pub(crate) fn get_or_insert_with(&self, key: &K, f: impl FnOnce() -> V) -> Arc<V> {
        if let Some(v) = self.table.read().expect("memo lock poisoned").get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(f());
        let mut table = self.table.write().expect("memo lock poisoned");
        Arc::clone(table.entry(key.clone()).or_insert(value))
    }
}
