//! Write-once caches shared by the recurrence-heavy families.
//!
//! Racing writers are harmless: a key always computes to the same value, the
//! first insert wins and later ones are dropped. Disabled caches recompute
//! on every lookup, which is how cache transparency is tested.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::RwLock;

pub struct MemoTable<K, V> {
    map: RwLock<HashMap<K, V>>,
    enabled: bool,
}

impl<K: Eq + Hash, V: Clone> MemoTable<K, V> {
    pub fn new() -> Self {
        MemoTable {
            map: RwLock::new(HashMap::new()),
            enabled: true,
        }
    }

    pub fn disabled() -> Self {
        MemoTable {
            enabled: false,
            ..Self::new()
        }
    }

    pub fn get(&self, key: &K) -> Option<V> {
        if !self.enabled {
            return None;
        }
        self.map.read().unwrap().get(key).cloned()
    }

    /// Stores `value` unless `key` is already present; returns the stored value.
    pub fn insert(&self, key: K, value: V) -> V {
        if !self.enabled {
            return value;
        }
        self.map
            .write()
            .unwrap()
            .entry(key)
            .or_insert(value)
            .clone()
    }

    pub fn get_or_insert_with(&self, key: K, compute: impl FnOnce() -> V) -> V {
        match self.get(&key) {
            Some(v) => v,
            None => self.insert(key, compute()),
        }
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl<K: Eq + Hash, V: Clone> Default for MemoTable<K, V> {
    fn default() -> Self {
        Self::new()
    }
}

/// Sequence `t_0, t_1, …` where `t_n` is derived from `t_0..t_{n-1}`,
/// extended on demand. Stored items are only ever appended.
pub struct PrefixCache<T> {
    items: RwLock<Vec<T>>,
    next: fn(&[T]) -> T,
    enabled: bool,
}

impl<T> PrefixCache<T> {
    pub fn new(next: fn(&[T]) -> T) -> Self {
        PrefixCache {
            items: RwLock::new(Vec::new()),
            next,
            enabled: true,
        }
    }

    pub fn disabled(next: fn(&[T]) -> T) -> Self {
        PrefixCache {
            enabled: false,
            ..Self::new(next)
        }
    }

    /// Runs `f` on item `n`, extending the prefix first if needed.
    pub fn with<R>(&self, n: usize, f: impl FnOnce(&T) -> R) -> R {
        if !self.enabled {
            let mut local = Vec::with_capacity(n + 1);
            Self::extend(&mut local, n, self.next);
            return f(&local[n]);
        }
        {
            let items = self.items.read().unwrap();
            if let Some(item) = items.get(n) {
                return f(item);
            }
        }
        let mut items = self.items.write().unwrap();
        Self::extend(&mut items, n, self.next);
        f(&items[n])
    }

    pub fn cached_len(&self) -> usize {
        self.items.read().unwrap().len()
    }

    fn extend(items: &mut Vec<T>, n: usize, next: fn(&[T]) -> T) {
        while items.len() <= n {
            let item = next(items);
            items.push(item);
        }
    }
}
