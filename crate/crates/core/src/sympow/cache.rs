//! Process-wide memo table for symbolic powers, keyed by value.

use std::any::{type_name, Any};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

type Table = HashMap<(String, u32), Arc<dyn Any + Send + Sync>>;

fn table() -> &'static Mutex<Table> {
    static TABLE: OnceLock<Mutex<Table>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn full_key<T>(key: &str) -> String {
    format!("{key};{}", type_name::<T>())
}

pub(super) fn get<T: Send + Sync + 'static>(key: &str, r: u32) -> Option<Arc<T>> {
    let guard = table().lock().unwrap_or_else(|p| p.into_inner());
    guard.get(&(full_key::<T>(key), r)).cloned().and_then(|v| v.downcast::<T>().ok())
}

/// First insertion wins, so every caller sees one immutable value.
pub(super) fn put<T: Send + Sync + 'static>(key: &str, r: u32, value: Arc<T>) {
    let mut guard = table().lock().unwrap_or_else(|p| p.into_inner());
    guard.entry((full_key::<T>(key), r)).or_insert(value);
}
