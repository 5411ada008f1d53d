use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::exactmath::Count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Tag {
    Omega1,
    ThetaStar1 { printed: bool },
    ThetaStar3 { printed: bool },
    ThetaStar4 { printed: bool },
    ThetaBarStar1 { printed: bool },
    ThetaBarStar3 { printed: bool },
    ThetaBarStar4 { printed: bool },
    OmegaBarStar0 { printed: bool },
    OmegaBbarStar1 { printed: bool },
}

type Key = (Tag, usize, usize, usize, i64);

fn table() -> &'static Mutex<HashMap<Key, Count>> {
    static T: OnceLock<Mutex<HashMap<Key, Count>>> = OnceLock::new();
    T.get_or_init(Default::default)
}

/// Cached evaluation of a recursive family. The lock is not held across `f`.
pub(crate) fn cached(tag: Tag, conv: usize, m: usize, n: usize, k: i64, f: impl FnOnce() -> Count) -> Count {
    let key = (tag, conv, m, n, k);
    if let Some(v) = table().lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let v = f();
    table().lock().expect("memo poisoned").insert(key, v.clone());
    v
}
