use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use crate::error::Result;
use crate::exactmath::Count;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Formula,
    Oracle,
    Transform(Vec<String>),
}

/// A dense `(m, n)` grid of counts for one class, optionally at fixed `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub class_id: String,
    pub k: Option<usize>,
    pub provenance: Provenance,
    entries: BTreeMap<(usize, usize), Count>,
}

impl CountTable {
    pub fn new(class_id: impl Into<String>, k: Option<usize>, provenance: Provenance) -> Self {
        Self {
            class_id: class_id.into(),
            k,
            provenance,
            entries: BTreeMap::new(),
        }
    }

    /// Evaluates `f` on every cell of the rectangle.
    pub fn tabulate(
        class_id: impl Into<String>,
        k: Option<usize>,
        provenance: Provenance,
        ms: RangeInclusive<usize>,
        ns: RangeInclusive<usize>,
        mut f: impl FnMut(usize, usize) -> Result<Count>,
    ) -> Result<Self> {
        let mut table = Self::new(class_id, k, provenance);
        for m in ms {
            for n in ns.clone() {
                table.insert(m, n, f(m, n)?);
            }
        }
        Ok(table)
    }

    pub fn insert(&mut self, m: usize, n: usize, value: Count) {
        self.entries.insert((m, n), value);
    }

    pub fn get(&self, m: usize, n: usize) -> Option<&Count> {
        self.entries.get(&(m, n))
    }

    /// Cells in `(m, n)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Count)> {
        self.entries.iter().map(|(&(m, n), v)| (m, n, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
