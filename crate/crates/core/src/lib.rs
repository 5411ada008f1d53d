//! Exact enumeration of labelled hypergraphs, with and without the T0
//! (distinct columns) property.
//!
//! Counts are produced two ways: by closed forms and transforms
//! ([`catalog`], [`transforms`]) and by exhaustive enumeration
//! ([`oracle`]). [`oracle::verify_grid`] compares the two.

pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod hypercore;
pub mod oracle;
pub mod transforms;

pub use error::{Error, Result};
pub use exactmath::Count;

use std::fmt;

/// How the rows (edges) of an incidence matrix are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowConvention {
    /// Ordered, pairwise-distinct rows.
    OrderedDistinct = 1,
    /// Ordered, repeats allowed.
    Ordered = 2,
    /// Unordered, no repeated rows.
    UnorderedDistinct = 3,
    /// Unordered multiset of rows.
    Multiset = 4,
}

impl RowConvention {
    pub const ALL: [RowConvention; 4] = [
        RowConvention::OrderedDistinct,
        RowConvention::Ordered,
        RowConvention::UnorderedDistinct,
        RowConvention::Multiset,
    ];

    pub fn from_index(i: usize) -> Option<Self> {
        Self::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, RowConvention::OrderedDistinct | RowConvention::Ordered)
    }

    pub fn allows_repeats(self) -> bool {
        matches!(self, RowConvention::Ordered | RowConvention::Multiset)
    }
}

impl fmt::Display for RowConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}
