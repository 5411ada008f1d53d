//! T0 counts for classes described by allowed row weights and forbidden
//! column sums, through the partition-type sum.
//!
//! For a partition of the vertices, a matrix constant on blocks is a choice
//! of block subsets per row. Forbidden column sums are sieved block by
//! block: each block is either free or pinned to one forbidden pattern
//! (all zero, all one, or a single one in some row).

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::exactmath::{count, lambda, Count, PartitionType};
use crate::transforms::theorem2_uniform;
use crate::RowConvention;

/// Which column sums are forbidden (`0`, `1`, and `m`).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ForbiddenSums {
    pub zero: bool,
    pub one: bool,
    pub full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GranularClass {
    pub conv: RowConvention,
    /// Allowed row sums.
    pub row_weights: BTreeSet<usize>,
    pub forbidden: ForbiddenSums,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pin {
    Free,
    Zero,
    Full,
    Unit(usize),
}

impl GranularClass {
    pub fn new(conv: RowConvention, row_weights: impl IntoIterator<Item = usize>, forbidden: ForbiddenSums) -> Self {
        Self {
            conv,
            row_weights: row_weights.into_iter().collect(),
            forbidden,
        }
    }

    fn pins(&self, m: usize) -> Vec<Pin> {
        let f = self.forbidden;
        let mut pins = vec![Pin::Free];
        if m == 0 {
            if f.zero || f.full {
                pins.push(Pin::Zero);
            }
            return pins;
        }
        if f.zero {
            pins.push(Pin::Zero);
        }
        if f.full || (f.one && m == 1) {
            pins.push(Pin::Full);
        }
        if f.one && m > 1 {
            assert_eq!(
                self.conv,
                RowConvention::Ordered,
                "unit-column sieving needs independent rows"
            );
            pins.extend((0..m).map(Pin::Unit));
        }
        pins
    }

    fn rows_with(&self, dist: &[Count], base: usize) -> Count {
        dist.iter()
            .enumerate()
            .filter(|(w, _)| self.row_weights.contains(&(w + base)))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Matrices constant on the blocks of a partition of type `tau`,
    /// with every constraint imposed.
    pub fn alpha_tau(&self, m: usize, tau: &PartitionType) -> Count {
        let blocks = tau.block_sizes();
        let pins = self.pins(m);
        let mut choice = vec![Pin::Free; blocks.len()];
        let mut total = Count::zero();
        self.walk(m, &blocks, &pins, 0, &mut choice, &mut total);
        total
    }

    fn walk(&self, m: usize, blocks: &[usize], pins: &[Pin], at: usize, choice: &mut [Pin], total: &mut Count) {
        if at == blocks.len() {
            *total += self.evaluate(m, blocks, choice);
            return;
        }
        for &p in pins {
            choice[at] = p;
            self.walk(m, blocks, pins, at + 1, choice, total);
        }
    }

    fn evaluate(&self, m: usize, blocks: &[usize], choice: &[Pin]) -> Count {
        let n: usize = blocks.iter().sum();
        let mut dist = vec![Count::zero(); n + 1];
        dist[0] = Count::one();
        let mut base = 0;
        let mut units = vec![0usize; m];
        let mut pinned = 0;
        let mut any_unit = false;
        for (&b, &p) in blocks.iter().zip(choice) {
            match p {
                Pin::Free => {
                    for w in (b..=n).rev() {
                        let add = dist[w - b].clone();
                        dist[w] += add;
                    }
                }
                Pin::Zero => pinned += 1,
                Pin::Full => {
                    pinned += 1;
                    base += b;
                }
                Pin::Unit(j) => {
                    pinned += 1;
                    any_unit = true;
                    units[j] += b;
                }
            }
        }
        let value = if any_unit {
            units.iter().map(|u| self.rows_with(&dist, base + u)).product()
        } else {
            lambda(self.conv, &self.rows_with(&dist, base), m)
        };
        if pinned % 2 == 0 {
            value
        } else {
            -value
        }
    }

    /// T0 matrices of the class with `m` rows and `n` columns.
    pub fn t0_count(&self, m: usize, n: usize) -> Count {
        if n == 0 {
            return lambda(self.conv, &count(u8::from(self.row_weights.contains(&0))), m);
        }
        theorem2_uniform(n, |t| self.alpha_tau(m, t))
    }
}
