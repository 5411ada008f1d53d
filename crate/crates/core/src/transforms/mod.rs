//! Transform calculus: T0 filtration and its inverse, edge-multiplicity
//! transforms between row conventions, partition sums, the cover shift
//! and the connected-component recurrence.

mod connected;
pub mod granular;
mod series;
mod table;

pub use connected::{connected_table, f1_connected, EdgeLabelling};
pub use granular::{ForbiddenSums, GranularClass};
pub use series::{egf_log_check, first_log_mismatch, SeriesTable, YNorm};
pub use table::{CountTable, Provenance};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{
    b_tau, binom, c_tau, exact_div, factorial, partition_types, sign, stirling1_row, stirling2_row, Count,
    PartitionType,
};
use crate::RowConvention;

/// `sum_{i=1}^n s(n,i) source(i)`: plain counts to T0 counts.
pub fn f0(n: usize, source: impl Fn(usize) -> Count) -> Count {
    let s = stirling1_row(n);
    (1..=n).map(|i| &s[i] * source(i)).sum()
}

/// `sum_{i=1}^n S(n,i) source_star(i)`: T0 counts back to plain counts.
pub fn f0_inv(n: usize, source_star: impl Fn(usize) -> Count) -> Count {
    let s = stirling2_row(n);
    (1..=n).map(|i| &s[i] * source_star(i)).sum()
}

/// `sum_{i=0}^n s(n,i) source_hat(i)`.
pub fn f0_hat(n: usize, source_hat: impl Fn(usize) -> Count) -> Count {
    let s = stirling1_row(n);
    (0..=n).map(|i| &s[i] * source_hat(i)).sum()
}

/// `sum_{i=1}^m S(m,i) source(i)`: ordered distinct rows to ordered rows.
/// At `m = 0` returns `source(0)`.
pub fn g1(m: usize, source: impl Fn(usize) -> Count) -> Count {
    let s = stirling2_row(m);
    (0..=m).filter(|&i| !s[i].is_zero()).map(|i| &s[i] * source(i)).sum()
}

/// Inverse of [`g1`]: `sum_{i=1}^m s(m,i) source(i)`.
pub fn g1_inv(m: usize, source: impl Fn(usize) -> Count) -> Count {
    let s = stirling1_row(m);
    (0..=m).filter(|&i| !s[i].is_zero()).map(|i| &s[i] * source(i)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    ToUnordered,
    ToOrdered,
}

/// Divides by or multiplies by `m!`.
pub fn g2(source: &Count, m: usize, direction: Direction) -> Result<Count> {
    match direction {
        Direction::ToOrdered => Ok(source * factorial(m)),
        Direction::ToUnordered => exact_div(source, &factorial(m)).ok_or_else(|| Error::NotDivisible {
            value: source.to_string(),
            m,
        }),
    }
}

/// `sum_{i=1}^m C(m-1,i-1) source(i)`: unordered distinct rows to multisets.
/// At `m = 0` returns `source(0)`.
pub fn g3_prime(m: usize, source: impl Fn(usize) -> Count) -> Count {
    if m == 0 {
        return source(0);
    }
    (1..=m).map(|i| binom(m as i64 - 1, i as i64 - 1) * source(i)).sum()
}

/// Inverse of [`g3_prime`]: `sum_{i=1}^m (-1)^{m-i} C(m-1,i-1) source(i)`.
pub fn g3_prime_inv(m: usize, source: impl Fn(usize) -> Count) -> Count {
    if m == 0 {
        return source(0);
    }
    (1..=m)
        .map(|i| binom(m as i64 - 1, i as i64 - 1) * source(i) * sign(m - i))
        .sum()
}

/// Converts an ordered-distinct-rows count, given as a function of the
/// edge count, to convention `conv` at `m` edges.
pub fn from_distinct_rows(conv: RowConvention, m: usize, base: impl Fn(usize) -> Count) -> Count {
    if m == 0 {
        return base(0);
    }
    match conv {
        RowConvention::OrderedDistinct => base(m),
        RowConvention::Ordered => g1(m, base),
        RowConvention::UnorderedDistinct => {
            g2(&base(m), m, Direction::ToUnordered).expect("ordered distinct counts are divisible by m!")
        }
        RowConvention::Multiset => g3_prime(m, |i| {
            g2(&base(i), i, Direction::ToUnordered).expect("ordered distinct counts are divisible by i!")
        }),
    }
}

/// Set partitions of `{0..n}` as block lists, via restricted-growth strings.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            let mut blocks = vec![Vec::new(); if n == 0 { 0 } else { max + 1 }];
            for (v, &b) in rgs.iter().enumerate() {
                blocks[b].push(v);
            }
            out.push(blocks);
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs.push(b);
            go(i + 1, n, rgs, max.max(b), out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// Type of a set partition.
pub fn partition_type_of(blocks: &[Vec<usize>], n: usize) -> PartitionType {
    let mut alphas = vec![0; n];
    for b in blocks {
        alphas[b.len() - 1] += 1;
    }
    PartitionType::new(alphas)
}

/// `sum_pi alpha(pi) prod_B (-1)^{|B|-1} (|B|-1)!` over set partitions of an `n`-set.
pub fn theorem1_sum(n: usize, alpha_pi: impl Fn(&[Vec<usize>]) -> Count) -> Count {
    set_partitions(n)
        .iter()
        .map(|p| {
            let w: Count = p
                .iter()
                .map(|b| factorial(b.len() - 1) * sign(b.len() - 1))
                .product();
            w * alpha_pi(p)
        })
        .sum()
}

/// `sum_{sigma(tau)=n} (-1)^{n-|tau|} c(tau) alpha(tau)`.
pub fn theorem2_uniform(n: usize, alpha_tau: impl Fn(&PartitionType) -> Count) -> Count {
    partition_types(n)
        .iter()
        .map(|t| c_tau(t) * sign(n - t.blocks()) * alpha_tau(t))
        .sum()
}

/// Same as [`f0`]: a regular T0 property depends on the partition only through its block count.
pub fn theorem3_regular(n: usize, alpha_k: impl Fn(usize) -> Count) -> Count {
    f0(n, alpha_k)
}

/// Number of set partitions summed with type weights; `sum_tau b(tau)` is the Bell number.
pub fn bell(n: usize) -> Count {
    partition_types(n).iter().map(b_tau).sum()
}

/// `sum_{i=1}^{n+1} s(n+1,i) source(i-1)`: T0 covers from plain counts of an
/// isolated-vertex-stable property.
pub fn cover_shift(n: usize, source: impl Fn(usize) -> Count) -> Count {
    let s = stirling1_row(n + 1);
    (1..=n + 1).map(|i| &s[i] * source(i - 1)).sum()
}
