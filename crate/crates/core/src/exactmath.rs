//! Exact integer kernels: binomials, falling factorials, Stirling numbers,
//! partition types and the block-union weights built on them.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::RowConvention;

/// Arbitrary-precision signed count.
pub type Count = BigInt;

pub fn count(x: impl Into<BigInt>) -> Count {
    x.into()
}

pub fn pow2(e: usize) -> Count {
    Count::one() << e
}

pub fn factorial(n: usize) -> Count {
    (2..=n).fold(Count::one(), |acc, i| acc * i)
}

/// `C(i, j)`, zero outside `0 <= j <= i`.
pub fn binom(i: i64, j: i64) -> Count {
    if i < 0 || j < 0 || j > i {
        return Count::zero();
    }
    let j = j.min(i - j);
    let mut acc = Count::one();
    for t in 0..j {
        acc = acc * (i - t) / (t + 1);
    }
    acc
}

/// `C(x, j)` for a big `x`; polynomial semantics for negative `x`.
pub fn binom_count(x: &Count, j: usize) -> Count {
    falling(x, j) / factorial(j)
}

/// Falling factorial `[x]_j = x (x-1) ... (x-j+1)`.
pub fn falling(x: &Count, j: usize) -> Count {
    let mut acc = Count::one();
    let mut f = x.clone();
    for _ in 0..j {
        if f.is_zero() {
            return Count::zero();
        }
        acc *= &f;
        f -= 1;
    }
    acc
}

/// Selection count `lambda_conv(i, j)`: ways to pick `j` edges from `i`
/// candidates under a row convention.
pub fn lambda(conv: RowConvention, i: &Count, j: usize) -> Count {
    match conv {
        RowConvention::OrderedDistinct => falling(i, j),
        RowConvention::Ordered => num_traits::pow(i.clone(), j),
        RowConvention::UnorderedDistinct => binom_count(i, j),
        RowConvention::Multiset => {
            if j == 0 {
                Count::one()
            } else {
                binom_count(&(i + j - 1u32), j)
            }
        }
    }
}

type Triangle = RwLock<Vec<Vec<Count>>>;

fn triangle_row(table: &'static OnceLock<Triangle>, n: usize, next: fn(&[Count], usize) -> Vec<Count>) -> Vec<Count> {
    let lock = table.get_or_init(|| RwLock::new(vec![vec![Count::one()]]));
    {
        let rows = lock.read().expect("stirling table poisoned");
        if let Some(row) = rows.get(n) {
            return row.clone();
        }
    }
    let mut rows = lock.write().expect("stirling table poisoned");
    while rows.len() <= n {
        let k = rows.len();
        let row = next(&rows[k - 1], k);
        rows.push(row);
    }
    rows[n].clone()
}

fn next_s1(prev: &[Count], n: usize) -> Vec<Count> {
    // s(n,i) = s(n-1,i-1) - (n-1) s(n-1,i)
    let mut row = vec![Count::zero(); n + 1];
    for i in 1..=n {
        let carry = if i < n { &prev[i] * (n - 1) } else { Count::zero() };
        row[i] = &prev[i - 1] - carry;
    }
    row
}

fn next_s2(prev: &[Count], n: usize) -> Vec<Count> {
    let mut row = vec![Count::zero(); n + 1];
    for i in 1..=n {
        let stay = if i < n { &prev[i] * i } else { Count::zero() };
        row[i] = &prev[i - 1] + stay;
    }
    row
}

static S1: OnceLock<Triangle> = OnceLock::new();
static S2: OnceLock<Triangle> = OnceLock::new();

/// Row `n` of the signed Stirling numbers of the first kind, indices `0..=n`.
pub fn stirling1_row(n: usize) -> Vec<Count> {
    triangle_row(&S1, n, next_s1)
}

/// Row `n` of the Stirling numbers of the second kind, indices `0..=n`.
pub fn stirling2_row(n: usize) -> Vec<Count> {
    triangle_row(&S2, n, next_s2)
}

pub fn stirling1(n: usize, i: usize) -> Count {
    if i > n {
        return Count::zero();
    }
    stirling1_row(n).swap_remove(i)
}

pub fn stirling2(n: usize, i: usize) -> Count {
    if i > n {
        return Count::zero();
    }
    stirling2_row(n).swap_remove(i)
}

/// Block-size multiplicities `(alpha_1, ..., alpha_n)` of a set partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionType {
    alphas: Vec<usize>,
}

impl PartitionType {
    /// Builds a type from its multiplicities; `alphas[i]` counts blocks of size `i + 1`.
    pub fn new(alphas: Vec<usize>) -> Self {
        Self { alphas }
    }

    pub fn alphas(&self) -> &[usize] {
        &self.alphas
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    /// `sigma(tau) = sum i * alpha_i`.
    pub fn sigma(&self) -> usize {
        self.alphas.iter().enumerate().map(|(i, a)| (i + 1) * a).sum()
    }

    /// Number of blocks `|tau|`.
    pub fn blocks(&self) -> usize {
        self.alphas.iter().sum()
    }

    /// Block sizes in nondecreasing order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.alphas
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i + 1, a))
            .collect()
    }
}

/// Every partition type of an `n`-set, lexicographic on `(alpha_1, ..., alpha_n)`.
pub fn partition_types(n: usize) -> Vec<PartitionType> {
    fn go(i: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<PartitionType>) {
        if i > n {
            if left == 0 {
                out.push(PartitionType::new(cur.clone()));
            }
            return;
        }
        // sizes above i must absorb the remainder; a remainder < i+1 other than 0 is dead
        for a in 0..=left / i {
            let rest = left - a * i;
            if rest != 0 && i == n {
                continue;
            }
            cur.push(a);
            go(i + 1, n, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn alpha_denominator(tau: &PartitionType, per_block: impl Fn(usize) -> Count) -> Count {
    tau.alphas
        .iter()
        .enumerate()
        .fold(Count::one(), |acc, (i, &a)| acc * factorial(a) * num_traits::pow(per_block(i + 1), a))
}

/// Number of set partitions of an `n`-set with type `tau`.
pub fn b_tau(tau: &PartitionType) -> Count {
    factorial(tau.sigma()) / alpha_denominator(tau, factorial)
}

/// Cycle-type weight `n! / (prod alpha_i! i^alpha_i)`.
pub fn c_tau(tau: &PartitionType) -> Count {
    factorial(tau.sigma()) / alpha_denominator(tau, count)
}

/// Coefficients of `prod_i (1 + x^i)^alpha_i`: entry `w` counts block unions of size `w`.
fn union_weights(tau: &PartitionType) -> Vec<Count> {
    let n = tau.sigma();
    let mut poly = vec![Count::zero(); n + 1];
    poly[0] = Count::one();
    for (idx, &a) in tau.alphas.iter().enumerate() {
        let size = idx + 1;
        for _ in 0..a {
            for w in (size..=n).rev() {
                let add = poly[w - size].clone();
                poly[w] += add;
            }
        }
    }
    poly
}

/// Number of `k`-sets that are unions of blocks of a partition of type `alpha`.
pub fn nu(alpha: &PartitionType, k: usize) -> Count {
    union_weights(alpha).get(k).cloned().unwrap_or_default()
}

/// Number of non-empty block unions of size at most `k`.
pub fn nu_le(alpha: &PartitionType, k: usize) -> Count {
    union_weights(alpha).into_iter().skip(1).take(k).sum()
}

/// `(-1)^e`.
pub fn sign(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact division, `None` when `den` does not divide `num`.
pub fn exact_div(num: &Count, den: &Count) -> Option<Count> {
    if den.is_zero() {
        return None;
    }
    let (q, r) = num_integer::Integer::div_rem(num, den);
    r.is_zero().then_some(q)
}

/// Converts a small non-negative count to `usize`.
pub fn to_usize(x: &Count) -> Option<usize> {
    if x.is_negative() {
        None
    } else {
        x.to_usize()
    }
}
