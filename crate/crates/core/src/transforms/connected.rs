use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{binom, Count};

/// How edge sets of a component and the remainder interleave.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeLabelling {
    /// Edges are labelled: `C(m, i)` ways to pick the component's edges.
    Ordered,
    /// Edges are unlabelled: one way.
    Unordered,
}

impl EdgeLabelling {
    pub fn weight(self, m: usize, i: usize) -> Count {
        match self {
            EdgeLabelling::Ordered => binom(m as i64, i as i64),
            EdgeLabelling::Unordered => Count::one(),
        }
    }
}

/// One cell of the connected-component recurrence,
/// `omega(m,n) = alpha(m,n) - alpha_iso(m,n) - sum_{i,j} nu(m,i) C(n-1,j-1) alpha(m-i,n-j) omega(i,j)`,
/// reading `omega(i,j)` for `1 <= i <= m`, `1 <= j < n` from `memo[i][j]`.
pub fn f1_connected(
    alpha: &dyn Fn(usize, usize) -> Count,
    alpha_iso: &dyn Fn(usize, usize) -> Count,
    labelling: EdgeLabelling,
    m: usize,
    n: usize,
    memo: &[Vec<Option<Count>>],
) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidArgument("the connected recurrence needs n >= 2".into()));
    }
    let mut disconnected = alpha_iso(m, n);
    for i in 1..=m {
        for j in 1..n {
            let w = memo
                .get(i)
                .and_then(|row| row.get(j))
                .and_then(Option::as_ref)
                .ok_or(Error::MissingMemo { m: i, n: j })?;
            if w.is_zero() {
                continue;
            }
            disconnected += labelling.weight(m, i) * binom(n as i64 - 1, j as i64 - 1) * alpha(m - i, n - j) * w;
        }
    }
    Ok(alpha(m, n) - disconnected)
}

/// The full `omega` grid for `0 <= m <= m_max`, `1 <= n <= n_max`, filled in
/// increasing `n`. Column `n = 1` comes from `base_n1`; row `m = 0` is
/// `[n == 1]`.
pub fn connected_table(
    alpha: &dyn Fn(usize, usize) -> Count,
    alpha_iso: &dyn Fn(usize, usize) -> Count,
    base_n1: &dyn Fn(usize) -> Count,
    labelling: EdgeLabelling,
    m_max: usize,
    n_max: usize,
) -> Result<Vec<Vec<Option<Count>>>> {
    let mut memo = vec![vec![None; n_max + 1]; m_max + 1];
    if n_max == 0 {
        return Ok(memo);
    }
    for (m, row) in memo.iter_mut().enumerate() {
        row[1] = Some(if m == 0 { Count::one() } else { base_n1(m) });
    }
    for n in 2..=n_max {
        memo[0][n] = Some(Count::zero());
        for m in 1..=m_max {
            let w = f1_connected(alpha, alpha_iso, labelling, m, n, &memo)?;
            memo[m][n] = Some(w);
        }
    }
    Ok(memo)
}
