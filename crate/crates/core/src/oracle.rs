//! Exhaustive ground-truth counts and the formula-vs-oracle grid check.

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::catalog::{self, ErrataRecord, ErrataStatus, Mode};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, Count};
use crate::hypercore::{full_mask, ClassSpec, Checker};
use crate::RowConvention;

pub const BUDGET_ENV: &str = "T0ENUM_BUDGET_CELLS";

/// Enumeration limits, checked before any work starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on `m * n` for ordered enumeration.
    pub max_cells: u64,
    /// Cap on `2^n` for unordered enumeration.
    pub max_universe: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_cells: 20,
            max_universe: 64,
        }
    }
}

impl OracleBudget {
    /// Defaults, with `max_cells` taken from `T0ENUM_BUDGET_CELLS` when set.
    pub fn from_env() -> Result<Self> {
        let mut budget = Self::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            budget.max_cells = v
                .trim()
                .parse()
                .ok()
                .filter(|&c| c > 0)
                .ok_or_else(|| Error::InvalidArgument(format!("{BUDGET_ENV}={v} is not a positive integer")))?;
        }
        Ok(budget)
    }

    fn check(&self, conv: RowConvention, m: usize, n: usize) -> Result<()> {
        if n == 0 || n > 63 {
            return Err(Error::InvalidArgument(format!("vertex count {n} outside 1..=63")));
        }
        if m > 64 {
            return Err(Error::BudgetExceeded {
                dimension: "m",
                value: m as u64,
                limit: 64,
            });
        }
        let cells = (m * n) as u64;
        if conv.is_ordered() {
            let limit = self.max_cells.min(63);
            if cells > limit {
                return Err(Error::BudgetExceeded {
                    dimension: "m*n",
                    value: cells,
                    limit,
                });
            }
        }
        if !conv.is_ordered() || conv == RowConvention::OrderedDistinct {
            let universe = 1u64 << n;
            let limit = if conv.is_ordered() { 1 << 63 } else { self.max_universe };
            if universe > limit {
                return Err(Error::BudgetExceeded {
                    dimension: "2^n",
                    value: universe,
                    limit,
                });
            }
        }
        Ok(())
    }
}

const CHUNK: u64 = 1 << 14;

fn count_all_matrices(checker: &Checker, m: usize, n: usize) -> u64 {
    let total = 1u64 << (m * n);
    let mask = full_mask(n);
    (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut rows = vec![0u64; m];
            let mut hits = 0;
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                for (i, r) in rows.iter_mut().enumerate() {
                    *r = (idx >> (i * n)) & mask;
                }
                hits += u64::from(checker.check(&rows));
            }
            hits
        })
        .sum()
}

/// Row-code sequences: strictly increasing when `strict`, else nondecreasing.
fn count_sequences(checker: &Checker, m: usize, n: usize, strict: bool) -> u64 {
    fn go(checker: &Checker, rows: &mut Vec<u64>, m: usize, lo: u64, hi: u64, strict: bool) -> u64 {
        if rows.len() == m {
            return u64::from(checker.check(rows));
        }
        let mut hits = 0;
        for code in lo..hi {
            rows.push(code);
            hits += go(checker, rows, m, if strict { code + 1 } else { code }, hi, strict);
            rows.pop();
        }
        hits
    }
    let universe = 1u64 << n;
    if m == 0 {
        return u64::from(checker.check(&[]));
    }
    (0..universe)
        .into_par_iter()
        .map(|first| {
            let mut rows = Vec::with_capacity(m);
            rows.push(first);
            go(checker, &mut rows, m, if strict { first + 1 } else { first }, universe, strict)
        })
        .sum()
}

/// Exact number of `(m, n)` matrices of the class under its row convention.
pub fn count(spec: &ClassSpec, m: usize, n: usize, budget: &OracleBudget) -> Result<Count> {
    let conv = spec.row_convention;
    budget.check(conv, m, n)?;
    let checker = spec.checker(n)?;
    Ok(match conv {
        RowConvention::Ordered => Count::from(count_all_matrices(&checker, m, n)),
        RowConvention::OrderedDistinct => Count::from(count_sequences(&checker, m, n, true)) * factorial(m),
        RowConvention::UnorderedDistinct => Count::from(count_sequences(&checker, m, n, true)),
        RowConvention::Multiset => Count::from(count_sequences(&checker, m, n, false)),
    })
}

/// Number of `(m, n)` matrices whose transpose is in the class. Only the
/// ordered conventions have a matrix-level dual.
pub fn count_dual(spec: &ClassSpec, m: usize, n: usize, budget: &OracleBudget) -> Result<Count> {
    let conv = spec.row_convention;
    if !conv.is_ordered() {
        return Err(Error::InvalidArgument("dual counts need an ordered row convention".into()));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("the dual of a matrix without rows has no vertices".into()));
    }
    budget.check(RowConvention::Ordered, m, n)?;
    let checker = spec.checker(m)?;
    let distinct = conv == RowConvention::OrderedDistinct;
    let total = 1u64 << (m * n);
    let mask = full_mask(n);
    let hits: u64 = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut rows = vec![0u64; m];
            let mut cols = vec![0u64; n];
            let mut hits = 0;
            for idx in c * CHUNK..((c + 1) * CHUNK).min(total) {
                for (i, r) in rows.iter_mut().enumerate() {
                    *r = (idx >> (i * n)) & mask;
                }
                for (j, col) in cols.iter_mut().enumerate() {
                    *col = rows.iter().enumerate().fold(0, |a, (i, r)| a | ((r >> j & 1) << i));
                }
                if distinct {
                    let mut sorted = cols.clone();
                    sorted.sort_unstable();
                    if sorted.windows(2).any(|w| w[0] == w[1]) {
                        continue;
                    }
                }
                hits += u64::from(checker.check(&cols));
            }
            hits
        })
        .sum();
    Ok(Count::from(hits))
}

/// Memoizes oracle counts across classes that share a spec.
#[derive(Default)]
pub struct OracleCache {
    cells: Mutex<HashMap<(ClassSpec, usize, usize), Result<Count>>>,
}

impl OracleCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, spec: &ClassSpec, m: usize, n: usize, budget: &OracleBudget) -> Result<Count> {
        let key = (spec.clone(), m, n);
        if let Some(hit) = self.cells.lock().expect("oracle cache poisoned").get(&key) {
            return hit.clone();
        }
        let value = count(spec, m, n, budget);
        self.cells
            .lock()
            .expect("oracle cache poisoned")
            .insert(key, value.clone());
        value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub mode: Mode,
    /// Unordered conventions are checked up to `m_max + unordered_extra_rows`.
    pub unordered_extra_rows: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            mode: Mode::AsPrinted,
            unordered_extra_rows: 1,
        }
    }
}

/// A cell left out of a grid check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkippedCell {
    pub m: usize,
    pub n: usize,
    pub k: Option<usize>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub class_id: String,
    /// No evaluator in the requested mode; nothing was compared.
    pub oracle_only: bool,
    pub checked: usize,
    pub skipped: Vec<SkippedCell>,
    pub records: Vec<ErrataRecord>,
}

impl VerifyReport {
    pub fn verified(&self) -> bool {
        self.records.is_empty()
    }
}

pub const DEFAULT_KS: [usize; 3] = [1, 2, 3];

/// Compares a catalog formula with the oracle on every in-budget cell of
/// `1..=m_max x 1..=n_max` (and `k` in `{1,2,3}` unless given; cells with
/// `k > n` are left out). Budget overruns become skipped cells.
pub fn verify_grid(
    class_id: &str,
    m_max: usize,
    n_max: usize,
    k: Option<usize>,
    budget: &OracleBudget,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    verify_grid_cached(class_id, m_max, n_max, k, budget, opts, &OracleCache::new())
}

pub fn verify_grid_cached(
    class_id: &str,
    m_max: usize,
    n_max: usize,
    k: Option<usize>,
    budget: &OracleBudget,
    opts: &VerifyOptions,
    cache: &OracleCache,
) -> Result<VerifyReport> {
    let entry = catalog::resolve_class(class_id)?;
    let mut report = VerifyReport {
        class_id: entry.id.clone(),
        oracle_only: !entry.has_formula(opts.mode),
        checked: 0,
        skipped: Vec::new(),
        records: Vec::new(),
    };
    if report.oracle_only {
        return Ok(report);
    }
    let ks: Vec<Option<usize>> = match (entry.fixed_k.is_some() || !entry.needs_k(), k) {
        (true, _) => vec![None],
        (false, Some(k)) => vec![Some(k)],
        (false, None) => DEFAULT_KS.iter().map(|&k| Some(k)).collect(),
    };
    let m_top = if entry.conv.is_ordered() {
        m_max
    } else {
        m_max + opts.unordered_extra_rows
    };
    let cells: Vec<(usize, usize, Option<usize>)> = ks
        .iter()
        .flat_map(|&k| (1..=m_top).flat_map(move |m| (1..=n_max).map(move |n| (m, n, k))))
        .filter(|&(_, n, k)| k.is_none_or(|k| k <= n))
        .collect();
    let outcomes: Vec<Result<std::result::Result<Option<ErrataRecord>, SkippedCell>>> = cells
        .par_iter()
        .map(|&(m, n, k)| {
            let spec = entry.spec(k)?;
            let oracle = match cache.count(&spec, m, n, budget) {
                Ok(v) => v,
                Err(e @ Error::BudgetExceeded { .. }) => {
                    return Ok(Err(SkippedCell {
                        m,
                        n,
                        k,
                        reason: e.to_string(),
                    }))
                }
                Err(e) => return Err(e),
            };
            let formula = entry.evaluate(opts.mode, m, n, k)?;
            if formula == oracle {
                return Ok(Ok(None));
            }
            let status = match opts.mode {
                Mode::ErrataCorrected => ErrataStatus::Unresolved,
                Mode::AsPrinted => entry.classify(m, n, k, &oracle)?,
            };
            Ok(Ok(Some(ErrataRecord {
                class_id: entry.id.clone(),
                m,
                n,
                k: entry.fixed_k.or(k),
                formula_value: formula,
                oracle_value: oracle,
                paper_ref_text: entry.citation.clone(),
                status,
            })))
        })
        .collect();
    for outcome in outcomes {
        match outcome? {
            Ok(record) => {
                report.checked += 1;
                report.records.extend(record);
            }
            Err(skip) => report.skipped.push(skip),
        }
    }
    Ok(report)
}
