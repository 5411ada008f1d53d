//! k-uniform and k<=-dimensional families, plain and T0.

use num_traits::Zero;

use super::memo::{cached, Tag};
use super::{k_of, ClassEntry, ClassId, ErrataKind, Family, Mode};
use crate::error::{Error, Result};
use crate::exactmath::{binom, count, falling, lambda, nu, nu_le, Count};
use crate::hypercore::{ClassSpec, Uniformity};
use crate::transforms::{from_distinct_rows, theorem2_uniform, ForbiddenSums, GranularClass};
use crate::RowConvention;

use RowConvention::{Multiset, Ordered, OrderedDistinct as C1};

fn signed(i: usize, v: Count) -> Count {
    if i.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

fn ind(b: bool) -> Count {
    count(u8::from(b))
}

fn c(n: usize, k: usize) -> Count {
    binom(n as i64, k as i64)
}

/// `sum_{i=1}^s C(t, i)`.
fn cbar(t: usize, s: usize) -> Count {
    (1..=s).map(|i| c(t, i)).sum()
}

fn theta_01(m: usize, n: usize, k: usize) -> Count {
    falling(&c(n, k), m)
}

fn theta_11(m: usize, n: usize, k: usize) -> Count {
    if k > n {
        return Count::zero();
    }
    (0..=n - k)
        .map(|i| signed(i, c(n, i) * falling(&c(n - i, k), m)))
        .sum()
}

/// Adds the no-intersection condition to `theta_j1` by sieving full columns.
fn theta_no_cap(j: usize, m: usize, n: usize, k: usize) -> Count {
    if m <= 1 {
        return Count::zero();
    }
    let base = |m, n, k| if j == 0 { theta_01(m, n, k) } else { theta_11(m, n, k) };
    (0..k.min(n + 1))
        .map(|i| signed(i, c(n, i) * base(m, n - i, k - i)))
        .sum()
}

fn theta_bar_01(m: usize, n: usize, k: usize) -> Count {
    falling(&cbar(n, k), m)
}

fn theta_bar_11(m: usize, n: usize, k: usize) -> Count {
    (0..n)
        .map(|i| signed(i, c(n, i) * falling(&cbar(n - i, k), m)))
        .sum()
}

/// Row universes with one extra slot standing for the full row.
fn theta_prime(j: usize, m: usize, n: usize, k: usize, bar: bool) -> Count {
    let slots = |t: usize| if bar { cbar(t, k) } else { c(t, k) };
    if j == 0 {
        return falling(&(slots(n) + 1), m);
    }
    let hi = if bar {
        n
    } else if k > n {
        return Count::zero();
    } else {
        n - k
    };
    (0..=hi)
        .map(|i| signed(i, c(n, i) * falling(&(slots(n - i) + 1), m)))
        .sum()
}

fn theta_bar_no_cap(j: usize, m: usize, n: usize, k: usize, printed: bool) -> Count {
    if m <= 1 {
        return Count::zero();
    }
    let mut acc = if j == 0 { theta_bar_01(m, n, k) } else { theta_bar_11(m, n, k) };
    for i in 1..k.min(n + 1) {
        let prime = |m, n, k| theta_prime(j, m, n, k, !printed);
        acc += signed(i, c(n, i) * prime(m, n - i, k - i));
    }
    acc
}

fn oracle_only(family: &str, idx: usize, conv: RowConvention) -> Error {
    Error::OracleOnly(format!("{family}_{idx}{conv}"))
}

/// `theta_{idx,conv}(m, n, k)`: k-uniform families. Minimal covers
/// (`idx` 2 and 5) have no formula.
pub fn theta(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize) -> Result<Count> {
    Ok(match idx {
        0 => lambda(conv, &c(n, k), m),
        1 => from_distinct_rows(conv, m, |t| theta_11(t, n, k)),
        3 | 4 => from_distinct_rows(conv, m, |t| theta_no_cap(idx - 3, t, n, k)),
        _ => return Err(oracle_only("theta", idx, conv)),
    })
}

/// `theta-bar_{idx,conv}(m, n, k)`: k<=-dimensional families without empty edges.
pub fn theta_bar(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize, mode: Mode) -> Result<Count> {
    let printed = mode == Mode::AsPrinted;
    Ok(match idx {
        0 => lambda(conv, &cbar(n, k), m),
        1 => from_distinct_rows(conv, m, |t| theta_bar_11(t, n, k)),
        3 | 4 => from_distinct_rows(conv, m, |t| theta_bar_no_cap(idx - 3, t, n, k, printed)),
        _ => return Err(oracle_only("theta_bar", idx, conv)),
    })
}

/// T0 counts of k-uniform (`bounded = false`) or k<=-dimensional
/// (`bounded = true`) hypergraphs, summed over partition types.
pub fn theta_star_partition(conv: RowConvention, m: usize, n: usize, k: usize, bounded: bool) -> Count {
    if n == 0 {
        return lambda(conv, &ind(!bounded && k == 0), m);
    }
    theorem2_uniform(n, |t| {
        let slots = if bounded { nu_le(t, k) } else { nu(t, k) };
        lambda(conv, &slots, m)
    })
}

fn ts0(conv: RowConvention, m: usize, n: usize, k: i64) -> Count {
    if k < 0 {
        return Count::zero();
    }
    theta_star_partition(conv, m, n, k as usize, false)
}

fn tbs0(conv: RowConvention, m: usize, n: usize, k: i64) -> Count {
    if k < 0 {
        return Count::zero();
    }
    theta_star_partition(conv, m, n, k as usize, true)
}

/// Placement of the `m` private vertices of a minimal T0 cover.
fn private_slots(conv: RowConvention, m: usize, n: usize) -> Count {
    if conv.is_ordered() {
        falling(&count(n), m)
    } else {
        c(n, m)
    }
}

fn ts1(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaStar1 { printed }, conv.index(), m, n, k, || {
        if k < 0 {
            return Count::zero();
        }
        if n == 0 {
            return lambda(conv, &ind(k == 0), m);
        }
        let prev = if printed { ts1(C1, m, n - 1, k, false) } else { ts1(conv, m, n - 1, k, false) };
        ts0(conv, m, n, k) - n * prev
    })
}

fn ts3(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaStar3 { printed }, conv.index(), m, n, k, || {
        if k < 0 || m == 0 {
            return Count::zero();
        }
        if n == 0 {
            return lambda(conv, &ind(k == 0), m);
        }
        let k_prev = if printed { k } else { k - 1 };
        ts0(conv, m, n, k) - n * ts3(conv, m, n - 1, k_prev, printed)
    })
}

fn ts4(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaStar4 { printed }, conv.index(), m, n, k, || {
        if k < 0 || m == 0 {
            return Count::zero();
        }
        if n == 0 {
            return ts3(conv, m, 0, k, false);
        }
        let prev = if printed { ts1(Multiset, m, n - 1, k, false) } else { ts4(conv, m, n - 1, k, false) };
        ts3(conv, m, n, k, false) - n * prev
    })
}

fn minimal_engine(m: usize, n: usize, weights: impl IntoIterator<Item = usize>, full: bool) -> Count {
    let forbidden = ForbiddenSums {
        zero: true,
        one: true,
        full,
    };
    GranularClass::new(Ordered, weights, forbidden).t0_count(m, n)
}

fn ts_minimal(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize, printed: bool) -> Count {
    let no_cap = idx == 5;
    if m == 0 || n < m || k == 0 || (no_cap && m == 1) {
        return Count::zero();
    }
    let rest = if printed {
        let k = k as i64 - 1;
        if no_cap {
            ts4(Ordered, m, n - m, k, false)
        } else {
            ts1(Ordered, m, n - m, k, false)
        }
    } else {
        minimal_engine(m, n - m, [k - 1], no_cap)
    };
    private_slots(conv, m, n) * rest
}

/// `theta*_{idx,conv}(m, n, k)`.
pub fn theta_star(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize, mode: Mode) -> Count {
    let printed = mode == Mode::AsPrinted;
    let ki = k as i64;
    match idx {
        0 => ts0(conv, m, n, ki),
        1 => ts1(conv, m, n, ki, printed),
        3 => ts3(conv, m, n, ki, printed),
        4 => ts4(conv, m, n, ki, printed),
        2 | 5 => ts_minimal(idx, conv, m, n, k, printed),
        _ => panic!("theta* index {idx} out of range"),
    }
}

fn tbs1(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaBarStar1 { printed }, conv.index(), m, n, k, || {
        if n == 0 {
            return lambda(conv, &Count::zero(), m);
        }
        let prev = if printed { tbs1(C1, m, n - 1, k, false) } else { tbs1(conv, m, n - 1, k, false) };
        tbs0(conv, m, n, k) - n * prev
    })
}

fn tbs3(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaBarStar3 { printed }, conv.index(), m, n, k, || {
        if m == 0 || n == 0 || k < 0 {
            return Count::zero();
        }
        if printed {
            return tbs0(conv, m, n, k) - n * tbs3(conv, m, n - 1, k, true);
        }
        let forbidden = ForbiddenSums {
            full: true,
            ..Default::default()
        };
        GranularClass::new(conv, 1..=k as usize, forbidden).t0_count(m, n)
    })
}

fn tbs4(conv: RowConvention, m: usize, n: usize, k: i64, printed: bool) -> Count {
    cached(Tag::ThetaBarStar4 { printed }, conv.index(), m, n, k, || {
        if m == 0 || n == 0 || k < 0 {
            return Count::zero();
        }
        let prev = if printed { tbs1(Multiset, m, n - 1, k, false) } else { tbs4(conv, m, n - 1, k, false) };
        tbs3(conv, m, n, k, false) - n * prev
    })
}

fn tbs_minimal(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize, printed: bool) -> Count {
    let no_cap = idx == 5;
    if m == 0 || n < m || k == 0 || (no_cap && m == 1) {
        return Count::zero();
    }
    let rest = if printed {
        let k = k as i64 - 1;
        (1..=m)
            .map(|j| {
                let inner = if no_cap {
                    tbs4(Ordered, j, n - m, k, false)
                } else {
                    tbs1(Ordered, j, n - m, k, false)
                };
                c(m, j) * inner
            })
            .sum()
    } else {
        minimal_engine(m, n - m, 0..k, no_cap)
    };
    private_slots(conv, m, n) * rest
}

/// `theta-bar*_{idx,conv}(m, n, k)`.
pub fn theta_bar_star(idx: usize, conv: RowConvention, m: usize, n: usize, k: usize, mode: Mode) -> Count {
    let printed = mode == Mode::AsPrinted;
    let ki = k as i64;
    match idx {
        0 => tbs0(conv, m, n, ki),
        1 => tbs1(conv, m, n, ki, printed),
        3 => tbs3(conv, m, n, ki, printed),
        4 => tbs4(conv, m, n, ki, printed),
        2 | 5 => tbs_minimal(idx, conv, m, n, k, printed),
        _ => panic!("theta-bar* index {idx} out of range"),
    }
}

fn spec(idx: usize, conv: RowConvention, bounded: bool) -> ClassSpec {
    let mut s = if bounded {
        ClassSpec::new(conv).uniform(Uniformity::AtMost).no_empty()
    } else {
        ClassSpec::new(conv).uniform(Uniformity::Exact)
    };
    match idx % 3 {
        1 => s = s.cover(),
        2 => s = s.minimal_cover(),
        _ => {}
    }
    if idx >= 3 {
        s = s.no_intersecting();
    }
    s
}

const THETA_TEXT: [&str; 6] = [
    "theta_01(m,n,k) = [C(n,k)]_m",
    "theta_11(m,n,k) = sum_{i=0}^{n-k} (-1)^i C(n,i) [C(n-i,k)]_m",
    "unsolved",
    "theta_{3+j,1}(m,n,k) = sum_{i=0}^{k-1} (-1)^i C(n,i) theta_j1(m,n-i,k-i), j = 0",
    "theta_{3+j,1}(m,n,k) = sum_{i=0}^{k-1} (-1)^i C(n,i) theta_j1(m,n-i,k-i), j = 1",
    "theta_51(m,n,k) = sum_{i=0}^{k-1} (-1)^i C(n,i) theta_21(m,n-i,k-i)",
];

const THETA_BAR_TEXT: [&str; 6] = [
    "theta-bar_01(m,n,k) = [Cbar(n,k)]_m",
    "theta-bar_11(m,n,k) = sum_{i=0}^{n-1} (-1)^i C(n,i) [Cbar(n-i,k)]_m",
    "unsolved",
    "theta-bar_{3+j,1}(m,n,k) = theta-bar_j1(m,n,k) + sum_{i=1}^{k-1} (-1)^i C(n,i) theta'_j1(m,n-i,k-i), j = 0",
    "theta-bar_{3+j,1}(m,n,k) = theta-bar_j1(m,n,k) + sum_{i=1}^{k-1} (-1)^i C(n,i) theta'_j1(m,n-i,k-i), j = 1",
    "theta-bar_51(m,n,k) = sum_{i=0}^{k-1} (-1)^i C(n,i) theta-bar_21(m,n-i,k-i)",
];

const STAR_TEXT: [&str; 6] = [
    "theta*_0i(m,n,k) = sum_alpha (-1)^{n-|alpha|} c(alpha) lambda_i(nu(alpha,k), m)",
    "delta*_ij(m,n+1,k) = delta*_{i-1,j}(m,n+1,k) - (n+1) delta*_1i(m,n,k), i = 1",
    "theta*_i1(m,n,k) = [n]_m theta*_{i-1,2}(m,n-m,k-1), i = 2",
    "delta*_3i(m,n+1,k) = delta*_0i(m,n+1,k) - (n+1) delta*_3i(m,n,k)",
    "delta*_ij(m,n+1,k) = delta*_{i-1,j}(m,n+1,k) - (n+1) delta*_1i(m,n,k), i = 4",
    "theta*_i1(m,n,k) = [n]_m theta*_{i-1,2}(m,n-m,k-1), i = 5",
];

const BAR_STAR_TEXT: [&str; 6] = [
    "theta-bar*_0i(m,n,k) = sum_alpha (-1)^{n-|alpha|} c(alpha) lambda_i(nu_le(alpha,k), m)",
    "delta*_ij(m,n+1,k) = delta*_{i-1,j}(m,n+1,k) - (n+1) delta*_1i(m,n,k), i = 1",
    "theta-bar*_i1(m,n,k) = [n]_m sum_{j=1}^m C(m,j) theta-bar*_{i-1,2}(j,n-m,k-1), i = 2",
    "delta*_3i(m,n+1,k) = delta*_0i(m,n+1,k) - (n+1) delta*_3i(m,n,k)",
    "delta*_ij(m,n+1,k) = delta*_{i-1,j}(m,n+1,k) - (n+1) delta*_1i(m,n,k), i = 4",
    "theta-bar*_i1(m,n,k) = [n]_m sum_{j=1}^m C(m,j) theta-bar*_{i-1,2}(j,n-m,k-1), i = 5",
];

fn star_note(idx: usize, bar: bool) -> &'static str {
    match (idx, bar) {
        (1 | 4, _) => "the isolated-vertex term uses the same class, not delta*_1i",
        (3, false) => "deleting the full column lowers k by one",
        (3, true) => "no column recurrence holds; counted by the partition-type sieve with full columns pinned",
        (2 | 5, false) => "the remainder is a T0 matrix with row sums k-1 and no column sum 0 or 1, not a cover count",
        _ => "the remainder is a T0 matrix with row sums below k and no column sum 0 or 1, not a cover sum",
    }
}

pub(super) fn register(out: &mut Vec<ClassEntry>) {
    for conv in RowConvention::ALL {
        for idx in 0..6 {
            let mut plain = ClassEntry::new(
                ClassId::new(Family::Theta, idx, conv, false),
                THETA_TEXT[idx],
                "k-uniform hypergraphs",
                spec(idx, conv, false),
            );
            if !matches!(idx, 2 | 5) {
                plain = plain.formula(move |m, n, k| theta(idx, conv, m, n, k_of(k)?));
            }
            out.push(plain);

            let mut bar = ClassEntry::new(
                ClassId::new(Family::ThetaBar, idx, conv, false),
                THETA_BAR_TEXT[idx],
                "k<=-dimensional hypergraphs without empty edges",
                spec(idx, conv, true),
            );
            if !matches!(idx, 2 | 5) {
                bar = bar.formula(move |m, n, k| theta_bar(idx, conv, m, n, k_of(k)?, Mode::AsPrinted));
            }
            if matches!(idx, 3 | 4) {
                bar = bar.correction(
                    ErrataKind::Typo,
                    "theta' must use Cbar(n,k) and sum to n",
                    move |m, n, k| theta_bar(idx, conv, m, n, k_of(k)?, Mode::ErrataCorrected),
                );
            }
            out.push(bar);

            let mut star = ClassEntry::new(
                ClassId::new(Family::Theta, idx, conv, true),
                STAR_TEXT[idx],
                "T0 k-uniform hypergraphs",
                spec(idx, conv, false).t0(),
            )
            .formula(move |m, n, k| Ok(theta_star(idx, conv, m, n, k_of(k)?, Mode::AsPrinted)));
            if idx != 0 {
                star = star.correction(ErrataKind::Typo, star_note(idx, false), move |m, n, k| {
                    Ok(theta_star(idx, conv, m, n, k_of(k)?, Mode::ErrataCorrected))
                });
            }
            out.push(star);

            let mut bar_star = ClassEntry::new(
                ClassId::new(Family::ThetaBar, idx, conv, true),
                BAR_STAR_TEXT[idx],
                "T0 k<=-dimensional hypergraphs without empty edges",
                spec(idx, conv, true).t0(),
            )
            .formula(move |m, n, k| Ok(theta_bar_star(idx, conv, m, n, k_of(k)?, Mode::AsPrinted)));
            if idx != 0 {
                bar_star = bar_star.correction(ErrataKind::Typo, star_note(idx, true), move |m, n, k| {
                    Ok(theta_bar_star(idx, conv, m, n, k_of(k)?, Mode::ErrataCorrected))
                });
            }
            out.push(bar_star);
        }
    }
}
