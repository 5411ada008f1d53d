//! Connected hypergraphs.

use num_traits::Zero;

use super::alpha::{alpha, base_spec};
use super::beta::beta;
use super::memo::{cached, Tag};
use super::theta::{theta_bar_star, theta_star, theta_star_partition};
use super::{k_of, ClassEntry, ClassId, ErrataKind, Family, Mode};
use crate::exactmath::{binom, count, lambda, pow2, Count};
use crate::hypercore::{ClassSpec, Uniformity};
use crate::transforms::f0;
use crate::RowConvention;

fn c(n: usize, k: usize) -> Count {
    binom(n as i64, k as i64)
}

fn ind(b: bool) -> Count {
    count(u8::from(b))
}

/// Ways to interleave `i` component edges among `m`.
fn nu_hat(ordered: bool, m: usize, i: usize) -> Count {
    if ordered {
        c(m, i)
    } else {
        count(1)
    }
}

fn omega_1(conv: RowConvention, m: usize, n: usize) -> Count {
    cached(Tag::Omega1, conv.index(), m, n, 0, || {
        if m == 0 || n <= 1 {
            return if n == 1 { lambda(conv, &count(1), m) } else { Count::zero() };
        }
        let mut acc = lambda(conv, &(pow2(n) - 1), m);
        for i in 0..=m {
            for j in 1..n {
                let component = if i == 0 { ind(j == 1) } else { omega_1(conv, i, j) };
                if component.is_zero() {
                    continue;
                }
                acc -= nu_hat(conv.is_ordered(), m, i)
                    * c(n - 1, j - 1)
                    * lambda(conv, &(pow2(n - j) - 1), m - i)
                    * component;
            }
        }
        acc
    })
}

fn omega_0_printed(conv: RowConvention, m: usize, n: usize) -> Count {
    match m {
        0 => return ind(n == 1),
        1 => return count(if n == 1 { 2 } else { 1 }),
        _ => {}
    }
    let w = |mm: usize| if mm == 0 { ind(n == 1) } else { omega_1(conv, mm, n) };
    match conv {
        RowConvention::OrderedDistinct => m * w(m - 1) + w(m),
        RowConvention::Ordered => (0..m).map(|i| c(m, i) * w(m - i)).sum(),
        RowConvention::UnorderedDistinct => w(m - 1) + w(m),
        RowConvention::Multiset => (0..m).map(|i| w(m - i)).sum(),
    }
}

fn omega_0(conv: RowConvention, m: usize, n: usize, mode: Mode) -> Count {
    if mode == Mode::ErrataCorrected && n == 1 {
        return alpha(0, conv, m, 1);
    }
    omega_0_printed(conv, m, n)
}

fn omega_no_full(j: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    if m == 0 {
        return ind(n == 1);
    }
    let base = if j == 2 { omega_0(conv, m, n, Mode::ErrataCorrected) } else { omega_1(conv, m, n) };
    let a = |mm: usize| alpha(j, conv, mm, n);
    base - match conv {
        RowConvention::OrderedDistinct => m * a(m - 1),
        RowConvention::Ordered => (1..=m).map(|i| c(m, i) * a(m - i)).sum(),
        RowConvention::UnorderedDistinct => a(m - 1),
        RowConvention::Multiset => (1..=m).map(|i| a(m - i)).sum(),
    }
}

fn omega_no_cap(j: usize, conv: RowConvention, m: usize, n: usize, mode: Mode) -> Count {
    if m == 0 {
        return Count::zero();
    }
    let printed = mode == Mode::AsPrinted;
    let base = omega(j - 4, conv, m, n, Mode::ErrataCorrected);
    let bi = if j <= 5 { 0 } else { 2 };
    let beta_at = |t: usize| {
        if t > 0 {
            beta(bi, conv, m, t)
        } else if printed {
            ind(matches!(conv, RowConvention::Ordered | RowConvention::Multiset))
        } else if bi == 0 {
            lambda(conv, &count(1), m)
        } else {
            Count::zero()
        }
    };
    let tail: Count = (1..=n)
        .map(|i| {
            let term = c(n, i) * beta_at(n - i);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    if printed {
        base - tail
    } else {
        base + tail
    }
}

/// `omega_{i,conv}(m, n)`: connected hypergraphs, `i` indexing the empty/full
/// edge restrictions and, from 4 on, the absence of an all-one column.
pub fn omega(i: usize, conv: RowConvention, m: usize, n: usize, mode: Mode) -> Count {
    if n == 0 {
        return Count::zero();
    }
    match i {
        0 => omega_0(conv, m, n, mode),
        1 => omega_1(conv, m, n),
        2 | 3 => omega_no_full(i, conv, m, n),
        4..=7 => omega_no_cap(i, conv, m, n, mode),
        _ => panic!("omega index {i} out of range"),
    }
}

/// T0 connected hypergraphs. A single vertex is connected whatever the
/// edges, so the corrected filtration takes its `n = 1` term from the cover
/// count rather than the connected one.
pub fn omega_star(i: usize, conv: RowConvention, m: usize, n: usize, mode: Mode) -> Count {
    let fixed = Mode::ErrataCorrected;
    if mode == Mode::AsPrinted {
        return f0(n, |t| omega(i, conv, m, t, fixed));
    }
    if n == 1 {
        return omega(i, conv, m, 1, fixed);
    }
    f0(n, |t| if t == 1 { beta(i, conv, m, 1) } else { omega(i, conv, m, t, fixed) })
}

fn single_vertex(conv: RowConvention, m: usize) -> bool {
    m == 1 || (m > 1 && conv.allows_repeats())
}

/// Connected k-uniform T0 hypergraphs.
pub fn omega_bar_star_0(conv: RowConvention, m: usize, n: usize, k: usize, mode: Mode) -> Count {
    let printed = mode == Mode::AsPrinted;
    cached(Tag::OmegaBarStar0 { printed }, conv.index(), m, n, k as i64, || {
        if m == 0 {
            return ind(n == 1);
        }
        if n == 1 {
            return ind(k == 1 && single_vertex(conv, m));
        }
        let rest = |mm: usize, a: usize| {
            if printed && mm == 0 && a >= 1 {
                count(1)
            } else {
                theta_star_partition(conv, mm, a, k, false)
            }
        };
        let ordered = if printed { k <= 2 } else { conv.is_ordered() };
        let mut acc = rest(m, n) - theta_star(1, conv, m, n - 1, k, Mode::ErrataCorrected);
        for i in 1..=m {
            for j in 1..n {
                let comp = omega_bar_star_0(conv, i, j, k, mode);
                if comp.is_zero() {
                    continue;
                }
                acc -= nu_hat(ordered, m, i) * c(n - 1, j - 1) * rest(m - i, n - j) * comp;
            }
        }
        acc
    })
}

/// Connected k<=-dimensional T0 hypergraphs without empty edges.
pub fn omega_bbar_star_1(conv: RowConvention, m: usize, n: usize, k: usize, mode: Mode) -> Count {
    let printed = mode == Mode::AsPrinted;
    cached(Tag::OmegaBbarStar1 { printed }, conv.index(), m, n, k as i64, || {
        if m == 0 {
            return ind(n == 1);
        }
        if n == 1 {
            return ind(single_vertex(conv, m));
        }
        let rest = |mm: usize, a: usize| {
            if printed {
                theta_bar_star(1, conv, mm, a, k, Mode::ErrataCorrected)
            } else {
                theta_star_partition(conv, mm, a, k, true)
            }
        };
        let ordered = if printed { k <= 2 } else { conv.is_ordered() };
        let mut acc = theta_star_partition(conv, m, n, k, true)
            - theta_bar_star(1, conv, m, n - 1, k, Mode::ErrataCorrected);
        for i in 1..=m {
            for j in 1..n {
                let comp = omega_bbar_star_1(conv, i, j, k, mode);
                if comp.is_zero() {
                    continue;
                }
                acc -= nu_hat(ordered, m, i) * c(n - 1, j - 1) * rest(m - i, n - j) * comp;
            }
        }
        acc
    })
}

const TEXT: [&str; 8] = [
    "omega_0k(m,n) from omega_1k; omega_0k(0,n) = 0, omega_0k(1,n) = 1 for n > 1, omega_0k(0,1) = 1, omega_0k(1,1) = 2",
    "omega_1k(m,n) = lambda_k(2^n-1,m) - sum_{i=0}^m sum_{j=1}^{n-1} nu_k(m,i) C(n-1,j-1) lambda_k(2^{n-j}-1,m-i) omega_1k(i,j)",
    "omega_jk(m,n) = omega_{j-2,k}(m,n) - sum alpha_jk(m-i,n), j = 2",
    "omega_jk(m,n) = omega_{j-2,k}(m,n) - sum alpha_jk(m-i,n), j = 3",
    "omega_jk(m,n) = omega_{j-4,k}(m,n) - sum_{i=1}^n (-1)^i C(n,i) beta_0k(m,n-i), j = 4",
    "omega_jk(m,n) = omega_{j-4,k}(m,n) - sum_{i=1}^n (-1)^i C(n,i) beta_0k(m,n-i), j = 5",
    "omega_jk(m,n) = omega_{j-4,k}(m,n) - sum_{i=1}^n (-1)^i C(n,i) beta_2k(m,n-i), j = 6",
    "omega_jk(m,n) = omega_{j-4,k}(m,n) - sum_{i=1}^n (-1)^i C(n,i) beta_2k(m,n-i), j = 7",
];

fn spec(i: usize, conv: RowConvention) -> ClassSpec {
    let s = base_spec(i % 4, conv).connected();
    if i >= 4 {
        s.no_intersecting()
    } else {
        s
    }
}

pub(super) fn register(out: &mut Vec<ClassEntry>) {
    for conv in RowConvention::ALL {
        for (i, text) in TEXT.iter().copied().enumerate() {
            let mut plain = ClassEntry::new(ClassId::new(Family::Omega, i, conv, false), text, "connected hypergraphs", spec(i, conv))
                .formula(move |m, n, _| Ok(omega(i, conv, m, n, Mode::AsPrinted)));
            if i == 0 {
                plain = plain.correction(
                    ErrataKind::Convention,
                    "a single vertex is connected, so every hypergraph with n = 1 counts",
                    move |m, n, _| Ok(omega(i, conv, m, n, Mode::ErrataCorrected)),
                );
            } else if i >= 4 {
                plain = plain.correction(
                    ErrataKind::Typo,
                    "the sieve term enters with a plus sign and beta(m,0) is lambda(1,m) or 0",
                    move |m, n, _| Ok(omega(i, conv, m, n, Mode::ErrataCorrected)),
                );
            }
            out.push(plain);
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::Omega, i, conv, true),
                    "omega*_jk(m,n) = sum_{i=1}^n s(n,i) omega_jk(m,i)",
                    "T0 connected hypergraphs",
                    spec(i, conv).t0(),
                )
                .formula(move |m, n, _| Ok(omega_star(i, conv, m, n, Mode::AsPrinted)))
                .correction(
                    ErrataKind::Convention,
                    "the one-vertex term of the filtration counts covers, since connectivity is vacuous there",
                    move |m, n, _| Ok(omega_star(i, conv, m, n, Mode::ErrataCorrected)),
                ),
            );
        }
        let uniform = ClassSpec::new(conv).uniform(Uniformity::Exact).connected().t0();
        out.push(
            ClassEntry::new(
                ClassId::new(Family::OmegaBar, 0, conv, true),
                "omega-bar*_0s(m,n,k) = theta*_0s(m,n,k) - theta*_1s(m,n-1,k) - sum nu_k(m,i) C(n-1,j-1) theta*_0s(m-i,n-j,k) omega-bar*_0s(i,j,k)",
                "connected k-uniform T0 hypergraphs",
                uniform,
            )
            .formula(move |m, n, k| Ok(omega_bar_star_0(conv, m, n, k_of(k)?, Mode::AsPrinted)))
            .correction(
                ErrataKind::Typo,
                "edge interleaving follows the row convention s, and theta*_0s(0,a,k) = 0 for a > 1",
                move |m, n, k| Ok(omega_bar_star_0(conv, m, n, k_of(k)?, Mode::ErrataCorrected)),
            ),
        );
        let bounded = ClassSpec::new(conv).uniform(Uniformity::AtMost).no_empty().connected().t0();
        out.push(
            ClassEntry::new(
                ClassId::new(Family::OmegaBbar, 1, conv, true),
                "omega-bbar*_1s(m,n,k) = theta-bar*_0s(m,n,k) - theta-bar*_1s(m,n-1,k) - sum nu_k(m,i) C(n-1,j-1) theta-bar*_1s(m-i,n-j,k) omega-bbar*_0s(i,j,k)",
                "connected k<=-dimensional T0 hypergraphs without empty edges",
                bounded,
            )
            .formula(move |m, n, k| Ok(omega_bbar_star_1(conv, m, n, k_of(k)?, Mode::AsPrinted)))
            .correction(
                ErrataKind::Typo,
                "the remainder is theta-bar*_0s, the component is the class itself, and edge interleaving follows s",
                move |m, n, k| Ok(omega_bbar_star_1(conv, m, n, k_of(k)?, Mode::ErrataCorrected)),
            ),
        );
    }
}
