//! Covers, covers without singular vertices, and minimal covers.

use num_traits::Zero;

use super::alpha::{alpha, alpha_bar, alpha_star, base_spec};
use super::{ClassEntry, ClassId, ErrataKind, Family};
use crate::error::Result;
use crate::exactmath::{binom, count, factorial, falling, pow2, stirling2, Count};
use crate::hypercore::{ClassSpec, VertexDegree};
use crate::transforms::{cover_shift, f0, from_distinct_rows};
use crate::RowConvention;

use RowConvention::OrderedDistinct as C1;

fn signed(j: usize, v: Count) -> Count {
    if j.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Covers. Indices `0..4` sieve isolated vertices out of `alpha`; once a
/// vertex is isolated a full row on the rest is no longer full, so only the
/// empty-row restriction survives. Indices `4..8` also forbid singular
/// vertices.
pub fn beta(i: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    if i >= 4 {
        return from_distinct_rows(conv, m, |t| beta_no_singular_1(i, t, n));
    }
    (0..=n)
        .map(|j| {
            let idx = if j == 0 { i } else { i & 1 };
            signed(j, binom(n as i64, j as i64) * alpha(idx, conv, m, n - j))
        })
        .sum()
}

fn beta_no_singular_1(i: usize, m: usize, n: usize) -> Count {
    if m <= 1 {
        return Count::zero();
    }
    let mut acc = alpha_bar(i - 4, C1, m, n);
    for j in 1..n {
        acc += signed(j, binom(n as i64, j as i64) * alpha_bar(i % 2, C1, m, n - j));
    }
    acc
}

/// T0 covers: cover shifts for `0, 1`, full-edge removal for `2, 3`, and
/// plain T0 filtration for `4..8`.
pub fn beta_star(j: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    if j >= 4 {
        return f0(n, |t| beta(j, conv, m, t));
    }
    from_distinct_rows(conv, m, |t| beta_star_1(j, t, n))
}

fn beta_star_1(j: usize, m: usize, n: usize) -> Count {
    match j {
        0 | 1 => cover_shift(n, |i| alpha(j, C1, m, i)),
        _ if m == 0 => Count::zero(),
        _ => beta_star_1(j - 2, m, n) - m * alpha_star(j, C1, m - 1, n),
    }
}

/// `[2^m - 1]_n`.
pub fn beta_star_02_closed(m: usize, n: usize) -> Count {
    falling(&(pow2(m) - 1), n)
}

/// The published closed form for distinct-row covers, `(2^m - 1)^n`.
pub fn beta_01_printed(m: usize, n: usize) -> Count {
    num_traits::pow(pow2(m) - 1, n)
}

fn beta_41_sieve(m: usize, n: usize, slots: impl Fn(usize) -> Count) -> Count {
    (0..=n)
        .map(|i| signed(i, binom(n as i64, i as i64) * pow2(i) * falling(&slots(n - i), m)))
        .sum()
}

/// `sum (-1)^i C(n,i) 2^i [n-i]_m` as published.
pub fn beta_41_simple_printed(m: usize, n: usize) -> Count {
    beta_41_sieve(m, n, count)
}

/// `sum (-1)^i C(n,i) 2^i [2^(n-i)]_m`.
pub fn beta_41_simple(m: usize, n: usize) -> Count {
    beta_41_sieve(m, n, pow2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MuVariant {
    Mu01,
    MuStar01,
    Mu41,
    MuStar41,
}

fn mu_01(m: usize, n: usize) -> Count {
    if n < m {
        return Count::zero();
    }
    let free: Count = pow2(m) - m - 1;
    (m..=n)
        .map(|i| binom(n as i64, i as i64) * stirling2(i, m) * factorial(m) * num_traits::pow(free.clone(), n - i))
        .sum()
}

/// `n! C(2^m - m - 1, n - m)`.
pub fn mu_star_01_closed(m: usize, n: usize) -> Count {
    if n < m {
        return Count::zero();
    }
    factorial(n) * crate::exactmath::binom_count(&(pow2(m) - m - 1), n - m)
}

fn mu_41(m: usize, n: usize) -> Count {
    if n < m || m <= 1 {
        return Count::zero();
    }
    (0..n)
        .map(|i| signed(i, binom(n as i64, i as i64) * mu_01(m, n - i)))
        .sum()
}

fn mu_1(v: MuVariant, m: usize, n: usize) -> Count {
    match v {
        MuVariant::Mu01 => mu_01(m, n),
        MuVariant::MuStar01 => mu_star_01_closed(m, n),
        MuVariant::Mu41 => mu_41(m, n),
        MuVariant::MuStar41 => f0(n, |t| mu_41(m, t)),
    }
}

/// Minimal covers. No edge of a minimal cover can repeat, so the ordered
/// conventions agree and the unordered ones divide by `m!`.
pub fn mu(v: MuVariant, conv: RowConvention, m: usize, n: usize) -> Count {
    let ordered = mu_1(v, m, n);
    if conv.is_ordered() {
        ordered
    } else {
        ordered / factorial(m)
    }
}

fn cover_spec(i: usize, conv: RowConvention) -> ClassSpec {
    let s = base_spec(i % 4, conv).cover();
    if i >= 4 {
        s.no_singular()
    } else {
        s
    }
}

fn ok(v: Count) -> Result<Count> {
    Ok(v)
}

pub(super) fn register(out: &mut Vec<ClassEntry>) {
    for conv in RowConvention::ALL {
        for i in 0..8 {
            let citation = if i < 4 {
                "beta_ij(m,n) = sum_{j=0}^n (-1)^j C(n,j) alpha(m,n-j)"
            } else {
                "beta_i1(m,n) = alpha-bar_i1(m,n) + sum_{j=1}^{n-1} (-1)^j C(n,j) alpha-bar_{nu(i),1}(m,n-j)"
            };
            out.push(
                ClassEntry::new(ClassId::new(Family::Beta, i, conv, false), citation, "covers", cover_spec(i, conv))
                    .formula(move |m, n, _| ok(beta(i, conv, m, n))),
            );
            let citation = match i {
                0 | 1 => "beta*_j1(m,n) = sum_{i=1}^{n+1} [2^{i-1} - [j=1]]_m s(n+1,i)",
                2 | 3 => "beta*_j1(m,n) = beta*_{j-2,1}(m,n) - m alpha*_j1(m-1,n)",
                _ => "beta*_ij(m,n) = sum_{i=0}^n s(n,i) beta_ij(m,i)",
            };
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::Beta, i, conv, true),
                    citation,
                    "T0 covers",
                    cover_spec(i, conv).t0(),
                )
                .formula(move |m, n, _| ok(beta_star(i, conv, m, n))),
            );
        }
        let variants = [
            (0, false, MuVariant::Mu01, "mu_01(m,n) = sum_{i=m}^n C(n,i) S(i,m) m! (2^m-m-1)^{n-i}"),
            (0, true, MuVariant::MuStar01, "mu*_01(m,n) = n! C(2^m-m-1, n-m)"),
            (4, false, MuVariant::Mu41, "mu_41(m,n) = sum_{i=0}^{n-1} (-1)^i C(n,i) mu_01(m,n-i)"),
            (4, true, MuVariant::MuStar41, "mu*_41(m,n) = sum_{i=0}^n s(n,i) mu_41(m,i)"),
        ];
        for (idx, t0, v, citation) in variants {
            let mut spec = ClassSpec::new(conv).minimal_cover();
            if idx == 4 {
                spec = spec.no_singular();
            }
            if t0 {
                spec = spec.t0();
            }
            out.push(
                ClassEntry::new(ClassId::new(Family::Mu, idx, conv, t0), citation, "minimal covers", spec)
                    .formula(move |m, n, _| ok(mu(v, conv, m, n))),
            );
        }
    }
    for idx in [0, 4] {
        let mut spec = ClassSpec::new(C1).minimal_cover().degree(VertexDegree::AtMostCover);
        if idx == 4 {
            spec = spec.no_singular();
        }
        out.push(ClassEntry::new(
            ClassId::new(Family::MuBar, idx, C1, false),
            "mu-bar_i1(m,n,k) = mu_i1(m,n) for k >= n",
            "minimal k<=-covers",
            spec,
        ));
    }

    out.push(
        ClassEntry::new(
            ClassId::new(Family::Beta, 0, C1, false).printed(),
            "beta_01(m,n) = (2^m-1)^n",
            "covers, distinct ordered edges",
            cover_spec(0, C1),
        )
        .formula(|m, n, _| ok(beta_01_printed(m, n)))
        .correction(ErrataKind::Typo, "(2^m-1)^n counts ordered covers with repeats; use the isolated-vertex sieve", |m, n, _| {
            ok(beta(0, C1, m, n))
        }),
    );
    out.push(
        ClassEntry::new(
            ClassId::new(Family::Beta, 4, C1, false).printed(),
            "beta_41(m,n) = sum_{i=0}^n (-1)^i C(n,i) 2^i [n-i]_m",
            "covers without singular vertices",
            cover_spec(4, C1),
        )
        .formula(|m, n, _| ok(beta_41_simple_printed(m, n)))
        .correction(ErrataKind::Typo, "falling factorial base is 2^{n-i}, not n-i", |m, n, _| {
            ok(beta_41_simple(m, n))
        }),
    );
    out.push(
        ClassEntry::new(
            ClassId::new(Family::BetaBar, 1, C1, false).printed(),
            "beta-bar_11(m,n,1) = S(n,m)",
            "1-covers without empty edges",
            ClassSpec::new(C1).no_empty().cover().degree(VertexDegree::ExactCover),
        )
        .with_fixed_k(1)
        .formula(|m, n, _| ok(stirling2(n, m)))
        .correction(ErrataKind::Typo, "ordered edges need the factor m!", |m, n, _| {
            ok(factorial(m) * stirling2(n, m))
        }),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_values() {
        assert_eq!(beta(0, RowConvention::Ordered, 2, 2), count(9));
        assert_eq!(beta(4, C1, 1, 5), count(0));
        assert_eq!(beta_star(0, RowConvention::Ordered, 2, 2), count(6));
        assert_eq!(beta_star(1, C1, 1, 1), count(1));
        assert_eq!(mu(MuVariant::MuStar01, C1, 2, 3), count(6));
        assert_eq!(mu(MuVariant::Mu01, C1, 2, 3), count(12));
        assert_eq!(mu(MuVariant::Mu41, C1, 1, 4), count(0));
    }

    #[test]
    fn printed_forms_differ_where_expected() {
        assert_eq!(beta_01_printed(2, 1), count(3));
        assert_eq!(beta(0, C1, 2, 1), count(2));
        assert_eq!(beta_41_simple_printed(2, 2), count(2));
        assert_eq!(beta_41_simple(2, 2), count(4));
        assert_eq!(beta_41_simple(3, 3), beta(4, C1, 3, 3));
    }
}
