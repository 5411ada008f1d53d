//! Arbitrary hypergraphs and hypergraphs without intersecting edges.

use num_traits::Zero;

use super::{ClassEntry, ClassId, Family};
use crate::exactmath::{binom, count, lambda, pow2, Count};
use crate::hypercore::ClassSpec;
use crate::transforms::{f0, from_distinct_rows};
use crate::RowConvention;

use RowConvention::OrderedDistinct as C1;

/// Size of the row universe: all subsets, less the empty and/or full one.
fn universe(j: usize, n: usize) -> Count {
    if n == 0 {
        return count(u8::from(j == 0));
    }
    pow2(n) - j.div_ceil(2)
}

/// `alpha_jc(m, n) = lambda_c(2^n - [(j+1)/2], m)`.
pub fn alpha(j: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    lambda(conv, &universe(j, n), m)
}

pub fn alpha_star(j: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    f0(n, |i| alpha(j, conv, m, i))
}

fn alpha_bar_1(i: usize, m: usize, n: usize) -> Count {
    match m {
        0 => Count::zero(),
        1 => count(u8::from(i.is_multiple_of(2))),
        _ => {
            let mut acc = alpha(i, C1, m, n);
            for j in 1..n {
                let term = binom(n as i64, j as i64) * alpha(2 * (i / 2), C1, m, n - j);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Hypergraphs whose edges have empty common intersection.
pub fn alpha_bar(i: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    from_distinct_rows(conv, m, |t| alpha_bar_1(i, t, n))
}

pub fn alpha_bar_star(i: usize, conv: RowConvention, m: usize, n: usize) -> Count {
    f0(n, |t| alpha_bar(i, conv, m, t))
}

pub(crate) fn base_spec(i: usize, conv: RowConvention) -> ClassSpec {
    let mut s = ClassSpec::new(conv);
    if i % 2 == 1 {
        s = s.no_empty();
    }
    if i >= 2 {
        s = s.no_full();
    }
    s
}

pub(super) fn register(out: &mut Vec<ClassEntry>) {
    for conv in RowConvention::ALL {
        for j in 0..4 {
            let spec = base_spec(j, conv);
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::Alpha, j, conv, false),
                    "alpha_jk(m,n) = lambda_k(2^n - [(j+1)/2], m)",
                    "hypergraphs",
                    spec.clone(),
                )
                .formula(move |m, n, _| Ok(alpha(j, conv, m, n))),
            );
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::Alpha, j, conv, true),
                    "alpha*_jk(m,n) = sum_{i=0}^n s(n,i) alpha_jk(m,i)",
                    "T0 hypergraphs",
                    spec.clone().t0(),
                )
                .formula(move |m, n, _| Ok(alpha_star(j, conv, m, n))),
            );
            let bar = spec.no_intersecting();
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::AlphaBar, j, conv, false),
                    "alpha-bar_i1(m,n) = alpha_i1(m,n) + sum_{j=1}^{n-1} (-1)^j C(n,j) alpha_{2[i/2],1}(m,n-j)",
                    "hypergraphs without intersecting edges",
                    bar.clone(),
                )
                .formula(move |m, n, _| Ok(alpha_bar(j, conv, m, n))),
            );
            out.push(
                ClassEntry::new(
                    ClassId::new(Family::AlphaBar, j, conv, true),
                    "alpha-bar*_ij(m,n) = sum_{i=0}^n s(n,i) alpha-bar_ij(m,i)",
                    "T0 hypergraphs without intersecting edges",
                    bar.t0(),
                )
                .formula(move |m, n, _| Ok(alpha_bar_star(j, conv, m, n))),
            );
        }
    }
}
