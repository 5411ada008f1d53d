//! 2-covers through their duals: graphs without 2-components.

use num_traits::Zero;

use super::{ClassEntry, ClassId, Family};
use crate::error::{Error, Result};
use crate::exactmath::{binom, binom_count, exact_div, factorial, falling, count, Count};
use crate::hypercore::{ClassSpec, Uniformity, VertexDegree};
use crate::RowConvention;

use RowConvention::UnorderedDistinct as C3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoCover {
    /// Graphs with `m` edges on `n` vertices and no 2-components.
    ThetaBarCirc03,
    /// The same with loops allowed.
    ThetaBbarCirc03,
    /// [`TwoCover::ThetaBarCirc03`] without isolated vertices.
    ThetaBarCirc13,
    /// [`TwoCover::ThetaBbarCirc03`] without isolated vertices.
    ThetaBbarCirc13,
    /// Unordered T0 2-covers without empty edges.
    BetaBarStar13,
    /// Unordered T0 2<=-covers without empty edges.
    BetaBbarStar13,
}

fn component_sieve(m: usize, n: usize, loops: bool) -> Count {
    let mut acc = Count::zero();
    for k in 0..=m.min(n / 2) {
        let rest = n - 2 * k;
        let slots = binom(rest as i64, 2) + if loops { count(rest) } else { Count::zero() };
        let pairings = falling(&count(n), 2 * k) / (num_traits::pow(count(2), k) * factorial(k));
        let term = pairings * binom_count(&slots, m - k);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn isolated_sieve(m: usize, n: usize, loops: bool) -> Count {
    (0..=n)
        .map(|i| {
            let term = binom(n as i64, i as i64) * component_sieve(m, n - i, loops);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn dual(m: usize, n: usize, loops: bool) -> Result<Count> {
    let num = factorial(n) * isolated_sieve(n, m, loops);
    exact_div(&num, &factorial(m)).ok_or_else(|| Error::NotDivisible {
        value: num.to_string(),
        m,
    })
}

pub fn two_cover(variant: TwoCover, m: usize, n: usize) -> Result<Count> {
    Ok(match variant {
        TwoCover::ThetaBarCirc03 => component_sieve(m, n, false),
        TwoCover::ThetaBbarCirc03 => component_sieve(m, n, true),
        TwoCover::ThetaBarCirc13 => isolated_sieve(m, n, false),
        TwoCover::ThetaBbarCirc13 => isolated_sieve(m, n, true),
        TwoCover::BetaBarStar13 => dual(m, n, false)?,
        TwoCover::BetaBbarStar13 => dual(m, n, true)?,
    })
}

pub(super) fn register(out: &mut Vec<ClassEntry>) {
    let graphs = ClassSpec::new(C3).uniform(Uniformity::Exact).no_twins();
    let with_loops = ClassSpec::new(C3).uniform(Uniformity::AtMost).no_empty().no_twins();
    let sieve = "theta_03(m,n) = sum_{k=0}^{min([n/2],m)} (-1)^k [n]_{2k}/(2^k k!) C(slots(n-2k), m-k)";
    let isolated = "theta_13(m,n) = sum_{i=0}^n (-1)^i C(n,i) theta_03(m,n-i)";
    let entries = [
        (Family::ThetaBarCirc, 0, TwoCover::ThetaBarCirc03, sieve, graphs.clone()),
        (Family::ThetaBbarCirc, 0, TwoCover::ThetaBbarCirc03, sieve, with_loops.clone()),
        (Family::ThetaBarCirc, 1, TwoCover::ThetaBarCirc13, isolated, graphs.cover()),
        (Family::ThetaBbarCirc, 1, TwoCover::ThetaBbarCirc13, isolated, with_loops.cover()),
    ];
    for (family, idx, v, citation, spec) in entries {
        out.push(
            ClassEntry::new(ClassId::new(family, idx, C3, false), citation, "graphs without 2-components", spec)
                .with_fixed_k(2)
                .formula(move |m, n, _| two_cover(v, m, n)),
        );
    }
    let covers = [
        (Family::BetaBar, TwoCover::BetaBarStar13, VertexDegree::ExactCover, "beta-bar*_13(m,n,2) = n!/m! theta-bar_13(n,m)"),
        (Family::BetaBbar, TwoCover::BetaBbarStar13, VertexDegree::AtMostCover, "beta-bbar*_13(m,n,2) = n!/m! theta-bbar_13(n,m)"),
    ];
    for (family, v, degree, citation) in covers {
        let spec = ClassSpec::new(C3).no_empty().cover().t0().degree(degree);
        out.push(
            ClassEntry::new(ClassId::new(family, 1, C3, true), citation, "T0 2-covers", spec)
                .with_fixed_k(2)
                .formula(move |m, n, _| two_cover(v, m, n)),
        );
    }
}
