use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Zero};

use t0enum_core::catalog::{
    alpha, alpha_star, beta, beta_star, mu, mu_star_01_closed, omega, omega_bar_star_0, registry, resolve_class,
    theta, theta_bar, theta_star_partition, ClassId, ErrataStatus, Mode, MuVariant,
};
use t0enum_core::exactmath::{binom, count, falling, pow2, Count};
use t0enum_core::hypercore::{ClassSpec, Uniformity};
use t0enum_core::oracle::{count as oracle_count, verify_grid_cached, OracleBudget, OracleCache, VerifyOptions};
use t0enum_core::{Error, RowConvention, RowConvention::*};

const CORRECTED: Mode = Mode::ErrataCorrected;

fn opts(mode: Mode) -> VerifyOptions {
    VerifyOptions {
        mode,
        ..Default::default()
    }
}

#[test]
fn corrected_catalog_matches_oracle_everywhere() {
    let cache = OracleCache::new();
    let budget = OracleBudget::default();
    let mut checked = 0;
    for entry in registry().entries() {
        let report = verify_grid_cached(&entry.id, 4, 4, None, &budget, &opts(CORRECTED), &cache).unwrap();
        assert!(report.records.is_empty(), "{}: {:?}", entry.id, report.records.first());
        assert!(report.skipped.is_empty(), "{}: {:?}", entry.id, report.skipped.first());
        assert_eq!(report.oracle_only, entry.is_oracle_only(), "{}", entry.id);
        checked += report.checked;
    }
    assert!(checked > 7000);
}

#[test]
fn printed_discrepancies_are_all_explained() {
    let cache = OracleCache::new();
    let budget = OracleBudget::default();
    let mut flagged = BTreeSet::new();
    for entry in registry().entries() {
        let report = verify_grid_cached(&entry.id, 4, 4, None, &budget, &opts(Mode::AsPrinted), &cache).unwrap();
        for r in &report.records {
            assert_ne!(r.status, ErrataStatus::Unresolved, "{} ({},{},{:?})", r.class_id, r.m, r.n, r.k);
            assert!(entry.has_correction(), "{} has no correction", entry.id);
        }
        if !report.records.is_empty() {
            flagged.insert(entry.id.clone());
        }
    }
    for id in ["beta_01_as_printed", "beta_41_as_printed", "beta_bar_11_as_printed", "theta_star_12", "theta_star_32"] {
        assert!(flagged.contains(id), "{id}");
    }
}

#[test]
fn oracle_only_routing() {
    let entry = resolve_class("theta_21").unwrap();
    assert!(entry.is_oracle_only());
    assert!(matches!(entry.evaluate(CORRECTED, 2, 2, Some(1)), Err(Error::OracleOnly(_))));
    let spec = entry.spec(Some(2)).unwrap();
    assert!(spec.require_minimal_cover && spec.uniformity == Uniformity::Exact);
    assert!(matches!(resolve_class("gamma_01"), Err(Error::UnknownClass(_))));
    assert!(matches!(resolve_class("alpha_41"), Err(Error::UnknownClass(_))));
    assert_eq!(resolve_class("alpha_02").unwrap().template(), &ClassSpec::new(Ordered));
    let omega = resolve_class("omega_12").unwrap();
    assert_eq!(omega.template(), &ClassSpec::new(Ordered).no_empty().connected());
    assert_eq!(omega.evaluate(CORRECTED, 2, 2, None).unwrap(), count(5));
}

#[test]
fn reference_values() {
    assert_eq!(alpha(1, OrderedDistinct, 2, 2), count(6));
    assert_eq!(alpha(0, Ordered, 2, 2), count(16));
    assert_eq!(alpha(3, Ordered, 2, 2), count(4));
    assert_eq!(alpha_star(0, Ordered, 2, 2), count(12));
    assert_eq!(alpha_star(0, OrderedDistinct, 2, 2), count(10));
    assert_eq!(beta(0, Ordered, 2, 2), count(9));
    assert_eq!(beta_star(0, Ordered, 2, 2), count(6));
    assert_eq!(beta_star(1, OrderedDistinct, 1, 1), count(1));
    assert_eq!(mu(MuVariant::MuStar01, OrderedDistinct, 2, 3), count(6));
    assert_eq!(mu(MuVariant::Mu01, OrderedDistinct, 2, 3), count(12));
    assert_eq!(theta(0, OrderedDistinct, 2, 3, 2).unwrap(), count(6));
    assert_eq!(theta(1, OrderedDistinct, 2, 3, 2).unwrap(), count(6));
    assert_eq!(theta_bar(0, OrderedDistinct, 2, 2, 2, CORRECTED).unwrap(), count(6));
    assert_eq!(omega(0, Ordered, 1, 1, CORRECTED), count(2));
    assert_eq!(omega(1, Ordered, 4, 2, CORRECTED), count(65));
    assert_eq!(omega(1, Ordered, 3, 2, CORRECTED), count(19));
    for n in 1..=5 {
        assert_eq!(alpha_bar_at(0, n), count(1));
        assert_eq!(alpha_bar_at(1, n), count(0));
        assert_eq!(beta(4, OrderedDistinct, 1, n), count(0));
        assert_eq!(mu(MuVariant::Mu41, OrderedDistinct, 1, n), count(0));
    }
    for m in 1..=5 {
        assert_eq!(omega_bar_star_0(Ordered, m, 1, 1, Mode::AsPrinted), count(1));
    }
    assert_eq!(omega_bar_star_0(Ordered, 1, 1, 1, CORRECTED), count(1));
    for k in 2..=4 {
        assert_eq!(omega_bar_star_0(Ordered, 1, k, k, CORRECTED), count(0));
    }
    let b = OracleBudget::default();
    let uniform_t0 = ClassSpec::new(Ordered).uniform(Uniformity::Exact).with_k(2).t0();
    assert_eq!(theta_star_partition(Ordered, 2, 2, 2, false), oracle_count(&uniform_t0, 2, 2, &b).unwrap());
}

fn alpha_bar_at(i: usize, n: usize) -> Count {
    t0enum_core::catalog::alpha_bar(i, OrderedDistinct, 1, n)
}

#[test]
fn closed_forms_agree_with_pipelines() {
    for m in 1..=4 {
        for n in 1..=6 {
            assert_eq!(beta_star(0, Ordered, m, n), falling(&(pow2(m) - 1), n));
            let expected = mu_star_01_closed(m, n);
            let via_f0 = t0enum_core::transforms::f0(n, |t| mu(MuVariant::Mu01, OrderedDistinct, m, t));
            assert_eq!(via_f0, expected, "({m},{n})");
        }
    }
}

fn cmp(conv: RowConvention, m: usize, n: usize, lo: &str, hi: &str, lo_v: Count, hi_v: Count) {
    assert!(lo_v <= hi_v, "{lo} <= {hi} fails at conv={conv} ({m},{n}): {lo_v} > {hi_v}");
}

#[test]
fn sandwiches() {
    for conv in RowConvention::ALL {
        for m in 1..=4 {
            for n in 1..=4 {
                let w = omega(1, conv, m, n, CORRECTED);
                let b = beta(1, conv, m, n);
                let a = alpha(1, conv, m, n);
                cmp(conv, m, n, "omega_1", "beta_1", w, b.clone());
                cmp(conv, m, n, "beta_1", "alpha_1", b, a);
            }
        }
    }
    for entry in registry().entries() {
        let id = entry.class_id;
        if !id.t0 || id.as_printed {
            continue;
        }
        let plain_id = ClassId::new(id.family, id.index, id.conv, false).to_string();
        let Some(plain) = registry().get(&plain_id) else { continue };
        if !plain.has_formula(CORRECTED) || plain.fixed_k != entry.fixed_k {
            continue;
        }
        let ks: Vec<Option<usize>> = if entry.needs_k() { (1..=3).map(Some).collect() } else { vec![None] };
        for k in ks {
            for m in 1..=4 {
                for n in 1..=4 {
                    let t = entry.evaluate(CORRECTED, m, n, k).unwrap();
                    let p = plain.evaluate(CORRECTED, m, n, k).unwrap();
                    cmp(id.conv, m, n, &entry.id, &plain_id, t, p);
                }
            }
        }
    }
}

#[test]
fn minimal_covers_saturate_in_k() {
    let b = OracleBudget::default();
    for idx in [0, 4] {
        let bar = resolve_class(&format!("mu_bar_{idx}1")).unwrap();
        let variant = if idx == 0 { MuVariant::Mu01 } else { MuVariant::Mu41 };
        for m in 1..=4 {
            for n in 1..=4 {
                for k in n..=n + 1 {
                    let o = oracle_count(&bar.spec(Some(k)).unwrap(), m, n, &b).unwrap();
                    assert_eq!(o, mu(variant, OrderedDistinct, m, n), "mu_bar_{idx}1 ({m},{n},{k})");
                }
            }
        }
    }
}

#[test]
fn containments_between_cover_classes() {
    type Table = fn(RowConvention, usize, usize) -> Count;
    let pairs: [(&str, Table, &str, Table); 10] = [
        ("mu_4", |c, m, n| mu(MuVariant::Mu41, c, m, n), "mu_0", |c, m, n| mu(MuVariant::Mu01, c, m, n)),
        ("mu_0", |c, m, n| mu(MuVariant::Mu01, c, m, n), "beta_3", |c, m, n| beta(3, c, m, n)),
        ("mu_4", |c, m, n| mu(MuVariant::Mu41, c, m, n), "beta_7", |c, m, n| beta(7, c, m, n)),
        ("beta_3", |c, m, n| beta(3, c, m, n), "beta_1", |c, m, n| beta(1, c, m, n)),
        ("beta_3", |c, m, n| beta(3, c, m, n), "beta_2", |c, m, n| beta(2, c, m, n)),
        ("beta_1", |c, m, n| beta(1, c, m, n), "beta_0", |c, m, n| beta(0, c, m, n)),
        ("beta_2", |c, m, n| beta(2, c, m, n), "beta_0", |c, m, n| beta(0, c, m, n)),
        ("beta_4", |c, m, n| beta(4, c, m, n), "beta_0", |c, m, n| beta(0, c, m, n)),
        ("beta_7", |c, m, n| beta(7, c, m, n), "beta_3", |c, m, n| beta(3, c, m, n)),
        ("mu_star_0", |c, m, n| mu(MuVariant::MuStar01, c, m, n), "beta_star_3", |c, m, n| beta_star(3, c, m, n)),
    ];
    for conv in [OrderedDistinct, Ordered] {
        for m in 2..=4 {
            for n in 1..=4 {
                for (lo, f, hi, g) in pairs {
                    cmp(conv, m, n, lo, hi, f(conv, m, n), g(conv, m, n));
                }
            }
        }
    }
}

fn oracle_of(id: &str, m: usize, n: usize, k: usize) -> Count {
    let spec = resolve_class(id).unwrap().spec(Some(k)).unwrap();
    oracle_count(&spec, m, n, &OracleBudget::default()).unwrap()
}

#[test]
fn singular_free_minimal_uniform_sieve() {
    for m in 2..=4 {
        for n in 1..=4 {
            for k in 1..=n {
                let sieve: Count = (0..k)
                    .map(|i| {
                        let t = binom(n as i64, i as i64) * oracle_of("theta_21", m, n - i, k - i);
                        if i % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum();
                assert_eq!(oracle_of("theta_51", m, n, k), sieve, "({m},{n},{k})");
            }
        }
    }
    for n in 1..=4 {
        for k in 1..=n {
            assert_eq!(oracle_of("theta_51", 1, n, k), count(0));
        }
    }
}

#[test]
fn singular_free_minimal_bounded_sieve() {
    for m in 2..=4 {
        for n in 1..=4 {
            for k in 1..=n {
                let sieve: Count = (0..k)
                    .map(|i| {
                        let t = binom(n as i64, i as i64) * oracle_of("theta_bar_21", m, n - i, k - i);
                        if i % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum();
                assert_eq!(oracle_of("theta_bar_51", m, n, k), sieve, "({m},{n},{k})");
            }
        }
    }
}

/// Truncated power series in `y` with rational coefficients.
fn series_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn unordered_generating_function_closed_forms_agree() {
    let order = 6;
    let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
    let ln1p: Vec<BigRational> = (0..=order)
        .map(|i| if i == 0 { BigRational::zero() } else { q(if i % 2 == 1 { 1 } else { -1 }, i as i64) })
        .collect();
    let inv1p: Vec<BigRational> = (0..=order).map(|i| q(if i % 2 == 0 { 1 } else { -1 }, 1)).collect();
    let mut powers = vec![{
        let mut one = vec![BigRational::zero(); order + 1];
        one[0] = BigRational::one();
        one
    }];
    for p in 1..=order {
        let next = series_mul(&powers[p - 1], &ln1p);
        powers.push(next);
    }
    for x_deg in 0..=order {
        let mut inner = vec![BigRational::zero(); order + 1];
        let mut fact = BigRational::one();
        for (p, power) in powers.iter().enumerate() {
            if p > 0 {
                fact *= q(p as i64, 1);
            }
            let scale = BigRational::from_integer(num_traits::pow(pow2(p), x_deg)) / &fact;
            for (c, v) in inner.iter_mut().zip(power) {
                *c += v * &scale;
            }
        }
        let coeffs = series_mul(&inv1p, &inner);
        for (m, c) in coeffs.iter().enumerate() {
            let direct = alpha(1, UnorderedDistinct, m, x_deg);
            let falling_form = falling(&(pow2(x_deg) - 1), m) / t0enum_core::exactmath::factorial(m);
            assert_eq!(c, &BigRational::from_integer(direct.clone()), "y^{m} x^{x_deg}");
            assert_eq!(direct, falling_form);
        }
    }
}
