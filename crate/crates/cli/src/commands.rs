use std::fmt::Write as _;

use serde_json::{json, Value};

use t0enum_core::catalog::{alpha, omega, registry, resolve_class, ClassEntry, ErrataRecord, Mode};
use t0enum_core::exactmath::Count;
use t0enum_core::hypercore::ClassSpec;
use t0enum_core::oracle::{self, verify_grid_cached, OracleBudget, OracleCache, VerifyOptions};
use t0enum_core::transforms::{first_log_mismatch, CountTable, Provenance};
use t0enum_core::{Error, RowConvention};

use crate::args::{BudgetArgs, EgfArgs, Format, ManifestArgs, OracleArgs, Order, SequenceArgs, TableArgs, VerifyArgs};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_UNKNOWN: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

/// Output of a command: what goes to stdout, an optional message for
/// stderr, and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    pub fn fail(code: u8, message: impl Into<String>) -> Self {
        Self {
            stderr: message.into(),
            code,
            ..Self::default()
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownClass(_) | Error::OracleOnly(_) => EXIT_UNKNOWN,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            Error::MissingK(_) | Error::MissingClassK(_) | Error::InvalidArgument(_) | Error::InvalidSpec(_) => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Outcome::fail(code, e.to_string())
    }
}

type Run = Result<Outcome, Outcome>;

fn mode(corrected: bool) -> Mode {
    if corrected {
        Mode::ErrataCorrected
    } else {
        Mode::AsPrinted
    }
}

fn with_formula(id: &str, mode: Mode) -> Result<&'static ClassEntry, Outcome> {
    let entry = resolve_class(id)?;
    if !entry.has_formula(mode) {
        return Err(Outcome::fail(EXIT_UNKNOWN, "oracle-only class; use oracle command"));
    }
    Ok(entry)
}

/// The `k` a class is evaluated at, checked against what the class takes.
fn class_k(entry: &ClassEntry, k: Option<usize>) -> Result<Option<usize>, Outcome> {
    match (entry.fixed_k, entry.needs_k(), k) {
        (Some(fixed), _, Some(k)) if k != fixed => Err(Outcome::fail(
            EXIT_USAGE,
            format!("class {} is defined at k = {fixed} only", entry.id),
        )),
        (Some(fixed), _, _) => Ok(Some(fixed)),
        (None, true, None) => Err(Outcome::fail(EXIT_USAGE, format!("class {} requires --k", entry.id))),
        (None, true, k) => Ok(k),
        (None, false, Some(_)) => Err(Outcome::fail(EXIT_USAGE, format!("class {} takes no k", entry.id))),
        (None, false, None) => Ok(None),
    }
}

fn budget(args: &BudgetArgs) -> Result<OracleBudget, Outcome> {
    let mut b = OracleBudget::from_env()?;
    if let Some(c) = args.max_cells {
        b.max_cells = c;
    }
    if let Some(u) = args.max_universe {
        b.max_universe = u;
    }
    Ok(b)
}

fn k_text(k: Option<usize>) -> String {
    k.map_or_else(String::new, |k| k.to_string())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn table(a: &TableArgs) -> Run {
    let mode = mode(a.errata_corrected);
    let entry = with_formula(&a.class, mode)?;
    let k = class_k(entry, a.k)?;
    let ms: Vec<usize> = a.m.clone().collect();
    let ns: Vec<usize> = a.n.clone().collect();
    let mut grid = Vec::with_capacity(ms.len());
    for &m in &ms {
        let row: Result<Vec<Count>, Error> = ns.iter().map(|&n| entry.evaluate(mode, m, n, k)).collect();
        grid.push(row?);
    }
    let mut out = String::new();
    match a.format {
        Format::Json => {
            let rows: Vec<Vec<String>> = grid.iter().map(|r| r.iter().map(Count::to_string).collect()).collect();
            let doc = json!({
                "class_id": entry.id,
                "citation": entry.citation,
                "k": k,
                "m": ms,
                "n": ns,
                "values": rows,
            });
            out = serde_json::to_string_pretty(&doc).expect("table serializes");
            out.push('\n');
        }
        Format::Tsv | Format::Csv => {
            let (sep, field): (&str, fn(&str) -> String) = match a.format {
                Format::Csv => (",", csv_field),
                _ => ("\t", str::to_string),
            };
            let line = |cells: Vec<String>| cells.join(sep) + "\n";
            out += &line(vec!["class_id".into(), "citation".into(), "k".into()]);
            out += &line(vec![field(&entry.id), field(&entry.citation), k_text(k)]);
            let mut head = vec!["m\\n".to_string()];
            head.extend(ns.iter().map(usize::to_string));
            out += &line(head);
            for (m, row) in ms.iter().zip(&grid) {
                let mut cells = vec![m.to_string()];
                cells.extend(row.iter().map(Count::to_string));
                out += &line(cells);
            }
        }
    }
    Ok(Outcome::ok(out))
}

pub fn oracle(a: &OracleArgs) -> Run {
    let entry = resolve_class(&a.class)?;
    let k = class_k(entry, a.k)?;
    let spec = entry.spec(k)?;
    let value = oracle::count(&spec, a.m, a.n, &budget(&a.budget)?)?;
    Ok(Outcome::ok(format!("{value}\n")))
}

pub fn errata_json(r: &ErrataRecord) -> Value {
    json!({
        "class_id": r.class_id,
        "m": r.m,
        "n": r.n,
        "k": r.k,
        "formula_value": r.formula_value.to_string(),
        "oracle_value": r.oracle_value.to_string(),
        "paper_ref_text": r.paper_ref_text,
        "status": r.status.as_str(),
    })
}

pub fn verify(a: &VerifyArgs) -> Run {
    let entries: Vec<&ClassEntry> = match &a.class {
        Some(id) => vec![resolve_class(id)?],
        None => registry().entries().iter().collect(),
    };
    let budget = budget(&a.budget)?;
    let opts = VerifyOptions {
        mode: mode(a.errata_corrected),
        unordered_extra_rows: a.unordered_extra_rows,
    };
    let cache = OracleCache::new();
    let mut out = String::new();
    let mut records = Vec::new();
    let (mut checked, mut skipped, mut oracle_only) = (0, 0, 0);
    for entry in &entries {
        let report = verify_grid_cached(&entry.id, a.m_max, a.n_max, a.k, &budget, &opts, &cache)?;
        checked += report.checked;
        skipped += report.skipped.len();
        let status = if report.oracle_only {
            oracle_only += 1;
            "oracle-only"
        } else if !report.records.is_empty() {
            "MISMATCH"
        } else if !report.skipped.is_empty() {
            "partial"
        } else {
            "ok"
        };
        let _ = writeln!(
            out,
            "{status}\t{}\tchecked={}\tskipped={}\tmismatches={}",
            report.class_id,
            report.checked,
            report.skipped.len(),
            report.records.len()
        );
        for r in &report.records {
            let k = r.k.map_or_else(String::new, |k| format!(",{k}"));
            let _ = writeln!(
                out,
                "  ({},{}{k}): formula {} != oracle {} [{}]",
                r.m, r.n, r.formula_value, r.oracle_value, r.status
            );
        }
        for s in &report.skipped {
            let _ = writeln!(out, "  ({},{}): skipped, {}", s.m, s.n, s.reason);
        }
        records.extend(report.records);
    }
    let _ = writeln!(
        out,
        "classes={} checked={checked} skipped={skipped} oracle_only={oracle_only} mismatches={}",
        entries.len(),
        records.len()
    );
    if let Some(path) = &a.emit_errata {
        let mut body = String::new();
        for r in &records {
            body += &errata_json(r).to_string();
            body.push('\n');
        }
        std::fs::write(path, body)
            .map_err(|e| Outcome::fail(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    let code = if !records.is_empty() {
        EXIT_MISMATCH
    } else if skipped > 0 {
        EXIT_BUDGET
    } else {
        0
    };
    Ok(Outcome {
        stdout: out,
        stderr: String::new(),
        code,
    })
}

fn antidiagonal(limit: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..)
        .flat_map(|d: usize| (1..d).map(move |m| (m, d - m)))
        .take(limit)
}

pub fn sequence(a: &SequenceArgs) -> Run {
    let mode = mode(a.errata_corrected);
    let entry = with_formula(&a.class, mode)?;
    let k = class_k(entry, a.k)?;
    let cells: Box<dyn Iterator<Item = (usize, usize)>> = match a.order {
        Order::Antidiagonal => Box::new(antidiagonal(a.limit)),
        Order::Row => {
            if a.width == 0 {
                return Err(Outcome::fail(EXIT_USAGE, "--width must be positive"));
            }
            let w = a.width;
            Box::new((1..).flat_map(move |m| (1..=w).map(move |n| (m, n))).take(a.limit))
        }
    };
    let mut out = String::new();
    for (i, (m, n)) in cells.enumerate() {
        let v = entry.evaluate(mode, m, n, k)?;
        let _ = writeln!(out, "{} {v}", i + 1);
    }
    Ok(Outcome::ok(out))
}

pub fn egf_check(a: &EgfArgs) -> Run {
    let (ox, oy) = (a.order_x, a.order_y);
    if ox > a.max_order || oy > a.max_order {
        return Err(Outcome::fail(EXIT_USAGE, format!("orders above the maximum {}", a.max_order)));
    }
    let conv = RowConvention::from_index(a.family.into()).expect("family range is checked by the parser");
    let alphas = CountTable::tabulate(format!("alpha_1{conv}"), None, Provenance::Formula, 0..=oy, 0..=ox, |m, n| {
        Ok(alpha(1, conv, m, n))
    })?;
    let mut omegas = CountTable::tabulate(format!("omega_1{conv}"), None, Provenance::Formula, 0..=oy, 1..=ox, |m, n| {
        Ok(omega(1, conv, m, n, Mode::AsPrinted))
    })?;
    if let Some((m, n)) = a.corrupt {
        let v = omegas
            .get(m, n)
            .cloned()
            .ok_or_else(|| Outcome::fail(EXIT_USAGE, format!("no cell ({m},{n}) to corrupt")))?;
        omegas.insert(m, n, v + 1);
    }
    match first_log_mismatch(&alphas, &omegas, conv, ox, oy)? {
        None => Ok(Outcome::ok(format!(
            "ok: Omega_1{conv} = 1 + ln A_1{conv} through x^{ox} y^{oy}\n"
        ))),
        Some((m, n)) => Ok(Outcome {
            stdout: format!("mismatch at m={m} n={n}: omega_1{conv}({m},{n}) = {}\n", omegas.get(m, n).expect("in range")),
            stderr: String::new(),
            code: EXIT_MISMATCH,
        }),
    }
}

pub fn spec_json(s: &ClassSpec) -> Value {
    json!({
        "row_convention": s.row_convention.index(),
        "forbid_empty_edges": s.forbid_empty_edges,
        "forbid_full_edges": s.forbid_full_edges,
        "require_cover": s.require_cover,
        "forbid_intersecting": s.forbid_intersecting,
        "forbid_singular": s.forbid_singular,
        "require_connected": s.require_connected,
        "require_minimal_cover": s.require_minimal_cover,
        "require_t0": s.require_t0,
        "forbid_twin_vertices": s.forbid_twin_vertices,
        "uniformity": format!("{:?}", s.uniformity),
        "vertex_degree": format!("{:?}", s.vertex_degree),
        "k": s.k,
    })
}

pub fn manifest(a: &ManifestArgs) -> Run {
    let entries = registry().entries();
    let out = match a.format {
        Format::Json => {
            let list: Vec<Value> = entries
                .iter()
                .map(|e| {
                    json!({
                        "class_id": e.id,
                        "citation": e.citation,
                        "description": e.description,
                        "row_convention": e.conv.index(),
                        "t0": e.class_id.t0,
                        "needs_k": e.needs_k(),
                        "fixed_k": e.fixed_k,
                        "oracle_only": e.is_oracle_only(),
                        "errata_kind": e.errata_kind.map(|k| format!("{k:?}")),
                        "correction_note": e.correction_note,
                        "spec": spec_json(e.template()),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&list).expect("manifest serializes") + "\n"
        }
        Format::Tsv | Format::Csv => {
            let (sep, field): (&str, fn(&str) -> String) = match a.format {
                Format::Csv => (",", csv_field),
                _ => ("\t", str::to_string),
            };
            let mut out = ["class_id", "citation", "description", "oracle_only", "spec"].join(sep) + "\n";
            for e in entries {
                let row = [
                    field(&e.id),
                    field(&e.citation),
                    field(&e.description),
                    e.is_oracle_only().to_string(),
                    field(&spec_json(e.template()).to_string()),
                ];
                out += &(row.join(sep) + "\n");
            }
            out
        }
    };
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antidiagonals_start_at_one_one() {
        let cells: Vec<_> = antidiagonal(6).collect();
        assert_eq!(cells, vec![(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)]);
        assert_eq!(antidiagonal(0).count(), 0);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
