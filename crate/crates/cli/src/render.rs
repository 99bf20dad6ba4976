//! Human-readable reports and Hasse diagrams.

use std::fmt::Write as _;

use xlattice::report::{ClassificationReport, Flag, LabeledWitness};
use xlattice::xclass::x_elements;
use xlattice::{MClosedSet, MultiplicativeLattice};

fn list(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// How the witness refutes the named property of `i`.
fn explain(i: &str, property: &str, set: &str, flag: &Flag) -> String {
    let Some(w) = &flag.witness else {
        return "yes".to_string();
    };
    let why = match (w, property) {
        (LabeledWitness::NotProper, _) => "not proper".to_string(),
        (LabeledWitness::Above { n }, _) => format!("{i} < {n} < top"),
        (LabeledWitness::Pair { a, b }, "prime") => format!("{a}·{b} ≤ {i}, {a} ≰ {i}, {b} ≰ {i}"),
        (LabeledWitness::Pair { a, b }, "primary") => format!("{a}·{b} ≤ {i}, {a} ≰ {i}, {b} ≰ √{i}"),
        (LabeledWitness::Pair { a, b }, _) => format!("{a}·{b} ≤ {i}, {a} ∉ {set}, {b} ≰ {i}"),
    };
    format!("no ({why})")
}

pub fn text_report(r: &ClassificationReport) -> String {
    let mut out = String::new();
    let s = &r.summary;
    writeln!(out, "{}: {} elements {}", r.name, r.elements.len(), list(&r.elements)).unwrap();
    writeln!(out, "Max = {}", list(&s.max)).unwrap();
    writeln!(out, "J = {}", s.jacobson).unwrap();
    writeln!(out, "Min = {}", list(&s.min_primes)).unwrap();
    writeln!(out, "Nil = {}", list(&s.nilpotents)).unwrap();
    writeln!(out, "Z = {}", list(&s.zero_divisors)).unwrap();
    writeln!(out, "√0 = {}", s.nil_radical).unwrap();
    writeln!(
        out,
        "local: {}, domain: {}, reduced: {}",
        yes_no(s.local),
        yes_no(s.domain),
        yes_no(s.reduced)
    )
    .unwrap();
    for set in &r.sets {
        writeln!(out, "set {} = {}", set.name, list(&set.members)).unwrap();
        writeln!(out, "  X-elements: {}", list(&set.x_elements)).unwrap();
    }
    for row in &r.rows {
        let e = &row.element;
        writeln!(out).unwrap();
        writeln!(out, "{e}").unwrap();
        writeln!(out, "  prime: {}", explain(e, "prime", "", &row.prime)).unwrap();
        writeln!(out, "  primary: {}", explain(e, "primary", "", &row.primary)).unwrap();
        writeln!(out, "  maximal: {}", explain(e, "maximal", "", &row.maximal)).unwrap();
        writeln!(out, "  r-element: {}", explain(e, "x", "Z", &row.r)).unwrap();
        writeln!(out, "  n-element: {}", explain(e, "x", "(√0]", &row.n)).unwrap();
        writeln!(out, "  J-element: {}", explain(e, "x", "(J]", &row.j)).unwrap();
        for x in &row.x {
            writeln!(out, "  {}-element: {}", x.set, explain(e, "x", &x.set, &x.flag)).unwrap();
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram, bottom first. Elements that are X-elements for at least one
/// set are filled and carry the set names as an external label.
pub fn dot(name: &str, m: &MultiplicativeLattice, sets: &[(String, MClosedSet)]) -> String {
    let marks: Vec<_> = sets.iter().map(|(n, x)| (n, x_elements(m, x))).collect();
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=ellipse];").unwrap();
    for e in m.elements() {
        let in_sets: Vec<&str> = marks
            .iter()
            .filter(|(_, xs)| xs.contains(e))
            .map(|(n, _)| n.as_str())
            .collect();
        write!(out, "  n{e} [label={}", quote(m.label(e))).unwrap();
        if !in_sets.is_empty() {
            write!(out, ", style=filled, fillcolor=lightblue, xlabel={}", quote(&in_sets.join(","))).unwrap();
        }
        writeln!(out, "];").unwrap();
    }
    for (lo, hi) in m.covers() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
