//! Text formats.
//!
//! A relation file is two header lines followed by one generator per line:
//!
//! ```text
//! dim_x=2
//! dim_y=2
//! 1 0 3 0
//! 0 1 0 0
//! ```
//!
//! Input generators may be dependent and in any order; blank lines and
//! lines starting with `#` are ignored. Output always lists the canonical
//! basis, so equal relations serialize to identical bytes.

use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, Matrix, Rational};
use crate::factor::{yes_no, FactorizationReport};
use crate::harness::SuiteResult;
use crate::relation::LinearRelation;

pub fn write_relation(r: &LinearRelation) -> String {
    let mut out = format!("dim_x={}\ndim_y={}\n", r.dim_x(), r.dim_y());
    for g in r.graph().basis_vectors() {
        let row: Vec<String> = g.iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn header(line_no: usize, line: &str, key: &str) -> Result<usize> {
    let err = |message: String| Error::Parse {
        line: line_no,
        message,
    };
    let (k, v) = line
        .split_once('=')
        .ok_or_else(|| err(format!("expected `{key}=<n>`, found {line:?}")))?;
    if k.trim() != key {
        return Err(err(format!("expected field `{key}`, found `{}`", k.trim())));
    }
    v.trim().parse().map_err(|_| {
        err(format!(
            "field `{key}`: {:?} is not a nonnegative integer",
            v.trim()
        ))
    })
}

pub fn parse_relation(text: &str) -> Result<LinearRelation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let last = text.lines().count().max(1);
    let (n1, l1) = lines.next().ok_or(Error::Parse {
        line: last,
        message: "missing header `dim_x=<n>`".into(),
    })?;
    let dim_x = header(n1, l1, "dim_x")?;
    let (n2, l2) = lines.next().ok_or(Error::Parse {
        line: last,
        message: "missing header `dim_y=<m>`".into(),
    })?;
    let dim_y = header(n2, l2, "dim_y")?;
    let width = dim_x + dim_y;
    let mut gens = Vec::new();
    for (no, line) in lines {
        let entries: Vec<Rational> = line
            .split_whitespace()
            .enumerate()
            .map(|(k, tok)| {
                parse_rational(tok).map_err(|e| Error::Parse {
                    line: no,
                    message: format!("entry {}: {e}", k + 1),
                })
            })
            .collect::<Result<_>>()?;
        if entries.len() != width {
            return Err(Error::Parse {
                line: no,
                message: format!(
                    "generator has {} entries, expected dim_x + dim_y = {width}",
                    entries.len()
                ),
            });
        }
        gens.push(entries);
    }
    let m = Matrix::from_columns(width, &gens)?;
    LinearRelation::from_generators(dim_x, dim_y, &m)
}

#[derive(Serialize, Deserialize)]
struct RelationRecord {
    dim_x: usize,
    dim_y: usize,
    generators: Vec<Vec<String>>,
}

impl Serialize for LinearRelation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RelationRecord {
            dim_x: self.dim_x(),
            dim_y: self.dim_y(),
            generators: self
                .graph()
                .basis_vectors()
                .iter()
                .map(|g| g.iter().map(format_rational).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearRelation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = RelationRecord::deserialize(d)?;
        let width = rec.dim_x + rec.dim_y;
        let mut gens = Vec::with_capacity(rec.generators.len());
        for g in &rec.generators {
            let v = g
                .iter()
                .map(|t| parse_rational(t))
                .collect::<Result<Vec<_>>>()
                .map_err(D::Error::custom)?;
            gens.push(v);
        }
        let m = Matrix::from_columns(width, &gens).map_err(D::Error::custom)?;
        LinearRelation::from_generators(rec.dim_x, rec.dim_y, &m).map_err(D::Error::custom)
    }
}

fn indented(out: &mut String, text: &str) {
    for l in text.lines() {
        let _ = writeln!(out, "  {l}");
    }
}

/// Line-oriented report. Condition and check names are stable keys.
pub fn report_text(r: &FactorizationReport) -> String {
    let mut out = String::new();
    let failed = r.failed_conditions();
    let _ = writeln!(out, "side={}", r.side);
    let _ = writeln!(out, "level={}", r.level);
    let _ = writeln!(out, "solvable={}", yes_no(r.solvable));
    let _ = writeln!(out, "verified={}", yes_no(r.verified));
    let _ = writeln!(
        out,
        "failed={}",
        if failed.is_empty() {
            "none".to_string()
        } else {
            failed.join(",")
        }
    );
    for c in &r.conditions {
        let _ = writeln!(out, "condition {} held={}", c.name, yes_no(c.held));
        let _ = writeln!(out, "  statement: {}", c.statement);
        let _ = writeln!(out, "  evidence: {}", c.evidence);
    }
    for c in &r.checks {
        let _ = writeln!(out, "check {}={}", c.name, yes_no(c.value));
        let _ = writeln!(out, "  detail: {}", c.detail);
    }
    for n in &r.notes {
        let _ = writeln!(out, "note: {n}");
    }
    match &r.witness {
        Some(t) => {
            let _ = writeln!(out, "witness:");
            indented(&mut out, &write_relation(t));
        }
        None => {
            let _ = writeln!(out, "witness=none");
        }
    }
    out
}

pub fn suite_text(s: &SuiteResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "suite={}", s.suite);
    let _ = writeln!(out, "cases={}", s.cases);
    let _ = writeln!(out, "seed={}", s.seed);
    let _ = writeln!(out, "passed={}", s.passed);
    let _ = writeln!(out, "failed={}", s.failed);
    for (k, v) in &s.tallies {
        let _ = writeln!(out, "tally {k}={v}");
    }
    match &s.first_counterexample {
        Some(c) => {
            let _ = writeln!(out, "counterexample:");
            indented(&mut out, c);
        }
        None => {
            let _ = writeln!(out, "counterexample=none");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::solve_right_operator;

    #[test]
    fn canonical_output_and_round_trip() {
        let text = "# a comment\ndim_x=2\n\ndim_y=2\n2 0 6 0\n1 0 3 0\n0 1 0 0\n";
        let r = parse_relation(text).unwrap();
        let out = write_relation(&r);
        assert_eq!(out, "dim_x=2\ndim_y=2\n1 0 3 0\n0 1 0 0\n");
        assert_eq!(parse_relation(&out).unwrap(), r);
        assert_eq!(write_relation(&parse_relation(&out).unwrap()), out);
    }

    #[test]
    fn rationals_and_empty_relation() {
        let r = parse_relation("dim_x=1\ndim_y=1\n2 -1\n").unwrap();
        assert_eq!(write_relation(&r), "dim_x=1\ndim_y=1\n1 -1/2\n");
        let z = parse_relation("dim_x=3\ndim_y=0\n").unwrap();
        assert_eq!(z, LinearRelation::zero(3, 0));
        assert_eq!(write_relation(&z), "dim_x=3\ndim_y=0\n");
    }

    #[test]
    fn errors_name_the_line() {
        let bad = [
            ("", 1, "dim_x"),
            ("dim_y=2\ndim_x=2\n", 1, "dim_x"),
            ("dim_x=1\ndim_y=one\n", 2, "dim_y"),
            (
                "dim_x=1\ndim_y=1\n1 2\n1 2 3\n",
                4,
                "expected dim_x + dim_y = 2",
            ),
            ("dim_x=1\n# c\ndim_y=1\n1 1/0\n", 4, "entry 2"),
        ];
        for (text, line, needle) in bad {
            match parse_relation(text) {
                Err(Error::Parse { line: l, message }) => {
                    assert_eq!(l, line, "{text:?}");
                    assert!(message.contains(needle), "{message}");
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let r = parse_relation("dim_x=2\ndim_y=1\n1 0 1/3\n").unwrap();
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(
            js,
            r#"{"dim_x":2,"dim_y":1,"generators":[["1","0","1/3"]]}"#
        );
        let back: LinearRelation = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<LinearRelation>(
            r#"{"dim_x":1,"dim_y":1,"generators":[["1"]]}"#
        )
        .is_err());
    }

    #[test]
    fn report_lists_conditions_and_witness() {
        let a = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[3, 0], [0, 0]]));
        let b = LinearRelation::graph_of_matrix(&Matrix::from_ints(&[[1, 0], [0, 0]]));
        let text = report_text(&solve_right_operator(&a, &b).unwrap());
        assert!(text
            .starts_with("side=right\nlevel=operator\nsolvable=yes\nverified=yes\nfailed=none\n"));
        assert!(text.contains("condition ran_subset held=yes"));
        assert!(text.contains("condition mul_equal held=yes"));
        assert!(text.contains("witness:\n  dim_x=2\n  dim_y=2\n"));
    }
}
