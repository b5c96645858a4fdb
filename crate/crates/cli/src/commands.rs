//! Subcommand bodies. Each reads graph6 text, writes its report to `out`,
//! diagnostics to `err`, and returns the process exit code.

use std::io::Write;

use abfactor::avoidance::{run_check, CheckKind, CheckOptions, Params, Status};
use abfactor::factor::{check_ab_factor, find_ab_factor, CertificateRecord, FactorCertificate};
use abfactor::graph::{build_extremal, emit_graph6, parse_graph6, Edge, Graph, VertexSet};
use abfactor::toughness::{isolated_toughness, Threshold};
use abfactor::{Error, Limits};
use serde::Serialize;

use crate::campaign::extremal_verdict;

/// Process exit codes. Stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    /// Factor exists, conclusion holds, or nothing to report.
    Yes = 0,
    /// No factor, or the conclusion fails.
    No = 1,
    /// Bad input or parameters.
    Error = 2,
    /// A search budget or enumeration cap ran out before deciding.
    Budget = 3,
}

impl Exit {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn for_error(e: &Error) -> Exit {
        match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded(_) => Exit::Budget,
            _ => Exit::Error,
        }
    }

    /// Combines per-graph results: errors dominate, then caps, then "no".
    fn worst(self, other: Exit) -> Exit {
        let rank = |e: Exit| match e {
            Exit::Yes => 0,
            Exit::No => 1,
            Exit::Budget => 2,
            Exit::Error => 3,
        };
        if rank(other) > rank(self) {
            other
        } else {
            self
        }
    }
}

/// Non-blank lines with their 1-based numbers, parsed as graph6. Parse
/// failures are reported on `err` and skipped.
fn graphs<'a>(
    input: &'a str,
    err: &'a mut dyn Write,
    exit: &'a mut Exit,
) -> impl Iterator<Item = (usize, Graph)> + 'a {
    input.lines().enumerate().filter_map(move |(i, line)| {
        if line.trim().is_empty() {
            return None;
        }
        match parse_graph6(line.trim()) {
            Ok(g) => Some((i + 1, g)),
            Err(e) => {
                let _ = writeln!(err, "line {}: {e}", i + 1);
                *exit = exit.worst(Exit::Error);
                None
            }
        }
    })
}

fn set_text(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

/// One line per graph: `I(G)` as `p/q` and the witness set.
pub fn toughness(input: &str, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<Exit> {
    let mut exit = Exit::Yes;
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for (line, g) in graphs(input, err, &mut exit) {
        match isolated_toughness(&g) {
            Ok(r) => lines.push(format!("{} {}", r.value, set_text(&r.witness))),
            Err(e) => failures.push((line, e)),
        }
    }
    for l in lines {
        writeln!(out, "{l}")?;
    }
    for (line, e) in failures {
        writeln!(err, "line {line}: {e}")?;
        exit = exit.worst(Exit::for_error(&e));
    }
    Ok(exit)
}

/// `[a,b]`-factor verdict per graph as a JSON line. Without `find`, the
/// deficiency criterion decides when `a < b` and the graph is small enough;
/// factor edges are only printed with `find`.
pub fn factor(
    input: &str,
    a: usize,
    b: usize,
    find: bool,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<Exit> {
    if a > b {
        writeln!(err, "need a <= b (got a={a}, b={b})")?;
        return Ok(Exit::Error);
    }
    let mut exit = Exit::Yes;
    let mut results = Vec::new();
    for (line, g) in graphs(input, err, &mut exit) {
        let decided = if !find && a < b && g.order() <= limits.forall_max_n {
            check_ab_factor(&g, a, b, limits)
        } else {
            find_ab_factor(&g, a, b, limits)
        };
        results.push((line, decided));
    }
    for (line, decided) in results {
        match decided {
            Ok(mut cert) => {
                if !find && matches!(cert, FactorCertificate::Factor(_)) {
                    cert = FactorCertificate::Exists;
                }
                exit = exit.worst(if cert.exists() { Exit::Yes } else { Exit::No });
                let rec = CertificateRecord::from(&cert);
                writeln!(out, "{}", serde_json::to_string(&rec)?)?;
            }
            Err(e) => {
                writeln!(err, "line {line}: {e}")?;
                exit = exit.worst(Exit::for_error(&e));
            }
        }
    }
    Ok(exit)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AvoidMode {
    Vertices,
    Edges,
    Matching,
    Edge,
    Pairs,
    Hierarchy,
    Inner,
}

impl AvoidMode {
    pub fn kind(self) -> CheckKind {
        match self {
            AvoidMode::Vertices => CheckKind::VertexDeletion,
            AvoidMode::Edges => CheckKind::EdgeDeletionStar,
            AvoidMode::Matching => CheckKind::MatchingDeletion,
            AvoidMode::Edge => CheckKind::EdgeAvoidance,
            AvoidMode::Pairs => CheckKind::EdgeFromPairs,
            AvoidMode::Hierarchy => CheckKind::DeletionHierarchy,
            AvoidMode::Inner => CheckKind::InnerBound,
        }
    }
}

/// Parses `u-v` or `u,v`.
pub fn parse_edge(s: &str) -> Result<Edge, String> {
    let (u, v) = s
        .split_once(['-', ','])
        .ok_or_else(|| format!("edge {s:?} should look like u-v"))?;
    let u: usize = u.trim().parse().map_err(|_| format!("bad vertex {u:?}"))?;
    let v: usize = v.trim().parse().map_err(|_| format!("bad vertex {v:?}"))?;
    if u == v {
        return Err(format!("edge {s:?} is a loop"));
    }
    Ok(Edge::new(u, v))
}

/// Verdict JSON per graph for the chosen deletion mode.
pub fn avoid(
    input: &str,
    mode: AvoidMode,
    params: &Params,
    opts: &CheckOptions,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<Exit> {
    let mut exit = Exit::Yes;
    let mut results = Vec::new();
    for (line, g) in graphs(input, err, &mut exit) {
        results.push((line, run_check(mode.kind(), &g, params, opts)));
    }
    for (line, r) in results {
        match r {
            Ok(v) => {
                exit = exit.worst(match (v.conclusion, v.status) {
                    (Some(false), _) => Exit::No,
                    (None, Status::Undetermined) => Exit::Budget,
                    _ => Exit::Yes,
                });
                writeln!(out, "{}", serde_json::to_string(&v)?)?;
            }
            Err(e) => {
                writeln!(err, "line {line}: {e}")?;
                exit = exit.worst(Exit::for_error(&e));
            }
        }
    }
    Ok(exit)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ExtremalReport {
    m: usize,
    a: usize,
    b: usize,
    n: usize,
    order: usize,
    graph6: String,
    cut_set: VertexSet,
    ratio: abfactor::Fraction,
    threshold: abfactor::Fraction,
    below_threshold: bool,
    avoided: VertexSet,
    small_clique: VertexSet,
    verdict: abfactor::avoidance::AvoidanceVerdict,
}

/// The extremal graph for `(m,a,b,n)` with its cut ratio, the vertex
/// deletion threshold it undercuts, and the failing deletion.
pub fn extremal(
    m: usize,
    a: usize,
    b: usize,
    n: usize,
    limits: &Limits,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<Exit> {
    let run = || -> Result<ExtremalReport, Error> {
        let w = build_extremal(m, a, b, n)?;
        let ratio = w.cut_ratio()?;
        let threshold = Threshold::VertexDeletion { a, b, n }.value()?;
        let (_, verdict) = extremal_verdict(&w.params, limits)?;
        Ok(ExtremalReport {
            m,
            a,
            b,
            n,
            order: w.graph.order(),
            graph6: emit_graph6(&w.graph)?,
            cut_set: w.cut_set(),
            ratio,
            threshold,
            below_threshold: ratio < threshold,
            avoided: w.avoided_vertices()?,
            small_clique: w.clique_small.clone(),
            verdict,
        })
    };
    match run() {
        Ok(r) => {
            writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
            Ok(Exit::Yes)
        }
        Err(e) => {
            writeln!(err, "{e}")?;
            Ok(Exit::for_error(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_toughness(input: &str) -> (String, String, Exit) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let exit = toughness(input, &mut out, &mut err).unwrap();
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
            exit,
        )
    }

    #[test]
    fn toughness_lines() {
        let (out, err, exit) = run_toughness("D~{\nCl\n");
        assert_eq!(out, "4/1 []\n1/1 [0,2]\n");
        assert!(err.is_empty());
        assert_eq!(exit, Exit::Yes);
        let (out, err, exit) = run_toughness("");
        assert!(out.is_empty() && err.is_empty());
        assert_eq!(exit, Exit::Yes);
    }

    #[test]
    fn toughness_keeps_going_after_bad_lines() {
        let (out, err, exit) = run_toughness("Cl\nC\x01\n\nD~{\n");
        assert_eq!(out, "1/1 [0,2]\n4/1 []\n");
        assert!(err.starts_with("line 2:"), "{err}");
        assert_eq!(exit, Exit::Error);
    }

    fn run_factor(input: &str, a: usize, b: usize, find: bool) -> (String, Exit) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let exit = factor(input, a, b, find, &Limits::default(), &mut out, &mut err).unwrap();
        (String::from_utf8(out).unwrap(), exit)
    }

    #[test]
    fn factor_outputs() {
        let (out, exit) = run_factor("Cl\n", 2, 2, true);
        let rec: CertificateRecord = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(rec.factor_edges.unwrap().len(), 4);
        assert_eq!(exit, Exit::Yes);
        let (out, exit) = run_factor("Ch\n", 2, 3, false);
        assert_eq!(
            out.trim(),
            r#"{"verdict":"not-exists","S":[],"T":[0,3],"delta":-2}"#
        );
        assert_eq!(exit, Exit::No);
        let (_, exit) = run_factor("Ch\n", 3, 2, false);
        assert_eq!(exit, Exit::Error);
    }

    #[test]
    fn factor_budget_has_its_own_code() {
        let limits = Limits {
            search_budget: 1,
            forall_max_n: 2,
            ..Limits::default()
        };
        let (mut out, mut err) = (Vec::new(), Vec::new());
        // Petersen graph: no quick answer with a one-node budget.
        let exit = factor("IheA@GUAo\n", 1, 2, true, &limits, &mut out, &mut err).unwrap();
        assert_eq!(exit, Exit::Budget);
    }

    #[test]
    fn avoid_modes() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let params = Params {
            a: Some(2),
            b: Some(3),
            edge: Some(Edge::new(0, 1)),
            ..Params::default()
        };
        let exit = avoid(
            "Cl\n",
            AvoidMode::Edge,
            &params,
            &CheckOptions::default(),
            &mut out,
            &mut err,
        )
        .unwrap();
        assert_eq!(exit, Exit::No);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["conclusion"], false);
        assert_eq!(
            v["counterexample"]["certificate"]["S"],
            serde_json::json!([])
        );

        let mut out = Vec::new();
        let params = Params {
            a: Some(2),
            b: Some(3),
            n: Some(1),
            ..Params::default()
        };
        let exit = avoid(
            "E~~w\n",
            AvoidMode::Matching,
            &params,
            &CheckOptions::default(),
            &mut out,
            &mut err,
        )
        .unwrap();
        assert_eq!(exit, Exit::Yes);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["status"], "verified");

        let mut out = Vec::new();
        let params = Params {
            m: Some(2),
            n: Some(1),
            ..Params::default()
        };
        let exit = avoid(
            "Cs\n",
            AvoidMode::Edges,
            &params,
            &CheckOptions::default(),
            &mut out,
            &mut err,
        )
        .unwrap();
        assert_eq!(exit, Exit::Yes);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["status"], "vacuous");
    }

    #[test]
    fn edges_parse() {
        assert_eq!(parse_edge("1-0").unwrap(), Edge::new(0, 1));
        assert_eq!(parse_edge("2,5").unwrap(), Edge::new(2, 5));
        assert!(parse_edge("3-3").is_err());
        assert!(parse_edge("3").is_err());
    }

    #[test]
    fn extremal_demo() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let exit = extremal(1, 2, 3, 1, &Limits::default(), &mut out, &mut err).unwrap();
        assert_eq!(exit, Exit::Yes);
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["ratio"], "9/4");
        assert_eq!(v["threshold"], "7/3");
        assert_eq!(v["belowThreshold"], true);
        assert_eq!(v["verdict"]["counterexample"]["certificate"]["delta"], -1);
        assert_eq!(
            v["verdict"]["counterexample"]["certificate"]["S"],
            v["smallClique"]
        );
    }
}
