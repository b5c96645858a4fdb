//! Randomized and extremal check campaigns.
//!
//! The grid of (check, parameters, seed) cells is expanded in a fixed
//! order. Each cell draws random graphs from its own stream, discards those
//! whose premises fail, and runs the full check on the rest until its quota
//! is met. Cells run in parallel; results are assembled in cell order.

use abfactor::avoidance::{
    quick_premises, run_check, AvoidanceVerdict, CheckKind, CheckOptions, Params, Status,
};
use abfactor::graph::{build_extremal, emit_graph6, generate_with, ExtremalParams, Graph};
use abfactor::{Error, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::CampaignConfig;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub theorem: CheckKind,
    pub params: Params,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Verified,
    Vacuous,
    Counterexample,
    Fails,
    Undetermined,
    Capped,
    Error,
    ExpectedFailure,
}

impl Outcome {
    fn of(status: Status) -> Outcome {
        match status {
            Status::Verified => Outcome::Verified,
            Status::Vacuous => Outcome::Vacuous,
            Status::Counterexample => Outcome::Counterexample,
            Status::Fails => Outcome::Fails,
            Status::Undetermined => Outcome::Undetermined,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceRecord {
    pub index: usize,
    /// Index into `cells`, or `None` for extremal rows.
    pub cell: Option<usize>,
    pub theorem: CheckKind,
    pub graph6: String,
    pub outcome: Outcome,
    pub expected_failure: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<AvoidanceVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Tally {
    pub instances: usize,
    pub verified: usize,
    pub vacuous: usize,
    pub counterexample: usize,
    pub fails: usize,
    pub undetermined: usize,
    pub capped: usize,
    pub error: usize,
    pub expected_failure: usize,
    /// Random graphs discarded because a premise failed. Not instances.
    pub rejected_vacuous: usize,
}

impl Tally {
    fn add(&mut self, o: Outcome) {
        self.instances += 1;
        *match o {
            Outcome::Verified => &mut self.verified,
            Outcome::Vacuous => &mut self.vacuous,
            Outcome::Counterexample => &mut self.counterexample,
            Outcome::Fails => &mut self.fails,
            Outcome::Undetermined => &mut self.undetermined,
            Outcome::Capped => &mut self.capped,
            Outcome::Error => &mut self.error,
            Outcome::ExpectedFailure => &mut self.expected_failure,
        } += 1;
    }

    /// Every instance lands in exactly one bucket.
    pub fn is_consistent(&self) -> bool {
        self.verified
            + self.vacuous
            + self.counterexample
            + self.fails
            + self.undetermined
            + self.capped
            + self.error
            + self.expected_failure
            == self.instances
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CellSummary {
    pub cell: Cell,
    pub attempts: usize,
    pub tally: Tally,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Header {
    pub tool: String,
    pub version: String,
    pub seed_list: Vec<u64>,
    /// Seconds since the Unix epoch. The only field that varies between
    /// otherwise identical runs.
    pub generated_at: u64,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CampaignReport {
    pub header: Header,
    pub config: CampaignConfig,
    pub totals: Tally,
    pub cells: Vec<CellSummary>,
    pub instances: Vec<InstanceRecord>,
}

impl CampaignReport {
    pub fn counterexamples(&self) -> usize {
        self.totals.counterexample
    }

    /// One row per cell plus one per extremal instance.
    pub fn write_csv<W: std::io::Write>(&self, w: W) -> csv::Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            theorem: &'a str,
            params: String,
            seed: String,
            attempts: usize,
            instances: usize,
            verified: usize,
            vacuous: usize,
            counterexample: usize,
            fails: usize,
            undetermined: usize,
            capped: usize,
            error: usize,
            expected_failure: usize,
            rejected_vacuous: usize,
        }
        let mut out = csv::Writer::from_writer(w);
        let row = |theorem: CheckKind, params: &Params, seed: String, attempts, t: &Tally| Row {
            theorem: theorem.tag(),
            params: params_label(params),
            seed,
            attempts,
            instances: t.instances,
            verified: t.verified,
            vacuous: t.vacuous,
            counterexample: t.counterexample,
            fails: t.fails,
            undetermined: t.undetermined,
            capped: t.capped,
            error: t.error,
            expected_failure: t.expected_failure,
            rejected_vacuous: t.rejected_vacuous,
        };
        for c in &self.cells {
            out.serialize(row(
                c.cell.theorem,
                &c.cell.params,
                c.cell.seed.to_string(),
                c.attempts,
                &c.tally,
            ))?;
        }
        for inst in self.instances.iter().filter(|i| i.cell.is_none()) {
            let mut t = Tally::default();
            t.add(inst.outcome);
            let params = inst
                .verdict
                .as_ref()
                .map(|v| v.params.clone())
                .unwrap_or_default();
            out.serialize(row(inst.theorem, &params, "extremal".into(), 1, &t))?;
        }
        out.flush()?;
        Ok(())
    }
}

pub fn params_label(p: &Params) -> String {
    let mut parts = Vec::new();
    for (name, v) in [("a", p.a), ("b", p.b), ("m", p.m), ("n", p.n), ("k", p.k)] {
        if let Some(v) = v {
            parts.push(format!("{name}={v}"));
        }
    }
    if let Some(e) = p.edge {
        parts.push(format!("e={}-{}", e.u, e.v));
    }
    parts.join(" ")
}

/// Expands the parameter grid. Cells whose parameters are out of range for
/// their check (e.g. `k > b`) are skipped.
pub fn cells(cfg: &CampaignConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    let base = Params::default();
    for &theorem in &cfg.theorems {
        let mut grid: Vec<Params> = Vec::new();
        match theorem {
            CheckKind::VertexDeletion
            | CheckKind::MatchingDeletion
            | CheckKind::DeletionHierarchy => {
                for &(a, b) in &cfg.ab {
                    for &n in &cfg.n {
                        grid.push(Params {
                            a: Some(a),
                            b: Some(b),
                            n: Some(n),
                            ..base.clone()
                        });
                    }
                }
            }
            CheckKind::EdgeDeletionStar => {
                for &m in &cfg.m {
                    for &n in &cfg.n {
                        grid.push(Params {
                            m: Some(m),
                            n: Some(n),
                            ..base.clone()
                        });
                    }
                }
            }
            CheckKind::EdgeFromPairs | CheckKind::EdgeAvoidance => {
                for &(a, b) in &cfg.ab {
                    grid.push(Params {
                        a: Some(a),
                        b: Some(b),
                        ..base.clone()
                    });
                }
            }
            CheckKind::InnerBound => {
                for &(a, b) in &cfg.ab {
                    for &n in &cfg.n {
                        let mut ks: Vec<usize> = cfg
                            .k
                            .iter()
                            .map(|k| k.resolve(b))
                            .filter(|&k| k >= 2 && k <= b)
                            .collect();
                        ks.dedup();
                        for k in ks {
                            grid.push(Params {
                                a: Some(a),
                                b: Some(b),
                                n: Some(n),
                                k: Some(k),
                                ..base.clone()
                            });
                        }
                    }
                }
            }
        }
        for params in grid {
            for &seed in &cfg.seed_list {
                out.push(Cell {
                    theorem,
                    params: params.clone(),
                    seed,
                });
            }
        }
    }
    out
}

/// FNV-1a, so a cell's stream depends only on its own description.
fn stream_key(cell: &Cell) -> u64 {
    let text = format!(
        "{}|{}|{}",
        cell.theorem.tag(),
        params_label(&cell.params),
        cell.seed
    );
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

struct Drawn {
    graph: Graph,
    verdict: Result<AvoidanceVerdict, Error>,
}

fn run_cell(cfg: &CampaignConfig, cell: &Cell, limits: &Limits) -> (CellSummary, Vec<Drawn>) {
    let mut rng = ChaCha8Rng::seed_from_u64(stream_key(cell));
    let opts = CheckOptions::with_limits(*limits);
    let mut tally = Tally::default();
    let mut kept = Vec::new();
    let mut attempts = 0;
    while kept.len() < cfg.quota && attempts < cfg.max_attempts {
        attempts += 1;
        let n = rng.random_range(cfg.n_range.0..=cfg.n_range.1);
        let p = cfg.p_list[rng.random_range(0..cfg.p_list.len())];
        let graph = generate_with(n, p, &mut rng).expect("validated probability");
        let mut params = cell.params.clone();
        if cell.theorem == CheckKind::EdgeAvoidance {
            let edges = graph.edges();
            if edges.is_empty() {
                tally.rejected_vacuous += 1;
                continue;
            }
            params.edge = Some(edges[rng.random_range(0..edges.len())]);
        }
        let quick = quick_premises(cell.theorem, &graph, &params, limits);
        if let Ok(ps) = &quick {
            if ps.iter().any(|p| p.holds == Some(false)) {
                tally.rejected_vacuous += 1;
                continue;
            }
        }
        let verdict = quick.and_then(|_| run_check(cell.theorem, &graph, &params, &opts));
        if let Ok(v) = &verdict {
            if v.premises_hold == Some(false) {
                tally.rejected_vacuous += 1;
                continue;
            }
        }
        kept.push(Drawn { graph, verdict });
    }
    (
        CellSummary {
            cell: cell.clone(),
            attempts,
            tally,
        },
        kept,
    )
}

fn record(
    index: usize,
    cell: Option<usize>,
    theorem: CheckKind,
    g: &Graph,
    verdict: Result<AvoidanceVerdict, Error>,
    expected_failure: bool,
) -> InstanceRecord {
    let graph6 = emit_graph6(g).unwrap_or_default();
    match verdict {
        Ok(v) => {
            let mut outcome = Outcome::of(v.status);
            if expected_failure && v.conclusion == Some(false) {
                outcome = Outcome::ExpectedFailure;
            }
            InstanceRecord {
                index,
                cell,
                theorem,
                graph6,
                outcome,
                expected_failure,
                verdict: Some(v),
                error: None,
            }
        }
        Err(e) => {
            let outcome = match e {
                Error::CapExceeded { .. } | Error::BudgetExceeded(_) => Outcome::Capped,
                _ => Outcome::Error,
            };
            InstanceRecord {
                index,
                cell,
                theorem,
                graph6,
                outcome,
                expected_failure,
                verdict: None,
                error: Some(e.to_string()),
            }
        }
    }
}

/// Runs the extremal construction for `e`: every vertex deletion check is
/// restricted to its designated avoided set, with the small clique offered
/// as the violating set.
pub fn extremal_verdict(
    e: &ExtremalParams,
    limits: &Limits,
) -> Result<(Graph, AvoidanceVerdict), Error> {
    let w = build_extremal(e.m, e.a, e.b, e.n)?;
    let opts = CheckOptions {
        limits: *limits,
        vertex_deletions: Some(vec![w.avoided_vertices()?]),
        witness_hints: vec![w.clique_small.clone()],
        ..CheckOptions::default()
    };
    let v = abfactor::avoidance::check_vertex_deletion_all(&w.graph, e.a, e.b, e.n, &opts)?;
    Ok((w.graph, v))
}

pub fn run(cfg: &CampaignConfig) -> CampaignReport {
    let limits = cfg.limits();
    let cells = cells(cfg);
    let results: Vec<(CellSummary, Vec<Drawn>)> = cells
        .par_iter()
        .map(|c| run_cell(cfg, c, &limits))
        .collect();

    let mut summaries = Vec::with_capacity(results.len());
    let mut instances = Vec::new();
    let mut totals = Tally::default();
    for (ci, (mut summary, drawn)) in results.into_iter().enumerate() {
        for d in drawn {
            let rec = record(
                instances.len(),
                Some(ci),
                summary.cell.theorem,
                &d.graph,
                d.verdict,
                false,
            );
            summary.tally.add(rec.outcome);
            totals.add(rec.outcome);
            instances.push(rec);
        }
        totals.rejected_vacuous += summary.tally.rejected_vacuous;
        summaries.push(summary);
    }
    let extremal: Vec<_> = cfg
        .extremal
        .par_iter()
        .map(|e| (e, extremal_verdict(e, &limits)))
        .collect();
    for (e, result) in extremal {
        let rec = match result {
            Ok((g, v)) => record(
                instances.len(),
                None,
                CheckKind::VertexDeletion,
                &g,
                Ok(v),
                true,
            ),
            Err(err) => {
                let g = build_extremal(e.m, e.a, e.b, e.n)
                    .map(|w| w.graph)
                    .unwrap_or_else(|_| Graph::new(0));
                record(
                    instances.len(),
                    None,
                    CheckKind::VertexDeletion,
                    &g,
                    Err(err),
                    true,
                )
            }
        };
        totals.add(rec.outcome);
        instances.push(rec);
    }
    CampaignReport {
        header: Header {
            tool: "abfactor".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed_list: cfg.seed_list.clone(),
            generated_at: std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        },
        config: cfg.clone(),
        totals,
        cells: summaries,
        instances,
    }
}
