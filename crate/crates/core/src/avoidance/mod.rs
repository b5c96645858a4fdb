//! Factor checks under deletion: does every `G - X` still have a factor,
//! for `X` ranging over `n`-vertex sets, `n`-edge sets, `n`-matchings or a
//! single edge? Each check records its sufficient-condition premises,
//! evaluates the conclusion exhaustively, and returns a verdict whose
//! counterexample (if any) re-verifies from scratch.

mod edge;
mod inner;
mod matching;
mod vertex;

use serde::{Deserialize, Serialize};

use crate::factor::{find_ab_factor, FactorCertificate};
use crate::graph::{delete, DeletionSpec, Edge, Graph, VertexSet};
use crate::toughness::{isolated_toughness, Threshold};
use crate::{Error, Limits, Result};

pub use edge::{
    check_edge_avoiding, check_edge_deletion_star, check_edges_from_pairs, rho, Location, RhoCase,
    RhoValue,
};
pub use inner::check_inner_bound;
pub use matching::{check_matching_deletion, enumerate_matchings};
pub use vertex::{check_deletion_hierarchy, check_vertex_deletion_all};

/// Which statement a verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// `δ >= a+n`, `I >= a-1+n+(a-1)/b` ⇒ every `G - V'` has an `[a,b]`-factor.
    VertexDeletion,
    /// `δ >= 1+n`, `I >= 1/(m-n)` ⇒ every `G - E'` has a star factor.
    EdgeDeletionStar,
    /// `δ >= a+n`, `I >= a-1+(a+2n-1)/b` ⇒ every `G - M` has an `[a,b]`-factor.
    MatchingDeletion,
    /// All `n`-deletions have factors ⇒ all `(n-1)`-deletions do.
    DeletionHierarchy,
    /// `δ >= a+2` and all `G - {x,y}` have factors ⇒ every `G - e` does.
    EdgeFromPairs,
    /// `δ >= a+n`, `I >= a-1+(a+kn-1)/b` ⇒ deficiency `>= kn` whenever `T ≠ ∅`.
    InnerBound,
    /// Characterization of `[a,b]`-factors avoiding one edge.
    EdgeAvoidance,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::VertexDeletion,
        CheckKind::EdgeDeletionStar,
        CheckKind::MatchingDeletion,
        CheckKind::DeletionHierarchy,
        CheckKind::EdgeFromPairs,
        CheckKind::InnerBound,
        CheckKind::EdgeAvoidance,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            CheckKind::VertexDeletion => "vertex-deletion",
            CheckKind::EdgeDeletionStar => "edge-deletion-star",
            CheckKind::MatchingDeletion => "matching-deletion",
            CheckKind::DeletionHierarchy => "deletion-hierarchy",
            CheckKind::EdgeFromPairs => "edge-from-pairs",
            CheckKind::InnerBound => "inner-bound",
            CheckKind::EdgeAvoidance => "edge-avoidance",
        }
    }

    /// Implications can have counterexamples; the edge-avoidance
    /// characterization can only fail or hold.
    pub fn is_implication(self) -> bool {
        self != CheckKind::EdgeAvoidance
    }
}

impl std::str::FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check {s:?}")))
    }
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<Edge>,
}

/// One hypothesis. `holds` is `None` when it was not evaluated (too large).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Premise {
    pub name: String,
    pub holds: Option<bool>,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// The conclusion holds.
    Verified,
    /// Some premise fails; the implication is vacuously true.
    Vacuous,
    /// Every premise holds but the conclusion fails.
    Counterexample,
    /// The conclusion fails and no theorem is contradicted (premises
    /// unknown, or the check is a characterization).
    Fails,
    /// The conclusion was not evaluated.
    Undetermined,
}

/// The deletion that breaks the conclusion and why, in host labels. The
/// certificate is about `G - deletion` (or `G` itself when `deletion` is
/// `None`) and its deficiency is below `bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deletion: Option<DeletionSpec>,
    pub certificate: FactorCertificate,
    #[serde(default)]
    pub bound: i64,
}

/// How one of two independent decision routes answered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub name: String,
    /// `None` when the route could not decide within its caps.
    pub holds: Option<bool>,
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AvoidanceVerdict {
    pub theorem: CheckKind,
    pub params: Params,
    pub premises: Vec<Premise>,
    pub premises_hold: Option<bool>,
    pub conclusion: Option<bool>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub routes: Vec<Route>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
}

/// Extra evidence reported alongside a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// The smallest deficiency seen over the sets the check ranges over.
    MinDeficiency {
        #[serde(rename = "S")]
        s: VertexSet,
        delta: i64,
        bound: i64,
    },
    /// The penalty at the set where the edge-avoidance criterion fails.
    Rho {
        #[serde(rename = "S")]
        s: VertexSet,
        rho: RhoValue,
        delta: i64,
    },
}

impl AvoidanceVerdict {
    fn assemble(
        theorem: CheckKind,
        params: Params,
        premises: Vec<Premise>,
        conclusion: Option<bool>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        debug_assert_eq!(conclusion == Some(false), counterexample.is_some());
        let premises_hold = all_hold(&premises);
        let status = match (premises_hold, conclusion) {
            (Some(false), _) => Status::Vacuous,
            (_, None) => Status::Undetermined,
            (_, Some(true)) => Status::Verified,
            (Some(true), Some(false)) if theorem.is_implication() => Status::Counterexample,
            (_, Some(false)) => Status::Fails,
        };
        AvoidanceVerdict {
            theorem,
            params,
            premises,
            premises_hold,
            conclusion,
            status,
            counterexample,
            routes: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    /// Re-derives the counterexample from `g`: applies the deletion and
    /// checks the certificate on the result. Certificates without set-based
    /// evidence are re-decided by search.
    pub fn verify_counterexample(&self, g: &Graph, limits: &Limits) -> Result<bool> {
        let Some(ce) = &self.counterexample else {
            return Ok(self.conclusion != Some(false));
        };
        let (a, b) = match self.theorem {
            CheckKind::EdgeDeletionStar => (1, self.params.m.unwrap_or(1)),
            _ => (self.params.a.unwrap_or(0), self.params.b.unwrap_or(0)),
        };
        let (host, local) = match &ce.deletion {
            Some(spec) => {
                let d = delete(g, spec)?;
                let mut map = vec![usize::MAX; g.order()];
                for (i, &v) in d.original.iter().enumerate() {
                    map[v] = i;
                }
                (d.graph, map)
            }
            None => (g.clone(), (0..g.order()).collect()),
        };
        let Some(cert) = ce.certificate.try_relabel(&local) else {
            return Ok(false);
        };
        match &cert {
            FactorCertificate::Violation(v) => Ok(v.verify_below(&host, a, b, ce.bound)?),
            FactorCertificate::Absent => {
                if self.theorem == CheckKind::EdgeDeletionStar {
                    return Ok(crate::factor::find_star_factor(&host, b, limits)?.is_none());
                }
                Ok(!find_ab_factor(&host, a, b, limits)?.exists())
            }
            other => Ok(!other.exists() && other.verify(&host, a, b)?),
        }
    }
}

fn all_hold(premises: &[Premise]) -> Option<bool> {
    if premises.iter().any(|p| p.holds == Some(false)) {
        Some(false)
    } else if premises.iter().all(|p| p.holds == Some(true)) {
        Some(true)
    } else {
        None
    }
}

/// Caps plus the knobs shared by every check.
#[derive(Debug, Clone, Default)]
pub struct CheckOptions {
    pub limits: Limits,
    /// Evaluate the conclusion even when a premise fails.
    pub evaluate_vacuous: bool,
    /// Restrict vertex-deletion checks to these sets instead of every
    /// `n`-subset.
    pub vertex_deletions: Option<Vec<VertexSet>>,
    /// Sets `S` the deficiency criterion tries before its ordered scan. A
    /// violating hint is reported in place of the first set in scan order.
    pub witness_hints: Vec<VertexSet>,
}

impl CheckOptions {
    pub fn with_limits(limits: Limits) -> Self {
        CheckOptions {
            limits,
            ..CheckOptions::default()
        }
    }
}

pub(crate) fn min_degree_premise(g: &Graph, need: usize) -> Premise {
    let d = g.min_degree();
    Premise {
        name: format!("min-degree >= {need}"),
        holds: Some(d >= need),
        detail: format!("min-degree = {d}"),
    }
}

pub(crate) fn toughness_premise(
    g: &Graph,
    threshold: Threshold,
    limits: &Limits,
) -> Result<Premise> {
    let bound = threshold.value()?;
    let name = format!("isolated-toughness >= {bound}");
    if g.order() > limits.toughness_max_n || g.order() == 0 {
        return Ok(Premise {
            name,
            holds: None,
            detail: format!("not evaluated on {} vertices", g.order()),
        });
    }
    let t = isolated_toughness(g)?;
    Ok(Premise {
        name,
        holds: Some(t.value >= bound),
        detail: format!("isolated-toughness = {} at S = {:?}", t.value, t.witness),
    })
}

/// Every `k`-subset of `0..n` in lexicographic order, refusing more than
/// `cap` of them.
pub(crate) fn k_subsets(n: usize, k: usize, cap: usize) -> Result<Vec<VertexSet>> {
    let count =
        crate::subsets::count_up_to(n, k) - crate::subsets::count_up_to(n, k.saturating_sub(1));
    let count = if k == 0 { 1 } else { count };
    if count > cap as u64 {
        return Err(Error::CapExceeded {
            what: "deletions per instance",
            size: count,
            cap: cap as u64,
        });
    }
    let universe: Vec<usize> = (0..n).collect();
    Ok(crate::subsets::SizeLexSubsets::new(&universe, k)
        .filter(|m| m.count_ones() as usize == k)
        .map(VertexSet::from_mask)
        .collect())
}

fn need(v: Option<usize>, what: &str, kind: CheckKind) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidParameter(format!("{kind} needs parameter {what}")))
}

/// Runs the check named by `kind` with the parameters it uses from
/// `params`.
pub fn run_check(
    kind: CheckKind,
    g: &Graph,
    params: &Params,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    let p = |v, what| need(v, what, kind);
    match kind {
        CheckKind::VertexDeletion => check_vertex_deletion_all(
            g,
            p(params.a, "a")?,
            p(params.b, "b")?,
            p(params.n, "n")?,
            opts,
        ),
        CheckKind::EdgeDeletionStar => {
            check_edge_deletion_star(g, p(params.m, "m")?, p(params.n, "n")?, opts)
        }
        CheckKind::MatchingDeletion => check_matching_deletion(
            g,
            p(params.a, "a")?,
            p(params.b, "b")?,
            p(params.n, "n")?,
            opts,
        ),
        CheckKind::DeletionHierarchy => check_deletion_hierarchy(
            g,
            p(params.a, "a")?,
            p(params.b, "b")?,
            p(params.n, "n")?,
            opts,
        ),
        CheckKind::EdgeFromPairs => {
            check_edges_from_pairs(g, p(params.a, "a")?, p(params.b, "b")?, opts)
        }
        CheckKind::InnerBound => check_inner_bound(
            g,
            p(params.a, "a")?,
            p(params.b, "b")?,
            p(params.n, "n")?,
            p(params.k, "k")?,
            opts,
        ),
        CheckKind::EdgeAvoidance => {
            let e = params
                .edge
                .ok_or_else(|| Error::InvalidParameter(format!("{kind} needs parameter edge")))?;
            check_edge_avoiding(g, e, p(params.a, "a")?, p(params.b, "b")?, opts)
        }
    }
}

/// The inexpensive premises of `kind` (degree and toughness bounds), used
/// to reject instances before running the full check. Premises that need
/// factor searches are left to the check itself.
pub fn quick_premises(
    kind: CheckKind,
    g: &Graph,
    params: &Params,
    limits: &Limits,
) -> Result<Vec<Premise>> {
    let p = |v, what| need(v, what, kind);
    Ok(match kind {
        CheckKind::VertexDeletion => {
            let (a, b, n) = (p(params.a, "a")?, p(params.b, "b")?, p(params.n, "n")?);
            vec![
                min_degree_premise(g, a + n),
                toughness_premise(g, Threshold::VertexDeletion { a, b, n }, limits)?,
            ]
        }
        CheckKind::EdgeDeletionStar => {
            let (m, n) = (p(params.m, "m")?, p(params.n, "n")?);
            if n < 1 || 2 * n > m {
                vec![Premise {
                    name: "1 <= n <= m/2".into(),
                    holds: Some(false),
                    detail: format!("m = {m}, n = {n}"),
                }]
            } else {
                vec![
                    min_degree_premise(g, 1 + n),
                    toughness_premise(g, Threshold::EdgeDeletionStar { m, n }, limits)?,
                ]
            }
        }
        CheckKind::MatchingDeletion => {
            let (a, b, n) = (p(params.a, "a")?, p(params.b, "b")?, p(params.n, "n")?);
            vec![
                min_degree_premise(g, a + n),
                toughness_premise(g, Threshold::MatchingDeletion { a, b, n }, limits)?,
            ]
        }
        CheckKind::DeletionHierarchy => {
            vec![min_degree_premise(g, p(params.a, "a")? + p(params.n, "n")?)]
        }
        CheckKind::EdgeFromPairs => vec![min_degree_premise(g, p(params.a, "a")? + 2)],
        CheckKind::InnerBound => {
            let (a, b, n, k) = (
                p(params.a, "a")?,
                p(params.b, "b")?,
                p(params.n, "n")?,
                p(params.k, "k")?,
            );
            vec![
                min_degree_premise(g, a + n),
                toughness_premise(g, Threshold::InnerBound { a, b, n, k }, limits)?,
            ]
        }
        CheckKind::EdgeAvoidance => Vec::new(),
    })
}
