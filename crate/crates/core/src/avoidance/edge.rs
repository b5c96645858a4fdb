use serde::{Deserialize, Serialize};

use super::vertex::{decide, first_failing_deletion, require_ab};
use super::{
    min_degree_premise, toughness_premise, AvoidanceVerdict, CheckKind, CheckOptions,
    Counterexample, Params, Premise, Route, Witness,
};
use crate::factor::{
    check_star_factor, delta_mask, find_star_factor, low_set, FactorCertificate, Violation,
};
use crate::graph::{DeletionSpec, Edge, Graph, VertexSet};
use crate::subsets::SizeLexSubsets;
use crate::toughness::Threshold;
use crate::{Error, Limits, Result};

/// Where an endpoint of the avoided edge sits relative to `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Location {
    #[serde(rename = "S")]
    S,
    /// Low-degree vertices of `G - e - S`.
    #[serde(rename = "T'")]
    T,
    /// Everything else.
    #[serde(rename = "W'")]
    W,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RhoCase {
    BothLow,
    OneLow,
    Neither,
}

/// Penalty `ρ(S)` for avoiding `e = uv`: 2 if both ends are low in
/// `G - e - S`, 1 if one is low and the other is outside `S`, 0 otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RhoValue {
    pub value: i64,
    pub case: RhoCase,
    pub u_location: Location,
    pub v_location: Location,
}

fn rho_from(u: Location, v: Location) -> RhoValue {
    let (value, case) = match (u, v) {
        (Location::T, Location::T) => (2, RhoCase::BothLow),
        (Location::T, Location::W) | (Location::W, Location::T) => (1, RhoCase::OneLow),
        _ => (0, RhoCase::Neither),
    };
    RhoValue {
        value,
        case,
        u_location: u,
        v_location: v,
    }
}

/// `ρ(S)` for the edge `e` of `g`.
pub fn rho(g: &Graph, e: Edge, s: &VertexSet, a: usize) -> Result<RhoValue> {
    let h = g.without_edge(e)?;
    let t = low_set(&h, s, a)?;
    let loc = |x: usize| {
        if s.contains(x) {
            Location::S
        } else if t.contains(x) {
            Location::T
        } else {
            Location::W
        }
    };
    Ok(rho_from(loc(e.u), loc(e.v)))
}

fn rho_mask(h: &Graph, e: Edge, s: u64, a: usize) -> RhoValue {
    let alive = h.full_mask() & !s;
    let loc = |x: usize| {
        if s >> x & 1 == 1 {
            Location::S
        } else if ((h.adj_mask(x) & alive).count_ones() as usize) < a {
            Location::T
        } else {
            Location::W
        }
    };
    rho_from(loc(e.u), loc(e.v))
}

/// `G - e` has an `[a,b]`-factor iff `δ_G(a,b;S) >= ρ(S)` for every `S`.
/// Decided by that criterion and by factor search on `G - e`; the two must
/// agree. A failure yields the set `S` with its `T'` and `δ_{G-e}(S)`.
pub fn check_edge_avoiding(
    g: &Graph,
    e: Edge,
    a: usize,
    b: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    require_ab(a, b)?;
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge(e.u, e.v));
    }
    let limits = &opts.limits;
    let h = g.without_edge(e)?;
    let mut witness = None;
    let criterion = if g.order() <= limits.forall_max_n {
        let mut holds = Some(true);
        for s in SizeLexSubsets::all(g.order()) {
            let d = delta_mask(g, s, a, b);
            let r = rho_mask(&h, e, s, a);
            if d < r.value {
                let after = delta_mask(&h, s, a, b);
                if after != d - r.value {
                    return Err(Error::RouteDisagreement(format!(
                        "deficiency after deleting the edge is {after}, expected {}",
                        d - r.value
                    )));
                }
                let set = VertexSet::from_mask(s);
                witness = Some((set.clone(), r, d, after));
                holds = Some(false);
                break;
            }
        }
        holds
    } else {
        None
    };
    let direct = decide(&h, a, b, limits)?;
    let found = direct.as_ref().map(|c| c.exists());
    if let (Some(c), Some(d)) = (criterion, found) {
        if c != d {
            return Err(Error::RouteDisagreement(format!(
                "avoiding {e:?}: criterion says {c}, search says {d}"
            )));
        }
    }
    let conclusion = criterion.or(found);
    let counterexample = match (conclusion, &witness) {
        (Some(false), Some((s, _, _, after))) => Some(Counterexample {
            deletion: Some(DeletionSpec::Edge(e)),
            certificate: FactorCertificate::Violation(Violation {
                s: s.clone(),
                t: low_set(&h, s, a)?,
                delta: *after,
            }),
            bound: 0,
        }),
        (Some(false), None) => Some(Counterexample {
            deletion: Some(DeletionSpec::Edge(e)),
            certificate: direct.clone().unwrap_or(FactorCertificate::Absent),
            bound: 0,
        }),
        _ => None,
    };
    let mut verdict = AvoidanceVerdict::assemble(
        CheckKind::EdgeAvoidance,
        Params {
            a: Some(a),
            b: Some(b),
            edge: Some(e),
            ..Params::default()
        },
        Vec::new(),
        conclusion,
        counterexample,
    );
    let count = |r: Option<bool>| usize::from(r.is_some());
    verdict.routes = vec![
        Route {
            name: "penalized-criterion".into(),
            holds: criterion,
            instances: count(criterion),
        },
        Route {
            name: "factor-search".into(),
            holds: found,
            instances: count(found),
        },
    ];
    if let Some((s, r, d, _)) = witness {
        verdict.witnesses.push(Witness::Rho {
            s,
            rho: r,
            delta: d,
        });
    }
    Ok(verdict)
}

/// Every `n`-edge subset to delete, lexicographic by edge index.
fn edge_subsets(g: &Graph, n: usize, limits: &Limits) -> Result<Vec<Vec<Edge>>> {
    let edges = g.edges();
    if n > edges.len() {
        return Ok(Vec::new());
    }
    if edges.len() > 64 {
        return Err(Error::CapExceeded {
            what: "edges for subset enumeration",
            size: edges.len() as u64,
            cap: 64,
        });
    }
    Ok(super::k_subsets(edges.len(), n, limits.max_deletions)?
        .into_iter()
        .map(|idx| idx.iter().map(|i| edges[i]).collect())
        .collect())
}

/// If `1 <= n <= m/2`, `δ(G) >= 1+n` and `I(G) >= 1/(m-n)`, then every
/// `G - E'` with `|E'| = n` has a `{K_{1,1},...,K_{1,m}}`-factor.
pub fn check_edge_deletion_star(
    g: &Graph,
    m: usize,
    n: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "star size m must be at least 1".into(),
        ));
    }
    let limits = &opts.limits;
    let gate = 1 <= n && 2 * n <= m;
    let mut premises = vec![
        Premise {
            name: "1 <= n <= m/2".into(),
            holds: Some(gate),
            detail: format!("m = {m}, n = {n}"),
        },
        min_degree_premise(g, 1 + n),
    ];
    premises.push(if gate {
        toughness_premise(g, Threshold::EdgeDeletionStar { m, n }, limits)?
    } else {
        Premise {
            name: "isolated-toughness >= 1/(m-n)".into(),
            holds: None,
            detail: "bound undefined for these parameters".into(),
        }
    });
    let params = Params {
        m: Some(m),
        n: Some(n),
        ..Params::default()
    };
    let vacuous = premises.iter().any(|p| p.holds == Some(false));
    if vacuous && !opts.evaluate_vacuous {
        return Ok(AvoidanceVerdict::assemble(
            CheckKind::EdgeDeletionStar,
            params,
            premises,
            None,
            None,
        ));
    }
    let mut criterion_ok = Some(true);
    let mut search_ok = Some(true);
    let mut decided = (0, 0);
    let mut counterexample = None;
    let mut undecided = false;
    for es in edge_subsets(g, n, limits)? {
        let mut h = g.clone();
        for e in &es {
            h = h.without_edge(*e)?;
        }
        let crit = if h.order() <= limits.forall_max_n {
            Some(check_star_factor(&h, m, limits)?)
        } else {
            None
        };
        let found = match find_star_factor(&h, m, limits) {
            Ok(f) => Some(f.is_some()),
            Err(Error::BudgetExceeded(_)) => None,
            Err(e) => return Err(e),
        };
        if let (Some(c), Some(f)) = (&crit, found) {
            if c.exists() != f {
                return Err(Error::RouteDisagreement(format!(
                    "deleting {es:?}: star criterion says {}, search says {f}",
                    c.exists()
                )));
            }
        }
        match &crit {
            Some(c) => {
                decided.0 += 1;
                if !c.exists() {
                    criterion_ok = Some(false);
                }
            }
            None if criterion_ok == Some(true) => criterion_ok = None,
            None => {}
        }
        match found {
            Some(f) => {
                decided.1 += 1;
                if !f {
                    search_ok = Some(false);
                }
            }
            None if search_ok == Some(true) => search_ok = None,
            None => {}
        }
        match crit.as_ref().map(|c| c.exists()).or(found) {
            Some(true) => {}
            Some(false) => {
                counterexample = Some(Counterexample {
                    deletion: Some(DeletionSpec::Edges(es)),
                    certificate: crit.unwrap_or(FactorCertificate::Absent),
                    bound: 0,
                });
                break;
            }
            None => undecided = true,
        }
    }
    let conclusion = match (&counterexample, undecided) {
        (Some(_), _) => Some(false),
        (None, true) => None,
        (None, false) => Some(true),
    };
    let mut verdict = AvoidanceVerdict::assemble(
        CheckKind::EdgeDeletionStar,
        params,
        premises,
        conclusion,
        counterexample,
    );
    verdict.routes = vec![
        Route {
            name: "isolated-vertex-criterion".into(),
            holds: criterion_ok,
            instances: decided.0,
        },
        Route {
            name: "star-search".into(),
            holds: search_ok,
            instances: decided.1,
        },
    ];
    Ok(verdict)
}

/// If `δ(G) >= a+2` and every `G - {x,y}` has an `[a,b]`-factor, then every
/// `G - e` has one.
pub fn check_edges_from_pairs(
    g: &Graph,
    a: usize,
    b: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    require_ab(a, b)?;
    let limits = &opts.limits;
    let mut premises = vec![min_degree_premise(g, a + 2)];
    let (pairs, failing) = if g.order() >= 2 {
        first_failing_deletion(g, a, b, 2, limits)?
    } else {
        (Some(true), None)
    };
    premises.push(Premise {
        name: format!("every two-vertex deletion has an [{a},{b}]-factor"),
        holds: pairs,
        detail: match failing.and_then(|c| c.deletion) {
            Some(DeletionSpec::Vertices(v)) => format!("fails at {:?}", v.as_slice()),
            _ => String::new(),
        },
    });
    let params = Params {
        a: Some(a),
        b: Some(b),
        ..Params::default()
    };
    let vacuous = premises.iter().any(|p| p.holds == Some(false));
    if vacuous && !opts.evaluate_vacuous {
        return Ok(AvoidanceVerdict::assemble(
            CheckKind::EdgeFromPairs,
            params,
            premises,
            None,
            None,
        ));
    }
    let mut conclusion = Some(true);
    let mut counterexample = None;
    for e in g.edges() {
        let h = g.without_edge(e)?;
        match decide(&h, a, b, limits)? {
            Some(c) if c.exists() => {}
            Some(c) => {
                conclusion = Some(false);
                counterexample = Some(Counterexample {
                    deletion: Some(DeletionSpec::Edge(e)),
                    certificate: c,
                    bound: 0,
                });
                break;
            }
            None => conclusion = None,
        }
    }
    Ok(AvoidanceVerdict::assemble(
        CheckKind::EdgeFromPairs,
        params,
        premises,
        conclusion,
        counterexample,
    ))
}
