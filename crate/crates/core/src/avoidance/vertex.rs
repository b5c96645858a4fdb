use super::{
    k_subsets, min_degree_premise, toughness_premise, AvoidanceVerdict, CheckKind, CheckOptions,
    Counterexample, Params, Premise, Route,
};
use crate::factor::{
    check_ab_factor, delta_mask, find_ab_factor, scan_deficiency, search_ab_factor,
    FactorCertificate, Scan, Violation,
};
use crate::graph::{delete, DeletionSpec, Graph, VertexSet};
use crate::toughness::Threshold;
use crate::{Error, Limits, Result};

pub(crate) fn require_ab(a: usize, b: usize) -> Result<()> {
    if a < 1 || a >= b {
        return Err(Error::HypothesisNotMet(format!(
            "deletion checks need 1 <= a < b (got a={a}, b={b})"
        )));
    }
    Ok(())
}

/// Decides whether `g` has an `[a,b]`-factor, `None` when both the search
/// budget and the criterion cap run out.
pub(crate) fn decide(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Option<FactorCertificate>> {
    match find_ab_factor(g, a, b, limits) {
        Ok(c) => Ok(Some(c)),
        Err(Error::BudgetExceeded(_)) if a < b => match check_ab_factor(g, a, b, limits) {
            Ok(c) => Ok(Some(c)),
            Err(Error::CapExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        },
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn deletion_sets(g: &Graph, n: usize, opts: &CheckOptions) -> Result<Vec<VertexSet>> {
    if n > g.order() {
        return Err(Error::InvalidParameter(format!(
            "cannot delete {n} vertices from a graph on {}",
            g.order()
        )));
    }
    match &opts.vertex_deletions {
        Some(list) => {
            if list.len() > opts.limits.max_deletions {
                return Err(Error::CapExceeded {
                    what: "deletions per instance",
                    size: list.len() as u64,
                    cap: opts.limits.max_deletions as u64,
                });
            }
            for v in list {
                v.check_range(g.order())?;
                if v.len() != n {
                    return Err(Error::InvalidParameter(format!(
                        "deletion set {:?} does not have {n} vertices",
                        v.as_slice()
                    )));
                }
            }
            Ok(list.clone())
        }
        None => k_subsets(g.order(), n, opts.limits.max_deletions),
    }
}

#[derive(Default)]
struct RouteTally {
    failed: bool,
    undecided: bool,
    decided: usize,
}

impl RouteTally {
    fn record(&mut self, r: Option<bool>) {
        match r {
            Some(ok) => {
                self.decided += 1;
                self.failed |= !ok;
            }
            None => self.undecided = true,
        }
    }

    fn route(&self, name: &str) -> Route {
        Route {
            name: name.to_string(),
            holds: if self.failed {
                Some(false)
            } else if self.undecided {
                None
            } else {
                Some(true)
            },
            instances: self.decided,
        }
    }
}

/// Every `G - V'` with `|V'| = n` (or every listed `V'`) has an
/// `[a,b]`-factor. The conclusion is always evaluated, by two routes: the
/// deficiency scan over `S ⊇ V'` against the bound `b·n`, and direct factor
/// search on `G - V'`. The first failing `V'` in lexicographic order is the
/// counterexample; its certificate lives on `G - V'` in host labels.
pub fn check_vertex_deletion_all(
    g: &Graph,
    a: usize,
    b: usize,
    n: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    require_ab(a, b)?;
    let limits = &opts.limits;
    let premises = vec![
        min_degree_premise(g, a + n),
        toughness_premise(g, Threshold::VertexDeletion { a, b, n }, limits)?,
    ];
    let sets = deletion_sets(g, n, opts)?;
    let mut criterion = RouteTally::default();
    let mut direct = RouteTally::default();
    let mut undecided = false;
    let mut counterexample = None;
    for v in sets {
        let crit = criterion_route(g, a, b, &v, &opts.witness_hints, limits)?;
        let deleted = delete(g, &DeletionSpec::Vertices(v.clone()))?;
        let found = match search_ab_factor(&deleted.graph, a, b, limits.search_budget) {
            Ok(f) => Some(f.is_some()),
            Err(Error::BudgetExceeded(_)) => None,
            Err(e) => return Err(e),
        };
        criterion.record(crit.as_ref().map(|c| c.is_none()));
        direct.record(found);
        if let (Some(c), Some(d)) = (&crit, found) {
            if c.is_none() != d {
                return Err(Error::RouteDisagreement(format!(
                    "deleting {:?}: criterion says {}, search says {}",
                    v.as_slice(),
                    c.is_none(),
                    d
                )));
            }
        }
        let holds = crit.as_ref().map(|c| c.is_none()).or(found);
        match holds {
            Some(true) => {}
            Some(false) => {
                let certificate = match crit.flatten() {
                    Some(viol) => FactorCertificate::Violation(viol),
                    None => FactorCertificate::Absent,
                };
                counterexample = Some(Counterexample {
                    deletion: Some(DeletionSpec::Vertices(v)),
                    certificate,
                    bound: 0,
                });
                break;
            }
            None => undecided = true,
        }
    }
    let conclusion = if counterexample.is_some() {
        Some(false)
    } else if undecided {
        None
    } else {
        Some(true)
    };
    let mut verdict = AvoidanceVerdict::assemble(
        CheckKind::VertexDeletion,
        Params {
            a: Some(a),
            b: Some(b),
            n: Some(n),
            ..Params::default()
        },
        premises,
        conclusion,
        counterexample,
    );
    verdict.routes = vec![
        criterion.route("deficiency-criterion"),
        direct.route("factor-search"),
    ];
    Ok(verdict)
}

/// `G - V'` has an `[a,b]`-factor iff `δ_G(a,b;S) >= b|V'|` for every
/// `S ⊇ V'`. `Some(None)`: holds; `Some(Some(v))`: fails with `v` given on
/// `G - V'` in host labels; `None`: undecided within caps.
fn criterion_route(
    g: &Graph,
    a: usize,
    b: usize,
    v: &VertexSet,
    hints: &[VertexSet],
    limits: &Limits,
) -> Result<Option<Option<Violation>>> {
    if g.order() > 64 {
        return Ok(None);
    }
    let base = v.to_mask();
    let bound = (b * v.len()) as i64;
    let hinted = hints.iter().find_map(|h| {
        if h.check_range(g.order()).is_err() || h.to_mask() & base != 0 {
            return None;
        }
        let s = h.to_mask() | base;
        let d = delta_mask(g, s, a, b);
        (d < bound).then_some(Scan::Found { s, delta: d })
    });
    let scanned = match hinted {
        Some(found) => Ok(found),
        None => scan_deficiency(g, a, b, base, bound, limits),
    };
    match scanned {
        Ok(Scan::Clear) => Ok(Some(None)),
        Ok(Scan::Found { s, delta }) => {
            let s_local = VertexSet::from_mask(s & !base);
            let removed = g.indicator(&VertexSet::from_mask(s))?;
            let t: VertexSet = (0..g.order())
                .filter(|&x| !removed[x] && g.degree_avoiding(x, &removed) < a)
                .collect();
            Ok(Some(Some(Violation {
                s: s_local,
                t,
                delta: delta - bound,
            })))
        }
        Err(Error::CapExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// If every `G - V'` with `|V'| = n` has an `[a,b]`-factor and
/// `δ(G) >= a+n`, then so does every `G - V''` with `|V''| = n-1`.
pub fn check_deletion_hierarchy(
    g: &Graph,
    a: usize,
    b: usize,
    n: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    require_ab(a, b)?;
    if n < 1 || n > g.order() {
        return Err(Error::InvalidParameter(format!(
            "deletion size must satisfy 1 <= n <= {} (got {n})",
            g.order()
        )));
    }
    let limits = &opts.limits;
    let mut premises = vec![min_degree_premise(g, a + n)];
    let (antecedent, failing) = first_failing_deletion(g, a, b, n, limits)?;
    premises.push(Premise {
        name: format!("every {n}-vertex deletion has an [{a},{b}]-factor"),
        holds: antecedent,
        detail: match failing.and_then(|c| c.deletion) {
            Some(DeletionSpec::Vertices(v)) => format!("fails at {:?}", v.as_slice()),
            _ => String::new(),
        },
    });
    let params = Params {
        a: Some(a),
        b: Some(b),
        n: Some(n),
        ..Params::default()
    };
    if antecedent == Some(false) && !opts.evaluate_vacuous {
        return Ok(AvoidanceVerdict::assemble(
            CheckKind::DeletionHierarchy,
            params,
            premises,
            None,
            None,
        ));
    }
    let (conclusion, counterexample) = first_failing_deletion(g, a, b, n - 1, limits)?;
    Ok(AvoidanceVerdict::assemble(
        CheckKind::DeletionHierarchy,
        params,
        premises,
        conclusion,
        counterexample,
    ))
}

/// Scans every `k`-vertex deletion for one without an `[a,b]`-factor.
pub(crate) fn first_failing_deletion(
    g: &Graph,
    a: usize,
    b: usize,
    k: usize,
    limits: &Limits,
) -> Result<(Option<bool>, Option<Counterexample>)> {
    let mut conclusion = Some(true);
    for v in k_subsets(g.order(), k, limits.max_deletions)? {
        let d = delete(g, &DeletionSpec::Vertices(v.clone()))?;
        match decide(&d.graph, a, b, limits)? {
            Some(c) if c.exists() => {}
            Some(c) => {
                return Ok((
                    Some(false),
                    Some(Counterexample {
                        deletion: Some(DeletionSpec::Vertices(v)),
                        certificate: c.relabel(&d.original),
                        bound: 0,
                    }),
                ))
            }
            None => conclusion = None,
        }
    }
    Ok((conclusion, None))
}
