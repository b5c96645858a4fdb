use super::vertex::{decide, require_ab};
use super::{
    min_degree_premise, toughness_premise, AvoidanceVerdict, CheckKind, CheckOptions,
    Counterexample, Params,
};
use crate::graph::{DeletionSpec, Edge, Graph};
use crate::toughness::Threshold;
use crate::{Error, Result};

/// Every matching of exactly `n` edges, in lexicographic order of the
/// sorted edge lists. More than `cap` matchings is `CapExceeded`.
pub fn enumerate_matchings(g: &Graph, n: usize, cap: usize) -> Result<Vec<Vec<Edge>>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(n);
    let mut used = vec![false; g.order()];
    extend(&edges, 0, n, &mut used, &mut chosen, &mut out, cap)?;
    Ok(out)
}

fn extend(
    edges: &[Edge],
    from: usize,
    n: usize,
    used: &mut [bool],
    chosen: &mut Vec<Edge>,
    out: &mut Vec<Vec<Edge>>,
    cap: usize,
) -> Result<()> {
    if chosen.len() == n {
        if out.len() == cap {
            return Err(Error::CapExceeded {
                what: "deletions per instance",
                size: cap as u64 + 1,
                cap: cap as u64,
            });
        }
        out.push(chosen.clone());
        return Ok(());
    }
    for i in from..edges.len() {
        if edges.len() - i < n - chosen.len() {
            break;
        }
        let e = edges[i];
        if used[e.u] || used[e.v] {
            continue;
        }
        used[e.u] = true;
        used[e.v] = true;
        chosen.push(e);
        extend(edges, i + 1, n, used, chosen, out, cap)?;
        chosen.pop();
        used[e.u] = false;
        used[e.v] = false;
    }
    Ok(())
}

/// If `δ(G) >= a+n` and `I(G) >= a-1+(a+2n-1)/b`, every `G - M` with `M`
/// an `n`-matching has an `[a,b]`-factor. A graph without `n`-matchings
/// satisfies the conclusion trivially.
pub fn check_matching_deletion(
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
        toughness_premise(g, Threshold::MatchingDeletion { a, b, n }, limits)?,
    ];
    let params = Params {
        a: Some(a),
        b: Some(b),
        n: Some(n),
        ..Params::default()
    };
    let vacuous = premises.iter().any(|p| p.holds == Some(false));
    if vacuous && !opts.evaluate_vacuous {
        return Ok(AvoidanceVerdict::assemble(
            CheckKind::MatchingDeletion,
            params,
            premises,
            None,
            None,
        ));
    }
    let mut conclusion = Some(true);
    let mut counterexample = None;
    for m in enumerate_matchings(g, n, limits.max_deletions)? {
        let spec = DeletionSpec::Matching(m);
        let h = crate::graph::delete(g, &spec)?.graph;
        match decide(&h, a, b, limits)? {
            Some(c) if c.exists() => {}
            Some(c) => {
                conclusion = Some(false);
                counterexample = Some(Counterexample {
                    deletion: Some(spec),
                    certificate: c,
                    bound: 0,
                });
                break;
            }
            None => conclusion = None,
        }
    }
    Ok(AvoidanceVerdict::assemble(
        CheckKind::MatchingDeletion,
        params,
        premises,
        conclusion,
        counterexample,
    ))
}
