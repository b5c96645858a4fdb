use super::vertex::require_ab;
use super::{
    min_degree_premise, toughness_premise, AvoidanceVerdict, CheckKind, CheckOptions,
    Counterexample, Params, Witness,
};
use crate::factor::{delta_mask, FactorCertificate, Violation};
use crate::graph::{mask_iter, Graph, VertexSet};
use crate::subsets::SizeLexSubsets;
use crate::toughness::Threshold;
use crate::{Error, Result};

/// If `δ(G) >= a+n` and `I(G) >= a-1+(a+kn-1)/b` with `2 <= k <= b`, then
/// `δ_G(a,b;S) >= kn` for every `S` whose low-degree set `T` is nonempty.
/// The smallest such deficiency is reported as a witness.
pub fn check_inner_bound(
    g: &Graph,
    a: usize,
    b: usize,
    n: usize,
    k: usize,
    opts: &CheckOptions,
) -> Result<AvoidanceVerdict> {
    require_ab(a, b)?;
    let threshold = Threshold::InnerBound { a, b, n, k };
    threshold.value()?;
    let limits = &opts.limits;
    let premises = vec![
        min_degree_premise(g, a + n),
        toughness_premise(g, threshold, limits)?,
    ];
    let params = Params {
        a: Some(a),
        b: Some(b),
        n: Some(n),
        k: Some(k),
        ..Params::default()
    };
    let vacuous = premises.iter().any(|p| p.holds == Some(false));
    if vacuous && !opts.evaluate_vacuous {
        return Ok(AvoidanceVerdict::assemble(
            CheckKind::InnerBound,
            params,
            premises,
            None,
            None,
        ));
    }
    let order = g.order();
    if order > limits.forall_max_n {
        return Err(Error::CapExceeded {
            what: "inner-bound vertex count",
            size: order as u64,
            cap: limits.forall_max_n as u64,
        });
    }
    let bound = (k * n) as i64;
    let mut least: Option<(u64, i64)> = None;
    let mut failure = None;
    for s in SizeLexSubsets::all(order) {
        let alive = g.full_mask() & !s;
        let t: u64 = mask_iter(alive)
            .filter(|&x| ((g.adj_mask(x) & alive).count_ones() as usize) < a)
            .fold(0, |acc, x| acc | 1 << x);
        if t == 0 {
            continue;
        }
        let d = delta_mask(g, s, a, b);
        if least.map_or(true, |(_, m)| d < m) {
            least = Some((s, d));
        }
        if d < bound && failure.is_none() {
            failure = Some(Counterexample {
                deletion: None,
                certificate: FactorCertificate::Violation(Violation {
                    s: VertexSet::from_mask(s),
                    t: VertexSet::from_mask(t),
                    delta: d,
                }),
                bound,
            });
        }
    }
    let conclusion = Some(failure.is_none());
    let mut verdict =
        AvoidanceVerdict::assemble(CheckKind::InnerBound, params, premises, conclusion, failure);
    if let Some((s, d)) = least {
        verdict.witnesses.push(Witness::MinDeficiency {
            s: VertexSet::from_mask(s),
            delta: d,
            bound,
        });
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::avoidance::Status;
    use crate::graph::{complete, cycle};
    use crate::Limits;

    #[test]
    fn complete_eight_meets_inner_bound() {
        let v = check_inner_bound(&complete(8), 2, 3, 1, 2, &CheckOptions::default()).unwrap();
        assert_eq!(v.premises_hold, Some(true));
        assert_eq!(v.status, Status::Verified);
        match &v.witnesses[0] {
            Witness::MinDeficiency { s, delta, bound } => {
                // Six removed vertices leave an edge: 3*6 - 2*2 + 2.
                assert_eq!(s.len(), 6);
                assert_eq!(*bound, 2);
                assert_eq!(*delta, 16);
            }
            w => panic!("{w:?}"),
        }
    }

    #[test]
    fn parameter_range_is_enforced() {
        assert!(check_inner_bound(&complete(5), 2, 3, 1, 4, &CheckOptions::default()).is_err());
        assert!(check_inner_bound(&complete(5), 2, 3, 1, 1, &CheckOptions::default()).is_err());
    }

    #[test]
    fn low_bound_failure_reverifies() {
        let o = CheckOptions {
            evaluate_vacuous: true,
            ..CheckOptions::default()
        };
        let g = cycle(6);
        let v = check_inner_bound(&g, 2, 3, 1, 3, &o).unwrap();
        assert_eq!(v.conclusion, Some(false));
        assert_eq!(v.status, Status::Vacuous);
        assert!(v.verify_counterexample(&g, &Limits::default()).unwrap());
    }
}
