//! Degree-constrained factors.
//!
//! The central quantity is the deficiency
//! `δ_G(a,b;S) = b|S| - a|T| + d_{G-S}(T)` where `T` is the set of vertices
//! of `G-S` whose degree there is at most `a-1`. For `a < b`, `G` has an
//! `[a,b]`-factor iff `δ_G(a,b;S) >= 0` for every `S`.

mod certificate;
mod katerinis;
mod search;
mod star;

use crate::graph::{mask_iter, Graph, VertexSet};
use crate::subsets::{count_up_to, SizeLexSubsets};
use crate::{Error, Limits, Result};

pub use certificate::{CertificateRecord, FactorCertificate, Violation};
pub use katerinis::{degree_ceiling_classes, find_katerinis_pair, KaterinisPair};
pub use search::{brute_force_factor, brute_force_gf_factor, find_ab_factor, search_ab_factor};
pub use star::{check_star_factor, find_star_factor, Star, StarForest};

/// `T = {x ∈ V-S : d_{G-S}(x) <= a-1}`. With `a = 0` this is empty.
pub fn low_set(g: &Graph, s: &VertexSet, a: usize) -> Result<VertexSet> {
    let removed = g.indicator(s)?;
    Ok(low_set_with(g, &removed, a))
}

fn low_set_with(g: &Graph, removed: &[bool], a: usize) -> VertexSet {
    (0..g.order())
        .filter(|&x| !removed[x] && g.degree_avoiding(x, removed) < a)
        .collect()
}

/// `δ_G(a,b;S)`.
pub fn delta(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<i64> {
    let removed = g.indicator(s)?;
    Ok(delta_with(g, &removed, s.len(), a, b, a))
}

/// The deficiency evaluated with `T' = {x : d_{G-S}(x) <= a}` in place of
/// `T`. Vertices of degree exactly `a` contribute `a - a = 0`, so this always
/// equals [`delta`].
pub fn delta_saturated(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<i64> {
    let removed = g.indicator(s)?;
    Ok(delta_with(g, &removed, s.len(), a, b, a + 1))
}

/// `b|S| - a|T| + d(T)` with `T` the vertices of degree `< cutoff`.
fn delta_with(g: &Graph, removed: &[bool], s_len: usize, a: usize, b: usize, cutoff: usize) -> i64 {
    let mut total = (b * s_len) as i64;
    for x in 0..g.order() {
        if removed[x] {
            continue;
        }
        let d = g.degree_avoiding(x, removed);
        if d < cutoff {
            total += d as i64 - a as i64;
        }
    }
    total
}

/// Mask form of [`delta`] for graphs on at most 64 vertices.
#[inline]
pub fn delta_mask(g: &Graph, s: u64, a: usize, b: usize) -> i64 {
    let alive = g.full_mask() & !s;
    let mut total = (b as i64) * s.count_ones() as i64;
    for x in mask_iter(alive) {
        let d = (g.adj_mask(x) & alive).count_ones() as i64;
        if d < a as i64 {
            total += d - a as i64;
        }
    }
    total
}

fn low_mask(g: &Graph, s: u64, a: usize) -> u64 {
    let alive = g.full_mask() & !s;
    mask_iter(alive)
        .filter(|&x| ((g.adj_mask(x) & alive).count_ones() as usize) < a)
        .fold(0, |m, x| m | 1 << x)
}

/// Outcome of a scan for a set `S ⊇ base` with `δ_G(a,b;S) < bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    /// Every candidate was examined; none violates.
    Clear,
    /// First violating set in size-then-lexicographic order of `S - base`.
    Found { s: u64, delta: i64 },
}

/// Scans every `S` with `base ⊆ S ⊆ V` for `δ_G(a,b;S) < bound`.
///
/// When `|V - base|` exceeds `limits.forall_max_n` the scan is truncated to
/// `limits.violation_search_subsets` candidates: a violation found there is
/// still returned, but running out of budget is `CapExceeded`.
pub fn scan_deficiency(
    g: &Graph,
    a: usize,
    b: usize,
    base: u64,
    bound: i64,
    limits: &Limits,
) -> Result<Scan> {
    let n = g.order();
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "deficiency scan vertex count",
            size: n as u64,
            cap: 64,
        });
    }
    let universe: Vec<usize> = mask_iter(g.full_mask() & !base).collect();
    let exhaustive = universe.len() <= limits.forall_max_n;
    let budget = if exhaustive {
        u64::MAX
    } else {
        limits.violation_search_subsets
    };
    for (examined, extra) in SizeLexSubsets::new(&universe, universe.len()).enumerate() {
        if examined as u64 == budget {
            return Err(Error::CapExceeded {
                what: "subsets examined by the deficiency scan",
                size: count_up_to(universe.len(), universe.len()),
                cap: budget,
            });
        }
        let s = base | extra;
        let d = delta_mask(g, s, a, b);
        if d < bound {
            return Ok(Scan::Found { s, delta: d });
        }
    }
    Ok(Scan::Clear)
}

fn violation_from_mask(g: &Graph, s: u64, a: usize, delta: i64) -> Violation {
    Violation {
        s: VertexSet::from_mask(s),
        t: VertexSet::from_mask(low_mask(g, s, a)),
        delta,
    }
}

/// Decides `[a,b]`-factor existence (`a < b`) by checking `δ_G(a,b;S) >= 0`
/// for every `S` in size-then-lexicographic order. Returns `Exists` or the
/// first violating set. No factor is constructed.
pub fn check_ab_factor(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<FactorCertificate> {
    if a >= b {
        return Err(Error::HypothesisNotMet(format!(
            "the deficiency criterion needs a < b (got a={a}, b={b})"
        )));
    }
    match scan_deficiency(g, a, b, 0, 0, limits)? {
        Scan::Clear => Ok(FactorCertificate::Exists),
        Scan::Found { s, delta } => Ok(FactorCertificate::Violation(violation_from_mask(
            g, s, a, delta,
        ))),
    }
}

/// `(g,f)`-factor criterion with `T = {x ∈ V-S : d_{G-S}(x) <= g(x)}`:
/// a factor exists iff `g(T) - d_{G-S}(T) <= f(S)` for every `S`. Only valid
/// when `g(x) < f(x)` everywhere or the graph is bipartite; otherwise the
/// call is refused.
pub fn check_gf_factor(
    g: &Graph,
    lower: &[usize],
    upper: &[usize],
    limits: &Limits,
) -> Result<FactorCertificate> {
    let n = g.order();
    if lower.len() != n || upper.len() != n {
        return Err(Error::InvalidParameter(format!(
            "bound functions must have one entry per vertex ({n})"
        )));
    }
    if let Some(x) = (0..n).find(|&x| lower[x] > upper[x]) {
        return Err(Error::InvalidParameter(format!(
            "lower bound exceeds upper bound at vertex {x}"
        )));
    }
    let strict = (0..n).all(|x| lower[x] < upper[x]);
    if !strict && !g.is_bipartite() {
        return Err(Error::HypothesisNotMet(
            "the (g,f) criterion needs g(x) < f(x) for every x or a bipartite graph".into(),
        ));
    }
    if n > limits.forall_max_n {
        return Err(Error::CapExceeded {
            what: "(g,f) criterion vertex count",
            size: n as u64,
            cap: limits.forall_max_n as u64,
        });
    }
    for s in SizeLexSubsets::all(n) {
        let alive = g.full_mask() & !s;
        let mut slack: i64 = mask_iter(s).map(|x| upper[x] as i64).sum();
        let mut t = 0u64;
        for x in mask_iter(alive) {
            let d = (g.adj_mask(x) & alive).count_ones() as usize;
            if d <= lower[x] {
                slack += d as i64 - lower[x] as i64;
                t |= 1 << x;
            }
        }
        if slack < 0 {
            return Ok(FactorCertificate::Violation(Violation {
                s: VertexSet::from_mask(s),
                t: VertexSet::from_mask(t),
                delta: slack,
            }));
        }
    }
    Ok(FactorCertificate::Exists)
}
