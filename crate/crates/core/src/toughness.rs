//! Isolated toughness
//!
//! `I(G) = min |S| / i(G-S)` over all `S` with `i(G-S) >= 2`, and
//! `I(Kₙ) = n - 1`. A non-complete graph always has a feasible `S`: for two
//! nonadjacent vertices `u, v`, `S = V - {u, v}` leaves both isolated.
//!
//! Two independent algorithms are provided. The brute-force one scans every
//! subset. The fast one only looks at neighborhoods of independent sets: if
//! `S` is optimal and `I` is the set of isolated vertices of `G-S`, then `I`
//! is independent, `N(I) ⊆ S`, and every vertex of `I` stays isolated in
//! `G-N(I)`, so `|N(I)| / i(G-N(I)) <= |S| / i(G-S)`.

use serde::{Deserialize, Serialize};

use crate::graph::{mask_iter, Graph, VertexSet};
use crate::{Error, Fraction, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessReport {
    pub value: Fraction,
    /// Minimizing `S`; empty for complete graphs.
    pub witness: VertexSet,
    /// `i(G - witness)`; zero for complete graphs.
    pub isolated_at_witness: usize,
}

impl ToughnessReport {
    fn complete(n: usize) -> Self {
        ToughnessReport {
            value: Fraction::from_int(n as i64 - 1),
            witness: VertexSet::new(),
            isolated_at_witness: 0,
        }
    }

    /// Re-evaluates the witness on `g`.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if g.is_complete() {
            return Ok(
                self.witness.is_empty() && self.value == Fraction::from_int(g.order() as i64 - 1)
            );
        }
        let i = g.isolated_count(&self.witness)?;
        Ok(i >= 2
            && i == self.isolated_at_witness
            && self.value == Fraction::new(self.witness.len() as i64, i as i64))
    }
}

/// Lexicographic comparison of two sets given as masks, reading each as its
/// sorted member list.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let x = diff.trailing_zeros();
    let above = if x >= 63 { 0 } else { !0u64 << (x + 1) };
    if a >> x & 1 == 1 {
        b & above != 0
    } else {
        a & above == 0
    }
}

#[derive(Clone, Copy)]
struct Best {
    size: u64,
    isolated: u64,
    set: u64,
}

impl Best {
    fn offer(slot: &mut Option<Best>, size: u64, isolated: u64, set: u64) {
        let better = match slot {
            None => true,
            Some(b) => {
                let lhs = size * b.isolated;
                let rhs = b.size * isolated;
                lhs < rhs || (lhs == rhs && lex_less(set, b.set))
            }
        };
        if better {
            *slot = Some(Best {
                size,
                isolated,
                set,
            });
        }
    }

    fn report(self) -> ToughnessReport {
        ToughnessReport {
            value: Fraction::new(self.size as i64, self.isolated as i64),
            witness: VertexSet::from_mask(self.set),
            isolated_at_witness: self.isolated as usize,
        }
    }
}

/// Exhaustive minimum over all `2ⁿ` subsets. Ties go to the
/// lexicographically smallest witness.
pub fn isolated_toughness_bruteforce(g: &Graph, limits: &Limits) -> Result<ToughnessReport> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > limits.toughness_brute_max_n.min(63) {
        return Err(Error::CapExceeded {
            what: "brute-force toughness vertex count",
            size: n as u64,
            cap: limits.toughness_brute_max_n as u64,
        });
    }
    if g.is_complete() {
        return Ok(ToughnessReport::complete(n));
    }
    let mut best = None;
    for s in 0..1u64 << n {
        let i = g.isolated_count_mask(s) as u64;
        if i >= 2 {
            Best::offer(&mut best, s.count_ones() as u64, i, s);
        }
    }
    let best = best.expect("a non-complete graph has a feasible cut");
    Ok(best.report())
}

/// Exact `I(G)` by branch and bound over independent sets `I`, `|I| >= 2`,
/// with candidate cut `N(I)`. Works for up to 64 vertices; the running time
/// grows with the number of independent sets.
pub fn isolated_toughness(g: &Graph) -> Result<ToughnessReport> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > 64 {
        return Err(Error::CapExceeded {
            what: "toughness vertex count",
            size: n as u64,
            cap: 64,
        });
    }
    if g.is_complete() {
        return Ok(ToughnessReport::complete(n));
    }
    let mut search = IndependentSearch {
        g,
        n: n as u64,
        best: None,
    };
    search.extend(0, 0, g.full_mask());
    let best = search
        .best
        .expect("a non-complete graph has two nonadjacent vertices");
    Ok(best.report())
}

struct IndependentSearch<'a> {
    g: &'a Graph,
    n: u64,
    best: Option<Best>,
}

impl IndependentSearch<'_> {
    /// `nbhd`: neighborhood of the current independent set of `size`
    /// vertices; `cands`: vertices that may still be added.
    fn extend(&mut self, size: u32, nbhd: u64, cands: u64) {
        if size >= 2 {
            let i = self.g.isolated_count_mask(nbhd) as u64;
            Best::offer(&mut self.best, nbhd.count_ones() as u64, i, nbhd);
        }
        for v in mask_iter(cands) {
            let next_nbhd = nbhd | self.g.adj_mask(v);
            // Any superset keeps at least |N| cut vertices and at most
            // n - |N| isolated ones, and k / (n - k) grows with k.
            let k = next_nbhd.count_ones() as u64;
            if let Some(b) = self.best {
                if k >= self.n || k * b.isolated > b.size * (self.n - k) {
                    continue;
                }
            }
            let later = if v == 63 { 0 } else { !0u64 << (v + 1) };
            let next_cands = cands & later & !self.g.adj_mask(v);
            self.extend(size + 1, next_nbhd, next_cands);
        }
    }
}

/// The toughness bounds used as premises by the deletion checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "bound", rename_all = "kebab-case")]
pub enum Threshold {
    /// `a - 1 + a/b`: enough for an `[a,b]`-factor when `δ >= a`.
    Factor { a: usize, b: usize },
    /// `a - 1 + n + (a-1)/b`: every `G - V'`, `|V'| = n`, has a factor.
    VertexDeletion { a: usize, b: usize, n: usize },
    /// `1/(m-n)` with `1 <= n`, `2n <= m`: every `G - E'` has a star factor.
    EdgeDeletionStar { m: usize, n: usize },
    /// `a - 1 + (a+2n-1)/b`: every `G - M` for an `n`-matching `M`.
    MatchingDeletion { a: usize, b: usize, n: usize },
    /// `a - 1 + (a+kn-1)/b` with `2 <= k <= b`: deficiency at least `kn`.
    InnerBound {
        a: usize,
        b: usize,
        n: usize,
        k: usize,
    },
}

fn check_ab(name: &str, a: usize, b: usize) -> Result<()> {
    if a < 1 || a >= b {
        return Err(Error::InvalidParameter(format!(
            "{name} bound needs 1 <= a < b (got a={a}, b={b})"
        )));
    }
    Ok(())
}

fn check_n(name: &str, n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "{name} bound needs n >= 1"
        )));
    }
    Ok(())
}

impl Threshold {
    pub fn value(&self) -> Result<Fraction> {
        let f = |v: usize| Fraction::from_int(v as i64);
        match *self {
            Threshold::Factor { a, b } => {
                check_ab("factor", a, b)?;
                Ok(f(a - 1) + Fraction::new(a as i64, b as i64))
            }
            Threshold::VertexDeletion { a, b, n } => {
                check_ab("vertex-deletion", a, b)?;
                check_n("vertex-deletion", n)?;
                Ok(f(a - 1 + n) + Fraction::new(a as i64 - 1, b as i64))
            }
            Threshold::EdgeDeletionStar { m, n } => {
                if n < 1 || 2 * n > m {
                    return Err(Error::InvalidParameter(format!(
                        "edge-deletion-star bound needs 1 <= n <= m/2 (got m={m}, n={n})"
                    )));
                }
                Ok(Fraction::new(1, (m - n) as i64))
            }
            Threshold::MatchingDeletion { a, b, n } => {
                check_ab("matching-deletion", a, b)?;
                check_n("matching-deletion", n)?;
                Ok(f(a - 1) + Fraction::new((a + 2 * n - 1) as i64, b as i64))
            }
            Threshold::InnerBound { a, b, n, k } => {
                check_ab("inner-bound", a, b)?;
                check_n("inner-bound", n)?;
                if k < 2 || k > b {
                    return Err(Error::InvalidParameter(format!(
                        "inner-bound needs 2 <= k <= b (got k={k}, b={b})"
                    )));
                }
                Ok(f(a - 1) + Fraction::new((a + k * n - 1) as i64, b as i64))
            }
        }
    }
}
