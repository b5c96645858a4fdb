//! Constructive factor search and the exhaustive oracle.

use super::{check_ab_factor, FactorCertificate};
use crate::graph::{Edge, Graph};
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Open,
    In,
    Out,
}

/// Backtracking over edge inclusion. Branching always happens at the
/// deficient vertex with the least slack (open edges minus missing degree);
/// forced moves are propagated: a vertex at degree `b` drops its open edges,
/// a vertex with zero slack takes all of them.
struct Search<'a> {
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
    state: Vec<State>,
    deg: Vec<usize>,
    open: Vec<usize>,
    trail: Vec<usize>,
    lower: &'a [usize],
    upper: &'a [usize],
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, lower: &'a [usize], upper: &'a [usize], budget: u64) -> Self {
        let edges = g.edges();
        let mut incident = vec![Vec::new(); g.order()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u].push(i);
            incident[e.v].push(i);
        }
        let open = incident.iter().map(Vec::len).collect();
        Search {
            state: vec![State::Open; edges.len()],
            edges,
            incident,
            deg: vec![0; g.order()],
            open,
            trail: Vec::new(),
            lower,
            upper,
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, e: usize, s: State) {
        debug_assert!(self.state[e] == State::Open);
        let Edge { u, v } = self.edges[e];
        self.state[e] = s;
        self.open[u] -= 1;
        self.open[v] -= 1;
        if s == State::In {
            self.deg[u] += 1;
            self.deg[v] += 1;
        }
        self.trail.push(e);
    }

    fn undo_to(&mut self, len: usize) {
        while self.trail.len() > len {
            let e = self.trail.pop().unwrap();
            let Edge { u, v } = self.edges[e];
            if self.state[e] == State::In {
                self.deg[u] -= 1;
                self.deg[v] -= 1;
            }
            self.open[u] += 1;
            self.open[v] += 1;
            self.state[e] = State::Open;
        }
    }

    fn other(&self, e: usize, x: usize) -> usize {
        let Edge { u, v } = self.edges[e];
        if u == x {
            v
        } else {
            u
        }
    }

    /// Applies forced moves starting from `queue`. False on conflict.
    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(x) = queue.pop() {
            let (d, lo, hi) = (self.deg[x], self.lower[x], self.upper[x]);
            if d > hi || d + self.open[x] < lo {
                return false;
            }
            let forced = if d == hi {
                State::Out
            } else if d + self.open[x] == lo {
                State::In
            } else {
                continue;
            };
            if self.open[x] == 0 {
                continue;
            }
            for i in 0..self.incident[x].len() {
                let e = self.incident[x][i];
                if self.state[e] == State::Open {
                    self.assign(e, forced);
                    queue.push(self.other(e, x));
                }
            }
        }
        true
    }

    fn solve(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let pick = (0..self.deg.len())
            .filter(|&x| self.deg[x] < self.lower[x])
            .min_by_key(|&x| {
                (
                    self.open[x] as i64 - (self.lower[x] - self.deg[x]) as i64,
                    x,
                )
            });
        let Some(x) = pick else {
            return Ok(true);
        };
        // Prefer partners that are themselves short of degree.
        let e = self.incident[x]
            .iter()
            .copied()
            .filter(|&e| self.state[e] == State::Open)
            .max_by_key(|&e| {
                let w = self.other(e, x);
                (self.deg[w] < self.lower[w], std::cmp::Reverse(e))
            })
            .expect("positive slack implies an open edge");
        let w = self.other(e, x);
        for choice in [State::In, State::Out] {
            let mark = self.trail.len();
            self.assign(e, choice);
            if self.propagate(vec![x, w]) && self.solve()? {
                return Ok(true);
            }
            self.undo_to(mark);
        }
        Ok(false)
    }

    fn run(mut self) -> Result<Option<Vec<Edge>>> {
        let all: Vec<usize> = (0..self.deg.len()).collect();
        if !self.propagate(all) || !self.solve()? {
            return Ok(None);
        }
        Ok(Some(
            (0..self.edges.len())
                .filter(|&e| self.state[e] == State::In)
                .map(|e| self.edges[e])
                .collect(),
        ))
    }
}

/// Raw `[a,b]`-factor search: `Some(edges)`, `None` when no factor exists,
/// or `BudgetExceeded`.
pub fn search_ab_factor(g: &Graph, a: usize, b: usize, budget: u64) -> Result<Option<Vec<Edge>>> {
    if a > b {
        return Err(Error::InvalidParameter(format!("a={a} exceeds b={b}")));
    }
    let lower = vec![a; g.order()];
    let upper = vec![b; g.order()];
    Search::new(g, &lower, &upper, budget).run()
}

/// Finds an explicit `[a,b]`-factor (`a = b` allowed). When none exists and
/// `a < b`, the answer is backed by the deficiency criterion's first
/// violating set; the two routes must agree. With `a = b` nonexistence is
/// reported as `Absent`.
pub fn find_ab_factor(g: &Graph, a: usize, b: usize, limits: &Limits) -> Result<FactorCertificate> {
    match search_ab_factor(g, a, b, limits.search_budget)? {
        Some(edges) => Ok(FactorCertificate::Factor(edges)),
        None if a < b => match check_ab_factor(g, a, b, limits) {
            Ok(FactorCertificate::Exists) => Err(Error::RouteDisagreement(format!(
                "search found no [{a},{b}]-factor but the deficiency criterion holds"
            ))),
            Ok(cert) => Ok(cert),
            Err(Error::CapExceeded { .. }) => Ok(FactorCertificate::Absent),
            Err(e) => Err(e),
        },
        None => Ok(FactorCertificate::Absent),
    }
}

/// Ground-truth oracle: plain include/exclude backtracking over the edges
/// in lexicographic order, pruning only on degree feasibility.
pub fn brute_force_factor(g: &Graph, a: usize, b: usize, limits: &Limits) -> Result<bool> {
    let n = g.order();
    Ok(brute_force_gf_factor(g, &vec![a; n], &vec![b; n], limits)?.is_some())
}

/// Oracle for per-vertex bounds `lower[x] <= d(x) <= upper[x]`.
pub fn brute_force_gf_factor(
    g: &Graph,
    lower: &[usize],
    upper: &[usize],
    limits: &Limits,
) -> Result<Option<Vec<Edge>>> {
    let edges = g.edges();
    if edges.len() > limits.brute_max_edges {
        return Err(Error::CapExceeded {
            what: "brute-force factor edge count",
            size: edges.len() as u64,
            cap: limits.brute_max_edges as u64,
        });
    }
    let n = g.order();
    let mut remaining: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if (0..n).any(|v| remaining[v] < lower[v]) {
        return Ok(None);
    }
    let mut deg = vec![0usize; n];
    let mut chosen = Vec::new();

    fn go(
        i: usize,
        edges: &[Edge],
        lower: &[usize],
        upper: &[usize],
        deg: &mut [usize],
        remaining: &mut [usize],
        chosen: &mut Vec<Edge>,
    ) -> bool {
        if i == edges.len() {
            return (0..deg.len()).all(|v| lower[v] <= deg[v] && deg[v] <= upper[v]);
        }
        let Edge { u, v } = edges[i];
        remaining[u] -= 1;
        remaining[v] -= 1;
        let mut found = false;
        if deg[u] < upper[u] && deg[v] < upper[v] {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push(edges[i]);
            if deg[u] + remaining[u] >= lower[u] && deg[v] + remaining[v] >= lower[v] {
                found = go(i + 1, edges, lower, upper, deg, remaining, chosen);
            }
            if !found {
                chosen.pop();
            }
            deg[u] -= 1;
            deg[v] -= 1;
        }
        if !found && deg[u] + remaining[u] >= lower[u] && deg[v] + remaining[v] >= lower[v] {
            found = go(i + 1, edges, lower, upper, deg, remaining, chosen);
        }
        remaining[u] += 1;
        remaining[v] += 1;
        found
    }

    let found = go(
        0,
        &edges,
        lower,
        upper,
        &mut deg,
        &mut remaining,
        &mut chosen,
    );
    Ok(found.then_some(chosen))
}
