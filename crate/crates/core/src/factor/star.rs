//! Star factors: spanning forests whose components are stars with between
//! one and `m` edges. Such a forest exists iff a `[1,m]`-factor exists.

use serde::{Deserialize, Serialize};

use super::certificate::odd_components;
use super::{search_ab_factor, FactorCertificate, Violation};
use crate::graph::{mask_iter, Edge, Graph, VertexSet};
use crate::subsets::SizeLexSubsets;
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: usize,
    pub leaves: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarForest {
    pub stars: Vec<Star>,
}

impl StarForest {
    /// Checks that the stars are vertex-disjoint, cover every vertex, use
    /// only edges of `g`, and have between 1 and `m` leaves each.
    pub fn validate(&self, g: &Graph, m: usize) -> std::result::Result<(), String> {
        let mut seen = vec![false; g.order()];
        for star in &self.stars {
            if star.leaves.is_empty() || star.leaves.len() > m {
                return Err(format!(
                    "star at {} has {} leaves, outside [1,{m}]",
                    star.center,
                    star.leaves.len()
                ));
            }
            for &x in std::iter::once(&star.center).chain(&star.leaves) {
                if x >= g.order() {
                    return Err(format!("vertex {x} out of range"));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(format!("vertex {x} is in two stars"));
                }
            }
            if let Some(&l) = star.leaves.iter().find(|&&l| !g.has_edge(star.center, l)) {
                return Err(format!("{}-{l} is not an edge", star.center));
            }
        }
        match seen.iter().position(|&s| !s) {
            Some(v) => Err(format!("vertex {v} is not covered")),
            None => Ok(()),
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut es: Vec<Edge> = self
            .stars
            .iter()
            .flat_map(|s| s.leaves.iter().map(move |&l| Edge::new(s.center, l)))
            .collect();
        es.sort_unstable();
        es
    }
}

/// Star-factor existence. For `m >= 2`: a factor exists iff
/// `i(G-S) <= m|S|` for every `S`; the first failing `S` is returned as a
/// violation whose `T` is the isolated set and `delta = m|S| - i(G-S)`.
/// For `m = 1` a star factor is a perfect matching and the isolated-vertex
/// condition is not sufficient (the triangle passes it), so the odd
/// component condition `o(G-S) <= |S|` is checked instead.
pub fn check_star_factor(g: &Graph, m: usize, limits: &Limits) -> Result<FactorCertificate> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "star size m must be at least 1".into(),
        ));
    }
    let n = g.order();
    if n > limits.forall_max_n {
        return Err(Error::CapExceeded {
            what: "star-factor criterion vertex count",
            size: n as u64,
            cap: limits.forall_max_n as u64,
        });
    }
    for s in SizeLexSubsets::all(n) {
        let size = s.count_ones() as usize;
        if m == 1 {
            let set = VertexSet::from_mask(s);
            let odd = odd_components(g, &set)?;
            if odd > size {
                return Ok(FactorCertificate::OddComponents { s: set, odd });
            }
            continue;
        }
        let alive = g.full_mask() & !s;
        let isolated: u64 = mask_iter(alive)
            .filter(|&x| g.adj_mask(x) & alive == 0)
            .fold(0, |acc, x| acc | 1 << x);
        let i = isolated.count_ones() as usize;
        if i > m * size {
            return Ok(FactorCertificate::Violation(Violation {
                s: VertexSet::from_mask(s),
                t: VertexSet::from_mask(isolated),
                delta: (m * size) as i64 - i as i64,
            }));
        }
    }
    Ok(FactorCertificate::Exists)
}

/// Finds a `[1,m]`-factor and splits it into stars. Each component of the
/// factor gets a BFS spanning tree whose degrees are at most `m`. Vertices
/// are peeled deepest first: an uncovered vertex and all uncovered siblings
/// form a star centered at their parent, which has at most `m - 1` children
/// below a tree parent. A root left over at the end joins the star of one of
/// its children, which has room because that child has a tree parent.
pub fn find_star_factor(g: &Graph, m: usize, limits: &Limits) -> Result<Option<StarForest>> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "star size m must be at least 1".into(),
        ));
    }
    let Some(factor) = search_ab_factor(g, 1, m, limits.search_budget)? else {
        return Ok(None);
    };
    let f = Graph::from_edges(g.order(), factor.iter().map(|e| (e.u, e.v)))?;
    Ok(Some(peel_stars(&f)))
}

fn peel_stars(f: &Graph) -> StarForest {
    let n = f.order();
    let mut parent = vec![usize::MAX; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let start = order.len();
        order.push(r);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for y in f.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    children[x].push(y);
                    order.push(y);
                }
            }
        }
    }

    let mut star_of = vec![usize::MAX; n];
    let mut stars: Vec<Star> = Vec::new();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p == usize::MAX || star_of[v] != usize::MAX {
            continue;
        }
        debug_assert_eq!(star_of[p], usize::MAX);
        let leaves: Vec<usize> = children[p]
            .iter()
            .copied()
            .filter(|&c| star_of[c] == usize::MAX)
            .collect();
        let id = stars.len();
        star_of[p] = id;
        for &l in &leaves {
            star_of[l] = id;
        }
        stars.push(Star { center: p, leaves });
    }
    for r in roots {
        if star_of[r] != usize::MAX {
            continue;
        }
        let c = children[r][0];
        let id = star_of[c];
        debug_assert_eq!(stars[id].center, c);
        stars[id].leaves.push(r);
        star_of[r] = id;
    }
    for s in &mut stars {
        s.leaves.sort_unstable();
    }
    stars.sort_by_key(|s| (s.center, s.leaves.clone()));
    StarForest { stars }
}
