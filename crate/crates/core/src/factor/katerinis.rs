//! Weighted independent/cover pairs.
//!
//! Given a graph `H` and classes `S_1, …, S_{a-1}` partitioning `V(H)` with
//! `d_H(x) <= j` on `S_j`, there is a maximal independent set `I` whose
//! complement `C` (a cover) satisfies
//! `Σ (a-j)|S_j ∩ C| <= Σ j(a-j)|S_j ∩ I|`. The search below enumerates
//! maximal independent sets and returns the first one that satisfies the
//! inequality; at desk scale this is a complete decision procedure.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KaterinisPair {
    pub independent: VertexSet,
    pub cover: VertexSet,
    /// `i_j = |S_j ∩ I|`, index `j - 1`.
    pub i_counts: Vec<usize>,
    /// `c_j = |S_j ∩ C|`, index `j - 1`.
    pub c_counts: Vec<usize>,
    /// `Σ (a-j) c_j`.
    pub lhs: u64,
    /// `Σ j(a-j) i_j`.
    pub rhs: u64,
}

impl KaterinisPair {
    /// Re-checks maximal independence, the cover property, disjointness and
    /// the inequality against `h`.
    pub fn verify(&self, h: &Graph, classes: &[usize], a: usize) -> bool {
        let n = h.order();
        let independent = self
            .independent
            .iter()
            .all(|x| self.independent.iter().all(|y| !h.has_edge(x, y)));
        let maximal = (0..n).all(|x| {
            self.independent.contains(x) || h.neighbors(x).any(|y| self.independent.contains(y))
        });
        let disjoint = self.independent.iter().all(|x| !self.cover.contains(x));
        let covers = h
            .edges()
            .iter()
            .all(|e| self.cover.contains(e.u) || self.cover.contains(e.v));
        let (lhs, rhs, _, _) = weigh(
            classes,
            a,
            &self.independent.to_mask(),
            &self.cover.to_mask(),
        );
        independent
            && maximal
            && disjoint
            && covers
            && lhs == self.lhs
            && rhs == self.rhs
            && lhs <= rhs
    }
}

fn weigh(classes: &[usize], a: usize, i: &u64, c: &u64) -> (u64, u64, Vec<usize>, Vec<usize>) {
    let mut ic = vec![0usize; a.saturating_sub(1)];
    let mut cc = vec![0usize; a.saturating_sub(1)];
    for (x, &j) in classes.iter().enumerate() {
        if i >> x & 1 == 1 {
            ic[j - 1] += 1;
        }
        if c >> x & 1 == 1 {
            cc[j - 1] += 1;
        }
    }
    let mut lhs = 0u64;
    let mut rhs = 0u64;
    for j in 1..a {
        lhs += ((a - j) * cc[j - 1]) as u64;
        rhs += (j * (a - j) * ic[j - 1]) as u64;
    }
    (lhs, rhs, ic, cc)
}

/// Class `j = max(1, d_H(x))` for every vertex; fails if some degree
/// exceeds `a - 1`.
pub fn degree_ceiling_classes(h: &Graph, a: usize) -> Result<Vec<usize>> {
    (0..h.order())
        .map(|x| {
            let d = h.degree(x);
            if a < 2 || d > a - 1 {
                Err(Error::InvalidPartition {
                    vertex: x,
                    reason: format!("degree {d} exceeds a-1 = {}", a.saturating_sub(1)),
                })
            } else {
                Ok(d.max(1))
            }
        })
        .collect()
}

/// `classes[x] = j` places `x` in `S_j`.
pub fn find_katerinis_pair(
    h: &Graph,
    classes: &[usize],
    a: usize,
    limits: &Limits,
) -> Result<KaterinisPair> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!("need a >= 2 (got {a})")));
    }
    let n = h.order();
    if classes.len() != n {
        return Err(Error::InvalidPartition {
            vertex: classes.len().min(n),
            reason: format!("partition lists {} vertices, graph has {n}", classes.len()),
        });
    }
    for (x, &j) in classes.iter().enumerate() {
        if j < 1 || j > a - 1 {
            return Err(Error::InvalidPartition {
                vertex: x,
                reason: format!("class {j} outside 1..={}", a - 1),
            });
        }
        if h.degree(x) > j {
            return Err(Error::InvalidPartition {
                vertex: x,
                reason: format!("degree {} exceeds its class {j}", h.degree(x)),
            });
        }
    }
    if n > limits.forall_max_n.max(20) {
        return Err(Error::CapExceeded {
            what: "independent-set enumeration vertex count",
            size: n as u64,
            cap: limits.forall_max_n.max(20) as u64,
        });
    }
    let full = h.full_mask();
    let mut found = None;
    enumerate_maximal(h, 0, 0, 0, &mut |i| {
        let c = full & !i;
        let (lhs, rhs, ic, cc) = weigh(classes, a, &i, &c);
        if lhs <= rhs {
            found = Some(KaterinisPair {
                independent: VertexSet::from_mask(i),
                cover: VertexSet::from_mask(c),
                i_counts: ic,
                c_counts: cc,
                lhs,
                rhs,
            });
            true
        } else {
            false
        }
    });
    found.ok_or(Error::KaterinisExhausted)
}

/// Visits maximal independent sets by deciding vertices in order: take `v`
/// when no chosen neighbor blocks it, or skip it. `blocked` holds the
/// neighbors of chosen vertices. Returns true once `visit` does.
fn enumerate_maximal(
    h: &Graph,
    v: usize,
    chosen: u64,
    blocked: u64,
    visit: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if v == h.order() {
        // Skipped vertices must be dominated for maximality.
        let undominated = h.full_mask() & !chosen & !blocked;
        return undominated == 0 && visit(chosen);
    }
    if blocked >> v & 1 == 0 {
        let nb = h.adj_mask(v);
        if enumerate_maximal(h, v + 1, chosen | 1 << v, blocked | nb, visit) {
            return true;
        }
        // Skipping v only works if a later vertex can dominate it.
        if v == 63 || nb >> (v + 1) == 0 {
            return false;
        }
    }
    enumerate_maximal(h, v + 1, chosen, blocked, visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, empty, path};

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn path_with_middle_in_second_class() {
        let h = path(3);
        let classes = [1, 2, 1];
        let p = find_katerinis_pair(&h, &classes, 3, &l()).unwrap();
        assert_eq!(p.independent, VertexSet::from([0, 2]));
        assert_eq!(p.cover, VertexSet::from([1]));
        assert_eq!((p.lhs, p.rhs), (1, 4));
        assert!(p.verify(&h, &classes, 3));
    }

    #[test]
    fn edgeless_graph_takes_everything() {
        let h = empty(4);
        let p = find_katerinis_pair(&h, &[1; 4], 2, &l()).unwrap();
        assert_eq!(p.independent.len(), 4);
        assert!(p.cover.is_empty());
        assert_eq!((p.lhs, p.rhs), (0, 4));
    }

    #[test]
    fn single_edge_in_second_class() {
        let h = complete(2);
        let p = find_katerinis_pair(&h, &[2, 2], 3, &l()).unwrap();
        assert_eq!(p.independent.len(), 1);
        assert_eq!((p.lhs, p.rhs), (1, 2));
    }

    #[test]
    fn invalid_partitions_name_the_vertex() {
        let h = path(3);
        assert!(matches!(
            find_katerinis_pair(&h, &[1, 1, 1], 3, &l()),
            Err(Error::InvalidPartition { vertex: 1, .. })
        ));
        assert!(matches!(
            find_katerinis_pair(&h, &[1, 3, 1], 3, &l()),
            Err(Error::InvalidPartition { vertex: 1, .. })
        ));
        assert!(degree_ceiling_classes(&complete(4), 3).is_err());
        assert_eq!(degree_ceiling_classes(&path(3), 3).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn enumeration_yields_exactly_the_maximal_sets() {
        for g in [path(4), complete(3), crate::graph::cycle(5), empty(3)] {
            let mut got = Vec::new();
            enumerate_maximal(&g, 0, 0, 0, &mut |i| {
                got.push(i);
                false
            });
            let mut want = Vec::new();
            for s in 0..1u64 << g.order() {
                let indep = crate::graph::mask_iter(s).all(|x| g.adj_mask(x) & s == 0);
                let dominated =
                    crate::graph::mask_iter(g.full_mask() & !s).all(|x| g.adj_mask(x) & s != 0);
                if indep && dominated {
                    want.push(s);
                }
            }
            got.sort_unstable();
            assert_eq!(got, want, "{g:?}");
        }
    }
}
