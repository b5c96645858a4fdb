//! The family that shows the vertex-deletion toughness bound cannot be
//! lowered: a clique `K_{m(a-1)}` completely joined to `mb+1` independent
//! vertices `v_i`, each of which also has one pendant edge `u_i v_i` into a
//! second clique `K_{(mb+1)(a-1+n)}`.

use serde::Serialize;

use super::{Graph, VertexSet};
use crate::{Error, Fraction, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalParams {
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

#[derive(Debug, Clone)]
pub struct ExtremalWitness {
    pub graph: Graph,
    pub clique_small: VertexSet,
    pub isolated_row: VertexSet,
    pub clique_large: VertexSet,
    /// `(u_i, v_i)`, with `u_i` in the large clique and `v_i` in the row.
    pub pendant_pairs: Vec<(usize, usize)>,
    pub params: ExtremalParams,
}

/// Builds the extremal graph. Vertices are laid out as small clique, then the
/// independent row, then the large clique; `u_i` is the `i`-th vertex of the
/// large clique.
pub fn build_extremal(m: usize, a: usize, b: usize, n: usize) -> Result<ExtremalWitness> {
    if m < 1 || a < 1 || a >= b || n < 1 {
        return Err(Error::InvalidParameter(format!(
            "extremal family needs m >= 1, 1 <= a < b, n >= 1 (got m={m}, a={a}, b={b}, n={n})"
        )));
    }
    let small = m * (a - 1);
    let row = m * b + 1;
    let large = row * (a - 1 + n);
    let mut g = Graph::new(small + row + large);

    let small_range = 0..small;
    let row_range = small..small + row;
    let large_range = small + row..small + row + large;

    for x in small_range.clone() {
        for y in x + 1..small {
            g.insert_edge(x, y);
        }
        for v in row_range.clone() {
            g.insert_edge(x, v);
        }
    }
    for x in large_range.clone() {
        for y in x + 1..large_range.end {
            g.insert_edge(x, y);
        }
    }
    let pendant_pairs: Vec<(usize, usize)> = (0..row)
        .map(|i| (large_range.start + i, row_range.start + i))
        .collect();
    for &(u, v) in &pendant_pairs {
        g.insert_edge(u, v);
    }

    Ok(ExtremalWitness {
        graph: g,
        clique_small: small_range.collect(),
        isolated_row: row_range.collect(),
        clique_large: large_range.collect(),
        pendant_pairs,
        params: ExtremalParams { m, a, b, n },
    })
}

impl ExtremalWitness {
    /// Both cliques; deleting them isolates the whole row.
    pub fn cut_set(&self) -> VertexSet {
        self.clique_small
            .iter()
            .chain(self.clique_large.iter())
            .collect()
    }

    /// `|S| / i(H-S)` for [`cut_set`](Self::cut_set), measured on the graph.
    pub fn cut_ratio(&self) -> Result<Fraction> {
        let s = self.cut_set();
        let i = self.graph.isolated_count(&s)?;
        Ok(Fraction::new(s.len() as i64, i as i64))
    }

    /// `((mb+1)(a-1+n) + m(a-1)) / (mb+1)` evaluated from the parameters.
    pub fn formula_ratio(&self) -> Fraction {
        let ExtremalParams { m, a, b, n } = self.params;
        let row = (m * b + 1) as i64;
        Fraction::new(row * (a - 1 + n) as i64 + (m * (a - 1)) as i64, row)
    }

    /// The first `n` vertices of the large clique that are not pendant
    /// endpoints `u_i`. Fails when the large clique has no room (`a = 1`,
    /// `n = 1`).
    pub fn avoided_vertices(&self) -> Result<VertexSet> {
        let n = self.params.n;
        let pendant: Vec<usize> = self.pendant_pairs.iter().map(|p| p.0).collect();
        let v0: VertexSet = self
            .clique_large
            .iter()
            .filter(|v| !pendant.contains(v))
            .take(n)
            .collect();
        if v0.len() < n {
            return Err(Error::InvalidParameter(format!(
                "large clique has only {} vertices outside the pendant endpoints, need {n}",
                v0.len()
            )));
        }
        Ok(v0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_instance_sizes_and_degrees() {
        let h = build_extremal(1, 2, 3, 1).unwrap();
        assert_eq!(h.graph.order(), 13);
        assert_eq!(
            (
                h.clique_small.len(),
                h.isolated_row.len(),
                h.clique_large.len()
            ),
            (1, 4, 8)
        );
        for v in h.isolated_row.iter() {
            assert_eq!(h.graph.degree(v), 2);
        }
    }

    #[test]
    fn part_sizes_for_m2() {
        let h = build_extremal(2, 2, 3, 1).unwrap();
        assert_eq!(
            (
                h.clique_small.len(),
                h.isolated_row.len(),
                h.clique_large.len()
            ),
            (2, 7, 14)
        );
    }

    #[test]
    fn a_equal_one_has_no_small_clique() {
        let h = build_extremal(2, 1, 3, 2).unwrap();
        assert!(h.clique_small.is_empty());
        for (u, v) in &h.pendant_pairs {
            assert_eq!(h.graph.degree(*v), 1);
            assert!(h.graph.has_edge(*u, *v));
        }
    }

    #[test]
    fn structure_invariants() {
        for (m, a, b, n) in [(1, 2, 3, 1), (2, 3, 4, 1), (3, 2, 4, 2)] {
            let h = build_extremal(m, a, b, n).unwrap();
            let g = &h.graph;
            for x in h.clique_small.iter() {
                assert!(h.isolated_row.iter().all(|v| g.has_edge(x, v)));
            }
            for &(u, v) in &h.pendant_pairs {
                assert_eq!(g.degree(v), m * (a - 1) + 1);
                let outside: Vec<usize> = g
                    .neighbors(v)
                    .filter(|&y| !h.clique_small.contains(y))
                    .collect();
                assert_eq!(outside, vec![u]);
            }
            assert_eq!(h.cut_ratio().unwrap(), h.formula_ratio());
        }
    }

    #[test]
    fn formula_ratio_values() {
        assert_eq!(
            build_extremal(1, 2, 3, 1).unwrap().formula_ratio(),
            Fraction::new(9, 4)
        );
        assert_eq!(
            build_extremal(2, 2, 3, 1).unwrap().formula_ratio(),
            Fraction::new(16, 7)
        );
        assert_eq!(
            build_extremal(3, 2, 3, 1).unwrap().formula_ratio(),
            Fraction::new(23, 10)
        );
    }

    #[test]
    fn avoided_vertices_skip_pendant_endpoints() {
        let h = build_extremal(1, 2, 3, 2).unwrap();
        let v0 = h.avoided_vertices().unwrap();
        assert_eq!(v0.len(), 2);
        for v in v0.iter() {
            assert!(h.clique_large.contains(v));
            assert!(h.pendant_pairs.iter().all(|p| p.0 != v));
        }
        assert!(build_extremal(1, 1, 2, 1)
            .unwrap()
            .avoided_vertices()
            .is_err());
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(build_extremal(0, 2, 3, 1).is_err());
        assert!(build_extremal(1, 3, 3, 1).is_err());
        assert!(build_extremal(1, 2, 3, 0).is_err());
    }
}
