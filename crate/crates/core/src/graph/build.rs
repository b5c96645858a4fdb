use super::Graph;

/// `nK₁`.
pub fn empty(n: usize) -> Graph {
    Graph::new(n)
}

/// `Kₙ`.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    g
}

/// `Pₙ` on vertices `0-1-…-(n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// `Cₙ`; for `n < 3` this degenerates to `Pₙ`.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.insert_edge(0, n - 1);
    }
    g
}

/// `K₁,ₜ` with center 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::new(leaves + 1);
    for v in 1..=leaves {
        g.insert_edge(0, v);
    }
    g
}

/// `G₁ ∪ G₂`; the vertices of `h` are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut out = Graph::new(off + h.order());
    for e in g.edges() {
        out.insert_edge(e.u, e.v);
    }
    for e in h.edges() {
        out.insert_edge(e.u + off, e.v + off);
    }
    out
}

/// `G₁ + G₂`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let mut out = disjoint_union(g, h);
    for u in 0..off {
        for v in 0..h.order() {
            out.insert_edge(u, off + v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_k1_and_independent_triple_is_claw() {
        assert_eq!(join(&complete(1), &empty(3)), star(3));
    }

    #[test]
    fn cycle_degrees() {
        let c4 = cycle(4);
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert_eq!(c4.size(), 4);
    }

    #[test]
    fn union_of_two_edges() {
        let g = disjoint_union(&complete(2), &complete(2));
        assert_eq!((g.order(), g.size(), g.isolated()), (4, 2, 0));
    }

    #[test]
    fn small_cases() {
        assert_eq!(complete(5).size(), 10);
        assert_eq!(path(1).size(), 0);
        assert_eq!(cycle(2).size(), 1);
        assert_eq!(star(0).order(), 1);
    }
}
