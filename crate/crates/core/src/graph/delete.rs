use serde::{Deserialize, Serialize};

use super::{Edge, Graph, VertexSet};
use crate::{Error, Result};

/// The object removed from a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionSpec {
    Vertices(VertexSet),
    Edges(Vec<Edge>),
    Matching(Vec<Edge>),
    Edge(Edge),
}

/// Result of a deletion. `original[i]` is the host label of vertex `i`;
/// the remapping is order preserving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deleted {
    pub graph: Graph,
    pub original: Vec<usize>,
}

impl Deleted {
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.relabel(&self.original)
    }

    pub fn lift_edge(&self, e: Edge) -> Edge {
        Edge::new(self.original[e.u], self.original[e.v])
    }

    /// Host label to local label.
    pub fn lower(&self, v: usize) -> Option<usize> {
        self.original.binary_search(&v).ok()
    }

    pub fn lower_set(&self, s: &VertexSet) -> Option<VertexSet> {
        s.iter().map(|v| self.lower(v)).collect()
    }
}

/// Removes `spec` from `g`. Vertex deletion drops incident edges and
/// renumbers survivors in order; edge deletions keep every vertex.
pub fn delete(g: &Graph, spec: &DeletionSpec) -> Result<Deleted> {
    match spec {
        DeletionSpec::Vertices(vs) => {
            vs.check_range(g.order())?;
            let original: Vec<usize> = (0..g.order()).filter(|&v| !vs.contains(v)).collect();
            let mut local = vec![usize::MAX; g.order()];
            for (i, &v) in original.iter().enumerate() {
                local[v] = i;
            }
            let mut h = Graph::new(original.len());
            for e in g.edges() {
                if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                    h.insert_edge(local[e.u], local[e.v]);
                }
            }
            Ok(Deleted { graph: h, original })
        }
        DeletionSpec::Edge(e) => delete_edges(g, std::slice::from_ref(e)),
        DeletionSpec::Edges(es) => delete_edges(g, es),
        DeletionSpec::Matching(es) => {
            let mut used = vec![false; g.order()];
            for e in es {
                g.check_vertex(e.v)?;
                for x in [e.u, e.v] {
                    if used[x] {
                        return Err(Error::NotAMatching(x));
                    }
                    used[x] = true;
                }
            }
            delete_edges(g, es)
        }
    }
}

fn delete_edges(g: &Graph, es: &[Edge]) -> Result<Deleted> {
    let mut h = g.clone();
    for e in es {
        if !h.remove_edge(e.u, e.v) {
            return if g.contains_edge(*e) {
                Err(Error::DuplicateEdge(e.u, e.v))
            } else {
                Err(Error::NotAnEdge(e.u, e.v))
            };
        }
    }
    Ok(Deleted {
        graph: h,
        original: (0..g.order()).collect(),
    })
}
