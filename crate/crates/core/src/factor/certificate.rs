use serde::{Deserialize, Serialize};

use super::{delta, low_set, Star, StarForest};
use crate::graph::{Edge, Graph, VertexSet};
use crate::{Error, Result};

/// A set `S` with its low-degree set `T` and deficiency value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub delta: i64,
}

impl Violation {
    /// Recomputes `T` and `δ_G(a,b;S)` and checks both match and `δ < 0`.
    pub fn verify(&self, g: &Graph, a: usize, b: usize) -> Result<bool> {
        Ok(low_set(g, &self.s, a)? == self.t
            && delta(g, &self.s, a, b)? == self.delta
            && self.delta < 0)
    }

    /// As [`Violation::verify`] but requires `δ < bound` instead of `δ < 0`.
    pub fn verify_below(&self, g: &Graph, a: usize, b: usize, bound: i64) -> Result<bool> {
        Ok(low_set(g, &self.s, a)? == self.t
            && delta(g, &self.s, a, b)? == self.delta
            && self.delta < bound)
    }

    pub fn relabel(&self, map: &[usize]) -> Violation {
        Violation {
            s: self.s.relabel(map),
            t: self.t.relabel(map),
            delta: self.delta,
        }
    }
}

/// Evidence for or against the existence of a factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorCertificate {
    /// The existence criterion holds for every `S`; no subgraph built.
    Exists,
    /// An explicit factor.
    Factor(Vec<Edge>),
    /// An explicit star factor.
    Stars(StarForest),
    /// A set `S` at which the deficiency criterion fails.
    Violation(Violation),
    /// `G - S` has more odd components than `|S|`, so no perfect matching.
    OddComponents { s: VertexSet, odd: usize },
    /// Exhaustive search found no factor; there is no set-based witness.
    Absent,
}

impl FactorCertificate {
    pub fn exists(&self) -> bool {
        matches!(
            self,
            FactorCertificate::Exists | FactorCertificate::Factor(_) | FactorCertificate::Stars(_)
        )
    }

    /// Maps every vertex id through `map` (local label to host label).
    pub fn relabel(&self, map: &[usize]) -> FactorCertificate {
        match self {
            FactorCertificate::Factor(es) => FactorCertificate::Factor(
                es.iter().map(|e| Edge::new(map[e.u], map[e.v])).collect(),
            ),
            FactorCertificate::Stars(f) => FactorCertificate::Stars(StarForest {
                stars: f
                    .stars
                    .iter()
                    .map(|s| Star {
                        center: map[s.center],
                        leaves: s.leaves.iter().map(|&l| map[l]).collect(),
                    })
                    .collect(),
            }),
            FactorCertificate::Violation(v) => FactorCertificate::Violation(v.relabel(map)),
            FactorCertificate::OddComponents { s, odd } => FactorCertificate::OddComponents {
                s: s.relabel(map),
                odd: *odd,
            },
            other => other.clone(),
        }
    }

    /// Every vertex id mentioned by the certificate.
    pub fn vertex_ids(&self) -> Vec<usize> {
        match self {
            FactorCertificate::Exists | FactorCertificate::Absent => Vec::new(),
            FactorCertificate::Factor(es) => es.iter().flat_map(|e| [e.u, e.v]).collect(),
            FactorCertificate::Stars(f) => f
                .stars
                .iter()
                .flat_map(|s| std::iter::once(s.center).chain(s.leaves.iter().copied()))
                .collect(),
            FactorCertificate::Violation(v) => v.s.iter().chain(v.t.iter()).collect(),
            FactorCertificate::OddComponents { s, .. } => s.iter().collect(),
        }
    }

    /// Like [`FactorCertificate::relabel`], but `None` if some id falls
    /// outside `map` or maps to `usize::MAX`.
    pub fn try_relabel(&self, map: &[usize]) -> Option<FactorCertificate> {
        self.vertex_ids()
            .iter()
            .all(|&v| map.get(v).is_some_and(|&x| x != usize::MAX))
            .then(|| self.relabel(map))
    }

    /// Checks the certificate against `g` for `[a,b]`-factors. `Exists` and
    /// `Absent` carry no evidence and verify only by re-deciding, which is
    /// left to the caller; they return `true` here.
    pub fn verify(&self, g: &Graph, a: usize, b: usize) -> Result<bool> {
        match self {
            FactorCertificate::Exists | FactorCertificate::Absent => Ok(true),
            FactorCertificate::Factor(es) => Ok(degrees_within(g, es, a, b)),
            FactorCertificate::Stars(f) => Ok(a <= 1 && f.validate(g, b).is_ok()),
            FactorCertificate::Violation(v) => v.verify(g, a, b),
            FactorCertificate::OddComponents { s, odd } => {
                let counted = odd_components(g, s)?;
                Ok(a == 1 && b == 1 && counted == *odd && *odd > s.len())
            }
        }
    }
}

/// True when every listed edge is in `g`, no edge repeats, and every vertex
/// has degree in `[a,b]` in the subgraph.
pub(crate) fn degrees_within(g: &Graph, es: &[Edge], a: usize, b: usize) -> bool {
    let mut deg = vec![0usize; g.order()];
    let mut sorted = es.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for e in es {
        if !g.contains_edge(*e) {
            return false;
        }
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.iter().all(|&d| a <= d && d <= b)
}

/// Number of odd components of `G - S`.
pub(crate) fn odd_components(g: &Graph, s: &VertexSet) -> Result<usize> {
    let removed = g.indicator(s)?;
    let mut seen = removed.clone();
    let mut odd = 0;
    for start in 0..g.order() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        odd += size % 2;
    }
    Ok(odd)
}

/// Flat JSON form: `{verdict, S, T, delta, factorEdges?, stars?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CertificateRecord {
    pub verdict: String,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<VertexSet>,
    #[serde(rename = "T", default, skip_serializing_if = "Option::is_none")]
    pub t: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odd_components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor_edges: Option<Vec<Edge>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stars: Option<Vec<Star>>,
}

pub const VERDICT_EXISTS: &str = "exists";
pub const VERDICT_NOT_EXISTS: &str = "not-exists";

impl From<&FactorCertificate> for CertificateRecord {
    fn from(c: &FactorCertificate) -> Self {
        let mut r = CertificateRecord {
            verdict: if c.exists() {
                VERDICT_EXISTS
            } else {
                VERDICT_NOT_EXISTS
            }
            .to_string(),
            s: None,
            t: None,
            delta: None,
            odd_components: None,
            factor_edges: None,
            stars: None,
        };
        match c {
            FactorCertificate::Exists | FactorCertificate::Absent => {}
            FactorCertificate::Factor(es) => r.factor_edges = Some(es.clone()),
            FactorCertificate::Stars(f) => r.stars = Some(f.stars.clone()),
            FactorCertificate::Violation(v) => {
                r.s = Some(v.s.clone());
                r.t = Some(v.t.clone());
                r.delta = Some(v.delta);
            }
            FactorCertificate::OddComponents { s, odd } => {
                r.s = Some(s.clone());
                r.odd_components = Some(*odd);
                r.delta = Some(s.len() as i64 - *odd as i64);
            }
        }
        r
    }
}

impl TryFrom<CertificateRecord> for FactorCertificate {
    type Error = Error;

    fn try_from(r: CertificateRecord) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameter(format!("certificate record: {why}"));
        match r.verdict.as_str() {
            VERDICT_EXISTS => Ok(match (r.factor_edges, r.stars) {
                (Some(es), None) => FactorCertificate::Factor(es),
                (None, Some(stars)) => FactorCertificate::Stars(StarForest { stars }),
                (None, None) => FactorCertificate::Exists,
                _ => return Err(bad("both factorEdges and stars present")),
            }),
            VERDICT_NOT_EXISTS => match (r.s, r.t, r.delta, r.odd_components) {
                (Some(s), Some(t), Some(delta), None) => {
                    Ok(FactorCertificate::Violation(Violation { s, t, delta }))
                }
                (Some(s), None, _, Some(odd)) => Ok(FactorCertificate::OddComponents { s, odd }),
                (None, None, None, None) => Ok(FactorCertificate::Absent),
                _ => Err(bad("incomplete violation")),
            },
            other => Err(bad(&format!("unknown verdict {other:?}"))),
        }
    }
}

impl Serialize for FactorCertificate {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        CertificateRecord::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactorCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CertificateRecord::deserialize(d)?;
        FactorCertificate::try_from(r).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};

    #[test]
    fn json_shape_of_violation() {
        let c = FactorCertificate::Violation(Violation {
            s: VertexSet::new(),
            t: VertexSet::from([0, 3]),
            delta: -2,
        });
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"verdict":"not-exists","S":[],"T":[0,3],"delta":-2}"#);
        let back: FactorCertificate = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn json_shape_of_factor() {
        let c = FactorCertificate::Factor(vec![Edge::new(0, 1), Edge::new(2, 3)]);
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"verdict":"exists","factorEdges":[[0,1],[2,3]]}"#);
        assert_eq!(serde_json::from_str::<FactorCertificate>(&j).unwrap(), c);
    }

    #[test]
    fn malformed_records_are_rejected() {
        assert!(serde_json::from_str::<FactorCertificate>(r#"{"verdict":"maybe"}"#).is_err());
        assert!(
            serde_json::from_str::<FactorCertificate>(r#"{"verdict":"not-exists","S":[1]}"#)
                .is_err()
        );
    }

    #[test]
    fn factor_verification() {
        let k4 = complete(4);
        let good = FactorCertificate::Factor(vec![Edge::new(0, 1), Edge::new(2, 3)]);
        assert!(good.verify(&k4, 1, 1).unwrap());
        assert!(!good.verify(&k4, 2, 2).unwrap());
        let dup = FactorCertificate::Factor(vec![Edge::new(0, 1), Edge::new(0, 1)]);
        assert!(!dup.verify(&k4, 0, 2).unwrap());
        let foreign = FactorCertificate::Factor(vec![Edge::new(0, 2)]);
        assert!(!foreign.verify(&cycle(4), 0, 1).unwrap());
    }

    #[test]
    fn odd_component_count() {
        assert_eq!(odd_components(&complete(3), &VertexSet::new()).unwrap(), 1);
        assert_eq!(
            odd_components(&crate::graph::star(3), &VertexSet::from([0])).unwrap(),
            3
        );
    }

    #[test]
    fn relabel_maps_every_vertex() {
        let c = FactorCertificate::Violation(Violation {
            s: VertexSet::from([0]),
            t: VertexSet::from([1, 2]),
            delta: -1,
        });
        let map = [5, 7, 9];
        match c.relabel(&map) {
            FactorCertificate::Violation(v) => {
                assert_eq!(v.s, VertexSet::from([5]));
                assert_eq!(v.t, VertexSet::from([7, 9]));
            }
            _ => unreachable!(),
        }
    }
}
