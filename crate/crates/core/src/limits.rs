use serde::{Deserialize, Serialize};

/// Per-call enumeration caps. Exceeding any of them is an error, never a
/// silent skip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest vertex count for which every subset `S ⊆ V` is enumerated.
    pub forall_max_n: usize,
    /// Largest vertex count accepted by the brute-force toughness oracle.
    pub toughness_brute_max_n: usize,
    /// Largest vertex count for which a toughness premise is evaluated.
    pub toughness_max_n: usize,
    /// Largest edge count accepted by the brute-force factor oracle.
    pub brute_max_edges: usize,
    /// Node budget of the constructive factor search.
    pub search_budget: u64,
    /// Largest number of deletions examined by one avoidance check.
    pub max_deletions: usize,
    /// Subsets examined by a bounded violation search on graphs above
    /// `forall_max_n`. A violation found this way is still a proof.
    pub violation_search_subsets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            forall_max_n: 12,
            toughness_brute_max_n: 16,
            toughness_max_n: 40,
            brute_max_edges: 25,
            search_budget: 2_000_000,
            max_deletions: 500,
            violation_search_subsets: 20_000_000,
        }
    }
}
