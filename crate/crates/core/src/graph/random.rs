use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Fraction, Result};

/// `G(n, p)` with exact rational `p`: every unordered pair is an edge
/// independently with probability `p`. The stream is ChaCha8 seeded with
/// `seed`, so the output is identical on every platform.
pub fn generate_random(n: usize, p: Fraction, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate_with(n, p, &mut rng)
}

/// Same as [`generate_random`] but drawing from a caller-owned stream.
pub fn generate_with<R: Rng>(n: usize, p: Fraction, rng: &mut R) -> Result<Graph> {
    if p < Fraction::zero() || p > Fraction::one() {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let (num, den) = (p.numer() as u64, p.denom() as u64);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..den) < num {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn extreme_probabilities() {
        for seed in [0, 7, 99] {
            assert_eq!(
                generate_random(5, Fraction::zero(), seed).unwrap().size(),
                0
            );
            assert_eq!(
                generate_random(5, Fraction::one(), seed).unwrap(),
                complete(5)
            );
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let p = Fraction::new(1, 2);
        let a = generate_random(10, p, 42).unwrap();
        let b = generate_random(10, p, 42).unwrap();
        assert_eq!(a, b);
        let c = generate_random(10, p, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(generate_random(3, Fraction::new(3, 2), 0).is_err());
        assert!(generate_random(3, Fraction::new(-1, 2), 0).is_err());
    }
}
