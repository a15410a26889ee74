//! Seeded random posets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::poset::{build_poset, EventId, Poset};
use crate::Rational;

/// Random DAG: with events in a shuffled order, each forward pair is related
/// with probability `density`.
pub fn generate_random(seed: u64, n_events: usize, density: f64) -> Result<Poset> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidSpec(format!(
            "edge density {density} is outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n_events).collect();
    order.shuffle(&mut rng);
    let mut relations = Vec::new();
    for i in 0..n_events {
        for j in i + 1..n_events {
            if rng.gen_bool(density) {
                relations.push((EventId(order[i]), EventId(order[j])));
            }
        }
    }
    build_poset(n_events, &relations)
}

/// A longest chain, valued `0, 1, 2, ...` and named `longest`.
pub fn longest_chain(poset: &Poset) -> Result<ValuedChain> {
    let n = poset.event_count();
    if n == 0 {
        return Err(Error::EmptyChain);
    }
    let mut best = vec![1usize; n];
    let mut prev: Vec<Option<EventId>> = vec![None; n];
    let mut succ: Vec<Vec<EventId>> = vec![Vec::new(); n];
    for &(a, b) in poset.cover_edges() {
        succ[a.0].push(b);
    }
    for &a in poset.topological_order() {
        for &b in &succ[a.0] {
            if best[a.0] + 1 > best[b.0] {
                best[b.0] = best[a.0] + 1;
                prev[b.0] = Some(a);
            }
        }
    }
    let end = (0..n)
        .max_by_key(|&i| (best[i], std::cmp::Reverse(i)))
        .expect("nonempty");
    let mut elements = vec![EventId(end)];
    while let Some(p) = prev[elements.last().expect("nonempty").0] {
        elements.push(p);
    }
    elements.reverse();
    let chain = Chain::new(poset, elements)?.named("longest");
    ValuedChain::arithmetic(chain, Rational::from(0), Rational::from(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Comparability;

    #[test]
    fn density_extremes() {
        let p = generate_random(1, 10, 0.0).unwrap();
        assert!(p.cover_edges().is_empty());
        let t = generate_random(1, 10, 1.0).unwrap();
        for a in t.events() {
            for b in t.events() {
                assert_ne!(t.comparability(a, b).unwrap(), Comparability::Incomparable);
            }
        }
        assert_eq!(longest_chain(&t).unwrap().len(), 10);
    }

    #[test]
    fn seeded() {
        let a = generate_random(42, 30, 0.2).unwrap();
        let b = generate_random(42, 30, 0.2).unwrap();
        assert!(a.same_closure(&b));
        assert!(generate_random(1, 3, 1.5).is_err());
    }
}
