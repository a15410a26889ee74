//! `N` two-element chains where every lower element precedes every upper one.

use crate::chain::{make_valued_chain, ValuedChain};
use crate::error::{Error, Result};
use crate::harness::{Geometry, Source};
use crate::poset::{build_poset, EventId, Poset};
use crate::Rational;

#[derive(Debug, Clone)]
pub struct Simplex {
    pub poset: Poset,
    /// `C1 .. CN`, each `x_i < y_i` valued 0 and 1.
    pub chains: Vec<ValuedChain>,
    pub n: usize,
}

impl Simplex {
    pub fn lower(&self, i: usize) -> EventId {
        EventId(i)
    }

    pub fn upper(&self, i: usize) -> EventId {
        EventId(self.n + i)
    }

    pub fn into_source(self, name: impl Into<String>) -> Source {
        let n = self.n;
        let labels = (0..2 * n)
            .map(|i| {
                if i < n {
                    format!("x{}", i + 1)
                } else {
                    format!("y{}", i - n + 1)
                }
            })
            .collect();
        Source {
            name: name.into(),
            poset: self.poset,
            chains: self.chains,
            labels,
            geometry: Geometry::Simplex,
        }
    }
}

/// Events `x_i = i` and `y_i = N + i`, with `x_j <= y_i` for all `i, j`.
pub fn generate_simplex(n: usize) -> Result<Simplex> {
    if n == 0 {
        return Err(Error::InvalidSpec(
            "simplex needs at least one chain".into(),
        ));
    }
    let relations: Vec<_> = (0..n)
        .flat_map(|j| (0..n).map(move |i| (EventId(j), EventId(n + i))))
        .collect();
    let poset = build_poset(2 * n, &relations)?;
    let chains = (0..n)
        .map(|i| {
            make_valued_chain(
                &poset,
                vec![EventId(i), EventId(n + i)],
                vec![Rational::from(0), Rational::from(1)],
            )
            .map(|c| c.named(format!("C{}", i + 1)))
        })
        .collect::<Result<_>>()?;
    Ok(Simplex { poset, chains, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::CoordinatedPair;

    #[test]
    fn pair_distance_is_one() {
        let s = generate_simplex(2).unwrap();
        let pair = CoordinatedPair::new(&s.poset, &s.chains[0], &s.chains[1]).unwrap();
        assert_eq!(pair.distance().unwrap(), Rational::from(-1));
    }

    #[test]
    fn single_chain() {
        let s = generate_simplex(1).unwrap();
        assert_eq!(s.chains.len(), 1);
        assert_eq!(s.poset.event_count(), 2);
        assert!(generate_simplex(0).is_err());
    }
}
