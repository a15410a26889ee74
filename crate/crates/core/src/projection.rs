//! Forward and backward projection of events onto chains.
//!
//! The chain elements that include `x` form a suffix of the chain, and the
//! elements included by `x` form a prefix, so both projections are a binary
//! search over closure queries.

use std::fmt;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::poset::{EventId, Poset};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionCase {
    /// No chain element is comparable with the event.
    Incomparable,
    BackwardOnly,
    ForwardOnly,
    Both,
}

impl ProjectionCase {
    pub fn letter(self) -> char {
        match self {
            ProjectionCase::Incomparable => 'A',
            ProjectionCase::BackwardOnly => 'B',
            ProjectionCase::ForwardOnly => 'C',
            ProjectionCase::Both => 'D',
        }
    }
}

impl fmt::Display for ProjectionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionOutcome {
    pub case: ProjectionCase,
    /// Least chain element including the event.
    pub forward: Option<EventId>,
    /// Greatest chain element included by the event.
    pub backward: Option<EventId>,
    pub forward_index: Option<usize>,
    pub backward_index: Option<usize>,
}

/// Chain position of the forward projection of `x`. Ids are not checked.
pub fn forward_index(poset: &Poset, x: EventId, chain: &Chain) -> Option<usize> {
    let elements = chain.elements();
    let i = elements.partition_point(|&p| !poset.leq_unchecked(x, p));
    (i < elements.len()).then_some(i)
}

/// Chain position of the backward projection of `x`. Ids are not checked.
pub fn backward_index(poset: &Poset, x: EventId, chain: &Chain) -> Option<usize> {
    let elements = chain.elements();
    elements
        .partition_point(|&p| poset.leq_unchecked(p, x))
        .checked_sub(1)
}

pub fn forward_project(poset: &Poset, x: EventId, chain: &Chain) -> Result<Option<EventId>> {
    poset.check(x)?;
    Ok(forward_index(poset, x, chain).map(|i| chain.get(i)))
}

pub fn backward_project(poset: &Poset, x: EventId, chain: &Chain) -> Result<Option<EventId>> {
    poset.check(x)?;
    Ok(backward_index(poset, x, chain).map(|i| chain.get(i)))
}

pub fn classify_projection(poset: &Poset, x: EventId, chain: &Chain) -> Result<ProjectionOutcome> {
    poset.check(x)?;
    let fi = forward_index(poset, x, chain);
    let bi = backward_index(poset, x, chain);
    let case = match (fi.is_some(), bi.is_some()) {
        (false, false) => ProjectionCase::Incomparable,
        (false, true) => ProjectionCase::BackwardOnly,
        (true, false) => ProjectionCase::ForwardOnly,
        (true, true) => ProjectionCase::Both,
    };
    Ok(ProjectionOutcome {
        case,
        forward: fi.map(|i| chain.get(i)),
        backward: bi.map(|i| chain.get(i)),
        forward_index: fi,
        backward_index: bi,
    })
}

/// Chain-based coordinates `(v(Px), v(P̄x))` of an event.
pub fn quantify_event(
    poset: &Poset,
    x: EventId,
    chain: &ValuedChain,
) -> Result<(Rational, Rational)> {
    poset.check(x)?;
    match (
        forward_index(poset, x, chain),
        backward_index(poset, x, chain),
    ) {
        (Some(f), Some(b)) => Ok((chain.value(f), chain.value(b))),
        _ => Err(Error::NotQuantifiable {
            event: x,
            chain: chain.name().to_string(),
        }),
    }
}

/// Both projection indices, or a `MissingProjection` error naming the absent one.
pub fn both_indices(poset: &Poset, x: EventId, chain: &Chain) -> Result<(usize, usize)> {
    poset.check(x)?;
    let missing = |direction| Error::MissingProjection {
        event: x,
        chain: chain.name().to_string(),
        direction,
    };
    let f = forward_index(poset, x, chain).ok_or_else(|| missing("forward"))?;
    let b = backward_index(poset, x, chain).ok_or_else(|| missing("backward"))?;
    Ok((f, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::make_valued_chain;
    use crate::poset::build_poset;

    fn ids(v: &[usize]) -> Vec<EventId> {
        v.iter().map(|&i| EventId(i)).collect()
    }

    // chain 0 < 1 < 2 < 3, with 4 between 0 and 2, 5 above 3, 6 below 1, 7 isolated
    fn sample() -> (Poset, ValuedChain) {
        let rels = [(0, 1), (1, 2), (2, 3), (0, 4), (4, 2), (3, 5), (6, 1)];
        let rels: Vec<_> = rels
            .iter()
            .map(|&(a, b)| (EventId(a), EventId(b)))
            .collect();
        let p = build_poset(8, &rels).unwrap();
        let c = make_valued_chain(
            &p,
            ids(&[0, 1, 2, 3]),
            (1..=4).map(Rational::from).collect(),
        )
        .unwrap()
        .named("P");
        (p, c)
    }

    #[test]
    fn chain_elements_project_to_themselves() {
        let (p, c) = sample();
        for &e in c.elements() {
            let out = classify_projection(&p, e, &c).unwrap();
            assert_eq!(out.forward, Some(e));
            assert_eq!(out.backward, Some(e));
            assert_eq!(out.case, ProjectionCase::Both);
        }
        assert_eq!(
            quantify_event(&p, EventId(3), &c).unwrap(),
            (Rational::from(4), Rational::from(4))
        );
    }

    #[test]
    fn cases() {
        let (p, c) = sample();
        let d = classify_projection(&p, EventId(4), &c).unwrap();
        assert_eq!(d.case, ProjectionCase::Both);
        assert_eq!(
            (d.forward, d.backward),
            (Some(EventId(2)), Some(EventId(0)))
        );

        let b = classify_projection(&p, EventId(5), &c).unwrap();
        assert_eq!(b.case, ProjectionCase::BackwardOnly);
        assert_eq!(b.backward, Some(EventId(3)));

        let cc = classify_projection(&p, EventId(6), &c).unwrap();
        assert_eq!(cc.case, ProjectionCase::ForwardOnly);
        assert_eq!(cc.forward, Some(EventId(1)));

        let a = classify_projection(&p, EventId(7), &c).unwrap();
        assert_eq!(a.case, ProjectionCase::Incomparable);
        assert_eq!((a.forward, a.backward), (None, None));
    }

    #[test]
    fn unquantifiable_outside_patch() {
        let (p, c) = sample();
        assert!(matches!(
            quantify_event(&p, EventId(6), &c),
            Err(Error::NotQuantifiable { .. })
        ));
        assert!(matches!(
            forward_project(&p, EventId(99), &c),
            Err(Error::InvalidId { .. })
        ));
    }
}
