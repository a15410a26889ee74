//! Finite partially ordered sets of events.
//!
//! A [`Poset`] is built once from a list of influence relations and is frozen
//! afterwards. The reflexive-transitive closure is stored as a bit matrix in
//! both directions, so `leq` is a single bit probe and the order dual is a swap.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Default upper bound on the number of events a poset may hold.
pub const DEFAULT_MAX_EVENTS: usize = 4096;

/// Dense index of an event inside a [`Poset`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EventId(pub usize);

impl EventId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EventId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for EventId {
    fn from(i: usize) -> Self {
        EventId(i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparability {
    Less,
    Equal,
    Greater,
    Incomparable,
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_events: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_events: DEFAULT_MAX_EVENTS,
        }
    }
}

#[derive(Clone)]
pub struct Poset {
    n: usize,
    // up[x] holds every y with x <= y; down[y] holds every x with x <= y.
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    covers: Vec<(EventId, EventId)>,
    topo: Vec<EventId>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("events", &self.n)
            .field("covers", &self.covers)
            .finish()
    }
}

/// Builds a poset with the default size cap.
pub fn build_poset(event_count: usize, relations: &[(EventId, EventId)]) -> Result<Poset> {
    Poset::build(event_count, relations, BuildOptions::default())
}

impl Poset {
    /// Builds the poset generated by `relations`, where `(a, b)` reads "a influences b".
    ///
    /// Redundant relations (already implied, or `(a, a)`) are accepted.
    pub fn build(
        event_count: usize,
        relations: &[(EventId, EventId)],
        options: BuildOptions,
    ) -> Result<Poset> {
        if event_count > options.max_events {
            return Err(Error::TooLarge {
                requested: event_count,
                cap: options.max_events,
            });
        }
        let n = event_count;
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in relations {
            for id in [a, b] {
                if id.0 >= n {
                    return Err(Error::InvalidId {
                        id: id.0,
                        event_count: n,
                    });
                }
            }
            if a != b {
                succ[a.0].push(b.0);
            }
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }

        let topo = topological_order(n, &succ)?;

        let mut up: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
        for &x in topo.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            for &y in &succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }

        let mut down: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }

        let covers = covering_pairs(&up);

        Ok(Poset {
            n,
            up,
            down,
            covers,
            topo: topo.into_iter().map(EventId).collect(),
        })
    }

    pub fn event_count(&self) -> usize {
        self.n
    }

    pub fn events(&self) -> impl Iterator<Item = EventId> + '_ {
        (0..self.n).map(EventId)
    }

    pub fn check(&self, id: EventId) -> Result<()> {
        if id.0 < self.n {
            Ok(())
        } else {
            Err(Error::InvalidId {
                id: id.0,
                event_count: self.n,
            })
        }
    }

    /// `x <= y` in the reflexive-transitive closure.
    pub fn leq(&self, x: EventId, y: EventId) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.leq_unchecked(x, y))
    }

    /// Same as [`Poset::leq`] without bounds checking the ids.
    ///
    /// Panics if either id is out of range.
    #[inline]
    pub fn leq_unchecked(&self, x: EventId, y: EventId) -> bool {
        self.up[x.0].contains(y.0)
    }

    pub fn lt(&self, x: EventId, y: EventId) -> bool {
        x != y && self.leq_unchecked(x, y)
    }

    pub fn comparability(&self, x: EventId, y: EventId) -> Result<Comparability> {
        let forward = self.leq(x, y)?;
        let backward = self.leq(y, x)?;
        Ok(match (forward, backward) {
            (true, true) => Comparability::Equal,
            (true, false) => Comparability::Less,
            (false, true) => Comparability::Greater,
            (false, false) => Comparability::Incomparable,
        })
    }

    pub fn is_incomparable(&self, x: EventId, y: EventId) -> bool {
        !self.leq_unchecked(x, y) && !self.leq_unchecked(y, x)
    }

    /// Cover relation, i.e. the transitive reduction, sorted.
    pub fn cover_edges(&self) -> &[(EventId, EventId)] {
        &self.covers
    }

    pub fn transitive_reduction(&self) -> Vec<(EventId, EventId)> {
        self.covers.clone()
    }

    /// A linear extension of the order.
    pub fn topological_order(&self) -> &[EventId] {
        &self.topo
    }

    /// Every `y` with `x <= y`, in index order.
    pub fn up_set(&self, x: EventId) -> impl Iterator<Item = EventId> + '_ {
        self.up[x.0].ones().map(EventId)
    }

    /// Every `y` with `y <= x`, in index order.
    pub fn down_set(&self, x: EventId) -> impl Iterator<Item = EventId> + '_ {
        self.down[x.0].ones().map(EventId)
    }

    /// The order dual: `x <= y` here iff `y <= x` in the result.
    pub fn dual(&self) -> Poset {
        let mut covers: Vec<_> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        covers.sort_unstable();
        Poset {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            covers,
            topo: self.topo.iter().rev().copied().collect(),
        }
    }

    /// Confirms the stored closure is reflexive, antisymmetric and transitive.
    pub fn check_order_axioms(&self) -> std::result::Result<(), String> {
        for x in 0..self.n {
            if !self.up[x].contains(x) {
                return Err(format!("{x} is not below itself"));
            }
            for y in self.up[x].ones() {
                if y != x && self.up[y].contains(x) {
                    return Err(format!("{x} <= {y} <= {x} with {x} != {y}"));
                }
                if !self.up[y].is_subset(&self.up[x]) {
                    let z = self.up[y]
                        .difference(&self.up[x])
                        .next()
                        .expect("not a subset");
                    return Err(format!("{x} <= {y} <= {z} but not {x} <= {z}"));
                }
            }
        }
        Ok(())
    }

    /// True when both posets have the same events and the same closure.
    pub fn same_closure(&self, other: &Poset) -> bool {
        self.n == other.n && self.up == other.up
    }
}

fn topological_order(n: usize, succ: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut indegree = vec![0usize; n];
    for s in succ {
        for &y in s {
            indegree[y] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in &succ[x] {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                queue.push_back(y);
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    Err(Error::CycleDetected {
        cycle: cycle_witness(n, succ, &indegree),
    })
}

// Every node left with positive indegree after Kahn's algorithm has a
// predecessor that is also left over, so walking predecessors must revisit.
fn cycle_witness(n: usize, succ: &[Vec<usize>], indegree: &[usize]) -> Vec<EventId> {
    let mut pred: Vec<Option<usize>> = vec![None; n];
    for (x, s) in succ.iter().enumerate() {
        if indegree[x] == 0 {
            continue;
        }
        for &y in s {
            if indegree[y] > 0 && pred[y].is_none() {
                pred[y] = Some(x);
            }
        }
    }
    let start = (0..n).find(|&x| indegree[x] > 0).expect("cycle exists");
    let mut seen = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut cur = start;
    while seen[cur] == usize::MAX {
        seen[cur] = walk.len();
        walk.push(cur);
        cur = pred[cur].expect("leftover node has a leftover predecessor");
    }
    let mut cycle: Vec<EventId> = walk[seen[cur]..]
        .iter()
        .rev()
        .map(|&x| EventId(x))
        .collect();
    cycle.push(cycle[0]);
    cycle
}

fn covering_pairs(up: &[FixedBitSet]) -> Vec<(EventId, EventId)> {
    let n = up.len();
    let mut covers = Vec::new();
    for x in 0..n {
        let mut strict = up[x].clone();
        strict.set(x, false);
        let mut implied = FixedBitSet::with_capacity(n);
        for y in strict.ones() {
            let mut above = up[y].clone();
            above.set(y, false);
            implied.union_with(&above);
        }
        strict.difference_with(&implied);
        covers.extend(strict.ones().map(|y| (EventId(x), EventId(y))));
    }
    covers
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(pairs: &[(usize, usize)]) -> Vec<(EventId, EventId)> {
        pairs
            .iter()
            .map(|&(a, b)| (EventId(a), EventId(b)))
            .collect()
    }

    #[test]
    fn minimal_chain() {
        let p = build_poset(2, &ids(&[(0, 1)])).unwrap();
        assert!(p.leq(EventId(0), EventId(1)).unwrap());
        assert!(!p.leq(EventId(1), EventId(0)).unwrap());
        assert_eq!(p.cover_edges(), &ids(&[(0, 1)])[..]);
    }

    #[test]
    fn closure_is_transitive() {
        let p = build_poset(3, &ids(&[(0, 1), (1, 2)])).unwrap();
        assert!(p.leq(EventId(0), EventId(2)).unwrap());
        assert_eq!(
            p.comparability(EventId(0), EventId(2)).unwrap(),
            Comparability::Less
        );
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = build_poset(2, &ids(&[(0, 1), (1, 0)])).unwrap_err();
        match err {
            Error::CycleDetected { cycle } => {
                assert_eq!(cycle.first(), cycle.last());
                assert_eq!(cycle.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn longer_cycle_witness_follows_edges() {
        let rels = ids(&[(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]);
        let Err(Error::CycleDetected { cycle }) = build_poset(5, &rels) else {
            panic!("expected cycle");
        };
        for w in cycle.windows(2) {
            assert!(rels.contains(&(w[0], w[1])), "{cycle:?}");
        }
    }

    #[test]
    fn invalid_id() {
        assert!(matches!(
            build_poset(2, &ids(&[(0, 2)])),
            Err(Error::InvalidId { id: 2, .. })
        ));
        let p = build_poset(2, &[]).unwrap();
        assert!(p.leq(EventId(0), EventId(5)).is_err());
    }

    #[test]
    fn reflexive_and_incomparable() {
        let p = build_poset(2, &[]).unwrap();
        assert!(p.leq(EventId(1), EventId(1)).unwrap());
        assert!(!p.leq(EventId(0), EventId(1)).unwrap());
        assert!(!p.leq(EventId(1), EventId(0)).unwrap());
        assert_eq!(
            p.comparability(EventId(0), EventId(1)).unwrap(),
            Comparability::Incomparable
        );
        assert_eq!(
            p.comparability(EventId(0), EventId(0)).unwrap(),
            Comparability::Equal
        );
    }

    #[test]
    fn redundant_relations_are_accepted() {
        let p = build_poset(3, &ids(&[(0, 1), (1, 2), (0, 2), (0, 2), (1, 1)])).unwrap();
        assert_eq!(p.cover_edges(), &ids(&[(0, 1), (1, 2)])[..]);
    }

    #[test]
    fn size_cap() {
        let err = Poset::build(10, &[], BuildOptions { max_events: 4 }).unwrap_err();
        assert_eq!(
            err,
            Error::TooLarge {
                requested: 10,
                cap: 4
            }
        );
    }

    #[test]
    fn dual_reverses_order() {
        let p = build_poset(3, &ids(&[(0, 1), (1, 2)])).unwrap();
        let d = p.dual();
        assert!(d.leq(EventId(2), EventId(0)).unwrap());
        assert!(!d.leq(EventId(0), EventId(2)).unwrap());
        assert_eq!(d.cover_edges(), &ids(&[(1, 0), (2, 1)])[..]);
        assert!(d.dual().same_closure(&p));
    }
}
