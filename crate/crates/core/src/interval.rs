//! Generalized intervals and their interval pairs.

use std::fmt;
use std::ops::Neg;

use num_traits::Signed;

use crate::chain::ValuedChain;
use crate::error::{Error, Result};
use crate::poset::{EventId, Poset};
use crate::projection::{both_indices, forward_index};
use crate::structure::{collinearity_case, Betweenness, CoordinatedPair};
use crate::Rational;

/// An ordered pair of events, comparable or not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneralizedInterval {
    pub a: EventId,
    pub b: EventId,
}

impl GeneralizedInterval {
    pub fn new(a: EventId, b: EventId) -> Self {
        GeneralizedInterval { a, b }
    }
}

impl fmt::Display for GeneralizedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Which chains quantified a pair. Pairs from different bases never add.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Built from raw numbers.
    Detached,
    OneChain {
        chain: String,
        straddle: bool,
    },
    TwoChain {
        p: String,
        q: String,
    },
}

impl Basis {
    fn two(p: &ValuedChain, q: &ValuedChain) -> Basis {
        Basis::TwoChain {
            p: p.name().to_string(),
            q: q.name().to_string(),
        }
    }

    /// Label of the subspace the pair lives in.
    pub fn subspace(&self) -> String {
        match self {
            Basis::Detached => String::new(),
            Basis::OneChain { chain, .. } => chain.clone(),
            Basis::TwoChain { p, q } => format!("{p}{q}"),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Detached => write!(f, "detached"),
            Basis::OneChain { chain, straddle } => {
                write!(
                    f,
                    "{chain} ({})",
                    if *straddle { "straddle" } else { "same side" }
                )
            }
            Basis::TwoChain { p, q } => write!(f, "{p}{q}"),
        }
    }
}

/// The `(Δp, Δq)` quantification of a generalized interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalPair {
    pub first: Rational,
    pub second: Rational,
    pub basis: Basis,
}

impl IntervalPair {
    pub fn new(first: Rational, second: Rational) -> Self {
        IntervalPair {
            first,
            second,
            basis: Basis::Detached,
        }
    }

    pub fn from_ints(first: i64, second: i64) -> Self {
        IntervalPair::new(first.into(), second.into())
    }

    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }

    pub fn is_symmetric(&self) -> bool {
        self.first == self.second
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.first == -self.second
    }

    /// `(Δp + Δq) / 2`
    pub fn length(&self) -> Rational {
        (self.first + self.second) / Rational::from(2)
    }

    /// `(Δp - Δq) / 2`
    pub fn distance(&self) -> Rational {
        (self.first - self.second) / Rational::from(2)
    }

    pub fn decompose(&self) -> (IntervalPair, IntervalPair) {
        decompose(self)
    }

    pub fn classify(&self) -> IntervalClass {
        classify_interval(self)
    }

    pub fn product(&self) -> Rational {
        self.first * self.second
    }

    /// Componentwise sum, allowed only within one basis.
    pub fn try_add(&self, other: &IntervalPair) -> Result<IntervalPair> {
        let addable = self.basis == other.basis
            && matches!(self.basis, Basis::Detached | Basis::TwoChain { .. });
        if !addable {
            return Err(Error::BasisMismatch {
                left: self.basis.to_string(),
                right: other.basis.to_string(),
            });
        }
        Ok(IntervalPair {
            first: self.first + other.first,
            second: self.second + other.second,
            basis: self.basis.clone(),
        })
    }

    /// Multiplies both components by `alpha`.
    pub fn scaled(&self, alpha: Rational) -> IntervalPair {
        IntervalPair {
            first: self.first * alpha,
            second: self.second * alpha,
            basis: self.basis.clone(),
        }
    }
}

impl Neg for &IntervalPair {
    type Output = IntervalPair;

    fn neg(self) -> IntervalPair {
        IntervalPair {
            first: -self.first,
            second: -self.second,
            basis: self.basis.clone(),
        }
    }
}

impl fmt::Display for IntervalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    ChainLike,
    AntichainLike,
    ProjectionLike,
}

impl fmt::Display for IntervalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IntervalKind::ChainLike => "chain-like",
            IntervalKind::AntichainLike => "antichain-like",
            IntervalKind::ProjectionLike => "projection-like",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntervalClass {
    pub kind: IntervalKind,
    pub pure: bool,
}

impl fmt::Display for IntervalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pure {
            write!(f, "{} (pure)", self.kind)
        } else {
            write!(f, "{}", self.kind)
        }
    }
}

pub fn length_of_pair(pair: &IntervalPair) -> Rational {
    pair.length()
}

pub fn distance_of_pair(pair: &IntervalPair) -> Rational {
    pair.distance()
}

/// Splits a pair into its symmetric and antisymmetric parts.
pub fn decompose(pair: &IntervalPair) -> (IntervalPair, IntervalPair) {
    let s = pair.length();
    let d = pair.distance();
    (
        IntervalPair {
            first: s,
            second: s,
            basis: pair.basis.clone(),
        },
        IntervalPair {
            first: d,
            second: -d,
            basis: pair.basis.clone(),
        },
    )
}

pub fn classify_interval(pair: &IntervalPair) -> IntervalClass {
    let zero = Rational::from(0);
    let product = pair.first * pair.second;
    let kind = if product > zero {
        IntervalKind::ChainLike
    } else if product < zero {
        IntervalKind::AntichainLike
    } else {
        IntervalKind::ProjectionLike
    };
    IntervalClass {
        kind,
        pure: pair.first.abs() == pair.second.abs(),
    }
}

/// Side of an event relative to a single quantifying chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    On,
    Right,
}

impl Side {
    /// Side relative to `P` of an element with the given betweenness in `(P, Q)`.
    pub fn relative_to_first(b: Betweenness) -> Result<Side> {
        match b {
            Betweenness::PSide => Ok(Side::Left),
            Betweenness::Between | Betweenness::QSide => Ok(Side::Right),
            Betweenness::None => Err(Error::SideUnknown),
        }
    }

    /// Side relative to `Q` of an element with the given betweenness in `(P, Q)`.
    pub fn relative_to_second(b: Betweenness) -> Result<Side> {
        match b {
            Betweenness::PSide | Betweenness::Between => Ok(Side::Left),
            Betweenness::QSide => Ok(Side::Right),
            Betweenness::None => Err(Error::SideUnknown),
        }
    }
}

/// Quantifies `[a, b]` with projections onto a single chain.
///
/// Endpoints on the same side use `(v(Pb) - v(Pa), v(P̄b) - v(P̄a))`; an
/// interval straddling the chain uses `(v(Pb) - v(P̄a), v(P̄b) - v(Pa))`.
pub fn interval_pair_one_chain(
    poset: &Poset,
    interval: GeneralizedInterval,
    chain: &ValuedChain,
    sides: [Side; 2],
) -> Result<IntervalPair> {
    let (fa, ba) = both_indices(poset, interval.a, chain)?;
    let (fb, bb) = both_indices(poset, interval.b, chain)?;
    let v = |i| chain.value(i);
    let on = |x: EventId| chain.contains(x);
    let a_side = if on(interval.a) { Side::On } else { sides[0] };
    let b_side = if on(interval.b) { Side::On } else { sides[1] };
    let straddle = matches!(
        (a_side, b_side),
        (Side::Left, Side::Right) | (Side::Right, Side::Left)
    );
    let (first, second) = if straddle {
        (v(fb) - v(ba), v(bb) - v(fa))
    } else {
        (v(fb) - v(fa), v(bb) - v(ba))
    };
    Ok(IntervalPair {
        first,
        second,
        basis: Basis::OneChain {
            chain: chain.name().to_string(),
            straddle,
        },
    })
}

/// Sides of both endpoints relative to one chain of `(p, q)`, read off the
/// collinearity case of each endpoint.
pub fn sides_in_pair(
    poset: &Poset,
    interval: GeneralizedInterval,
    p: &ValuedChain,
    q: &ValuedChain,
    relative_to_p: bool,
) -> Result<[Side; 2]> {
    let side = |x| -> Result<Side> {
        let b = collinearity_case(poset, x, p, q)?.betweenness();
        if relative_to_p {
            Side::relative_to_first(b)
        } else {
            Side::relative_to_second(b)
        }
    };
    Ok([side(interval.a)?, side(interval.b)?])
}

/// Quantifies `[a, b]` by forward projections onto two coordinated chains.
pub fn interval_pair_two_chains(
    poset: &Poset,
    interval: GeneralizedInterval,
    p: &ValuedChain,
    q: &ValuedChain,
) -> Result<IntervalPair> {
    let pair = CoordinatedPair::new(poset, p, q)?;
    two_chain_pair(&pair, interval)
}

/// Same as [`interval_pair_two_chains`] for an already verified pair.
pub fn two_chain_pair(
    pair: &CoordinatedPair<'_>,
    interval: GeneralizedInterval,
) -> Result<IntervalPair> {
    let (pa, qa) = two_chain_coords(pair, interval.a)?;
    let (pb, qb) = two_chain_coords(pair, interval.b)?;
    Ok(IntervalPair {
        first: pb - pa,
        second: qb - qa,
        basis: Basis::two(pair.p, pair.q),
    })
}

/// `(v_P(Px), v_Q(Qx))` for an element between two coordinated chains.
pub fn two_chain_coords(pair: &CoordinatedPair<'_>, x: EventId) -> Result<(Rational, Rational)> {
    let case = collinearity_case(pair.poset, x, pair.p, pair.q)?;
    if case.betweenness() != Betweenness::Between {
        return Err(Error::NotBetween(format!(
            "event {x} is {} relative to `{}` and `{}`",
            case.betweenness(),
            pair.p.name(),
            pair.q.name()
        )));
    }
    // both forward projections exist: the case check required them
    let pf = forward_index(pair.poset, x, pair.p).expect("checked");
    let qf = forward_index(pair.poset, x, pair.q).expect("checked");
    Ok((pair.p.value(pf), pair.q.value(qf)))
}

/// Chain distance between two coordinated chains measured from `p` and `q`.
pub fn chain_distance(
    poset: &Poset,
    p_chain: &ValuedChain,
    q_chain: &ValuedChain,
    p: EventId,
    q: EventId,
) -> Result<Rational> {
    CoordinatedPair::new(poset, p_chain, q_chain)?.chain_distance(p, q)
}

/// Joins `[a, b]` and `[b, c]`, adding their pairs componentwise.
pub fn join_intervals(
    left: (GeneralizedInterval, &IntervalPair),
    right: (GeneralizedInterval, &IntervalPair),
) -> Result<(GeneralizedInterval, IntervalPair)> {
    if left.0.b != right.0.a {
        return Err(Error::NoSharedEndpoint);
    }
    let pair = left.1.try_add(right.1)?;
    Ok((GeneralizedInterval::new(left.0.a, right.0.b), pair))
}

/// Coordinates `(p0, q0)` of the artificial event splitting `[a, b]` into an
/// antisymmetric part `[a, 0]` followed by a symmetric part `[0, b]`.
pub fn artificial_event(
    pa: Rational,
    qa: Rational,
    pb: Rational,
    qb: Rational,
) -> (Rational, Rational) {
    let two = Rational::from(2);
    ((pa + pb + qa - qb) / two, (pa - pb + qa + qb) / two)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtificialSplit {
    pub p0: Rational,
    pub q0: Rational,
    /// Pair of `[a, 0]`.
    pub antisymmetric: IntervalPair,
    /// Pair of `[0, b]`.
    pub symmetric: IntervalPair,
}

pub fn split_at_artificial_event(
    poset: &Poset,
    interval: GeneralizedInterval,
    p: &ValuedChain,
    q: &ValuedChain,
) -> Result<ArtificialSplit> {
    let pair = CoordinatedPair::new(poset, p, q)?;
    let (pa, qa) = two_chain_coords(&pair, interval.a)?;
    let (pb, qb) = two_chain_coords(&pair, interval.b)?;
    let basis = Basis::two(p, q);
    Ok(split_coords((pa, qa), (pb, qb), basis))
}

/// Artificial-event split from raw two-chain coordinates.
pub fn split_coords(
    a: (Rational, Rational),
    b: (Rational, Rational),
    basis: Basis,
) -> ArtificialSplit {
    let (p0, q0) = artificial_event(a.0, a.1, b.0, b.1);
    ArtificialSplit {
        p0,
        q0,
        antisymmetric: IntervalPair {
            first: p0 - a.0,
            second: q0 - a.1,
            basis: basis.clone(),
        },
        symmetric: IntervalPair {
            first: b.0 - p0,
            second: b.1 - q0,
            basis,
        },
    }
}
