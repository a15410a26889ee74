//! Chains, isotonic valuations and closed intervals.

use std::collections::HashMap;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::poset::{EventId, Poset};
use crate::Rational;

/// A totally ordered list of events, strictly increasing in the poset order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    name: String,
    elements: Vec<EventId>,
    index: HashMap<EventId, usize>,
}

impl Chain {
    pub fn new(poset: &Poset, elements: Vec<EventId>) -> Result<Chain> {
        if elements.is_empty() {
            return Err(Error::EmptyChain);
        }
        for &e in &elements {
            poset.check(e)?;
        }
        for (i, w) in elements.windows(2).enumerate() {
            if !poset.lt(w[0], w[1]) {
                return Err(Error::NotAChain {
                    index: i,
                    lower: w[0],
                    upper: w[1],
                });
            }
        }
        let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Chain {
            name: String::new(),
            elements,
            index,
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Chain {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn elements(&self) -> &[EventId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> EventId {
        self.elements[i]
    }

    pub fn first(&self) -> EventId {
        self.elements[0]
    }

    pub fn last(&self) -> EventId {
        self.elements[self.elements.len() - 1]
    }

    /// Position of `e` on the chain, if it is an element.
    pub fn position(&self, e: EventId) -> Option<usize> {
        self.index.get(&e).copied()
    }

    pub fn contains(&self, e: EventId) -> bool {
        self.index.contains_key(&e)
    }

    /// Elements `lo..=hi` as a new chain with the same name.
    pub fn sub_chain(&self, lo: usize, hi: usize) -> Result<Chain> {
        if lo > hi || hi >= self.len() {
            return Err(Error::BadInterval {
                lo,
                hi,
                len: self.len(),
            });
        }
        let elements = self.elements[lo..=hi].to_vec();
        let index = elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Ok(Chain {
            name: self.name.clone(),
            elements,
            index,
        })
    }
}

/// A chain with an isotonic rational valuation, one value per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedChain {
    chain: Chain,
    values: Vec<Rational>,
}

impl ValuedChain {
    pub fn new(chain: Chain, values: Vec<Rational>) -> Result<ValuedChain> {
        if values.len() != chain.len() {
            return Err(Error::LengthMismatch {
                elements: chain.len(),
                values: values.len(),
            });
        }
        if let Some(i) = values.windows(2).position(|w| w[0] > w[1]) {
            return Err(Error::NotIsotonic { index: i });
        }
        Ok(ValuedChain { chain, values })
    }

    /// Values `start, start + step, start + 2 step, ...`.
    pub fn arithmetic(chain: Chain, start: Rational, step: Rational) -> Result<ValuedChain> {
        let values = (0..chain.len())
            .map(|i| start + step * Rational::from(i as i64))
            .collect();
        ValuedChain::new(chain, values)
    }

    pub fn named(mut self, name: impl Into<String>) -> ValuedChain {
        self.chain.name = name.into();
        self
    }

    pub fn chain(&self) -> &Chain {
        &self.chain
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, i: usize) -> Rational {
        self.values[i]
    }

    /// Value of a chain element by event id.
    pub fn value_of(&self, e: EventId) -> Option<Rational> {
        self.chain.position(e).map(|i| self.values[i])
    }

    /// Same chain with every value multiplied by `factor` (`factor > 0`).
    pub fn rescaled(&self, factor: Rational) -> Result<ValuedChain> {
        ValuedChain::new(
            self.chain.clone(),
            self.values.iter().map(|v| v * factor).collect(),
        )
    }

    pub fn interval(&self, lo: usize, hi: usize) -> Result<ClosedInterval<'_>> {
        ClosedInterval::new(self, lo, hi)
    }
}

impl Deref for ValuedChain {
    type Target = Chain;

    fn deref(&self) -> &Chain {
        &self.chain
    }
}

/// Validates `elements` as a chain of `poset` and attaches `values`.
pub fn make_valued_chain(
    poset: &Poset,
    elements: Vec<EventId>,
    values: Vec<Rational>,
) -> Result<ValuedChain> {
    ValuedChain::new(Chain::new(poset, elements)?, values)
}

/// The closed interval `[p_lo, p_hi]` on a valued chain.
#[derive(Debug, Clone, Copy)]
pub struct ClosedInterval<'a> {
    chain: &'a ValuedChain,
    lo: usize,
    hi: usize,
}

impl<'a> ClosedInterval<'a> {
    pub fn new(chain: &'a ValuedChain, lo: usize, hi: usize) -> Result<Self> {
        if lo > hi || hi >= chain.len() {
            return Err(Error::BadInterval {
                lo,
                hi,
                len: chain.len(),
            });
        }
        Ok(ClosedInterval { chain, lo, hi })
    }

    pub fn chain(&self) -> &'a ValuedChain {
        self.chain
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn elements(&self) -> &'a [EventId] {
        &self.chain.elements()[self.lo..=self.hi]
    }

    /// `v(p_hi) - v(p_lo)`.
    pub fn length(&self) -> Rational {
        self.chain.value(self.hi) - self.chain.value(self.lo)
    }
}

impl PartialEq for ClosedInterval<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.chain, other.chain) && self.lo == other.lo && self.hi == other.hi
    }
}

pub fn interval_length(interval: &ClosedInterval<'_>) -> Rational {
    interval.length()
}

/// Joins `[a, b]` and `[b, c]` into `[a, c]`.
pub fn join_closed_intervals<'a>(
    first: &ClosedInterval<'a>,
    second: &ClosedInterval<'a>,
) -> Result<ClosedInterval<'a>> {
    if !std::ptr::eq(first.chain, second.chain) {
        return Err(Error::DifferentChains);
    }
    if first.hi != second.lo {
        return Err(Error::NotAdjacent);
    }
    ClosedInterval::new(first.chain, first.lo, second.hi)
}
