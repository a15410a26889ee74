//! Scripted configurations in flat space of any dimension.
//!
//! Events are points `(t, r)`. One event precedes another when it lies in or on
//! its past light cone, compared exactly in rationals. Chains are observers at
//! rest with integer ticks.

use std::ops::RangeInclusive;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::harness::{Geometry, Source};
use crate::poset::{build_poset, EventId, Poset};
use crate::Rational;

#[derive(Debug, Clone)]
struct ScriptChain {
    name: String,
    position: Vec<Rational>,
    ticks: RangeInclusive<i64>,
}

#[derive(Debug, Clone)]
struct ScriptEvent {
    name: String,
    t: Rational,
    position: Vec<Rational>,
}

#[derive(Debug, Clone)]
pub struct MinkowskiScript {
    dims: usize,
    chains: Vec<ScriptChain>,
    events: Vec<ScriptEvent>,
}

/// Where each generated event sits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkowskiGeometry {
    pub points: Vec<(Rational, Vec<Rational>)>,
    pub named: Vec<(String, EventId)>,
}

impl MinkowskiGeometry {
    pub fn event(&self, name: &str) -> Option<EventId> {
        self.named.iter().find(|(n, _)| n == name).map(|&(_, e)| e)
    }

    pub fn label(&self, e: EventId) -> String {
        if let Some((n, _)) = self.named.iter().find(|&&(_, x)| x == e) {
            return n.clone();
        }
        let (t, r) = &self.points[e.0];
        let r: Vec<String> = r.iter().map(|c| c.to_string()).collect();
        format!("t={t} r=({})", r.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct MinkowskiConfig {
    pub poset: Poset,
    pub chains: Vec<ValuedChain>,
    pub geometry: MinkowskiGeometry,
}

impl MinkowskiConfig {
    pub fn chain(&self, name: &str) -> Option<&ValuedChain> {
        self.chains.iter().find(|c| c.name() == name)
    }

    pub fn event(&self, name: &str) -> Option<EventId> {
        self.geometry.event(name)
    }

    pub fn into_source(self, name: impl Into<String>) -> Source {
        let labels = self
            .poset
            .events()
            .map(|e| self.geometry.label(e))
            .collect();
        Source {
            name: name.into(),
            poset: self.poset,
            chains: self.chains,
            labels,
            geometry: Geometry::Minkowski(self.geometry),
        }
    }
}

impl MinkowskiScript {
    /// A script in `dims` spatial dimensions.
    pub fn new(dims: usize) -> Self {
        MinkowskiScript {
            dims,
            chains: Vec::new(),
            events: Vec::new(),
        }
    }

    /// An observer at rest at `position`, ticking at integer times `ticks`,
    /// valued by its time coordinate.
    pub fn rest_chain(
        mut self,
        name: impl Into<String>,
        position: Vec<Rational>,
        ticks: RangeInclusive<i64>,
    ) -> Self {
        self.chains.push(ScriptChain {
            name: name.into(),
            position,
            ticks,
        });
        self
    }

    pub fn event(mut self, name: impl Into<String>, t: Rational, position: Vec<Rational>) -> Self {
        self.events.push(ScriptEvent {
            name: name.into(),
            t,
            position,
        });
        self
    }

    pub fn build(&self) -> Result<MinkowskiConfig> {
        let mut points: Vec<(Rational, Vec<Rational>)> = Vec::new();
        let mut chain_ranges = Vec::new();
        for c in &self.chains {
            self.check_dims(&c.name, &c.position)?;
            let start = points.len();
            for k in c.ticks.clone() {
                points.push((Rational::from(k), c.position.clone()));
            }
            chain_ranges.push(start..points.len());
        }
        let mut named = Vec::new();
        for e in &self.events {
            self.check_dims(&e.name, &e.position)?;
            named.push((e.name.clone(), EventId(points.len())));
            points.push((e.t, e.position.clone()));
        }

        let mut relations = Vec::new();
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let dt = b.0 - a.0;
                let r2: Rational = a.1.iter().zip(&b.1).map(|(x, y)| (y - x) * (y - x)).sum();
                if dt.numer() == &0 && r2.numer() == &0 {
                    return Err(Error::InvalidSpec(format!(
                        "events {i} and {j} occupy the same point"
                    )));
                }
                if dt >= Rational::from(0) && dt * dt >= r2 {
                    relations.push((EventId(i), EventId(j)));
                }
            }
        }
        let poset = build_poset(points.len(), &relations)?;

        let mut chains = Vec::new();
        for (c, range) in self.chains.iter().zip(chain_ranges) {
            let elements: Vec<EventId> = range.clone().map(EventId).collect();
            let values = range.map(|i| points[i].0).collect();
            let chain = Chain::new(&poset, elements)?.named(c.name.clone());
            chains.push(ValuedChain::new(chain, values)?);
        }
        Ok(MinkowskiConfig {
            poset,
            chains,
            geometry: MinkowskiGeometry { points, named },
        })
    }

    fn check_dims(&self, name: &str, position: &[Rational]) -> Result<()> {
        if position.len() != self.dims {
            return Err(Error::InvalidSpec(format!(
                "`{name}` has {} coordinates, expected {}",
                position.len(),
                self.dims
            )));
        }
        Ok(())
    }
}

/// Axis positions whose distances to `(0, 24)` and `(25, 24)` are all integers.
pub const AXIS_CHAIN_POSITIONS: [i64; 6] = [-45, -7, 7, 18, 32, 70];

/// Six observers on the x-axis of a plane and two events `x = (0, h)` and
/// `y = (25, h)` at time 0, with `h` either 0 or 24 so that every distance
/// from an event to an observer is integral.
pub fn axis_configuration(height: i64) -> Result<MinkowskiConfig> {
    if height != 0 && height != 24 {
        return Err(Error::InvalidSpec(format!(
            "height {height} gives irrational distances; use 0 or 24"
        )));
    }
    let mut script = MinkowskiScript::new(2);
    for c in AXIS_CHAIN_POSITIONS {
        script = script.rest_chain(
            format!("c{c}"),
            vec![Rational::from(c), Rational::from(0)],
            -80..=80,
        );
    }
    script
        .event(
            "x",
            Rational::from(0),
            vec![Rational::from(0), Rational::from(height)],
        )
        .event(
            "y",
            Rational::from(0),
            vec![Rational::from(25), Rational::from(height)],
        )
        .build()
}
