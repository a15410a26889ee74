//! Light-cone lattice: events `(u, v)` ordered componentwise.
//!
//! Time and space are `t = (u + v) / 2` and `x = (u - v) / 2`. A chain steps
//! `(du, dv)` per tick, so equal steps give an observer at rest and unequal
//! steps a moving one.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::chain::{Chain, ValuedChain};
use crate::error::{Error, Result};
use crate::harness::{Geometry, Source};
use crate::interval::Side;
use crate::poset::{EventId, Poset};
use crate::quantity::rational_sqrt;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeChainSpec {
    pub name: String,
    pub u0: usize,
    pub v0: usize,
    pub du: usize,
    pub dv: usize,
    /// Number of elements; as many as fit in the window when absent.
    pub ticks: Option<usize>,
    /// Value gained per step; `sqrt(du dv)` when absent.
    pub rate: Option<Rational>,
    /// Value of the first element; its time coordinate when absent.
    pub value0: Option<Rational>,
}

impl LatticeChainSpec {
    pub fn new(name: impl Into<String>, u0: usize, v0: usize, du: usize, dv: usize) -> Self {
        LatticeChainSpec {
            name: name.into(),
            u0,
            v0,
            du,
            dv,
            ticks: None,
            rate: None,
            value0: None,
        }
    }

    /// Observer at rest at spatial position `c`.
    pub fn rest(name: impl Into<String>, c: i64) -> Self {
        let (u0, v0) = if c >= 0 {
            (2 * c as usize, 0)
        } else {
            (0, 2 * c.unsigned_abs() as usize)
        };
        LatticeChainSpec::new(name, u0, v0, 1, 1)
    }

    /// Observer leaving the origin with steps `(du, dv)`.
    pub fn boost(name: impl Into<String>, du: usize, dv: usize) -> Self {
        LatticeChainSpec::new(name, 0, 0, du, dv)
    }

    pub fn with_ticks(mut self, ticks: usize) -> Self {
        self.ticks = Some(ticks);
        self
    }

    pub fn with_rate(mut self, rate: Rational) -> Self {
        self.rate = Some(rate);
        self
    }

    pub fn is_rest(&self) -> bool {
        self.du == self.dv
    }

    fn rate_or_default(&self) -> Result<Rational> {
        if let Some(r) = self.rate {
            return Ok(r);
        }
        let product = Rational::from((self.du * self.dv) as i64);
        rational_sqrt(product).ok_or_else(|| {
            Error::InvalidSpec(format!(
                "chain `{}`: sqrt({}) is irrational, give an explicit rate",
                self.name, product
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    pub u_size: usize,
    pub v_size: usize,
    pub chains: Vec<LatticeChainSpec>,
}

impl LatticeSpec {
    /// Rest chains at 0, 1 and 2 plus a (4, 1) boost, each when it fits.
    pub fn standard(u_size: usize, v_size: usize) -> LatticeSpec {
        let mut chains = Vec::new();
        for c in 0..3 {
            if 2 * c < u_size && v_size > 0 {
                chains.push(LatticeChainSpec::rest(format!("rest{c}"), c as i64));
            }
        }
        if u_size > 4 && v_size > 1 {
            chains.push(LatticeChainSpec::boost("boost41", 4, 1));
        }
        LatticeSpec {
            u_size,
            v_size,
            chains,
        }
    }
}

/// Coordinates of a generated lattice, kept for side and resolution tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeGeometry {
    pub u_size: usize,
    pub v_size: usize,
    pub specs: Vec<LatticeChainSpec>,
}

impl LatticeGeometry {
    pub fn event(&self, u: usize, v: usize) -> Option<EventId> {
        (u < self.u_size && v < self.v_size).then(|| EventId(u * self.v_size + v))
    }

    pub fn coords(&self, e: EventId) -> (usize, usize) {
        (e.0 / self.v_size, e.0 % self.v_size)
    }

    pub fn spec(&self, name: &str) -> Option<&LatticeChainSpec> {
        self.specs.iter().find(|s| s.name == name)
    }

    /// Side of `x` relative to the line of a chain: `Right` means larger `x`.
    pub fn side(&self, x: EventId, spec: &LatticeChainSpec) -> Side {
        let (u, v) = self.coords(x);
        let cross = (u as i64 - spec.u0 as i64) * spec.dv as i64
            - (v as i64 - spec.v0 as i64) * spec.du as i64;
        match cross.cmp(&0) {
            Ordering::Less => Side::Left,
            Ordering::Equal => Side::On,
            Ordering::Greater => Side::Right,
        }
    }

    /// Whether `projection` lies on the light cone of `x`, i.e. shares a coordinate.
    pub fn resolved(&self, x: EventId, projection: EventId) -> bool {
        let (u, v) = self.coords(x);
        let (pu, pv) = self.coords(projection);
        u == pu || v == pv
    }

    pub fn label(&self, e: EventId) -> String {
        let (u, v) = self.coords(e);
        format!("({u},{v})")
    }
}

#[derive(Debug, Clone)]
pub struct Lattice {
    pub poset: Poset,
    pub chains: Vec<ValuedChain>,
    pub geometry: LatticeGeometry,
}

impl Lattice {
    pub fn event(&self, u: usize, v: usize) -> Option<EventId> {
        self.geometry.event(u, v)
    }

    pub fn coords(&self, e: EventId) -> (usize, usize) {
        self.geometry.coords(e)
    }

    pub fn chain(&self, name: &str) -> Option<&ValuedChain> {
        self.chains.iter().find(|c| c.name() == name)
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
            geometry: Geometry::Lattice(self.geometry),
        }
    }
}

pub fn generate_lattice(spec: &LatticeSpec) -> Result<Lattice> {
    let (us, vs) = (spec.u_size, spec.v_size);
    if us == 0 || vs == 0 {
        return Err(Error::EmptyWindow);
    }
    let n = us.checked_mul(vs).ok_or(Error::TooLarge {
        requested: usize::MAX,
        cap: crate::poset::DEFAULT_MAX_EVENTS,
    })?;
    let geometry = LatticeGeometry {
        u_size: us,
        v_size: vs,
        specs: spec.chains.clone(),
    };
    let mut relations = Vec::with_capacity(2 * n);
    for u in 0..us {
        for v in 0..vs {
            let e = EventId(u * vs + v);
            if u + 1 < us {
                relations.push((e, EventId((u + 1) * vs + v)));
            }
            if v + 1 < vs {
                relations.push((e, EventId(u * vs + v + 1)));
            }
        }
    }
    let poset = crate::poset::build_poset(n, &relations)?;

    let mut chains = Vec::with_capacity(spec.chains.len());
    for cs in &spec.chains {
        chains.push(lattice_chain(&poset, &geometry, cs)?);
    }
    Ok(Lattice {
        poset,
        chains,
        geometry,
    })
}

fn lattice_chain(poset: &Poset, g: &LatticeGeometry, cs: &LatticeChainSpec) -> Result<ValuedChain> {
    if cs.du + cs.dv == 0 {
        return Err(Error::InvalidSpec(format!(
            "chain `{}` does not advance",
            cs.name
        )));
    }
    let rate = cs.rate_or_default()?;
    let mut elements = Vec::new();
    let mut i = 0usize;
    loop {
        if cs.ticks.is_some_and(|t| i >= t) {
            break;
        }
        let (u, v) = (cs.u0 + i * cs.du, cs.v0 + i * cs.dv);
        match g.event(u, v) {
            Some(e) => elements.push(e),
            None if cs.ticks.is_some() || elements.is_empty() => {
                return Err(Error::ChainEscapesWindow(cs.name.clone()));
            }
            None => break,
        }
        i += 1;
    }
    if elements.is_empty() {
        return Err(Error::ChainEscapesWindow(cs.name.clone()));
    }
    let start = cs
        .value0
        .unwrap_or_else(|| Rational::new((cs.u0 + cs.v0) as i64, 2));
    let chain = Chain::new(poset, elements)?.named(cs.name.clone());
    if rate < Rational::zero() {
        return Err(Error::InvalidSpec(format!(
            "chain `{}` has a negative rate",
            cs.name
        )));
    }
    ValuedChain::arithmetic(chain, start, rate)
}
