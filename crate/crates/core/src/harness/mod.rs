//! Generators, the text format, DOT export and the verification suite.

pub mod dot;
pub mod lattice;
pub mod minkowski;
pub mod random;
pub mod simplex;
pub mod text;
pub mod verify;

use crate::chain::ValuedChain;
use crate::poset::{EventId, Poset};

/// A poset together with its named chains and display labels.
#[derive(Debug, Clone)]
pub struct Source {
    pub name: String,
    pub poset: Poset,
    pub chains: Vec<ValuedChain>,
    pub labels: Vec<String>,
    pub geometry: Geometry,
}

/// Extra structure a generator knows about its output.
#[derive(Debug, Clone)]
pub enum Geometry {
    None,
    Lattice(lattice::LatticeGeometry),
    Simplex,
    Minkowski(minkowski::MinkowskiGeometry),
}

impl Source {
    pub fn plain(name: impl Into<String>, poset: Poset, chains: Vec<ValuedChain>) -> Source {
        let labels = poset.events().map(|e| e.to_string()).collect();
        Source {
            name: name.into(),
            poset,
            chains,
            labels,
            geometry: Geometry::None,
        }
    }

    pub fn chain(&self, name: &str) -> Option<&ValuedChain> {
        self.chains.iter().find(|c| c.name() == name)
    }

    pub fn label(&self, e: EventId) -> &str {
        &self.labels[e.0]
    }
}
