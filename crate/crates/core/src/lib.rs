//! Quantifying finite posets of events with observer chains.
//!
//! Events are ordered by influence. A distinguished chain assigns numbers to
//! events through forward and backward projection, pairs of chains quantify
//! generalized intervals with interval pairs, and the pair algebra that falls
//! out of consistent quantification is the Minkowski metric together with the
//! Lorentz transformation in Bondi form.
//!
//! ```
//! use posetime::harness::lattice::{generate_lattice, LatticeSpec};
//! use posetime::projection::quantify_event;
//!
//! let lattice = generate_lattice(&LatticeSpec::standard(8, 8)).unwrap();
//! let rest = lattice.chain("rest0").unwrap();
//! let x = lattice.event(3, 1).unwrap();
//! let (fwd, bwd) = quantify_event(&lattice.poset, x, rest).unwrap();
//! assert_eq!((fwd, bwd), (3.into(), 1.into()));
//! ```

pub mod chain;
pub mod error;
pub mod harness;
pub mod interval;
pub mod poset;
pub mod projection;
pub mod quantity;
pub mod spacetime;
pub mod structure;

pub use chain::{join_closed_intervals, make_valued_chain, Chain, ClosedInterval, ValuedChain};
pub use error::{Error, Result};
pub use interval::{GeneralizedInterval, IntervalClass, IntervalPair};
pub use poset::{build_poset, Comparability, EventId, Poset};
pub use projection::{ProjectionCase, ProjectionOutcome};
pub use quantity::Quantity;
pub use spacetime::PairTransform;

/// Exact rational used for every valuation and interval component.
pub type Rational = num_rational::Rational64;
