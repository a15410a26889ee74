use thiserror::Error;

use crate::poset::EventId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("event id {id} is out of range for a poset of {event_count} events")]
    InvalidId { id: usize, event_count: usize },

    #[error("relations contain a cycle: {}", fmt_ids(.cycle))]
    CycleDetected { cycle: Vec<EventId> },

    #[error("poset of {requested} events exceeds the configured cap of {cap}")]
    TooLarge { requested: usize, cap: usize },

    #[error("chain must contain at least one element")]
    EmptyChain,

    #[error("elements {lower} and {upper} at chain positions {index} and {next} are not strictly increasing", next = .index + 1)]
    NotAChain {
        index: usize,
        lower: EventId,
        upper: EventId,
    },

    #[error("valuation decreases between chain positions {index} and {next}", next = .index + 1)]
    NotIsotonic { index: usize },

    #[error("chain has {elements} elements but {values} values")]
    LengthMismatch { elements: usize, values: usize },

    #[error("closed interval indices [{lo}, {hi}] are invalid for a chain of length {len}")]
    BadInterval { lo: usize, hi: usize, len: usize },

    #[error("closed intervals do not share exactly one endpoint")]
    NotAdjacent,

    #[error("closed intervals belong to different chains")]
    DifferentChains,

    #[error("event {event} is not quantifiable by chain `{chain}` (needs both projections)")]
    NotQuantifiable { event: EventId, chain: String },

    #[error("event {event} has no {direction} projection onto chain `{chain}`")]
    MissingProjection {
        event: EventId,
        chain: String,
        direction: &'static str,
    },

    #[error("event {event} is not properly collinear with the chain pair")]
    NotProperlyCollinear { event: EventId },

    #[error("{0}")]
    NotBetween(String),

    #[error("chains `{p}` and `{q}` are not compatible over the given ranges")]
    NotCompatible { p: String, q: String },

    #[error("chains `{p}` and `{q}` are not coordinated: {reason}")]
    NotCoordinated {
        p: String,
        q: String,
        reason: String,
    },

    #[error("chains are not linearly related: {0}")]
    NotLinearlyRelated(String),

    #[error("endpoint sides relative to the quantifying chain are unknown")]
    SideUnknown,

    #[error("intervals do not share a middle endpoint")]
    NoSharedEndpoint,

    #[error("interval pairs are quantified in different bases ({left} vs {right})")]
    BasisMismatch { left: String, right: String },

    #[error("{0}")]
    OutOfRange(String),

    #[error("degenerate pair transform (m = {m}, n = {n}); both must be positive")]
    DegenerateTransform { m: String, n: String },

    #[error("pair {0} is not purely antisymmetric")]
    NotAntisymmetric(String),

    #[error("intervals must lie in distinct subspaces")]
    SameSubspace,

    #[error("chains coincide (zero separation); projection is undefined")]
    CoincidentChains,

    #[error("lattice window is empty")]
    EmptyWindow,

    #[error("chain `{0}` leaves the lattice window")]
    ChainEscapesWindow(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("no chain named `{0}`")]
    UnknownChain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn fmt_ids(ids: &[EventId]) -> String {
    ids.iter()
        .map(|id| id.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}
