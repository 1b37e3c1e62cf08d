use crate::graph::ElementId;
use thiserror::Error;

/// Errors across the library. Input errors come from malformed graphs, lists,
/// or files; the remaining variants signal violated preconditions or internal
/// invariants and always indicate a caller bug (or an implementation bug).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("edge {edge} endpoint {vertex} out of range (graph has {count} vertices)")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        count: usize,
    },
    #[error("element {0} does not exist in this graph")]
    InvalidElement(ElementId),
    #[error("maximum degree {0} is below 3; use the exhaustive oracle instead")]
    DeltaTooSmall(usize),
    #[error("list for {element} has {have} colors, need at least {need}")]
    ListTooSmall {
        element: ElementId,
        have: usize,
        need: usize,
    },
    #[error("{0} is unreachable from the root in the reduced subdivision graph")]
    Disconnected(ElementId),
    #[error("no cycle passes through vertex {0}")]
    NoCycleThrough(usize),
    #[error("no available color for {0}")]
    NoAvailableColor(ElementId),
    #[error("residual list for {element} has {have} colors, role minimum is {need}")]
    MinimumViolated {
        element: ElementId,
        have: usize,
        need: usize,
    },
    #[error("gadget unexpectedly infeasible: {0}")]
    Infeasible(&'static str),
    #[error("plan revision limit exceeded")]
    PlanLoopExceeded,
    #[error("infeasible generator parameters: {0}")]
    BadGeneratorInput(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
