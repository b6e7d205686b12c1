use thiserror::Error;

use crate::connectivity::EdgeCut2;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc {arc} has endpoint {vertex}, but the digraph has {vertex_count} vertices")]
    ArcEndpoint {
        arc: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("arc {arc} does not exist")]
    InvalidArc { arc: usize },

    #[error("vertex {vertex} does not exist")]
    InvalidVertex { vertex: usize },

    #[error("vertex {vertex} has indegree {indegree} and outdegree {outdegree}, expected 2 and 2")]
    NotDegreeTwo {
        vertex: usize,
        indegree: usize,
        outdegree: usize,
    },

    #[error("split pairing does not match the arcs at vertex {vertex}")]
    BadPairing { vertex: usize },

    #[error("digraph is not Eulerian")]
    NotEulerian,

    #[error("digraph is not 2-regular")]
    NotTwoRegular,

    #[error("digraph is not connected")]
    Disconnected,

    #[error("digraph is not strongly 2-edge-connected (arcs {} and {} separate {:?})", .cut.out_arc, .cut.in_arc, .cut.side)]
    NotStrongly2EdgeConnected { cut: EdgeCut2 },

    #[error("arc {arc} is a loop; it lies on exactly one directed cycle")]
    LoopArc { arc: usize },

    #[error("rotation at vertex {vertex} does not list exactly the arc ends incident to it")]
    RotationCoverage { vertex: usize },

    #[error("rotation at vertex {vertex} does not alternate between in-ends and out-ends")]
    NotAlternating { vertex: usize },

    #[error("not a directed cycle: {0}")]
    NotACycle(String),

    #[error("not a 2-edge-cut: {0}")]
    InvalidCut(String),

    #[error("face set is not well formed: {0}")]
    MalformedFaces(String),

    #[error("embedding has genus {genus}, expected a spherical embedding")]
    NotSpherical { genus: usize },

    #[error("{vertices} vertices exceeds the enumeration bound {bound}")]
    BoundExceeded { vertices: usize, bound: usize },

    #[error("immersion target has {vertices} vertices and {arcs} arcs (limit 4 and 8)")]
    TargetTooLarge { vertices: usize, arcs: usize },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
