use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("graphs must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} already present")]
    DuplicateEdge(Edge),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("brute-force connectivity supports order <= {max}, got {n}")]
    BruteForceLimit { n: usize, max: usize },

    #[error("graph6: empty input")]
    G6Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    G6InvalidByte { offset: usize, byte: u8 },
    #[error("graph6: long-form header at offset {offset} is not supported (order > 62)")]
    G6LongForm { offset: usize },
    #[error("graph6: expected {expected} bytes, found {found} (error at offset {offset})")]
    G6Length {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: order {0} cannot be encoded in short form")]
    G6Unsupported(usize),

    #[error("path must contain at least one vertex")]
    EmptyPath,
    #[error("vertex {0} repeats on the path")]
    RepeatedVertex(usize),
    #[error("consecutive path vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("path of order {found} is not a detour (detour order is {expected})")]
    NotADetour { expected: usize, found: usize },
    #[error("paths have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("dynamic program supports order <= {max}, got {n}; use the DFS engine")]
    DpCapacity { n: usize, max: usize },
    #[error("detour count overflowed 64 bits")]
    CountOverflow,
    #[error("emission limit {limit} exceeded ({emitted} detours emitted before truncation)")]
    EmissionLimit { limit: usize, emitted: usize },

    #[error("index {name}={value} out of range {min}..={max} for a path of order {order}")]
    IndexOutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
        order: usize,
    },
    #[error("chord index pair closes a cycle through the whole path (i = k or j = 1)")]
    CycleCase,
    #[error("path order {0} is below 4")]
    PathTooShort(usize),

    #[error("family {family} is not defined for order {order}")]
    FamilyOrder { family: &'static str, order: usize },
    #[error("base graph failed order-10 validation")]
    InvalidBase,
}
