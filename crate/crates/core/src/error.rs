//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by string validation, graph construction, embedding
/// analysis and the counting operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A symbol exceeds the arity of the alphabet it claims to come from.
    #[error("symbol {symbol} out of range for arity {arity}")]
    SymbolOutOfRange { symbol: u32, arity: u32 },

    /// A word violates the even-run condition on the top symbol.
    #[error("not a generalized Pell string for arity {arity}: {word}")]
    NotPellString { word: String, arity: u8 },

    /// A binary word does not factor over the block alphabet.
    #[error("not a valid block encoding for arity {arity}: {word}")]
    NotMunariniString { word: String, arity: u8 },

    /// A parameter combination the operation does not support.
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    /// A vertex lookup failed.
    #[error("unknown vertex: {0}")]
    UnknownVertex(String),

    /// Embedding labels must all have the same length.
    #[error("labels have non-uniform lengths ({0} and {1})")]
    NonUniformLabels(usize, usize),

    /// Embedding labels must be pairwise distinct.
    #[error("labeling is not injective: vertices {0} and {1} share a label")]
    DuplicateLabel(usize, usize),

    /// Adjacent vertices must receive labels at Hamming distance one.
    #[error("edge ({u}, {v}) joins labels at Hamming distance {hamming}, expected 1")]
    EdgeNotUnitDistance { u: usize, v: usize, hamming: usize },

    /// An operation required an isometric embedding and got a witness
    /// against one.
    #[error("embedding is not isometric: d({u}, {v}) = {graph_distance} but the labels are at Hamming distance {hamming_distance}")]
    NotIsometric {
        u: usize,
        v: usize,
        graph_distance: usize,
        hamming_distance: usize,
    },

    /// A median query hit a triple whose majority label is not a vertex.
    #[error("majority label of vertices ({0}, {1}, {2}) is not a vertex")]
    MedianNotVertex(usize, usize, usize),

    /// A graph document failed structural validation on import.
    #[error("invalid graph data: {0}")]
    InvalidGraph(String),

    /// An identity that must hold by construction failed; this is a bug in
    /// the library, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
