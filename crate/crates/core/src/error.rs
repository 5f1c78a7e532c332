use thiserror::Error;

/// Errors produced while building or verifying graphs, codes and vector sets.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid parameters: {0}")]
    Parameters(String),

    #[error("degenerate code: {0}")]
    DegenerateCode(String),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("size cap exceeded: {count} cosets (limit {limit})")]
    SizeCap { count: u64, limit: u64 },

    #[error("graph is not a bipartite distance-regular graph of diameter 4: {reason} (witness u={u}, v={v})")]
    NotDistanceRegular { u: u32, v: u32, reason: String },

    #[error("invalid group action: {reason} (witness vertex {vertex})")]
    Action { vertex: u32, reason: String },

    #[error("infeasible intersection array (k={k}, c2={c2}, c3={c3}): {reason}")]
    InfeasibleArray { k: u64, c2: u64, c3: u64, reason: String },

    #[error("spectral identity fails: entry ({row}, {col}) = {value}")]
    SpectralMismatch { row: u32, col: u32, value: i64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
