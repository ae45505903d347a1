//! Zero-divisor graphs of `Z_n`, of finite products `Z_{n1} x ... x Z_{nk}`,
//! and the coprimality graph on the divisor poset `D_n`, together with exact
//! graph oracles and a claim verifier that checks closed forms against them.

pub mod cli;
pub mod dn;
pub mod graph;
pub mod numthy;
pub mod product;
pub mod theorems;
pub mod verify;
pub mod zn;

use thiserror::Error;

/// Default vertex cap for graph construction.
pub const DEFAULT_BUILD_CAP: usize = 5000;
/// Default vertex cap for the exponential-time oracles.
pub const DEFAULT_ORACLE_CAP: usize = 300;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Num(#[from] numthy::NumError),
    #[error(transparent)]
    Graph(#[from] graph::GraphError),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Cap or budget exhaustion, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Graph(g) if g.is_resource())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mul_is_zero(a: u64, b: u64, n: u64) -> bool {
    (a as u128 * b as u128).is_multiple_of(n as u128)
}
