use thiserror::Error;

use crate::poly::PolyError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("matrix entry ({row},{col}) is not homogeneous of the declared degree")]
    NotHomogeneous { row: usize, col: usize },
    #[error("presentation is not multigraded: {0}")]
    NotMultigraded(String),
    #[error("generator {0} is not a monomial")]
    NotMonomial(usize),
    #[error("the module is zero")]
    ZeroModule,
    #[error("maps do not compose to zero")]
    CompositionNonzero,
    #[error("annihilation exponent not found up to cap {cap}")]
    NotFound { cap: usize },
    #[error("Koszul cohomology did not stabilize at (i,j)=({i},{j}) up to t={t_max}")]
    NotStabilized { i: i64, j: i64, t_max: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
