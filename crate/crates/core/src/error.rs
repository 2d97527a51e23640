use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("order {order} outside supported range {min}..={max}")]
    UnsupportedOrder { order: i64, min: i64, max: i64 },

    #[error("the logarithmic potential V_n is only defined for n >= 1 (H_0 has no roots)")]
    NoRoots,

    #[error("non-finite integrand value at node {node}")]
    NonFinite { node: f64 },

    #[error("invalid quadrature rule: {0}")]
    InvalidRule(String),

    #[error("unbound normal mode: bound 4AB - C^2 > 0 violated (4AB - C^2 = {discriminant})")]
    UnboundMode { discriminant: f64 },

    #[error(
        "sum/difference coordinate form requires alpha = +/-45 degrees, got {alpha_deg} degrees"
    )]
    UnsupportedRegime { alpha_deg: f64 },
}
