use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} appears more than once in one-line notation")]
    RepeatedValue(usize),
    #[error("box ({0}, {1}) lies outside the {2}x{2} grid")]
    BoxOutOfRange(usize, usize, usize),
    #[error("tableau labels do not cover exactly the boxes of its shape")]
    LabelDomain,
    #[error("one-line notation may not contain 0")]
    ZeroValue,
    #[error("code {0:?} is not vexillary")]
    NotVexillary(Vec<usize>),
    #[error("code {0:?} is vexillary; it has no transition children")]
    VexillaryLeaf(Vec<usize>),
    #[error("box {0:?} has no permutation dot to its northwest")]
    NoPivot((usize, usize)),
    #[error("row {row} is not a pivot row of the accessible box")]
    NotAPivot { row: usize },
    #[error("{what} exceeds budget ({size} > {limit})")]
    Budget {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("LP vertex has fractional coordinate {value} at variable {var}")]
    NonIntegralVertex { var: String, value: String },
    #[error("LP instance is unbounded along a direction needed to reach a vertex")]
    Unbounded,
    #[error("point violates constraint row {0}")]
    InfeasiblePoint(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
