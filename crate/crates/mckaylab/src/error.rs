use thiserror::Error;

/// Errors surfaced by group construction, cohomology solvers, degree
/// computations and the numerical oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group order exceeds the cap of {cap} (enumerated at least {reached} elements)")]
    OrderCapExceeded { cap: usize, reached: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not a subgroup of the ambient group")]
    NotSubgroup,

    #[error("point {point} is not in the point set (size {points})")]
    PointOutOfRange { point: usize, points: usize },

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("cochain table is not defined on the expected group/degree/modulus: {0}")]
    TableMismatch(String),

    #[error("table fails the degree-{degree} cocycle identity at tuple {tuple:?}")]
    NotCocycle { degree: u8, tuple: Vec<usize> },

    #[error("cocycle family fails the G-set cocycle identity at point {point}, tuple {tuple:?}")]
    NotFamilyCocycle { point: usize, tuple: Vec<usize> },

    #[error("cohomology budget exceeded: m*|G|^2 = {size} > budget {budget}")]
    CohomologyBudget { size: u64, budget: u64 },

    #[error("modulus {modulus} is not a multiple of the group order {order}")]
    ModulusMismatch { modulus: u32, order: u32 },

    #[error("no prime q = 1 mod {exponent} with q > {lower} below the search bound")]
    DixonPrimeNotFound { exponent: u64, lower: u64 },

    #[error("multiplication table too large for exact degree computation (order {0})")]
    DegreeOrderTooLarge(usize),

    #[error("algebra dimension {dim} exceeds the cap of {cap}")]
    AlgebraCapExceeded { dim: usize, cap: usize },

    #[error("algebra dimension {dim} exceeds the oracle budget of {budget}")]
    OracleBudget { dim: usize, budget: usize },

    #[error("oracle failed to split the algebra after {attempts} random central draws")]
    OracleSplitFailed { attempts: usize },

    #[error("oracle block data is not consistent with a semisimple algebra: {0}")]
    OracleInconsistent(String),

    #[error("basis multiplication operators are not closed under adjoints; oracle inapplicable")]
    OracleNotStarClosed,

    #[error("subgroup enumeration exceeded the cap of {cap}")]
    SubgroupCapExceeded { cap: usize },

    #[error("independent cross-check disagreed: {0}")]
    CrossCheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
