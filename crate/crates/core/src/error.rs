use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to}): {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },

    #[error("cyclotomic order {0} outside supported range 1..={max}", max = crate::exact_arith::MAX_ORDER)]
    UnsupportedOrder(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },

    #[error("generator {index} does not have determinant 1")]
    NonUnimodular { index: usize },

    #[error("no generators supplied")]
    NoGenerators,

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("matrix is not an element of the ambient group")]
    NotMember,

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("no prime p = 1 mod {modulus} with p > {lower} below {bound}")]
    NoSuitablePrime { modulus: u64, lower: u64, bound: u64 },

    #[error("character table computation failed: {0}")]
    Dixon(String),

    #[error("inner product with irreducible {index} is {value}, not an integer")]
    NotVirtualCharacter { index: usize, value: String },

    #[error("matrix is singular")]
    Singular,

    #[error("{what} entry ({row}, {col}) = {value} is not an integer")]
    NonInteger {
        what: &'static str,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("orbit sum for orbit {orbit} depends on the chosen representative")]
    RepresentativeDependence { orbit: usize },

    #[error("orbit {orbit} of size {size} does not divide the quotient order {n}")]
    OrbitSize { orbit: usize, size: usize, n: usize },

    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),

    #[error("catalog validation failed for {name}: {reason}")]
    CatalogValidation { name: String, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
