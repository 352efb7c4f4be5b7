use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not prime: {0}")]
    NotPrime(u64),
    #[error("not a prime power: {0}")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("reducible modulus")]
    ReducibleModulus,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("invalid element: {0}")]
    InvalidElement(String),
    #[error("no {n}-th root of unity in a field of order {order}")]
    NoRootOfUnity { n: u64, order: u128 },
    #[error("not defined over base field")]
    NotOverBase,
    #[error("zero constant term")]
    ZeroConstantTerm,
    #[error("not a generator: g(x) does not divide x^{n} - 1")]
    NotAGenerator { n: usize },
    #[error("repeated roots regime: gcd(n, q) != 1 for n = {n}")]
    RepeatedRoots { n: usize },
    #[error("no nonzero codewords")]
    NoNonzeroCodewords,
    #[error("gcd({a}, {n}) != 1")]
    NotCoprime { a: u64, n: u64 },
    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    BadJacobiModulus(i64),
    #[error("m does not divide p-1 (m = {m}, p = {p})")]
    MDoesNotDivide { m: u64, p: u64 },
    #[error("p = {p} does not divide q - 1 for q = {q}")]
    NoPthRoots { p: u64, q: u64 },
    #[error("invalid prime list: {0}")]
    InvalidPrimes(String),
    #[error("not defined over F_{q} (residue character of {q} mod {prime} is -1)")]
    NotAdmissible { q: u64, prime: u64 },
    #[error("unbalanced character split in class {class} for modulus {modulus}")]
    UnbalancedSplit { class: u64, modulus: u64 },
    #[error("selector does not match the partition: {0}")]
    BadSelector(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}
