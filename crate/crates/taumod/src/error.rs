//! Crate-wide error type. Validation failures carry the witness data
//! (failing basis element or triple) so rejections are actionable.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    NotPrime(u64),
    InvalidField(String),
    ReducibleModulus,
    ZeroPolynomial,
    ShapeMismatch(String),
    BaseFieldMismatch,
    NotCommutative { i: usize, j: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    NotUnital { i: usize },
    ModuleAxiom(String),
    Semilinearity { basis: usize },
    NotAMorphism(String),
    NotFreeOverS,
    NotUnit(String),
    NotLocal(String),
    NotRingHom(String),
    NotAnIdeal(String),
    CharacteristicLocus(String),
    TrivializationBound { bound: u64, reached: u64 },
    Hypothesis(String),
    TheoremViolation(String),
    Input(String),
    UnknownCommand(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{} is not prime", p),
            Error::InvalidField(msg) => write!(f, "invalid field: {}", msg),
            Error::ReducibleModulus => write!(f, "modulus is reducible"),
            Error::ZeroPolynomial => write!(f, "the zero polynomial cannot be factored"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {}", msg),
            Error::BaseFieldMismatch => write!(f, "operands live over different base fields"),
            Error::NotCommutative { i, j } => {
                write!(f, "multiplication not commutative at basis pair (e{}, e{})", i, j)
            }
            Error::NotAssociative { i, j, k } => write!(
                f,
                "multiplication not associative at basis triple (e{}, e{}, e{})",
                i, j, k
            ),
            Error::NotUnital { i } => write!(f, "unit fails against basis element e{}", i),
            Error::ModuleAxiom(msg) => write!(f, "module axiom violated: {}", msg),
            Error::Semilinearity { basis } => {
                write!(f, "tau is not semilinear against basis element e{}", basis)
            }
            Error::NotAMorphism(msg) => write!(f, "not a module morphism: {}", msg),
            Error::NotFreeOverS => write!(f, "module carries no free-basis certificate over S"),
            Error::NotUnit(msg) => write!(f, "module is not unit: {}", msg),
            Error::NotLocal(msg) => write!(f, "algebra is not local: {}", msg),
            Error::NotRingHom(msg) => write!(f, "not a ring homomorphism: {}", msg),
            Error::NotAnIdeal(msg) => write!(f, "not an ideal: {}", msg),
            Error::CharacteristicLocus(msg) => {
                write!(f, "parameter lies on the characteristic locus: {}", msg)
            }
            Error::TrivializationBound { bound, reached } => write!(
                f,
                "trivialization bound exceeded: no full solution space up to extension degree {} (bound {})",
                reached, bound
            ),
            Error::Hypothesis(msg) => write!(f, "hypothesis violated: {}", msg),
            Error::TheoremViolation(msg) => write!(f, "theorem violation: {}", msg),
            Error::Input(msg) => write!(f, "input error: {}", msg),
            Error::UnknownCommand(cmd) => write!(f, "unknown command: {}", cmd),
        }
    }
}

impl std::error::Error for Error {}
