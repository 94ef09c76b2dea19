use std::fmt;

use crate::ring::ElementId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Ring axiom checked by [`crate::ring::validate_ring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    AdditiveGroup,
    AdditiveCommutativity,
    MultiplicativeAssociativity,
    Identity,
    Distributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::AdditiveGroup => "additive group",
            Axiom::AdditiveCommutativity => "commutativity of +",
            Axiom::MultiplicativeAssociativity => "associativity of *",
            Axiom::Identity => "multiplicative identity",
            Axiom::Distributivity => "distributivity",
        })
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("axiom violated ({axiom}) at witness {witnesses:?}")]
    AxiomViolation {
        axiom: Axiom,
        witnesses: (usize, usize, usize),
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ring of order {requested} exceeds the order cap {cap}")]
    OrderCapExceeded { requested: u128, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(ElementId),
    #[error("element {0} is not central")]
    NotCentral(ElementId),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no element satisfies the lifting postcondition for {0}")]
    NotFound(ElementId),
    #[error("unknown characterization id `{0}`")]
    UnknownId(String),
    #[error("unknown ring name `{name}` (known: {})", known.join(", "))]
    UnknownName { name: String, known: Vec<String> },
    #[error("parse error at byte {offset}: expected {}", expected_list(expected))]
    Parse {
        offset: usize,
        expected: Vec<String>,
    },
    #[error("element index {index} out of range for ring of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn expected_list(items: &[String]) -> String {
    match items {
        [one] => one.clone(),
        _ => format!("one of {}", items.join(", ")),
    }
}
