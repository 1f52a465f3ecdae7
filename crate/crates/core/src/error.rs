use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeded the limit of {limit} elements")]
    SizeLimit { limit: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPerm(String),
    #[error("element is not a member of the group")]
    NotInGroup,
    #[error("the 3-elements do not form a subgroup; no normal Sylow-3 subgroup")]
    NoNormalSylow3,
    #[error("line classes are not pairwise skew")]
    NotASixer,
    #[error("expected a unique transversal line, found {found}")]
    Transversal { found: usize },
    #[error("lattice map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("unsupported rank {0}; expected 4, 5 or 6 blown-up points")]
    UnsupportedRank(usize),
    #[error("marking search failed: {0}")]
    Marking(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
