use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A located mathematical failure found by one of the checkers.
///
/// Checkers return the first failure in lexicographic order of the
/// indices involved, so the same input always yields the same witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Associativity { objects: [usize; 4], basis: [usize; 3] },
    IdentityLaw { source: usize, target: usize, basis: usize },
    FunctorIdentity { object: usize },
    FunctorComposition { objects: [usize; 3], basis: [usize; 2] },
    Naturality { source: usize, target: usize, basis: usize },
    NotEquivalence { element: usize, reason: String },
    NotIsomorphism { g: usize, h: usize, object: usize },
    ActionAssociativity { g: usize, h: usize, k: usize, object: usize },
    Cocycle { g: usize, h: usize, k: usize },
    Pentagon { g: usize, h: usize, object: usize },
    IdentityAxiom { object: usize },
    GNaturality { g: usize, object: usize },
    TriangleIdentity { which: &'static str, object: usize },
    NotFullyFaithful { source: usize, target: usize },
    NotEssentiallySurjective { object: usize },
    Linearization { g: usize, h: usize },
    Orthogonality { b: usize, a: usize },
    Stability { g: usize, object: usize },
    Perpendicular { which: &'static str, object: usize },
    NotStrict { g: usize, h: usize, reason: String },
    NotFaithful { source: usize, target: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Associativity { objects, basis } => write!(
                f,
                "composition not associative at objects {objects:?}, basis {basis:?}"
            ),
            IdentityLaw { source, target, basis } => write!(
                f,
                "identity law fails for basis {basis} of Hom({source},{target})"
            ),
            FunctorIdentity { object } => write!(f, "functor does not preserve id_{object}"),
            FunctorComposition { objects, basis } => write!(
                f,
                "functor does not preserve composition at objects {objects:?}, basis {basis:?}"
            ),
            Naturality { source, target, basis } => write!(
                f,
                "naturality square fails for basis {basis} of Hom({source},{target})"
            ),
            NotEquivalence { element, reason } => {
                write!(f, "rho_{element} is not an equivalence: {reason}")
            }
            NotIsomorphism { g, h, object } => {
                write!(f, "phi_({g},{h}) not invertible at object {object}")
            }
            ActionAssociativity { g, h, k, object } => write!(
                f,
                "associativity square fails for (g,h,k) = ({g},{h},{k}) at object {object}"
            ),
            Cocycle { g, h, k } => write!(f, "cocycle law fails at ({g},{h},{k})"),
            Pentagon { g, h, object } => {
                write!(f, "pentagon axiom fails for (g,h) = ({g},{h}) at object {object}")
            }
            IdentityAxiom { object } => write!(f, "identity element axiom fails at object {object}"),
            GNaturality { g, object } => {
                write!(f, "G-naturality square fails for g = {g} at object {object}")
            }
            TriangleIdentity { which, object } => {
                write!(f, "triangle identity {which} fails at object {object}")
            }
            NotFullyFaithful { source, target } => {
                write!(f, "hom map on Hom({source},{target}) is not bijective")
            }
            NotEssentiallySurjective { object } => {
                write!(f, "object {object} is not in the essential image")
            }
            Linearization { g, h } => write!(f, "linearization relation fails for (g,h) = ({g},{h})"),
            Orthogonality { b, a } => write!(f, "Hom({b},{a}) is nonzero"),
            Stability { g, object } => {
                write!(f, "rho_{g} moves object {object} out of the subcategory")
            }
            Perpendicular { which, object } => {
                write!(f, "perpendicular characterization {which} fails at object {object}")
            }
            NotStrict { g, h, reason } => write!(f, "action not strict at ({g},{h}): {reason}"),
            NotFaithful { source, target } => {
                write!(f, "hom map on Hom({source},{target}) is not injective")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("search space of size {size} exceeds the cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u64 },
    #[error("not solvable: {0}")]
    NotSolvable(String),
    #[error("cocycles are not cohomologous")]
    NotCohomologous,
    #[error("lax functors have incompatible sides")]
    SideMismatch,
    #[error("weakness criteria disagree: {0}")]
    InconsistentLemma(String),
    #[error("object has no representative in the skeleton: {0}")]
    NotInSkeleton(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Violation(Violation),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}

impl Error {
    /// True for definite mathematical failures (as opposed to bad input or limits).
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::Violation(_) | Error::NotCohomologous | Error::InconsistentLemma(_)
        )
    }
}

/// Enumeration caps for brute-force searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_search: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_search: 1_000_000 }
    }
}

impl Limits {
    pub fn check_space(&self, p: u32, dim: usize) -> Result<u64> {
        let size = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if size > self.max_search as u128 {
            return Err(Error::SearchSpaceTooLarge { size, cap: self.max_search });
        }
        Ok(size as u64)
    }
}
