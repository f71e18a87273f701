use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count {0} is not allowed here")]
    BadStrandCount(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("letter {letter} out of range for {n} strands")]
    LetterOutOfRange { letter: i32, n: usize },
    #[error("strand {0} does not return to its starting position")]
    PermutationMovesStrand(usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("normal form has no factors")]
    NoFactors,
    #[error("budget exceeded: {what} (cap {cap})")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("intervals do not form a laminar family")]
    NotLaminar,
    #[error("too many systems to enumerate (limit {0})")]
    TooManySystems(usize),
    #[error("conjugacy search failed: {0}")]
    ConjugacySearchFailed(String),
    #[error("curve system is not invariant")]
    NotInvariant,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("braid does not commute with the interior braid")]
    NotInCentralizerOfInterior,
    #[error("permutation is not consistent with the tube sizes")]
    InconsistentPermutation,
    #[error("braid does not preserve the tubes")]
    NotTubePreserving,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("braid is not consistent with the interior classes")]
    NotConsistent,
    #[error("filling search failed")]
    FillingSearchFailed,
    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl BraidError {
    pub fn is_budget(&self) -> bool {
        matches!(self, BraidError::BudgetExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, BraidError>;
