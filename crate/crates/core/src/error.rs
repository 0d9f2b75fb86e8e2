//! Crate-wide error type.

/// Errors reported by the exact-arithmetic core and the model layers on top.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Exact Laurent division failed: the divisor does not divide the dividend
    /// in the Laurent polynomial ring.
    #[error("not divisible: exact Laurent division has no polynomial quotient")]
    NotDivisible,

    /// A variable carrying a negative exponent was bound to a value that is not
    /// an invertible monomial, so the substitution is not defined.
    #[error("non-invertible substitution for variable `{0}`: negative exponent bound to a non-monomial value")]
    NonInvertibleSubstitution(String),

    /// Rational evaluation hit a zero raised to a negative power.
    #[error("division by zero during rational evaluation")]
    DivisionByZero,

    /// Rational evaluation found a variable with no value assigned.
    #[error("unbound variable `{0}` in evaluation point")]
    UnboundVariable(String),

    /// Text input did not match the polynomial grammar or a structured file format.
    #[error("parse error: {0}")]
    Parse(String),

    /// A path failed the Motzkin adjacency condition, or a mutation would break it.
    #[error("Motzkin condition violated: {0}")]
    MotzkinViolation(String),

    /// A quantity that must reduce to a single Laurent monomial did not.
    #[error("not a Laurent monomial: {0}")]
    NotMonomial(String),

    /// A conserved quantity evaluated differently at different time shifts.
    #[error("conserved quantity depends on the shift: {0}")]
    ConservationViolation(String),

    /// A value that must be a positive Laurent polynomial is not.
    #[error("positivity violation: {0}")]
    PositivityViolation(String),

    /// The degree-zero part of a transfer matrix admits a cycle, so the
    /// resolvent series is not defined coefficient by coefficient.
    #[error("t^0 part of the transfer matrix is not nilpotent")]
    NotNilpotent,

    /// A continued-fraction rearrangement produced a weight outside the
    /// Laurent polynomial ring.
    #[error("rearranged weight is not a Laurent polynomial: {0}")]
    NonExactWeight(String),

    /// A mutation or rearrangement was requested where its case condition fails.
    #[error("case condition does not apply: {0}")]
    CaseMismatch(String),

    /// A segment decomposition or graph identification did not match.
    #[error("decomposition mismatch: {0}")]
    DecompositionMismatch(String),

    /// Any other invalid input.
    #[error("invalid input: {0}")]
    Invalid(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
