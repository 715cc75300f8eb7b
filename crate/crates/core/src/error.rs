use std::fmt;

/// Errors shared by all modules of the crate.
///
/// Every operation in this crate is total except where a precondition is
/// inherent to the mathematics (division by zero, a recurrence prefactor that
/// does not exist, a weight function outside a strategy's domain). Those
/// violations are reported here instead of panicking.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// Exact division by a zero scalar.
    DivisionByZero,
    /// A polynomial was asked to give up a factor `x_i` that not all of its
    /// terms contain.
    NotDivisible { indeterminate: u32 },
    /// Evaluation needs a value for an indeterminate the assignment lacks.
    MissingIndeterminate { indeterminate: u32 },
    /// Multinomial coefficient where the parts do not sum to the top index.
    MultinomialParts { expected: u32, actual: u32 },
    /// A Bell-style index pair with more blocks than elements.
    KExceedsN { n: u32, k: u32 },
    /// A recurrence prefactor such as `1/k`, `k/n` or `1/(n-k)` is undefined
    /// at this index pair.
    PrefactorUndefined { n: u32, k: u32 },
    /// The compound recurrence requires the weight of part size 0 to vanish.
    WeightAtZeroNotZero,
    /// The compound recurrence divides by the weight of part size 1, which
    /// must be a nonzero rational constant.
    UnitWeightNotInvertible,
    /// Normalization of a weight function with no support.
    EmptySupport,
    /// A probability construction saw a weight that is not strictly positive.
    NonPositiveWeight { part: u32 },
    /// A map of masses that was required to sum to exactly 1 does not.
    MassNotNormalized,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotDivisible { indeterminate } => {
                write!(f, "polynomial is not divisible by x{indeterminate}")
            }
            Error::MissingIndeterminate { indeterminate } => {
                write!(f, "no value assigned to x{indeterminate}")
            }
            Error::MultinomialParts { expected, actual } => {
                write!(f, "multinomial parts sum to {actual}, expected {expected}")
            }
            Error::KExceedsN { n, k } => write!(f, "index k={k} exceeds n={n}"),
            Error::PrefactorUndefined { n, k } => {
                write!(f, "recurrence prefactor undefined at n={n}, k={k}")
            }
            Error::WeightAtZeroNotZero => {
                write!(f, "weight function must vanish at part size 0")
            }
            Error::UnitWeightNotInvertible => {
                write!(f, "weight of part size 1 must be a nonzero rational constant")
            }
            Error::EmptySupport => write!(f, "weight function has empty support"),
            Error::NonPositiveWeight { part } => {
                write!(f, "weight of part size {part} is not strictly positive")
            }
            Error::MassNotNormalized => write!(f, "masses do not sum to 1"),
        }
    }
}

impl std::error::Error for Error {}
