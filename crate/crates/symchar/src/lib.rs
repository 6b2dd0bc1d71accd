//! Exact computation of graded Frobenius characters of the configuration-space
//! algebras `C_n` and `D_n`, the Orlik-Terao algebra `OT_n`, the quotient `M_n`,
//! and the full-support submodule `T_n`, together with a brute-force oracle that
//! rebuilds the same characters directly from the algebra presentations.
//!
//! All arithmetic is exact: coefficients are truncated power series in `q` over
//! arbitrary-precision rationals. The canonical internal basis is the power-sum
//! basis, where the Kronecker product is diagonal and plethysm is substitution.

pub mod combinat;
pub mod exec;
pub mod frobchar;
pub mod oracle;
pub mod qseries;
pub mod symfunc;

pub use qseries::{QSeries, Rational, Trunc};
pub use symfunc::{Basis, CharacterTable, GradedFamily, SymFunc};

/// Errors shared across the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,
    #[error("not a polynomial: nonzero coefficient {coeff} at q^{power} (claimed degree <= {max_degree})")]
    NotPolynomial {
        power: usize,
        max_degree: usize,
        coeff: String,
    },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },
    #[error("inner plethysm argument is a nonzero constant")]
    InnerDegreeZero,
    #[error("graded piece too large: {count} monomials exceeds ceiling {ceiling}")]
    TooLarge { count: usize, ceiling: usize },
    #[error("truncation order {have} too small: need at least {need}")]
    TruncationTooSmall { have: usize, need: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
