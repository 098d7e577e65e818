//! Multigraded generic initial ideals of determinantal ideals of graded
//! matrices of linear forms: closed forms, prime decompositions, Hilbert
//! series, and a Gröbner-basis oracle that checks them.

pub mod formulas;
pub mod generate;
pub mod graded;
pub mod hilbert;
pub mod ideal;
pub mod instance;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod verify;

pub use formulas::{Formula, FormulaError, GinResult};
pub use graded::{GradedLinearMatrix, Grading, PhiMap};
pub use ideal::{BorelPrime, MonomialIdeal};
pub use linalg::{Field, FieldSpec, PrimeField, Rationals};
pub use oracle::{CoordinateChange, GinOptions, GroebnerBasis, OracleError};
pub use poly::{Monomial, OrderKind, Polynomial, RingSpec, TermOrder};
pub use verify::{VerifyError, VerifyReport};
