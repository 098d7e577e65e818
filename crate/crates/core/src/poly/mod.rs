//! Sparse multivariate polynomials over the block-graded variables `x[i,j]`.

pub mod monomial;
pub mod order;
pub mod polynomial;
pub mod reduce;
pub mod ring;

pub use monomial::Monomial;
pub use order::{OrderKind, TermOrder};
pub use polynomial::Polynomial;
pub use reduce::normal_form;
pub use ring::{Multidegree, RingSpec, VarId, VarNaming};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("block {0} has no variables")]
    EmptyBlock(usize),
    #[error("unknown variable {0}")]
    BadVariable(String),
}
