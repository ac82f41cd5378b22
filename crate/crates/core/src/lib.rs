//! Exact modular flow, tension, chromatic and Tutte polynomials of oriented
//! multigraphs, computed by several independent routes, together with
//! brute-force counters for their combinatorial reciprocity laws.
//!
//! All arithmetic is exact. Univariate graph polynomials use [`Rational`]
//! coefficients (they arise from interpolation) and the Tutte polynomial uses
//! [`Integer`] coefficients.

pub mod caps;
pub mod checks;
pub mod corpus;
pub mod error;
pub mod flows;
pub mod format;
pub mod geometry;
pub mod graph;
pub mod oracles;
pub mod orient;
pub mod poly;
pub mod report;
pub mod tensions;
pub mod tutte;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, EdgeKind, EdgeSet, OrientedMultigraph, VertexId};
pub use poly::{BivariatePolynomial, Field, Polynomial, Scalar};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
pub type RationalPolynomial = Polynomial<Rational>;
pub type TuttePolynomial = BivariatePolynomial<Integer>;

/// How a polynomial is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Count at enough moduli and interpolate.
    Enumerate,
    DeletionContraction,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enumerate => "enumerate",
            Method::DeletionContraction => "deletion-contraction",
        }
    }
}

pub(crate) fn rational(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// `(-1)^e`
pub(crate) fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}
