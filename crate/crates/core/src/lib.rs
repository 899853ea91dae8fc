//! Exact computation in the half-liberated real sphere algebra
//! `C(S^{n-1}_{R,*})`, through its faithful model inside the crossed product
//! `C(S^{n-1}_C) x| Z_2`.

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod parse;
pub mod projective;
pub mod representations;
pub mod sample;
pub mod scalars;
pub mod sphere;
pub mod subspaces;
pub mod verify;

pub use algebra::{Algebra, CrossedElem, NCPoly, NCWord};
pub use error::{Error, Result};
pub use projective::{PExpr, PMonomial};
pub use representations::{Mat2, PointClass, SpherePoint};
pub use scalars::{ApproxComplex, ExactComplex, Rational, Scalar, Tolerance};
pub use sphere::{ZMonomial, ZPoly};
pub use subspaces::{IdealSpec, PairEF, SpanBasis};
