//! The space `S` of finitely-supported sequences over GF(2).
//!
//! `S` carries entry-wise addition and scalar multiplication, the discrete
//! norm (0 on the zero vector, 1 elsewhere), and the induced discrete metric.
//! Linear operators on `S` are given by their images of the canonical basis.
//!
//! Every structural claim about `S` (vector-space and norm axioms,
//! completeness, norm attainment, failure of the parallelogram identity,
//! countability, separability) can be checked exhaustively on the finite
//! truncations `{x : support(x) ⊆ {1..p}}` via the [`analysis`] module.

pub mod analysis;
pub mod cli;
pub mod gf2;
pub mod metric;
pub mod operator;
pub mod vector;

pub use gf2::Gf2;
pub use metric::{CauchyVerdict, Epsilon, VecSequence};
pub use operator::{Operator, OperatorNorm};
pub use vector::{FinSupportVec, RankWidth};
