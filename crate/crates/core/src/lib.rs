//! Exact computation in the rank-2 affine Hecke algebra and its cyclotomic
//! quotients of type `G(m,1,2)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`coeffring`]: the coefficient ring `Z[q^±1, e_1, …, e_{m-1}, e_m^±1]`.
//! - [`affine`]: the affine Hecke algebra in Bernstein form `f + g T`.
//! - [`cyclotomic`]: the quotient by `f_v(X1)`, its restricted normal form and
//!   the construction of the centre basis.
//! - [`specialize`]: numeric specialization into `Q` or `F_p`, dense exact
//!   linear algebra, centre dimensions and the semisimplicity polynomial.
//! - [`cli`]: the command-line front end used by the `hecke-centre` binary.
//!
//! Runnable walkthroughs of each capability live in the crate's `examples/`
//! directory.

pub mod affine;
pub mod cli;
pub mod coeffring;
pub mod cyclotomic;
mod error;
pub mod report;
pub mod sample;
pub mod specialize;

pub use error::{Error, Result};
