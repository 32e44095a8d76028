//! Specialization of the parameters into an exact field and the dense linear
//! algebra built on it.

pub mod field;
mod generic;
pub mod linalg;
mod multipartition;
mod rep;
mod semisimple;

pub use field::{
    elementary_symmetric_values, is_prime, parse_ratio_list, Field, ParamPoint, PrimeField, Ratio,
    Rationals, DEFAULT_PRIME,
};
pub use generic::{
    check_centre_basis, counterexample_q1, generic_prime_point, generic_rational_point, q1_point,
    symmetric_image_vs_centre, BasisCheck, DEFAULT_SEED,
};
pub use linalg::{Matrix, Span};
pub use multipartition::{count_multipartitions, multipartitions, partitions};
pub use rep::{
    centre_dimension, evaluate_matrix, evaluate_vector, left_mult_matrix, subalgebra_closure,
    subalgebra_dimension, symmetric_generators, Closure, CommutatorSystem, LinearRep,
};
pub use semisimple::{is_semisimple, semisimplicity_p};
