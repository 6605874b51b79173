//! Exact computation with the free product of order-2 cyclic groups and its
//! involutory matrix representations.
//!
//! - [`exactmath`]: Gaussian-rational scalars and dense square matrices.
//! - [`words`]: reduced words, multiplication, inversion, two-generator normal forms.
//! - [`rep`]: generator matrices, the representation, bounded faithfulness scans.
//! - [`algebra`]: the group algebra, `ε0`, inversion and radial-operator formulas.
//! - [`lucas`]: the Lucas triangle and the polynomials `f_n`.
//!
//! ```
//! use gamma2_core::{algebra, lucas, rep::RepConfig};
//!
//! let cfg = RepConfig::from_i64(&[&[2, 1], &[-1, 1]]).unwrap();
//! let eps = algebra::epsilon0(&cfg).unwrap();
//! assert_eq!(eps.value, (-7).into());
//! let direct = algebra::frak_x_direct(&cfg, 5).unwrap();
//! let closed = lucas::f_eval(5, &eps.value, lucas::Backend::ClosedForm);
//! assert_eq!(direct.as_scalar(), Some(closed));
//! ```

pub mod algebra;
pub mod error;
pub mod exactmath;
pub mod lucas;
pub mod rep;
pub mod words;

pub use error::{Error, Result};
pub use exactmath::{ExactComplex, ExactRational, SquareMatrix};
pub use words::{GroupWord, WordFormN2};
