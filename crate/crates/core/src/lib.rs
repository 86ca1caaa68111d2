//! Finitely presented graded-commutative algebras over F2 with Steenrod
//! squares and Milnor operations, plus certificate checks for coniveau
//! bounds on mod 2 cohomology classes.
//!
//! ```
//! use sqcoh::{bundled_model, milnor_q, GradedAlgebra, ModelId};
//!
//! let alg = GradedAlgebra::with_default_bound(bundled_model(ModelId::Bpu4));
//! let x3 = alg.parse("x3").unwrap();
//! let q2 = milnor_q(&alg, 2, &x3).unwrap();
//! assert_eq!(alg.format(&q2), "x5^2");
//! ```

pub mod algebra;
pub mod checker;
pub mod error;
pub mod f2;
pub mod presentation;
pub mod spaces;
pub mod steenrod;

pub use algebra::{monomials_of_degree, DegreeBasis, GradedAlgebra, DEFAULT_MAX_DEGREE};
pub use checker::{
    check_coniveau_ge1, check_strong_coniveau_lt1, verify_paper_suite, verify_suite,
    ConiveauCertificate, GroupOrder, IntegralCertificate, Verdict, VerificationReport,
};
pub use error::{Error, Result};
pub use f2::{F2Matrix, F2Vector, RowReduced};
pub use presentation::{parse_presentation, Generator, MixedDegrees, Monomial, Poly, Presentation};
pub use spaces::{bundled_model, kunneth_product, model_by_name, quotient_by_ideal, ModelId};
pub use steenrod::{
    adem_normalize, apply_sq, apply_sq_word, check_table_consistency, milnor_q, AdmissibleSum,
    SqWord,
};
