//! Exact counting of the ways a target sum arises from a handful of dice,
//! and of the closely related restricted compositions, polygonal-number
//! representations and two-constraint nonnegative solution counts.
//!
//! Every count is an arbitrary-precision integer ([`Count`]). The dice
//! problem is solved by four independent engines (polynomial power,
//! add-a-die table, λ-recurrence and alternating binomial closed form) so
//! that each can be checked against the others and against the brute-force
//! enumerators in [`oracle`].
//!
//! - [`series`]: dense univariate and bivariate polynomials over [`Count`]
//! - [`homogeneous`]: n identical dice with faces 1..m
//! - [`heterogeneous`]: pools of unlike dice with arbitrary face marks
//! - [`polygonal`]: polygonal-number series and representability checks
//! - [`regula`]: solutions of two simultaneous linear equations
//! - [`oracle`]: exhaustive enumerators used as ground truth
//! - [`golden`]: digitized historical tables and their verification

pub mod error;
pub mod golden;
pub mod heterogeneous;
pub mod homogeneous;
pub mod oracle;
pub mod polygonal;
pub mod regula;
pub mod series;

pub use error::{Error, Result};
pub use golden::{verify_against_golden, GoldenTable, TableId, VerificationReport};
pub use heterogeneous::{
    hetero_count_closed_form, hetero_count_product, hetero_distribution, DicePool, MarkedDie,
    SignedExponentList,
};
pub use homogeneous::{
    binomial, count_closed_form, count_lambda_recurrence, count_poly, count_table_add_die,
    CountTable, Engine, HomoQuery,
};
pub use polygonal::{
    check_all_positive, count_partitions_with_parts, ordered_representation_counts,
    polygonal_number, polygonal_series, Coverage, PartSet, PolygonalSpec,
};
pub use regula::{rv_count_solutions, rv_enumerate_solutions, Enumeration, LinearSystem2, Mode};
pub use series::{BiPoly, Count, IntPoly};
