//! Exact classification of corank-one polynomial map germs into folds,
//! cusps and higher Morin singularities, plus a numeric companion and the
//! Lefschetz bifurcation study.

pub mod context;
pub mod criteria;
pub mod error;
pub mod frame;
pub mod germ;
pub mod lefschetz;
pub mod matrix;
pub mod normal_forms;
pub mod numeric;
pub mod parse;
pub mod poly;
pub mod rational;

pub use context::{Ctx, Role, VariableContext};
pub use criteria::{classify, classify_with, ClassifyOptions, CriteriaReport, DegenerateReason, Label};
pub use error::{AlgebraError, GermError, NumericError, ParseError};
pub use frame::{build_frame, directional_derivative, AdaptedFrame, PolyVectorField};
pub use germ::{normalize, validate, GermRank, MapGerm, NormalizedGerm};
pub use matrix::{Inertia, PolyMatrix, RationalMatrix};
pub use numeric::{numeric_classify, project_to_singular_locus, scan_region, NumericGerm, NumericLabel, NumericVerdict, Tolerances};
pub use parse::{parse_polynomial, GermDocument};
pub use poly::Polynomial;
pub use rational::Rational;
