//! Exact computation with concrete finite groups: finite fields, matrix and
//! permutation groups, product constructions, structural analysis and
//! π-irrationality checks.

pub mod analysis;
pub mod arith;
pub mod constructions;
pub mod element;
pub mod error;
pub mod field;
pub mod group;
pub mod irrationality;
pub mod law;
pub mod linalg;
pub mod products;
pub mod subgroup;

pub use constructions::{ActionSpec, Family, GroupSpec, MatrixLit};
pub use element::Element;
pub use error::{FieldError, GroupError, Result};
pub use field::FieldCtx;
pub use group::{Group, Op, DEFAULT_BUDGET};
pub use irrationality::{
    crosscheck_nc, generator_witness, irrationality, irrationality_report, is_irrational, is_pi_irrational,
    pi_irrationality, power_orbit, power_witness, ClassRow, IrrationalityReport, PowerOrbit, Verdict, Witness,
};
pub use linalg::Matrix;
pub use subgroup::Subgroup;
