//! Exact dagger additive matrix categories over pluggable rigs.

pub mod backend;
pub mod checks;
pub mod completion;
pub mod corpus;
pub mod error;
pub mod generators;
pub mod laws;
pub mod linalg;
pub mod matcat;
pub mod matrix;
pub mod pinv;
pub mod positivity;
pub mod rig;
pub mod trace;
pub mod verdict;

pub use backend::Backend;
pub use error::MatError;
pub use linalg::Solve;
pub use matrix::{BlockPartition, Matrix};
pub use pinv::{PinvMethod, PinvResult};
pub use rig::{
    Bool, DaggerRig, Dual, Enumerable, Field, FreeIsometry, Gaussian, Gf2, Rig, RigDescriptor,
    RigKind, Ring, WordRigXY,
};
pub use verdict::{Certificate, Verdict};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type QMatrix = Matrix<BigRational>;
pub type GaussianMatrix = Matrix<Gaussian>;
pub type ZMatrix = Matrix<BigInt>;
pub type Gf2Matrix = Matrix<Gf2>;
pub type DualMatrix = Matrix<Dual>;
pub type BoolMatrix = Matrix<Bool>;
pub type XyMatrix = Matrix<WordRigXY>;
pub type FreeIsometryMatrix = Matrix<FreeIsometry>;
