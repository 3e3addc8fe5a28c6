//! Wreath products `Σ_m ≀ Σ_d` of symmetric groups: the Bruhat order indexed by
//! the group, a combinatorial model of the convolution algebra on Steinberg
//! component classes, Clifford-theory irreducibles over exact rationals, and
//! the Springer-type correspondence between the two index sets.

pub mod algebra;
pub mod bruhat;
pub mod error;
pub mod matrix;
pub mod orbit;
pub mod partition;
pub mod perm;
pub mod rep;
pub mod scalar;
pub mod springer;
pub mod wreath;

pub use error::{Error, Result};
pub use partition::Partition;
pub use perm::Permutation;
pub use scalar::ExactScalar;
pub use wreath::{GroupContext, WreathElement};
