//! Exact block invariants for unipotent ℓ-blocks of finite classical groups.
//!
//! The crate counts the irreducible characters `k(B)` of unipotent ℓ-blocks
//! (odd ℓ, non-defining characteristic), computes defect group orders and
//! reports whether `k(B) ≤ |D|` holds, strictly when the defect group is
//! non-abelian. All arithmetic is exact ([`Nat`] is an arbitrary-precision
//! unsigned integer).
//!
//! Module map:
//!
//! - [`combinatorics`]: partitions, multipartitions, ℓ-compositions, d-cores.
//! - [`lseries`]: slot inventories of ℓ-element classes and the independent
//!   class-by-class count of block characters.
//! - [`blocks`]: closed formulas, defect exponents, verdicts and sweeps.
//! - [`exceptional`]: embedded exceptional-group tables and their checks.
//! - [`oracle`]: brute-force censuses of tiny matrix and reflection groups.
//! - [`cli`]: sweep specifications, reports and the subcommand drivers.

pub mod blocks;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exceptional;
pub mod family;
pub mod lseries;
pub mod oracle;

pub use combinatorics::Nat;
pub use error::{Error, Result};
pub use family::GroupFamily;
