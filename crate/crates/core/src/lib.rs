//! Exact-arithmetic toolkit for modular character theory at desk scale.
//!
//! Everything here computes over exact scalars: arbitrary-precision integers,
//! rationals, and elements of cyclotomic fields. No floats, no tolerances —
//! every verdict produced by the verification suites is an exact integer
//! comparison.
//!
//! The crate is organised around the objects it manipulates:
//!
//! - [`exactnum`]: rationals, cyclotomic fields `Q(zeta_N)`, Gauss sums,
//!   factorial valuations. The numeric substrate for the rest.
//! - [`partitions`]: integer partitions, hook lengths, the p-abacus,
//!   p-cores and block weights.
//! - [`symblocks`]: p-blocks of symmetric groups and the bound checks
//!   `l(B) < p^w`, `|IBr| * chi(1)_p <= |G|_p`, defect-2/weight-2.
//! - [`sl2`]: ordinary and Brauer character tables of `SL2(q)` in defining
//!   characteristic, exact decomposition matrices, and the Psi/Delta
//!   multiplicity analysis.
//! - [`smallgroups`]: character tables for the p'-subgroups of `SL2(p)`
//!   and the exhaustive `[psi, theta*delta]` bound sweep.
//! - [`rootsys`]: root systems, Borel-de Siebenthal subsystems, and the
//!   general-linear torus arithmetic used for non-defining characteristic.
//! - [`checker`]: a JSON schema for externally produced decomposition data
//!   and an auditor that grades it against the same bounds.

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Exact rational scalar: every coefficient, multiplicity and inner product
/// in this crate is a `Rat`.
pub type Rat = num_rational::Ratio<Int>;

pub mod checker;
pub mod exactnum;
pub mod partitions;
pub mod rootsys;
pub mod sl2;
pub mod smallgroups;
pub mod symblocks;

pub use exactnum::Cyclotomic;
pub use partitions::Partition;
