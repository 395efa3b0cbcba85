//! Classification of finite quandles of cyclic type.
//!
//! A quandle of cyclic type on `n >= 3` points is one where every right
//! translation `s_x` fixes `x` and cycles the other `n - 1` points. Up to
//! isomorphism these are in bijection with the set `F_n` of `(n-1)`-cycles
//! `s2` fixing 2 whose conjugates by powers of `s1 = (2 3 ... n)` and the
//! conjugates of `s1` by powers of `s2` form the same set.
//!
//! - [`perm`]: permutations and cycle notation
//! - [`quandle`]: the quandle data model, orbits, inner groups, isomorphisms
//! - [`cyclic`]: cyclic-type predicates and the permutation-set conditions
//! - [`classify`]: enumeration of `F_n` and the quandle attached to each member
//! - [`oracle`]: brute-force verification independent of the enumeration
//! - [`cli`]: the command-line front end

pub mod classify;
pub mod cli;
pub mod cyclic;
pub mod oracle;
pub mod perm;
pub mod quandle;

pub use classify::{enumerate_fn, phi, ClassificationRow};
pub use perm::Permutation;
pub use quandle::{are_isomorphic, IsoWitness, Quandle};
