//! Exact combinatorics of the Young and Schur graphs.
//!
//! This crate works with two graded graphs: the *Young graph* of ordinary
//! partitions and the *Schur graph* of strict partitions, both ordered by
//! one-box containment. On top of them it builds, entirely in arbitrary
//! precision rational arithmetic:
//!
//! - path counts `f` and `g` (hook-length and product formulas),
//! - down/up Markov transition kernels and their coherent measure families
//!   (Plancherel on both graphs, the two-parameter `z` family on the Young
//!   graph, the one-parameter `alpha` family on the Schur graph),
//! - the doubling map `D` embedding strict partitions into ordinary ones,
//!   with the transfer identities it induces between the two graphs,
//! - interlacing (maxima/minima) coordinates of diagrams and the rational
//!   functions whose partial fractions encode Plancherel up probabilities,
//! - seeded, reproducible growth samplers, including the forced
//!   symmetrization walk that stays on doubled diagrams.
//!
//! Everything observable is an exact `BigRational`; floating point never
//! enters any probability or identity.
//!
//! ```
//! use young_schur::{StrictPartition, measures};
//!
//! let lam: StrictPartition = "2,1".parse().unwrap();
//! let mu: StrictPartition = "2".parse().unwrap();
//! let alpha = measures::AlphaParam::new("3/16".parse().unwrap()).unwrap();
//!
//! // The strict up kernel agrees with the doubled ordinary one.
//! assert!(measures::up_equality_holds(&mu, &lam, &alpha).unwrap());
//! ```

pub mod error;
pub mod graph;
pub mod kerov;
pub mod measures;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod sample;

pub use error::Error;
pub use partition::{Cell, Frobenius, Partition, StrictPartition};
pub use rational::Rational;
