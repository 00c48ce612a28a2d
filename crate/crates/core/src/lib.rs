//! Exact combinatorics of monomial ideals.
//!
//! The crate computes, without ever leaving exact arithmetic:
//!
//! * minimal and associated primes of monomial ideals, by two independent
//!   routes (polarization and a brute-force witness scan);
//! * star-neighbor decompositions of embedded associated primes;
//! * initial ideals `ini(I, f)` for a monomial ideal and one linear sum,
//!   by closed-form combinatorial transforms and by a small Buchberger
//!   engine over exact rationals that serves as the ground-truth oracle;
//! * initially regular sequences on cycle and unicyclic edge ideals,
//!   verified step by step to certify depth lower bounds;
//! * depth and projective dimension, by closed formulas for the graph
//!   families and by an independent homological oracle (polarization,
//!   multigraded Betti numbers over restricted simplicial complexes, and
//!   the depth/projective-dimension complement identity).
//!
//! Every fast path is cross-checked against an exhaustive one somewhere in
//! the test suite; `monoideal check` runs the full verification battery.

pub mod budget;
pub mod check;
pub mod cli;
pub mod depth;
pub mod error;
pub mod format;
pub mod groebner;
pub mod ideal;
pub mod primes;
pub mod random;
pub mod ring;
pub mod sequences;
pub mod transforms;

pub use budget::Budget;
pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ring::{LinearForm, Monomial, RingSpec, TermOrder};
