//! Finite orthomodular lattices with their center-valued modal operators.
//!
//! The crate builds finite lattices from cover relations, attaches an
//! orthocomplement, computes the center and the operators
//! `◇a = min{z central : a ≤ z}` and `□a = ¬◇¬a`, and checks the
//! classical-consequence characterization and the square-of-opposition
//! relations exhaustively over every context of a lattice.

pub mod consequences;
pub mod construct;
pub mod contexts;
pub mod elem;
pub mod io;
pub mod lattice;
pub mod modal;
pub mod ortho;
pub mod report;
pub mod square;

pub use contexts::{BooleanSubalgebra, ContextError, Valuation};
pub use elem::{Elem, ElemSet};
pub use lattice::{Lattice, LatticeError};
pub use modal::{ModalError, ModalLattice};
pub use ortho::{OrthoError, OrthoLattice};

/// Outcome of an exhaustive check: either the property holds everywhere or
/// the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Counterexample(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Counterexample(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Verdict<V> {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Counterexample(w) => Verdict::Counterexample(f(w)),
        }
    }

    /// `Holds` if `witness` is `None`.
    pub fn from_option(witness: Option<W>) -> Self {
        match witness {
            None => Verdict::Holds,
            Some(w) => Verdict::Counterexample(w),
        }
    }
}
