//! Orthocomplemented lattices: the orthomodular law, commutation, Greechie
//! sets and generated sublattices/subalgebras.

use std::ops::Deref;

use thiserror::Error;

use crate::elem::{Elem, ElemSet};
use crate::lattice::Lattice;
use crate::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error("orthocomplement map covers {got} elements, lattice has {expected}")]
    NotTotal { expected: usize, got: usize },
    #[error("orthocomplement is not an involution at `{0}`")]
    InvolutionViolation(String),
    #[error("`{0}` and its orthocomplement are not complements")]
    ComplementViolation(String),
    #[error("De Morgan law fails for `{0}`, `{1}`")]
    DeMorganViolation(String, String),
    #[error("operation needs a non-empty set")]
    EmptySet,
}

/// A bounded lattice together with a validated orthocomplementation.
#[derive(Clone, Debug)]
pub struct OrthoLattice {
    base: Lattice,
    neg: Vec<Elem>,
}

impl Deref for OrthoLattice {
    type Target = Lattice;

    fn deref(&self) -> &Lattice {
        &self.base
    }
}

impl OrthoLattice {
    /// Attaches `neg` (indexed by element) to `lattice` after checking, in
    /// this order, involution, `x ∧ ¬x = 0`, `x ∨ ¬x = 1` and De Morgan.
    pub fn attach(lattice: Lattice, neg: Vec<Elem>) -> Result<Self, OrthoError> {
        let n = lattice.len();
        if neg.len() != n || neg.iter().any(|e| e.index() >= n) {
            return Err(OrthoError::NotTotal {
                expected: n,
                got: neg.len(),
            });
        }
        let name = |x: Elem| lattice.name(x).to_string();
        for x in lattice.elements() {
            if neg[neg[x.index()].index()] != x {
                return Err(OrthoError::InvolutionViolation(name(x)));
            }
        }
        if let Some(x) = lattice
            .elements()
            .find(|&x| lattice.meet(x, neg[x.index()]) != lattice.bottom())
        {
            return Err(OrthoError::ComplementViolation(name(x)));
        }
        if let Some(x) = lattice
            .elements()
            .find(|&x| lattice.join(x, neg[x.index()]) != lattice.top())
        {
            return Err(OrthoError::ComplementViolation(name(x)));
        }
        for x in lattice.elements() {
            for y in lattice.elements() {
                let lhs = neg[lattice.join(x, y).index()];
                let rhs = lattice.meet(neg[x.index()], neg[y.index()]);
                if lhs != rhs {
                    return Err(OrthoError::DeMorganViolation(name(x), name(y)));
                }
            }
        }
        Ok(OrthoLattice { base: lattice, neg })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.base
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x.index()]
    }

    pub fn neg_table(&self) -> &[Elem] {
        &self.neg
    }

    /// `x ∨ (¬x ∧ (x ∨ y)) = x ∨ y` for all pairs; the first failing `(x, y)`
    /// in index order otherwise.
    pub fn check_orthomodular(&self) -> Verdict<(Elem, Elem)> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.join(x, y);
                if self.join(x, self.meet(self.neg(x), xy)) != xy {
                    return Verdict::Counterexample((x, y));
                }
            }
        }
        Verdict::Holds
    }

    pub fn is_orthomodular(&self) -> bool {
        self.check_orthomodular().holds()
    }

    /// `a = (a ∧ b) ∨ (a ∧ ¬b)`
    #[inline]
    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.join(self.meet(a, b), self.meet(a, self.neg(b))) == a
    }

    /// Row `a` holds every `b` with `commutes(a, b)`.
    pub fn commutation_rows(&self) -> Vec<ElemSet> {
        self.elements()
            .map(|a| self.set_of(self.elements().filter(|&b| self.commutes(a, b))))
            .collect()
    }

    /// Every three distinct members contain one that commutes with the other
    /// two.
    pub fn is_greechie_set(&self, set: &ElemSet) -> Result<bool, OrthoError> {
        if set.is_empty() {
            return Err(OrthoError::EmptySet);
        }
        let members = set.to_vec();
        let k = members.len();
        let c = |i: usize, j: usize| self.commutes(members[i], members[j]);
        for i in 0..k {
            for j in i + 1..k {
                for l in j + 1..k {
                    let ok = (c(i, j) && c(i, l)) || (c(j, i) && c(j, l)) || (c(l, i) && c(l, j));
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn is_neg_closed(&self, set: &ElemSet) -> bool {
        set.iter().all(|x| set.contains(self.neg(x)))
    }

    /// Least superset of `gens` closed under `∧` and `∨`.
    pub fn generated_sublattice(&self, gens: &ElemSet) -> Result<ElemSet, OrthoError> {
        self.closure(gens, false)
    }

    /// Least superset of `gens` closed under `∧`, `∨` and `¬`.
    pub fn generated_subalgebra(&self, gens: &ElemSet) -> Result<ElemSet, OrthoError> {
        self.closure(gens, true)
    }

    fn closure(&self, gens: &ElemSet, with_neg: bool) -> Result<ElemSet, OrthoError> {
        if gens.is_empty() {
            return Err(OrthoError::EmptySet);
        }
        let mut members = self.empty_set();
        let mut list: Vec<Elem> = Vec::with_capacity(gens.len());
        let mut frontier: Vec<Elem> = Vec::new();
        let add = |x: Elem, members: &mut ElemSet, frontier: &mut Vec<Elem>| {
            if members.insert(x) {
                frontier.push(x);
            }
        };
        for g in gens.iter() {
            add(g, &mut members, &mut frontier);
            if with_neg {
                add(self.neg(g), &mut members, &mut frontier);
            }
        }
        // Each newly found element is combined with everything already known
        // exactly once, including itself and later arrivals.
        while let Some(x) = frontier.pop() {
            list.push(x);
            for &y in &list {
                add(self.meet(x, y), &mut members, &mut frontier);
                add(self.join(x, y), &mut members, &mut frontier);
            }
            if with_neg {
                add(self.neg(x), &mut members, &mut frontier);
            }
        }
        Ok(members)
    }

    /// Contains 0 and 1, is closed under `∧`, `∨`, `¬`, and distributive on
    /// all of its triples.
    pub fn is_boolean_subalgebra(&self, set: &ElemSet) -> bool {
        self.boolean_subalgebra_violation(set).is_none()
    }

    /// Why `set` fails to be a Boolean subalgebra, if it does.
    pub fn boolean_subalgebra_violation(&self, set: &ElemSet) -> Option<SubalgebraViolation> {
        if !set.contains(self.bottom()) || !set.contains(self.top()) {
            return Some(SubalgebraViolation::MissingBounds);
        }
        let members = set.to_vec();
        for &x in &members {
            if !set.contains(self.neg(x)) {
                return Some(SubalgebraViolation::NotClosed(x));
            }
            for &y in &members {
                if !set.contains(self.meet(x, y)) || !set.contains(self.join(x, y)) {
                    return Some(SubalgebraViolation::NotClosed(x));
                }
            }
        }
        for &x in &members {
            for &y in &members {
                for &z in &members {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some(SubalgebraViolation::NotDistributive(x, y, z));
                    }
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubalgebraViolation {
    MissingBounds,
    NotClosed(Elem),
    NotDistributive(Elem, Elem, Elem),
}
