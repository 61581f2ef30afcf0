//! Contexts (Boolean subalgebras), blocks, classically expanded contexts and
//! their two-valued valuations.

use std::collections::HashSet;

use thiserror::Error;

use crate::elem::{Elem, ElemSet};
use crate::modal::ModalLattice;
use crate::ortho::{OrthoLattice, SubalgebraViolation};

/// Default cap on the number of distinct subalgebras an enumeration may visit.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error("set is not a Boolean subalgebra ({0:?})")]
    NotBoolean(SubalgebraViolation),
    #[error("more than {0} Boolean subalgebras; raise the budget or use blocks")]
    BudgetExceeded(usize),
    #[error("set is not a filter of the subalgebra")]
    NotAFilter,
    #[error("filter is not maximal")]
    NotMaximal,
}

/// A Boolean subalgebra of an ambient orthomodular lattice, with its atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanSubalgebra {
    members: ElemSet,
    atoms: Vec<Elem>,
}

impl BooleanSubalgebra {
    pub fn from_members(ol: &OrthoLattice, members: ElemSet) -> Result<Self, ContextError> {
        if let Some(v) = ol.boolean_subalgebra_violation(&members) {
            return Err(ContextError::NotBoolean(v));
        }
        let bottom = ol.bottom();
        let atoms = members
            .iter()
            .filter(|&x| x != bottom)
            .filter(|&x| ol.down_set(x).intersection_count(&members) == 2)
            .collect();
        Ok(BooleanSubalgebra { members, atoms })
    }

    /// The subalgebra generated by `gens`; fails if that is not Boolean.
    pub fn generated_by(ol: &OrthoLattice, gens: &ElemSet) -> Result<Self, ContextError> {
        let mut gens = gens.clone();
        gens.insert(ol.bottom());
        let members = ol
            .generated_subalgebra(&gens)
            .expect("generator set contains the bottom");
        Self::from_members(ol, members)
    }

    /// `{0, p, ¬p, 1}`
    pub fn minimal_containing(ol: &OrthoLattice, p: Elem) -> Self {
        let members = ol.set_of([ol.bottom(), p, ol.neg(p), ol.top()]);
        Self::from_members(ol, members).expect("{0, p, ¬p, 1} is always Boolean")
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn atoms(&self) -> &[Elem] {
        &self.atoms
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.members.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_subalgebra_of(&self, other: &BooleanSubalgebra) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Atoms of this subalgebra lying below `x`.
    pub fn atoms_below<'a>(&'a self, ol: &'a OrthoLattice, x: Elem) -> impl Iterator<Item = Elem> + 'a {
        self.atoms.iter().copied().filter(move |&t| ol.leq(t, x))
    }
}

/// Every Boolean subalgebra of `ol`, optionally only those containing
/// `containing`, sorted by size and then by member indices.
///
/// Starts from `{0, 1}` and repeatedly adjoins an element commuting with the
/// whole current subalgebra; each finite Boolean subalgebra is reachable this
/// way. Fails once more than `budget` distinct subalgebras have been found.
pub fn enumerate_boolean_subalgebras(
    ol: &OrthoLattice,
    containing: Option<Elem>,
    budget: usize,
) -> Result<Vec<BooleanSubalgebra>, ContextError> {
    let commute = ol.commutation_rows();
    let trivial = ol.set_of([ol.bottom(), ol.top()]);
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut found: Vec<BooleanSubalgebra> = Vec::new();
    let mut queue = vec![trivial.clone()];
    seen.insert(trivial);

    while let Some(members) = queue.pop() {
        let mut compatible = ElemSet::full(ol.len());
        for m in members.iter() {
            compatible.intersect_with(&commute[m.index()]);
        }
        let algebra = BooleanSubalgebra::from_members(ol, members)?;
        for x in compatible.iter().filter(|&x| !algebra.contains(x)) {
            let mut gens = algebra.members().clone();
            gens.insert(x);
            let next = ol.generated_subalgebra(&gens).expect("non-empty generators");
            if seen.insert(next.clone()) {
                if seen.len() > budget {
                    return Err(ContextError::BudgetExceeded(budget));
                }
                queue.push(next);
            }
        }
        found.push(algebra);
    }

    if let Some(p) = containing {
        found.retain(|b| b.contains(p));
    }
    found.sort_by(|a, b| a.members.canonical_cmp(&b.members));
    Ok(found)
}

/// The maximal Boolean subalgebras, in canonical order.
pub fn blocks(ol: &OrthoLattice, budget: usize) -> Result<Vec<BooleanSubalgebra>, ContextError> {
    let all = enumerate_boolean_subalgebras(ol, None, budget)?;
    let maximal = all
        .iter()
        .filter(|b| !all.iter().any(|c| c.len() > b.len() && b.is_subalgebra_of(c)))
        .cloned()
        .collect();
    Ok(maximal)
}

/// `W^◇`: the subalgebra generated by `W` together with the center.
pub fn expanded_context(ml: &ModalLattice, context: &BooleanSubalgebra) -> Result<BooleanSubalgebra, ContextError> {
    let mut gens = context.members().clone();
    gens.union_with(ml.center().members());
    BooleanSubalgebra::generated_by(ml, &gens)
}

/// One principal filter `{x ∈ B : t ≤ x}` per atom `t` of `B`.
pub fn maximal_filters(ol: &OrthoLattice, algebra: &BooleanSubalgebra) -> Vec<ElemSet> {
    algebra
        .atoms()
        .iter()
        .map(|&t| ol.up_set(t).intersection(algebra.members()))
        .collect()
}

/// A two-valued homomorphism `B → 2`, stored as the maximal filter of
/// elements sent to 1 and the atom generating it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation {
    atom: Elem,
    filter: ElemSet,
}

impl Valuation {
    /// The atom of the subalgebra whose principal filter this is.
    pub fn atom(&self) -> Elem {
        self.atom
    }

    pub fn filter(&self) -> &ElemSet {
        &self.filter
    }

    /// Truth value of a member of the subalgebra.
    #[inline]
    pub fn value(&self, x: Elem) -> bool {
        self.filter.contains(x)
    }
}

/// Checks that `filter` is a maximal filter of `algebra` and that the induced
/// map is a Boolean homomorphism.
pub fn valuation_from_filter(
    ol: &OrthoLattice,
    algebra: &BooleanSubalgebra,
    filter: &ElemSet,
) -> Result<Valuation, ContextError> {
    if filter.is_empty() || !filter.is_subset(algebra.members()) {
        return Err(ContextError::NotAFilter);
    }
    let members = algebra.members().to_vec();
    for x in filter.iter() {
        for &y in &members {
            if ol.leq(x, y) && !filter.contains(y) {
                return Err(ContextError::NotAFilter);
            }
        }
        for y in filter.iter() {
            if !filter.contains(ol.meet(x, y)) {
                return Err(ContextError::NotAFilter);
            }
        }
    }
    if filter.contains(ol.bottom()) {
        return Err(ContextError::NotMaximal);
    }
    if members
        .iter()
        .any(|&x| !filter.contains(x) && !filter.contains(ol.neg(x)))
    {
        return Err(ContextError::NotMaximal);
    }

    let v = |x: Elem| filter.contains(x);
    let homomorphic = v(ol.top())
        && !v(ol.bottom())
        && members.iter().all(|&x| {
            v(ol.neg(x)) != v(x)
                && members
                    .iter()
                    .all(|&y| v(ol.meet(x, y)) == (v(x) && v(y)) && v(ol.join(x, y)) == (v(x) || v(y)))
        });
    if !homomorphic {
        return Err(ContextError::NotMaximal);
    }

    let atom = algebra
        .atoms()
        .iter()
        .copied()
        .find(|&t| filter.contains(t))
        .expect("a maximal filter of a finite Boolean algebra contains an atom");
    Ok(Valuation {
        atom,
        filter: filter.clone(),
    })
}

/// Every valuation of `algebra`, one per atom, in atom order.
pub fn all_valuations(ol: &OrthoLattice, algebra: &BooleanSubalgebra) -> Vec<Valuation> {
    maximal_filters(ol, algebra)
        .iter()
        .map(|f| valuation_from_filter(ol, algebra, f).expect("principal filter of an atom is maximal"))
        .collect()
}
