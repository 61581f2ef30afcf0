//! Classical consequences of a proposition, computed three ways.
//!
//! The reference computation quantifies over every context `W ∋ p` and every
//! valuation of the expanded context `W^◇`. The two order-theoretic routes
//! filter the center by `p ≤ z` and by `◇p ≤ z`. All three must agree.

use crate::contexts::{
    all_valuations, enumerate_boolean_subalgebras, expanded_context, BooleanSubalgebra, ContextError,
};
use crate::elem::{Elem, ElemSet};
use crate::modal::ModalLattice;
use crate::Verdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Every context containing `p`, every valuation of its expansion.
    Definition,
    /// Central `z` with `p ≤ z`.
    Order,
    /// Central `z` with `◇p ≤ z`.
    Diamond,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceSet {
    pub of: Elem,
    pub members: ElemSet,
    pub method: Method,
}

/// Central elements true under every valuation of `W^◇` that makes `p` true.
pub fn consequences_in_context(
    ml: &ModalLattice,
    p: Elem,
    context: &BooleanSubalgebra,
) -> Result<ElemSet, ContextError> {
    let expanded = expanded_context(ml, context)?;
    let mut members = ml.center().members().clone();
    for v in all_valuations(ml, &expanded) {
        if v.value(p) {
            members.intersect_with(v.filter());
        }
    }
    Ok(members)
}

pub fn consequences_by_definition(ml: &ModalLattice, p: Elem, budget: usize) -> Result<ConsequenceSet, ContextError> {
    let mut members = ml.center().members().clone();
    for w in enumerate_boolean_subalgebras(ml, Some(p), budget)? {
        members.intersect_with(&consequences_in_context(ml, p, &w)?);
    }
    Ok(ConsequenceSet {
        of: p,
        members,
        method: Method::Definition,
    })
}

pub fn consequences_by_order(ml: &ModalLattice, p: Elem) -> ConsequenceSet {
    ConsequenceSet {
        of: p,
        members: ml.up_set(p).intersection(ml.center().members()),
        method: Method::Order,
    }
}

pub fn consequences_by_diamond(ml: &ModalLattice, p: Elem) -> ConsequenceSet {
    ConsequenceSet {
        of: p,
        members: ml.up_set(ml.diamond(p)).intersection(ml.center().members()),
        method: Method::Diamond,
    }
}

/// The three consequence sets of one element and whether they coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceCheck {
    pub element: Elem,
    pub definition: ElemSet,
    pub order: ElemSet,
    pub diamond: ElemSet,
    /// First element lying in some but not all of the three sets.
    pub agreement: Verdict<Elem>,
    /// A context whose own consequence set differs from the full one.
    pub context_independence: Verdict<BooleanSubalgebra>,
}

impl ConsequenceCheck {
    pub fn holds(&self) -> bool {
        self.agreement.holds() && self.context_independence.holds()
    }
}

pub fn check_proposition2(ml: &ModalLattice, p: Elem, budget: usize) -> Result<ConsequenceCheck, ContextError> {
    let contexts = enumerate_boolean_subalgebras(ml, Some(p), budget)?;
    let per_context = contexts
        .iter()
        .map(|w| consequences_in_context(ml, p, w))
        .collect::<Result<Vec<_>, _>>()?;
    let mut definition = ml.center().members().clone();
    for set in &per_context {
        definition.intersect_with(set);
    }
    let order = consequences_by_order(ml, p).members;
    let diamond = consequences_by_diamond(ml, p).members;

    let disagreement = ml.elements().find(|&z| {
        let hits = [definition.contains(z), order.contains(z), diamond.contains(z)];
        hits.iter().any(|&h| h) && !hits.iter().all(|&h| h)
    });
    let context_independence = Verdict::from_option(
        contexts
            .into_iter()
            .zip(&per_context)
            .find(|(_, set)| **set != definition)
            .map(|(w, _)| w),
    );
    Ok(ConsequenceCheck {
        element: p,
        definition,
        order,
        diamond,
        agreement: Verdict::from_option(disagreement),
        context_independence,
    })
}

/// `◇p ∧ ◇¬p = 0` implies `p` central; the counterexample is `p` itself.
pub fn check_lemma3(ml: &ModalLattice, p: Elem) -> Verdict<Elem> {
    let overlap = ml.meet(ml.diamond(p), ml.diamond(ml.neg(p)));
    if overlap == ml.bottom() && !ml.is_central(p) {
        Verdict::Counterexample(p)
    } else {
        Verdict::Holds
    }
}
