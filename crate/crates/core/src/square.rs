//! The square of opposition over `□p`, `□¬p`, `◇p`, `◇¬p`, checked against
//! every valuation of a classically expanded context.
//!
//! ```text
//!   ¬◇¬p ── contraries ── ¬◇p
//!     │  ╲              ╱  │
//!  subalterns  contradictories  subalterns
//!     │  ╱              ╲  │
//!    ◇p ── subcontraries ── ◇¬p
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::contexts::{
    all_valuations, blocks, enumerate_boolean_subalgebras, expanded_context, BooleanSubalgebra, ContextError, Valuation,
};
use crate::elem::Elem;
use crate::modal::ModalLattice;
use crate::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("`{0}` is central; the square degenerates")]
    PIsCentral(String),
    #[error("`{0}` is not a member of the context")]
    NotInContext(String),
    #[error(transparent)]
    Context(#[from] ContextError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    /// `□p = ¬◇¬p`
    BoxP,
    /// `□¬p = ¬◇p`
    BoxNotP,
    DiamondP,
    DiamondNotP,
}

impl Corner {
    pub fn label(self) -> &'static str {
        match self {
            Corner::BoxP => "¬◇¬p",
            Corner::BoxNotP => "¬◇p",
            Corner::DiamondP => "◇p",
            Corner::DiamondNotP => "◇¬p",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corners {
    pub box_p: Elem,
    pub box_not_p: Elem,
    pub diamond_p: Elem,
    pub diamond_not_p: Elem,
}

impl Corners {
    pub fn of(ml: &ModalLattice, p: Elem) -> Self {
        Corners {
            box_p: ml.boxed(p),
            box_not_p: ml.boxed(ml.neg(p)),
            diamond_p: ml.diamond(p),
            diamond_not_p: ml.diamond(ml.neg(p)),
        }
    }

    pub fn get(&self, corner: Corner) -> Elem {
        match corner {
            Corner::BoxP => self.box_p,
            Corner::BoxNotP => self.box_not_p,
            Corner::DiamondP => self.diamond_p,
            Corner::DiamondNotP => self.diamond_not_p,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Cannot both be true, can both be false.
    Contraries,
    /// Cannot both be false, can both be true.
    Subcontraries,
    /// The subaltern is true whenever its superaltern is; the superaltern is
    /// false whenever the subaltern is.
    Subalterns,
    /// Exactly one of the two is true.
    Contradictories,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Contraries => "contraries",
            Relation::Subcontraries => "subcontraries",
            Relation::Subalterns => "subalterns",
            Relation::Contradictories => "contradictories",
        })
    }
}

/// Outcome of the existential half of a relation, when it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Existential {
    NotRequired,
    /// Atom of `W^◇` whose valuation realizes the claim.
    Witnessed(Elem),
    Missing,
}

/// One instance of a relation between two corners, decided over all
/// valuations of an expanded context. Valuations are named by the atom of
/// `W^◇` generating their filter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub first: Corner,
    pub second: Corner,
    pub universal: Verdict<Elem>,
    pub existential: Existential,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.universal.holds() && !matches!(self.existential, Existential::Missing)
    }
}

/// Corners, expanded context and valuations shared by the four checks.
struct Setting {
    corners: Corners,
    expanded: BooleanSubalgebra,
    valuations: Vec<Valuation>,
}

impl Setting {
    fn new(ml: &ModalLattice, context: &BooleanSubalgebra, p: Elem) -> Result<Self, SquareError> {
        if ml.is_central(p) {
            return Err(SquareError::PIsCentral(ml.name(p).to_string()));
        }
        if !context.contains(p) {
            return Err(SquareError::NotInContext(ml.name(p).to_string()));
        }
        let expanded = expanded_context(ml, context)?;
        let valuations = all_valuations(ml, &expanded);
        Ok(Setting {
            corners: Corners::of(ml, p),
            expanded,
            valuations,
        })
    }

    fn check(
        &self,
        relation: Relation,
        first: Corner,
        second: Corner,
        forbidden: impl Fn(bool, bool) -> bool,
        required: Option<(bool, bool)>,
    ) -> RelationCheck {
        let (x, y) = (self.corners.get(first), self.corners.get(second));
        let universal = Verdict::from_option(
            self.valuations
                .iter()
                .find(|v| forbidden(v.value(x), v.value(y)))
                .map(Valuation::atom),
        );
        let existential = match required {
            None => Existential::NotRequired,
            Some(target) => self
                .valuations
                .iter()
                .find(|v| (v.value(x), v.value(y)) == target)
                .map_or(Existential::Missing, |v| Existential::Witnessed(v.atom())),
        };
        RelationCheck {
            relation,
            first,
            second,
            universal,
            existential,
        }
    }

    fn contraries(&self) -> RelationCheck {
        self.check(
            Relation::Contraries,
            Corner::BoxP,
            Corner::BoxNotP,
            |a, b| a && b,
            Some((false, false)),
        )
    }

    fn subcontraries(&self) -> RelationCheck {
        self.check(
            Relation::Subcontraries,
            Corner::DiamondP,
            Corner::DiamondNotP,
            |a, b| !a && !b,
            Some((true, true)),
        )
    }

    /// `superaltern` true forces `subaltern` true. The other half (subaltern
    /// false forces superaltern false) rules out the same valuations.
    fn subaltern(&self, superaltern: Corner, subaltern: Corner) -> RelationCheck {
        self.check(
            Relation::Subalterns,
            superaltern,
            subaltern,
            |sup, sub| sup && !sub,
            None,
        )
    }

    fn contradictory(&self, first: Corner, second: Corner) -> RelationCheck {
        self.check(Relation::Contradictories, first, second, |a, b| a == b, None)
    }
}

pub fn check_contraries(ml: &ModalLattice, context: &BooleanSubalgebra, p: Elem) -> Result<RelationCheck, SquareError> {
    Ok(Setting::new(ml, context, p)?.contraries())
}

pub fn check_subcontraries(
    ml: &ModalLattice,
    context: &BooleanSubalgebra,
    p: Elem,
) -> Result<RelationCheck, SquareError> {
    Ok(Setting::new(ml, context, p)?.subcontraries())
}

/// Both instances: `¬◇¬p` over `◇p` and `¬◇p` over `◇¬p`.
pub fn check_subalterns(
    ml: &ModalLattice,
    context: &BooleanSubalgebra,
    p: Elem,
) -> Result<[RelationCheck; 2], SquareError> {
    let s = Setting::new(ml, context, p)?;
    Ok([
        s.subaltern(Corner::BoxP, Corner::DiamondP),
        s.subaltern(Corner::BoxNotP, Corner::DiamondNotP),
    ])
}

/// Both instances: `◇p` against `¬◇p` and `¬◇¬p` against `◇¬p`.
pub fn check_contradictories(
    ml: &ModalLattice,
    context: &BooleanSubalgebra,
    p: Elem,
) -> Result<[RelationCheck; 2], SquareError> {
    let s = Setting::new(ml, context, p)?;
    Ok([
        s.contradictory(Corner::DiamondP, Corner::BoxNotP),
        s.contradictory(Corner::BoxP, Corner::DiamondNotP),
    ])
}

/// Which contexts containing `p` a square report ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ContextPolicy {
    #[default]
    All,
    Blocks,
    /// Just `{0, p, ¬p, 1}`.
    Minimal,
}

impl FromStr for ContextPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(ContextPolicy::All),
            "blocks" => Ok(ContextPolicy::Blocks),
            "minimal" => Ok(ContextPolicy::Minimal),
            other => Err(format!(
                "unknown context policy `{other}` (expected all, blocks or minimal)"
            )),
        }
    }
}

impl fmt::Display for ContextPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContextPolicy::All => "all",
            ContextPolicy::Blocks => "blocks",
            ContextPolicy::Minimal => "minimal",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareReport {
    pub element: Elem,
    pub context: BooleanSubalgebra,
    pub expanded: BooleanSubalgebra,
    pub corners: Corners,
    /// Contraries, subcontraries, two subaltern and two contradictory
    /// instances, in that order.
    pub checks: Vec<RelationCheck>,
}

impl SquareReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(RelationCheck::holds)
    }
}

pub fn square_for_context(
    ml: &ModalLattice,
    p: Elem,
    context: &BooleanSubalgebra,
) -> Result<SquareReport, SquareError> {
    let s = Setting::new(ml, context, p)?;
    let checks = vec![
        s.contraries(),
        s.subcontraries(),
        s.subaltern(Corner::BoxP, Corner::DiamondP),
        s.subaltern(Corner::BoxNotP, Corner::DiamondNotP),
        s.contradictory(Corner::DiamondP, Corner::BoxNotP),
        s.contradictory(Corner::BoxP, Corner::DiamondNotP),
    ];
    Ok(SquareReport {
        element: p,
        context: context.clone(),
        expanded: s.expanded,
        corners: s.corners,
        checks,
    })
}

/// One report per context selected by `policy`.
pub fn square_report(
    ml: &ModalLattice,
    p: Elem,
    policy: ContextPolicy,
    budget: usize,
) -> Result<Vec<SquareReport>, SquareError> {
    if ml.is_central(p) {
        return Err(SquareError::PIsCentral(ml.name(p).to_string()));
    }
    let contexts = match policy {
        ContextPolicy::All => enumerate_boolean_subalgebras(ml, Some(p), budget)?,
        ContextPolicy::Blocks => blocks(ml, budget)?.into_iter().filter(|b| b.contains(p)).collect(),
        ContextPolicy::Minimal => vec![BooleanSubalgebra::minimal_containing(ml, p)],
    };
    contexts.iter().map(|w| square_for_context(ml, p, w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;
    use crate::contexts::DEFAULT_BUDGET;

    fn e(ml: &ModalLattice, n: &str) -> Elem {
        ml.elem(n).unwrap()
    }

    #[test]
    fn mo2_atom_minimal_context() {
        let ml = ModalLattice::new(construct::mo(2)).unwrap();
        let a = e(&ml, "a");
        let reports = square_report(&ml, a, ContextPolicy::Minimal, DEFAULT_BUDGET).unwrap();
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert!(r.holds());
        assert_eq!(r.corners.box_p, ml.bottom());
        assert_eq!(r.corners.box_not_p, ml.bottom());
        assert_eq!(r.corners.diamond_p, ml.top());
        assert_eq!(r.corners.diamond_not_p, ml.top());
        // both valuations of {0, a, a', 1} make both boxes false
        assert_eq!(r.checks[0].existential, Existential::Witnessed(a));
    }

    #[test]
    fn product_contraries_and_subcontraries() {
        let ml = ModalLattice::new(construct::product(&construct::boolean(1), &construct::mo(2))).unwrap();
        let p = e(&ml, "1_a");
        let w = BooleanSubalgebra::minimal_containing(&ml, p);
        let corners = Corners::of(&ml, p);
        assert_eq!(corners.box_p, e(&ml, "1_0"));
        assert_eq!(corners.box_not_p, e(&ml, "0_0"));
        assert_eq!(corners.diamond_p, e(&ml, "1_1"));
        assert_eq!(corners.diamond_not_p, e(&ml, "0_1"));

        let c = check_contraries(&ml, &w, p).unwrap();
        assert!(c.holds());
        let Existential::Witnessed(atom) = c.existential else {
            panic!("no witness")
        };
        assert!(!ml.leq(atom, corners.box_p) && !ml.leq(atom, corners.box_not_p));

        let s = check_subcontraries(&ml, &w, p).unwrap();
        assert!(s.holds());
        assert!(check_subalterns(&ml, &w, p).unwrap().iter().all(RelationCheck::holds));
        assert!(check_contradictories(&ml, &w, p)
            .unwrap()
            .iter()
            .all(RelationCheck::holds));
    }

    #[test]
    fn central_elements_are_rejected() {
        let ml = ModalLattice::new(construct::boolean(3)).unwrap();
        for p in ml.elements() {
            assert!(matches!(
                square_report(&ml, p, ContextPolicy::All, DEFAULT_BUDGET),
                Err(SquareError::PIsCentral(_))
            ));
        }
    }

    #[test]
    fn element_outside_context_is_rejected() {
        let ml = ModalLattice::new(construct::mo(2)).unwrap();
        let w = BooleanSubalgebra::minimal_containing(&ml, e(&ml, "b"));
        assert!(matches!(
            check_contraries(&ml, &w, e(&ml, "a")),
            Err(SquareError::NotInContext(_))
        ));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("blocks".parse::<ContextPolicy>(), Ok(ContextPolicy::Blocks));
        assert!("some".parse::<ContextPolicy>().is_err());
    }
}
