//! The center of an orthomodular lattice and the operators it induces.
//!
//! For a finite orthomodular lattice every element has a least central upper
//! bound, so `◇a = min{z ∈ Z(L) : a ≤ z}` is total and the lattice is its own
//! modal extension. `□a = ¬◇¬a` is the greatest central element below `a`.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::contexts::BooleanSubalgebra;
use crate::elem::{Elem, ElemSet};
use crate::ortho::OrthoLattice;
use crate::Verdict;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModalError {
    #[error("orthomodular law fails at x = `{x}`, y = `{y}`")]
    NotOrthomodular { x: String, y: String },
    #[error("center is not a Boolean subalgebra")]
    CenterNotBoolean,
    #[error("`{0}` has no least central upper bound")]
    NotSaturated(String),
}

/// `(a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c)`
pub fn dist_d(ol: &OrthoLattice, a: Elem, b: Elem, c: Elem) -> bool {
    ol.meet(ol.join(a, b), c) == ol.join(ol.meet(a, c), ol.meet(b, c))
}

/// `(a ∧ b) ∨ c = (a ∨ c) ∧ (b ∨ c)`
pub fn dist_dstar(ol: &OrthoLattice, a: Elem, b: Elem, c: Elem) -> bool {
    ol.join(ol.meet(a, b), c) == ol.meet(ol.join(a, c), ol.join(b, c))
}

/// Both distributive identities for every permutation of `(a, b, c)`.
pub fn dist_t(ol: &OrthoLattice, a: Elem, b: Elem, c: Elem) -> bool {
    [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
        .into_iter()
        .all(|(x, y, z)| dist_d(ol, x, y, z) && dist_dstar(ol, x, y, z))
}

/// Centrality straight from the definition: `(a, b, z)T` for every pair and
/// `z` has some lattice complement. Quadratic in the lattice size; used as the
/// reference for [`is_central`].
pub fn is_central_by_definition(ol: &OrthoLattice, z: Elem) -> bool {
    let complemented = ol
        .elements()
        .any(|c| ol.meet(z, c) == ol.bottom() && ol.join(z, c) == ol.top());
    complemented && ol.elements().all(|a| ol.elements().all(|b| dist_t(ol, a, b, z)))
}

/// In an orthomodular lattice, `z` is central iff it commutes with every
/// element.
pub fn is_central(ol: &OrthoLattice, z: Elem) -> bool {
    ol.elements().all(|x| ol.commutes(z, x))
}

#[derive(Clone, Debug)]
pub struct CenterInfo {
    algebra: BooleanSubalgebra,
}

impl CenterInfo {
    pub fn members(&self) -> &ElemSet {
        self.algebra.members()
    }

    pub fn as_algebra(&self) -> &BooleanSubalgebra {
        &self.algebra
    }

    pub fn contains(&self, z: Elem) -> bool {
        self.algebra.contains(z)
    }

    pub fn len(&self) -> usize {
        self.algebra.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Computes `Z(L)` with the commutation test and checks that it is a Boolean
/// subalgebra.
pub fn center(ol: &OrthoLattice) -> Result<CenterInfo, ModalError> {
    let members = ol.set_of(ol.elements().filter(|&z| is_central(ol, z)));
    let algebra = BooleanSubalgebra::from_members(ol, members).map_err(|_| ModalError::CenterNotBoolean)?;
    Ok(CenterInfo { algebra })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModalTables {
    diamond: Vec<Elem>,
    boxed: Vec<Elem>,
}

impl ModalTables {
    pub fn diamond(&self, a: Elem) -> Elem {
        self.diamond[a.index()]
    }

    pub fn boxed(&self, a: Elem) -> Elem {
        self.boxed[a.index()]
    }
}

/// Fills `◇` by meeting all central upper bounds, then `□` as `¬◇¬`. Both are
/// checked against their extremal characterizations.
pub fn modal_tables(ol: &OrthoLattice, center: &CenterInfo) -> Result<ModalTables, ModalError> {
    let z = center.members();
    let mut diamond = Vec::with_capacity(ol.len());
    for a in ol.elements() {
        let bounds = ol.up_set(a).intersection(z);
        let d = ol.meet_all(bounds.iter());
        // the meet must itself be one of the central upper bounds
        if !bounds.contains(d) {
            return Err(ModalError::NotSaturated(ol.name(a).to_string()));
        }
        diamond.push(d);
    }
    let mut boxed = Vec::with_capacity(ol.len());
    for a in ol.elements() {
        let b = ol.neg(diamond[ol.neg(a).index()]);
        let below = ol.down_set(a).intersection(z);
        if !below.contains(b) || !below.iter().all(|t| ol.leq(t, b)) {
            return Err(ModalError::NotSaturated(ol.name(ol.neg(a)).to_string()));
        }
        boxed.push(b);
    }
    Ok(ModalTables { diamond, boxed })
}

/// An orthomodular lattice with its center and modal tables precomputed.
#[derive(Clone, Debug)]
pub struct ModalLattice {
    ortho: OrthoLattice,
    center: CenterInfo,
    tables: ModalTables,
}

impl Deref for ModalLattice {
    type Target = OrthoLattice;

    fn deref(&self) -> &OrthoLattice {
        &self.ortho
    }
}

impl ModalLattice {
    pub fn new(ortho: OrthoLattice) -> Result<Self, ModalError> {
        if let Verdict::Counterexample((x, y)) = ortho.check_orthomodular() {
            return Err(ModalError::NotOrthomodular {
                x: ortho.name(x).to_string(),
                y: ortho.name(y).to_string(),
            });
        }
        let center = center(&ortho)?;
        let tables = modal_tables(&ortho, &center)?;
        Ok(ModalLattice { ortho, center, tables })
    }

    pub fn ortho(&self) -> &OrthoLattice {
        &self.ortho
    }

    pub fn center(&self) -> &CenterInfo {
        &self.center
    }

    pub fn tables(&self) -> &ModalTables {
        &self.tables
    }

    #[inline]
    pub fn diamond(&self, a: Elem) -> Elem {
        self.tables.diamond(a)
    }

    #[inline]
    pub fn boxed(&self, a: Elem) -> Elem {
        self.tables.boxed(a)
    }

    #[inline]
    pub fn is_central(&self, z: Elem) -> bool {
        self.center.contains(z)
    }

    /// Evaluates S1–S7 exhaustively, reporting the first counterexample of
    /// each in lexicographic tuple order.
    pub fn check_saturation_axioms(&self) -> Vec<AxiomVerdict> {
        Axiom::ALL
            .into_iter()
            .map(|axiom| AxiomVerdict {
                axiom,
                verdict: self.check_axiom(axiom),
            })
            .collect()
    }

    pub fn check_axiom(&self, axiom: Axiom) -> Verdict<Vec<Elem>> {
        let d = |x| self.diamond(x);
        let first_single =
            |holds: &dyn Fn(Elem) -> bool| Verdict::from_option(self.elements().find(|&x| !holds(x)).map(|x| vec![x]));
        let first_pair = |holds: &dyn Fn(Elem, Elem) -> bool| {
            let witness = self
                .elements()
                .flat_map(|x| self.elements().map(move |y| (x, y)))
                .find(|&(x, y)| !holds(x, y));
            Verdict::from_option(witness.map(|(x, y)| vec![x, y]))
        };
        match axiom {
            Axiom::S1 => first_single(&|x| self.leq(x, d(x))),
            Axiom::S2 => {
                let zero = self.bottom();
                if d(zero) == zero {
                    Verdict::Holds
                } else {
                    Verdict::Counterexample(vec![zero])
                }
            }
            Axiom::S3 => first_single(&|x| d(d(x)) == d(x)),
            Axiom::S4 => first_pair(&|x, y| d(self.join(x, y)) == self.join(d(x), d(y))),
            Axiom::S5 => first_pair(&|x, y| y == self.join(self.meet(y, d(x)), self.meet(y, self.neg(d(x))))),
            Axiom::S6 => first_pair(&|x, y| d(self.meet(x, d(y))) == self.meet(d(x), d(y))),
            Axiom::S7 => first_pair(&|x, y| {
                let lhs = self.meet(self.neg(d(x)), d(y));
                let rhs = d(self.meet(self.neg(x), self.join(y, x)));
                self.leq(lhs, rhs)
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::S1,
        Axiom::S2,
        Axiom::S3,
        Axiom::S4,
        Axiom::S5,
        Axiom::S6,
        Axiom::S7,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            Axiom::S1 => "x ≤ ◇x",
            Axiom::S2 => "◇0 = 0",
            Axiom::S3 => "◇◇x = ◇x",
            Axiom::S4 => "◇(x ∨ y) = ◇x ∨ ◇y",
            Axiom::S5 => "y = (y ∧ ◇x) ∨ (y ∧ ¬◇x)",
            Axiom::S6 => "◇(x ∧ ◇y) = ◇x ∧ ◇y",
            Axiom::S7 => "¬◇x ∧ ◇y ≤ ◇(¬x ∧ (y ∨ x))",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub verdict: Verdict<Vec<Elem>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    fn e(l: &OrthoLattice, n: &str) -> Elem {
        l.elem(n).unwrap()
    }

    #[test]
    fn distributivity_predicates_in_mo2() {
        let l = construct::mo(2);
        let (a, na, b) = (e(&l, "a"), e(&l, "a'"), e(&l, "b"));
        assert!(!dist_d(&l, a, na, b));
        for x in l.elements() {
            for y in l.elements() {
                assert!(dist_t(&l, x, y, l.bottom()));
                assert!(dist_t(&l, x, y, l.top()));
            }
        }
        assert!(!dist_t(&l, e(&l, "b"), e(&l, "b'"), a));
    }

    #[test]
    fn distributive_law_holds_everywhere_in_boolean_cube() {
        let l = construct::boolean(3);
        for x in l.elements() {
            for y in l.elements() {
                for z in l.elements() {
                    assert!(dist_d(&l, x, y, z));
                    assert!(dist_dstar(&l, x, y, z));
                }
            }
        }
    }

    #[test]
    fn centers() {
        let mo2 = construct::mo(2);
        let c = center(&mo2).unwrap();
        assert_eq!(c.members(), &mo2.set_of([mo2.bottom(), mo2.top()]));
        assert!(is_central(&mo2, mo2.top()));
        assert!(!is_central(&mo2, e(&mo2, "a")));
        assert!(!is_central_by_definition(&mo2, e(&mo2, "a")));

        let cube = construct::boolean(3);
        assert_eq!(center(&cube).unwrap().len(), 8);

        let prod = construct::product(&construct::boolean(1), &mo2);
        let c = center(&prod).unwrap();
        let expected = prod.set_of(["0_0", "0_1", "1_0", "1_1"].map(|n| e(&prod, n)));
        assert_eq!(c.members(), &expected);
        assert!(is_central_by_definition(&prod, e(&prod, "1_0")));
    }

    #[test]
    fn modal_operators_in_mo2() {
        let ml = ModalLattice::new(construct::mo(2)).unwrap();
        let a = e(&ml, "a");
        assert_eq!(ml.diamond(a), ml.top());
        assert_eq!(ml.boxed(a), ml.bottom());
        for z in ml.center().members().iter() {
            assert_eq!(ml.diamond(z), z);
            assert_eq!(ml.boxed(z), z);
        }
    }

    #[test]
    fn modal_operators_in_product() {
        let ml = ModalLattice::new(construct::product(&construct::boolean(1), &construct::mo(2))).unwrap();
        let p = e(&ml, "1_a");
        assert_eq!(ml.diamond(p), e(&ml, "1_1"));
        assert_eq!(ml.boxed(p), e(&ml, "1_0"));
    }

    #[test]
    fn axioms_hold_on_mo2() {
        let ml = ModalLattice::new(construct::mo(2)).unwrap();
        for v in ml.check_saturation_axioms() {
            assert!(v.verdict.holds(), "{} failed", v.axiom);
        }
    }

    #[test]
    fn benzene_is_rejected() {
        let err = ModalLattice::new(construct::benzene()).unwrap_err();
        assert_eq!(
            err,
            ModalError::NotOrthomodular {
                x: "a".into(),
                y: "b".into()
            }
        );
    }
}
