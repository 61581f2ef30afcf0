//! Name-based reports for the command line. Each report serializes to JSON;
//! the text form is rendered from the same value.

use std::fmt;

use serde::Serialize;

use crate::consequences::{check_lemma3, check_proposition2};
use crate::contexts::{BooleanSubalgebra, ContextError};
use crate::elem::{Elem, ElemSet};
use crate::modal::{is_central_by_definition, ModalLattice};
use crate::ortho::OrthoLattice;
use crate::square::{Existential, SquareReport};
use crate::Verdict;

/// Implemented by every report; decides the process exit status.
pub trait Report: Serialize + fmt::Display {
    fn passed(&self) -> bool;
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

impl Outcome {
    fn from_verdict<W>(v: &Verdict<W>, names: impl FnOnce(&W) -> Vec<String>) -> Self {
        Outcome {
            holds: v.holds(),
            counterexample: v.counterexample().map(names),
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None if self.holds => f.write_str("holds"),
            None => f.write_str("FAILS"),
            Some(w) => write!(f, "FAILS at ({})", w.join(", ")),
        }
    }
}

fn names(ol: &OrthoLattice, set: impl IntoIterator<Item = Elem>) -> Vec<String> {
    set.into_iter().map(|e| ol.name(e).to_string()).collect()
}

fn set_names(ol: &OrthoLattice, set: &ElemSet) -> Vec<String> {
    names(ol, set.iter())
}

fn braces(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateReport {
    pub lattice: String,
    pub size: usize,
    pub bottom: String,
    pub top: String,
    pub atoms: Vec<String>,
    pub orthomodular: Outcome,
}

impl ValidateReport {
    pub fn new(name: &str, ol: &OrthoLattice) -> Self {
        ValidateReport {
            lattice: name.to_string(),
            size: ol.len(),
            bottom: ol.name(ol.bottom()).to_string(),
            top: ol.name(ol.top()).to_string(),
            atoms: names(ol, ol.atoms()),
            orthomodular: Outcome::from_verdict(&ol.check_orthomodular(), |&(x, y)| names(ol, [x, y])),
        }
    }
}

impl fmt::Display for ValidateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {} ({} elements)", self.lattice, self.size)?;
        writeln!(
            f,
            "bottom {}, top {}, atoms {}",
            self.bottom,
            self.top,
            braces(&self.atoms)
        )?;
        writeln!(f, "orthomodular law: {}", self.orthomodular)
    }
}

impl Report for ValidateReport {
    fn passed(&self) -> bool {
        self.orthomodular.holds
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CenterReport {
    pub lattice: String,
    pub center: Vec<String>,
    pub center_atoms: Vec<String>,
    /// The distributivity-triple definition agrees with commutation.
    pub definition_agrees: Outcome,
}

impl CenterReport {
    pub fn new(name: &str, ml: &ModalLattice) -> Self {
        let disagreement = ml
            .elements()
            .find(|&z| is_central_by_definition(ml, z) != ml.is_central(z));
        CenterReport {
            lattice: name.to_string(),
            center: set_names(ml, ml.center().members()),
            center_atoms: names(ml, ml.center().as_algebra().atoms().iter().copied()),
            definition_agrees: Outcome::from_verdict(&Verdict::from_option(disagreement), |&z| names(ml, [z])),
        }
    }
}

impl fmt::Display for CenterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}", self.lattice)?;
        writeln!(f, "center ({} elements): {}", self.center.len(), braces(&self.center))?;
        writeln!(f, "center atoms: {}", braces(&self.center_atoms))?;
        writeln!(f, "definition vs commutation: {}", self.definition_agrees)
    }
}

impl Report for CenterReport {
    fn passed(&self) -> bool {
        self.definition_agrees.holds
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModalRow {
    pub element: String,
    pub central: bool,
    pub diamond: String,
    #[serde(rename = "box")]
    pub boxed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModalReport {
    pub lattice: String,
    pub center: Vec<String>,
    pub rows: Vec<ModalRow>,
}

impl ModalReport {
    pub fn new(name: &str, ml: &ModalLattice, only: Option<Elem>) -> Self {
        let rows = ml
            .elements()
            .filter(|&x| only.is_none_or(|o| o == x))
            .map(|x| ModalRow {
                element: ml.name(x).to_string(),
                central: ml.is_central(x),
                diamond: ml.name(ml.diamond(x)).to_string(),
                boxed: ml.name(ml.boxed(x)).to_string(),
            })
            .collect();
        ModalReport {
            lattice: name.to_string(),
            center: set_names(ml, ml.center().members()),
            rows,
        }
    }
}

impl fmt::Display for ModalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}, center {}", self.lattice, braces(&self.center))?;
        for r in &self.rows {
            let mark = if r.central { " (central)" } else { "" };
            writeln!(f, "  {}{}: ◇ = {}, □ = {}", r.element, mark, r.diamond, r.boxed)?;
        }
        Ok(())
    }
}

impl Report for ModalReport {
    fn passed(&self) -> bool {
        true
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomRow {
    pub axiom: String,
    pub statement: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomsReport {
    pub lattice: String,
    pub orthomodular: Outcome,
    /// Absent when the lattice is not orthomodular.
    pub saturation: Option<Vec<AxiomRow>>,
}

impl AxiomsReport {
    pub fn new(name: &str, ol: &OrthoLattice) -> Self {
        let orthomodular = Outcome::from_verdict(&ol.check_orthomodular(), |&(x, y)| names(ol, [x, y]));
        let saturation = ModalLattice::new(ol.clone()).ok().map(|ml| {
            ml.check_saturation_axioms()
                .into_iter()
                .map(|v| AxiomRow {
                    axiom: v.axiom.to_string(),
                    statement: v.axiom.statement().to_string(),
                    outcome: Outcome::from_verdict(&v.verdict, |w| names(ol, w.iter().copied())),
                })
                .collect()
        });
        AxiomsReport {
            lattice: name.to_string(),
            orthomodular,
            saturation,
        }
    }
}

impl fmt::Display for AxiomsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}", self.lattice)?;
        writeln!(f, "orthomodular law: {}", self.orthomodular)?;
        match &self.saturation {
            None => writeln!(f, "modal axioms not evaluated (not orthomodular)"),
            Some(rows) => {
                for r in rows {
                    writeln!(f, "{} {}: {}", r.axiom, r.statement, r.outcome)?;
                }
                Ok(())
            }
        }
    }
}

impl Report for AxiomsReport {
    fn passed(&self) -> bool {
        self.orthomodular.holds
            && self
                .saturation
                .as_ref()
                .is_some_and(|rows| rows.iter().all(|r| r.outcome.holds))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsequenceRow {
    pub element: String,
    pub diamond: String,
    pub by_definition: Vec<String>,
    pub by_order: Vec<String>,
    pub by_diamond: Vec<String>,
    pub sets_agree: Outcome,
    pub context_independent: Outcome,
    pub lemma3: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsequencesReport {
    pub lattice: String,
    pub center: Vec<String>,
    pub rows: Vec<ConsequenceRow>,
}

impl ConsequencesReport {
    pub fn new(name: &str, ml: &ModalLattice, only: Option<Elem>, budget: usize) -> Result<Self, ContextError> {
        let mut rows = Vec::new();
        for p in ml.elements().filter(|&x| only.is_none_or(|o| o == x)) {
            let check = check_proposition2(ml, p, budget)?;
            rows.push(ConsequenceRow {
                element: ml.name(p).to_string(),
                diamond: ml.name(ml.diamond(p)).to_string(),
                by_definition: set_names(ml, &check.definition),
                by_order: set_names(ml, &check.order),
                by_diamond: set_names(ml, &check.diamond),
                sets_agree: Outcome::from_verdict(&check.agreement, |&z| names(ml, [z])),
                context_independent: Outcome::from_verdict(&check.context_independence, |w: &BooleanSubalgebra| {
                    set_names(ml, w.members())
                }),
                lemma3: Outcome::from_verdict(&check_lemma3(ml, p), |&x| names(ml, [x])),
            });
        }
        Ok(ConsequencesReport {
            lattice: name.to_string(),
            center: set_names(ml, ml.center().members()),
            rows,
        })
    }
}

impl fmt::Display for ConsequencesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}, center {}", self.lattice, braces(&self.center))?;
        for r in &self.rows {
            writeln!(f, "{} (◇ = {}):", r.element, r.diamond)?;
            writeln!(f, "  by definition: {}", braces(&r.by_definition))?;
            writeln!(f, "  p ≤ z:         {}", braces(&r.by_order))?;
            writeln!(f, "  ◇p ≤ z:        {}", braces(&r.by_diamond))?;
            writeln!(
                f,
                "  sets agree: {}; context independent: {}; ◇p ∧ ◇¬p = 0 ⇒ central: {}",
                r.sets_agree, r.context_independent, r.lemma3
            )?;
        }
        Ok(())
    }
}

impl Report for ConsequencesReport {
    fn passed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.sets_agree.holds && r.context_independent.holds && r.lemma3.holds)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CornerValues {
    pub box_p: String,
    pub box_not_p: String,
    pub diamond_p: String,
    pub diamond_not_p: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationRow {
    pub relation: String,
    pub first: String,
    pub second: String,
    pub holds: bool,
    /// Atom of the expanded context whose valuation breaks the universal clause.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violated_by: Option<String>,
    /// Atom of the expanded context whose valuation realizes the existential
    /// clause; absent for relations without one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SquareEntry {
    pub element: String,
    pub context: Vec<String>,
    pub expanded_context: Vec<String>,
    pub expanded_atoms: Vec<String>,
    pub corners: CornerValues,
    pub relations: Vec<RelationRow>,
    pub holds: bool,
}

impl SquareEntry {
    pub fn new(ml: &ModalLattice, r: &SquareReport) -> Self {
        let n = |e: Elem| ml.name(e).to_string();
        let relations = r
            .checks
            .iter()
            .map(|c| RelationRow {
                relation: c.relation.to_string(),
                first: c.first.label().to_string(),
                second: c.second.label().to_string(),
                holds: c.holds(),
                violated_by: c.universal.counterexample().map(|&a| n(a)),
                witness: match c.existential {
                    Existential::Witnessed(a) => Some(n(a)),
                    Existential::NotRequired | Existential::Missing => None,
                },
            })
            .collect();
        SquareEntry {
            element: n(r.element),
            context: set_names(ml, r.context.members()),
            expanded_context: set_names(ml, r.expanded.members()),
            expanded_atoms: names(ml, r.expanded.atoms().iter().copied()),
            corners: CornerValues {
                box_p: n(r.corners.box_p),
                box_not_p: n(r.corners.box_not_p),
                diamond_p: n(r.corners.diamond_p),
                diamond_not_p: n(r.corners.diamond_not_p),
            },
            relations,
            holds: r.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SquareSummary {
    pub lattice: String,
    pub policy: String,
    pub reports: Vec<SquareEntry>,
}

impl fmt::Display for SquareSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lattice {}, contexts: {}", self.lattice, self.policy)?;
        for r in &self.reports {
            writeln!(f, "p = {} in W = {}", r.element, braces(&r.context))?;
            writeln!(
                f,
                "  W◇ = {} with atoms {}",
                braces(&r.expanded_context),
                braces(&r.expanded_atoms)
            )?;
            let c = &r.corners;
            writeln!(
                f,
                "  ¬◇¬p = {}, ¬◇p = {}, ◇p = {}, ◇¬p = {}",
                c.box_p, c.box_not_p, c.diamond_p, c.diamond_not_p
            )?;
            for rel in &r.relations {
                let verdict = if rel.holds { "holds" } else { "FAILS" };
                write!(f, "  {} {} / {}: {}", rel.relation, rel.first, rel.second, verdict)?;
                if let Some(a) = &rel.violated_by {
                    write!(f, " (violated by valuation at {a})")?;
                }
                if let Some(a) = &rel.witness {
                    write!(f, " (witness: valuation at {a})")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Report for SquareSummary {
    fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.holds)
    }
}
