//! The line-oriented `.oml` lattice format.
//!
//! ```text
//! # comments run to end of line
//! lattice mo2
//! elements: 0 a a' b b' 1
//! bottom: 0
//! top: 1
//! covers: 0<a, 0<a', 0<b, 0<b', a<1, a'<1, b<1, b'<1
//! ortho: 0:1, a:a', a':a, b:b', b':b, 1:0
//! ```
//!
//! `elements`, `covers` and `ortho` may be repeated; their entries accumulate.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::elem::Elem;
use crate::io::InputError;
use crate::lattice::Lattice;
use crate::ortho::OrthoLattice;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeDocument {
    pub name: String,
    pub elements: Vec<String>,
    pub bottom: String,
    pub top: String,
    pub covers: Vec<(String, String)>,
    pub ortho: Vec<(String, String)>,
}

/// Characters that cannot appear in an element or lattice name.
pub(crate) const RESERVED: &[char] = &['<', ':', ',', ';', '#'];

pub(crate) fn check_token(token: &str, line: usize) -> Result<(), InputError> {
    if token.is_empty() || token.contains(RESERVED) || token.contains(char::is_whitespace) {
        return Err(InputError::syntax(line, format!("invalid name `{token}`")));
    }
    Ok(())
}

/// Strips the comment and surrounding whitespace. `None` for blank lines.
pub(crate) fn split_line(raw: &str) -> Option<&str> {
    let text = raw.split('#').next().unwrap_or("").trim();
    (!text.is_empty()).then_some(text)
}

impl LatticeDocument {
    /// Describes an existing ortholattice, listing its covers and the full
    /// orthocomplement map in index order.
    pub fn from_ortho(name: impl Into<String>, ol: &OrthoLattice) -> Self {
        let n = |e: Elem| ol.name(e).to_string();
        LatticeDocument {
            name: name.into(),
            elements: ol.names().to_vec(),
            bottom: n(ol.bottom()),
            top: n(ol.top()),
            covers: ol.covers().into_iter().map(|(a, b)| (n(a), n(b))).collect(),
            ortho: ol.elements().map(|x| (n(x), n(ol.neg(x)))).collect(),
        }
    }

    /// Builds the lattice, checks the declared bounds and attaches the
    /// orthocomplement.
    pub fn build(&self, max_size: usize) -> Result<OrthoLattice, InputError> {
        let lattice = Lattice::build_with_limit(&self.elements, &self.covers, max_size)?;
        for (label, declared, actual) in [
            ("bottom", &self.bottom, lattice.bottom()),
            ("top", &self.top, lattice.top()),
        ] {
            if lattice.name(actual) != declared {
                return Err(InputError::Semantic(format!(
                    "declared {label} `{declared}` but the order's {label} is `{}`",
                    lattice.name(actual)
                )));
            }
        }
        let mut neg = vec![None; lattice.len()];
        for (x, y) in &self.ortho {
            neg[lattice.elem(x)?.index()] = Some(lattice.elem(y)?);
        }
        let neg = neg
            .into_iter()
            .collect::<Option<Vec<Elem>>>()
            .ok_or_else(|| InputError::Semantic("ortho map is not total".into()))?;
        Ok(OrthoLattice::attach(lattice, neg)?)
    }
}

pub fn parse_oml(text: &str) -> Result<LatticeDocument, InputError> {
    let mut name: Option<String> = None;
    let mut elements: Vec<String> = Vec::new();
    let mut saw_elements = false;
    let mut bottom: Option<String> = None;
    let mut top: Option<String> = None;
    let mut covers = Vec::new();
    let mut ortho = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let Some(text) = split_line(raw) else { continue };

        if name.is_none() {
            let rest = text
                .strip_prefix("lattice")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| InputError::syntax(line, "expected `lattice <name>` header"))?
                .trim();
            check_token(rest, line)?;
            name = Some(rest.to_string());
            continue;
        }

        let (directive, rest) = text
            .split_once(':')
            .ok_or_else(|| InputError::syntax(line, format!("expected `directive: ...`, got `{text}`")))?;
        let rest = rest.trim();
        match directive.trim() {
            "elements" => {
                saw_elements = true;
                for tok in rest.split_whitespace() {
                    check_token(tok, line)?;
                    elements.push(tok.to_string());
                }
            }
            "bottom" | "top" => {
                check_token(rest, line)?;
                let slot = if directive.trim() == "bottom" {
                    &mut bottom
                } else {
                    &mut top
                };
                if slot.replace(rest.to_string()).is_some() {
                    return Err(InputError::syntax(line, format!("repeated `{}`", directive.trim())));
                }
            }
            "covers" => covers.extend(parse_pairs(rest, '<', line)?),
            "ortho" => ortho.extend(parse_pairs(rest, ':', line)?),
            "lattice" => return Err(InputError::syntax(line, "repeated `lattice` header")),
            other => return Err(InputError::syntax(line, format!("unknown directive `{other}`"))),
        }
    }

    let end = last_line + 1;
    let name = name.ok_or_else(|| InputError::syntax(end, "missing `lattice <name>` header"))?;
    if !saw_elements || elements.is_empty() {
        return Err(InputError::syntax(end, "empty elements section"));
    }
    let bottom = bottom.ok_or_else(|| InputError::syntax(end, "missing `bottom:`"))?;
    let top = top.ok_or_else(|| InputError::syntax(end, "missing `top:`"))?;
    let doc = LatticeDocument {
        name,
        elements,
        bottom,
        top,
        covers,
        ortho,
    };
    validate(&doc)?;
    Ok(doc)
}

fn parse_pairs(list: &str, sep: char, line: usize) -> Result<Vec<(String, String)>, InputError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (a, b) = item
                .split_once(sep)
                .ok_or_else(|| InputError::syntax(line, format!("expected `x{sep}y`, got `{item}`")))?;
            let (a, b) = (a.trim(), b.trim());
            check_token(a, line)?;
            check_token(b, line)?;
            Ok((a.to_string(), b.to_string()))
        })
        .collect()
}

fn validate(doc: &LatticeDocument) -> Result<(), InputError> {
    let mut known = HashSet::new();
    for e in &doc.elements {
        if !known.insert(e.as_str()) {
            return Err(InputError::Semantic(format!("duplicate element `{e}`")));
        }
    }
    let check = |n: &str| {
        if known.contains(n) {
            Ok(())
        } else {
            Err(InputError::Semantic(format!("unknown element `{n}`")))
        }
    };
    check(&doc.bottom)?;
    check(&doc.top)?;
    for (a, b) in &doc.covers {
        check(a)?;
        check(b)?;
    }
    let mut map: HashMap<&str, &str> = HashMap::new();
    for (a, b) in &doc.ortho {
        check(a)?;
        check(b)?;
        if let Some(prev) = map.insert(a, b) {
            if prev != b {
                return Err(InputError::Semantic(format!(
                    "`{a}` has two orthocomplements `{prev}` and `{b}`"
                )));
            }
        }
    }
    for (a, b) in &doc.ortho {
        if map.get(b.as_str()) != Some(&a.as_str()) {
            return Err(InputError::Semantic(format!(
                "ortho is not symmetric: `{a}:{b}` without `{b}:{a}`"
            )));
        }
    }
    if let Some(missing) = doc.elements.iter().find(|e| !map.contains_key(e.as_str())) {
        return Err(InputError::Semantic(format!(
            "no orthocomplement given for `{missing}`"
        )));
    }
    Ok(())
}

pub fn emit_oml(doc: &LatticeDocument) -> String {
    let mut out = String::new();
    let pairs = |v: &[(String, String)], sep: &str| {
        v.iter()
            .map(|(a, b)| format!("{a}{sep}{b}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let _ = writeln!(out, "lattice {}", doc.name);
    let _ = writeln!(out, "elements: {}", doc.elements.join(" "));
    let _ = writeln!(out, "bottom: {}", doc.bottom);
    let _ = writeln!(out, "top: {}", doc.top);
    let _ = writeln!(out, "covers: {}", pairs(&doc.covers, "<"));
    let _ = writeln!(out, "ortho: {}", pairs(&doc.ortho, ":"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MO2: &str = "\
# two incomparable complemented pairs
lattice mo2
elements: 0 a a' b b' 1
bottom: 0
top: 1
covers: 0<a, 0<a', 0<b, 0<b'
covers: a<1, a'<1, b<1, b'<1   # repeated directive
ortho: 0:1, a:a', a':a, b:b', b':b, 1:0
";

    #[test]
    fn parses_and_builds_mo2() {
        let doc = parse_oml(MO2).unwrap();
        assert_eq!(doc.name, "mo2");
        assert_eq!(doc.covers.len(), 8);
        let ol = doc.build(512).unwrap();
        assert_eq!(ol.len(), 6);
        assert!(ol.is_orthomodular());
    }

    #[test]
    fn emit_then_parse_is_identity() {
        let doc = parse_oml(MO2).unwrap();
        assert_eq!(parse_oml(&emit_oml(&doc)).unwrap(), doc);
    }

    #[test]
    fn asymmetric_ortho_is_semantic_error() {
        let text = MO2.replace("a':a, ", "");
        assert!(matches!(parse_oml(&text), Err(InputError::Semantic(_))));
        let text = MO2.replace("ortho: 0:1, a:a', a':a,", "ortho: 0:1, a:b', a':a,");
        assert!(matches!(parse_oml(&text), Err(InputError::Semantic(_))));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let empty = "lattice x\nelements:\nbottom: 0\ntop: 0\n";
        assert!(matches!(
            parse_oml(empty),
            Err(InputError::Syntax { reason, .. }) if reason == "empty elements section"
        ));
        assert!(matches!(
            parse_oml("elements: 0\n"),
            Err(InputError::Syntax { line: 1, .. })
        ));
        let bad_pair = MO2.replace("0<a,", "0-a,");
        assert!(matches!(parse_oml(&bad_pair), Err(InputError::Syntax { line: 6, .. })));
        let unknown = MO2.replace("bottom: 0", "bottem: 0");
        assert!(matches!(parse_oml(&unknown), Err(InputError::Syntax { line: 4, .. })));
    }

    #[test]
    fn semantic_errors() {
        let dup = MO2.replace("elements: 0 a a'", "elements: 0 a a a'");
        assert!(matches!(parse_oml(&dup), Err(InputError::Semantic(_))));
        let unknown = MO2.replace("0<b'", "0<z");
        assert!(matches!(parse_oml(&unknown), Err(InputError::Semantic(_))));
        let wrong_bottom = MO2.replace("bottom: 0", "bottom: a");
        let doc = parse_oml(&wrong_bottom).unwrap();
        assert!(matches!(doc.build(512), Err(InputError::Semantic(_))));
    }
}
