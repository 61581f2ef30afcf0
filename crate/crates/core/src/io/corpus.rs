//! Lattices bundled with the crate.

use crate::io::{parse_oml, InputError, LatticeDocument};

/// `(name, .oml source)` for every bundled lattice.
pub const ENTRIES: &[(&str, &str)] = &[
    ("bool1", include_str!("../../corpus/bool1.oml")),
    ("bool2", include_str!("../../corpus/bool2.oml")),
    ("bool3", include_str!("../../corpus/bool3.oml")),
    ("mo2", include_str!("../../corpus/mo2.oml")),
    ("mo3", include_str!("../../corpus/mo3.oml")),
    ("o6", include_str!("../../corpus/o6.oml")),
    ("bool1xmo2", include_str!("../../corpus/bool1xmo2.oml")),
    ("pasting12", include_str!("../../corpus/pasting12.oml")),
];

/// Greechie diagram the `pasting12` entry was generated from.
pub const PASTING12_DIAGRAM: &str = include_str!("../../corpus/pasting12.gd");

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|(name, _)| *name)
}

pub fn source(name: &str) -> Result<&'static str, InputError> {
    ENTRIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| InputError::UnknownCorpus(name.to_string()))
}

pub fn document(name: &str) -> Result<LatticeDocument, InputError> {
    parse_oml(source(name)?)
}
