//! The bundled corpus files agree with the programmatic constructions.

use orthomodal::construct;
use orthomodal::io::corpus::{self, PASTING12_DIAGRAM};
use orthomodal::io::{emit_oml, generate_from_greechie, parse_greechie, LatticeDocument};
use orthomodal::lattice::DEFAULT_MAX_SIZE;

#[test]
fn files_match_constructions() {
    let expected = [
        ("bool1", construct::boolean(1)),
        ("bool2", construct::boolean(2)),
        ("bool3", construct::boolean(3)),
        ("mo2", construct::mo(2)),
        ("mo3", construct::mo(3)),
        ("o6", construct::benzene()),
        (
            "bool1xmo2",
            construct::product(&construct::boolean(1), &construct::mo(2)),
        ),
    ];
    for (name, ol) in expected {
        let text = emit_oml(&LatticeDocument::from_ortho(name, &ol));
        assert_eq!(corpus::source(name).unwrap(), text, "{name}");
    }
}

#[test]
fn pasting_matches_its_diagram() {
    let doc = generate_from_greechie(&parse_greechie(PASTING12_DIAGRAM).unwrap(), DEFAULT_MAX_SIZE).unwrap();
    assert_eq!(corpus::document("pasting12").unwrap(), doc);
}

#[test]
fn corpus_lists_eight_entries() {
    let names: Vec<&str> = corpus::names().collect();
    assert_eq!(
        names,
        ["bool1", "bool2", "bool3", "mo2", "mo3", "o6", "bool1xmo2", "pasting12"]
    );
    for name in names {
        assert!(corpus::document(name).unwrap().build(DEFAULT_MAX_SIZE).is_ok());
    }
}
