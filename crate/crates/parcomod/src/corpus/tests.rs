use super::*;
use crate::error::Error;

fn files() -> Vec<(&'static str, String)> {
    corpus_files().unwrap()
}

#[test]
fn regeneration_is_byte_identical() {
    assert_eq!(files(), files());
}

#[test]
fn corpus_loads_and_expectations_hold() {
    let mut structures = 0;
    for (name, text) in files() {
        let ws = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        structures += ws.pcds.len() + ws.actions.len() + ws.comodule_algebras.len() + ws.hopf_modules.len();
        for o in ws.verify_expectations() {
            assert!(o.passed, "{name} {}: {:?}", o.name, o.error);
        }
    }
    assert!(structures >= 12);
}

#[test]
fn round_trip_is_canonical() {
    for (_, text) in files() {
        let ws = parse(&text).unwrap();
        assert_eq!(ws.file.to_json(), text);
    }
}

#[test]
fn mixed_fields_are_a_parse_error() {
    let text = &files()[0].1;
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["pcds"]["affine_d2"]["field"] = serde_json::json!({"type": "Fp", "p": 3});
    assert!(matches!(parse(&v.to_string()), Err(Error::Parse(_))));
    let missing = r#"{"coalgebras": {}}"#;
    assert!(matches!(parse(missing), Err(Error::Parse(_))));
}

#[test]
fn corrupted_delta_names_the_basis_index() {
    let text = &files()[0].1;
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    // Δ(g) gains a g⊗e term: the row of g⊗e in column g
    v["coalgebras"]["kC2"]["delta"][2][1] = serde_json::json!("1");
    match parse(&v.to_string()) {
        Err(Error::Validation { path, axiom, witness }) => {
            assert_eq!(path, "coalgebras.kC2.delta");
            assert!(axiom.contains("counit") || axiom.contains("coassociativity"), "{axiom}");
            assert_eq!(witness, "basis index [1]");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unresolved_references_are_reported() {
    let text = &files()[0].1;
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["pcds"]["affine_d2"]["coalgebra"] = serde_json::json!("missing");
    match parse(&v.to_string()) {
        Err(Error::Validation { path, axiom, .. }) => {
            assert_eq!(path, "pcds.affine_d2.coalgebra");
            assert_eq!(axiom, "unresolved reference");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn tampered_expectations_fail() {
    let text = &files()[0].1;
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    v["expect"]["affine_d2.classify"]["geometric"] = serde_json::json!(false);
    let ws = parse(&v.to_string()).unwrap();
    let bad: Vec<_> = ws.verify_expectations().into_iter().filter(|o| !o.passed).map(|o| o.name).collect();
    assert_eq!(bad, vec!["affine_d2.classify"]);
}
