use std::path::PathBuf;

use parcomod::corpus::{corpus_files, emit_corpus, load, CORPUS_FILES};

fn bundled_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn bundled_corpus_matches_regeneration() {
    for (name, text) in corpus_files().unwrap() {
        let on_disk = std::fs::read_to_string(bundled_dir().join(name)).unwrap();
        assert!(on_disk == text, "{name} differs from the generator output; rerun emit-corpus");
    }
}

#[test]
fn emitted_files_load() {
    let dir = std::env::temp_dir().join(format!("parcomod-corpus-{}", std::process::id()));
    let paths = emit_corpus(&dir).unwrap();
    assert_eq!(paths.len(), CORPUS_FILES.len());
    for p in &paths {
        let ws = load(p).unwrap();
        assert!(ws.verify_expectations().iter().all(|o| o.passed));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
