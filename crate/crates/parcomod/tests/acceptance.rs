//! One line per acceptance criterion; fails if any criterion fails.

use std::path::PathBuf;

use parcomod::acceptance::{run_all, AcceptanceConfig};

#[test]
fn acceptance() {
    let cfg = AcceptanceConfig {
        corpus_dir: Some(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")),
        ..Default::default()
    };
    let filter = std::env::var("ACCEPTANCE_FILTER").ok();
    let reports = run_all(&cfg, filter.as_deref());
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{} of {} criteria passed", reports.len() - failed.len(), reports.len());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
