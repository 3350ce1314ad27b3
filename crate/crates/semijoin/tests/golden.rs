//! Golden copies of every corpus database in the file format. Regenerate
//! with `UPDATE_GOLDEN=1 cargo test -p semijoin --test golden`.

use std::fs;
use std::path::PathBuf;

use semijoin::corpus;
use semijoin::parse::{parse_database, render_database};

fn golden_path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{stem}.db"))
}

#[test]
fn corpus_databases_match_their_golden_files() {
    let update = std::env::var("UPDATE_GOLDEN").is_ok();
    for entry in corpus::entries() {
        for (stem, db) in &entry.databases {
            let path = golden_path(stem);
            let rendered = render_database(db);
            if update {
                fs::write(&path, &rendered).unwrap();
            }
            let stored = fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
            assert_eq!(rendered, stored, "{stem} drifted from its golden copy");
            // and the stored text parses back to the same database
            assert_eq!(&parse_database(&stored).unwrap(), db, "{stem}");
        }
    }
}

#[test]
fn no_stale_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let expected: Vec<String> = corpus::entries()
        .iter()
        .flat_map(|e| e.databases.iter().map(|(stem, _)| format!("{stem}.db")))
        .collect();
    for item in fs::read_dir(dir).unwrap() {
        let name = item.unwrap().file_name().to_string_lossy().into_owned();
        assert!(expected.contains(&name), "stale golden file {name}");
    }
}
