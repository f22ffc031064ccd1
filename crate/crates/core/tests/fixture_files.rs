//! The files under `fixtures/` are the canonical serialization of
//! `fixtures::files()`. Set `ANTIDEND_UPDATE_FIXTURES=1` to rewrite them.

use std::path::PathBuf;

use antidend_core::document::{parse, serialize};
use antidend_core::fixtures;

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn fixture_files_match_constructors() {
    let update = std::env::var_os("ANTIDEND_UPDATE_FIXTURES").is_some();
    for (name, doc) in fixtures::files() {
        let path = dir().join(name);
        let text = serialize(&doc);
        if update {
            std::fs::create_dir_all(dir()).unwrap();
            std::fs::write(&path, &text).unwrap();
            continue;
        }
        let on_disk = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(on_disk, text, "{name}");
        assert_eq!(parse(&on_disk).unwrap(), doc, "{name} round trip");
    }
}
