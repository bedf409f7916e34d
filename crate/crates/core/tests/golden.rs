//! The figure set against the checked-in SVG files. Run with
//! `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use compactum::cli::figure_set;

#[test]
fn figures_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let figures = figure_set().unwrap();
    assert_eq!(figures, figure_set().unwrap(), "figures differ between two runs");
    for (name, svg) in figures {
        let path = dir.join(&name);
        if update {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &svg).unwrap();
            continue;
        }
        let golden = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(svg, golden, "{name} differs from its golden file");
    }
}
