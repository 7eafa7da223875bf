use std::path::PathBuf;

use descent::coxeter::BuildOptions;
use descent::fixture::{verify, QuiverFixture};

fn fixture_paths() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/quivers");
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
}

#[test]
fn fixture_headers_agree_with_triples() {
    for path in fixture_paths() {
        let f = QuiverFixture::load(&path).unwrap();
        let q = f.quiver();
        assert_eq!(q.vertex_count(), f.vertex_count);
        let text = std::fs::read_to_string(&path).unwrap();
        let declared: u64 = text
            .lines()
            .find_map(|l| l.strip_prefix("# arrows:"))
            .map(|v| v.trim().parse().unwrap())
            .unwrap();
        assert_eq!(q.arrow_count(), declared, "{}", path.display());
    }
}

#[test]
fn reference_quivers_are_reproduced() {
    let opts = BuildOptions::default();
    for path in fixture_paths() {
        let f = QuiverFixture::load(&path).unwrap();
        if f.large {
            continue;
        }
        for (p, outcome) in verify(&f, &opts).unwrap() {
            assert!(outcome.is_match(), "{} at p={p}: {outcome}", f.source);
        }
    }
}
