use std::path::Path;
use std::process::{Command, Output};

fn descent(args: &[&str], cache: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descent"))
        .args(args)
        .env("DESCENT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_dir(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("descent-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn classify_reports_uncertified_lookup() {
    let cache = scratch_dir("classify");
    let o = descent(&["classify", "--type", "B", "--rank", "2", "--p", "2"], &cache);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "Tame (PaperLookup; certificate: none — socle-quotient proof)");
    let o = descent(&["classify", "--type", "B", "--rank", "4", "--p", "3"], &cache);
    assert_eq!(stdout(&o).trim(), "Finite (SeparatedQuiverExact; certificate: agrees)");
}

#[test]
fn extquiver_magma_lines() {
    let cache = scratch_dir("magma");
    let o = descent(&["extquiver", "--type", "D", "--rank", "5", "--p", "3", "--format", "magma"], &cache);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 13);
    assert!(text.lines().all(|l| l.starts_with('<') && l.ends_with('>')));
}

#[test]
fn exit_codes() {
    let cache = scratch_dir("exit");
    let code = |args: &[&str]| descent(args, &cache).status.code().unwrap();
    assert_eq!(code(&["build", "--type", "E", "--rank", "8"]), 2);
    assert_eq!(code(&["build", "--type", "E", "--rank", "7"]), 3);
    assert_eq!(code(&["cartan", "--type", "B", "--rank", "3", "--p", "4"]), 64);
    assert_eq!(code(&["build", "--type", "D", "--rank", "3"]), 2);
}

#[test]
fn warm_cache_gives_identical_artifacts() {
    let cache = scratch_dir("warm");
    let out_cold = cache.join("cold");
    let out_warm = cache.join("warm");
    let args = |out: &Path| {
        vec![
            "cartan".to_owned(),
            "--type".into(),
            "D".into(),
            "--rank".into(),
            "4".into(),
            "--p".into(),
            "3".into(),
            "--out".into(),
            out.display().to_string(),
        ]
    };
    let run = |out: &Path| {
        let a = args(out);
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        assert!(descent(&refs, &cache).status.success());
        std::fs::read(out.join("D4_cartan_p3.csv")).unwrap()
    };
    let cold = run(&out_cold);
    assert!(cache.join("D4.constants.jsonl").exists());
    assert!(cache.join("D4.dwb").exists());
    let warm = run(&out_warm);
    assert_eq!(cold, warm);
    let o = descent(&["build", "--type", "D", "--rank", "4", "--no-cache"], &cache);
    assert!(o.status.success());
    assert!(cache.join("D4.constants.jsonl").exists());
}

#[test]
fn marks_table_for_b3() {
    let cache = scratch_dir("marks");
    let o = descent(&["marks", "--type", "B", "--rank", "3", "--format", "json"], &cache);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["marks"][0][0], 48);
    assert_eq!(v["labels"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_fixture_command() {
    let cache = scratch_dir("fixture");
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/quivers/f4_p2.txt");
    let o = descent(&["verify-fixture", path.to_str().unwrap()], &cache);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS"));
}
