//! Byte-level pins of representative command outputs against the files in
//! docs/golden. A diff here means the JSON surface changed; update the
//! golden files only on a deliberate format change.

use std::path::PathBuf;

fn workspace_file(relative: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(relative)
}

fn golden(name: &str) -> String {
    let path = workspace_file("docs/golden").join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("golden file {}: {e}", path.display()))
}

fn run(args: &[&str]) -> (String, i32) {
    let mut argv = vec!["cockcroft"];
    argv.extend_from_slice(args);
    cockcroft_cli::execute(argv).expect("arguments parse")
}

fn assert_pinned(args: &[&str], name: &str) {
    let (text, code) = run(args);
    assert_eq!(code, 0, "{name}: {text}");
    assert_eq!(text.trim_end(), golden(name).trim_end(), "output drifted from {name}");
}

#[test]
fn demo_example1_base_case_is_pinned() {
    assert_pinned(&["demo", "example1", "--a", "1", "--b", "1", "--c", "1"], "demo-example1.json");
}

#[test]
fn demo_example2_base_case_is_pinned() {
    assert_pinned(&["demo", "example2", "--c", "1"], "demo-example2.json");
}

#[test]
fn certificate_output_is_pinned() {
    let file = workspace_file("presentations/commutator-triple.txt");
    assert_pinned(
        &["cockcroft-check", "--file", file.to_str().unwrap()],
        "cockcroft-check-triple.json",
    );
}

#[test]
fn expansion_output_is_pinned() {
    assert_pinned(
        &["expand", "--gens", "x,y", "--word", "[x,y]", "--degree", "3"],
        "expand-commutator.json",
    );
}

#[test]
fn compact_and_pretty_agree() {
    let (pretty, _) = run(&["demo", "example2", "--c", "2"]);
    let (compact, _) = run(&["demo", "example2", "--c", "2", "--json"]);
    let a: serde_json::Value = serde_json::from_str(&pretty).unwrap();
    let b: serde_json::Value = serde_json::from_str(&compact).unwrap();
    assert_eq!(a, b);
    assert_eq!(compact.lines().count(), 1, "--json output is a single line");
}

#[test]
fn printed_words_reparse_through_the_cli_surface() {
    let (text, _) = run(&["demo", "example1", "--a", "2", "--b", "3", "--c", "5", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let mu_text = doc["payload"]["mu"].as_str().unwrap();
    let ab = cockcroft_core::Alphabet::new(vec!["x", "y", "z"]).unwrap();
    let reparsed = cockcroft_core::parse_word(&ab, mu_text).unwrap();
    let direct = cockcroft_cli::demo::TripleCommutator { a: 2, b: 3, c: 5 }.mu();
    assert_eq!(reparsed, direct);
}
